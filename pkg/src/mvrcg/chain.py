"""Chain-graph validation and the component/vertex orderings.

A mixed graph is a chain graph when it has no partially directed cycle.
Its vertex set then splits into chain components (the connected
components of the bidirected-only subgraph); every bidirected edge stays
inside a component and every directed edge crosses two components, all
crossings between the same pair pointing the same way.

Two distinct orders are kept, deliberately, because they run in opposite
directions:

* the *component order*: components are listed responses-first, so a
  component never appears before one of its children (if ``T`` precedes
  ``T'`` then ``T`` is not a parent component of ``T'``);
* the *vertex order*: ancestors-first, so a vertex never appears before
  one of its ancestors.

Neither is converted into the other implicitly.  Ties are broken by
smallest vertex id, which makes both orders deterministic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from ._bitset import bits, set_of
from .errors import PartiallyDirectedCycle
from .graph import MixedGraph, districts, parents_of_set


@dataclass(frozen=True)
class ChainDecomposition:
    """Chain components of a validated chain graph.

    ``components`` is listed in component order (see module docstring),
    so ``components[0]`` is a pure response block and the last component
    is purely contextual.  ``component_dag`` contains ``(i, j)`` when
    some vertex of ``components[i]`` points into ``components[j]``.
    """

    graph: MixedGraph
    components: tuple[frozenset[int], ...]
    component_of: tuple[int, ...]
    component_dag: frozenset[tuple[int, int]]
    component_order: tuple[int, ...]
    vertex_order: tuple[int, ...]

    # --- masks and derived sets -----------------------------------------

    def component_mask(self, i: int) -> int:
        m = 0
        for v in self.components[i]:
            m |= 1 << v
        return m

    def pre_mask(self, i: int) -> int:
        """Union of all components strictly after ``i`` in the order."""
        m = 0
        for j in range(i + 1, len(self.components)):
            m |= self.component_mask(j)
        return m

    def pre(self, i: int) -> frozenset[int]:
        return set_of(self.pre_mask(i))

    def pst_mask(self, v: int) -> int:
        return self.pre_mask(self.component_of[v])

    def pst(self, v: int) -> frozenset[int]:
        """All vertices in components ordered after the one holding ``v``."""
        return set_of(self.pst_mask(v))

    def parent_components(self, i: int) -> frozenset[int]:
        return frozenset(a for a, b in self.component_dag if b == i)

    def pa_d_mask(self, i: int) -> int:
        """Union of the full parent components of component ``i``."""
        m = 0
        for j in self.parent_components(i):
            m |= self.component_mask(j)
        return m

    def nd_d_mask(self, i: int) -> int:
        """Union of components that are not reachable from ``i`` in the
        component DAG, excluding ``i`` itself."""
        reach = {i}
        stack = [i]
        while stack:
            a = stack.pop()
            for (s, t) in self.component_dag:
                if s == a and t not in reach:
                    reach.add(t)
                    stack.append(t)
        m = 0
        for j in range(len(self.components)):
            if j not in reach:
                m |= self.component_mask(j)
        return m

    def pa_g_mask(self, i: int) -> int:
        """Graphical parents of the component's vertex set."""
        return parents_of_set(self.graph, self.component_mask(i))


def pre_of_component(dec: ChainDecomposition, component) -> frozenset[int]:
    """Union of all components strictly after the given one (the
    potential explanatory variables of its members).  ``component`` may
    be an index into ``dec.components`` or the vertex set itself."""
    if isinstance(component, int):
        return dec.pre(component)
    wanted = frozenset(component)
    for i, comp in enumerate(dec.components):
        if comp == wanted:
            return dec.pre(i)
    raise KeyError(f"{sorted(wanted)} is not a chain component")


def _bidirected_path(g: MixedGraph, start: int, goal: int, allowed: int) -> list[int]:
    """A bidirected path start..goal inside ``allowed`` (both included)."""
    prev = {start: None}
    queue = [start]
    while queue:
        v = queue.pop(0)
        if v == goal:
            path = []
            while v is not None:
                path.append(v)
                v = prev[v]
            return path[::-1]
        for u in bits(g.nb[v] & allowed):
            if u not in prev:
                prev[u] = v
                queue.append(u)
    raise AssertionError("endpoints not bidirected-connected")


def validate_chain_graph(g: MixedGraph) -> ChainDecomposition:
    """Decompose ``g`` into chain components, or raise.

    Raises :class:`PartiallyDirectedCycle` with a witness walk when the
    graph has a semi-directed cycle containing at least one directed
    edge; a directed edge inside a bidirected component and a cycle
    among components are the two ways this can happen.
    """
    comps = districts(g)
    comp_masks = [0] * len(comps)
    comp_of = [0] * g.n
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
            comp_masks[i] |= 1 << v

    dag_edges = set()
    for t, h in g.directed:
        ci, cj = comp_of[t], comp_of[h]
        if ci == cj:
            back = _bidirected_path(g, h, t, comp_masks[ci])
            raise PartiallyDirectedCycle([t] + back)
        dag_edges.add((ci, cj))

    # Component order: children (responses) first, parents later.  Kahn's
    # algorithm over reversed component edges, smallest member id first.
    k = len(comps)
    out_deg = [0] * k              # edges i -> j mean i is a parent of j
    preds = [[] for _ in range(k)]  # parents of each component
    for i, j in dag_edges:
        out_deg[i] += 1
        preds[j].append(i)
    heap = [(min(comps[i]), i) for i in range(k) if out_deg[i] == 0]
    heapq.heapify(heap)
    order = []
    remaining = out_deg[:]
    placed = [False] * k
    while heap:
        _, i = heapq.heappop(heap)
        order.append(i)
        placed[i] = True
        for p in preds[i]:
            remaining[p] -= 1
            if remaining[p] == 0:
                heapq.heappush(heap, (min(comps[p]), p))
    if len(order) != k:
        raise PartiallyDirectedCycle(_component_cycle_walk(g, comps, comp_masks, dag_edges, placed))

    # Re-index components by the order just found.
    new_index = {old: new for new, old in enumerate(order)}
    components = tuple(comps[i] for i in order)
    component_of = tuple(new_index[comp_of[v]] for v in range(g.n))
    component_dag = frozenset((new_index[i], new_index[j]) for i, j in dag_edges)

    # Vertex order: ancestors first, smallest id first among the ready.
    indeg = [g.pa[v].bit_count() for v in range(g.n)]
    vheap = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(vheap)
    vorder = []
    while vheap:
        v = heapq.heappop(vheap)
        vorder.append(v)
        for w in bits(g.ch[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(vheap, w)
    assert len(vorder) == g.n  # directed cycles imply a component cycle above

    return ChainDecomposition(
        graph=g,
        components=components,
        component_of=component_of,
        component_dag=component_dag,
        component_order=tuple(range(len(components))),
        vertex_order=tuple(vorder),
    )


def _component_cycle_walk(g, comps, comp_masks, dag_edges, placed):
    """Expand a cycle among components into a vertex walk witness."""
    # Find a directed cycle among the unplaced components.
    unplaced = [i for i in range(len(comps)) if not placed[i]]
    succ = {i: [j for (s, j) in dag_edges if s == i and not placed[j]] for i in unplaced}
    path = [unplaced[0]]
    seen_at = {unplaced[0]: 0}
    while True:
        nxt = succ[path[-1]][0]
        if nxt in seen_at:
            cycle = path[seen_at[nxt]:]
            break
        seen_at[nxt] = len(path)
        path.append(nxt)
    # Pick crossing edges between consecutive components, then stitch
    # bidirected paths inside each component.
    crossings = []
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        for t, h in g.directed:
            if (1 << t) & comp_masks[a] and (1 << h) & comp_masks[b]:
                crossings.append((t, h))
                break
    walk = [crossings[0][0]]
    for idx, (t, h) in enumerate(crossings):
        walk.append(h)
        nt = crossings[(idx + 1) % len(crossings)][0]
        comp = comp_masks[[c for c in cycle if (1 << h) & comp_masks[c]][0]]
        inner = _bidirected_path(g, h, nt, comp)
        walk.extend(inner[1:])
    return walk


def is_chain_graph(g: MixedGraph) -> bool:
    """Cheap predicate form of :func:`validate_chain_graph`."""
    return _chain_order_from_masks(g.n, g.ch, g.nb) is not None


def _chain_order_from_masks(n: int, ch: tuple[int, ...], nb) -> list[int] | None:
    """Component order if the masks describe a chain graph, else None.

    Works directly on adjacency masks so graph enumeration can filter
    candidates without building :class:`MixedGraph` objects.
    """
    comp_of = [-1] * n
    comp_masks = []
    for v in range(n):
        if comp_of[v] >= 0:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            grown = 0
            for u in bits(frontier):
                grown |= nb[u]
            frontier = grown & ~comp
            comp |= frontier
        idx = len(comp_masks)
        comp_masks.append(comp)
        for u in bits(comp):
            comp_of[u] = idx

    k = len(comp_masks)
    succ = [0] * k  # bitmask of child components
    for v in range(n):
        cv = comp_of[v]
        for w in bits(ch[v]):
            cw = comp_of[w]
            if cw == cv:
                return None
            succ[cv] |= 1 << cw

    ready = [i for i in range(k) if succ[i] == 0]
    order = []
    removed = 0
    while ready:
        i = ready.pop()
        order.append(i)
        removed |= 1 << i
        for p in range(k):
            if succ[p] >> i & 1:
                succ[p] &= ~(1 << i)
                if succ[p] == 0 and not (removed >> p & 1) and p not in ready:
                    ready.append(p)
    return order if len(order) == k else None
