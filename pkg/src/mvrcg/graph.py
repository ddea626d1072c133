"""Mixed graphs with directed (->) and bidirected (<->) edges.

A :class:`MixedGraph` is immutable after construction and safe to share
between threads.  Vertices are dense integer ids ``0..n-1`` with optional
display labels.  At most one edge may join any vertex pair and self loops
are forbidden; undirected edges are not supported at all and are rejected
by the text parser.

Text format, one item per line (``#`` starts a comment)::

    vertex <label>
    <a> -> <b>
    <a> <-> <b>

Vertices must be declared before use; declaration order fixes the ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ._bitset import bits, mask_of, set_of
from .errors import GraphFormatError

DIRECTED = "->"
BIDIRECTED = "<->"


class MixedGraph:
    """Immutable mixed graph over vertices ``0..n-1``.

    Parameters
    ----------
    n : vertex count
    directed : iterable of (tail, head) pairs, meaning ``tail -> head``
    bidirected : iterable of unordered pairs, stored with the smaller id first
    labels : optional display strings, one per vertex
    """

    __slots__ = ("n", "labels", "directed", "bidirected", "pa", "ch", "nb",
                 "adj", "full_mask", "source_ids", "_hash")

    def __init__(self, n, directed=(), bidirected=(), labels=None, source_ids=None):
        if n < 0:
            raise GraphFormatError("vertex count must be nonnegative")
        self.n = n
        if labels is None:
            labels = tuple(str(v) for v in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise GraphFormatError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise GraphFormatError("duplicate vertex labels")
        self.labels = labels
        self.source_ids = tuple(source_ids) if source_ids is not None else tuple(range(n))

        pa = [0] * n
        ch = [0] * n
        nb = [0] * n
        seen_pairs = set()

        def claim(u, v):
            if u == v:
                raise GraphFormatError(f"self loop at {self._name(u)}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge endpoint out of range: ({u}, {v})")
            pair = (u, v) if u < v else (v, u)
            if pair in seen_pairs:
                raise GraphFormatError(
                    f"more than one edge between {self._name(pair[0])} and {self._name(pair[1])}")
            seen_pairs.add(pair)
            return pair

        dir_edges = set()
        for t, h in directed:
            claim(t, h)
            dir_edges.add((t, h))
            pa[h] |= 1 << t
            ch[t] |= 1 << h
        bi_edges = set()
        for u, v in bidirected:
            bi_edges.add(claim(u, v))
            nb[u] |= 1 << v
            nb[v] |= 1 << u

        self.directed = frozenset(dir_edges)
        self.bidirected = frozenset(bi_edges)
        self.pa = tuple(pa)
        self.ch = tuple(ch)
        self.nb = tuple(nb)
        self.adj = tuple(pa[v] | ch[v] | nb[v] for v in range(n))
        self.full_mask = (1 << n) - 1
        self._hash = hash((n, self.directed, self.bidirected))

    def _name(self, v):
        return self.labels[v] if 0 <= v < len(self.labels) else str(v)

    # --- basic queries -------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def parents(self, v: int) -> frozenset[int]:
        return set_of(self.pa[v])

    def children(self, v: int) -> frozenset[int]:
        return set_of(self.ch[v])

    def neighbors(self, v: int) -> frozenset[int]:
        """Vertices joined to ``v`` by a bidirected edge."""
        return set_of(self.nb[v])

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_between(self, u: int, v: int) -> Optional[str]:
        """Return '->', '<-' or '<->' as seen from ``u``, or None."""
        if self.ch[u] >> v & 1:
            return "->"
        if self.pa[u] >> v & 1:
            return "<-"
        if self.nb[u] >> v & 1:
            return "<->"
        return None

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphFormatError(f"unknown vertex label: {label!r}") from None

    def __eq__(self, other):
        return (isinstance(other, MixedGraph) and self.n == other.n
                and self.directed == other.directed and self.bidirected == other.bidirected)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return (f"MixedGraph(n={self.n}, directed={sorted(self.directed)}, "
                f"bidirected={sorted(self.bidirected)})")

    # --- text round trip -----------------------------------------------

    def to_text(self) -> str:
        lines = [f"vertex {self.labels[v]}" for v in self.vertices()]
        for t, h in sorted(self.directed):
            lines.append(f"{self.labels[t]} -> {self.labels[h]}")
        for u, v in sorted(self.bidirected):
            lines.append(f"{self.labels[u]} <-> {self.labels[v]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "MixedGraph":
        labels: list[str] = []
        index: dict[str, int] = {}
        directed = []
        bidirected = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if tokens[0] == "vertex":
                if len(tokens) != 2:
                    raise GraphFormatError(f"line {lineno}: expected 'vertex <label>'")
                label = tokens[1]
                if label in index:
                    raise GraphFormatError(f"line {lineno}: duplicate vertex {label!r}")
                index[label] = len(labels)
                labels.append(label)
            elif len(tokens) == 3 and tokens[1] in (DIRECTED, BIDIRECTED):
                for name in (tokens[0], tokens[2]):
                    if name not in index:
                        raise GraphFormatError(f"line {lineno}: undeclared vertex {name!r}")
                a, b = index[tokens[0]], index[tokens[2]]
                if tokens[1] == DIRECTED:
                    directed.append((a, b))
                else:
                    bidirected.append((a, b))
            else:
                raise GraphFormatError(f"line {lineno}: cannot parse {line!r}")
        try:
            return cls(len(labels), directed, bidirected, labels)
        except GraphFormatError as exc:
            raise GraphFormatError(str(exc)) from None

    @classmethod
    def from_file(cls, path) -> "MixedGraph":
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read())

    def to_dot(self, name: str = "g") -> str:
        """Render as Graphviz DOT; bidirected edges use ``dir=both``."""
        lines = [f"digraph {name} {{"]
        for v in self.vertices():
            lines.append(f'  n{v} [label="{self.labels[v]}"];')
        for t, h in sorted(self.directed):
            lines.append(f"  n{t} -> n{h};")
        for u, v in sorted(self.bidirected):
            lines.append(f"  n{u} -> n{v} [dir=both];")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class UndirectedGraph:
    """Plain undirected graph, used for augmented and moral graphs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def adjacency_masks(self) -> list[int]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


# --- set-valued graph functions ----------------------------------------


def _as_mask(g: MixedGraph, xs: Iterable[int]) -> int:
    m = mask_of(xs)
    if m & ~g.full_mask:
        raise GraphFormatError("vertex id out of range")
    return m


def ancestors_mask(g: MixedGraph, seed: int, within: Optional[int] = None) -> int:
    """Reflexive ancestor closure of the bitmask ``seed`` under -> edges."""
    allowed = g.full_mask if within is None else within
    out = seed & allowed
    frontier = out
    while frontier:
        grown = 0
        for v in bits(frontier):
            grown |= g.pa[v]
        frontier = grown & allowed & ~out
        out |= frontier
    return out


def descendants_mask(g: MixedGraph, seed: int, within: Optional[int] = None) -> int:
    allowed = g.full_mask if within is None else within
    out = seed & allowed
    frontier = out
    while frontier:
        grown = 0
        for v in bits(frontier):
            grown |= g.ch[v]
        frontier = grown & allowed & ~out
        out |= frontier
    return out


def ancestors(g: MixedGraph, xs: Iterable[int]) -> frozenset[int]:
    """All vertices with a directed path into ``xs``, including ``xs``."""
    return set_of(ancestors_mask(g, _as_mask(g, xs)))


def anteriors(g: MixedGraph, xs: Iterable[int]) -> frozenset[int]:
    """Reflexive anterior set of ``xs``.

    An anterior walk into the set may use undirected edges or directed
    edges pointing toward it.  This graph class carries no undirected
    edges, so the walk search below only ever extends along parents and
    the result coincides with :func:`ancestors`; both are kept as
    independent implementations and cross-checked in the test suite.
    """
    seed = _as_mask(g, xs)
    out = seed
    stack = list(bits(seed))
    while stack:
        v = stack.pop()
        for u in bits(g.pa[v] & ~out):
            out |= 1 << u
            stack.append(u)
    return set_of(out)


def districts(g: MixedGraph, within: Optional[int] = None) -> list[frozenset[int]]:
    """Connected components of the bidirected-only (sub)graph, by min id."""
    allowed = g.full_mask if within is None else within
    seen = 0
    out = []
    for v in bits(allowed):
        if seen >> v & 1:
            continue
        comp = district_mask(g, v, allowed)
        seen |= comp
        out.append(set_of(comp))
    return out


def district_mask(g: MixedGraph, v: int, within: Optional[int] = None) -> int:
    allowed = g.full_mask if within is None else within
    comp = (1 << v) & allowed
    frontier = comp
    while frontier:
        grown = 0
        for u in bits(frontier):
            grown |= g.nb[u]
        frontier = grown & allowed & ~comp
        comp |= frontier
    return comp


def district_of(g: MixedGraph, v: int) -> frozenset[int]:
    """Bidirected connected component of ``v`` in the full graph."""
    return set_of(district_mask(g, v))


def parents_of_set(g: MixedGraph, member_mask: int) -> int:
    """Vertices outside the set with a directed edge into it."""
    out = 0
    for v in bits(member_mask):
        out |= g.pa[v]
    return out & ~member_mask


def induced_subgraph(g: MixedGraph, A: Iterable[int]) -> MixedGraph:
    """Subgraph on ``A`` keeping edges with both endpoints inside.

    Vertex ids are re-indexed densely; ``source_ids`` on the result maps
    each new id back to the original one.
    """
    keep = sorted(set_of(_as_mask(g, A)))
    remap = {old: new for new, old in enumerate(keep)}
    directed = [(remap[t], remap[h]) for t, h in g.directed if t in remap and h in remap]
    bidirected = [(remap[u], remap[v]) for u, v in g.bidirected if u in remap and v in remap]
    return MixedGraph(len(keep), directed, bidirected,
                      labels=[g.labels[v] for v in keep], source_ids=keep)


@dataclass(frozen=True)
class Relatives:
    """The standard vertex neighbourhood sets of one vertex."""

    pa: frozenset[int]
    nb: frozenset[int]
    bd: frozenset[int]
    de: frozenset[int]
    nd: frozenset[int]
    pst: Optional[frozenset[int]]
    dis: frozenset[int]


def relatives(g: MixedGraph, v: int, dec=None) -> Relatives:
    """Parents, bidirected neighbours, boundary, descendants (reflexive),
    non-descendants, past and district of ``v``.

    ``pst`` needs a chain decomposition (everything in components ordered
    after the one containing ``v``) and is None when ``dec`` is omitted.
    """
    de = descendants_mask(g, 1 << v)
    pst = None
    if dec is not None:
        pst = set_of(dec.pst_mask(v))
    return Relatives(
        pa=set_of(g.pa[v]),
        nb=set_of(g.nb[v]),
        bd=set_of(g.pa[v] | g.nb[v]),
        de=set_of(de),
        nd=set_of(g.full_mask & ~de & ~(1 << v)),
        pst=pst,
        dis=district_of(g, v),
    )
