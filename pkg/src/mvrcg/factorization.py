"""Heads, tails and factorizations.

A head H is a set that is its own barren subset, lies inside a single
district of the subgraph induced on its ancestor closure, and carries
the tail ``(dis(H) \\ H) | pa(dis(H))`` computed in that subgraph.  Heads
partition every ancestrally closed set; the partition drives the product
form ``p(x_A) = prod p(x_H | x_tail(H))``.

For a chain graph the blocks of the full-graph partition are exactly the
chain components and each tail is the component's set of graphical
parents, which yields the per-component product; conditioning each
component on its full parent components instead gives the coarser
component-DAG product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ._bitset import bits, mask_of, set_of
from .chain import ChainDecomposition
from .config import DEFAULT_SUBSET_CAP
from .errors import CapExceeded, HeadTestFailed, NotAncestrallyClosed
from .graph import (MixedGraph, ancestors_mask, descendants_mask,
                    district_mask, parents_of_set)


@dataclass(frozen=True)
class HeadTail:
    head: frozenset[int]
    tail: frozenset[int]

    def format(self, labels=None) -> str:
        def fmt(s):
            if labels is None:
                return ",".join(str(v) for v in sorted(s))
            return ",".join(labels[v] for v in sorted(s))

        return f"p({fmt(self.head)} | {fmt(self.tail)})" if self.tail else f"p({fmt(self.head)})"


@dataclass(frozen=True)
class Factorization:
    """An ordered list of head/tail factors covering ``scope``."""

    factors: tuple[HeadTail, ...]
    scope: frozenset[int]

    def blocks(self) -> frozenset[frozenset[int]]:
        return frozenset(f.head for f in self.factors)

    def tail_of(self, head: frozenset[int]) -> frozenset[int]:
        for f in self.factors:
            if f.head == head:
                return f.tail
        raise KeyError(head)

    def format(self, labels=None) -> str:
        return " ".join(f.format(labels) for f in self.factors)


def barren(g: MixedGraph, H: Iterable[int], within: Optional[int] = None) -> frozenset[int]:
    """Members of H with no proper descendant inside H."""
    h = mask_of(H)
    out = 0
    for v in bits(h):
        if descendants_mask(g, 1 << v, within) & h == 1 << v:
            out |= 1 << v
    return set_of(out)


def _barren_mask(g: MixedGraph, h: int, within: int) -> int:
    out = 0
    for v in bits(h):
        if descendants_mask(g, 1 << v, within) & h == 1 << v:
            out |= 1 << v
    return out


def _district_of_set(g: MixedGraph, h: int, within: int) -> int:
    out = 0
    for v in bits(h):
        out |= district_mask(g, v, within)
    return out


def _head_tail_mask(g: MixedGraph, h: int) -> Optional[int]:
    """Tail mask when ``h`` satisfies the head conditions, else None."""
    anh = ancestors_mask(g, h)
    if _barren_mask(g, h, anh) != h:
        return None
    first = (h & -h).bit_length() - 1
    if h & ~district_mask(g, first, anh):
        return None  # spread over more than one district
    dis = _district_of_set(g, h, anh)
    return (dis & ~h) | parents_of_set(g, dis)


def is_head(g: MixedGraph, H: Iterable[int]) -> bool:
    h = mask_of(H)
    return bool(h) and _head_tail_mask(g, h) is not None


def tail_of_head(g: MixedGraph, H: Iterable[int]) -> frozenset[int]:
    h = mask_of(H)
    t = _head_tail_mask(g, h)
    if t is None:
        raise HeadTestFailed(f"{sorted(set_of(h))} is not a head")
    return set_of(t)


def heads(g: MixedGraph, cap: int = DEFAULT_SUBSET_CAP) -> tuple[HeadTail, ...]:
    """Every head of the graph with its tail, by subset enumeration."""
    if g.n > cap:
        raise CapExceeded(f"{g.n} vertices exceeds subset-enumeration cap {cap}")
    out = []
    for h in range(1, 1 << g.n):
        t = _head_tail_mask(g, h)
        if t is not None:
            out.append(HeadTail(set_of(h), set_of(t)))
    out.sort(key=lambda ht: (len(ht.head), sorted(ht.head)))
    return tuple(out)


def head_partition(g: MixedGraph, A: Iterable[int]) -> Factorization:
    """Partition an ancestrally closed set into heads.

    Recursive peeling: split what remains by district of the induced
    ancestral subgraph, take the barren part of each district as a
    block, remove, repeat.  Every emitted block is re-checked against
    the head conditions; a failure means the construction is wrong, not
    the input.
    """
    a_mask = mask_of(A)
    if ancestors_mask(g, a_mask) != a_mask:
        raise NotAncestrallyClosed(f"an(A) != A for A={sorted(set_of(a_mask))}")
    factors = []
    w = a_mask
    while w:
        anw = ancestors_mask(g, w)
        emitted = 0
        left = anw
        while left:
            v = (left & -left).bit_length() - 1
            d = district_mask(g, v, anw)
            left &= ~d
            eligible = d & w
            # Barrenness is judged inside the district part: a vertex is
            # kept only while it still has a descendant there, so jointly
            # dependent siblings leave as one block.
            block = _barren_mask(g, eligible, anw)
            if not block:
                continue
            t = _head_tail_mask(g, block)
            if t is None:
                raise HeadTestFailed(
                    f"partition block {sorted(set_of(block))} failed the head test")
            factors.append(HeadTail(set_of(block), set_of(t)))
            emitted |= block
        w &= ~emitted
    return Factorization(tuple(factors), set_of(a_mask))


def factorize_mvr(g: MixedGraph, dec: ChainDecomposition) -> Factorization:
    """One factor per chain component, conditioned on its graphical
    parents.  Coincides with :func:`head_partition` of the full vertex
    set; the test suite asserts that identity."""
    factors = []
    for i in range(len(dec.components)):
        tmask = dec.component_mask(i)
        factors.append(HeadTail(set_of(tmask), set_of(parents_of_set(g, tmask))))
    return Factorization(tuple(factors), set_of(g.full_mask))


def factorize_component_dag(g: MixedGraph, dec: ChainDecomposition) -> Factorization:
    """One factor per chain component, conditioned on the union of its
    full parent components."""
    factors = []
    for i in range(len(dec.components)):
        tmask = dec.component_mask(i)
        factors.append(HeadTail(set_of(tmask), set_of(dec.pa_d_mask(i))))
    return Factorization(tuple(factors), set_of(g.full_mask))
