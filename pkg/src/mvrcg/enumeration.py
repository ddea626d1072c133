"""Graph generators for exhaustive and randomized verification runs.

Every unordered vertex pair independently carries one of four states
(no edge, ->, <-, <->); candidates with a partially directed cycle are
dropped.  Exhaustive mode is practical up to five vertices (4**10
candidates) and allowed up to six; random mode rejection-samples the
same distribution at any size.
"""

from __future__ import annotations

import random
from itertools import combinations, product
from typing import Iterator

from .chain import _chain_order_from_masks
from .config import ENUMERATION_CAP
from .errors import CapExceeded
from .graph import MixedGraph

NO_EDGE, FORWARD, BACKWARD, BOTH = range(4)


def _edges_from_states(pairs, states):
    directed = []
    bidirected = []
    for (u, v), s in zip(pairs, states):
        if s == FORWARD:
            directed.append((u, v))
        elif s == BACKWARD:
            directed.append((v, u))
        elif s == BOTH:
            bidirected.append((u, v))
    return directed, bidirected


def _masks_from_states(n, pairs, states):
    ch = [0] * n
    nb = [0] * n
    for (u, v), s in zip(pairs, states):
        if s == FORWARD:
            ch[u] |= 1 << v
        elif s == BACKWARD:
            ch[v] |= 1 << u
        elif s == BOTH:
            nb[u] |= 1 << v
            nb[v] |= 1 << u
    return ch, nb


def chain_graph_states(n: int) -> Iterator[tuple[tuple, tuple[int, ...]]]:
    """Yield (pairs, states) for every labeled chain graph on ``n`` vertices."""
    pairs = tuple(combinations(range(n), 2))
    for states in product(range(4), repeat=len(pairs)):
        ch, nb = _masks_from_states(n, pairs, states)
        if _chain_order_from_masks(n, ch, nb) is not None:
            yield pairs, states


def enumerate_mvr_cgs(n: int) -> Iterator[MixedGraph]:
    """Every labeled mixed graph on ``n`` vertices without a partially
    directed cycle and with at most one edge per pair."""
    if n > ENUMERATION_CAP:
        raise CapExceeded(f"exhaustive enumeration capped at n={ENUMERATION_CAP}")
    for pairs, states in chain_graph_states(n):
        directed, bidirected = _edges_from_states(pairs, states)
        yield MixedGraph(n, directed, bidirected)


def random_mvr_cg(n: int, rng: random.Random) -> MixedGraph:
    """Uniform sample over per-pair states, rejecting non-chain-graphs."""
    pairs = tuple(combinations(range(n), 2))
    while True:
        states = tuple(rng.randrange(4) for _ in pairs)
        ch, nb = _masks_from_states(n, pairs, states)
        if _chain_order_from_masks(n, ch, nb) is not None:
            directed, bidirected = _edges_from_states(pairs, states)
            return MixedGraph(n, directed, bidirected)


def random_mvr_cgs(n: int, count: int, seed: int) -> Iterator[MixedGraph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_mvr_cg(n, rng)


def enumerate_dags(n: int) -> Iterator[MixedGraph]:
    """Every labeled DAG on ``n`` vertices (pair states: none, ->, <-)."""
    if n > ENUMERATION_CAP:
        raise CapExceeded(f"exhaustive enumeration capped at n={ENUMERATION_CAP}")
    pairs = tuple(combinations(range(n), 2))
    for states in product((NO_EDGE, FORWARD, BACKWARD), repeat=len(pairs)):
        ch, nb = _masks_from_states(n, pairs, states)
        if _chain_order_from_masks(n, ch, nb) is not None:
            directed, _ = _edges_from_states(pairs, states)
            yield MixedGraph(n, directed)


def enumerate_mixed_graphs(n: int) -> Iterator[MixedGraph]:
    """Every labeled mixed graph, including ones with partially directed
    cycles; used to exercise checks that must reject or flag them."""
    if n > ENUMERATION_CAP:
        raise CapExceeded(f"exhaustive enumeration capped at n={ENUMERATION_CAP}")
    pairs = tuple(combinations(range(n), 2))
    for states in product(range(4), repeat=len(pairs)):
        directed, bidirected = _edges_from_states(pairs, states)
        yield MixedGraph(n, directed, bidirected)
