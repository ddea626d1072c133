"""Pure-Python kernels; the reference semantics for the compiled twin.

Graphs arrive as parent/child/neighbour adjacency bitmasks.  Independence
triples travel as base-4 codes: vertex ``v`` contributes digit 0 (not
mentioned), 1 (first block), 2 (second block) or 3 (conditioning set) at
position ``v``.  A code is canonical when the lowest-numbered vertex of
the two blocks sits in the first block, which bakes symmetry into the
encoding.
"""

from __future__ import annotations

BACKEND = "python"

_DECOMPOSITION = 1
_WEAK_UNION = 2
_CONTRACTION = 4
_INTERSECTION = 8
_COMPOSITION = 16


def encode_masks(n: int, a: int, b: int, c: int) -> int:
    low = (a | b) & -(a | b)
    if low & b:
        a, b = b, a
    code = 0
    for v in range(n):
        if a >> v & 1:
            code += 1 << (2 * v)
        elif b >> v & 1:
            code += 2 << (2 * v)
        elif c >> v & 1:
            code += 3 << (2 * v)
    return code


def decode_code(n: int, code: int) -> tuple[int, int, int]:
    a = b = c = 0
    for v in range(n):
        d = (code >> (2 * v)) & 3
        if d == 1:
            a |= 1 << v
        elif d == 2:
            b |= 1 << v
        elif d == 3:
            c |= 1 << v
    return a, b, c


def _ancestors(n: int, pa, seed: int) -> int:
    out = seed
    frontier = seed
    while frontier:
        grown = 0
        m = frontier
        while m:
            low = m & -m
            grown |= pa[low.bit_length() - 1]
            m ^= low
        frontier = grown & ~out
        out |= frontier
    return out


def m_connected(n: int, pa, ch, nb, x: int, y: int, z: int) -> bool:
    """Walk-state reachability for the mixed-graph separation criterion.

    States are (vertex, arrived-with-arrowhead).  An interior vertex is
    crossed as a noncollider only outside ``z`` and as a collider only
    inside the ancestor closure of ``z``.
    """
    anz = _ancestors(n, pa, z)
    head = 0  # vertices reached with an arrowhead pointing at them
    tail = 0
    m = x
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        head |= ch[v] | nb[v]
        tail |= pa[v]
    if (head | tail) & y:
        return True
    fh, ft = head, tail
    while fh or ft:
        nh = nt = 0
        m = ft
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if not (z >> v & 1):      # arrived tail-first: always a noncollider
                nh |= ch[v] | nb[v]
                nt |= pa[v]
        m = fh
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if not (z >> v & 1):      # leave through a tail: noncollider
                nh |= ch[v]
            if anz >> v & 1:          # leave through a head: collider
                nh |= nb[v]
                nt |= pa[v]
        if (nh | nt) & y:
            return True
        fh = nh & ~head
        ft = nt & ~tail
        head |= nh
        tail |= nt
    return False


def global_model_codes(n: int, pa, ch, nb) -> list[int]:
    """All separated canonical (X, Y | Z) codes over ``n`` vertices."""
    out = []
    for code in range(1 << (2 * n)):
        a = b = c = 0
        bad = False
        for v in range(n):
            d = (code >> (2 * v)) & 3
            if d == 1:
                a |= 1 << v
            elif d == 2:
                if not a:  # lowest block vertex must lie in the first block
                    bad = True
                    break
                b |= 1 << v
            elif d == 3:
                c |= 1 << v
        if bad or not a or not b:
            continue
        if not m_connected(n, pa, ch, nb, a, b, c):
            out.append(code)
    return out


def close_codes(n: int, codes, flags: int) -> list[int]:
    """Least superset of ``codes`` closed under the enabled axioms.

    Symmetry is implicit in the canonical encoding.  The biconditional
    contraction axiom contributes its reverse direction (splitting the
    second block back apart) as the same single-vertex drop/move steps
    that decomposition and weak union use.
    """
    drops = bool(flags & (_DECOMPOSITION | _CONTRACTION))
    moves = bool(flags & (_WEAK_UNION | _CONTRACTION))
    con = bool(flags & _CONTRACTION)
    inter = bool(flags & _INTERSECTION)
    comp = bool(flags & _COMPOSITION)

    seen = bytearray(1 << (2 * n))
    model: list[tuple[int, int, int]] = []
    work: list[tuple[int, int, int]] = []

    def push(a: int, b: int, c: int) -> None:
        low = (a | b) & -(a | b)
        if low & b:
            a, b = b, a
        code = 0
        for v in range(n):
            if a >> v & 1:
                code += 1 << (2 * v)
            elif b >> v & 1:
                code += 2 << (2 * v)
            elif c >> v & 1:
                code += 3 << (2 * v)
        if not seen[code]:
            seen[code] = 1
            model.append((a, b, c))
            work.append((a, b, c))

    for code in codes:
        push(*decode_code(n, code))

    while work:
        a, b, c = work.pop()
        if drops or moves:
            for blk_is_a in (True, False):
                blk = a if blk_is_a else b
                if blk.bit_count() < 2:
                    continue
                m = blk
                while m:
                    low = m & -m
                    m ^= low
                    rest = blk ^ low
                    if blk_is_a:
                        if drops:
                            push(rest, b, c)
                        if moves:
                            push(rest, b, c | low)
                    else:
                        if drops:
                            push(a, rest, c)
                        if moves:
                            push(a, rest, c | low)
        if not (con or inter or comp):
            continue
        for a2, b2, c2 in list(model):
            for (p1a, p1b, p1c, p2a, p2b, p2c) in (
                (a, b, c, a2, b2, c2),
                (a2, b2, c2, a, b, c),
            ):
                for anchor1, blk1 in ((p1a, p1b), (p1b, p1a)):
                    for anchor2, blk2 in ((p2a, p2b), (p2b, p2a)):
                        if anchor1 != anchor2:
                            continue
                        if con and p1c == (p2c | blk2):
                            push(anchor1, blk1 | blk2, p2c)
                        if comp and p1c == p2c and not blk1 & blk2:
                            push(anchor1, blk1 | blk2, p1c)
                        if inter and blk2 & p1c == blk2 and \
                                p2c == ((p1c & ~blk2) | blk1):
                            push(anchor1, blk1 | blk2, p1c & ~blk2)

    return sorted(encode_masks(n, a, b, c) for a, b, c in model)
