# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Semantics mirror ``pyfallback`` exactly; the parity
test suite runs both on the same inputs."""

from libc.stdlib cimport calloc, free, realloc

BACKEND = "compiled"

ctypedef unsigned long long u64
ctypedef unsigned int u32

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef u64 _ancestors(u64* pa, u64 seed) nogil:
    cdef u64 out = seed, frontier = seed, grown, m, low
    while frontier:
        grown = 0
        m = frontier
        while m:
            low = m & (~m + 1)
            grown |= pa[__builtin_ctzll(low)]
            m ^= low
        frontier = grown & ~out
        out |= frontier
    return out


cdef bint _m_connected(u64* pa, u64* ch, u64* nb, u64 x, u64 y, u64 z) nogil:
    cdef u64 anz = _ancestors(pa, z)
    cdef u64 head = 0, tail = 0, fh, ft, nh, nt, m, low
    cdef int v
    m = x
    while m:
        low = m & (~m + 1)
        v = __builtin_ctzll(low)
        m ^= low
        head |= ch[v] | nb[v]
        tail |= pa[v]
    if (head | tail) & y:
        return True
    fh = head
    ft = tail
    while fh or ft:
        nh = 0
        nt = 0
        m = ft
        while m:
            low = m & (~m + 1)
            v = __builtin_ctzll(low)
            m ^= low
            if not (z >> v & 1):
                nh |= ch[v] | nb[v]
                nt |= pa[v]
        m = fh
        while m:
            low = m & (~m + 1)
            v = __builtin_ctzll(low)
            m ^= low
            if not (z >> v & 1):
                nh |= ch[v]
            if anz >> v & 1:
                nh |= nb[v]
                nt |= pa[v]
        if (nh | nt) & y:
            return True
        fh = nh & ~head
        ft = nt & ~tail
        head |= nh
        tail |= nt
    return False


cdef int _fill(u64* arr, seq, int n) except -1:
    cdef int v
    if n > 64:
        raise ValueError("at most 64 vertices")
    for v in range(n):
        arr[v] = seq[v]
    return 0


def m_connected(int n, pa, ch, nb, x, y, z):
    cdef u64 cpa[64]
    cdef u64 cch[64]
    cdef u64 cnb[64]
    _fill(cpa, pa, n)
    _fill(cch, ch, n)
    _fill(cnb, nb, n)
    return bool(_m_connected(cpa, cch, cnb, x, y, z))


def global_model_codes(int n, pa, ch, nb):
    """All separated canonical (X, Y | Z) codes over ``n`` vertices."""
    cdef u64 cpa[64]
    cdef u64 cch[64]
    cdef u64 cnb[64]
    _fill(cpa, pa, n)
    _fill(cch, ch, n)
    _fill(cnb, nb, n)
    cdef u64 limit = (<u64>1) << (2 * n)
    cdef u64 code
    cdef u64 a, b, c
    cdef int v, d
    cdef bint bad
    out = []
    for code in range(limit):
        a = b = c = 0
        bad = False
        for v in range(n):
            d = (code >> (2 * v)) & 3
            if d == 1:
                a |= (<u64>1) << v
            elif d == 2:
                if a == 0:
                    bad = True
                    break
                b |= (<u64>1) << v
            elif d == 3:
                c |= (<u64>1) << v
        if bad or a == 0 or b == 0:
            continue
        if not _m_connected(cpa, cch, cnb, a, b, c):
            out.append(code)
    return out


cdef struct Store:
    u32* a
    u32* b
    u32* c
    size_t count
    size_t cap
    char* seen
    int n


cdef int _push(Store* st, u32 a, u32 b, u32 c) except -1:
    cdef u32 low = (a | b) & (~(a | b) + 1)
    cdef u32 tmp
    cdef size_t code = 0
    cdef int v
    cdef u32* grown
    if low & b:
        tmp = a
        a = b
        b = tmp
    for v in range(st.n):
        if a >> v & 1:
            code += (<size_t>1) << (2 * v)
        elif b >> v & 1:
            code += (<size_t>2) << (2 * v)
        elif c >> v & 1:
            code += (<size_t>3) << (2 * v)
    if st.seen[code]:
        return 0
    st.seen[code] = 1
    if st.count == st.cap:
        st.cap *= 2
        grown = <u32*>realloc(st.a, st.cap * sizeof(u32))
        if grown == NULL:
            raise MemoryError()
        st.a = grown
        grown = <u32*>realloc(st.b, st.cap * sizeof(u32))
        if grown == NULL:
            raise MemoryError()
        st.b = grown
        grown = <u32*>realloc(st.c, st.cap * sizeof(u32))
        if grown == NULL:
            raise MemoryError()
        st.c = grown
    st.a[st.count] = a
    st.b[st.count] = b
    st.c[st.count] = c
    st.count += 1
    return 1


def close_codes(int n, codes, int flags):
    """Least superset of ``codes`` closed under the enabled axioms."""
    cdef bint drops = (flags & (1 | 4)) != 0
    cdef bint moves = (flags & (2 | 4)) != 0
    cdef bint con = (flags & 4) != 0
    cdef bint inter = (flags & 8) != 0
    cdef bint comp = (flags & 16) != 0
    cdef bint binary = con or inter or comp
    if n > 15:
        raise ValueError("closure kernel supports at most 15 vertices")
    cdef size_t limit = (<size_t>1) << (2 * n)
    cdef Store st
    st.n = n
    st.count = 0
    st.cap = 1024
    st.seen = <char*>calloc(limit, 1)
    st.a = <u32*>realloc(NULL, st.cap * sizeof(u32))
    st.b = <u32*>realloc(NULL, st.cap * sizeof(u32))
    st.c = <u32*>realloc(NULL, st.cap * sizeof(u32))
    if st.seen == NULL or st.a == NULL or st.b == NULL or st.c == NULL:
        raise MemoryError()

    cdef size_t i = 0, j, cnt
    cdef size_t code
    cdef u32 a, b, c, blk, rest, low, m
    cdef u32 a1, b1, c1, a2, b2, c2, anchor1, blk1, anchor2, blk2
    cdef int v, d, side, o, r1, r2
    try:
        for pycode in codes:
            code = pycode
            a = b = c = 0
            for v in range(n):
                d = (code >> (2 * v)) & 3
                if d == 1:
                    a |= (<u32>1) << v
                elif d == 2:
                    b |= (<u32>1) << v
                elif d == 3:
                    c |= (<u32>1) << v
            _push(&st, a, b, c)

        while i < st.count:
            a = st.a[i]
            b = st.b[i]
            c = st.c[i]
            if drops or moves:
                for side in range(2):
                    blk = a if side == 0 else b
                    if (blk & (blk - 1)) == 0:  # fewer than two members
                        continue
                    m = blk
                    while m:
                        low = m & (~m + 1)
                        m ^= low
                        rest = blk ^ low
                        if side == 0:
                            if drops:
                                _push(&st, rest, b, c)
                            if moves:
                                _push(&st, rest, b, c | low)
                        else:
                            if drops:
                                _push(&st, a, rest, c)
                            if moves:
                                _push(&st, a, rest, c | low)
            if binary:
                cnt = st.count
                for j in range(cnt):
                    for o in range(2):
                        if o == 0:
                            a1 = st.a[i]; b1 = st.b[i]; c1 = st.c[i]
                            a2 = st.a[j]; b2 = st.b[j]; c2 = st.c[j]
                        else:
                            a1 = st.a[j]; b1 = st.b[j]; c1 = st.c[j]
                            a2 = st.a[i]; b2 = st.b[i]; c2 = st.c[i]
                        for r1 in range(2):
                            anchor1 = a1 if r1 == 0 else b1
                            blk1 = b1 if r1 == 0 else a1
                            for r2 in range(2):
                                anchor2 = a2 if r2 == 0 else b2
                                blk2 = b2 if r2 == 0 else a2
                                if anchor1 != anchor2:
                                    continue
                                if con and c1 == (c2 | blk2):
                                    _push(&st, anchor1, blk1 | blk2, c2)
                                if comp and c1 == c2 and (blk1 & blk2) == 0:
                                    _push(&st, anchor1, blk1 | blk2, c1)
                                if inter and (blk2 & c1) == blk2 and \
                                        c2 == ((c1 & ~blk2) | blk1):
                                    _push(&st, anchor1, blk1 | blk2, c1 & ~blk2)
            i += 1

        out = []
        for j in range(st.count):
            a = st.a[j]
            b = st.b[j]
            c = st.c[j]
            code = 0
            for v in range(n):
                if a >> v & 1:
                    code += (<size_t>1) << (2 * v)
                elif b >> v & 1:
                    code += (<size_t>2) << (2 * v)
                elif c >> v & 1:
                    code += (<size_t>3) << (2 * v)
            out.append(code)
        out.sort()
        return out
    finally:
        free(st.seen)
        free(st.a)
        free(st.b)
        free(st.c)
