# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel; mirrors ``_pykernels.run_search`` bit for bit."""

from libc.stdlib cimport calloc, free
from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXC = 64

cdef enum:
    PRED_ST = 0
    PRED_UNION_L = 1
    PRED_LINT = 2

ctypedef struct State:
    int n
    uint64_t full
    int ncand
    uint64_t cands[MAXC]
    uint64_t sub_kill[MAXC]
    uint64_t *bad          # 2^n entries, union-l only
    int upset
    int pred
    int p1
    int p2
    int filter_alive
    int bound_prune
    int prefix_len
    uint64_t prefix_bits
    long long *shared
    int nshared
    int slot
    int *counts            # 2^n entries
    int has_empty
    int *ucount            # 2^n entries, union-l only
    uint64_t present
    uint64_t members[MAXC + 1]
    int nmembers
    long long best
    uint64_t best_bits
    long long nodes


cdef inline int popc(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline bint st_viol(State *st, uint64_t u) noexcept nogil:
    cdef int a = st.counts[u]
    cdef int b = st.counts[st.full ^ u]
    cdef int need = st.p1 + st.p2
    if a + b - st.has_empty < need:
        return False
    return (a >= st.p1 and b >= st.p2) or (b >= st.p1 and a >= st.p2)


cdef bint add(State *st, uint64_t m) noexcept nogil:
    cdef uint64_t free_ = st.full & ~m
    cdef uint64_t sub
    cdef uint64_t w, new, low
    cdef int i
    cdef bint ok
    if st.pred == PRED_ST:
        sub = free_
        while True:
            st.counts[m | sub] += 1
            if sub == 0:
                break
            sub = (sub - 1) & free_
        if m == 0:
            st.has_empty += 1
        ok = True
        sub = free_
        while True:
            if st_viol(st, m | sub):
                ok = False
                break
            if sub == 0:
                break
            sub = (sub - 1) & free_
        st.members[st.nmembers] = m
        st.nmembers += 1
        return ok
    if st.pred == PRED_UNION_L:
        new = 0
        for i in range(st.nmembers):
            w = m | st.members[i]
            st.ucount[w] += 1
            if st.ucount[w] == 1:
                new |= (<uint64_t>1) << w
        st.present |= new
        st.members[st.nmembers] = m
        st.nmembers += 1
        while new:
            low = new & (~new + 1)
            w = __builtin_ctzll(low)
            if st.present & st.bad[w]:
                return False
            new ^= low
        return True
    # PRED_LINT
    st.members[st.nmembers] = m
    st.nmembers += 1
    if popc(m) < st.p1:
        return False
    for i in range(st.nmembers - 1):
        if popc(m & st.members[i]) < st.p1:
            return False
    return True


cdef void remove(State *st) noexcept nogil:
    cdef uint64_t m, free_, sub, w
    cdef int i
    st.nmembers -= 1
    m = st.members[st.nmembers]
    free_ = st.full & ~m
    if st.pred == PRED_ST:
        sub = free_
        while True:
            st.counts[m | sub] -= 1
            if sub == 0:
                break
            sub = (sub - 1) & free_
        if m == 0:
            st.has_empty -= 1
    elif st.pred == PRED_UNION_L:
        for i in range(st.nmembers):
            w = m | st.members[i]
            st.ucount[w] -= 1
            if st.ucount[w] == 0:
                st.present &= ~((<uint64_t>1) << w)


cdef inline long long shared_best(State *st) noexcept nogil:
    cdef long long b = -1
    cdef int i
    if st.shared == NULL:
        return -1
    for i in range(st.nshared):
        if st.shared[i] > b:
            b = st.shared[i]
    return b


cdef inline uint64_t high_bits(uint64_t x, int start) noexcept nogil:
    if start >= 64:
        return 0
    return (x >> start) << start


cdef uint64_t filter_alive(State *st, uint64_t alive, int start) noexcept nogil:
    cdef uint64_t rest = high_bits(alive, start)
    cdef uint64_t low
    cdef int j
    cdef bint ok
    while rest:
        low = rest & (~rest + 1)
        j = __builtin_ctzll(low)
        ok = add(st, st.cands[j])
        remove(st)
        if not ok:
            alive &= ~low
        rest ^= low
    return alive


cdef void dfs(State *st, int idx, uint64_t alive, uint64_t chosen, long long size) noexcept nogil:
    cdef long long optimistic
    cdef uint64_t bit, nxt
    cdef int force = -1
    st.nodes += 1
    if idx == st.ncand:
        if size > st.best:
            st.best = size
            st.best_bits = chosen
            if st.shared != NULL and size > st.shared[st.slot]:
                st.shared[st.slot] = size
        return
    if st.bound_prune:
        optimistic = size + popc(alive >> idx)
        if optimistic <= st.best or optimistic < shared_best(st):
            return
    bit = (<uint64_t>1) << idx
    if idx < st.prefix_len:
        force = <int>((st.prefix_bits >> idx) & 1)
    if (alive & bit) and force != 0:
        if add(st, st.cands[idx]):
            nxt = alive
            if st.filter_alive:
                nxt = filter_alive(st, alive, idx + 1)
            dfs(st, idx + 1, nxt, chosen | bit, size + 1)
        remove(st)
    if force != 1:
        nxt = alive & ~bit
        if st.upset:
            nxt &= ~st.sub_kill[idx]
        dfs(st, idx + 1, nxt, chosen, size)


def run_search(int n, cands, bint upset, int pred, int p1, int p2, sub_kill, bad,
               bint filter_alive, bint bound_prune, int prefix_len=0, prefix_bits=0,
               shared=None, int slot=0):
    """Same contract as ``_pykernels.run_search``; releases the GIL while searching.

    ``shared`` must be a writable buffer of signed 64-bit ints (e.g.
    ``array.array('q')``) when given.
    """
    cdef int ncand = len(cands)
    cdef int size = 1 << n
    cdef int i
    cdef State *st
    cdef long long[::1] shared_view
    cdef uint64_t alive
    if ncand > MAXC:
        raise ValueError(f"at most {MAXC} candidates supported, got {ncand}")
    if n > 24:
        raise ValueError("kernel state is 2^n wide; n > 24 refused")
    if pred == PRED_UNION_L and n > 6:
        raise ValueError("union-l kernel packs unions into 64 bits; needs n <= 6")
    st = <State *> calloc(1, sizeof(State))
    if st == NULL:
        raise MemoryError()
    try:
        st.counts = <int *> calloc(size, sizeof(int))
        if st.counts == NULL:
            raise MemoryError()
        if pred == PRED_UNION_L:
            st.ucount = <int *> calloc(size, sizeof(int))
            st.bad = <uint64_t *> calloc(size, sizeof(uint64_t))
            if st.ucount == NULL or st.bad == NULL:
                raise MemoryError()
            for i in range(size):
                st.bad[i] = <uint64_t> bad[i]
        st.n = n
        st.full = (<uint64_t>1 << n) - 1
        st.ncand = ncand
        for i in range(ncand):
            st.cands[i] = <uint64_t> cands[i]
            st.sub_kill[i] = <uint64_t> sub_kill[i] if upset else 0
        st.upset = upset
        st.pred = pred
        st.p1 = p1
        st.p2 = p2
        st.filter_alive = filter_alive
        st.bound_prune = bound_prune
        st.prefix_len = prefix_len
        st.prefix_bits = <uint64_t> prefix_bits
        st.slot = slot
        if shared is not None:
            shared_view = shared
            st.shared = &shared_view[0]
            st.nshared = shared_view.shape[0]
        st.best = -1
        alive = ((<uint64_t>1) << ncand) - 1 if ncand < 64 else ~(<uint64_t>0)
        with nogil:
            dfs(st, 0, alive, 0, 0)
        return st.best, int(st.best_bits), st.nodes
    finally:
        free(st.counts)
        free(st.ucount)
        free(st.bad)
        free(st)
