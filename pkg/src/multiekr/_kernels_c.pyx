# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: pairwise intersection tests and exact clique search.

Mirrors ``multiekr._kernels_py`` operation for operation — staircase bit
masks, greedy-coloring branch and bound, identical branching order — so the
two backends return the same sizes, witnesses and node counts.
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy, memset

from multiekr.errors import BudgetError

DEFAULT_NODE_BUDGET = 20_000_000

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def intersection_size(a, b):
    """Sum of coordinatewise minima of two multiplicity vectors."""
    cdef Py_ssize_t idx, n = len(a)
    cdef long long total = 0, x, y
    for idx in range(n):
        x = a[idx]
        y = b[idx]
        total += x if x < y else y
    return total


cdef u64 *_build_masks(vectors, int height, int *out_words) except NULL:
    """Pack each multiplicity vector into a staircase bit mask."""
    cdef Py_ssize_t nv = len(vectors)
    cdef int ncols = len(vectors[0]) if nv else 0
    cdef int words = (ncols * height + 63) // 64
    if words < 1:
        words = 1
    out_words[0] = words
    cdef u64 *masks = <u64 *> calloc(nv * words, sizeof(u64))
    if masks == NULL:
        raise MemoryError()
    cdef Py_ssize_t vi
    cdef int col, row, bit
    for vi in range(nv):
        vec = vectors[vi]
        for col in range(ncols):
            for row in range(<int> vec[col]):
                bit = col * height + row
                masks[vi * words + (bit >> 6)] |= (<u64> 1) << (bit & 63)
    return masks


cdef inline int _and_popcount(u64 *a, u64 *b, int words) nogil:
    cdef int w, total = 0
    for w in range(words):
        total += __builtin_popcountll(a[w] & b[w])
    return total


def all_pairs_at_least(vectors, int k, int t):
    """min over unordered distinct pairs of |Fi cap Fj| >= t."""
    cdef Py_ssize_t nv = len(vectors)
    cdef int words
    cdef u64 *masks = _build_masks(vectors, k if k > 0 else 1, &words)
    cdef Py_ssize_t i, j
    try:
        for i in range(nv):
            for j in range(i + 1, nv):
                if _and_popcount(masks + i * words, masks + j * words, words) < t:
                    return False
        return True
    finally:
        free(masks)


def all_pairs_at_least_in_region(vectors, int k, region, int t):
    """min over pairs (diagonal included) of |Fi cap Fj cap region| >= t."""
    cdef int height = k
    cdef int v
    for v in region:
        if v > height:
            height = v
    if height < 1:
        height = 1
    cdef Py_ssize_t nv = len(vectors)
    cdef int words
    cdef u64 *masks = _build_masks(list(vectors) + [tuple(region)], height, &words)
    cdef u64 *rmask = masks + nv * words
    cdef u64 *left = <u64 *> malloc(words * sizeof(u64))
    if left == NULL:
        free(masks)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef int w
    try:
        for i in range(nv):
            for w in range(words):
                left[w] = masks[i * words + w] & rmask[w]
            for j in range(i, nv):
                if _and_popcount(left, masks + j * words, words) < t:
                    return False
        return True
    finally:
        free(left)
        free(masks)


def compatible_with_all(cand, vectors, int k, int t):
    """True when the candidate t-intersects every listed vector."""
    cdef Py_ssize_t nv = len(vectors)
    if nv == 0:
        return True
    cdef int words
    cdef u64 *masks = _build_masks(list(vectors) + [tuple(cand)], k if k > 0 else 1, &words)
    cdef u64 *cmask = masks + nv * words
    cdef Py_ssize_t i
    try:
        for i in range(nv):
            if _and_popcount(cmask, masks + i * words, words) < t:
                return False
        return True
    finally:
        free(masks)


cdef struct _Ctx:
    int nv
    int awords
    u64 *adj
    long long nodes
    long long budget
    int best_size
    int stop_at
    int *best
    int best_len
    int *cur
    int cur_len


cdef int _expand(_Ctx *ctx, u64 *cand) except -1:
    """One branch-and-bound node; ``cand`` is owned (and consumed) here."""
    cdef int aw = ctx.awords
    cdef int w, v, cnt, color, idx, pos
    cdef bint nonzero
    ctx.nodes += 1
    if ctx.nodes > ctx.budget:
        raise BudgetError(f"clique search exceeded node budget {ctx.budget}")
    if ctx.stop_at > 0 and ctx.best_size >= ctx.stop_at:
        return 0
    cnt = 0
    for w in range(aw):
        cnt += __builtin_popcountll(cand[w])
    if cnt == 0:
        if ctx.cur_len > ctx.best_size:
            ctx.best_size = ctx.cur_len
            ctx.best_len = ctx.cur_len
            memcpy(ctx.best, ctx.cur, ctx.cur_len * sizeof(int))
        return 0

    cdef int *order = <int *> malloc(cnt * sizeof(int))
    cdef int *color_of = <int *> malloc(cnt * sizeof(int))
    cdef u64 *uncolored = <u64 *> malloc(aw * sizeof(u64))
    cdef u64 *avail = <u64 *> malloc(aw * sizeof(u64))
    cdef u64 *sub = <u64 *> malloc(aw * sizeof(u64))
    if order == NULL or color_of == NULL or uncolored == NULL or avail == NULL or sub == NULL:
        free(order); free(color_of); free(uncolored); free(avail); free(sub)
        raise MemoryError()
    try:
        memcpy(uncolored, cand, aw * sizeof(u64))
        color = 0
        idx = 0
        while True:
            nonzero = False
            for w in range(aw):
                if uncolored[w]:
                    nonzero = True
                    break
            if not nonzero:
                break
            color += 1
            memcpy(avail, uncolored, aw * sizeof(u64))
            while True:
                v = -1
                for w in range(aw):
                    if avail[w]:
                        v = (w << 6) + __builtin_ctzll(avail[w])
                        break
                if v < 0:
                    break
                order[idx] = v
                color_of[idx] = color
                idx += 1
                uncolored[v >> 6] &= ~((<u64> 1) << (v & 63))
                for w in range(aw):
                    avail[w] &= ~ctx.adj[v * aw + w]
                avail[v >> 6] &= ~((<u64> 1) << (v & 63))
        for pos in range(cnt - 1, -1, -1):
            if ctx.cur_len + color_of[pos] <= ctx.best_size:
                return 0
            v = order[pos]
            cand[v >> 6] &= ~((<u64> 1) << (v & 63))
            nonzero = False
            for w in range(aw):
                sub[w] = cand[w] & ctx.adj[v * aw + w]
                if sub[w]:
                    nonzero = True
            ctx.cur[ctx.cur_len] = v
            ctx.cur_len += 1
            if nonzero:
                _expand(ctx, sub)
                # sub was consumed; it is rebuilt fresh for the next branch
            elif ctx.cur_len > ctx.best_size:
                ctx.best_size = ctx.cur_len
                ctx.best_len = ctx.cur_len
                memcpy(ctx.best, ctx.cur, ctx.cur_len * sizeof(int))
            ctx.cur_len -= 1
            if ctx.stop_at > 0 and ctx.best_size >= ctx.stop_at:
                return 0
        return 0
    finally:
        free(order)
        free(color_of)
        free(uncolored)
        free(avail)
        free(sub)


def max_t_clique(
    vectors,
    int k,
    int t,
    long long node_budget=DEFAULT_NODE_BUDGET,
    int stop_at=0,
    int lower_bound=0,
):
    """Exact maximum clique in the t-intersection graph of the vectors.

    Same contract as the pure backend: returns (best_size, witness_indices,
    nodes); raises BudgetError past ``node_budget`` nodes; ``stop_at`` > 0
    halts once the incumbent reaches it; ``lower_bound`` seeds the incumbent
    size without a witness.
    """
    cdef Py_ssize_t nv = len(vectors)
    if nv == 0:
        return 0, [], 0
    cdef int mwords
    cdef u64 *masks = _build_masks(vectors, k if k > 0 else 1, &mwords)
    cdef int awords = (nv + 63) // 64
    cdef u64 *adj = <u64 *> calloc(nv * awords, sizeof(u64))
    cdef u64 *root = <u64 *> malloc(awords * sizeof(u64))
    cdef int *best = <int *> malloc(nv * sizeof(int))
    cdef int *cur = <int *> malloc(nv * sizeof(int))
    if adj == NULL or root == NULL or best == NULL or cur == NULL:
        free(masks); free(adj); free(root); free(best); free(cur)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef int w
    cdef _Ctx ctx
    try:
        for i in range(nv):
            for j in range(i + 1, nv):
                if _and_popcount(masks + i * mwords, masks + j * mwords, mwords) >= t:
                    adj[i * awords + (j >> 6)] |= (<u64> 1) << (j & 63)
                    adj[j * awords + (i >> 6)] |= (<u64> 1) << (i & 63)
        memset(root, 0, awords * sizeof(u64))
        for i in range(nv):
            root[i >> 6] |= (<u64> 1) << (i & 63)
        ctx.nv = nv
        ctx.awords = awords
        ctx.adj = adj
        ctx.nodes = 0
        ctx.budget = node_budget
        ctx.best_size = lower_bound if lower_bound > 0 else 0
        ctx.stop_at = stop_at
        ctx.best = best
        ctx.best_len = 0
        ctx.cur = cur
        ctx.cur_len = 0
        _expand(&ctx, root)
        witness = sorted(best[idx] for idx in range(ctx.best_len))
        return ctx.best_size, witness, ctx.nodes
    finally:
        free(masks)
        free(adj)
        free(root)
        free(best)
        free(cur)
