"""Pure-Python kernels: pairwise intersection tests and exact clique search.

Multiplicity vectors are packed into Python integers used as bit sets: the
staircase cell (column c, row r) of a k-multiset occupies bit c*k + r, so the
intersection size of two multisets is the popcount of the AND of their masks.
The compiled backend in ``_kernels_c`` implements the same operations, with
identical branching order, so results and node counts match bit for bit.
"""

from __future__ import annotations

import sys
from typing import Sequence

from .errors import BudgetError

DEFAULT_NODE_BUDGET = 20_000_000


def intersection_size(a: Sequence[int], b: Sequence[int]) -> int:
    """Sum of coordinatewise minima of two multiplicity vectors."""
    return sum(x if x < y else y for x, y in zip(a, b))


def staircase_mask(vec: Sequence[int], k: int) -> int:
    """Pack a multiplicity vector into a staircase bit mask (k bits/column)."""
    mask = 0
    base = 0
    for v in vec:
        mask |= ((1 << v) - 1) << base
        base += k
    return mask


def all_pairs_at_least(
    vectors: list[tuple[int, ...]], k: int, t: int
) -> bool:
    """min over unordered distinct pairs of |Fi cap Fj| >= t."""
    masks = [staircase_mask(v, k) for v in vectors]
    for i in range(len(masks)):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            if (mi & masks[j]).bit_count() < t:
                return False
    return True


def all_pairs_at_least_in_region(
    vectors: list[tuple[int, ...]],
    k: int,
    region: Sequence[int],
    t: int,
) -> bool:
    """min over pairs (diagonal included) of |Fi cap Fj cap region| >= t."""
    height = max(k, max(region, default=0))
    masks = [staircase_mask(v, height) for v in vectors]
    rmask = staircase_mask(region, height)
    for i in range(len(masks)):
        mi = masks[i] & rmask
        for j in range(i, len(masks)):
            if (mi & masks[j]).bit_count() < t:
                return False
    return True


def compatible_with_all(
    cand: Sequence[int], vectors: list[tuple[int, ...]], k: int, t: int
) -> bool:
    """True when the candidate t-intersects every listed vector."""
    cmask = staircase_mask(cand, k)
    for v in vectors:
        if (cmask & staircase_mask(v, k)).bit_count() < t:
            return False
    return True


def adjacency_bitsets(vectors: list[tuple[int, ...]], k: int, t: int) -> list[int]:
    """Bit set per vertex of the vertices it t-intersects (self excluded)."""
    masks = [staircase_mask(v, k) for v in vectors]
    nv = len(masks)
    adj = [0] * nv
    for i in range(nv):
        mi = masks[i]
        bit_i = 1 << i
        for j in range(i + 1, nv):
            if (mi & masks[j]).bit_count() >= t:
                adj[i] |= 1 << j
                adj[j] |= bit_i
    return adj


def max_t_clique(
    vectors: list[tuple[int, ...]],
    k: int,
    t: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    stop_at: int = 0,
    lower_bound: int = 0,
) -> tuple[int, list[int], int]:
    """Exact maximum clique in the t-intersection graph of the vectors.

    Branch and bound over the canonical vertex order with a greedy-coloring
    bound. ``stop_at`` > 0 halts as soon as the incumbent reaches that size
    (used with a proven upper bound, so the result stays exact).
    ``lower_bound`` seeds the incumbent size without a witness; if nothing
    larger is found the returned witness list is empty.

    Returns (best_size, witness_indices, nodes). Raises BudgetError when
    more than ``node_budget`` tree nodes would be expanded.
    """
    nv = len(vectors)
    if nv == 0:
        return 0, [], 0
    adj = adjacency_bitsets(vectors, k, t)
    state = [max(0, lower_bound), [], 0]  # best_size, best, nodes

    def expand(cur: list[int], cand: int) -> None:
        state[2] += 1
        if state[2] > node_budget:
            raise BudgetError(
                f"clique search exceeded node budget {node_budget}"
            )
        if stop_at > 0 and state[0] >= stop_at:
            return
        if cand == 0:
            if len(cur) > state[0]:
                state[0] = len(cur)
                state[1] = cur.copy()
            return
        # greedy coloring; order holds vertices by ascending color
        order: list[int] = []
        color_of: list[int] = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append(v)
                color_of.append(color)
                uncolored ^= low
                avail &= ~adj[v]
                avail ^= low
        for idx in range(len(order) - 1, -1, -1):
            if len(cur) + color_of[idx] <= state[0]:
                return
            v = order[idx]
            cand &= ~(1 << v)
            sub = cand & adj[v]
            cur.append(v)
            if sub:
                expand(cur, sub)
            elif len(cur) > state[0]:
                state[0] = len(cur)
                state[1] = cur.copy()
            cur.pop()
            if stop_at > 0 and state[0] >= stop_at:
                return

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 2 * nv + 200))
    try:
        expand([], (1 << nv) - 1)
    finally:
        sys.setrecursionlimit(old_limit)
    return state[0], sorted(state[1]), state[2]
