"""Exact extremal bounds for t-intersecting families.

Everything here is plain integer arithmetic on binomial coefficients
(``math.comb``), so the values feed equality assertions directly. The
central quantity is the complete-intersection-theorem function

    AK(n, k, t) = max_i |A(n, k, t, i)|,
    A(n, k, t, i) = { A in [n] choose k : |A cap [t+2i]| >= t+i },

which is the exact maximum size of a t-intersecting family of k-subsets of
[n]. A t-intersecting family of k-multisets of [n] is bounded by the same
function on the lifted ground set of n+k-1 points, which is what
:func:`multiset_bound` evaluates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from .errors import ParameterError

BOUND_CSV_HEADER = "n,k,t,star,ak_set,i_star"


class AKValue(NamedTuple):
    """AK maximum together with the smallest index attaining it."""

    value: int
    i_star: int


def ak_family_size(n: int, k: int, t: int, i: int) -> int:
    """|A(n, k, t, i)| by closed summation.

    Splits each k-subset by its overlap j with the window [t+2i]:
    sum over j >= t+i of C(t+2i, j) * C(n-t-2i, k-j). The sum is gated on
    an exhaustive-enumeration oracle in the test suite before use.
    """
    if not 0 <= t <= k <= n:
        raise ParameterError(f"need 0 <= t <= k <= n, got {(n, k, t)}")
    if i < 0:
        raise ParameterError("need i >= 0")
    if t + 2 * i > n:
        raise ParameterError(f"window t+2i={t + 2 * i} exceeds n={n}")
    window = t + 2 * i
    total = 0
    for j in range(t + i, min(window, k) + 1):
        total += comb(window, j) * comb(n - window, k - j)
    return total


def ak(n: int, k: int, t: int) -> AKValue:
    """Maximize |A(n, k, t, i)| over all admissible i.

    i ranges over i >= 0 with t+2i <= n and t+i <= k; ties break toward the
    smaller i so reports and constructions are deterministic.
    """
    if not 1 <= t <= k <= n:
        raise ParameterError(f"need 1 <= t <= k <= n, got {(n, k, t)}")
    best = AKValue(-1, -1)
    i = 0
    while t + 2 * i <= n and t + i <= k:
        size = ak_family_size(n, k, t, i)
        if size > best.value:
            best = AKValue(size, i)
        i += 1
    return best


def star_bound(n: int, k: int, t: int) -> int:
    """Size of a star: all k-multisets of [n] over one fixed t-multiset."""
    if not 1 <= t <= k:
        raise ParameterError(f"need 1 <= t <= k, got {(k, t)}")
    if n < 1:
        raise ParameterError("need n >= 1")
    return comb(n + k - t - 1, k - t)


def multiset_bound(n: int, k: int, t: int) -> int:
    """AK(n+k-1, k, t): the exact maximum for t-intersecting k-multisets.

    The value is a proven bound only for n >= 2k-t; outside that range it
    is still computed, and :func:`multiset_bound_proven` (or the ``proven``
    field of :func:`bound_report`) flags it as conjectural territory.
    """
    if not 1 <= t <= k:
        raise ParameterError(f"need 1 <= t <= k, got {(k, t)}")
    if n < 1:
        raise ParameterError("need n >= 1")
    return ak(n + k - 1, k, t).value


def multiset_bound_proven(n: int, k: int, t: int) -> bool:
    """Whether multiset_bound(n, k, t) is a proven bound (n >= 2k-t)."""
    return n >= 2 * k - t


def mp_threshold(n: int, k: int, t: int) -> bool:
    """True when n >= t(k-t)+2, the regime where the star is optimal."""
    if not 1 <= t <= k:
        raise ParameterError(f"need 1 <= t <= k, got {(k, t)}")
    return n >= t * (k - t) + 2


def lifted_star_threshold(n: int, k: int, t: int) -> bool:
    """True when n+k-1 >= (t+1)(k-t+1), star optimality on the lifted set.

    Algebraically identical to :func:`mp_threshold`; both are exposed so
    the identity can be asserted rather than assumed.
    """
    if not 1 <= t <= k:
        raise ParameterError(f"need 1 <= t <= k, got {(k, t)}")
    return n + k - 1 >= (t + 1) * (k - t + 1)


@dataclass(frozen=True)
class BoundReport:
    """Star and AK values for one (n, k, t), plus the per-i breakdown."""

    n: int
    k: int
    t: int
    star: int
    ak_set: int
    i_star: int
    per_i: tuple[tuple[int, int], ...]
    proven: bool

    def csv_row(self) -> str:
        return f"{self.n},{self.k},{self.t},{self.star},{self.ak_set},{self.i_star}"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "t": self.t,
            "star": self.star,
            "ak_set": self.ak_set,
            "i_star": self.i_star,
            "per_i": [list(pair) for pair in self.per_i],
            "proven": self.proven,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def bound_report(n: int, k: int, t: int) -> BoundReport:
    """Evaluate star and AK bounds on the lifted ground set n+k-1."""
    lifted = n + k - 1
    per_i = []
    i = 0
    while t + 2 * i <= lifted and t + i <= k:
        per_i.append((i, ak_family_size(lifted, k, t, i)))
        i += 1
    value, i_star = ak(lifted, k, t)
    return BoundReport(
        n=n,
        k=k,
        t=t,
        star=star_bound(n, k, t),
        ak_set=value,
        i_star=i_star,
        per_i=tuple(per_i),
        proven=multiset_bound_proven(n, k, t),
    )
