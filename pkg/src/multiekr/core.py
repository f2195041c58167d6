"""Multisets over a finite ground set and families of k-multisets.

A multiset F of the columns 1..n is stored as its multiplicity vector
(m(1,F), ..., m(n,F)); the cardinality |F| is the sum of multiplicities.
Columns are numbered from 1 in every public signature, matching the usual
mathematical convention for the ground set [n].

Equivalently, F is the staircase region {(i, j) : 1 <= j <= m(i,F)} inside
the rectangle with n columns and ell rows; the staircase view is derived on
demand and never stored (one source of truth).
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Union

from . import kernels
from .errors import DimensionError, FormatError, ParameterError


class StaircaseCell(NamedTuple):
    """One unit cell (column, row) of the rectangle view, both 1-based."""

    column: int
    row: int


class Multiset:
    """An immutable multiset of the columns 1..n with total cardinality k.

    Instances hash and compare by their multiplicity vector; the ordering is
    lexicographic on that vector, which is the canonical order used for
    family members everywhere in this package.
    """

    __slots__ = ("mult", "k")

    mult: tuple[int, ...]
    k: int

    def __init__(self, mult: Iterable[int]):
        vec = tuple(int(v) for v in mult)
        if not vec:
            raise ParameterError("a multiset needs at least one column")
        if any(v < 0 for v in vec):
            raise ParameterError(f"negative multiplicity in {vec!r}")
        object.__setattr__(self, "mult", vec)
        object.__setattr__(self, "k", sum(vec))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Multiset is immutable")

    @property
    def n(self) -> int:
        return len(self.mult)

    def __len__(self) -> int:
        return self.k

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Multiset) and self.mult == other.mult

    def __hash__(self) -> int:
        return hash(self.mult)

    def __lt__(self, other: "Multiset") -> bool:
        return self.mult < other.mult

    def __le__(self, other: "Multiset") -> bool:
        return self.mult <= other.mult

    def __repr__(self) -> str:
        return f"Multiset({self.mult!r})"

    def multiplicity(self, column: int) -> int:
        """Return m(column, F) for a 1-based column index."""
        if not 1 <= column <= self.n:
            raise ParameterError(f"column {column} outside 1..{self.n}")
        return self.mult[column - 1]

    def support(self) -> frozenset[int]:
        """Columns that appear at least once."""
        return frozenset(i + 1 for i, v in enumerate(self.mult) if v > 0)

    def contains(self, other: "Multiset") -> bool:
        """True when every multiplicity of ``other`` fits under this one."""
        _check_same_n(self, other)
        return all(a >= b for a, b in zip(self.mult, other.mult))

    def cells(self) -> frozenset[StaircaseCell]:
        """The staircase view: all cells (i, j) with j <= m(i, F)."""
        return frozenset(
            StaircaseCell(i + 1, j)
            for i, v in enumerate(self.mult)
            for j in range(1, v + 1)
        )

    @classmethod
    def from_cells(cls, n: int, cells: Iterable[StaircaseCell]) -> "Multiset":
        """Rebuild a multiset from staircase cells; rejects non-staircases."""
        heights = [0] * n
        counts = [0] * n
        for col, row in cells:
            if not (1 <= col <= n and row >= 1):
                raise ParameterError(f"cell ({col}, {row}) outside the rectangle")
            heights[col - 1] = max(heights[col - 1], row)
            counts[col - 1] += 1
        if heights != counts:
            raise ParameterError("cells do not form a staircase region")
        return cls(heights)


def rectangle(n: int, height: int) -> Multiset:
    """The full rectangle with n columns and the given uniform height."""
    if n < 1 or height < 0:
        raise ParameterError("rectangle needs n >= 1 and height >= 0")
    return Multiset((height,) * n)


def first_row(n: int) -> Multiset:
    """The bottom row of the rectangle: every column with multiplicity 1."""
    return rectangle(n, 1)


def _check_same_n(a: Multiset, b: Multiset) -> None:
    if a.n != b.n:
        raise DimensionError(f"ground sets differ: n={a.n} vs n={b.n}")


def intersect(f: Multiset, g: Multiset) -> Multiset:
    """Coordinatewise minimum of the two multiplicity vectors."""
    _check_same_n(f, g)
    return Multiset(min(a, b) for a, b in zip(f.mult, g.mult))


def intersection_size(f: Multiset, g: Multiset) -> int:
    """|f intersect g| without materializing the intersection."""
    _check_same_n(f, g)
    return kernels.intersection_size(f.mult, g.mult)


def l1_distance(f: Multiset, g: Multiset) -> int:
    """Sum of |m(i,F) - m(i,G)|.

    For two multisets of equal cardinality k this ties to the intersection
    by |F cap G| = k - d/2.
    """
    _check_same_n(f, g)
    return sum(abs(a - b) for a, b in zip(f.mult, g.mult))


def enumerate_multisets(
    n: int, k: int, cap: Optional[int] = None
) -> Iterator[Multiset]:
    """Yield every k-multiset of [n] exactly once, in canonical order.

    Canonical order is lexicographic on multiplicity vectors. With ``cap``
    set, only multisets whose every multiplicity is <= cap are produced;
    cap=1 reduces to plain k-subsets. The stream is empty when the
    constraints cannot be met.
    """
    if n < 1:
        raise ParameterError("need n >= 1")
    if k < 0:
        raise ParameterError("need k >= 0")
    if cap is not None and cap < 1:
        raise ParameterError("cap must be >= 1 when given")
    top = k if cap is None else min(cap, k)
    vec = [0] * n

    def rec(pos: int, remaining: int) -> Iterator[Multiset]:
        if pos == n - 1:
            if remaining <= top:
                vec[pos] = remaining
                yield Multiset(vec)
                vec[pos] = 0
            return
        slots_after = n - pos - 1
        low = max(0, remaining - top * slots_after)
        high = min(top, remaining)
        for v in range(low, high + 1):
            vec[pos] = v
            yield from rec(pos + 1, remaining - v)
        vec[pos] = 0

    yield from rec(0, k)


def count_multisets(n: int, k: int, cap: Optional[int] = None) -> int:
    """Number of k-multisets of [n], honoring an optional height cap."""
    if n < 1 or k < 0:
        raise ParameterError("need n >= 1 and k >= 0")
    if cap is not None and cap < 1:
        raise ParameterError("cap must be >= 1 when given")
    top = k if cap is None else min(cap, k)
    # counts[r] = number of ways to reach total r with columns seen so far
    counts = [0] * (k + 1)
    counts[0] = 1
    for _ in range(n):
        new = [0] * (k + 1)
        for r, c in enumerate(counts):
            if c:
                for v in range(0, min(top, k - r) + 1):
                    new[r + v] += c
        counts = new
    return counts[k]


class Family:
    """A duplicate-free, canonically ordered collection of k-multisets.

    All members share the same (n, k); ``height_cap`` optionally bounds
    every multiplicity. Equal families have identical member sequences, so
    they also serialize identically.
    """

    __slots__ = ("n", "k", "members", "height_cap", "_member_set")

    n: int
    k: int
    members: tuple[Multiset, ...]
    height_cap: Optional[int]

    def __init__(
        self,
        members: Iterable[Union[Multiset, Sequence[int]]],
        n: Optional[int] = None,
        k: Optional[int] = None,
        height_cap: Optional[int] = None,
    ):
        normalized = tuple(
            m if isinstance(m, Multiset) else Multiset(m) for m in members
        )
        if normalized:
            got_n, got_k = normalized[0].n, normalized[0].k
            if n is not None and n != got_n:
                raise DimensionError(f"declared n={n} but members have n={got_n}")
            if k is not None and k != got_k:
                raise ParameterError(f"declared k={k} but members have k={got_k}")
            n, k = got_n, got_k
        if n is None or k is None:
            raise ParameterError("an empty family needs explicit n and k")
        if n < 1 or k < 0:
            raise ParameterError("need n >= 1 and k >= 0")
        for m in normalized:
            if m.n != n:
                raise DimensionError("members mix different ground sets")
            if m.k != k:
                raise ParameterError("members mix different cardinalities")
        if height_cap is not None:
            if height_cap < 1:
                raise ParameterError("height_cap must be >= 1 when given")
            for m in normalized:
                if max(m.mult) > height_cap:
                    raise ParameterError(
                        f"member {m.mult!r} exceeds height cap {height_cap}"
                    )
        ordered = tuple(sorted(set(normalized)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "members", ordered)
        object.__setattr__(self, "height_cap", height_cap)
        object.__setattr__(self, "_member_set", frozenset(m.mult for m in ordered))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Family is immutable")

    @classmethod
    def empty(
        cls, n: int, k: int, height_cap: Optional[int] = None
    ) -> "Family":
        return cls((), n=n, k=k, height_cap=height_cap)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Multiset]:
        return iter(self.members)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, Multiset):
            return item.mult in self._member_set
        if isinstance(item, tuple):
            return item in self._member_set
        return False

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Family)
            and self.n == other.n
            and self.k == other.k
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.members))

    def __repr__(self) -> str:
        return f"Family(n={self.n}, k={self.k}, size={len(self.members)})"

    def mult_vectors(self) -> list[tuple[int, ...]]:
        """Raw multiplicity vectors, in canonical order."""
        return [m.mult for m in self.members]

    def max_height(self) -> int:
        """Largest multiplicity over all members and columns; 0 if empty."""
        return max((max(m.mult) for m in self.members), default=0)

    def with_members(
        self, members: Iterable[Union[Multiset, Sequence[int]]]
    ) -> "Family":
        """Same (n, k, cap), different member list."""
        return Family(members, n=self.n, k=self.k, height_cap=self.height_cap)

    # --- interchange format ------------------------------------------------
    # header line "n=<n> k=<k>", then one member per line as comma-separated
    # multiplicities, in canonical order.

    def to_text(self) -> str:
        lines = [f"n={self.n} k={self.k}"]
        lines.extend(",".join(str(v) for v in m.mult) for m in self.members)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, height_cap: Optional[int] = None) -> "Family":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise FormatError("empty family file")
        header = re.fullmatch(r"n=(\d+)\s+k=(\d+)", lines[0])
        if header is None:
            raise FormatError(f"bad header line: {lines[0]!r}")
        n, k = int(header.group(1)), int(header.group(2))
        members = []
        for ln in lines[1:]:
            try:
                vec = tuple(int(part) for part in ln.split(","))
            except ValueError as exc:
                raise FormatError(f"bad member line: {ln!r}") from exc
            members.append(vec)
        return cls(members, n=n, k=k, height_cap=height_cap)

    def save(self, path: str) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(self.to_text())

    @classmethod
    def load(cls, path: str, height_cap: Optional[int] = None) -> "Family":
        with open(path, "r", encoding="ascii") as fh:
            return cls.from_text(fh.read(), height_cap=height_cap)


def max_height(family: Family) -> int:
    """Module-level alias for :meth:`Family.max_height`."""
    return family.max_height()


def is_t_intersecting(family: Family, t: int) -> bool:
    """True when |F1 cap F2| >= t for every ordered pair, F1 = F2 included.

    The diagonal pairs force t <= k for nonempty families; the empty family
    is vacuously t-intersecting and every family is 0-intersecting.
    """
    if t < 0:
        raise ParameterError("need t >= 0")
    if t == 0 or len(family) == 0:
        return True
    if family.k < t:
        return False
    return kernels.all_pairs_at_least(family.mult_vectors(), family.k, t)


def is_t_kernel(family: Family, region: Multiset, t: int) -> bool:
    """True when |F1 cap F2 cap region| >= t for every pair, diagonal included.

    The region's own cardinality is unconstrained; it only has to live on
    the same ground set.
    """
    if t < 0:
        raise ParameterError("need t >= 0")
    if region.n != family.n:
        raise DimensionError(
            f"region has n={region.n}, family has n={family.n}"
        )
    if t == 0 or len(family) == 0:
        return True
    return kernels.all_pairs_at_least_in_region(
        family.mult_vectors(), family.k, region.mult, t
    )


def subfamily_containing(family: Family, region: Multiset) -> Family:
    """Members that contain ``region`` coordinatewise."""
    if region.n != family.n:
        raise DimensionError(
            f"region has n={region.n}, family has n={family.n}"
        )
    keep = [m for m in family if m.contains(region)]
    return family.with_members(keep)
