"""Shifting and compression operators on families of k-multisets.

Three kinds of operators live here:

* column-exchange shifting ``shift_c`` (swap the whole excess of a higher
  column into a lower one) and its one-unit variant ``shift_c_prime``;
* the two-column balancing operator ``psi`` built from an interval-system
  centering ``phi_center``, iterated to a fixed point by ``down_compress``;
* the kernel-reduction operator ``kernel_shift`` / ``reduce_kernel`` that
  peels a staircase t-kernel down to the first row one cell at a time.

``down_compress`` is the map certified by the compression theorem: it
preserves the family size, never increases the maximum height, and forces
the first row of the rectangle to be a t-kernel. Termination is certified
by the strictly decreasing integer potential of :func:`potential`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from . import kernels
from .core import Family, Multiset, enumerate_multisets, first_row, is_t_intersecting, is_t_kernel
from .errors import DimensionError, ParameterError, PreconditionError

# a kernel candidate is just a multiset playing the role of the region T
KernelCandidate = Multiset


# --------------------------------------------------------------------------
# interval systems on the line {1, ..., 2k}


@dataclass(frozen=True)
class IntervalFamily:
    """Equal-length subintervals of {1, ..., 2k}, held by their starts.

    The family is the image of a two-column slice of a multiset family
    under the fold that lays column i top-down onto {1..k} and column j
    bottom-up onto {k+1..2k}. Starts are kept deduplicated and ascending.
    """

    k: int
    p: int
    starts: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError("need k >= 1")
        if not 1 <= self.p <= 2 * self.k:
            raise ParameterError(f"interval length {self.p} outside 1..{2 * self.k}")
        starts = tuple(sorted(set(int(s) for s in self.starts)))
        if not starts:
            raise ParameterError("an interval family needs at least one interval")
        if starts[0] < 1 or starts[-1] + self.p - 1 > 2 * self.k:
            raise ParameterError(
                f"intervals of length {self.p} at {starts} leave 1..{2 * self.k}"
            )
        object.__setattr__(self, "starts", starts)

    def __len__(self) -> int:
        return len(self.starts)

    def intervals(self) -> list[tuple[int, int]]:
        """(first, last) endpoints, inclusive, in start order."""
        return [(s, s + self.p - 1) for s in self.starts]

    def is_complete_block(self) -> bool:
        """True when the starts are consecutive integers (class-I family)."""
        return self.starts[-1] - self.starts[0] + 1 == len(self.starts)


def phi_center(fam: IntervalFamily) -> IntervalFamily:
    """Push an interval family to the middle of {1, ..., 2k}.

    The image depends only on the count r and common length p: it is the r
    consecutive p-intervals whose union is the centered interval of size
    p+r-1, i.e. {k - ceil(w/2) + 1, ..., k + floor(w/2)} for w = p+r-1.
    On a complete block (all p-subintervals of some Y) this centers Y; it
    is idempotent, and a centered family comes back unchanged.
    """
    r = len(fam.starts)
    width = fam.p + r - 1
    start = fam.k - (width + 1) // 2 + 1
    return IntervalFamily(fam.k, fam.p, tuple(range(start, start + r)))


def interval_distance(fam1: IntervalFamily, fam2: IntervalFamily) -> int:
    """Smallest pairwise overlap between one interval of each family."""
    if fam1.k != fam2.k:
        raise DimensionError(f"ambient lines differ: k={fam1.k} vs k={fam2.k}")
    best = None
    for a in fam1.starts:
        for b in fam2.starts:
            overlap = min(a + fam1.p, b + fam2.p) - max(a, b)
            size = overlap if overlap > 0 else 0
            if best is None or size < best:
                best = size
    assert best is not None
    return best


# --------------------------------------------------------------------------
# two-column balancing


class SliceKey(NamedTuple):
    """Identifies one slice of a family: two columns plus the rest fixed.

    ``fixed`` lists the multiplicities of every column except i and j, in
    column order; ``s`` is the forced value m(i,F) + m(j,F) on the slice.
    """

    i: int
    j: int
    fixed: tuple[int, ...]
    s: int


def slice_decomposition(
    family: Family, i: int, j: int
) -> dict[SliceKey, list[tuple[int, int]]]:
    """Group members by their multiplicities outside columns i and j.

    Returns, per slice, the list of (m(i,F), m(j,F)) pairs in member order.
    """
    _check_columns(family.n, i, j)
    slices: dict[SliceKey, list[tuple[int, int]]] = {}
    for vec in family.mult_vectors():
        fixed = tuple(v for idx, v in enumerate(vec) if idx not in (i - 1, j - 1))
        pair = (vec[i - 1], vec[j - 1])
        key = SliceKey(i, j, fixed, pair[0] + pair[1])
        slices.setdefault(key, []).append(pair)
    return slices


def _check_columns(n: int, i: int, j: int) -> None:
    if not (1 <= i <= n and 1 <= j <= n):
        raise ParameterError(f"columns {(i, j)} outside 1..{n}")
    if i == j:
        raise ParameterError("need two distinct columns")


def _rebuild(n: int, i: int, j: int, fixed: tuple[int, ...], pair: tuple[int, int]):
    vec = [0] * n
    pos = 0
    for idx in range(n):
        if idx == i - 1:
            vec[idx] = pair[0]
        elif idx == j - 1:
            vec[idx] = pair[1]
        else:
            vec[idx] = fixed[pos]
            pos += 1
    return tuple(vec)


def psi(family: Family, i: int, j: int) -> Family:
    """Balance columns i and j of every slice of the family.

    Each slice is folded onto the line {1, ..., 2k} (column i top-down onto
    {1..k}, column j bottom-up onto {k+1..2k}), centered with
    :func:`phi_center`, and folded back. Member count is preserved slice by
    slice, and so is t-intersection; ties in balance land on column i.
    """
    _check_columns(family.n, i, j)
    k = family.k
    new_members = []
    for key, pairs in slice_decomposition(family, i, j).items():
        s = key.s
        if s == 0:
            # both columns empty on this slice; nothing to balance
            new_members.append(_rebuild(family.n, i, j, key.fixed, (0, 0)))
            continue
        starts = tuple(k - mi + 1 for mi, _ in pairs)
        centered = phi_center(IntervalFamily(k, s, starts))
        for a in centered.starts:
            mi = k - a + 1
            new_members.append(_rebuild(family.n, i, j, key.fixed, (mi, s - mi)))
    assert len(new_members) == len(family)
    return family.with_members(new_members)


def potential(family: Family) -> int:
    """Integer termination measure that every changing psi strictly lowers.

    Sum over members of |A| * n * k^2 * sum_i m(i,F)^2 + sum_i i * m(i,F),
    with 1-based column weights. The quadratic term drops whenever a slice
    becomes more balanced; the linear term breaks ties toward low columns
    and is dominated by the k^2 factor, so the total strictly decreases.
    """
    size = len(family)
    n, k = family.n, family.k
    scale = size * n * k * k
    total = 0
    for vec in family.mult_vectors():
        square = sum(v * v for v in vec)
        linear = sum((idx + 1) * v for idx, v in enumerate(vec))
        total += scale * square + linear
    return total


@dataclass(frozen=True)
class CompressionStep:
    """One changing psi application inside down_compress."""

    step: int
    i: int
    j: int
    potential: int
    size: int
    kernel_ok: bool


def down_compress(
    family: Family,
    t: int,
    on_step: Optional[Callable[[CompressionStep], None]] = None,
) -> Family:
    """Iterate psi over all column pairs i < j until a full sweep is silent.

    Requires a t-intersecting input with n >= 2k - t (the first-row kernel
    guarantee is not claimed below that, so the operation refuses rather
    than silently weakening its contract). The fixed point has the same
    size, no larger maximum height, and the first row as a t-kernel.

    ``on_step`` receives a :class:`CompressionStep` after every psi
    application that changed the family.
    """
    if t < 1:
        raise ParameterError("need t >= 1")
    n, k = family.n, family.k
    if n < 2 * k - t:
        raise PreconditionError(
            f"down_compress needs n >= 2k - t; got n={n}, k={k}, t={t}"
        )
    if not is_t_intersecting(family, t):
        raise PreconditionError("input family is not t-intersecting")
    row = first_row(n)
    current = family
    step = 0
    changed = True
    while changed:
        changed = False
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                candidate = psi(current, i, j)
                if candidate != current:
                    current = candidate
                    step += 1
                    if on_step is not None:
                        on_step(
                            CompressionStep(
                                step=step,
                                i=i,
                                j=j,
                                potential=potential(current),
                                size=len(current),
                                kernel_ok=is_t_kernel(current, row, t),
                            )
                        )
                    changed = True
                    break
            if changed:
                break
    return current


# --------------------------------------------------------------------------
# saturation


def saturate(family: Family, t: int) -> Family:
    """Greedily extend to a maximal t-intersecting family.

    Candidates are tried in canonical order (honoring the family's height
    cap) and added whenever they keep the family t-intersecting. The result
    contains the input and admits no further k-multiset.
    """
    if t < 0:
        raise ParameterError("need t >= 0")
    if not is_t_intersecting(family, t):
        raise PreconditionError("input family is not t-intersecting")
    n, k = family.n, family.k
    if k < t:
        # no k-multiset t-intersects itself, so nothing can ever be added
        return family
    vectors = family.mult_vectors()
    present = set(vectors)
    for cand in enumerate_multisets(n, k, family.height_cap):
        vec = cand.mult
        if vec in present:
            continue
        if kernels.compatible_with_all(vec, vectors, k, t):
            vectors.append(vec)
            present.add(vec)
    return family.with_members(vectors)


# --------------------------------------------------------------------------
# kernel reduction


def kernel_shift(family: Family, i: int, s: int, j: int) -> Family:
    """Move rows s..m(i,F) of column i to the bottom of an empty column j.

    Acts on every member F with m(j,F) = 0 and m(i,F) >= s, producing F'
    with m(i,F') = s-1 and m(j,F') = m(i,F) - s + 1, unless F' is already
    present in the input snapshot. Size is always preserved.
    """
    _check_columns(family.n, i, j)
    if not 1 <= s <= max(family.k, 1):
        raise ParameterError(f"need 1 <= s <= k, got s={s}, k={family.k}")
    out = []
    for vec in family.mult_vectors():
        if vec[j - 1] == 0 and vec[i - 1] >= s:
            moved = list(vec)
            moved[i - 1] = s - 1
            moved[j - 1] = vec[i - 1] - s + 1
            candidate = tuple(moved)
            out.append(candidate if candidate not in family else vec)
        else:
            out.append(vec)
    assert len(set(out)) == len(out), "kernel_shift produced a collision"
    return family.with_members(out)


def reduce_kernel(
    family: Family, region: Multiset, t: int
) -> tuple[Family, Multiset]:
    """Shrink a staircase t-kernel by one cell while rearranging the family.

    ``region`` must be a t-kernel of the family that covers the whole first
    row and has some column of height >= 2; the operation picks the first
    such column i, runs kernel_shift(i, m(i,region), j) for every other
    column j in order, and removes the top cell of column i from the
    kernel. The returned family has the same size and the returned region
    is a t-kernel for it. Iterating lands on the first row.
    """
    if region.n != family.n:
        raise DimensionError("kernel region lives on a different ground set")
    n, k = family.n, family.k
    if n < 2 * k - t:
        raise PreconditionError(
            f"reduce_kernel needs n >= 2k - t; got n={n}, k={k}, t={t}"
        )
    if any(v < 1 for v in region.mult):
        raise PreconditionError("kernel region must contain the whole first row")
    if not is_t_kernel(family, region, t):
        raise PreconditionError("region is not a t-kernel of the family")
    tall = [c for c in range(1, n + 1) if region.mult[c - 1] >= 2]
    if not tall:
        raise PreconditionError("kernel region is already the first row")
    i = tall[0]
    s = region.mult[i - 1]
    current = family
    for j in range(1, n + 1):
        if j != i:
            current = kernel_shift(current, i, s, j)
    reduced = list(region.mult)
    reduced[i - 1] -= 1
    return current, Multiset(reduced)


# --------------------------------------------------------------------------
# classic column-exchange shifting


def shift_c(family: Family, i: int, j: int) -> Family:
    """Swap the multiplicities of columns i < j wherever column j is taller.

    A member is replaced by its swapped form unless that form is already in
    the family, so size, t-intersection and any height cap are preserved.
    """
    _check_columns(family.n, i, j)
    if i > j:
        raise ParameterError("shift_c needs i < j")
    out = []
    for vec in family.mult_vectors():
        if vec[j - 1] > vec[i - 1]:
            swapped = list(vec)
            swapped[i - 1], swapped[j - 1] = vec[j - 1], vec[i - 1]
            candidate = tuple(swapped)
            out.append(candidate if candidate not in family else vec)
        else:
            out.append(vec)
    assert len(set(out)) == len(out), "shift_c produced a collision"
    return family.with_members(out)


def shift_c_prime(family: Family, i: int, j: int) -> Family:
    """Move one unit from column j to column i < j wherever j is taller.

    Unlike :func:`shift_c` this does NOT preserve t-intersection in
    general; it exists to exhibit that failure and to test that families
    already fixed under every shift_c are fixed under it as well.
    """
    _check_columns(family.n, i, j)
    if i > j:
        raise ParameterError("shift_c_prime needs i < j")
    out = []
    for vec in family.mult_vectors():
        if vec[j - 1] > vec[i - 1]:
            moved = list(vec)
            moved[i - 1] += 1
            moved[j - 1] -= 1
            candidate = tuple(moved)
            out.append(candidate if candidate not in family else vec)
        else:
            out.append(vec)
    assert len(set(out)) == len(out), "shift_c_prime produced a collision"
    return family.with_members(out)


def shift_c_fixed_point(family: Family) -> Family:
    """Apply shift_c over all pairs i < j until nothing changes."""
    current = family
    changed = True
    while changed:
        changed = False
        for i in range(1, family.n + 1):
            for j in range(i + 1, family.n + 1):
                candidate = shift_c(current, i, j)
                if candidate != current:
                    current = candidate
                    changed = True
    return current


def is_stable(family: Family) -> bool:
    """Check the exchange-closure property of well-shifted families.

    For every member F: if m(i,F) + 1 < m(j,F) for any i != j, then
    F - e_j + e_i must be a member too, and the same with the weak
    inequality m(i,F) + 1 <= m(j,F) whenever i < j.
    """
    n = family.n
    for vec in family.mult_vectors():
        for jcol in range(n):
            vj = vec[jcol]
            if vj == 0:
                continue
            for icol in range(n):
                if icol == jcol:
                    continue
                gap_strict = vec[icol] + 1 < vj
                gap_weak = icol < jcol and vec[icol] + 1 <= vj
                if not (gap_strict or gap_weak):
                    continue
                moved = list(vec)
                moved[icol] += 1
                moved[jcol] -= 1
                if tuple(moved) not in family:
                    return False
    return True
