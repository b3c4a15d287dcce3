"""Integer simplicial homology via boundary matrices and Smith normal form.

Everything runs over arbitrary-precision integers so torsion is detected
exactly.  The reduction keeps the matrix sparse and always pivots on a
smallest-magnitude entry (unit entries first), which is what makes the
desk-scale complexes in this package cheap to certify.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .complexes import SimplicialComplex
from .errors import DimensionOutOfRange


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integer homology: one Betti number and one torsion list per
    dimension 0..dim(L).  Torsion lists are in divisibility order."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.betti) - 1

    def has_torsion(self) -> bool:
        return any(self.torsion)


def boundary_matrix(L: SimplicialComplex, i: int) -> list[list[int]]:
    """Dense matrix of the boundary map from i-faces to (i-1)-faces under
    the canonical face ordering; entries are 0 or (-1)^j."""
    if not 1 <= i <= L.dim:
        raise DimensionOutOfRange(f"boundary dimension {i} outside 1..{L.dim}")
    rows = len(L.faces[i - 1])
    matrix = [[0] * len(L.faces[i]) for _ in range(rows)]
    for r, c, v in _boundary_entries(L, i):
        matrix[r][c] = v
    return matrix


def _boundary_entries(L: SimplicialComplex, i: int):
    row_of = {face: r for r, face in enumerate(L.faces[i - 1])}
    for c, face in enumerate(L.faces[i]):
        for j in range(len(face)):
            yield row_of[face[:j] + face[j + 1 :]], c, (-1) ** j


def smith_invariant_factors(entries) -> list[int]:
    """Nonzero invariant factors (positive, in divisibility order) of the
    sparse integer matrix given as (row, col, value) triples.

    Textbook diagonalization with partial pivoting on a smallest nonzero
    entry: unit pivots are consumed first (they never create fractions or
    growth), then the residual core is reduced with gcd steps.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    units: list[tuple[int, int]] = []
    for r, c, v in entries:
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, set()).add(r)
            if v in (1, -1):
                units.append((r, c))

    diag: list[int] = []

    def detach_row(r: int) -> dict[int, int]:
        row = rows.pop(r)
        for c in row:
            members = cols[c]
            members.discard(r)
            if not members:
                del cols[c]
        return row

    def add_multiple(r: int, pivot_row: dict[int, int], q: int) -> None:
        # row_r -= q * pivot_row
        row = rows[r]
        for c, v in pivot_row.items():
            new = row.get(c, 0) - q * v
            if new:
                row[c] = new
                cols.setdefault(c, set()).add(r)
                if new in (1, -1):
                    units.append((r, c))
            elif c in row:
                del row[c]
                members = cols[c]
                members.discard(r)
                if not members:
                    del cols[c]
        if not row:
            del rows[r]

    def eliminate_unit(r: int, c: int) -> None:
        pivot_row = detach_row(r)
        v = pivot_row[c]
        for r2 in list(cols.get(c, ())):
            add_multiple(r2, pivot_row, rows[r2][c] * v)
        diag.append(1)

    # phase 1: unit pivots, cheapest fill first among a few candidates
    while units:
        batch: list[tuple[int, int, int]] = []
        while units and len(batch) < 8:
            r, c = units.pop()
            v = rows.get(r, {}).get(c, 0)
            if v in (1, -1):
                fill = (len(rows[r]) - 1) * (len(cols[c]) - 1)
                batch.append((fill, r, c))
        if not batch:
            continue
        batch.sort()
        _, r, c = batch[0]
        units.extend((r2, c2) for _, r2, c2 in batch[1:])
        eliminate_unit(r, c)

    # phase 2: residual core, smallest-entry pivoting with gcd reduction
    while rows:
        best = None
        for r, row in rows.items():
            for c, v in row.items():
                key = (abs(v), (len(row) - 1) * (len(cols[c]) - 1))
                if best is None or key < best[0]:
                    best = (key, r, c)
        _, r, c = best
        v = rows[r][c]
        if abs(v) == 1:
            eliminate_unit(r, c)
            continue
        pivot_row = dict(rows[r])
        dirty = False
        for r2 in list(cols[c]):
            if r2 == r:
                continue
            q = rows[r2][c] // v
            if q:
                add_multiple(r2, pivot_row, q)
            if rows.get(r2, {}).get(c, 0):
                dirty = True
        if dirty:
            continue
        # column is clear; clearing the row by column operations only
        # touches the pivot row, so remainders stay in place
        row = rows[r]
        for c2 in list(row):
            if c2 == c:
                continue
            rem = row[c2] % v
            if rem:
                row[c2] = rem
                dirty = True
            else:
                del row[c2]
                members = cols[c2]
                members.discard(r)
                if not members:
                    del cols[c2]
        if dirty:
            continue
        detach_row(r)
        diag.append(abs(v))

    return _divisibility_order(diag)


def _divisibility_order(values: list[int]) -> list[int]:
    """Fix a diagonal multiset into the unique divisibility chain by
    repeatedly replacing pairs with (gcd, lcm); diag(a, b) is unimodularly
    equivalent to diag(gcd, lcm) so the multiset of factors is preserved."""
    ones = sum(1 for d in values if d == 1)
    ds = sorted(d for d in values if d > 1)
    changed = True
    while changed:
        changed = False
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                if ds[j] % ds[i]:
                    g = gcd(ds[i], ds[j])
                    ds[i], ds[j] = g, ds[i] // g * ds[j]
                    changed = True
        ds.sort()
    return [1] * ones + ds


_profile_cache: dict[SimplicialComplex, HomologyProfile] = {}
_ghs_cache: dict[SimplicialComplex, bool] = {}


def reduced_homology(L: SimplicialComplex) -> HomologyProfile:
    """Reduced integer homology from Smith normal forms of all boundary
    matrices, including the augmentation map to the empty face.

    The empty complex gets the empty profile (its lone reduced homology
    group sits in dimension -1 and is not listed).
    """
    cached = _profile_cache.get(L)
    if cached is not None:
        return cached
    n = L.dim
    if n < 0:
        profile = HomologyProfile((), ())
    else:
        counts = [len(b) for b in L.faces]
        ranks = [0] * (n + 2)
        ranks[0] = 1 if counts[0] else 0
        torsion: list[tuple[int, ...]] = [()] * (n + 1)
        for i in range(1, n + 1):
            factors = smith_invariant_factors(_boundary_entries(L, i))
            ranks[i] = len(factors)
            torsion[i - 1] = tuple(d for d in factors if d > 1)
        betti = tuple(counts[i] - ranks[i] - ranks[i + 1] for i in range(n + 1))
        profile = HomologyProfile(betti, tuple(torsion))
    _profile_cache[L] = profile
    return profile


def is_homology_sphere(L: SimplicialComplex) -> bool:
    """True iff the reduced homology matches the sphere of dimension
    dim(L): free of rank 1 on top, zero elsewhere, no torsion.  The empty
    complex counts as the (-1)-sphere."""
    n = L.dim
    if n < 0:
        return True
    profile = reduced_homology(L)
    if profile.has_torsion():
        return False
    return profile.betti == (0,) * n + (1,)


def is_generalized_homology_sphere(L: SimplicialComplex) -> bool:
    """Homology sphere whose every face link is again a homology sphere of
    the complementary dimension (checked via iterated vertex links, with
    profiles memoized by canonical storage)."""
    cached = _ghs_cache.get(L)
    if cached is not None:
        return cached
    result = _ghs(L)
    _ghs_cache[L] = result
    return result


def _ghs(L: SimplicialComplex) -> bool:
    n = L.dim
    if n < 0:
        return True
    if not is_homology_sphere(L):
        return False
    for v in range(L.vertex_count):
        lk = L.link(v)
        if lk.dim != n - 1 or not is_generalized_homology_sphere(lk):
            return False
    return True
