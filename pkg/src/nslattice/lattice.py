"""Based integral lattices of rational surfaces and exact divisor-class arithmetic.

Three lattice families are built in:

* ``hirzebruch``        -- NS(F_n), basis (C_n, F), Gram [[-n, 1], [1, 0]];
* ``blowup_p2``         -- NS of P^2 blown up at r points, basis (H, E_1..E_r);
* ``blowup_hirzebruch`` -- NS of F_n blown up at r points, basis (C_n, F, E_1..E_r).

Every coefficient, pairing and genus is a plain Python integer, so all
computations are exact at any size.  Values are immutable after construction
and every operation is a pure function of its inputs; the module is safe for
unrestricted concurrent use.
"""

from __future__ import annotations

import operator
import warnings
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from math import isqrt
from typing import Iterator, Sequence

from .errors import (
    DimensionError,
    FamilyError,
    InvalidParameterError,
    LatticeCorruptionError,
)


class Family(str, Enum):
    """The three built-in surface families."""

    HIRZEBRUCH = "hirzebruch"
    BLOWUP_P2 = "blowup_p2"
    BLOWUP_HIRZEBRUCH = "blowup_hirzebruch"


class H0BoundAssumptionWarning(UserWarning):
    """The Riemann-Roch lower bound for h^0 was requested for a class where
    the blind assumption h^0(K - D) = 0 is not certified by the count itself."""


@dataclass(frozen=True)
class DivisorClass:
    """Integer coefficient vector relative to a lattice basis.

    The universal currency of all operations: a class is nothing but its
    coefficients in the fixed basis order of the owning lattice.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        # operator.index rejects floats and other inexact types loudly
        object.__setattr__(
            self, "coeffs", tuple(operator.index(c) for c in self.coeffs)
        )

    def __len__(self) -> int:
        return len(self.coeffs)

    def _match(self, other: "DivisorClass") -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise DimensionError(
                f"coefficient vectors of lengths {len(self.coeffs)} and "
                f"{len(other.coeffs)} cannot be combined"
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._match(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._match(other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> "DivisorClass":
        k = operator.index(k)
        return DivisorClass(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_json_dict(self) -> dict:
        return {"coeffs": list(self.coeffs)}


def divisor_from_json(doc: dict | Sequence[int]) -> DivisorClass:
    """Read a class from ``{"coeffs": [...]}`` or a bare coefficient list."""
    if isinstance(doc, dict):
        doc = doc["coeffs"]
    return DivisorClass(tuple(doc))


@dataclass(frozen=True)
class SurfaceLattice:
    """A based integral lattice with a distinguished canonical class.

    ``gram`` is the symmetric matrix of the intersection pairing on the basis
    named by ``basis_labels``; ``canonical`` holds the coefficients of K.
    For the built-in families the form is unimodular of signature
    (1, rank - 1) and K.K equals 8, 9 - r and 8 - r respectively.
    """

    family: Family
    n: int | None
    r: int | None
    rank: int
    gram: tuple[tuple[int, ...], ...]
    basis_labels: tuple[str, ...]
    canonical: DivisorClass

    def __post_init__(self) -> None:
        if len(self.gram) != self.rank or any(len(row) != self.rank for row in self.gram):
            raise DimensionError("Gram matrix shape does not match the rank")
        for i in range(self.rank):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise LatticeCorruptionError("Gram matrix is not symmetric")
        if len(self.canonical.coeffs) != self.rank:
            raise DimensionError("canonical class length does not match the rank")

    @cached_property
    def _pairs(self) -> tuple[tuple[int, int, int], ...]:
        # nonzero Gram entries; the built-in forms are sparse, so the pairing
        # below runs in O(rank) rather than O(rank^2)
        return tuple(
            (i, j, g)
            for i, row in enumerate(self.gram)
            for j, g in enumerate(row)
            if g != 0
        )

    def _check(self, d: DivisorClass) -> None:
        if len(d.coeffs) != self.rank:
            raise DimensionError(
                f"class of length {len(d.coeffs)} on a lattice of rank {self.rank}"
            )

    def intersect(self, d1: DivisorClass, d2: DivisorClass) -> int:
        """Intersection number D1.D2, bilinear and symmetric."""
        self._check(d1)
        self._check(d2)
        a, b = d1.coeffs, d2.coeffs
        return sum(a[i] * g * b[j] for i, j, g in self._pairs)

    def self_intersection(self, d: DivisorClass) -> int:
        return self.intersect(d, d)

    def canonical_pairing(self, d: DivisorClass) -> int:
        """K.D for the distinguished canonical class K."""
        return self.intersect(self.canonical, d)

    def arithmetic_genus(self, d: DivisorClass) -> int:
        """Adjunction genus p_a(D) = 1 + (D.D + K.D)/2.

        D.D + K.D is even on every even-adjoint lattice; an odd value means
        the Gram data was edited into an inconsistent state and is reported
        as corruption rather than rounded away.
        """
        total = self.self_intersection(d) + self.canonical_pairing(d)
        if total % 2 != 0:
            raise LatticeCorruptionError(
                f"D.D + K.D = {total} is odd; the lattice data is corrupt"
            )
        return 1 + total // 2

    def euler_characteristic(self, d: DivisorClass) -> int:
        """chi(O(D)) = 1 + (D.D - K.D)/2 on a rational surface."""
        total = self.self_intersection(d) - self.canonical_pairing(d)
        if total % 2 != 0:
            raise LatticeCorruptionError(
                f"D.D - K.D = {total} is odd; the lattice data is corrupt"
            )
        return 1 + total // 2

    def h0_lower_bound(self, d: DivisorClass, *, warn_unverified: bool = False) -> int:
        """max(0, chi(O(D))), a lower bound for h^0(D).

        The bound is only valid when D is the class of an effective divisor
        and K - D is not effective.  Neither hypothesis is decidable from the
        class alone, so both are left to the caller; with
        ``warn_unverified=True`` a warning is emitted when chi(K - D) > 0,
        i.e. when the Euler characteristic itself cannot rule out sections
        of K - D.
        """
        chi = self.euler_characteristic(d)
        if warn_unverified and self.euler_characteristic(self.canonical - d) > 0:
            warnings.warn(
                "chi(K - D) > 0: the lower bound assumes h^0(K - D) = 0, "
                "which this computation cannot certify",
                H0BoundAssumptionWarning,
                stacklevel=2,
            )
        return max(0, chi)

    def zero_class(self) -> DivisorClass:
        return DivisorClass((0,) * self.rank)

    def basis_class(self, index: int) -> DivisorClass:
        return DivisorClass(tuple(1 if i == index else 0 for i in range(self.rank)))

    def to_json_dict(self) -> dict:
        doc: dict = {"family": self.family.value}
        if self.n is not None:
            doc["n"] = self.n
        if self.r is not None:
            doc["r"] = self.r
        return doc


def hirzebruch_lattice(n: int) -> SurfaceLattice:
    """NS(F_n): basis (C_n, F) with C_n.C_n = -n, F.F = 0, C_n.F = 1."""
    n = operator.index(n)
    if n < 0:
        raise InvalidParameterError(f"Hirzebruch parameter n must be >= 0, got {n}")
    return SurfaceLattice(
        family=Family.HIRZEBRUCH,
        n=n,
        r=None,
        rank=2,
        gram=((-n, 1), (1, 0)),
        basis_labels=(f"C{n}", "F"),
        canonical=DivisorClass((-2, -(n + 2))),
    )


def blowup_p2_lattice(r: int) -> SurfaceLattice:
    """NS of P^2 blown up at r points: basis (H, E_1..E_r), K = -3H + sum E_i.

    r = 0 gives the rank-one lattice of P^2 itself.
    """
    r = operator.index(r)
    if r < 0:
        raise InvalidParameterError(f"number of blown-up points must be >= 0, got {r}")
    rank = 1 + r
    gram = tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(rank))
        for i in range(rank)
    )
    return SurfaceLattice(
        family=Family.BLOWUP_P2,
        n=None,
        r=r,
        rank=rank,
        gram=gram,
        basis_labels=("H",) + tuple(f"E{i}" for i in range(1, r + 1)),
        canonical=DivisorClass((-3,) + (1,) * r),
    )


def blowup_hirzebruch_lattice(n: int, r: int) -> SurfaceLattice:
    """NS of F_n blown up at r points: Hirzebruch block plus orthogonal E_i.

    r = 0 gives NS(F_n) itself, with the blowup family tag retained.
    """
    n = operator.index(n)
    r = operator.index(r)
    if n < 0:
        raise InvalidParameterError(f"Hirzebruch parameter n must be >= 0, got {n}")
    if r < 0:
        raise InvalidParameterError(f"number of blown-up points must be >= 0, got {r}")
    rank = 2 + r
    head = ((-n, 1), (1, 0))
    gram = tuple(
        tuple(
            head[i][j]
            if i < 2 and j < 2
            else (-1 if i == j else 0)
            for j in range(rank)
        )
        for i in range(rank)
    )
    return SurfaceLattice(
        family=Family.BLOWUP_HIRZEBRUCH,
        n=n,
        r=r,
        rank=rank,
        gram=gram,
        basis_labels=(f"C{n}", "F") + tuple(f"E{i}" for i in range(1, r + 1)),
        canonical=DivisorClass((-2, -(n + 2)) + (1,) * r),
    )


def make_lattice(family: Family | str, n: int | None = None, r: int | None = None) -> SurfaceLattice:
    """Build a lattice from a family descriptor; deterministic for equal inputs."""
    fam = Family(family)
    if fam is Family.HIRZEBRUCH:
        if n is None:
            raise InvalidParameterError("hirzebruch lattice requires n")
        return hirzebruch_lattice(n)
    if fam is Family.BLOWUP_P2:
        if r is None:
            raise InvalidParameterError("blowup_p2 lattice requires r")
        return blowup_p2_lattice(r)
    if n is None or r is None:
        raise InvalidParameterError("blowup_hirzebruch lattice requires n and r")
    return blowup_hirzebruch_lattice(n, r)


def lattice_from_json(doc: dict) -> SurfaceLattice:
    """Read a lattice from ``{"family": ..., "n": ..., "r": ...}``."""
    return make_lattice(doc["family"], n=doc.get("n"), r=doc.get("r"))


def basis_change_f1_to_p2(lattice: SurfaceLattice, d: DivisorClass) -> DivisorClass:
    """Rebase a class from NS(F_1) to NS(Bl_1 P^2): C_1 -> E_1, F -> H - E_1.

    F_1 is the plane blown up at one point, so this is an isometry taking
    canonical class to canonical class.
    """
    if lattice.family is not Family.HIRZEBRUCH or lattice.n != 1:
        raise FamilyError("source lattice must be the Hirzebruch lattice with n = 1")
    lattice._check(d)
    a, b = d.coeffs
    # a*E_1 + b*(H - E_1) = b*H + (a - b)*E_1
    return DivisorClass((b, a - b))


def basis_change_blf0_to_p2(lattice: SurfaceLattice, d: DivisorClass) -> DivisorClass:
    """Rebase a class from NS(Bl_1 F_0) to NS(Bl_2 P^2).

    The quadric blown up once dominates the plane blown up twice:
    C_0 -> H - E_2, F -> H - E_1, E -> H - E_1 - E_2.
    """
    if (
        lattice.family is not Family.BLOWUP_HIRZEBRUCH
        or lattice.n != 0
        or lattice.r != 1
    ):
        raise FamilyError(
            "source lattice must be the blowup of the Hirzebruch surface with n = 0 at one point"
        )
    lattice._check(d)
    c, f, e = d.coeffs
    return DivisorClass((c + f + e, -(f + e), -(c + e)))


def _square_constrained_vectors(
    k: int, target_sum: int, target_sq: int, bound: int
) -> Iterator[tuple[int, ...]]:
    # all m in Z^k with sum(m) = target_sum, sum(m^2) = target_sq, |m_i| <= bound
    if k == 0:
        if target_sum == 0 and target_sq == 0:
            yield ()
        return
    if target_sq < 0 or target_sq > k * bound * bound:
        return
    if target_sum * target_sum > k * target_sq:  # Cauchy-Schwarz infeasibility
        return
    top = min(bound, isqrt(target_sq))
    for m in range(-top, top + 1):
        for rest in _square_constrained_vectors(
            k - 1, target_sum - m, target_sq - m * m, bound
        ):
            yield (m,) + rest


def enumerate_negative_rational_classes(
    lattice: SurfaceLattice, self_int: int, degree_bound: int
) -> list[DivisorClass]:
    """All classes d*H - sum m_i E_i of the given self-intersection and
    arithmetic genus zero, with 0 <= d <= degree_bound and |m_i| <= degree_bound.

    Results are sorted lexicographically by coefficient vector, and
    permutations of the E_i are listed individually (no orbit quotienting).

    For C = dH - sum m_i E_i the two constraints pin the linear data:
        C.C = d^2 - sum m_i^2 = self_int,
        p_a(C) = 0  <=>  C.C + K.C = -2,  and K.C = -3d + sum m_i,
    hence sum m_i = 3d - 2 - self_int and sum m_i^2 = d^2 - self_int.
    Cauchy-Schwarz gives (sum m_i)^2 <= r * sum m_i^2; for self_int = -1 and
    r <= 8 this reads (3d - 1)^2 <= 8(d^2 + 1), i.e. (d - 7)(d + 1) <= 0, so
    every solution has d <= 7 and a degree bound of 7 is provably complete.
    """
    if lattice.family is not Family.BLOWUP_P2:
        raise FamilyError("enumeration is defined on blowups of the plane only")
    if self_int > -1:
        raise InvalidParameterError(f"self-intersection must be <= -1, got {self_int}")
    if degree_bound < 1:
        raise InvalidParameterError(f"degree bound must be >= 1, got {degree_bound}")
    r = lattice.r or 0
    if r == 0:
        return []
    found: list[DivisorClass] = []
    for d in range(degree_bound + 1):
        target_sum = 3 * d - 2 - self_int
        target_sq = d * d - self_int
        for ms in _square_constrained_vectors(r, target_sum, target_sq, degree_bound):
            cls = DivisorClass((d,) + tuple(-m for m in ms))
            # authoritative filter straight from the contract; the search
            # above cannot produce anything else, but the pairing decides
            if lattice.self_intersection(cls) != self_int:
                continue
            if lattice.arithmetic_genus(cls) != 0:
                continue
            found.append(cls)
    found.sort(key=lambda c: c.coeffs)
    return found


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [[operator.index(x) for x in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def signature(matrix: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """Inertia (positive, negative, zero) of a symmetric integer matrix.

    Symmetric congruence reduction over the integers: the elimination step
    rescales a basis vector by the pivot, which multiplies its diagonal entry
    by a positive square and therefore preserves all signs.  No floating
    point and no rationals are involved.
    """
    n = len(matrix)
    m = [[operator.index(x) for x in row] for row in matrix]
    pos = neg = zero = 0
    for i in range(n):
        if m[i][i] == 0:
            j = next((j for j in range(i + 1, n) if m[j][j] != 0), None)
            if j is not None:
                m[i], m[j] = m[j], m[i]
                for row in m:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((j for j in range(i + 1, n) if m[i][j] != 0), None)
                if j is None:
                    zero += 1
                    continue
                # all-zero diagonal: adding basis vector j to i makes the
                # pivot 2 * m[i][j] != 0
                for k in range(n):
                    m[i][k] += m[j][k]
                for k in range(n):
                    m[k][i] += m[k][j]
        p = m[i][i]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for j in range(i + 1, n):
            f = m[i][j]
            if f == 0:
                continue
            for k in range(n):
                m[j][k] = p * m[j][k] - f * m[i][k]
            for k in range(n):
                m[k][j] = p * m[k][j] - f * m[k][i]
    return pos, neg, zero
