"""Divisor-class calculus on Hirzebruch surfaces F_n.

The effective monoid of F_n is generated by C_n and F, the nef monoid by
C_n + n*F and F; both are free of rank two.  A complete linear system
|a*C_n + b*F| splits into a fixed multiple of C_n and a mobile residual, and
the fixed multiple is computed here in closed form.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

from .errors import InvalidParameterError, NotEffectiveError
from .lattice import DivisorClass, SurfaceLattice, hirzebruch_lattice


@dataclass(frozen=True)
class HirzebruchClass:
    """The class a*C_n + b*F on F_n."""

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", operator.index(self.n))
        object.__setattr__(self, "a", operator.index(self.a))
        object.__setattr__(self, "b", operator.index(self.b))
        if self.n < 0:
            raise InvalidParameterError(f"Hirzebruch parameter n must be >= 0, got {self.n}")

    @property
    def self_intersection(self) -> int:
        # (aC_n + bF)^2 = -n a^2 + 2ab
        return -self.n * self.a * self.a + 2 * self.a * self.b

    def to_divisor(self) -> DivisorClass:
        return DivisorClass((self.a, self.b))

    def lattice(self) -> SurfaceLattice:
        return hirzebruch_lattice(self.n)

    def __add__(self, other: "HirzebruchClass") -> "HirzebruchClass":
        if self.n != other.n:
            raise InvalidParameterError("classes live on different Hirzebruch surfaces")
        return HirzebruchClass(self.n, self.a + other.a, self.b + other.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def to_json_dict(self) -> dict:
        return {"n": self.n, "a": self.a, "b": self.b}


def hirzebruch_class_from_json(doc: dict) -> HirzebruchClass:
    return HirzebruchClass(doc["n"], doc["a"], doc["b"])


@dataclass(frozen=True)
class EffectiveWitness:
    """Membership verdict for the effective monoid N*C_n + N*F.

    When the class is effective, ``multiplicities`` holds the generator
    multiplicities (copies of C_n, copies of F) realizing it.
    """

    effective: bool
    multiplicities: tuple[int, int] | None

    def __bool__(self) -> bool:
        return self.effective


@dataclass(frozen=True)
class NefDecomposition:
    """x = s*(C_n + n*F) + t*F with s, t >= 0."""

    n: int
    s: int
    t: int

    def reconstruct(self) -> HirzebruchClass:
        return HirzebruchClass(self.n, self.s, self.s * self.n + self.t)


@dataclass(frozen=True)
class NotNef:
    """Failure verdict naming the effective generator that pairs negatively."""

    violator: str
    pairing: int

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class FixedMobileDecomposition:
    """Fixed part j*C_n and mobile part of a complete linear system."""

    fixed: HirzebruchClass
    mobile: HirzebruchClass
    j: int

    def total(self) -> HirzebruchClass:
        return self.fixed + self.mobile


def effective_generators(n: int) -> tuple[HirzebruchClass, HirzebruchClass]:
    """Generators (C_n, F) of the effective monoid of F_n."""
    return HirzebruchClass(n, 1, 0), HirzebruchClass(n, 0, 1)


def nef_generators(n: int) -> tuple[HirzebruchClass, HirzebruchClass]:
    """Generators (C_n + n*F, F) of the nef monoid of F_n."""
    return HirzebruchClass(n, 1, n), HirzebruchClass(n, 0, 1)


def is_effective(n: int, a: int, b: int) -> EffectiveWitness:
    """a*C_n + b*F is effective iff a >= 0 and b >= 0.

    The pair (a, b) itself is the witness: it gives the multiplicities of the
    generators C_n and F.  The zero class is effective (the empty sum).
    """
    cls = HirzebruchClass(n, a, b)
    if cls.a >= 0 and cls.b >= 0:
        return EffectiveWitness(True, (cls.a, cls.b))
    return EffectiveWitness(False, None)


def nef_decompose(n: int, a: int, b: int) -> NefDecomposition | NotNef:
    """Nefness test with witness for x = a*C_n + b*F.

    x.F = a and x.C_n = b - n*a must both be nonnegative; when they are,
    x = a*(C_n + n*F) + (b - n*a)*F exhibits x in the nef monoid.  Otherwise
    the verdict names the generator whose pairing fails.
    """
    cls = HirzebruchClass(n, a, b)
    if cls.a < 0:
        return NotNef("F", cls.a)
    section_pairing = cls.b - cls.n * cls.a
    if section_pairing < 0:
        return NotNef(f"C{cls.n}", section_pairing)
    return NefDecomposition(cls.n, cls.a, section_pairing)


def fixed_mobile_decompose(n: int, a: int, b: int) -> FixedMobileDecomposition:
    """Split |a*C_n + b*F| into its fixed part j*C_n and mobile part.

    Requires the class to be effective; otherwise the linear system is empty
    and the decomposition is undefined.  For n = 0 or b >= a*n the system has
    no fixed component (j = 0).  Otherwise j = a - b//n is the unique integer
    with 1 <= j <= a and (a - j)*n <= b <= (a - j + 1)*n - 1, and the mobile
    part (a - j)*C_n + b*F pairs nonnegatively with C_n.
    """
    cls = HirzebruchClass(n, a, b)
    if not is_effective(n, a, b):
        raise NotEffectiveError(
            f"{a}*C{n} + {b}*F is not effective; its complete linear system is empty"
        )
    n, a, b = cls.n, cls.a, cls.b
    if n == 0 or b >= a * n:
        j = 0
    else:
        j = a - b // n
        if not (1 <= j <= a and (a - j) * n <= b <= (a - j + 1) * n - 1):
            raise RuntimeError(
                f"closed-form fixed multiple j = {j} failed its bracketing check "
                f"for n = {n}, a = {a}, b = {b}"
            )
    return FixedMobileDecomposition(
        fixed=HirzebruchClass(n, j, 0),
        mobile=HirzebruchClass(n, a - j, b),
        j=j,
    )


def anticanonical_class(n: int) -> HirzebruchClass:
    """-K on F_n, namely 2*C_n + (n + 2)*F."""
    n = operator.index(n)
    if n < 0:
        raise InvalidParameterError(f"Hirzebruch parameter n must be >= 0, got {n}")
    return HirzebruchClass(n, 2, n + 2)


def anticanonical_fixed_locus(n: int) -> FixedMobileDecomposition:
    """Fixed/mobile split of |-K| on F_n.

    The fixed part is zero for n <= 2 and exactly one copy of C_n for n >= 3.
    """
    ac = anticanonical_class(n)
    return fixed_mobile_decompose(ac.n, ac.a, ac.b)
