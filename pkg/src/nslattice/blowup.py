"""Witness-based nef testing and classification of anticanonical fixed components.

Nefness of a class cannot be decided from lattice data alone: it quantifies
over all prime divisors on the surface, and the lattice does not know which
classes are prime.  Everything here is therefore *relative to a witness set*,
a caller-supplied list of classes asserted to be prime.  Incomplete witness
lists give necessary evidence only, and the verdicts say so.

Inconsistent witness data is a first-class outcome, not an exception: a
witness set can contradict what is possible for a genuine fixed component of
an anticanonical system, and the classifier reports that as a
``theorem_violation`` verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, PreconditionError
from .lattice import DivisorClass, Family, SurfaceLattice, divisor_from_json, lattice_from_json

NEGATIVE_RATIONAL = "negative_rational"
GENUS_ONE = "genus_one"
THEOREM_VIOLATION = "theorem_violation"


@dataclass(frozen=True)
class CurveWitness:
    """A divisor class the caller asserts to contain a prime divisor.

    Primality is not decidable from a class, so it stays a caller-side
    assertion; the necessary condition p_a >= 0 is enforced when the witness
    is attached to a SurfaceModel.
    """

    cls: DivisorClass
    asserted_prime: bool = True

    def to_json_dict(self) -> dict:
        return {"coeffs": list(self.cls.coeffs), "prime": self.asserted_prime}


def witness_from_json(doc: dict) -> CurveWitness:
    return CurveWitness(divisor_from_json(doc), bool(doc.get("prime", True)))


@dataclass(frozen=True)
class SurfaceModel:
    """A lattice plus a (possibly incomplete) list of known prime classes."""

    lattice: SurfaceLattice
    curves: tuple[CurveWitness, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "curves", tuple(self.curves))
        for w in self.curves:
            if len(w.cls.coeffs) != self.lattice.rank:
                raise DimensionError(
                    f"witness {list(w.cls.coeffs)} does not match lattice rank {self.lattice.rank}"
                )
            if w.asserted_prime and self.lattice.arithmetic_genus(w.cls) < 0:
                raise PreconditionError(
                    f"class {list(w.cls.coeffs)} has negative arithmetic genus and "
                    "cannot contain a prime divisor"
                )

    def to_json_dict(self) -> dict:
        return {
            "lattice": self.lattice.to_json_dict(),
            "curves": [w.to_json_dict() for w in self.curves],
        }


def model_from_json(doc: dict) -> SurfaceModel:
    lattice = lattice_from_json(doc["lattice"])
    curves = tuple(witness_from_json(w) for w in doc.get("curves", ()))
    return SurfaceModel(lattice, curves)


@dataclass(frozen=True)
class FixedComponentKind:
    """Tagged verdict for a fixed component of an anticanonical system.

    ``negative_rational`` carries n >= 1 (the component is a (-n)-curve),
    ``genus_one`` carries the self-intersection (<= 0), and
    ``theorem_violation`` carries the reason the data is impossible.
    """

    kind: str
    n: int | None = None
    self_int: int | None = None
    reason: str | None = None

    def __post_init__(self) -> None:
        if self.kind == NEGATIVE_RATIONAL and (self.n is None or self.n < 1):
            raise ValueError("negative_rational verdict requires n >= 1")
        if self.kind == GENUS_ONE and (self.self_int is None or self.self_int > 0):
            raise ValueError("genus_one verdict requires self-intersection <= 0")
        if self.kind == THEOREM_VIOLATION and not self.reason:
            raise ValueError("theorem_violation verdict requires a reason")

    @classmethod
    def negative_rational(cls, n: int) -> "FixedComponentKind":
        return cls(NEGATIVE_RATIONAL, n=n)

    @classmethod
    def genus_one(cls, self_int: int) -> "FixedComponentKind":
        return cls(GENUS_ONE, self_int=self_int)

    @classmethod
    def theorem_violation(cls, reason: str) -> "FixedComponentKind":
        return cls(THEOREM_VIOLATION, reason=reason)

    def to_json_dict(self) -> dict:
        if self.kind == NEGATIVE_RATIONAL:
            return {"kind": self.kind, "n": self.n}
        if self.kind == GENUS_ONE:
            return {"kind": self.kind, "self_int": self.self_int}
        return {"kind": self.kind, "reason": self.reason}


@dataclass(frozen=True)
class NefVerdict:
    """Outcome of a witness-relative nef test."""

    nef_relative: bool
    violator: CurveWitness | None = None
    pairing: int | None = None
    empty_evidence: bool = False

    def __bool__(self) -> bool:
        return self.nef_relative

    def to_json_dict(self) -> dict:
        if self.nef_relative:
            return {"verdict": "nef-relative", "empty_evidence": self.empty_evidence}
        assert self.violator is not None
        return {
            "verdict": "violated-by",
            "violator": self.violator.to_json_dict(),
            "pairing": self.pairing,
        }


@dataclass(frozen=True)
class Report:
    """Diagnostic outcome with a verdict, readable detail lines and violators."""

    verdict: str
    details: tuple[str, ...] = ()
    violators: tuple = ()

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "details": list(self.details),
            "violators": list(self.violators),
        }


INCOMPLETE_VERDICT = "witness set provably incomplete or surface not anticanonical-nef"


def nef_against_witnesses(model: SurfaceModel, d: DivisorClass) -> NefVerdict:
    """Test D against every witness; the verdict is relative to the list.

    Returns the first witness (in list order) pairing negatively with D.  An
    empty witness list yields a vacuous nef verdict flagged as empty evidence.
    """
    model.lattice._check(d)
    if not model.curves:
        return NefVerdict(True, empty_evidence=True)
    for w in model.curves:
        pairing = model.lattice.intersect(d, w.cls)
        if pairing < 0:
            return NefVerdict(False, violator=w, pairing=pairing)
    return NefVerdict(True)


def forced_fixed_components(model: SurfaceModel) -> list[CurveWitness]:
    """Witnesses pairing negatively with -K.

    A prime divisor whose class pairs negatively with -K lies in every member
    of |-K|, so each such witness is a fixed component of the anticanonical
    system.  Input list order is preserved.
    """
    minus_k = -model.lattice.canonical
    return [
        w for w in model.curves if model.lattice.intersect(minus_k, w.cls) < 0
    ]


def classify_fixed_component(model: SurfaceModel, witness: CurveWitness) -> FixedComponentKind:
    """Classify a fixed component of an anticanonical system by (p_a, self-int).

    A genuine fixed component is either a (-n)-curve (p_a = 0, self-int <= -1)
    or a genus-one integral curve of self-intersection <= 0, the latter with
    self-intersection 0 only when K.K = 0, and not at all when K.K > 0.  Any
    other combination is impossible and reported as a theorem violation.
    """
    if not witness.asserted_prime:
        raise PreconditionError("classification requires a witness asserted to be prime")
    lat = model.lattice
    pa = lat.arithmetic_genus(witness.cls)
    s = lat.self_intersection(witness.cls)
    k2 = lat.self_intersection(lat.canonical)
    if pa == 0 and s <= -1:
        return FixedComponentKind.negative_rational(-s)
    if pa == 1 and s <= 0:
        if s == 0 and k2 != 0:
            return FixedComponentKind.theorem_violation(
                f"a genus-one fixed component of self-intersection 0 requires K.K = 0, but K.K = {k2}"
            )
        if k2 > 0:
            return FixedComponentKind.theorem_violation(
                f"K.K = {k2} > 0 forces every fixed component to be a negative rational "
                f"curve, but this class has arithmetic genus 1"
            )
        return FixedComponentKind.genus_one(s)
    return FixedComponentKind.theorem_violation(
        f"no fixed component of an anticanonical system has arithmetic genus {pa} "
        f"and self-intersection {s}"
    )


def anticanonical_consequence_check(model: SurfaceModel, witness_complete: bool) -> Report:
    """Global consistency checks driven by whether -K is nef against the witnesses.

    When -K clears every witness, a surface with genuinely nef -K must have
    K.K >= 0, Picard number <= 10, and (for blowups of the plane) at most
    nine points blown up; a failed inequality proves the witness set
    incomplete or the surface not anticanonical-nef.  When some witness
    blocks -K and K.K >= 0, every forced fixed component of arithmetic genus
    zero must be a (-n)-curve with n >= 3; each one is verified and listed.
    """
    lat = model.lattice
    k2 = lat.self_intersection(lat.canonical)
    minus_k = -lat.canonical
    nef = nef_against_witnesses(model, minus_k)
    details: list[str] = []

    if nef.nef_relative:
        if nef.empty_evidence:
            details.append("no witnesses supplied; the nef verdict is vacuous")
        else:
            details.append(f"-K pairs >= 0 with all {len(model.curves)} witnesses")
        details.append(
            "witness list asserted complete: -K is nef"
            if witness_complete
            else "witness list not asserted complete: nef evidence is relative only"
        )
        checks = [(f"K.K = {k2} >= 0", k2 >= 0), (f"rho = {lat.rank} <= 10", lat.rank <= 10)]
        if lat.family is Family.BLOWUP_P2:
            checks.append((f"r = {lat.r} <= 9", lat.r <= 9))
        failed = []
        for text, ok in checks:
            details.append(f"{text}: {'ok' if ok else 'FAILED'}")
            if not ok:
                failed.append(text)
        if failed:
            return Report(INCOMPLETE_VERDICT, tuple(details), tuple(failed))
        return Report("consistent", tuple(details), ())

    assert nef.violator is not None
    details.append(
        f"-K pairs negatively with witness {list(nef.violator.cls.coeffs)} "
        f"(pairing {nef.pairing})"
    )
    if k2 < 0:
        details.append(f"K.K = {k2} < 0: no forced consequence to verify")
        return Report("inconclusive", tuple(details), ())

    details.append(f"K.K = {k2} >= 0 and -K is not nef against the witnesses")
    violators = []
    for w in forced_fixed_components(model):
        pa = lat.arithmetic_genus(w.cls)
        s = lat.self_intersection(w.cls)
        if pa == 0:
            ok = s <= -3
            details.append(
                f"forced fixed component {list(w.cls.coeffs)}: p_a = 0, "
                f"self-intersection {s} {'<= -3: ok' if ok else '> -3: FAILED'}"
            )
            if not ok:
                violators.append(w.to_json_dict())
        else:
            details.append(
                f"forced fixed component {list(w.cls.coeffs)}: p_a = {pa}, "
                "not rational; outside this check"
            )
    if violators:
        return Report(THEOREM_VIOLATION, tuple(details), tuple(violators))
    return Report("consistent", tuple(details), ())


def lemma_move_check(
    model: SurfaceModel, witness: CurveWitness, *, anticanonical: bool = True
) -> Report:
    """Verify that a prime class of positive self-intersection moves.

    On an anticanonical surface a prime divisor G with G.G > 0 satisfies
    h^0(G) >= 2 via the Riemann-Roch bound, so a computed bound below 2
    contradicts the hypotheses (the surface is not anticanonical, or the
    class is not prime) and is reported as a violation.
    """
    if not witness.asserted_prime:
        raise PreconditionError("the check requires a witness asserted to be prime")
    if not anticanonical:
        raise PreconditionError("the check requires the surface to be asserted anticanonical")
    lat = model.lattice
    s = lat.self_intersection(witness.cls)
    if s <= 0:
        return Report(
            "not applicable",
            (f"self-intersection {s} <= 0: no conclusion about moving",),
            (),
        )
    bound = lat.h0_lower_bound(witness.cls)
    kd = lat.canonical_pairing(witness.cls)
    details = (
        f"self-intersection {s} > 0",
        f"K pairing {kd}",
        f"h^0 lower bound {bound}",
    )
    if bound >= 2:
        return Report("consistent", details + ("bound >= 2: the class moves",), ())
    return Report(
        THEOREM_VIOLATION,
        details
        + (
            "bound < 2 is impossible for a prime class of positive "
            "self-intersection on an anticanonical surface",
        ),
        (witness.to_json_dict(),),
    )
