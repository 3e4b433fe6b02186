"""Exact-integer divisor-class calculus on the lattices of rational surfaces.

The package models the based intersection lattices of Hirzebruch surfaces and
of blowups of the plane or of a Hirzebruch surface, and computes with divisor
classes on them: pairings, genera, Riemann-Roch bounds, effective and nef
monoid membership, fixed/mobile decompositions of complete linear systems,
negative-curve enumeration, and the classification of fixed components of
anticanonical systems.
"""

from .errors import (
    DimensionError,
    FamilyError,
    InvalidParameterError,
    LatticeCorruptionError,
    NotEffectiveError,
    NSLatticeError,
    PreconditionError,
)
from .lattice import (
    DivisorClass,
    Family,
    H0BoundAssumptionWarning,
    SurfaceLattice,
    basis_change_blf0_to_p2,
    basis_change_f1_to_p2,
    blowup_hirzebruch_lattice,
    blowup_p2_lattice,
    determinant,
    divisor_from_json,
    enumerate_negative_rational_classes,
    hirzebruch_lattice,
    lattice_from_json,
    make_lattice,
    signature,
)
from .hirzebruch import (
    EffectiveWitness,
    FixedMobileDecomposition,
    HirzebruchClass,
    NefDecomposition,
    NotNef,
    anticanonical_class,
    anticanonical_fixed_locus,
    effective_generators,
    fixed_mobile_decompose,
    is_effective,
    nef_decompose,
    nef_generators,
)
from .blowup import (
    GENUS_ONE,
    NEGATIVE_RATIONAL,
    THEOREM_VIOLATION,
    CurveWitness,
    FixedComponentKind,
    NefVerdict,
    Report,
    SurfaceModel,
    anticanonical_consequence_check,
    classify_fixed_component,
    forced_fixed_components,
    lemma_move_check,
    model_from_json,
    nef_against_witnesses,
    witness_from_json,
)
from .selfcheck import CheckResult, SelfcheckConfig, run_selfcheck

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "CurveWitness",
    "DimensionError",
    "DivisorClass",
    "EffectiveWitness",
    "Family",
    "FamilyError",
    "FixedComponentKind",
    "FixedMobileDecomposition",
    "GENUS_ONE",
    "H0BoundAssumptionWarning",
    "HirzebruchClass",
    "InvalidParameterError",
    "LatticeCorruptionError",
    "NEGATIVE_RATIONAL",
    "NSLatticeError",
    "NefDecomposition",
    "NefVerdict",
    "NotEffectiveError",
    "NotNef",
    "PreconditionError",
    "Report",
    "SelfcheckConfig",
    "SurfaceLattice",
    "SurfaceModel",
    "THEOREM_VIOLATION",
    "anticanonical_class",
    "anticanonical_consequence_check",
    "anticanonical_fixed_locus",
    "basis_change_blf0_to_p2",
    "basis_change_f1_to_p2",
    "blowup_hirzebruch_lattice",
    "blowup_p2_lattice",
    "classify_fixed_component",
    "determinant",
    "divisor_from_json",
    "effective_generators",
    "enumerate_negative_rational_classes",
    "fixed_mobile_decompose",
    "forced_fixed_components",
    "hirzebruch_lattice",
    "is_effective",
    "lattice_from_json",
    "lemma_move_check",
    "make_lattice",
    "model_from_json",
    "nef_against_witnesses",
    "nef_decompose",
    "nef_generators",
    "run_selfcheck",
    "signature",
    "witness_from_json",
]
