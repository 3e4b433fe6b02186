import pytest

from nslattice import NSLatticeError, SelfcheckConfig, run_selfcheck
from nslattice.selfcheck import ALL_CHECKS

QUICK = SelfcheckConfig(
    anticanonical_n_max=8,
    uniqueness_n_max=4,
    uniqueness_a_max=4,
    monoid_n_max=3,
    monoid_coeff_bound=5,
    monoid_copies=10,
    random_classes=300,
    family_n_max=5,
    family_r_max=5,
    isometry_random_classes=100,
    enum_r_max=5,
    enum_stability_bound=9,
    seed=11,
)


def test_all_checks_pass_quick_config():
    results = run_selfcheck(QUICK)
    assert len(results) == len(ALL_CHECKS)
    assert [r.name for r in results] == [
        "monoid_bruteforce_equivalence",
        "monoid_minimal_generation",
        "fixed_mobile_uniqueness",
        "anticanonical_fixed_locus_sweep",
        "adjunction_parity",
        "lattice_invariants",
        "canonical_convention",
        "basis_change_isometries",
        "minus_one_enumeration_stability",
        "classifier_theorem_cases",
        "negative_curve_adjunction",
    ]
    failed = [r for r in results if not r.passed]
    assert failed == [], failed


def test_results_are_deterministic():
    first = run_selfcheck(QUICK)
    second = run_selfcheck(QUICK)
    assert first == second


def test_config_round_trip():
    cfg = SelfcheckConfig.from_json_dict(QUICK.to_json_dict())
    assert cfg == QUICK


def test_unknown_key_rejected():
    with pytest.raises(NSLatticeError):
        SelfcheckConfig.from_json_dict({"no_such_knob": 1})


def test_default_config_matches_acceptance_bounds():
    cfg = SelfcheckConfig()
    assert cfg.anticanonical_n_max == 50
    assert cfg.uniqueness_n_max == 10 and cfg.uniqueness_a_max == 10
    assert cfg.monoid_n_max == 6 and cfg.monoid_coeff_bound == 8 and cfg.monoid_copies == 16
    assert cfg.random_classes == 10_000
    assert cfg.family_n_max == 20 and cfg.family_r_max == 12
    assert cfg.isometry_random_classes == 1_000
    assert cfg.enum_r_max == 8
    assert cfg.enum_degree_bound == 7 and cfg.enum_stability_bound == 12
