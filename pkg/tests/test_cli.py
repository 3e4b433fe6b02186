import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from nslattice import divisor_from_json, lattice_from_json, model_from_json
from nslattice.cli import main

SRC = Path(__file__).resolve().parents[1] / "src"


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


MODEL_BH51 = {
    "lattice": {"family": "blowup_hirzebruch", "n": 5, "r": 1},
    "curves": [
        {"coeffs": [1, 0, 0], "prime": True},
        {"coeffs": [0, 1, 0], "prime": True},
        {"coeffs": [0, 0, 1], "prime": True},
    ],
}

MODEL_B9 = {
    "lattice": {"family": "blowup_p2", "r": 9},
    "curves": [
        {"coeffs": [0] * i + [1] + [0] * (9 - i), "prime": True} for i in range(1, 10)
    ],
}

SMALL_SELFCHECK = {
    "anticanonical_n_max": 6,
    "uniqueness_n_max": 3,
    "uniqueness_a_max": 3,
    "monoid_n_max": 2,
    "monoid_coeff_bound": 4,
    "monoid_copies": 8,
    "random_classes": 200,
    "random_coeff_bound": 5,
    "family_n_max": 4,
    "family_r_max": 4,
    "isometry_random_classes": 50,
    "enum_r_max": 4,
    "enum_degree_bound": 7,
    "enum_stability_bound": 9,
    "seed": 7,
}

SELFCHECK_GOLDEN = (
    '{"passed": true, "checks": ['
    '{"name": "monoid_bruteforce_equivalence", "passed": true, "detail": "243 lattice points checked"}, '
    '{"name": "monoid_minimal_generation", "passed": true, "detail": "generator pairs independent for n <= 2"}, '
    '{"name": "fixed_mobile_uniqueness", "passed": true, "detail": "36 systems scanned"}, '
    '{"name": "anticanonical_fixed_locus_sweep", "passed": true, "detail": "n = 0..6 swept"}, '
    '{"name": "adjunction_parity", "passed": true, "detail": "600 random classes checked"}, '
    '{"name": "lattice_invariants", "passed": true, "detail": "35 lattices swept"}, '
    '{"name": "canonical_convention", "passed": true, "detail": "basis curves have arithmetic genus 0 under the chosen K"}, '
    '{"name": "basis_change_isometries", "passed": true, "detail": "basis pairs plus 50 random pairs per map"}, '
    '{"name": "minus_one_enumeration_stability", "passed": true, "detail": "r=1: 1, r=2: 3, r=3: 6, r=4: 10"}, '
    '{"name": "classifier_theorem_cases", "passed": true, "detail": "dichotomy swept for n = 0..6"}, '
    '{"name": "negative_curve_adjunction", "passed": true, "detail": "200 classes with p_a = 0 and K.D >= 1"}'
    "]}\n"
)


@pytest.fixture
def model_bh51(tmp_path):
    path = tmp_path / "model_bh51.json"
    path.write_text(json.dumps(MODEL_BH51))
    return str(path)


@pytest.fixture
def model_b9(tmp_path):
    path = tmp_path / "model_b9.json"
    path.write_text(json.dumps(MODEL_B9))
    return str(path)


GOLDEN = [
    (
        ["intersect", "--family", "hirzebruch", "--n", "2", "--d1", "1,0", "--d2", "1,0"],
        '{"value": -2}\n',
    ),
    (
        ["genus", "--family", "blowup_p2", "--r", "1", "--d=3,-1"],
        '{"value": 1}\n',
    ),
    (
        ["chi", "--family", "hirzebruch", "--n", "4", "--d", "2,6"],
        '{"value": 9}\n',
    ),
    (
        ["h0-bound", "--family", "hirzebruch", "--n", "3", "--d", "1,5"],
        '{"value": 9}\n',
    ),
    (
        ["basis-change", "--family", "hirzebruch", "--n", "1", "--d=-2,-3"],
        '{"map": "f1_to_p2", "target": {"family": "blowup_p2", "r": 1}, "coeffs": [-3, 1]}\n',
    ),
    (
        ["basis-change", "--family", "blowup_hirzebruch", "--n", "0", "--r", "1", "--d", "0,0,1"],
        '{"map": "blf0_to_p2", "target": {"family": "blowup_p2", "r": 2}, "coeffs": [1, -1, -1]}\n',
    ),
    (
        ["enumerate", "--r", "2", "--self-int=-1"],
        '{"r": 2, "self_int": -1, "degree_bound": 7, "count": 3, "classes": '
        '[{"coeffs": [0, 0, 1]}, {"coeffs": [0, 1, 0]}, {"coeffs": [1, -1, -1]}]}\n',
    ),
    (
        ["hirzebruch", "effective", "--n", "3", "--a", "2", "--b", "5"],
        '{"n": 3, "a": 2, "b": 5, "effective": true, "multiplicities": [2, 5]}\n',
    ),
    (
        ["hirzebruch", "effective", "--n", "3", "--a=-1", "--b", "5"],
        '{"n": 3, "a": -1, "b": 5, "effective": false, "multiplicities": null}\n',
    ),
    (
        ["hirzebruch", "nef", "--n", "2", "--a", "3", "--b", "7"],
        '{"n": 2, "a": 3, "b": 7, "nef": true, "s": 3, "t": 1}\n',
    ),
    (
        ["hirzebruch", "nef", "--n", "4", "--a", "1", "--b", "3"],
        '{"n": 4, "a": 1, "b": 3, "nef": false, "violator": "C4", "pairing": -1}\n',
    ),
    (
        ["hirzebruch", "fixed-mobile", "--n", "3", "--a", "2", "--b", "5"],
        '{"n": 3, "j": 1, "fixed": {"a": 1, "b": 0}, "mobile": {"a": 1, "b": 5}}\n',
    ),
    (
        ["hirzebruch", "anticanonical", "--n", "3"],
        '{"n": 3, "class": {"a": 2, "b": 5}, "j": 1, "fixed": {"a": 1, "b": 0}, '
        '"mobile": {"a": 1, "b": 5}}\n',
    ),
    (
        ["hirzebruch", "anticanonical", "--n", "2"],
        '{"n": 2, "class": {"a": 2, "b": 4}, "j": 0, "fixed": {"a": 0, "b": 0}, '
        '"mobile": {"a": 2, "b": 4}}\n',
    ),
]


@pytest.mark.parametrize("argv,expected", GOLDEN, ids=lambda v: " ".join(v) if isinstance(v, list) else None)
def test_golden_transcripts(capsys, argv, expected):
    code, out, err = run_cli(capsys, argv)
    assert code == 0 and err == ""
    assert out == expected


@pytest.mark.parametrize("argv,expected", GOLDEN, ids=lambda v: " ".join(v) if isinstance(v, list) else None)
def test_byte_identical_reruns(capsys, argv, expected):
    _, first, _ = run_cli(capsys, argv)
    _, second, _ = run_cli(capsys, argv)
    assert first == second == expected


class TestBlowupCommands:
    def test_nef_test_golden(self, capsys, model_bh51):
        code, out, _ = run_cli(
            capsys, ["blowup", "nef-test", "--json", model_bh51, "--d", "0,0,1"]
        )
        assert code == 0
        assert out == (
            '{"verdict": "violated-by", "violator": {"coeffs": [0, 0, 1], "prime": true}, '
            '"pairing": -1}\n'
        )

    def test_nef_test_relative(self, capsys, model_b9):
        code, out, _ = run_cli(
            capsys,
            ["blowup", "nef-test", "--json", model_b9, "--d=3,-1,-1,-1,-1,-1,-1,-1,-1,-1"],
        )
        assert code == 0
        assert out == '{"verdict": "nef-relative", "empty_evidence": false}\n'

    def test_forced_fixed_golden(self, capsys, model_bh51):
        code, out, _ = run_cli(capsys, ["blowup", "forced-fixed", "--json", model_bh51])
        assert code == 0
        assert out == '{"forced_fixed_components": [{"coeffs": [1, 0, 0], "prime": true}]}\n'

    def test_classify_golden(self, capsys, model_bh51):
        code, out, _ = run_cli(
            capsys, ["blowup", "classify", "--json", model_bh51, "--d", "1,0,0"]
        )
        assert code == 0
        assert out == '{"kind": "negative_rational", "n": 5}\n'

    def test_classify_genus_one(self, capsys, model_b9):
        code, out, _ = run_cli(
            capsys, ["blowup", "classify", "--json", model_b9, "--d=3,-1,-1,-1,-1,-1,-1,-1,-1,-1"]
        )
        assert code == 0
        assert out == '{"kind": "genus_one", "self_int": 0}\n'

    def test_consequences_golden(self, capsys, model_b9):
        code, out, _ = run_cli(capsys, ["blowup", "consequences", "--json", model_b9])
        assert code == 0
        assert out == (
            '{"verdict": "consistent", "details": ["-K pairs >= 0 with all 9 witnesses", '
            '"witness list not asserted complete: nef evidence is relative only", '
            '"K.K = 0 >= 0: ok", "rho = 10 <= 10: ok", "r = 9 <= 9: ok"], "violators": []}\n'
        )

    def test_consequences_incomplete(self, capsys, tmp_path):
        model = {
            "lattice": {"family": "blowup_p2", "r": 10},
            "curves": [
                {"coeffs": [0] * i + [1] + [0] * (10 - i), "prime": True}
                for i in range(1, 11)
            ],
            "witness_complete": True,
        }
        path = tmp_path / "m10.json"
        path.write_text(json.dumps(model))
        code, out, _ = run_cli(capsys, ["blowup", "consequences", "--json", str(path)])
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "witness set provably incomplete or surface not anticanonical-nef"
        assert any("rho = 11" in v for v in doc["violators"])

    def test_lemma_move_golden(self, capsys, model_b9):
        code, out, _ = run_cli(
            capsys, ["blowup", "lemma-move", "--json", model_b9, "--d=1,0,0,0,0,0,0,0,0,0"]
        )
        assert code == 0
        assert out == (
            '{"verdict": "consistent", "details": ["self-intersection 1 > 0", '
            '"K pairing -3", "h^0 lower bound 3", "bound >= 2: the class moves"], '
            '"violators": []}\n'
        )


class TestSelfcheck:
    def test_small_config_golden(self, capsys, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps(SMALL_SELFCHECK))
        code, out, err = run_cli(capsys, ["selfcheck", "--json", str(path)])
        assert code == 0 and err == ""
        assert out == SELFCHECK_GOLDEN
        code, out2, _ = run_cli(capsys, ["selfcheck", "--json", str(path)])
        assert code == 0 and out2 == out

    def test_config_env_var(self, capsys, tmp_path, monkeypatch):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps(SMALL_SELFCHECK))
        monkeypatch.setenv("NSLATTICE_CONFIG", str(path))
        code, out, _ = run_cli(capsys, ["selfcheck"])
        assert code == 0
        assert out == SELFCHECK_GOLDEN

    def test_unknown_config_key_is_usage_error(self, capsys, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text('{"bogus_key": 3}')
        code, out, err = run_cli(capsys, ["selfcheck", "--json", str(path)])
        assert code == 2
        assert out == "" and "bogus_key" in err

    def test_failing_check_exits_nonzero(self, capsys, tmp_path, monkeypatch):
        import nslattice.selfcheck as sc

        monkeypatch.setattr(sc, "KNOWN_MINUS_ONE_COUNTS", {1: 2})
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps(SMALL_SELFCHECK))
        code, out, _ = run_cli(capsys, ["selfcheck", "--json", str(path)])
        assert code == 1
        doc = json.loads(out)
        assert doc["passed"] is False


class TestExitCodes:
    def test_domain_error_is_one(self, capsys):
        code, out, err = run_cli(capsys, ["hirzebruch", "fixed-mobile", "--n", "3", "--a=-1", "--b", "5"])
        assert code == 1
        assert out == ""
        assert "not effective" in err

    def test_dimension_mismatch_is_one(self, capsys):
        code, _, err = run_cli(
            capsys, ["intersect", "--family", "hirzebruch", "--n", "2", "--d1", "1,0,0", "--d2", "1,0"]
        )
        assert code == 1
        assert "rank" in err

    def test_negative_parameter_is_one(self, capsys):
        code, _, err = run_cli(capsys, ["hirzebruch", "anticanonical", "--n=-2"])
        assert code == 1
        assert ">= 0" in err

    def test_missing_input_is_two(self, capsys):
        code, _, err = run_cli(capsys, ["intersect", "--family", "hirzebruch", "--n", "2"])
        assert code == 2
        assert "--d1" in err

    def test_unknown_flag_is_two(self, capsys):
        code, _, _ = run_cli(capsys, ["intersect", "--bogus", "1"])
        assert code == 2

    def test_unknown_subcommand_is_two(self, capsys):
        code, _, _ = run_cli(capsys, ["frobnicate"])
        assert code == 2

    def test_malformed_json_is_two(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{")
        code, out, err = run_cli(capsys, ["blowup", "forced-fixed", "--json", str(path)])
        assert code == 2
        assert out == "" and "malformed JSON" in err

    def test_strict_theorem_violation_is_three(self, capsys, tmp_path):
        model = {"lattice": {"family": "blowup_p2", "r": 8}, "curves": []}
        path = tmp_path / "m8.json"
        path.write_text(json.dumps(model))
        argv = ["blowup", "classify", "--json", str(path), "--d", "1,0,0,0,0,0,0,0,0"]
        code, out, _ = run_cli(capsys, argv)
        assert code == 0
        assert json.loads(out)["kind"] == "theorem_violation"
        code, out, _ = run_cli(capsys, argv + ["--strict"])
        assert code == 3
        assert json.loads(out)["kind"] == "theorem_violation"

    def test_strict_lemma_move_violation_is_three(self, capsys, tmp_path):
        model = {
            "lattice": {"family": "blowup_p2", "r": 5},
            "curves": [],
            "d": [-3, 2, 1, 1, 1, 1],
        }
        path = tmp_path / "m5.json"
        path.write_text(json.dumps(model))
        code, out, _ = run_cli(capsys, ["blowup", "lemma-move", "--json", str(path), "--strict"])
        assert code == 3
        assert json.loads(out)["verdict"] == "theorem_violation"

    def test_help_is_zero(self, capsys):
        code, _, _ = run_cli(capsys, ["--help"])
        assert code == 0


class TestPayloadsAndRoundTrips:
    def test_payload_fills_missing_flags(self, capsys, tmp_path):
        path = tmp_path / "payload.json"
        path.write_text(json.dumps({"family": "hirzebruch", "n": 2, "d1": [1, 0], "d2": [1, 0]}))
        code, out, _ = run_cli(capsys, ["intersect", "--json", str(path)])
        assert code == 0
        assert out == '{"value": -2}\n'

    def test_flags_override_payload(self, capsys, tmp_path):
        path = tmp_path / "payload.json"
        path.write_text(json.dumps({"family": "hirzebruch", "n": 2, "d1": [1, 0], "d2": [1, 0]}))
        code, out, _ = run_cli(capsys, ["intersect", "--json", str(path), "--n", "5"])
        assert code == 0
        assert out == '{"value": -5}\n'

    def test_pretty_output_parses_to_same_document(self, capsys):
        _, compact, _ = run_cli(capsys, ["hirzebruch", "anticanonical", "--n", "3"])
        _, pretty, _ = run_cli(capsys, ["hirzebruch", "anticanonical", "--n", "3", "--pretty"])
        assert pretty != compact
        assert json.loads(pretty) == json.loads(compact)

    def test_emitted_documents_are_reparseable(self, capsys, model_bh51):
        _, out, _ = run_cli(capsys, ["enumerate", "--r", "2", "--self-int=-1"])
        doc = json.loads(out)
        for cls in doc["classes"]:
            assert divisor_from_json(cls).coeffs is not None
        _, out, _ = run_cli(capsys, ["basis-change", "--family", "hirzebruch", "--n", "1", "--d", "1,0"])
        doc = json.loads(out)
        lattice_from_json(doc["target"])
        divisor_from_json(doc)
        _, out, _ = run_cli(capsys, ["blowup", "forced-fixed", "--json", model_bh51])
        reparsed = model_from_json(
            {"lattice": MODEL_BH51["lattice"], "curves": json.loads(out)["forced_fixed_components"]}
        )
        assert reparsed.curves[0].cls.coeffs == (1, 0, 0)


def test_module_invocation_subprocess():
    env = dict(os.environ, PYTHONPATH=str(SRC))
    proc = subprocess.run(
        [sys.executable, "-m", "nslattice", "hirzebruch", "fixed-mobile", "--n", "3", "--a", "2", "--b", "5"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert proc.stdout == '{"n": 3, "j": 1, "fixed": {"a": 1, "b": 0}, "mobile": {"a": 1, "b": 5}}\n'
