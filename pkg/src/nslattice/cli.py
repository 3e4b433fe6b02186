"""Command-line front end: every operation with JSON input and output.

One subcommand per invocation, one JSON document on standard output.
Coefficients are comma-separated integers in the fixed basis order
(use the ``--d=-2,-5`` form for vectors starting with a negative entry);
larger inputs go through ``--json FILE``, whose keys fill in anything not
given as a flag.  Exit codes: 0 success, 1 domain error, 2 usage error,
3 theorem-violation verdict under ``--strict``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .blowup import (
    THEOREM_VIOLATION,
    CurveWitness,
    anticanonical_consequence_check,
    classify_fixed_component,
    forced_fixed_components,
    lemma_move_check,
    model_from_json,
    nef_against_witnesses,
)
from .errors import NSLatticeError
from .hirzebruch import (
    NefDecomposition,
    anticanonical_class,
    anticanonical_fixed_locus,
    fixed_mobile_decompose,
    is_effective,
    nef_decompose,
)
from .lattice import (
    DivisorClass,
    Family,
    basis_change_blf0_to_p2,
    basis_change_f1_to_p2,
    blowup_p2_lattice,
    enumerate_negative_rational_classes,
    make_lattice,
)
from .selfcheck import SelfcheckConfig, run_selfcheck

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_VIOLATION = 3

CONFIG_ENV = "NSLATTICE_CONFIG"


class UsageError(Exception):
    """Malformed invocation or payload; maps to exit code 2."""


def _load_payload(args: argparse.Namespace) -> dict:
    path = getattr(args, "json", None)
    if not path:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read JSON payload: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON payload: {exc}") from exc
    if not isinstance(doc, dict):
        raise UsageError("JSON payload must be an object")
    return doc


def _get(args: argparse.Namespace, payload: dict, key: str):
    value = getattr(args, key, None)
    if value is None:
        value = payload.get(key)
    return value


def _need_int(args: argparse.Namespace, payload: dict, key: str) -> int:
    value = _get(args, payload, key)
    if value is None:
        raise UsageError(f"missing required input --{key.replace('_', '-')}")
    try:
        return int(value)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"--{key.replace('_', '-')} must be an integer") from exc


def _coeffs(args: argparse.Namespace, payload: dict, key: str) -> DivisorClass:
    value = _get(args, payload, key)
    if value is None:
        raise UsageError(f"missing required coefficient vector --{key}")
    if isinstance(value, str):
        try:
            return DivisorClass(tuple(int(part) for part in value.split(",")))
        except ValueError as exc:
            raise UsageError(f"--{key} must be comma-separated integers") from exc
    if isinstance(value, dict):
        value = value.get("coeffs")
    try:
        return DivisorClass(tuple(int(c) for c in value))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"payload key '{key}' must be a list of integers") from exc


def _resolve_lattice(args: argparse.Namespace, payload: dict):
    doc = payload.get("lattice", payload)
    family = getattr(args, "family", None) or doc.get("family")
    if family is None:
        raise UsageError("missing required input --family")
    n = getattr(args, "n", None)
    if n is None:
        n = doc.get("n")
    r = getattr(args, "r", None)
    if r is None:
        r = doc.get("r")
    try:
        fam = Family(family)
    except ValueError as exc:
        raise UsageError(f"unknown family '{family}'") from exc
    if fam is Family.HIRZEBRUCH and n is None:
        raise UsageError("family hirzebruch requires --n")
    if fam is Family.BLOWUP_P2 and r is None:
        raise UsageError("family blowup_p2 requires --r")
    if fam is Family.BLOWUP_HIRZEBRUCH and (n is None or r is None):
        raise UsageError("family blowup_hirzebruch requires --n and --r")
    return make_lattice(fam, n=n, r=r)


def _resolve_model(payload: dict):
    if "lattice" not in payload:
        raise UsageError("blowup commands need a model payload: --json FILE with a 'lattice' key")
    return model_from_json(payload)


def cmd_intersect(args, payload):
    lattice = _resolve_lattice(args, payload)
    d1 = _coeffs(args, payload, "d1")
    d2 = _coeffs(args, payload, "d2")
    return {"value": lattice.intersect(d1, d2)}, False


def cmd_genus(args, payload):
    lattice = _resolve_lattice(args, payload)
    d = _coeffs(args, payload, "d")
    return {"value": lattice.arithmetic_genus(d)}, False


def cmd_chi(args, payload):
    lattice = _resolve_lattice(args, payload)
    d = _coeffs(args, payload, "d")
    return {"value": lattice.euler_characteristic(d)}, False


def cmd_h0_bound(args, payload):
    lattice = _resolve_lattice(args, payload)
    d = _coeffs(args, payload, "d")
    return {"value": lattice.h0_lower_bound(d)}, False


def cmd_basis_change(args, payload):
    lattice = _resolve_lattice(args, payload)
    d = _coeffs(args, payload, "d")
    if lattice.family is Family.HIRZEBRUCH:
        out = basis_change_f1_to_p2(lattice, d)
        name, target = "f1_to_p2", blowup_p2_lattice(1)
    else:
        out = basis_change_blf0_to_p2(lattice, d)
        name, target = "blf0_to_p2", blowup_p2_lattice(2)
    return {
        "map": name,
        "target": target.to_json_dict(),
        "coeffs": list(out.coeffs),
    }, False


def cmd_enumerate(args, payload):
    r = _need_int(args, payload, "r")
    self_int = _need_int(args, payload, "self_int")
    degree_bound = _get(args, payload, "degree_bound")
    degree_bound = 7 if degree_bound is None else int(degree_bound)
    lattice = blowup_p2_lattice(r)
    classes = enumerate_negative_rational_classes(lattice, self_int, degree_bound)
    return {
        "r": r,
        "self_int": self_int,
        "degree_bound": degree_bound,
        "count": len(classes),
        "classes": [cls.to_json_dict() for cls in classes],
    }, False


def cmd_hirzebruch_effective(args, payload):
    n = _need_int(args, payload, "n")
    a = _need_int(args, payload, "a")
    b = _need_int(args, payload, "b")
    witness = is_effective(n, a, b)
    doc = {"n": n, "a": a, "b": b, "effective": witness.effective}
    doc["multiplicities"] = list(witness.multiplicities) if witness else None
    return doc, False


def cmd_hirzebruch_nef(args, payload):
    n = _need_int(args, payload, "n")
    a = _need_int(args, payload, "a")
    b = _need_int(args, payload, "b")
    verdict = nef_decompose(n, a, b)
    doc = {"n": n, "a": a, "b": b}
    if isinstance(verdict, NefDecomposition):
        doc.update(nef=True, s=verdict.s, t=verdict.t)
    else:
        doc.update(nef=False, violator=verdict.violator, pairing=verdict.pairing)
    return doc, False


def cmd_hirzebruch_fixed_mobile(args, payload):
    n = _need_int(args, payload, "n")
    a = _need_int(args, payload, "a")
    b = _need_int(args, payload, "b")
    dec = fixed_mobile_decompose(n, a, b)
    return {
        "n": n,
        "j": dec.j,
        "fixed": {"a": dec.fixed.a, "b": dec.fixed.b},
        "mobile": {"a": dec.mobile.a, "b": dec.mobile.b},
    }, False


def cmd_hirzebruch_anticanonical(args, payload):
    n = _need_int(args, payload, "n")
    ac = anticanonical_class(n)
    dec = anticanonical_fixed_locus(n)
    return {
        "n": n,
        "class": {"a": ac.a, "b": ac.b},
        "j": dec.j,
        "fixed": {"a": dec.fixed.a, "b": dec.fixed.b},
        "mobile": {"a": dec.mobile.a, "b": dec.mobile.b},
    }, False


def cmd_blowup_nef_test(args, payload):
    model = _resolve_model(payload)
    d = _coeffs(args, payload, "d")
    return nef_against_witnesses(model, d).to_json_dict(), False


def cmd_blowup_forced_fixed(args, payload):
    model = _resolve_model(payload)
    forced = forced_fixed_components(model)
    return {"forced_fixed_components": [w.to_json_dict() for w in forced]}, False


def cmd_blowup_classify(args, payload):
    model = _resolve_model(payload)
    d = _coeffs(args, payload, "d")
    prime = payload.get("prime", True)
    verdict = classify_fixed_component(model, CurveWitness(d, bool(prime)))
    return verdict.to_json_dict(), verdict.kind == THEOREM_VIOLATION


def cmd_blowup_consequences(args, payload):
    model = _resolve_model(payload)
    witness_complete = bool(payload.get("witness_complete", False))
    report = anticanonical_consequence_check(model, witness_complete)
    return report.to_json_dict(), report.verdict == THEOREM_VIOLATION


def cmd_blowup_lemma_move(args, payload):
    model = _resolve_model(payload)
    d = _coeffs(args, payload, "d")
    prime = payload.get("prime", True)
    anticanonical = payload.get("anticanonical", True)
    report = lemma_move_check(
        model, CurveWitness(d, bool(prime)), anticanonical=bool(anticanonical)
    )
    return report.to_json_dict(), report.verdict == THEOREM_VIOLATION


def cmd_selfcheck(args, payload):
    doc = payload
    if not doc:
        path = os.environ.get(CONFIG_ENV)
        if path:
            try:
                with open(path, "r", encoding="utf-8") as fh:
                    doc = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise UsageError(f"cannot read {CONFIG_ENV} file: {exc}") from exc
    try:
        cfg = SelfcheckConfig.from_json_dict(doc) if doc else SelfcheckConfig()
    except NSLatticeError as exc:
        raise UsageError(str(exc)) from exc
    results = run_selfcheck(cfg)
    return {
        "passed": all(res.passed for res in results),
        "checks": [res.to_json_dict() for res in results],
    }, False


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="FILE", help="JSON payload filling missing inputs")
    common.add_argument("--pretty", action="store_true", help="indent the output")
    common.add_argument(
        "--strict",
        action="store_true",
        help="exit 3 when the result is a theorem-violation verdict",
    )

    parser = argparse.ArgumentParser(
        prog="nslattice",
        description="Exact divisor-class calculus on rational surface lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def lattice_flags(p):
        p.add_argument("--family", choices=[f.value for f in Family])
        p.add_argument("--n", type=int)
        p.add_argument("--r", type=int)

    p = sub.add_parser("intersect", parents=[common], help="pairing of two classes")
    lattice_flags(p)
    p.add_argument("--d1", help="comma-separated coefficients")
    p.add_argument("--d2", help="comma-separated coefficients")
    p.set_defaults(handler=cmd_intersect)

    for name, handler, help_text in (
        ("genus", cmd_genus, "arithmetic genus of a class"),
        ("chi", cmd_chi, "Euler characteristic of a class"),
        ("h0-bound", cmd_h0_bound, "Riemann-Roch lower bound for h^0"),
        ("basis-change", cmd_basis_change, "rebase a class onto a plane-blowup basis"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        lattice_flags(p)
        p.add_argument("--d", help="comma-separated coefficients")
        p.set_defaults(handler=handler)

    p = sub.add_parser(
        "enumerate", parents=[common], help="negative rational classes on a plane blowup"
    )
    p.add_argument("--r", type=int)
    p.add_argument("--self-int", dest="self_int", type=int)
    p.add_argument("--degree-bound", dest="degree_bound", type=int)
    p.set_defaults(handler=cmd_enumerate)

    hz = sub.add_parser("hirzebruch", help="monoids and fixed loci on F_n")
    hz_sub = hz.add_subparsers(dest="subcommand", required=True, metavar="OP")
    for name, handler, needs_ab in (
        ("effective", cmd_hirzebruch_effective, True),
        ("nef", cmd_hirzebruch_nef, True),
        ("fixed-mobile", cmd_hirzebruch_fixed_mobile, True),
        ("anticanonical", cmd_hirzebruch_anticanonical, False),
    ):
        p = hz_sub.add_parser(name, parents=[common])
        p.add_argument("--n", type=int)
        if needs_ab:
            p.add_argument("--a", type=int)
            p.add_argument("--b", type=int)
        p.set_defaults(handler=handler)

    bl = sub.add_parser("blowup", help="witness-based tests on blown-up surfaces")
    bl_sub = bl.add_subparsers(dest="subcommand", required=True, metavar="OP")
    for name, handler, needs_d in (
        ("nef-test", cmd_blowup_nef_test, True),
        ("forced-fixed", cmd_blowup_forced_fixed, False),
        ("classify", cmd_blowup_classify, True),
        ("consequences", cmd_blowup_consequences, False),
        ("lemma-move", cmd_blowup_lemma_move, True),
    ):
        p = bl_sub.add_parser(name, parents=[common])
        if needs_d:
            p.add_argument("--d", help="comma-separated coefficients")
        p.set_defaults(handler=handler)

    p = sub.add_parser("selfcheck", parents=[common], help="run the brute-force oracle suite")
    p.set_defaults(handler=cmd_selfcheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload = _load_payload(args)
        doc, violation = args.handler(args, payload)
    except UsageError as exc:
        print(f"nslattice: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NSLatticeError as exc:
        print(f"nslattice: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(json.dumps(doc, indent=2 if args.pretty else None))
    if args.command == "selfcheck" and not doc["passed"]:
        return EXIT_DOMAIN
    if violation and args.strict:
        return EXIT_VIOLATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
