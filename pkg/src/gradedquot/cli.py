"""Command line entry point ``alg``.

Exit codes: 0 when no check failed, 1 when some check failed, 2 for usage
or load errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import AlgebraError, center
from .derivations import (
    derivation_space,
    graded_der_decompose,
    inner_derivations,
    qm_compute,
)
from .finitary import FinitaryFamily
from .fixtures import FixtureError, get
from .grading import GradingError
from .report import Report, jsonable
from .suites import SUITES, SuiteConfig, UnknownSuite, run_suite

OK, FAILED, USAGE = 0, 1, 2


def _seed(value) -> int:
    if value is not None:
        return value
    return int(os.environ.get("ALG_SEED", "0"))


def _emit(obj) -> None:
    print(json.dumps(jsonable(obj), indent=2, sort_keys=True))


def cmd_validate(args) -> int:
    fx = get(args.fixture, args.fixtures)
    A = fx.algebra
    _emit({
        "name": fx.name,
        "field": str(A.field),
        "kind": A.kind,
        "dim": A.dim,
        "unit": A.unit is not None,
        "involution": A.involution is not None,
        "grading": {str(k): fx.grading[k].dim for k in fx.grading.support} if fx.grading else None,
        "elements": sorted(fx.elements),
        "subspaces": {k: U.dim for k, U in sorted(fx.subspaces.items())},
    })
    return OK


def cmd_der(args) -> int:
    fx = get(args.fixture, args.fixtures)
    A = fx.algebra
    dom = fx.subspace(args.ideal) if args.ideal else None
    D = derivation_space(A, domain_basis=dom.basis if dom is not None else None)
    out = {"fixture": fx.name, "dim": D.dim, "domain_dim": len(D.domain_basis)}
    if dom is None:
        out["inner_dim"] = inner_derivations(A).dim
        out["center_dim"] = center(A).dim
    if args.graded:
        if fx.grading is None:
            raise FixtureError("fixture has no grading", "grading")
        pieces = graded_der_decompose(D, fx.grading)
        out["graded"] = {str(k): P.dim for k, P in sorted(pieces.items())}
    _emit(out)
    return OK


def cmd_qm(args) -> int:
    fx = get(args.fixture, args.fixtures)
    r = qm_compute(fx.algebra)
    _emit({"fixture": fx.name, "status": r.status, "dim": r.derivations.dim if r.derivations else None,
           "reason": r.reason})
    return OK if r.status == "certified" else FAILED


def _finish(report: Report, out_path) -> int:
    print(report.summary())
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(report.dumps() + "\n")
    return OK if report.success else FAILED


def cmd_suite(args) -> int:
    cfg = SuiteConfig(seed=_seed(args.seed), fixtures=args.fixtures, budget=args.budget)
    return _finish(run_suite(args.name, cfg), args.out)


FINITARY_CHECKS = {"grading": "finitary-grading", "snd": "finitary-snd", "qm": "finitary-qm", "l0gen": "finitary-grading"}


def cmd_finitary(args) -> int:
    from . import finitary as fin

    fam = FinitaryFamily(args.family, 1 if args.family == "sl" else None)
    N = args.size
    seed = _seed(args.seed)
    checks = []
    if args.check == "grading":
        checks += fin.check_truncation(fam, N)
        checks += fin.degree_additivity(fam, 100, seed)
    elif args.check == "l0gen":
        checks += fin.l0_bracket_generation(fam, N, args.slack)
    elif args.check == "snd":
        degs = (-1, 0, 1) if fam.graded else (None,)
        for d in degs:
            checks += fin.finitary_snd_evidence(fam, d, args.samples, seed + (d or 0), support=N)
        checks += fin.block_azd_identity_check(50, seed)
    elif args.check == "qm":
        qs = [("identity", fin.identity_rcf())]
        if args.family in ("sl", "sp"):
            qs.append(("y", fin.symplectic_y()))
        if args.family == "sl":
            qs += [("E11", fin.PeriodicBandedMatrix(correction=fin.E(1, 1))), ("banded3", fin.banded_sample())]
        for label, q in qs:
            checks += fin.rcf_derivation_check(q, N, fam, tag=f"/{label}")
    report = Report(f"finitary-{args.check}", seed, {"family": args.family, "size": N}, checks)
    return _finish(report, args.out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alg", description="Exact checks on graded algebras and their quotients.")
    p.add_argument("--fixtures", default=None, help="fixture directory (default: $ALG_FIXTURES or bundled)")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="load and validate a fixture")
    v.add_argument("fixture")
    v.set_defaults(func=cmd_validate)

    d = sub.add_parser("der", help="derivation space of a fixture")
    d.add_argument("fixture")
    d.add_argument("--ideal", help="name of a subspace to use as domain")
    d.add_argument("--graded", action="store_true", help="split by degree")
    d.set_defaults(func=cmd_der)

    q = sub.add_parser("qm", help="certified maximal algebra of quotients")
    q.add_argument("fixture")
    q.set_defaults(func=cmd_qm)

    s = sub.add_parser("suite", help="run a named suite")
    s.add_argument("name", choices=sorted(SUITES))
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--out", help="write the JSON report here")
    s.add_argument("--budget", type=int, default=10 ** 7, help="max candidates per exhaustive search")
    s.set_defaults(func=cmd_suite)

    f = sub.add_parser("finitary", help="checks on the finitary families")
    f.add_argument("family", choices=("sl", "o", "sp"))
    f.add_argument("--check", required=True, choices=sorted(FINITARY_CHECKS))
    f.add_argument("--size", type=int, required=True)
    f.add_argument("--seed", type=int, default=None)
    f.add_argument("--slack", type=int, default=0)
    f.add_argument("--samples", type=int, default=200)
    f.add_argument("--out")
    f.set_defaults(func=cmd_finitary)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    # the fixture directory may be given before or after the subcommand
    argv = list(sys.argv[1:] if argv is None else argv)
    fixtures = None
    if "--fixtures" in argv:
        i = argv.index("--fixtures")
        if i + 1 >= len(argv):
            print("alg: error: --fixtures needs a directory", file=sys.stderr)
            return USAGE
        fixtures = argv[i + 1]
        del argv[i:i + 2]
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    args.fixtures = fixtures
    try:
        return args.func(args)
    except (FixtureError, GradingError, AlgebraError, UnknownSuite, ValueError) as exc:
        print(f"alg: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
