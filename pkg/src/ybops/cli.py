"""Command-line surface: verification campaigns, matrix emission, FRT reports,
numerical searches and braid-matrix comparisons.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage/config error.
Reports are deterministic given the seed; timestamps live in a separate
metadata file so result payloads stay diffable.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import compare as compare_mod
from . import frt as frt_mod
from .algebra import cubic_algebra, dual_coalgebra, quadratic_algebra
from .colored import ColoredFamily, matrix_form
from .errors import YbopsError
from .onepar import OneParFamily
from .scalars import format_scalar, parse_scalar
from .search import search as run_search
from .tensorop import (braid_residual, colored_qybe_residual, max_abs_entry,
                       onepar_qybe_residual, op_to_csv, op_to_json,
                       op_to_latex)
from .ybsystem import thm3_system, wxz_residuals

COLORED_KINDS = ("thm1", "thm2", "remark2", "coalgebra_thm1")
ONEPAR_KINDS = ("prop1", "prop1_coalgebra", "prop2", "remark_x")
EXPONENTIAL_KINDS = ("thm2", "remark2")


def _algebra(args):
    if getattr(args, "eps", None) is not None or getattr(args, "rho", None) is not None:
        eps = parse_scalar(args.eps or "0")
        rho = parse_scalar(args.rho or "0")
        return cubic_algebra(eps, rho)
    return quadratic_algebra(parse_scalar(getattr(args, "sigma", None) or "1"))


_PARAM_DEFAULTS = {"p": "1", "q": "2", "s": "3"}


def _family(args):
    kind = args.family
    A = _algebra(args)
    needed = {"thm1": ("p", "q"), "thm2": ("p", "q", "s"),
              "remark2": ("p", "q", "s"), "coalgebra_thm1": ("p", "q"),
              "prop1": ("q",), "prop1_coalgebra": ("q",),
              "prop2": (), "remark_x": ()}.get(kind, ())
    params = {}
    for name in needed:
        val = getattr(args, name, None)
        params[name] = parse_scalar(val if val is not None
                                    else _PARAM_DEFAULTS[name])
    if kind in COLORED_KINDS:
        carrier = dual_coalgebra(A) if kind == "coalgebra_thm1" else A
        return ColoredFamily(kind=kind, carrier=carrier, params=params)
    if kind in ONEPAR_KINDS:
        carrier = dual_coalgebra(A) if kind == "prop1_coalgebra" else A
        return OneParFamily(kind=kind, carrier=carrier, params=params)
    raise YbopsError(f"unknown family kind {args.family!r}")


def _random_scalar(rng, integer=False):
    if integer:
        return Fraction(rng.randint(-4, 4))
    return Fraction(rng.randint(-9, 9), rng.randint(1, 5))


def cmd_verify(args):
    fam = _family(args)
    rng = random.Random(args.seed)
    integer_colours = args.family in EXPONENTIAL_KINDS
    failures = []
    samples = []
    for _ in range(args.samples):
        if args.family in COLORED_KINDS:
            u, v, w = (_random_scalar(rng, integer_colours) for _ in range(3))
            res = colored_qybe_residual(fam, u, v, w)
            samples.append({"u": format_scalar(u), "v": format_scalar(v),
                            "w": format_scalar(w),
                            "residual": format_scalar(res)})
        else:
            x, z = (_random_scalar(rng) for _ in range(2))
            res = onepar_qybe_residual(fam, x, z)
            samples.append({"x": format_scalar(x), "z": format_scalar(z),
                            "residual": format_scalar(res)})
        if res != 0:
            failures.append(samples[-1])
    report = {"command": "verify", "family": args.family,
              "samples": samples, "failures": failures}
    return not failures, report


def cmd_matrix(args):
    fam = _family(args)
    if args.family in COLORED_KINDS:
        form = matrix_form(fam, parse_scalar(args.u), parse_scalar(args.v))
        op, basis = form.op, form.basis
        shorthand = {k: format_scalar(v) for k, v in form.shorthand.items()}
    else:
        op = fam.op(parse_scalar(args.x))
        from .tensorop import tensor_basis_labels
        basis = tuple(tensor_basis_labels(op.n, 2))
        shorthand = {}
    if args.format == "json":
        text = op_to_json(op, basis=list(basis))
    elif args.format == "csv":
        text = op_to_csv(op)
    else:
        text = op_to_latex(op)
    report = {"command": "matrix", "family": args.family, "format": args.format,
              "basis": list(basis), "shorthand": shorthand, "text": text}
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text)
    return True, report


def cmd_search(args):
    results = run_search(shape=args.shape, system=args.system, seed=args.seed,
                         restarts=args.restarts, phi_shape=args.phi)
    payload = {"command": "search", "shape": args.shape, "system": args.system,
               "phi": args.phi, "seed": args.seed, "restarts": args.restarts,
               "results": [dataclasses.asdict(r) for r in results]}
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2),
                                  encoding="utf-8")
    best = min(results, key=lambda r: r.objective)
    print(f"best objective {best.objective:.3e} "
          f"classification {best.classification}")
    return True, payload


def cmd_frt(args):
    from .colored import thm1_op
    u, v, p, q, sigma = (parse_scalar(getattr(args, n))
                         for n in ("u", "v", "p", "q", "sigma"))
    A = quadratic_algebra(sigma)
    entries = frt_mod.rtt_residual(thm1_op(A, p, q, u, v))
    rels = frt_mod.claimed_relations(u, v, p, q, sigma)
    rep = frt_mod.span_membership(entries, rels)
    sym = frt_mod.uv_symmetry_check(rels)
    report = {
        "command": "frt",
        "params": {n: format_scalar(parse_scalar(getattr(args, n)))
                   for n in ("u", "v", "p", "q", "sigma")},
        "all_members": rep.all_members,
        "entry_span_dim": rep.entry_span_dim,
        "relation_span_dim": rep.relation_span_dim,
        "uv_symmetric": sym,
        "membership": [list(map(format_scalar, m)) if m is not None else None
                       for m in rep.members],
    }
    if args.report:
        Path(args.report).write_text(json.dumps(report, indent=2),
                                     encoding="utf-8")
    return rep.all_members and sym, report


def cmd_ybsystem(args):
    A = _algebra(args)
    S = thm3_system(A, parse_scalar(args.lam), parse_scalar(args.mu))
    residuals = wxz_residuals(S)
    emit = op_to_latex if args.emit == "latex" else op_to_json
    report = {"command": "ybsystem",
              "lambda": args.lam, "mu": args.mu,
              "residuals": [format_scalar(r) for r in residuals],
              "W": emit(S.W), "X": emit(S.X), "Z": emit(S.Z)}
    print("\n".join(f"{k}:\n{report[k]}" for k in ("W", "X", "Z")))
    return all(r == 0 for r in residuals), report


def cmd_compare(args):
    q, x, y = (parse_scalar(getattr(args, n)) for n in ("q", "x", "y"))
    okado = compare_mod.BraidFamily(kind="okado", q=q)
    twisted = compare_mod.BraidFamily(kind="twisted_prop1", q=q)
    res_ok = braid_residual(okado, x, y)
    res_tw = braid_residual(twisted, x, y)
    report = {"command": "compare", "q": args.q, "x": args.x, "y": args.y,
              "okado_braid_residual": format_scalar(res_ok),
              "twisted_prop1_braid_residual": format_scalar(res_tw),
              "q1_reduction": compare_mod.compare_q1()}
    print(json.dumps(report, indent=2, ensure_ascii=False))
    return res_ok == 0 and res_tw == 0, report


_HANDLERS = {
    "verify": cmd_verify,
    "matrix": cmd_matrix,
    "search": cmd_search,
    "frt": cmd_frt,
    "ybsystem": cmd_ybsystem,
    "compare": cmd_compare,
}


def cmd_campaign(args):
    try:
        config = json.loads(Path(args.config).read_text(encoding="utf-8"))
        tasks = config["tasks"]
    except (OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return None, None
    outdir = Path(args.outdir or os.environ.get("YBOPS_OUTDIR", "."))
    outdir.mkdir(parents=True, exist_ok=True)
    seed = config.get("seed", args.seed)
    overall_ok = True
    reports = []
    for i, task in enumerate(tasks):
        command = task.get("command")
        if command not in _HANDLERS:
            print(f"config error: unknown command {command!r}", file=sys.stderr)
            return None, None
        task_args = argparse.Namespace(**_defaults_for(command))
        for key, val in task.get("args", {}).items():
            setattr(task_args, key, val)
        if getattr(task_args, "seed", None) is None:
            task_args.seed = seed
        try:
            ok, report = _HANDLERS[command](task_args)
        except YbopsError as exc:
            print(f"config error in task {i}: {exc}", file=sys.stderr)
            return None, None
        expect = task.get("expect", "pass")
        matched = ok if expect == "pass" else not ok
        if not matched:
            overall_ok = False
        report["expect"] = expect
        report["passed"] = matched
        reports.append(report)
        (outdir / f"task-{i:03d}-{command}.json").write_text(
            json.dumps(report, indent=2, ensure_ascii=False), encoding="utf-8")
    (outdir / "campaign-meta.json").write_text(json.dumps(
        {"timestamp": time.time(), "tasks": len(tasks)}), encoding="utf-8")
    return overall_ok, {"command": "campaign", "tasks": reports}


def _defaults_for(command):
    defaults = {"seed": None, "sigma": None, "eps": None, "rho": None,
                "p": None, "q": None, "s": None}
    if command == "verify":
        defaults.update(family="thm1", samples=10)
    elif command == "matrix":
        defaults.update(family="thm1", u="3", v="1", x="3", format="json",
                        out=None)
    elif command == "search":
        defaults.update(shape="linear", system="colored", phi="xz",
                        restarts=10, out=None)
    elif command == "frt":
        defaults.update(p="1", q="3", u="2", v="1", sigma="0", report=None)
    elif command == "ybsystem":
        defaults.update(lam="3", mu="5", emit="json")
    elif command == "compare":
        defaults.update(q="2", x="3", y="5")
    return defaults


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ybops",
        description="Construct and verify Yang-Baxter operators from algebras")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--field", choices=("rational", "float64"),
                        default="rational")
    parser.add_argument("--tol", type=float, default=1e-9)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check QYBE residuals at random colours")
    p.add_argument("--family", required=True,
                   choices=COLORED_KINDS + ONEPAR_KINDS)
    for name in ("p", "q", "s", "sigma", "eps", "rho"):
        p.add_argument(f"--{name}")
    p.add_argument("--samples", type=int, default=10)

    p = sub.add_parser("matrix", help="emit an operator matrix")
    p.add_argument("--family", required=True,
                   choices=COLORED_KINDS + ONEPAR_KINDS)
    for name in ("p", "q", "s", "sigma", "eps", "rho"):
        p.add_argument(f"--{name}")
    p.add_argument("--u", default="3")
    p.add_argument("--v", default="1")
    p.add_argument("--x", default="3")
    p.add_argument("--format", choices=("json", "csv", "latex"),
                   default="json")
    p.add_argument("--out")

    p = sub.add_parser("search", help="numerical search over ansatz shapes")
    p.add_argument("--shape", choices=("linear", "exponential"),
                   default="linear")
    p.add_argument("--system", choices=("colored", "onepar"),
                   default="colored")
    p.add_argument("--phi", choices=("xz", "z", "x"), default="xz")
    p.add_argument("--restarts", type=int, default=50)
    p.add_argument("--out")

    p = sub.add_parser("frt", help="RTT residual span-membership report")
    p.add_argument("--p", default="1")
    p.add_argument("--q", default="3")
    p.add_argument("--u", default="2")
    p.add_argument("--v", default="1")
    p.add_argument("--sigma", default="0")
    p.add_argument("--report")

    p = sub.add_parser("ybsystem", help="build and check a WXZ system")
    p.add_argument("--lam", "--lambda", dest="lam", default="3")
    p.add_argument("--mu", default="5")
    p.add_argument("--sigma", default="1")
    p.add_argument("--eps")
    p.add_argument("--rho")
    p.add_argument("--emit", choices=("json", "latex"), default="json")

    p = sub.add_parser("compare", help="braid residuals and q=1 comparison")
    p.add_argument("--q", default="2")
    p.add_argument("--x", default="3")
    p.add_argument("--y", default="5")

    p = sub.add_parser("campaign", help="run a declarative task file")
    p.add_argument("config")
    p.add_argument("--outdir")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    # subparser seed falls back to the global default
    if getattr(args, "seed", None) is None:
        args.seed = 0
    handler = cmd_campaign if args.command == "campaign" else _HANDLERS[args.command]
    try:
        ok, _report = handler(args)
    except YbopsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if ok is None:
        return 2
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
