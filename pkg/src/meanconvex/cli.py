"""Command-line front end.

Subcommands:
  verify    test one class membership or three-point inequality by sampling
  audit     replay the built-in claim catalog
  search    hunt for a small violating triple of a three-point inequality
  classify  sub/super-additivity or -multiplicativity of a function
  means     evaluate the weighted two-point means and their ordering

Exit codes: 0 the claim held (or, for search, a violation was found);
1 the claim was refuted (or no violation found); 2 usage or domain error.

JSON reports are byte-stable for a fixed seed: keys are emitted in a fixed
order and floats are rendered with repr-faithful %.17g formatting. Timing
goes to stderr only, never into the report.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time

import numpy as np

from .catalog import builtin_functions, make_function, run_audit
from .convexity import ConvexitySpec, verify_class
from .errors import MeanConvexError
from .intervals import Interval
from .means import MeanEvalContext, MeanKind, check_am_gm_hm, mean_classic, mean_eval
from .popoviciu import (BASE_SENSE, TheoremId, popoviciu_sides,
                        theorem_margins, verify_theorem)
from .sampling import SamplePlan
from .weights import (DEFAULT_TOL, WEIGHT_BUILDERS, classify_additivity,
                      classify_multiplicativity, power_weight_class)

_MEAN_KINDS = {"A": MeanKind.ARITHMETIC, "G": MeanKind.GEOMETRIC,
               "H": MeanKind.HARMONIC}


# --------------------------------------------------------------------------
# Byte-stable JSON rendering.

def _render_json(value, indent=0) -> str:
    pad, pad_in = " " * indent, " " * (indent + 2)
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        return "null" if not math.isfinite(v) else format(v, ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = ",\n".join(pad_in + _render_json(v, indent + 2) for v in value)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = ",\n".join(
            f"{pad_in}{json.dumps(str(k))}: {_render_json(v, indent + 2)}"
            for k, v in value.items())
        return "{\n" + items + "\n" + pad + "}"
    raise TypeError(f"cannot render {type(value).__name__}")


def _write_json(path: str, payload: dict) -> None:
    with open(path, "w") as fh:
        fh.write(_render_json(payload) + "\n")


def _write_csv(path: str, witnesses: list[dict]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "y", "z", "t", "lhs", "rhs"])
        for w in witnesses:
            writer.writerow(["" if w[k] is None else format(w[k], ".17g")
                             for k in ("x", "y", "z", "t", "lhs", "rhs")])


def _witness_dict(w) -> dict:
    return {"x": w.x, "y": w.y, "z": w.z, "t": w.t, "lhs": w.lhs, "rhs": w.rhs}


# --------------------------------------------------------------------------

def _add_sampling_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lo", type=float, help="sampling box lower edge")
    p.add_argument("--hi", type=float, help="sampling box upper edge")
    p.add_argument("--grid", type=int, default=33, help="grid points per axis")
    p.add_argument("--grid-t", type=int, default=17, help="grid points in t")
    p.add_argument("--random", type=int, default=10_000,
                   help="random samples after the grid")
    p.add_argument("--seed", type=int, default=None,
                   help="RNG seed (default: MEANCONVEX_SEED or 42)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                   help="relative tolerance")


def _add_function_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--fn", required=True, choices=sorted(builtin_functions()),
                   help="test function")
    p.add_argument("--p", type=float, help="exponent for --fn power")
    p.add_argument("--a", type=float, help="slope for --fn affine")
    p.add_argument("--b", type=float, help="intercept for --fn affine")
    p.add_argument("--c", type=float, help="value for --fn const")


def _add_weight_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--weight", default="identity",
                   choices=sorted(WEIGHT_BUILDERS), help="weight function h")
    p.add_argument("--weight-param", type=float, default=None,
                   help="parameter for power/constant weights")


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("MEANCONVEX_SEED", "42"))


def _build_plan(args) -> SamplePlan:
    return SamplePlan(grid_axis=args.grid, grid_t=args.grid_t,
                      n_random=args.random, seed=_resolve_seed(args))


def _build_box(args):
    if args.lo is None and args.hi is None:
        return None
    lo = args.lo if args.lo is not None else -10.0
    hi = args.hi if args.hi is not None else 10.0
    return Interval(lo, hi, closed_lo=True, closed_hi=True)


def _build_weight(args):
    builder = WEIGHT_BUILDERS[args.weight]
    if args.weight_param is not None:
        return builder(args.weight_param)
    return builder()


def _build_fn(args):
    return make_function(args.fn, p=args.p, a=args.a, b=args.b, c=args.c)


# --------------------------------------------------------------------------

def _cmd_verify(args) -> int:
    plan, box = _build_plan(args), _build_box(args)
    h, f = _build_weight(args), _build_fn(args)
    t0 = time.perf_counter()
    if args.theorem:
        tid = TheoremId(args.theorem)
        sense = args.sense or BASE_SENSE[tid]
        report = verify_theorem(tid, h, f, sense, plan, args.tol, box)
        sense_used = sense
        verdict = report.status
        min_margin = report.min_margin
        witnesses = [_witness_dict(w) for w in report.witnesses]
        samples, skipped = report.triples_tested, report.skipped
        target = f"theorem {tid.value}"
    else:
        sense_used = args.sense or "convex"
        spec = ConvexitySpec(_MEAN_KINDS[args.arg], _MEAN_KINDS[args.val],
                             h, sense_used)
        report = verify_class(spec, f, plan, args.tol, box)
        verdict = report.status
        min_margin = report.min_margin
        witnesses = [_witness_dict(report.witness)] if report.witness else []
        samples, skipped = report.samples_tested, report.skipped
        target = f"class {spec.label}"
    elapsed = time.perf_counter() - t0
    payload = {
        "schema_version": 1,
        "config": {
            "command": "verify",
            "target": target,
            "fn": f.name,
            "weight": h.name,
            "sense": sense_used,
            "lo": args.lo, "hi": args.hi,
            "grid": args.grid, "grid_t": args.grid_t, "random": args.random,
            "seed": _resolve_seed(args), "tol": args.tol,
        },
        "verdict": verdict,
        "min_margin": min_margin,
        "witnesses": witnesses,
        "skipped": skipped,
        "samples": samples,
    }
    if args.json:
        _write_json(args.json, payload)
    if args.csv:
        _write_csv(args.csv, witnesses)
    print(f"{target} [{h.name}] on {f.name}: {verdict} "
          f"(min margin {min_margin:.3e}, {samples} samples, {skipped} skipped)")
    for w in witnesses:
        t_part = "" if w["t"] is None else f", t={w['t']:.6g}"
        z_part = "" if w["z"] is None else f", z={w['z']:.6g}"
        print(f"  witness: x={w['x']:.6g}, y={w['y']:.6g}{z_part}{t_part}, "
              f"lhs={w['lhs']:.17g}, rhs={w['rhs']:.17g}")
    print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return 0 if verdict == "holds-on-samples" else 1


def _cmd_audit(args) -> int:
    plan = None
    if args.seed is not None or "MEANCONVEX_SEED" in os.environ:
        plan = SamplePlan(grid_axis=13, grid_t=9, n_random=2000,
                          seed=_resolve_seed(args))
    t0 = time.perf_counter()
    findings = run_audit(plan, args.tol)
    elapsed = time.perf_counter() - t0
    disagreements = 0
    for fd in findings:
        mark = "ok" if fd.agree else "DISAGREE"
        disagreements += not fd.agree
        print(f"[{mark}] {fd.key}: expected {fd.expected}, got {fd.outcome} "
              f"({fd.detail})")
    print(f"{len(findings)} entries audited, {disagreements} disagreement(s)")
    if args.json:
        payload = {
            "schema_version": 1,
            "config": {"command": "audit",
                       "seed": plan.seed if plan else SamplePlan().seed,
                       "tol": args.tol},
            "entries": len(findings),
            "disagreements": disagreements,
            "findings": [
                {"key": fd.key, "kind": fd.kind, "expected": fd.expected,
                 "outcome": fd.outcome, "agree": fd.agree, "detail": fd.detail,
                 "min_margin": fd.min_margin, "samples": fd.samples,
                 "skipped": fd.skipped}
                for fd in findings],
        }
        _write_json(args.json, payload)
    print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return 0


def _cmd_search(args) -> int:
    plan, box = _build_plan(args), _build_box(args)
    h, f = _build_weight(args), _build_fn(args)
    tid = TheoremId(args.theorem)
    sense = args.sense or BASE_SENSE[tid]
    dom = f.sampling_domain(box)
    lo, hi = dom.sampling_bounds()
    rng = np.random.default_rng(plan.seed)
    budget = args.budget
    margin_of = lambda x, y, z: theorem_margins(
        tid, h, f, np.array([x]), np.array([y]), np.array([z]), sense)[0]

    best = None
    batch = 8192
    used = 0
    while used < budget and best is None:
        n = min(batch, budget - used)
        x, y, z = rng.uniform(lo, hi, size=(3, n))
        used += n
        margins = theorem_margins(tid, h, f, x, y, z, sense)
        bad = margins < -args.tol
        if bad.any():
            idx = np.flatnonzero(bad)
            norms = np.maximum.reduce([np.abs(x[idx]), np.abs(y[idx]), np.abs(z[idx])])
            i = idx[int(np.argmin(norms))]
            best = [float(x[i]), float(y[i]), float(z[i])]
    if best is None:
        print(f"no violation found for theorem {tid.value} ({sense}) on "
              f"{f.name} within {used} evaluations")
        return 1
    # coordinate-descent shrink: pull coordinates toward the domain's low
    # edge while the violation persists
    while used < budget:
        improved = False
        for i in range(3):
            for step in (0.5, 0.8, 0.95):
                trial = list(best)
                trial[i] = lo + step * (trial[i] - lo)
                used += 1
                if margin_of(*trial) < -args.tol:
                    best = trial
                    improved = True
                    break
        if not improved:
            break
    wl, wr = popoviciu_sides(tid, h, f, *best)
    witness = {"x": best[0], "y": best[1], "z": best[2], "t": None,
               "lhs": wl, "rhs": wr}
    payload = {
        "schema_version": 1,
        "config": {"command": "search", "target": f"theorem {tid.value}",
                   "fn": f.name, "weight": h.name, "sense": sense,
                   "lo": args.lo, "hi": args.hi, "budget": args.budget,
                   "seed": _resolve_seed(args), "tol": args.tol},
        "verdict": "refuted",
        "min_margin": float(margin_of(*best)),
        "witnesses": [witness],
        "skipped": 0,
        "samples": used,
    }
    if args.json:
        _write_json(args.json, payload)
    if args.csv:
        _write_csv(args.csv, [witness])
    print(f"violation of theorem {tid.value} ({sense}) on {f.name}: "
          f"x={best[0]:.17g}, y={best[1]:.17g}, z={best[2]:.17g}, "
          f"lhs={wl:.17g}, rhs={wr:.17g} ({used} evaluations)")
    return 0


def _cmd_classify(args) -> int:
    if args.power_exponent is not None:
        cls = power_weight_class(args.power_exponent)
        print(f"x^{args.power_exponent:g} on (0, inf): {cls.tag} (analytic)")
        return 0
    plan, box = _build_plan(args), _build_box(args)
    f = _build_fn(args)
    dom = f.sampling_domain(box)
    classify = (classify_additivity if args.mode == "additive"
                else classify_multiplicativity)
    cls = classify(f.fn, dom, plan, args.tol)
    label = cls.tag if args.mode == "additive" else \
        cls.tag.replace("additive", "multiplicative")
    line = f"{f.name} on [{dom.lo:g}, {dom.hi:g}]: {label} " \
           f"({cls.samples_tested} samples"
    if cls.witness:
        line += f"; witness s={cls.witness[0]:.6g}, t={cls.witness[1]:.6g}"
    print(line + ")")
    return 0


def _cmd_means(args) -> int:
    h = _build_weight(args)
    results = {}
    for key, kind in _MEAN_KINDS.items():
        ctx = MeanEvalContext(kind, h, args.t)
        results[key] = mean_eval(ctx, args.x, args.y)
        print(f"{kind.value}-mean [{h.name}, t={args.t:g}]"
              f"({args.x:g}, {args.y:g}) = {results[key]:.17g} "
              f"(classic {mean_classic(kind, args.x, args.y):.17g})")
    chain = check_am_gm_hm(h, args.t, args.x, args.y)
    state = "holds" if chain.holds else "violated"
    print(f"harmonic <= geometric <= arithmetic: {state} "
          f"(margins {chain.margin_hg:.3e}, {chain.margin_ga:.3e})")
    return 0


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meanconvex",
        description="Numerical verification of weighted mean-convexity "
                    "classes and their three-point inequalities.")
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="test one class or theorem")
    target = pv.add_mutually_exclusive_group(required=True)
    target.add_argument("--theorem", choices=[t.value for t in TheoremId],
                        help="three-point inequality to test")
    target.add_argument("--arg", choices="AGH",
                        help="argument mean of a class membership test")
    pv.add_argument("--val", choices="AGH",
                    help="value mean (required with --arg)")
    pv.add_argument("--sense", choices=["convex", "concave"], default=None)
    _add_function_args(pv)
    _add_weight_args(pv)
    _add_sampling_args(pv)
    pv.add_argument("--json", help="write a JSON report here")
    pv.add_argument("--csv", help="write witness rows here")
    pv.set_defaults(handler=_cmd_verify)

    pa = sub.add_parser("audit", help="replay the built-in claim catalog")
    pa.add_argument("--seed", type=int, default=None)
    pa.add_argument("--tol", type=float, default=DEFAULT_TOL)
    pa.add_argument("--json", help="write a JSON report here")
    pa.set_defaults(handler=_cmd_audit)

    ps = sub.add_parser("search", help="hunt for a small violating triple")
    ps.add_argument("--theorem", required=True,
                    choices=[t.value for t in TheoremId])
    ps.add_argument("--sense", choices=["convex", "concave"], default=None)
    ps.add_argument("--budget", type=int, default=100_000,
                    help="total side evaluations allowed")
    _add_function_args(ps)
    _add_weight_args(ps)
    _add_sampling_args(ps)
    ps.add_argument("--json", help="write a JSON report here")
    ps.add_argument("--csv", help="write witness rows here")
    ps.set_defaults(handler=_cmd_search)

    pc = sub.add_parser("classify",
                        help="sub/super-additivity of a function")
    pc.add_argument("--mode", choices=["additive", "multiplicative"],
                    default="additive")
    pc.add_argument("--power-exponent", type=float, default=None,
                    help="analytic class of x^k instead of sampling")
    pc.add_argument("--fn", choices=sorted(builtin_functions()),
                    default="identity")
    pc.add_argument("--p", type=float)
    pc.add_argument("--a", type=float)
    pc.add_argument("--b", type=float)
    pc.add_argument("--c", type=float)
    _add_sampling_args(pc)
    pc.set_defaults(handler=_cmd_classify)

    pm = sub.add_parser("means", help="weighted two-point means at one point")
    pm.add_argument("--x", type=float, required=True)
    pm.add_argument("--y", type=float, required=True)
    pm.add_argument("--t", type=float, default=0.5)
    _add_weight_args(pm)
    pm.set_defaults(handler=_cmd_means)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.arg and not args.val:
        parser.error("--val is required with --arg")
    try:
        return args.handler(args)
    except MeanConvexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
