"""End-to-end acceptance checks, one test per criterion.

Each test prints a single [PASS]/[FAIL] line (visible with pytest -s, and in
captured output on failure) before asserting.
"""

import json
import time

import numpy as np

from meanconvex import (BASE_SENSE, EQUALITY_FAMILIES, ConvexitySpec,
                        Interval, MeanKind, SamplePlan, TheoremId,
                        classify_additivity, constant_weight, diagonal_refute,
                        equality_max_residual, hlawka_margins, identity_weight,
                        popoviciu_sides, power_weight_class,
                        reciprocal_weight, two_point_reduction, verify_class,
                        verify_theorem)
from meanconvex.catalog import builtin_functions, make_function
from meanconvex.cli import main as cli_main

A, G, H = MeanKind.ARITHMETIC, MeanKind.GEOMETRIC, MeanKind.HARMONIC
ID = identity_weight()
FS = builtin_functions()
BOX_01_10 = Interval(0.1, 10.0, closed_lo=True, closed_hi=True)
BOX_01_5 = Interval(0.1, 5.0, closed_lo=True, closed_hi=True)
BOX_1_4 = Interval(1.0, 4.0, closed_lo=True, closed_hi=True)

RANDOM_10K = SamplePlan(grid_axis=0, grid_t=0, n_random=10_000, seed=42)


def _line(n: int, ok: bool, desc: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] acceptance {n}: {desc}")


def test_acceptance_1_equality_families():
    t0 = time.perf_counter()
    worst = {family: equality_max_residual(family, RANDOM_10K)[0]
             for family in EQUALITY_FAMILIES}
    elapsed = time.perf_counter() - t0
    ok = all(r <= 1e-9 for r in worst.values()) and elapsed < 1.0
    _line(1, ok, f"seven equality families, max residual "
          f"{max(worst.values()):.3e} over 10k triples each, {elapsed:.2f}s")
    assert ok, (worst, elapsed)


def test_acceptance_2_classical_popoviciu():
    forward = verify_theorem(TheoremId.AA, ID, FS["square"], box=BOX_01_10)
    flipped = verify_theorem(TheoremId.AA, ID, FS["square"], "concave",
                             box=BOX_01_10)
    replayable = False
    if flipped.witnesses:
        w = flipped.witnesses[0]
        lhs, rhs = popoviciu_sides(TheoremId.AA, ID, FS["square"],
                                   w.x, w.y, w.z)
        replayable = (lhs, rhs) == (w.lhs, w.rhs) and lhs < rhs
    ok = (forward.holds and forward.min_margin >= -1e-12
          and not flipped.holds and replayable)
    _line(2, ok, f"classical three-point inequality for x^2: min margin "
          f"{forward.min_margin:.3e}; flipped claim refuted with replayable "
          f"witness: {replayable}")
    assert ok


def test_acceptance_3_nine_theorem_coverage():
    cases = [
        (TheoremId.AA, FS["square"], BOX_01_10, None),
        (TheoremId.AG, FS["cosh"], BOX_01_5, None),
        (TheoremId.AH, FS["reciprocal"], BOX_01_10, None),
        (TheoremId.GA, FS["cosh"], BOX_01_5, None),
        (TheoremId.GG, FS["cosh"], BOX_01_5, None),
        (TheoremId.GH, FS["cosh"], BOX_1_4, None),
        (TheoremId.HA, FS["reciprocal"], BOX_01_10, None),
        (TheoremId.HG, FS["exp"], BOX_01_5, None),
        (TheoremId.HH, FS["arctan"], BOX_01_10, "concave"),
    ]
    t0 = time.perf_counter()
    results = {}
    for tid, f, box, sense in cases:
        rep = verify_theorem(tid, ID, f, sense, box=box)
        results[tid.value] = rep
        print(f"    theorem {tid.value} [{rep.sense}] on {rep.f_name}: "
              f"{rep.status} (min margin {rep.min_margin:.3e})")
    elapsed = time.perf_counter() - t0
    failures = [k for k, rep in results.items() if not rep.holds]
    ok = not failures and elapsed < 10.0
    _line(3, ok, f"nine-theorem coverage in {elapsed:.2f}s"
          + (f"; failing: {failures}" if failures else ""))
    assert ok, failures


def test_acceptance_4_defining_gap_equalities():
    cases = [
        (ConvexitySpec(A, G, ID, "convex"), FS["exp"],
         Interval(-5.0, 5.0, closed_lo=True, closed_hi=True)),
        (ConvexitySpec(H, H, ID, "convex"), FS["identity"], BOX_01_10),
    ]
    ok = True
    worst = 0.0
    for spec, f, box in cases:
        # both directions holding at 1e-12 pins |lhs - rhs| <= 1e-12 * scale
        for sense in ("convex", "concave"):
            v = verify_class(ConvexitySpec(spec.arg_mean, spec.val_mean,
                                           spec.h, sense),
                             f, RANDOM_10K, tol=1e-12, box=box)
            ok &= v.holds
            worst = max(worst, -v.min_margin)
    _line(4, ok, f"defining-inequality equalities for exp and identity, "
          f"max residual {worst:.3e} on 10k samples each")
    assert ok


def test_acceptance_5_diagonal_refutations():
    const1 = make_function("const", c=1.0)
    const2 = make_function("const", c=2.0)
    reversed_classes = [
        (A, reciprocal_weight(), "concave"),
        (H, reciprocal_weight(), "convex"),
        (A, constant_weight(1.0), "concave"),
        (H, constant_weight(1.0), "convex"),
    ]
    ts = (0.1, 0.25, 0.5, 0.75, 0.9)
    count = 0
    for val, h, sense in reversed_classes:
        for arg in (A, G, H):
            for t in ts:
                spec = ConvexitySpec(arg, val, h, sense)
                count += diagonal_refute(spec, const1, 2.0, t).refuted
    g_count = 0
    for h in (reciprocal_weight(), constant_weight(1.0)):
        for arg in (A, G, H):
            for t in ts:
                spec = ConvexitySpec(arg, G, h, "concave")
                g_count += diagonal_refute(spec, const2, 2.0, t).refuted
    ok = count == 60 and g_count == 30
    _line(5, ok, f"diagonal refutations: 4 reversed classes x 3 argument "
          f"means x 5 t -> {count}/60; geometric probes {g_count}/30")
    assert ok


def test_acceptance_6_power_additivity_table():
    unit = Interval(0.0, 1.0)
    mismatches = []
    for k in (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0):
        analytic = power_weight_class(k).tag
        sampled = classify_additivity(lambda x: x**k, unit).tag
        if analytic != sampled:
            mismatches.append((k, analytic, sampled))
    ok = not mismatches
    _line(6, ok, "analytic power-additivity table matches sampling at six "
          "exponents" + (f"; mismatches: {mismatches}" if mismatches else ""))
    assert ok, mismatches


def test_acceptance_7_hlawka():
    rng = np.random.default_rng(42)
    x, y, z = rng.uniform(-100.0, 100.0, size=(3, 1_000_000))
    scale = np.maximum(1.0, np.abs(x) + np.abs(y) + np.abs(z))
    worst = float(np.min(hlawka_margins(x, y, z) / scale))
    xp, yp, zp = rng.uniform(0.0, 100.0, size=(3, 100_000))
    sign = np.where(rng.random(100_000) < 0.5, 1.0, -1.0)
    sp = np.maximum(1.0, xp + yp + zp)
    resid = float(np.max(np.abs(
        hlawka_margins(sign * xp, sign * yp, sign * zp)) / sp))
    ok = worst >= -1e-12 and resid <= 1e-12
    _line(7, ok, f"Hlawka margin >= {worst:.3e} on 1e6 triples; same-sign "
          f"residual {resid:.3e}")
    assert ok


def test_acceptance_8_consistency():
    rng = np.random.default_rng(42)
    tids = list(TheoremId)
    xy = rng.uniform(0.1, 10.0, size=(1000, 2))
    bitwise_ok = all(
        two_point_reduction(tids[i % 9], ID, FS["square"], x, y)
        == popoviciu_sides(tids[i % 9], ID, FS["square"], x, y, y)
        for i, (x, y) in enumerate(xy))
    xyz = rng.uniform(0.1, 10.0, size=(1000, 3))
    perms = ((0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1))
    sym_worst = 0.0
    for i, pt in enumerate(xyz):
        tid = tids[i % 9]
        base = popoviciu_sides(tid, ID, FS["square"], *pt)
        for perm in perms[1:]:
            got = popoviciu_sides(tid, ID, FS["square"], *pt[list(perm)])
            for b, g in zip(base, got):
                sym_worst = max(sym_worst, abs(b - g) / max(1.0, abs(b)))
    ok = bitwise_ok and sym_worst <= 1e-12
    _line(8, ok, f"two-point reduction bitwise on 1000 samples: {bitwise_ok}; "
          f"permutation asymmetry {sym_worst:.3e}")
    assert ok


def test_acceptance_9_audit(tmp_path, capsys):
    paths = [tmp_path / "audit1.json", tmp_path / "audit2.json"]
    codes = [cli_main(["audit", "--seed", "42", "--json", str(p)])
             for p in paths]
    capsys.readouterr()  # drop the per-entry table from this test's output
    stable = paths[0].read_bytes() == paths[1].read_bytes()
    doc = json.loads(paths[0].read_text())
    ok = (codes == [0, 0] and stable and doc["entries"] >= 24
          and doc["disagreements"] == 0)
    _line(9, ok, f"audit: {doc['entries']} entries, exit codes {codes}, "
          f"byte-stable JSON: {stable}")
    assert ok
