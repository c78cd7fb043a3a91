"""Mean-pair convexity predicates and sampling-based verdicts.

The defining inequality compares f at a two-point argument mean against a
weighted value-mean combination of f(x), f(y). Weight placements differ per
(argument mean, value mean) pair and are taken verbatim from the printed
case equations; see _VALUE_SIDES.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, InapplicableSpecError
from .intervals import Interval
from .means import MeanKind
from .sampling import SamplePlan, rel_scale
from .weights import (DEFAULT_TOL, WeightFunction, constant_weight,
                      identity_weight, power_weight, reciprocal_weight)

# A verdict needs at least this fraction of usable (non-skipped) samples.
MIN_USABLE_FRACTION = 0.5

# Default box used to bound sampling when a function's domain is unbounded.
DEFAULT_BOX = (-10.0, 10.0)


@dataclass(frozen=True)
class PointFunction:
    """A scalar function with its stated domain and positivity claim.

    positive_on_domain is a claim, not an assumption: audits sample it.
    fn must accept numpy arrays.
    """

    name: str
    fn: Callable[[np.ndarray], np.ndarray]
    domain: Interval
    positive_on_domain: bool = True

    def __call__(self, x):
        return self.fn(np.asarray(x, dtype=float))

    def sampling_domain(self, box: Optional[Interval] = None) -> Interval:
        dom = self.domain
        if box is not None:
            return dom.clamp(box.lo, box.hi)
        if not dom.bounded:
            return dom.clamp(*DEFAULT_BOX)
        return dom


@dataclass(frozen=True)
class ConvexitySpec:
    """One mean-pair convexity class: argument mean, value mean, weight, sense."""

    arg_mean: MeanKind
    val_mean: MeanKind
    h: WeightFunction
    sense: str = "convex"

    def __post_init__(self):
        if self.sense not in ("convex", "concave"):
            raise ValueError(f"sense must be convex|concave, got {self.sense!r}")

    @property
    def label(self) -> str:
        return f"{self.arg_mean.value}t{self.val_mean.value}[{self.h.name}]-{self.sense}"


@dataclass(frozen=True)
class Witness:
    x: float
    y: float
    t: Optional[float]
    lhs: float
    rhs: float
    z: Optional[float] = None
    index: int = 0


@dataclass(frozen=True)
class Verdict:
    status: str  # holds-on-samples | refuted
    samples_tested: int
    min_margin: float  # relative margin: (claimed rhs - lhs) / scale
    witness: Optional[Witness] = None
    skipped: int = 0

    @property
    def holds(self) -> bool:
        return self.status == "holds-on-samples"


def _arg_mean_arrays(kind: MeanKind, x, y, t):
    """Argument mean M(t; x, y) with t weighting x, per the case equations."""
    if kind is MeanKind.ARITHMETIC:
        return t * x + (1.0 - t) * y
    if kind is MeanKind.GEOMETRIC:
        return x**t * y ** (1.0 - t)
    return x * y / (t * x + (1.0 - t) * y)


# rhs of the defining inequality per (arg, val) pair; arguments are
# (h(t), h(1-t), f(x), f(y)). Placements transcribed case by case.
_VALUE_SIDES = {
    (MeanKind.ARITHMETIC, MeanKind.ARITHMETIC): lambda ht, h1t, fx, fy: ht * fx + h1t * fy,
    (MeanKind.ARITHMETIC, MeanKind.GEOMETRIC): lambda ht, h1t, fx, fy: fx**ht * fy**h1t,
    (MeanKind.ARITHMETIC, MeanKind.HARMONIC): lambda ht, h1t, fx, fy: fx * fy / (h1t * fx + ht * fy),
    (MeanKind.GEOMETRIC, MeanKind.ARITHMETIC): lambda ht, h1t, fx, fy: ht * fx + h1t * fy,
    (MeanKind.GEOMETRIC, MeanKind.GEOMETRIC): lambda ht, h1t, fx, fy: fx**ht * fy**h1t,
    (MeanKind.GEOMETRIC, MeanKind.HARMONIC): lambda ht, h1t, fx, fy: fx * fy / (h1t * fx + ht * fy),
    (MeanKind.HARMONIC, MeanKind.ARITHMETIC): lambda ht, h1t, fx, fy: h1t * fx + ht * fy,
    (MeanKind.HARMONIC, MeanKind.GEOMETRIC): lambda ht, h1t, fx, fy: fx**h1t * fy**ht,
    (MeanKind.HARMONIC, MeanKind.HARMONIC): lambda ht, h1t, fx, fy: fx * fy / (ht * fx + h1t * fy),
}


def _gap_arrays(spec: ConvexitySpec, f: PointFunction, x, y, t):
    """Vectorized (lhs, rhs, valid-mask) of the defining inequality."""
    with np.errstate(all="ignore"):
        m = _arg_mean_arrays(spec.arg_mean, x, y, t)
        ht = np.asarray(spec.h(t), dtype=float)
        h1t = np.asarray(spec.h(1.0 - t), dtype=float)
        lhs = np.asarray(f(m), dtype=float)
        rhs = _VALUE_SIDES[(spec.arg_mean, spec.val_mean)](
            ht, h1t, np.asarray(f(x), dtype=float), np.asarray(f(y), dtype=float))
    m, lhs, rhs = np.atleast_1d(m), np.atleast_1d(lhs), np.atleast_1d(rhs)
    with np.errstate(invalid="ignore"):
        in_domain = f.domain.contains_array(m) & np.isfinite(m)
    valid = in_domain & np.isfinite(lhs) & np.isfinite(rhs) \
        & np.isfinite(np.atleast_1d(ht)) & np.isfinite(np.atleast_1d(h1t))
    return lhs, rhs, valid


def defining_gap(spec: ConvexitySpec, f: PointFunction, x: float, y: float,
                 t: float) -> tuple[float, float]:
    """Both sides of the defining inequality at one (x, y, t); no comparison."""
    if not (f.domain.contains(x) and f.domain.contains(y)):
        raise DomainError(f"({x}, {y}) not inside domain of {f.name}")
    if not 0.0 < t < 1.0:
        raise DomainError(f"t={t} outside (0, 1)")
    lhs, rhs, valid = _gap_arrays(spec, f, np.array([x]), np.array([y]), np.array([t]))
    if not valid[0]:
        raise DomainError("argument mean left the domain or a side is not evaluable")
    return float(lhs[0]), float(rhs[0])


def verify_class(spec: ConvexitySpec, f: PointFunction,
                 plan: SamplePlan | None = None, tol: float = DEFAULT_TOL,
                 box: Optional[Interval] = None) -> Verdict:
    """Test the defining inequality over sampled (x, y, t).

    Convex sense requires lhs <= rhs within relative tolerance; concave the
    reverse. Returns the smallest-index witness on refutation. A verdict is
    "on samples" only, never a proof.
    """
    plan = plan or SamplePlan()
    dom = f.sampling_domain(box)
    x, y, t = plan.pairs_with_t(dom)
    lhs, rhs, valid = _gap_arrays(spec, f, x, y, t)
    n_total = x.size
    n_valid = int(valid.sum())
    if n_valid < MIN_USABLE_FRACTION * n_total:
        raise DomainError(
            f"only {n_valid}/{n_total} samples usable for {spec.label} on {f.name}")
    margin = np.where(valid, (rhs - lhs) if spec.sense == "convex" else (lhs - rhs), np.inf)
    rel = margin / rel_scale(np.where(valid, lhs, 0.0), np.where(valid, rhs, 0.0))
    violating = rel < -tol
    skipped = n_total - n_valid
    if violating.any():
        i = int(np.argmax(violating))
        w = Witness(float(x[i]), float(y[i]), float(t[i]), float(lhs[i]), float(rhs[i]), index=i)
        return Verdict("refuted", n_valid, float(np.min(rel[valid])), w, skipped)
    return Verdict("holds-on-samples", n_valid, float(np.min(rel[valid])), None, skipped)


_EXTENDED_WEIGHTS = {
    "Q": lambda s: reciprocal_weight(),
    "P": lambda s: constant_weight(1.0),
    "K_s2": lambda s: power_weight(s),
}


def verify_extended_class(class_tag: str, arg_mean: MeanKind, f: PointFunction,
                          plan: SamplePlan | None = None, tol: float = DEFAULT_TOL,
                          s: float = 0.5, val_mean: Optional[MeanKind] = None,
                          box: Optional[Interval] = None) -> Verdict:
    """Godunova-Levin (Q), P-function, and s-convex (K_s2) membership checks."""
    if class_tag not in _EXTENDED_WEIGHTS:
        raise InapplicableSpecError(f"unknown extended class {class_tag!r}")
    if class_tag == "K_s2" and not 0.0 < s <= 1.0:
        raise DomainError("s-convexity requires s in (0, 1]")
    h = _EXTENDED_WEIGHTS[class_tag](s)
    spec = ConvexitySpec(arg_mean, val_mean or arg_mean, h, "convex")
    return verify_class(spec, f, plan, tol, box)


@dataclass(frozen=True)
class OrderingReport:
    """Implication check: M_tN_t-convexity at a sample implies M_tN_h-convexity."""

    samples_checked: int
    failures: int
    first_failure: Optional[Witness]

    @property
    def holds(self) -> bool:
        return self.failures == 0


def class_ordering_check(f: PointFunction, arg_mean: MeanKind, val_mean: MeanKind,
                         h_above: WeightFunction, plan: SamplePlan | None = None,
                         tol: float = DEFAULT_TOL,
                         box: Optional[Interval] = None) -> OrderingReport:
    """Check that h(t) >= t lifts N_t-convex samples to N_h-convex samples."""
    plan = plan or SamplePlan()
    ts = plan.t_grid()
    hs = np.asarray(h_above(ts), dtype=float)
    if (hs < ts - tol).any():
        i = int(np.argmax(hs < ts - tol))
        raise DomainError(
            f"h_above({ts[i]:.6g}) = {hs[i]:.6g} < t; ordering premise fails")
    dom = f.sampling_domain(box)
    x, y, t = plan.pairs_with_t(dom)
    base = ConvexitySpec(arg_mean, val_mean, identity_weight(), "convex")
    lifted = ConvexitySpec(arg_mean, val_mean, h_above, "convex")
    lhs_b, rhs_b, valid_b = _gap_arrays(base, f, x, y, t)
    lhs_l, rhs_l, valid_l = _gap_arrays(lifted, f, x, y, t)
    valid = valid_b & valid_l
    base_holds = valid & (rhs_b - lhs_b >= -tol * rel_scale(lhs_b, rhs_b))
    lifted_fails = base_holds & (rhs_l - lhs_l < -tol * rel_scale(lhs_l, rhs_l))
    failures = int(lifted_fails.sum())
    first = None
    if failures:
        i = int(np.argmax(lifted_fails))
        first = Witness(float(x[i]), float(y[i]), float(t[i]),
                        float(lhs_l[i]), float(rhs_l[i]), index=i)
    return OrderingReport(int(base_holds.sum()), failures, first)


@dataclass(frozen=True)
class RefutationRecord:
    """A scalar contradiction produced by the diagonal (x = y) probe."""

    case: str
    arg_mean: MeanKind
    x: float
    t: float
    lhs: float
    rhs: float
    refuted: bool
    inequality: str  # the scalar inequality instantiated at y = x


# (val_mean, h family, sense) -> probe case name
_DIAGONAL_CASES = {
    (MeanKind.ARITHMETIC, "reciprocal", "concave"): "A_1/t-concave",
    (MeanKind.HARMONIC, "reciprocal", "convex"): "H_1/t-convex",
    (MeanKind.ARITHMETIC, "constant", "concave"): "A_1-concave",
    (MeanKind.HARMONIC, "constant", "convex"): "H_1-convex",
    (MeanKind.GEOMETRIC, "reciprocal", "concave"): "G_1/t-concave",
    (MeanKind.GEOMETRIC, "constant", "concave"): "G_1-concave",
}


def diagonal_refute(spec: ConvexitySpec, f: PointFunction, x: float,
                    t: float) -> RefutationRecord:
    """Instantiate the defining inequality at y = x, reproducing the
    non-existence contradictions for the reversed 1/t and constant classes.

    The geometric cases additionally require f(x) > 1.
    """
    key = (spec.val_mean, spec.h.family, spec.sense)
    case = _DIAGONAL_CASES.get(key)
    if case is None:
        raise InapplicableSpecError(
            f"diagonal probe does not cover {spec.label}")
    if not 0.0 < t < 1.0:
        raise DomainError("probe requires t in (0, 1)")
    if not f.domain.contains(x):
        raise DomainError(f"x={x} outside domain of {f.name}")
    fx = float(f(x))
    if fx <= 0:
        raise DomainError("probe requires f(x) > 0")
    if case == "A_1/t-concave":
        rhs = (1.0 / (1.0 - t) + 1.0 / t) * fx
        refuted = not fx >= rhs
        ineq = f"f(x) >= (1/(1-t) + 1/t) f(x) = {rhs:.6g}"
    elif case == "H_1/t-convex":
        rhs = t * (1.0 - t) * fx
        refuted = not fx <= rhs
        ineq = f"f(x) <= t(1-t) f(x) = {rhs:.6g}"
    elif case == "A_1-concave":
        rhs = 2.0 * fx
        refuted = not fx >= rhs
        ineq = f"f(x) >= 2 f(x) = {rhs:.6g}"
    elif case == "H_1-convex":
        rhs = fx / 2.0
        refuted = not fx <= rhs
        ineq = f"f(x) <= f(x)/2 = {rhs:.6g}"
    elif case == "G_1/t-concave":
        if fx <= 1.0:
            raise DomainError("geometric probe requires f(x) > 1")
        rhs = fx ** (1.0 / (1.0 - t) + 1.0 / t)
        refuted = not fx >= rhs
        ineq = f"f(x) >= f(x)^(1/(1-t)+1/t) = {rhs:.6g}"
    else:  # G_1-concave
        if fx <= 1.0:
            raise DomainError("geometric probe requires f(x) > 1")
        rhs = fx * fx
        refuted = not fx >= rhs
        ineq = f"f(x) >= f(x)^2 = {rhs:.6g}"
    return RefutationRecord(case, spec.arg_mean, x, t, fx, rhs, refuted, ineq)
