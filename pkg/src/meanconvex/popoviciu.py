"""Three-point (Popoviciu-type) inequalities for the nine mean pairs.

Each theorem id binds the exact printed left- and right-hand sides. Sum
theorems (AA, GA, HA) compare sums of function values, product theorems
(AG, GG, HG) compare products (evaluated and compared in log domain), and
reciprocal theorems (AH, GH, HH) compare sums of reciprocals. The HH left
side is implemented in the reciprocal-sum form of its derivation; the
printed statement's plain-sum left side is dimensionally inconsistent with
its own right side.

Direction convention: each theorem states its inequality for one "base"
sense (convex for AA/AG/GA/GG/HA/HG, concave for AH/GH/HH); the opposite
sense reverses the printed direction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .convexity import PointFunction, Witness
from .errors import DomainError, HypothesisMismatchError
from .intervals import Interval
from .sampling import SamplePlan, rel_scale
from .weights import (DEFAULT_TOL, WeightFunction, classify_additivity,
                      classify_multiplicativity, identity_weight, weight_eval)


class TheoremId(enum.Enum):
    AA = "AA"
    AG = "AG"
    AH = "AH"
    GA = "GA"
    GG = "GG"
    GH = "GH"
    HA = "HA"
    HG = "HG"
    HH = "HH"


# form: how the sides combine; base_sense: the sense the printed "<=" binds to
_FORM = {
    TheoremId.AA: "sum", TheoremId.GA: "sum", TheoremId.HA: "sum",
    TheoremId.AG: "product", TheoremId.GG: "product", TheoremId.HG: "product",
    TheoremId.AH: "recip", TheoremId.GH: "recip", TheoremId.HH: "recip",
}

BASE_SENSE = {
    TheoremId.AA: "convex", TheoremId.AG: "convex", TheoremId.AH: "concave",
    TheoremId.GA: "convex", TheoremId.GG: "convex", TheoremId.GH: "concave",
    TheoremId.HA: "convex", TheoremId.HG: "convex", TheoremId.HH: "concave",
}


def _pair_and_central(tid: TheoremId, x, y, z):
    """The three pairwise argument means and the central three-point mean."""
    fam = tid.value[0]
    if fam == "A":
        return (x + z) / 2.0, (y + z) / 2.0, (x + y) / 2.0, (x + y + z) / 3.0
    if fam == "G":
        return np.sqrt(x * z), np.sqrt(y * z), np.sqrt(x * y), np.cbrt(x * y * z)
    sxy = x * y + y * z + x * z
    return (2.0 * x * z / (x + z), 2.0 * y * z / (y + z),
            2.0 * x * y / (x + y), 3.0 * x * y * z / sxy)


def _sides_arrays(tid: TheoremId, h: WeightFunction, f: PointFunction, x, y, z):
    """Vectorized (lhs, rhs, valid) in the theorem's comparison domain.

    Product theorems return log-domain sides.
    """
    h32 = weight_eval(h, 1.5)
    h12 = weight_eval(h, 0.5)
    with np.errstate(all="ignore"):
        m1, m2, m3, c = _pair_and_central(tid, x, y, z)
        fx, fy, fz = f(x), f(y), f(z)
        fm1, fm2, fm3, fc = f(m1), f(m2), f(m3), f(c)
        form = _FORM[tid]
        if form == "sum":
            lhs = fm1 + fm2 + fm3
            rhs = h32 * fc + h12 * (fx + fy + fz)
        elif form == "product":
            lhs = np.log(fm1) + np.log(fm2) + np.log(fm3)
            rhs = h32 * np.log(fc) + h12 * (np.log(fx) + np.log(fy) + np.log(fz))
        else:
            lhs = 1.0 / fm1 + 1.0 / fm2 + 1.0 / fm3
            rhs = h12 * (1.0 / fx + 1.0 / fy + 1.0 / fz) + h32 / fc
    valid = np.isfinite(lhs) & np.isfinite(rhs)
    with np.errstate(invalid="ignore"):
        for arg in (m1, m2, m3, c):
            valid &= np.isfinite(arg) & f.domain.contains_array(arg)
    return np.atleast_1d(lhs), np.atleast_1d(rhs), np.atleast_1d(valid)


def popoviciu_sides(tid: TheoremId, h: WeightFunction, f: PointFunction,
                    x: float, y: float, z: float) -> tuple[float, float]:
    """Both printed sides at one triple; products are exp of log-domain sums."""
    arr = lambda v: np.array([float(v)])
    lhs, rhs, valid = _sides_arrays(tid, h, f, arr(x), arr(y), arr(z))
    if not valid[0]:
        raise DomainError(
            f"triple ({x}, {y}, {z}) not evaluable for theorem {tid.value} on {f.name}")
    if _FORM[tid] == "product":
        return float(np.exp(lhs[0])), float(np.exp(rhs[0]))
    return float(lhs[0]), float(rhs[0])


def two_point_reduction(tid: TheoremId, h: WeightFunction, f: PointFunction,
                        x: float, y: float) -> tuple[float, float]:
    """The z = y specialization; identical by construction to the full sides."""
    return popoviciu_sides(tid, h, f, x, y, y)


@dataclass(frozen=True)
class PopoviciuReport:
    theorem: TheoremId
    h_name: str
    f_name: str
    sense: str
    triples_tested: int
    min_margin: float  # relative margin in the comparison domain
    max_abs_residual_at_equality: float
    witnesses: list[Witness] = field(default_factory=list)
    skipped: int = 0
    h_class: Optional[str] = None  # recorded, never enforced

    @property
    def status(self) -> str:
        return "refuted" if self.witnesses else "holds-on-samples"

    @property
    def holds(self) -> bool:
        return not self.witnesses


def verify_theorem(tid: TheoremId, h: WeightFunction, f: PointFunction,
                   sense: str = None, plan: SamplePlan | None = None,
                   tol: float = DEFAULT_TOL, box: Optional[Interval] = None,
                   max_witnesses: int = 8,
                   h_class: Optional[str] = None) -> PopoviciuReport:
    """Sample triples from f's domain and test the theorem's printed direction.

    sense defaults to the theorem's base sense. The super/subadditivity class
    of h is recorded (when supplied) but never enforced; audits deliberately
    run theorems under violated hypotheses.
    """
    if sense is None:
        sense = BASE_SENSE[tid]
    if sense not in ("convex", "concave"):
        raise ValueError(f"sense must be convex|concave, got {sense!r}")
    plan = plan or SamplePlan()
    dom = f.sampling_domain(box)
    x, y, z = plan.triples(dom)
    lhs, rhs, valid = _sides_arrays(tid, h, f, x, y, z)
    n_total = x.size
    n_valid = int(valid.sum())
    if n_valid == 0:
        raise DomainError(f"no usable triples for {tid.value} on {f.name}")
    forward = sense == BASE_SENSE[tid]
    margin = np.where(valid, (rhs - lhs) if forward else (lhs - rhs), np.inf)
    rel = margin / rel_scale(np.where(valid, lhs, 0.0), np.where(valid, rhs, 0.0))
    violating = valid & (rel < -tol)
    witnesses = []
    for i in np.flatnonzero(violating)[:max_witnesses]:
        wl, wr = popoviciu_sides(tid, h, f, float(x[i]), float(y[i]), float(z[i]))
        witnesses.append(Witness(float(x[i]), float(y[i]), None, wl, wr,
                                 z=float(z[i]), index=int(i)))
    # residual on degenerate x = y = z triples
    diag = np.linspace(*dom.sampling_bounds(), 33)
    dl, dr, dv = _sides_arrays(tid, h, f, diag, diag, diag)
    if dv.any():
        resid = float(np.max(np.abs(dl[dv] - dr[dv]) / rel_scale(dl[dv], dr[dv])))
    else:
        resid = float("nan")
    return PopoviciuReport(tid, h.name, f.name, sense, n_valid,
                           float(np.min(rel[valid])), resid, witnesses,
                           skipped=n_total - n_valid, h_class=h_class)


# ---------------------------------------------------------------------------
# Equality families: corollary identities exact for every admissible triple.

EQUALITY_FAMILIES = {
    "affine-AA": (TheoremId.AA, PointFunction(
        "affine", lambda v: 2.0 * v + 3.0, Interval(0.0, np.inf))),
    "reciprocal-AH": (TheoremId.AH, PointFunction(
        "reciprocal", lambda v: 1.0 / v, Interval(0.0, np.inf))),
    "log-GA": (TheoremId.GA, PointFunction(
        "log", np.log, Interval(1.0, np.inf))),
    "reciprocal-log-GH": (TheoremId.GH, PointFunction(
        "reciprocal_log", lambda v: 1.0 / np.log(v), Interval(1.0, np.inf))),
    "reciprocal-HA": (TheoremId.HA, PointFunction(
        "reciprocal", lambda v: 1.0 / v, Interval(0.0, np.inf))),
    "exp-reciprocal-HG": (TheoremId.HG, PointFunction(
        "exp_reciprocal", lambda v: np.exp(1.0 / v), Interval(0.0, np.inf))),
    "identity-HH": (TheoremId.HH, PointFunction(
        "identity", lambda v: v, Interval(0.0, np.inf))),
}


def equality_residual(family: str, x: float, y: float, z: float) -> float:
    """|lhs - rhs| of the identity-weight corollary for one of the seven
    hand-verifiable equality families (log-domain residual for the product
    family)."""
    if family not in EQUALITY_FAMILIES:
        raise KeyError(f"unknown equality family {family!r}; "
                       f"choose from {sorted(EQUALITY_FAMILIES)}")
    tid, f = EQUALITY_FAMILIES[family]
    for v in (x, y, z):
        if not f.domain.contains(v):
            raise DomainError(f"{v} outside the {family} domain")
    arr = lambda v: np.array([float(v)])
    lhs, rhs, valid = _sides_arrays(tid, identity_weight(), f,
                                    arr(x), arr(y), arr(z))
    if not valid[0]:
        raise DomainError(f"triple not evaluable for family {family}")
    return float(abs(lhs[0] - rhs[0]))


def theorem_margins(tid: TheoremId, h: WeightFunction, f: PointFunction,
                    x: np.ndarray, y: np.ndarray, z: np.ndarray,
                    sense: str = None) -> np.ndarray:
    """Relative margin of the printed inequality at each triple.

    Negative means violated; +inf marks triples that are not evaluable.
    """
    if sense is None:
        sense = BASE_SENSE[tid]
    lhs, rhs, valid = _sides_arrays(tid, h, f, np.asarray(x, dtype=float),
                                    np.asarray(y, dtype=float),
                                    np.asarray(z, dtype=float))
    forward = sense == BASE_SENSE[tid]
    margin = np.where(valid, (rhs - lhs) if forward else (lhs - rhs), np.inf)
    return margin / rel_scale(np.where(valid, lhs, 0.0), np.where(valid, rhs, 0.0))


def equality_max_residual(family: str, plan: SamplePlan | None = None,
                          box: Optional[Interval] = None) -> tuple[float, int]:
    """Max relative |lhs - rhs| of an equality family over sampled triples.

    Returns (max_residual, triples_tested).
    """
    if family not in EQUALITY_FAMILIES:
        raise KeyError(f"unknown equality family {family!r}")
    tid, f = EQUALITY_FAMILIES[family]
    plan = plan or SamplePlan()
    x, y, z = plan.triples(f.sampling_domain(box))
    lhs, rhs, valid = _sides_arrays(tid, identity_weight(), f, x, y, z)
    if not valid.any():
        raise DomainError(f"no usable triples for family {family}")
    resid = np.abs(lhs[valid] - rhs[valid]) / rel_scale(lhs[valid], rhs[valid])
    return float(resid.max()), int(valid.sum())


# ---------------------------------------------------------------------------
# Chained corollaries.

@dataclass(frozen=True)
class LinkResult:
    name: str
    min_margin: float  # relative
    samples: int
    skipped: int
    witness: Optional[Witness] = None

    @property
    def holds(self) -> bool:
        return self.witness is None


@dataclass(frozen=True)
class ChainedReport:
    corollary: str
    f_class: str
    h_class: str
    links: list[LinkResult]

    @property
    def holds(self) -> bool:
        return all(link.holds for link in self.links)


def _sum_rhs(tid, h32, h12, f, x, y, z):
    _, _, _, c = _pair_and_central(tid, x, y, z)
    return h32 * f(c) + h12 * (f(x) + f(y) + f(z))


def _pair_value_sum(tid, f, x, y, z):
    m1, m2, m3, _ = _pair_and_central(tid, x, y, z)
    return f(m1) + f(m2) + f(m3)


def _log_pair_product(tid, f, x, y, z):
    m1, m2, m3, _ = _pair_and_central(tid, x, y, z)
    return np.log(f(m1)) + np.log(f(m2)) + np.log(f(m3))


def _log_product_rhs(tid, h32, h12, f, x, y, z):
    _, _, _, c = _pair_and_central(tid, x, y, z)
    return h32 * np.log(f(c)) + h12 * (np.log(f(x)) + np.log(f(y)) + np.log(f(z)))


def _chain_links(corollary: str):
    """Per-corollary list of (name, lhs_fn, rhs_fn) in comparison domain.

    Each fn takes (h32, h12, f, x, y, z) arrays. The middle link is always
    the parent theorem's two sides.
    """
    AA, AG, GA, GG, HA, HG = (TheoremId.AA, TheoremId.AG, TheoremId.GA,
                              TheoremId.GG, TheoremId.HA, TheoremId.HG)
    table = {
        "cor4.1": ("additive", "subadditive", "superadditive", [
            ("f(x+y+z) <= sum of midpoint values",
             lambda h32, h12, f, x, y, z: f(x + y + z),
             lambda h32, h12, f, x, y, z: _pair_value_sum(AA, f, x, y, z)),
            ("theorem AA",
             lambda h32, h12, f, x, y, z: _pair_value_sum(AA, f, x, y, z),
             lambda h32, h12, f, x, y, z: _sum_rhs(AA, h32, h12, f, x, y, z)),
            ("central term split to thirds",
             lambda h32, h12, f, x, y, z: _sum_rhs(AA, h32, h12, f, x, y, z),
             lambda h32, h12, f, x, y, z: h32 * (f(x / 3) + f(y / 3) + f(z / 3))
             + h12 * (f(x) + f(y) + f(z))),
        ]),
        "cor4.2": ("additive", "superadditive", "superadditive", [
            ("theorem AA",
             lambda h32, h12, f, x, y, z: _pair_value_sum(AA, f, x, y, z),
             lambda h32, h12, f, x, y, z: _sum_rhs(AA, h32, h12, f, x, y, z)),
            ("point sum collapsed to f(x+y+z)",
             lambda h32, h12, f, x, y, z: _sum_rhs(AA, h32, h12, f, x, y, z),
             lambda h32, h12, f, x, y, z: h32 * f((x + y + z) / 3)
             + h12 * f(x + y + z)),
        ]),
        "cor8.1": ("multiplicative", "submultiplicative", "superadditive", [
            ("f of the midpoint product <= product of midpoint values",
             lambda h32, h12, f, x, y, z: np.log(
                 f((x + z) * (y + z) * (x + y) / 8.0)),
             lambda h32, h12, f, x, y, z: _log_pair_product(AG, f, x, y, z)),
            ("theorem AG",
             lambda h32, h12, f, x, y, z: _log_pair_product(AG, f, x, y, z),
             lambda h32, h12, f, x, y, z: _log_product_rhs(AG, h32, h12, f, x, y, z)),
        ]),
        "cor8.2": ("multiplicative", "supermultiplicative", "superadditive", [
            ("theorem AG",
             lambda h32, h12, f, x, y, z: _log_pair_product(AG, f, x, y, z),
             lambda h32, h12, f, x, y, z: _log_product_rhs(AG, h32, h12, f, x, y, z)),
            ("point product collapsed to f(xyz)",
             lambda h32, h12, f, x, y, z: _log_product_rhs(AG, h32, h12, f, x, y, z),
             lambda h32, h12, f, x, y, z: h32 * np.log(f((x + y + z) / 3.0))
             + h12 * np.log(f(x * y * z))),
        ]),
        "cor9.1": ("additive", "superadditive", "superadditive", [
            ("half-point sums <= midpoint values",
             lambda h32, h12, f, x, y, z: np.log(
                 (f(x / 2) + f(z / 2)) * (f(y / 2) + f(z / 2)) * (f(x / 2) + f(y / 2))),
             lambda h32, h12, f, x, y, z: _log_pair_product(AG, f, x, y, z)),
            ("theorem AG",
             lambda h32, h12, f, x, y, z: _log_pair_product(AG, f, x, y, z),
             lambda h32, h12, f, x, y, z: _log_product_rhs(AG, h32, h12, f, x, y, z)),
        ]),
        "cor9.2": ("additive", "subadditive", "superadditive", [
            ("theorem AG",
             lambda h32, h12, f, x, y, z: _log_pair_product(AG, f, x, y, z),
             lambda h32, h12, f, x, y, z: _log_product_rhs(AG, h32, h12, f, x, y, z)),
            ("central value split to thirds",
             lambda h32, h12, f, x, y, z: _log_product_rhs(AG, h32, h12, f, x, y, z),
             lambda h32, h12, f, x, y, z: h32 * np.log(f(x / 3) + f(y / 3) + f(z / 3))
             + h12 * (np.log(f(x)) + np.log(f(y)) + np.log(f(z)))),
        ]),
        "cor16.1": ("additive", "superadditive", "superadditive", [
            ("theorem GA",
             lambda h32, h12, f, x, y, z: _pair_value_sum(GA, f, x, y, z),
             lambda h32, h12, f, x, y, z: _sum_rhs(GA, h32, h12, f, x, y, z)),
            ("point sum collapsed to f(x+y+z)",
             lambda h32, h12, f, x, y, z: _sum_rhs(GA, h32, h12, f, x, y, z),
             lambda h32, h12, f, x, y, z: h32 * f(np.cbrt(x * y * z))
             + h12 * f(x + y + z)),
        ]),
        "cor16.2": ("additive", "subadditive", "superadditive", [
            ("f of the summed pair means <= sum",
             lambda h32, h12, f, x, y, z: f(
                 np.sqrt(x * z) + np.sqrt(y * z) + np.sqrt(x * y)),
             lambda h32, h12, f, x, y, z: _pair_value_sum(GA, f, x, y, z)),
            ("theorem GA",
             lambda h32, h12, f, x, y, z: _pair_value_sum(GA, f, x, y, z),
             lambda h32, h12, f, x, y, z: _sum_rhs(GA, h32, h12, f, x, y, z)),
        ]),
        "cor20.1": ("multiplicative", "supermultiplicative", "superadditive", [
            ("theorem GG",
             lambda h32, h12, f, x, y, z: _log_pair_product(GG, f, x, y, z),
             lambda h32, h12, f, x, y, z: _log_product_rhs(GG, h32, h12, f, x, y, z)),
            ("point product collapsed to f(xyz)",
             lambda h32, h12, f, x, y, z: _log_product_rhs(GG, h32, h12, f, x, y, z),
             lambda h32, h12, f, x, y, z: h32 * np.log(f(np.cbrt(x * y * z)))
             + h12 * np.log(f(x * y * z))),
        ]),
        "cor20.2": ("multiplicative", "submultiplicative", "superadditive", [
            ("f(xyz) <= product of pair-mean values",
             lambda h32, h12, f, x, y, z: np.log(f(x * y * z)),
             lambda h32, h12, f, x, y, z: _log_pair_product(GG, f, x, y, z)),
            ("theorem GG",
             lambda h32, h12, f, x, y, z: _log_pair_product(GG, f, x, y, z),
             lambda h32, h12, f, x, y, z: _log_product_rhs(GG, h32, h12, f, x, y, z)),
            ("central value split to cube roots",
             lambda h32, h12, f, x, y, z: _log_product_rhs(GG, h32, h12, f, x, y, z),
             lambda h32, h12, f, x, y, z: h32 * (np.log(f(np.cbrt(x)))
                                                 + np.log(f(np.cbrt(y)))
                                                 + np.log(f(np.cbrt(z))))
             + h12 * (np.log(f(x)) + np.log(f(y)) + np.log(f(z)))),
        ]),
        "cor27.1": ("additive", "superadditive", "superadditive", [
            ("doubled half-harmonic values <= pair-mean values",
             lambda h32, h12, f, x, y, z: 2.0 * (
                 f(x * z / (x + z)) + f(y * z / (y + z)) + f(x * y / (x + y))),
             lambda h32, h12, f, x, y, z: _pair_value_sum(HA, f, x, y, z)),
            ("theorem HA",
             lambda h32, h12, f, x, y, z: _pair_value_sum(HA, f, x, y, z),
             lambda h32, h12, f, x, y, z: _sum_rhs(HA, h32, h12, f, x, y, z)),
            ("point sum collapsed to f(x+y+z)",
             lambda h32, h12, f, x, y, z: _sum_rhs(HA, h32, h12, f, x, y, z),
             lambda h32, h12, f, x, y, z: h32 * f(
                 3.0 * x * y * z / (x * y + y * z + x * z)) + h12 * f(x + y + z)),
        ]),
        "cor27.2": ("additive", "subadditive", "superadditive", [
            ("f of the summed pair means <= sum",
             lambda h32, h12, f, x, y, z: f(
                 2 * x * z / (x + z) + 2 * y * z / (y + z) + 2 * x * y / (x + y)),
             lambda h32, h12, f, x, y, z: _pair_value_sum(HA, f, x, y, z)),
            ("theorem HA",
             lambda h32, h12, f, x, y, z: _pair_value_sum(HA, f, x, y, z),
             lambda h32, h12, f, x, y, z: _sum_rhs(HA, h32, h12, f, x, y, z)),
            ("tripled central value",
             lambda h32, h12, f, x, y, z: _sum_rhs(HA, h32, h12, f, x, y, z),
             lambda h32, h12, f, x, y, z: 3.0 * h32 * f(
                 x * y * z / (x * y + y * z + x * z))
             + h12 * (f(x) + f(y) + f(z))),
        ]),
        "HG-chain": ("additive", "superadditive", "superadditive", [
            ("doubled half-harmonic values <= pair-mean value sum",
             lambda h32, h12, f, x, y, z: 2.0 * (
                 f(x * z / (x + z)) + f(y * z / (y + z)) + f(x * y / (x + y))),
             lambda h32, h12, f, x, y, z: _pair_value_sum(HG, f, x, y, z)),
            ("pair-mean value sum <= theorem HG right side (as printed)",
             lambda h32, h12, f, x, y, z: _pair_value_sum(HG, f, x, y, z),
             lambda h32, h12, f, x, y, z: np.exp(
                 _log_product_rhs(HG, h32, h12, f, x, y, z))),
        ]),
    }
    if corollary not in table:
        raise KeyError(f"unknown chained corollary {corollary!r}; "
                       f"choose from {sorted(table)}")
    return table[corollary]


def chained_check(corollary: str, h: WeightFunction, f: PointFunction,
                  plan: SamplePlan | None = None, tol: float = DEFAULT_TOL,
                  box: Optional[Interval] = None,
                  enforce_hypotheses: bool = True) -> ChainedReport:
    """Evaluate each printed link of a chained corollary over sampled triples.

    Raises HypothesisMismatchError when the sampled sub/superadditivity (or
    multiplicativity) classes of f and h contradict the corollary's stated
    hypotheses; pass enforce_hypotheses=False to run anyway (audit mode).
    """
    plan = plan or SamplePlan()
    kind, f_hyp, h_hyp, links = _chain_links(corollary)
    dom = f.sampling_domain(box)
    classify = classify_additivity if kind == "additive" else classify_multiplicativity
    f_class = classify(f.fn, dom, plan, tol)
    h_class = classify_additivity(h, Interval(0.0, 1.0), plan, tol)
    if enforce_hypotheses:
        f_check = f_hyp.replace("multiplicative", "additive")
        if not f_class.satisfies(f_check):
            raise HypothesisMismatchError(
                f"{corollary} requires f {f_hyp}; sampled class is "
                f"{f_class.tag} (witness {f_class.witness})")
        if not h_class.satisfies(h_hyp):
            raise HypothesisMismatchError(
                f"{corollary} requires h {h_hyp}; sampled class is {h_class.tag}")
    h32 = weight_eval(h, 1.5)
    h12 = weight_eval(h, 0.5)
    x, y, z = plan.triples(dom)
    results = []
    for name, lhs_fn, rhs_fn in links:
        with np.errstate(all="ignore"):
            lhs = np.asarray(lhs_fn(h32, h12, f, x, y, z), dtype=float)
            rhs = np.asarray(rhs_fn(h32, h12, f, x, y, z), dtype=float)
        valid = np.isfinite(lhs) & np.isfinite(rhs)
        if not valid.any():
            raise DomainError(f"no usable triples for link {name!r}")
        rel = np.where(valid, rhs - lhs, np.inf) / rel_scale(
            np.where(valid, lhs, 0.0), np.where(valid, rhs, 0.0))
        witness = None
        bad = valid & (rel < -tol)
        if bad.any():
            i = int(np.argmax(bad))
            witness = Witness(float(x[i]), float(y[i]), None,
                              float(lhs[i]), float(rhs[i]), z=float(z[i]), index=i)
        results.append(LinkResult(name, float(np.min(rel[valid])),
                                  int(valid.sum()), int(x.size - valid.sum()),
                                  witness))
    return ChainedReport(corollary, f_class.tag, h_class.tag, results)


# ---------------------------------------------------------------------------

def hlawka_check(x: float, y: float, z: float) -> tuple[float, float, float]:
    """|x|+|y|+|z|+|x+y+z| versus |x+z|+|z+y|+|x+y|; margin = lhs - rhs >= 0."""
    lhs = abs(x) + abs(y) + abs(z) + abs(x + y + z)
    rhs = abs(x + z) + abs(z + y) + abs(x + y)
    return lhs, rhs, lhs - rhs


def hlawka_margins(x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Vectorized Hlawka margin for bulk sampling."""
    lhs = np.abs(x) + np.abs(y) + np.abs(z) + np.abs(x + y + z)
    rhs = np.abs(x + z) + np.abs(z + y) + np.abs(x + y)
    return lhs - rhs
