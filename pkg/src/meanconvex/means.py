"""Classical and weight-generalized arithmetic/geometric/harmonic means.

Weight placements follow the printed generalized-mean formulas verbatim:
the arithmetic and geometric forms put h(t) on the second argument, the
harmonic form puts h(t) on the first argument in the denominator. No
"correction" is applied; the three-point inequalities are proved against
these exact placements.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, EvaluationError
from .weights import DEFAULT_TOL, WeightFunction, weight_eval


class MeanKind(enum.Enum):
    ARITHMETIC = "A"
    GEOMETRIC = "G"
    HARMONIC = "H"


@dataclass(frozen=True)
class MeanEvalContext:
    kind: MeanKind
    h: WeightFunction
    t: float

    def __post_init__(self):
        if not 0.0 <= self.t <= 1.0:
            raise DomainError(f"t={self.t} outside [0, 1]")


def mean_eval(ctx: MeanEvalContext, a: float, b: float) -> float:
    """Generalized mean of positive a, b with weights h(t), h(1-t)."""
    if a <= 0 or b <= 0:
        raise DomainError("means are defined for positive arguments only")
    ht = weight_eval(ctx.h, ctx.t)
    h1t = weight_eval(ctx.h, 1.0 - ctx.t)
    if ctx.kind is MeanKind.ARITHMETIC:
        return h1t * a + ht * b
    if ctx.kind is MeanKind.GEOMETRIC:
        # log domain: products of many near-zero factors appear downstream
        return math.exp(h1t * math.log(a) + ht * math.log(b))
    denom = ht * a + h1t * b
    if denom == 0:
        raise EvaluationError("harmonic denominator vanished")
    return a * b / denom


def mean_classic(kind: MeanKind, a: float, b: float) -> float:
    """Unweighted two-point mean; equals mean_eval at h=identity, t=1/2."""
    if a <= 0 or b <= 0:
        raise DomainError("means are defined for positive arguments only")
    if kind is MeanKind.ARITHMETIC:
        return (a + b) / 2.0
    if kind is MeanKind.GEOMETRIC:
        return math.sqrt(a * b)
    return 2.0 * a * b / (a + b)


@dataclass(frozen=True)
class ChainVerdict:
    """Result of the H_h <= G_h <= A_h ordering check at one (t, a, b)."""

    h_mean: float
    g_mean: float
    a_mean: float
    margin_hg: float  # G_h - H_h
    margin_ga: float  # A_h - G_h
    holds: bool


def check_am_gm_hm(h: WeightFunction, t: float, a: float, b: float,
                   tol: float = DEFAULT_TOL) -> ChainVerdict:
    """Evaluate the generalized mean chain H_h <= G_h <= A_h at (t, a, b).

    The chain is not guaranteed for every positive increasing h (it fails
    numerically for h(t)=t^2); callers record pass/fail per weight.
    """
    if not 0.0 < t < 1.0:
        raise DomainError("chain check samples interior t only")
    hm = mean_eval(MeanEvalContext(MeanKind.HARMONIC, h, t), a, b)
    gm = mean_eval(MeanEvalContext(MeanKind.GEOMETRIC, h, t), a, b)
    am = mean_eval(MeanEvalContext(MeanKind.ARITHMETIC, h, t), a, b)
    margin_hg = gm - hm
    margin_ga = am - gm
    scale = max(1.0, abs(hm), abs(gm), abs(am))
    holds = margin_hg >= -tol * scale and margin_ga >= -tol * scale
    return ChainVerdict(hm, gm, am, margin_hg, margin_ga, holds)
