"""Deterministic sampling plans: Cartesian grids plus seeded random points.

All sample streams are ordered (grid first, then random) so that the
"smallest-index witness" reported by a verifier is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .intervals import Interval

T_EPS = 1e-6


@dataclass(frozen=True)
class SamplePlan:
    """Grid sizes and random-sample count for a verification run.

    grid_axis points per spatial axis, grid_t points over the weight
    parameter t, n_random seeded uniform samples appended after the grid.
    """

    grid_axis: int = 33
    grid_t: int = 17
    n_random: int = 10_000
    seed: int = 42

    def __post_init__(self):
        if self.grid_axis < 0 or self.grid_t < 0 or self.n_random < 0:
            raise ValueError("plan sizes must be nonnegative")
        if self.grid_axis + self.n_random == 0:
            raise ValueError("empty sample plan")

    def with_seed(self, seed: int) -> "SamplePlan":
        return replace(self, seed=seed)

    def _rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def _axis(self, domain: Interval) -> np.ndarray:
        lo, hi = domain.sampling_bounds()
        return np.linspace(lo, hi, self.grid_axis)

    def t_grid(self) -> np.ndarray:
        return np.linspace(T_EPS, 1.0 - T_EPS, self.grid_t)

    def pairs_with_t(self, domain: Interval) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Ordered (x, y, t) samples: grid_axis^2 * grid_t grid, then random."""
        xs = self._axis(domain)
        ts = self.t_grid()
        gx, gy, gt = np.meshgrid(xs, xs, ts, indexing="ij")
        x, y, t = gx.ravel(), gy.ravel(), gt.ravel()
        if self.n_random:
            rng = self._rng()
            lo, hi = domain.sampling_bounds()
            rx = rng.uniform(lo, hi, self.n_random)
            ry = rng.uniform(lo, hi, self.n_random)
            rt = rng.uniform(T_EPS, 1.0 - T_EPS, self.n_random)
            x = np.concatenate([x, rx])
            y = np.concatenate([y, ry])
            t = np.concatenate([t, rt])
        return x, y, t

    def triples(self, domain: Interval) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Ordered (x, y, z) samples: grid_axis^3 grid, then random."""
        xs = self._axis(domain)
        gx, gy, gz = np.meshgrid(xs, xs, xs, indexing="ij")
        x, y, z = gx.ravel(), gy.ravel(), gz.ravel()
        if self.n_random:
            rng = self._rng()
            lo, hi = domain.sampling_bounds()
            r = rng.uniform(lo, hi, (3, self.n_random))
            x = np.concatenate([x, r[0]])
            y = np.concatenate([y, r[1]])
            z = np.concatenate([z, r[2]])
        return x, y, z

    def scalar_pairs(self, domain: Interval) -> tuple[np.ndarray, np.ndarray]:
        """Ordered (s, t) pairs for additivity/multiplicativity checks."""
        xs = self._axis(domain)
        gs, gt = np.meshgrid(xs, xs, indexing="ij")
        s, t = gs.ravel(), gt.ravel()
        if self.n_random:
            rng = self._rng()
            lo, hi = domain.sampling_bounds()
            r = rng.uniform(lo, hi, (2, self.n_random))
            s = np.concatenate([s, r[0]])
            t = np.concatenate([t, r[1]])
        return s, t


def rel_scale(lhs: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Comparison scale max(1, |lhs|, |rhs|) used by all tolerance checks."""
    return np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
