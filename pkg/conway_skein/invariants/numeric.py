"""Floating-point skein recursion, an oracle for the exact specializations
Created on: 19 Oct 2026

Evaluates x * w(L+) + y * w(L-) = w(L0) - z with numpy floats at a given
point, using random base points and no simplification, so that it shares
neither arithmetic nor resolution order with the exact evaluator.
"""

from __future__ import annotations

__all__ = ["conway_point", "jones_point", "numeric_skein"]

import logging

import numpy as np

import conway_skein.diagram.base as csdb
import conway_skein.skein.base as cssb
import conway_skein.typing as cst

logger = logging.getLogger(__name__)


def conway_point(z: float) -> tuple[float, float]:
    """(x, y) at which the two-variable invariant becomes the Conway polynomial"""
    return -1.0 / z, 1.0 / z


def jones_point(s: float) -> tuple[float, float]:
    """(x, y) giving the Jones polynomial at t = s**2"""
    return 1.0 / (s**3 - s), -(s**3) / (s**2 - 1.0)


class _Skein:
    def __init__(
        self,
        x: float,
        y: float,
        z: float,
        convention: cst.Convention,
        strategy: cssb.BaseStrategy,
    ):
        self.x, self.y, self.z = np.float64(x), np.float64(y), np.float64(z)
        self.convention = convention
        self.strategy = strategy
        self.memo: dict[csdb.DiagramKey, np.float64] = {}

    def leaf(self, n: int) -> np.float64:
        s = self.x + self.y
        powers = s ** np.arange(n, dtype=np.float64)
        return np.float64(powers[-1] + self.z * powers[:-1].sum())

    def __call__(
        self, d: csdb.Diagram, base_points: cssb.BasePoints | None = None
    ) -> np.float64:
        key = d.canonical_key
        if key in self.memo:
            return self.memo[key]
        if base_points is None:
            base_points = self.strategy(d)
        p = cssb.first_bad_crossing(cssb.BasePointState(d, base_points))
        if p is None:
            value = self.leaf(d.component_count)
        else:
            u = self(cssb.switch(d, p), base_points)
            v = self(cssb.smooth(d, p))
            if self.convention.effective_sign(d.crossings[p].sign) > 0:
                value = (v - self.z - self.y * u) / self.x
            else:
                value = (v - self.z - self.x * u) / self.y
        self.memo[key] = value
        return value


def numeric_skein(
    d: csdb.Diagram,
    x: float,
    y: float,
    z: float = 0.0,
    *,
    convention: cst.Convention | str = cst.Convention.MODERN,
    seed: int | None = 0,
) -> float:
    convention = cst.Convention.from_string(convention)
    skein = _Skein(x, y, z, convention, cssb.RandomBaseStrategy(seed))
    value = float(skein(d))
    logger.debug(f"numeric skein at ({x}, {y}, {z}): {value}")
    return value
