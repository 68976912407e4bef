"""Polynomial Conway algebras in x, y (and z)
Created on: 19 Oct 2026

Both solve x * w1 + y * w2 = w0 - z for the missing argument:
w2 | w0 = w1 and w1 * w0 = w2. The two-variable algebra has z = 0.
"""

from __future__ import annotations

__all__ = [
    "random_poly",
    "ThreeVarAlgebra",
    "TwoVarAlgebra",
]

import functools
import logging

import numpy as np

import conway_skein.algebra.base as csab
import conway_skein.polynomial.laurent as cspl

logger = logging.getLogger(__name__)

X = cspl.var("x")
Y = cspl.var("y")
Z = cspl.var("z")


def random_poly(
    rng: np.random.Generator,
    variables: tuple[str, ...] = ("x", "y"),
    *,
    max_terms: int = 3,
    max_exponent: int = 2,
    max_coeff: int = 3,
) -> cspl.LaurentPoly:
    """a small random Laurent polynomial (z-family exponents kept nonnegative)"""
    total = cspl.LaurentPoly.zero()
    for _ in range(int(rng.integers(1, max_terms + 1))):
        term = cspl.LaurentPoly.constant(int(rng.integers(-max_coeff, max_coeff + 1)))
        for name in variables:
            v = cspl.VarId.parse(name)
            low = -max_exponent if v.invertible else 0
            term = term * cspl.var(v, int(rng.integers(low, max_exponent + 1)))
        total = total + term
    return total


class ThreeVarAlgebra(csab.ConwayAlgebra[cspl.LaurentPoly]):
    has_circle = True
    variables: tuple[str, ...] = ("x", "y", "z")

    @staticmethod
    def name() -> str:
        return "P3"

    @staticmethod
    def description() -> str:
        return "Laurent polynomials in x, y and z with x*w1 + y*w2 = w0 - z."

    @property
    def z(self) -> cspl.LaurentPoly:
        return Z

    @functools.lru_cache(maxsize=64)
    def constant(self, n: int) -> cspl.LaurentPoly:
        """a_n = (x+y)^(n-1) + z * sum_{k < n-1} (x+y)^k"""
        s = X + Y
        value = s ** (n - 1)
        for k in range(n - 1):
            value = value + self.z * s**k
        return value

    def _pipe(self, u: cspl.LaurentPoly, v: cspl.LaurentPoly) -> cspl.LaurentPoly:
        return (v - self.z - Y * u).div_monomial(X)

    def _star(self, u: cspl.LaurentPoly, v: cspl.LaurentPoly) -> cspl.LaurentPoly:
        return (v - self.z - X * u).div_monomial(Y)

    def _circle(self, u: cspl.LaurentPoly, v: cspl.LaurentPoly) -> cspl.LaurentPoly:
        return X * u + Y * v + self.z

    def sample(self, rng: np.random.Generator) -> cspl.LaurentPoly:
        return random_poly(rng, self.variables)


class TwoVarAlgebra(ThreeVarAlgebra):
    variables = ("x", "y")

    @staticmethod
    def name() -> str:
        return "P2"

    @staticmethod
    def description() -> str:
        return "Laurent polynomials in x and y with x*w1 + y*w2 = w0."

    @property
    def z(self) -> cspl.LaurentPoly:
        return cspl.LaurentPoly.zero()
