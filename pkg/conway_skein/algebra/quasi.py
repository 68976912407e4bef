"""Quasi Conway algebra on infinitely many generators
Created on: 19 Oct 2026

Values are pairs (n, F) with n a component count and F a Laurent polynomial
in y1, x'2, z'2 and x_i, z_i for i >= 1. The operations are defined only on
pairs whose counts differ by one. With n = n1:

    n1 = n2 - 1:  x_n * w + y_n * F1 = F2 - z_n      (for |)
                  x_n * F1 + y_n * w = F2 - z_n      (for *)
    n1 = n2 + 1:  the same with x'_n, y'_n, z'_n

where y_i = x_i * y1/x1, x'_i = x'2 * x1/x_(i-1), y'_i = x'_i * y1/x1 and
z'_(i+1) = z_(i-1) + x1 * x'2 * (1 + y1/x1) * (z'_i/x'_i - z_i/x_i).
"""

from __future__ import annotations

__all__ = [
    "derived_generator",
    "QuasiAlgebra",
    "QuasiValue",
    "verify_constraints",
]

import logging
import threading

import numpy as np

import conway_skein.algebra.base as csab
import conway_skein.algebra.polynomial as csap
import conway_skein.errors as cse
import conway_skein.polynomial.laurent as cspl

logger = logging.getLogger(__name__)

QuasiValue = tuple[int, cspl.LaurentPoly]

_FREE = frozenset({("x", None), ("z", None), ("y", 1), ("x'", 2), ("z'", 2)})
_cache: dict[tuple[str, int], cspl.LaurentPoly] = {}
_cache_lock = threading.Lock()


def _var(family: str, i: int) -> cspl.LaurentPoly:
    return cspl.var(cspl.VarId(cspl.Family.from_string(family), i))


def derived_generator(family: str, i: int) -> cspl.LaurentPoly:
    """generator of the given family and index, expressed in the free ones"""
    if i < 1 or (family in ("x'", "y'", "z'") and i < 2):
        raise cse.NoSuchGeneratorError(f"There is no generator {family}{i}.")
    if (family, None) in _FREE or (family, i) in _FREE:
        return _var(family, i)
    key = (family, i)
    cached = _cache.get(key)
    if cached is not None:
        return cached
    value = _derive(family, i)
    with _cache_lock:
        _cache.setdefault(key, value)
    logger.debug(f"derived {family}{i} with {len(value)} terms")
    return value


def _derive(family: str, i: int) -> cspl.LaurentPoly:
    x1, y1 = _var("x", 1), _var("y", 1)
    if family == "y":
        return (_var("x", i) * y1).div_monomial(x1)
    if family == "x'":
        return (_var("x'", 2) * x1).div_monomial(_var("x", i - 1))
    if family == "y'":
        return (derived_generator("x'", i) * y1).div_monomial(x1)
    if family == "z'":
        k = i - 1
        ratio = 1 + y1.div_monomial(x1)
        diff = derived_generator("z'", k).div_monomial(derived_generator("x'", k))
        diff = diff - _var("z", k).div_monomial(_var("x", k))
        return _var("z", k - 1) + x1 * _var("x'", 2) * ratio * diff
    raise cse.NoSuchGeneratorError(f"Unknown generator family '{family}'.")


_g = derived_generator


class QuasiAlgebra(csab.ConwayAlgebra[QuasiValue]):
    quasi = True

    @staticmethod
    def name() -> str:
        return "quasi39"

    @staticmethod
    def description() -> str:
        return "Pairs (n, F) over infinitely many generators; partial operations."

    def constant(self, n: int) -> QuasiValue:
        value = cspl.LaurentPoly.one()
        for i in range(1, n):
            value = (_g("x", i) + _g("y", i)) * value + _g("z", i)
        return n, value

    def in_domain(self, u: QuasiValue, v: QuasiValue) -> bool:
        return abs(u[0] - v[0]) == 1

    def _coefficients(
        self, u: QuasiValue, v: QuasiValue
    ) -> tuple[cspl.LaurentPoly, cspl.LaurentPoly, cspl.LaurentPoly]:
        n = u[0]
        if u[0] == v[0] - 1:
            return _g("x", n), _g("y", n), _g("z", n)
        if n < 2:
            msg = f"Pair {self.serialize(u)}, {self.serialize(v)} needs the "
            msg += "equation for index 1', which does not exist."
            raise cse.NoSuchGeneratorError(msg)
        return _g("x'", n), _g("y'", n), _g("z'", n)

    def _pipe(self, u: QuasiValue, v: QuasiValue) -> QuasiValue:
        x, y, z = self._coefficients(u, v)
        return u[0], (v[1] - z - y * u[1]).div_monomial(x)

    def _star(self, u: QuasiValue, v: QuasiValue) -> QuasiValue:
        x, y, z = self._coefficients(u, v)
        return u[0], (v[1] - z - x * u[1]).div_monomial(y)

    def serialize(self, value: QuasiValue) -> str:
        return f"({value[0]}, {value[1]})"

    def to_json(self, value: QuasiValue) -> dict[str, object]:
        return {"n": int(value[0]), "value": str(value[1])}

    def _poly(self, rng: np.random.Generator) -> cspl.LaurentPoly:
        return csap.random_poly(rng, ("x1", "y1", "z1"), max_terms=2, max_exponent=1)

    def sample(self, rng: np.random.Generator) -> QuasiValue:
        return int(rng.integers(1, 6)), self._poly(rng)

    def sample_pair(self, rng: np.random.Generator) -> tuple[QuasiValue, QuasiValue]:
        n = int(rng.integers(1, 6))
        m = n + 1 if n == 1 or rng.random() < 0.5 else n - 1
        return (n, self._poly(rng)), (m, self._poly(rng))

    def sample_quadruple(
        self, rng: np.random.Generator
    ) -> tuple[QuasiValue, QuasiValue, QuasiValue, QuasiValue]:
        """counts following one of the patterns under which 1.3-1.5 are defined"""
        n = int(rng.integers(3, 6))
        patterns = (
            (n, n - 1, n + 1, n),
            (n, n + 1, n + 1, n),
            (n, n + 1, n + 1, n + 2),
            (n, n - 1, n - 1, n - 2),
            (n, n - 1, n - 1, n),
        )
        counts = patterns[int(rng.integers(len(patterns)))]
        a, b, c, d = ((k, self._poly(rng)) for k in counts)
        return a, b, c, d


def _ratio(p: cspl.LaurentPoly, q: cspl.LaurentPoly) -> cspl.LaurentPoly:
    return p.div_monomial(q)


def verify_constraints(bound: int = 6) -> csab.Report:
    """conditions (i)-(v) on the derived generators for n = 2..bound"""
    report = csab.Report("quasi39 constraints")
    for n in range(2, bound + 1):
        checks = {
            "(i)": (_g("x", n - 1) * _g("x'", n), _g("x", n) * _g("x'", n + 1)),
            "(ii)": (
                _ratio(_g("y'", n + 1), _g("x'", n + 1)),
                _ratio(_g("y'", n), _g("x'", n)),
            ),
            "(iii)": (
                _ratio(_g("y", n), _g("x", n)),
                _ratio(_g("y", n - 1), _g("x", n - 1)),
            ),
            "(iv)": _condition_iv(n),
            "(v)": (
                _ratio(_g("y", n), _g("x", n)),
                _ratio(_g("y'", n + 1), _g("x'", n + 1)),
            ),
        }
        for label, (lhs, rhs) in checks.items():
            witness = None if lhs == rhs else f"n={n}: {lhs} != {rhs}"
            report.record(f"{label} n={n}", passed=lhs == rhs, witness=witness)
    logger.info(f"checked constraints up to n={bound}: {report.summary()}")
    return report


def _condition_iv(n: int) -> tuple[cspl.LaurentPoly, cspl.LaurentPoly]:
    xn, xpn = _g("x", n), _g("x'", n)
    lhs = _g("z'", n + 1).div_monomial(xn * _g("x'", n + 1))
    lhs = lhs + _g("z", n).div_monomial(xn)
    lhs = lhs - (_g("y", n) * _g("z'", n)).div_monomial(xn * xpn)
    rhs = _g("z", n - 1).div_monomial(xpn * _g("x", n - 1))
    rhs = rhs + _g("z'", n).div_monomial(xpn)
    rhs = rhs - (_g("y'", n) * _g("z", n)).div_monomial(xn * xpn)
    return lhs, rhs
