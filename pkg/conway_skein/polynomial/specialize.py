"""Specialize two-variable invariants to the Conway and Jones polynomials
Created on: 19 Oct 2026

Conway: x = -1/z, y = 1/z, a Laurent polynomial in z.
Jones: x = 1/(s^3 - s), y = -s^3/(s^2 - 1) with s = t^(1/2), so half-integer
powers of t appear as integer powers of s.
"""

from __future__ import annotations

__all__ = [
    "bindings",
    "specialize",
    "target_symbol",
    "to_sympy",
]

import logging

import sympy as sp

import conway_skein.errors as cse
import conway_skein.polynomial.laurent as cspl
import conway_skein.typing as cst

logger = logging.getLogger(__name__)

_Z = sp.Symbol("z")
_S = sp.Symbol("s")


def target_symbol(target: cst.Specialization | str) -> sp.Symbol:
    target = cst.Specialization.from_string(target)
    return _Z if target == cst.Specialization.CONWAY else _S


def bindings(target: cst.Specialization | str) -> dict[cspl.VarId, sp.Expr]:
    target = cst.Specialization.from_string(target)
    x, y = cspl.VarId.parse("x"), cspl.VarId.parse("y")
    if target == cst.Specialization.CONWAY:
        return {x: -1 / _Z, y: 1 / _Z}
    return {x: 1 / (_S**3 - _S), y: -(_S**3) / (_S**2 - 1)}


def to_sympy(p: cspl.LaurentPoly) -> sp.Expr:
    """the polynomial as a sympy expression in symbols named like its variables"""
    symbols = {v: sp.Symbol(str(v)) for v in p.variables}
    return sp.sympify(p.substitute(symbols))


def specialize(value: cspl.LaurentPoly, target: cst.Specialization | str) -> sp.Expr:
    """substitute and clear denominators; the result must be Laurent in z (or s)"""
    sym = target_symbol(target)
    expr = sp.cancel(sp.sympify(value.substitute(bindings(target))))
    num, den = sp.fraction(expr)
    den_poly = sp.Poly(den, sym)
    if len(den_poly.terms()) != 1:
        msg = f"Specialization of '{value}' to {target} is not a Laurent "
        msg += f"polynomial; denominator {den} does not clear."
        raise cse.NonLaurentResultError(msg)
    result = sp.expand(num / den)
    logger.debug(f"specialized {value} -> {result}")
    return result
