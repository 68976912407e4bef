"""Exact multivariate Laurent polynomials with integer coefficients
Created on: 19 Oct 2026

Polynomials are immutable and stored sparsely as a map from monomials to
nonzero integer coefficients. A monomial is a sorted tuple of
``(VarId, exponent)`` pairs with nonzero exponents. Variables of the
z-families never carry negative exponents.

Text grammar (canonical serialization)::

    poly     := "0" | term (sep term)*
    sep      := " + " | " - "
    term     := [coeff "*"] monomial | coeff
    monomial := power ("*" power)*
    power    := name ["^" int]
    name     := ("x" | "y" | "z") [index] | ("x'" | "y'" | "z'") index

An unprimed name without an index denotes index 1, e.g. ``x`` is ``x1``.
Terms are ordered lexicographically on (family, index, exponent) of their
monomials, with the constant term last.
"""

from __future__ import annotations

__all__ = [
    "add",
    "div_monomial",
    "Family",
    "LaurentPoly",
    "Monomial",
    "mul",
    "substitute",
    "var",
    "VarId",
]

import collections.abc
import enum
import fractions
import re
import typing

import conway_skein.errors as cse


class Family(enum.Enum):
    X: str = "x"
    Y: str = "y"
    Z: str = "z"
    XP: str = "x'"
    YP: str = "y'"
    ZP: str = "z'"

    @classmethod
    def from_string(cls, string: str | Family) -> Family:
        if isinstance(string, cls):
            return string
        for member in cls:
            if string == member.value:
                return member
        valid = [m.value for m in cls]
        raise ValueError(f"'string' must be one of {valid}. Got '{string}'.")

    @property
    def order(self) -> int:
        return _FAMILY_ORDER[self]

    @property
    def primed(self) -> bool:
        return self in (Family.XP, Family.YP, Family.ZP)

    @property
    def invertible(self) -> bool:
        return self not in (Family.Z, Family.ZP)


_FAMILY_ORDER = {f: i for i, f in enumerate(Family)}
_NAME_RE = re.compile(r"^([xyz])(')?(\d+)?$")


class VarId(typing.NamedTuple):
    family: Family
    index: int = 1

    def __str__(self) -> str:
        if self.family.primed or self.index != 1:
            return f"{self.family.value}{self.index}"
        return self.family.value

    @property
    def invertible(self) -> bool:
        return self.family.invertible

    @property
    def sort_key(self) -> tuple[int, int]:
        return self.family.order, self.index

    @classmethod
    def parse(cls, name: str | VarId) -> VarId:
        if isinstance(name, VarId):
            return name
        match = _NAME_RE.match(name.strip())
        if match is None:
            raise ValueError(f"'{name}' is not a valid variable name.")
        letter, prime, index = match.groups()
        family = Family.from_string(letter + (prime or ""))
        if index is None and family.primed:
            raise ValueError(f"Primed variable '{name}' needs an index.")
        idx = int(index) if index is not None else 1
        if idx < 1:
            raise ValueError(f"Variable index must be positive. Got '{name}'.")
        return cls(family, idx)


Monomial = tuple[tuple[VarId, int], ...]
Scalar = typing.Union[int, "LaurentPoly"]

_ONE: Monomial = ()


def _mono_key(mono: Monomial) -> tuple[bool, tuple[tuple[int, int, int], ...]]:
    return len(mono) == 0, tuple((*v.sort_key, e) for v, e in mono)


def _normalize(pairs: collections.abc.Iterable[tuple[VarId, int]]) -> Monomial:
    exps: dict[VarId, int] = {}
    for v, e in pairs:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(((v, e) for v, e in exps.items() if e), key=_power_key))


def _power_key(power: tuple[VarId, int]) -> tuple[int, int]:
    return power[0].sort_key


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    return _normalize((*m1, *m2))


def _check_monomial(mono: Monomial) -> None:
    for v, e in mono:
        if e < 0 and not v.invertible:
            msg = f"Variable '{v}' is not invertible; "
            msg += f"got exponent {e} in a monomial."
            raise cse.NonUnitDivisorError(msg)


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(
        self,
        terms: collections.abc.Mapping[Monomial, int] | None = None,
        *,
        _checked: bool = False,
    ):
        cleaned: dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            if coeff == 0:
                continue
            if not _checked:
                mono = _normalize(mono)
                _check_monomial(mono)
            cleaned[mono] = cleaned.get(mono, 0) + int(coeff)
        self._terms = {m: c for m, c in cleaned.items() if c}
        self._hash: int | None = None

    # construction
    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls.constant(1)

    @classmethod
    def constant(cls, value: int) -> LaurentPoly:
        return cls({_ONE: value}, _checked=True)

    @classmethod
    def var(cls, name: str | VarId, exponent: int = 1) -> LaurentPoly:
        v = VarId.parse(name)
        return cls({((v, exponent),): 1})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: int = 1) -> LaurentPoly:
        return cls({mono: coeff})

    @classmethod
    def coerce(cls, other: Scalar) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return cls.constant(other)
        raise TypeError(f"Cannot coerce {type(other).__name__} to LaurentPoly.")

    # inspection
    @property
    def terms(self) -> collections.abc.Mapping[Monomial, int]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda t: _mono_key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {_ONE}

    @property
    def constant_term(self) -> int:
        return self._terms.get(_ONE, 0)

    @property
    def variables(self) -> frozenset[VarId]:
        return frozenset(v for mono in self._terms for v, _ in mono)

    def __len__(self) -> int:
        return len(self._terms)

    # arithmetic
    def __add__(self, other: Scalar) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return LaurentPoly(terms, _checked=True)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({m: -c for m, c in self._terms.items()}, _checked=True)

    def __sub__(self, other: Scalar) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        terms: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mono_mul(m1, m2)
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return LaurentPoly(terms, _checked=True)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            return LaurentPoly.one().div_monomial(self) ** (-exponent)
        result = LaurentPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def div_monomial(self, m: LaurentPoly) -> LaurentPoly:
        """exact quotient by a unit monomial (coefficient ±1, invertible variables)"""
        if not m.is_monomial():
            raise cse.NonUnitDivisorError(f"Divisor '{m}' is not a single term.")
        ((mono, coeff),) = m._terms.items()
        if coeff not in (1, -1):
            msg = f"Divisor '{m}' has non-unit coefficient {coeff}."
            raise cse.NonUnitDivisorError(msg)
        for v, _ in mono:
            if not v.invertible:
                msg = f"Divisor '{m}' contains non-invertible variable '{v}'."
                raise cse.NonUnitDivisorError(msg)
        inverse = tuple((v, -e) for v, e in mono)
        terms = {_mono_mul(mt, inverse): c * coeff for mt, c in self._terms.items()}
        return LaurentPoly(terms, _checked=True)

    def __truediv__(self, other: Scalar) -> LaurentPoly:
        return self.div_monomial(LaurentPoly.coerce(other))

    def rename(self, mapping: collections.abc.Mapping[VarId, VarId]) -> LaurentPoly:
        """apply a variable renaming (e.g., x <-> y for mirror images)"""
        terms: dict[Monomial, int] = {}
        for mono, coeff in self._terms.items():
            key = _normalize((mapping.get(v, v), e) for v, e in mono)
            terms[key] = terms.get(key, 0) + coeff
        return LaurentPoly(terms)

    def swap(self, a: str | VarId, b: str | VarId) -> LaurentPoly:
        va, vb = VarId.parse(a), VarId.parse(b)
        return self.rename({va: vb, vb: va})

    def substitute(
        self, bindings: collections.abc.Mapping[VarId | str, typing.Any]
    ) -> typing.Any:
        """evaluate exactly; int bindings are promoted to fractions"""
        values: dict[VarId, typing.Any] = {}
        for key, value in bindings.items():
            v = VarId.parse(key)
            if isinstance(value, int):
                value = fractions.Fraction(value)
            values[v] = value
        for v in self.variables:
            if v not in values:
                raise cse.UnboundVariableError(f"Variable '{v}' is not bound.")
            if v.invertible and values[v] == 0:
                msg = f"Zero substituted for invertible variable '{v}'."
                raise cse.ZeroSubstitutedForUnitError(msg)
        total: typing.Any = 0
        for mono, coeff in self.sorted_terms():
            term: typing.Any = coeff
            for v, e in mono:
                term = term * values[v] ** e
            total = total + term
        return total

    # comparison & hashing
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # serialization
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for i, (mono, coeff) in enumerate(self.sorted_terms()):
            body = _format_term(mono, abs(coeff))
            if i == 0:
                out = ("-" if coeff < 0 else "") + body
            else:
                out += (" - " if coeff < 0 else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def to_json(self) -> list[list[typing.Any]]:
        return [
            [coeff, [[str(v), e] for v, e in mono]]
            for mono, coeff in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: collections.abc.Sequence[typing.Any]) -> LaurentPoly:
        terms: dict[Monomial, int] = {}
        for coeff, powers in data:
            mono = tuple((VarId.parse(name), int(e)) for name, e in powers)
            terms[mono] = terms.get(mono, 0) + int(coeff)
        return cls(terms)


def _format_term(mono: Monomial, coeff: int) -> str:
    if not mono:
        return str(coeff)
    powers = "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in mono)
    return powers if coeff == 1 else f"{coeff}*{powers}"


def var(name: str | VarId, exponent: int = 1) -> LaurentPoly:
    return LaurentPoly.var(name, exponent)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def div_monomial(p: LaurentPoly, m: LaurentPoly) -> LaurentPoly:
    return p.div_monomial(m)


def substitute(
    p: LaurentPoly, bindings: collections.abc.Mapping[VarId | str, typing.Any]
) -> typing.Any:
    return p.substitute(bindings)
