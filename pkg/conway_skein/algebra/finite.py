"""Algebras with integer values and the free term algebra
Created on: 19 Oct 2026
"""

from __future__ import annotations

__all__ = [
    "ComponentCountAlgebra",
    "LinkingAlgebra",
    "Mod3Algebra",
    "Term",
    "TermAlgebra",
]

import dataclasses
import logging

import numpy as np

import conway_skein.algebra.base as csab

logger = logging.getLogger(__name__)

Linking = tuple[int, int]


class ComponentCountAlgebra(csab.ConwayAlgebra[int]):
    @staticmethod
    def name() -> str:
        return "components"

    @staticmethod
    def description() -> str:
        return "Number of components: a_i = i, u | v = u * v = u."

    def constant(self, n: int) -> int:
        return n

    def _pipe(self, u: int, v: int) -> int:
        return u

    def _star(self, u: int, v: int) -> int:
        return u

    def to_json(self, value: int) -> int:
        return int(value)

    def sample(self, rng: np.random.Generator) -> int:
        return int(rng.integers(1, 9))


class Mod3Algebra(csab.ConwayAlgebra[int]):
    """values mod 3 with u | v = u * v = 1 - u - v"""

    has_circle = True

    def __init__(self, *, corrupted: bool = False):
        table = (1 - np.add.outer(np.arange(3), np.arange(3))) % 3
        if corrupted:
            table[0, 0] = 0
        self.table = table
        self.corrupted = corrupted

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(corrupted={self.corrupted})"

    @staticmethod
    def name() -> str:
        return "mod3"

    @staticmethod
    def description() -> str:
        return "Three values with a_i = i mod 3 and u | v = u * v = 1 - u - v."

    def constant(self, n: int) -> int:
        return n % 3

    def _pipe(self, u: int, v: int) -> int:
        return int(self.table[u, v])

    def _star(self, u: int, v: int) -> int:
        return int(self.table[u, v])

    def _circle(self, u: int, v: int) -> int:
        return (1 - u - v) % 3

    def to_json(self, value: int) -> int:
        return int(value)

    def universe(self) -> list[int]:
        return [0, 1, 2]

    def sample(self, rng: np.random.Generator) -> int:
        return int(rng.integers(0, 3))


class LinkingAlgebra(csab.ConwayAlgebra[Linking]):
    """pairs (components, linking weight)

    (a, b) | (c, d) = (a, b - 1) if a > c else (a, b), and * adds instead.
    """

    @staticmethod
    def name() -> str:
        return "linking"

    @staticmethod
    def description() -> str:
        return "Component count with the total linking number."

    def constant(self, n: int) -> Linking:
        return n, 0

    def _pipe(self, u: Linking, v: Linking) -> Linking:
        return u[0], u[1] - int(u[0] > v[0])

    def _star(self, u: Linking, v: Linking) -> Linking:
        return u[0], u[1] + int(u[0] > v[0])

    def serialize(self, value: Linking) -> str:
        return f"({value[0]},{value[1]})"

    def to_json(self, value: Linking) -> list[int]:
        return [int(value[0]), int(value[1])]

    def sample(self, rng: np.random.Generator) -> Linking:
        return int(rng.integers(1, 6)), int(rng.integers(-3, 4))


@dataclasses.dataclass(frozen=True)
class Term:
    """a_n when ``op`` is empty, otherwise ``left op right``"""

    n: int = 0
    op: str = ""
    left: Term | None = None
    right: Term | None = None

    @property
    def is_constant(self) -> bool:
        return not self.op

    def _operand(self) -> str:
        return str(self) if self.is_constant else f"({self})"

    def __str__(self) -> str:
        if self.is_constant:
            return f"a{self.n}"
        assert self.left is not None and self.right is not None
        return f"{self.left._operand()}{self.op}{self.right._operand()}"


class TermAlgebra(csab.ConwayAlgebra[Term]):
    """formal expressions, reduced only by a_n | a_n+1 = a_n * a_n+1 = a_n"""

    @staticmethod
    def name() -> str:
        return "terms"

    @staticmethod
    def description() -> str:
        return "Free term algebra printing the symbolic fold of a resolving tree."

    def constant(self, n: int) -> Term:
        return Term(n)

    def _combine(self, op: str, u: Term, v: Term) -> Term:
        if u.is_constant and v.is_constant and v.n == u.n + 1:
            return u
        return Term(op=op, left=u, right=v)

    def _pipe(self, u: Term, v: Term) -> Term:
        return self._combine("|", u, v)

    def _star(self, u: Term, v: Term) -> Term:
        return self._combine("*", u, v)

    def sample(self, rng: np.random.Generator) -> Term:
        return Term(int(rng.integers(1, 5)))

