"""Interface of (quasi) Conway algebras
Created on: 19 Oct 2026
"""

from __future__ import annotations

__all__ = ["CheckResult", "ConwayAlgebra", "Report"]

import abc
import collections.abc
import dataclasses
import json
import logging
import typing

import numpy as np

import conway_skein.errors as cse

logger = logging.getLogger(__name__)

V = typing.TypeVar("V")


class ConwayAlgebra(typing.Generic[V], metaclass=abc.ABCMeta):
    """constants a_1, a_2, ... with binary operations | and *

    Partial algebras override ``in_domain``; ``pipe`` and ``star`` raise
    ``OutsideDomainError`` outside it. ``circle`` is only available where
    ``has_circle`` is set.
    """

    quasi: bool = False
    has_circle: bool = False

    def __str__(self) -> str:
        return self.name()

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}()"

    @staticmethod
    @abc.abstractmethod
    def name() -> str:
        raise NotImplementedError

    @staticmethod
    @abc.abstractmethod
    def description() -> str:
        raise NotImplementedError

    @abc.abstractmethod
    def constant(self, n: int) -> V:
        raise NotImplementedError

    @abc.abstractmethod
    def _pipe(self, u: V, v: V) -> V:
        raise NotImplementedError

    @abc.abstractmethod
    def _star(self, u: V, v: V) -> V:
        raise NotImplementedError

    def _circle(self, u: V, v: V) -> V:
        raise NotImplementedError

    def in_domain(self, u: V, v: V) -> bool:
        return True

    def _check_domain(self, op: str, u: V, v: V) -> None:
        if not self.in_domain(u, v):
            msg = f"{self.name()}: '{self.serialize(u)} {op} {self.serialize(v)}' "
            msg += "is outside the domain of the operation."
            raise cse.OutsideDomainError(msg)

    def pipe(self, u: V, v: V) -> V:
        self._check_domain("|", u, v)
        return self._pipe(u, v)

    def star(self, u: V, v: V) -> V:
        self._check_domain("*", u, v)
        return self._star(u, v)

    def circle(self, u: V, v: V) -> V:
        """the w with v | w = u and u * w = v"""
        if not self.has_circle:
            msg = f"{self.name()} declares no circle operation."
            raise cse.CircleUndefinedError(msg)
        return self._circle(u, v)

    def equal(self, u: V, v: V) -> bool:
        return bool(u == v)

    def serialize(self, value: V) -> str:
        return str(value)

    def to_json(self, value: V) -> typing.Any:
        return self.serialize(value)

    def universe(self) -> collections.abc.Sequence[V] | None:
        """all values, for algebras small enough to enumerate"""
        return None

    @abc.abstractmethod
    def sample(self, rng: np.random.Generator) -> V:
        raise NotImplementedError

    def sample_pair(self, rng: np.random.Generator) -> tuple[V, V]:
        return self.sample(rng), self.sample(rng)

    def sample_quadruple(self, rng: np.random.Generator) -> tuple[V, V, V, V]:
        a, b = self.sample_pair(rng)
        c, d = self.sample_pair(rng)
        return a, b, c, d


@dataclasses.dataclass
class CheckResult:
    name: str
    passed: bool = True
    checked: int = 0
    skipped: int = 0
    witness: str | None = None

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{self.name}: {status} (checked {self.checked}, "
        line += f"skipped {self.skipped})"
        if self.witness is not None:
            line += f" witness: {self.witness}"
        return line


@dataclasses.dataclass
class Report:
    """named checks with pass/fail status; failures are data, not errors"""

    title: str
    results: list[CheckResult] = dataclasses.field(default_factory=list)

    def record(
        self,
        name: str,
        *,
        passed: bool,
        checked: int = 1,
        skipped: int = 0,
        witness: str | None = None,
    ) -> CheckResult:
        result = CheckResult(name, passed, checked, skipped, witness)
        self.results.append(result)
        return result

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> str:
        failed = len(self.failures())
        return f"{len(self.results) - failed}/{len(self.results)} passed"

    def __str__(self) -> str:
        lines = [f"{self.title}: {self.summary()}"]
        lines.extend(str(r) for r in self.results)
        return "\n".join(lines)

    def to_json(self) -> str:
        data = {
            "title": self.title,
            "passed": self.passed,
            "results": [dataclasses.asdict(r) for r in self.results],
        }
        return json.dumps(data, sort_keys=True)
