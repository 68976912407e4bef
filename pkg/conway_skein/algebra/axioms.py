"""Check the Conway algebra axioms on exhaustive or random samples
Created on: 19 Oct 2026

Quasi algebras only need the identities where both sides are defined; such
instances are counted as skipped.
"""

from __future__ import annotations

__all__ = [
    "AxiomsCLI",
    "Exhaustive",
    "Randomized",
    "SampleSpec",
    "verify_axioms",
]

import argparse
import collections.abc
import dataclasses
import itertools
import logging
import typing

import numpy as np

import conway_skein as cs
import conway_skein.algebra.base as csab
import conway_skein.algebra.quasi as csaq
import conway_skein.algebra.registry as csar
import conway_skein.base_cli as cscli
import conway_skein.errors as cse
import conway_skein.typing as cst
import conway_skein.util.io as csio

logger = logging.getLogger(__name__)

_SKIPPED = (cse.UndefinedOperationError, cse.NoSuchGeneratorError)


@dataclasses.dataclass(frozen=True)
class Exhaustive:
    """every pair and quadruple of a finite universe"""


@dataclasses.dataclass(frozen=True)
class Randomized:
    samples: int = 200
    seed: int | None = 0


SampleSpec = typing.Union[Exhaustive, Randomized]


class _Tally:
    def __init__(self, algebra: csab.ConwayAlgebra, name: str):
        self.algebra = algebra
        self.name = name
        self.checked = 0
        self.skipped = 0
        self.witness: str | None = None

    def check(
        self,
        sides: typing.Callable[[], tuple[typing.Any, typing.Any]],
        describe: typing.Callable[[], str],
    ) -> None:
        try:
            lhs, rhs = sides()
        except _SKIPPED:
            self.skipped += 1
            return
        self.checked += 1
        if self.witness is None and not self.algebra.equal(lhs, rhs):
            s = self.algebra.serialize
            self.witness = f"{describe()}: {s(lhs)} != {s(rhs)}"

    def record(self, report: csab.Report) -> None:
        report.record(
            self.name,
            passed=self.witness is None,
            checked=self.checked,
            skipped=self.skipped,
            witness=self.witness,
        )


def _pairs(
    algebra: csab.ConwayAlgebra, spec: SampleSpec, rng: np.random.Generator
) -> list[tuple[typing.Any, typing.Any]]:
    if isinstance(spec, Exhaustive):
        universe = _universe(algebra)
        return list(itertools.product(universe, repeat=2))
    return [algebra.sample_pair(rng) for _ in range(spec.samples)]


def _quadruples(
    algebra: csab.ConwayAlgebra, spec: SampleSpec, rng: np.random.Generator
) -> list[tuple[typing.Any, typing.Any, typing.Any, typing.Any]]:
    if isinstance(spec, Exhaustive):
        universe = _universe(algebra)
        return list(itertools.product(universe, repeat=4))
    return [algebra.sample_quadruple(rng) for _ in range(spec.samples)]


def _universe(algebra: csab.ConwayAlgebra) -> collections.abc.Sequence[typing.Any]:
    universe = algebra.universe()
    if universe is None:
        msg = f"{algebra.name()} has no finite universe; "
        msg += "use a randomized sample instead."
        raise cse.AlgebraError(msg)
    return universe


def verify_axioms(
    algebra: csab.ConwayAlgebra,
    spec: SampleSpec | None = None,
    *,
    n_constants: int = 8,
) -> csab.Report:
    """run the seven axioms (plus the circle laws where declared)"""
    spec = spec or Randomized()
    rng = np.random.default_rng(spec.seed if isinstance(spec, Randomized) else 0)
    A = algebra
    p, t, s = A.pipe, A.star, A.serialize
    report = csab.Report(f"{A.name()} axioms")

    for name, op, sym in (("1.1", p, "|"), ("1.2", t, "*")):
        tally = _Tally(A, f"{name} a_n {sym} a_n+1 = a_n")
        for n in range(1, n_constants + 1):
            tally.check(
                lambda n=n, op=op: (
                    op(A.constant(n), A.constant(n + 1)),
                    A.constant(n),
                ),
                lambda n=n: f"n={n}",
            )
        tally.record(report)

    quads = _quadruples(A, spec, rng)
    for name, o1, i1, o2, i2 in (
        ("1.3 (a|b)|(c|d) = (a|c)|(b|d)", p, p, p, p),
        ("1.4 (a|b)*(c|d) = (a*c)|(b*d)", t, p, p, t),
        ("1.5 (a*b)*(c*d) = (a*c)*(b*d)", t, t, t, t),
    ):
        tally = _Tally(A, name)
        for q in quads:
            tally.check(
                lambda q=q, o1=o1, i1=i1, o2=o2, i2=i2: (
                    o1(i1(q[0], q[1]), i1(q[2], q[3])),
                    o2(i2(q[0], q[2]), i2(q[1], q[3])),
                ),
                lambda q=q: "a,b,c,d = " + ", ".join(map(s, q)),
            )
        tally.record(report)

    pairs = _pairs(A, spec, rng)
    for name, first, second in (
        ("1.6 (a|b)*b = a", p, t),
        ("1.7 (a*b)|b = a", t, p),
    ):
        tally = _Tally(A, name)
        for a, b in pairs:
            tally.check(
                lambda a=a, b=b, f=first, g=second: (g(f(a, b), b), a),
                lambda a=a, b=b: f"a={s(a)}, b={s(b)}",
            )
        tally.record(report)

    if A.has_circle:
        _circle_laws(A, pairs, n_constants, report)

    logger.info(f"{report.title}: {report.summary()}")
    return report


def _circle_laws(
    A: csab.ConwayAlgebra,
    pairs: list[tuple[typing.Any, typing.Any]],
    n_constants: int,
    report: csab.Report,
) -> None:
    s = A.serialize
    for name, law in (
        ("circle v|(u o v) = u", lambda u, v: (A.pipe(v, A.circle(u, v)), u)),
        ("circle u*(u o v) = v", lambda u, v: (A.star(u, A.circle(u, v)), v)),
    ):
        tally = _Tally(A, name)
        for u, v in pairs:
            tally.check(
                lambda u=u, v=v, law=law: law(u, v),
                lambda u=u, v=v: f"u={s(u)}, v={s(v)}",
            )
        tally.record(report)
    tally = _Tally(A, "circle a_n = a_n-1 o a_n-1")
    for n in range(2, n_constants + 1):
        tally.check(
            lambda n=n: (
                A.constant(n),
                A.circle(A.constant(n - 1), A.constant(n - 1)),
            ),
            lambda n=n: f"n={n}",
        )
    tally.record(report)


class AxiomsCLI(cscli.CommandCLI):
    def __init__(
        self,
        algebra: str = "mod3",
        *,
        exhaustive: bool = False,
        samples: int = 200,
        seed: int | None = 0,
        corrupt: bool = False,
        constraints_bound: int = 6,
    ):
        self.algebra_name = algebra
        self.exhaustive = exhaustive
        self.samples = samples
        self.seed = seed
        self.corrupt = corrupt
        self.constraints_bound = constraints_bound

    def __call__(self) -> list[csab.Report]:
        kwargs = {"corrupted": True} if self.corrupt else {}
        algebra = csar.get_algebra(self.algebra_name, **kwargs)
        spec: SampleSpec
        if self.exhaustive:
            spec = Exhaustive()
        else:
            spec = Randomized(self.samples, self.seed)
        reports = [verify_axioms(algebra, spec)]
        if algebra.quasi:
            reports.append(csaq.verify_constraints(self.constraints_bound))
        return reports

    @staticmethod
    def name() -> str:
        return "axioms"

    @staticmethod
    def fullname() -> str:
        return "axiom verification"

    @staticmethod
    def description() -> str:
        desc = "Check the Conway algebra axioms (and the quasi39 constraints) "
        desc += "on exhaustive or random samples. Exits with 1 on any failure."
        return desc

    @staticmethod
    def add_method_specific_arguments(
        parent_parser: argparse.ArgumentParser,
    ) -> argparse.ArgumentParser:
        parser = parent_parser.add_argument_group("method-specific arguments")
        parser.add_argument(
            "-a",
            "--algebra",
            type=str,
            required=True,
            choices=sorted(cs.VERIFIABLE_ALGEBRAS),
            help="Algebra to verify.",
        )
        parser.add_argument(
            "--exhaustive",
            action="store_true",
            help="Enumerate the whole (finite) universe.",
        )
        parser.add_argument(
            "--samples",
            type=cst.positive_int(),
            default=200,
            help="Number of random samples per axiom.",
        )
        parser.add_argument(
            "--seed",
            type=cst.nonnegative_int(),
            default=0,
            help="Seed of the random sampler.",
        )
        parser.add_argument(
            "--corrupt",
            action="store_true",
            help="Use the mod3 table with 0|0 = 0 (a deliberately broken algebra).",
        )
        parser.add_argument(
            "--constraints-bound",
            type=cst.positive_int(),
            default=6,
            help="Largest index for the quasi39 generator constraints.",
        )
        parser.add_argument(
            "--json",
            action="store_true",
            help="Print the reports as JSON lines.",
        )
        return parent_parser

    @classmethod
    def from_argparse_args(cls, args: argparse.Namespace, /) -> AxiomsCLI:
        if args.corrupt and args.algebra != "mod3":
            raise cse.UnknownAlgebraError("--corrupt only applies to mod3.")
        return cls(
            args.algebra,
            exhaustive=args.exhaustive,
            samples=args.samples,
            seed=args.seed,
            corrupt=args.corrupt,
            constraints_bound=args.constraints_bound,
        )

    def call_from_argparse_args(
        self, args: argparse.Namespace, /, **kwargs: typing.Any
    ) -> int:
        reports = self()
        if args.json:
            text = "\n".join(r.to_json() for r in reports)
        else:
            text = "\n\n".join(str(r) for r in reports)
        csio.emit(text, args.output)
        if all(r.passed for r in reports):
            return cscli.EXIT_OK
        logger.warning(f"{self.algebra_name}: axiom check failed")
        return cscli.EXIT_CHECK_FAILED
