"""Memoized evaluation of the invariant w of a diagram in a Conway algebra
Created on: 19 Oct 2026

An untangled diagram of n components has value a_n. Otherwise, at the first
bad crossing p, a positive crossing gives w(L) = w(switched) | w(smoothed)
and a negative one w(L) = w(switched) * w(smoothed). Values are memoized on
the canonical key of the diagram; the result does not depend on the base
points, so neither does the memo.
"""

from __future__ import annotations

__all__ = [
    "EvaluationStats",
    "Evaluator",
    "evaluate",
    "invariant_records",
    "InvariantCLI",
    "naive_fold",
    "SPECIALIZABLE",
]

import argparse
import collections.abc
import dataclasses
import json
import logging
import threading
import typing

import conway_skein as cs
import conway_skein.algebra.base as csab
import conway_skein.algebra.registry as csar
import conway_skein.base_cli as cscli
import conway_skein.diagram.base as csdb
import conway_skein.diagram.moves as csdm
import conway_skein.errors as cse
import conway_skein.invariants.cache as csic
import conway_skein.polynomial.specialize as csps
import conway_skein.skein.base as cssb
import conway_skein.skein.tree as csst
import conway_skein.typing as cst
import conway_skein.util.io as csio

logger = logging.getLogger(__name__)

_MISSING = object()
SPECIALIZABLE = "P2"


@dataclasses.dataclass
class EvaluationStats:
    hits: int = 0
    misses: int = 0
    nodes: int = 0

    def __str__(self) -> str:
        return f"{self.nodes} nodes, {self.hits} memo hits, {self.misses} misses"


class Evaluator:
    """one algebra, one sign convention, one memo table

    The memo is shared by every diagram evaluated with this instance and is
    safe to use from several threads; a value may be computed twice but is
    stored once.
    """

    def __init__(
        self,
        algebra: csab.ConwayAlgebra | str,
        convention: cst.Convention | str = cst.Convention.MODERN,
        base_strategy: cssb.BaseStrategy | None = None,
        *,
        simplify: bool = True,
        selector: csst.Selector | None = None,
    ):
        self.algebra = csar.get_algebra(algebra)
        self.convention = cst.Convention.from_string(convention)
        self.base_strategy = base_strategy or cssb.lowest_edge_strategy
        self.simplify = simplify
        self.selector = selector or cssb.first_bad_crossing
        self.memo: dict[csdb.DiagramKey, typing.Any] = {}
        self.stats = EvaluationStats()
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}({self.algebra.name()!r}, "
            f"{self.convention.value!r}, simplify={self.simplify})"
        )

    def __call__(self, d: csdb.Diagram) -> typing.Any:
        value = self._eval(d, None)
        logger.debug(f"{self.algebra}: {self.stats}")
        return value

    def _lookup(self, key: csdb.DiagramKey) -> typing.Any:
        with self._lock:
            value = self.memo.get(key, _MISSING)
            if value is _MISSING:
                self.stats.misses += 1
            else:
                self.stats.hits += 1
            return value

    def _store(self, key: csdb.DiagramKey, value: typing.Any) -> None:
        with self._lock:
            self.memo.setdefault(key, value)

    def combine(
        self, sign: int, switched: typing.Any, smoothed: typing.Any
    ) -> typing.Any:
        try:
            if self.convention.effective_sign(sign) > 0:
                return self.algebra.pipe(switched, smoothed)
            return self.algebra.star(switched, smoothed)
        except (cse.UndefinedOperationError, cse.NoSuchGeneratorError) as e:
            msg = f"{self.algebra.name()} cannot combine the children of a "
            msg += f"{'positive' if sign > 0 else 'negative'} crossing: {e}"
            raise cse.GeometricInsufficiencyError(msg) from e

    def _eval(
        self, d: csdb.Diagram, base_points: cssb.BasePoints | None
    ) -> typing.Any:
        # switched children are walked in a loop; only smoothings recurse
        chain: list[tuple[csdb.DiagramKey, int, csdb.Diagram]] = []
        while True:
            if self.simplify:
                reduced = csdm.reduce_monotone(d)
                if reduced.crossing_count < d.crossing_count:
                    d, base_points = reduced, None
            key = d.canonical_key
            value = self._lookup(key)
            if value is not _MISSING:
                break
            if base_points is None:
                base_points = self.base_strategy(d)
            p = self.selector(cssb.BasePointState(d, base_points))
            with self._lock:
                self.stats.nodes += 1
            if p is None:
                value = self.algebra.constant(d.component_count)
                self._store(key, value)
                break
            chain.append((key, d.crossings[p].sign, cssb.smooth(d, p)))
            d = cssb.switch(d, p)
        for key, sign, smoothed in reversed(chain):
            value = self.combine(sign, value, self._eval(smoothed, None))
            self._store(key, value)
        return value


def evaluate(
    d: csdb.Diagram,
    algebra: csab.ConwayAlgebra | str,
    *,
    convention: cst.Convention | str = cst.Convention.MODERN,
    base_strategy: cssb.BaseStrategy | None = None,
    simplify: bool = True,
    selector: csst.Selector | None = None,
) -> typing.Any:
    evaluator = Evaluator(
        algebra, convention, base_strategy, simplify=simplify, selector=selector
    )
    return evaluator(d)


def naive_fold(
    d: csdb.Diagram,
    algebra: csab.ConwayAlgebra | str,
    *,
    convention: cst.Convention | str = cst.Convention.MODERN,
    base_strategy: cssb.BaseStrategy | None = None,
    node_cap: int = cs.DEFAULT_NODE_CAP,
) -> typing.Any:
    """fold the full resolving tree without memoization or simplification"""
    algebra = csar.get_algebra(algebra)
    tree = csst.build_resolving_tree(
        d, base_strategy, compress=False, node_cap=node_cap
    )
    return csst.fold(tree, algebra, convention)


def invariant_records(
    d: csdb.Diagram,
    evaluators: collections.abc.Sequence[Evaluator],
    *,
    cache: csic.InvariantCache | None = None,
    specialize: cst.Specialization | None = None,
    naive: bool = False,
) -> list[dict[str, typing.Any]]:
    """one JSON-ready record per evaluator, consulting and filling the cache"""
    records = []
    for ev in evaluators:
        name, conv = ev.algebra.name(), ev.convention.value
        target = specialize if name == SPECIALIZABLE else None
        extra = f"{name}:{target.value}" if target is not None else None
        value = special = None
        if cache is not None:
            value = cache.get(d.key_digest, name, conv)
            if extra is not None:
                special = cache.get(d.key_digest, extra, conv)
        if value is None or (extra is not None and special is None):
            if naive:
                raw = naive_fold(
                    d,
                    ev.algebra,
                    convention=ev.convention,
                    base_strategy=ev.base_strategy,
                )
            else:
                raw = ev(d)
            value = ev.algebra.to_json(raw)
            if target is not None:
                special = str(csps.specialize(raw, target))
            if cache is not None:
                cache.put(d.key_digest, name, conv, value)
                if extra is not None:
                    cache.put(d.key_digest, extra, conv, special)
        else:
            logger.debug(f"cache hit for {name} on {d.key_digest[:12]}")
        record = {"algebra": name, "value": value, "diagram_key": d.key_digest}
        if target is not None:
            record[target.value] = special
        records.append(record)
    return records


class InvariantCLI(cscli.DiagramCLI):
    def __init__(
        self,
        algebras: collections.abc.Sequence[str] = ("P2",),
        *,
        simplify: bool = True,
        naive: bool = False,
        specialize: cst.Specialization | str | None = None,
        seed: int | None = None,
    ):
        self.algebras = tuple(algebras)
        self.simplify = simplify
        self.naive = naive
        self.specialize = (
            None if specialize is None else cst.Specialization.from_string(specialize)
        )
        self.seed = seed

    def evaluators(
        self, convention: cst.Convention | str = cst.Convention.MODERN
    ) -> list[Evaluator]:
        strategy: cssb.BaseStrategy | None = None
        if self.seed is not None:
            strategy = cssb.RandomBaseStrategy(self.seed)
        return [
            Evaluator(name, convention, strategy, simplify=self.simplify)
            for name in self.algebras
        ]

    def __call__(
        self,
        d: csdb.Diagram,
        convention: cst.Convention | str = cst.Convention.MODERN,
        cache: csic.InvariantCache | None = None,
    ) -> list[dict[str, typing.Any]]:
        return invariant_records(
            d,
            self.evaluators(convention),
            cache=cache,
            specialize=self.specialize,
            naive=self.naive,
        )

    @staticmethod
    def name() -> str:
        return "invariant"

    @staticmethod
    def fullname() -> str:
        return "link invariant"

    @staticmethod
    def description() -> str:
        desc = "Evaluate the invariant of a link diagram in one or more "
        desc += "Conway algebras and print one JSON record per algebra."
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
            nargs="+",
            default=["P2"],
            choices=sorted(cs.VALID_ALGEBRAS),
            help="Algebras to evaluate in.",
        )
        parser.add_argument(
            "--no-simplify",
            action="store_true",
            help="Do not remove R1/R2 sites before each memo lookup.",
        )
        parser.add_argument(
            "--naive",
            action="store_true",
            help="Fold the full resolving tree without memoization.",
        )
        parser.add_argument(
            "--specialize",
            type=str,
            default=None,
            choices=("conway", "jones"),
            help="Also print the Conway or Jones polynomial (P2 only).",
        )
        parser.add_argument(
            "--seed",
            type=cst.nonnegative_int(),
            default=None,
            help="Choose base points at random with this seed.",
        )
        return parent_parser

    @classmethod
    def from_argparse_args(cls, args: argparse.Namespace, /) -> InvariantCLI:
        if args.specialize is not None and SPECIALIZABLE not in args.algebra:
            logger.warning("--specialize only applies to P2; ignoring it")
        return cls(
            args.algebra,
            simplify=not args.no_simplify,
            naive=args.naive,
            specialize=args.specialize,
            seed=args.seed,
        )

    def call_from_argparse_args(
        self, args: argparse.Namespace, /, **kwargs: typing.Any
    ) -> None:
        diagram = self.load_diagram(args)
        cache = None if args.no_cache else csic.InvariantCache()
        records = self(diagram, args.convention, cache)
        text = "\n".join(json.dumps(r, sort_keys=True) for r in records)
        csio.emit(text, args.output)
