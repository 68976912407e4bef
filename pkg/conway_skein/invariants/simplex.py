"""Weighted simplices: the invariant of every sublink, and their equivalence
Created on: 19 Oct 2026

Vertex i is component i of the diagram; a face is a nonempty set of
components, stored as a bitmask, weighted by the invariant of the sublink.
"""

from __future__ import annotations

__all__ = ["simplex_equivalent", "SimplexCLI", "weighted_simplex", "WeightedSimplex"]

import argparse
import collections
import dataclasses
import json
import logging
import pathlib
import typing

import conway_skein as cs
import conway_skein.algebra.base as csab
import conway_skein.base_cli as cscli
import conway_skein.diagram.base as csdb
import conway_skein.diagram.moves as csdm
import conway_skein.diagram.parse as csdp
import conway_skein.errors as cse
import conway_skein.invariants.evaluate as csie
import conway_skein.typing as cst
import conway_skein.util.io as csio

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class WeightedSimplex:
    algebra: csab.ConwayAlgebra
    vertices: int
    weights: dict[int, typing.Any]

    def weight(self, components: typing.Iterable[int]) -> typing.Any:
        mask = 0
        for i in components:
            mask |= 1 << i
        return self.weights[mask]

    def _label(self, mask: int) -> str:
        return self.algebra.serialize(self.weights[mask])

    def to_json(self) -> str:
        data = {
            "algebra": self.algebra.name(),
            "vertices": self.vertices,
            "weights": {
                str(mask): self.algebra.to_json(value)
                for mask, value in sorted(self.weights.items())
            },
        }
        return json.dumps(data, sort_keys=True)


def weighted_simplex(
    d: csdb.Diagram,
    algebra: csab.ConwayAlgebra | str,
    *,
    evaluator: csie.Evaluator | None = None,
) -> WeightedSimplex:
    n = d.component_count
    if n > cs.MAX_SIMPLEX_COMPONENTS:
        msg = f"The diagram has {n} components; weighted simplices are "
        msg += f"limited to {cs.MAX_SIMPLEX_COMPONENTS}."
        raise cse.TooManyComponentsError(msg)
    evaluator = evaluator or csie.Evaluator(algebra)
    weights = {}
    for mask in range(1, 1 << n):
        keep = [i for i in range(n) if mask >> i & 1]
        weights[mask] = evaluator(csdm.delete_components(d, keep))
    logger.info(f"weighted simplex on {n} vertices: {evaluator.stats}")
    return WeightedSimplex(evaluator.algebra, n, weights)


def _permuted(mask: int, perm: typing.Sequence[int]) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << perm[i]
        mask >>= 1
        i += 1
    return out


def simplex_equivalent(s1: WeightedSimplex, s2: WeightedSimplex) -> bool:
    """is there a bijection of vertices preserving the weight of every face"""
    if s1.algebra.name() != s2.algebra.name() or s1.vertices != s2.vertices:
        return False
    n = s1.vertices
    labels1 = {mask: s1._label(mask) for mask in s1.weights}
    labels2 = {mask: s2._label(mask) for mask in s2.weights}
    if collections.Counter(labels1.values()) != collections.Counter(labels2.values()):
        return False
    singles1 = [labels1[1 << i] for i in range(n)]
    singles2 = [labels2[1 << j] for j in range(n)]
    perm: list[int] = []
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if j in used or singles1[i] != singles2[j]:
                continue
            perm.append(j)
            used.add(j)
            # faces whose largest vertex is i are now fully mapped
            top = 1 << i
            ok = all(
                labels1[top | low] == labels2[_permuted(top | low, perm)]
                for low in range(top)
            )
            if ok and extend(i + 1):
                return True
            perm.pop()
            used.discard(j)
        return False

    found = extend(0)
    logger.debug(f"simplex equivalence: {found} (map {perm if found else None})")
    return found


def _diagram_from_text(text: str) -> csdb.Diagram:
    path = pathlib.Path(text)
    if path.is_file():
        return csdp.read_diagram_file(path)
    return csdp.parse_diagram_spec(text)


class SimplexCLI(cscli.DiagramCLI):
    def __init__(self, algebra: str = "linking", *, compare: str | None = None):
        self.algebra = algebra
        self.compare = compare

    def __call__(
        self, d: csdb.Diagram, convention: cst.Convention | str = "modern"
    ) -> WeightedSimplex:
        return weighted_simplex(d, self.algebra, evaluator=self.evaluator(convention))

    def evaluator(self, convention: cst.Convention | str) -> csie.Evaluator:
        return csie.Evaluator(self.algebra, convention)

    @staticmethod
    def name() -> str:
        return "simplex"

    @staticmethod
    def fullname() -> str:
        return "weighted simplex"

    @staticmethod
    def description() -> str:
        desc = "Weight every sublink of a diagram with its invariant and "
        desc += "optionally compare with the weighted simplex of a second diagram."
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
            default="linking",
            choices=sorted(cs.VALID_ALGEBRAS),
            help="Algebra of the weights.",
        )
        parser.add_argument(
            "--compare",
            type=str,
            default=None,
            help="Second diagram (braid, PD code or file) to compare against.",
        )
        return parent_parser

    @classmethod
    def from_argparse_args(cls, args: argparse.Namespace, /) -> SimplexCLI:
        return cls(args.algebra, compare=args.compare)

    def call_from_argparse_args(
        self, args: argparse.Namespace, /, **kwargs: typing.Any
    ) -> None:
        diagram = self.load_diagram(args)
        evaluator = self.evaluator(args.convention)
        first = weighted_simplex(diagram, self.algebra, evaluator=evaluator)
        lines = [first.to_json()]
        if self.compare is not None:
            other = _diagram_from_text(self.compare)
            second = weighted_simplex(other, self.algebra, evaluator=evaluator)
            lines.append(second.to_json())
            equivalent = simplex_equivalent(first, second)
            lines.append("EQUIVALENT" if equivalent else "NOT EQUIVALENT")
        csio.emit("\n".join(lines), args.output)
