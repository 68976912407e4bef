"""Resolving trees: branch on the first bad crossing until every leaf is untangled
Created on: 19 Oct 2026
"""

from __future__ import annotations

__all__ = [
    "build_resolving_tree",
    "export_tree",
    "fold",
    "Leaf",
    "Node",
    "ResolvingTree",
    "TreeCLI",
]

import argparse
import dataclasses
import json
import logging
import typing

import conway_skein as cs
import conway_skein.algebra.base as csab
import conway_skein.algebra.registry as csar
import conway_skein.base_cli as cscli
import conway_skein.diagram.base as csdb
import conway_skein.diagram.moves as csdm
import conway_skein.errors as cse
import conway_skein.skein.base as cssb
import conway_skein.typing as cst
import conway_skein.util.io as csio

logger = logging.getLogger(__name__)

Selector = typing.Callable[[cssb.BasePointState], typing.Optional[int]]


@dataclasses.dataclass(frozen=True)
class Leaf:
    diagram: csdb.Diagram
    components: int


@dataclasses.dataclass(frozen=True)
class Node:
    diagram: csdb.Diagram
    crossing: int
    sign: int
    switched: TreeNode
    smoothed: TreeNode


TreeNode = typing.Union[Leaf, Node]


@dataclasses.dataclass(frozen=True)
class ResolvingTree:
    root: TreeNode

    def nodes(self) -> typing.Iterator[TreeNode]:
        """preorder: node, switched subtree, smoothed subtree"""
        stack: list[TreeNode] = [self.root]
        while stack:
            node = stack.pop()
            yield node
            if isinstance(node, Node):
                stack.append(node.smoothed)
                stack.append(node.switched)

    @property
    def internal_count(self) -> int:
        return sum(1 for n in self.nodes() if isinstance(n, Node))

    @property
    def leaf_count(self) -> int:
        return sum(1 for n in self.nodes() if isinstance(n, Leaf))

    def __len__(self) -> int:
        return sum(1 for _ in self.nodes())


class _Builder:
    def __init__(
        self,
        strategy: cssb.BaseStrategy,
        selector: Selector,
        compress: bool,
        node_cap: int,
    ):
        self.strategy = strategy
        self.selector = selector
        self.compress = compress
        self.node_cap = node_cap
        self.count = 0

    def _tick(self) -> None:
        self.count += 1
        if self.count > self.node_cap:
            msg = f"Resolving tree exceeds {self.node_cap} nodes; "
            msg += "use memoized evaluation instead."
            raise cse.TreeTooLargeError(msg)

    def build(self, d: csdb.Diagram, base_points: cssb.BasePoints | None) -> TreeNode:
        self._tick()
        if self.compress and csdm.reduce_monotone(d).crossing_count == 0:
            return Leaf(d, d.component_count)
        if base_points is None:
            base_points = self.strategy(d)
        state = cssb.BasePointState(d, base_points)
        p = self.selector(state)
        if p is None:
            return Leaf(d, d.component_count)
        logger.debug(f"branching at crossing {p} of {d.crossing_count}")
        switched = self.build(cssb.switch(d, p), base_points)
        smoothed = self.build(cssb.smooth(d, p), None)
        return Node(d, p, d.crossings[p].sign, switched, smoothed)


def build_resolving_tree(
    d: csdb.Diagram,
    base_strategy: cssb.BaseStrategy | None = None,
    *,
    compress: bool = True,
    node_cap: int = cs.DEFAULT_NODE_CAP,
    selector: Selector | None = None,
) -> ResolvingTree:
    """switched children keep their base points; smoothed ones get fresh ones

    By default any diagram that greedy R1/R2 removal takes to zero crossings
    becomes a leaf; ``compress=False`` branches until every leaf is untangled.
    """
    builder = _Builder(
        base_strategy or cssb.lowest_edge_strategy,
        selector or cssb.first_bad_crossing,
        compress,
        node_cap,
    )
    tree = ResolvingTree(builder.build(d, None))
    logger.info(
        f"resolving tree: {tree.internal_count} branchings, "
        f"{tree.leaf_count} leaves"
    )
    return tree


def fold(
    tree: ResolvingTree | TreeNode,
    algebra: csab.ConwayAlgebra,
    convention: cst.Convention | str = cst.Convention.MODERN,
) -> typing.Any:
    """value of the root: leaves are a_n, a positive node is switched | smoothed"""
    convention = cst.Convention.from_string(convention)
    node = tree.root if isinstance(tree, ResolvingTree) else tree
    if isinstance(node, Leaf):
        return algebra.constant(node.components)
    switched = fold(node.switched, algebra, convention)
    smoothed = fold(node.smoothed, algebra, convention)
    try:
        if convention.effective_sign(node.sign) > 0:
            return algebra.pipe(switched, smoothed)
        return algebra.star(switched, smoothed)
    except cse.UndefinedOperationError as e:
        raise cse.GeometricInsufficiencyError(str(e)) from e


def _sign(sign: int) -> str:
    return "+" if sign > 0 else "-"


def _to_json(node: TreeNode) -> dict[str, typing.Any]:
    if isinstance(node, Leaf):
        return {"leaf": node.components}
    return {
        "crossing": node.crossing,
        "sign": _sign(node.sign),
        "switched": _to_json(node.switched),
        "smoothed": _to_json(node.smoothed),
    }


def _to_dot(tree: ResolvingTree) -> str:
    ids = {id(node): i for i, node in enumerate(tree.nodes())}
    lines = ["digraph resolving_tree {"]
    for node in tree.nodes():
        name = f"n{ids[id(node)]}"
        if isinstance(node, Leaf):
            lines.append(f'  {name} [shape=box, label="a{node.components}"];')
            continue
        label = f"{node.crossing} {_sign(node.sign)}"
        lines.append(f'  {name} [label="{label}"];')
        lines.append(f'  {name} -> n{ids[id(node.switched)]} [label="switch"];')
        lines.append(f'  {name} -> n{ids[id(node.smoothed)]} [label="smooth"];')
    lines.append("}")
    return "\n".join(lines)


def export_tree(tree: ResolvingTree, format: cst.TreeFormat | str = "dot") -> str:
    try:
        fmt = cst.TreeFormat.from_string(format)
    except ValueError as e:
        raise cse.UnknownFormatError(str(e)) from e
    if fmt == cst.TreeFormat.JSON:
        return json.dumps(_to_json(tree.root), sort_keys=True)
    return _to_dot(tree)


class TreeCLI(cscli.DiagramCLI):
    def __init__(
        self,
        *,
        compress: bool = True,
        format: cst.TreeFormat | str = cst.TreeFormat.DOT,
        node_cap: int = cs.DEFAULT_NODE_CAP,
        fold_algebra: str | None = None,
    ):
        self.compress = compress
        self.format = format
        self.node_cap = node_cap
        self.fold_algebra = fold_algebra

    def __call__(self, d: csdb.Diagram) -> ResolvingTree:
        return build_resolving_tree(d, compress=self.compress, node_cap=self.node_cap)

    @staticmethod
    def name() -> str:
        return "tree"

    @staticmethod
    def fullname() -> str:
        return "resolving tree"

    @staticmethod
    def description() -> str:
        desc = "Build the resolving tree of a diagram by branching at the first "
        desc += "bad crossing and export it as DOT or JSON."
        return desc

    @staticmethod
    def add_method_specific_arguments(
        parent_parser: argparse.ArgumentParser,
    ) -> argparse.ArgumentParser:
        parser = parent_parser.add_argument_group("method-specific arguments")
        parser.add_argument(
            "--format",
            type=str,
            default="dot",
            choices=("dot", "json"),
            help="Output format of the tree.",
        )
        parser.add_argument(
            "--uncompressed",
            dest="compress",
            action="store_false",
            help="Branch until every leaf is untangled instead of stopping at "
            "diagrams that R1/R2 removals take to zero crossings.",
        )
        parser.add_argument(
            "--node-cap",
            type=cst.positive_int(),
            default=cs.DEFAULT_NODE_CAP,
            help="Abort if the tree grows beyond this many nodes.",
        )
        parser.add_argument(
            "--fold",
            type=str,
            default=None,
            choices=sorted(cs.VALID_ALGEBRAS),
            help="Also log the folded value of the tree in this algebra.",
        )
        return parent_parser

    @classmethod
    def from_argparse_args(cls, args: argparse.Namespace, /) -> TreeCLI:
        return cls(
            compress=args.compress,
            format=args.format,
            node_cap=args.node_cap,
            fold_algebra=args.fold,
        )

    def call_from_argparse_args(
        self, args: argparse.Namespace, /, **kwargs: typing.Any
    ) -> None:
        diagram = self.load_diagram(args)
        tree = self(diagram)
        if self.fold_algebra is not None:
            algebra = csar.get_algebra(self.fold_algebra)
            value = fold(tree, algebra, args.convention)
            logger.info(f"fold in {algebra}: {algebra.serialize(value)}")
        csio.emit(export_tree(tree, self.format), args.output)
