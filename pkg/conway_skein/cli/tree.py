"""CLI for resolving trees
Created on: 19 Oct 2026
"""

__all__ = ["tree_main", "tree_parser"]

from conway_skein.skein.tree import TreeCLI

# main functions and parsers for CLI
tree_parser = TreeCLI.parser()
tree_main = TreeCLI.main(tree_parser)
