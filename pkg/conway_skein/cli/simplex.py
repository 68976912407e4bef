"""CLI for weighted simplices
Created on: 19 Oct 2026
"""

__all__ = ["simplex_main", "simplex_parser"]

from conway_skein.invariants.simplex import SimplexCLI

# main functions and parsers for CLI
simplex_parser = SimplexCLI.parser()
simplex_main = SimplexCLI.main(simplex_parser)
