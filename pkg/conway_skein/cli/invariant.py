"""CLI for link invariants in Conway algebras
Created on: 19 Oct 2026
"""

__all__ = ["invariant_main", "invariant_parser"]

from conway_skein.invariants.evaluate import InvariantCLI

# main functions and parsers for CLI
invariant_parser = InvariantCLI.parser()
invariant_main = InvariantCLI.main(invariant_parser)
