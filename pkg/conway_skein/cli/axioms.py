"""CLI for checking Conway algebra axioms
Created on: 19 Oct 2026
"""

__all__ = ["axioms_main", "axioms_parser"]

from conway_skein.algebra.axioms import AxiomsCLI

# main functions and parsers for CLI
axioms_parser = AxiomsCLI.parser()
axioms_main = AxiomsCLI.main(axioms_parser)
