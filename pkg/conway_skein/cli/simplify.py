"""CLI for reducing untangled diagrams
Created on: 19 Oct 2026
"""

__all__ = ["simplify_main", "simplify_parser"]

from conway_skein.simplify.reduce import SimplifyCLI

# main functions and parsers for CLI
simplify_parser = SimplifyCLI.parser()
simplify_main = SimplifyCLI.main(simplify_parser)
