"""CLI for batch tabulation of invariants
Created on: 19 Oct 2026
"""

__all__ = ["batch_main", "batch_parser"]

from conway_skein.invariants.batch import BatchCLI

# main functions and parsers for CLI
batch_parser = BatchCLI.parser()
batch_main = BatchCLI.main(batch_parser)
