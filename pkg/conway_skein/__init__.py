"""Top-level package for conway-skein."""

from __future__ import annotations

import logging

__title__ = "conway-skein"
__description__ = "Conway-algebra invariants of oriented links via resolving trees"
__url__ = "https://github.com/conway-skein/conway-skein"
__author__ = """conway-skein developers"""
__email__ = "conway-skein@users.noreply.github.com"
__version__ = "0.1.0"
__license__ = "Apache-2.0"
__copyright__ = "Copyright 2026 conway-skein developers"

ALGEBRA_NAMES = {
    "total": ("components", "mod3", "P2", "P3", "linking"),
    "quasi": ("quasi39",),
    "symbolic": ("terms",),
}
VALID_ALGEBRAS = frozenset({a for names in ALGEBRA_NAMES.values() for a in names})
VERIFIABLE_ALGEBRAS = VALID_ALGEBRAS - set(ALGEBRA_NAMES["symbolic"])

DEFAULT_NODE_CAP = 10**6
MAX_SIMPLEX_COMPONENTS = 12
CACHE_DIR_ENV = "SKEIN_CACHE_DIR"

logging.getLogger(__name__).addHandler(logging.NullHandler())
