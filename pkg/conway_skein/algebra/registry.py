"""Lookup of algebras by name
Created on: 19 Oct 2026
"""

from __future__ import annotations

__all__ = ["ALGEBRAS", "get_algebra"]

import typing

import conway_skein as cs
import conway_skein.algebra.base as csab
import conway_skein.algebra.finite as csaf
import conway_skein.algebra.polynomial as csap
import conway_skein.algebra.quasi as csaq
import conway_skein.errors as cse

ALGEBRAS: dict[str, type[csab.ConwayAlgebra]] = {
    cls.name(): cls
    for cls in (
        csaf.ComponentCountAlgebra,
        csaf.Mod3Algebra,
        csap.TwoVarAlgebra,
        csap.ThreeVarAlgebra,
        csaf.LinkingAlgebra,
        csaq.QuasiAlgebra,
        csaf.TermAlgebra,
    )
}
assert set(ALGEBRAS) == cs.VALID_ALGEBRAS


def get_algebra(
    name: str | csab.ConwayAlgebra, **kwargs: typing.Any
) -> csab.ConwayAlgebra:
    if isinstance(name, csab.ConwayAlgebra):
        return name
    try:
        cls = ALGEBRAS[name]
    except KeyError:
        msg = f"Unknown algebra '{name}'. "
        msg += f"Valid names: {', '.join(sorted(ALGEBRAS))}."
        raise cse.UnknownAlgebraError(msg) from None
    return cls(**kwargs)
