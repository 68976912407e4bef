"""Tests for Conway algebras and axiom verification."""

import json

import numpy as np
import pytest

import conway_skein.algebra.axioms as csax
import conway_skein.algebra.finite as csaf
import conway_skein.algebra.quasi as csaq
import conway_skein.algebra.registry as csar
import conway_skein.errors as cse


def test_registry() -> None:
    assert isinstance(csar.get_algebra("mod3"), csaf.Mod3Algebra)
    algebra = csaf.LinkingAlgebra()
    assert csar.get_algebra(algebra) is algebra
    with pytest.raises(cse.UnknownAlgebraError):
        csar.get_algebra("homfly")


def test_mod3_exhaustive() -> None:
    report = csax.verify_axioms(csaf.Mod3Algebra(), csax.Exhaustive())
    assert report.passed, str(report)
    assert report.title == "mod3 axioms"
    names = [r.name for r in report.results]
    assert any(name.startswith("circle") for name in names)
    assert all(r.skipped == 0 for r in report.results)


def test_corrupted_mod3_fails() -> None:
    report = csax.verify_axioms(csaf.Mod3Algebra(corrupted=True), csax.Exhaustive())
    assert not report.passed
    failure = report.failures()[0]
    assert failure.witness is not None
    assert json.loads(report.to_json())["passed"] is False


@pytest.mark.parametrize("name", ["components", "linking", "P2", "P3"])
def test_randomized_axioms(name: str) -> None:
    algebra = csar.get_algebra(name)
    report = csax.verify_axioms(algebra, csax.Randomized(samples=20, seed=1))
    assert report.passed, str(report)
    assert all(r.checked > 0 for r in report.results)


def test_exhaustive_needs_finite_universe() -> None:
    with pytest.raises(cse.AlgebraError):
        csax.verify_axioms(csar.get_algebra("P2"), csax.Exhaustive())


def test_circle_only_where_declared() -> None:
    with pytest.raises(cse.CircleUndefinedError):
        csaf.ComponentCountAlgebra().circle(1, 2)
    algebra = csaf.Mod3Algebra()
    for u in algebra.universe():
        for v in algebra.universe():
            w = algebra.circle(u, v)
            assert algebra.pipe(v, w) == u
            assert algebra.star(u, w) == v


def test_linking_operations() -> None:
    algebra = csaf.LinkingAlgebra()
    assert algebra.pipe((2, 0), (1, 0)) == (2, -1)
    assert algebra.star((2, 0), (1, 0)) == (2, 1)
    assert algebra.pipe((1, 0), (2, 0)) == (1, 0)
    assert algebra.serialize((2, -1)) == "(2,-1)"


def test_term_algebra() -> None:
    algebra = csaf.TermAlgebra()
    a1, a2 = algebra.constant(1), algebra.constant(2)
    assert algebra.pipe(a1, a2) == a1
    assert algebra.star(a2, algebra.constant(3)) == a2
    assert str(algebra.star(a1, algebra.pipe(a2, a1))) == "a1*(a2|a1)"


def test_quasi_constants_and_domain() -> None:
    algebra = csaq.QuasiAlgebra()
    n, value = algebra.constant(1)
    assert n == 1 and value == 1
    assert algebra.in_domain(algebra.constant(1), algebra.constant(2))
    with pytest.raises(cse.OutsideDomainError):
        algebra.pipe(algebra.constant(1), algebra.constant(3))


def test_quasi_pipe_star_inverse() -> None:
    algebra = csaq.QuasiAlgebra()
    rng = np.random.default_rng(0)
    for _ in range(10):
        a, b = algebra.sample_pair(rng)
        assert algebra.star(algebra.pipe(a, b), b) == a


def test_missing_generators() -> None:
    for family, index in (("z'", 1), ("x'", 1), ("x", 0)):
        with pytest.raises(cse.NoSuchGeneratorError):
            csaq.derived_generator(family, index)
    assert csaq.derived_generator("x'", 2) == csaq.derived_generator("x'", 2)


def test_quasi_constraints() -> None:
    report = csaq.verify_constraints(4)
    assert report.passed, str(report)
    assert len(report.results) == 15


def test_quasi_axioms_report() -> None:
    algebra = csaq.QuasiAlgebra()
    report = csax.verify_axioms(algebra, csax.Randomized(samples=10, seed=2))
    assert report.title == "quasi39 axioms"
    assert len(report.results) == 7
