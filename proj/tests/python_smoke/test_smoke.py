"""Smoke tests for the python extension module."""

import math

import pytest

uacg = pytest.importorskip("uacg")


def test_number_theory():
    assert uacg.euler_phi(9) == 6
    assert uacg.mobius(12) == 0
    assert uacg.factorize(12) == [(2, 2), (3, 1)]
    assert uacg.units(5) == [1, 2, 3, 4]
    assert uacg.squarefree_kernel(18) == (6, 2)
    assert uacg.ramanujan_sum(3, 6) == -2


def test_graph_and_distances():
    g = uacg.build_graph(uacg.GraphKind.uacg, 9)
    assert g.order == 9
    assert sorted(g.degree_sequence()) == [5] * 6 + [6] * 3
    d = uacg.distance_matrix(g)
    assert max(max(row) for row in d) == uacg.diameter_formula(9) == 2
    assert uacg.transmissions(g)[0] == 10

    with pytest.raises(uacg.DisconnectedGraphError):
        uacg.distance_matrix(uacg.build_graph(uacg.GraphKind.uacg_complement, 5))


def test_closed_forms_match_oracle():
    g = uacg.build_graph(uacg.GraphKind.uacg, 6)
    oracle = uacg.jacobi_spectrum(uacg.build_matrix(uacg.MatrixFamily.signless_laplacian, g))
    closed = uacg.closed_spectrum(uacg.ClosedFamily.signless, 6)
    assert uacg.spectrum_equal(closed, oracle, 1e-8).equal

    dl9 = uacg.closed_spectrum(uacg.ClosedFamily.distance_laplacian, 9)
    assert dl9.entries() == [(0, 1), (9, 1), (12, 6), (15, 1)]

    with pytest.raises(uacg.NoClosedFormError):
        uacg.closed_spectrum(uacg.ClosedFamily.signless, 15)


def test_energies_and_bounds():
    e = uacg.closed_energy(uacg.ClosedFamily.distance, 5)
    assert e.caveat
    assert math.isclose(e.value, 4 + 4 * math.sqrt(2))

    bounds = uacg.eigenvalue_bounds(uacg.ClosedFamily.distance, 9)
    lo, hi = bounds.intervals[0]
    assert (lo, hi) == (10, 11)

    assert uacg.energy_bounds(uacg.ClosedFamily.distance, 15) == (37, 52)


def test_verification():
    report = uacg.verify_spectrum(uacg.ClosedFamily.distance, 9)
    assert report.status == uacg.CheckStatus.passed

    result = uacg.scan(3, 15)
    assert result.failed == 0
    assert result.passed > 0
    assert result.caveats > 0

    chain = uacg.evaluate_conclusion_chain(9)
    assert not chain.principal_ok
    assert chain.violated_ranks == []
