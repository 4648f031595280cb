from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptrace.singularity import (
    CompositionLedger,
    NotIsolatedWeights,
    composition_ledger,
    cone_curve,
    duval_labels,
    duval_record,
    elliptic_jacobi,
    hpdr_surface,
    irrep_bound,
    jacobi_hilbert,
    milnor_number,
    parse_label,
    smoothing_rank,
)

from oracles import jacobi_series_by_division


def test_jacobi_hilbert_a1_and_e8():
    assert jacobi_hilbert((2, 2, 2), 4).as_dict() == {0: 1}
    e8 = jacobi_hilbert((6, 10, 15), 30)
    assert e8.total() == 8
    assert e8.exponents() == [0, 6, 10, 12, 16, 18, 22, 28]


def test_jacobi_hilbert_rejects_non_isolated():
    with pytest.raises(NotIsolatedWeights):
        jacobi_hilbert((1, 1, 3), 3)
    with pytest.raises(NotIsolatedWeights):
        # quotient is not a polynomial
        jacobi_hilbert((2, 3, 5), 7)
    with pytest.raises(ValueError):
        jacobi_hilbert((0, 1, 1), 3)


def test_milnor_number():
    assert milnor_number((6, 10, 15), 30) == 8
    assert milnor_number((2, 3, 5), 7) == Fraction(5 * 4 * 2, 30)


@pytest.mark.parametrize("label", duval_labels(7, 7))
def test_duval_record_consistency(label):
    rec = duval_record(label)
    kind, r = parse_label(label)
    assert rec.milnor == r
    assert rec.polynomial().degree() == rec.fdegree
    assert milnor_number(rec.weights, rec.fdegree) == r
    assert rec.jacobi_series("listed").as_dict() == jacobi_series_by_division(rec.weights, rec.fdegree, 200)
    assert sorted(rec.jacobi_weights("paper")) == [d - 2 for d in rec.weyl_degrees]
    assert 2 * rec.coxeter_number == rec.f_degree("c2")
    assert rec.bracket_degree == (-2 if kind == "A" else -1)


def test_duval_gradings_e8():
    rec = duval_record("E8")
    assert rec.jacobi_weights("c2") == (0, 12, 20, 24, 32, 36, 44, 56)
    assert rec.jacobi_weights("listed") == (0, 6, 10, 12, 16, 18, 22, 28)
    assert rec.f_degree("c2") == 60
    with pytest.raises(ValueError):
        rec.jacobi_weights("bogus")


def test_duval_gradings_a_unchanged():
    rec = duval_record("A3")
    assert rec.jacobi_weights("c2") == rec.jacobi_weights("listed") == (0, 2, 4)
    assert rec.jacobi_weights("paper") == (0, 1, 2)


@pytest.mark.parametrize("bad", ["A0", "D3", "E9", "F4", "", "A-1"])
def test_bad_labels(bad):
    with pytest.raises(ValueError):
        duval_record(bad)


def test_label_spellings():
    assert duval_record("e_8").label == duval_record("E_{8}").label == "E8"


@pytest.mark.parametrize("label", duval_labels(7, 7) + ["E6~", "E7~", "E8~"])
def test_milnor_algebra_palindromic(label):
    if label.endswith("~"):
        series = elliptic_jacobi(label).as_dict()
    else:
        rec = duval_record(label)
        series = rec.jacobi_series("listed").as_dict()
    top = max(series)
    assert all(series.get(k, 0) == series.get(top - k, 0) for k in range(top + 1))


@given(st.lists(st.integers(1, 6), min_size=3, max_size=3), st.integers(2, 6))
@settings(max_examples=60, deadline=None)
def test_brieskorn_pham_palindromic(exps, _):
    # x^p + y^q + z^r with weights L/p, L/q, L/r
    from math import lcm
    exps = [e + 1 for e in exps]
    L = lcm(*exps)
    weights = [L // e for e in exps]
    h = jacobi_hilbert(weights, L)
    d = h.as_dict()
    top = max(d)
    assert all(d.get(k, 0) == d.get(top - k, 0) for k in range(top + 1))
    assert h.total() == milnor_number(weights, L) == (exps[0] - 1) * (exps[1] - 1) * (exps[2] - 1)


# -- cones, ledgers, de Rham


@pytest.mark.parametrize("d", range(2, 7))
def test_cone_curve(d):
    c = cone_curve(d)
    assert c.genus == (d - 1) * (d - 2) // 2
    assert c.milnor == (d - 1) ** 3
    L = c.ledger
    assert L.delta_summand + 2 * c.genus + c.genus == c.milnor + 2 * c.genus
    assert L.delta_below == L.b1_link == 2 * c.genus
    assert L.semisimple == (c.genus == 0)


def test_cone_curve_degenerate():
    for d in (0, 1, -3):
        with pytest.raises(ValueError):
            cone_curve(d)


def test_ledger_validation():
    composition_ledger(8, 1, 2)
    with pytest.raises(ValueError):
        CompositionLedger(1, 1, 1, milnor=8, b1_link=2)
    assert composition_ledger(8, 1, 2, quasi_homogeneous=False).status == "conjectural"


def test_hpdr_surface():
    prof = hpdr_surface((1, 0, 0), [8])
    assert prof.dims == (8, 0, 1)
    assert prof.euler() == 9
    with pytest.raises(ValueError):
        hpdr_surface((1, -1, 0), [])


def test_smoothing_rank_and_irrep_bound():
    assert smoothing_rank(0, [1, 1]) == 2
    assert irrep_bound(8) == 8
    with pytest.raises(ValueError):
        smoothing_rank(-1, [])
    with pytest.raises(ValueError):
        irrep_bound(-1)
