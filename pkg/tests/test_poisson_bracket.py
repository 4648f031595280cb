import random
from fractions import Fraction

import pytest

from ptrace.exact_core import WeightedPolynomial, WeightedRing, graded_monomials, jacobian_det
from ptrace.parsing import parse_polynomial
from ptrace.poisson_bracket import (
    NotIsolatedError,
    ResourceBudgetError,
    SurfaceVariety,
    _BracketEngine,
    bracket,
    hp0_dims,
    hp0_weight_dim,
    is_isolated,
)
from ptrace.singularity import duval_labels, duval_record, elliptic_jacobi, elliptic_surface, jacobi_hilbert

from oracles import jacobi_series_by_division
from test_properties import in_ideal_slice, random_homogeneous


def surface(text, weights):
    ring = WeightedRing(weights)
    return SurfaceVariety.hypersurface(parse_polynomial(text, ring))


A1 = surface("x1^2 + x2^2 + x3^2", (2, 2, 2))
E6T = surface("x1^3 + x2^3 + x3^3", (1, 1, 1))


def P(X, text):
    return parse_polynomial(text, X.ring)


def test_bracket_coordinate_pair():
    X = surface("x1^2 + x2^2 + x3^2", (1, 1, 1))
    assert bracket(X, P(X, "x1"), P(X, "x2")) == P(X, "2*x3")
    # cyclic permutations
    assert bracket(X, P(X, "x2"), P(X, "x3")) == P(X, "2*x1")
    assert bracket(X, P(X, "x3"), P(X, "x1")) == P(X, "2*x2")


def test_bracket_alternating_and_central():
    rng = random.Random(1)
    X = surface("x1^5 + x2^3 + x3^2", (6, 10, 15))
    f = X.defining[0]
    for _ in range(10):
        g = random_homogeneous(X.ring, rng.randint(6, 40), rng)
        assert not bracket(X, g, g)
        assert not bracket(X, f, g)
        assert not bracket(X, g, f)


def test_bracket_matches_jacobian_det():
    rng = random.Random(2)
    X = surface("x1^3 + x2^3 + x3^3 + x1*x2*x3", (1, 1, 1))
    f = X.defining[0]
    for _ in range(10):
        g = random_homogeneous(X.ring, rng.randint(1, 3), rng)
        h = random_homogeneous(X.ring, rng.randint(1, 3), rng)
        assert bracket(X, g, h) == jacobian_det([f, g, h])


def test_monomial_fast_path_matches_polynomial_bracket():
    X = duval_record("D5").surface()
    eng = _BracketEngine(X)
    for g in graded_monomials(X.ring, 6):
        for h in graded_monomials(X.ring, 5):
            gp = WeightedPolynomial(X.ring, {g: 1})
            hp = WeightedPolynomial(X.ring, {h: 1})
            assert WeightedPolynomial(X.ring, eng.monomial_bracket(g, h)) == bracket(X, gp, hp)


def test_bracket_ring_mismatch():
    with pytest.raises(ValueError):
        bracket(A1, parse_polynomial("x1", WeightedRing((1, 1, 1))), P(A1, "x2"))


def test_bracket_grading():
    rng = random.Random(3)
    for lab in ("A3", "D4", "E7"):
        X = duval_record(lab).surface()
        for _ in range(5):
            wg, wh = rng.randint(2, 20), rng.randint(2, 20)
            g, h = random_homogeneous(X.ring, wg, rng), random_homogeneous(X.ring, wh, rng)
            b = bracket(X, g, h)
            if b:
                assert b.degree() == g.degree() + h.degree() + X.bracket_degree


# -- hp0_dims


def test_hp0_a1():
    prof = hp0_dims(A1)
    assert prof.dims.as_dict() == {0: 1}
    assert prof.total == 1
    assert prof.dims == jacobi_hilbert((2, 2, 2), 4)


def test_hp0_e6_tilde_lambda_zero():
    prof = hp0_dims(E6T)
    assert prof.dims.as_dict() == {0: 1, 1: 3, 2: 3, 3: 1}
    assert prof.certified_through >= 3 + prof.stabilization_window


def test_hp0_e8():
    prof = hp0_dims(duval_record("E8").surface())
    assert prof.dims.as_dict() == {w: 1 for w in (0, 6, 10, 12, 16, 18, 22, 28)}
    assert prof.dims.as_dict() == jacobi_series_by_division((6, 10, 15), 30, 80)


@pytest.mark.parametrize("label", duval_labels())
def test_hp0_oracle_agreement_duval(label):
    rec = duval_record(label)
    prof = hp0_dims(rec.surface())
    assert prof.dims.as_dict() == jacobi_series_by_division(rec.weights, rec.fdegree, 100)
    assert prof.total == rec.milnor


@pytest.mark.parametrize("label, lam", [("E6", 1), ("E6", Fraction(2, 3)), ("E7", 1), ("E7", 5),
                                        ("E8", 1), ("E8", -2)])
def test_hp0_oracle_agreement_elliptic(label, lam):
    X = elliptic_surface(label, lam)
    assert is_isolated(X)[0]
    prof = hp0_dims(X)
    assert prof.dims == elliptic_jacobi(label)
    assert prof.total == {"E6": 8, "E7": 9, "E8": 10}[label]


def test_hp0_total_equals_milnor_other_inputs():
    # Brieskorn-Pham and a non-diagonal example outside du Val / elliptic
    for text, weights, m in [("x1^4 + x2^4 + x3^4", (1, 1, 1), 4),
                             ("x1^3 + x2^5 + x3^2", (10, 6, 15), 30),
                             ("x1^2*x2 + x2^4 + x3^3", (9, 6, 8), 24)]:
        X = surface(text, weights)
        prof = hp0_dims(X)
        assert prof.dims == jacobi_hilbert(weights, m)


def test_hp0_order_independence():
    X = duval_record("D5").surface()
    ring = X.ring
    # same surface written with variables permuted
    perm = (2, 0, 1)
    f = X.defining[0]
    g = WeightedPolynomial(WeightedRing(tuple(ring.weights[p] for p in perm)),
                           {tuple(e[p] for p in perm): c for e, c in f.items()})
    Y = SurfaceVariety.hypersurface(g)
    assert hp0_dims(X).dims == hp0_dims(Y).dims


def test_hp0_explicit_wmax_and_slices():
    prof = hp0_dims(E6T, 2)
    assert prof.dims.as_dict() == {0: 1, 1: 3, 2: 3}
    assert prof.certified_through == 2
    assert [hp0_weight_dim(E6T, w) for w in range(5)] == [1, 3, 3, 1, 0]


def test_hp0_budget_error():
    with pytest.raises(ResourceBudgetError):
        hp0_dims(duval_record("E8").surface(), 60, budget=1000)


def test_hp0_budget_from_env(monkeypatch):
    monkeypatch.setenv("PTRACE_BUDGET", "500")
    with pytest.raises(ResourceBudgetError):
        hp0_dims(E6T)


def test_hp0_non_isolated_flagged():
    X = surface("x1^2*x2", (1, 1, 1))
    with pytest.raises(NotIsolatedError):
        hp0_dims(X)
    prof = hp0_dims(X, 3)
    assert prof.outside_hypotheses
    assert prof.dims[3] > 0


# -- complete intersections


def test_ci_surface_reduces_to_hypersurface():
    # {x4 = 0} n {x1^2 + x2^2 + x3^2 = 0} in C^4 is A1
    ring = WeightedRing((2, 2, 2, 2))
    X = SurfaceVariety(ring, (parse_polynomial("x4", ring), parse_polynomial("x1^2+x2^2+x3^2", ring)))
    assert X.bracket_degree == -4 + 2
    assert hp0_dims(X).dims.as_dict() == {0: 1}
    x1, x2 = parse_polynomial("x1", ring), parse_polynomial("x2", ring)
    assert bracket(X, x1, x2) == parse_polynomial("-2*x3", ring) or bracket(X, x1, x2) == parse_polynomial("2*x3", ring)


def test_ci_surface_d4_as_intersection():
    # D4 realized as an intersection of two quadrics in C^4 with a linear
    # substitution: x4 - x1 = 0 and x1^3 + x1*x2^2 + x3^2 = 0
    ring = WeightedRing((2, 2, 3, 2))
    X = SurfaceVariety(ring, (parse_polynomial("x4 - x1", ring),
                              parse_polynomial("x4^3 + x1*x2^2 + x3^2", ring)))
    assert hp0_dims(X).dims == jacobi_hilbert((2, 2, 3), 6)


def test_ci_jacobi_identity():
    ring = WeightedRing((1, 1, 1, 1))
    X = SurfaceVariety(ring, (parse_polynomial("x1^2 + x2^2 + x3^2 + x4^2", ring),
                              parse_polynomial("x1^2 + 2*x2^2 + 3*x3^2 + 5*x4^2", ring)))
    rng = random.Random(5)
    for _ in range(15):
        g, h, k = (random_homogeneous(ring, rng.randint(1, 2), rng) for _ in range(3))
        jac = (bracket(X, bracket(X, g, h), k) + bracket(X, bracket(X, h, k), g)
               + bracket(X, bracket(X, k, g), h))
        assert in_ideal_slice(X, jac)
    for f in X.defining:
        assert not bracket(X, f, random_homogeneous(ring, 2, rng))


def test_ci_wrong_equation_count():
    ring = WeightedRing((1, 1, 1, 1))
    with pytest.raises(ValueError):
        SurfaceVariety(ring, (parse_polynomial("x1", ring),))


# -- is_isolated


def test_is_isolated_examples():
    assert is_isolated(surface("x1^2 + x2^2 + x3^2", (1, 1, 1)))[0]
    ok, cert = is_isolated(surface("x1^2*x2", (1, 1, 1)))
    assert not ok and cert.dims_in_window
    assert is_isolated(elliptic_surface("E6", 1))[0]


def test_is_isolated_rejects_singular_elliptic_member():
    # lambda^3 = -27 gives a reducible cubic (a triangle of lines)
    assert not is_isolated(elliptic_surface("E6", -3))[0]


def test_is_isolated_requires_quasi_homogeneous():
    with pytest.raises(ValueError):
        surface("x1^2 + x2^3 + x3", (1, 1, 1))
