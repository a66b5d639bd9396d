import random

import pytest
from hypothesis import given, settings, strategies as st

from test_linfinity import oracle_relation
from shiftpois.cdga import validate_cdga
from shiftpois.linfinity import PolyvectorFamily, mc_relation
from shiftpois.polyvectors import PolyvectorSpace, polyvector_differential
from shiftpois.simplicial import (
    SimplexOfPoisson,
    degenerate,
    interpolate,
    is_simplex,
    lift,
    omega,
    simplex_space,
    t_polynomial,
    vertex_eval,
)
from shiftpois.suites import koszul_tate, plane, random_polyvector, truncated_tower


def test_omega_presentations():
    assert tuple(omega(0).names) == () and validate_cdga(omega(0)).ok
    O1 = omega(1)
    assert list(O1.names) == ["t1", "dt1"] and list(O1.degrees) == [0, 1]
    assert O1.d_poly({(1, 0): 1}) == {(0, 1): 1}
    assert O1.d_poly({(2, 0): 1}) == {(1, 1): 2}  # d(t^2) = 2 t dt
    assert O1.ring.mul({(0, 1): 1}, {(0, 1): 1}) == {}  # dt dt = 0
    for m in range(4):
        assert validate_cdga(omega(m)).ok
    with pytest.raises(ValueError):
        omega(-1)


def classical():
    S = PolyvectorSpace(plane(), 0, 4, 1)
    return PolyvectorFamily(S, {2: S.vector_field("x") * S.vector_field("y")})


def test_degenerate_simplices_pass_and_restrict_back():
    F = classical()
    for m in range(3):
        S = degenerate(F, m)
        assert is_simplex(S).ok
        for j in range(m + 1):
            assert vertex_eval(S, j).members == F.members
    with pytest.raises(ValueError):
        vertex_eval(degenerate(F, 1), 2)


def test_linear_interpolation_fails_through_dt():
    F = classical()
    Z = PolyvectorFamily(F.space, {})
    S = interpolate(Z, F)
    rep = is_simplex(S)
    assert rep.failing_weights() == [2]
    assert "dt1" in rep.first_failure().witness
    assert vertex_eval(S, 0).members == {} and vertex_eval(S, 1).members == F.members


@pytest.mark.parametrize("m", [0, 1, 2])
@settings(max_examples=10, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_d_squares_to_zero_over_forms(m, seed):
    base = PolyvectorSpace(koszul_tate(), -1, 3, 1)
    space = simplex_space(base, m)
    P = random_polyvector(space, random.Random(seed), max_weight=2, coeff_cap=2)
    assert not polyvector_differential(polyvector_differential(P))


def test_simplex_members_only_differentiate_along_a():
    base = PolyvectorSpace(plane(), 0, 3, 1)
    space = simplex_space(base, 1)
    with pytest.raises(ValueError):
        SimplexOfPoisson(base, 1, {2: space.vector_field("t1") * space.vector_field("x")})


def gauge_path(seed):
    """pi0 + t d(h) + dt h over Koszul-Tate at n = -1 with h of degree 0."""
    rng = random.Random(seed)
    base = PolyvectorSpace(koszul_tate(), -1, 4, 1)
    pi0 = truncated_tower(base, 2, 1, rng).get(2, base.zero())
    h = base.zero()
    for b in base.basis(2, 1, degree=base.n + 1):
        h = h + b.scaled(rng.choice([-1, 0, 1]))
    t = t_polynomial(base, 1, {((1,), (0,)): 1})
    dt = t_polynomial(base, 1, {((0,), (1,)): 1})
    P = lift(pi0, 1) + t * lift(polyvector_differential(h), 1) + dt * lift(h, 1)
    return base, pi0, h, SimplexOfPoisson(base, 1, {2: P} if P else {})


@pytest.mark.parametrize("seed", range(5))
def test_nonconstant_simplex_matches_oracle_expansion(seed):
    base, pi0, h, S = gauge_path(seed)
    F = S.family()
    for N in range(2, F.default_n_max() + 1):
        assert mc_relation(F, N) == oracle_relation(F, N)
    # d(t dh) and d(dt h) cancel, so only the bracket terms can fail
    assert not mc_relation(F, 2)
    v0 = vertex_eval(S, 0)
    assert v0.members == ({2: pi0} if pi0 else {})
    if h:
        assert vertex_eval(S, 1)[2] == pi0 + polyvector_differential(h)
