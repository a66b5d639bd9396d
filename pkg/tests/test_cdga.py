import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shiftpois.cdga import CdgaPresentation, PolyCarrier, product, unit, validate_cdga
from shiftpois.polyring import GradedPolyRing
from shiftpois.suites import koszul_tate


def test_plane_is_valid():
    assert validate_cdga(CdgaPresentation(["x", "y"], [0, 0]))


def test_koszul_tate_is_valid():
    A = koszul_tate()
    assert validate_cdga(A)
    assert A.d_poly({(2, 0): 1}) == {}


def test_degree_violation_names_the_generator():
    A = CdgaPresentation(["x", "xi"], [0, -1], {"xi": {(0, 1): 1}})
    rep = validate_cdga(A)
    assert not rep and rep.problems[0][0] == "xi" and "degree" in rep.problems[0][1]


def test_d_squared_nonzero_is_reported():
    A = CdgaPresentation(["x", "xi", "eta"], [0, -1, -2], {"xi": {(1, 0, 0): 1}, "eta": {(0, 1, 0): 1}})
    rep = validate_cdga(A)
    assert not rep and rep.problems == [("eta", rep.problems[0][1])]


def test_positive_degree_needs_the_bound():
    A = CdgaPresentation(["z"], [1])
    assert not validate_cdga(A)
    assert validate_cdga(CdgaPresentation(["z"], [1], max_degree=1))


def test_unknown_generator_in_differential():
    with pytest.raises(ValueError):
        CdgaPresentation(["x"], [0], {"y": {(1,): 1}})


R = GradedPolyRing(["x", "a", "b", "y"], [0, -1, 1, 2])
monos = st.sampled_from(R.monomials(3))


@given(monos, monos)
def test_graded_commutativity(m1, m2):
    s1, p = R.mul_monomials(m1, m2)
    s2, q = R.mul_monomials(m2, m1)
    assert p == q
    if s1:
        e = R.mdeg(m1) * R.mdeg(m2)
        assert s1 == s2 * (-1 if e % 2 else 1)


@given(monos, monos, monos)
def test_associativity(m1, m2, m3):
    a = R.mul(R.mul({m1: 1}, {m2: 1}), {m3: 1})
    b = R.mul({m1: 1}, R.mul({m2: 1}, {m3: 1}))
    assert a == b


def test_odd_generators_square_to_zero():
    a = R.gen("a")
    assert R.mul({a: 1}, {a: 1}) == {}


@given(monos, monos, st.integers(0, 3))
def test_partials_are_graded_derivations(m1, m2, k):
    prod = R.mul({m1: 1}, {m2: 1})
    lhs = {}
    for m, c in prod.items():
        for mm, cc in R.partial(k, m).items():
            lhs[mm] = lhs.get(mm, 0) + c * cc
    lhs = {m: c for m, c in lhs.items() if c}
    s = -1 if (R.degrees[k] * R.mdeg(m1)) % 2 else 1
    rhs = R.mul(R.partial(k, m1), {m2: 1})
    for m, c in R.mul({m1: 1}, R.partial(k, m2)).items():
        rhs[m] = rhs.get(m, 0) + s * c
    assert lhs == {m: c for m, c in rhs.items() if c}


def test_carrier_probes_grow_with_arity():
    C = PolyCarrier(CdgaPresentation(["x", "y"], [0, 0]), 1, 1)
    gens = {(1, 0), (0, 1)}
    for arity in (1, 3, 5):
        tuples = set(C.test_tuples(arity))
        assert all(t in tuples for t in itertools.product(gens, repeat=arity))


def test_product_and_unit():
    C = PolyCarrier(koszul_tate(), 2)
    mu = product(C)
    assert mu((0, 1), (0, 1)) == {}
    assert mu((1, 0), (0, 1)) == {(1, 1): 1}
    assert unit(C)() == {(0, 0): 1}
    with pytest.raises(ValueError):
        product(C.shifted(1))


def test_shifted_carrier_differential_sign():
    C = PolyCarrier(koszul_tate(), 2)
    xi = (0, 1)
    assert C.d(xi) == {(2, 0): 1}
    assert C.shifted(1).d(xi) == {(2, 0): -1}
