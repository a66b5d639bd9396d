import random

import pytest

from oracles import schouten_oracle
from shiftpois.cdga import CdgaPresentation
from shiftpois.convolution import (
    ConvolutionElement,
    differential,
    equal,
    is_multiderivation,
    is_symmetric,
    shuffle_product,
)
from shiftpois.graded import CapOverflowError
from shiftpois.operad import from_table
from shiftpois.polyvectors import Polyvector, PolyvectorSpace, polyvector_differential, realize, schouten_bracket, unrealize
from shiftpois.suites import koszul_tate, plane, random_polyvector, three_generators

X, Y = (1, 0), (0, 1)
CDGAS = [plane(), koszul_tate(), three_generators()]


def spaces(ns=(-2, -1, 0, 1), cap=6, probe=1):
    return [PolyvectorSpace(A, n, cap, probe) for A in CDGAS for n in ns]


def test_weight_zero_realizes_to_a_constant():
    S = PolyvectorSpace(plane(), 0, 4)
    f = realize(S.function({(1, 1): 3}))
    assert f.weights == [0]
    assert f[0]() == {(1, 1): 3}


def test_weight_one_is_the_suspended_derivation():
    A = CdgaPresentation(["x"], [0])
    S = PolyvectorSpace(A, 0, 4, 3)
    D = realize(S.vector_field("x"))
    assert D[1]((3,)) == {(2,): 3}
    assert is_multiderivation(D, S.mu()).ok


def test_classical_bivector_realizes_symmetrically():
    S = PolyvectorSpace(plane(), 0, 4)
    q = realize(S.vector_field("x") * S.vector_field("y"))
    assert q.degree == 1 and is_symmetric(q)
    assert q[2](X, Y) in ({(0, 0): 1}, {(0, 0): -1})
    assert q[2](X, X) == q[2](Y, Y) == {}


def test_schouten_examples():
    S = PolyvectorSpace(plane(), 0, 4)
    dx, dy = S.vector_field("x"), S.vector_field("y")
    assert not schouten_bracket(dx, dy)
    assert schouten_bracket(dx, S.generator("x")) == S.function({(0, 0): 1})
    assert not schouten_bracket(dx * dy, dx * dy)


def test_schouten_matches_the_leibniz_oracle():
    rng = random.Random(1)
    for S in spaces():
        for _ in range(6):
            P, Q = random_polyvector(S, rng), random_polyvector(S, rng)
            assert schouten_bracket(P, Q) == schouten_oracle(P, Q), (S, P, Q)


def _deg(P):
    return P.degree or 0


def test_schouten_antisymmetry_and_jacobi():
    rng = random.Random(2)
    for S in spaces((-1, 0)):
        for _ in range(4):
            P, Q, R = (random_polyvector(S, rng, 2, 1) for _ in range(3))
            s = -1 if (_deg(P) * _deg(Q)) % 2 else 1
            assert schouten_bracket(P, Q) == -s * schouten_bracket(Q, P)
            lhs = schouten_bracket(P, schouten_bracket(Q, R))
            rhs = schouten_bracket(schouten_bracket(P, Q), R) + s * schouten_bracket(Q, schouten_bracket(P, R))
            assert lhs == rhs


def test_schouten_is_a_derivation_of_the_product():
    rng = random.Random(3)
    for S in spaces((-1, 0, 1)):
        for _ in range(4):
            P, Q, R = (random_polyvector(S, rng, 2, 1) for _ in range(3))
            s = -1 if (_deg(P) * (Q.pol_degree or 0)) % 2 else 1
            assert schouten_bracket(P, Q * R) == schouten_bracket(P, Q) * R + s * (Q * schouten_bracket(P, R))


def test_realize_lands_in_symmetric_multiderivations():
    rng = random.Random(4)
    for S in spaces((-1, 0, 2)):
        mu = S.mu()
        for _ in range(3):
            f = realize(random_polyvector(S, rng))
            assert is_symmetric(f)
            assert is_multiderivation(f, mu).ok


def test_realize_is_multiplicative_and_unrealize_inverts_it():
    rng = random.Random(5)
    for S in spaces((-2, 0, 1)):
        for _ in range(3):
            P, Q = random_polyvector(S, rng), random_polyvector(S, rng)
            assert equal(realize(P * Q), shuffle_product(realize(P), realize(Q), S.mu()))
            assert unrealize(realize(P), S) == P


def test_differential_intertwines_and_squares_to_zero():
    rng = random.Random(6)
    for S in spaces((-1, 0, 1)):
        for _ in range(3):
            P = random_polyvector(S, rng)
            dP = polyvector_differential(P)
            assert equal(realize(dP), differential(realize(P)))
            assert not polyvector_differential(dP)


def test_differential_on_the_koszul_tate_example():
    S = PolyvectorSpace(koszul_tate(), 0, 4)
    assert not polyvector_differential(S.vector_field("xi"))
    d_dx = polyvector_differential(S.vector_field("x"))
    sign = -1 if (S.n + 1) % 2 else 1
    assert d_dx == schouten_oracle(S.d_a(), S.vector_field("x")).scaled(sign)
    assert d_dx.terms == {S.join((1, 0), (0, 1)): d_dx.terms[S.join((1, 0), (0, 1))]}
    assert abs(next(iter(d_dx.terms.values()))) == 2


def test_trivial_differential_kills_constant_coefficients():
    S = PolyvectorSpace(plane(), 0, 4)
    assert not polyvector_differential(S.vector_field("x") * S.vector_field("y"))


def test_cap_overflow_is_loud():
    S = PolyvectorSpace(plane(), 0, 2, 1)
    P = S.function({(2, 0): 1}) * S.vector_field("y")
    Q = S.function({(0, 2): 1}) * S.vector_field("x")
    with pytest.raises(CapOverflowError) as e:
        schouten_bracket(P, Q)
    assert e.value.needed == 3


def test_unrealize_rejects_elements_outside_the_image():
    S = PolyvectorSpace(plane(), 0, 4, 1)
    C = S.carrier
    # x -> 1 like d/dx, but also 1 -> 1, which no derivation does
    f = ConvolutionElement.single(from_table(C, 1, 0, {(X,): {(0, 0): 1}, ((0, 0),): {(0, 0): 1}}))
    with pytest.raises(ValueError):
        unrealize(f, S, check=True)


def test_mismatched_spaces_are_rejected():
    P = PolyvectorSpace(plane(), 0, 4).vector_field("x")
    Q = PolyvectorSpace(plane(), 1, 4).vector_field("x")
    with pytest.raises(ValueError):
        P + Q
    assert isinstance(P, Polyvector)
