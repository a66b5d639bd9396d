import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from shiftpois.graded import rank, vaxpy
from shiftpois.lie0 import (
    compositions,
    coordinates,
    d,
    degree_of,
    dp,
    hall_basis,
    hall_basis_is_basis,
    l0_d_squared_zero,
    letter,
    lie,
)


def all_bracketings(word):
    """Every full binary bracketing of the letters in order."""
    if len(word) == 1:
        yield letter(word[0])
        return
    for k in range(1, len(word)):
        for a in all_bracketings(word[:k]):
            for b in all_bracketings(word[k:]):
                t = lie(a, b)
                if t:
                    yield t


@pytest.mark.parametrize("s,k", [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3), (8, 4), (9, 3)])
def test_hall_basis_size_matches_all_bracketings(s, k):
    spans = [t for w in compositions(s) if len(w) == k for t in all_bracketings(w)]
    assert len(hall_basis(s, k)) == rank(spans)
    assert hall_basis_is_basis(s, k)


def test_odd_squares_enter_the_basis():
    # [p2, p2] is nonzero because p2 is odd
    assert lie(letter(2), letter(2)) == {(2, 2): 2}
    assert any(b.squared for b in hall_basis(4, 2))


def test_low_weight_differentials():
    assert dp(2) == ()
    assert dict(dp(3)) == {k: Fraction(-1, 2) * v for k, v in lie(letter(2), letter(2)).items()}


def derivation_defect(a, b):
    out = d(lie(a, b))
    vaxpy(out, -1, lie(d(a), b))
    vaxpy(out, -(-1) ** degree_of(a), lie(a, d(b)))
    return out


letters = st.integers(2, 5).map(letter)


@settings(max_examples=30, deadline=None)
@given(letters, letters, letters)
def test_d_is_a_derivation_of_the_bracket(a, b, c):
    assert not derivation_defect(a, b)
    assert not derivation_defect(lie(a, b), c)


@pytest.mark.parametrize("N", range(2, 9))
def test_d_squares_to_zero_on_generators(N):
    assert not coordinates(d(dict(dp(N))))


def test_d_squared_on_brackets():
    for i, j in itertools.product(range(2, 5), repeat=2):
        assert not d(d(lie(letter(i), letter(j))))


def test_report():
    rep = l0_d_squared_zero(8)
    assert rep.ok, [c for c in rep.checks if not c[1]]
    names = [c[0] for c in rep.checks]
    assert "d p3 = -1/2 [p2,p2]" in names and "d^2 p8 = 0" in names
    with pytest.raises(ValueError):
        l0_d_squared_zero(1)


def test_coordinates_reject_non_lie_elements():
    with pytest.raises(ValueError):
        coordinates({(2, 3): 1})
    x = lie(letter(2), letter(3))
    (b, c), = coordinates(x).items()
    assert c == 1 and b.word == (2, 3)
