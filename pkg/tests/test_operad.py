import itertools
import random

import pytest

from shiftpois.convolution import ConvolutionElement, is_symmetric
from shiftpois.graded import DgModule
from shiftpois.operad import (
    act,
    end_differential,
    equal,
    equivariance_check,
    from_table,
    identity,
    is_zero,
    lincomb,
    partial_compose,
    suspend,
    symmetric_from_table,
)
from shiftpois.perms import Permutation, all_permutations
from shiftpois.suites import random_dg_module, random_table_element

V = DgModule(("a", "b", "c"), {"a": 0, "b": 1, "c": -1}, {"c": {"a": 1}})


def elements(seed, count, max_arity=3):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        W = random_dg_module(rng)
        out.append((rng, W, rng.randint(1, max_arity)))
    return out


def test_action_on_even_inputs_is_the_plain_permutation():
    # with every input of degree 0 the signed action has no Koszul signs
    E = DgModule(("u", "v", "w"), {"u": 0, "v": 0, "w": 0})
    f = from_table(E, 3, 0, {("u", "v", "w"): {"u": 1}})
    s = Permutation.from_cycles(3, (1, 2, 3))
    g = act(s, f)
    # slot k of f reads input s^{-1}(k): g(v, w, u) = f(u, v, w)
    assert g("v", "w", "u") == {"u": 1}
    assert g("w", "u", "v") == {}


def test_action_is_a_right_action():
    rng = random.Random(1)
    for _ in range(20):
        W = random_dg_module(rng)
        p = rng.randint(1, 3)
        f = random_table_element(W, p, rng.randint(-1, 1), rng)
        s, t = rng.choice(all_permutations(p)), rng.choice(all_permutations(p))
        assert equal(act(t, act(s, f)), act(s * t, f))


def test_equivariance_of_partial_composition():
    rng = random.Random(2)
    for _ in range(25):
        W = random_dg_module(rng)
        p, q = rng.randint(1, 3), rng.randint(1, 3)
        f = random_table_element(W, p, rng.randint(-1, 1), rng)
        g = random_table_element(W, q, rng.randint(-1, 1), rng)
        i = rng.randint(1, p)
        sigma = rng.choice(all_permutations(q))
        tau = rng.choice(all_permutations(p))
        assert equivariance_check(f, g, sigma, tau, i)


def test_partial_composition_is_associative():
    rng = random.Random(3)
    for _ in range(25):
        W = random_dg_module(rng)
        p, q, r = rng.randint(2, 3), rng.randint(1, 2), rng.randint(1, 2)
        f, g, h = (random_table_element(W, k, rng.randint(-1, 1), rng) for k in (p, q, r))
        i, j = rng.randint(1, p), rng.randint(1, q)
        # sequential
        assert equal(partial_compose(partial_compose(f, i, g), i + j - 1, h),
                     partial_compose(f, i, partial_compose(g, j, h)))
        # parallel, i < k
        i, k = sorted(rng.sample(range(1, p + 1), 2))
        s = -1 if (g.degree * h.degree) % 2 else 1
        lhs = partial_compose(partial_compose(f, i, g), k + q - 1, h)
        rhs = partial_compose(partial_compose(f, k, h), i, g)
        assert equal(lhs, lincomb([(s, rhs)]))


def test_identity_is_a_unit():
    f = random_table_element(V, 2, 1, random.Random(4))
    assert equal(partial_compose(identity(V), 1, f), f)
    assert equal(partial_compose(f, 2, identity(V)), f)


def test_end_differential_squares_to_zero_and_is_a_derivation():
    rng = random.Random(5)
    for _ in range(20):
        p, q = rng.randint(1, 3), rng.randint(1, 2)
        f = random_table_element(V, p, rng.randint(-1, 1), rng)
        g = random_table_element(V, q, rng.randint(-1, 1), rng)
        assert is_zero(end_differential(end_differential(f)))
        i = rng.randint(1, p)
        s = -1 if f.degree % 2 else 1
        lhs = end_differential(partial_compose(f, i, g))
        rhs = lincomb([(1, partial_compose(end_differential(f), i, g)),
                       (s, partial_compose(f, i, end_differential(g)))])
        assert equal(lhs, rhs)


@pytest.mark.parametrize("n", [-2, -1, 1, 2, 3])
def test_suspension_is_invertible_and_shifts_degree(n):
    rng = random.Random(6 + n)
    for _ in range(10):
        p = rng.randint(0, 3)
        f = random_table_element(V, p, rng.randint(-1, 1), rng)
        g = suspend(f, n)
        assert g.degree == f.degree + n * (p - 1)
        assert g.carrier == V.shifted(n)
        assert equal(suspend(g, -n), f)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_suspension_twists_the_action_by_the_sign(n):
    rng = random.Random(10 + n)
    for _ in range(10):
        p = rng.randint(1, 3)
        f = random_table_element(V, p, rng.randint(-1, 1), rng)
        s = rng.choice(all_permutations(p))
        twist = s.sign() ** n
        assert equal(suspend(act(s, f), n), lincomb([(twist, act(s, suspend(f, n)))]))


def test_symmetric_from_table_is_symmetric():
    table = {("a", "b"): {"b": 1}, ("b", "c"): {"c": 2}, ("a", "a"): {"b": -1}}
    q = symmetric_from_table(V, 2, 1, table)
    assert is_symmetric(ConvolutionElement.single(q))
    assert q("b", "a") == {"b": 1}


def test_from_table_checks_degrees():
    with pytest.raises(ValueError):
        from_table(V, 1, 0, {("a",): {"b": 1}})


def test_arity_and_slot_errors():
    f = random_table_element(V, 2, 0, random.Random(7))
    with pytest.raises(ValueError):
        f("a")
    with pytest.raises(ValueError):
        partial_compose(f, 3, f)
    with pytest.raises(ValueError):
        act(Permutation.identity(3), f)


def test_tables_cover_every_input():
    f = random_table_element(V, 2, 0, random.Random(8))
    seen = sum(1 for inp in itertools.product(V.basis, repeat=2) if f(*inp))
    assert seen > 0
