"""The endomorphism operad End_V of a graded carrier.

An :class:`OperadElement` is a multilinear map ``V^{(x)p} -> V`` evaluated
lazily on tuples of basis keys and memoized. A carrier is anything with

* ``deg(b)`` and ``d(b)`` for basis keys ``b``,
* ``test_basis()`` -- the finite list of keys identities are checked on,
* ``shifted(k)`` and value equality.

For a finite :class:`~shiftpois.graded.DgModule` the test basis is the whole
basis, so a passing comparison is a proof. For polynomial carriers it is the
set of monomials under the degree cap; evaluation itself is never truncated.
"""

from __future__ import annotations

import itertools

from . import signs
from .graded import koszul_sign, vaxpy
from .perms import Permutation, transport_left, transport_right


class OperadElement:
    __slots__ = ("carrier", "arity", "degree", "_fn", "_cache", "label")

    def __init__(self, carrier, arity: int, degree: int, fn, label: str = ""):
        if arity < 0:
            raise ValueError("arity must be non-negative")
        self.carrier = carrier
        self.arity = arity
        self.degree = degree
        self._fn = fn
        self._cache: dict = {}
        self.label = label

    def __call__(self, *inputs) -> dict:
        if len(inputs) != self.arity:
            raise ValueError(f"expected {self.arity} inputs, got {len(inputs)}")
        try:
            return self._cache[inputs]
        except KeyError:
            out = self._fn(inputs)
            self._cache[inputs] = out
            return out

    def apply(self, *vectors) -> dict:
        """Multilinear extension to sparse vectors."""
        out: dict = {}
        for combo in itertools.product(*(v.items() for v in vectors)):
            c = 1
            for _, x in combo:
                c *= x
            vaxpy(out, c, self(*(k for k, _ in combo)))
        return out

    def __repr__(self):
        name = self.label or "f"
        return f"<{name}: arity {self.arity}, degree {self.degree}>"

    def __add__(self, other):
        return lincomb([(1, self), (1, other)])

    def __sub__(self, other):
        return lincomb([(1, self), (-1, other)])

    def __neg__(self):
        return lincomb([(-1, self)])

    def __rmul__(self, c):
        return lincomb([(c, self)])


def _check_same(*elts):
    c = elts[0].carrier
    for e in elts[1:]:
        if e.carrier != c:
            raise ValueError("carrier mismatch")


def from_table(carrier, arity: int, degree: int, table: dict, label="") -> OperadElement:
    """Element given by an explicit table ``inputs -> sparse vector``.

    Missing inputs evaluate to zero. Homogeneity is checked.
    """
    clean = {}
    for inputs, vec in table.items():
        inputs = tuple(inputs)
        vec = {k: v for k, v in vec.items() if v}
        if not vec:
            continue
        src = sum(carrier.deg(b) for b in inputs)
        for k in vec:
            if carrier.deg(k) != src + degree:
                raise ValueError(f"entry {inputs} -> {k} is not of degree {degree}")
        clean[inputs] = vec
    return OperadElement(carrier, arity, degree, lambda inp: clean.get(inp, {}), label)


def symmetric_from_table(carrier, arity: int, degree: int, table: dict, label="") -> OperadElement:
    """The map with the given values on sorted inputs, extended by Koszul symmetry."""

    def fn(inp):
        order = sorted(range(arity), key=lambda k: inp[k])
        rank = [0] * arity  # input k lands at position rank[k] once sorted
        for pos, k in enumerate(order):
            rank[k] = pos
        val = table.get(tuple(inp[k] for k in order))
        if not val:
            return {}
        s = koszul_sign([carrier.deg(a) for a in inp], Permutation(tuple(rank)))
        return val if s == 1 else {m: -c for m, c in val.items()}

    return OperadElement(carrier, arity, degree, fn, label)


def zero(carrier, arity: int, degree: int = 0) -> OperadElement:
    return OperadElement(carrier, arity, degree, lambda inp: {}, "0")


def identity(carrier) -> OperadElement:
    return OperadElement(carrier, 1, 0, lambda inp: {inp[0]: 1}, "id")


def differential(carrier) -> OperadElement:
    """The carrier differential as an arity-1 element of degree 1."""
    return OperadElement(carrier, 1, 1, lambda inp: carrier.d(inp[0]), "d")


def lincomb(terms) -> OperadElement:
    """sum c_k f_k for elements of equal carrier, arity and degree."""
    terms = [(c, f) for c, f in terms if c]
    if not terms:
        raise ValueError("empty linear combination; use zero()")
    f0 = terms[0][1]
    for _, f in terms:
        _check_same(f0, f)
        if f.arity != f0.arity or f.degree != f0.degree:
            raise ValueError("linear combination of inhomogeneous elements")

    def fn(inp):
        out: dict = {}
        for c, f in terms:
            vaxpy(out, c, f(*inp))
        return out

    return OperadElement(f0.carrier, f0.arity, f0.degree, fn)


def partial_compose(f: OperadElement, i: int, g: OperadElement) -> OperadElement:
    """f o_i g (``i`` is 1-based), with the Koszul sign of g passing v_1..v_{i-1}."""
    _check_same(f, g)
    p, q = f.arity, g.arity
    if not 1 <= i <= p:
        raise ValueError(f"slot {i} out of range for arity {p}")
    carrier = f.carrier
    gdeg = g.degree
    use_sign = signs.active("composition")

    def fn(inp):
        pre, mid, post = inp[: i - 1], inp[i - 1 : i - 1 + q], inp[i - 1 + q :]
        s = 1
        if use_sign and gdeg % 2 and sum(carrier.deg(b) for b in pre) % 2:
            s = -1
        out: dict = {}
        for b, c in g(*mid).items():
            vaxpy(out, s * c, f(*pre, b, *post))
        return out

    return OperadElement(carrier, p + q - 1, f.degree + g.degree, fn)


def act(sigma: Permutation, f: OperadElement) -> OperadElement:
    """f^sigma: slot k receives input sigma^{-1}(k), with the Koszul sign."""
    if sigma.size != f.arity:
        raise ValueError("permutation size does not match arity")
    if sigma.is_identity():
        return f
    inv = sigma.inverse().images
    carrier = f.carrier

    def fn(inp):
        s = koszul_sign([carrier.deg(b) for b in inp], sigma)
        vec = f(*(inp[j] for j in inv))
        return {k: s * v for k, v in vec.items()}

    return OperadElement(carrier, f.arity, f.degree, fn)


def suspension_sign(degrees, m: int) -> int:
    """Décalage sign of suspending ``m >= 0`` times from the given input degrees."""
    if not signs.active("suspension"):
        return 1
    p = len(degrees)
    e = 0
    tri = m * (m + 1) // 2
    for j, dj in enumerate(degrees, start=1):
        e += (p - j) * (m * dj - tri)
    return -1 if e % 2 else 1


def suspend(f: OperadElement, n: int) -> OperadElement:
    """The image of f in End_{V[n]}: degree becomes ``|f| + n(p-1)``.

    Coefficients are those of f times the décalage sign of moving n suspension
    symbols through the inputs; ``suspend(f^s) = sign(s)^n suspend(f)^s``.
    """
    if n == 0:
        return f
    src = f.carrier
    dst = src.shifted(n)
    p = f.arity
    base = src if n > 0 else dst
    m = abs(n)

    def fn(inp):
        s = suspension_sign([base.deg(b) for b in inp], m)
        vec = f(*inp)
        return {k: s * v for k, v in vec.items()} if s < 0 else vec

    return OperadElement(dst, p, f.degree + n * (p - 1), fn)


def end_differential(f: OperadElement) -> OperadElement:
    """Differential of the hom complex: d o f - (-1)^{|f|} sum_i f(.., d v_i, ..)."""
    carrier = f.carrier
    p = f.arity
    sf = -1 if f.degree % 2 else 1

    def fn(inp):
        out: dict = {}
        for b, c in f(*inp).items():
            vaxpy(out, c, carrier.d(b))
        before = 0
        for i in range(p):
            s = -sf * (-1 if before % 2 else 1)
            for b, c in carrier.d(inp[i]).items():
                vaxpy(out, s * c, f(*inp[:i], b, *inp[i + 1 :]))
            before += carrier.deg(inp[i])
        return out

    return OperadElement(carrier, p, f.degree + 1, fn)


def input_tuples(carrier, arity: int, basis=None):
    """Test inputs: all tuples over ``basis``, or the carrier's own choice if it has one."""
    if basis is None:
        if hasattr(carrier, "test_tuples"):
            return carrier.test_tuples(arity)
        basis = carrier.test_basis()
    return itertools.product(basis, repeat=arity)


def difference_witness(f: OperadElement, g: OperadElement, inputs=None):
    """First input where f and g differ, as ``(inputs, f_value, g_value)``; else None."""
    _check_same(f, g)
    if f.arity != g.arity:
        raise ValueError("arity mismatch")
    for inp in inputs if inputs is not None else input_tuples(f.carrier, f.arity):
        a, b = f(*inp), g(*inp)
        if a != b:
            return inp, a, b
    return None


def equal(f: OperadElement, g: OperadElement, inputs=None) -> bool:
    return difference_witness(f, g, inputs) is None


def is_zero(f: OperadElement, inputs=None) -> bool:
    for inp in inputs if inputs is not None else input_tuples(f.carrier, f.arity):
        if f(*inp):
            return False
    return True


def equivariance_check(f, g, sigma: Permutation, tau: Permutation, i: int,
                       transport=(transport_right, transport_left)) -> bool:
    """Both compatibilities between partial composition and the action."""
    right, left = transport
    p, q = f.arity, g.arity
    lhs1 = partial_compose(f, i, act(sigma, g))
    rhs1 = act(right(sigma, i, p), partial_compose(f, i, g))
    if not equal(lhs1, rhs1):
        return False
    j, tau2 = left(tau, i, q)
    lhs2 = partial_compose(act(tau, f), i, g)
    rhs2 = act(tau2, partial_compose(f, j, g))
    return equal(lhs2, rhs2)
