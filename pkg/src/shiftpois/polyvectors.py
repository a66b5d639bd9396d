"""Shifted polyvector fields Pol(A, n) and their realization as multi-derivations.

Pol(A, n) is again a free graded-commutative algebra: the generators g of A
followed by symbols ``d_g`` of degree ``n + 1 - |g|``. A polyvector is an
element of that ring; its weight is the number of ``d`` factors, and since
the A-generators come first every monomial is already "coefficient on the
left". Degrees are reported in Pol and, where it matters, in Pol[n+1].

The Schouten bracket is obtained by pulling the convolution bracket back
along :func:`realize`; an independent contraction formula lives only in the
tests.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import signs
from .cdga import CdgaPresentation, PolyCarrier, product
from .convolution import ConvolutionElement, bracket
from .graded import CapOverflowError, scalar, vaxpy
from .operad import OperadElement, act, lincomb, suspend
from .perms import all_permutations
from .polyring import GradedPolyRing


class PolyvectorSpace:
    """Pol(A, n) together with the carrier A[n+1].

    ``cap`` bounds the polynomial degree of coefficients; exceeding it raises
    :class:`CapOverflowError`. ``probe`` bounds the monomials used as test
    inputs on the carrier (default: ``cap``).
    """

    def __init__(self, cdga: CdgaPresentation, n: int, cap: int = 4, probe=None):
        self.cdga = cdga
        self.n = n
        self.cap = cap
        self.probe = cap if probe is None else probe
        r = cdga.ring
        self.rank = r.size
        self.ring = GradedPolyRing(
            r.names + tuple("d_" + g for g in r.names),
            r.degrees + tuple(n + 1 - d for d in r.degrees),
        )
        self.base = PolyCarrier(cdga, self.probe, 0)
        self.carrier = self.base.shifted(n + 1)
        self._kappa: dict = {}
        signs.on_change(self._kappa.clear)

    def __eq__(self, other):
        return isinstance(other, PolyvectorSpace) and self.key() == other.key()

    def key(self):
        return (self.cdga, self.n, self.cap, self.probe)

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Pol({self.cdga.ring!r}, n={self.n})"

    # -- construction -------------------------------------------------------

    def split(self, m):
        """(coefficient monomial in A, exponent tuple of the d-symbols)."""
        return m[: self.rank], m[self.rank :]

    def join(self, a, e):
        return tuple(a) + tuple(e)

    def zero(self) -> Polyvector:
        return Polyvector(self, {})

    def function(self, poly: dict) -> Polyvector:
        """A weight-0 polyvector from a polynomial of A."""
        zeros = (0,) * self.rank
        return Polyvector(self, {self.join(a, zeros): c for a, c in poly.items()})

    def vector_field(self, name) -> Polyvector:
        """The symbol d_g as a weight-1 polyvector."""
        return Polyvector(self, {self.ring.gen("d_" + name): 1})

    def generator(self, name) -> Polyvector:
        return Polyvector(self, {self.ring.gen(name): 1})

    def monomial(self, coeff_exps, d_names) -> Polyvector:
        """c * d_{g_1} ... d_{g_w} with c a monomial of A (exponent tuple)."""
        p = Polyvector(self, {self.join(coeff_exps, (0,) * self.rank): 1})
        for g in d_names:
            p = p * self.vector_field(g)
        return p

    def d_multi_indices(self, w: int):
        """Sorted generator-index tuples J with d_J nonzero in Pol (odd d's not repeated)."""
        out = []
        for J in itertools.combinations_with_replacement(range(self.rank), w):
            if any(J.count(k) > 1 and self.ring.degrees[self.rank + k] % 2 for k in set(J)):
                continue
            out.append(J)
        return out

    def basis(self, w: int, coeff_cap=None, degree=None):
        """Monomial polyvectors of weight w with coefficient degree <= coeff_cap.

        ``degree`` (optional) selects the Pol degree.
        """
        cap = self.cap if coeff_cap is None else coeff_cap
        out = []
        for J in self.d_multi_indices(w):
            e = [0] * self.rank
            for k in J:
                e[k] += 1
            for a in self.cdga.ring.monomials(cap):
                m = self.join(a, e)
                if degree is None or self.ring.mdeg(m) == degree:
                    out.append(Polyvector(self, {m: 1}))
        return out

    # -- the standard pieces ------------------------------------------------

    def d_a(self) -> Polyvector:
        """D_A = sum_g d(g) d_g, the differential of A as a weight-1 polyvector."""
        out = self.zero()
        for k, g in enumerate(self.cdga.ring.names):
            if self.cdga.dvalues[k]:
                out = out + self.function(self.cdga.dvalues[k]) * self.vector_field(g)
        return out

    def mu(self) -> OperadElement:
        """The product of A suspended to A[n+1]."""
        return suspend(product(self.base), self.n + 1)


class Polyvector:
    """A sparse element of Pol(A, n)."""

    __slots__ = ("space", "terms")

    def __init__(self, space: PolyvectorSpace, terms: dict):
        self.space = space
        self.terms = {m: scalar(c) for m, c in terms.items() if c}

    # -- arithmetic ---------------------------------------------------------

    def _same(self, other):
        if other.space != self.space:
            raise ValueError("polyvectors from different spaces")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polyvector(self.space, out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        return Polyvector(self.space, {m: c * v for m, v in self.terms.items()})

    def __neg__(self):
        return self.scaled(-1)

    def __rmul__(self, c):
        return self.scaled(c)

    def __mul__(self, other):
        if not isinstance(other, Polyvector):
            return self.scaled(other)
        self._same(other)
        return Polyvector(self.space, self.space.ring.mul(self.terms, other.terms))

    def __eq__(self, other):
        return isinstance(other, Polyvector) and self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Polyvector({self.space.ring.format(self.terms)})"

    def __str__(self):
        return self.space.ring.format(self.terms)

    # -- gradings -----------------------------------------------------------

    def weight_of(self, m) -> int:
        return sum(self.space.split(m)[1])

    @property
    def weights(self):
        return sorted({self.weight_of(m) for m in self.terms})

    def component(self, w: int) -> Polyvector:
        return Polyvector(self.space, {m: c for m, c in self.terms.items() if self.weight_of(m) == w})

    @property
    def pol_degree(self):
        """Degree in Pol(A, n); None for zero. Raises on inhomogeneous input."""
        return self.space.ring.degree_of(self.terms)

    @property
    def degree(self):
        """Degree in Pol(A, n)[n+1]."""
        d = self.pol_degree
        return None if d is None else d - (self.space.n + 1)

    def coefficient_degree(self) -> int:
        """Largest polynomial degree among the coefficients."""
        return max((sum(self.space.split(m)[0]) for m in self.terms), default=0)

    def grouped(self):
        """{weight: {d-exponents: coefficient polynomial of A}}."""
        out: dict = {}
        for m, c in self.terms.items():
            a, e = self.space.split(m)
            out.setdefault(sum(e), {}).setdefault(e, {})[a] = c
        return out


# -- realization ---------------------------------------------------------------


def _order_sign(degs, n: int) -> int:
    """(-1)^{(n+1) sum_k (k-1)|g_k| + C(w,2) C(n+1,2)} for d_{g_1}..d_{g_w} in this order."""
    if not signs.active("realize-order"):
        return 1
    m = n + 1
    w = len(degs)
    e = m * sum(k * d for k, d in enumerate(degs)) + (w * (w - 1) // 2) * (m * (m - 1) // 2)
    return -1 if e % 2 else 1


def partials_product(base: PolyCarrier, coeff: dict, J) -> OperadElement:
    """T(a_1..a_w) = +- c * d_{g_1}(a_1) ... d_{g_w}(a_w) on the unshifted A.

    A multi-derivation of the product, not symmetric in general; ``J`` lists
    generator indices.
    """
    ring = base.ring
    gdeg = [ring.degrees[k] for k in J]
    w = len(J)
    cdeg = ring.degree_of(coeff) or 0

    def fn(inp):
        # moving d_{g_k} (degree -|g_k|) past a_j for j < k
        e = 0
        for k in range(w):
            for j in range(k):
                e += gdeg[k] * ring.mdeg(inp[j])
        val = dict(coeff)
        for k, a in zip(J, inp):
            da = ring.partial(k, a)
            if not da:
                return {}
            val = ring.mul(val, da)
            if not val:
                return {}
        if e % 2:
            val = {m: -c for m, c in val.items()}
        return val

    return OperadElement(base, w, cdeg - sum(gdeg), fn)


def _realize_term(space: PolyvectorSpace, coeff: dict, exps) -> OperadElement:
    J = [k for k, e in enumerate(exps) for _ in range(e)]
    w = len(J)
    n = space.n
    ring = space.cdga.ring
    eps = _order_sign([ring.degrees[k] for k in J], n)
    T = suspend(partials_product(space.base, coeff, J), n + 1)
    if w == 0:
        return T
    # on A[n+1] the realization is the plain symmetrization of the suspended T
    twist = not signs.active("realize-symmetry")
    terms = []
    for s in all_permutations(w):
        c = eps * (s.sign() if twist else 1)
        terms.append((c, act(s, T)))
    return lincomb(terms)


def realize(P: Polyvector) -> ConvolutionElement:
    """The symmetric multi-derivation on A[n+1] attached to P (degree in Pol[n+1])."""
    space = P.space
    deg = P.degree
    if deg is None:
        return ConvolutionElement(space.carrier, 0)
    comps = {}
    for w, parts in P.grouped().items():
        elems = [_realize_term(space, coeff, e) for e, coeff in parts.items()]
        comps[w] = elems[0] if len(elems) == 1 else lincomb([(1, f) for f in elems])
    return ConvolutionElement(space.carrier, deg, comps)


def _generator_inputs(space: PolyvectorSpace, J):
    ring = space.cdga.ring
    return tuple(ring.gen_index(k) for k in J)


def _kappa(space: PolyvectorSpace, J) -> Fraction:
    """realize(d_J) evaluated on the generators g_J, a nonzero scalar."""
    if J not in space._kappa:
        e = [0] * space.rank
        for k in J:
            e[k] += 1
        f = _realize_term(space, {space.cdga.ring.one: 1}, tuple(e))
        val = f(*_generator_inputs(space, J))
        space._kappa[J] = val.get(space.cdga.ring.one, 0)
    return space._kappa[J]


def unrealize(G: ConvolutionElement, space: PolyvectorSpace, check: bool = False) -> Polyvector:
    """Inverse of :func:`realize` on its image.

    The coefficient of d_J is read off by evaluating on the generators g_J.
    Raises :class:`CapOverflowError` if a coefficient exceeds the degree cap,
    and ``ValueError`` if ``check`` is set and G is not in the image.
    """
    if G.carrier != space.carrier:
        raise ValueError("element does not live on A[n+1] of this polyvector space")
    terms: dict = {}
    worst = 0
    for w, f in G.components.items():
        for J in space.d_multi_indices(w):
            val = f(*_generator_inputs(space, J))
            if not val:
                continue
            k = _kappa(space, J)
            if not k:
                raise ValueError(f"realization degenerates on d_{J}")
            e = [0] * space.rank
            for j in J:
                e[j] += 1
            for a, c in val.items():
                worst = max(worst, sum(a))
                vaxpy(terms, Fraction(c) / k, {space.join(a, e): 1})
    if worst > space.cap:
        raise CapOverflowError(
            f"coefficient of polynomial degree {worst} exceeds the cap {space.cap}", needed=worst)
    P = Polyvector(space, terms)
    if check:
        from .convolution import difference

        wit = difference(realize(P), G)
        if wit is not None:
            raise ValueError(f"element is not a realized polyvector; first difference {wit}")
    return P


def schouten_bracket(P: Polyvector, Q: Polyvector) -> Polyvector:
    """[P, Q] defined by realize([P, Q]) = [realize P, realize Q]."""
    P._same(Q)
    if not P or not Q:
        return P.space.zero()
    return unrealize(bracket(realize(P), realize(Q)), P.space)


def polyvector_differential(P: Polyvector) -> Polyvector:
    """dP = (-1)^{n+1} [D_A, P]; realize turns it into the End-complex differential."""
    space = P.space
    D = space.d_a()
    if not D or not P:
        return space.zero()
    s = -1 if (space.n + 1) % 2 else 1
    if not signs.active("polyvector-differential"):
        s = -s
    return schouten_bracket(D, P).scaled(s)


