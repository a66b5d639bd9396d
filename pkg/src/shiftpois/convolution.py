"""The convolution Lie algebra L(O) = (+)_n O(n) of the endomorphism operad.

Elements are weight-graded (weight = arity) sums of operad elements of one
cohomological degree. The bracket comes from the pre-Lie product summing
``(f o_i g)^sigma`` over the shuffle sets S^i_{p,q}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import signs
from .operad import (
    OperadElement,
    act,
    difference_witness,
    end_differential,
    input_tuples,
    lincomb,
    partial_compose,
)
from .perms import Permutation, all_permutations, enumerate_prelie_shuffles, enumerate_shuffles


class ConvolutionElement:
    """Finite sum of operad elements keyed by weight, homogeneous in degree."""

    def __init__(self, carrier, degree: int, components=None):
        self.carrier = carrier
        self.degree = degree
        self.components: dict[int, OperadElement] = {}
        for w, f in (components or {}).items():
            if f.arity != w:
                raise ValueError(f"component of weight {w} has arity {f.arity}")
            if f.carrier != carrier:
                raise ValueError("carrier mismatch")
            if f.degree != degree:
                raise ValueError(f"component of weight {w} has degree {f.degree}, expected {degree}")
            self.components[w] = f

    @classmethod
    def single(cls, f: OperadElement) -> ConvolutionElement:
        return cls(f.carrier, f.degree, {f.arity: f})

    @property
    def weights(self):
        return sorted(self.components)

    def __getitem__(self, w):
        return self.components[w]

    def _combine(self, other, c):
        if other.carrier != self.carrier:
            raise ValueError("carrier mismatch")
        if not other.components:
            return self
        if not self.components:
            return other.scaled(c)
        if other.degree != self.degree:
            raise ValueError("adding elements of different degrees")
        comps = dict(self.components)
        for w, g in other.components.items():
            comps[w] = lincomb([(1, comps[w]), (c, g)]) if w in comps else lincomb([(c, g)])
        return ConvolutionElement(self.carrier, self.degree, comps)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scaled(self, c):
        if not c:
            return ConvolutionElement(self.carrier, self.degree)
        return ConvolutionElement(
            self.carrier, self.degree, {w: lincomb([(c, f)]) for w, f in self.components.items()}
        )

    def __neg__(self):
        return self.scaled(-1)

    def __rmul__(self, c):
        return self.scaled(c)

    def __repr__(self):
        return f"<ConvolutionElement degree {self.degree}, weights {self.weights}>"


def _sum_into(comps: dict, w: int, terms: list):
    terms = [t for t in terms if t[0]]
    if terms:
        comps.setdefault(w, []).extend(terms)


def _assemble(carrier, degree, comps: dict) -> ConvolutionElement:
    return ConvolutionElement(carrier, degree, {w: lincomb(t) for w, t in comps.items() if t})


def _check(f, g):
    if f.carrier != g.carrier:
        raise ValueError("carrier mismatch")


def star(f: ConvolutionElement, g: ConvolutionElement) -> ConvolutionElement:
    """Pre-Lie product f * g = sum_i sum_{sigma in S^i_{p,q}} (f o_i g)^sigma."""
    _check(f, g)
    comps: dict = {}
    for p, fp in f.components.items():
        if p == 0:
            continue
        for q, gq in g.components.items():
            terms = []
            for i in range(1, p + 1):
                comp = partial_compose(fp, i, gq)
                for sigma in enumerate_prelie_shuffles(p, q, i):
                    terms.append((1, act(sigma, comp)))
            _sum_into(comps, p + q - 1, terms)
    return _assemble(f.carrier, f.degree + g.degree, comps)


def bracket(f: ConvolutionElement, g: ConvolutionElement) -> ConvolutionElement:
    """[f, g] = f*g - (-1)^{|f||g|} g*f."""
    _check(f, g)
    s = -1 if (f.degree * g.degree) % 2 and signs.active("bracket") else 1
    return star(f, g) - star(g, f).scaled(s)


def differential(f: ConvolutionElement) -> ConvolutionElement:
    """The differential of L(End_V) induced by the carrier differential."""
    return ConvolutionElement(
        f.carrier, f.degree + 1, {w: end_differential(c) for w, c in f.components.items()}
    )


def symmetrize(f: ConvolutionElement) -> ConvolutionElement:
    """Average over the symmetric group in every weight."""
    comps = {}
    for w, c in f.components.items():
        k = Fraction(1, math.factorial(w))
        comps[w] = lincomb([(k, act(s, c)) for s in all_permutations(w)])
    return ConvolutionElement(f.carrier, f.degree, comps)


def _adjacent_transpositions(w):
    for k in range(w - 1):
        im = list(range(w))
        im[k], im[k + 1] = k + 1, k
        yield Permutation(tuple(im))


def symmetry_witness(f: ConvolutionElement, inputs_for=None):
    """First ``(weight, sigma, inputs, f^sigma value, f value)`` breaking symmetry."""
    for w, c in sorted(f.components.items()):
        basis = None if inputs_for is None else inputs_for(w)
        for s in _adjacent_transpositions(w):
            wit = difference_witness(act(s, c), c, basis)
            if wit is not None:
                return (w, s) + wit
    return None


def is_symmetric(f: ConvolutionElement, inputs_for=None) -> bool:
    return symmetry_witness(f, inputs_for) is None


def difference(f: ConvolutionElement, g: ConvolutionElement, inputs_for=None):
    """First ``(weight, inputs, f value, g value)`` where f and g differ, else None."""
    _check(f, g)
    from .operad import zero

    for w in sorted(set(f.components) | set(g.components)):
        a = f.components.get(w) or zero(f.carrier, w, g.degree)
        b = g.components.get(w) or zero(f.carrier, w, f.degree)
        basis = None if inputs_for is None else inputs_for(w)
        wit = difference_witness(a, b, basis)
        if wit is not None:
            return (w,) + wit
    return None


def equal(f, g, inputs_for=None) -> bool:
    return difference(f, g, inputs_for) is None


# -- multi-derivations ---------------------------------------------------------


@dataclass
class MultiDerivationReport:
    subject: ConvolutionElement
    product: OperadElement
    verdicts: dict = field(default_factory=dict)  # weight -> (ok, witness)

    @property
    def ok(self) -> bool:
        return all(ok for ok, _ in self.verdicts.values())

    def __bool__(self):
        return self.ok

    def first_failure(self):
        for w, (ok, wit) in sorted(self.verdicts.items()):
            if not ok:
                return w, wit
        return None


def leibniz_permutations(p: int, i: int):
    """The two permutations placing the Leibniz terms for slot ``i`` of arity ``p``."""
    first = Permutation.from_cycles(p + 1, tuple([i + 1] + list(range(p + 1, i + 1, -1))))
    second = Permutation.from_cycles(p + 1, tuple(range(1, i + 1)))
    return first, second


def multiderivation_sides(f: OperadElement, mu: OperadElement, i: int):
    """Both sides of the signed Leibniz identity at slot ``i``."""
    p = f.arity
    s = -1 if (mu.degree * f.degree) % 2 and signs.active("multiderivation") else 1
    t1, t2 = leibniz_permutations(p, i)
    lhs = partial_compose(f, i, mu)
    rhs = lincomb([
        (s, act(t1, partial_compose(mu, 1, f))),
        (s, act(t2, partial_compose(mu, 2, f))),
    ])
    return lhs, rhs


def is_multiderivation(f: ConvolutionElement, mu: OperadElement, basis=None) -> MultiDerivationReport:
    """Check the signed Leibniz identity against ``mu`` in every slot of every weight.

    ``basis`` restricts the carrier keys fed to the identity (default: the
    carrier's test basis).
    """
    if f.carrier != mu.carrier:
        raise ValueError("carrier mismatch")
    if mu.arity != 2:
        raise ValueError("mu must be binary")
    report = MultiDerivationReport(f, mu)
    for p, fp in sorted(f.components.items()):
        verdict = (True, None)
        for i in range(1, p + 1):
            lhs, rhs = multiderivation_sides(fp, mu, i)
            wit = difference_witness(lhs, rhs, input_tuples(f.carrier, p + 1, basis))
            if wit is not None:
                verdict = (False, (i,) + wit)
                break
        report.verdicts[p] = verdict
    return report


# -- shuffle product -------------------------------------------------------------


def decalage_sign(fdeg: int, n: int) -> int:
    """(-1)^{(n+1)(|f|+n+1) + C(n+2,2)}: compares mu_susp(f, g) with the product taken in A."""
    if not signs.active("shuffle-decalage"):
        return 1
    m = n + 1
    e = m * (fdeg + m) + m * (m + 1) // 2
    return -1 if e % 2 else 1


def shuffle_product(f: ConvolutionElement, g: ConvolutionElement, mu_susp: OperadElement) -> ConvolutionElement:
    """f . g = sum_{sigma in Sh_{p,q}} (mu(f, g))^sigma with the décalage sign.

    ``mu_susp`` is the commutative product suspended n+1 times (degree n+1);
    the result has degree ``|f| + |g| + n + 1`` and weight ``p + q``.
    """
    _check(f, g)
    if mu_susp.carrier != f.carrier:
        raise ValueError("carrier mismatch")
    n = mu_susp.degree - 1
    s = decalage_sign(f.degree, n)
    comps: dict = {}
    for p, fp in f.components.items():
        left = partial_compose(mu_susp, 1, fp)
        for q, gq in g.components.items():
            raw = partial_compose(left, p + 1, gq)
            terms = [(s, act(sigma, raw)) for sigma in enumerate_shuffles(p, q)]
            _sum_into(comps, p + q, terms)
    return _assemble(f.carrier, f.degree + g.degree + mu_susp.degree, comps)
