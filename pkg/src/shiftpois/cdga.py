"""Semi-free cdgas: presentations, validation and the carrier A[k] for End.

The carrier's basis keys are monomials (exponent tuples). Its test basis is
the finite set of monomials of polynomial degree at most ``cap``; evaluation
of operations is exact and never truncated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graded import shift_sign
from .operad import OperadElement
from .polyring import GradedPolyRing


@dataclass
class CdgaReport:
    ok: bool
    problems: list = field(default_factory=list)  # (generator, message)

    def __bool__(self):
        return self.ok


class CdgaPresentation:
    """Q[g_1..g_r] with |g_k| <= m and d given on generators.

    ``differential`` maps a generator name to a polynomial (dict monomial ->
    scalar) over the same ring; missing generators have d = 0.
    """

    def __init__(self, names, degrees, differential=None, max_degree: int = 0):
        self.ring = GradedPolyRing(names, degrees)
        self.max_degree = max_degree
        diff = differential or {}
        unknown = set(diff) - set(self.ring.names)
        if unknown:
            raise ValueError(f"differential given on unknown generators {sorted(unknown)}")
        self.dvalues = [dict(diff.get(g, {})) for g in self.ring.names]
        self._dcache: dict = {}

    @property
    def names(self):
        return self.ring.names

    @property
    def degrees(self):
        return self.ring.degrees

    def key(self):
        return (self.ring.names, self.ring.degrees,
                tuple(tuple(sorted(v.items())) for v in self.dvalues))

    def __eq__(self, other):
        return isinstance(other, CdgaPresentation) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"CdgaPresentation({self.ring!r})"

    def d(self, m) -> dict:
        """The extended differential on a monomial."""
        return self.ring.apply_derivation(self.dvalues, 1, m, self._dcache)

    def d_poly(self, p: dict) -> dict:
        out: dict = {}
        for m, c in p.items():
            for k, v in self.d(m).items():
                out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def is_trivial(self) -> bool:
        return not any(self.dvalues)

    def carrier(self, cap: int, shift: int = 0) -> PolyCarrier:
        return PolyCarrier(self, cap, shift)


def validate_cdga(P: CdgaPresentation) -> CdgaReport:
    """Degrees <= m, d homogeneous of degree +1 on generators, d^2 = 0 on generators."""
    ring = P.ring
    problems = []
    for k, g in enumerate(ring.names):
        if ring.degrees[k] > P.max_degree:
            problems.append((g, f"degree {ring.degrees[k]} exceeds the bound {P.max_degree}"))
        dg = P.dvalues[k]
        bad = sorted({ring.mdeg(m) for m in dg} - {ring.degrees[k] + 1})
        if bad:
            problems.append((g, f"d({g}) has degree {bad[0]}, expected {ring.degrees[k] + 1}"))
            continue
    if not problems:
        for k, g in enumerate(ring.names):
            dd = P.d_poly(P.dvalues[k])
            if dd:
                problems.append((g, f"d(d({g})) = {ring.format(dd)} is nonzero"))
    return CdgaReport(not problems, problems)


class PolyCarrier:
    """The cdga A regarded as a graded module shifted by ``shift``: A[shift].

    Test inputs for an arity-p check are p-tuples of monomials of polynomial
    degree at most ``cap`` each and at most ``cap + p - 1`` in total.
    """

    def __init__(self, cdga: CdgaPresentation, cap: int, shift: int = 0):
        self.cdga = cdga
        self.ring = cdga.ring
        self.cap = cap
        self.shift_amount = shift
        self._basis = None

    def deg(self, m) -> int:
        return self.ring.mdeg(m) - self.shift_amount

    def d(self, m) -> dict:
        img = self.cdga.d(m)
        if not img:
            return img
        s = shift_sign(self.shift_amount)
        return img if s == 1 else {k: -v for k, v in img.items()}

    def test_basis(self):
        if self._basis is None:
            self._basis = tuple(self.ring.monomials(self.cap))
        return self._basis

    def test_tuples(self, arity: int, ordered: bool = True):
        """Tuples of monomials whose polynomial degrees sum to at most ``cap + arity - 1``.

        The budget grows with the arity so that tuples of generators (where
        multi-derivations are determined) are always included.
        """
        basis = self.test_basis()
        ring = self.ring

        def rec(prefix, budget, start):
            if len(prefix) == arity:
                yield tuple(prefix)
                return
            for k in range(0 if ordered else start, len(basis)):
                w = ring.weight(basis[k])
                if w <= budget:
                    prefix.append(basis[k])
                    yield from rec(prefix, budget - w, k)
                    prefix.pop()

        return rec([], self.cap + max(arity, 1) - 1, 0)

    def shifted(self, k: int) -> PolyCarrier:
        return PolyCarrier(self.cdga, self.cap, self.shift_amount + k)

    def with_cap(self, cap: int) -> PolyCarrier:
        return PolyCarrier(self.cdga, cap, self.shift_amount)

    def key(self):
        return ("poly", self.cdga.key(), self.cap, self.shift_amount)

    def __eq__(self, other):
        return isinstance(other, PolyCarrier) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"{self.ring!r}[{self.shift_amount}] (cap {self.cap})"


def product(carrier: PolyCarrier) -> OperadElement:
    """The commutative product of A as a binary degree-0 element on A (unshifted)."""
    if carrier.shift_amount:
        raise ValueError("the product lives on the unshifted carrier; suspend it instead")
    ring = carrier.ring

    def fn(inp):
        s, m = ring.mul_monomials(*inp)
        return {m: s} if s else {}

    return OperadElement(carrier, 2, 0, fn, "mu")


def unit(carrier: PolyCarrier) -> OperadElement:
    """The unit 1 of A as an arity-0 element of the carrier."""
    one = carrier.ring.one
    return OperadElement(carrier, 0, carrier.deg(one), lambda inp: {one: 1}, "1")
