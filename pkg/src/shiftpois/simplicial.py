"""Polynomial forms on simplices and simplices in the space of shifted Poisson structures.

Omega_m is presented on t_1..t_m (degree 0) and dt_1..dt_m (degree 1), with
t_0 = 1 - sum t_i eliminated. An m-simplex is a polyvector family with
coefficients in A (x) Omega_m, i.e. in the cdga whose generators are those of A
followed by those of Omega_m. Polyvectors only differentiate in the
A-directions; the Maurer-Cartan check over A (x) Omega_m then includes the
Omega-differential of the coefficients automatically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cdga import CdgaPresentation
from .linfinity import PolyvectorFamily, Report, mc_check
from .polyvectors import Polyvector, PolyvectorSpace


def omega(m: int) -> CdgaPresentation:
    """Omega_m = Q[t_1..t_m, dt_1..dt_m], d t_i = dt_i."""
    if m < 0:
        raise ValueError("simplex dimension must be non-negative")
    names = [f"t{i}" for i in range(1, m + 1)] + [f"dt{i}" for i in range(1, m + 1)]
    degrees = [0] * m + [1] * m
    diff = {}
    for i in range(m):
        e = [0] * (2 * m)
        e[m + i] = 1
        diff[f"t{i + 1}"] = {tuple(e): 1}
    return CdgaPresentation(names, degrees, diff, max_degree=1 if m else 0)


def tensor(A: CdgaPresentation, B: CdgaPresentation) -> CdgaPresentation:
    """A (x) B as a semi-free cdga, generators of A first."""
    ra, rb = A.ring.size, B.ring.size
    diff = {}
    for k, g in enumerate(A.names):
        if A.dvalues[k]:
            diff[g] = {a + (0,) * rb: c for a, c in A.dvalues[k].items()}
    for k, g in enumerate(B.names):
        if B.dvalues[k]:
            diff[g] = {(0,) * ra + b: c for b, c in B.dvalues[k].items()}
    return CdgaPresentation(A.names + B.names, A.degrees + B.degrees, diff,
                            max(A.max_degree, B.max_degree))


@dataclass
class SimplexOfPoisson:
    """An m-simplex: weight -> polyvector over A (x) Omega_m (A-directions only)."""

    base: PolyvectorSpace  # Pol(A, n)
    m: int
    members: dict

    def __post_init__(self):
        space = self.space
        for i, p in self.members.items():
            if p.space != space:
                raise ValueError("simplex member from another space")
            for mono in p.terms:
                _, e = space.split(mono)
                if any(e[self.base.rank :]):
                    raise ValueError("simplex members may only differentiate along A")

    @property
    def space(self) -> PolyvectorSpace:
        return simplex_space(self.base, self.m)

    def family(self) -> PolyvectorFamily:
        return PolyvectorFamily(self.space, dict(self.members))


_spaces: dict = {}


def simplex_space(base: PolyvectorSpace, m: int) -> PolyvectorSpace:
    """Pol(A (x) Omega_m, n) with the caps of ``base`` (shared per (base, m))."""
    key = (base.key(), m)
    if key not in _spaces:
        _spaces[key] = PolyvectorSpace(tensor(base.cdga, omega(m)), base.n, base.cap, base.probe)
    return _spaces[key]


def lift(P: Polyvector, m: int) -> Polyvector:
    """A polyvector on A viewed over A (x) Omega_m (constant in t)."""
    base = P.space
    space = simplex_space(base, m)
    terms = {}
    for mono, c in P.terms.items():
        a, e = base.split(mono)
        terms[space.join(a + (0,) * (2 * m), e + (0,) * (2 * m))] = c
    return Polyvector(space, terms)


def t_polynomial(base: PolyvectorSpace, m: int, poly) -> Polyvector:
    """A weight-0 element from ``{(t-exponents, dt-exponents): c}``."""
    space = simplex_space(base, m)
    terms = {}
    for (te, de), c in poly.items():
        a = (0,) * base.rank + tuple(te) + tuple(de)
        terms[space.join(a, (0,) * (base.rank + 2 * m))] = c
    return Polyvector(space, terms)


def degenerate(F: PolyvectorFamily, m: int) -> SimplexOfPoisson:
    """The constant m-simplex at a 0-simplex."""
    return SimplexOfPoisson(F.space, m, {i: lift(p, m) for i, p in F.members.items()})


def interpolate(P0: PolyvectorFamily, P1: PolyvectorFamily) -> SimplexOfPoisson:
    """(1 - t) P0 + t P1 as a candidate 1-simplex."""
    base = P0.space
    one_minus_t = t_polynomial(base, 1, {((0,), (0,)): 1, ((1,), (0,)): -1})
    t = t_polynomial(base, 1, {((1,), (0,)): 1})
    members = {}
    for i in set(P0.members) | set(P1.members):
        members[i] = one_minus_t * lift(P0[i], 1) + t * lift(P1[i], 1)
    return SimplexOfPoisson(base, 1, {i: p for i, p in members.items() if p})


def is_simplex(S: SimplexOfPoisson, N_max=None) -> Report:
    """The Maurer-Cartan system over A (x) Omega_m."""
    return mc_check(S.family(), N_max)


def vertex_eval(S: SimplexOfPoisson, j: int) -> PolyvectorFamily:
    """Restrict to vertex j: t_i -> delta_ij (t_0 = 1 - sum t_i), dt_i -> 0."""
    if not 0 <= j <= S.m:
        raise ValueError(f"vertex {j} out of range for a {S.m}-simplex")
    base, space, m = S.base, S.space, S.m
    r = base.rank
    members = {}
    for i, p in S.members.items():
        terms: dict = {}
        for mono, c in p.terms.items():
            a, e = space.split(mono)
            ta, dta = a[r : r + m], a[r + m :]
            if any(dta):
                continue
            if any(x for k, x in enumerate(ta) if k != j - 1):
                continue
            key = base.join(a[:r], e[:r])
            terms[key] = terms.get(key, 0) + c
        q = Polyvector(base, terms)
        if q:
            members[i] = q
    return PolyvectorFamily(base, members)
