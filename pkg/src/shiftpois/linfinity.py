"""From polyvector families to L-infinity families, and the checks on both sides.

A family {pi_i} (i >= 2, each of degree 1 in Pol[n+1]) is a morphism out of
L0 exactly when d pi_N + 1/2 sum_{i+j=N+1} [pi_i, pi_j] = 0 for every N. The
bridge sends it to q_1 = differential of A[n+1] and q_i = realize(pi_i); the
L-infinity relations sum_{i+j=N+1} [q_i, q_j] = 0 are then checked directly in
the convolution algebra.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .convolution import ConvolutionElement, bracket, is_multiderivation, symmetry_witness
from .graded import scalar_str
from .operad import OperadElement, differential, suspend
from .polyvectors import Polyvector, PolyvectorSpace, polyvector_differential, realize, schouten_bracket

HALF = Fraction(1, 2)


@dataclass
class PolyvectorFamily:
    space: PolyvectorSpace
    members: dict = field(default_factory=dict)  # weight -> Polyvector

    def __post_init__(self):
        clean = {}
        for i, p in self.members.items():
            if i < 2:
                raise ValueError(f"family weights start at 2, got {i}")
            if p.space != self.space:
                raise ValueError("family member from another space")
            if not p:
                continue
            if p.weights != [i]:
                raise ValueError(f"member {i} has weights {p.weights}")
            if p.degree != 1:
                raise ValueError(f"member {i} has degree {p.degree} in Pol[n+1], expected 1")
            clean[i] = p
        self.members = clean

    @property
    def n(self):
        return self.space.n

    @property
    def top_weight(self) -> int:
        return max(self.members, default=1)

    def __getitem__(self, i):
        return self.members.get(i) or self.space.zero()

    def default_n_max(self) -> int:
        """Largest N with a possibly nonzero relation: 2W - 1 (at least W + 2)."""
        W = self.top_weight
        return max(W + 2, 2 * W - 1)


@dataclass
class Verdict:
    """Outcome of one relation; failing verdicts carry a witness."""

    name: str
    ok: bool
    witness: object = None
    seconds: float = 0.0

    def to_json(self):
        return {"check": self.name, "ok": self.ok, "witness": _jsonable(self.witness),
                "seconds": round(self.seconds, 4)}


@dataclass
class Report:
    verdicts: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def __bool__(self):
        return self.ok

    def first_failure(self):
        return next((v for v in self.verdicts if not v.ok), None)

    def failing_weights(self):
        return [int(v.name.split("=")[1]) for v in self.verdicts if not v.ok and v.name.startswith("N=")]


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, Fraction):
        return scalar_str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


# -- the Maurer-Cartan side ----------------------------------------------------------


def mc_relation(F: PolyvectorFamily, N: int) -> Polyvector:
    """d pi_N + 1/2 sum_{i+j=N+1, i,j>=2} [pi_i, pi_j]."""
    out = polyvector_differential(F[N])
    for i in range(2, N):
        j = N + 1 - i
        if i in F.members and j in F.members:
            out = out + schouten_bracket(F[i], F[j]).scaled(HALF)
    return out


def mc_check(F: PolyvectorFamily, N_max=None) -> Report:
    rep = Report()
    for N in range(2, (N_max or F.default_n_max()) + 1):
        t = time.perf_counter()
        R = mc_relation(F, N)
        rep.verdicts.append(Verdict(f"N={N}", not R, str(R) if R else None, time.perf_counter() - t))
    return rep


# -- the L-infinity side --------------------------------------------------------------


@dataclass
class LInfinityFamily:
    carrier: object
    maps: dict  # arity -> OperadElement of degree 1

    def element(self, i) -> ConvolutionElement:
        f = self.maps.get(i)
        if f is None:
            return ConvolutionElement(self.carrier, 1)
        return ConvolutionElement(self.carrier, 1, {i: f})

    @property
    def top_arity(self):
        return max(self.maps, default=1)

    def default_n_max(self) -> int:
        W = self.top_arity
        return max(W + 2, 2 * W - 1)


def poisson_to_linfinity(F: PolyvectorFamily) -> LInfinityFamily:
    """q_1 = differential of A[n+1], q_i = realize(pi_i). Computed even when MC fails."""
    carrier = F.space.carrier
    maps = {1: differential(carrier)}
    for i, p in F.members.items():
        maps[i] = realize(p)[i]
    return LInfinityFamily(carrier, maps)


def probe_inputs(carrier, arity: int, basis=None):
    """Sorted input tuples; enough for symmetric maps, whose symmetry is checked first."""
    if basis is None and hasattr(carrier, "test_tuples"):
        return carrier.test_tuples(arity, ordered=False)
    basis = carrier.test_basis() if basis is None else basis
    return itertools.combinations_with_replacement(basis, arity)


def _readable(carrier, inputs, value) -> dict:
    ring = getattr(carrier, "ring", None)
    if ring is None:
        return {"inputs": inputs, "value": value}
    return {"inputs": [ring.format_monomial(m) for m in inputs], "value": ring.format(value)}


def linfinity_relation(Q: LInfinityFamily, N: int) -> ConvolutionElement:
    """sum_{i+j=N+1, i,j>=1} [q_i, q_j] over ordered pairs."""
    out = ConvolutionElement(Q.carrier, 2)
    for i in range(1, N + 1):
        j = N + 1 - i
        if i in Q.maps and j in Q.maps:
            out = out + bracket(Q.element(i), Q.element(j))
    return out


def verify_linfinity(Q: LInfinityFamily, N_max=None, basis=None) -> Report:
    """Symmetry of every q_i, then the relation at each N <= N_max on sorted inputs."""
    rep = Report()
    for i, f in sorted(Q.maps.items()):
        t = time.perf_counter()
        wit = symmetry_witness(Q.element(i), None if basis is None else (lambda w: basis))
        rep.verdicts.append(Verdict(f"q{i} symmetric", wit is None, wit, time.perf_counter() - t))
    top = N_max or Q.default_n_max()
    for N in range(1, top + 1):
        t = time.perf_counter()
        R = linfinity_relation(Q, N)
        wit = None
        f = R.components.get(N)
        if f is not None:
            for inp in probe_inputs(Q.carrier, N, basis):
                v = f(*inp)
                if v:
                    wit = _readable(Q.carrier, inp, v)
                    break
        rep.verdicts.append(Verdict(f"N={N}", wit is None, wit, time.perf_counter() - t))
    return rep


def verify_semistrict(Q: LInfinityFamily, mu: OperadElement, basis=None) -> Report:
    """Every q_i is a multi-derivation of the suspended product mu (q_1 included)."""
    rep = Report()
    for i, f in sorted(Q.maps.items()):
        t = time.perf_counter()
        r = is_multiderivation(Q.element(i), mu, basis)
        rep.verdicts.append(Verdict(f"q{i} multi-derivation", r.ok, r.first_failure(), time.perf_counter() - t))
    return rep


def extract_bracket(Q: LInfinityFamily) -> OperadElement:
    """The binary bracket {a, b} on A (degree -n): q_2 taken back through the shift."""
    m = Q.carrier.shift_amount
    f = Q.maps.get(2)
    base = Q.carrier.shifted(-m)
    if f is None:
        return OperadElement(base, 2, -(m - 1), lambda inp: {}, "{,}")
    b = suspend(f, -m)
    b.label = "{,}"
    return b


def bracket_table(br: OperadElement, keys) -> dict:
    """{(a, b): value} over pairs of the given basis keys."""
    return {(a, b): br(a, b) for a in keys for b in keys}
