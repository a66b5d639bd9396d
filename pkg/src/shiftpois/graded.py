"""Exact graded linear algebra: scalars, sparse vectors, cochain complexes.

Scalars are Python ``int`` or :class:`fractions.Fraction`; both are exact and
mix freely. Sparse vectors are plain dicts ``basis_key -> scalar`` with no
zero entries stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from . import signs
from .perms import Permutation


class CapOverflowError(ArithmeticError):
    """A computation needs monomials beyond the configured polynomial-degree cap."""

    def __init__(self, message, needed=None):
        super().__init__(message)
        self.needed = needed


def scalar(x) -> Rational:
    """Parse ``x`` (int, Fraction or ``"p/q"`` string) into a canonical exact scalar."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return x
    if isinstance(x, (Fraction, str)):
        f = Fraction(x)
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"not an exact scalar: {x!r}")


def scalar_str(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


# -- sparse vectors ---------------------------------------------------------


def vadd(acc: dict, key, c) -> None:
    """In-place ``acc[key] += c`` keeping the no-zeros invariant."""
    if not c:
        return
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        del acc[key]


def vaxpy(acc: dict, c, vec: dict) -> None:
    if not c:
        return
    for k, v in vec.items():
        vadd(acc, k, c * v)


def vscale(c, vec: dict) -> dict:
    if not c:
        return {}
    return {k: c * v for k, v in vec.items()}


def vsub(a: dict, b: dict) -> dict:
    out = dict(a)
    vaxpy(out, -1, b)
    return out


# -- Koszul signs -----------------------------------------------------------


def koszul_sign(degrees, sigma: Permutation) -> int:
    """Sign of permuting homogeneous elements of the given degrees by ``sigma``.

    Element ``a`` moves to position ``sigma(a)``; each pair ``a < b`` that ends
    up reversed contributes ``(-1)^{|a||b|}``.
    """
    if len(degrees) != sigma.size:
        raise ValueError(f"{len(degrees)} degrees for a permutation of size {sigma.size}")
    if not signs.active("koszul"):
        return 1
    odd = 0
    im = sigma.images
    n = len(im)
    for a in range(n):
        if degrees[a] % 2 == 0:
            continue
        for b in range(a + 1, n):
            if im[b] < im[a] and degrees[b] % 2:
                odd ^= 1
    return -1 if odd else 1


# -- finite cochain complexes ------------------------------------------------


def shift_sign(k: int) -> int:
    """Sign of the differential of V[k] relative to that of V."""
    s = -1 if k % 2 else 1
    return s if signs.active("shift-differential") else -s


@dataclass(frozen=True)
class DgModule:
    """Finite-basis cochain complex over Q.

    ``differential`` maps a basis symbol to the sparse vector ``d(symbol)``.
    """

    basis: tuple
    degree: dict = field(hash=False)
    differential: dict = field(default_factory=dict, hash=False)
    shift_amount: int = 0

    def __post_init__(self):
        if set(self.degree) != set(self.basis):
            raise ValueError("degree map must cover exactly the basis")
        for b, img in self.differential.items():
            if b not in self.degree or any(k not in self.degree for k in img):
                raise ValueError(f"differential references unknown basis element near {b!r}")

    def deg(self, b) -> int:
        return self.degree[b] - self.shift_amount

    def d(self, b) -> dict:
        img = self.differential.get(b, {})
        s = shift_sign(self.shift_amount)
        return {k: s * v for k, v in img.items() if v}

    def test_basis(self):
        return self.basis

    def key(self):
        return ("dg", self.basis, tuple(sorted(self.degree.items(), key=repr)),
                tuple(sorted(((b, tuple(sorted(v.items(), key=repr)))
                              for b, v in self.differential.items()), key=repr)),
                self.shift_amount)

    def __eq__(self, other):
        return isinstance(other, DgModule) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def shifted(self, k: int) -> DgModule:
        return shift(self, k)

    def __repr__(self):
        degs = ", ".join(f"{b}:{self.deg(b)}" for b in self.basis)
        return f"DgModule[{degs}]"


def shift(M: DgModule, k: int) -> DgModule:
    """M[k]: same basis, degrees lowered by k, differential scaled by (-1)^k."""
    return DgModule(M.basis, M.degree, M.differential, M.shift_amount + k)


@dataclass
class ComplexReport:
    ok: bool
    witness: tuple | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_complex(M) -> ComplexReport:
    """Check that d raises degree by one and squares to zero."""
    for b in M.test_basis():
        for c in M.d(b):
            if M.deg(c) != M.deg(b) + 1:
                return ComplexReport(False, (b, c), "differential does not raise degree by 1")
    for b in M.test_basis():
        dd = {}
        for c, v in M.d(b).items():
            vaxpy(dd, v, M.d(c))
        if dd:
            c = next(iter(dd))
            return ComplexReport(False, (b, c), "d squared is nonzero")
    return ComplexReport(True)


# -- exact elimination -------------------------------------------------------


def _reduce(rows):
    """Row-reduce sparse rows (dicts) into an echelon dict pivot -> row."""
    pivots: dict = {}
    for row in rows:
        r = {k: Fraction(v) for k, v in row.items() if v}
        while r:
            p = min(r, key=repr)
            if p not in pivots:
                c = r[p]
                pivots[p] = {k: v / c for k, v in r.items()}
                break
            c = r[p]
            for k, v in pivots[p].items():
                vadd(r, k, -c * v)
    return pivots


def rank(rows) -> int:
    """Exact rank of a list of sparse rows."""
    return len(_reduce(rows))


def solve(columns: list[dict], target: dict):
    """Exact solution x of sum_j x_j columns[j] = target, or None.

    Columns are sparse vectors over any hashable index set.
    """
    tagged = []
    for j, col in enumerate(columns):
        row = {("v", k): v for k, v in col.items()}
        row[("x", j)] = 1
        tagged.append(row)
    # eliminate over the "v" coordinates only: order pivots so "v" keys win
    pivots: dict = {}
    order = lambda k: (k[0] != "v", repr(k))
    for row in tagged:
        r = {k: Fraction(v) for k, v in row.items()}
        while True:
            vkeys = [k for k in r if k[0] == "v"]
            if not vkeys:
                break
            p = min(vkeys, key=order)
            if p not in pivots:
                c = r[p]
                pivots[p] = {k: v / c for k, v in r.items()}
                break
            c = r[p]
            for k, v in pivots[p].items():
                vadd(r, k, -c * v)
    x: dict = {}
    residual = {("v", k): Fraction(v) for k, v in target.items() if v}
    # back-substitute: express target through pivot rows
    while residual:
        p = min(residual, key=order)
        if p not in pivots:
            return None
        c = residual[p]
        for k, v in pivots[p].items():
            if k[0] == "v":
                vadd(residual, k, -c * v)
            else:
                vadd(x, k[1], c * v)
    return [scalar(x.get(j, 0)) for j in range(len(columns))]


def nullspace(columns: list[dict]) -> list[list]:
    """A basis of {x : sum_j x_j columns[j] = 0}, each vector a list of scalars."""
    pivots: dict = {}  # pivot key -> (row over "v" keys, combination over column indices)
    basis = []
    for j, col in enumerate(columns):
        r = {k: Fraction(v) for k, v in col.items() if v}
        comb = {j: Fraction(1)}
        while r:
            p = min(r, key=repr)
            if p not in pivots:
                c = r[p]
                pivots[p] = ({k: v / c for k, v in r.items()}, {k: v / c for k, v in comb.items()})
                break
            c = r[p]
            prow, pcomb = pivots[p]
            for k, v in prow.items():
                vadd(r, k, -c * v)
            for k, v in pcomb.items():
                vadd(comb, k, -c * v)
        if not r:
            basis.append([scalar(comb.get(k, 0)) for k in range(len(columns))])
    return basis
