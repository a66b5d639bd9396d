"""The free graded Lie algebra L0 on p_2, p_3, ... and its differential.

Lie elements are stored inside the tensor algebra (words over the letters),
with the graded commutator as bracket. Each p_i has degree 1 and weight i;
the bracket has weight -1, so a word of length k in letters summing to s has
weight s - k + 1. Brackets preserve both s and k, and the Hall basis is
built per (s, k).

Normal forms are coordinates in a Hall basis of the free Lie superalgebra:
standard bracketings of Lyndon words, plus the squares [l, l] of the odd
Lyndon elements. Coordinates come from an exact linear solve, and the basis
is checked against the span of all bracket monomials.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction

from .graded import rank, solve, vaxpy

HALF = Fraction(1, 2)


# -- tensor algebra ------------------------------------------------------------


def word_degree(w) -> int:
    return len(w)  # every letter has degree 1


def tmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for u, x in a.items():
        for v, y in b.items():
            vaxpy(out, x * y, {u + v: 1})
    return out


def degree_of(a: dict):
    degs = {word_degree(w) for w in a}
    if len(degs) > 1:
        raise ValueError("inhomogeneous tensor")
    return degs.pop() if degs else 0


def lie(a: dict, b: dict) -> dict:
    """Graded commutator ab - (-1)^{|a||b|} ba."""
    if not a or not b:
        return {}
    s = -1 if (degree_of(a) * degree_of(b)) % 2 else 1
    out = tmul(a, b)
    vaxpy(out, -s, tmul(b, a))
    return out


def letter(i: int) -> dict:
    return {(i,): 1}


def weight(w) -> int:
    return sum(w) - len(w) + 1


# -- Hall basis -------------------------------------------------------------------


def compositions(total: int, lo: int = 2):
    """Words (tuples of letters >= lo) whose letters sum to ``total``."""
    if total == 0:
        yield ()
        return
    for first in range(lo, total + 1):
        for rest in compositions(total - first, lo):
            yield (first,) + rest


def is_lyndon(w) -> bool:
    return all(w < w[k:] + w[:k] for k in range(1, len(w)))


def standard_factorization(w):
    """w = uv with v the longest proper Lyndon suffix."""
    for k in range(1, len(w)):
        if is_lyndon(w[k:]):
            return w[:k], w[k:]
    raise ValueError("single letter")


@functools.lru_cache(maxsize=None)
def lyndon_bracket(w) -> tuple:
    """The Lie element of a Lyndon word, as a frozen tensor (sorted items)."""
    if len(w) == 1:
        return tuple(letter(w[0]).items())
    u, v = standard_factorization(w)
    return tuple(sorted(lie(dict(lyndon_bracket(u)), dict(lyndon_bracket(v))).items()))


@dataclass(frozen=True)
class HallElement:
    word: tuple
    squared: bool = False  # True for [l, l] with l odd Lyndon

    def tensor(self) -> dict:
        t = dict(lyndon_bracket(self.word))
        return lie(t, t) if self.squared else t

    def __str__(self):
        def br(w):
            if len(w) == 1:
                return f"p{w[0]}"
            u, v = standard_factorization(w)
            return f"[{br(u)},{br(v)}]"

        s = br(self.word)
        return f"[{s},{s}]" if self.squared else s


@functools.lru_cache(maxsize=None)
def hall_basis(letter_sum: int, length: int) -> tuple:
    """Hall basis elements whose words have the given letter sum and length."""
    out = []
    for w in compositions(letter_sum):
        if len(w) == length and is_lyndon(w):
            out.append(HallElement(w))
    if letter_sum % 2 == 0 and length % 2 == 0:
        for w in compositions(letter_sum // 2):
            if len(w) == length // 2 and is_lyndon(w) and len(w) % 2:
                out.append(HallElement(w, True))
    return tuple(out)


def coordinates(x: dict) -> dict:
    """Coordinates of a Lie element in the Hall basis; raises if x is not a Lie element."""
    parts: dict = {}
    for w, c in x.items():
        parts.setdefault((sum(w), len(w)), {})[w] = c
    out = {}
    for (s, k), part in parts.items():
        basis = hall_basis(s, k)
        sol = solve([b.tensor() for b in basis], part)
        if sol is None:
            raise ValueError("element is not in the span of the Hall basis")
        out.update({basis[j]: c for j, c in enumerate(sol) if c})
    return out


def _bracket_monomials(letter_sum: int, length: int):
    """All left-normed brackets of letters with the given sum and length."""
    for w in compositions(letter_sum):
        if len(w) != length:
            continue
        t = letter(w[0])
        for a in w[1:]:
            t = lie(t, letter(a))
        if t:
            yield t


def hall_basis_is_basis(letter_sum: int, length: int) -> bool:
    """Hall elements are independent and span every left-normed bracket of this shape.

    Left-normed brackets of letters span the free Lie algebra, so this
    certifies the basis.
    """
    basis = [b.tensor() for b in hall_basis(letter_sum, length)]
    r = rank(basis)
    if r != len(basis):
        return False
    return rank(basis + list(_bracket_monomials(letter_sum, length))) == r


# -- L0 and its differential ------------------------------------------------------


@functools.lru_cache(maxsize=None)
def dp(N: int) -> tuple:
    """d p_N = -1/2 sum_{i+j=N+1, i,j>=2} [p_i, p_j], frozen."""
    out: dict = {}
    for i in range(2, N):
        j = N + 1 - i
        if j >= 2:
            vaxpy(out, -HALF, lie(letter(i), letter(j)))
    return tuple(sorted(out.items()))


def d(x: dict) -> dict:
    """The derivation of degree 1 extending p_N -> d p_N to the tensor algebra."""
    out: dict = {}
    for w, c in x.items():
        for k, a in enumerate(w):
            img = dict(dp(a))
            if not img:
                continue
            s = -1 if k % 2 else 1  # passing k letters of degree 1
            left, right = {w[:k]: 1}, {w[k + 1 :]: 1}
            vaxpy(out, s * c, tmul(tmul(left, img), right))
    return out


@dataclass
class L0Report:
    cap: int
    ok: bool = True
    checks: list = field(default_factory=list)  # (name, ok, detail)

    def add(self, name, ok, detail=""):
        self.checks.append((name, ok, detail))
        self.ok = self.ok and ok

    def __bool__(self):
        return self.ok


def l0_d_squared_zero(W: int) -> L0Report:
    """d p_2 = 0, d p_3 = -1/2 [p_2, p_2] and d^2 p_N = 0 in Hall coordinates, N <= W."""
    if W < 2:
        raise ValueError("weight cap must be at least 2")
    rep = L0Report(W)
    rep.add("d p2 = 0", not dp(2))
    if W >= 3:
        target = {k: -HALF * v for k, v in lie(letter(2), letter(2)).items()}
        rep.add("d p3 = -1/2 [p2,p2]", dict(dp(3)) == target)
    for N in range(2, W + 1):
        # d p_N lives on words (N+1, 2), d^2 p_N on words (N+2, 3)
        ok = hall_basis_is_basis(N + 1, 2) and hall_basis_is_basis(N + 2, 3)
        rep.add(f"Hall basis for weight {N}", ok)
        coords = coordinates(d(dict(dp(N))))
        detail = ", ".join(f"{c}*{b}" for b, c in coords.items())
        rep.add(f"d^2 p{N} = 0", not coords, detail)
    return rep
