"""Free graded-commutative polynomial rings and their derivations.

A monomial is an exponent tuple over an ordered list of generators; odd
generators appear with exponent 0 or 1. Polynomials are sparse dicts
``monomial -> scalar``. Multiplication carries the Koszul sign of bringing
the factors of the right monomial past the later generators of the left one.
"""

from __future__ import annotations

import functools
import itertools

from .graded import vaxpy


class GradedPolyRing:
    """Free graded-commutative algebra on ``names`` with the given degrees."""

    def __init__(self, names, degrees):
        names, degrees = tuple(names), tuple(int(d) for d in degrees)
        if len(names) != len(degrees):
            raise ValueError("one degree per generator")
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        self.names = names
        self.degrees = degrees
        self.index = {g: k for k, g in enumerate(names)}
        self.size = len(names)
        self.one = (0,) * self.size
        self.mul_monomials = functools.lru_cache(maxsize=None)(self._mul_monomials)
        self._partials = [dict() for _ in names]

    def __eq__(self, other):
        return isinstance(other, GradedPolyRing) and (self.names, self.degrees) == (other.names, other.degrees)

    def __hash__(self):
        return hash((self.names, self.degrees))

    def __repr__(self):
        return "Q[" + ", ".join(f"{g}:{d}" for g, d in zip(self.names, self.degrees)) + "]"

    # -- monomials --------------------------------------------------------

    def gen(self, name) -> tuple:
        e = [0] * self.size
        e[self.index[name]] = 1
        return tuple(e)

    def mdeg(self, m) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def weight(self, m) -> int:
        """Polynomial degree (number of generator factors)."""
        return sum(m)

    def _mul_monomials(self, a, b):
        """(sign, a*b), sign 0 when an odd generator squares."""
        degs = self.degrees
        odd = 0
        for j in range(self.size):
            if b[j] and degs[j] % 2:
                if a[j]:
                    return 0, None
                # b_j must pass the odd generators of a sitting after j
                for l in range(j + 1, self.size):
                    if a[l] and degs[l] % 2:
                        odd ^= 1
        return (-1 if odd else 1), tuple(x + y for x, y in zip(a, b))

    def monomials(self, max_weight: int, degree=None):
        """All monomials of polynomial degree <= max_weight (optionally of one degree)."""
        out = []
        for w in range(max_weight + 1):
            for combo in itertools.combinations_with_replacement(range(self.size), w):
                e = [0] * self.size
                for k in combo:
                    e[k] += 1
                if any(e[k] > 1 and self.degrees[k] % 2 for k in range(self.size)):
                    continue
                m = tuple(e)
                if degree is None or self.mdeg(m) == degree:
                    out.append(m)
        return out

    def factors(self, m):
        """The monomial as an ordered list of generator indices."""
        return [k for k, e in enumerate(m) for _ in range(e)]

    def split_first(self, m):
        """(k, rest) with m = g_k * rest and no sign (g_k is the first factor)."""
        for k, e in enumerate(m):
            if e:
                rest = list(m)
                rest[k] -= 1
                return k, tuple(rest)
        return None, m

    # -- polynomials ------------------------------------------------------

    def mul(self, p: dict, q: dict) -> dict:
        out: dict = {}
        for a, x in p.items():
            for b, y in q.items():
                s, m = self.mul_monomials(a, b)
                if s:
                    out[m] = out.get(m, 0) + s * x * y
        return {m: c for m, c in out.items() if c}

    def degree_of(self, p: dict):
        """The common degree of a homogeneous polynomial (None for zero)."""
        degs = {self.mdeg(m) for m in p}
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous polynomial: degrees {sorted(degs)}")
        return degs.pop() if degs else None

    def apply_derivation(self, values, degree: int, m, cache=None) -> dict:
        """D(m) for the derivation of ``degree`` with D(g_k) = values[k] (dicts).

        Uses D(g m') = D(g) m' + (-1)^{|D||g|} g D(m').
        """
        if cache is not None and m in cache:
            return cache[m]
        k, rest = self.split_first(m)
        if k is None:
            out = {}
        else:
            out = self.mul(values[k], {rest: 1}) if values[k] else {}
            tail = self.apply_derivation(values, degree, rest, cache)
            if tail:
                s = -1 if (degree * self.degrees[k]) % 2 else 1
                vaxpy(out, s, self.mul({self.gen_index(k): 1}, tail))
        if cache is not None:
            cache[m] = out
        return out

    def gen_index(self, k) -> tuple:
        e = [0] * self.size
        e[k] = 1
        return tuple(e)

    def partial(self, k: int, m) -> dict:
        """d/dg_k applied to a monomial (a derivation of degree -|g_k|)."""
        vals = [{self.one: 1} if j == k else {} for j in range(self.size)]
        return self.apply_derivation(vals, -self.degrees[k], m, self._partials[k])

    def format_monomial(self, m) -> str:
        parts = []
        for g, e in zip(self.names, m):
            if e == 1:
                parts.append(g)
            elif e > 1:
                parts.append(f"{g}^{e}")
        return "*".join(parts) or "1"

    def format(self, p: dict) -> str:
        from .graded import scalar_str

        if not p:
            return "0"
        terms = []
        for m in sorted(p, key=lambda m: (sum(m), tuple(-e for e in m))):
            c = p[m]
            mono = self.format_monomial(m)
            if mono == "1":
                terms.append(scalar_str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{scalar_str(c)}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")
