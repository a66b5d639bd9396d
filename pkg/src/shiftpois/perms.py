"""Permutations and the shuffle families summed over by the operadic formulas.

Conventions
-----------
A :class:`Permutation` stores 0-based images: ``sigma(k) = images[k]``.
Products compose right to left, ``(sigma * tau)(k) = sigma(tau(k))``.
Cycles are written 1-based as in the literature, ``(1 2 3)`` sending
1 -> 2 -> 3 -> 1; use :meth:`Permutation.from_cycles`.

The action on multilinear maps (see :mod:`shiftpois.operad`) feeds slot ``k``
the input labelled ``sigma^{-1}(k)``, which makes it a right action:
``(f^sigma)^tau = f^(sigma * tau)``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection of range({len(self.images)}): {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles) -> Permutation:
        """Build from 1-based cycles, e.g. ``from_cycles(3, (1, 2, 3))``."""
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b - 1
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.size != other.size:
            raise ValueError("permutation sizes differ")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for k, v in enumerate(self.images):
            inv[v] = k
        return Permutation(tuple(inv))

    def inversions(self):
        """Pairs (a, b), a < b, that the permutation places in reversed order."""
        im = self.images
        return [(a, b) for a in range(len(im)) for b in range(a + 1, len(im)) if im[b] < im[a]]

    def sign(self) -> int:
        return -1 if len(self.inversions()) % 2 else 1

    def is_identity(self) -> bool:
        return all(k == v for k, v in enumerate(self.images))

    def cycles(self):
        seen, out = set(), []
        for start in range(self.size):
            if start in seen or self.images[start] == start:
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(k + 1)
                k = self.images[k]
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "id"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def all_permutations(n: int):
    return [Permutation(p) for p in itertools.permutations(range(n))]


@functools.lru_cache(maxsize=None)
def enumerate_prelie_shuffles(p: int, q: int, i: int) -> tuple[Permutation, ...]:
    """The set S^i_{p,q} of the pre-Lie product, ``1 <= i <= p``.

    Members are the sigma in S_{p+q-1} whose inverse increases along
    ``1..i, i+q..p+q-1`` and along the block ``i..i+q-1``. They are generated
    directly: choose the labels of the block, the remaining labels fill the
    other slots in order, and the smallest block label must sit between its
    two neighbours.

    For ``q = 0`` (inserting a constant) the empty block has no smallest label,
    so the neighbour condition only admits ``i = 1``: S^1_{p,0} = {id} and
    S^i_{p,0} is empty for ``i > 1``.
    """
    if p < 1 or q < 0 or not 1 <= i <= p:
        raise ValueError(f"need p >= 1, q >= 0 and 1 <= i <= p; got p={p}, q={q}, i={i}")
    n = p + q - 1
    if q == 0:
        return (Permutation.identity(n),) if i == 1 else ()
    out = []
    for block in itertools.combinations(range(n), q):
        rest = [k for k in range(n) if k not in block]
        lo = block[0]
        if i > 1 and not rest[i - 2] < lo:
            continue
        if i <= p - 1 and not lo < rest[i - 1]:
            continue
        # slot -> label, i.e. sigma^{-1}
        inv = rest[: i - 1] + list(block) + rest[i - 1 :]
        out.append(Permutation(tuple(inv)).inverse())
    return tuple(out)


@functools.lru_cache(maxsize=None)
def enumerate_shuffles(p: int, q: int) -> tuple[Permutation, ...]:
    """Sh_{p,q}: sigma in S_{p+q} whose inverse increases on 1..p and on p+1..p+q."""
    if p < 0 or q < 0:
        raise ValueError("arities must be non-negative")
    n = p + q
    out = []
    for first in itertools.combinations(range(n), p):
        second = [k for k in range(n) if k not in first]
        out.append(Permutation(tuple(list(first) + second)).inverse())
    return tuple(out)


def transport_right(sigma: Permutation, i: int, p: int) -> Permutation:
    """sigma' with ``f o_i g^sigma = (f o_i g)^sigma'`` (``i`` is 1-based)."""
    if not 1 <= i <= p:
        raise ValueError("slot out of range")
    q = sigma.size
    n = p + q - 1
    images = list(range(n))
    for k in range(q):
        images[i - 1 + k] = i - 1 + sigma(k)
    return Permutation(tuple(images))


def transport_left(tau: Permutation, i: int, q: int) -> tuple[int, Permutation]:
    """(tau(i), tau') with ``f^tau o_i g = (f o_{tau(i)} g)^tau'`` (1-based slots)."""
    p = tau.size
    if not 1 <= i <= p:
        raise ValueError("slot out of range")
    t = tau(i - 1)  # 0-based target slot
    n = p + q - 1

    def lift(v):
        return v if v < t else v + q - 1

    images = []
    for j in range(n):
        if j < i - 1:
            images.append(lift(tau(j)))
        elif j < i - 1 + q:
            images.append(t + (j - (i - 1)))
        else:
            images.append(lift(tau(j - q + 1)))
    return t + 1, Permutation(tuple(images))
