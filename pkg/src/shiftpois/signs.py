"""Registry of the sign conventions the engine has to fix by hand.

Every sign below is a choice that could plausibly have gone the other way.
Each entry has a stable id, the rule in force, and the *mutated* rule used by
``mutated(...)`` to check that the test-suite actually pins the convention.

Code that depends on a convention asks ``active(id)``; it is ``True`` unless
that entry is currently mutated.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass


@dataclass(frozen=True)
class LedgerSign:
    id: str
    rule: str
    mutation: str


LEDGER: dict[str, LedgerSign] = {
    s.id: s
    for s in [
        LedgerSign(
            "koszul",
            "f^s(v_1..v_p) carries the Koszul sign of the inputs under s",
            "Koszul factor dropped from the symmetric group action",
        ),
        LedgerSign(
            "composition",
            "(f o_i g) carries (-1)^{|g|(|v_1|+...+|v_{i-1}|)}",
            "sign dropped from partial composition",
        ),
        LedgerSign(
            "bracket",
            "[f,g] = f*g - (-1)^{|f||g|} g*f",
            "degree factor dropped: [f,g] = f*g - g*f",
        ),
        LedgerSign(
            "suspension",
            "suspend by 1 multiplies f(sv_1..sv_p) by (-1)^{sum_j (p-j)|sv_j|}",
            "décalage factor dropped",
        ),
        LedgerSign(
            "shift-differential",
            "the differential of V[k] is (-1)^k d_V",
            "the differential of V[k] is -(-1)^k d_V",
        ),
        LedgerSign(
            "multiderivation",
            "Leibniz terms against mu carry (-1)^{|mu||f|}",
            "factor (-1)^{|mu||f|} dropped",
        ),
        LedgerSign(
            "realize-order",
            "d_{g_1}...d_{g_w} realizes with (-1)^{(n+1) sum_k (k-1)|g_k| + C(w,2)C(n+1,2)}",
            "ordering factor dropped",
        ),
        LedgerSign(
            "realize-symmetry",
            "on A[n+1] realization is the plain symmetrization of the suspended map",
            "each permutation s is weighted by sign(s)",
        ),
        LedgerSign(
            "shuffle-decalage",
            "shuffle product carries (-1)^{(n+1)(|f|+n+1) + C(n+2,2)}",
            "décalage factor dropped from the shuffle product",
        ),
        LedgerSign(
            "polyvector-differential",
            "d(P) = (-1)^{n+1} [D_A, P] with D_A = sum d(g) d/dg",
            "d(P) = -(-1)^{n+1} [D_A, P]",
        ),
    ]
}

_mutated: set[str] = set()
_listeners: list = []


def active(sign_id: str) -> bool:
    return sign_id not in _mutated


def on_change(callback) -> None:
    """Register a cache-clearing hook run whenever the mutation set changes."""
    _listeners.append(callback)


def _notify():
    for cb in _listeners:
        cb()


@contextlib.contextmanager
def mutated(*sign_ids: str):
    """Temporarily switch the given ledger entries to their mutated rule."""
    for s in sign_ids:
        if s not in LEDGER:
            raise KeyError(f"unknown ledger sign {s!r}; known: {sorted(LEDGER)}")
    saved = set(_mutated)
    _mutated.update(sign_ids)
    _notify()
    try:
        yield
    finally:
        _mutated.clear()
        _mutated.update(saved)
        _notify()
