"""Walk through a Poisson bracket on Q[x, y, z] end to end.

    python3 demos/classical_poisson.py
"""

from shiftpois.cdga import CdgaPresentation
from shiftpois.linfinity import (
    PolyvectorFamily,
    bracket_table,
    extract_bracket,
    mc_check,
    poisson_to_linfinity,
    verify_linfinity,
    verify_semistrict,
)
from shiftpois.polyvectors import PolyvectorSpace, schouten_bracket


def show(title, rep):
    print(f"{title}: " + ", ".join(f"{v.name} {'ok' if v.ok else 'FAIL'}" for v in rep.verdicts))


A = CdgaPresentation(["x", "y", "z"], [0, 0, 0])
S = PolyvectorSpace(A, 0, cap=4, probe=1)
x, y, z = (S.generator(g) for g in "xyz")
dx, dy, dz = (S.vector_field(g) for g in "xyz")

# the dual of so(3): {x, y} = z and cyclic
pi = z * dx * dy + x * dy * dz + y * dz * dx
print("pi =", pi)
print("[pi, pi] =", schouten_bracket(pi, pi) or "0")

F = PolyvectorFamily(S, {2: pi})
show("Maurer-Cartan", mc_check(F))
Q = poisson_to_linfinity(F)
show("L-infinity", verify_linfinity(Q))
show("derivations", verify_semistrict(Q, S.mu()))

ring = A.ring
gens = [ring.gen(g) for g in ring.names]
for (a, b), v in bracket_table(extract_bracket(Q), gens).items():
    print(f"  {{{ring.format_monomial(a)},{ring.format_monomial(b)}}} = {ring.format(v)}")

# a bivector that is not Poisson fails at the same weight on both sides
bad = PolyvectorFamily(S, {2: dx * dy + dz * dx + y * dy * dz})
show("\nnot Poisson, Maurer-Cartan", mc_check(bad))
show("not Poisson, L-infinity", verify_linfinity(poisson_to_linfinity(bad)))
