"""Simplices of Poisson structures on Q[x, y] and what the vertex maps see.

    python3 demos/homotopies.py
"""

from shiftpois.linfinity import PolyvectorFamily, mc_check
from shiftpois.polyvectors import PolyvectorSpace
from shiftpois.simplicial import degenerate, interpolate, is_simplex, vertex_eval
from shiftpois.suites import plane

S = PolyvectorSpace(plane(), 0, cap=4, probe=1)
x, y = S.generator("x"), S.generator("y")
dxdy = S.vector_field("x") * S.vector_field("y")
P0 = PolyvectorFamily(S, {2: dxdy})
P1 = PolyvectorFamily(S, {2: x * dxdy})

for name, simplex in (("constant path", interpolate(P0, P0)),
                      ("degenerate triangle", degenerate(P1, 2)),
                      ("straight line P0 -> P1", interpolate(P0, P1))):
    rep = is_simplex(simplex)
    print(f"{name}: {'passes' if rep.ok else 'fails'}")
    if not rep.ok:
        bad = rep.first_failure()
        print(f"  first failure {bad.name}: {bad.witness}")
    for j in range(simplex.m + 1):
        V = vertex_eval(simplex, j)
        print(f"  vertex {j}: {V[2] or 0}  (MC {'ok' if mc_check(V).ok else 'FAIL'})")
