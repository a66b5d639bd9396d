"""Higher brackets on Q[x, xi, eta] with d xi = x^2, d eta = x, shifted by n = -1.

pi_2, pi_3, pi_4 are solved weight by weight by exact linear algebra, so the
relations hold through N = 4 and are left to chance above. Both sides of the
bridge report the same weights. On the smaller Koszul-Tate algebra Q[x, xi]
every degree-one family passes: each term carries exactly one d_xi, which
is odd, so all brackets vanish.

    python3 demos/higher_brackets.py
"""

import random

from shiftpois.linfinity import PolyvectorFamily, mc_check, poisson_to_linfinity, verify_linfinity
from shiftpois.polyvectors import PolyvectorSpace
from shiftpois.suites import degree_one_basis, three_generators, truncated_tower


def weights(F):
    return (mc_check(F).failing_weights() or "none",
            verify_linfinity(poisson_to_linfinity(F)).failing_weights() or "none")


S = PolyvectorSpace(three_generators(), -1, cap=6, probe=1)
members = truncated_tower(S, 4, 1, random.Random(0))
for w, p in sorted(members.items()):
    print(f"pi_{w} = {p}")
print("failing weights (MC, L-infinity):", weights(PolyvectorFamily(S, members)))

for w in (2, 3):
    b = degree_one_basis(S, w, 1)[0]
    F = PolyvectorFamily(S, {**members, w: members[w] + b})
    print(f"pi_{w} + {b}:", weights(F))
