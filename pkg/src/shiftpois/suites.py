"""Seeded property suites, shared by ``selftest`` and the acceptance tests.

Each suite takes ``(seed, size)`` and returns a :class:`SuiteResult`. ``size``
is the number of random cases (the Jacobi suite runs twice as many);
deterministic suites run in full whenever ``size > 0`` and ``size == 0`` is a
vacuous pass everywhere.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .cdga import CdgaPresentation, PolyCarrier, product
from .convolution import (
    ConvolutionElement,
    bracket,
    difference,
    is_multiderivation,
    shuffle_product,
    symmetrize,
    symmetry_witness,
)
from .graded import CapOverflowError, DgModule, nullspace, rank, solve, vaxpy
from .lie0 import l0_d_squared_zero
from .linfinity import PolyvectorFamily, _jsonable, mc_check, poisson_to_linfinity, verify_linfinity
from .operad import OperadElement, from_table, lincomb, suspend, symmetric_from_table
from .polyvectors import (
    Polyvector,
    PolyvectorSpace,
    partials_product,
    polyvector_differential,
    realize,
    schouten_bracket,
)
from .simplicial import degenerate, interpolate, is_simplex, simplex_space, vertex_eval


@dataclass
class SuiteResult:
    key: str
    title: str
    ok: bool = True
    cases: int = 0
    seconds: float = 0.0
    witness: object = None
    notes: dict = field(default_factory=dict)

    def fail(self, witness):
        if self.ok:
            self.ok = False
            self.witness = witness

    def to_json(self):
        return {"suite": self.key, "title": self.title, "ok": self.ok, "cases": self.cases,
                "seconds": round(self.seconds, 3), "witness": _jsonable(self.witness),
                "notes": _jsonable(self.notes)}


# -- presentations used throughout ---------------------------------------------------


def plane() -> CdgaPresentation:
    """Q[x, y], both of degree 0, d = 0."""
    return CdgaPresentation(["x", "y"], [0, 0])


def koszul_tate() -> CdgaPresentation:
    """Q[x, xi] with |xi| = -1 and d xi = x^2."""
    return CdgaPresentation(["x", "xi"], [0, -1], {"xi": {(2, 0): 1}})


def three_generators() -> CdgaPresentation:
    """Q[x, xi, eta] with |xi| = |eta| = -1, d xi = x^2, d eta = x."""
    return CdgaPresentation(["x", "xi", "eta"], [0, -1, -1], {"xi": {(2, 0, 0): 1}, "eta": {(1, 0, 0): 1}})


def mixed_plane() -> CdgaPresentation:
    """Q[x, y, xi] with |xi| = -1 and d xi = x y."""
    return CdgaPresentation(["x", "y", "xi"], [0, 0, -1], {"xi": {(1, 1, 0): 1}})


# -- random elements --------------------------------------------------------------------


def random_dg_module(rng, max_dim=3) -> DgModule:
    dim = rng.randint(1, max_dim)
    names = tuple("abc"[:dim])
    return DgModule(names, {b: rng.randint(-1, 1) for b in names})


def random_table_element(V, p, deg, rng) -> OperadElement:
    table = {}
    for inp in itertools.product(V.basis, repeat=p):
        s = sum(V.deg(b) for b in inp) + deg
        table[inp] = {b: rng.randint(-2, 2) for b in V.basis if V.deg(b) == s}
    return from_table(V, p, deg, table)


def random_convolution(V, deg, rng, weights) -> ConvolutionElement:
    ws = rng.sample(weights, rng.randint(1, min(2, len(weights))))
    return ConvolutionElement(V, deg, {w: random_table_element(V, w, deg, rng) for w in ws})


def random_polyvector(space: PolyvectorSpace, rng, max_weight=2, coeff_cap=2, density=0.3) -> Polyvector:
    """A random homogeneous polyvector: one basis monomial plus others of its degree."""
    w = rng.randint(0, max_weight)
    basis = space.basis(w, coeff_cap)
    while not basis:
        w -= 1
        basis = space.basis(w, coeff_cap)
    P = rng.choice(basis)
    d = P.pol_degree
    for b in basis:
        if b.pol_degree == d and rng.random() < density:
            P = P + b.scaled(rng.randint(-2, 2))
    return P if P else rng.choice(basis)


def lazy_random_element(carrier: PolyCarrier, arity, degree, seed, cap) -> OperadElement:
    """A pseudo-random map on monomials: values drawn from a generator seeded per input."""
    monos = carrier.ring.monomials(cap)

    def fn(inp):
        target = sum(carrier.deg(a) for a in inp) + degree
        pool = [m for m in monos if carrier.deg(m) == target]
        if not pool:
            return {}
        r = random.Random(hash((seed, inp)))
        out: dict = {}
        for _ in range(r.randint(0, 2)):
            vaxpy(out, r.randint(-2, 2), {r.choice(pool): 1})
        return out

    return OperadElement(carrier, arity, degree, fn, f"r{seed}")


# -- 1. convolution Jacobi ----------------------------------------------------------------


def jacobi(seed=0, size=100) -> SuiteResult:
    """Graded Jacobi for [ , ] on L(End_V), dim V <= 3.

    General elements use weights 1..3. Every fourth case symmetrizes its
    elements and also allows weight 0.
    """
    res = SuiteResult("jacobi", "convolution Jacobi")
    rng = random.Random(seed)
    t = time.perf_counter()
    for k in range(2 * size):
        V = random_dg_module(rng)
        sym = k % 4 == 3
        weights = [0, 1, 2, 3] if sym else [1, 2, 3]
        f, g, h = (random_convolution(V, rng.randint(-1, 1), rng, weights) for _ in range(3))
        if sym:
            f, g, h = symmetrize(f), symmetrize(g), symmetrize(h)
        lhs = bracket(f, bracket(g, h))
        s = -1 if (f.degree * g.degree) % 2 else 1
        rhs = bracket(bracket(f, g), h) + bracket(g, bracket(f, h)).scaled(s)
        wit = difference(lhs, rhs)
        res.cases += 1
        if wit is not None:
            res.fail({"case": k, "degrees": [f.degree, g.degree, h.degree], "difference": wit})
            break
    res.seconds = time.perf_counter() - t
    return res


# -- 2. Jacobi as [x, x] = 0 -------------------------------------------------------------


def jacobiator(x: OperadElement, a, b, c) -> dict:
    """x(x(a,b),c) + (-1)^{|b||c|} x(x(a,c),b) + (-1)^{|a|(|b|+|c|)} x(x(b,c),a)."""
    V = x.carrier
    A, B, C = V.deg(a), V.deg(b), V.deg(c)
    out: dict = {}
    for (u, v, w), e in (((a, b, c), 0), ((a, c, b), B * C), ((b, c, a), A * (B + C))):
        s = -1 if e % 2 else 1
        for m, k in x(u, v).items():
            vaxpy(out, s * k, x(m, w))
    return out


def symmetric_binary_grid(V: DgModule, values=(-1, 0, 1), max_slots=5):
    """Every symmetric degree-1 binary map with table entries in ``values``."""
    slots = []
    for inp in itertools.combinations_with_replacement(V.basis, 2):
        if inp[0] == inp[1] and V.deg(inp[0]) % 2:
            continue
        target = V.deg(inp[0]) + V.deg(inp[1]) + 1
        slots.extend((inp, o) for o in V.basis if V.deg(o) == target)
    if not slots or len(slots) > max_slots:
        return
    for coeffs in itertools.product(values, repeat=len(slots)):
        table: dict = {}
        for (inp, o), c in zip(slots, coeffs):
            if c:
                table.setdefault(inp, {})[o] = c
        yield symmetric_from_table(V, 2, 1, table, "x")


def jacobi_square(seed=0, size=100) -> SuiteResult:
    """The three-term Jacobiator equals 1/2 [x, x] on an exhaustive grid."""
    res = SuiteResult("jacobi-square", "three-term Jacobiator = 1/2 [x,x]")
    if size <= 0:
        return res
    t = time.perf_counter()
    half = Fraction(1, 2)
    for da, db in itertools.product(range(-2, 2), repeat=2):
        V = DgModule(("a", "b"), {"a": da, "b": db})
        for x in symmetric_binary_grid(V):
            X = ConvolutionElement(V, 1, {2: x})
            sq = bracket(X, X).components.get(3)
            res.cases += 1
            for inp in itertools.product(V.basis, repeat=3):
                lhs = jacobiator(x, *inp)
                rhs = {m: half * c for m, c in sq(*inp).items()} if sq is not None else {}
                if lhs != rhs:
                    res.fail({"degrees": [da, db], "inputs": inp, "jacobiator": lhs, "half_square": rhs})
                    break
            if not res.ok:
                break
        if not res.ok:
            break
    res.seconds = time.perf_counter() - t
    return res


# -- 3. symmetric and multi-derivation closure -----------------------------------------------


def closure(seed=0, size=100, degree_cap=4) -> SuiteResult:
    """Brackets of symmetric elements are symmetric; brackets of multi-derivations are too.

    On Q[x, y] truncated at polynomial degree ``degree_cap``: the symmetric
    cases symmetrize pseudo-random maps with values up to the cap, the
    multi-derivation cases realize random polyvectors with coefficients up to
    the cap.
    """
    res = SuiteResult("closure", "symmetric and multi-derivation closure")
    rng = random.Random(seed)
    t = time.perf_counter()
    A = plane()
    carrier = PolyCarrier(A, 1, 1)
    for k in range(size):
        p, q = rng.randint(1, 2), rng.randint(1, 2)
        f = symmetrize(ConvolutionElement.single(lazy_random_element(carrier, p, p - 1, (seed, k, 0), degree_cap)))
        g = symmetrize(ConvolutionElement.single(lazy_random_element(carrier, q, q - 1, (seed, k, 1), degree_cap)))
        wit = symmetry_witness(bracket(f, g))
        res.cases += 1
        if wit is not None:
            res.fail({"case": k, "kind": "symmetric", "witness": wit})
            break
    space = PolyvectorSpace(A, 0, degree_cap + 2, 1)
    mu = space.mu()
    for k in range(size if res.ok else 0):
        P = random_polyvector(space, rng, 2, degree_cap)
        Q = random_polyvector(space, rng, 2, degree_cap)
        br = bracket(realize(P), realize(Q))
        rep = is_multiderivation(br, mu)
        wit = None if rep.ok else rep.first_failure()
        if wit is None:
            w = symmetry_witness(br)
            wit = None if w is None else ("not symmetric", w)
        res.cases += 1
        if wit is not None:
            res.fail({"case": k, "kind": "multi-derivation", "P": str(P), "Q": str(Q), "witness": wit})
            break
    res.seconds = time.perf_counter() - t
    return res


# -- 4. suspension and multi-derivations ----------------------------------------------------


def random_partials(base: PolyCarrier, rng, w, coeff_cap=1) -> OperadElement:
    """A sum of products of partials of one degree (a non-symmetric multi-derivation)."""
    ring = base.ring
    buckets: dict = {}
    for _ in range(3):
        J = [rng.randrange(ring.size) for _ in range(w)]
        c = rng.choice(ring.monomials(coeff_cap))
        T = partials_product(base, {c: rng.choice([-2, -1, 1, 2])}, J)
        buckets.setdefault(T.degree, []).append(T)
    terms = max(buckets.values(), key=len)
    return lincomb([(1, T) for T in terms])


def suspension(seed=0, size=100) -> SuiteResult:
    """suspend(f, n) is a multi-derivation of suspend(mu, n) for n = 1, 2."""
    res = SuiteResult("suspension", "suspension preserves multi-derivations")
    rng = random.Random(seed)
    t = time.perf_counter()
    base = PolyCarrier(mixed_plane(), 1, 0)
    mus = {n: suspend(product(base), n) for n in (1, 2)}
    for k in range(size):
        f = random_partials(base, rng, rng.randint(1, 3))
        res.cases += 1
        for n, mu in mus.items():
            rep = is_multiderivation(ConvolutionElement.single(suspend(f, n)), mu)
            if not rep.ok:
                res.fail({"case": k, "n": n, "arity": f.arity, "witness": rep.first_failure()})
                break
        if not res.ok:
            break
    res.seconds = time.perf_counter() - t
    return res


# -- 5. shuffle product: Leibniz, commutativity, realize multiplicative ---------------------


def shuffle_leibniz(seed=0, size=100) -> SuiteResult:
    """On realized polyvectors of weight <= 2 over several cdgas and shifts.

    [f, g.h] = [f,g].h + (-1)^{|f|(|g|+n+1)} g.[f,h] and g.h = (-1)^{D_g D_h} h.g
    with |.| degrees in L and D = |.| + n + 1; realize(P Q) = realize(P).realize(Q).
    """
    res = SuiteResult("shuffle", "shuffle-product Leibniz and commutativity")
    rng = random.Random(seed)
    t = time.perf_counter()
    setups = [(A, n) for A in (plane(), koszul_tate(), three_generators()) for n in (-2, -1, 0, 1)]
    spaces = {(A, n): PolyvectorSpace(A, n, 6, 1) for A, n in setups}
    for k in range(size):
        A, n = setups[k % len(setups)]
        space = spaces[(A, n)]
        mu = space.mu()
        P, Q, R = (random_polyvector(space, rng) for _ in range(3))
        f, g, h = realize(P), realize(Q), realize(R)
        res.cases += 1
        lhs = bracket(f, shuffle_product(g, h, mu))
        s = -1 if (f.degree * (g.degree + n + 1)) % 2 else 1
        rhs = shuffle_product(bracket(f, g), h, mu) + shuffle_product(g, bracket(f, h), mu).scaled(s)
        checks = [("Leibniz", lhs, rhs)]
        s = -1 if (Q.pol_degree * R.pol_degree) % 2 else 1
        checks.append(("commutativity", shuffle_product(g, h, mu), shuffle_product(h, g, mu).scaled(s)))
        checks.append(("realize multiplicative", realize(Q * R), shuffle_product(g, h, mu)))
        for name, a, b in checks:
            wit = difference(a, b)
            if wit is not None:
                res.fail({"case": k, "identity": name, "cdga": list(A.names), "n": n,
                          "P": str(P), "Q": str(Q), "R": str(R), "difference": wit})
                break
        if not res.ok:
            break
    res.seconds = time.perf_counter() - t
    return res


# -- 6. L0 -----------------------------------------------------------------------------------


def l0(seed=0, size=100, weight_cap=8) -> SuiteResult:
    res = SuiteResult("l0", "L0: d p2 = 0, d p3 = -1/2 [p2,p2], d^2 = 0")
    if size <= 0:
        return res
    t = time.perf_counter()
    rep = l0_d_squared_zero(weight_cap)
    res.cases = len(rep.checks)
    for name, ok, detail in rep.checks:
        if not ok:
            res.fail({"check": name, "detail": detail})
            break
    res.seconds = time.perf_counter() - t
    res.notes["weight_cap"] = weight_cap
    return res


# -- 7. bridge soundness -------------------------------------------------------------------------


def _combination(basis, coeffs, space) -> Polyvector:
    out = space.zero()
    for b, c in zip(basis, coeffs):
        if c:
            out = out + b.scaled(c)
    return out


def degree_one_basis(space: PolyvectorSpace, w, coeff_cap):
    """Weight-w monomials of degree 1 in Pol[n+1]."""
    return space.basis(w, coeff_cap, degree=space.n + 2)


def truncated_tower(space: PolyvectorSpace, top, coeff_cap, rng) -> dict:
    """pi_2 .. pi_top solving the relations N <= top (linear solve per weight).

    Relations above ``top`` are left alone, so the family typically fails there.
    """
    fam: dict = {}
    for N in range(2, top + 1):
        B = degree_one_basis(space, N, coeff_cap)
        if not B:
            continue
        dB = [polyvector_differential(b).terms for b in B]
        target = space.zero()
        for i in range(2, N):
            j = N + 1 - i
            if i in fam and j in fam:
                target = target + schouten_bracket(fam[i], fam[j]).scaled(Fraction(-1, 2))
        x = solve(dB, target.terms)
        if x is None:
            break
        for v in nullspace(dB):
            c = rng.randint(-2, 2)
            x = [a + c * b for a, b in zip(x, v)]
        P = _combination(B, x, space)
        if P:
            fam[N] = P
    return fam


def random_members(space: PolyvectorSpace, rng, weights, coeff_cap) -> dict:
    fam = {}
    for w in weights:
        B = degree_one_basis(space, w, coeff_cap)
        if B:
            P = _combination(B, [rng.choice([-1, 0, 0, 1, 2]) for _ in B], space)
            if P:
                fam[w] = P
    return fam


def bridge_corpus(seed, count):
    """``count`` families over presentations with <= 3 generators of degrees 0 and -1."""
    rng = random.Random(seed)
    spaces = {
        "plane": PolyvectorSpace(plane(), 0, 6, 1),
        "space3": PolyvectorSpace(CdgaPresentation(["x", "y", "z"], [0, 0, 0]), 0, 6, 1),
        "koszul-tate": PolyvectorSpace(koszul_tate(), -1, 6, 1),
        "three": PolyvectorSpace(three_generators(), -1, 6, 1),
        "mixed": PolyvectorSpace(mixed_plane(), -1, 6, 1),
    }
    kinds = ["classical", "space3", "tower", "random", "kernel"]
    for k in range(count):
        kind = kinds[k % len(kinds)]
        if kind == "classical":
            space = spaces["plane"]
            fam = random_members(space, rng, [2], 2)
        elif kind == "space3":
            space = spaces["space3"]
            fam = random_members(space, rng, [2], 1)
        elif kind == "tower":
            space = spaces[rng.choice(["koszul-tate", "three", "mixed"])]
            fam = truncated_tower(space, rng.randint(2, 4), 1, rng)
        elif kind == "random":
            space = spaces[rng.choice(["koszul-tate", "three", "mixed"])]
            fam = random_members(space, rng, sorted(rng.sample([2, 3, 4], rng.randint(1, 3))), 1)
        else:
            space = spaces[rng.choice(["koszul-tate", "mixed"])]
            fam = truncated_tower(space, 2, 1, rng)
        yield kind, PolyvectorFamily(space, fam)


def bridge(seed=0, size=100) -> SuiteResult:
    """mc_check and verify_linfinity agree at every N on a generated corpus.

    Soundness (MC pass implies L-infinity pass) and the negative control
    (failures at the same weight) both follow from per-N agreement, which is
    what is checked. The corpus has max(size // 2, 0) families.
    """
    res = SuiteResult("bridge", "bridge soundness and negative control")
    t = time.perf_counter()
    tally = {"mc_pass": 0, "mc_fail": 0}
    for k, (kind, F) in enumerate(bridge_corpus(seed, size // 2)):
        mc = mc_check(F)
        li = verify_linfinity(poisson_to_linfinity(F), F.default_n_max())
        mc_ok = {v.name: v.ok for v in mc.verdicts}
        li_ok = {v.name: v.ok for v in li.verdicts}
        res.cases += 1
        tally["mc_pass" if mc.ok else "mc_fail"] += 1
        bad = [N for N in mc_ok if mc_ok[N] != li_ok.get(N)]
        if mc.ok and not li.ok:
            bad.append(li.first_failure().name)
        if bad:
            res.fail({"case": k, "kind": kind, "family": {w: str(p) for w, p in F.members.items()},
                      "n": F.n, "disagree_at": bad, "mc": mc_ok, "linfinity": li_ok})
            break
    res.notes.update(tally)
    res.seconds = time.perf_counter() - t
    return res


# -- 8. classical recovery -----------------------------------------------------------------


CLASSICAL_DOCUMENT = {
    "format": 1,
    "cdga": {"generators": [{"name": "x", "degree": 0}, {"name": "y", "degree": 0}]},
    "n": 0,
    "family": {"2": [{"coefficient": "1", "monomial": {}, "d": ["x", "y"]}]},
}


def classical(seed=0, size=100, degree_cap=4) -> SuiteResult:
    """poisson-check on pi = d_x d_y over Q[x, y], then strict Jacobi and Leibniz of {,}."""
    from .cli import run_poisson_check
    from .documents import from_json
    from .linfinity import extract_bracket

    res = SuiteResult("classical", "classical recovery on Q[x,y]")
    if size <= 0:
        return res
    t = time.perf_counter()
    doc = from_json(CLASSICAL_DOCUMENT)
    code, report = run_poisson_check(doc)
    res.cases += 1
    expected = {"{x,x}": "0", "{x,y}": "1", "{y,x}": "-1", "{y,y}": "0"}
    if code != 0:
        res.fail({"exit_code": code, "report": report})
    elif report.get("bracket") != expected:
        res.fail({"bracket": report.get("bracket"), "expected": expected})
    if res.ok:
        F = doc.polyvector_family()
        br = extract_bracket(poisson_to_linfinity(F))
        ring = F.space.cdga.ring
        monos = ring.monomials(degree_cap)

        def b(u: dict, v: dict) -> dict:
            return br.apply(u, v)

        def m(u: dict, v: dict) -> dict:
            return ring.mul(u, v)

        for a, c, e in itertools.product(monos, repeat=3):
            A, C, E = {a: 1}, {c: 1}, {e: 1}
            jac = b(A, b(C, E))
            vaxpy(jac, -1, b(b(A, C), E))
            vaxpy(jac, -1, b(C, b(A, E)))
            leib = b(A, m(C, E))
            vaxpy(leib, -1, m(b(A, C), E))
            vaxpy(leib, -1, m(C, b(A, E)))
            res.cases += 1
            if jac or leib:
                res.fail({"inputs": [ring.format_monomial(u) for u in (a, c, e)],
                          "jacobi": ring.format(jac), "leibniz": ring.format(leib)})
                break
    res.notes["bracket"] = expected if res.ok else None
    res.seconds = time.perf_counter() - t
    return res


# -- 9. realize injectivity ------------------------------------------------------------------------


def realize_rank(seed=0, size=100, max_weight=3, coeff_cap=2) -> SuiteResult:
    """realize has full rank in each weight <= 3 on Q[x,y] and on the Koszul-Tate cdga."""
    res = SuiteResult("realize-rank", "realize is injective per weight")
    if size <= 0:
        return res
    t = time.perf_counter()
    for name, A in (("plane", plane()), ("koszul-tate", koszul_tate())):
        for n in (0, -1):
            space = PolyvectorSpace(A, n, coeff_cap, coeff_cap)
            for w in range(max_weight + 1):
                basis = space.basis(w, coeff_cap)
                inputs = list(space.carrier.test_tuples(w, ordered=False))
                rows = []
                for P in basis:
                    f = realize(P).components.get(w)
                    vec: dict = {}
                    if f is not None:
                        for inp in inputs:
                            for mono, c in f(*inp).items():
                                vec[(inp, mono)] = c
                    rows.append(vec)
                r = rank(rows)
                res.cases += 1
                res.notes[f"{name} n={n} w={w}"] = f"{r}/{len(basis)}"
                if r != len(basis):
                    res.fail({"cdga": name, "n": n, "weight": w, "rank": r, "dimension": len(basis)})
    res.seconds = time.perf_counter() - t
    return res


# -- 10. homotopy rigidity ---------------------------------------------------------------------------


def rigidity(seed=0, size=100, t_degree=2) -> SuiteResult:
    """On Q[x,y], n = 0, weight-2 one-simplices are constant in t.

    The degree-1 weight-2 elements over Q[x,y] (x) Omega_1 (coefficients of
    polynomial degree <= 2 in x, y, t, dt) that pass the weight-2 relation are
    exactly the t-constant ones. Random interpolations between distinct
    bivectors fail, constant and degenerate simplices pass, and every passing
    simplex restricts to passing vertices.
    """
    res = SuiteResult("rigidity", "homotopy rigidity on Q[x,y]")
    if size <= 0:
        return res
    t = time.perf_counter()
    rng = random.Random(seed)
    base = PolyvectorSpace(plane(), 0, 6, 1)
    sp = simplex_space(base, 1)
    r = base.rank
    B = [b for b in sp.basis(2, t_degree, degree=2) if not any(sp.split(next(iter(b.terms)))[1][r:])]
    images = [polyvector_differential(b).terms for b in B]
    kernel = nullspace(images)
    constant = [k for k, b in enumerate(B) if not any(sp.split(next(iter(b.terms)))[0][r:])]
    res.cases += 1
    res.notes["kernel"] = f"{len(kernel)} of {len(B)}"
    # the kernel must be spanned by t-free basis elements
    if len(kernel) != len(constant) or any(v[k] for v in kernel for k in range(len(B)) if k not in constant):
        res.fail({"kernel_dimension": len(kernel), "t_free": len(constant)})
    for k in range(size if res.ok else 0):
        P0 = random_members(base, rng, [2], 2)
        P1 = random_members(base, rng, [2], 2)
        F0, F1 = PolyvectorFamily(base, P0), PolyvectorFamily(base, P1)
        res.cases += 1
        checks = []
        if F0[2] != F1[2]:
            checks.append(("interpolation fails", interpolate(F0, F1), False))
        checks.append(("constant path passes", interpolate(F0, F0), True))
        checks.append(("degenerate 2-simplex passes", degenerate(F0, 2), True))
        for name, S, expect in checks:
            rep = is_simplex(S)
            if rep.ok != expect:
                res.fail({"case": k, "check": name, "report": [(v.name, v.ok) for v in rep.verdicts]})
                break
            if rep.ok:
                for j in range(S.m + 1):
                    if not mc_check(vertex_eval(S, j)).ok:
                        res.fail({"case": k, "check": f"{name}: vertex {j}"})
                        break
        if not res.ok:
            break
    res.seconds = time.perf_counter() - t
    return res


SUITES = {
    1: jacobi,
    2: jacobi_square,
    3: closure,
    4: suspension,
    5: shuffle_leibniz,
    6: l0,
    7: bridge,
    8: classical,
    9: realize_rank,
    10: rigidity,
}


def run_all(seed=0, size=100, only=None) -> list:
    out = []
    for k, fn in SUITES.items():
        if only is None or k in only:
            try:
                out.append(fn(seed, size))
            except CapOverflowError as e:
                r = SuiteResult(fn.__name__, fn.__name__)
                r.fail({"cap_overflow": str(e), "needed": e.needed})
                out.append(r)
            except (ValueError, ArithmeticError) as e:
                # a broken sign can make intermediate results inhomogeneous
                r = SuiteResult(fn.__name__, fn.__name__)
                r.fail({"error": f"{type(e).__name__}: {e}"})
                out.append(r)
    return out
