"""Command-line front end.

Exit codes: 0 every check passed, 1 some check failed, 2 the document could
not be read or is not schema-valid, 3 a truncation cap was too small (the
report names the cap needed).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
import time

from . import signs
from .cdga import validate_cdga
from .documents import DocumentError, load, polyvector_json
from .graded import CapOverflowError
from .linfinity import (
    Verdict,
    _jsonable,
    bracket_table,
    extract_bracket,
    mc_check,
    poisson_to_linfinity,
    verify_linfinity,
    verify_semistrict,
)
from .simplicial import is_simplex, vertex_eval

EXIT_PASS, EXIT_FAIL, EXIT_SCHEMA, EXIT_CAP = 0, 1, 2, 3


def _verdicts(prefix, rep) -> list:
    return [dict(v.to_json(), check=f"{prefix}{v.name}") for v in rep.verdicts]


def _cdga_verdict(cdga) -> Verdict:
    t = time.perf_counter()
    rep = validate_cdga(cdga)
    return Verdict("cdga", rep.ok, [f"{g}: {msg}" for g, msg in rep.problems] or None, time.perf_counter() - t)


def _caps(doc, n_max=None) -> dict:
    return {"degree": doc.degree_cap, "weight": n_max, "probe": doc.probe_cap}


def _finish(payload: dict) -> tuple:
    payload["ok"] = all(c["ok"] for c in payload["checks"])
    return (EXIT_PASS if payload["ok"] else EXIT_FAIL), payload


def run_validate(doc) -> tuple:
    payload = {"command": "validate", "checks": [_cdga_verdict(doc.cdga).to_json()], "caps": _caps(doc)}
    return _finish(payload)


def _n_max(doc, top_weight, default):
    W = doc.weight_cap
    if W is None:
        return default
    if top_weight > W:
        raise CapOverflowError(f"the family has weight {top_weight} above the weight cap {W}", needed=top_weight)
    return W


def run_poisson_check(doc) -> tuple:
    """mc_check, the bridge, verify_linfinity and verify_semistrict; then the bracket on generators."""
    payload = {"command": "poisson-check", "checks": [_cdga_verdict(doc.cdga).to_json()]}
    if doc.family is None and doc.linfinity is None:
        raise DocumentError("poisson-check needs a family or an linfinity block")
    space = doc.space()
    mu = space.mu()
    n_max = None
    if doc.family is not None:
        F = doc.polyvector_family()
        n_max = _n_max(doc, F.top_weight, F.default_n_max())
        payload["checks"] += _verdicts("mc ", mc_check(F, n_max))
        Q = poisson_to_linfinity(F)
        payload["checks"] += _verdicts("linfinity ", verify_linfinity(Q, n_max))
        payload["checks"] += _verdicts("semistrict ", verify_semistrict(Q, mu))
        ring = space.cdga.ring
        gens = [ring.gen(g) for g in ring.names]
        table = bracket_table(extract_bracket(Q), gens)
        payload["bracket"] = {"{%s,%s}" % (ring.format_monomial(a), ring.format_monomial(b)): ring.format(v)
                              for (a, b), v in table.items()}
    if doc.linfinity is not None:
        Q = doc.linfinity_family()
        top = _n_max(doc, Q.top_arity, Q.default_n_max())
        n_max = max(n_max or 0, top)
        payload["checks"] += _verdicts("given linfinity ", verify_linfinity(Q, top))
        payload["checks"] += _verdicts("given semistrict ", verify_semistrict(Q, mu))
    payload["caps"] = _caps(doc, n_max)
    return _finish(payload)


def run_homotopy_check(doc) -> tuple:
    """is_simplex, then mc_check at every vertex."""
    payload = {"command": "homotopy-check", "checks": [_cdga_verdict(doc.cdga).to_json()]}
    S = doc.simplex_of_poisson()
    F = S.family()
    n_max = _n_max(doc, F.top_weight, F.default_n_max())
    payload["checks"] += _verdicts("simplex ", is_simplex(S, n_max))
    payload["vertices"] = []
    for j in range(S.m + 1):
        V = vertex_eval(S, j)
        payload["vertices"].append({str(w): polyvector_json(p) for w, p in sorted(V.members.items())})
        payload["checks"] += _verdicts(f"vertex {j} mc ", mc_check(V, n_max))
    payload["caps"] = _caps(doc, n_max)
    return _finish(payload)


def run_selftest(seed=0, size=100, only=None) -> tuple:
    from .suites import run_all

    results = run_all(seed, size, only)
    payload = {"command": "selftest", "seed": seed, "size": size,
               "checks": [dict(r.to_json(), check=f"suite {k}: {r.title}", ok=r.ok)
                          for k, r in zip(only or range(1, len(results) + 1), results)]}
    return _finish(payload)


# -- output --------------------------------------------------------------------------


def _print_human(payload, out):
    print(f"{payload['command']}: {'PASS' if payload.get('ok') else 'FAIL'}", file=out)
    for c in payload.get("checks", []):
        line = f"  [{'ok' if c['ok'] else 'FAIL'}] {c['check']}"
        if "cases" in c:
            line += f" ({c['cases']} cases, {c['seconds']:.2f}s)"
        print(line, file=out)
        if not c["ok"] and c.get("witness") is not None:
            print(f"      witness: {json.dumps(_jsonable(c['witness']))}", file=out)
    if "bracket" in payload:
        print("  bracket on generators:", file=out)
        for k, v in payload["bracket"].items():
            print(f"    {k} = {v}", file=out)
    for j, fam in enumerate(payload.get("vertices", [])):
        print(f"  vertex {j}: {json.dumps(fam)}", file=out)
    if "caps" in payload:
        print(f"  caps: {payload['caps']}", file=out)
    if "error" in payload:
        print(f"  error: {payload['error']}", file=out)
    if payload.get("needed") is not None:
        print(f"  rerun with a cap of at least {payload['needed']}", file=out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="workbench document (JSON)")
    common.add_argument("--n", type=int, help="shift n (overrides the document)")
    common.add_argument("--degree-cap", type=int, help="polynomial degree cap D for coefficients")
    common.add_argument("--weight-cap", type=int, help="largest relation weight N to check")
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--seed", type=int, default=0, help="seed for selftest")
    common.add_argument("--size", type=int, default=100, help="random cases per selftest suite")
    common.add_argument("--suite", type=int, action="append", help="selftest: run only this suite (repeatable)")
    common.add_argument("--mutate-sign", metavar="LEDGER_ID", action="append", default=[],
                        help=f"test mode: flip a sign convention ({', '.join(signs.LEDGER)})")
    p = argparse.ArgumentParser(prog="shiftpois", description="Exact checks for shifted Poisson structures.",
                                epilog="exit codes: 0 pass, 1 fail, 2 schema error, 3 cap overflow")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check a cdga presentation")
    sub.add_parser("poisson-check", parents=[common], help="Maurer-Cartan, bridge, L-infinity, semi-strictness")
    sub.add_parser("homotopy-check", parents=[common], help="check a simplex and its vertices")
    sub.add_parser("selftest", parents=[common], help="run the built-in property suites")
    return p


RUNNERS = {"validate": run_validate, "poisson-check": run_poisson_check, "homotopy-check": run_homotopy_check}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    unknown = [s for s in args.mutate_sign if s not in signs.LEDGER]
    if unknown:
        print(f"unknown ledger sign(s) {unknown}; known: {', '.join(signs.LEDGER)}", file=sys.stderr)
        return EXIT_SCHEMA
    ctx = signs.mutated(*args.mutate_sign) if args.mutate_sign else contextlib.nullcontext()
    payload = {"command": args.command, "checks": []}
    with ctx:
        try:
            if args.command == "selftest":
                code, payload = run_selftest(args.seed, args.size, args.suite)
            else:
                if not args.input:
                    raise DocumentError(f"{args.command} needs --input")
                doc = load(args.input, n=args.n, degree_cap=args.degree_cap, weight_cap=args.weight_cap)
                code, payload = RUNNERS[args.command](doc)
        except DocumentError as e:
            code = EXIT_SCHEMA
            payload.update(ok=False, error=str(e), line=e.line, column=e.column)
        except CapOverflowError as e:
            code = EXIT_CAP
            payload.update(ok=False, error=str(e), needed=e.needed)
    if args.mutate_sign:
        payload["mutated"] = list(args.mutate_sign)
    payload["exit_code"] = code
    if args.json:
        json.dump(_jsonable(payload), out, indent=2)
        out.write("\n")
    else:
        _print_human(payload, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
