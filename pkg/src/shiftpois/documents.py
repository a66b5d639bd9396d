"""Workbench documents: a JSON description of a cdga and what to check on it.

A document looks like::

    {
      "format": 1,
      "cdga": {"generators": [{"name": "x", "degree": 0}, {"name": "xi", "degree": -1}],
               "differential": {"xi": [{"coefficient": "1", "monomial": {"x": 2}}]}},
      "n": -1,
      "caps": {"degree": 4, "weight": 7, "probe": 1},
      "family": {"2": [{"coefficient": "1/2", "monomial": {"x": 1}, "d": ["xi", "xi"]}]},
      "linfinity": {"2": [{"inputs": [{"x": 1}, {}], "value": [{"coefficient": "1", "monomial": {}}]}]},
      "simplex": {"dimension": 1, "family": {"2": [...]}}
    }

Rationals are strings "p/q" (integers are accepted on input). Family terms are
``coefficient * monomial * d_{g_1} ... d_{g_w}`` with the d's multiplied in
the listed order. Simplex terms may also use t1..tm and dt1..dtm in their
monomials. An ``linfinity`` block gives maps on A[n+1] by their values on
sorted input tuples; the other orderings follow by symmetry.

Errors carry the line and column of the offending JSON value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import jsonschema

from .cdga import CdgaPresentation
from .graded import CapOverflowError
from .graded import scalar_str
from .linfinity import LInfinityFamily, PolyvectorFamily
from .operad import differential, symmetric_from_table
from .polyvectors import Polyvector, PolyvectorSpace
from .simplicial import SimplexOfPoisson, simplex_space

FORMAT = 1

_rational = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^\s*-?\d+\s*(/\s*0*[1-9]\d*\s*)?$"}]}
_monomial = {"type": "object", "additionalProperties": {"type": "integer", "minimum": 0}}
_poly_term = {
    "type": "object",
    "required": ["coefficient"],
    "properties": {"coefficient": _rational, "monomial": _monomial},
    "additionalProperties": False,
}
_pv_term = {
    "type": "object",
    "required": ["coefficient"],
    "properties": {
        "coefficient": _rational,
        "monomial": _monomial,
        "d": {"type": "array", "items": {"type": "string"}},
    },
    "additionalProperties": False,
}
_weights = {"type": "object", "propertyNames": {"pattern": r"^[0-9]+$"},
            "additionalProperties": {"type": "array", "items": _pv_term}}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "shiftpois workbench document",
    "type": "object",
    "required": ["cdga"],
    "properties": {
        "format": {"const": FORMAT},
        "cdga": {
            "type": "object",
            "required": ["generators"],
            "properties": {
                "generators": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["name", "degree"],
                        "properties": {"name": {"type": "string", "pattern": r"^[A-Za-z][A-Za-z0-9]*$"},
                                       "degree": {"type": "integer"}},
                        "additionalProperties": False,
                    },
                },
                "differential": {"type": "object", "additionalProperties": {"type": "array", "items": _poly_term}},
                "max_degree": {"type": "integer"},
            },
            "additionalProperties": False,
        },
        "n": {"type": "integer"},
        "caps": {
            "type": "object",
            "properties": {k: {"type": "integer", "minimum": 0} for k in ("degree", "weight", "probe")},
            "additionalProperties": False,
        },
        "family": _weights,
        "linfinity": {
            "type": "object",
            "propertyNames": {"pattern": r"^[0-9]+$"},
            "additionalProperties": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["inputs", "value"],
                    "properties": {"inputs": {"type": "array", "items": _monomial},
                                   "value": {"type": "array", "items": _poly_term}},
                    "additionalProperties": False,
                },
            },
        },
        "simplex": {
            "type": "object",
            "required": ["dimension", "family"],
            "properties": {"dimension": {"type": "integer", "minimum": 0}, "family": _weights},
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}

DEFAULT_CAPS = {"degree": 4, "probe": 1}


class DocumentError(ValueError):
    """Parse or schema error, located in the source text when possible."""

    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


# -- JSON with positions -------------------------------------------------------------


def _load_with_positions(text: str):
    """json.loads plus a map from JSON paths (tuples) to (line, column)."""
    decoder = json.JSONDecoder()
    positions: dict = {}

    def lc(i):
        line = text.count("\n", 0, i) + 1
        return line, i - (text.rfind("\n", 0, i) + 1) + 1

    def ws(i):
        while i < len(text) and text[i] in " \t\r\n":
            i += 1
        return i

    def value(i, path):
        i = ws(i)
        positions[path] = lc(i)
        if i < len(text) and text[i] == "{":
            out = {}
            i = ws(i + 1)
            if text[i : i + 1] == "}":
                return out, i + 1
            while True:
                i = ws(i)
                key, i = decoder.raw_decode(text, i)
                if not isinstance(key, str):
                    raise json.JSONDecodeError("expected a string key", text, i)
                i = ws(i)
                if text[i : i + 1] != ":":
                    raise json.JSONDecodeError("expected ':'", text, i)
                out[key], i = value(i + 1, path + (key,))
                i = ws(i)
                if text[i : i + 1] == ",":
                    i += 1
                elif text[i : i + 1] == "}":
                    return out, i + 1
                else:
                    raise json.JSONDecodeError("expected ',' or '}'", text, i)
        if i < len(text) and text[i] == "[":
            out = []
            i = ws(i + 1)
            if text[i : i + 1] == "]":
                return out, i + 1
            while True:
                v, i = value(i, path + (len(out),))
                out.append(v)
                i = ws(i)
                if text[i : i + 1] == ",":
                    i += 1
                elif text[i : i + 1] == "]":
                    return out, i + 1
                else:
                    raise json.JSONDecodeError("expected ',' or ']'", text, i)
        return decoder.raw_decode(text, i)

    try:
        data, end = value(0, ())
        if ws(end) != len(text):
            raise json.JSONDecodeError("extra data", text, ws(end))
    except json.JSONDecodeError as e:
        raise DocumentError(e.msg, e.lineno, e.colno) from None
    return data, positions


# -- the document --------------------------------------------------------------------


def _fraction(x) -> Fraction:
    return Fraction(x.replace(" ", "")) if isinstance(x, str) else Fraction(x)


def _coef(c: Fraction):
    return int(c) if c.denominator == 1 else c


@dataclass
class Document:
    """A parsed document. Polyvectors are kept in the normal form of their rings."""

    cdga: CdgaPresentation
    n: int | None = None
    caps: dict = field(default_factory=dict)
    family: dict | None = None  # weight -> Polyvector over A
    linfinity: dict | None = None  # arity -> {sorted input tuple: polynomial}
    simplex: tuple | None = None  # (dimension, weight -> Polyvector over A (x) Omega_m)

    @property
    def degree_cap(self) -> int:
        return self.caps.get("degree", DEFAULT_CAPS["degree"])

    @property
    def probe_cap(self) -> int:
        return self.caps.get("probe", DEFAULT_CAPS["probe"])

    @property
    def weight_cap(self):
        return self.caps.get("weight")

    def space(self) -> PolyvectorSpace:
        if self.n is None:
            raise DocumentError("the document has no shift n (give it in the document or with --n)")
        return PolyvectorSpace(self.cdga, self.n, self.degree_cap, self.probe_cap)

    def polyvector_family(self) -> PolyvectorFamily:
        if self.family is None:
            raise DocumentError("the document has no polyvector family")
        _check_cap(self.family, self.degree_cap)
        return PolyvectorFamily(self.space(), dict(self.family))

    def simplex_of_poisson(self) -> SimplexOfPoisson:
        if self.simplex is None:
            raise DocumentError("the document has no simplex")
        m, members = self.simplex
        _check_cap(members, self.degree_cap)
        return SimplexOfPoisson(self.space(), m, dict(members))

    def linfinity_family(self) -> LInfinityFamily:
        """q_1 = differential of A[n+1] plus the tabulated maps, each of degree 1."""
        if self.linfinity is None:
            raise DocumentError("the document has no L-infinity family")
        carrier = self.space().carrier
        maps = {1: differential(carrier)}
        for arity, table in self.linfinity.items():
            if arity == 1:
                raise DocumentError("q_1 is the differential of A[n+1] and cannot be given")
            maps[arity] = symmetric_from_table(carrier, arity, 1, table, f"q{arity}")
        return LInfinityFamily(carrier, maps)


def _check_cap(members: dict, cap: int):
    worst = max((p.coefficient_degree() for p in members.values()), default=0)
    if worst > cap:
        raise CapOverflowError(f"a coefficient has polynomial degree {worst} above the degree cap {cap}",
                               needed=worst)


def _check_names(names, used, path, positions, what):
    for g in used:
        if g not in names:
            raise DocumentError(f"{what} references undeclared generator {g!r}", *positions.get(path, (None, None)))


def _mono(ring, mono, path, positions):
    """Exponent tuple of a {name: exponent} map; None when an odd generator squares."""
    _check_names(ring.index, mono, path, positions, "monomial")
    e = [0] * ring.size
    for g, k in mono.items():
        e[ring.index[g]] = k
    if any(x > 1 and ring.degrees[i] % 2 for i, x in enumerate(e)):
        return None
    return tuple(e)


def _poly(ring, terms, path, positions) -> dict:
    out: dict = {}
    for j, t in enumerate(terms):
        e = _mono(ring, t.get("monomial", {}), path + (j, "monomial"), positions)
        if e is None:
            continue
        out[e] = out.get(e, 0) + _fraction(t["coefficient"])
    return {m: _coef(c) for m, c in out.items() if c}


def _polyvector(space: PolyvectorSpace, coeff_ring_names, terms, path, positions) -> Polyvector:
    ring = space.cdga.ring
    out = space.zero()
    for j, t in enumerate(terms):
        e = _mono(ring, t.get("monomial", {}), path + (j, "monomial"), positions)
        ds = t.get("d", [])
        _check_names(coeff_ring_names, ds, path + (j, "d"), positions, "d-symbol")
        if e is None:
            continue
        p = space.monomial(e, ds)
        out = out + p.scaled(_fraction(t["coefficient"]))
    return Polyvector(space, {m: _coef(Fraction(c)) for m, c in out.terms.items()})


def from_json(data, positions=None, n=None, degree_cap=None, weight_cap=None) -> Document:
    """Validate against :data:`SCHEMA` and build the document.

    ``n`` and the caps, when given, replace the document's own values.
    """
    positions = positions or {}
    if n is not None or degree_cap is not None or weight_cap is not None:
        data = dict(data)
        if n is not None:
            data["n"] = n
        caps = dict(data.get("caps", {}))
        if degree_cap is not None:
            caps["degree"] = degree_cap
        if weight_cap is not None:
            caps["weight"] = weight_cap
        data["caps"] = caps
    try:
        jsonschema.validate(data, SCHEMA)
    except jsonschema.ValidationError as e:
        path = tuple(e.absolute_path)
        while path and path not in positions:
            path = path[:-1]
        loc = positions.get(path, (None, None))
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise DocumentError(f"schema error at {where}: {e.message}", *loc) from None

    c = data["cdga"]
    names = [g["name"] for g in c["generators"]]
    degrees = [g["degree"] for g in c["generators"]]
    if len(set(names)) != len(names):
        raise DocumentError("duplicate generator names", *positions.get(("cdga", "generators"), (None, None)))
    for g in c.get("differential", {}):
        _check_names(names, [g], ("cdga", "differential", g), positions, "differential")
    probe = CdgaPresentation(names, degrees)
    diff = {g: _poly(probe.ring, terms, ("cdga", "differential", g), positions)
            for g, terms in c.get("differential", {}).items()}
    cdga = CdgaPresentation(names, degrees, diff, c.get("max_degree", max([0] + degrees)))
    doc = Document(cdga, data.get("n"), dict(data.get("caps", {})))

    if "family" in data or "simplex" in data or "linfinity" in data:
        space = doc.space()
    if "family" in data:
        doc.family = {}
        for w, terms in data["family"].items():
            p = _polyvector(space, names, terms, ("family", w), positions)
            if p:
                doc.family[int(w)] = p
        try:
            doc.polyvector_family()
        except ValueError as e:
            raise DocumentError(f"invalid family: {e}", *positions.get(("family",), (None, None))) from None
    if "simplex" in data:
        m = data["simplex"]["dimension"]
        sp = simplex_space(space, m)
        members = {}
        for w, terms in data["simplex"]["family"].items():
            p = _polyvector(sp, names, terms, ("simplex", "family", w), positions)
            if p:
                members[int(w)] = p
        doc.simplex = (m, members)
        try:
            doc.simplex_of_poisson()
        except ValueError as e:
            raise DocumentError(f"invalid simplex: {e}", *positions.get(("simplex",), (None, None))) from None
    if "linfinity" in data:
        ring = cdga.ring
        doc.linfinity = {}
        for a, rows in data["linfinity"].items():
            arity = int(a)
            table = {}
            for j, row in enumerate(rows):
                path = ("linfinity", a, j)
                if len(row["inputs"]) != arity:
                    raise DocumentError(f"arity {arity} needs {arity} inputs", *positions.get(path, (None, None)))
                inp = [_mono(ring, m, path + ("inputs", k), positions) for k, m in enumerate(row["inputs"])]
                if None in inp:
                    continue
                table[tuple(sorted(inp))] = _poly(ring, row["value"], path + ("value",), positions)
            doc.linfinity[arity] = table
        try:
            doc.linfinity_family()
        except ValueError as e:
            raise DocumentError(f"invalid L-infinity family: {e}",
                                *positions.get(("linfinity",), (None, None))) from None
    return doc


def parse(text: str, **overrides) -> Document:
    data, positions = _load_with_positions(text)
    return from_json(data, positions, **overrides)


def load(path, **overrides) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror}") from None
    return parse(text, **overrides)


# -- serialization -------------------------------------------------------------------


def _mono_json(ring, m) -> dict:
    return {g: e for g, e in zip(ring.names, m) if e}


def _poly_json(ring, p: dict) -> list:
    return [{"coefficient": scalar_str(c), "monomial": _mono_json(ring, m)} for m, c in sorted(p.items())]


def polyvector_json(P: Polyvector) -> list:
    space = P.space
    ring = space.cdga.ring
    out = []
    for mono, c in sorted(P.terms.items()):
        a, e = space.split(mono)
        ds = [g for g, k in zip(ring.names, e) for _ in range(k)]
        out.append({"coefficient": scalar_str(c), "monomial": _mono_json(ring, a), "d": ds})
    return out


def to_json(doc: Document) -> dict:
    ring = doc.cdga.ring
    data = {
        "format": FORMAT,
        "cdga": {
            "generators": [{"name": g, "degree": d} for g, d in zip(ring.names, ring.degrees)],
            "differential": {g: _poly_json(ring, v) for g, v in zip(ring.names, doc.cdga.dvalues) if v},
            "max_degree": doc.cdga.max_degree,
        },
    }
    if doc.n is not None:
        data["n"] = doc.n
    if doc.caps:
        data["caps"] = dict(doc.caps)
    if doc.family is not None:
        data["family"] = {str(w): polyvector_json(p) for w, p in sorted(doc.family.items())}
    if doc.linfinity is not None:
        data["linfinity"] = {
            str(a): [{"inputs": [_mono_json(ring, m) for m in inp], "value": _poly_json(ring, v)}
                     for inp, v in sorted(table.items()) if v]
            for a, table in sorted(doc.linfinity.items())
        }
    if doc.simplex is not None:
        m, members = doc.simplex
        data["simplex"] = {"dimension": m, "family": {str(w): polyvector_json(p) for w, p in sorted(members.items())}}
    return data


def serialize(doc: Document) -> str:
    return json.dumps(to_json(doc), indent=2)
