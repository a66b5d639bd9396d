"""Regenerate the JSON documents in demos/documents/.

    python3 demos/make_documents.py

Most documents are written out literally. The two towers are solved weight
by weight with fixed seeds, so rerunning gives the same files.
"""

import json
import random
from pathlib import Path

from shiftpois.documents import from_json, serialize
from shiftpois.suites import truncated_tower

OUT = Path(__file__).resolve().parent / "documents"

PLANE = {"generators": [{"name": "x", "degree": 0}, {"name": "y", "degree": 0}]}
SPACE3 = {"generators": [{"name": g, "degree": 0} for g in "xyz"]}
KOSZUL_TATE = {
    "generators": [{"name": "x", "degree": 0}, {"name": "xi", "degree": -1}],
    "differential": {"xi": [{"coefficient": "1", "monomial": {"x": 2}}]},
}


def term(c, d, **mono):
    return {"coefficient": c, "monomial": mono, "d": list(d)}


DOCUMENTS = {
    # {x, y} = 1
    "classical.json": {"format": 1, "cdga": PLANE, "n": 0, "family": {"2": [term("1", "xy")]}},
    # so(3)*: {x, y} = z and cyclic
    "lie_poisson.json": {
        "format": 1, "cdga": SPACE3, "n": 0,
        "family": {"2": [term("1", "yz", x=1), term("1", "zx", y=1), term("1", "xy", z=1)]},
    },
    # {x,y} = 1, {z,x} = 1, {y,z} = y: Jacobi fails on (x, y, z)
    "non_mc.json": {
        "format": 1, "cdga": SPACE3, "n": 0,
        "family": {"2": [term("1", "xy"), term("1", "zx"), term("1", "yz", y=1)]},
    },
    "koszul_tate.json": {"format": 1, "cdga": KOSZUL_TATE},
    "bad_differential.json": {
        "format": 1,
        "cdga": {"generators": [{"name": "x", "degree": 0}, {"name": "xi", "degree": -1}],
                 "differential": {"xi": [{"coefficient": "1", "monomial": {"xi": 1}}]}},
    },
    "undeclared.json": {"format": 1, "cdga": PLANE, "n": 0, "family": {"2": [term("1", "xz")]}},
    # t d_x d_y joins 0 to the classical structure, but d(t) = dt spoils N = 2
    "interpolation.json": {
        "format": 1, "cdga": PLANE, "n": 0,
        "simplex": {"dimension": 1, "family": {"2": [term("1", "xy", t1=1)]}},
    },
    "constant_path.json": {
        "format": 1, "cdga": PLANE, "n": 0,
        "simplex": {"dimension": 1, "family": {"2": [term("1", "xy")]}},
    },
    "degenerate_2simplex.json": {
        "format": 1, "cdga": SPACE3, "n": 0,
        "simplex": {"dimension": 2,
                    "family": {"2": [term("1", "yz", x=1), term("1", "zx", y=1), term("1", "xy", z=1)]}},
    },
}


THREE = {
    "generators": [{"name": "x", "degree": 0}, {"name": "xi", "degree": -1}, {"name": "eta", "degree": -1}],
    "differential": {"xi": [{"coefficient": "1", "monomial": {"x": 2}}],
                     "eta": [{"coefficient": "1", "monomial": {"x": 1}}]},
}


def tower_document(cdga, seed):
    """pi_2..pi_4 solving the relations through N = 4."""
    doc = from_json({"format": 1, "cdga": cdga, "n": -1, "caps": {"degree": 6, "probe": 1}})
    doc.family = truncated_tower(doc.space(), 4, 1, random.Random(seed))
    return doc


def main():
    OUT.mkdir(exist_ok=True)
    for name, data in DOCUMENTS.items():
        (OUT / name).write_text(json.dumps(data, indent=2) + "\n")
    towers = {"koszul_tate_tower.json": tower_document(KOSZUL_TATE, 3),
              "three_generator_tower.json": tower_document(THREE, 0)}
    for name, doc in towers.items():
        (OUT / name).write_text(serialize(doc) + "\n")
    print(f"wrote {len(DOCUMENTS) + len(towers)} documents to {OUT}")


if __name__ == "__main__":
    main()
