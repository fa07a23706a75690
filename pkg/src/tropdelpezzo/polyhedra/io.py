"""JSON encoding of complexes with rationals written as "p/q" strings."""

from __future__ import annotations

import json
from typing import Any

from tropdelpezzo.errors import StructuralError
from tropdelpezzo.polyhedra.complex import Cell, PolyComplex
from tropdelpezzo.rational import format_rational, parse_rational


def complex_to_json(X: PolyComplex) -> dict[str, Any]:
    """Encode a complex; cells reference the sorted vertex list by index."""
    index = {v: i for i, v in enumerate(X.vertices)}
    return {
        "ambient_dim": X.ambient_dim,
        "vertices": [[format_rational(x) for x in v] for v in X.vertices],
        "cells": [
            {
                "dim": c.dim,
                "verts": [index[v] for v in c.vertices],
                "rays": [list(r) for r in c.rays],
                "weight": c.weight,
            }
            for c in X.cells
            if c.dim > 0
        ],
    }


def complex_from_json(payload: dict[str, Any]) -> PolyComplex:
    """Decode a complex produced by `complex_to_json`."""
    try:
        ambient = int(payload["ambient_dim"])
        vertices = [
            tuple(parse_rational(str(x)) for x in v) for v in payload["vertices"]
        ]
        cells = [Cell(0, (v,)) for v in vertices]
        for entry in payload["cells"]:
            cells.append(
                Cell(
                    dim=int(entry["dim"]),
                    vertices=tuple(vertices[i] for i in entry["verts"]),
                    rays=tuple(tuple(int(z) for z in r) for r in entry["rays"]),
                    weight=int(entry.get("weight", 1)),
                )
            )
    except (KeyError, IndexError, TypeError) as exc:
        raise StructuralError(f"malformed complex JSON: {exc}") from exc
    return PolyComplex.from_cells(ambient, cells)


def dumps(payload: Any) -> str:
    """Deterministic JSON text: sorted keys, fixed separators."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
