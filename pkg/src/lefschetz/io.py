"""JSON input and output for presentations and structure modules.

Two input kinds are accepted:

presentation:
    { "kind": "presentation", "vars": ["x","y","z"],
      "a": [0], "b": [2,2,2], "entries": [["x^2","y^2","z^2"]] }

structure:
    { "kind": "structure", "r": 3, "t0": 0, "dims": [1,1],
      "matrices": { "1,0": [[1]], "2,0": [[0]], "3,0": [[0]] } }

Matrix entries are integers or "p/q" strings; polynomial entries use the
shared text grammar.  Exports round-trip through the loaders.
"""

from __future__ import annotations

import json

from .errors import ValidationError
from .modules import ArtinianGradedModule, module_from_structure, module_to_data
from .presentation import GradedPresentation, build_presentation


def presentation_from_data(data: dict) -> GradedPresentation:
    try:
        varnames = [str(v) for v in data["vars"]]
        a = [int(x) for x in data["a"]]
        b = [int(x) for x in data["b"]]
        entries = data["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad presentation input: {exc}") from exc
    if not isinstance(entries, list):
        raise ValidationError("entries must be a list of rows")
    return build_presentation(a, b, entries, varnames)


def presentation_to_data(p: GradedPresentation) -> dict:
    return {
        "kind": "presentation",
        "vars": list(p.varnames),
        "a": list(p.a),
        "b": list(p.b),
        "entries": [[e.format(p.varnames) for e in row] for row in p.entries],
    }


def load_data(data: dict):
    kind = data.get("kind")
    if kind == "presentation":
        return presentation_from_data(data)
    if kind == "structure":
        return module_from_structure(data)
    raise ValidationError(f"unknown input kind {kind!r}")


def load_path(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError(f"{path}: top level must be a JSON object")
    return load_data(data)


def save_presentation(p: GradedPresentation, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(presentation_to_data(p), fh, indent=2, sort_keys=True)
        fh.write("\n")


def save_module(module: ArtinianGradedModule, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(module_to_data(module), fh, indent=2, sort_keys=True)
        fh.write("\n")
