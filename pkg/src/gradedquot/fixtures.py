"""Fixture files: algebras, gradings and distinguished data as canonical JSON.

Schema (top level): name, field, dim, kind, structure, and optionally
labels, involution, unit, grading, elements, subspaces.  ``structure`` is a
list of [i, j, k, "num/den"] with 0-based indices.  Scalars are written as
strings in lowest terms.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from dataclasses import field as dc_field
from importlib import resources
from pathlib import Path
from typing import Optional

from .algebra import ASSOCIATIVE, LIE, AlgebraError, FinAlgebra, build_algebra
from .fields import Field
from .grading import GradingError, ZGrading, validate_grading
from .linalg import Subspace

REQUIRED = ("name", "field", "dim", "kind", "structure")
OPTIONAL = ("labels", "involution", "unit", "grading", "elements", "subspaces")


class FixtureError(ValueError):
    """Schema or axiom failure; ``path`` names the offending key."""

    def __init__(self, message: str, path: str = "", where: Optional[tuple] = None):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
        self.where = where


@dataclass
class Fixture:
    name: str
    algebra: FinAlgebra
    grading: Optional[ZGrading] = None
    elements: dict = dc_field(default_factory=dict)  # name -> vector
    subspaces: dict = dc_field(default_factory=dict)  # name -> Subspace

    @property
    def field(self) -> Field:
        return self.algebra.field

    def element(self, name: str) -> tuple:
        try:
            return self.elements[name]
        except KeyError:
            raise FixtureError(f"no element {name!r}", "elements") from None

    def subspace(self, name: str) -> Subspace:
        try:
            return self.subspaces[name]
        except KeyError:
            raise FixtureError(f"no subspace {name!r}", "subspaces") from None


# -- parsing -------------------------------------------------------------------------------


def _scalar(F: Field, value, path: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise FixtureError("scalar must be a string or an integer", path)
    try:
        return F(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FixtureError(f"bad scalar {value!r}: {exc}", path) from None


def _vector(F: Field, dim: int, value, path: str) -> tuple:
    if not isinstance(value, list) or len(value) != dim:
        raise FixtureError(f"expected a list of {dim} scalars", path)
    return tuple(_scalar(F, v, f"{path}[{i}]") for i, v in enumerate(value))


def _vectors(F: Field, dim: int, value, path: str) -> list:
    if not isinstance(value, list):
        raise FixtureError("expected a list of vectors", path)
    return [_vector(F, dim, v, f"{path}[{i}]") for i, v in enumerate(value)]


def fixture_from_dict(obj: dict) -> Fixture:
    if not isinstance(obj, dict):
        raise FixtureError("top level must be an object")
    for key in REQUIRED:
        if key not in obj:
            raise FixtureError("missing key", key)
    extra = set(obj) - set(REQUIRED) - set(OPTIONAL)
    if extra:
        raise FixtureError(f"unknown keys {sorted(extra)}", sorted(extra)[0])
    name = obj["name"]
    if not isinstance(name, str) or not name:
        raise FixtureError("must be a nonempty string", "name")
    try:
        F = Field.from_json(obj["field"] if isinstance(obj["field"], dict) else {})
    except (ValueError, KeyError) as exc:
        raise FixtureError(str(exc), "field") from None
    dim = obj["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise FixtureError("must be a non-negative integer", "dim")
    kind = obj["kind"]
    if kind not in (ASSOCIATIVE, LIE):
        raise FixtureError(f"must be {ASSOCIATIVE!r} or {LIE!r}", "kind")
    struct: dict = {}
    if not isinstance(obj["structure"], list):
        raise FixtureError("must be a list of [i, j, k, c]", "structure")
    for t, entry in enumerate(obj["structure"]):
        path = f"structure[{t}]"
        if not (isinstance(entry, list) and len(entry) == 4):
            raise FixtureError("expected [i, j, k, c]", path)
        i, j, k, c = entry
        for pos, idx in enumerate((i, j, k)):
            if isinstance(idx, bool) or not isinstance(idx, int) or not 0 <= idx < dim:
                raise FixtureError(f"index {idx!r} outside 0..{dim - 1}", f"{path}[{pos}]")
        row = struct.setdefault((i, j), {})
        if k in row:
            raise FixtureError(f"duplicate triple {(i, j, k)}", path)
        row[k] = _scalar(F, c, f"{path}[3]")
    labels = obj.get("labels")
    if labels is not None and not (isinstance(labels, list) and len(labels) == dim and all(isinstance(s, str) for s in labels)):
        raise FixtureError(f"expected {dim} strings", "labels")
    inv = obj.get("involution")
    if inv is not None:
        inv = _vectors(F, dim, inv, "involution")
        if len(inv) != dim:
            raise FixtureError(f"expected {dim} rows", "involution")
    unit = _vector(F, dim, obj["unit"], "unit") if obj.get("unit") is not None else None
    try:
        A = build_algebra(F, dim, kind, struct, inv, unit, labels)
    except AlgebraError as exc:
        raise FixtureError(str(exc), "structure", exc.where) from None
    g = None
    if obj.get("grading") is not None:
        comps = {}
        if not isinstance(obj["grading"], dict):
            raise FixtureError("must map degrees to vectors", "grading")
        for deg, vecs in obj["grading"].items():
            try:
                d = int(deg)
            except ValueError:
                raise FixtureError(f"degree {deg!r} is not an integer", "grading") from None
            comps[d] = _vectors(F, dim, vecs, f"grading.{deg}")
        try:
            g = validate_grading(A, comps)
        except GradingError as exc:
            raise FixtureError(str(exc), "grading", exc.where) from None
    elements = {}
    for key, vec in (obj.get("elements") or {}).items():
        elements[key] = _vector(F, dim, vec, f"elements.{key}")
    subspaces = {}
    for key, vecs in (obj.get("subspaces") or {}).items():
        subspaces[key] = Subspace.span(F, dim, _vectors(F, dim, vecs, f"subspaces.{key}"))
    return Fixture(name, A, g, elements, subspaces)


def fixture_to_dict(fx: Fixture) -> dict:
    A = fx.algebra
    F = A.field
    fmt = F.format
    out = {
        "name": fx.name,
        "field": F.to_json(),
        "dim": A.dim,
        "kind": A.kind,
        "structure": [[i, j, k, fmt(c)] for (i, j), row in sorted(A.table.items()) for k, c in row],
        "labels": list(A.labels),
    }
    if A.involution is not None:
        out["involution"] = [[fmt(v) for v in r] for r in A.involution.rows]
    if A.unit is not None:
        out["unit"] = [fmt(v) for v in A.unit]
    if fx.grading is not None:
        out["grading"] = {str(k): [[fmt(v) for v in b] for b in fx.grading[k].basis] for k in fx.grading.support}
    if fx.elements:
        out["elements"] = {k: [fmt(v) for v in vec] for k, vec in fx.elements.items()}
    if fx.subspaces:
        out["subspaces"] = {k: [[fmt(v) for v in b] for b in U.basis] for k, U in fx.subspaces.items()}
    return out


def _dump(obj, indent: int = 0) -> str:
    """JSON with sorted keys; lists of scalars stay on one line."""
    pad = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_dump(obj[k], indent + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(obj, list) and any(isinstance(v, (list, dict)) for v in obj):
        items = [pad + _dump(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(obj)


def dumps_fixture(fx: Fixture) -> str:
    return _dump(fixture_to_dict(fx)) + "\n"


def loads_fixture(text: str) -> Fixture:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"invalid JSON: {exc}") from None
    return fixture_from_dict(obj)


def load_fixture(path) -> Fixture:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FixtureError(f"cannot read {path}: {exc.strerror}") from None
    return loads_fixture(text)


def save_fixture(fx: Fixture, path) -> None:
    Path(path).write_text(dumps_fixture(fx))


# -- fixture directories ----------------------------------------------------------------


def bundled_dir() -> Path:
    return Path(str(resources.files("gradedquot") / "fixtures"))


def fixture_dir(explicit=None) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get("ALG_FIXTURES")
    return Path(env) if env else bundled_dir()


def resolve(name_or_path, directory=None) -> Path:
    p = Path(name_or_path)
    if p.suffix == ".json" and p.exists():
        return p
    cand = fixture_dir(directory) / (p.name if p.suffix == ".json" else f"{p.name}.json")
    if cand.exists():
        return cand
    if p.exists():
        return p
    raise FixtureError(f"fixture {name_or_path!r} not found in {fixture_dir(directory)}")


def get(name: str, directory=None) -> Fixture:
    return load_fixture(resolve(name, directory))
