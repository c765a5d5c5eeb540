"""JSON job documents: algebra, grading and automorphism family in one file.

Scalars are exact strings ("3", "-1/2") or cyclotomic objects
({"order": n, "coeffs": [...]}); floats are rejected. Every parse error
names the JSON location it came from.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from core.errors import DocumentError
from grading.duality import ActionFamily, family_from_maps
from grading.grading import Grading, validate
from groups.finite_group import FiniteGroup, group_from_name, make_group
from lie.algebra import LieAlgebra
from linalg.matrix import Matrix
from linalg.scalars import format_scalar, parse_scalar

logger = logging.getLogger(__name__)

GROUP_KINDS = ("cyclic", "dihedral", "symmetric", "infinite_cyclic")


@dataclass
class Job:
    algebra: LieAlgebra
    grading: Optional[Grading] = None
    family: Optional[ActionFamily] = None
    document: Optional[dict] = None


# -------------------- reading --------------------

def load_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise DocumentError("file not found", str(path)) from None
    except OSError as exc:
        raise DocumentError(f"cannot read file: {exc}", str(path)) from exc
    return loads(text, str(path))


def loads(text: str, source: str = "document") -> Any:
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"{source}:{exc.lineno}:{exc.colno}") from exc


def _reject_float(raw: str):
    raise DocumentError(f"inexact number {raw}; write scalars as strings such as \"1/3\"", "number")


def _expect(raw: Any, kind: type, location: str, what: str):
    if not isinstance(raw, kind):
        raise DocumentError(f"expected {what}", location)
    return raw


def parse_group(raw: Any, location: str = "group") -> FiniteGroup:
    """A named group ("cyclic(4)", "klein", ...) or a descriptor object."""
    if isinstance(raw, str):
        return group_from_name(raw, location)
    _expect(raw, dict, location, "a group name or object")
    kind = raw.get("kind")
    if not isinstance(kind, str):
        raise DocumentError("group object needs a 'kind'", location)
    if kind == "product":
        factors = _expect(raw.get("factors"), list, f"{location}.factors", "a list of factor groups")
        return make_group("product", factors=[parse_group(f, f"{location}.factors[{i}]") for i, f in enumerate(factors)])
    if kind == "table":
        elements = _expect(raw.get("elements"), list, f"{location}.elements", "a list of element names")
        table = _expect(raw.get("table"), list, f"{location}.table", "a table of element names")
        return make_group("table", elements=[str(x) for x in elements], table=table)
    if kind not in GROUP_KINDS:
        raise DocumentError(f"unknown group kind {kind!r}", f"{location}.kind")
    return make_group(kind, raw.get("n"))


def _basis_index(raw: Any, names: list[str], index: dict[str, int], location: str) -> int:
    """A basis position given as an integer index or, as an extension, by name."""
    if isinstance(raw, bool):
        raise DocumentError("expected a basis index", location)
    if isinstance(raw, int):
        if not 0 <= raw < len(names):
            raise DocumentError(f"basis index {raw} out of range 0..{len(names) - 1}", location)
        return raw
    if isinstance(raw, str) and raw in index:
        return index[raw]
    raise DocumentError(f"unknown or missing basis element {raw!r}", location)


def parse_algebra(raw: Any, location: str = "algebra") -> LieAlgebra:
    """Brackets are listed for i < j only; [b_j, b_i] follows by antisymmetry."""
    _expect(raw, dict, location, "an algebra object")
    basis = _expect(raw.get("basis"), list, f"{location}.basis", "a list of basis names")
    names = [str(x) for x in basis]
    index = {name: i for i, name in enumerate(names)}
    brackets: dict[tuple[int, int], dict[int, Any]] = {}
    entries = _expect(raw.get("brackets", []), list, f"{location}.brackets", "a list of brackets")
    for b, entry in enumerate(entries):
        where = f"{location}.brackets[{b}]"
        _expect(entry, dict, where, "a bracket object")
        i = _basis_index(entry.get("left"), names, index, f"{where}.left")
        j = _basis_index(entry.get("right"), names, index, f"{where}.right")
        if i >= j:
            raise DocumentError(f"brackets are given for left < right only, got ({i}, {j})", where)
        result: dict[int, Any] = {}
        terms = _expect(entry.get("result", []), list, f"{where}.result", "a list of terms")
        for t, term in enumerate(terms):
            at = f"{where}.result[{t}]"
            _expect(term, dict, at, "a term {\"coeff\", \"basis\"}")
            k = _basis_index(term.get("basis"), names, index, f"{at}.basis")
            result[k] = result.get(k, 0) + parse_scalar(term.get("coeff"), f"{at}.coeff")
        if (i, j) in brackets:
            raise DocumentError(f"bracket [{names[i]}, {names[j]}] given twice", where)
        brackets[(i, j)] = result
    return LieAlgebra.from_brackets(names, brackets, str(raw.get("label", "algebra")))


def parse_grading(raw: Any, algebra: LieAlgebra, location: str = "grading") -> Grading:
    _expect(raw, dict, location, "a grading object")
    if "group" not in raw:
        raise DocumentError("grading needs a 'group'", location)
    group = parse_group(raw["group"], f"{location}.group")
    degrees = _expect(raw.get("degrees"), dict, f"{location}.degrees", "a map from basis names to elements")
    return validate(algebra, group, {str(k): str(v) for k, v in degrees.items()})


def parse_matrix(raw: Any, n: int, location: str) -> Matrix:
    rows = _expect(raw, list, location, f"a {n}x{n} matrix")
    if len(rows) != n:
        raise DocumentError(f"expected {n} rows", location)
    entries = []
    for r, row in enumerate(rows):
        _expect(row, list, f"{location}[{r}]", "a row")
        if len(row) != n:
            raise DocumentError(f"expected {n} entries", f"{location}[{r}]")
        entries.extend(parse_scalar(x, f"{location}[{r}][{c}]") for c, x in enumerate(row))
    return Matrix(n, n, entries)


def parse_family(raw: Any, algebra: LieAlgebra, location: str = "automorphisms") -> ActionFamily:
    _expect(raw, dict, location, "an automorphism family object")
    group = parse_group(raw.get("group"), f"{location}.group")
    maps = _expect(raw.get("maps"), dict, f"{location}.maps", "a map from character names to matrices")
    parsed = {str(name): parse_matrix(m, algebra.dim, f"{location}.maps.{name}") for name, m in maps.items()}
    return family_from_maps(algebra, group, parsed)


def parse_job(raw: Any) -> Job:
    """Parse and validate every part before any analysis runs."""
    _expect(raw, dict, "", "a job object")
    if "algebra" not in raw:
        raise DocumentError("job needs an 'algebra'", "")
    algebra = parse_algebra(raw["algebra"])
    grading = parse_grading(raw["grading"], algebra) if raw.get("grading") is not None else None
    family = parse_family(raw["automorphisms"], algebra) if raw.get("automorphisms") is not None else None
    logger.debug("parsed job: %s, grading %s, family %s", algebra.label, grading is not None, family is not None)
    return Job(algebra, grading, family, raw)


# -------------------- writing --------------------

def algebra_document(algebra: LieAlgebra) -> dict:
    brackets = []
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            result = [
                {"coeff": format_scalar(c), "basis": k}
                for k, c in enumerate(algebra.constants[i][j]) if c
            ]
            if result:
                brackets.append({"left": i, "right": j, "result": result})
    return {"label": algebra.label, "basis": list(algebra.names), "brackets": brackets}


def group_document(group: FiniteGroup) -> Any:
    return group.descriptor


def grading_document(grading: Grading) -> dict:
    return {
        "group": group_document(grading.group),
        "degrees": {name: d.name for name, d in zip(grading.algebra.names, grading.degrees)},
    }


def matrix_document(m: Matrix) -> list:
    return [[format_scalar(x) for x in m.row(i)] for i in range(m.rows)]


def family_document(family: ActionFamily) -> dict:
    return {
        "group": group_document(family.group),
        "maps": {chi.name: matrix_document(family.maps[chi]) for chi in family.dual if chi in family.maps},
    }


def job_document(algebra: LieAlgebra, grading: Optional[Grading] = None,
                 family: Optional[ActionFamily] = None) -> dict:
    doc: dict[str, Any] = {"algebra": algebra_document(algebra)}
    if grading is not None:
        doc["grading"] = grading_document(grading)
    if family is not None:
        doc["automorphisms"] = family_document(family)
    return doc


def dumps(document: Any) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False)
