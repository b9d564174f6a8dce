"""Catalogs of hypersurfaces with expected invariants (JSON, one list of entries)."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InputError
from .invariants import INFINITY, InvariantReport
from .ring import Polynomial, VariableSet, parse_polynomial

# catalog key -> report attribute
EXPECTED_FIELDS = {
    "tau": "tau",
    "ct": "ct",
    "st": "st",
    "mdr": "mdr",
    "def": "def_value",
    "lc": "lc",
    "nodal": "nodal",
    "rigid": "projectively_rigid",
    "num_singularities": "num_singularities",
    "rigidity_dimension": "rigidity_dimension",
    "smooth": "smooth",
    "dims": "dims",
}
_BOOL_FIELDS = {"nodal", "rigid", "smooth"}

DATA_DIR = Path(__file__).with_name("data")


@dataclass
class CatalogEntry:
    name: str
    vars: VariableSet
    polynomial: str
    expected: dict = field(default_factory=dict)
    tags: list[str] = field(default_factory=list)

    def parse(self) -> Polynomial:
        return parse_polynomial(self.polynomial, self.vars)


def _check_expected(name: str, expected: dict) -> None:
    for key, value in expected.items():
        if key not in EXPECTED_FIELDS:
            raise InputError(f"entry {name!r}: unknown expected field {key!r}")
        if key in _BOOL_FIELDS:
            ok = isinstance(value, bool)
        elif key == "dims":
            ok = isinstance(value, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in value)
        elif key == "lc":
            ok = value == INFINITY or (isinstance(value, int) and not isinstance(value, bool))
        else:
            ok = isinstance(value, int) and not isinstance(value, bool)
        if not ok:
            raise InputError(f"entry {name!r}: bad value for expected field {key!r}: {value!r}")


def entry_from_dict(raw, position: int) -> CatalogEntry:
    if not isinstance(raw, dict):
        raise InputError(f"catalog entry {position} is not an object")
    missing = [k for k in ("name", "vars", "polynomial") if k not in raw]
    if missing:
        raise InputError(f"catalog entry {position} lacks {', '.join(missing)}")
    name = raw["name"]
    if not isinstance(name, str) or not isinstance(raw["polynomial"], str):
        raise InputError(f"catalog entry {position}: name and polynomial must be strings")
    try:
        vars_ = VariableSet.parse(raw["vars"])
    except (ValueError, TypeError) as exc:
        raise InputError(f"entry {name!r}: {exc}") from None
    expected = raw.get("expected", {})
    tags = raw.get("tags", [])
    if not isinstance(expected, dict) or not isinstance(tags, list):
        raise InputError(f"entry {name!r}: expected must be an object and tags a list")
    _check_expected(name, expected)
    entry = CatalogEntry(name, vars_, raw["polynomial"], dict(expected), [str(t) for t in tags])
    try:
        f = entry.parse()
    except InputError as exc:
        raise InputError(f"entry {name!r}: {exc}") from None
    if f.is_zero() or not f.is_homogeneous():
        raise InputError(f"entry {name!r}: polynomial is not a nonzero homogeneous form")
    return entry


def load_catalog(path: str | Path) -> list[CatalogEntry]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read catalog: {exc}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"catalog is not valid JSON: {exc}") from None
    if not isinstance(raw, list):
        raise InputError("catalog must be a JSON list of entries")
    return [entry_from_dict(item, k) for k, item in enumerate(raw)]


def shipped_catalog(name: str = "examples") -> list[CatalogEntry]:
    """``examples`` (all fast fixtures) or ``octics`` (the slow degree-8 surfaces)."""
    return load_catalog(DATA_DIR / f"{name}.json")


def compare(entry: CatalogEntry, report: InvariantReport) -> list[str]:
    """Mismatches between expected fields and the report; empty means pass.

    ``dims`` is compared as a prefix, so listings truncated at the stable
    value still match.
    """
    problems = []
    for key, want in entry.expected.items():
        got = getattr(report, EXPECTED_FIELDS[key])
        if key == "dims":
            got = list(got[: len(want)])
        if got != want or (key in _BOOL_FIELDS and not isinstance(got, bool)):
            problems.append(f"{key} expected {want!r}, got {got!r}")
    return problems
