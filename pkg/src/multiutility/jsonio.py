"""JSON schemas for datasets, cones, representations and certificates.

Rationals serialize as strings "num/den", or "num" when the denominator is
one; integers are accepted on input, floats are rejected outright (an exact
engine must not guess what 0.1 meant).  Measures serialize sparsely as
label-to-rational maps, utilities densely as arrays aligned with the
declared outcome order, cone generators as integer arrays.  Parse errors
carry the JSON path to the offending element.
"""
from __future__ import annotations

import json
import sys
from fractions import Fraction
from typing import Any

from .cones import MembershipCertificate, PolyhedralCone
from .measures import (
    Lottery,
    Measure,
    NotLotteryError,
    OutcomeSpace,
    Utility,
)
from .preferences import MonotoneStructure, PreferenceDataset, QueryVerdict, Representation


class SchemaError(ValueError):
    """Input does not match the expected schema.

    ``path`` locates the offending element ("prefers[2].p.win"); ``line``
    and ``column`` are set for JSON syntax errors.
    """

    def __init__(self, message: str, path: str = "", line: int | None = None, column: int | None = None):
        super().__init__(message if not path else f"{path}: {message}")
        self.message = message
        self.path = path
        self.line = line
        self.column = column


def rational_to_str(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(value: Any, path: str = "") -> Fraction:
    if isinstance(value, bool):
        raise SchemaError(f"expected a rational, got {value!r}", path)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise SchemaError(f"floats are not accepted, write {value!r} as a 'num/den' string", path)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad rational string {value!r}: {exc}", path) from None
    raise SchemaError(f"expected a rational, got {type(value).__name__}", path)


def load_json(path: str) -> Any:
    """Read one JSON document from a file, or from stdin when path is '-'."""
    try:
        if path == "-":
            return json.loads(sys.stdin.read())
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror or exc}", path="") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(
            f"invalid JSON in {path}: {exc.msg}", path="", line=exc.lineno, column=exc.colno
        ) from None


def dump_json(obj: Any) -> str:
    """Canonical serialization: two-space indent, fixed key order, newline."""
    return json.dumps(obj, indent=2) + "\n"


def _expect_dict(obj: Any, path: str) -> dict:
    if not isinstance(obj, dict):
        raise SchemaError(f"expected an object, got {type(obj).__name__}", path)
    return obj


def _expect_list(obj: Any, path: str) -> list:
    if not isinstance(obj, list):
        raise SchemaError(f"expected an array, got {type(obj).__name__}", path)
    return obj


# -- outcome spaces and measures ----------------------------------------------


def parse_space(obj: Any, path: str = "outcomes") -> OutcomeSpace:
    labels = _expect_list(obj, path)
    for i, z in enumerate(labels):
        if not isinstance(z, str):
            raise SchemaError(f"outcome label must be a string, got {z!r}", f"{path}[{i}]")
    try:
        return OutcomeSpace(labels)
    except ValueError as exc:
        raise SchemaError(str(exc), path) from None


def parse_measure(obj: Any, space: OutcomeSpace, path: str) -> Measure:
    mapping = _expect_dict(obj, path)
    entries = {}
    for label, raw in mapping.items():
        if label not in space:
            raise SchemaError(f"unknown outcome {label!r}", f"{path}.{label}")
        entries[label] = parse_rational(raw, f"{path}.{label}")
    return Measure.from_mapping(space, entries)


def parse_lottery(obj: Any, space: OutcomeSpace, path: str) -> Lottery:
    m = parse_measure(obj, space, path)
    try:
        return Lottery(m)
    except NotLotteryError as exc:
        raise SchemaError(str(exc), path) from None


def measure_to_json(m: Measure | Lottery) -> dict:
    mm = m.measure if isinstance(m, Lottery) else m
    return {z: rational_to_str(mm.value(z)) for z in sorted(mm.support())}


def parse_utility(obj: Any, space: OutcomeSpace, path: str) -> Utility:
    values = _expect_list(obj, path)
    if len(values) != len(space):
        raise SchemaError(f"expected {len(space)} entries, got {len(values)}", path)
    return Utility(space, [parse_rational(v, f"{path}[{i}]") for i, v in enumerate(values)])


def utility_to_json(u: Utility) -> list[str]:
    return [rational_to_str(v) for v in u.values]


# -- datasets -------------------------------------------------------------------


def parse_dataset(obj: Any) -> tuple[PreferenceDataset, MonotoneStructure | None]:
    root = _expect_dict(obj, "")
    if "outcomes" not in root:
        raise SchemaError("missing key", "outcomes")
    space = parse_space(root["outcomes"])
    statements = []
    for i, item in enumerate(_expect_list(root.get("prefers", []), "prefers")):
        entry = _expect_dict(item, f"prefers[{i}]")
        for key in ("p", "q"):
            if key not in entry:
                raise SchemaError("missing key", f"prefers[{i}].{key}")
        p = parse_lottery(entry["p"], space, f"prefers[{i}].p")
        q = parse_lottery(entry["q"], space, f"prefers[{i}].q")
        statements.append((p, q))
    dataset = PreferenceDataset(space, tuple(statements))
    ranking = None
    if "monotone" in root:
        pairs = []
        for i, item in enumerate(_expect_list(root["monotone"], "monotone")):
            pair = _expect_list(item, f"monotone[{i}]")
            if len(pair) != 2 or not all(isinstance(z, str) for z in pair):
                raise SchemaError("expected a pair of outcome labels", f"monotone[{i}]")
            for z in pair:
                if z not in space:
                    raise SchemaError(f"unknown outcome {z!r}", f"monotone[{i}]")
            pairs.append((pair[0], pair[1]))
        ranking = MonotoneStructure(space, tuple(pairs))
    return dataset, ranking


def parse_query_pair(obj: Any, space: OutcomeSpace, path: str = "") -> tuple[Lottery, Lottery]:
    entry = _expect_dict(obj, path)
    for key in ("p", "q"):
        if key not in entry:
            raise SchemaError("missing key", f"{path}.{key}" if path else key)
    prefix = f"{path}." if path else ""
    return (
        parse_lottery(entry["p"], space, f"{prefix}p"),
        parse_lottery(entry["q"], space, f"{prefix}q"),
    )


def parse_utility_set(obj: Any) -> tuple[OutcomeSpace, list[Utility]]:
    root = _expect_dict(obj, "")
    if "outcomes" not in root:
        raise SchemaError("missing key", "outcomes")
    space = parse_space(root["outcomes"])
    if "utilities" not in root:
        raise SchemaError("missing key", "utilities")
    items = _expect_list(root["utilities"], "utilities")
    if not items:
        raise SchemaError("utility set must be nonempty", "utilities")
    return space, [parse_utility(u, space, f"utilities[{i}]") for i, u in enumerate(items)]


# -- cones, representations, verdicts -------------------------------------------


def cone_to_json(cone: PolyhedralCone) -> dict:
    return {
        "dim": cone.dim,
        "generators": [list(r) for r in cone.rays],
        "lineality": [list(l) for l in cone.lineality],
    }


def parse_cone(obj: Any, path: str = "cone") -> PolyhedralCone:
    root = _expect_dict(obj, path)
    if "dim" not in root:
        raise SchemaError("missing key", f"{path}.dim")
    dim = root["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise SchemaError(f"dim must be a positive integer, got {dim!r}", f"{path}.dim")

    def rows(key: str) -> list[tuple[int, ...]]:
        out = []
        for i, row in enumerate(_expect_list(root.get(key, []), f"{path}.{key}")):
            vec = _expect_list(row, f"{path}.{key}[{i}]")
            ints = []
            for j, v in enumerate(vec):
                if not isinstance(v, int) or isinstance(v, bool):
                    raise SchemaError(f"expected an integer, got {v!r}", f"{path}.{key}[{i}][{j}]")
                ints.append(v)
            if len(ints) != dim:
                raise SchemaError(f"expected {dim} entries, got {len(ints)}", f"{path}.{key}[{i}]")
            out.append(tuple(ints))
        return out

    return PolyhedralCone(dim, rows("generators"), rows("lineality"))


def representation_to_json(rep: Representation) -> dict:
    return {
        "utilities": [utility_to_json(u) for u in rep.utilities],
        "cone": cone_to_json(rep.cone),
        "pin": rep.pin,
    }


def certificate_to_json(cert: MembershipCertificate) -> dict:
    if cert.verdict == "IN":
        return {
            "verdict": "IN",
            "combination": [[i, rational_to_str(c)] for i, c in cert.combination],
        }
    return {"verdict": "OUT", "separator": list(cert.separator)}


def verdict_to_json(v: QueryVerdict) -> dict:
    return {
        "classification": v.classification,
        "forward": certificate_to_json(v.forward),
        "backward": certificate_to_json(v.backward),
    }
