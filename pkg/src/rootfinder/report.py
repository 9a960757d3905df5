"""
Root Report Module
Lagroot - Certified Polynomial Root Finding

RootReport data model with its JSON form (validated against a versioned
JSON schema) and an aligned text form with sign-magnitude binary digits.
Floors are kept as signed integers; JSON carries them as decimal strings.
"""

import json
import re
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from jsonschema import Draft7Validator
from jsonschema.exceptions import ValidationError

from ..arithmetic import GaussianRational, format_gaussian, parse_gaussian
from ..utils.config import get_config
from ..utils.errors import ParseError


def schema_tag() -> str:
    return str(get_config().cli.get('schema', 'lagroot/1'))


REPORT_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["schema", "unit", "t", "roots"],
    "properties": {
        "schema": {"type": "string"},
        "unit": {"type": "string", "minLength": 1},
        "t": {"type": "integer", "minimum": 0},
        "roots": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "re_floor", "im_floor", "multiplicity"],
                "properties": {
                    "id": {"type": "integer", "minimum": 0},
                    "re_floor": {"type": "string", "pattern": r"^-?\d+$"},
                    "im_floor": {"type": "string", "pattern": r"^-?\d+$"},
                    "multiplicity": {"type": "integer", "minimum": 1},
                },
            },
        },
    },
}


@dataclass(frozen=True)
class RootEntry:
    root_id: int
    re_floor: int
    im_floor: int
    multiplicity: int


@dataclass(frozen=True)
class RootReport:
    """f = unit * prod (z - a_j)^e_j with exact t-digit floors of every a_j."""

    unit: GaussianRational
    t: int
    roots: Tuple[RootEntry, ...]

    @property
    def degree(self) -> int:
        return sum(entry.multiplicity for entry in self.roots)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": schema_tag(),
            "unit": format_gaussian(self.unit),
            "t": self.t,
            "roots": [
                {
                    "id": entry.root_id,
                    "re_floor": str(entry.re_floor),
                    "im_floor": str(entry.im_floor),
                    "multiplicity": entry.multiplicity,
                }
                for entry in self.roots
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RootReport":
        """
        Raises:
            ParseError: if data does not match REPORT_SCHEMA or carries another schema tag
        """
        try:
            Draft7Validator(REPORT_SCHEMA).validate(data)
        except ValidationError as exc:
            raise ParseError(f"invalid root report: {exc.message}") from exc
        if data["schema"] != schema_tag():
            raise ParseError(f"unsupported report schema {data['schema']!r}")
        roots = tuple(
            RootEntry(item["id"], int(item["re_floor"]), int(item["im_floor"]), item["multiplicity"])
            for item in data["roots"]
        )
        return cls(unit=parse_gaussian(data["unit"]), t=data["t"], roots=roots)

    @classmethod
    def from_json(cls, text: str) -> "RootReport":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid report JSON: {exc}") from exc
        return cls.from_dict(data)


def format_binary(n: int, t: int) -> str:
    """Sign-magnitude binary for n * 2^-t, with exactly t fractional digits."""
    magnitude = abs(n)
    sign = "-" if n < 0 else ""
    if t <= 0:
        return f"{sign}{bin(magnitude << -t)[2:]}"
    whole, fraction = magnitude >> t, magnitude & ((1 << t) - 1)
    return f"{sign}{bin(whole)[2:]}.{fraction:0{t}b}"


_BINARY = re.compile(r"^(-?)([01]+)(?:\.([01]*))?$")


def parse_binary(text: str, t: int) -> int:
    """Inverse of format_binary: the integer n with text = n * 2^-t."""
    match = _BINARY.match(text.strip())
    if match is None:
        raise ParseError(f"not a binary numeral: {text!r}")
    sign, whole, fraction = match.groups()
    fraction = fraction or ""
    if t > 0 and len(fraction) != t:
        raise ParseError(f"expected {t} fractional digits in {text!r}")
    if t <= 0:
        value = int(whole, 2) >> -t
    else:
        value = (int(whole, 2) << t) + int(fraction, 2)
    return -value if sign else value


def render_text(report: RootReport) -> str:
    """Aligned table: one row per root with its multiplicity and binary expansions."""
    header = ["id", "mult", "re", "im"]
    rows: List[List[str]] = [
        [str(e.root_id), str(e.multiplicity), format_binary(e.re_floor, report.t), format_binary(e.im_floor, report.t)]
        for e in report.roots
    ]
    widths = [max(len(row[col]) for row in [header] + rows) for col in range(len(header))]
    lines = [
        f"schema: {schema_tag()}",
        f"unit: {format_gaussian(report.unit)}",
        f"t: {report.t}",
        "  ".join(cell.ljust(width) for cell, width in zip(header, widths)).rstrip(),
    ]
    for row in rows:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> RootReport:
    """Inverse of render_text."""
    lines = [line for line in text.splitlines() if line.strip()]
    fields: Dict[str, str] = {}
    body_start = 0
    for idx, line in enumerate(lines):
        key, sep, value = line.partition(":")
        if not sep or key.strip() not in ("schema", "unit", "t"):
            body_start = idx
            break
        fields[key.strip()] = value.strip()
    else:
        body_start = len(lines)
    if set(fields) != {"schema", "unit", "t"}:
        raise ParseError("report text is missing its schema, unit or t header")
    if fields["schema"] != schema_tag():
        raise ParseError(f"unsupported report schema {fields['schema']!r}")
    try:
        t = int(fields["t"])
    except ValueError as exc:
        raise ParseError(f"invalid precision {fields['t']!r}") from exc

    entries = []
    for line in lines[body_start + 1:]:
        cells = line.split()
        if len(cells) != 4:
            raise ParseError(f"malformed report row {line!r}")
        try:
            root_id, multiplicity = int(cells[0]), int(cells[1])
        except ValueError as exc:
            raise ParseError(f"malformed report row {line!r}") from exc
        entries.append(RootEntry(root_id, parse_binary(cells[2], t), parse_binary(cells[3], t), multiplicity))
    return RootReport(unit=parse_gaussian(fields["unit"]), t=t, roots=tuple(entries))
