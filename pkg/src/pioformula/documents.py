"""JSON documents read and written by the command line.

Exact numbers are always strings: integers in decimal, rationals as
``"num/den"``. Output is canonical (fixed key order, two-space indent,
trailing newline), so parsing a document and writing it again is
byte-identical.
"""
import json
from dataclasses import dataclass
from fractions import Fraction

from .classifier import Kind
from .errors import SpecError
from .recurrence import RecurrenceSpec

FORMAT_VERSION = 1


def _parse_int(value, field):
    if isinstance(value, bool):
        raise SpecError(f"{field}: expected an integer, got {value!r}", field=field)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        text = value.strip()
        body = text[1:] if text[:1] in "+-" else text
        if body.isdigit() and body.isascii():
            return int(text)
    raise SpecError(f"{field}: expected a decimal integer string, got {value!r}", field=field)


def _parse_rational(value, field):
    if not isinstance(value, str):
        raise SpecError(f"{field}: expected a rational string, got {value!r}", field=field)
    num, _, den = value.partition("/")
    q = Fraction(_parse_int(num, field), _parse_int(den, field) if den else 1)
    if str(q) != value:
        raise SpecError(f"{field}: {value!r} is not in lowest terms", field=field)
    return q


def _int_list(raw, field, length=None):
    if not isinstance(raw, list):
        raise SpecError(f"{field}: expected a list", field=field)
    vals = [_parse_int(v, f"{field}[{i}]") for i, v in enumerate(raw)]
    if length is not None and len(vals) != length:
        raise SpecError(f"{field}: expected {length} entries, got {len(vals)}", field=field)
    return vals


def _load(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"input is not valid JSON: {exc}", field="document") from exc
    if not isinstance(data, dict):
        raise SpecError("input must be a JSON object", field="document")
    return data


def spec_from_dict(data, prefix=""):
    for key in ("k", "coeffs", "initial"):
        if key not in data:
            raise SpecError(f"missing field {prefix}{key}", field=prefix + key)
    k = _parse_int(data["k"], prefix + "k")
    if k < 0:
        raise SpecError(f"{prefix}k must be nonnegative", field=prefix + "k")
    coeffs = _int_list(data["coeffs"], prefix + "coeffs", k)
    initial = _int_list(data["initial"], prefix + "initial", k)
    if k and coeffs[0] == 0:
        raise SpecError(f"{prefix}coeffs[0] (a_0) must be nonzero", field=prefix + "coeffs")
    return RecurrenceSpec(tuple(coeffs), tuple(initial))


def parse_spec(text):
    """Read a spec document: ``{"k": .., "coeffs": [a_0, ..], "initial": [f(1), ..]}``."""
    return spec_from_dict(_load(text))


def spec_to_dict(spec):
    return {
        "k": spec.order,
        "coeffs": [str(a) for a in spec.coeffs],
        "initial": [str(v) for v in spec.initial],
    }


def dump_spec(spec):
    return json.dumps(spec_to_dict(spec), indent=2) + "\n"


@dataclass(frozen=True)
class ClassRecord:
    residue: int
    kind: str
    poly_coeffs: tuple = None
    section_order: int = None
    section_coeffs: tuple = None

    def to_dict(self):
        out = {"residue": self.residue, "kind": self.kind}
        if self.kind == Kind.POLYNOMIAL.value:
            out["poly_coeffs"] = [str(c) for c in self.poly_coeffs]
        else:
            out["section_order"] = self.section_order
            out["section_coeffs"] = [str(c) for c in self.section_coeffs]
        return out


@dataclass(frozen=True)
class AnalysisDocument:
    spec: RecurrenceSpec
    minimal_order: int
    minimal_coeffs: tuple
    m: int
    X: tuple
    classes: tuple

    @classmethod
    def from_classification(cls, c):
        records = []
        for info in c.classes:
            if info.kind is Kind.POLYNOMIAL:
                records.append(ClassRecord(info.residue, info.kind.value, poly_coeffs=tuple(info.poly.coeffs)))
            else:
                sec = info.section_spec
                records.append(
                    ClassRecord(info.residue, info.kind.value, section_order=sec.order, section_coeffs=sec.coeffs)
                )
        mspec = c.minimal.spec
        return cls(c.spec, mspec.order, mspec.coeffs, c.m, c.X, tuple(records))

    def to_dict(self):
        return {
            "format_version": FORMAT_VERSION,
            "spec": spec_to_dict(self.spec),
            "minimal_order": self.minimal_order,
            "minimal_coeffs": [str(a) for a in self.minimal_coeffs],
            "m": self.m,
            "X": list(self.X),
            "classes": [r.to_dict() for r in self.classes],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text):
        data = _load(text)
        version = data.get("format_version")
        if version != FORMAT_VERSION:
            raise SpecError(f"unsupported format_version {version!r}", field="format_version")
        if not isinstance(data.get("spec"), dict):
            raise SpecError("missing field spec", field="spec")
        spec = spec_from_dict(data["spec"], prefix="spec.")
        records = []
        for i, raw in enumerate(data.get("classes", [])):
            where = f"classes[{i}]"
            kind = raw.get("kind")
            residue = _parse_int(raw.get("residue"), where + ".residue")
            if kind == Kind.POLYNOMIAL.value:
                coeffs = tuple(
                    _parse_rational(v, f"{where}.poly_coeffs[{t}]") for t, v in enumerate(raw.get("poly_coeffs", []))
                )
                records.append(ClassRecord(residue, kind, poly_coeffs=coeffs))
            elif kind == Kind.EXPONENTIAL.value:
                order = _parse_int(raw.get("section_order"), where + ".section_order")
                coeffs = tuple(_int_list(raw.get("section_coeffs"), where + ".section_coeffs", order))
                records.append(ClassRecord(residue, kind, section_order=order, section_coeffs=coeffs))
            else:
                raise SpecError(f"{where}.kind: unknown kind {kind!r}", field=where + ".kind")
        minimal_order = _parse_int(data.get("minimal_order"), "minimal_order")
        return cls(
            spec,
            minimal_order,
            tuple(_int_list(data.get("minimal_coeffs"), "minimal_coeffs", minimal_order)),
            _parse_int(data.get("m"), "m"),
            tuple(_int_list(data.get("X"), "X")),
            tuple(records),
        )
