"""Algebra files: strict JSON with rational strings.

    {
      "name": "paper_L",
      "kind": "hom_leibniz",
      "dim": 2,
      "field": "rational",
      "product": [[["0", "0"], ["0", "0"]], [["0", "0"], ["1", "0"]]],
      "twist": [["1", "1"], ["0", "1"]]
    }

product[i][j][k] is the coefficient of e_(k+1) in the product e_(i+1) e_(j+1).
twist is the matrix of the twist acting on column vectors, listed by rows, so
column j holds the image of e_(j+1).  Every number is a string matching

    [+-]?(0|[1-9][0-9]*)(/[1-9][0-9]*)?

with no whitespace.  JSON numbers (integers included) are rejected so that no
float can slip in.  ``builtin:NAME`` names a fixture and never touches the disk.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .algebra import KINDS, AlgebraSpec, AxiomReport, check_kind, check_multiplicative, check_commutative
from .fixtures import BUILTINS, builtin
from .linalg import Matrix

KEYS = ("name", "kind", "dim", "field", "product", "twist")
RATIONAL = re.compile(r"[+-]?(0|[1-9][0-9]*)(/[1-9][0-9]*)?")
BUILTIN_PREFIX = "builtin:"


class InputError(ValueError):
    """Malformed or unreadable algebra input."""


@dataclass(frozen=True)
class AlgebraFile:
    """A parsed file: the declared kind and the algebra itself, loaded untyped."""

    name: str
    kind: str
    spec: AlgebraSpec

    def verify(self) -> list[AxiomReport]:
        """Axiom reports for the declared kind, plus the extra conditions the tools rely on."""
        reports = [check_kind(self.spec, self.kind)]
        if self.kind == "hom_leibniz":
            reports.append(check_multiplicative(self.spec))
        if self.kind == "hom_associative":
            reports.append(check_commutative(self.spec))
        return reports

    def typed(self) -> AlgebraSpec:
        """The spec re-typed with its declared kind; raises AxiomError if the axioms fail."""
        return AlgebraSpec(self.spec.dim, self.spec.product, self.spec.twist, self.kind, self.name)


def parse_rational(text, where: str) -> Fraction:
    if not isinstance(text, str):
        raise InputError(f"{where}: expected a rational string, got {type(text).__name__} {text!r}")
    if not RATIONAL.fullmatch(text):
        raise InputError(f"{where}: {text!r} is not a rational string")
    return Fraction(text)


def format_rational(c: Fraction) -> str:
    return str(Fraction(c))


def _nested(value, shape: tuple[int, ...], where: str):
    if not shape:
        return parse_rational(value, where)
    if not isinstance(value, list) or len(value) != shape[0]:
        got = len(value) if isinstance(value, list) else type(value).__name__
        raise InputError(f"{where}: expected a list of length {shape[0]}, got {got}")
    return [_nested(v, shape[1:], f"{where}[{i}]") for i, v in enumerate(value)]


def _reject_constant(token: str):
    raise InputError(f"non-finite number {token} is not allowed")


def parse_algebra(text: str) -> AlgebraFile:
    try:
        obj = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise InputError("top level must be a JSON object")
    unknown = sorted(set(obj) - set(KEYS))
    if unknown:
        raise InputError(f"unknown keys: {', '.join(unknown)}")
    missing = [k for k in KEYS if k not in obj]
    if missing:
        raise InputError(f"missing keys: {', '.join(missing)}")
    name, kind, dim, fld = obj["name"], obj["kind"], obj["dim"], obj["field"]
    if not isinstance(name, str):
        raise InputError("name must be a string")
    if kind not in KINDS:
        raise InputError(f"kind must be one of {', '.join(KINDS)}, got {kind!r}")
    if fld != "rational":
        raise InputError(f"field must be \"rational\", got {fld!r}")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise InputError(f"dim must be a positive integer, got {dim!r}")
    product = _nested(obj["product"], (dim, dim, dim), "product")
    twist = _nested(obj["twist"], (dim, dim), "twist")
    spec = AlgebraSpec(dim, tuple(tuple(tuple(c) for c in row) for row in product),
                       Matrix.from_rows(twist), "untyped", name)
    return AlgebraFile(name, kind, spec)


def serialize_algebra(spec: AlgebraSpec, kind: str | None = None, name: str | None = None) -> str:
    """Canonical text: fixed key order, two-space indent, one product row per line."""
    kind = kind or spec.kind
    name = spec.name if name is None else name
    dump = json.dumps
    rows = [dump([[format_rational(c) for c in out] for out in row]) for row in spec.product]
    twist = [dump([format_rational(c) for c in row]) for row in spec.twist.to_rows()]
    lines = [
        "{",
        f'  "name": {dump(name)},',
        f'  "kind": {dump(kind)},',
        f'  "dim": {spec.dim},',
        '  "field": "rational",',
        '  "product": [',
        ",\n".join(f"    {r}" for r in rows),
        "  ],",
        '  "twist": [',
        ",\n".join(f"    {r}" for r in twist),
        "  ]",
        "}",
    ]
    return "\n".join(lines) + "\n"


def load_algebra(source: str) -> AlgebraFile:
    """Read ``builtin:NAME`` or a path to an algebra file."""
    if source.startswith(BUILTIN_PREFIX):
        key = source[len(BUILTIN_PREFIX):]
        if key not in BUILTINS:
            raise InputError(f"unknown builtin {key!r}; known: {', '.join(sorted(BUILTINS))}")
        spec = builtin(key)
        return AlgebraFile(spec.name or key, spec.kind,
                           AlgebraSpec(spec.dim, spec.product, spec.twist, "untyped", spec.name or key))
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror or exc}") from None
    return parse_algebra(text)
