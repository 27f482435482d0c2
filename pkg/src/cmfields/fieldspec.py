"""Text mini-grammar for naming abelian fields on the command line and in
JSON output:

    zeta:<m>                          cyclotomic field
    quad:<d>                          quadratic field, fundamental discriminant d
    chars:f=<m>:e=<e1,..>(+f=..)*     field generated by encoded characters
    <spec>*<spec>                     compositum

Whitespace-free; parse errors carry byte offsets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import DirichletCharacter
from .errors import ParseError
from .fields import (
    AbelianField,
    DEFAULT_MAX_DEGREE,
    cyclotomic_field,
    field_from_generators,
    quadratic_field,
)


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "zeta" | "quad" | "chars" | "compositum"
    raw: str
    payload: tuple

    def build(self, max_degree: int = DEFAULT_MAX_DEGREE) -> AbelianField:
        if self.kind == "zeta":
            return cyclotomic_field(self.payload[0], max_degree=max_degree)
        if self.kind == "quad":
            return quadratic_field(self.payload[0])
        if self.kind == "chars":
            gens = [DirichletCharacter(m, e) for m, e in self.payload]
            return field_from_generators(gens, max_degree=max_degree)
        left, right = self.payload
        return left.build(max_degree).compositum(
            right.build(max_degree), max_degree=max_degree
        )

    def __str__(self) -> str:
        return self.raw


def parse_field_spec(text: str) -> FieldSpec:
    spec, pos = _parse_one(text, 0)
    while pos < len(text):
        if text[pos] != "*":
            raise ParseError(text, pos, "'*' or end of input")
        right, newpos = _parse_one(text, pos + 1)
        spec = FieldSpec("compositum", text[: newpos], (spec, right))
        pos = newpos
    return spec


def _parse_one(text: str, pos: int) -> tuple[FieldSpec, int]:
    rest = text[pos:]
    if rest.startswith("zeta:"):
        value, end = _parse_int(text, pos + 5)
        if value < 1:
            raise ParseError(text, pos + 5, "positive integer")
        return FieldSpec("zeta", text[pos:end], (value,)), end
    if rest.startswith("quad:"):
        value, end = _parse_int(text, pos + 5)
        return FieldSpec("quad", text[pos:end], (value,)), end
    if rest.startswith("chars:"):
        return _parse_chars(text, pos + 6, pos)
    raise ParseError(text, pos, "'zeta:', 'quad:' or 'chars:'")


def _parse_int(text: str, pos: int) -> tuple[int, int]:
    end = pos
    if end < len(text) and text[end] == "-":
        end += 1
    while end < len(text) and text[end].isdigit():
        end += 1
    if end == pos or text[pos:end] == "-":
        raise ParseError(text, pos, "integer")
    return int(text[pos:end]), end


def _parse_chars(text: str, pos: int, start: int) -> tuple[FieldSpec, int]:
    gens = []
    while True:
        if not text[pos:].startswith("f="):
            raise ParseError(text, pos, "'f='")
        modulus, pos = _parse_int(text, pos + 2)
        if not text[pos:].startswith(":e="):
            raise ParseError(text, pos, "':e='")
        pos += 3
        exps = []
        if pos < len(text) and text[pos].isdigit():
            while True:
                value, pos = _parse_int(text, pos)
                exps.append(value)
                if pos < len(text) and text[pos] == ",":
                    pos += 1
                else:
                    break
        gens.append((modulus, tuple(exps)))
        if pos < len(text) and text[pos] == "+":
            pos += 1
        else:
            break
    return FieldSpec("chars", text[start:pos], tuple(gens)), pos
