"""Parse printed linear forms such as ``3x - 2(w^4 + w^2 + w)z`` or ``u + iy - iz``.

Juxtaposition is multiplication and every letter is its own symbol, so ``iy``
reads as ``i * y``. ``w`` is the canonical primitive root of unity of the
ambient conductor; ``i`` is the canonical 4th root (conductor 4 only).
"""

from __future__ import annotations

import re

from ..exactfield import CycNum

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(.))")


class LinearFormError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        if m.group(1):
            out.append(("int", m.group(1)))
        elif m.group(2):
            out.append(("sym", m.group(2)))
        elif m.group(3) and not m.group(3).isspace():
            if m.group(3) not in "+-()^*":
                raise LinearFormError(f"unexpected character {m.group(3)!r} in {text!r}")
            out.append(("op", m.group(3)))
    return out


class _Form:
    """Affine form: scalar part plus coefficients on the coordinate variables."""

    def __init__(self, const: CycNum, coeffs: dict[str, CycNum] | None = None):
        self.const = const
        self.coeffs = coeffs or {}

    def is_scalar(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "_Form") -> "_Form":
        coeffs = dict(self.coeffs)
        for v, c in other.coeffs.items():
            coeffs[v] = coeffs[v] + c if v in coeffs else c
        return _Form(self.const + other.const, coeffs)

    def __neg__(self) -> "_Form":
        return _Form(-self.const, {v: -c for v, c in self.coeffs.items()})

    def __mul__(self, other: "_Form") -> "_Form":
        if not self.is_scalar() and not other.is_scalar():
            raise LinearFormError("product of two non-constant forms is not linear")
        if other.is_scalar():
            s, f = other.const, self
        else:
            s, f = self.const, other
        return _Form(f.const * s, {v: c * s for v, c in f.coeffs.items()})


class _Parser:
    def __init__(self, text: str, variables: str, conductor: int):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = variables
        self.n = conductor

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expr(self) -> _Form:
        kind, val = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + (-t if val == "-" else t)
            else:
                return acc

    def term(self) -> _Form:
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind in ("int", "sym") or (kind == "op" and val == "("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> _Form:
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise LinearFormError(f"exponent must be an integer in {self.text!r}")
            if not base.is_scalar():
                raise LinearFormError(f"power of a coordinate in {self.text!r}")
            base = _Form(base.const ** int(val))
        return base

    def atom(self) -> _Form:
        kind, val = self.take()
        zero = CycNum.zero(self.n)
        if kind == "int":
            return _Form(CycNum.rational(int(val), self.n))
        if kind == "sym":
            if val in self.variables:
                return _Form(zero, {val: CycNum.one(self.n)})
            if val == "w":
                return _Form(CycNum.zeta(self.n))
            if val == "i":
                if self.n % 4:
                    raise LinearFormError("'i' needs a conductor divisible by 4")
                return _Form(CycNum.zeta(self.n, self.n // 4))
            raise LinearFormError(f"unknown symbol {val!r} in {self.text!r}")
        if kind == "op" and val == "(":
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise LinearFormError(f"unbalanced parentheses in {self.text!r}")
            return inner
        raise LinearFormError(f"unexpected token {val!r} in {self.text!r}")


def parse_linear_form(text: str, variables: str, conductor: int) -> tuple[CycNum, ...]:
    """Coefficient vector of a homogeneous linear form in the given variables."""
    p = _Parser(text, variables, conductor)
    form = p.expr()
    if p.pos != len(p.tokens):
        raise LinearFormError(f"trailing input in {text!r}")
    if not form.const.is_zero():
        raise LinearFormError(f"{text!r} is not homogeneous")
    zero = CycNum.zero(conductor)
    return tuple(form.coeffs.get(v, zero) for v in variables)
