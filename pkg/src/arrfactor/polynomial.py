"""Dense univariate polynomials with integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    """Integer polynomial, coefficients in ascending degree.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = tuple(coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"IntPoly coefficients must be int, got {type(c).__name__}")
        self.coeffs = _trim(coeffs)

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading() == 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __add__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        result = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod_monic(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Quotient and remainder by a monic divisor (stays integral)."""
        if not divisor.is_monic():
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        if len(rem) - 1 < d:
            return IntPoly(), IntPoly(rem)
        quot = [0] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c:
                quot[k - d] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[k - d + j] -= c * b
        return IntPoly(quot), IntPoly(rem[:d])

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.format("t")

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def linear_factor_product(roots: Iterable[int]) -> IntPoly:
    """prod (1 + b t) over the given b."""
    p = IntPoly((1,))
    for b in roots:
        p = p * IntPoly((1, b))
    return p


def integer_root_multiset(p: IntPoly) -> list[int] | None:
    """Split ``p`` as prod (1 + b_i t) with integers b_i >= 0.

    Returns the sorted list of the b_i (one per degree), or None when no such
    factorization exists. Zero factors are invisible (1 + 0t = 1), so the list
    has exactly ``p.degree`` entries, all positive.
    """
    if not p.coeffs or p[0] != 1:
        return None
    coeffs = list(p.coeffs)
    roots = []
    while len(coeffs) > 1:
        lead = coeffs[-1]
        d = len(coeffs) - 1
        found = None
        # b must divide the leading coefficient, and (1 + b t) | p iff p(-1/b) = 0
        for b in _positive_divisors(abs(lead)):
            value = sum(c * (-1) ** k * b ** (d - k) for k, c in enumerate(coeffs))
            if value == 0:
                found = b
                break
        if found is None:
            return None
        roots.append(found)
        # synthetic division by (1 + b t), from the constant term upwards
        quot = []
        carry = 0
        for c in coeffs[:-1]:
            q = c - found * carry
            quot.append(q)
            carry = q
        if coeffs[-1] != found * carry:
            return None
        coeffs = quot
    return sorted(roots)


def _positive_divisors(m: int) -> list[int]:
    if m == 0:
        return []
    small, large = [], []
    k = 1
    while k * k <= m:
        if m % k == 0:
            small.append(k)
            if k != m // k:
                large.append(m // k)
        k += 1
    return small + large[::-1]


def rational_value(p: IntPoly, t: Fraction) -> Fraction:
    return p(Fraction(t))
