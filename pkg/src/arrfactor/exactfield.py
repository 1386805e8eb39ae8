"""Exact arithmetic in cyclotomic fields Q(zeta_n) and exact linear algebra over them.

An element is stored on the power basis 1, z, ..., z^(phi(n)-1) modulo the
n-th cyclotomic polynomial, as integer numerators over one positive common
denominator in lowest terms. That makes equality a tuple comparison.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .polynomial import IntPoly


class ConductorMismatch(ValueError):
    pass


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPoly:
    """Phi_n, as x^n - 1 divided by Phi_d for every proper divisor d of n."""
    if n < 1:
        raise ValueError("n must be positive")
    p = IntPoly.monomial(n) - 1
    for d in _divisors(n)[:-1]:
        p, rem = p.divmod_monic(cyclotomic_poly(d))
        assert not rem.coeffs
    return p


def totient(n: int) -> int:
    return cyclotomic_poly(n).degree


class _FieldData:
    """Per-conductor tables: x^k mod Phi_n for the multiplication overflow range
    and the reduced representatives of z^k, 0 <= k < n."""

    def __init__(self, n: int):
        self.n = n
        self.modulus = cyclotomic_poly(n)
        self.phi = phi = self.modulus.degree
        # reduction of x^k for phi <= k <= 2*phi - 2
        red = {}
        cur = [-c for c in self.modulus.coeffs[:phi]]  # x^phi
        for k in range(phi, max(2 * phi - 1, phi + 1)):
            red[k] = tuple(cur)
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(phi):
                    cur[j] -= top * self.modulus.coeffs[j]
        self.red = red
        powers = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(n):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(phi):
                    cur[j] -= top * self.modulus.coeffs[j]
        self.powers = powers

    def reduce(self, conv: Sequence[int]) -> list[int]:
        phi = self.phi
        out = list(conv[:phi]) + [0] * max(0, phi - len(conv))
        for k in range(phi, len(conv)):
            c = conv[k]
            if c:
                r = self.red[k]
                for j in range(phi):
                    if r[j]:
                        out[j] += c * r[j]
        return out


@lru_cache(maxsize=None)
def field_data(n: int) -> _FieldData:
    return _FieldData(n)


def _normalize(num: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if not any(num):
        return tuple(0 for _ in num), 1
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CycNum:
    """Element of Q(zeta_n); zeta is the class of x modulo Phi_n."""

    __slots__ = ("n", "num", "den", "_hash")

    def __init__(self, n: int, num: Sequence[int], den: int = 1, _normalized: bool = False):
        if not _normalized:
            if len(num) != totient(n):
                raise ValueError(f"expected {totient(n)} coefficients for conductor {n}")
            num, den = _normalize(num, den)
        self.n = n
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def rational(cls, value, n: int = 1) -> "CycNum":
        q = Fraction(value)
        phi = totient(n)
        num = [0] * phi
        num[0] = q.numerator
        return cls(n, tuple(num), q.denominator, _normalized=True)

    @classmethod
    def zero(cls, n: int = 1) -> "CycNum":
        return cls(n, (0,) * totient(n), 1, _normalized=True)

    @classmethod
    def one(cls, n: int = 1) -> "CycNum":
        return cls.rational(1, n)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycNum":
        """The k-th power of the canonical primitive n-th root of unity."""
        return cls(n, field_data(n).powers[k % n], 1, _normalized=True)

    @classmethod
    def from_fractions(cls, n: int, coeffs: Sequence) -> "CycNum":
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        return cls(n, [int(f * den) for f in fr], den)

    # -- inspection --------------------------------------------------------
    @property
    def phi(self) -> int:
        return len(self.num)

    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def size_key(self) -> tuple[int, int, int]:
        """Representation size: nonzero coefficients, denominator, largest numerator."""
        return (sum(1 for c in self.num if c), self.den, max(abs(c) for c in self.num))

    # -- coercion ----------------------------------------------------------
    def _coerce(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            if other.n != self.n:
                raise ConductorMismatch(f"conductors {self.n} and {other.n} differ")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(other, self.n)
        raise TypeError(f"cannot combine CycNum with {type(other).__name__}")

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other) -> "CycNum":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            num = [a + b for a, b in zip(self.num, other.num)]
            den = self.den
        else:
            num = [a * other.den + b * self.den for a, b in zip(self.num, other.num)]
            den = self.den * other.den
        num, den = _normalize(num, den)
        return CycNum(self.n, num, den, _normalized=True)

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum(self.n, tuple(-c for c in self.num), self.den, _normalized=True)

    def __sub__(self, other) -> "CycNum":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "CycNum":
        return (-self) + other

    def __mul__(self, other) -> "CycNum":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            num, den = _normalize([c * q.numerator for c in self.num], self.den * q.denominator)
            return CycNum(self.n, num, den, _normalized=True)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.num, other.num
        phi = len(a)
        conv = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        num, den = _normalize(field_data(self.n).reduce(conv), self.den * other.den)
        return CycNum(self.n, num, den, _normalized=True)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        return _inverse(self.n, self.num, self.den)

    def __truediv__(self, other) -> "CycNum":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "CycNum":
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int) -> "CycNum":
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNum.one(self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison --------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, CycNum):
            return self.n == other.n and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.n, self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- field maps --------------------------------------------------------
    def embed(self, m: int) -> "CycNum":
        """Image in Q(zeta_m) under zeta_n -> zeta_m^(m/n)."""
        if m % self.n:
            raise ValueError(f"conductor {self.n} does not divide {m}")
        if m == self.n:
            return self
        step = m // self.n
        target = field_data(m)
        acc = [0] * target.phi
        for j, c in enumerate(self.num):
            if c:
                p = target.powers[(j * step) % m]
                for k in range(target.phi):
                    if p[k]:
                        acc[k] += c * p[k]
        return CycNum(m, acc, self.den)

    def __repr__(self) -> str:
        return f"CycNum({self.n}, {self})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients()):
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                power = "z" if k == 1 else f"z^{k}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_neg(a: CycNum) -> CycNum:
    return -a


def cyc_inv(a: CycNum) -> CycNum:
    return a.inverse()


def embed(a: CycNum, m: int) -> CycNum:
    return a.embed(m)


# -- inverse by the extended Euclidean algorithm over Q[x] ------------------

def _ptrim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        _ptrim(a)
    return _ptrim(q), a


def _psub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _ptrim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)])


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


@lru_cache(maxsize=65536)
def _inverse(n: int, num: tuple[int, ...], den: int) -> CycNum:
    mod = [Fraction(c) for c in cyclotomic_poly(n).coeffs]
    a = _ptrim([Fraction(c, den) for c in num])
    # invariant: s_i * a == r_i (mod Phi_n)
    r0, r1 = mod, a
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
    # r1 is a nonzero constant because Phi_n is irreducible
    c = r1[0]
    coeffs = [x / c for x in s1]
    _, coeffs = _pdivmod(coeffs, mod) if len(coeffs) >= len(mod) else (None, coeffs)
    coeffs = list(coeffs) + [Fraction(0)] * (totient(n) - len(coeffs))
    return CycNum.from_fractions(n, coeffs)


# -- exact linear algebra ---------------------------------------------------

Vector = tuple  # of CycNum


def dot(u: Sequence[CycNum], v: Sequence[CycNum]) -> CycNum:
    acc = None
    for a, b in zip(u, v):
        if a.is_zero() or b.is_zero():
            continue
        term = a * b
        acc = term if acc is None else acc + term
    if acc is None:
        return CycNum.zero(u[0].n if u else 1)
    return acc


def normalize_covector(v: Sequence[CycNum]) -> tuple[CycNum, ...] | None:
    """Scale so the first nonzero entry is 1; None for the zero vector."""
    for k, a in enumerate(v):
        if not a.is_zero():
            if a.is_one():
                return tuple(v)
            inv = a.inverse()
            return tuple(CycNum.zero(a.n) if j < k else (inv * b if j > k else CycNum.one(a.n))
                         for j, b in enumerate(v))
    return None


def row_reduce(rows: Iterable[Sequence[CycNum]], ncols: int) -> tuple[list[list[CycNum]], list[int]]:
    """Reduced row echelon form and pivot columns.

    The pivot in each column is the nonzero candidate with the smallest
    representation, which keeps coefficient growth down.
    """
    m = [list(r) for r in rows]
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        best = None
        for i in range(top, len(m)):
            a = m[i][col]
            if not a.is_zero():
                key = a.size_key()
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            continue
        i = best[1]
        m[top], m[i] = m[i], m[top]
        prow = m[top]
        p = prow[col]
        if not p.is_one():
            inv = p.inverse()
            prow = [x * inv if not x.is_zero() else x for x in prow]
            m[top] = prow
        for k in range(len(m)):
            if k != top:
                f = m[k][col]
                if not f.is_zero():
                    row = m[k]
                    m[k] = [row[j] - f * prow[j] if not prow[j].is_zero() else row[j]
                            for j in range(ncols)]
        pivots.append(col)
        top += 1
        if top == len(m):
            break
    return m[:top], pivots


def kernel_from_rref(rref: list[list[CycNum]], pivots: list[int], ncols: int, n: int) -> list[tuple[CycNum, ...]]:
    free = [c for c in range(ncols) if c not in pivots]
    zero, one = CycNum.zero(n), CycNum.one(n)
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(rref, pivots):
            if not row[f].is_zero():
                v[p] = -row[f]
        basis.append(tuple(v))
    return basis


class CycMatrix:
    """Rectangular matrix over one cyclotomic field."""

    def __init__(self, rows: Iterable[Sequence[CycNum]], ncols: int | None = None, conductor: int | None = None):
        self.rows = [tuple(r) for r in rows]
        if ncols is None:
            if not self.rows:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(self.rows[0])
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        conductors = {a.n for r in self.rows for a in r if isinstance(a, CycNum)}
        if conductor is not None:
            conductors.add(conductor)
        if len(conductors) > 1:
            raise ConductorMismatch(f"mixed conductors {sorted(conductors)}")
        self.conductor = n = conductors.pop() if conductors else 1
        self.rows = [tuple(a if isinstance(a, CycNum) else CycNum.rational(a, n) for a in r)
                     for r in self.rows]
        self._rref = None

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def echelon(self) -> tuple[list[list[CycNum]], list[int]]:
        if self._rref is None:
            self._rref = row_reduce(self.rows, self.ncols)
        return self._rref

    def rank(self) -> int:
        return len(self.echelon()[1])

    def kernel(self) -> list[tuple[CycNum, ...]]:
        """Basis of {v : M v = 0}."""
        rref, piv = self.echelon()
        return kernel_from_rref(rref, piv, self.ncols, self.conductor)


def rank(M) -> int:
    if not isinstance(M, CycMatrix):
        M = CycMatrix(M)
    return M.rank()


def kernel(M) -> list[tuple[CycNum, ...]]:
    if not isinstance(M, CycMatrix):
        M = CycMatrix(M)
    return M.kernel()
