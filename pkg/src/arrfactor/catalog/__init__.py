"""Reflection arrangements: monomial groups G(r,p,l), Coxeter families and the
exceptional groups handled in the classification of nice reflection arrangements."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable

from ..arrangement import Arrangement
from ..exactfield import CycNum
from .data import EXCEPTIONAL
from .linforms import parse_linear_form


class UnknownCatalogEntry(KeyError):
    pass


def monomial(r: int, p: int, l: int) -> Arrangement:
    """A(G(r,p,l)): ker(x_i - z^k x_j) for i < j and 0 <= k < r, in that order,
    followed by the coordinate hyperplanes ker(x_i) when p != r."""
    if r < 1 or l < 1 or p < 1:
        raise ValueError("r, p and l must be positive")
    if r % p:
        raise ValueError(f"p = {p} does not divide r = {r}")
    zero, one = CycNum.zero(r), CycNum.one(r)
    normals = []
    for i in range(l):
        for j in range(i + 1, l):
            for k in range(r):
                alpha = [zero] * l
                alpha[i] = one
                alpha[j] = -CycNum.zeta(r, k)
                normals.append(alpha)
    if p != r:
        for i in range(l):
            alpha = [zero] * l
            alpha[i] = one
            normals.append(alpha)
    return Arrangement(l, r, normals)


def boolean(n: int) -> Arrangement:
    return Arrangement(n, 1, [[1 if i == j else 0 for j in range(n)] for i in range(n)])


def braid(n: int) -> Arrangement:
    """Type A_n: x_i - x_j in n + 1 coordinates (rank n, not essential)."""
    return monomial(1, 1, n + 1)


def coxeter(kind: str, rank: int | None = None) -> Arrangement:
    kind = kind.upper()
    if kind == "A":
        return braid(rank)
    if kind == "B":
        return monomial(2, 1, rank)
    if kind == "D":
        return monomial(2, 2, rank)
    if kind in ("F4", "H3") or (kind in ("F", "H") and rank in (4, 3)):
        name = kind if kind in ("F4", "H3") else f"{kind}{rank}"
        if name not in ("F4", "H3"):
            raise ValueError(f"unsupported Coxeter type {kind}{rank}")
        return exceptional(name)
    raise ValueError(f"unsupported Coxeter type {kind!r}")


def exceptional(name: str) -> Arrangement:
    try:
        variables, conductor, forms = EXCEPTIONAL[name]
    except KeyError:
        raise UnknownCatalogEntry(name) from None
    return Arrangement(len(variables), conductor,
                       [parse_linear_form(f, variables, conductor) for f in forms])


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple
    count: int
    rank: int
    conductor: int
    build: Callable[[], Arrangement] = field(repr=False, compare=False)
    exponents: tuple[int, ...] | None = None   # textbook values, for regression only

    def arrangement(self) -> Arrangement:
        A = self.build()
        if len(A) != self.count:
            raise AssertionError(f"{self.name}: expected {self.count} hyperplanes, got {len(A)}")
        return A


def _monomial_entry(r: int, p: int, l: int) -> CatalogEntry:
    count = r * l * (l - 1) // 2 + (l if p != r else 0)
    rank = l - 1 if r == 1 else l
    if r == 1:
        exps = tuple(range(1, l))
    elif p == r:
        exps = tuple(sorted([(k - 1) * r + 1 for k in range(1, l)] + [(l - 1) * (r - 1)]))
    else:
        exps = tuple((k - 1) * r + 1 for k in range(1, l + 1))
    return CatalogEntry(f"G({r},{p},{l})", (r, p, l), count, rank, r,
                        lambda: monomial(r, p, l), exps)


_EXCEPTIONAL_EXPONENTS = {
    "H3": (1, 5, 9),
    "G24": (1, 9, 11),
    "G25": (1, 4, 7),
    "G26": (1, 7, 13),
    "G27": (1, 19, 25),
    "F4": (1, 5, 7, 11),
    "G29": (1, 9, 13, 17),
    "G31": (1, 13, 17, 29),
}


def _exceptional_entry(name: str) -> CatalogEntry:
    variables, conductor, forms = EXCEPTIONAL[name]
    return CatalogEntry(name, (), len(forms), len(variables), conductor,
                        lambda: exceptional(name), _EXCEPTIONAL_EXPONENTS[name])


EXCEPTIONAL_NAMES = tuple(EXCEPTIONAL)

_PATTERNS = [
    (re.compile(r"G\((\d+),(\d+),(\d+)\)$"), lambda m: _monomial_entry(*map(int, m.groups()))),
    (re.compile(r"boolean:(\d+)$"), lambda m: CatalogEntry(
        m.group(0), (int(m.group(1)),), int(m.group(1)), int(m.group(1)), 1,
        lambda: boolean(int(m.group(1))), (1,) * int(m.group(1)))),
    (re.compile(r"(?:braid|A):(\d+)$"), lambda m: CatalogEntry(
        m.group(0), (int(m.group(1)),), int(m.group(1)) * (int(m.group(1)) + 1) // 2,
        int(m.group(1)), 1, lambda: braid(int(m.group(1))),
        tuple(range(1, int(m.group(1)) + 1)))),
    (re.compile(r"B:(\d+)$"), lambda m: _renamed(_monomial_entry(2, 1, int(m.group(1))), m.group(0))),
    (re.compile(r"D:(\d+)$"), lambda m: _renamed(_monomial_entry(2, 2, int(m.group(1))), m.group(0))),
]


def _renamed(entry: CatalogEntry, name: str) -> CatalogEntry:
    return CatalogEntry(name, entry.params, entry.count, entry.rank, entry.conductor,
                        entry.build, entry.exponents)


def entry(name: str) -> CatalogEntry:
    """Look up a catalog name: ``G(r,p,l)``, ``boolean:n``, ``braid:n``, ``B:n``,
    ``D:n``, ``F4``, ``H3``, ``G24`` ... ``G31``."""
    key = name.replace(" ", "")
    if key in EXCEPTIONAL:
        return _exceptional_entry(key)
    for pattern, make in _PATTERNS:
        m = pattern.match(key)
        if m:
            return make(m)
    raise UnknownCatalogEntry(name)


def by_name(name: str) -> Arrangement:
    return entry(name).arrangement()


__all__ = [
    "CatalogEntry", "UnknownCatalogEntry", "EXCEPTIONAL_NAMES",
    "monomial", "boolean", "braid", "coxeter", "exceptional", "entry", "by_name",
]
