"""Central hyperplane arrangements over a cyclotomic field and their intersection lattices.

Flats are identified with their supports: the set of hyperplanes containing
them, stored as an int bitmask over hyperplane indices.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Iterator, NamedTuple, Sequence

from .exactfield import CycNum, CycMatrix, dot, normalize_covector, totient
from .polynomial import IntPoly, integer_root_multiset


class NotAFlat(ValueError):
    pass


def bits(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Hyperplane:
    """ker(alpha) with alpha scaled so its first nonzero coordinate is 1."""

    normal: tuple[CycNum, ...]

    @classmethod
    def from_covector(cls, alpha: Sequence[CycNum]) -> "Hyperplane":
        canon = normalize_covector(alpha)
        if canon is None:
            raise ValueError("the zero covector does not define a hyperplane")
        return cls(canon)

    @property
    def dim(self) -> int:
        return len(self.normal)

    def __str__(self) -> str:
        return "ker(" + ", ".join(str(a) for a in self.normal) + ")"


class Arrangement:
    """Ordered list of distinct hyperplanes through the origin of K^dim, K = Q(zeta_conductor)."""

    def __init__(self, dim: int, conductor: int, normals: Iterable[Sequence], dedupe: bool = False):
        self.dim = dim
        self.conductor = conductor
        hyps = []
        seen = set()
        for alpha in normals:
            alpha = tuple(a if isinstance(a, CycNum) else CycNum.rational(a, conductor) for a in alpha)
            if len(alpha) != dim:
                raise ValueError(f"covector of length {len(alpha)} in dimension {dim}")
            if any(a.n != conductor for a in alpha):
                raise ValueError(f"covector entries must live over conductor {conductor}")
            h = Hyperplane.from_covector(alpha)
            if h.normal in seen:
                if dedupe:
                    continue
                raise ValueError(f"duplicate hyperplane {h}")
            seen.add(h.normal)
            hyps.append(h)
        self.hyperplanes: tuple[Hyperplane, ...] = tuple(hyps)
        self._rank_cache: dict[int, int] = {}

    @classmethod
    def empty(cls, dim: int, conductor: int = 1) -> "Arrangement":
        return cls(dim, conductor, [])

    @property
    def normals(self) -> list[tuple[CycNum, ...]]:
        return [h.normal for h in self.hyperplanes]

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def __iter__(self) -> Iterator[Hyperplane]:
        return iter(self.hyperplanes)

    def __getitem__(self, i: int) -> Hyperplane:
        return self.hyperplanes[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Arrangement):
            return NotImplemented
        return (self.dim, self.conductor, self.hyperplanes) == (other.dim, other.conductor, other.hyperplanes)

    def __hash__(self) -> int:
        return hash((self.dim, self.conductor, self.hyperplanes))

    def __repr__(self) -> str:
        return f"<Arrangement dim={self.dim} conductor={self.conductor} |A|={len(self)}>"

    @property
    def full(self) -> int:
        return (1 << len(self)) - 1

    def key(self) -> tuple:
        """Order-independent exact key: dimension plus sorted canonical normals."""
        rows = sorted(tuple((a.num, a.den) for a in h.normal) for h in self.hyperplanes)
        return (self.dim, self.conductor, tuple(rows))

    def fingerprint(self) -> str:
        return hashlib.sha256(repr(self.key()).encode()).hexdigest()[:16]

    def with_conductor(self, m: int) -> "Arrangement":
        if m == self.conductor:
            return self
        return Arrangement(self.dim, m, [[a.embed(m) for a in h.normal] for h in self.hyperplanes])

    # -- ranks -------------------------------------------------------------
    def rank_of_subset(self, subset: int | Iterable[int]) -> int:
        mask = subset if isinstance(subset, int) else bits(subset)
        r = self._rank_cache.get(mask)
        if r is None:
            rows = [self.hyperplanes[i].normal for i in members(mask)]
            r = CycMatrix(rows, self.dim, self.conductor).rank() if rows else 0
            self._rank_cache[mask] = r
        return r

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def is_essential(self) -> bool:
        return self.rank == self.dim

    def subspace_basis(self, subset: int | Iterable[int]) -> list[tuple[CycNum, ...]]:
        """Basis of the intersection of the hyperplanes in ``subset``."""
        mask = subset if isinstance(subset, int) else bits(subset)
        rows = [self.hyperplanes[i].normal for i in members(mask)]
        return CycMatrix(rows, self.dim, self.conductor).kernel()

    def closure(self, subset: int | Iterable[int]) -> int:
        """Support of the flat cut out by ``subset``."""
        mask = subset if isinstance(subset, int) else bits(subset)
        basis = self.subspace_basis(mask)
        out = mask
        for i, h in enumerate(self.hyperplanes):
            if not (mask >> i) & 1 and all(dot(h.normal, v).is_zero() for v in basis):
                out |= 1 << i
        return out

    @cached_property
    def lattice(self) -> "IntersectionLattice":
        return build_lattice(self)

    def char_poly(self) -> IntPoly:
        return self.lattice.char_poly()


@dataclass(frozen=True, eq=False)
class Flat:
    """A member X of L(A): its support A_X, rank r(X), a basis of X as a subspace
    of V, and r(X) independent hyperplanes from the support cutting it out."""

    support: int
    rank: int
    basis: tuple = field(repr=False)
    generators: tuple[int, ...] = field(repr=False)

    @property
    def members(self) -> list[int]:
        return members(self.support)

    @property
    def size(self) -> int:
        return bin(self.support).count("1")

    def __contains__(self, i: int) -> bool:
        return bool((self.support >> i) & 1)

    def __le__(self, other: "Flat") -> bool:
        return self.support & ~other.support == 0

    def __lt__(self, other: "Flat") -> bool:
        return self.support != other.support and self <= other

    def __eq__(self, other) -> bool:
        return isinstance(other, Flat) and self.support == other.support

    def __hash__(self) -> int:
        return hash(self.support)

    def __repr__(self) -> str:
        return f"Flat(rank={self.rank}, support={self.members})"


def _restricted_covectors(A: Arrangement, X: Flat) -> list[tuple[int, tuple[CycNum, ...]]]:
    """For each hyperplane H not containing X, the canonical covector of X cap H in X's basis."""
    out = []
    for i, h in enumerate(A.hyperplanes):
        if (X.support >> i) & 1:
            continue
        c = normalize_covector([dot(h.normal, v) for v in X.basis])
        assert c is not None, "support of a flat must be closed"
        out.append((i, c))
    return out


def _hyperplane_kernel(c: tuple[CycNum, ...], basis: tuple, n: int) -> tuple:
    """Basis of ker(c) inside span(basis), for canonical c (first nonzero is 1)."""
    p = next(k for k, a in enumerate(c) if not a.is_zero())
    new = []
    for j in range(len(c)):
        if j == p:
            continue
        # e_j - c_j e_p lies in ker(c)
        if c[j].is_zero():
            new.append(basis[j])
        else:
            new.append(tuple(x - c[j] * y for x, y in zip(basis[j], basis[p])))
    return tuple(new)


class IntersectionLattice:
    """All flats of an arrangement, by rank; X <= Y iff support(X) is a subset of support(Y)."""

    def __init__(self, arrangement: Arrangement, strata: list[list[Flat]]):
        self.arrangement = arrangement
        self.strata = strata
        self.by_support = {X.support: X for stratum in strata for X in stratum}

    @property
    def rank(self) -> int:
        return len(self.strata) - 1

    @property
    def bottom(self) -> Flat:
        return self.strata[0][0]

    @property
    def top(self) -> Flat:
        """The center T_A."""
        return self.strata[-1][0]

    def __len__(self) -> int:
        return len(self.by_support)

    def __iter__(self) -> Iterator[Flat]:
        for stratum in self.strata:
            yield from stratum

    def __contains__(self, X) -> bool:
        support = X.support if isinstance(X, Flat) else X
        return support in self.by_support

    def flat(self, support: int | Iterable[int]) -> Flat:
        mask = support if isinstance(support, int) else bits(support)
        try:
            return self.by_support[mask]
        except KeyError:
            raise NotAFlat(f"{members(mask)} is not the support of a flat") from None

    def flat_of(self, subset: int | Iterable[int]) -> Flat:
        """The flat cut out by an arbitrary set of hyperplanes (its closure)."""
        return self.flat(self.arrangement.closure(subset))

    def counts(self) -> list[int]:
        return [len(s) for s in self.strata]

    def below(self, X: Flat) -> list[Flat]:
        return [Y for Y in self if Y.rank < X.rank and Y <= X]

    def above(self, X: Flat) -> list[Flat]:
        return [Y for Y in self if Y.rank > X.rank and X <= Y]

    def join_rank(self, X: Flat, Y: Flat) -> int:
        """r(X ^ Y): rank of the union of supports."""
        gens = list(dict.fromkeys(X.generators + Y.generators))
        return self.arrangement.rank_of_subset(gens)

    @cached_property
    def mobius(self) -> dict[int, int]:
        """mu(V, X) for every flat, keyed by support."""
        mu = {0: 1}
        for k in range(1, len(self.strata)):
            for X in self.strata[k]:
                s = X.support
                total = 0
                for j in range(k):
                    for Y in self.strata[j]:
                        if Y.support & ~s == 0:
                            total += mu[Y.support]
                mu[s] = -total
        return mu

    def char_poly(self) -> IntPoly:
        """pi(A, t) = sum_X mu(V, X) (-t)^r(X)."""
        coeffs = [0] * len(self.strata)
        mu = self.mobius
        for k, stratum in enumerate(self.strata):
            for X in stratum:
                coeffs[k] += mu[X.support] * (-1) ** k
        return IntPoly(coeffs)


def build_lattice(A: Arrangement) -> IntersectionLattice:
    """Breadth-first by rank: the flats covering X correspond to the distinct
    traces X cap H, H not containing X (the hyperplanes of the restriction A^X)."""
    n = A.conductor
    one, zero = CycNum.one(n), CycNum.zero(n)
    identity = tuple(tuple(one if i == j else zero for j in range(A.dim)) for i in range(A.dim))
    strata = [[Flat(0, 0, identity, ())]]
    seen = {0}
    while True:
        nxt: list[Flat] = []
        for X in strata[-1]:
            groups: dict[tuple, list[int]] = {}
            for i, c in _restricted_covectors(A, X):
                groups.setdefault(c, []).append(i)
            for c, idx in groups.items():
                support = X.support | bits(idx)
                if support in seen:
                    continue
                seen.add(support)
                basis = _hyperplane_kernel(c, X.basis, n)
                nxt.append(Flat(support, X.rank + 1, basis, X.generators + (idx[0],)))
        if not nxt:
            break
        nxt.sort(key=lambda F: members(F.support))
        strata.append(nxt)
    return IntersectionLattice(A, strata)


def rank_of_subset(A: Arrangement, S: int | Iterable[int]) -> int:
    return A.rank_of_subset(S)


def char_poly(A: Arrangement) -> IntPoly:
    return A.char_poly()


def exponents(A: Arrangement) -> list[int] | None:
    """Roots of pi(A, t) padded with zeros to length dim, if it splits."""
    roots = integer_root_multiset(A.char_poly())
    if roots is None:
        return None
    return [0] * (A.dim - len(roots)) + roots


# -- constructions ----------------------------------------------------------

def _as_flat(A: Arrangement, X) -> Flat:
    if isinstance(X, Flat):
        if X.support not in A.lattice or A.lattice.by_support[X.support].rank != X.rank:
            raise NotAFlat(f"{X!r} is not a flat of this arrangement")
        return A.lattice.by_support[X.support]
    return A.lattice.flat(X)


def localization(A: Arrangement, X) -> Arrangement:
    """A_X, same ambient space, inherited order."""
    X = _as_flat(A, X)
    return Arrangement(A.dim, A.conductor, [A.hyperplanes[i].normal for i in X.members])


class Restriction(NamedTuple):
    arrangement: Arrangement
    image: dict[int, int]   # index in A -> index in A^X, for H not containing X
    flat: Flat


def restrict(A: Arrangement, X) -> Restriction:
    """A^X with the trace map, coordinates taken in the stored basis of X."""
    X = _as_flat(A, X)
    normals: list[tuple] = []
    where: dict[tuple, int] = {}
    image = {}
    for i, c in _restricted_covectors(A, X):
        j = where.get(c)
        if j is None:
            j = where[c] = len(normals)
            normals.append(c)
        image[i] = j
    B = Arrangement(A.dim - X.rank, A.conductor, normals)
    return Restriction(B, image, X)


def restriction(A: Arrangement, X) -> Arrangement:
    return restrict(A, X).arrangement


def deletion(A: Arrangement, i: int) -> Arrangement:
    return Arrangement(A.dim, A.conductor, [h.normal for j, h in enumerate(A.hyperplanes) if j != i])


class Triple(NamedTuple):
    A: Arrangement
    deletion: Arrangement
    restriction: Arrangement
    h0: int
    image: dict[int, int]   # index in A (other than h0) -> index in A''

    def deletion_index(self, i: int) -> int:
        """Index of hyperplane i of A inside A'."""
        return i if i < self.h0 else i - 1


def triple(A: Arrangement, h0: int) -> Triple:
    if not 0 <= h0 < len(A):
        raise IndexError(f"hyperplane index {h0} out of range for |A| = {len(A)}")
    res = restrict(A, 1 << h0)
    return Triple(A, deletion(A, h0), res.arrangement, h0, res.image)


def product(A1: Arrangement, A2: Arrangement) -> Arrangement:
    m = lcm(A1.conductor, A2.conductor)
    zero = CycNum.zero(m)
    normals = [[a.embed(m) for a in h.normal] + [zero] * A2.dim for h in A1.hyperplanes]
    normals += [[zero] * A1.dim + [a.embed(m) for a in h.normal] for h in A2.hyperplanes]
    return Arrangement(A1.dim + A2.dim, m, normals)


# -- text format ------------------------------------------------------------

class ArrangementFormatError(ValueError):
    pass


def format_arrangement(A: Arrangement, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    lines.append(f"dim {A.dim} conductor {A.conductor}")
    for h in A.hyperplanes:
        lines.append(" ".join(str(c) for a in h.normal for c in a.coefficients()))
    return "\n".join(lines) + "\n"


def parse_arrangement(text: str) -> Arrangement:
    header = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 4 or parts[0] != "dim" or parts[2] != "conductor":
                raise ArrangementFormatError(f"line {lineno}: expected 'dim <l> conductor <n>'")
            try:
                header = (int(parts[1]), int(parts[3]))
            except ValueError:
                raise ArrangementFormatError(f"line {lineno}: bad header numbers") from None
            if header[0] < 0 or header[1] < 1:
                raise ArrangementFormatError(f"line {lineno}: bad header values")
            continue
        dim, n = header
        phi = totient(n)
        try:
            values = [Fraction(tok) for tok in line.split()]
        except (ValueError, ZeroDivisionError):
            raise ArrangementFormatError(f"line {lineno}: bad rational") from None
        if len(values) != dim * phi:
            raise ArrangementFormatError(f"line {lineno}: expected {dim * phi} numbers, got {len(values)}")
        rows.append([CycNum.from_fractions(n, values[j * phi:(j + 1) * phi]) for j in range(dim)])
    if header is None:
        raise ArrangementFormatError("missing header")
    try:
        return Arrangement(header[0], header[1], rows)
    except ValueError as exc:
        raise ArrangementFormatError(str(exc)) from None


def load_arrangement(path) -> Arrangement:
    with open(path) as fh:
        return parse_arrangement(fh.read())


def save_arrangement(A: Arrangement, path, comment: str | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(format_arrangement(A, comment))
