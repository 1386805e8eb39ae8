"""Triples with a partition, addition-deletion for nice partitions, and the
budgeted inductive checkers (inductively factored, inductively free,
hereditary variants)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from ..arrangement import Arrangement, Triple, exponents, restriction, triple
from .partition import Partition, is_nice
from .search import enumerate_nice, find_nice


class BudgetExceeded(RuntimeError):
    """A budgeted recursion ran out of nodes; the answer is undecided."""


class TripleError(ValueError):
    pass


class NotInjective(TripleError):
    pass


class NotOnto(TripleError):
    pass


class BlocksCollide(TripleError):
    pass


class RestrictionMap(NamedTuple):
    mapping: dict[int, int]   # H in A minus pi_1 -> index in A''
    injective: bool
    triple: Triple


def _check_h0(pi: Partition, h0: int) -> None:
    if h0 not in pi.blocks[0]:
        raise ValueError(f"hyperplane {h0} is not in the first block")


def restriction_map(A: Arrangement, pi: Partition, h0: int, T: Triple | None = None) -> RestrictionMap:
    """H -> H cap H0 on the hyperplanes outside the first block."""
    _check_h0(pi, h0)
    T = T or triple(A, h0)
    first = pi.masks[0]
    mapping = {h: T.image[h] for h in range(len(A)) if not (first >> h) & 1}
    injective = len(set(mapping.values())) == len(mapping)
    return RestrictionMap(mapping, injective, T)


def induced_partitions_of_triple(A: Arrangement, pi: Partition, h0: int,
                                 T: Triple | None = None) -> tuple[Partition, Partition, Triple]:
    """(pi', pi'') for the triple of h0, where h0 lies in the first block.
    Raises BlocksCollide, NotInjective or NotOnto when pi'' is not a partition
    with an injective restriction map."""
    R = restriction_map(A, pi, h0, T)
    T = R.triple
    images = [set(R.mapping[h] for h in block) for block in pi.blocks[1:]]
    seen: set[int] = set()
    for k, img in enumerate(images, start=2):
        if img & seen:
            raise BlocksCollide(f"image of block {k} meets the image of an earlier block")
        seen |= img
    if not R.injective:
        raise NotInjective("two hyperplanes of one block have the same trace on H0")
    if len(seen) != len(T.restriction):
        raise NotOnto(f"restriction map hits {len(seen)} of {len(T.restriction)} hyperplanes")
    pi1 = Partition(
        [[T.deletion_index(h) for h in block if h != h0] for block in pi.blocks
         if any(h != h0 for h in block)],
        len(T.deletion),
    )
    pi2 = Partition([sorted(img) for img in images], len(T.restriction))
    return pi1, pi2, T


@dataclass(frozen=True)
class AddDelReport:
    applicable: bool          # restriction map injective and pi'' a partition
    nice: bool
    nice_deletion: bool
    nice_restriction: bool | None
    reason: str = ""

    def consistent(self) -> bool:
        """If applicable, any two verdicts imply the third."""
        if not self.applicable:
            return True
        verdicts = [self.nice, self.nice_deletion, self.nice_restriction]
        return sum(verdicts) != 2


def check_add_del_nice(A: Arrangement, pi: Partition, h0: int) -> AddDelReport:
    _check_h0(pi, h0)
    nice_a = is_nice(A, pi)
    T = triple(A, h0)
    pi_del = Partition(
        [[T.deletion_index(h) for h in block if h != h0] for block in pi.blocks
         if any(h != h0 for h in block)],
        len(T.deletion),
    )
    nice_del = is_nice(T.deletion, pi_del)
    R = restriction_map(A, pi, h0, T)
    if not R.injective:
        return AddDelReport(False, nice_a, nice_del, None, "restriction map not injective")
    try:
        _, pi_res, _ = induced_partitions_of_triple(A, pi, h0, T)
    except TripleError as exc:
        # injective but pi'' is not a partition of A'': (iii) is false
        return AddDelReport(True, nice_a, nice_del, False, str(exc))
    return AddDelReport(True, nice_a, nice_del, is_nice(T.restriction, pi_res))


# -- inductively factored -----------------------------------------------------

@dataclass
class FactoredNode:
    """One node of an inductive factorization: (A, pi) with the chosen H0 and
    certified children for the deletion and the restriction. Leaves carry the
    empty arrangement and the empty partition."""

    arrangement: Arrangement
    partition: Partition
    h0: int | None = None
    deletion: "FactoredNode | None" = None
    restriction: "FactoredNode | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.h0 is None

    def size(self) -> int:
        if self.is_leaf:
            return 1
        return 1 + self.deletion.size() + self.restriction.size()


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"node budget {self.limit} exhausted")


def _pair_key(A: Arrangement, pi: Partition) -> tuple:
    rows = [tuple((c.num, c.den) for c in h.normal) for h in A.hyperplanes]
    blocks = frozenset(frozenset(rows[h] for h in b) for b in pi.blocks)
    return (A.dim, A.conductor, blocks)


class _IFAC:
    def __init__(self, budget: int | None):
        self.budget = _Budget(budget)
        self.memo: dict[tuple, FactoredNode | None] = {}
        self.triples: dict[tuple, Triple] = {}

    def triple(self, A: Arrangement, h0: int) -> Triple:
        # reusing the triple also reuses the lattices of A' and A''
        key = (A, h0)
        T = self.triples.get(key)
        if T is None:
            T = self.triples[key] = triple(A, h0)
        return T

    def pair(self, A: Arrangement, pi: Partition) -> FactoredNode | None:
        """Certificate that (A, pi) is in IFAC, or None."""
        if len(A) == 0:
            return FactoredNode(A, pi)
        key = _pair_key(A, pi)
        if key in self.memo:
            node = self.memo[key]
            return None if node is None else _adapt(node, A, pi)
        self.budget.tick()
        found = None
        if is_nice(A, pi):
            found = self._expand(A, pi)
        self.memo[key] = found
        return found

    def _expand(self, A: Arrangement, pi: Partition) -> FactoredNode | None:
        for k in range(len(pi)):
            relabeled = pi.with_first(k)
            for h0 in relabeled.blocks[0]:
                try:
                    p1, p2, T = induced_partitions_of_triple(A, relabeled, h0, self.triple(A, h0))
                except TripleError:
                    continue
                left = self.pair(T.deletion, p1)
                if left is None:
                    continue
                right = self.pair(T.restriction, p2)
                if right is None:
                    continue
                return FactoredNode(A, relabeled, h0, left, right)
        return None


def _adapt(node: FactoredNode, A: Arrangement, pi: Partition) -> FactoredNode:
    """Transport a certificate to an arrangement with the same hyperplanes
    and partition listed in another order."""
    if node.arrangement.hyperplanes == A.hyperplanes and node.partition == pi:
        return node
    if node.is_leaf:
        return FactoredNode(A, pi)
    target = node.arrangement.hyperplanes[node.h0]
    h0 = A.hyperplanes.index(target)
    relabeled = pi.with_first(pi.block_of[h0])
    p1, p2, T = induced_partitions_of_triple(A, relabeled, h0)
    return FactoredNode(A, relabeled, h0,
                        _adapt(node.deletion, T.deletion, p1),
                        _adapt(node.restriction, T.restriction, p2))


def is_inductively_factored(A: Arrangement, budget: int | None = 100_000) -> FactoredNode | None:
    """A certificate tree, or None if no nice partition is an inductive
    factorization. Raises BudgetExceeded when the node budget runs out."""
    search = _IFAC(budget)
    for pi in enumerate_nice(A):
        node = search.pair(A, pi)
        if node is not None:
            return node
    return None


def verify_factored_tree(node: FactoredNode) -> bool:
    """Re-derive every step of an inductive factorization certificate."""
    A, pi = node.arrangement, node.partition
    if node.is_leaf:
        return len(A) == 0 and len(pi) == 0
    try:
        p1, p2, T = induced_partitions_of_triple(A, pi, node.h0)
    except (TripleError, ValueError):
        return False
    if T.deletion.hyperplanes != node.deletion.arrangement.hyperplanes:
        return False
    if T.restriction.hyperplanes != node.restriction.arrangement.hyperplanes:
        return False
    # children may list their blocks in another order (their own H0 first)
    if p1.as_set() != node.deletion.partition.as_set():
        return False
    if p2.as_set() != node.restriction.partition.as_set():
        return False
    return verify_factored_tree(node.deletion) and verify_factored_tree(node.restriction)


# -- inductively free ---------------------------------------------------------

@dataclass
class FreeNode:
    """Inductive freeness derivation: exponents of A, the chosen H0 and the
    derivations of A' and A''."""

    arrangement: Arrangement
    exponents: tuple[int, ...]
    h0: int | None = None
    deletion: "FreeNode | None" = None
    restriction: "FreeNode | None" = None


class _IF:
    def __init__(self, budget: int | None):
        self.budget = _Budget(budget)
        self.memo: dict[tuple, FreeNode | None] = {}

    def run(self, A: Arrangement) -> FreeNode | None:
        if len(A) == 0:
            return FreeNode(A, (0,) * A.dim)
        key = A.key()
        if key in self.memo:
            node = self.memo[key]
            return None if node is None else _adapt_free(node, A)
        self.budget.tick()
        found = None
        if exponents(A) is not None:
            found = self._expand(A)
        self.memo[key] = found
        return found

    def _expand(self, A: Arrangement) -> FreeNode | None:
        for h0 in range(len(A)):
            T = triple(A, h0)
            left = self.run(T.deletion)
            if left is None:
                continue
            right = self.run(T.restriction)
            if right is None:
                continue
            rest = Counter(left.exponents)
            rest.subtract(Counter(right.exponents))
            if any(v < 0 for v in rest.values()):
                continue
            (c,) = [e for e, v in rest.items() for _ in range(v)]
            exps = tuple(sorted(right.exponents + (c + 1,)))
            return FreeNode(A, exps, h0, left, right)
        return None


def _adapt_free(node: FreeNode, A: Arrangement) -> FreeNode:
    if node.arrangement.hyperplanes == A.hyperplanes:
        return node
    if node.h0 is None:
        return FreeNode(A, node.exponents)
    h0 = A.hyperplanes.index(node.arrangement.hyperplanes[node.h0])
    T = triple(A, h0)
    return FreeNode(A, node.exponents, h0, _adapt_free(node.deletion, T.deletion),
                    _adapt_free(node.restriction, T.restriction))


def is_inductively_free(A: Arrangement, budget: int | None = 100_000) -> FreeNode | None:
    """A derivation (whose root carries exp A), or None. Raises BudgetExceeded."""
    return _IF(budget).run(A)


# -- hereditary variants ------------------------------------------------------

def _restrictions(A: Arrangement):
    seen = set()
    for X in A.lattice:
        B = A if X.rank == 0 else restriction(A, X)
        key = B.key()
        if key not in seen:
            seen.add(key)
            yield X, B


def is_hereditarily_factored(A: Arrangement, shortcut: bool = True) -> bool:
    """A^X is nice for every flat X. With the shortcut, an arrangement of
    rank 3 is decided by A alone: its proper restrictions have rank <= 2,
    are supersolvable and hence nice."""
    if shortcut and A.rank <= 3:
        return find_nice(A) is not None
    return all(find_nice(B) is not None for _, B in _restrictions(A))


def is_hereditarily_inductively_factored(A: Arrangement, budget: int | None = 100_000,
                                         shortcut: bool = True) -> bool:
    if shortcut and A.rank <= 3:
        return is_inductively_factored(A, budget) is not None
    return all(is_inductively_factored(B, budget) is not None for _, B in _restrictions(A))
