"""Partitions of an arrangement and the niceness checker."""

from __future__ import annotations

from typing import Iterable, Sequence

from ..arrangement import Arrangement, Flat, bits, members


class Partition:
    """Ordered blocks of hyperplane indices. Block identity is the position."""

    __slots__ = ("blocks", "masks", "block_of", "size")

    def __init__(self, blocks: Iterable[Iterable[int]], size: int | None = None):
        self.blocks = tuple(tuple(sorted(b)) for b in blocks)
        if any(not b for b in self.blocks):
            raise ValueError("partition blocks must be nonempty")
        self.masks = tuple(bits(b) for b in self.blocks)
        flat = [i for b in self.blocks for i in b]
        if len(set(flat)) != len(flat):
            raise ValueError("partition blocks overlap")
        n = len(flat) if size is None else size
        if sorted(flat) != list(range(n)):
            raise ValueError(f"blocks do not cover hyperplanes 0..{n - 1}")
        self.size = n
        self.block_of = [0] * n
        for k, b in enumerate(self.blocks):
            for i in b:
                self.block_of[i] = k

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        """From a block label per hyperplane; blocks ordered by label."""
        groups: dict[int, list[int]] = {}
        for i, b in enumerate(labels):
            groups.setdefault(b, []).append(i)
        return cls([groups[b] for b in sorted(groups)], len(labels))

    @classmethod
    def empty(cls) -> "Partition":
        return cls([], 0)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, k: int) -> tuple[int, ...]:
        return self.blocks[k]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"Partition({[list(b) for b in self.blocks]})"

    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def as_set(self) -> frozenset[frozenset[int]]:
        """Unordered view, for comparing partitions up to block relabeling."""
        return frozenset(frozenset(b) for b in self.blocks)

    def with_first(self, k: int) -> "Partition":
        """Same blocks with block k moved to the front."""
        order = [k] + [j for j in range(len(self.blocks)) if j != k]
        return Partition([self.blocks[j] for j in order], self.size)

    def met(self, support: int) -> list[int]:
        """Indices of blocks meeting the given hyperplane set."""
        return [k for k, m in enumerate(self.masks) if m & support]

    def to_lists(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


def _check_partition(A: Arrangement, pi: Partition) -> None:
    if pi.size != len(A):
        raise ValueError(f"partition covers {pi.size} hyperplanes, arrangement has {len(A)}")


def is_independent(A: Arrangement, pi: Partition) -> bool:
    """Every transversal of the blocks is linearly independent.

    Depth-first over transversals; a dependent prefix already exhibits a
    dependent transversal, so the search stops there."""
    _check_partition(A, pi)
    blocks = pi.blocks

    def extend(k: int, mask: int) -> bool:
        if k == len(blocks):
            return True
        for h in blocks[k]:
            m = mask | (1 << h)
            if A.rank_of_subset(m) != k + 1:
                return False
            if not extend(k + 1, m):
                return False
        return True

    return extend(0, 0)


def induced_partition(A: Arrangement, pi: Partition, X: Flat | int) -> list[tuple[int, tuple[int, ...]]]:
    """Nonempty traces pi_i cap A_X as (block id, members)."""
    support = X.support if isinstance(X, Flat) else X
    out = []
    for k, m in enumerate(pi.masks):
        if m & support:
            out.append((k, tuple(members(m & support))))
    return out


def met_counts(A: Arrangement, pi: Partition) -> dict[int, int]:
    """Number of blocks meeting A_X, for every flat X (keyed by support)."""
    return {X.support: len(pi.met(X.support)) for X in A.lattice}


def failing_flat(A: Arrangement, pi: Partition) -> Flat | None:
    """First flat of rank >= 2 whose induced partition has no singleton block."""
    for stratum in A.lattice.strata[2:]:
        for X in stratum:
            if not any(len(tr) == 1 for _, tr in induced_partition(A, pi, X)):
                return X
    return None


def is_nice(A: Arrangement, pi: Partition) -> bool:
    """Independent, and every flat X != V induces a partition of A_X with a
    singleton block. Rank-1 flats are single hyperplanes and are skipped."""
    _check_partition(A, pi)
    if len(A) == 0:
        return len(pi) == 0
    if len(pi) != A.rank:
        return False
    # cheap necessary condition before the transversal walk
    for X in A.lattice:
        if len(pi.met(X.support)) > X.rank:
            return False
    return failing_flat(A, pi) is None and is_independent(A, pi)
