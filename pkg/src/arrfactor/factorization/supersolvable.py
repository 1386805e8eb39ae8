"""Modular flats, supersolvability and the partition of a modular chain."""

from __future__ import annotations

from ..arrangement import Arrangement, Flat, _as_flat
from .partition import Partition, is_nice


class NotAModularChain(ValueError):
    pass


def is_modular(A: Arrangement, X) -> bool:
    """X + Y is a flat for every flat Y.

    The smallest flat containing X + Y has support A_X cap A_Y, so X + Y is
    itself a flat iff that support has rank r(X) + r(Y) - r(X cap Y)."""
    X = _as_flat(A, X)
    L = A.lattice
    if X.rank <= 1 or X.rank == L.rank:
        return True
    for Y in L:
        meet = L.by_support[X.support & Y.support]
        if meet.rank != X.rank + Y.rank - L.join_rank(X, Y):
            return False
    return True


def modular_flats(A: Arrangement, rank: int) -> list[Flat]:
    return [X for X in A.lattice.strata[rank] if is_modular(A, X)]


def is_supersolvable(A: Arrangement) -> tuple[bool, list[Flat] | None]:
    """Search for a maximal chain V = X_0 < ... < X_r = T of modular flats.
    Returns (answer, chain)."""
    L = A.lattice
    r = L.rank
    cache: dict[int, bool] = {}

    def modular(X: Flat) -> bool:
        if X.support not in cache:
            cache[X.support] = is_modular(A, X)
        return cache[X.support]

    def down(chain: list[Flat]) -> list[Flat] | None:
        X = chain[-1]
        k = X.rank - 1
        if k <= 1:
            if k == 1:
                h = X.members[0]
                chain = chain + [L.by_support[1 << h]]
            return chain + [L.bottom]
        for Y in L.strata[k]:
            if Y < X and modular(Y):
                found = down(chain + [Y])
                if found:
                    return found
        return None

    found = down([L.top])
    if found is None:
        return False, None
    return True, found[::-1]


def check_chain(A: Arrangement, chain: list[Flat]) -> None:
    L = A.lattice
    if len(chain) != L.rank + 1:
        raise NotAModularChain(f"chain has {len(chain)} members, expected {L.rank + 1}")
    for i, X in enumerate(chain):
        X = _as_flat(A, X)
        if X.rank != i:
            raise NotAModularChain(f"member {i} has rank {X.rank}")
        if i and not chain[i - 1] < X:
            raise NotAModularChain(f"member {i - 1} is not below member {i}")
        if not is_modular(A, X):
            raise NotAModularChain(f"member {i} is not modular")


def supersolvable_to_nice(A: Arrangement, chain: list[Flat]) -> Partition:
    """Blocks pi_i = A_{X_i} minus A_{X_{i-1}} along a modular chain."""
    check_chain(A, chain)
    blocks = [
        [h for h in chain[i].members if not (chain[i - 1].support >> h) & 1]
        for i in range(1, len(chain))
    ]
    pi = Partition(blocks, len(A))
    if not is_nice(A, pi):  # pragma: no cover - a theorem, asserted as a postcondition
        raise AssertionError("modular chain partition failed the niceness check")
    return pi
