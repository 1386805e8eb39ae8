"""Backtracking search for nice partitions.

Blocks are labeled by their target sizes (the integer roots of pi(A, t), in
increasing order), so a labeled assignment of hyperplanes to blocks is the
whole search space. Constraints, for every flat X with 2 <= r(X) < r(A):

* the trace of the partition on A_X meets exactly r(X) blocks;
* some block meets A_X in exactly one hyperplane.

Together with the size targets these characterize nice partitions: a
partition is independent iff no flat meets more than r(X) blocks (a
dependent transversal spans a flat of smaller rank that it meets in more
blocks), and the top flat is handled by requiring a block of size 1.
Every complete solution is re-verified with the plain checker anyway.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator

from ..arrangement import Arrangement
from ..polynomial import integer_root_multiset
from .partition import Partition, is_nice


class _Conflict(Exception):
    pass


@dataclass
class SearchStats:
    nodes: int = 0
    conflicts: int = 0
    solutions: int = 0
    exhausted: bool = False
    sizes: tuple[int, ...] | None = None
    reason: str = ""
    extra: dict = field(default_factory=dict)


def block_sizes(A: Arrangement) -> list[int] | None:
    """Forced block sizes of any nice partition, or None if pi(A, t) does not split."""
    return integer_root_multiset(A.char_poly())


def _popcount(x: int) -> int:
    return bin(x).count("1")


class NiceSearch:
    """State of one search. Domains are bitmasks over block labels; every
    change is recorded on a trail and undone on backtrack."""

    def __init__(self, A: Arrangement, sizes: list[int], use_symmetry: bool = True):
        self.A = A
        self.n = len(A)
        self.sizes = list(sizes)
        self.nb = len(sizes)
        self.use_symmetry = use_symmetry
        L = A.lattice
        top = L.rank
        self.frank: list[int] = []
        self.fmembers: list[list[int]] = []
        self.flats_of: list[list[int]] = [[] for _ in range(self.n)]
        for stratum in L.strata[2:top]:
            for X in stratum:
                f = len(self.frank)
                self.frank.append(X.rank)
                mem = X.members
                self.fmembers.append(mem)
                for h in mem:
                    self.flats_of[h].append(f)
        nf = len(self.frank)
        self.cnt = [[0] * self.nb for _ in range(nf)]
        self.metmask = [0] * nf
        self.unassigned = [len(m) for m in self.fmembers]
        full = (1 << self.nb) - 1
        self.dom = [full] * self.n
        self.assign = [-1] * self.n
        self.fill = [0] * self.nb
        self.trail: list[tuple] = []
        self.stats = SearchStats(sizes=tuple(sizes))
        # equal-size blocks are interchangeable; only the first empty one of a class is tried
        self.twin_before = [
            [c for c in range(b) if self.sizes[c] == self.sizes[b]] for b in range(self.nb)
        ]

    # -- trail ------------------------------------------------------------
    def _set_dom(self, h: int, new: int, pending: list) -> None:
        old = self.dom[h]
        if new == old:
            return
        if new == 0:
            raise _Conflict
        self.trail.append(("d", h, old))
        self.dom[h] = new
        if new & (new - 1) == 0 and self.assign[h] < 0:
            pending.append(h)

    def _assign(self, h: int, b: int, pending: list, dirty: set) -> None:
        if self.assign[h] >= 0:
            if self.assign[h] != b:
                raise _Conflict
            return
        if not (self.dom[h] >> b) & 1:
            raise _Conflict
        if self.fill[b] >= self.sizes[b]:
            raise _Conflict
        self.trail.append(("a", h, b))
        self.assign[h] = b
        self.fill[b] += 1
        self._set_dom(h, 1 << b, pending)
        for f in self.flats_of[h]:
            c = self.cnt[f]
            c[b] += 1
            if c[b] == 1:
                self.metmask[f] |= 1 << b
            self.unassigned[f] -= 1
            dirty.add(f)
        if self.fill[b] == self.sizes[b]:
            dirty.add(-1 - b)

    def _undo_to(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            entry = trail.pop()
            if entry[0] == "d":
                self.dom[entry[1]] = entry[2]
            else:
                _, h, b = entry
                self.assign[h] = -1
                self.fill[b] -= 1
                for f in self.flats_of[h]:
                    c = self.cnt[f]
                    c[b] -= 1
                    if c[b] == 0:
                        self.metmask[f] &= ~(1 << b)
                    self.unassigned[f] += 1

    # -- propagation ------------------------------------------------------
    def _flat(self, f: int, pending: list) -> None:
        k = self.frank[f]
        met = self.metmask[f]
        nmet = _popcount(met)
        if nmet > k:
            raise _Conflict
        u = self.unassigned[f]
        c = self.cnt[f]
        if u == 0:
            if nmet < k or 1 not in c:
                raise _Conflict
            return
        free = [h for h in self.fmembers[f] if self.assign[h] < 0]
        if nmet == k:
            ones = [b for b in range(self.nb) if c[b] == 1]
            if not ones:
                raise _Conflict
            allowed = met
            if len(ones) == 1:
                allowed &= ~(1 << ones[0])
            for h in free:
                self._set_dom(h, self.dom[h] & allowed, pending)
            return
        need = k - nmet
        reach = 0
        for h in free:
            reach |= self.dom[h]
        if min(u, _popcount(reach & ~met)) < need:
            raise _Conflict
        if u == need:
            for h in free:
                self._set_dom(h, self.dom[h] & ~met, pending)

    def _global(self, pending: list) -> None:
        for b in range(self.nb):
            left = self.sizes[b] - self.fill[b]
            bit = 1 << b
            if left == 0:
                for h in range(self.n):
                    if self.assign[h] < 0 and self.dom[h] & bit:
                        self._set_dom(h, self.dom[h] & ~bit, pending)
                continue
            cand = [h for h in range(self.n) if self.assign[h] < 0 and self.dom[h] & bit]
            if len(cand) < left:
                raise _Conflict
            if len(cand) == left:
                for h in cand:
                    self._set_dom(h, bit, pending)

    def _propagate(self, pending: list, dirty: set) -> None:
        while True:
            while pending:
                h = pending.pop()
                if self.assign[h] < 0:
                    d = self.dom[h]
                    self._assign(h, d.bit_length() - 1, pending, dirty)
            if dirty:
                f = dirty.pop()
                if f >= 0:
                    self._flat(f, pending)
                continue
            before = len(self.trail)
            self._global(pending)
            if not pending and len(self.trail) == before:
                return

    def _try(self, h: int, b: int) -> bool:
        pending: list = []
        dirty: set = set()
        try:
            self._assign(h, b, pending, dirty)
            self._propagate(pending, dirty)
        except _Conflict:
            self.stats.conflicts += 1
            return False
        return True

    # -- search -----------------------------------------------------------
    def _choose(self) -> int:
        best, best_key = -1, None
        for h in range(self.n):
            if self.assign[h] < 0:
                key = (_popcount(self.dom[h]), -len(self.flats_of[h]), h)
                if best_key is None or key < best_key:
                    best, best_key = h, key
        return best

    def _values(self, h: int) -> list[int]:
        d = self.dom[h]
        out = []
        for b in range(self.nb):
            if not (d >> b) & 1:
                continue
            if self.use_symmetry and self.fill[b] == 0 and any(
                    self.fill[c] == 0 for c in self.twin_before[b]):
                continue
            out.append(b)
        return out

    def initial(self) -> bool:
        """Precheck and root propagation. False means no solution at all."""
        if self.nb == 0:
            return self.n == 0
        if 1 not in self.sizes:
            self.stats.reason = "no block of size 1"
            return False
        if sum(self.sizes) != self.n:
            self.stats.reason = "block sizes do not sum to |A|"
            return False
        pending: list = []
        dirty = set(range(len(self.frank)))
        try:
            self._propagate(pending, dirty)
        except _Conflict:
            self.stats.reason = "root propagation"
            return False
        return True

    def solutions(self, first_choices: list[tuple[int, int]] | None = None) -> Iterator[Partition]:
        """All nice partitions, one per unordered block structure when symmetry breaking is on."""
        if not self.initial():
            self.stats.exhausted = True
            return
        if first_choices:
            for h, b in first_choices:
                if not self._try(h, b):
                    self.stats.exhausted = True
                    return
        yield from self._dfs()
        self.stats.exhausted = True

    def _dfs(self) -> Iterator[Partition]:
        self.stats.nodes += 1
        h = self._choose()
        if h < 0:
            pi = Partition.from_labels(self.assign)
            if is_nice(self.A, pi):
                self.stats.solutions += 1
                yield pi
            else:  # pragma: no cover - propagation is complete on full assignments
                raise AssertionError("search produced a partition that is not nice")
            return
        for b in self._values(h):
            mark = len(self.trail)
            if self._try(h, b):
                yield from self._dfs()
            self._undo_to(mark)


def _search_for(A: Arrangement, stats: SearchStats | None):
    sizes = block_sizes(A)
    if sizes is None:
        if stats is not None:
            stats.reason = "pi(A, t) does not split over the integers"
            stats.exhausted = True
        return None
    S = NiceSearch(A, sizes)
    return S


def enumerate_nice(A: Arrangement, stats: SearchStats | None = None) -> Iterator[Partition]:
    """Every nice partition of A, up to relabeling of blocks (blocks in order of size)."""
    if len(A) == 0:
        yield Partition.empty()
        return
    S = _search_for(A, stats)
    if S is None:
        return
    try:
        yield from S.solutions()
    finally:
        if stats is not None:
            _merge(stats, S.stats)


def _merge(dst: SearchStats, src: SearchStats) -> None:
    dst.nodes += src.nodes
    dst.conflicts += src.conflicts
    dst.solutions += src.solutions
    dst.exhausted = src.exhausted
    dst.sizes = src.sizes
    dst.reason = dst.reason or src.reason


def _worker(text: str, choice: tuple[int, int]) -> tuple[list | None, int]:
    from ..arrangement import parse_arrangement

    A = parse_arrangement(text)
    S = NiceSearch(A, block_sizes(A))
    for pi in S.solutions([choice]):
        return pi.to_lists(), S.stats.nodes
    return None, S.stats.nodes


def _threads(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    try:
        return max(1, int(os.environ.get("ARRFACTOR_THREADS", "1")))
    except ValueError:
        return 1


def find_nice(A: Arrangement, stats: SearchStats | None = None, workers: int | None = None) -> Partition | None:
    """A nice partition of A, or None once the search tree is exhausted.

    With several workers the first branch decision is fanned out to a process
    pool; the answer is the solution of the earliest branch that has one, which
    is the same partition the sequential search returns."""
    if len(A) == 0:
        return Partition.empty()
    S = _search_for(A, stats)
    if S is None:
        return None
    workers = _threads(workers)
    if workers > 1:
        result = _find_parallel(A, S, workers, stats)
        if result is not NotImplemented:
            return result
    try:
        for pi in S.solutions():
            return pi
        return None
    finally:
        if stats is not None:
            _merge(stats, S.stats)


def _find_parallel(A: Arrangement, S: NiceSearch, workers: int, stats: SearchStats | None):
    from concurrent.futures import ProcessPoolExecutor

    from ..arrangement import format_arrangement

    if not S.initial():
        if stats is not None:
            S.stats.exhausted = True
            _merge(stats, S.stats)
        return None
    h = S._choose()
    if h < 0:
        return NotImplemented
    choices = [(h, b) for b in S._values(h)]
    text = format_arrangement(A)
    with ProcessPoolExecutor(max_workers=min(workers, len(choices))) as pool:
        results = list(pool.map(_worker, [text] * len(choices), choices))
    if stats is not None:
        stats.nodes += sum(n for _, n in results)
        stats.exhausted = True
        stats.sizes = S.stats.sizes
    for blocks, _ in results:
        if blocks is not None:
            return Partition(blocks, len(A))
    return None
