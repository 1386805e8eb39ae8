"""Exhaustive nice-partition search on the exceptional arrangements, with
search statistics. G31 (60 hyperplanes) is the largest and takes a few seconds."""

import sys
import time

from arrfactor import catalog
from arrfactor.factorization import SearchStats, find_nice

names = sys.argv[1:] or ["H3", "G25", "G24", "G26", "F4", "G27", "G29", "G31"]
for name in names:
    A = catalog.by_name(name)
    t0 = time.perf_counter()
    A.lattice
    t1 = time.perf_counter()
    stats = SearchStats()
    pi = find_nice(A, stats=stats)
    t2 = time.perf_counter()
    verdict = "nice" if pi is not None else "not nice"
    print(f"{name:>4}: |A| = {len(A):2d}, sizes {stats.sizes}, {verdict}; "
          f"{stats.nodes} nodes, {stats.conflicts} conflicts; "
          f"lattice {t1 - t0:.2f}s, search {t2 - t1:.2f}s")
