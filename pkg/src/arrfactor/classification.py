"""Reproduction of the classification of nice reflection arrangements.

Each check has a stable id (``grr3``, ``g31``, ...) and returns a
``CheckResult``; ``run_checks`` drives them for the ``verify-paper`` command.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from . import catalog
from .arrangement import Arrangement, bits, exponents, localization
from .factorization import (
    BudgetExceeded, Partition, find_nice, is_hereditarily_factored,
    is_inductively_factored, is_inductively_free, is_nice, is_supersolvable,
)
from .listed_flats import (
    G29_PAIRED, LISTED, grr3_partition, grr3_rank2_supports, grr4_rank2_supports,
)


@dataclass
class CheckResult:
    id: str
    title: str
    passed: bool
    seconds: float = 0.0
    facts: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"id": self.id, "title": self.title, "passed": self.passed,
                "seconds": round(self.seconds, 3), "facts": self.facts,
                "failures": self.failures}


class _Recorder:
    def __init__(self):
        self.facts: list[str] = []
        self.failures: list[str] = []

    def expect(self, cond: bool, what: str) -> bool:
        (self.facts if cond else self.failures).append(what)
        return cond


def _listed_flats(rec: _Recorder, name: str, A: Arrangement) -> bool:
    L = A.lattice
    ok = True
    for rank, support in LISTED[name]:
        X = L.by_support.get(bits(i - 1 for i in support))
        good = X is not None and X.rank == rank
        ok &= good
        if not good:
            rec.failures.append(f"{name}: {sorted(support)} is not a rank-{rank} flat")
    rec.facts.append(f"{name}: {len(LISTED[name])} quoted flats checked")
    return ok


def _not_nice(rec: _Recorder, name: str, A: Arrangement | None = None) -> None:
    A = A or catalog.by_name(name)
    pi = find_nice(A)
    rec.expect(pi is None, f"{name}: no nice partition (search exhausted)")


def check_grr3(rec: _Recorder) -> None:
    for r in (3, 4, 5):
        name = f"G({r},{r},3)"
        A = catalog.by_name(name)
        got = sorted(sorted(X.members) for X in A.lattice.strata[2])
        want = sorted(sorted(s) for s in grr3_rank2_supports(r))
        rec.expect(got == want, f"{name}: rank-2 flats are the three pencils and the {r * r} triples")
        pi = find_nice(A)
        rec.expect(pi is not None and sorted(pi.sizes()) == sorted([1, r + 1, 2 * (r - 1)]),
                   f"{name}: nice partition found with block sizes {{1, {r + 1}, {2 * (r - 1)}}}")
        explicit = Partition(grr3_partition(r), len(A))
        rec.expect(is_nice(A, explicit), f"{name}: explicit partition {explicit.to_lists()} is nice")


def check_grr4(rec: _Recorder) -> None:
    for r in (2, 3):
        name = f"G({r},{r},4)"
        A = catalog.by_name(name)
        L = A.lattice
        fams = grr4_rank2_supports(r)
        rec.expect(all(bits(s) in L.by_support and L.by_support[bits(s)].rank == 2 for s in fams),
                   f"{name}: pencils A, B, C, D and the pairs {{A_i, B_j}}, {{C_i, D_j}} are rank-2 flats")
        _not_nice(rec, name, A)


def check_parabolic(rec: _Recorder) -> None:
    """A D4 localization inside D5 is not nice, so D5 cannot be nice."""
    D4 = catalog.by_name("G(2,2,4)")
    D5 = catalog.by_name("G(2,2,5)")
    want = D4.lattice.counts()
    found = None
    for X in D5.lattice.strata[4]:
        if X.size == len(D4):
            B = localization(D5, X)
            if B.lattice.counts()[:5] == want and B.char_poly() == D4.char_poly():
                found = (X, B)
                break
    if not rec.expect(found is not None, "G(2,2,5) has a rank-4 flat whose localization looks like D4"):
        return
    X, B = found
    rec.facts.append(f"D4 localization support: {[i + 1 for i in X.members]}")
    rec.expect(find_nice(B) is None, "that localization has no nice partition")
    rec.expect(find_nice(D5) is None, "G(2,2,5) has no nice partition")


def check_h3(rec: _Recorder) -> None:
    A = catalog.by_name("H3")
    _listed_flats(rec, "H3", A)
    _not_nice(rec, "H3", A)


def check_g25(rec: _Recorder) -> None:
    A = catalog.by_name("G25")
    _listed_flats(rec, "G25", A)
    _not_nice(rec, "G25", A)


def check_g24(rec: _Recorder) -> None:
    A = catalog.by_name("G24")
    _listed_flats(rec, "G24", A)
    roots = exponents(A)
    rec.expect(roots == [1, 9, 11], f"G24: exponents {roots}; both large blocks have odd size")
    _not_nice(rec, "G24", A)


def _flats_then_search(name: str) -> Callable[[_Recorder], None]:
    def run(rec: _Recorder) -> None:
        A = catalog.by_name(name)
        _listed_flats(rec, name, A)
        if name == "G29":
            L = A.lattice
            ok = all(
                any(bits([h - 1, k - 1]) in L.by_support for h in group)
                for group, others in G29_PAIRED for k in others
            )
            rec.expect(ok, "G29: every listed H' forms a 2-element flat with a member of its group")
        _not_nice(rec, name, A)
    return run


def check_g333(rec: _Recorder) -> None:
    A = catalog.by_name("G(3,3,3)")
    rec.expect(find_nice(A) is not None, "G(3,3,3) is nice")
    rec.expect(not is_supersolvable(A)[0], "G(3,3,3) is not supersolvable")
    try:
        rec.expect(is_inductively_factored(A) is None, "G(3,3,3) is not inductively factored")
        rec.expect(is_inductively_free(A) is None, "G(3,3,3) is not inductively free")
    except BudgetExceeded:
        rec.expect(False, "G(3,3,3): inductive search exceeded its budget")


def check_hereditary(rec: _Recorder) -> None:
    for name in ("G(3,3,3)", "G(4,4,3)"):
        A = catalog.by_name(name)
        rec.expect(is_hereditarily_factored(A, shortcut=False),
                   f"{name}: every restriction A^X is nice (checked flat by flat)")
    for name in RANK3:
        A = catalog.by_name(name)
        nice = find_nice(A) is not None
        rec.expect(is_hereditarily_factored(A, shortcut=False) == nice,
                   f"{name}: hereditarily factored iff nice ({nice})")


RANK3 = ("boolean:3", "braid:3", "B:3", "G(3,1,3)", "G(4,2,3)", "G(3,3,3)", "G(4,4,3)",
         "H3", "G25", "G24", "G26", "G27")

# (name, supersolvable, of type G(r,r,3))
SUMMARY = (
    ("braid:3", True, False), ("B:3", True, False), ("G(3,1,3)", True, False),
    ("G(4,2,3)", True, False), ("B:4", True, False),
    ("G(3,3,3)", False, True), ("G(4,4,3)", False, True), ("G(5,5,3)", False, True),
    ("G(2,2,4)", False, False), ("G(3,3,4)", False, False), ("H3", False, False),
    ("G25", False, False), ("G24", False, False), ("G26", False, False), ("G27", False, False),
    ("F4", False, False), ("G29", False, False), ("G31", False, False),
)


def check_summary(rec: _Recorder) -> None:
    """Irreducible members: nice iff supersolvable or G(r,r,3). On large
    lattices a search without a nice partition already rules out a modular
    chain (a chain yields a nice partition), so the chain search is skipped."""
    for name, supersolvable, grr3 in SUMMARY:
        A = catalog.by_name(name)
        nice = find_nice(A) is not None
        if len(A.lattice) <= 400 or nice:
            ss = is_supersolvable(A)[0]
        else:
            ss = False
        rec.expect(ss == supersolvable, f"{name}: supersolvable = {ss}")
        rec.expect(nice == (ss or grr3), f"{name}: nice = {nice}")


CHECKS: dict[str, tuple[str, Callable[[_Recorder], None]]] = {
    "grr3": ("G(r,r,3) is nice, r = 3, 4, 5", check_grr3),
    "grr4": ("G(2,2,4) and G(3,3,4) are not nice", check_grr4),
    "parabolic": ("a non-nice D4 localization forces non-niceness", check_parabolic),
    "h3": ("H3 is not nice", check_h3),
    "g25": ("G25 is not nice", check_g25),
    "g24": ("G24 is not nice", check_g24),
    "g26": ("G26 is not nice", _flats_then_search("G26")),
    "g27": ("G27 is not nice", _flats_then_search("G27")),
    "f4": ("F4 is not nice", _flats_then_search("F4")),
    "g29": ("G29 is not nice", _flats_then_search("G29")),
    "g31": ("G31 is not nice", _flats_then_search("G31")),
    "g333": ("G(3,3,3): nice, not supersolvable, not inductively factored or free", check_g333),
    "hereditary": ("rank-3 members: hereditarily factored iff nice", check_hereditary),
    "summary": ("nice iff supersolvable or G(r,r,3)", check_summary),
}


def run_check(check_id: str) -> CheckResult:
    title, fn = CHECKS[check_id]
    rec = _Recorder()
    t0 = time.perf_counter()
    try:
        fn(rec)
    except Exception as exc:  # a crash is a failed check, reported with its id
        rec.failures.append(f"{type(exc).__name__}: {exc}")
    return CheckResult(check_id, title, not rec.failures, time.perf_counter() - t0,
                       rec.facts, rec.failures)


def run_checks(ids: list[str] | None = None) -> list[CheckResult]:
    return [run_check(i) for i in (ids or list(CHECKS))]
