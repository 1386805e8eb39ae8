"""The twelve acceptance criteria, one marked group of tests each.

conftest.py prints one PASS/FAIL line per criterion at the end of the run.
Decisions go through the CLI where the criterion is phrased as a command.
"""

import json
import random
import time
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from arrfactor import catalog
from arrfactor.arrangement import bits, product, restriction, triple
from arrfactor.cli import main
from arrfactor.factorization import (
    check_chain, enumerate_nice, find_nice, is_hereditarily_factored,
    is_inductively_factored, is_inductively_free, is_nice, is_supersolvable,
    supersolvable_to_nice,
)
from arrfactor.listed_flats import (
    G29_PAIRED, LISTED, grr3_partition, grr3_rank2_supports, grr4_rank2_supports,
)
from arrfactor.polynomial import IntPoly, integer_root_multiset

from conftest import arr

acceptance = pytest.mark.acceptance


def cli(capsys, *argv):
    t0 = time.perf_counter()
    code = main(list(argv))
    seconds = time.perf_counter() - t0
    out = capsys.readouterr().out
    return code, json.loads(out), seconds


# -- criterion 11 is a gate for 3 and 4, so its helper comes first --------------------

@lru_cache(maxsize=None)
def transcription_failures(name: str) -> tuple[str, ...]:
    """Quoted flats of a catalog member that build_lattice does not reproduce."""
    A = arr(name)
    L = A.lattice
    bad = []
    for rank, support in LISTED.get(name, ()):
        X = L.by_support.get(bits(i - 1 for i in support))
        if X is None or X.rank != rank:
            bad.append(f"{sorted(support)} (rank {rank})")
    if name == "G29":
        for group, others in G29_PAIRED:
            for k in others:
                if not any(bits([h - 1, k - 1]) in L.by_support for h in group):
                    bad.append(f"H{k} pairs with no member of {sorted(group)}")
    return tuple(bad)


# -- 1 --------------------------------------------------------------------------------

C1 = acceptance(1, "G(r,r,3) nice for r = 3, 4, 5 with sizes {1, r+1, 2(r-1)}")


@C1
@pytest.mark.parametrize("r", [3, 4, 5])
def test_c01_grr3_nice(r, capsys, tmp_path):
    name = f"G({r},{r},3)"
    code, out, seconds = cli(capsys, "check", "nice", "--catalog", name)
    assert code == 0 and out["answer"] == "yes"
    assert sorted(len(b) for b in out["certificate"]["blocks"]) == sorted([1, r + 1, 2 * (r - 1)])
    path = tmp_path / "explicit.json"
    path.write_text(json.dumps(grr3_partition(r)))
    code, out, more = cli(capsys, "check", "nice", "--catalog", name, "--partition", str(path))
    assert code == 0 and out["answer"] == "yes"
    assert seconds + more <= 5


# -- 2 --------------------------------------------------------------------------------

@acceptance(2, "G(2,2,4) and G(3,3,4) are not nice")
@pytest.mark.parametrize("name", ["G(2,2,4)", "G(3,3,4)"])
def test_c02_grr4_not_nice(name, capsys):
    code, out, seconds = cli(capsys, "check", "nice", "--catalog", name)
    assert code == 1 and out["answer"] == "no"
    assert seconds <= 60


# -- 3 and 4 --------------------------------------------------------------------------

@acceptance(3, "H3 and G25 are not nice")
@pytest.mark.parametrize("name", ["H3", "G25"])
def test_c03_rank3_exceptional_not_nice(name, capsys):
    assert not transcription_failures(name)
    code, out, seconds = cli(capsys, "check", "nice", "--catalog", name)
    assert code == 1 and out["answer"] == "no"
    assert seconds <= 30


@acceptance(4, "G24, G26, G27, F4, G29, G31 are not nice")
@pytest.mark.parametrize("name,limit", [
    ("G24", 300), ("G26", 300), ("F4", 300), ("G27", 900), ("G29", 900), ("G31", 900),
])
def test_c04_exceptional_not_nice(name, limit, capsys):
    assert not transcription_failures(name)
    code, out, seconds = cli(capsys, "check", "nice", "--catalog", name)
    assert code == 1 and out["answer"] == "no"
    assert seconds <= limit


# -- 5 --------------------------------------------------------------------------------

@acceptance(5, "supersolvable spot checks")
@pytest.mark.parametrize("name,expected", [
    ("braid:3", 0), ("B:3", 0), ("G(4,2,3)", 0), ("G(3,3,3)", 1), ("D:4", 1), ("H3", 1),
])
def test_c05_supersolvable(name, expected, capsys):
    code, out, seconds = cli(capsys, "check", "supersolvable", "--catalog", name)
    assert code == expected
    if expected == 0:
        assert len(out["certificate"]["chain"]) == arr(name).rank + 1
    assert seconds <= 10


# -- 6 --------------------------------------------------------------------------------

@acceptance(6, "G(3,3,3): nice, not supersolvable, not inductively factored or free")
def test_c06_g333():
    t0 = time.perf_counter()
    A = catalog.by_name("G(3,3,3)")
    assert len(A) == 9
    assert find_nice(A) is not None
    assert not is_supersolvable(A)[0]
    assert is_inductively_factored(A, budget=100_000) is None
    assert is_inductively_free(A, budget=100_000) is None
    assert time.perf_counter() - t0 <= 300


# -- 7 --------------------------------------------------------------------------------

SUPERSOLVABLE = [
    "boolean:1", "boolean:2", "boolean:3", "boolean:4", "braid:2", "braid:3", "braid:4",
    "B:2", "B:3", "B:4", "G(3,1,2)", "G(3,1,3)", "G(4,2,2)", "G(4,2,3)", "G(3,3,2)",
    "G(5,5,2)", "G(4,1,3)",
]
C7 = acceptance(7, "modular chains convert to nice partitions")


def _chain_to_nice(A):
    ok, chain = is_supersolvable(A)
    assert ok
    check_chain(A, chain)
    assert is_nice(A, supersolvable_to_nice(A, chain))


@C7
@pytest.mark.parametrize("name", SUPERSOLVABLE)
def test_c07_supersolvable_to_nice(name):
    _chain_to_nice(arr(name))


@C7
@settings(max_examples=12, deadline=None)
@given(st.sampled_from(SUPERSOLVABLE[:10]), st.sampled_from(SUPERSOLVABLE[:10]))
def test_c07_products_of_supersolvable(a, b):
    # a product of supersolvable arrangements is supersolvable
    _chain_to_nice(product(arr(a), arr(b)))


# -- 8 --------------------------------------------------------------------------------

NICE = SUPERSOLVABLE + ["G(3,3,3)", "G(4,4,3)", "G(5,5,3)"]
C8 = acceptance(8, "block count, block sizes and met counts on certified nice partitions")


def _nice_invariants(A, pi):
    assert is_nice(A, pi)
    assert len(pi) == A.rank
    roots = [b for b in integer_root_multiset(A.char_poly()) if b]
    assert sorted(pi.sizes()) == sorted(roots)
    for X in A.lattice:
        assert len(pi.met(X.support)) == X.rank


@C8
@pytest.mark.parametrize("name", NICE)
def test_c08_found_partition(name):
    A = arr(name)
    _nice_invariants(A, find_nice(A))


@C8
@pytest.mark.parametrize("name", ["G(3,3,3)", "braid:3", "B:3", "G(4,2,3)"])
def test_c08_every_partition(name):
    A = arr(name)
    found = list(enumerate_nice(A))
    assert found
    for pi in found:
        _nice_invariants(A, pi)


# -- 9 --------------------------------------------------------------------------------

FACTORS = ["boolean:1", "boolean:2", "boolean:3", "braid:2", "braid:3", "G(3,3,3)", "H3"]
_rng = random.Random(20)
PAIRS = [(_rng.choice(FACTORS), _rng.choice(FACTORS)) for _ in range(20)]


@lru_cache(maxsize=None)
def _verdicts(name: str):
    A = arr(name)
    return (find_nice(A) is not None, is_inductively_factored(A) is not None,
            is_hereditarily_factored(A))


@lru_cache(maxsize=None)
def _product_verdicts(a: str, b: str):
    P = product(arr(a), arr(b))
    pi = find_nice(P)
    return (pi is not None, is_inductively_factored(P) is not None,
            is_hereditarily_factored(P), None if pi is None else sorted(pi.sizes()))


@acceptance(9, "nice, inductively factored, hereditary: product iff both factors")
@pytest.mark.parametrize("a,b", PAIRS)
def test_c09_product_laws(a, b):
    n1, f1, h1 = _verdicts(a)
    n2, f2, h2 = _verdicts(b)
    nice, factored, hereditary, sizes = _product_verdicts(a, b)
    assert nice == (n1 and n2)
    assert factored == (f1 and f2)
    assert hereditary == (h1 and h2)
    if nice:
        assert sizes == sorted(find_nice(arr(a)).sizes() + find_nice(arr(b)).sizes())


# -- 10 -------------------------------------------------------------------------------

RANK_AT_MOST_3 = [
    "boolean:1", "boolean:2", "boolean:3", "braid:2", "braid:3", "B:2", "B:3",
    "G(3,1,2)", "G(4,2,2)", "G(3,3,2)", "G(3,1,3)", "G(4,2,3)", "G(3,3,3)", "G(4,4,3)",
    "G(5,5,3)", "H3", "G25", "G24", "G26", "G27",
]


@acceptance(10, "deletion-restriction identity for every hyperplane")
@pytest.mark.parametrize("name", RANK_AT_MOST_3)
def test_c10_deletion_restriction(name):
    A = arr(name)
    assert A.rank <= 3
    p = A.char_poly()
    t = IntPoly.x()
    for h in range(len(A)):
        T = triple(A, h)
        assert p == T.deletion.char_poly() + t * T.restriction.char_poly(), (name, h)


# -- 11 -------------------------------------------------------------------------------

C11 = acceptance(11, "every quoted flat is reproduced by the lattice")


@C11
@pytest.mark.parametrize("r", [3, 4, 5])
def test_c11_grr3_families(r):
    A = arr(f"G({r},{r},3)")
    got = sorted(sorted(X.members) for X in A.lattice.strata[2])
    assert got == sorted(sorted(s) for s in grr3_rank2_supports(r))


@C11
@pytest.mark.parametrize("r", [2, 3])
def test_c11_grr4_families(r):
    L = arr(f"G({r},{r},4)").lattice
    for s in grr4_rank2_supports(r):
        X = L.by_support.get(bits(s))
        assert X is not None and X.rank == 2, sorted(s)


@C11
@pytest.mark.parametrize("name", sorted(LISTED))
def test_c11_exceptional_flats(name):
    assert LISTED[name]
    assert transcription_failures(name) == ()


# -- 12 -------------------------------------------------------------------------------

@acceptance(12, "G(3,3,3) and G(4,4,3) are hereditarily factored")
@pytest.mark.parametrize("name", ["G(3,3,3)", "G(4,4,3)"])
def test_c12_hereditary(name):
    t0 = time.perf_counter()
    A = catalog.by_name(name)
    for X in A.lattice:
        B = A if X.rank == 0 else restriction(A, X)
        if X.rank:
            assert B.rank <= 2
        assert find_nice(B) is not None, X.members
    assert is_hereditarily_factored(A, shortcut=False)
    assert time.perf_counter() - t0 <= 30
