import random

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from arrfactor import catalog
from arrfactor.arrangement import Arrangement, exponents, localization
from arrfactor.exactfield import CycMatrix
from arrfactor.factorization import (
    NiceSearch, NotAModularChain, Partition, SearchStats, block_sizes, enumerate_nice,
    failing_flat, find_nice, induced_partition, is_independent, is_modular, is_nice,
    is_supersolvable, met_counts, supersolvable_to_nice,
)
from arrfactor.listed_flats import grr3_partition
from conftest import arr

NICE = ["boolean:3", "braid:3", "B:3", "G(3,1,3)", "G(4,2,3)", "G(3,3,3)", "G(4,4,3)",
        "G(5,5,3)", "braid:4", "B:4"]
NOT_NICE = ["D:4", "G(3,3,4)", "H3", "G25", "G24", "G26", "F4"]
SUPERSOLVABLE = ["boolean:3", "braid:3", "B:3", "G(3,1,3)", "G(4,2,3)", "braid:4", "B:4",
                 "G(2,1,4)", "G(3,3,2)", "braid:2"]


def explicit_partition(r):
    return Partition(grr3_partition(r), 3 * r)


# -- Partition ---------------------------------------------------------------

def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        Partition([[0], []])
    with pytest.raises(ValueError):
        Partition([[0], [2]])
    pi = Partition.from_labels([2, 0, 0, 2])
    assert pi.blocks == ((1, 2), (0, 3))
    assert pi.block_of == [1, 0, 0, 1]
    assert pi.with_first(1).blocks == ((0, 3), (1, 2))


# -- independence and niceness -------------------------------------------------

def test_independent_examples():
    assert is_independent(arr("G(3,3,3)"), explicit_partition(3))
    B2 = catalog.boolean(2)
    assert is_independent(B2, Partition([[0], [1]]))
    # x - y, x - z, y - z in pairwise-singleton blocks: the full transversal has rank 2
    A2 = arr("braid:2")
    assert not is_independent(A2, Partition([[0], [1], [2]]))
    assert A2.rank_of_subset(A2.full) == 2


def test_independence_matches_rank_of_all_transversals():
    """Oracle: brute force over every transversal."""
    from itertools import product as cartesian
    rng = random.Random(3)
    A = arr("G(3,3,3)")
    for _ in range(30):
        labels = [rng.randrange(3) for _ in range(len(A))]
        if len(set(labels)) < 3:
            continue
        pi = Partition.from_labels(labels)
        brute = all(A.rank_of_subset(list(t)) == 3 for t in cartesian(*pi.blocks))
        assert is_independent(A, pi) == brute


def test_induced_partition_examples():
    A = arr("G(3,3,3)")
    pi = explicit_partition(3)
    pencil = A.lattice.flat([0, 1, 2])
    assert induced_partition(A, pi, pencil)[0] == (0, (0,))
    assert induced_partition(A, pi, A.lattice.bottom) == []
    top = induced_partition(A, pi, A.lattice.top)
    assert [tr for _, tr in top] == list(pi.blocks)


def test_is_nice_examples():
    assert is_nice(Arrangement.empty(3), Partition.empty())
    A = arr("G(3,3,3)")
    assert is_nice(A, explicit_partition(3))
    by_family = Partition([[0, 1, 2], [3, 4, 5], [6, 7, 8]])
    assert not is_nice(A, by_family)
    assert failing_flat(A, by_family).members == [0, 1, 2]


@pytest.mark.parametrize("r", [3, 4, 5])
def test_explicit_partition_is_nice(r):
    assert is_nice(arr(f"G({r},{r},3)"), explicit_partition(r))


# -- search -------------------------------------------------------------------

@pytest.mark.parametrize("name", NICE)
def test_find_nice_succeeds(name):
    A = arr(name)
    pi = find_nice(A)
    assert pi is not None and is_nice(A, pi)


@pytest.mark.parametrize("name", NOT_NICE)
def test_find_nice_exhausts(name):
    stats = SearchStats()
    assert find_nice(arr(name), stats) is None
    assert stats.exhausted


def test_non_splitting_is_immediate():
    # four generic lines through the origin of a plane: pi = 1 + 4t + 3t^2 = (1+t)(1+3t) splits,
    # but in 3-space four generic planes give 1 + 4t + 6t^2 + 3t^3, which does not
    A = Arrangement(3, 1, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    assert block_sizes(A) is None
    stats = SearchStats()
    assert find_nice(A, stats) is None
    assert "split" in stats.reason


def test_g333_sizes_and_determinism():
    A = arr("G(3,3,3)")
    first = find_nice(A)
    assert sorted(first.sizes()) == [1, 4, 4]
    assert find_nice(catalog.by_name("G(3,3,3)")) == first


def test_g24_parity():
    # both large blocks would have odd size
    assert block_sizes(arr("G24")) == [1, 9, 11]


def test_enumerate_nice_g333():
    A = arr("G(3,3,3)")
    sols = list(enumerate_nice(A))
    assert sols and all(is_nice(A, p) for p in sols)
    assert len({p.as_set() for p in sols}) == len(sols)
    assert explicit_partition(3).as_set() in {p.as_set() for p in sols}


def test_symmetry_breaking_loses_nothing():
    """Without label symmetry breaking every solution appears once per
    permutation of equal-size blocks; the unordered sets must agree."""
    for name in ["G(3,3,3)", "boolean:3", "braid:3"]:
        A = arr(name)
        with_sb = {p.as_set() for p in enumerate_nice(A)}
        S = NiceSearch(A, block_sizes(A), use_symmetry=False)
        without = {p.as_set() for p in S.solutions()}
        assert with_sb == without


def test_enumeration_matches_brute_force():
    """Oracle: all labelings of a 6-hyperplane arrangement."""
    from itertools import product as cartesian
    A = arr("braid:3")
    brute = set()
    for labels in cartesian(range(3), repeat=len(A)):
        if len(set(labels)) == 3:
            pi = Partition.from_labels(labels)
            if is_nice(A, pi):
                brute.add(pi.as_set())
    assert {p.as_set() for p in enumerate_nice(A)} == brute


# -- invariants on every certified instance ----------------------------------

def certified():
    for name in NICE:
        A = arr(name)
        for k, pi in enumerate(enumerate_nice(A)):
            if k >= 6:
                break
            yield name, A, pi


def test_nice_invariants():
    for name, A, pi in certified():
        assert len(pi) == A.rank, name
        assert sorted(pi.sizes()) == block_sizes(A), name
        assert 1 in pi.sizes(), name
        for X in A.lattice:
            assert len(pi.met(X.support)) == X.rank, (name, X)


def test_localization_of_nice_is_nice():
    for name, A, pi in certified():
        for X in A.lattice:
            if X.rank == 0:
                continue
            B = localization(A, X)
            local = Partition.from_labels([pi.block_of[h] for h in X.members])
            assert is_nice(B, local), (name, X)


# -- modularity and supersolvability ---------------------------------------------------

def modular_by_subspaces(A, X):
    """Oracle: X + Y is a flat iff its dimension equals that of the flat cut
    out by A_X cap A_Y; dimensions from stored subspace bases."""
    L = A.lattice
    for Y in L:
        rows = list(X.basis) + list(Y.basis)
        dim_sum = CycMatrix(rows, A.dim, A.conductor).rank() if rows else 0
        Z = L.by_support[X.support & Y.support]
        if dim_sum != A.dim - Z.rank:
            return False
    return True


def test_modular_examples():
    A = arr("G(3,3,3)")
    L = A.lattice
    assert is_modular(A, L.bottom) and is_modular(A, L.top)
    assert all(is_modular(A, X) for X in L.strata[1])
    assert not is_modular(A, L.flat([0, 1, 2]))


@pytest.mark.parametrize("name", ["G(3,3,3)", "B:3", "braid:3", "H3", "braid:4", "D:4"])
def test_modular_agrees_with_subspace_oracle(name):
    A = arr(name)
    for X in A.lattice:
        assert is_modular(A, X) == modular_by_subspaces(A, X), X


@pytest.mark.parametrize("name", SUPERSOLVABLE)
def test_supersolvable_chain_gives_nice(name):
    A = arr(name)
    ok, chain = is_supersolvable(A)
    assert ok
    assert [X.rank for X in chain] == list(range(A.rank + 1))
    pi = supersolvable_to_nice(A, chain)
    assert is_nice(A, pi)
    assert sorted(pi.sizes()) == block_sizes(A)


@pytest.mark.parametrize("name", ["G(3,3,3)", "D:4", "H3", "F4", "G25"])
def test_not_supersolvable(name):
    assert is_supersolvable(arr(name)) == (False, None)


def test_rank_two_always_supersolvable():
    for name in ["G(3,3,2)", "G(5,1,2)", "braid:2"]:
        assert is_supersolvable(arr(name))[0]


def test_supersolvable_to_nice_examples():
    assert supersolvable_to_nice(catalog.boolean(4), is_supersolvable(catalog.boolean(4))[1]).sizes() == [1, 1, 1, 1]
    A = arr("braid:3")
    assert sorted(supersolvable_to_nice(A, is_supersolvable(A)[1]).sizes()) == [1, 2, 3]
    B = arr("B:3")
    assert sorted(supersolvable_to_nice(B, is_supersolvable(B)[1]).sizes()) == [1, 3, 5]


def test_bad_chain_rejected():
    A = arr("G(3,3,3)")
    L = A.lattice
    chain = [L.bottom, L.strata[1][0], L.flat([0, 1, 2]), L.top]
    with pytest.raises(NotAModularChain):
        supersolvable_to_nice(A, chain)
    with pytest.raises(NotAModularChain):
        supersolvable_to_nice(A, [L.bottom, L.top])


# -- randomized properties -----------------------------------------------------------

@st.composite
def small_subarrangements(draw):
    name = draw(st.sampled_from(["B:3", "G(3,3,3)", "braid:3", "G(3,1,3)"]))
    A = arr(name)
    keep = draw(st.lists(st.integers(0, len(A) - 1), min_size=3, max_size=len(A), unique=True))
    return Arrangement(A.dim, A.conductor, [A[i].normal for i in sorted(keep)])


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(small_subarrangements())
def test_search_is_sound_and_complete_on_subarrangements(A):
    pi = find_nice(A)
    if pi is not None:
        assert is_nice(A, pi)
        assert sorted(pi.sizes()) == exponents(A)[A.dim - A.rank:]
    else:
        # oracle: exhaustive labelings, for arrangements small enough
        from itertools import product as cartesian
        if len(A) <= 8:
            r = A.rank
            assert not any(
                is_nice(A, Partition.from_labels(lab))
                for lab in cartesian(range(r), repeat=len(A)) if len(set(lab)) == r
            )


@settings(max_examples=30, deadline=None)
@given(small_subarrangements())
def test_supersolvable_implies_nice(A):
    ok, chain = is_supersolvable(A)
    if ok:
        assert is_nice(A, supersolvable_to_nice(A, chain))
        assert find_nice(A) is not None
