import random

import pytest
from hypothesis import given, settings, strategies as st

from arrfactor import catalog
from arrfactor.arrangement import (
    Arrangement, ArrangementFormatError, NotAFlat, bits, char_poly, deletion, exponents,
    format_arrangement, localization, members, parse_arrangement, product, restrict,
    restriction, triple,
)
from arrfactor.exactfield import CycNum
from arrfactor.polynomial import IntPoly
from conftest import arr

RANK3 = ["boolean:3", "braid:3", "B:3", "G(3,1,3)", "G(3,3,3)", "G(4,2,3)", "G(4,4,3)",
         "G(5,5,3)", "H3", "G25", "G24", "G26"]


def t_poly(*coeffs):
    return IntPoly(coeffs)


def test_bits_roundtrip():
    assert members(bits([0, 3, 5])) == [0, 3, 5]
    assert bits([]) == 0


def test_duplicates_rejected():
    with pytest.raises(ValueError):
        Arrangement(2, 1, [[1, 0], [2, 0]])
    A = Arrangement(2, 1, [[1, 0], [2, 0], [0, 1]], dedupe=True)
    assert len(A) == 2


def test_zero_normal_rejected():
    with pytest.raises(ValueError):
        Arrangement(2, 1, [[0, 0]])


def test_empty_arrangement():
    E = Arrangement.empty(3)
    assert len(E) == 0 and E.rank == 0
    assert E.char_poly() == 1
    assert exponents(E) == [0, 0, 0]


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_boolean_char_poly(l):
    assert catalog.boolean(l).char_poly() == IntPoly((1, 1)) ** l


def test_g333_char_poly():
    assert arr("G(3,3,3)").char_poly() == IntPoly((1, 1)) * IntPoly((1, 4)) ** 2
    assert arr("G(3,3,3)").lattice.counts() == [1, 9, 12, 1]


@pytest.mark.parametrize("name", ["G(3,3,3)", "B:3", "H3", "G25", "D:4"])
def test_flats_are_closed(name):
    A = arr(name)
    for X in A.lattice:
        assert A.rank_of_subset(X.support) == X.rank
        assert A.closure(X.support) == X.support
        assert A.rank_of_subset(X.generators) == X.rank


def test_flat_lookup():
    A = arr("G(3,3,3)")
    L = A.lattice
    assert L.flat([0, 1, 2]).rank == 2
    with pytest.raises(NotAFlat):
        L.flat([0, 1])
    assert L.flat_of([0, 1]).support == bits([0, 1, 2])
    assert L.top.support == A.full and L.bottom.support == 0


@pytest.mark.parametrize("name", RANK3)
def test_deletion_restriction_identity(name):
    A = arr(name)
    p = A.char_poly()
    t = IntPoly.x()
    for h in range(len(A)):
        T = triple(A, h)
        assert p == T.deletion.char_poly() + t * T.restriction.char_poly()


def test_triple_small_cases():
    one = Arrangement(3, 1, [[1, 0, 0]])
    T = triple(one, 0)
    assert len(T.deletion) == 0 and T.deletion.dim == 3
    assert len(T.restriction) == 0 and T.restriction.dim == 2

    B2 = catalog.boolean(2)
    T = triple(B2, 0)
    assert len(T.deletion) == 1 and T.deletion[0] == B2[1]
    assert len(T.restriction) == 1 and T.restriction.dim == 1

    T = triple(arr("G(3,3,3)"), 0)
    assert len(T.deletion) == 8
    # |A''| = 4; the identity pi(A) = pi(A') + t pi(A'') is checked separately
    assert len(T.restriction) == 4
    with pytest.raises(IndexError):
        triple(B2, 5)


def test_restriction_image_map():
    A = arr("G(3,3,3)")
    R = restrict(A, 1 << 0)
    assert set(R.image) == set(range(1, 9))
    assert set(R.image.values()) == set(range(len(R.arrangement)))


def test_product_identities():
    A = arr("G(3,3,3)")
    assert product(A, Arrangement.empty(0)) == A
    phi1 = Arrangement.empty(1)
    P = product(phi1, phi1)
    assert P.dim == 2 and len(P) == 0
    cube = product(catalog.boolean(1), catalog.boolean(2))
    assert cube == catalog.boolean(3)
    assert cube.lattice.counts() == [1, 3, 3, 1]


def test_product_lifts_conductor():
    P = product(arr("G(3,3,3)"), catalog.monomial(2, 1, 2))
    assert P.conductor == 6 and P.dim == 5 and len(P) == 9 + 4


@settings(max_examples=12, deadline=None)
@given(st.sampled_from(["boolean:1", "boolean:2", "braid:2", "braid:3", "G(3,3,3)", "B:2"]),
       st.sampled_from(["boolean:1", "boolean:2", "braid:2", "G(2,1,2)", "G(3,3,2)"]))
def test_product_char_poly(a, b):
    A1, A2 = arr(a), arr(b)
    P = product(A1, A2)
    assert len(P) == len(A1) + len(A2)
    assert P.char_poly() == A1.char_poly() * A2.char_poly()


@pytest.mark.parametrize("name", ["G(3,3,3)", "B:3", "D:4", "H3"])
def test_restriction_functorial(name):
    """(A^X)^Y' and A^Y agree (as lattices) for X < Y, Y' the image of Y."""
    A = arr(name)
    rng = random.Random(7)
    flats = [X for X in A.lattice if 0 < X.rank < A.rank]
    for X in rng.sample(flats, min(8, len(flats))):
        R = restrict(A, X)
        for Y in A.lattice.above(X):
            inner = {R.image[h] for h in Y.members if h in R.image}
            if not inner:
                continue
            Yp = R.arrangement.lattice.flat_of(inner)
            assert Yp.rank == Y.rank - X.rank
            twice = restriction(R.arrangement, Yp)
            once = restriction(A, Y)
            assert len(twice) == len(once)
            assert twice.char_poly() == once.char_poly()


def test_localization_keeps_order():
    A = arr("G29")
    X = A.lattice.flat([0, 5, 16, 20])
    B = localization(A, X)
    assert [h.normal for h in B] == [A[i].normal for i in X.members]
    assert B.rank == 2 and B.dim == 4


def test_file_roundtrip(tmp_path):
    for name in ["G(3,3,3)", "H3", "G29", "boolean:2"]:
        A = arr(name)
        text = format_arrangement(A, comment=name)
        assert text.startswith(f"# {name}\ndim ")
        assert parse_arrangement(text) == A


def test_file_format_rational_entries():
    text = """
    # two lines in Q(zeta_3)
    dim 2 conductor 3
    1 0   1/2 -3/4
    0 0   1 0
    """
    A = parse_arrangement(text)
    assert A.dim == 2 and len(A) == 2
    assert A[0].normal[1] == CycNum(3, [2, -3], 4)


@pytest.mark.parametrize("text", [
    "",
    "dim 2\n1 0\n",
    "dim 2 conductor 1\n1\n",
    "dim 2 conductor 1\n1 x\n",
    "dim 2 conductor 1\n1 0\n2 0\n",
    "dim 2 conductor 1\n1/0 0\n",
])
def test_file_format_errors(text):
    with pytest.raises(ArrangementFormatError):
        parse_arrangement(text)


def test_fingerprint_stable():
    assert arr("G(3,3,3)").fingerprint() == catalog.by_name("G(3,3,3)").fingerprint()
    assert arr("G(3,3,3)").fingerprint() != arr("G(4,4,3)").fingerprint()


def test_deletion_indexing():
    A = arr("B:3")
    D = deletion(A, 4)
    assert len(D) == 8 and D[4] == A[5]
