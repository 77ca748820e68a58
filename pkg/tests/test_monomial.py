import pytest
from hypothesis import given, settings, strategies as st

from assocgraded import monomial as mono
from assocgraded.errors import NotPrimary, NotStabilized, PreconditionError, WrongDimension
from assocgraded.laurent import LaurentPoly, multiplicity
from assocgraded.monomial import MonomialIdeal

import brute

P = LaurentPoly.from_coeffs
MARLEY = MonomialIdeal.of((7, 0), (6, 1), (1, 6), (0, 7))
MAX = MonomialIdeal.of((1, 0), (0, 1))
SQUARE = MonomialIdeal.of((2, 0), (1, 1), (0, 2))


def test_validation():
    with pytest.raises(NotPrimary):
        MonomialIdeal.of((2, 0), (1, 1))
    with pytest.raises(PreconditionError):
        MonomialIdeal(2, frozenset({(2, 0), (3, 0), (0, 1)}))
    with pytest.raises(WrongDimension):
        MonomialIdeal.of((1,))
    assert MonomialIdeal.of((2, 0), (3, 1), (0, 2)).gens == {(2, 0), (0, 2)}


def test_colength_examples():
    assert mono.colength(MARLEY) == 38
    assert mono.colength(MAX) == 1
    assert mono.colength(MonomialIdeal.of((2, 0), (0, 2))) == 4


def test_power_examples():
    assert mono.power(MAX, 2).gens == {(2, 0), (1, 1), (0, 2)}
    assert mono.power(MonomialIdeal.of((2, 0), (0, 2)), 2).gens == {(4, 0), (2, 2), (0, 4)}
    assert mono.power(mono.power(MARLEY, 2), 2) == mono.power(MARLEY, 4)


def test_hilbert_function_examples():
    assert mono.hilbert_function(MAX, 3) == 4
    assert mono.hilbert_function(MonomialIdeal.of((2, 0), (0, 2)), 1) == 8
    assert mono.hilbert_function(MARLEY, 0) == 38


def test_marley_hilbert_function_against_box_enumeration():
    gens = sorted(MARLEY.gens)
    prev = 0
    for n in range(1, 6):
        box = brute.colength_box(2, brute.ideal_power_gens(gens, n))
        assert mono.colength(mono.power(MARLEY, n)) == box
        assert mono.hilbert_function(MARLEY, n - 1) == box - prev
        prev = box


def test_h_polynomial_examples():
    assert mono.h_polynomial(MARLEY) == P([38, 3, 3, 3, 3, 3, -4])
    assert mono.h_polynomial(SQUARE) == P([3, 1])
    for a in (2, 3, 5):
        for b in (1, 4):
            assert mono.h_polynomial(MonomialIdeal.of((a, 0), (0, b))) == P([a * b])


def test_h_polynomial_three_variables():
    m3 = MonomialIdeal.of((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert mono.h_polynomial(m3) == P([1])
    # (x, y, z)^2 has h = 4 + 4z (H(n) = C(2n+3, 3) - C(2n+1, 3) ... checked by fit of box counts)
    sq = mono.power(m3, 2)
    gens = sorted(sq.gens)
    box = [brute.colength_box(3, brute.ideal_power_gens(gens, n)) if n else 0 for n in range(12)]
    from assocgraded.laurent import fit_h_polynomial

    hf = [box[n + 1] - box[n] for n in range(11)]
    assert mono.h_polynomial(sq) == fit_h_polynomial(hf, 3)


def test_h_polynomial_cap():
    with pytest.raises(NotStabilized):
        mono.h_polynomial(MARLEY, max_n=8)


def test_parameter_ideal():
    assert mono.is_parameter_ideal(MonomialIdeal.of((3, 0), (0, 5)))
    assert not mono.is_parameter_ideal(MARLEY)
    assert not mono.is_parameter_ideal(SQUARE)


def test_classify_examples():
    c = mono.classify_dim2(MARLEY)
    assert c["e"] == [49, 21, 0]
    assert c["a_invariant"] == "a=-1" and not c["parameter_ideal"]
    assert mono.classify_dim2(MonomialIdeal.of((3, 0), (0, 3)))["a_invariant"] == "a=-2"
    sq = mono.classify_dim2(SQUARE)
    assert sq["h"] == P([3, 1]) and sq["minimal_multiplicity_shape"] and sq["a_invariant"] == "a=-1"


def test_classify_wrong_dimension():
    with pytest.raises(WrongDimension):
        mono.classify_dim2(MonomialIdeal.of((1, 0, 0), (0, 1, 0), (0, 0, 1)))


staircases = st.lists(
    st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=0, max_size=4
).flatmap(
    lambda extra: st.tuples(st.integers(1, 5), st.integers(1, 5)).map(
        lambda pp: MonomialIdeal.of((pp[0], 0), (0, pp[1]), *[e for e in extra if any(e)])
    )
)


@settings(max_examples=40, deadline=None)
@given(staircases)
def test_colength_matches_box(I):
    assert mono.colength(I) == brute.colength_box(2, sorted(I.gens))
    sq = mono.power(I, 2)
    assert mono.colength(sq) == brute.colength_box(2, brute.ideal_power_gens(sorted(I.gens), 2))


@settings(max_examples=25, deadline=None)
@given(staircases)
def test_classification_properties(I):
    c = mono.classify_dim2(I)
    # parameter ideals always have e_2 = 0
    assert not (c["parameter_ideal"] and c["e"][2] != 0)
    assert c["e"][0] == multiplicity(c["h"])
    hf = [mono.hilbert_function(I, n) for n in range(4)]
    assert all(x >= 0 for x in hf)
    lengths = [mono.colength(mono.power(I, n)) for n in range(1, 5)]
    assert lengths == sorted(set(lengths))


def test_multiplicity_from_large_power():
    # 2 * colength(I^n) / n^2 -> e0; the exact second difference equals e0
    n = 20
    L = [mono.colength(mono.power(MARLEY, k)) for k in (n, n + 1, n + 2)]
    assert L[2] - 2 * L[1] + L[0] == 49
