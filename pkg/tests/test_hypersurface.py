import pytest
from hypothesis import given, strategies as st

from assocgraded import hypersurface as hs
from assocgraded.errors import PreconditionError
from assocgraded.hypersurface import HypersurfaceModule as HM
from assocgraded.laurent import LaurentPoly

P = LaurentPoly.from_coeffs
Z = lambda terms: LaurentPoly(terms)  # noqa: E731


def test_validation():
    with pytest.raises(PreconditionError):
        HM(3, (4,))
    with pytest.raises(PreconditionError):
        HM(3, ())
    with pytest.raises(PreconditionError):
        HM(3, (0, 1))
    assert HM(4, (2, 1)).a == (1, 2)


@pytest.mark.parametrize(
    "M, h",
    [(HM(3, (2,)), P([1, 1])), (HM(4, (2, 2)), P([2, 2])), (HM(4, (1, 2)), P([2, 1]))],
)
def test_hilbert_series(M, h):
    assert hs.hilbert_series(M) == h


def test_e0_and_i():
    assert hs.e0(HM(3, (2,))) == 2
    assert hs.e0(HM(4, (2, 2))) == 4
    assert hs.e0(HM(5, (1, 2, 5))) == 8
    assert hs.i_invariant(HM(3, (2,))) == 2
    assert hs.i_invariant(HM(4, (1, 2))) == 1
    assert hs.i_invariant(HM(5, (3, 3, 3))) == 3


@pytest.mark.parametrize(
    "M, dims",
    [
        (HM(3, (2,)), Z({1: 1, 2: 1})),
        (HM(4, (1, 2)), Z({2: 1, 3: 2})),
        (HM(4, (2, 2)), Z({2: 2, 3: 2})),
    ],
)
def test_dual_filtration_dims(M, dims):
    assert hs.dual_filtration_dims(M) == dims


def test_alpha_and_ulrich():
    assert hs.alpha(HM(3, (1, 1))) == 2
    assert hs.alpha(HM(3, (2,))) == 1
    assert hs.alpha(HM(4, (1, 2))) == 2
    assert hs.is_ulrich(HM(3, (1, 1)))
    assert not hs.is_ulrich(HM(3, (2,)))
    assert hs.is_ulrich(HM(6, (1,) * 4))


def test_baby_ulrich_examples():
    assert all(hs.baby_ulrich_check(HM(3, (1, 1))).values())
    assert not any(hs.baby_ulrich_check(HM(3, (2,))).values())
    assert all(hs.baby_ulrich_check(HM(2, (1,))).values())


def test_adic_shift():
    assert hs.dual_is_adic_shift(HM(4, (2, 2)))
    assert not hs.dual_is_adic_shift(HM(4, (1, 2)))
    assert hs.dual_is_adic_shift(HM(5, (3,)))


def test_gorenstein_shape_check():
    assert hs.gorenstein_shape_check(P([2, 2]), 2) == 2
    assert hs.gorenstein_shape_check(P([2, 1]), 2) is None
    assert hs.gorenstein_shape_check(P([7]), 7) == 1
    assert hs.gorenstein_shape_check(P([38, 3, 3, 3, 3, 3, -4]), 38) is None


def test_lemma_halpha_examples():
    assert hs.hilbert_series(HM(4, (1, 2)))[1] == 1
    assert hs.hilbert_series(HM(4, (2, 2)))[2] == 0
    assert hs.hilbert_series(HM(3, (1,)))[1] == 0
    for M in (HM(4, (1, 2)), HM(4, (2, 2)), HM(3, (1,))):
        assert hs.lemma_halpha_check(M)


modules = st.integers(1, 8).flatmap(
    lambda e: st.lists(st.integers(1, e), min_size=1, max_size=6).map(lambda a: HM(e, tuple(a)))
)


@given(modules)
def test_equivalence_suite_holds(M):
    assert all(hs.equivalence_suite(M).values())


@given(modules)
def test_ulrich_equivalences(M):
    ulrich = hs.is_ulrich(M)
    assert ulrich == (hs.alpha(M) == M.e - 1) == (max(M.a) == 1)
    assert ulrich == (hs.e0(M) == M.mu)


@given(modules)
def test_mainhyper_shape(M):
    s = hs.gorenstein_shape_check(hs.hilbert_series(M), M.mu)
    assert hs.dual_is_adic_shift(M) == (s == M.a[0])
    if s is not None:
        # shape forces i(M) = s
        assert hs.i_invariant(M) == s


def test_corpus_counts():
    assert sum(1 for _ in hs.corpus(1, 4)) == 0
    # multisets of size mu from e values: C(e+mu-1, mu)
    from math import comb

    assert sum(1 for _ in hs.corpus(3, 2)) == sum(comb(e + mu - 1, mu) for e in (2, 3) for mu in (1, 2))
