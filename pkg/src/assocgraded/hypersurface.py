"""Modules over the Artinian hypersurface ``A = Q/(Π^e)``, ``Q`` a DVR.

Such a module is ``⊕ Q/(Π^{a_i})`` with ``1 <= a_1 <= ... <= a_μ <= e``
and the multiset of ``a_i`` is a complete isomorphism invariant, so every
quantity below is a closed form in ``(e, a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import PreconditionError
from .laurent import LaurentPoly


@dataclass(frozen=True)
class HypersurfaceModule:
    e: int
    a: tuple

    def __post_init__(self):
        a = tuple(sorted(int(x) for x in self.a))
        if self.e < 1:
            raise PreconditionError("ring exponent e must be at least 1")
        if not a:
            raise PreconditionError("module needs at least one cyclic summand")
        if a[0] < 1 or a[-1] > self.e:
            raise PreconditionError(f"invariants must lie in [1, {self.e}], got {list(a)}")
        object.__setattr__(self, "a", a)

    @property
    def mu(self) -> int:
        return len(self.a)

    @property
    def ring_reduction_number(self) -> int:
        # m^(e-1) != 0 = m^e in Q/(Π^e)
        return self.e - 1


def hilbert_series(M: HypersurfaceModule) -> LaurentPoly:
    return sum((LaurentPoly.geometric(ai) for ai in M.a), LaurentPoly())


def e0(M: HypersurfaceModule) -> int:
    return sum(M.a)


def i_invariant(M: HypersurfaceModule) -> int:
    """Largest ``i`` with the presentation matrix in ``n^i``; here ``a_1``."""
    return M.a[0]


def dual_filtration_dims(M: HypersurfaceModule) -> LaurentPoly:
    """Graded dimensions of ``G(F_M, M*)`` for the dual filtration ``Hom(M, m^n)``.

    Each summand ``Q/(Π^a)`` contributes ``G(M*)`` shifted to start in
    degree ``e - a``.
    """
    return sum(
        (LaurentPoly.geometric(ai, start=M.e - ai) for ai in M.a), LaurentPoly()
    )


def alpha(M: HypersurfaceModule) -> int:
    """Initial degree of the dual filtration, ``e - a_μ``."""
    return M.e - M.a[-1]


def a_invariant(M: HypersurfaceModule) -> int:
    """Top nonzero degree of ``G(M)`` (dimension zero: no local cohomology needed)."""
    return M.a[-1] - 1


def is_ulrich(M: HypersurfaceModule) -> bool:
    return all(x == 1 for x in M.a)


def baby_ulrich_check(M: HypersurfaceModule) -> dict:
    return {
        "alpha_equals_red": alpha(M) == M.ring_reduction_number,
        "ulrich": is_ulrich(M),
        "a_invariant_is_minus_dim": a_invariant(M) == 0,
    }


def dual_is_adic_shift(M: HypersurfaceModule) -> bool:
    return M.a[0] == M.a[-1]


def gorenstein_shape_check(h: LaurentPoly, ell: int) -> int | None:
    """Return ``s`` when ``h == ell * (1 + z + ... + z^(s-1))``, else ``None``."""
    if h.is_zero():
        return None
    if h.valuation < 0:
        raise PreconditionError("shape check needs an h-polynomial in degrees >= 0")
    s = h.degree + 1
    if h == LaurentPoly.geometric(s, coeff=ell):
        return s
    return None


def lemma_halpha_check(M: HypersurfaceModule) -> bool:
    """Coefficient of ``z^{a_1}`` in the Hilbert series is below ``μ``."""
    return hilbert_series(M)[i_invariant(M)] < M.mu


def type_minmult_link(M: HypersurfaceModule) -> bool | None:
    """For ``a_i <= 2`` with some ``a_i = 2``: adic-shift iff ``e0 - μ == μ``.

    Returns ``None`` outside that family.
    """
    if M.a[-1] != 2:
        return None
    all_two = all(x == 2 for x in M.a)
    return dual_is_adic_shift(M) == all_two == (e0(M) - M.mu == M.mu)


def equivalence_suite(M: HypersurfaceModule) -> dict[str, bool]:
    """Every dimension-zero consequence checked on a single module."""
    bu = baby_ulrich_check(M)
    h = hilbert_series(M)
    dual = dual_filtration_dims(M)
    s = gorenstein_shape_check(h, M.mu)
    link = type_minmult_link(M)
    return {
        "hilbert_series_at_1": h(1) == e0(M),
        "dual_length_equals_length": dual(1) == e0(M),
        "alpha_is_dual_initial_degree": dual.valuation == alpha(M),
        "alpha_bounded_by_red": alpha(M) <= M.ring_reduction_number,
        "a_invariant_lower_bound": a_invariant(M) >= M.ring_reduction_number - alpha(M),
        "a_invariant_bound_sharp": a_invariant(M) == M.ring_reduction_number - alpha(M),
        "baby_ulrich_agree": len(set(bu.values())) == 1,
        "adic_shift_iff_shape": dual_is_adic_shift(M) == (s == M.a[0]),
        "lemma_halpha": lemma_halpha_check(M),
        "type_minmult_link": True if link is None else link,
    }


def corpus(max_e: int, max_mu: int, min_e: int = 2):
    """All modules with ``min_e <= e <= max_e`` and ``1 <= μ <= max_mu``."""
    for e in range(min_e, max_e + 1):
        for mu in range(1, max_mu + 1):
            for a in combinations_with_replacement(range(1, e + 1), mu):
                yield HypersurfaceModule(e, a)
