"""Numerical semigroup rings ``k[[t^s : s in S]]`` and their m-adic filtrations.

Every ideal or fractional ideal that appears here is monomial, so it is
determined by its set of exponents. Such a set ``E`` is stored as a finite
"sporadic" part below a threshold ``T`` with ``[T, oo) ⊆ E``. Lengths of
monomial quotients are then cardinalities of finite set differences.

Notation: ``M_n`` is the exponent set of ``m^n``, ``a`` the smallest
generator (``t^a`` generates a minimal reduction of ``m``), ``B = A/(t^a)``
and ``K`` the standard canonical ideal ``{z : F - z not in S}``.

The principal reduction ``(t^a)`` is used for reduction numbers and for the
delta-invariant; with an infinite residue field it realizes the minimum over
all minimal reductions of ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import gcd
from typing import Iterable

from .errors import NotMember, NotSubmodule, PreconditionError
from .gradedhom import GradedAlgebra
from .laurent import DEFAULT_WINDOW, LaurentPoly, fit_h_polynomial, reverse


@dataclass(frozen=True)
class SemigroupModule:
    """A set ``E ⊆ Z`` that is cofinite upward: ``sporadic ∪ [threshold, oo)``.

    The representation is canonical: ``threshold - 1`` is never in the set
    and every sporadic element is below the threshold.
    """

    sporadic: frozenset
    threshold: int

    def __post_init__(self):
        elems = set(self.sporadic)
        t = self.threshold
        while t - 1 in elems:
            elems.discard(t - 1)
            t -= 1
        elems = {x for x in elems if x < t}
        object.__setattr__(self, "sporadic", frozenset(elems))
        object.__setattr__(self, "threshold", t)

    @classmethod
    def from_predicate(cls, pred, lo: int, hi: int) -> "SemigroupModule":
        """Set whose elements below ``hi`` are ``{x in [lo, hi) : pred(x)}``; ``[hi, oo)`` included."""
        return cls(frozenset(x for x in range(lo, hi) if pred(x)), hi)

    def __contains__(self, x: int) -> bool:
        return x >= self.threshold or x in self.sporadic

    @property
    def minimum(self) -> int:
        return min(self.sporadic) if self.sporadic else self.threshold

    def elements_below(self, bound: int) -> list[int]:
        lo = self.minimum
        return [x for x in range(lo, bound) if x in self]

    def shift(self, k: int) -> "SemigroupModule":
        return SemigroupModule(frozenset(x + k for x in self.sporadic), self.threshold + k)

    def add_set(self, gens: Iterable[int]) -> "SemigroupModule":
        """Minkowski sum ``E + gens`` for a finite nonempty set of integers."""
        gens = sorted(set(gens))
        hi = self.threshold + gens[0]
        lo = self.minimum + gens[0]
        return SemigroupModule.from_predicate(
            lambda x: any((x - g) in self for g in gens), lo, hi
        )

    def union(self, other: "SemigroupModule") -> "SemigroupModule":
        hi = min(self.threshold, other.threshold)
        return SemigroupModule(frozenset(self.sporadic | other.sporadic), hi)

    def intersection(self, other: "SemigroupModule") -> "SemigroupModule":
        hi = max(self.threshold, other.threshold)
        lo = min(self.minimum, other.minimum)
        return SemigroupModule.from_predicate(lambda x: x in self and x in other, lo, hi)

    def difference(self, other: "SemigroupModule") -> set[int]:
        """``self \\ other``; always finite since ``other`` is cofinite."""
        hi = other.threshold
        lo = self.minimum
        return {x for x in range(lo, hi) if x in self and x not in other}

    def issubset(self, other: "SemigroupModule") -> bool:
        if self.threshold < other.threshold:
            if any(x not in other for x in range(self.threshold, other.threshold)):
                return False
        return all(x in other for x in self.sporadic)

    def is_stable(self, gens: Iterable[int]) -> bool:
        """``E + g ⊆ E`` for every generator ``g``."""
        return all(
            x + g in self for g in gens for x in self.elements_below(self.threshold)
        )


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup given by its minimal generating set."""

    generators: tuple
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        gens = tuple(sorted(int(g) for g in self.generators))
        if not gens or gens[0] <= 0:
            raise PreconditionError("generators must be positive integers")
        if len(set(gens)) != len(gens):
            raise PreconditionError("generators must be distinct")
        if reduce(gcd, gens) != 1:
            raise PreconditionError(f"gcd of generators {list(gens)} is not 1")
        object.__setattr__(self, "generators", gens)
        for g in gens:
            others = [h for h in gens if h != g]
            if others and _in_span(g, others):
                raise PreconditionError(f"generator {g} is a sum of the others")

    @classmethod
    def generated_by(cls, gens: Iterable[int]) -> "NumericalSemigroup":
        """Semigroup generated by ``gens``, reduced to the minimal generating set."""
        pool = sorted(set(int(g) for g in gens))
        if not pool or pool[0] <= 0:
            raise PreconditionError("generators must be positive integers")
        if reduce(gcd, pool) != 1:
            raise PreconditionError(f"gcd of generators {pool} is not 1")
        minimal: list[int] = []
        for g in pool:
            if not _in_span(g, minimal):
                minimal.append(g)
        return cls(tuple(minimal))

    # basic combinatorics -------------------------------------------------

    @property
    def multiplicity(self) -> int:
        """Smallest generator ``a``."""
        return self.generators[0]

    @cached_property
    def _apery(self) -> tuple:
        # shortest path on residues mod a (Dijkstra on a cyclic graph)
        a = self.multiplicity
        best = [None] * a
        best[0] = 0
        frontier = {0}
        while frontier:
            nxt = set()
            for r in frontier:
                for g in self.generators[1:]:
                    v = best[r] + g
                    rr = v % a
                    if best[rr] is None or v < best[rr]:
                        best[rr] = v
                        nxt.add(rr)
            frontier = nxt
        return tuple(best)

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        return x >= self._apery[x % self.multiplicity]

    @property
    def frobenius(self) -> int:
        """Largest integer not in ``S``; ``-1`` for ``S = N``."""
        return max(self._apery) - self.multiplicity

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    def gaps(self) -> list[int]:
        return [x for x in range(self.conductor) if x not in self]

    def is_symmetric(self) -> bool:
        """Gap involution ``z -> F - z`` maps gaps onto ``S ∩ [0, F]``."""
        f = self.frobenius
        return all((x in self) != ((f - x) in self) for x in range(f + 1))

    def pseudo_frobenius(self) -> list[int]:
        """Integers ``x`` outside ``S`` with ``x + (S minus 0) ⊆ S``; ``[-1]`` for ``N``."""
        return [
            x
            for x in range(-1, self.conductor)
            if x not in self and all(x + g in self for g in self.generators)
        ]

    def type(self) -> int:
        return len(self.pseudo_frobenius())

    def as_module(self) -> SemigroupModule:
        return SemigroupModule.from_predicate(self.__contains__, 0, self.conductor)

    # filtrations ---------------------------------------------------------

    def power(self, n: int) -> SemigroupModule:
        """Exponent set ``M_n`` of ``m^n``, memoized per semigroup."""
        if n < 0:
            raise PreconditionError("power index must be nonnegative")
        powers = self._cache.setdefault("powers", [])
        # list.append is atomic, so concurrent readers see a prefix
        while len(powers) <= n:
            if not powers:
                powers.append(self.as_module())
            else:
                powers.append(powers[-1].add_set(self.generators))
        return powers[n]

    def enumeration_bound(self, n: int) -> int:
        """Every filtration level up to ``n+1`` contains ``[bound, oo)``."""
        return self.conductor + (n + 1) * self.generators[-1]


def _in_span(x: int, gens: list[int]) -> bool:
    """Is ``x`` a nonnegative integer combination of ``gens``?"""
    if x == 0:
        return True
    if not gens:
        return False
    reach = [False] * (x + 1)
    reach[0] = True
    for v in range(1, x + 1):
        reach[v] = any(v >= g and reach[v - g] for g in gens)
    return reach[x]


def apery_set(S: NumericalSemigroup, a: int) -> list[int]:
    """Smallest element of ``S`` in each residue class mod ``a``, indexed by residue."""
    if a <= 0 or a not in S:
        raise NotMember(f"{a} is not a positive element of the semigroup")
    out: list[int | None] = [None] * a
    missing = a
    x = 0
    while missing:
        if x in S and out[x % a] is None:
            out[x % a] = x
            missing -= 1
        x += 1
    return out


def power_module(S: NumericalSemigroup, n: int) -> SemigroupModule:
    return S.power(n)


def quotient_length(E: SemigroupModule, F: SemigroupModule) -> int:
    """``#(E \\ F)``, the length of the monomial quotient ``E/F``."""
    if not F.issubset(E):
        raise NotSubmodule("second module is not contained in the first")
    return len(E.difference(F))


def hilbert_function_ring(S: NumericalSemigroup, n: int) -> int:
    """``ℓ(m^n / m^{n+1})``."""
    return quotient_length(S.power(n), S.power(n + 1))


def artin_quotient_hf(S: NumericalSemigroup, n: int) -> int:
    """``ℓ(m^n B / m^{n+1} B)`` for ``B = A/(t^a)``."""
    principal = S.as_module().shift(S.multiplicity)
    killed = S.power(n + 1).union(principal)
    return len(S.power(n).difference(killed))


def reduction_number(S: NumericalSemigroup) -> int:
    """Least ``n`` with ``M_{n+1} = a + M_n``."""
    a = S.multiplicity
    n = 0
    while S.power(n + 1) != S.power(n).shift(a):
        n += 1
    return n


def delta_invariant(S: NumericalSemigroup) -> int:
    """``sum_n #((M_{n+1} ∩ (a+S)) \\ (a + M_n))``.

    Terms vanish once ``n`` reaches the reduction number.
    """
    a = S.multiplicity
    principal = S.as_module().shift(a)
    total = 0
    for n in range(reduction_number(S) + 1):
        meet = S.power(n + 1).intersection(principal)
        total += len(meet.difference(S.power(n).shift(a)))
    return total


def assoc_graded_is_cm(S: NumericalSemigroup) -> bool:
    return delta_invariant(S) == 0


def canonical_module(S: NumericalSemigroup) -> SemigroupModule:
    """``K = {z : F - z not in S}``; equal to ``S`` itself for ``S = N``."""
    f = S.frobenius
    return SemigroupModule.from_predicate(lambda z: (f - z) not in S, 0, f + 1)


def _canonical_power(S: NumericalSemigroup, n: int) -> SemigroupModule:
    powers = S._cache.setdefault("canonical_powers", [])
    while len(powers) <= n:
        if not powers:
            powers.append(canonical_module(S))
        else:
            powers.append(powers[-1].add_set(S.generators))
    return powers[n]


def canonical_quotient_hf(S: NumericalSemigroup, n: int) -> int:
    """``ℓ(m^n ω_B / m^{n+1} ω_B)`` with ``ω_B = ω_A / t^a ω_A``."""
    k_mod = _canonical_power(S, 0)
    killed = _canonical_power(S, n + 1).union(k_mod.shift(S.multiplicity))
    return len(_canonical_power(S, n).difference(killed))


def _finite_hf(fn, S: NumericalSemigroup) -> LaurentPoly:
    # B and ω_B have length a; their Hilbert functions vanish past degree a-1
    vals = [fn(S, n) for n in range(S.multiplicity + 1)]
    return LaurentPoly.from_coeffs(vals)


def h_ring(S: NumericalSemigroup, window: int = DEFAULT_WINDOW) -> LaurentPoly:
    """h-polynomial of ``G_m(A)`` from ``ℓ(m^n/m^{n+1})`` with ``d = 1``."""
    top = reduction_number(S) + window
    return fit_h_polynomial([hilbert_function_ring(S, n) for n in range(top + 1)], 1, window)


def h_artin(S: NumericalSemigroup) -> LaurentPoly:
    return _finite_hf(artin_quotient_hf, S)


def h_canonical_artin(S: NumericalSemigroup) -> LaurentPoly:
    return _finite_hf(canonical_quotient_hf, S)


def canonical_criterion(S: NumericalSemigroup) -> bool:
    """``h(ω_B, z) == z^r h(B, 1/z)`` with ``r`` the reduction number."""
    return h_canonical_artin(S) == reverse(h_artin(S), reduction_number(S))


def classify_dim1(S: NumericalSemigroup, window: int = DEFAULT_WINDOW) -> dict:
    """a-invariant and borderline flags; requires ``G_m(A)`` Cohen-Macaulay."""
    if not assoc_graded_is_cm(S):
        raise PreconditionError("associated graded ring is not Cohen-Macaulay")
    h = h_ring(S, window)
    a_inv = h.degree - 1
    return {
        "a_invariant": a_inv,
        "regular": a_inv == -1,
        "minimal_multiplicity": a_inv == 0,
    }


def order(S: NumericalSemigroup, s: int) -> int:
    """``max{n : s in M_n}`` for ``s in S``."""
    if s not in S:
        raise NotMember(f"{s} is not in the semigroup")
    n = 0
    while s in S.power(n + 1):
        n += 1
    return n


def build_artinian_graded(S: NumericalSemigroup) -> GradedAlgebra:
    """Matrix model of ``G(B)``: basis the Apéry set of ``a`` graded by order."""
    if delta_invariant(S) != 0:
        raise PreconditionError("delta-invariant is nonzero; G(B) is not G(A)/(x*)")
    a = S.multiplicity
    ap = sorted(apery_set(S, a))
    apery = set(ap)
    by_degree: dict[int, list[int]] = {}
    deg_of = {}
    for s in ap:
        d = order(S, s)
        deg_of[s] = d
        by_degree.setdefault(d, []).append(s)
    top = max(by_degree)
    basis = [by_degree.get(d, []) for d in range(top + 1)]
    gens = basis[1] if top >= 1 else []

    def product(s, t):
        u = s + t
        if u in apery and deg_of[u] == deg_of[s] + deg_of[t]:
            return u
        return None

    actions = []
    for g in gens:
        per_degree = []
        for j in range(top):
            rows, cols = len(basis[j + 1]), len(basis[j])
            mat = [[0] * cols for _ in range(rows)]
            for c, s in enumerate(basis[j]):
                u = product(g, s)
                if u is not None:
                    mat[basis[j + 1].index(u)][c] = 1
            per_degree.append(mat)
        actions.append(per_degree)
    return GradedAlgebra([len(b) for b in basis], actions, labels=basis)
