"""m-primary monomial ideals in k[X,Y] or k[X,Y,Z].

Colengths are counted on the staircase: for each column of the box cut out
by the pure powers, the number of standard monomials is the least last
exponent among generators dividing that column's lattice points.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import NotPrimary, NotStabilized, PreconditionError, WrongDimension
from .laurent import DEFAULT_WINDOW, LaurentPoly, fit_h_polynomial, hilbert_coefficient

DEFAULT_MAX_N = 128


def _divides(u, v) -> bool:
    return all(x <= y for x, y in zip(u, v))


def minimalize(gens) -> frozenset:
    """Drop every exponent vector divisible by another one."""
    kept: list[tuple] = []
    for g in sorted(set(map(tuple, gens)), key=lambda v: (sum(v), v)):
        if not any(_divides(k, g) for k in kept):
            kept.append(g)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: frozenset

    def __post_init__(self):
        if self.nvars not in (2, 3):
            raise WrongDimension("only 2 or 3 variables are supported")
        gens = [tuple(int(x) for x in g) for g in self.gens]
        if not gens:
            raise PreconditionError("ideal needs at least one generator")
        if any(len(g) != self.nvars for g in gens):
            raise PreconditionError(f"exponent vectors must have length {self.nvars}")
        if any(x < 0 for g in gens for x in g):
            raise PreconditionError("exponents must be nonnegative")
        if any(not any(g) for g in gens):
            raise PreconditionError("the unit ideal is not m-primary")
        minimal = minimalize(gens)
        if len(minimal) != len(set(gens)):
            raise PreconditionError("generators are not minimal")
        object.__setattr__(self, "gens", minimal)
        if any(self.pure_power(i) is None for i in range(self.nvars)):
            raise NotPrimary("some variable has no pure power among the generators")

    @classmethod
    def of(cls, *gens) -> "MonomialIdeal":
        """Convenience constructor that minimalizes its input."""
        return cls(len(gens[0]), minimalize(gens))

    def pure_power(self, i: int) -> int | None:
        for g in self.gens:
            if g[i] > 0 and all(x == 0 for k, x in enumerate(g) if k != i):
                return g[i]
        return None

    def sorted_gens(self) -> list[tuple]:
        return sorted(self.gens)


def colength(I: MonomialIdeal) -> int:
    """Number of monomials outside ``I``."""
    box = [I.pure_power(i) for i in range(I.nvars)]
    if any(b is None for b in box):
        raise NotPrimary("ideal is not m-primary")
    *outer, last = range(I.nvars)
    total = 0
    for corner in product(*(range(box[i]) for i in outer)):
        height = min(
            g[last] for g in I.gens if all(g[i] <= corner[i] for i in outer)
        )
        total += height
    return total


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.nvars != J.nvars:
        raise WrongDimension("ideals live in different rings")
    prods = [tuple(x + y for x, y in zip(g, h)) for g in I.gens for h in J.gens]
    return MonomialIdeal(I.nvars, minimalize(prods))


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 1:
        raise PreconditionError("power must be at least 1")
    out = I
    for _ in range(n - 1):
        out = multiply(out, I)
    return out


class _PowerTower:
    """Colengths of ``I^0, I^1, ...`` computed incrementally."""

    def __init__(self, I: MonomialIdeal):
        self.ideal = I
        self.powers = [None, I]
        self.colengths = [0, colength(I)]

    def colength(self, n: int) -> int:
        while len(self.colengths) <= n:
            nxt = multiply(self.powers[-1], self.ideal)
            self.powers.append(nxt)
            self.colengths.append(colength(nxt))
        return self.colengths[n]

    def hilbert_function(self, n: int) -> int:
        return self.colength(n + 1) - self.colength(n)


def hilbert_function(I: MonomialIdeal, n: int) -> int:
    """``ℓ(I^n / I^{n+1})``."""
    if n < 0:
        raise PreconditionError("degree must be nonnegative")
    upper = colength(power(I, n + 1))
    lower = colength(power(I, n)) if n > 0 else 0
    return upper - lower


def h_polynomial(
    I: MonomialIdeal, window: int = DEFAULT_WINDOW, max_n: int = DEFAULT_MAX_N
) -> LaurentPoly:
    """h-polynomial of ``G_I(A)``, extending the data until the fit stabilizes."""
    tower = _PowerTower(I)
    n_top = 4 * max(I.pure_power(i) for i in range(I.nvars))
    while True:
        n_top = min(n_top, max_n)
        values = [tower.hilbert_function(n) for n in range(n_top + 1)]
        try:
            return fit_h_polynomial(values, I.nvars, window)
        except NotStabilized:
            if n_top >= max_n:
                raise
            n_top *= 2


def is_parameter_ideal(I: MonomialIdeal) -> bool:
    return len(I.gens) == I.nvars


def classify_dim2(
    I: MonomialIdeal, window: int = DEFAULT_WINDOW, max_n: int = DEFAULT_MAX_N
) -> dict:
    """Hilbert coefficients and the a-invariant verdict for ``G_I(k[X,Y]_(X,Y))``.

    A parameter ideal has ``a = -2``; otherwise ``e_2 = 0`` forces ``a = -1``
    and ``e_2 != 0`` leaves ``a >= 0``. The minimal-multiplicity flag is the
    shape test ``h = h_0 + h_1 z`` and is only a sufficient condition, since
    integral closedness is not checked.
    """
    if I.nvars != 2:
        raise WrongDimension("classification is implemented for two variables")
    h = h_polynomial(I, window, max_n)
    e = [hilbert_coefficient(h, i) for i in range(3)]
    parameter = is_parameter_ideal(I)
    if parameter:
        verdict, tag = "a=-2", "a-result"
    elif e[2] == 0:
        verdict, tag = "a=-1", "dim2-hoa"
    else:
        verdict, tag = "a>=0", "dim2-hoa"
    return {
        "h": h,
        "e": e,
        "parameter_ideal": parameter,
        "a_invariant": verdict,
        "a_invariant_tag": tag,
        "minimal_multiplicity_shape": h.degree == 1,
    }
