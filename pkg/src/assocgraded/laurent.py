"""Integer Laurent polynomials and Hilbert-series bookkeeping.

A :class:`LaurentPoly` stores only its nonzero coefficients, so two
polynomials are equal exactly when their term dictionaries are equal.
Every h-vector and graded dimension vector in the package is one of these.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

from .errors import NotStabilized, PreconditionError

DEFAULT_WINDOW = 5


class LaurentPoly:
    """Immutable integer Laurent polynomial in one variable ``z``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for deg, c in (terms or {}).items():
            if not isinstance(deg, int) or not isinstance(c, int):
                raise TypeError("degrees and coefficients must be integers")
            if c:
                clean[deg] = c
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], start: int = 0) -> "LaurentPoly":
        """Build ``sum(c_i z^(start+i))`` from a dense coefficient list."""
        return cls({start + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, deg: int, coeff: int = 1) -> "LaurentPoly":
        return cls({deg: coeff})

    @classmethod
    def geometric(cls, length: int, start: int = 0, coeff: int = 1) -> "LaurentPoly":
        """``coeff * (z^start + ... + z^(start+length-1))``."""
        return cls({start + i: coeff for i in range(length)})

    # structure ----------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __getitem__(self, deg: int) -> int:
        return self._terms.get(deg, 0)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Highest degree ``s``; raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    @property
    def valuation(self) -> int:
        """Lowest degree ``-p``; raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def coeffs(self, start: int | None = None, stop: int | None = None) -> list[int]:
        """Dense coefficient list on ``[start, stop]`` (defaults to the support)."""
        if not self._terms:
            return []
        lo = self.valuation if start is None else start
        hi = self.degree if stop is None else stop
        return [self[i] for i in range(lo, hi + 1)]

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for d, c in other._terms.items():
            out[d] = out.get(d, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({d: -c for d, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result = LaurentPoly({0: 1})
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``z**k``."""
        return LaurentPoly({d + k: c for d, c in self._terms.items()})

    def __call__(self, x):
        """Evaluate at ``x``. Negative powers need ``x`` invertible (use Fraction)."""
        return sum(c * x**d for d, c in self._terms.items())

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({d - 1: d * c for d, c in self._terms.items()})

    # comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for d, c in self._terms.items():
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "z" if d == 1 else f"z^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    # serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"terms": [[d, c] for d, c in self._terms.items()]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "LaurentPoly":
        out: dict[int, int] = {}
        for deg, c in obj["terms"]:
            out[deg] = out.get(deg, 0) + c
        return cls(out)


ONE_MINUS_Z = LaurentPoly({0: 1, 1: -1})


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator / (1 - z)**dim``."""

    numerator: LaurentPoly
    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")

    def to_json(self) -> dict:
        return {"h": self.numerator.to_json(), "dim": self.dim}

    @classmethod
    def from_json(cls, obj: Mapping) -> "HilbertSeries":
        return cls(LaurentPoly.from_json(obj["h"]), int(obj["dim"]))


def fit_h_polynomial(values: list[int], d: int, window: int = DEFAULT_WINDOW) -> LaurentPoly:
    """Recover the h-polynomial from the first ``N+1`` Hilbert function values.

    Multiplies the truncated series by ``(1-z)**d``. Coefficients in degrees
    ``N-window+1 .. N`` must vanish, otherwise the data is too short to trust
    and :class:`NotStabilized` is raised. Terms above ``N`` are truncation
    debris and are discarded.
    """
    n_top = len(values) - 1
    if n_top < 1:
        raise PreconditionError("need at least two Hilbert function values")
    if window < 1:
        raise PreconditionError("stabilization window must be positive")
    if window > n_top + 1:
        raise NotStabilized(f"{n_top + 1} values cannot certify a window of {window}")
    prod = LaurentPoly.from_coeffs(values) * ONE_MINUS_Z**d
    tail = [prod[i] for i in range(n_top - window + 1, n_top + 1)]
    if any(tail):
        raise NotStabilized(
            f"trailing {window} coefficients up to degree {n_top} are {tail}, not zero"
        )
    return LaurentPoly({deg: c for deg, c in prod if deg <= n_top})


def expand(series: HilbertSeries, n_top: int) -> list[int]:
    """Coefficients ``0..n_top`` of ``numerator / (1-z)**dim``."""
    if n_top < 0:
        raise PreconditionError("N must be nonnegative")
    h = series.numerator
    if h and h.valuation < 0:
        raise PreconditionError("expansion is only defined for numerators in degrees >= 0")
    d = series.dim
    out = []
    for n in range(n_top + 1):
        # coefficient of z^m in (1-z)^-d is C(m+d-1, d-1); for d = 0 only m = 0
        total = 0
        for j, c in h:
            m = n - j
            if m < 0:
                continue
            if d == 0:
                total += c if m == 0 else 0
            else:
                total += c * comb(m + d - 1, d - 1)
        out.append(total)
    return out


def hilbert_coefficient(h: LaurentPoly, i: int) -> int:
    """``e_i = sum_j C(j, i) h_j``, the i-th derivative at 1 over i!."""
    if i < 0:
        raise PreconditionError("index must be nonnegative")
    if h and h.valuation < 0:
        raise PreconditionError("Hilbert coefficients need an h-polynomial in degrees >= 0")
    return sum(comb(j, i) * c for j, c in h)


def multiplicity(h: LaurentPoly) -> int:
    """``e_0 = h(1)``."""
    if h.is_zero():
        raise PreconditionError("multiplicity of the zero polynomial")
    return sum(c for _, c in h)


def reverse(h: LaurentPoly, r: int) -> LaurentPoly:
    """``z**r * h(1/z)``."""
    return LaurentPoly({r - d: c for d, c in h})


def is_symmetric(h: LaurentPoly) -> bool:
    """Palindromic on its support interval ``[-p, s]``."""
    if h.is_zero():
        raise PreconditionError("symmetry of the zero polynomial is undefined")
    return reverse(h, h.degree + h.valuation) == h


def idealization_series(h_ring: HilbertSeries, h_mod: HilbertSeries) -> HilbertSeries:
    """Series of ``A ⋉ M`` graded with ``M`` placed in degree 1.

    ``H_R = H_A + z H_M``, rewritten over ``(1-z)**dim A``.
    """
    if h_mod.dim > h_ring.dim:
        raise PreconditionError("module dimension exceeds ring dimension")
    lift = h_mod.numerator * ONE_MINUS_Z ** (h_ring.dim - h_mod.dim)
    return HilbertSeries(h_ring.numerator + lift.shift(1), h_ring.dim)
