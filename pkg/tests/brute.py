"""Slow, obviously-correct reference computations used as test oracles.

Nothing here imports the package's algorithms; only plain sets and loops.
"""

from fractions import Fraction
from itertools import product


def semigroup_elements(gens, bound):
    """``S ∩ [0, bound)`` by dynamic programming."""
    member = [False] * bound
    member[0] = True
    for x in range(1, bound):
        member[x] = any(x >= g and member[x - g] for g in gens)
    return {x for x in range(bound) if member[x]}


def power_elements(gens, n, bound):
    """Exponents of ``m^n`` below ``bound``: n-fold generator sums plus S."""
    S = semigroup_elements(gens, bound)
    sums = {0}
    for _ in range(n):
        sums = {s + g for s in sums for g in gens if s + g < bound}
    return {s + t for s in sums for t in S if s + t < bound}


class BruteSemigroup:
    """Everything computed on a fixed finite window ``[0, bound)``."""

    def __init__(self, gens, levels=None):
        self.gens = sorted(gens)
        a = self.gens[0]
        # generous window: conductor <= (a-1)(max-1) + ... ; take a crude bound
        crude_conductor = self.gens[0] * self.gens[-1]
        self.levels = levels or (self.gens[0] + 3)
        self.bound = crude_conductor + (self.levels + 3) * self.gens[-1]
        self.S = semigroup_elements(self.gens, self.bound)
        self.M = [power_elements(self.gens, n, self.bound) for n in range(self.levels + 2)]
        self.a = a
        # only trust degrees far enough below the window edge
        self.safe = self.bound - self.gens[-1] * 2 - a

    def hf_ring(self, n):
        return len({x for x in self.M[n] - self.M[n + 1] if x < self.safe})

    def hf_artin(self, n):
        aS = {x + self.a for x in self.S}
        return len({x for x in self.M[n] - self.M[n + 1] - aS if x < self.safe})

    def reduction_number(self):
        for n in range(self.levels):
            shifted = {x + self.a for x in self.M[n]}
            if {x for x in self.M[n + 1] if x < self.safe} == {x for x in shifted if x < self.safe}:
                return n
        raise AssertionError("window too small")

    def delta(self):
        aS = {x + self.a for x in self.S}
        total = 0
        for n in range(self.levels):
            aMn = {x + self.a for x in self.M[n]}
            total += len({x for x in (self.M[n + 1] & aS) - aMn if x < self.safe})
        return total

    def frobenius(self):
        gaps = [x for x in range(self.safe) if x not in self.S]
        return max(gaps) if gaps else -1

    def canonical(self):
        f = self.frobenius()
        return {z for z in range(self.safe) if (f - z) not in self.S}

    def hf_canonical_artin(self, n):
        K = self.canonical()
        Kn = [K]
        for _ in range(n + 1):
            Kn.append({x + g for x in Kn[-1] for g in self.gens if x + g < self.safe})
        aK = {x + self.a for x in K}
        return len(Kn[n] - Kn[n + 1] - aK)


def colength_box(nvars, gens):
    """Count lattice points in the pure-power box divisible by no generator."""
    box = []
    for i in range(nvars):
        box.append(min(g[i] for g in gens if all(g[k] == 0 for k in range(nvars) if k != i)))
    count = 0
    for pt in product(*(range(b) for b in box)):
        if not any(all(g[k] <= pt[k] for k in range(nvars)) for g in gens):
            count += 1
    return count


def ideal_power_gens(gens, n):
    """All n-fold products, unfiltered (fine for divisibility tests)."""
    out = {tuple([0] * len(gens[0]))}
    for _ in range(n):
        out = {tuple(x + y for x, y in zip(u, g)) for u in out for g in gens}
    return sorted(out)


def poly_times_one_minus_z(coeffs, d):
    """Dense ``coeffs * (1 - z)^d`` by repeated differencing."""
    out = list(coeffs)
    for _ in range(d):
        out = [out[0]] + [out[i] - out[i - 1] for i in range(1, len(out))] + [-out[-1]]
    return out


def series_over_one_minus_z(coeffs, d, n_top):
    """First ``n_top+1`` coefficients of ``coeffs / (1-z)^d`` via partial sums."""
    out = list(coeffs) + [0] * (n_top + 1)
    out = out[: n_top + 1]
    for _ in range(d):
        acc = 0
        for i in range(len(out)):
            acc += out[i]
            out[i] = acc
    return out


def hom_dim_truncated(a, e, n):
    """dim Hom_{k[x]}(k[x]/x^a, k[x]/x^e) in degree n, by direct enumeration.

    A homogeneous degree-n map sends 1 to c x^n with x^a · x^n = 0 in
    k[x]/x^e, or c = 0. So the space is 1-dimensional iff 0 <= n < e and
    n + a >= e.
    """
    return int(0 <= n < e and n + a >= e)


def solve_residuals(eqs, vec):
    return [sum((Fraction(c) * v for c, v in zip(row, vec)), Fraction(0)) for row in eqs]
