"""Brute-force graded Hom spaces over finite-dimensional graded algebras.

An algebra ``G = G_0 ⊕ ... ⊕ G_D`` with ``G_0 = k`` is stored by the action
of each degree-one basis element on each graded piece, as matrices over
``Fraction``. Since the algebra is certified to be generated in degree one,
a family of linear maps ``λ_j : M_j -> G_{j+n}`` is a homomorphism exactly
when it commutes with those generators. That is a finite linear system,
solved here by exact elimination.

This module deliberately knows nothing about hypersurfaces or semigroups
beyond the small constructors at the bottom.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError
from .laurent import LaurentPoly

Matrix = list  # list of rows, each a list of Fraction


# exact linear algebra -------------------------------------------------------


def _size(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


def row_reduce(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q.

    Pivots are chosen by smallest bit-length in the current column to keep
    entries small; the result does not depend on that choice.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        best = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0 and (best is None or _size(mat[i][c]) < _size(mat[best][c])):
                best = i
        if best is None:
            continue
        mat[r], mat[best] = mat[best], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    if ncols == 0 or not rows:
        return 0
    return len(row_reduce(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{v : rows · v = 0}``."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = row_reduce(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def matmul(a: Matrix, b: Matrix, inner: int, ncols: int) -> Matrix:
    return [
        [sum((row[k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(ncols)]
        for row in a
    ]


def _zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


# graded objects ---------------------------------------------------------------


class GradedModuleRep:
    """Graded module ``M_0 ⊕ ... ⊕ M_top`` with generator action matrices.

    ``gen_action[g][j]`` is a ``dims[j+1] x dims[j]`` matrix for
    ``0 <= j < top``; multiplication out of the top degree is zero.
    """

    def __init__(self, dims: Sequence[int], gen_action, labels=None):
        self.dims = [int(d) for d in dims]
        if not self.dims or any(d < 0 for d in self.dims):
            raise PreconditionError("dimension vector must be nonempty and nonnegative")
        self.top = len(self.dims) - 1
        self.gen_action = []
        for per_degree in gen_action:
            if len(per_degree) != self.top:
                raise PreconditionError("need one action matrix per degree below the top")
            mats = []
            for j, mat in enumerate(per_degree):
                rows, cols = self.dims[j + 1], self.dims[j]
                if len(mat) != rows or any(len(row) != cols for row in mat):
                    raise PreconditionError(f"action matrix in degree {j} has the wrong shape")
                mats.append([[Fraction(x) for x in row] for row in mat])
            self.gen_action.append(mats)
        self.labels = labels
        self._check_commuting()

    @property
    def ngens(self) -> int:
        return len(self.gen_action)

    def action(self, g: int, j: int) -> Matrix:
        """Matrix of generator ``g`` from degree ``j`` to ``j+1`` (zero outside range)."""
        if 0 <= j < self.top:
            return self.gen_action[g][j]
        return _zeros(self.dim(j + 1), self.dim(j))

    def dim(self, j: int) -> int:
        return self.dims[j] if 0 <= j <= self.top else 0

    def total_dim(self) -> int:
        return sum(self.dims)

    def dims_poly(self) -> LaurentPoly:
        return LaurentPoly.from_coeffs(self.dims)

    def _check_commuting(self):
        for j in range(self.top - 1):
            for g in range(self.ngens):
                for h in range(g + 1, self.ngens):
                    gh = matmul(self.action(g, j + 1), self.action(h, j), self.dims[j + 1], self.dims[j])
                    hg = matmul(self.action(h, j + 1), self.action(g, j), self.dims[j + 1], self.dims[j])
                    if gh != hg:
                        raise PreconditionError(
                            f"generators {g} and {h} do not commute from degree {j}"
                        )


class GradedAlgebra(GradedModuleRep):
    """Commutative standard-graded algebra, certified at construction."""

    def __init__(self, dims: Sequence[int], gen_action, labels=None):
        super().__init__(dims, gen_action, labels)
        if self.dims[0] != 1:
            raise PreconditionError("degree-zero piece must be one-dimensional")
        if self.top >= 1 and self.ngens != self.dims[1]:
            raise PreconditionError("need exactly one generator per degree-one basis vector")
        for g in range(self.ngens if self.top >= 1 else 0):
            image = [row[0] for row in self.action(g, 0)]
            if image != [Fraction(int(i == g)) for i in range(self.dims[1])]:
                raise PreconditionError(f"generator {g} must act on 1 as basis vector {g}")
        for j in range(1, self.top):
            # columns of all generator images must span degree j+1
            rows = [
                sum((self.action(g, j)[i] for g in range(self.ngens)), [])
                for i in range(self.dims[j + 1])
            ]
            if rank(rows, self.ngens * self.dims[j]) != self.dims[j + 1]:
                raise PreconditionError(f"degree {j + 1} is not generated in degree one")


def _hom_system(M: GradedModuleRep, G: GradedAlgebra, n: int):
    """Unknown layout and equations for degree-``n`` homomorphisms ``M -> G``."""
    if M.ngens != G.ngens:
        raise PreconditionError("module and algebra use different generator counts")
    offsets = {}
    nvars = 0
    for j in range(M.top + 1):
        offsets[j] = nvars
        nvars += G.dim(j + n) * M.dim(j)

    def var(j, r, c):  # entry (r, c) of λ_j : M_j -> G_{j+n}
        return offsets[j] + r * M.dim(j) + c

    eqs = []
    for g in range(G.ngens):
        for j in range(M.top + 1):
            rows_out, cols = G.dim(j + n + 1), M.dim(j)
            if rows_out == 0 or cols == 0:
                continue
            am = M.action(g, j)
            ag = G.action(g, j + n)
            # λ_{j+1} · am - ag · λ_j = 0, entrywise (r, c)
            for r in range(rows_out):
                for c in range(cols):
                    eq = [Fraction(0)] * nvars
                    if j + 1 <= M.top:
                        for k in range(M.dim(j + 1)):
                            if am[k][c]:
                                eq[var(j + 1, r, k)] += am[k][c]
                    for k in range(G.dim(j + n)):
                        if ag[r][k]:
                            eq[var(j, k, c)] -= ag[r][k]
                    if any(eq):
                        eqs.append(eq)
    return eqs, nvars


def hom_degree_range(M: GradedModuleRep, G: GradedAlgebra) -> range:
    return range(-M.top, G.top + 1)


def hom_basis(M: GradedModuleRep, G: GradedAlgebra, n: int) -> tuple[list, list]:
    """Equations and a basis of solutions for ``*Hom_G(M, G)_n``."""
    eqs, nvars = _hom_system(M, G, n)
    return eqs, nullspace(eqs, nvars)


def hom_dims(M: GradedModuleRep, G: GradedAlgebra) -> LaurentPoly:
    """Graded dimensions of ``*Hom_G(M, G)``."""
    out = {}
    for n in hom_degree_range(M, G):
        eqs, nvars = _hom_system(M, G, n)
        out[n] = nvars - rank(eqs, nvars)
    return LaurentPoly(out)


def socle_dims(G: GradedModuleRep) -> LaurentPoly:
    """Graded dimensions of ``{v : g v = 0 for all degree-one g}``."""
    out = {}
    for j in range(G.top + 1):
        stacked = [row for g in range(G.ngens) for row in G.action(g, j)]
        out[j] = G.dims[j] - rank(stacked, G.dims[j])
    return LaurentPoly(out)


def verify_app5(M: GradedModuleRep, G: GradedAlgebra) -> bool:
    """Total length of ``M`` is at most that of ``*Hom_G(M, G)``."""
    return M.total_dim() <= hom_dims(M, G)(1)


# constructors ------------------------------------------------------------------


def truncated_polynomial(length: int) -> GradedAlgebra:
    """``k[x]/(x^length)`` with its standard grading."""
    if length < 1:
        raise PreconditionError("length must be positive")
    mats = [[[1]] for _ in range(length - 1)]
    return GradedAlgebra([1] * length, [mats] if length > 1 else [])


def cyclic_sum(lengths: Sequence[int], ngens: int = 1) -> GradedModuleRep:
    """``⊕ k[x]/(x^a_i)`` as a graded module over ``k[x]`` (basis ``x^j e_i``)."""
    lengths = list(lengths)
    top = max(lengths) - 1
    basis = [[i for i, a in enumerate(lengths) if a > j] for j in range(top + 1)]
    per_degree = []
    for j in range(top):
        mat = [[0] * len(basis[j]) for _ in basis[j + 1]]
        for c, i in enumerate(basis[j]):
            if i in basis[j + 1]:
                mat[basis[j + 1].index(i)][c] = 1
        per_degree.append(mat)
    return GradedModuleRep([len(b) for b in basis], [per_degree] * ngens)


def from_hypersurface(M) -> tuple[GradedAlgebra, GradedModuleRep]:
    """Matrix models of ``G(Q/(Π^e))`` and ``G(M)`` for a :class:`HypersurfaceModule`."""
    G = truncated_polynomial(M.e)
    if G.ngens == 0:
        # e = 1: G = k has no degree-one generators; so neither does G(M)
        return G, GradedModuleRep([len(M.a)], [])
    return G, cyclic_sum(M.a)
