"""Exact Lie algebra core: structure tensors, automorphisms, torality.

A LieAlgebra here is a basis-indexed bracket table with integer structure
constants over a common denominator.  That covers the split algebra in a
Chevalley basis (denominator 1) and the tensor-product realizations whose
natural constants pick up small denominators; scalars only enter through
the coefficients of vectors, which live in the cyclotomic working field.

Big exhaustive identities (Jacobi, Killing) run on a dense int64 tensor via
numpy; element-level work (brackets, centralizers, fixed subalgebras) runs
on sparse exact vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cyclo import field
from .linalg import (
    ColumnSolver,
    Vec,
    column_relations,
    vec_axpy,
    vec_equal,
)

__all__ = [
    "LieAlgebra",
    "LinearMap",
    "Automorphism",
    "Subspace",
    "ReductiveProfile",
    "identity_auto",
    "identity_map",
    "fixed_subalgebra",
    "joint_fixed_space",
    "reductive_profile",
    "auto_class",
    "torality_test",
]


class LieAlgebra:
    """Finite-dimensional algebra with integer structure constants.

    table[(i, j)] holds the bracket of basis elements i and j as a list of
    (index, integer coefficient) pairs; omitted pairs bracket to zero.  The
    true constant is the integer divided by `denom` (a single global
    denominator keeps the exhaustive checks in integer arithmetic).
    Antisymmetry is the builder's responsibility and is verified, together
    with the Jacobi identity, by check_axioms().
    """

    def __init__(self, dim: int, table: dict[tuple[int, int], list[tuple[int, int]]],
                 level: int = 36, denom: int = 1):
        self.dim = dim
        self.level = level
        self.field = field(level)
        self.table = table
        self.denom = denom
        self._tensor = None

    @property
    def tensor(self) -> np.ndarray:
        """Dense int64 numerator tensor N[i, j, k] (bracket -> denom * coefficients)."""
        if self._tensor is None:
            N = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
            for (i, j), terms in self.table.items():
                for k, c in terms:
                    N[i, j, k] += c
            self._tensor = N
        return self._tensor

    # -- exact element computations -----------------------------------------

    def bracket(self, x: Vec, y: Vec) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for j, b in y.items():
                terms = self.table.get((i, j))
                if not terms:
                    continue
                ab = a * b
                for k, c in terms:
                    cur = out.get(k)
                    t = ab * self.field.from_rational(Fraction(c, self.denom))
                    t = t if cur is None else cur + t
                    if t.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = t
        return out

    def ad_columns(self, x: Vec) -> list[Vec]:
        """Columns of ad(x) on the full basis."""
        cols = []
        for j in range(self.dim):
            cols.append(self.bracket(x, {j: self.field.one}))
        return cols

    def basis_vec(self, i: int) -> Vec:
        return {i: self.field.one}

    # -- exhaustive integer checks ------------------------------------------

    def check_axioms(self) -> None:
        """Antisymmetry and Jacobi over the whole basis; raises on failure.

        Both identities are bilinear relations between pairs of structure
        constants, so the global denominator cancels and the integer
        numerator tensor can be checked as-is.
        """
        N = self.tensor
        if not (N + N.transpose(1, 0, 2) == 0).all():
            raise ArithmeticError("structure tensor is not antisymmetric")
        # Jacobi as the derivation property of each ad(b_k):
        # [b_k,[b_i,b_j]] = [[b_k,b_i],b_j] + [b_i,[b_k,b_j]] for all i, j
        for k in range(self.dim):
            A = N[k]  # A[j, l] = coefficient of b_l in [b_k, b_j]
            left = np.tensordot(N, A, axes=([2], [0]))
            # left[i,j,l] = sum_m N[i,j,m] A[m,l]
            term1 = np.tensordot(A, N, axes=([1], [0]))
            # term1[i,j,l] = sum_m A[i,m] N[m,j,l]
            term2 = np.tensordot(A, N.transpose(1, 0, 2), axes=([1], [0]))
            term2 = term2.transpose(1, 0, 2)
            # term2[i,j,l] = sum_m A[j,m] N[i,m,l]
            if not (left == term1 + term2).all():
                raise ArithmeticError(f"Jacobi fails against basis element {k}")

    def killing_matrix(self) -> np.ndarray:
        """K[i, j] = trace(ad b_i ad b_j) times denom**2, dense int64.

        The denominator scaling is harmless for every downstream use
        (nondegeneracy, orthogonality of graded components): those are
        zero/nonzero statements.
        """
        N = self.tensor
        return np.einsum("iab,jba->ij", N, N, optimize=True)

    # -- subalgebra utilities ------------------------------------------------

    def centralizer_dim(self, x: Vec, subbasis: list[Vec] | None = None) -> int:
        """dim of the kernel of ad(x), optionally restricted to a span.

        With a subbasis, counts solutions inside the span only (ad(x) of a
        span member must vanish identically, and members are independent).
        """
        if subbasis is None:
            subbasis = [self.basis_vec(i) for i in range(self.dim)]
        cols = [self.bracket(x, v) for v in subbasis]
        return len(column_relations(cols, self.level))

    def generic_rank(self, subbasis: list[Vec], seed: int = 20240622,
                     draws: int = 5) -> tuple[int, list[int]]:
        """Minimal centralizer dimension over seeded random combinations.

        Returns (rank, witness coefficients).  For a reductive subalgebra
        the minimum over generic elements is its rank; a handful of draws
        with distinct small prime coefficients makes a degenerate draw very
        unlikely, and taking the minimum keeps one-sided correctness: the
        true rank never exceeds the reported value.
        """
        primes = [1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                  53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
        rng = np.random.default_rng(seed)
        best = None
        best_coeffs = None
        for _ in range(draws):
            coeffs = [int(rng.choice(primes)) for _ in subbasis]
            x: Vec = {}
            for c, v in zip(coeffs, subbasis):
                x = vec_axpy(self.field.from_rational(c), v, x)
            d = self.centralizer_dim(x, subbasis)
            if best is None or d < best:
                best, best_coeffs = d, coeffs
        return best, best_coeffs


class LinearMap:
    """Invertible linear map on a based space, stored as sparse exact columns.

    Carries no algebra structure; suitable for module summands and for the
    action-only realizations where the bracket is not materialized.
    """

    def __init__(self, cols: list[Vec], level: int = 36):
        self.cols = cols
        self.dim = len(cols)
        self.level = level
        self.field = field(level)

    def __call__(self, v: Vec) -> Vec:
        out: Vec = {}
        for j, c in v.items():
            out = vec_axpy(c, self.cols[j], out)
        return out

    def _wrap(self, cols: list[Vec]) -> "LinearMap":
        return LinearMap(cols, self.level)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other (matrix product self @ other)."""
        return self._wrap([self(c) for c in other.cols])

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return self.compose(other)

    def is_identity(self) -> bool:
        one = self.field.one
        return all(vec_equal(c, {j: one}) for j, c in enumerate(self.cols))

    def equals(self, other: "LinearMap") -> bool:
        return all(vec_equal(a, b) for a, b in zip(self.cols, other.cols))

    def commutes_with(self, other: "LinearMap") -> bool:
        return self.compose(other).equals(other.compose(self))

    def power(self, k: int) -> "LinearMap":
        if k < 0:
            return self.inverse().power(-k)
        result = self._wrap([{j: self.field.one} for j in range(self.dim)])
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def order(self, cap: int = 80) -> int:
        p = self
        for k in range(1, cap + 1):
            if p.is_identity():
                return k
            p = p @ self
        raise ValueError(f"order exceeds {cap}")

    def inverse(self) -> "LinearMap":
        """Inverse via one tagged elimination, then a solve per column."""
        solver = ColumnSolver(self.cols, self.dim, self.level)
        inv_cols = []
        for i in range(self.dim):
            sol = solver.solve({i: self.field.one})
            if sol is None:
                raise ArithmeticError("matrix is singular")
            inv_cols.append(sol)
        return self._wrap(inv_cols)

    def conjugate(self, other: "LinearMap") -> "LinearMap":
        """self . other . self^{-1}."""
        return self @ other @ self.inverse()

    def commutator_with(self, other: "LinearMap") -> "LinearMap":
        return self @ other @ self.inverse() @ other.inverse()

    def fixed_space(self) -> list[Vec]:
        """Basis of the 1-eigenspace."""
        one = self.field.one
        cols = []
        for j, c in enumerate(self.cols):
            d = dict(c)
            cur = d.get(j, None)
            t = -one if cur is None else cur - one
            if t.is_zero():
                d.pop(j, None)
            else:
                d[j] = t
            cols.append(d)
        return column_relations(cols, self.level)


class Automorphism(LinearMap):
    """LinearMap bound to a LieAlgebra, so bracket compatibility is checkable."""

    def __init__(self, algebra: LieAlgebra, cols: list[Vec]):
        if len(cols) != algebra.dim:
            raise ValueError("wrong number of columns")
        super().__init__(cols, algebra.level)
        self.algebra = algebra

    def _wrap(self, cols: list[Vec]) -> "Automorphism":
        return Automorphism(self.algebra, cols)

    def preserves_bracket(self, pairs=None) -> bool:
        """F[b_i, b_j] == [F b_i, F b_j], over all pairs by default."""
        L = self.algebra
        if pairs is None:
            pairs = [(i, j) for i in range(L.dim) for j in range(i + 1, L.dim)]
        for i, j in pairs:
            lhs = self(L.bracket(L.basis_vec(i), L.basis_vec(j)))
            rhs = L.bracket(self.cols[i], self.cols[j])
            if not vec_equal(lhs, rhs):
                return False
        return True


def identity_auto(L: LieAlgebra) -> Automorphism:
    return Automorphism(L, [{j: L.field.one} for j in range(L.dim)])


def identity_map(dim: int, level: int = 36) -> LinearMap:
    f = field(level)
    return LinearMap([{j: f.one} for j in range(dim)], level)


# -- fixed subalgebras, reductive profiles, torality -------------------------


@dataclass
class Subspace:
    """Span inside an algebra, given by an explicit basis of sparse vectors."""

    algebra: LieAlgebra
    basis: list[Vec]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class ReductiveProfile:
    """Numeric fingerprint of a reductive subalgebra.

    rank is the dimension of the centralizer of a generic element inside
    the subalgebra; witness records the coefficients of the generic element
    that attained it, so the computation is reproducible.
    """

    dim: int
    derived_dim: int
    center_dim: int
    rank: int
    witness: list[int]


def joint_fixed_space(maps: list[LinearMap], check_commuting: bool = True) -> list[Vec]:
    """Basis of the common 1-eigenspace of commuting invertible maps."""
    if not maps:
        raise ValueError("need at least one map")
    dim = maps[0].dim
    level = maps[0].level
    one = maps[0].field.one
    if any(m.dim != dim for m in maps):
        raise ValueError("maps act on different spaces")
    if check_commuting:
        for a in range(len(maps)):
            for b in range(a + 1, len(maps)):
                if not maps[a].commutes_with(maps[b]):
                    raise ValueError(f"maps {a} and {b} do not commute")
    # Stack (F_k - 1) vertically; the kernel of the stack is the joint fix.
    cols: list[Vec] = []
    for j in range(dim):
        stacked: Vec = {}
        for k, m in enumerate(maps):
            d = dict(m.cols[j])
            cur = d.get(j, None)
            t = -one if cur is None else cur - one
            if t.is_zero():
                d.pop(j, None)
            else:
                d[j] = t
            for i, c in d.items():
                stacked[k * dim + i] = c
        cols.append(stacked)
    return column_relations(cols, level)


def fixed_subalgebra(auts: list[Automorphism]) -> Subspace:
    """Common fixed subalgebra of pairwise commuting automorphisms."""
    if not auts:
        raise ValueError("need at least one automorphism")
    L = auts[0].algebra
    basis = joint_fixed_space(auts, check_commuting=True)
    return Subspace(L, basis)


def reductive_profile(S: Subspace, seed: int = 20240622) -> ReductiveProfile:
    """Profile (dim, derived dim, center dim, rank) of a subalgebra.

    Requires the span to be closed under the bracket; raises otherwise
    (catching an attempt to profile something that is not a subalgebra).
    """
    L = S.algebra
    n = len(S.basis)
    if n == 0:
        return ReductiveProfile(0, 0, 0, 0, [])
    solver = ColumnSolver(S.basis, L.dim, L.level)
    brackets: list[list[Vec]] = []
    for a in range(n):
        row = []
        for b in range(n):
            v = L.bracket(S.basis[a], S.basis[b])
            if v and solver.solve(v) is None:
                raise ValueError("span is not closed under the bracket")
            row.append(v)
        brackets.append(row)
    from .linalg import rank as span_rank
    derived = span_rank([brackets[a][b] for a in range(n) for b in range(a + 1, n)],
                        L.level)
    # center: coefficient vectors c with sum_a c_a [s_a, s_b] = 0 for all b
    cols: list[Vec] = []
    for a in range(n):
        stacked: Vec = {}
        for b in range(n):
            for i, cf in brackets[a][b].items():
                stacked[b * L.dim + i] = cf
        cols.append(stacked)
    center = len(column_relations(cols, L.level))
    rk, witness = L.generic_rank(S.basis, seed=seed)
    return ReductiveProfile(n, derived, center, rk, witness)


_CLASS_BY_ORDER_AND_FIX = {
    (2, 38): "2A",
    (2, 46): "2B",
    (2, 52): "2C",
    (2, 36): "2D",
    (3, 36): "3B",
    (3, 24): "3C",
    (3, 30): "3D",
    (3, 28): "3E",
    (3, 46): "3F",
}


def auto_class(f: LinearMap) -> str:
    """Conjugacy class label of a finite-order map, from (order, dim fix).

    Covers the order 2 and order 3 classes that occur in rank-6 fixed-point
    bookkeeping; anything else comes back as ``other(order:dimfix)`` so a
    surprising input is visible rather than silently bucketed.
    """
    r = f.order()
    d = len(f.fixed_space())
    label = _CLASS_BY_ORDER_AND_FIX.get((r, d))
    if label is None:
        return f"other({r}:{d})"
    return label


def torality_test(auts: list[Automorphism], seed: int = 20240622) -> str:
    """"toral" iff the common fixed subalgebra has full rank 6."""
    S = fixed_subalgebra(auts)
    if S.dim < 6:
        return "nontoral"
    profile = reductive_profile(S, seed=seed)
    return "toral" if profile.rank == 6 else "nontoral"
