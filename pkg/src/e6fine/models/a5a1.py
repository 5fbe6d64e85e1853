"""Z2-graded realization: sl6 + sl2 acting on the cube power of the 6-space.

M = (sl(W) + sl(U)) + (L^3 W x U) with dim W = 6, dim U = 2, so the even
part is 35 + 3 and the odd part 20 * 2 = 40.  Only the action of the
even part is stored (one operator per even basis coordinate, shared
bookkeeping in base.ActionModel); the fixed-space and census work this
realization exists for never needs the odd-odd bracket.

Coordinates: sl(W) occupies 0..34 (five differences of consecutive
diagonal units, then the thirty off-diagonal units in lexicographic
order), sl(U) occupies 35..37 as [E00-E11, E01, E10], and the triple
(i<j<k, t) sits at 38 + 2 * triple_index + t with triples enumerated
lexicographically.

Named maps arrive through one builder: wedge_extension(A, B) acts by
conjugation on the even part and by (cube power of A) x B on the odd
part, where the cube power is the matrix of 3x3 minors.  The invariant
pairing of two odd elements lands in the even part through the volume
form of W and the area form of U, which scale by det(A) and det(B), so
the builder requires det(A) * det(B) = 1; that keeps every map it
produces compatible with the full bracket, not only with the action.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ..cyclo import CycNum, field
from ..lie import LinearMap
from ..linalg import Vec
from .base import ActionModel, Summand
from .matrices import (
    block_diag,
    block_offdiag,
    mat,
    mat_det,
    mat_diag,
    mat_id,
    mat_inv,
    mat_minor,
    mat_mul,
    mat_neg,
)

__all__ = [
    "DIM",
    "TRIPLES",
    "sl6_coord",
    "sl2_coord",
    "odd_coord",
    "A5A1Model",
    "a5a1_model",
]

DIM = 78
EVEN_DIM = 38
TRIPLES = tuple(combinations(range(6), 3))
_TRIPLE_INDEX = {T: n for n, T in enumerate(TRIPLES)}
_OFFDIAG6 = tuple((a, b) for a in range(6) for b in range(6) if a != b)
_OFFDIAG6_INDEX = {ab: n for n, ab in enumerate(_OFFDIAG6)}


def sl6_coord(a: int, b: int) -> int:
    """Coordinate of the off-diagonal unit E_ab (a != b)."""
    return 5 + _OFFDIAG6_INDEX[(a, b)]


def sl2_coord(p: int) -> int:
    return 35 + p


def odd_coord(T: tuple[int, int, int], t: int) -> int:
    return 38 + 2 * _TRIPLE_INDEX[T] + t


def _sl6_basis_matrices():
    mats = []
    for i in range(5):
        rows = [[0] * 6 for _ in range(6)]
        rows[i][i] = 1
        rows[i + 1][i + 1] = -1
        mats.append(tuple(tuple(r) for r in rows))
    for a, b in _OFFDIAG6:
        rows = [[0] * 6 for _ in range(6)]
        rows[a][b] = 1
        mats.append(tuple(tuple(r) for r in rows))
    return tuple(mats)


_SL6_MATS = _sl6_basis_matrices()
_SL2_MATS = (
    ((1, 0), (0, -1)),
    ((0, 1), (0, 0)),
    ((0, 0), (1, 0)),
)


def _sl6_coeffs(M) -> dict[int, object]:
    """T-coordinates of a traceless 6x6 matrix; raises on nonzero trace."""
    tr = M[0][0]
    for i in range(1, 6):
        tr = tr + M[i][i]
    if tr:
        raise ArithmeticError("matrix is not traceless")
    out: dict[int, object] = {}
    acc = None
    for i in range(5):
        acc = M[i][i] if acc is None else acc + M[i][i]
        if acc:
            out[i] = acc
    for a, b in _OFFDIAG6:
        if M[a][b]:
            out[sl6_coord(a, b)] = M[a][b]
    return out


def _sl2_coeffs(M) -> dict[int, object]:
    if M[0][0] + M[1][1]:
        raise ArithmeticError("matrix is not traceless")
    out: dict[int, object] = {}
    if M[0][0]:
        out[sl2_coord(0)] = M[0][0]
    if M[0][1]:
        out[sl2_coord(1)] = M[0][1]
    if M[1][0]:
        out[sl2_coord(2)] = M[1][0]
    return out


def _sorted_wedge(i: int, j: int, k: int):
    """(sorted triple, sign) or None when two indices coincide."""
    if i == j or i == k or j == k:
        return None
    perm = [i, j, k]
    sign = 1
    if perm[0] > perm[1]:
        perm[0], perm[1] = perm[1], perm[0]
        sign = -sign
    if perm[1] > perm[2]:
        perm[1], perm[2] = perm[2], perm[1]
        sign = -sign
    if perm[0] > perm[1]:
        perm[0], perm[1] = perm[1], perm[0]
        sign = -sign
    return tuple(perm), sign


class A5A1Model:
    """The even part and its action, plus the named automorphism builders."""

    def __init__(self):
        self.field = field(36)
        self.omega = self.field.zeta(12)
        F = self.field
        one = F.one

        summands = [
            Summand("sl_w", 0, 35),
            Summand("sl_u", 35, 3),
            Summand("odd", 38, 40),
        ]
        acts: list[LinearMap] = []
        for n, Mg in enumerate(_SL6_MATS):
            cols: list[Vec] = [dict() for _ in range(DIM)]
            for j, Mj in enumerate(_SL6_MATS):
                comm = [[sum(Mg[x][y] * Mj[y][z] - Mj[x][y] * Mg[y][z]
                             for y in range(6)) for z in range(6)] for x in range(6)]
                cols[j] = {c: F.from_rational(v) for c, v in _sl6_coeffs(comm).items()}
            for T in TRIPLES:
                for t in range(2):
                    col: Vec = {}
                    for pos in range(3):
                        src = T[pos]
                        for a in range(6):
                            v = Mg[a][src]
                            if not v:
                                continue
                            rep = list(T)
                            rep[pos] = a
                            sw = _sorted_wedge(*rep)
                            if sw is None:
                                continue
                            T2, sg = sw
                            c = odd_coord(T2, t)
                            cur = col.get(c)
                            term = F.from_rational(v * sg)
                            term = term if cur is None else cur + term
                            if term.is_zero():
                                col.pop(c, None)
                            else:
                                col[c] = term
                    cols[odd_coord(T, t)] = col
            acts.append(LinearMap(cols, 36))
        for n, Mg in enumerate(_SL2_MATS):
            cols = [dict() for _ in range(DIM)]
            for j, Mj in enumerate(_SL2_MATS):
                comm = [[sum(Mg[x][y] * Mj[y][z] - Mj[x][y] * Mg[y][z]
                             for y in range(2)) for z in range(2)] for x in range(2)]
                cols[sl2_coord(j)] = {c: F.from_rational(v)
                                      for c, v in _sl2_coeffs(comm).items()}
            for T in TRIPLES:
                for t in range(2):
                    col = {}
                    for a in range(2):
                        v = Mg[a][t]
                        if v:
                            col[odd_coord(T, a)] = F.from_rational(v)
                    cols[odd_coord(T, t)] = col
            acts.append(LinearMap(cols, 36))
        self.model = ActionModel("sl6-sl2", summands, [0, 1], acts)

    # -- the one automorphism builder ---------------------------------------

    def wedge_extension(self, A, B) -> LinearMap:
        """Conjugation on the even part, (minor cube of A) x B on the odd part.

        Requires det(A) * det(B) = 1 so the even-valued pairing of odd
        elements is preserved along with the action.
        """
        F = self.field
        if mat_det(A) * mat_det(B) != F.one:
            raise ValueError("need det(A) det(B) = 1 for a bracket-compatible map")
        Ai = mat_inv(A)
        Bi = mat_inv(B)
        cols: list[Vec] = [dict() for _ in range(DIM)]
        for j, Mj in enumerate(_SL6_MATS):
            conj = mat_mul(mat_mul(A, mat(Mj)), Ai)
            cols[j] = {c: v for c, v in _sl6_coeffs(conj).items()}
        for j, Mj in enumerate(_SL2_MATS):
            conj = mat_mul(mat_mul(B, mat(Mj)), Bi)
            cols[sl2_coord(j)] = {c: v for c, v in _sl2_coeffs(conj).items()}
        for T in TRIPLES:
            minors = {}
            for T2 in TRIPLES:
                v = mat_minor(A, T2, T)
                if v:
                    minors[T2] = v
            for t in range(2):
                col: Vec = {}
                for T2, mv in minors.items():
                    for t2 in range(2):
                        bv = B[t2][t]
                        if bv:
                            col[odd_coord(T2, t2)] = mv * bv
                cols[odd_coord(T, t)] = col
        return LinearMap(cols, 36)

    # -- named maps ----------------------------------------------------------

    def g1(self) -> LinearMap:
        """+1 on the even part, -1 on the odd part."""
        return self.wedge_extension(mat_id(6), mat_neg(mat_id(2)))

    def h1(self) -> LinearMap:
        om = self.omega
        A = mat_diag(1, om, om * om, -1, -om, -om * om)
        return self.wedge_extension(A, mat_diag(1, -1))

    def h2(self) -> LinearMap:
        cyc = mat(((0, 0, 1), (1, 0, 0), (0, 1, 0)))
        A = block_offdiag(cyc, cyc)
        return self.wedge_extension(A, mat(((0, 1), (1, 0))))

    def g2(self) -> LinearMap:
        A = mat_diag(1, 1, 1, -1, -1, -1)
        return self.wedge_extension(A, mat_diag(1, -1))

    def g3(self) -> LinearMap:
        A = block_offdiag(mat_id(3), mat_id(3))
        return self.wedge_extension(A, mat(((0, 1), (1, 0))))

    def psi_prime(self, A3) -> LinearMap:
        """Same 3x3 matrix on both halves of W, trivial on U."""
        A = block_diag(A3, A3)
        return self.wedge_extension(A, mat_id(2))

    def s_map(self, alpha, beta) -> LinearMap:
        F = self.field
        a = alpha if isinstance(alpha, CycNum) else F.from_rational(alpha)
        b = beta if isinstance(beta, CycNum) else F.from_rational(beta)
        return self.psi_prime(mat_diag(a, b, (a * b).inverse()))


@lru_cache(maxsize=1)
def a5a1_model() -> A5A1Model:
    return A5A1Model()
