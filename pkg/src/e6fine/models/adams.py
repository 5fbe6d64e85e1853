"""Trigraded realization: three copies of sl3 plus a 27-dim cube and its dual.

L = sl(V1) + sl(V2) + sl(V3) + (V1 x V2 x V3) + (V1 x V2 x V3)*, with each
V_s three-dimensional.  Basis layout over the 78 coordinates:

  - slot s (s = 0, 1, 2) occupies 8s..8s+7 with the traceless basis
    [E00-E11, E11-E22, E01, E02, E10, E12, E20, E21];
  - the cube coordinate u_{ijk} = u_i x u_j x u_k sits at 24 + 9i + 3j + k;
  - the dual coordinate u*_{ijk} sits at 51 + 9i + 3j + k.

The bracket: the Lie part acts slotwise (dual slots through minus
transpose); two cube elements multiply by the slotwise cross product into
the dual summand; two dual elements multiply back into the cube; a cube
and a dual element pair into the Lie part as a sum of traceless rank-one
operators, one per slot, weighted by delta factors on the other two
slots.  The relative scale of that mixed piece against the two cross
products is the one free constant; it is pinned by solving the Jacobi
identity on probe triples at build time (exactly, in Fractions) and the
result is verified exhaustively by the test suite.

Named automorphisms: the order-3 scalar that separates the three
summand blocks, slot permutations, and the extension triple(f, g, h) of
a GL(V1) x GL(V2) x GL(V3) element, which needs the scalar twist lam
with lam^3 * det(f) det(g) det(h) = 1 on the cube (and the matching
twist on the dual) whenever the determinant product is not 1.  The
diagonal case psi(A) = triple(A, A, A) is kept untwisted, so it is only
defined when det(A)^3 = 1; its kernel is the scalar matrices with cube
1, and psi of a scalar matrix xi^2 I with xi^2 of order 9 recovers the
order-3 scalar automorphism.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from ..cyclo import CycNum, field
from ..lie import Automorphism, LieAlgebra, LinearMap
from ..linalg import Vec
from .base import ActionModel, Summand

__all__ = [
    "DIM",
    "slot_coord",
    "cube_coord",
    "dual_coord",
    "mat3",
    "mat3_id",
    "mat3_diag",
    "mat3_mul",
    "mat3_det",
    "mat3_inv",
    "mat3_transpose",
    "mat3_scale",
    "mat3_eq",
    "P23",
    "CYCLE3",
    "AdamsModel",
    "adams_model",
]

DIM = 78
LIE_DIM = 24

# Traceless 3x3 basis used inside each slot.
_T_INT = (
    ((1, 0, 0), (0, -1, 0), (0, 0, 0)),   # T0 = E00 - E11
    ((0, 0, 0), (0, 1, 0), (0, 0, -1)),   # T1 = E11 - E22
    ((0, 1, 0), (0, 0, 0), (0, 0, 0)),    # T2 = E01
    ((0, 0, 1), (0, 0, 0), (0, 0, 0)),    # T3 = E02
    ((0, 0, 0), (1, 0, 0), (0, 0, 0)),    # T4 = E10
    ((0, 0, 0), (0, 0, 1), (0, 0, 0)),    # T5 = E12
    ((0, 0, 0), (0, 0, 0), (1, 0, 0)),    # T6 = E20
    ((0, 0, 0), (0, 0, 0), (0, 1, 0)),    # T7 = E21
)
_OFFDIAG = {(0, 1): 2, (0, 2): 3, (1, 0): 4, (1, 2): 5, (2, 0): 6, (2, 1): 7}


def slot_coord(s: int, p: int) -> int:
    return 8 * s + p


def cube_coord(i: int, j: int, k: int) -> int:
    return 24 + 9 * i + 3 * j + k


def dual_coord(i: int, j: int, k: int) -> int:
    return 51 + 9 * i + 3 * j + k


def _sl3_coeffs(M) -> dict[int, object]:
    """Coordinates of a traceless 3x3 matrix in the T-basis.

    Works for Fraction and for cyclotomic entries alike; raises if the
    trace does not vanish.
    """
    tr = M[0][0] + M[1][1] + M[2][2]
    if tr:
        raise ArithmeticError("matrix is not traceless")
    out: dict[int, object] = {}
    d0, d1 = M[0][0], M[1][1]
    if d0:
        out[0] = d0
    if d0 + d1:
        out[1] = d0 + d1
    for (a, b), p in _OFFDIAG.items():
        if M[a][b]:
            out[p] = M[a][b]
    return out


def _eps(i: int, j: int):
    """Cross product of basis vectors: index and sign, or None when parallel."""
    if i == j:
        return None
    return 3 - i - j, (1 if (j - i) % 3 == 1 else -1)


_RANK_ONE_DIAG = {
    0: {0: Fraction(2, 3), 1: Fraction(1, 3)},
    1: {0: Fraction(-1, 3), 1: Fraction(1, 3)},
    2: {0: Fraction(-1, 3), 1: Fraction(-2, 3)},
}


def _rank_one(a: int, b: int) -> dict[int, Fraction]:
    """T-coordinates of E_ab - delta_ab I/3."""
    if a != b:
        return {_OFFDIAG[(a, b)]: Fraction(1)}
    return dict(_RANK_ONE_DIAG[a])


def _build_fraction_table(c: Fraction):
    """Full antisymmetric bracket table with mixed coefficient c, in Fractions."""
    tab: dict[tuple[int, int], dict[int, Fraction]] = {}

    def add(i, j, k, v):
        if not v:
            return
        row = tab.setdefault((i, j), {})
        w = row.get(k, Fraction(0)) + v
        if w:
            row[k] = w
        else:
            row.pop(k, None)

    def addpair(i, j, terms):
        for k, v in terms.items():
            add(i, j, k, v)
            add(j, i, k, -v)

    triples = list(product(range(3), repeat=3))

    # Lie part with itself, slotwise matrix commutators.
    for s in range(3):
        for p in range(8):
            for q in range(p + 1, 8):
                A, B = _T_INT[p], _T_INT[q]
                comm = [[sum(A[x][y] * B[y][z] - B[x][y] * A[y][z] for y in range(3))
                         for z in range(3)] for x in range(3)]
                coeffs = _sl3_coeffs(comm)
                addpair(slot_coord(s, p), slot_coord(s, q),
                        {slot_coord(s, r): Fraction(v) for r, v in coeffs.items()})

    # Lie part on the cube (slotwise matrix action) and on the dual
    # (slotwise minus transpose).
    for s in range(3):
        for p in range(8):
            M = _T_INT[p]
            for I in triples:
                idx = I[s]
                terms_c: dict[int, Fraction] = {}
                terms_d: dict[int, Fraction] = {}
                for a in range(3):
                    if M[a][idx]:
                        J = list(I)
                        J[s] = a
                        terms_c[cube_coord(*J)] = Fraction(M[a][idx])
                    if M[idx][a]:
                        J = list(I)
                        J[s] = a
                        terms_d[dual_coord(*J)] = Fraction(-M[idx][a])
                addpair(slot_coord(s, p), cube_coord(*I), terms_c)
                addpair(slot_coord(s, p), dual_coord(*I), terms_d)

    # Slotwise cross products between the odd summands.
    for n, I in enumerate(triples):
        for J in triples[n + 1:]:
            crosses = [_eps(I[s], J[s]) for s in range(3)]
            if any(cr is None for cr in crosses):
                continue
            K = tuple(cr[0] for cr in crosses)
            sign = Fraction(crosses[0][1] * crosses[1][1] * crosses[2][1])
            addpair(cube_coord(*I), cube_coord(*J), {dual_coord(*K): sign})
            addpair(dual_coord(*I), dual_coord(*J), {cube_coord(*K): sign})

    # Cube against dual: rank-one operators weighted by the other slots.
    for I in triples:
        for J in triples:
            terms: dict[int, Fraction] = {}
            for s in range(3):
                if all(I[t] == J[t] for t in range(3) if t != s):
                    for p, v in _rank_one(I[s], J[s]).items():
                        k = slot_coord(s, p)
                        w = terms.get(k, Fraction(0)) + c * v
                        if w:
                            terms[k] = w
                        else:
                            terms.pop(k, None)
            if terms:
                addpair(cube_coord(*I), dual_coord(*J), terms)

    return {ij: row for ij, row in tab.items() if row}


def _fbracket(tab, x: dict[int, Fraction], y: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, a in x.items():
        for j, b in y.items():
            row = tab.get((i, j))
            if not row:
                continue
            ab = a * b
            for k, v in row.items():
                w = out.get(k, Fraction(0)) + ab * v
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
    return out


def _jacobi_defect(tab, i: int, j: int, k: int) -> dict[int, Fraction]:
    e = lambda n: {n: Fraction(1)}
    out: dict[int, Fraction] = {}
    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
        term = _fbracket(tab, _fbracket(tab, e(x), e(y)), e(z))
        for m, v in term.items():
            w = out.get(m, Fraction(0)) + v
            if w:
                out[m] = w
            else:
                out.pop(m, None)
    return out


_PROBES = (
    (cube_coord(0, 0, 0), dual_coord(0, 0, 0), dual_coord(1, 1, 1)),
    (cube_coord(0, 0, 0), cube_coord(1, 1, 1), dual_coord(0, 0, 0)),
    (cube_coord(0, 1, 2), dual_coord(0, 1, 2), dual_coord(1, 2, 0)),
    (cube_coord(0, 1, 2), cube_coord(1, 2, 0), dual_coord(2, 0, 1)),
    (slot_coord(0, 2), cube_coord(0, 0, 0), dual_coord(1, 0, 0)),
    (cube_coord(0, 0, 1), dual_coord(0, 1, 1), dual_coord(2, 2, 0)),
)


def _solve_mixed_coefficient() -> Fraction:
    """Pin the cube/dual pairing scale from the Jacobi identity.

    The defect of any triple is affine in the mixed coefficient, so two
    evaluations per probe determine it; inconsistent probes raise.
    """
    t0 = _build_fraction_table(Fraction(0))
    t1 = _build_fraction_table(Fraction(1))
    sol: Fraction | None = None
    for i, j, k in _PROBES:
        d0 = _jacobi_defect(t0, i, j, k)
        d1 = _jacobi_defect(t1, i, j, k)
        coords = set(d0) | set(d1)
        for m in coords:
            a0 = d0.get(m, Fraction(0))
            slope = d1.get(m, Fraction(0)) - a0
            if not slope:
                continue
            cand = -a0 / slope
            if sol is None:
                sol = cand
            elif sol != cand:
                raise ArithmeticError(
                    f"probe triples disagree on the mixed coefficient: {sol} vs {cand}")
    if sol is None:
        raise ArithmeticError("no probe constrained the mixed coefficient")
    tc = _build_fraction_table(sol)
    for i, j, k in _PROBES:
        if _jacobi_defect(tc, i, j, k):
            raise ArithmeticError("mixed coefficient does not close the probe triples")
    return sol


@lru_cache(maxsize=1)
def _integer_algebra() -> tuple[LieAlgebra, Fraction]:
    c = _solve_mixed_coefficient()
    tab = _build_fraction_table(c)
    denom = 1
    dens = {v.denominator for row in tab.values() for v in row.values()}
    for d in dens:
        denom = denom * d // _gcd(denom, d)
    table = {}
    for (i, j), row in tab.items():
        table[(i, j)] = [(k, int(v * denom)) for k, v in sorted(row.items())]
    return LieAlgebra(DIM, table, level=36, denom=denom), c


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# -- exact 3x3 matrices over the scalar field -------------------------------

Mat3 = tuple  # 3-tuple of 3-tuples of CycNum


def mat3(rows, level: int = 36) -> Mat3:
    F = field(level)
    out = []
    for r in rows:
        row = []
        for v in r:
            if isinstance(v, CycNum):
                row.append(v)
            else:
                row.append(F.from_rational(Fraction(v)))
        out.append(tuple(row))
    return tuple(out)


def mat3_id(level: int = 36) -> Mat3:
    return mat3(((1, 0, 0), (0, 1, 0), (0, 0, 1)), level)


def mat3_diag(a, b, c, level: int = 36) -> Mat3:
    return mat3(((a, 0, 0), (0, b, 0), (0, 0, c)), level)


def mat3_mul(A: Mat3, B: Mat3) -> Mat3:
    return tuple(tuple(A[i][0] * B[0][j] + A[i][1] * B[1][j] + A[i][2] * B[2][j]
                       for j in range(3)) for i in range(3))


def mat3_det(A: Mat3):
    return (A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
            - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
            + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]))


def mat3_transpose(A: Mat3) -> Mat3:
    return tuple(tuple(A[j][i] for j in range(3)) for i in range(3))


def mat3_inv(A: Mat3) -> Mat3:
    d = mat3_det(A)
    if not d:
        raise ZeroDivisionError("singular matrix")
    cof = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [x for x in range(3) if x != i]
            c = [x for x in range(3) if x != j]
            minor = A[r[0]][c[0]] * A[r[1]][c[1]] - A[r[0]][c[1]] * A[r[1]][c[0]]
            cof[j][i] = minor if (i + j) % 2 == 0 else -minor
    return tuple(tuple(v / d for v in row) for row in cof)


def mat3_scale(s, A: Mat3) -> Mat3:
    return tuple(tuple(s * v for v in row) for row in A)


def mat3_eq(A: Mat3, B: Mat3) -> bool:
    return all(A[i][j] == B[i][j] for i in range(3) for j in range(3))


P23 = ((1, 0, 0), (0, 0, 1), (0, 1, 0))
CYCLE3 = ((0, 0, 1), (1, 0, 0), (0, 1, 0))


class AdamsModel:
    """The trigraded realization with its named automorphisms."""

    def __init__(self):
        self.algebra, self.mixed_coefficient = _integer_algebra()
        self.field = self.algebra.field
        self.omega = self.field.zeta(12)
        summands = [
            Summand("sl_1", 0, 8),
            Summand("sl_2", 8, 8),
            Summand("sl_3", 16, 8),
            Summand("cube", 24, 27),
            Summand("dual", 51, 27),
        ]
        acts = [LinearMap(self.algebra.ad_columns(self.algebra.basis_vec(i)), 36)
                for i in range(LIE_DIM)]
        self.model = ActionModel("three-sl3", summands, [0, 1, 2], acts,
                                 algebra=self.algebra)

    # -- generic builders ---------------------------------------------------

    def _auto(self, cols: list[Vec]) -> Automorphism:
        return Automorphism(self.algebra, cols)

    def scalar_blocks(self, on_cube: CycNum, on_dual: CycNum) -> Automorphism:
        one = self.field.one
        cols: list[Vec] = []
        for c in range(DIM):
            if c < LIE_DIM:
                cols.append({c: one})
            elif c < 51:
                cols.append({c: on_cube})
            else:
                cols.append({c: on_dual})
        return self._auto(cols)

    def slot_permutation(self, image_of_slot: tuple[int, int, int]) -> Automorphism:
        """Permute the tensor slots: slot s moves to slot image_of_slot[s]."""
        if sorted(image_of_slot) != [0, 1, 2]:
            raise ValueError("need a permutation of the three slots")
        one = self.field.one
        cols: list[Vec] = [dict() for _ in range(DIM)]
        for s in range(3):
            for p in range(8):
                cols[slot_coord(s, p)] = {slot_coord(image_of_slot[s], p): one}
        for I in product(range(3), repeat=3):
            J = [0, 0, 0]
            for s in range(3):
                J[image_of_slot[s]] = I[s]
            cols[cube_coord(*I)] = {cube_coord(*J): one}
            cols[dual_coord(*I)] = {dual_coord(*J): one}
        return self._auto(cols)

    def triple(self, f: Mat3, g: Mat3, h: Mat3) -> Automorphism:
        """Extend (f, g, h) acting slotwise, with the forced scalar twist.

        The cube part is lam * (f x g x h) with lam^3 = 1/(det f det g det h)
        and the dual part carries lam^2 * det * (inverse transposes); when the
        determinant product is not a cube of a root of unity in the scalar
        field this raises.
        """
        F = self.field
        d = mat3_det(f) * mat3_det(g) * mat3_det(h)
        k = F.log_zeta(d)
        if k is None:
            raise ValueError("determinant product must be a root of unity")
        if k % 3:
            raise ValueError("determinant product admits no cube root in the scalar field")
        if k == 0:
            lam = F.one
        elif k == 18:
            lam = F.from_rational(Fraction(-1))
        else:
            lam = F.zeta((36 - k) // 3)
        delta = lam * lam * d
        fi = mat3_transpose(mat3_inv(f))
        gi = mat3_transpose(mat3_inv(g))
        hi = mat3_transpose(mat3_inv(h))

        cols: list[Vec] = [dict() for _ in range(DIM)]
        for s, A in ((0, f), (1, g), (2, h)):
            Ainv = mat3_inv(A)
            for p in range(8):
                M = mat3_mul(mat3_mul(A, mat3(_T_INT[p])), Ainv)
                col: Vec = {}
                for q, v in _sl3_coeffs(M).items():
                    col[slot_coord(s, q)] = v
                cols[slot_coord(s, p)] = col
        for I in product(range(3), repeat=3):
            col_c: Vec = {}
            col_d: Vec = {}
            for P in product(range(3), repeat=3):
                vc = f[P[0]][I[0]] * g[P[1]][I[1]] * h[P[2]][I[2]]
                if vc:
                    col_c[cube_coord(*P)] = lam * vc
                vd = fi[P[0]][I[0]] * gi[P[1]][I[1]] * hi[P[2]][I[2]]
                if vd:
                    col_d[dual_coord(*P)] = delta * vd
            cols[cube_coord(*I)] = col_c
            cols[dual_coord(*I)] = col_d
        return self._auto(cols)

    def psi(self, A: Mat3) -> Automorphism:
        """Untwisted diagonal extension; defined when det(A)^3 = 1.

        Kernel: the scalar matrices with cube 1.  A scalar matrix whose
        cube is the order-3 scalar omega maps to the block-scalar
        automorphism separating the three summands.
        """
        d = mat3_det(A)
        if d * d * d != self.field.one:
            raise ValueError("diagonal extension needs det(A)^3 = 1")
        return self.triple(A, A, A)

    # -- the named generators ----------------------------------------------

    def f1(self) -> Automorphism:
        """Order-3 scalar: 1 on the Lie part, omega on the cube, omega^2 on the dual."""
        return self.scalar_blocks(self.omega, self.omega * self.omega)

    def f2(self) -> Automorphism:
        """Slot rotation u x v x w -> v x w x u."""
        return self.slot_permutation((2, 0, 1))

    def f3(self) -> Automorphism:
        return self.psi(mat3_diag(1, self.omega, self.omega * self.omega))

    def f4(self) -> Automorphism:
        return self.psi(mat3(CYCLE3))

    def torus_map(self, alpha, beta) -> Automorphism:
        F = self.field
        a = alpha if isinstance(alpha, CycNum) else F.from_rational(Fraction(alpha))
        b = beta if isinstance(beta, CycNum) else F.from_rational(Fraction(beta))
        return self.psi(mat3_diag(a, b, (a * b).inverse()))

    def swap12(self) -> Automorphism:
        return self.slot_permutation((1, 0, 2))

    def swap13(self) -> Automorphism:
        return self.slot_permutation((2, 1, 0))

    def dual_flip(self) -> Automorphism:
        """Exchange the cube with its dual; minus transpose on each slot."""
        one = self.field.one
        neg = -one
        flip = {0: 0, 1: 1, 2: 4, 3: 6, 4: 2, 5: 7, 6: 3, 7: 5}
        cols: list[Vec] = [dict() for _ in range(DIM)]
        for s in range(3):
            for p, q in flip.items():
                cols[slot_coord(s, p)] = {slot_coord(s, q): neg}
        for I in product(range(3), repeat=3):
            cols[cube_coord(*I)] = {dual_coord(*I): one}
            cols[dual_coord(*I)] = {cube_coord(*I): one}
        return self._auto(cols)

    def phi(self, n: int) -> Automorphism:
        """The five order-2 representatives used for the outer coset."""
        eye = mat3_id()
        p23 = mat3(P23)
        if n == 1:
            return self.triple(p23, eye, eye)
        if n == 2:
            return self.triple(eye, p23, eye)
        if n == 3:
            return self.triple(eye, eye, p23)
        if n == 4:
            return self.dual_flip()
        if n == 5:
            return self.swap13()
        raise ValueError("n must be 1..5")


@lru_cache(maxsize=1)
def adams_model() -> AdamsModel:
    return AdamsModel()
