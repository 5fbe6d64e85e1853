"""Root decomposition of the trigraded model and the induced Weyl data.

The six diagonal coordinates h_1..h_6 (two per slot) span a Cartan
subalgebra; every one of the remaining 72 basis coordinates is a common
eigenvector, and the eigenvalue rows, written in the w-basis dual to the
h_i, are the roots.  A fixed choice of six simple coordinates (one per
simple root) turns each root into an integer coordinate row, and the
frame checks that the resulting Cartan matrix is the one the reflection
group module is built from.

Automorphisms that permute the 72 root lines then project to integer
6x6 matrices in the rows-as-images convention used throughout the
reflection-group module; diagonal automorphisms instead read off as
torus points through their eigenvalue exponents on the six simple
coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..lie import LinearMap
from ..torus import TorusPoint
from ..weyl import cartan_matrix
from .adams import AdamsModel, adams_model, cube_coord, slot_coord

__all__ = ["RootFrame", "root_frame"]

# Cartan coordinates: T0 and T1 of each slot.
_CARTAN_COORDS = (0, 1, 8, 9, 16, 17)

# h_1..h_6: E00-E22 and E11-E22 in each slot, i.e. T0+T1 and T1.
_H_SUPPORTS = (
    {0: 1, 1: 1}, {1: 1},
    {8: 1, 9: 1}, {9: 1},
    {16: 1, 17: 1}, {17: 1},
)

# The six simple coordinates and their functionals in the w-basis.
_SIMPLE_COORDS = (
    slot_coord(0, 2),      # E01 in slot 1
    slot_coord(1, 3),      # E02 in slot 2
    slot_coord(0, 5),      # E12 in slot 1
    cube_coord(2, 2, 2),   # u_2 x u_2 x u_2
    slot_coord(2, 5),      # E12 in slot 3
    slot_coord(2, 2),      # E01 in slot 3
)
_ALPHA_ROWS = np.array(
    [
        [1, -1, 0, 0, 0, 0],
        [0, 0, 2, 1, 0, 0],
        [1, 2, 0, 0, 0, 0],
        [-1, -1, -1, -1, -1, -1],
        [0, 0, 0, 0, 1, 2],
        [0, 0, 0, 0, 1, -1],
    ],
    dtype=np.int64,
)


def _as_int(x) -> int:
    if not x.is_rational():
        raise ArithmeticError("expected a rational eigenvalue")
    q = x.rational()
    if q.denominator != 1:
        raise ArithmeticError("expected an integer eigenvalue")
    return int(q)


def _solve_unimodular(A: np.ndarray, rhs: np.ndarray) -> tuple[int, ...]:
    """Integer row n with n @ A == rhs; raises if there is none."""
    n = A.shape[0]
    M = [[Fraction(int(A[j][i])) for j in range(n)] for i in range(n)]
    b = [Fraction(int(v)) for v in rhs]
    # Gaussian elimination on the transposed system A^T n^T = rhs^T.
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise ArithmeticError("singular functional matrix")
        M[col], M[piv] = M[piv], M[col]
        b[col], b[piv] = b[piv], b[col]
        inv = 1 / M[col][col]
        M[col] = [v * inv for v in M[col]]
        b[col] = b[col] * inv
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [vr - f * vc for vr, vc in zip(M[r], M[col])]
                b[r] = b[r] - f * b[col]
    out = []
    for v in b:
        if v.denominator != 1:
            raise ArithmeticError("weight is not in the root lattice")
        out.append(int(v))
    return tuple(out)


@dataclass(frozen=True)
class RootFrame:
    model: AdamsModel
    roots: dict[int, tuple[int, ...]]

    @property
    def cartan_coords(self) -> tuple[int, ...]:
        return _CARTAN_COORDS

    @property
    def simple_coords(self) -> tuple[int, ...]:
        return _SIMPLE_COORDS

    def weyl_image(self, f: LinearMap) -> np.ndarray:
        """Rows-as-images matrix of the root permutation induced by f.

        Requires f to map each root line onto a root line and the Cartan
        span into itself; otherwise f does not normalize the diagonal
        torus of this frame and a ValueError is raised.
        """
        for c in _CARTAN_COORDS:
            if any(cc not in _CARTAN_COORDS for cc in f.cols[c]):
                raise ValueError("map does not preserve the Cartan span")
        perm: dict[int, int] = {}
        for k in self.roots:
            col = f.cols[k]
            if len(col) != 1:
                raise ValueError("map does not permute the root lines "
                                 "(it does not normalize the diagonal torus)")
            (k2,) = col
            if k2 not in self.roots:
                raise ValueError("root line maps outside the root decomposition")
            perm[k] = k2
        M = np.array([self.roots[perm[c]] for c in _SIMPLE_COORDS], dtype=np.int64)
        for k, row in self.roots.items():
            img = np.array(row, dtype=np.int64) @ M
            if tuple(int(v) for v in img) != self.roots[perm[k]]:
                raise ArithmeticError("root permutation is not induced by a lattice map")
        return M

    def torus_point(self, f: LinearMap) -> TorusPoint:
        """Eigenvalue exponents of a diagonal automorphism as a torus point."""
        F = self.model.field
        for c in _CARTAN_COORDS:
            col = f.cols[c]
            if set(col) != {c} or not col[c].is_one():
                raise ValueError("map does not fix the Cartan part pointwise")
        exps = []
        for c in _SIMPLE_COORDS:
            col = f.cols[c]
            if set(col) != {c}:
                raise ValueError("map is not diagonal on the root lines")
            e = F.log_zeta(col[c])
            if e is None:
                raise ValueError("eigenvalue is not a root of unity")
            exps.append(e)
        p = TorusPoint.make(exps, level=F.n)
        for k, row in self.roots.items():
            col = f.cols[k]
            if set(col) != {k}:
                raise ValueError("map is not diagonal on the root lines")
            e = F.log_zeta(col[k])
            want = sum(r * x for r, x in zip(row, p.exps)) % F.n
            if e is None or e != want:
                raise ArithmeticError("eigenvalues are not multiplicative on roots")
        return p


@lru_cache(maxsize=1)
def root_frame() -> RootFrame:
    model = adams_model()
    L = model.algebra
    F = model.field
    h_vecs = [{c: F.from_rational(Fraction(v)) for c, v in sup.items()}
              for sup in _H_SUPPORTS]

    weights: dict[int, tuple[int, ...]] = {}
    for k in range(L.dim):
        if k in _CARTAN_COORDS:
            continue
        row = []
        for h in h_vecs:
            br = L.bracket(h, L.basis_vec(k))
            if not br:
                row.append(0)
                continue
            if set(br) != {k}:
                raise ArithmeticError(f"coordinate {k} is not an eigenvector")
            row.append(_as_int(br[k]))
        weights[k] = tuple(row)

    for i, c in enumerate(_SIMPLE_COORDS):
        if weights[c] != tuple(int(v) for v in _ALPHA_ROWS[i]):
            raise ArithmeticError(f"simple coordinate {c} has unexpected weight")

    roots = {k: _solve_unimodular(_ALPHA_ROWS, np.array(w, dtype=np.int64))
             for k, w in weights.items()}
    if len(set(roots.values())) != 72:
        raise ArithmeticError("root rows are not distinct")
    phi = set(roots.values())
    if any(tuple(-v for v in r) not in phi for r in phi):
        raise ArithmeticError("root set is not symmetric")

    # Simply-laced Cartan matrix from root addition, checked against the
    # matrix the reflection-group module is generated from.
    C = np.zeros((6, 6), dtype=np.int64)
    for i in range(6):
        for j in range(6):
            if i == j:
                C[i, j] = 2
            else:
                s = tuple((1 if t == i else 0) + (1 if t == j else 0) for t in range(6))
                C[i, j] = -1 if s in phi else 0
    if not np.array_equal(C, cartan_matrix()):
        raise ArithmeticError("frame produces the wrong Cartan matrix")

    return RootFrame(model, roots)
