"""Torus characters, points, and diagonalizable subgroups for type E6.

The maximal torus T of the adjoint group is parametrized by six scalars
t_{x,y,z,u,v,w}, the values of t on the six simple-root spaces.  A closed
diagonalizable subgroup of T corresponds to its vanishing lattice: the set of
characters (integer vectors against the simple-root coordinates) that are
identically 1 on the subgroup.  Bigger lattices mean smaller subgroups;
intersections of subgroups correspond to sums of lattices, and the shape of
G(lam) is the cokernel shape of lam inside Z^6.

A Weyl element w (matrix M, rows = images of simple roots) acts on a torus
point of exponent vector a as a -> M^{-1} a; on vanishing lattices all the
standard subgroups of interest are computed from M^T directly:

- fixed subgroup T^w:      lattice spanned by the columns of (M^T - I)
- coboundaries K^w:        lattice ker(M^T - I)
- norm-image subtorus S^w: lattice ker(sum_{i<r} (M^T)^i)

Finite parts are manipulated through their mu_N points, exponent vectors
modulo N (N = 36 throughout the package): large enough for every root of
unity that actually occurs in the gradings.  Computations guard against
silently truncating groups whose exponent does not divide N.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .cyclo import CycNum, field
from .intlinalg import (
    AbelianShape,
    cokernel_shape,
    complement_of_saturation,
    det_int,
    divisors,
    intmat,
    hermite_column_form,
    kernel_basis,
    lattice_member,
    lattice_sum,
    solve_mod,
    unimodular_inverse,
)

__all__ = [
    "TorusPoint",
    "NormSplit",
    "matrix_order",
    "char_action_matrix",
    "act_point",
    "fix_lattice",
    "coboundary_lattice",
    "norm_char_matrix",
    "norm_point_matrix",
    "s_lattice",
    "lattice_shapes",
    "norm_split",
    "points_of_lattice",
    "subgroup_of_points",
    "point_in_subgroup",
    "subgroup_order",
    "solve_norm_equation",
    "minimal_coset_order",
]

DEFAULT_LEVEL = 36


@dataclass(frozen=True)
class TorusPoint:
    """A torus element of finite order: exponent vector modulo the level.

    The k-th entry is the exponent of zeta_N in the value of the point on the
    k-th simple-root space.
    """

    exps: tuple[int, ...]
    level: int = DEFAULT_LEVEL

    @staticmethod
    def make(exps, level: int = DEFAULT_LEVEL) -> "TorusPoint":
        return TorusPoint(tuple(int(e) % level for e in exps), level)

    @staticmethod
    def from_values(values, level: int = DEFAULT_LEVEL) -> "TorusPoint":
        """Build from six root-of-unity scalars."""
        fld = field(level)
        exps = []
        for v in values:
            k = fld.log_zeta(v if isinstance(v, CycNum) else fld.from_rational(v))
            if k is None:
                raise ValueError(f"{v!r} is not a root of unity at level {level}")
            exps.append(k)
        return TorusPoint(tuple(exps), level)

    def values(self) -> tuple[CycNum, ...]:
        fld = field(self.level)
        return tuple(fld.zeta(e) for e in self.exps)

    def __mul__(self, other: "TorusPoint") -> "TorusPoint":
        if self.level != other.level:
            raise ValueError("mixed levels")
        return TorusPoint.make(
            (a + b for a, b in zip(self.exps, other.exps)), self.level
        )

    def inverse(self) -> "TorusPoint":
        return TorusPoint.make((-a for a in self.exps), self.level)

    def __pow__(self, k: int) -> "TorusPoint":
        return TorusPoint.make((k * a for a in self.exps), self.level)

    def order(self) -> int:
        g = self.level
        for a in self.exps:
            g = gcd(g, a)
        return self.level // g

    def is_identity(self) -> bool:
        return all(a == 0 for a in self.exps)

    def __repr__(self):
        return f"t{list(self.exps)}@{self.level}"


# -- character-side lattices -------------------------------------------------


def char_action_matrix(m) -> np.ndarray:
    """A(w) with (w . t)_exponents = A(w) @ t_exponents; equals M^{-1}."""
    return unimodular_inverse(np.asarray(m, dtype=np.int64))


def act_point(m, p: TorusPoint) -> TorusPoint:
    a = char_action_matrix(m) @ np.array(p.exps, dtype=object)
    return TorusPoint.make(a, p.level)


def fix_lattice(*ms) -> np.ndarray:
    """Vanishing lattice of the common fixed subgroup of the given elements."""
    pieces = []
    for m in ms:
        m = intmat(np.asarray(m, dtype=np.int64).tolist())
        pieces.append(m.T - intmat(np.eye(6, dtype=int).tolist()))
    return lattice_sum(*pieces)


def coboundary_lattice(m) -> np.ndarray:
    """Vanishing lattice of K^w = {(w.t) t^{-1}}: ker(M^T - I)."""
    m = intmat(np.asarray(m, dtype=np.int64).tolist())
    return kernel_basis(m.T - intmat(np.eye(6, dtype=int).tolist()))


def matrix_order(m) -> int:
    m = np.asarray(m, dtype=np.int64)
    p = m.copy()
    for k in range(1, 25):
        if (p == np.eye(6, dtype=np.int64)).all():
            return k
        p = p @ m
    raise ValueError("order exceeds 24")


def norm_char_matrix(m, r: int | None = None) -> np.ndarray:
    """sum_{i<r} (M^T)^i as an object matrix (character-side norm)."""
    m = np.asarray(m, dtype=np.int64)
    if r is None:
        r = matrix_order(m)
    mt = intmat(m.T.tolist())
    acc = intmat(np.zeros((6, 6), dtype=int).tolist())
    p = intmat(np.eye(6, dtype=int).tolist())
    for _ in range(r):
        acc = acc + p
        p = p @ mt
    return acc


def norm_point_matrix(m, r: int | None = None) -> np.ndarray:
    """sum_{i<r} A(w)^i acting on exponent vectors (point-side norm)."""
    m = np.asarray(m, dtype=np.int64)
    if r is None:
        r = matrix_order(m)
    a = char_action_matrix(m)
    acc = intmat(np.zeros((6, 6), dtype=int).tolist())
    p = intmat(np.eye(6, dtype=int).tolist())
    for _ in range(r):
        acc = acc + p
        p = p @ a
    return acc


def s_lattice(m) -> np.ndarray:
    """Vanishing lattice of the norm-image subtorus S^w."""
    return kernel_basis(norm_char_matrix(m))


# -- points of finite subgroups ---------------------------------------------


def points_of_lattice(lam, level: int = DEFAULT_LEVEL, check_exponent=True) -> np.ndarray:
    """Generator matrix (columns) of {a in (Z/N)^6 : lam^T a == 0 mod N}.

    This is the mu_N-point group of G(lam).  If G(lam) is finite with an
    exponent not dividing N, the mod-N points misrepresent the group, so by
    default that situation raises.
    """
    lam = intmat(lam)
    if check_exponent:
        shape = cokernel_shape(lam, ambient_rank=6)
        for d in shape.torsion:
            if level % d != 0:
                raise ValueError(
                    f"subgroup has a Z{d} factor; its points are not faithful "
                    f"at level {level}"
                )
    if lam.size == 0:
        return intmat(np.eye(6, dtype=int).tolist())
    res = solve_mod(lam.T.reshape(-1, 6), [0] * lam.shape[1], level)
    assert res is not None
    _, gens = res
    return gens


def subgroup_of_points(gens, level: int = DEFAULT_LEVEL) -> np.ndarray:
    """Canonical form of the subgroup of (Z/N)^6 generated by the columns."""
    gens = intmat(gens)
    if gens.size == 0:
        gens = np.zeros((6, 0), dtype=object)
    scaled = lattice_sum(gens, (level * np.eye(6, dtype=int)).tolist())
    return hermite_column_form(scaled)


def point_in_subgroup(gens, p: TorusPoint) -> bool:
    gens = intmat(gens)
    if gens.size == 0:
        gens = np.zeros((6, 0), dtype=object)
    full = lattice_sum(gens, (p.level * np.eye(6, dtype=int)).tolist())
    return lattice_member(full, list(p.exps))


def subgroup_order(gens, level: int = DEFAULT_LEVEL) -> int:
    """Order of the subgroup of (Z/N)^6 generated by the columns."""
    H = subgroup_of_points(gens, level)
    # contains level * Z^6, so the canonical form is square of full rank
    return level**6 // abs(det_int(H))


# -- shapes ------------------------------------------------------------------


def lattice_shapes(ms, mode: str = "fixed", level: int = DEFAULT_LEVEL):
    """Shape data for subgroups attached to Weyl elements.

    mode='fixed': shape of the common fixed subgroup of the listed elements.
    mode='fixed&image': shape of T^w intersect K^w (single element).
    mode='norm_split': (shape of S^w, shape of a complement H^w, NormSplit).
    """
    if isinstance(ms, np.ndarray) and ms.ndim == 2:
        ms = [ms]
    ms = list(ms)
    if mode == "fixed":
        return cokernel_shape(fix_lattice(*ms), ambient_rank=6)
    if mode in ("fixed&image", "fixed∩image"):
        (m,) = ms
        lam = lattice_sum(fix_lattice(m), coboundary_lattice(m))
        return cokernel_shape(lam, ambient_rank=6)
    if mode == "norm_split":
        (m,) = ms
        split = norm_split(m, level=level)
        return split.s_shape, split.h_shape, split
    raise ValueError(f"unknown mode {mode!r}")


@dataclass
class NormSplit:
    """The decomposition T^w = S^w x H^w together with the projection.

    lam_s and lam_h are the vanishing lattices of the factors; h_gens holds
    mu_N generators of H^w.  project() computes the component of a fixed
    point along H^w (the map called wp elsewhere).
    """

    matrix: np.ndarray
    lam_fix: np.ndarray
    lam_s: np.ndarray
    lam_h: np.ndarray
    s_shape: AbelianShape
    h_shape: AbelianShape
    level: int

    def h_gens(self) -> np.ndarray:
        return points_of_lattice(self.lam_h, self.level)

    def contains(self, p: TorusPoint) -> bool:
        lam = self.lam_fix
        v = intmat(lam).T.reshape(-1, 6) @ np.array(p.exps, dtype=object)
        return bool(((v % p.level) == 0).all())

    def project(self, p: TorusPoint) -> TorusPoint:
        """Component of p along H^w; requires p fixed by the element."""
        if not self.contains(p):
            raise ValueError("point is not in the fixed subgroup")
        N = self.level
        ls = intmat(self.lam_s).T.reshape(-1, 6)
        lh = intmat(self.lam_h).T.reshape(-1, 6)
        # unknown s with ls @ s = 0 and lh @ (p - s) = 0 (mod N)
        A = np.concatenate([ls, lh], axis=0)
        b = np.concatenate(
            [np.zeros(ls.shape[0], dtype=object), lh @ np.array(p.exps, dtype=object)]
        )
        res = solve_mod(A, b % N, N)
        if res is None:
            raise ArithmeticError("splitting failed; not a valid complement")
        s = TorusPoint.make(res[0], N)
        return p * s.inverse()


def norm_split(m, level: int = DEFAULT_LEVEL) -> NormSplit:
    """Split T^w into the norm-image subtorus and a finite complement."""
    m = np.asarray(m, dtype=np.int64)
    lam_fix = fix_lattice(m)
    lam_s = s_lattice(m)
    comp = complement_of_saturation(lam_s)
    lam_h = lattice_sum(lam_fix, comp)
    s_shape = cokernel_shape(lam_s, ambient_rank=6)
    h_shape = cokernel_shape(lam_h, ambient_rank=6)
    for d in h_shape.torsion:
        if level % d != 0:
            raise ValueError(
                f"complement has a Z{d} factor, unfaithful at level {level}"
            )
    return NormSplit(m, lam_fix, lam_s, lam_h, s_shape, h_shape, level)


# -- norm equations and coset orders ----------------------------------------


def solve_norm_equation(m, target: TorusPoint) -> TorusPoint | None:
    """s with norm(s) == target, the norm being prod_i (w^i . s); or None."""
    n_pt = norm_point_matrix(m)
    res = solve_mod(n_pt, list(target.exps), target.level)
    if res is None:
        return None
    return TorusPoint.make(res[0], target.level)


def minimal_coset_order(m, defect: TorusPoint) -> tuple[int, TorusPoint]:
    """Minimize the order of defect * norm(s) over torus points s.

    Returns (k, s) where k is the minimal achievable order of the product
    and s realizes it.  Used to pick minimal-order lifts: for a lift F of w
    with F^r = torus point `defect` (r the order of w), the lift F s has
    order r * k.
    """
    N = defect.level
    n_pt = norm_point_matrix(m)
    a_def = np.array(defect.exps, dtype=object)
    for k in divisors(N):
        mod = N // k
        if mod == 1:
            # everything is divisible; s = identity works
            return k, TorusPoint.make([0] * 6, N)
        res = solve_mod(n_pt, (-a_def) % mod, mod)
        if res is not None:
            s = TorusPoint.make(res[0], N)
            prod = defect * _apply_norm(n_pt, s)
            assert prod.order() <= k
            return prod.order(), s
    raise ArithmeticError("unreachable: k = N always solves modulo 1")


def _apply_norm(n_pt, s: TorusPoint) -> TorusPoint:
    return TorusPoint.make(n_pt @ np.array(s.exps, dtype=object), s.level)
