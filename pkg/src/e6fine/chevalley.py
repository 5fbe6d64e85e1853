"""The split algebra of type E6 in a Chevalley basis.

Basis layout: indices 0..5 are the coroot generators h_1..h_6; indices
6..41 are root vectors for the positive roots sorted by (height, coords);
indices 42..77 are the corresponding negatives, aligned so that the
opposite of index i is i +- 36.

Structure constants come from a bimultiplicative sign cocycle: with B the
integer bilinear form that is 1 on the diagonal, the Cartan entry above the
diagonal, and 0 below, the sign of [e_a, e_b] is (-1)^B(a,b).  B satisfies
B(a,b) + B(b,a) = (a,b) and B(a,a) = (a,a)/2 on the root lattice, which is
exactly what makes the table antisymmetric and Jacobi hold; the test suite
certifies both exhaustively on the dense tensor.

Standard automorphisms built here act monomially: torus points scale root
vectors by roots of unity, and any element of the (extended) reflection
group lifts to a signed permutation of root vectors.  The lift is again
constructed from the cocycle, with signs fixed on simple roots and
propagated through one decomposition per root; the defining relation is
then asserted for all pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .lie import Automorphism, LieAlgebra
from .linalg import Vec
from .torus import TorusPoint, matrix_order, minimal_coset_order
from .weyl import CARTAN

__all__ = [
    "ChevalleyBasis",
    "chevalley_basis",
    "positive_roots",
    "all_roots",
    "torus_auto",
    "weyl_lift",
    "lift_defect",
]

_CARTAN = np.asarray(CARTAN, dtype=np.int64)


def _inner(a, b) -> int:
    return int(np.dot(a, _CARTAN @ np.asarray(b, dtype=np.int64)))


@lru_cache(maxsize=1)
def positive_roots() -> tuple[tuple[int, ...], ...]:
    """Positive roots in simple-root coordinates, by height then coords."""
    simples = [tuple(int(v) for v in row) for row in np.eye(6, dtype=int)]
    known = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for alpha in frontier:
            for s in simples:
                if alpha != s and _inner(alpha, s) == -1:
                    beta = tuple(a + b for a, b in zip(alpha, s))
                    if beta not in known:
                        known.add(beta)
                        nxt.append(beta)
        frontier = nxt
    return tuple(sorted(known, key=lambda r: (sum(r), r)))


def all_roots() -> tuple[tuple[int, ...], ...]:
    pos = positive_roots()
    return pos + tuple(tuple(-c for c in r) for r in pos)


# parity form behind the structure-constant signs: diagonal 1, Cartan entry
# above the diagonal, zero below
_B = np.triu(_CARTAN, k=1) + np.eye(6, dtype=np.int64)


def _eps(a, b) -> int:
    """The +-1 cocycle sign for the ordered pair of lattice vectors."""
    par = int(np.dot(a, _B @ np.asarray(b, dtype=np.int64)))
    return -1 if par % 2 else 1


@dataclass
class ChevalleyBasis:
    algebra: LieAlgebra
    roots: tuple[tuple[int, ...], ...]
    root_index: dict[tuple[int, ...], int]

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def index(self, root) -> int:
        """Basis index of the root vector for the given root."""
        return 6 + self.root_index[tuple(int(c) for c in root)]

    def root_of(self, idx: int) -> tuple[int, ...]:
        return self.roots[idx - 6]

    def opposite(self, idx: int) -> int:
        n = len(self.roots) // 2
        return idx + n if idx - 6 < n else idx - n

    def is_cartan(self, idx: int) -> bool:
        return idx < 6


@lru_cache(maxsize=1)
def chevalley_basis() -> ChevalleyBasis:
    roots = all_roots()
    index = {r: k for k, r in enumerate(roots)}
    rootset = set(roots)
    dim = 6 + len(roots)
    table: dict[tuple[int, int], list[tuple[int, int]]] = {}

    def put(i, j, terms):
        if terms:
            table[(i, j)] = terms
            table[(j, i)] = [(k, -c) for k, c in terms]

    for k, alpha in enumerate(roots):
        ia = 6 + k
        # Cartan action
        for i in range(6):
            pair = _inner(np.eye(6, dtype=int)[i], alpha)
            if pair and (i, ia) not in table:
                put(i, ia, [(ia, pair)])
        for l in range(k + 1, len(roots)):
            beta = roots[l]
            ib = 6 + l
            total = tuple(a + b for a, b in zip(alpha, beta))
            if all(c == 0 for c in total):
                sign = _eps(alpha, [-c for c in alpha])
                terms = [(i, sign * c) for i, c in enumerate(alpha) if c]
                put(ia, ib, terms)
            elif total in rootset:
                put(ia, ib, [(index[total] + 6, _eps(alpha, beta))])
    algebra = LieAlgebra(dim, table)
    return ChevalleyBasis(algebra, roots, index)


# -- standard automorphisms --------------------------------------------------


def torus_auto(point: TorusPoint, basis: ChevalleyBasis | None = None
               ) -> Automorphism:
    """Diagonal automorphism: e_alpha scales by zeta^<exponents, alpha>."""
    cb = basis or chevalley_basis()
    fld = cb.algebra.field
    if point.level != fld.n:
        raise ValueError("point level does not match the working field")
    cols: list[Vec] = []
    for i in range(6):
        cols.append({i: fld.one})
    for alpha in cb.roots:
        e = sum(a * c for a, c in zip(point.exps, alpha)) % point.level
        cols.append({len(cols): fld.zeta(e)})
    return Automorphism(cb.algebra, cols)


def _lift_signs(m: np.ndarray, cb: ChevalleyBasis) -> dict[tuple[int, ...], int]:
    """Signs for the monomial lift: +1 on simple roots, cocycle-propagated."""
    mt = np.asarray(m, dtype=np.int64).T
    pos = positive_roots()
    sign: dict[tuple[int, ...], int] = {}
    for i in range(6):
        sign[tuple(int(v) for v in np.eye(6, dtype=int)[i])] = 1
    by_height = sorted(pos, key=lambda r: (sum(r), r))
    for alpha in by_height:
        if alpha in sign:
            continue
        done = False
        for s, ssign in list(sign.items()):
            if sum(s) >= sum(alpha):
                continue
            rest = tuple(a - b for a, b in zip(alpha, s))
            if rest in sign:
                wa = tuple(int(v) for v in mt @ np.array(rest))
                ws = tuple(int(v) for v in mt @ np.array(s))
                sign[alpha] = (
                    sign[rest] * ssign * _eps(rest, s) * _eps(wa, ws)
                )
                done = True
                break
        if not done:
            raise AssertionError(f"no decomposition found for {alpha}")
    # consistency across every decomposition
    rootset = set(cb.roots)
    for a in pos:
        for b in pos:
            tot = tuple(x + y for x, y in zip(a, b))
            if tot in rootset and sum(tot) > 0:
                wa = tuple(int(v) for v in mt @ np.array(a))
                wb = tuple(int(v) for v in mt @ np.array(b))
                lhs = sign[a] * sign[b] * _eps(a, b)
                rhs = sign[tot] * _eps(wa, wb)
                if lhs != rhs:
                    raise AssertionError("sign propagation is inconsistent")
    for alpha in pos:
        sign[tuple(-c for c in alpha)] = sign[alpha]
    return sign


def weyl_lift(m, basis: ChevalleyBasis | None = None, minimize: bool = False
              ) -> Automorphism:
    """Monomial automorphism covering the reflection-group element m.

    With minimize=True, post-compose with a torus point chosen so the lift
    has the least order in its torus coset.
    """
    cb = basis or chevalley_basis()
    m = np.asarray(m, dtype=np.int64)
    fld = cb.algebra.field
    sign = _lift_signs(m, cb)
    mt = m.T
    cols: list[Vec] = []
    for i in range(6):
        cols.append({j: fld.from_rational(int(m[i, j]))
                     for j in range(6) if m[i, j]})
    for alpha in cb.roots:
        image = tuple(int(v) for v in mt @ np.array(alpha))
        s = sign[alpha]
        cols.append({cb.index(image): fld.from_rational(s)})
    lift = Automorphism(cb.algebra, cols)
    if not minimize:
        return lift
    defect = lift_defect(m, cb)
    _, s_pt = minimal_coset_order(m, defect)
    return lift @ torus_auto(s_pt, cb)


def lift_defect(m, basis: ChevalleyBasis | None = None) -> TorusPoint:
    """The torus point F^r for the plain monomial lift F of m (r = order)."""
    cb = basis or chevalley_basis()
    m = np.asarray(m, dtype=np.int64)
    sign = _lift_signs(m, cb)
    mt = m.T
    level = cb.algebra.level
    r = matrix_order(m)
    # F^r e_alpha = (prod of signs over r steps of the orbit walk) e_alpha;
    # an orbit of length L contributes its sign product r/L times
    exps = []
    for i in range(6):
        alpha = tuple(int(v) for v in np.eye(6, dtype=int)[i])
        total = 1
        cur = alpha
        for _ in range(r):
            total *= sign[cur]
            cur = tuple(int(v) for v in mt @ np.array(cur))
        assert cur == alpha
        exps.append(0 if total == 1 else level // 2)
    return TorusPoint.make(exps, level)
