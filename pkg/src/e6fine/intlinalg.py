"""Exact integer linear algebra: normal forms, lattices, congruence solving.

Matrices are numpy arrays of dtype=object holding Python ints, so nothing
ever overflows.  Lattices (subgroups of Z^n) are represented by generator
matrices whose *columns* span the lattice; they need not be independent.

The two normal forms:

- smith_normal_form(A) returns (D, U, V) with U @ A @ V == D, U and V
  unimodular, D diagonal with d_1 | d_2 | ... >= 0.
- hermite_column_form(A) returns the canonical column echelon form of the
  column lattice (pivots positive, entries left of a pivot reduced modulo
  it); two generator matrices span the same lattice iff their forms agree.

Congruence solving works over Z/N through the Smith form, returning one
solution plus generators of the solution group; this is the workhorse behind
torus point computations elsewhere.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

__all__ = [
    "AbelianShape",
    "cokernel_shape",
    "complement_of_saturation",
    "det_int",
    "divisors",
    "hermite_column_form",
    "intmat",
    "kernel_basis",
    "lattice_equal",
    "lattice_member",
    "lattice_sum",
    "saturation",
    "smith_normal_form",
    "solve_integer",
    "solve_mod",
    "unimodular_inverse",
]


def intmat(rows) -> np.ndarray:
    """Object-dtype integer matrix from nested lists (or any array)."""
    a = np.array(rows, dtype=object)
    if a.ndim == 1:
        a = a.reshape(-1, 1) if a.size else a.reshape(0, 0)
    return a


def _eye(n: int) -> np.ndarray:
    return np.array([[1 if i == j else 0 for j in range(n)] for i in range(n)], dtype=object)


def divisors(n: int) -> list[int]:
    """Positive divisors of n, ascending."""
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def det_int(M: np.ndarray) -> int:
    """Determinant of a square integer matrix (Bareiss, fraction-free)."""
    A = [list(map(int, row)) for row in np.asarray(M, dtype=object)]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def smith_normal_form(A) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(D, U, V) with U @ A @ V == D in Smith normal form.

    D has the same shape as A; the diagonal entries are nonnegative and each
    divides the next.
    """
    D = intmat(A).copy()
    m, n = D.shape
    U = _eye(m)
    V = _eye(n)

    def swap_rows(i, j):
        if i != j:
            D[[i, j], :] = D[[j, i], :]
            U[[i, j], :] = U[[j, i], :]

    def swap_cols(i, j):
        if i != j:
            D[:, [i, j]] = D[:, [j, i]]
            V[:, [i, j]] = V[:, [j, i]]

    def add_row(src, dst, f):
        if f:
            D[dst, :] += f * D[src, :]
            U[dst, :] += f * U[src, :]

    def add_col(src, dst, f):
        if f:
            D[:, dst] += f * D[:, src]
            V[:, dst] += f * V[:, src]

    def diagonalize():
        t = 0
        while t < min(m, n):
            piv = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i, j] != 0:
                        piv = (i, j)
                        break
                if piv:
                    break
            if piv is None:
                return t
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            while True:
                # Euclid down column t
                for i in range(t + 1, m):
                    while D[i, t] != 0:
                        q = D[i, t] // D[t, t]
                        add_row(t, i, -q)
                        if D[i, t] != 0:
                            swap_rows(t, i)
                # Euclid along row t (may reintroduce column entries)
                for j in range(t + 1, n):
                    while D[t, j] != 0:
                        q = D[t, j] // D[t, t]
                        add_col(t, j, -q)
                        if D[t, j] != 0:
                            swap_cols(t, j)
                if all(D[i, t] == 0 for i in range(t + 1, m)) and all(
                    D[t, j] == 0 for j in range(t + 1, n)
                ):
                    break
            if D[t, t] < 0:
                D[t, :] = -D[t, :]
                U[t, :] = -U[t, :]
            t += 1
        return t

    r = diagonalize()
    # enforce the divisibility chain; each fix strictly shrinks an invariant,
    # so the loop terminates
    while True:
        bad = None
        for i in range(r - 1):
            if D[i, i] and D[i + 1, i + 1] % D[i, i] != 0:
                bad = i
                break
        if bad is None:
            break
        add_col(bad + 1, bad, 1)
        r = diagonalize()
    return D, U, V


def rank_from_smith(D: np.ndarray) -> int:
    r = 0
    for i in range(min(D.shape)):
        if D[i, i] != 0:
            r += 1
    return r


def hermite_column_form(A) -> np.ndarray:
    """Canonical column Hermite form of the column lattice of A.

    Returns an n x r matrix (r the lattice rank); pivots descend, are
    positive, and entries to the left of each pivot lie in [0, pivot).
    """
    W = intmat(A).copy()
    n, k = W.shape
    if k == 0:
        return W.reshape(n, 0)
    c = 0
    pivots = []
    for r in range(n):
        # gather nonzero entries in row r among columns >= c
        while True:
            js = [j for j in range(c, k) if W[r, j] != 0]
            if not js:
                break
            j0 = min(js, key=lambda j: abs(W[r, j]))
            W[:, [c, j0]] = W[:, [j0, c]]
            done = True
            for j in range(c + 1, k):
                if W[r, j] != 0:
                    q = W[r, j] // W[r, c]
                    W[:, j] -= q * W[:, c]
                    if W[r, j] != 0:
                        done = False
            if done:
                break
        if c < k and W[r, c] != 0:
            if W[r, c] < 0:
                W[:, c] = -W[:, c]
            # reduce the entries of earlier pivot columns at this row
            for j in range(c):
                q = W[r, j] // W[r, c]
                W[:, j] -= q * W[:, c]
            pivots.append(r)
            c += 1
            if c == k:
                break
    return W[:, :c]


def lattice_equal(A, B) -> bool:
    HA = hermite_column_form(A)
    HB = hermite_column_form(B)
    return HA.shape == HB.shape and bool(np.equal(HA, HB).all())


def lattice_sum(*mats) -> np.ndarray:
    parts = [intmat(m) for m in mats]
    n = parts[0].shape[0]
    cols = [p.reshape(n, -1) for p in parts]
    return np.concatenate(cols, axis=1)


def lattice_member(A, b) -> bool:
    return solve_integer(A, b) is not None


def kernel_basis(A) -> np.ndarray:
    """Columns form a basis of the integer kernel {x : A x = 0} (saturated)."""
    A = intmat(A)
    D, _, V = smith_normal_form(A)
    r = rank_from_smith(D)
    return V[:, r:]


def solve_integer(A, b):
    """One integer solution x of A x = b, or None."""
    A = intmat(A)
    m, n = A.shape
    b = np.array(list(b), dtype=object).reshape(m)
    D, U, V = smith_normal_form(A)
    r = rank_from_smith(D)
    c = U @ b
    y = [0] * n
    for i in range(m):
        d = D[i, i] if i < min(m, n) else 0
        if i < r:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
        elif c[i] != 0:
            return None
    return V @ np.array(y, dtype=object)


def solve_mod(A, b, N: int):
    """Solve A x == b (mod N).  Returns (x0, gens) or None.

    x0 is one solution with entries in [0, N); gens generate the group of
    homogeneous solutions modulo N (as columns of a matrix, entries in
    [0, N)).
    """
    A = intmat(A)
    m, n = A.shape
    b = np.array(list(b), dtype=object).reshape(m)
    D, U, V = smith_normal_form(A)
    r = rank_from_smith(D)
    c = U @ b
    y = [0] * n
    for i in range(m):
        d = int(D[i, i]) if i < min(m, n) else 0
        ci = int(c[i]) % N
        if i < r:
            g = gcd(d, N)
            if ci % g != 0:
                return None
            # solve d*y == ci mod N: y = (ci/g) * inv(d/g) mod N/g
            Ng = N // g
            y[i] = (ci // g) * pow(d // g, -1, Ng) % Ng if Ng > 1 else 0
        else:
            if ci % N != 0:
                return None
    x0 = (V @ np.array(y, dtype=object)) % N
    gens_y = []
    for i in range(n):
        if i < r:
            step = N // gcd(int(D[i, i]), N)
            if step % N != 0:
                e = [0] * n
                e[i] = step
                gens_y.append(e)
        else:
            e = [0] * n
            e[i] = 1
            gens_y.append(e)
    if gens_y:
        G = (V @ np.array(gens_y, dtype=object).T) % N
    else:
        G = np.zeros((n, 0), dtype=object)
    return x0, G


def unimodular_inverse(M) -> np.ndarray:
    """Exact inverse of an integer matrix with determinant +-1."""
    M = intmat(M)
    n = M.shape[0]
    mat = [[Fraction(int(M[i, j])) for j in range(n)] for i in range(n)]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        mat[col], mat[piv] = mat[piv], mat[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        f = 1 / mat[col][col]
        mat[col] = [x * f for x in mat[col]]
        inv[col] = [x * f for x in inv[col]]
        for r in range(n):
            if r != col and mat[r][col]:
                g = mat[r][col]
                mat[r] = [a - g * b for a, b in zip(mat[r], mat[col])]
                inv[r] = [a - g * b for a, b in zip(inv[r], inv[col])]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            q = inv[i][j]
            if q.denominator != 1:
                raise ValueError("matrix is not unimodular")
            out[i, j] = int(q)
    return out


def saturation(A) -> np.ndarray:
    """Basis of the saturation (Q-span intersected with Z^m) of colspace(A)."""
    A = intmat(A)
    D, U, _ = smith_normal_form(A)
    r = rank_from_smith(D)
    Uinv = unimodular_inverse(U)
    return Uinv[:, :r]


def complement_of_saturation(A) -> np.ndarray:
    """Columns completing a basis of the saturation of colspace(A) to Z^m."""
    A = intmat(A)
    D, U, _ = smith_normal_form(A)
    r = rank_from_smith(D)
    Uinv = unimodular_inverse(U)
    return Uinv[:, r:]


# -- abelian group shapes ----------------------------------------------------


@dataclass(frozen=True)
class AbelianShape:
    """Isomorphism type of a finitely generated abelian group.

    free_rank counts Z (equivalently F*) factors; torsion is the divisibility
    chain d_1 | d_2 | ..., every d_i > 1.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if any(d <= 1 for d in self.torsion):
            raise ValueError("torsion entries must exceed 1")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"not a divisibility chain: {self.torsion}")

    @staticmethod
    def from_primary(free_rank: int, primary: dict[int, list[int]]) -> "AbelianShape":
        """Build from prime-power data, e.g. {2: [1,1,1], 3: [1,1]} = Z2^3 x Z3^2."""
        cleaned = {p: sorted((e for e in exps if e > 0), reverse=True)
                   for p, exps in primary.items()}
        cleaned = {p: exps for p, exps in cleaned.items() if exps}
        if not cleaned:
            return AbelianShape(free_rank, ())
        width = max(len(v) for v in cleaned.values())
        chain = []
        for slot in range(width):
            d = 1
            for p, exps in cleaned.items():
                if slot < len(exps):
                    d *= p ** exps[slot]
            chain.append(d)
        return AbelianShape(free_rank, tuple(reversed(chain)))

    def primary(self) -> dict[int, list[int]]:
        """Prime -> exponent multiset (descending) of the torsion part."""
        out: dict[int, list[int]] = {}
        for d in self.torsion:
            rest = d
            p = 2
            while rest > 1:
                if rest % p == 0:
                    e = 0
                    while rest % p == 0:
                        rest //= p
                        e += 1
                    out.setdefault(p, []).append(e)
                p += 1 if p == 2 else 2
        return {p: sorted(v, reverse=True) for p, v in out.items()}

    def order(self) -> int | None:
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("(F*)")
        elif self.free_rank > 1:
            parts.append(f"(F*)^{self.free_rank}")
        prim = self.primary()
        for p in sorted(prim, reverse=True):
            for e, mult in sorted(Counter(prim[p]).items(), reverse=True):
                q = p**e
                parts.append(f"Z{q}" if mult == 1 else f"Z{q}^{mult}")
        return " x ".join(parts) if parts else "1"


def cokernel_shape(A, ambient_rank: int | None = None) -> AbelianShape:
    """Shape of Z^m / colspace(A) for A with m rows."""
    A = intmat(A)
    m = ambient_rank if ambient_rank is not None else A.shape[0]
    if A.size == 0:
        return AbelianShape(m, ())
    D, _, _ = smith_normal_form(A)
    r = rank_from_smith(D)
    torsion = tuple(int(D[i, i]) for i in range(r) if D[i, i] > 1)
    return AbelianShape(m - r, torsion)
