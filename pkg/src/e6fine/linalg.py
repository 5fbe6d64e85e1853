"""Exact sparse linear algebra over the cyclotomic working field.

Vectors are dicts mapping coordinate index to a nonzero CycNum; the ambient
dimension is implicit.  This suits the algebra computations here: almost
every vector of interest (root vectors, eigenvectors of monomial maps) has
small support, and eliminations happen inside blocks of modest size, so a
dense float path would buy nothing and cost exactness.

The elimination routines keep a reduced echelon basis keyed by pivot
coordinate, which makes span membership, rank, and canonical comparison of
subspaces one-liners.
"""

from __future__ import annotations

from .cyclo import CycNum, field

__all__ = [
    "vec_scale",
    "vec_axpy",
    "vec_sub",
    "vec_equal",
    "vec_is_zero",
    "Echelon",
    "ColumnSolver",
    "rank",
    "in_span",
    "same_span",
    "column_relations",
    "apply_columns",
    "solve_columns",
]

Vec = dict[int, CycNum]


def _clean(v: Vec) -> Vec:
    return {k: c for k, c in v.items() if not c.is_zero()}


def vec_scale(c: CycNum, v: Vec) -> Vec:
    if c.is_zero():
        return {}
    return {k: c * x for k, x in v.items()}


def vec_axpy(a: CycNum, x: Vec, y: Vec) -> Vec:
    """a * x + y, dropping cancelled coordinates."""
    out = dict(y)
    for k, c in x.items():
        s = out.get(k)
        t = a * c if s is None else a * c + s
        if t.is_zero():
            out.pop(k, None)
        else:
            out[k] = t
    return out


def vec_sub(x: Vec, y: Vec) -> Vec:
    out = dict(x)
    for k, c in y.items():
        s = out.get(k)
        t = -c if s is None else s - c
        if t.is_zero():
            out.pop(k, None)
        else:
            out[k] = t
    return out


def vec_is_zero(v: Vec) -> bool:
    return all(c.is_zero() for c in v.values())


def vec_equal(x: Vec, y: Vec) -> bool:
    return vec_is_zero(vec_sub(x, y))


class Echelon:
    """A growing reduced echelon basis of a subspace.

    Add vectors with add(); the residue after reduction is returned, so a
    zero residue means the vector was already in the span.  Pivot columns
    are normalized to 1 and eliminated from all other basis vectors, making
    the stored basis canonical for the subspace (given any insertion order).
    """

    def __init__(self, level: int = 36):
        self.rows: dict[int, Vec] = {}
        self._one = field(level).one

    def reduce(self, v: Vec) -> Vec:
        v = _clean(v)
        for piv in sorted(set(v) & set(self.rows)):
            c = v.get(piv)
            if c is None or c.is_zero():
                continue
            v = vec_axpy(-c, self.rows[piv], v)
        return v

    def add(self, v: Vec) -> Vec:
        """Insert v; returns the residue (empty dict if dependent)."""
        v = self.reduce(v)
        if not v:
            return {}
        piv = min(v)
        inv = self._one / v[piv]
        v = vec_scale(inv, v)
        # eliminate the new pivot from the existing basis
        for p, row in list(self.rows.items()):
            c = row.get(piv)
            if c is not None and not c.is_zero():
                self.rows[p] = vec_axpy(-c, v, row)
        self.rows[piv] = v
        return v

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> list[Vec]:
        return [self.rows[p] for p in sorted(self.rows)]


def rank(vectors, level: int = 36) -> int:
    ech = Echelon(level)
    for v in vectors:
        ech.add(v)
    return ech.dim


def in_span(vectors, v: Vec, level: int = 36) -> bool:
    ech = Echelon(level)
    for u in vectors:
        ech.add(u)
    return ech.contains(v)


def same_span(us, vs, level: int = 36) -> bool:
    a = Echelon(level)
    for u in us:
        a.add(u)
    b = Echelon(level)
    for v in vs:
        b.add(v)
    if a.dim != b.dim or set(a.rows) != set(b.rows):
        return False
    return all(vec_equal(a.rows[p], b.rows[p]) for p in a.rows)


def column_relations(cols: list[Vec], level: int = 36) -> list[Vec]:
    """Basis of {c : sum_j c_j cols[j] = 0} (the kernel of the column map).

    Works by echelonizing columns augmented with unit tags in coordinates
    shifted beyond the ambient space; a column that reduces to zero leaves
    its tag as a relation.
    """
    shift = 1 + max((max(c) for c in cols if c), default=0)
    one = field(level).one
    ech = Echelon(level)
    rels: list[Vec] = []
    for j, col in enumerate(cols):
        tagged = dict(col)
        tagged[shift + j] = one
        res = _reduce_main(ech, tagged, shift)
        if all(k >= shift for k in res):
            rels.append({k - shift: c for k, c in res.items()})
        else:
            _insert_main(ech, res, shift)
    return rels


def _reduce_main(ech: Echelon, v: Vec, shift: int) -> Vec:
    """Reduce only against pivots in the main (untagged) coordinates."""
    v = _clean(v)
    for piv in sorted(k for k in set(v) & set(ech.rows) if k < shift):
        c = v.get(piv)
        if c is None or c.is_zero():
            continue
        v = vec_axpy(-c, ech.rows[piv], v)
    return v


def _insert_main(ech: Echelon, v: Vec, shift: int) -> None:
    piv = min(k for k in v if k < shift)
    inv = ech._one / v[piv]
    v = vec_scale(inv, v)
    for p, row in list(ech.rows.items()):
        c = row.get(piv)
        if c is not None and not c.is_zero():
            ech.rows[p] = vec_axpy(-c, v, row)
    ech.rows[piv] = v


def apply_columns(cols: list[Vec], v: Vec) -> Vec:
    out: Vec = {}
    for j, c in v.items():
        out = vec_axpy(c, cols[j], out)
    return out


class ColumnSolver:
    """Reusable solver for sum_j c_j cols[j] = target, many targets.

    The tagged elimination runs once at construction; each solve() is a
    single reduction pass.
    """

    def __init__(self, cols: list[Vec], ambient_dim: int | None = None,
                 level: int = 36):
        if ambient_dim is None:
            ambient_dim = 1 + max((max(c) for c in cols if c), default=0)
        self.shift = ambient_dim
        one = field(level).one
        self.ech = Echelon(level)
        for j, col in enumerate(cols):
            tagged = dict(col)
            tagged[self.shift + j] = one
            res = _reduce_main(self.ech, tagged, self.shift)
            if not all(k >= self.shift for k in res):
                _insert_main(self.ech, res, self.shift)

    def solve(self, target: Vec) -> Vec | None:
        if target and max(target) >= self.shift:
            return None
        res = _reduce_main(self.ech, dict(target), self.shift)
        if any(k < self.shift for k in res):
            return None
        return {k - self.shift: -c for k, c in res.items()}


def solve_columns(cols: list[Vec], target: Vec, level: int = 36) -> Vec | None:
    """Coefficients c with sum_j c_j cols[j] = target, or None."""
    dim = 1 + max(
        [max(c) for c in cols if c] + ([max(target)] if target else [0])
    )
    return ColumnSolver(cols, dim, level).solve(target)
