"""Sparse exact elimination: spans, relations, and solving."""

import numpy as np

from e6fine.cyclo import field
from e6fine.linalg import (
    Echelon,
    apply_columns,
    column_relations,
    in_span,
    rank,
    same_span,
    solve_columns,
    vec_axpy,
    vec_equal,
)

F = field(36)


def fvec(pairs):
    return {k: F.from_rational(v) if isinstance(v, int) else v
            for k, v in pairs.items()}


def rand_vec(rng, dim=10, density=0.4):
    out = {}
    for k in range(dim):
        if rng.random() < density:
            c = int(rng.integers(-4, 5))
            if c:
                out[k] = F.from_rational(c) * F.zeta(int(rng.integers(0, 36)))
    return out


def test_echelon_canonical_under_order():
    rng = np.random.default_rng(3)
    vecs = [rand_vec(rng) for _ in range(6)]
    a = Echelon()
    for v in vecs:
        a.add(v)
    b = Echelon()
    for v in reversed(vecs):
        b.add(v)
    assert a.dim == b.dim
    assert set(a.rows) == set(b.rows)
    for p in a.rows:
        assert vec_equal(a.rows[p], b.rows[p])


def test_rank_and_span():
    v1 = fvec({0: 1, 2: 1})
    v2 = fvec({1: 1})
    v3 = vec_axpy(F.from_rational(3), v1, v2)  # dependent on v1, v2
    assert rank([v1, v2, v3]) == 2
    assert in_span([v1, v2], v3)
    assert not in_span([v1, v2], fvec({3: 1}))
    assert same_span([v1, v2], [v3, vec_axpy(F.one, v2, v1)])
    assert not same_span([v1], [v2])


def test_rank_with_roots_of_unity():
    # (1, zeta) and (zeta^-1, 1) are parallel
    z = F.zeta(7)
    v1 = {0: F.one, 1: z}
    v2 = {0: F.one / z, 1: F.one}
    assert rank([v1, v2]) == 1
    v3 = {0: F.one, 1: -z}
    assert rank([v1, v3]) == 2


def test_column_relations():
    rng = np.random.default_rng(9)
    cols = [rand_vec(rng, dim=6) for _ in range(4)]
    # append two exact combinations
    comb1 = vec_axpy(F.from_rational(2), cols[0], cols[1])
    comb2 = vec_axpy(F.zeta(4), cols[2], {})
    all_cols = cols + [comb1, comb2]
    rels = column_relations(all_cols)
    base_rank = rank(cols)
    assert len(rels) == 6 - base_rank
    for r in rels:
        assert not apply_columns(all_cols, r)


def test_solve_columns():
    rng = np.random.default_rng(15)
    cols = [rand_vec(rng, dim=8) for _ in range(5)]
    coeffs = {0: F.from_rational(2), 2: F.zeta(5), 4: -F.one}
    target = apply_columns(cols, coeffs)
    sol = solve_columns(cols, target)
    assert sol is not None
    assert vec_equal(apply_columns(cols, sol), target)
    # unreachable target
    out = dict(target)
    out[17] = F.one
    assert solve_columns(cols, out) is None


def test_empty_and_zero_vectors():
    e = Echelon()
    assert not e.add({})
    assert e.dim == 0
    assert e.contains({})
    assert rank([{}, {}]) == 0
