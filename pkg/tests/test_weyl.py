"""Reflection-group layer: enumeration, classes, and stabilizer lattices.

The heart of this file is a calibration suite: for every tabulated class
representative (25 inner, 10 outer) the fixed subgroup of the torus is known
as an explicit parametrized subgroup.  We recompute its vanishing lattice
from the parametrization and demand exact lattice equality with the one the
package derives from the matrix, which pins down every sign and transpose
convention in the torus action.
"""

import numpy as np
import pytest

from e6fine.intlinalg import (
    cokernel_shape,
    intmat,
    kernel_basis,
    lattice_equal,
    lattice_sum,
    solve_mod,
)
from e6fine.torus import fix_lattice
from e6fine.weyl import WeylGroup


@pytest.fixture(scope="module")
def W():
    return WeylGroup.enumerate()


def math_lcm(values):
    from math import lcm

    return lcm(*values) if values else 1


def stabilizer_lattice(params):
    """Vanishing lattice of an explicitly parametrized subgroup of T.

    params is a list of (order, {coord: exponent}) pairs, order 0 meaning a
    free scalar parameter.  A character chi kills the subgroup exactly when
    it pairs to zero with every free row and to zero mod m with every row of
    finite order m.
    """
    rows_free = []
    rows_fin = []
    for order, coeffs in params:
        row = [coeffs.get(i, 0) for i in range(6)]
        if order == 0:
            rows_free.append(row)
        else:
            rows_fin.append((order, row))
    if rows_free:
        K = kernel_basis(intmat(rows_free))
    else:
        K = intmat(np.eye(6, dtype=int).tolist())
    if not rows_fin:
        return K
    L = math_lcm([m for m, _ in rows_fin])
    S = intmat(
        [[(L // m) * c for c in row] for m, row in rows_fin]
    ) @ K
    res = solve_mod(S.reshape(len(rows_fin), -1), [0] * len(rows_fin), L)
    assert res is not None
    _, gens = res
    return lattice_sum(K @ gens, L * K)


# (name, class order, class size, parametrization of the fixed subgroup,
#  shape string)
INNER_TABLE = [
    ("40843", 1, 1,
     [(0, {0: 1}), (0, {1: 1}), (0, {2: 1}), (0, {3: 1}), (0, {4: 1}),
      (0, {5: 1})],
     "(F*)^6"),
    ("19", 2, 270,
     [(0, {0: 1, 4: -1}), (0, {1: 1, 4: -1}), (0, {2: 1, 4: -1}),
      (0, {3: 1, 4: -2, 5: 1})],
     "(F*)^4"),
    ("21", 2, 540,
     [(0, {0: 1, 2: -1}), (0, {1: 1, 2: -1}), (0, {2: -2, 3: 1, 5: 1})],
     "(F*)^3"),
    ("96", 2, 45,
     [(0, {0: 1, 2: -1}), (0, {1: 1, 2: -1}),
      (2, {3: 1, 5: 1}), (2, {4: 1})],
     "(F*)^2 x Z2^2"),
    ("11323", 2, 36,
     [(0, {1: 1}), (0, {2: 1}), (0, {3: 1}), (0, {4: 1}), (0, {5: 1})],
     "(F*)^5"),
    ("2", 4, 3240,
     [(0, {0: 1, 2: 1, 3: -1, 5: -1}), (0, {1: 1, 2: 1, 3: -1, 5: -1})],
     "(F*)^2"),
    ("20", 4, 1620,
     [(0, {0: 1, 4: -1}), (0, {1: 1, 4: -1}), (0, {2: 1, 4: -1})],
     "(F*)^3"),
    ("75", 4, 540,
     [(0, {0: 1, 1: -1}), (2, {3: 1, 5: 1}), (2, {1: 1, 2: 1, 4: 1})],
     "(F*) x Z2^2"),
    ("140", 4, 540,
     [(0, {1: 1, 4: -1}), (0, {2: 1, 4: -1})],
     "(F*)^2"),
    ("1", 8, 6480,
     [(0, {0: 1, 1: -1})],
     "(F*)"),
    ("292", 3, 480,
     [(0, {0: 1, 3: -1, 4: 1, 5: -1}), (0, {1: 1, 2: 1, 3: -1, 5: -1}),
      (3, {3: 1, 5: 3})],
     "(F*)^2 x Z3"),
    ("3819", 3, 80,
     [(3, {0: 1, 5: 1}), (3, {1: 1, 3: 1, 4: 2, 5: 2}), (3, {2: 1, 4: 1})],
     "Z3^3"),
    ("4079", 3, 240,
     [(0, {1: 1, 5: -1}), (0, {2: 1, 5: -1}), (0, {3: 1, 5: -2}),
      (0, {4: 1, 5: -2})],
     "(F*)^4"),
    ("5", 6, 1440,
     [(0, {0: 1, 3: -1, 4: 1, 5: -1}), (0, {1: 1, 3: -1, 4: 1, 5: -1}),
      (0, {2: 1, 4: -1})],
     "(F*)^3"),
    ("15", 6, 2160,
     [(0, {0: 1, 1: -1}), (0, {1: -2, 3: 1, 5: 1})],
     "(F*)^2"),
    ("22", 6, 1440,
     [(0, {0: 1, 2: -1}), (0, {1: 1, 2: -1})],
     "(F*)^2"),
    ("122", 6, 4320,
     [(0, {1: 1, 2: 1, 3: -1, 5: -1}), (3, {0: 1, 4: 1, 5: 2})],
     "(F*) x Z3"),
    ("124", 6, 720,
     [(3, {0: 1, 4: 1, 5: 2})],
     "Z3"),
    ("195", 6, 1440,
     [(3, {0: 1, 5: 1}), (2, {3: 1, 5: 1}), (2, {1: 1, 2: 1, 4: 1})],
     "Z3 x Z2^2"),
    ("435", 6, 1440,
     [(0, {0: -2, 1: 1, 2: 1, 3: 1, 4: -1, 5: -1}),
      (3, {0: 1, 4: 3, 5: 1})],
     "(F*) x Z3"),
    ("121", 9, 5760,
     [(3, {0: 1, 1: 2, 2: 2, 3: 1, 4: 1})],
     "Z3"),
    ("4", 12, 4320,
     [(0, {0: 1, 1: -1})],
     "(F*)"),
    ("218", 12, 4320,
     [(3, {0: 1, 4: 1, 5: 2})],
     "Z3"),
    ("3", 5, 5184,
     [(0, {0: 1, 3: -1, 4: 1, 5: -1}), (0, {1: 1, 3: -1, 4: 1, 5: -1})],
     "(F*)^2"),
    ("135", 10, 5184,
     [(0, {1: -2, 3: 1, 5: 1})],
     "(F*)"),
]

OUTER_TABLE = [
    ("sigma", 2,
     [(0, {0: 1, 5: 1}), (0, {1: 1}), (0, {2: 1, 4: 1}), (0, {3: 1})],
     "(F*)^4"),
    ("eta2", 2,
     [(0, {0: -4, 1: 1, 4: 1}), (0, {0: 1, 2: 1, 3: -1}),
      (0, {0: -2, 5: 1})],
     "(F*)^3"),
    ("eta3", 2,
     [(0, {2: 1, 5: -1}), (0, {1: 1, 4: 1, 5: -2}),
      (2, {0: 1, 1: 1, 3: 1}), (2, {5: 1})],
     "(F*)^2 x Z2^2"),
    ("eta4", 2,
     [(0, {2: 1, 5: -1}), (2, {0: 1, 4: 1}), (2, {1: 1, 4: 1}),
      (2, {3: 1}), (2, {5: 1})],
     "(F*) x Z2^4"),
    ("eta5", 2,
     [(2, {0: 1}), (2, {1: 1}), (2, {2: 1}), (2, {3: 1}), (2, {4: 1}),
      (2, {5: 1})],
     "Z2^6"),
    ("mu1", 4,
     [(0, {0: 1, 2: -3, 3: 1, 4: 3, 5: -2}),
      (0, {1: 1, 2: -1, 4: 1, 5: -1})],
     "(F*)^2"),
    ("mu2", 4,
     [(0, {0: 1, 1: 2, 3: -3, 4: 2}), (0, {1: 1, 2: 1, 3: -2, 4: 1}),
      (0, {1: -2, 3: 2, 4: -2, 5: 1})],
     "(F*)^3"),
    ("mu3", 4,
     [(0, {1: 1, 4: 1, 5: -2}), (2, {0: 1, 2: 1, 3: 1, 4: 1}),
      (2, {5: 1})],
     "(F*) x Z2^2"),
    ("mu4", 4,
     [(4, {0: 1, 2: 1, 3: 1, 4: 1, 5: 2}), (4, {1: 1, 4: 1})],
     "Z4^2"),
    ("outer:17", 8,
     [(0, {0: 1, 1: -2, 2: -1, 3: 1, 4: 1})],
     "(F*)"),
]


def test_group_size_and_identity(W):
    assert len(W) == 51840
    assert W.identity_index == 40843
    assert (W.mat(40843) == np.eye(6, dtype=np.int64)).all()


def test_order_histogram(W):
    hist = {}
    for o in W.orders:
        hist[o] = hist.get(o, 0) + 1
    assert hist == {
        1: 1, 2: 891, 3: 800, 4: 5940, 5: 5184,
        6: 12960, 8: 6480, 9: 5760, 10: 5184, 12: 8640,
    }


def test_group_operations(W):
    rng = np.random.default_rng(27)
    for _ in range(50):
        i, j = (int(v) for v in rng.integers(1, len(W) + 1, size=2))
        k = W.mult(i, j)
        assert (W.mat(k) == W.mat(i) @ W.mat(j)).all()
        assert W.mult(i, W.inv(i)) == W.identity_index


def test_conjugacy_class_table(W):
    classes = W.conjugacy_classes()
    assert len(classes) == 25
    got = {(c["representative"], c["order"], c["size"]) for c in classes}
    want = {(int(name), order, size) for name, order, size, _, _ in INNER_TABLE}
    assert got == want


@pytest.mark.parametrize(
    "name,order,size,params,shape",
    INNER_TABLE,
    ids=[row[0] for row in INNER_TABLE],
)
def test_inner_stabilizer_lattices(W, name, order, size, params, shape):
    m = W.mat(int(name))
    assert W.element_order(m) == order
    lam = fix_lattice(m)
    assert lattice_equal(lam, stabilizer_lattice(params))
    assert str(cokernel_shape(lam, ambient_rank=6)) == shape


@pytest.mark.parametrize(
    "name,order,params,shape",
    OUTER_TABLE,
    ids=[row[0] for row in OUTER_TABLE],
)
def test_outer_stabilizer_lattices(W, name, order, params, shape):
    m = W.named_element(name)
    assert W.element_order(m) == order
    lam = fix_lattice(m)
    assert lattice_equal(lam, stabilizer_lattice(params))
    assert str(cokernel_shape(lam, ambient_rank=6)) == shape


def test_outer_class_orders(W):
    # the ten extended-coset classes of 2-power order, with sizes adding up
    reps = ["sigma", "eta2", "eta3", "eta4", "eta5",
            "mu1", "mu2", "mu3", "mu4", "outer:17"]
    mats = [W.named_element(r) for r in reps]
    orders = [W.element_order(m) for m in mats]
    assert orders == [2, 2, 2, 2, 2, 4, 4, 4, 4, 8]
    # no two of them are conjugate in the extended group
    labels = [W.outer_class_of[W.outer_index_of(m) - 1] for m in mats]
    assert len(set(int(l) for l in labels)) == 10
    # and the two-power-order part of the coset is exactly these ten orbits
    two_power = [c for c in W.outer_classes()
                 if c["order"] in (1, 2, 4, 8, 16)]
    assert len(two_power) == 10


def test_minus_identity_is_outer(W):
    m = W.named_element("eta5")
    assert (m == -np.eye(6, dtype=np.int64)).all()
    assert not W.contains(m)
    assert W.outer_index_of(m) is not None


def test_named_elements_consistent(W):
    assert (W.named_element("eta1") == W.named_element("sigma")).all()
    for name, j in [("eta2", 555), ("eta3", 458), ("eta4", 2402),
                    ("mu1", 15), ("mu2", 52), ("mu3", 460), ("mu4", 484)]:
        assert (W.named_element(name) == W.outer(j)).all()


# -- commuting censuses ------------------------------------------------------


def test_census_around_order_two_96(W):
    (c,) = W.commuting_census(W.mat(96), orders=(2,))
    # exact count by brute force: 139, splitting 30/84/13/12 over the four
    # involution classes (the published figure 113 does not match any
    # reading of this census; see the build notes)
    assert len(c.members) == 139
    assert 96 in c.members
    sizes = sorted(len(v) for v in c.by_class.values())
    assert sizes == [12, 13, 30, 84]
    rep96 = int(W.class_members(96)[0])
    in_orbit = c.by_class[rep96]
    assert len(in_orbit) == 13
    # multiplying by any of the 13 leaves the orbit
    for i in in_orbit:
        prod = W.mat(96) @ W.mat(i)
        if (prod == np.eye(6, dtype=np.int64)).all():
            continue
        assert not W.same_class(W.index_of(prod), 96)


def test_census_around_order_three_292(W):
    (c,) = W.commuting_census(W.mat(292), orders=(3,))
    assert len(c.members) == 26
    assert 292 in c.members
    split = {
        int(W.class_members(3819)[0]): 8,
        int(W.class_members(292)[0]): 12,
        int(W.class_members(4079)[0]): 6,
    }
    assert {rep: len(v) for rep, v in c.by_class.items()} == split
    # the commuting order-3 elements commute among themselves
    mats = [W.mat(i) for i in c.members]
    for a in mats:
        for b in mats:
            assert (a @ b == b @ a).all()


def test_common_fixed_subgroup_of_the_26_is_tiny(W):
    (c,) = W.commuting_census(W.mat(292), orders=(3,))
    lam = fix_lattice(*[W.mat(i) for i in c.members])
    shape = cokernel_shape(lam, ambient_rank=6)
    assert shape.free_rank == 0 and shape.torsion == (3,)
    # generated by the all-omega point
    from e6fine.torus import TorusPoint, act_point

    p = TorusPoint.make((12,) * 6)
    for i in c.members:
        assert act_point(W.mat(i), p) == p


ETA_CASES = [
    # name, count in the 96-orbit, suborbit count, separated representatives
    ("eta4", 15, 1, [11007]),
    ("eta2", 7, 2, [11127, 11104]),
    ("eta1", 13, 2, [25470, 2416]),
    ("eta3", 5, 2, [10850, 23234]),
]


@pytest.mark.parametrize("name,count,norbits,reps", ETA_CASES)
def test_census_around_outer_involutions(W, name, count, norbits, reps):
    eta = W.named_element(name)
    (c,) = W.commuting_census(eta, orders=(2,))
    rep96 = int(W.class_members(96)[0])
    members = c.by_class.get(rep96, [])
    assert len(members) == count
    orbs = c.suborbits[rep96]
    assert len(orbs) == norbits
    # the listed representatives land in pairwise different suborbits
    homes = [next(k for k, o in enumerate(orbs) if r in o) for r in reps]
    assert len(set(homes)) == len(reps)


def test_census_eta3_suborbits_exactly(W):
    eta = W.named_element("eta3")
    (c,) = W.commuting_census(eta, orders=(2,))
    rep96 = int(W.class_members(96)[0])
    parts = sorted(set(frozenset(o) for o in c.suborbits[rep96]), key=len)
    assert parts == [{10850, 11104}, {23234, 11127, 28154}]


def test_products_with_census_elements_change_outer_class(W):
    eta1 = W.named_element("eta1")
    eta2 = W.named_element("eta2")
    assert W.same_outer_class(eta1 @ W.mat(25470), W.named_element("eta5"))
    # direct conjugacy computation; the fixed-subgroup shape (F*)^2 x Z2^2
    # pins the same class (see the build notes on the published claim)
    assert W.same_outer_class(eta1 @ W.mat(2416), W.named_element("eta3"))
    assert W.same_outer_class(eta2 @ W.mat(11127), W.named_element("eta4"))


def test_stabilizer_shapes_of_census_products(W):
    eta1 = W.named_element("eta1")
    eta2 = W.named_element("eta2")
    for m, free, torsion in [
        (eta1 @ W.mat(25470), 0, (2,) * 6),
        (eta1 @ W.mat(2416), 2, (2, 2)),
        (eta2 @ W.mat(11127), 1, (2,) * 4),
    ]:
        shape = cokernel_shape(fix_lattice(m), ambient_rank=6)
        assert (shape.free_rank, shape.torsion) == (free, torsion)


def test_cubes_of_order_six_rows(W):
    for j, expect in [(122, False), (435, False), (124, True)]:
        assert W.order(j) == 6
        cube = W.index_of(np.linalg.matrix_power(W.mat(j), 3))
        assert W.same_class(cube, 96) is expect
