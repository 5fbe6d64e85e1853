"""Root frame of the trigraded model and its Weyl-group readout.

The frame itself is self-checking (eigenvector property, distinct roots,
Cartan matrix agreement with the reflection-group module).  The tests
here pin the images of the named automorphisms: exact matrices for the
three slot-transposition extensions, exact element indices for the
monomial order-3 maps, conjugacy classes for the products, and the
eigenvalue exponents of the diagonal maps.  One index is asserted
through its inverse; see the note in test_rotation_indices.
"""

import numpy as np
import pytest

from e6fine import cache
from e6fine.models.adams import adams_model
from e6fine.models.bridge import root_frame
from e6fine.torus import lattice_shapes
from e6fine.weyl import SIGMA


@pytest.fixture(scope="module")
def FR():
    return root_frame()


@pytest.fixture(scope="module")
def W():
    return cache.weyl_group()


RHO1 = np.array([
    [1, 0, 1, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
], dtype=np.int64)
RHO2 = np.array([
    [1, 0, 0, 0, 0, 0],
    [1, 2, 2, 3, 2, 1],
    [0, 0, 1, 0, 0, 0],
    [-1, -1, -2, -2, -2, -1],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
], dtype=np.int64)
RHO3 = np.array([
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, 1, 1],
], dtype=np.int64)


def test_frame_shape(FR):
    assert len(FR.roots) == 72
    assert len(set(FR.roots.values())) == 72
    # closure under negation
    phi = set(FR.roots.values())
    assert all(tuple(-v for v in r) in phi for r in phi)
    # the six simple coordinates carry the unit rows
    for i, c in enumerate(FR.simple_coords):
        want = tuple(1 if t == i else 0 for t in range(6))
        assert FR.roots[c] == want


def test_transposition_images_exact(FR):
    m = FR.model
    assert np.array_equal(FR.weyl_image(m.phi(1)), RHO1)
    assert np.array_equal(FR.weyl_image(m.phi(2)), RHO2)
    assert np.array_equal(FR.weyl_image(m.phi(3)), RHO3)


def test_transpositions_are_inner(FR, W):
    m = FR.model
    i1 = W.index_of(FR.weyl_image(m.phi(1)))
    assert W.same_class(i1, 11323)
    i12 = W.index_of(FR.weyl_image(m.phi(1) @ m.phi(2)))
    assert W.same_class(i12, 19)
    i123 = W.index_of(FR.weyl_image(m.phi(1) @ m.phi(2) @ m.phi(3)))
    assert W.same_class(i123, 21)


def test_transposition_stabilizer_shapes(FR):
    m = FR.model
    r1 = FR.weyl_image(m.phi(1))
    r2 = FR.weyl_image(m.phi(2))
    r3 = FR.weyl_image(m.phi(3))
    assert str(lattice_shapes([r1])) == "(F*)^5"
    assert str(lattice_shapes([r1, r2])) == "(F*)^4"
    assert str(lattice_shapes([r1, r2, r3])) == "(F*)^3"


def test_rotation_indices(FR, W):
    # The slot rotation u x v x w -> v x w x u lands on element 26481,
    # whose inverse is element 51529; both lie in the order-3 class of
    # element 292.  Down the line only the class and the stabilizer
    # lattice matter, and both are inversion-insensitive.
    m = FR.model
    i2 = W.index_of(FR.weyl_image(m.f2()))
    assert i2 == 26481
    inv2 = np.rint(np.linalg.inv(FR.weyl_image(m.f2()))).astype(np.int64)
    assert W.index_of(inv2) == 51529
    assert W.same_class(i2, 292)
    i4 = W.index_of(FR.weyl_image(m.f4()))
    assert i4 == 30245
    assert W.same_class(i4, 3819)


def test_outer_images(FR, W):
    m = FR.model
    assert np.array_equal(FR.weyl_image(m.phi(5)), SIGMA)
    assert np.array_equal(FR.weyl_image(m.phi(4)), -np.eye(6, dtype=np.int64))
    # phi4 phi5 is inner, in the class of the order-2 element 96
    i45 = FR.weyl_image(m.phi(4) @ m.phi(5))
    assert W.contains(i45)
    assert W.same_class(W.index_of(i45), 96)


def test_outer_classes(FR, W):
    m = FR.model
    cases = [
        (m.phi(5), "eta1"),
        (m.phi(4), "eta5"),
        (m.phi(5) @ m.phi(2), "eta2"),
        (m.phi(4) @ m.phi(2), "eta4"),
        (m.phi(4) @ m.phi(1) @ m.phi(2), "eta3"),
    ]
    for f, name in cases:
        img = FR.weyl_image(f)
        assert W.same_outer_class(img, W.named_element(name)), name


def test_commutation_pattern(FR):
    m = FR.model
    phis = {n: m.phi(n) for n in range(1, 6)}
    partners = {a: {b for b in phis if b != a and phis[a].commutes_with(phis[b])}
                for a in phis}
    assert partners[4] == {1, 2, 3, 5}
    assert partners[5] == {2, 4}
    assert partners[1] == {2, 3, 4}


def test_diagonal_points(FR):
    m = FR.model
    F = m.field
    assert FR.torus_point(m.f1()).exps == (0, 0, 0, 12, 0, 0)
    assert FR.torus_point(m.f3()).exps == (24, 12, 24, 0, 24, 24)
    p = FR.torus_point(m.torus_map(F.zeta(1), F.zeta(2)))
    assert p.exps == (35, 4, 5, 27, 5, 35)
    # identity on the Lie part, scalar on the odd parts: image in the Weyl
    # group is trivial even though the map is not the identity
    assert np.array_equal(FR.weyl_image(m.f1()), np.eye(6, dtype=np.int64))


def test_error_contracts(FR):
    m = FR.model
    with pytest.raises(ValueError):
        FR.torus_point(m.f2())
    # a unipotent triple does not normalize the diagonal torus
    from e6fine.models.adams import mat3, mat3_id
    u = mat3(((1, 1, 0), (0, 1, 0), (0, 0, 1)))
    f = m.triple(u, mat3_id(), mat3_id())
    with pytest.raises(ValueError):
        FR.weyl_image(f)
