"""The Weyl group of type E6 and its extension by the diagram flip.

Elements act on the root lattice and are stored as 6x6 integer matrices over
the base of simple roots, with the convention that *row i is the image of the
i-th simple root*.  Composition of group elements is plain matrix product of
the stored matrices.  The group is enumerated once by closure under the
simple reflections and sorted row-major lexicographically; indices into that
sorted list are 1-based throughout the public API, so that tabulated
representative indices can be used directly.

The extended group V = W u W.sigma adjoins the order-2 diagram flip sigma
(swapping nodes 1/6 and 3/5).  An element of the nontrivial coset is written
sigma * w_j and represented by the matrix product SIGMA @ M_j.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .intlinalg import intmat

__all__ = [
    "CARTAN",
    "OrderCensus",
    "SIGMA",
    "WeylGroup",
    "cartan_matrix",
    "simple_reflections",
]

@dataclass
class OrderCensus:
    """Commuting elements of one order, split by class and by suborbit.

    members: 1-based indices, ascending.
    by_class: class representative (minimal index in the class) -> members.
    suborbits: class representative -> orbits of its members under
        conjugation by the centralizer of the reference element.
    """

    order: int
    members: list[int]
    by_class: dict[int, list[int]]
    suborbits: dict[int, list[list[int]]]


# symmetric Cartan matrix of E6; nodes numbered so that the branch node is 4,
# with edges 1-3, 3-4, 2-4, 4-5, 5-6
CARTAN = np.array(
    [
        [2, 0, -1, 0, 0, 0],
        [0, 2, 0, -1, 0, 0],
        [-1, 0, 2, -1, 0, 0],
        [0, -1, -1, 2, -1, 0],
        [0, 0, 0, -1, 2, -1],
        [0, 0, 0, 0, -1, 2],
    ],
    dtype=np.int64,
)

# diagram flip: 1<->6, 3<->5, fixing 2 and 4
SIGMA = np.array(
    [
        [0, 0, 0, 0, 0, 1],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
    ],
    dtype=np.int64,
)


def cartan_matrix() -> np.ndarray:
    return CARTAN.copy()


def simple_reflections() -> list[np.ndarray]:
    """Matrices of s_1..s_6 (rows are images of simple roots)."""
    out = []
    for i in range(6):
        m = np.eye(6, dtype=np.int64)
        for j in range(6):
            m[j, i] -= CARTAN[j, i]
        out.append(m)
    return out


def _enumerate_group() -> np.ndarray:
    """All elements of W by breadth-first closure; returns (51840, 6, 6) int8."""
    gens = np.stack(simple_reflections())
    seen = {}
    ident = np.eye(6, dtype=np.int64)
    seen[ident.astype(np.int8).tobytes()] = True
    frontier = ident.reshape(1, 6, 6)
    chunks = [frontier]
    while len(frontier):
        prods = np.einsum("nij,gjk->ngik", frontier, gens).reshape(-1, 6, 6)
        fresh = []
        for m in prods:
            key = m.astype(np.int8).tobytes()
            if key not in seen:
                seen[key] = True
                fresh.append(m)
        if not fresh:
            break
        frontier = np.stack(fresh)
        chunks.append(frontier)
    all_mats = np.concatenate(chunks).astype(np.int8)
    return all_mats


def _sort_matrices(mats: np.ndarray) -> np.ndarray:
    flat = mats.reshape(len(mats), 36).astype(np.int16) + 128
    order = np.lexsort(flat.T[::-1])
    return mats[order]


class WeylGroup:
    """The enumerated, sorted Weyl group with 1-based element indices."""

    def __init__(self, matrices: np.ndarray):
        self.matrices = matrices
        self.n = len(matrices)
        self._index = {m.tobytes(): k for k, m in enumerate(matrices)}
        self._orders = None
        self._class_of = None
        self._class_reps = None
        self._outer_mats = None
        self._outer_orders = None
        self._outer_class_of = None

    @classmethod
    def enumerate(cls) -> "WeylGroup":
        return cls(_sort_matrices(_enumerate_group()))

    def __len__(self) -> int:
        return self.n

    # -- element access (1-based indices) -----------------------------------

    def mat(self, i: int) -> np.ndarray:
        """Matrix of the i-th element, as int64."""
        return self.matrices[i - 1].astype(np.int64)

    def index_of(self, m) -> int:
        key = np.asarray(m, dtype=np.int8).tobytes()
        if key not in self._index:
            raise KeyError("matrix is not an element of the group")
        return self._index[key] + 1

    def contains(self, m) -> bool:
        return np.asarray(m, dtype=np.int8).tobytes() in self._index

    @property
    def identity_index(self) -> int:
        return self.index_of(np.eye(6, dtype=np.int8))

    def mult(self, i: int, j: int) -> int:
        return self.index_of(self.mat(i) @ self.mat(j))

    def inv(self, i: int) -> int:
        m = self.mat(i)
        p = m
        while True:
            q = p @ m
            if (q == np.eye(6, dtype=np.int64)).all():
                return self.index_of(p)
            p = q

    # -- orders --------------------------------------------------------------

    @property
    def orders(self) -> np.ndarray:
        """orders[k] = order of element k+1; computed in one batched sweep."""
        if self._orders is None:
            self._orders = self._batch_orders(self.matrices.astype(np.int64))
        return self._orders

    @staticmethod
    def _batch_orders(mats: np.ndarray, cap: int = 24) -> np.ndarray:
        n = len(mats)
        orders = np.zeros(n, dtype=np.int32)
        ident = np.eye(6, dtype=np.int64)
        cur = mats.copy()
        for k in range(1, cap + 1):
            is_id = (cur == ident).all(axis=(1, 2))
            newly = is_id & (orders == 0)
            orders[newly] = k
            if (orders > 0).all():
                return orders
            cur = np.einsum("nij,njk->nik", cur, mats)
        raise RuntimeError("element of order beyond the cap encountered")

    def order(self, i: int) -> int:
        return int(self.orders[i - 1])

    def element_order(self, m) -> int:
        """Order of an arbitrary integer matrix of finite order."""
        m = np.asarray(m, dtype=np.int64)
        p = m.copy()
        for k in range(1, 25):
            if (p == np.eye(6, dtype=np.int64)).all():
                return k
            p = p @ m
        raise ValueError("order exceeds 24; not an element of V")

    # -- conjugacy -----------------------------------------------------------

    def _conjugacy_partition(self, mats: np.ndarray) -> np.ndarray:
        """Label array for the W-conjugation orbits of the given matrices."""
        gens = np.stack(simple_reflections())
        gens_inv = gens  # simple reflections are involutions
        index = {m.astype(np.int8).tobytes(): k for k, m in enumerate(mats)}
        labels = np.full(len(mats), -1, dtype=np.int32)
        next_label = 0
        m64 = mats.astype(np.int64)
        for start in range(len(mats)):
            if labels[start] >= 0:
                continue
            labels[start] = next_label
            frontier = [start]
            while frontier:
                batch = m64[np.array(frontier)]
                nxt = []
                for g, gi in zip(gens, gens_inv):
                    conj = np.einsum("ij,njk,kl->nil", g, batch, gi)
                    for m in conj:
                        k = index[m.astype(np.int8).tobytes()]
                        if labels[k] < 0:
                            labels[k] = next_label
                            nxt.append(k)
                frontier = nxt
            next_label += 1
        return labels

    @property
    def class_of(self) -> np.ndarray:
        if self._class_of is None:
            self._class_of = self._conjugacy_partition(self.matrices)
        return self._class_of

    def conjugacy_classes(self) -> list[dict]:
        """One record per class: representative (min index), order, size."""
        if self._class_reps is None:
            labels = self.class_of
            reps = {}
            sizes = np.bincount(labels)
            for k, lab in enumerate(labels):
                if lab not in reps:
                    reps[int(lab)] = k + 1
            out = []
            for lab in sorted(reps):
                rep = reps[lab]
                out.append(
                    {
                        "representative": rep,
                        "order": int(self.orders[rep - 1]),
                        "size": int(sizes[lab]),
                    }
                )
            out.sort(key=lambda r: (r["order"], r["size"], r["representative"]))
            self._class_reps = out
        return self._class_reps

    def class_size(self, i: int) -> int:
        labels = self.class_of
        return int(np.count_nonzero(labels == labels[i - 1]))

    def class_members(self, i: int) -> np.ndarray:
        """1-based indices of the conjugacy class of element i."""
        labels = self.class_of
        return np.flatnonzero(labels == labels[i - 1]) + 1

    def same_class(self, i: int, j: int) -> bool:
        labels = self.class_of
        return bool(labels[i - 1] == labels[j - 1])

    # -- the outer coset -----------------------------------------------------

    def outer(self, j: int) -> np.ndarray:
        """The element sigma * w_j of the nontrivial coset, as a matrix."""
        return SIGMA @ self.mat(j)

    def outer_index_of(self, m) -> int:
        """j with m == sigma * w_j."""
        return self.index_of(SIGMA @ np.asarray(m, dtype=np.int64))

    @property
    def outer_matrices(self) -> np.ndarray:
        if self._outer_mats is None:
            self._outer_mats = np.einsum(
                "ij,njk->nik", SIGMA, self.matrices.astype(np.int64)
            ).astype(np.int8)
        return self._outer_mats

    @property
    def outer_orders(self) -> np.ndarray:
        if self._outer_orders is None:
            self._outer_orders = self._batch_orders(
                self.outer_matrices.astype(np.int64)
            )
        return self._outer_orders

    @property
    def outer_class_of(self) -> np.ndarray:
        """outer_class_of[j-1] = orbit label of sigma * w_j under conjugation.

        Conjugating a coset element by a coset element is the same as an
        inner conjugation, so these W-orbits are the conjugacy classes of
        the extended group restricted to the coset.
        """
        if self._outer_class_of is None:
            self._outer_class_of = self._conjugacy_partition(self.outer_matrices)
        return self._outer_class_of

    def same_outer_class(self, m1, m2) -> bool:
        labels = self.outer_class_of
        j1 = self.outer_index_of(m1)
        j2 = self.outer_index_of(m2)
        return bool(labels[j1 - 1] == labels[j2 - 1])

    def outer_classes(self) -> list[dict]:
        """W-conjugation orbits of the coset W.sigma (records as for inner)."""
        labels = self.outer_class_of
        sizes = np.bincount(labels)
        reps = {}
        for k, lab in enumerate(labels):
            if int(lab) not in reps:
                reps[int(lab)] = k + 1
        out = []
        for lab in sorted(reps):
            rep = reps[lab]
            out.append(
                {
                    "representative": rep,  # index j: element is sigma * w_j
                    "order": int(self.outer_orders[rep - 1]),
                    "size": int(sizes[lab]),
                }
            )
        out.sort(key=lambda r: (r["order"], r["size"], r["representative"]))
        return out

    # -- commuting sets and orbits under a centralizer -----------------------

    def commuting_inner(self, m) -> np.ndarray:
        """1-based indices of all inner elements commuting with the matrix m."""
        m = np.asarray(m, dtype=np.int64)
        mats = self.matrices.astype(np.int64)
        left = np.einsum("ij,njk->nik", m, mats)
        right = np.einsum("nij,jk->nik", mats, m)
        ok = (left == right).all(axis=(1, 2))
        return np.flatnonzero(ok) + 1

    def centralizer_matrices(self, m) -> np.ndarray:
        idx = self.commuting_inner(m) - 1
        return self.matrices[idx].astype(np.int64)

    def commuting_census(self, reference, orders=(2, 3)) -> list["OrderCensus"]:
        """Inner elements of the given orders commuting with `reference`.

        `reference` is a matrix of the extended group (inner or coset).  For
        each requested order the census records the commuting inner elements,
        their split by inner conjugacy class, and, within each class bucket,
        the orbits under conjugation by the inner centralizer of the
        reference.
        """
        ref = np.asarray(reference, dtype=np.int64)
        comm = self.commuting_inner(ref)
        cent = self.centralizer_matrices(ref)
        out = []
        for d in orders:
            members = [int(i) for i in comm if self.order(int(i)) == int(d)]
            by_class: dict[int, list[int]] = {}
            for i in members:
                rep = int(self.class_members(i)[0])
                by_class.setdefault(rep, []).append(i)
            suborbits: dict[int, list[list[int]]] = {}
            for rep, idxs in sorted(by_class.items()):
                mats = [self.mat(i) for i in idxs]
                orbs = self.orbits_under(cent, mats)
                suborbits[rep] = [sorted(idxs[k] for k in orb) for orb in orbs]
            out.append(OrderCensus(int(d), members, by_class, suborbits))
        return out

    def orbits_under(self, conjugators: np.ndarray, elements) -> list[list]:
        """Partition `elements` (matrices) into orbits under conjugation by
        the given matrices (each assumed invertible over Z with its inverse
        also in the list up to the group structure; conjugation uses exact
        integer inverses).
        """
        elems = [np.asarray(e, dtype=np.int64) for e in elements]
        index = {e.astype(np.int8).tobytes(): k for k, e in enumerate(elems)}
        inv = np.stack([self._int_inverse(c) for c in conjugators])
        labels = [-1] * len(elems)
        orbits = []
        for start in range(len(elems)):
            if labels[start] >= 0:
                continue
            lab = len(orbits)
            labels[start] = lab
            orbit = [start]
            frontier = [start]
            while frontier:
                batch = np.stack([elems[k] for k in frontier])
                nxt = []
                conj = np.einsum("cij,njk,ckl->ncil", conjugators, batch, inv)
                for row in conj.reshape(-1, 6, 6):
                    key = row.astype(np.int8).tobytes()
                    k = index.get(key)
                    if k is not None and labels[k] < 0:
                        labels[k] = lab
                        orbit.append(k)
                        nxt.append(k)
                frontier = nxt
            orbits.append(orbit)
        return orbits

    @staticmethod
    def _int_inverse(m: np.ndarray) -> np.ndarray:
        """Inverse of a finite-order integer matrix: the last nontrivial power."""
        m = np.asarray(m, dtype=np.int64)
        prev = np.eye(6, dtype=np.int64)
        p = m.copy()
        for _ in range(25):
            if (p == np.eye(6, dtype=np.int64)).all():
                return prev
            prev = p
            p = p @ m
        raise ValueError("no finite order found")

    # -- named representatives ----------------------------------------------

    def named_element(self, name: str) -> np.ndarray:
        """Resolve conventional names to matrices.

        Accepted: 'sigma', 'eta1'..'eta5', 'mu1'..'mu4', 'outer:<j>' for
        sigma * w_j, '-id', or a bare integer string for an inner element.
        """
        name = name.strip()
        table = {
            "sigma": lambda: SIGMA.copy(),
            "eta1": lambda: SIGMA.copy(),
            "eta2": lambda: self.outer(555),
            "eta3": lambda: self.outer(458),
            "eta4": lambda: self.outer(2402),
            "eta5": lambda: -np.eye(6, dtype=np.int64),
            "-id": lambda: -np.eye(6, dtype=np.int64),
            "mu1": lambda: self.outer(15),
            "mu2": lambda: self.outer(52),
            "mu3": lambda: self.outer(460),
            "mu4": lambda: self.outer(484),
        }
        if name in table:
            return table[name]()
        if name.startswith("outer:"):
            return self.outer(int(name.split(":", 1)[1]))
        if name.lstrip("-").isdigit():
            return self.mat(int(name))
        raise KeyError(f"unknown element name: {name!r}")

    def describe(self, m) -> str:
        m = np.asarray(m, dtype=np.int64)
        if self.contains(m):
            return str(self.index_of(m))
        return f"outer:{self.outer_index_of(m)}"


def lattice_of_relations(rows) -> np.ndarray:
    """Columns spanning the lattice generated by the given relation vectors."""
    return intmat([list(r) for r in rows]).T
