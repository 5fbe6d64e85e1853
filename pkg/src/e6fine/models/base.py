"""Shared shape for the concrete 78-dimensional realizations.

Each realization presents the algebra as a list of labeled summands, with
a distinguished Lie part acting on everything.  Two of the models carry a
complete bracket table (a LieAlgebra); the others only carry the linear
action of the Lie part, which is all the diagonalization work needs.  In
both cases the action is stored uniformly: one sparse operator per basis
coordinate of the Lie part, covering the whole ambient space (on the Lie
summands themselves the operator is the adjoint action).

This uniform storage gives one check for the module axiom and one check
for equivariance of a candidate automorphism, shared by all realizations.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..cyclo import field
from ..lie import LieAlgebra, LinearMap
from ..linalg import Vec, vec_axpy, vec_equal

__all__ = ["Summand", "ActionModel"]


@dataclass(frozen=True)
class Summand:
    label: str
    offset: int
    dim: int

    @property
    def coords(self) -> range:
        return range(self.offset, self.offset + self.dim)


class ActionModel:
    """Labeled summands plus the action of the Lie part on all of them.

    acts[i] is the operator of the i-th Lie basis coordinate (in ambient
    order over the Lie summands).  algebra is present when the full
    bracket is known; the action operators are then its ad maps.
    """

    def __init__(self, label: str, summands: list[Summand], lie_part: list[int],
                 acts: list[LinearMap], algebra: LieAlgebra | None = None,
                 level: int = 36):
        self.label = label
        self.summands = summands
        self.lie_part = lie_part
        self.acts = acts
        self.algebra = algebra
        self.level = level
        self.field = field(level)
        self.dim = sum(s.dim for s in summands)
        if summands[0].offset != 0 or any(
                summands[t + 1].offset != summands[t].offset + summands[t].dim
                for t in range(len(summands) - 1)):
            raise ValueError("summands must tile the ambient coordinates in order")
        self.lie_coords = [c for t in lie_part for c in summands[t].coords]
        if len(acts) != len(self.lie_coords):
            raise ValueError("need one action operator per Lie basis coordinate")
        self._lie_pos = {c: n for n, c in enumerate(self.lie_coords)}

    def summand(self, label: str) -> Summand:
        for s in self.summands:
            if s.label == label:
                return s
        raise KeyError(label)

    def summand_of_coord(self, c: int) -> Summand:
        for s in self.summands:
            if c in s.coords:
                return s
        raise IndexError(c)

    # -- the action as an operator-valued linear map ------------------------

    def act_columns(self, g: Vec) -> list[Vec]:
        """Columns of the action of a Lie-part vector g on the ambient space."""
        cols: list[Vec] = [dict() for _ in range(self.dim)]
        for c, a in g.items():
            n = self._lie_pos.get(c)
            if n is None:
                raise ValueError(f"coordinate {c} is not in the Lie part")
            op = self.acts[n]
            for j in range(self.dim):
                col = op.cols[j]
                if col:
                    cols[j] = vec_axpy(a, col, cols[j])
        return cols

    def act(self, g: Vec) -> LinearMap:
        return LinearMap(self.act_columns(g), self.level)

    # -- structural checks --------------------------------------------------

    def check_module_action(self) -> None:
        """[g,h] acting as the commutator of actions, on every basis triple.

        The bracket [g,h] of Lie basis elements is read off the stored
        action itself (the Lie block of acts[g] is the adjoint action), so
        a single identity covers both the Lie-part closure and the module
        axiom.  Raises on the first failing triple.
        """
        nl = len(self.lie_coords)
        for a in range(nl):
            ga = self.acts[a]
            for b in range(nl):
                if a == b:
                    continue
                gb = self.acts[b]
                bracket_vec = ga.cols[self.lie_coords[b]]
                if any(c not in self._lie_pos for c in bracket_vec):
                    raise ValueError("Lie part is not closed under its own action")
                comm_target = self.act_columns(bracket_vec)
                for k in range(self.dim):
                    lhs = ga(gb.cols[k])
                    lhs = vec_axpy(-self.field.one, gb(ga.cols[k]), lhs)
                    if not vec_equal(lhs, comm_target[k]):
                        raise ValueError(
                            f"module axiom fails on Lie pair ({a},{b}) at coordinate {k}")

    def check_equivariance(self, F: LinearMap, name: str = "map") -> None:
        """F(g . x) = F(g) . F(x) over all Lie basis g and ambient basis x."""
        if F.dim != self.dim:
            raise ValueError(f"{name} acts on the wrong space")
        for n, c in enumerate(self.lie_coords):
            g_img = F.cols[c]
            if any(cc not in self._lie_pos for cc in g_img):
                raise ValueError(f"{name} does not preserve the Lie part")
            twisted = self.act_columns(g_img)
            op = self.acts[n]
            for k in range(self.dim):
                lhs = F(op.cols[k])
                rhs: Vec = {}
                for j, a in F.cols[k].items():
                    rhs = vec_axpy(a, twisted[j], rhs)
                if not vec_equal(lhs, rhs):
                    raise ValueError(
                        f"{name} is not equivariant at Lie coordinate {c}, basis {k}")
