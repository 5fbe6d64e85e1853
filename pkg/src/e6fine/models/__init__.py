"""Concrete realizations of the 78-dimensional algebra.

Each submodule builds one realization around a distinguished reductive
part: the trigraded sl3 x sl3 x sl3 model, the a5 + a1 model, the c4
model (action only), the 27-dimensional Jordan-algebra model, and the
Z4-graded model over sl4 + sl2.  `base` carries the shared summand and
action bookkeeping.
"""

from .base import ActionModel, Summand

__all__ = ["ActionModel", "Summand"]
