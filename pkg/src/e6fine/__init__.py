"""Exact computational toolkit for the fine gradings on the Lie algebra e6.

Subsystems:

- cyclo: exact cyclotomic arithmetic (the scalar field for everything else)
- intlinalg: integer matrices, Smith/Hermite forms, lattices, mod-N solving
- weyl: the Weyl group of type E6, its extension by the diagram flip,
  conjugacy data, commuting censuses, and the on-disk group cache
- torus: characters of the maximal torus, fixed/twisted subgroup lattices,
  norm equations and order minimization for lifted group elements
- linalg: sparse exact linear algebra over a cyclotomic field
- lie: Lie algebra containers with exact brackets and fast Jacobi checking
- chevalley: the 78-dimensional algebra in a Chevalley basis, torus
  automorphisms and Weyl-group lifts
- models: alternative constructions of the same algebra adapted to
  particular gradings, with their named automorphisms
- gradings: quasitorus specifications, simultaneous diagonalization,
  grading types and universal groups
- verify: the named verification suites behind the `e6fine verify` command
"""

__version__ = "0.1.0"
