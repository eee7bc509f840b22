"""toriq: exact arithmetic for 3-dimensional algebraic tori over Q.

Lattice invariants of the finite subgroups of GL3(Z), Artin conductor formulas
for the associated tori, constituent-field enumeration, Dirichlet-series
identities, and empirical counting fits.
"""

__version__ = "0.1.0"
