"""Exact-arithmetic verification of a crepant-resolution correspondence.

Every computation in this package is carried out over the rationals (or
Gaussian rationals); there is no floating point anywhere.  The subpackages
build the classical cohomology rings involved, store and derive the
genus-zero invariant tables, assemble the deformed products, and check the
change-of-variables correspondence between the two sides.
"""

__version__ = "0.1.0"
