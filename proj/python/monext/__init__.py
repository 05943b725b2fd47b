"""Finite monoid extensions toolkit.

Multiplication-table monoids with the Schreier-type extension machinery:
semidirect and crossed products, relaxed actions and relaxed crossed
products, second cohomology with Baer sums, and brute-force censuses that
cross-check the characterizations on small orders.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
