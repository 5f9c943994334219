"""
Exact computation in degenerate nil-Hecke algebras and the degenerate
nil-DAHA of a root datum.

The layers build on each other: :mod:`nildaha.rootdata` (root data),
:mod:`nildaha.weyl` (extended affine Weyl groups), :mod:`nildaha.exactalg`
(polynomials and root fractions), :mod:`nildaha.skew` (the ambient skew
group algebra) and :mod:`nildaha.nilhecke` (normal forms and named
identities). :mod:`nildaha.suites` bundles the identities into verification
suites and :mod:`nildaha.cli` exposes everything on the command line.
"""

from .rootdata import RootDatum, build_root_datum, find_weight_pairing_one, pairing
from .weyl import ExtAffineElement, ExtAffineWeylGroup, weyl_group

__all__ = [
    "RootDatum", "build_root_datum", "find_weight_pairing_one", "pairing",
    "ExtAffineElement", "ExtAffineWeylGroup", "weyl_group",
]
__version__ = "0.1.0"
