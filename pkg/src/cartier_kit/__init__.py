"""Exact computer algebra for Cartier duality at finite rank.

Submodules:

* :mod:`cartier_kit.exactlin`  exact scalars, sparse matrices, normal forms
* :mod:`cartier_kit.hopf`      Hopf algebras as structure-constant matrices
* :mod:`cartier_kit.cartier`   unit element, grouplike equations, points
* :mod:`cartier_kit.motive`    Hopf pairings, smash products, swap isomorphism
* :mod:`cartier_kit.modsys`    ind/pro-systems, Mittag-Leffler windows, units
* :mod:`cartier_kit.proalg`    algebra quotients of pro-algebra presentations
* :mod:`cartier_kit.catalog`   concrete group schemes, pairings, test algebras
"""
from .cartier import (CartierPairing, cartier_unit, duality_bijection, points,
                      verify_cartier_equations)
from .exactlin import QQ, QQ_T, ZZ, BaseRing, Scalar, SparseMatrix, Zmod
from .hopf import (AssocAlgebraData, HopfAlgebraData, dual_hopf, grouplikes,
                   hopf_iso_check, verify_hopf)
from .modsys import (IndSystem, MLVerdict, ProSystem, dualize_ind, dualize_pro,
                     hom_ev_compare, ml_verdict, tensor_pro, unit_components)
from .motive import (HopfPairing, mirror, smash, smash_swap_iso,
                     verify_algebra_iso, verify_hopf_pairing)
from .proalg import (ProAlgebraPresentation, StageQuotient, mu3,
                     stage_quotients, verify_factorization)

__version__ = "0.1.0"

__all__ = [
    "BaseRing", "Scalar", "SparseMatrix", "ZZ", "QQ", "QQ_T", "Zmod",
    "AssocAlgebraData", "HopfAlgebraData", "verify_hopf", "dual_hopf", "grouplikes", "hopf_iso_check",
    "CartierPairing", "cartier_unit", "verify_cartier_equations", "points", "duality_bijection",
    "HopfPairing", "verify_hopf_pairing", "mirror", "smash", "smash_swap_iso", "verify_algebra_iso",
    "IndSystem", "ProSystem", "MLVerdict", "dualize_ind", "dualize_pro", "tensor_pro",
    "ml_verdict", "unit_components", "hom_ev_compare",
    "ProAlgebraPresentation", "StageQuotient", "mu3", "stage_quotients", "verify_factorization",
]
