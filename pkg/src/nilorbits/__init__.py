"""Exact calculus for nilpotent orbits of classical Lie algebras.

Partitions and collapses, Springer duality between types B and C, component
groups and Lusztig's canonical quotient, induction degrees, and exact
E-polynomials and stringy E-functions of the orbit closures involved.
"""

from .errors import NilOrbitError
from .induction import (
    dual_datum,
    enumerate_polarizations,
    footprint,
    generalized_springer_degree,
    rigid_special_decomposition,
    seesaw_check,
)
from .levi import InductionDatum, LeviType, induced_partition, langlands_dual_levi, zero_datum
from .partitions import (
    AlgebraType,
    Partition,
    classify,
    collapse,
    dual_partition,
    is_richardson,
    is_rigid,
    is_special,
    is_spherical,
    orbit_dimension,
    orbits,
)
from .qseries import Q, QPoly, QRational, as_polynomial, leading_terms
from .springer import springer_dual, springer_inverse
from .stringy import StringyResult, stringy_parabolic_cover, stringy_spherical

__version__ = "0.1.0"

__all__ = [
    "AlgebraType",
    "InductionDatum",
    "LeviType",
    "NilOrbitError",
    "Partition",
    "Q",
    "QPoly",
    "QRational",
    "StringyResult",
    "as_polynomial",
    "classify",
    "collapse",
    "dual_datum",
    "dual_partition",
    "enumerate_polarizations",
    "footprint",
    "generalized_springer_degree",
    "induced_partition",
    "is_richardson",
    "is_rigid",
    "is_special",
    "is_spherical",
    "langlands_dual_levi",
    "leading_terms",
    "orbit_dimension",
    "orbits",
    "rigid_special_decomposition",
    "seesaw_check",
    "springer_dual",
    "springer_inverse",
    "stringy_parabolic_cover",
    "stringy_spherical",
    "zero_datum",
]
