"""First homology of Milnor fibers of complexified-real line arrangements.

Pipeline: exact rational arrangement geometry -> sweep presentation of the
complement's fundamental group -> finite cyclic-cover chain complex via Fox
derivatives -> integer Smith normal form -> rank and torsion of H1, checked
against combinatorial bounds and exactness criteria.
"""

from .snf import AbelianGroup, IntMatrix, SmithForm, quotient, rank_mod_p, smith_normal_form
from .geometry import (
    AffineArrangement,
    AffineLine,
    Arrangement,
    IncidenceData,
    IncidencePoint,
    InputError,
    ProjLine,
    cone,
    decone,
    intersection_points,
    parse_arrangement,
    shear_to_generic,
)
from .presentation import (
    Presentation,
    Relator,
    Word,
    arvola_randell,
    free_reduce_and_strip,
    projective_presentation,
)
from .cover import CoverComplex, CoverHomology, build_cover_complex, fox_derivative, h1_of_cover, phi_degree
from .bounds import (
    BoundReport,
    Prediction,
    SyntheticIncidence,
    bound_report,
    cdo_bound,
    corollary_check,
    oka_sakamoto_check,
    one_point_check,
    onehyp_bound,
    onehyp_bounds,
    parse_incidence,
    predict,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AffineArrangement",
    "AffineLine",
    "Arrangement",
    "BoundReport",
    "CoverComplex",
    "CoverHomology",
    "IncidenceData",
    "IncidencePoint",
    "InputError",
    "IntMatrix",
    "Prediction",
    "Presentation",
    "ProjLine",
    "Relator",
    "SmithForm",
    "SyntheticIncidence",
    "Word",
    "arvola_randell",
    "bound_report",
    "build_cover_complex",
    "cdo_bound",
    "cone",
    "corollary_check",
    "decone",
    "fox_derivative",
    "free_reduce_and_strip",
    "h1_of_cover",
    "intersection_points",
    "oka_sakamoto_check",
    "one_point_check",
    "onehyp_bound",
    "onehyp_bounds",
    "parse_arrangement",
    "parse_incidence",
    "phi_degree",
    "predict",
    "projective_presentation",
    "quotient",
    "rank_mod_p",
    "shear_to_generic",
    "smith_normal_form",
]
