"""toricsat: exact Lipschitz saturation of toric singularities at the semigroup level.

Numerical and affine semigroup arithmetic, saturation of monomial curves,
curve products and a hypersurface family, toric-ideal binomials, and
machine-checkable arc certificates of non-membership.  Everything is exact;
no floating point enters any computation.
"""

from .affsg import (
    AffineSemigroup,
    HullComplement,
    contains_affine,
    embedding_dimension,
    hull_complement,
    membership_table,
    min_generators_affine,
    mk_affine,
    multiplicity_affine,
    outside_hull_points,
    product,
)
from .arccert import (
    Arc,
    DiagonalIdeal,
    NonMembershipCertificate,
    certificate_from_dict,
    certificate_to_dict,
    certify_hyp_point,
    certify_nonmembership,
    hyp_witness,
    hyp_witness_axis,
    hyp_witness_interior,
    hyp_witness_t_gap,
    ideal_order,
    pullback_order,
    verify_certificate,
    wu_witness,
)
from .cyclotomic import CyclotomicNumber, ZetaPoly, cyclotomic_poly, euler_phi
from .lipsat import (
    HypersurfaceSpec,
    MonomialCurve,
    SaturationResult,
    check_saturation,
    curve_semigroup,
    default_validation_box,
    hyp_T_saturation,
    hyp_membership,
    hyp_min_generators,
    hyp_semigroup,
    mk_curve,
    plane_model,
    saturate_curve,
    saturate_product,
)
from .numsg import (
    CharExponents,
    NumericalSemigroup,
    char_exponents,
    contains,
    gaps,
    is_saturated,
    min_generators_num,
    mk_numerical,
    multiplicity_num,
    saturate_chars,
)
from .torideal import (
    LatticeRelation,
    degree_bounded_generators,
    lattice_kernel,
    verify_vanishing,
)

__version__ = "0.1.0"
