"""Length-(q+1) cyclic and constacyclic MDS codes over F_q, built from roots
of unity in F_{q^2}, certified as generalised Reed-Solomon codes by explicit
computation."""

from .constructions import (
    Case,
    GRCase,
    ProjectivePoint,
    canonical_points,
    cyclic_code_from_generator,
    glynn_code,
    gr_case,
    gr_code,
    gr_generator_poly,
    grs_code,
    h_a_poly,
    lemma1_code,
    lemma2_code,
    predicted_multipliers,
    roots_of_unity_points,
    rs_base_matrix,
    segre_code,
)
from .equivalence import (
    GrsWitness,
    VerificationReport,
    conjecture11_check,
    conjecture11_formula,
    diagonal_equivalence,
    grs_witness,
    verify_theorem,
)
from .field_tower import FieldElement, FieldTower, make_tower, tower_for_order
from .linear_code import (
    CapExceeded,
    LinearCode,
    diag_scale,
    dual,
    equals,
    from_rows,
    hermitian_puncture_code,
    is_constacyclic,
    is_mds,
    min_distance,
    schur_square,
    weight_distribution,
)
from .polynomial import Poly, coefficients_in_subfield, divides, product_of_linear_factors

__version__ = "0.1.0"
