"""Projective lines over rings, their distant graphs, and standard forms over GF(p)[X]."""

from pline.chains import (
    Chain,
    Subfield,
    SubfieldError,
    chain_component_containment,
    enumerate_chains,
    subfield_check,
    verify_chain_axioms,
)
from pline.errors import (
    BudgetError,
    CapabilityError,
    ConsistencyError,
    DomainError,
    PlineError,
    PreconditionError,
    SpecError,
)
from pline.groups import (
    Budget,
    MatrixGroup,
    e2_group,
    e2_point_orbit,
    ge2_group,
    generate_group,
    gl2_enumerate,
    gl2_group,
    is_ge2_ring,
    right_coset_count,
    stabilizer_of_component,
)
from pline.kernels import BACKEND
from pline.mat2 import (
    Mat2,
    e_word,
    gen_B12,
    gen_B21,
    gen_diag,
    gen_E,
    identity,
    lemma_factor,
    mat,
    mat_inverse,
    mat_invertible,
)
from pline.poly import BiPoly, Poly
from pline.projective import (
    DistantGraph,
    Point,
    base_point,
    build_graph,
    chain_to_word,
    components,
    diameter,
    dist,
    distant,
    enumerate_points,
    is_admissible,
    point_eq,
    point_make,
    projective_line,
    unimodular_vs_admissible_report,
    word_to_point,
)
from pline.rings import BUNDLED_RINGS, FiniteRing, Ring, is_field, parse_ring_arg, ring, ring_create, spec_from_json
from pline.standard_form import (
    StandardForm,
    certify_range,
    compose,
    decompose,
    distance_certificate,
    poly_ring,
    xy_matrix_check,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
