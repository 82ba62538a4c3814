# __init__.py

from .errors import (
    NeronError,
    InputValidationError,
    GraphValidationError,
    ArithmeticInconsistency,
    ParseError,
    ValidationReport,
    Violation,
)
from .graphs import (
    Dart,
    WeightedGraph,
    Involution,
    validate,
    check_involution,
    star,
    mass,
    regularity,
    integral_regularity,
    is_connected,
    bipartition,
    double_cover,
    quotient_by_involution,
    is_isomorphic,
    to_networkx,
    cycle_graph,
    path_graph,
    banana_graph,
    complete_graph,
    folded_bouquet,
    random_weighted_graph,
    random_regular_graph,
)
from .homology import (
    CycleBasis,
    GramMatrix,
    ComponentGroup,
    estar,
    cycle_basis,
    gram_matrix,
    leading_minors,
    is_positive_definite,
    discriminant,
    component_group,
)
from .spectral import (
    laplacian_matrix,
    adjacency_matrix,
    char_poly,
    product_nonzero_eigenvalues,
    verify_discriminant_formula,
    double_cover_charpoly_identity,
    corollary_product,
    verify_corollary,
    double_cover_discriminant,
)
from .numtheory import (
    FqPolynomial,
    FactoredInteger,
    is_irreducible,
    monic_irreducibles,
    ideal_norm,
    ideal_deg,
    parse_fq_polynomial,
    kronecker,
    int_poly,
    int_poly_eval,
    int_poly_derivative,
    char_poly_int,
    factor_integer,
    )
from .quaternion import (
    FFInput,
    QInput,
    PhiReport,
    GPlusProfile,
    mass_ff,
    h_weight_ff,
    class_number_ff,
    n_d,
    phi_ff,
    closed_form_h1,
    validate_brandt,
    mass_q,
    h2_h3,
    n2_n3,
    class_number_q,
    phi_q,
    gplus_profile_ff,
    gplus_profile_q,
    heavy_star_count,
)
from .formats import parse_graph, emit_graph, parse_quaternion_input, render_phi_report
