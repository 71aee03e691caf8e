from ._an_reduction import (
    A2Reconciliation,
    Attachment,
    FamilyPresentation,
    Reduction,
    SpecialPoints,
    TailDescription,
    a2_displayed_family,
    a2_reconciliation,
    a2_worked_family,
    blowup_chart_family,
    chart_substitution,
    discriminant_identity_holds,
    double_cover_family,
    double_cover_substitution,
    even_case_reduction,
    hyperplane_product,
    miniversal_family,
    miniversal_polynomial,
    odd_case_reduction,
    pulled_back_discriminant,
    reduction,
    root_elimination,
    special_points_a2,
    tail_rule,
    weyl_cover_bindings,
    weyl_cover_map,
    weyl_pullback_family,
)
from ._artin import (
    ArtinWord,
    artin_coxeter_element,
    braid_relation_words,
    garside_element,
    generic_origin_loop,
    project_to_weyl,
    weyl_shadows,
)
from ._curves import (
    CurveSpec,
    DeformationFactor,
    DeformationStructure,
    DivisorReport,
    deformation_structure,
    divisor_report,
    local_cover_equations,
    local_cover_note,
    tail_description,
)
from ._errors import AdeError, Unsupported
from ._linalg import (
    MATRIX_ORDER_LIMIT,
    RatMatrix,
    char_poly,
    cyclotomic_multiplicities,
    determinant,
    evaluate_at_matrix,
    kernel_basis,
    matrix_order,
    rref,
)
from ._monodromy import (
    ClassicalOperator,
    MonodromyClass,
    VanishingAction,
    classical_operator,
    classification_table,
    divisor_monodromy,
    eigenvalue_orders,
    expected_origin_action,
    format_classification,
    origin_loop_monodromy,
    preserves_form,
)
from ._poly import (
    MPoly,
    discriminant,
    divides,
    elementary_symmetric,
    resultant,
    substitute,
    sylvester_matrix,
)
from ._roots import (
    GROUP_ENUMERATION_MAX_RANK,
    AdeType,
    ProductType,
    RootSystem,
    WeylElement,
    braid_relations_hold,
    build_root_system,
    cartan_type,
    coxeter_element,
    coxeter_number,
    enumerate_group,
    exponents,
    find_conjugator,
    is_conjugate,
    longest_element,
    product_root_system,
    reflection,
    root_system,
    simple_reflections,
    weyl_group_order,
)
from ._strata import (
    FiberSingularities,
    Flat,
    StratumClass,
    brute_force_lattice,
    census_records,
    census_table,
    closure,
    flat_type,
    generic_fiber_singularities,
    has_stratum_of_type,
    intersection_lattice,
    irreducible_components,
    orbit_census,
)
from ._version import __version__
from ._wonderful import (
    DivisorComponent,
    NestedSet,
    blowup_order,
    divisor_census,
    divisor_records,
    irreducible_flats,
    is_nested,
    max_snc_depth,
)

__all__ = [
    # Errors and unsupported results
    "AdeError",  # Invalid input or failed consistency check
    "Unsupported",  # Falsy stand-in for data computed elsewhere
    # Exact linear algebra
    "RatMatrix",  # Dense matrix of exact rationals
    "rref",  # Reduced row echelon form
    "kernel_basis",  # Right kernel of a rational matrix
    "char_poly",  # Characteristic polynomial of an integer matrix
    "determinant",  # Exact integer determinant
    "evaluate_at_matrix",  # Polynomial evaluated at a square matrix
    "matrix_order",  # Multiplicative order by exact powering
    "cyclotomic_multiplicities",  # Roots of unity among the roots, by order
    "MATRIX_ORDER_LIMIT",  # Largest power matrix_order tries
    # Root systems and Weyl groups
    "AdeType",  # A single irreducible type such as E6
    "ProductType",  # A sorted product of irreducible types
    "RootSystem",  # Roots in a standard realization
    "WeylElement",  # Weyl group element on simple root coordinates
    "build_root_system",  # Root system of an irreducible type
    "product_root_system",  # Orthogonal sum of irreducible root systems
    "root_system",  # Root system of any type label
    "cartan_type",  # Type of a Cartan matrix
    "reflection",  # Reflection in a root
    "simple_reflections",  # The generators s_i
    "braid_relations_hold",  # Check the Coxeter relations
    "coxeter_element",  # s_1 ... s_n
    "coxeter_number",  # Order of the Coxeter element
    "longest_element",  # w_0 with a reduced word
    "exponents",  # Exponents from the Coxeter eigenvalues
    "weyl_group_order",  # |W| from the exponents
    "enumerate_group",  # Every element of a small Weyl group
    "find_conjugator",  # Element conjugating one element to another
    "is_conjugate",  # Conjugacy test by enumeration
    "GROUP_ENUMERATION_MAX_RANK",  # Largest rank enumerated without force
    # Strata of the reflection arrangement
    "Flat",  # A stratum, keyed by its positive roots
    "StratumClass",  # One W-orbit of strata
    "FiberSingularities",  # Singularities of the fiber over a stratum
    "intersection_lattice",  # All flats up to a codimension
    "brute_force_lattice",  # The same from every subset of hyperplanes
    "closure",  # Smallest flat containing some roots
    "flat_type",  # Type of the sub-root system of a flat
    "irreducible_components",  # Split a flat into irreducible pieces
    "orbit_census",  # W-orbits of flats of one codimension
    "has_stratum_of_type",  # Full subdiagram criterion
    "generic_fiber_singularities",  # Fiber over a generic point of a stratum
    "census_records",  # Census as JSON records
    "census_table",  # Census as an aligned text table
    # Wonderful blow-up boundary
    "DivisorComponent",  # A boundary divisor
    "NestedSet",  # Boundary divisors that meet
    "irreducible_flats",  # Every boundary divisor in blow-up order
    "divisor_census",  # Boundary divisors counted by type
    "divisor_records",  # Divisor census as a JSON document
    "blowup_order",  # Irreducible strata by dimension
    "is_nested",  # Whether boundary divisors meet
    "max_snc_depth",  # Most boundary divisors through a point
    # Artin words
    "ArtinWord",  # A word in the Artin generators
    "project_to_weyl",  # Image in the Weyl group
    "artin_coxeter_element",  # t_1 ... t_n
    "garside_element",  # Positive lift of w_0
    "generic_origin_loop",  # Loop around the origin of the Weyl cover
    "braid_relation_words",  # Both sides of a braid relation
    "weyl_shadows",  # Weyl group images of the Artin identities
    # Monodromy
    "VanishingAction",  # Identity or minus identity
    "MonodromyClass",  # Unipotency of a boundary monodromy
    "ClassicalOperator",  # Monodromy on the vanishing lattice
    "classical_operator",  # (-1)^d times the Coxeter element
    "eigenvalue_orders",  # Orders of the operator's eigenvalues
    "expected_origin_action",  # Closed form of operator^h
    "origin_loop_monodromy",  # Classify operator^h
    "divisor_monodromy",  # Monodromy around a boundary divisor
    "preserves_form",  # Isometry check against the Cartan form
    "classification_table",  # Rows of the unipotency classification
    "format_classification",  # The same as an aligned table
    # Polynomials
    "MPoly",  # Integer polynomial in named variables
    "elementary_symmetric",  # e_k in some variables
    "sylvester_matrix",  # Sylvester matrix in one variable
    "resultant",  # Determinant of the Sylvester matrix
    "discriminant",  # Discriminant of a monic polynomial
    "substitute",  # Substitute polynomials for variables
    "divides",  # Exact divisibility
    # A_n reduction
    "FamilyPresentation",  # A family as a ring map
    "TailDescription",  # Tail of an A_n singularity
    "Attachment",  # How a tail is attached
    "Reduction",  # Semi-stable reduction data
    "A2Reconciliation",  # Two forms of the cusp family along a line
    "SpecialPoints",  # Special points on the cusp's exceptional curve
    "weyl_cover_map",  # t_i -> sigma_i(a)
    "weyl_cover_bindings",  # t_i -> e_i(-a)
    "root_elimination",  # a_{n+1} -> -(a_1 + ... + a_n)
    "miniversal_polynomial",  # x1^(n+1) + t2 x1^(n-1) + ... + t_{n+1}
    "pulled_back_discriminant",  # Discriminant on the Weyl cover
    "hyperplane_product",  # Product of the squared hyperplanes
    "discriminant_identity_holds",  # Compare the two
    "miniversal_family",  # Family over the deformation space
    "weyl_pullback_family",  # Family over the Weyl cover
    "chart_substitution",  # a -> b chart of the blow-up of the origin
    "blowup_chart_family",  # Family over the b-chart
    "double_cover_substitution",  # b1 -> c1^2
    "double_cover_family",  # Family over the double cover
    "odd_case_reduction",  # Reduction for n odd
    "even_case_reduction",  # Reduction for n even
    "reduction",  # Either, by parity or chart
    "tail_rule",  # Tail of A_n
    "a2_worked_family",  # Cusp family along a line
    "a2_displayed_family",  # The same as usually written
    "a2_reconciliation",  # How the two match up
    "special_points_a2",  # Four special points and their collisions
    # Curves
    "CurveSpec",  # Genus, singularities and dimension
    "DeformationFactor",  # Deformation of one singularity
    "DeformationStructure",  # Local product structure of the deformation
    "DivisorReport",  # Boundary census with monodromy and tails
    "deformation_structure",  # Build a DeformationStructure
    "divisor_report",  # Build a DivisorReport
    "local_cover_equations",  # Covers branched along boundary divisors
    "local_cover_note",  # What a cover does to the base
    "tail_description",  # Tail of one singularity of a curve
    # The version of adereduce
    "__version__",
]
