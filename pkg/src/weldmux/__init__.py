"""weldmux: welded link diagrams, crossing multiplexing, and the invariants
that see them.

The package is organised around one pipeline:

``gauss``      Gauss diagrams for virtual/welded links, parsing, canonical
               forms, mirrors.
``moves``      The legal local moves (kinks, pokes, slides, over-endpoint
               transpositions) and seeded random walks for fuzzing.
``multiplex``  The crossing-multiplexing construction: replace each
               crossing by a signed band of parallel copies, sized by a
               per-component integer weight vector.
``groups``     Arc presentations of the diagram group, a weighted
               generalisation matching multiplexed diagrams, Tietze
               simplification, Fox calculus.
``laurent``    Exact integer Laurent polynomials with gcds and normal
               forms.
``matrices``   Fraction-free determinants, minor gcds, Smith normal form.
``invariants`` Alexander-type polynomials, linking/intersection data,
               hom-count profiles, and the bundled ``full_report``.
``fixtures``   A small library of named diagrams used by the tests and
               experiment scripts.
"""

from .errors import (
    ArityMismatch,
    EmptyDiagram,
    EmptyInput,
    GaussSyntaxError,
    LengthMismatch,
    NonMonomialImage,
    NotApplicable,
    NotSquare,
    ReductionMismatch,
    RoleConflict,
    SignConflict,
    SizeOutOfRange,
    TargetTooLarge,
    UnpairedCrossing,
    WeldmuxError,
)
from .gauss import (
    OVER,
    UNDER,
    Endpoint,
    GaussDiagram,
    canonical,
    mirror,
    parse_gauss_code,
    relabel_components,
    same_diagram,
    serialize_gauss_code,
)
from .groups import (
    AbelianInvariants,
    Generator,
    GroupPresentation,
    Word,
    abelianization,
    fox_derivative,
    generalized_presentation,
    jacobian,
    parse_presentation,
    render_presentation,
    simplify,
    wirtinger_presentation,
)
from .homs import (
    FiniteTarget,
    HomCountProfile,
    count_homs,
    count_homs_exhaustive,
    symmetric_group,
    target_by_name,
)
from .invariants import (
    DEFAULT_TARGETS,
    InvariantReport,
    alexander,
    alexander_of_multiplex,
    alexander_of_presentation,
    full_report,
    intersection_numbers,
    linking_matrix,
)
from .laurent import LaurentPolynomial, associates, divide_exact, gcd, gcd_many, normalize, specialize
from .matrices import (
    cofactor_determinant,
    determinant,
    minors_gcd,
    smith_normal_form,
)
from .moves import (
    Move,
    MoveScript,
    apply_move,
    default_weight_grid,
    enumerate_moves,
    random_walk,
)
from .multiplex import multiplex, verify_multiplex_relation

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "EmptyDiagram",
    "EmptyInput",
    "GaussSyntaxError",
    "LengthMismatch",
    "NonMonomialImage",
    "NotApplicable",
    "NotSquare",
    "ReductionMismatch",
    "RoleConflict",
    "SignConflict",
    "SizeOutOfRange",
    "TargetTooLarge",
    "UnpairedCrossing",
    "WeldmuxError",
    "OVER",
    "UNDER",
    "Endpoint",
    "GaussDiagram",
    "canonical",
    "mirror",
    "parse_gauss_code",
    "relabel_components",
    "same_diagram",
    "serialize_gauss_code",
    "AbelianInvariants",
    "Generator",
    "GroupPresentation",
    "Word",
    "abelianization",
    "fox_derivative",
    "generalized_presentation",
    "jacobian",
    "parse_presentation",
    "render_presentation",
    "simplify",
    "wirtinger_presentation",
    "FiniteTarget",
    "HomCountProfile",
    "count_homs",
    "count_homs_exhaustive",
    "symmetric_group",
    "target_by_name",
    "DEFAULT_TARGETS",
    "InvariantReport",
    "alexander",
    "alexander_of_multiplex",
    "alexander_of_presentation",
    "full_report",
    "intersection_numbers",
    "linking_matrix",
    "LaurentPolynomial",
    "associates",
    "divide_exact",
    "gcd",
    "gcd_many",
    "normalize",
    "specialize",
    "Move",
    "MoveScript",
    "default_weight_grid",
    "apply_move",
    "enumerate_moves",
    "random_walk",
    "multiplex",
    "verify_multiplex_relation",
    "load_fixture",
    "fixture_names",
]

from .fixtures import fixture_names, load_fixture  # noqa: E402  (cycle-free tail import)
