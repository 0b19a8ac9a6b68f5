"""Lyndon-Shirshov word machinery, Groebner-Shirshov bases and HNN-extension
presentations for free Lie superalgebras over exact fields."""

from .errors import (
    AlphabetError,
    BracketingError,
    FieldError,
    NotCompletedError,
    NotLieElementError,
    NotLyndonError,
    RelationError,
    ResourceLimitError,
    StructureError,
    SuperlieError,
    UnexpectedAmbiguityError,
    WordError,
)
from .fields import FpElement, PrimeField, RationalField, field_from_string
from .gsb import (
    Ambiguity,
    CompletionLog,
    CompositionReport,
    RelationSet,
    assoc_composition,
    check_triviality,
    complete,
    find_ambiguities,
    irreducible_words,
    lie_composition,
)
from .liepoly import (
    AssocPoly,
    LiePoly,
    expand,
    generator_poly,
    leading_term,
    monomial_poly,
    reduce,
    relative_bracketing,
    relative_bracketing_poly,
    superbracket,
    to_ls_coordinates,
)
from .lyndon import (
    BracketingResult,
    all_bracketings,
    enumerate_super_ls_words,
    is_ls_monomial,
    is_ls_word,
    is_super_ls_monomial,
    is_super_ls_word,
    special_bracketing,
    standard_bracketing,
)
from .superalg import (
    DerivationSpec,
    EmbeddingReport,
    MembershipReport,
    Presentation,
    StructureAlgebra,
    SubalgebraSpec,
    SurveyReport,
    ValidationReport,
    ad_derivation,
    composition_survey,
    embedding_check,
    extend_derivation,
    free_basis_check,
    hnn_presentation,
    structure_presentation,
    two_gen_membership_check,
    two_generator_presentation,
    validate_derivation,
    validate_structure,
    validate_subalgebra,
)
from .words import (
    Alphabet,
    AssocWord,
    Generator,
    LieMonomial,
    cyclic_rotations,
    deglex_less,
    find_occurrences,
    leaf,
    lex_less,
    node,
    rho,
)

__version__ = "0.1.0"
