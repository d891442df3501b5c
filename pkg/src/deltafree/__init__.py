"""Maximum symmetric-difference-free families of subsets of {1, ..., n}:
construction from defining sets, recognition, four-class parity analysis,
exhaustive enumeration at desk scale, and randomized threshold probing."""

from .construction import (
    Generator,
    generate_family,
    is_maximum_family,
    linear_form_family,
    recognize_generator,
    recover_generator,
)
from .core import (
    MAX_GROUND,
    Family,
    Parity,
    all_odd_family,
    card_parity,
    complement_family,
    elements_of,
    find_closure_violation,
    find_delta_violation,
    find_quadruple_collision,
    find_union_collision,
    full_word,
    is_delta_closed,
    is_delta_free,
    is_quadruple_delta_free,
    is_union_free,
    parity_census,
    sym_diff,
    trace_parity,
    validate_ground,
    validate_word,
    word_of,
    xor_pair_counts,
)
from .enumeration import (
    EnumerationBudgetError,
    EnumerationReport,
    canonical_form,
    enumerate_maximum_families,
    find_extension,
    isomorphism_class_sizes,
    verify_completeness,
)
from .experiments import (
    DEFINITIONS,
    ExperimentConfig,
    SurvivalCurve,
    SurvivalPoint,
    estimate_survival,
    random_family,
)
from .partition import (
    ALL_CLASSES,
    ParityPair,
    PartitionCounts,
    class_of,
    delta_class,
    equal_split_expected,
    equal_split_observed,
    partition_counts,
    partition_family,
)
from .serialization import (
    FORMAT_TAG,
    FamilyDocument,
    family_from_json,
    family_from_lines,
    family_to_json,
    family_to_lines,
    format_element_set,
    parse_element_set,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_GROUND",
    "ALL_CLASSES",
    "DEFINITIONS",
    "FORMAT_TAG",
    "EnumerationBudgetError",
    "EnumerationReport",
    "ExperimentConfig",
    "Family",
    "FamilyDocument",
    "Generator",
    "Parity",
    "ParityPair",
    "PartitionCounts",
    "SurvivalCurve",
    "SurvivalPoint",
    "all_odd_family",
    "canonical_form",
    "card_parity",
    "class_of",
    "complement_family",
    "delta_class",
    "elements_of",
    "enumerate_maximum_families",
    "equal_split_expected",
    "equal_split_observed",
    "estimate_survival",
    "family_from_json",
    "family_from_lines",
    "family_to_json",
    "family_to_lines",
    "find_closure_violation",
    "find_delta_violation",
    "find_extension",
    "find_quadruple_collision",
    "find_union_collision",
    "format_element_set",
    "full_word",
    "generate_family",
    "is_delta_closed",
    "is_delta_free",
    "is_maximum_family",
    "is_quadruple_delta_free",
    "is_union_free",
    "isomorphism_class_sizes",
    "linear_form_family",
    "parity_census",
    "parse_element_set",
    "partition_counts",
    "partition_family",
    "random_family",
    "recognize_generator",
    "recover_generator",
    "sym_diff",
    "trace_parity",
    "validate_ground",
    "validate_word",
    "verify_completeness",
    "word_of",
    "xor_pair_counts",
]
