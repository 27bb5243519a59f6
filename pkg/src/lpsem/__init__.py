"""lpsem: semantics of normal logic programs, computed exactly.

Parses and grounds function-free normal logic programs, evaluates the
classical fixpoint semantics (least/greatest model, Fitting, well-founded,
stable, supported) and their truth-preferring counterparts (maxstable,
maximally circular well-founded), and verifies the level-mapping
characterizations of all of them by brute-force search on small instances.
"""

from .syntax import (
    Atom,
    Clause,
    GroundProgram,
    Literal,
    ParseError,
    ReductProgram,
    SourceProgram,
    ground,
    herbrand_base,
    parse_atom,
    parse_program,
    program_text,
)
from .interp import (
    EMPTY_INTERPRETATION,
    InconsistencyError,
    OutOfBaseError,
    PartialInterpretation,
    TruthValue,
    TwoValued,
    interpretation_json,
    is_model,
    is_total,
    knowledge_leq,
    make_partial,
    total_extension,
    truth_of_body,
    truth_of_literal,
)
from .operators import (
    FixpointTrace,
    NonMonotoneOperatorError,
    NotDefiniteError,
    OperatorInvariantError,
    cgl,
    cw_op,
    fp,
    gfp_definite,
    gl,
    greatest_self_founded,
    greatest_unfounded,
    iterate_to_fixpoint,
    lfp_definite,
    phi,
    reduct,
    tp,
    tp_plus,
    wp_op,
)
from .semantics import (
    AlternatingPair,
    CapExceededError,
    DEFAULT_ENUM_CAP,
    SemanticsResult,
    compute_semantics,
    fitting_model,
    fitting_trace,
    greatest_model,
    is_maxstable,
    is_stable,
    is_supported,
    least_model,
    maxstable_models,
    maxwf_alternating,
    maxwf_model,
    maxwf_trace,
    stable_models,
    supported_models,
    well_founded_model,
    wf_alternating,
    wf_trace,
)
from .levelmap import (
    Condition,
    DomainMismatchError,
    GreatestModelResult,
    LevelMapping,
    check_condition,
    extract_level_mapping_from_trace,
    find_level_mapping,
    greatest_model_with_condition,
    is_locally_stratified,
)
from .gen import random_program

__version__ = "0.1.0"
