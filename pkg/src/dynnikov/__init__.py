"""Dynnikov coordinates and component counting for integral laminations."""

from .braid import (
    BraidGenerator,
    BraidWord,
    apply_generator,
    apply_generator_extended,
    apply_generator_standard,
    apply_word,
    parse_word,
)
from .coords import (
    DynnikovCoordinates,
    ExtendedCoordinates,
    IntersectionNumbers,
    alpha_numbers,
    beta_numbers,
    extend,
    format_coordinates,
    intersection_numbers,
    is_central,
    parse_coordinates,
    validate,
)
from .errors import (
    BadShape,
    Diverged,
    DynnikovError,
    InconsistentDiagram,
    IndexOutOfRange,
    IntegerOverflow,
    ParseError,
    PreconditionViolated,
    ZeroVector,
)
from .reduction import (
    ComplexityTriple,
    MoveKind,
    ReductionTrace,
    complexity,
    count_components,
    erase_elementary,
    fill_puncture,
    final_count_n3,
    gcd_count,
    i_index,
    untwist,
)
from .tracer import oracle_count

__version__ = "0.1.0"
