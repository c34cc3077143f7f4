"""Reaction system workbench: simulation constructions and exhaustive verifiers."""
from .core import (
    Alphabet,
    AlphabetMismatch,
    CapacityError,
    FunctionTable,
    Reaction,
    ReactionSystem,
    ReactionSystemError,
    canonical_system,
    combine,
    compose,
    enabled,
    iterate,
    normalize,
    restrict_to,
    result,
    tabulate,
    trace,
)

__version__ = "0.1.0"
