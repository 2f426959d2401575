"""Exact partition-algebra characters, immanants and recombinants of matrices."""

from .algebra import Element, e_idempotent, identity, left_ideal_trace_on, left_regular_trace, multiply
from .diagrams import (
    CompositionResult,
    Diagram,
    as_permutation,
    compose,
    conjugate_by_permutation,
    enumerate_diagrams,
    identity_diagram,
    parse_diagram,
    permutation_diagram,
    propagation_number,
)
from .errors import BoundError, NotInvariantError, OrderMismatchError, ResourceLimitError, ShapeLevelError
from .matfun import SquareMatrix, determinant, diagram_product, immanant, permanent, recombinant
from .pachar import ShapeIndex, act, character, character_table, dimension, enumerate_half_diagrams, shapes
from .scalars import R, Poly, RatFunc
from .symchar import all_partitions, cycle_type, hook_dimension, mn_character

__version__ = "0.1.0"
