"""Zigzag persistence over prime fields."""

from .decompose import DecompositionTrace, decompose, multiplicities_from_dims, pers
from .field import FieldSpec, NoSolution
from .filtration import (
    FiltrationRep,
    InvariantViolation,
    birth_time_index,
    death_time_index,
    rf_abstract,
    rf_init,
    rf_step,
)
from .localize import left_filtration, localize_at
from .zigzag import (
    Barcode,
    ShapeError,
    ZigzagModule,
    barcode_restrict,
    change_basis,
    direct_sum,
    interval_module,
    restrict,
    reverse,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "Barcode",
    "DecompositionTrace",
    "FieldSpec",
    "FiltrationRep",
    "InvariantViolation",
    "NoSolution",
    "ShapeError",
    "ZigzagModule",
    "barcode_restrict",
    "birth_time_index",
    "change_basis",
    "death_time_index",
    "decompose",
    "direct_sum",
    "interval_module",
    "left_filtration",
    "localize_at",
    "multiplicities_from_dims",
    "pers",
    "restrict",
    "reverse",
    "rf_abstract",
    "rf_init",
    "rf_step",
    "validate",
]
