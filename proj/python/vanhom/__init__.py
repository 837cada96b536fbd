"""Exact vanishing homology of cell complexes annotated with collapse rates."""

from ._vanhom import (
    Complex,
    DegenerateSimplex,
    IndeterminateAtPrecision,
    InvalidInput,
    MissingRate,
    NotFaceClosed,
    NotNested,
    ParseError,
    PreconditionError,
    Series,
    VanhomError,
    circle,
    euler,
    excision,
    in_velocity,
    les_exact,
    load,
    loads,
    pinched_spheres,
    relative,
    sweep,
    torus,
    vanishing_betti,
)

__all__ = [
    "Complex",
    "DegenerateSimplex",
    "IndeterminateAtPrecision",
    "InvalidInput",
    "MissingRate",
    "NotFaceClosed",
    "NotNested",
    "ParseError",
    "PreconditionError",
    "Series",
    "VanhomError",
    "circle",
    "euler",
    "excision",
    "in_velocity",
    "les_exact",
    "load",
    "loads",
    "pinched_spheres",
    "relative",
    "sweep",
    "torus",
    "vanishing_betti",
]
