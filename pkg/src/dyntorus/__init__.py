"""Coordinates for multicurves on a once-holed genus-one surface with punctures."""

from .core import (
    BOUNDARY_PARALLEL,
    COPY_CONSISTENCY,
    GENUS_COUNT,
    NON_EMPTINESS,
    NONNEGATIVITY,
    PARITY,
    REGION_EQUALITY,
    TRIANGLE,
    TWIST_CONSISTENCY,
    VIOLATION_CONDITIONS,
    Decomposition,
    DynnikovCoordinates,
    IntersectionVector,
    TwistSplit,
    ValidationReport,
    Violation,
    coordinates_from_decomposition,
    coordinates_from_intersections,
    cplus,
    decompose,
    genus_beta_floor,
    intersections_from_coordinates,
    total_twist,
    twist_split,
    validate_intersections,
)
from .errors import (
    CensusConsistencyError,
    CensusError,
    EmptyLaminationError,
    ExcludedVectorError,
    GenerationFailure,
    InvalidVectorError,
    LaminationError,
    ShapeError,
    TwistSignError,
)
from .oracle import (
    GeneratorConfig,
    census_key,
    enumerate_small,
    oracle_intersections,
    random_census,
)
from .render import (
    STRAND_CAP,
    Schematic,
    SchematicElement,
    build_schematic,
    render_ascii,
    render_svg,
    schematic_elements,
)
from .roundtrip import PropertyFailure, check_coordinates, run_suite, shrink

__version__ = "0.1.0"

__all__ = [
    "BOUNDARY_PARALLEL",
    "COPY_CONSISTENCY",
    "CensusConsistencyError",
    "CensusError",
    "Decomposition",
    "DynnikovCoordinates",
    "EmptyLaminationError",
    "ExcludedVectorError",
    "GENUS_COUNT",
    "GenerationFailure",
    "GeneratorConfig",
    "IntersectionVector",
    "InvalidVectorError",
    "LaminationError",
    "NON_EMPTINESS",
    "NONNEGATIVITY",
    "PARITY",
    "PropertyFailure",
    "REGION_EQUALITY",
    "STRAND_CAP",
    "Schematic",
    "SchematicElement",
    "ShapeError",
    "TRIANGLE",
    "TWIST_CONSISTENCY",
    "TwistSignError",
    "TwistSplit",
    "VIOLATION_CONDITIONS",
    "ValidationReport",
    "Violation",
    "build_schematic",
    "census_key",
    "check_coordinates",
    "coordinates_from_decomposition",
    "coordinates_from_intersections",
    "cplus",
    "decompose",
    "enumerate_small",
    "genus_beta_floor",
    "intersections_from_coordinates",
    "oracle_intersections",
    "random_census",
    "render_ascii",
    "render_svg",
    "run_suite",
    "schematic_elements",
    "shrink",
    "total_twist",
    "twist_split",
    "validate_intersections",
]
