"""Shared reference data: small multicurves with every kind of component."""

from dyntorus import Decomposition, DynnikovCoordinates, IntersectionVector, TwistSplit

# Three punctures; one twisting strand winding once clockwise, one front and
# one back genus arc, a left loop in the first region, a right loop in the
# last.
ONE_TWIST_VECTOR = IntersectionVector(3, (4, 1, 3, 2, 4, 1), (3, 5, 5, 3), 3, 1)
ONE_TWIST_COORDS = DynnikovCoordinates(3, (-2, -1, -2), (-1, 0, 1), -1, 1)
ONE_TWIST_CENSUS = Decomposition(
    3, (3, 3, 3), (0, 2, 0), (-1, 0, 1), 1, 1, 0, 1, -1, TwistSplit(1, 0)
)

# Three punctures; three twisting strands carrying five clockwise twists
# (two strands twist twice, one once) and two front genus arcs.
FIVE_TWIST_COORDS = DynnikovCoordinates(3, (-2, -2, -1), (0, -1, -1), -5, 3)
FIVE_TWIST_VECTOR = IntersectionVector(3, (2, 1, 3, 2, 3, 4), (3, 3, 5, 7), 7, 3)
FIVE_TWIST_CENSUS = Decomposition(
    3, (2, 2, 2), (1, 1, 3), (0, -1, -1), 2, 0, 0, 3, -1, TwistSplit(1, 2)
)

# Degenerate but valid pieces.
COPY_CENSUS = Decomposition(2, (0, 0), (0, 0), (0, 0), 0, 0, 1, 0, 0, TwistSplit(0, 0))
COPY_VECTOR = IntersectionVector(2, (0, 0, 0, 0), (0, 0, 0), 1, -1)
LOOP_BACK_CENSUS = Decomposition(
    2, (0, 0), (0, 0), (1, 0), 0, 1, 0, 0, 0, TwistSplit(0, 0)
)
LOOP_BACK_VECTOR = IntersectionVector(2, (1, 1, 0, 0), (2, 0, 0), 1, 0)

# Vector that no multicurve realizes (half-integer genus counts).
UNREALIZABLE_VECTOR = IntersectionVector(3, (1, 1, 1, 1, 1, 1), (0, 2, 0, 2), 2, 1)
