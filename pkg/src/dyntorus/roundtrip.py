"""Seeded self-check harness.

Samples coordinate vectors, drives them through decode / validate / encode /
decompose and the forward crossing counter, and greedily shrinks any failing
vector to a small witness.  Because coordinates biject with multicurves,
every census reachable at all is reachable from some coordinate vector, so
one coordinate-space shrinker covers the census properties too.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .core import (
    DynnikovCoordinates,
    _sign,
    coordinates_from_decomposition,
    coordinates_from_intersections,
    decompose,
    intersections_from_coordinates,
    validate_intersections,
)
from .errors import LaminationError
from .oracle import oracle_intersections

DEFAULT_BOUND = 6


@dataclass(frozen=True)
class PropertyFailure:
    name: str
    coords: DynnikovCoordinates
    detail: str


def check_coordinates(coords: DynnikovCoordinates) -> PropertyFailure | None:
    """Run every property at one coordinate vector; None means all hold."""
    try:
        vector = intersections_from_coordinates(coords)
    except Exception as exc:  # noqa: BLE001 - a crash is a counterexample
        return PropertyFailure("decode", coords, f"decoding raised {exc!r}")

    report = validate_intersections(vector)
    if not report.valid:
        return PropertyFailure(
            "decoded-vector-valid", coords,
            f"decoded vector fails validation: {report.first.condition}",
        )

    cp = coords.cplus
    for i in range(coords.n):
        if (vector.beta[i] - vector.beta[i + 1]) % 2:
            return PropertyFailure("parity", coords, f"beta parity broken at region {i + 1}")
        if (vector.alpha[2 * i] + vector.alpha[2 * i + 1] - cp) % 2:
            return PropertyFailure("parity", coords, f"alpha parity broken at region {i + 1}")

    try:
        back = coordinates_from_intersections(vector, _sign(coords.T))
    except Exception as exc:  # noqa: BLE001
        return PropertyFailure("encode", coords, f"re-encoding raised {exc!r}")
    if back != coords:
        return PropertyFailure("coordinate-round-trip", coords, f"re-encoded to {back}")

    try:
        census = decompose(vector, _sign(coords.T))
    except Exception as exc:  # noqa: BLE001
        return PropertyFailure("decompose", coords, f"decomposing raised {exc!r}")

    if census.c_copies * census.twisting_count != 0:
        return PropertyFailure("exclusivity", coords, "copies and twists coexist")
    if vector.beta[coords.n] != cp + 2 * census.front_genus:
        return PropertyFailure("genus-consistency", coords, "front genus count is off")
    if vector.beta[0] != cp + 2 * census.back_genus:
        return PropertyFailure("genus-consistency", coords, "back genus count is off")
    residue = census.c_copies if coords.c <= 0 else abs(coords.T)
    if vector.gamma != census.front_genus + census.back_genus + residue:
        return PropertyFailure("gamma-decomposition", coords, "gamma does not split")
    if census.total_twist != abs(coords.T):
        return PropertyFailure("twist-split", coords, "m + t*count misses |T|")

    try:
        if coordinates_from_decomposition(census) != coords:
            return PropertyFailure("census-encoding", coords, "census maps to other coords")
        if oracle_intersections(census) != vector:
            return PropertyFailure(
                "oracle-agreement", coords,
                "forward crossing count disagrees with the decoder",
            )
        if decompose(oracle_intersections(census), census.twist_sign) != census:
            return PropertyFailure("census-round-trip", coords, "decompose does not invert")
    except LaminationError as exc:
        return PropertyFailure("census-path", coords, f"census path raised {exc!r}")
    return None


def random_coordinates(rng: random.Random, n: int, bound: int = DEFAULT_BOUND) -> DynnikovCoordinates:
    """One coordinate vector with entries in ``[-bound, bound]`` outside the
    excluded set."""
    while True:
        a = [rng.randint(-bound, bound) for _ in range(n)]
        b = [rng.randint(-bound, bound) for _ in range(n)]
        c = rng.randint(-bound, bound)
        twist = rng.randint(-bound, bound) if c > 0 else 0
        if any(a) or any(b) or twist or c:
            return DynnikovCoordinates(n, tuple(a), tuple(b), twist, c)


def _with_entry(coords: DynnikovCoordinates, slot: int, value: int) -> DynnikovCoordinates | None:
    a, b, twist, c = list(coords.a), list(coords.b), coords.T, coords.c
    n = coords.n
    if slot < n:
        a[slot] = value
    elif slot < 2 * n:
        b[slot - n] = value
    elif slot == 2 * n:
        twist = value
    else:
        c = value
    try:
        return DynnikovCoordinates(n, tuple(a), tuple(b), twist, c)
    except LaminationError:
        return None  # candidate fell into the excluded set


def shrink(
    coords: DynnikovCoordinates,
    still_fails: Callable[[DynnikovCoordinates], bool],
) -> DynnikovCoordinates:
    """Greedily move entries toward zero while the predicate keeps failing."""
    entries = lambda d: list(d.a) + list(d.b) + [d.T, d.c]
    current = coords
    progress = True
    while progress:
        progress = False
        values = entries(current)
        for slot, value in enumerate(values):
            if value == 0:
                continue
            for candidate_value in (0, value // 2, value - _sign(value)):
                if candidate_value == value:
                    continue
                candidate = _with_entry(current, slot, candidate_value)
                if candidate is not None and still_fails(candidate):
                    current = candidate
                    progress = True
                    break
    return current


def run_suite(
    n: int, seed: int, trials: int, bound: int = DEFAULT_BOUND
) -> PropertyFailure | None:
    """Check ``trials`` random vectors; on failure return a shrunk witness."""
    rng = random.Random(seed)
    for _ in range(trials):
        coords = random_coordinates(rng, n, bound)
        failure = check_coordinates(coords)
        if failure is not None:
            witness = shrink(coords, lambda d: check_coordinates(d) is not None)
            final = check_coordinates(witness)
            assert final is not None
            return final
    return None
