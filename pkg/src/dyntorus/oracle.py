"""Forward crossing counter and census generators.

Everything in this module counts arc crossings component by component,
walking the census directly.  It deliberately never calls the closed-form
reconstruction in :mod:`.core`, so the two routes stay independent and can be
checked against each other.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from .core import Decomposition, IntersectionVector, TwistSplit, _check_int, _check_n
from .errors import CensusConsistencyError, GenerationFailure, ShapeError

RETRY_LIMIT = 1000


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters for the seeded random census stream."""

    n: int
    max_count: int = 6
    seed: int = 0

    def __post_init__(self):
        _check_n(self.n)
        _check_int(self.max_count, "max_count")
        if self.max_count < 0:
            raise ShapeError(f"max_count must be nonnegative, got {self.max_count}")
        _check_int(self.seed, "seed")
        if not 0 <= self.seed < 1 << 64:
            raise ShapeError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


def oracle_intersections(d: Decomposition) -> IntersectionVector:
    """Count the crossings of a census with every reference arc.

    Each above strand crosses its region's first alpha arc once, each below
    strand the second, and each loop both.  Beta crossings are endpoint
    counts: the arc next to the handle carries one endpoint per twisting
    strand and two per front genus arc, and each region hands ``2 * loops``
    more endpoints to its other side.  The handle arc is crossed once by
    every genus arc and core-curve copy, and ``twist number`` times by each
    twisting strand.

    Raises :class:`CensusConsistencyError` when the census counts cannot be
    glued into one multicurve.
    """
    n = d.n
    count = d.twisting_count

    beta = [0] * (n + 1)
    beta[n] = count + 2 * d.front_genus
    for i in reversed(range(n)):
        beta[i] = beta[i + 1] + 2 * d.loops[i]
    expected_first = count + 2 * d.back_genus
    if beta[0] != expected_first:
        raise CensusConsistencyError(
            f"loop ladder gives beta[1] = {beta[0]}, but the handle side "
            f"needs {expected_first}"
        )

    alpha: list[int] = []
    for i in range(n):
        strands = abs(d.loops[i])
        alpha.append(d.above[i] + strands)
        alpha.append(d.below[i] + strands)
        endpoints = d.above[i] + d.below[i] + 2 * max(d.loops[i], 0)
        if endpoints != beta[i]:
            raise CensusConsistencyError(
                f"region {i + 1} puts {endpoints} endpoints on beta[{i + 1}] "
                f"but the ladder carries {beta[i]}"
            )

    gamma = d.front_genus + d.back_genus + d.c_copies + d.total_twist
    c = count if count > 0 else -d.c_copies
    return IntersectionVector(n, tuple(alpha), tuple(beta), gamma, c)


def _draw_census(rng: random.Random, n: int, cap: int) -> Decomposition | None:
    loops = [rng.randint(-cap, cap) for _ in range(n)]
    kinds = ("plain", "copies", "twisting") if cap >= 1 else ("plain",)
    kind = rng.choice(kinds)
    copies = rng.randint(1, cap) if kind == "copies" else 0
    if kind == "twisting":
        count = rng.randint(1, cap)
        t = rng.randint(0, cap)
        m = rng.randint(0, min(count - 1, cap))
    else:
        count = t = m = 0

    front = rng.randint(0, cap)
    # the ladder fixes the whole beta chain, hence the back genus count and
    # the above+below sum in every region; resample when any comes out bad
    back = front + sum(loops)
    if back < 0:
        return None
    beta = [0] * (n + 1)
    beta[n] = count + 2 * front
    for i in reversed(range(n)):
        beta[i] = beta[i + 1] + 2 * loops[i]
    sums = [beta[i] - 2 * max(loops[i], 0) for i in range(n)]
    if min(sums) < 0:
        return None

    above = [rng.randint(0, s) for s in sums]
    below = [s - a for s, a in zip(sums, above)]

    total = m + t * count
    sign = rng.choice((-1, 1)) if total else 0

    if min(min(min(a, b) for a, b in zip(above, below)), front, back) > 0:
        j = rng.randrange(n)
        if rng.random() < 0.5:
            above[j], below[j] = 0, sums[j]
        else:
            above[j], below[j] = sums[j], 0

    if not (any(above) or any(below) or any(loops) or front or back or copies or count):
        return None
    return Decomposition(
        n=n,
        above=tuple(above),
        below=tuple(below),
        loops=tuple(loops),
        front_genus=front,
        back_genus=back,
        c_copies=copies,
        twisting_count=count,
        twist_sign=sign,
        twist_split=TwistSplit(t, m),
    )


def random_census(cfg: GeneratorConfig) -> Decomposition:
    """Draw one valid census, deterministically in ``cfg.seed``.

    Raises :class:`GenerationFailure` after ``RETRY_LIMIT`` rejected draws
    (for example with ``max_count = 0``, which admits no nonempty census).
    """
    rng = random.Random(cfg.seed)
    for _ in range(RETRY_LIMIT):
        census = _draw_census(rng, cfg.n, cfg.max_count)
        if census is not None:
            return census
    raise GenerationFailure(
        f"no valid census found in {RETRY_LIMIT} draws for n={cfg.n}, "
        f"max_count={cfg.max_count}, seed={cfg.seed}"
    )


def census_key(d: Decomposition):
    """Sort key fixing the enumeration order of censuses."""
    return (
        d.loops,
        d.front_genus,
        d.back_genus,
        d.c_copies,
        d.twisting_count,
        d.twist_split.t,
        d.twist_split.m,
        d.twist_sign,
        d.above,
        d.below,
    )


def _sectors(cap: int) -> Iterator[tuple[int, int, int, int]]:
    # (c_copies, twisting_count, t, m); exactly one of copies/count may be > 0
    yield 0, 0, 0, 0
    for copies in range(1, cap + 1):
        yield copies, 0, 0, 0
    for count in range(1, cap + 1):
        for t in range(cap + 1):
            for m in range(min(count - 1, cap) + 1):
                yield 0, count, t, m


def enumerate_small(n: int, cap: int) -> Iterator[Decomposition]:
    """Yield every valid census with all fields bounded by ``cap``, in the
    lexicographic order of :func:`census_key`."""
    _check_n(n)
    _check_int(cap, "cap")
    if cap < 0:
        raise ShapeError(f"cap must be nonnegative, got {cap}")

    keys = []
    for loops in itertools.product(range(-cap, cap + 1), repeat=n):
        loop_total = sum(loops)
        for front in range(cap + 1):
            back = front + loop_total
            if back < 0 or back > cap:
                continue
            for copies, count, t, m in _sectors(cap):
                beta = [0] * (n + 1)
                beta[n] = count + 2 * front
                for i in reversed(range(n)):
                    beta[i] = beta[i + 1] + 2 * loops[i]
                sums = [beta[i] - 2 * max(loops[i], 0) for i in range(n)]
                if min(sums) < 0:
                    continue
                ranges = [range(max(0, s - cap), min(cap, s) + 1) for s in sums]
                total = m + t * count
                signs = (-1, 1) if total else (0,)
                for above in itertools.product(*ranges):
                    below = tuple(s - a for s, a in zip(sums, above))
                    if min(min(min(a, b) for a, b in zip(above, below)), front, back) > 0:
                        continue
                    if not (
                        any(above) or any(below) or any(loops)
                        or front or back or copies or count
                    ):
                        continue
                    for sign in signs:
                        keys.append(
                            (loops, front, back, copies, count, t, m, sign, above, below)
                        )
    keys.sort()
    for loops, front, back, copies, count, t, m, sign, above, below in keys:
        yield Decomposition(
            n=n,
            above=above,
            below=below,
            loops=loops,
            front_genus=front,
            back_genus=back,
            c_copies=copies,
            twisting_count=count,
            twist_sign=sign,
            twist_split=TwistSplit(t, m),
        )
