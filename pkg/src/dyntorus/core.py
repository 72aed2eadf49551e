"""Exact integer coordinates for multicurves on a once-holed torus with punctures.

The surface has genus one, one boundary circle and ``n >= 2`` punctures.  A
multicurve (a finite union of disjoint essential simple closed curves, up to
isotopy) is measured against a fixed reference system:

* ``alpha_1 .. alpha_2n``: two arcs per puncture, one on each side;
* ``beta_1 .. beta_{n+1}``: arcs separating the punctures from each other and
  from the handle; ``beta_1`` and ``beta_{n+1}`` bound the handle region;
* ``gamma``: an arc running through the handle region, crossing the core
  curve once;
* ``c``: the closed core curve of the handle.

An :class:`IntersectionVector` records minimal crossing counts with this
system.  The ``c`` entry is signed: ``c > 0`` counts the strands crossing the
core curve (the twisting components), while ``c < 0`` says the multicurve
contains ``-c`` parallel copies of the core curve itself and then nothing
crosses it.  Crossing counts alone do not record the direction in which
twisting strands wind, so operations that consume an intersection vector take
an explicit ``twist_sign`` argument (``-1`` clockwise, ``+1``
counterclockwise, ``0`` when there is no net twist).

:class:`DynnikovCoordinates` is the compressed signed encoding ``(a; b; T;
c)``.  It is a bijection between multicurves and the integer vectors outside
the excluded set "``c <= 0`` with ``T != 0``, or all zero".
:func:`coordinates_from_intersections` and
:func:`intersections_from_coordinates` convert in both directions;
:func:`decompose` breaks a vector into its per-region component census.

Indexing convention: tuples are stored 0-based, but error messages and
reports use the 1-based arc names above.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CensusError,
    EmptyLaminationError,
    ExcludedVectorError,
    InvalidVectorError,
    ShapeError,
    TwistSignError,
)

# Violation condition identifiers, in the order the validator checks them.
NONNEGATIVITY = "nonnegativity"
PARITY = "parity"
GENUS_COUNT = "genus-count"
REGION_EQUALITY = "region-equality"
TRIANGLE = "triangle"
TWIST_CONSISTENCY = "twist-consistency"
COPY_CONSISTENCY = "copy-consistency"
BOUNDARY_PARALLEL = "boundary-parallel"
NON_EMPTINESS = "non-emptiness"

VIOLATION_CONDITIONS = (
    NONNEGATIVITY,
    PARITY,
    GENUS_COUNT,
    REGION_EQUALITY,
    TRIANGLE,
    TWIST_CONSISTENCY,
    COPY_CONSISTENCY,
    BOUNDARY_PARALLEL,
    NON_EMPTINESS,
)


def cplus(c: int) -> int:
    """Number of strands crossing the core curve: ``max(c, 0)``."""
    return max(c, 0)


def _check_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ShapeError(f"{what} must be an integer, got {value!r}")
    return value


def _int_tuple(values, what: str, length: int) -> tuple[int, ...]:
    out = tuple(values)
    if len(out) != length:
        raise ShapeError(f"{what} must have length {length}, got {len(out)}")
    for x in out:
        _check_int(x, f"{what} entry")
    return out


def _check_n(n) -> int:
    _check_int(n, "puncture count n")
    if n < 2:
        raise ShapeError(f"puncture count n must be at least 2, got {n}")
    return n


def _half(value: int) -> int:
    q, r = divmod(value, 2)
    assert r == 0, f"internal parity failure halving {value}"
    return q


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class IntersectionVector:
    """Crossing counts ``(alpha; beta; gamma; c)`` of a multicurve with the
    reference system.

    Construction only enforces well-formedness (``n >= 2``, correct lengths,
    integer entries).  Whether the numbers fit together into an actual
    multicurve is the job of :func:`validate_intersections`; in particular
    negative entries are representable so that the validator can report them.
    """

    n: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: int
    c: int

    def __post_init__(self):
        _check_n(self.n)
        object.__setattr__(self, "alpha", _int_tuple(self.alpha, "alpha", 2 * self.n))
        object.__setattr__(self, "beta", _int_tuple(self.beta, "beta", self.n + 1))
        _check_int(self.gamma, "gamma")
        _check_int(self.c, "c")

    @property
    def cplus(self) -> int:
        return max(self.c, 0)


@dataclass(frozen=True)
class DynnikovCoordinates:
    """Signed coordinate vector ``(a; b; T; c)`` of a multicurve.

    ``a_i`` and ``b_i`` are half-differences of crossing counts around
    puncture ``i``, ``T`` is the signed total twist carried through the
    handle and ``c`` follows the signed convention of
    :class:`IntersectionVector`.  Vectors in the excluded set are rejected at
    construction: the zero vector encodes the empty multicurve, and ``c <= 0``
    leaves nothing that could twist, so it forces ``T = 0``.
    """

    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    T: int
    c: int

    def __post_init__(self):
        _check_n(self.n)
        object.__setattr__(self, "a", _int_tuple(self.a, "a", self.n))
        object.__setattr__(self, "b", _int_tuple(self.b, "b", self.n))
        _check_int(self.T, "T")
        _check_int(self.c, "c")
        if self.c <= 0 and self.T != 0:
            raise ExcludedVectorError(
                f"c = {self.c} <= 0 admits no twisting strands, yet T = {self.T}"
            )
        if not (any(self.a) or any(self.b) or self.T or self.c):
            raise EmptyLaminationError("the zero vector encodes the empty multicurve")

    @property
    def cplus(self) -> int:
        return max(self.c, 0)


@dataclass(frozen=True)
class TwistSplit:
    """How a total twist distributes over twisting strands: ``m`` strands
    twist ``t + 1`` times, the remaining ones ``t`` times."""

    t: int
    m: int

    def __post_init__(self):
        _check_int(self.t, "t")
        _check_int(self.m, "m")
        if self.t < 0 or self.m < 0:
            raise ShapeError(f"twist split entries must be nonnegative, got {self}")

    def total(self, count: int) -> int:
        """Total twist carried by ``count`` strands split this way."""
        return self.m + self.t * count


@dataclass(frozen=True)
class Decomposition:
    """Component census of a multicurve.

    Per puncture region ``U_i``: ``above[i]`` and ``below[i]`` strands passing
    the puncture on either side, and ``loops[i]`` looping strands (negative
    for left loops, positive for right loops).  In the handle region:
    ``front_genus`` / ``back_genus`` arcs hugging the handle from either side,
    ``c_copies`` parallel copies of the core curve, and ``twisting_count``
    strands crossing it, whose twists are described by ``twist_split`` and
    ``twist_sign``.
    """

    n: int
    above: tuple[int, ...]
    below: tuple[int, ...]
    loops: tuple[int, ...]
    front_genus: int
    back_genus: int
    c_copies: int
    twisting_count: int
    twist_sign: int
    twist_split: TwistSplit

    def __post_init__(self):
        _check_n(self.n)
        object.__setattr__(self, "above", _int_tuple(self.above, "above", self.n))
        object.__setattr__(self, "below", _int_tuple(self.below, "below", self.n))
        object.__setattr__(self, "loops", _int_tuple(self.loops, "loops", self.n))
        for what in ("front_genus", "back_genus", "c_copies", "twisting_count"):
            value = _check_int(getattr(self, what), what)
            if value < 0:
                raise ShapeError(f"{what} must be nonnegative, got {value}")
        if any(x < 0 for x in self.above) or any(x < 0 for x in self.below):
            raise ShapeError("above/below counts must be nonnegative")
        _check_int(self.twist_sign, "twist_sign")
        if self.twist_sign not in (-1, 0, 1):
            raise ShapeError(f"twist_sign must be -1, 0 or +1, got {self.twist_sign}")
        if not isinstance(self.twist_split, TwistSplit):
            raise ShapeError("twist_split must be a TwistSplit")

        if self.c_copies and self.twisting_count:
            raise CensusError(
                "copies of the core curve and twisting strands cannot coexist"
            )
        if self.twisting_count == 0:
            if self.twist_split != TwistSplit(0, 0):
                raise CensusError(
                    f"no twisting strands, so the split must be (0, 0), got {self.twist_split}"
                )
        elif not self.twist_split.m < self.twisting_count:
            raise CensusError(
                f"m = {self.twist_split.m} must be below the strand count {self.twisting_count}"
            )
        if (self.twist_sign == 0) != (self.total_twist == 0):
            raise CensusError(
                f"twist_sign {self.twist_sign} inconsistent with total twist {self.total_twist}"
            )
        floor = min(
            min(min(a, b) for a, b in zip(self.above, self.below)),
            self.front_genus,
            self.back_genus,
        )
        if floor > 0:
            raise CensusError(
                "every region floor is positive: the census contains a curve "
                "parallel to the boundary"
            )
        if not (
            any(self.above)
            or any(self.below)
            or any(self.loops)
            or self.front_genus
            or self.back_genus
            or self.c_copies
            or self.twisting_count
        ):
            raise EmptyLaminationError("the all-zero census encodes the empty multicurve")

    @property
    def total_twist(self) -> int:
        """Unsigned total twist carried by the twisting strands."""
        return self.twist_split.total(self.twisting_count)


@dataclass(frozen=True)
class Violation:
    """One violated realizability condition, with offending indices/values."""

    condition: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...]

    def __post_init__(self):
        object.__setattr__(self, "violations", tuple(self.violations))
        if self.valid != (not self.violations):
            raise ShapeError("report flag must match the violation list")

    @property
    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None


def validate_intersections(v: IntersectionVector) -> ValidationReport:
    """Check whether an intersection vector is realized by a multicurve.

    Runs the realizability conditions in a fixed order (nonnegativity,
    parity, genus counts, region equalities, triangle bounds, twist/copy
    consistency, boundary-parallel exclusion, non-emptiness) and reports
    every violation that can be evaluated; checks whose prerequisites already
    failed (for example region equalities when the loop count is not an
    integer) are skipped rather than reported as noise.
    """
    n, alpha, beta, gamma, c = v.n, v.alpha, v.beta, v.gamma, v.c
    cp = v.cplus
    bad: list[Violation] = []

    # (1) nonnegativity
    for i, x in enumerate(alpha, start=1):
        if x < 0:
            bad.append(Violation(NONNEGATIVITY, f"alpha[{i}] = {x} is negative"))
    for i, x in enumerate(beta, start=1):
        if x < 0:
            bad.append(Violation(NONNEGATIVITY, f"beta[{i}] = {x} is negative"))
    if gamma < 0:
        bad.append(Violation(NONNEGATIVITY, f"gamma = {gamma} is negative"))

    # (2) parity
    beta_even = [True] * n
    for i in range(n):
        diff = beta[i] - beta[i + 1]
        if diff % 2:
            beta_even[i] = False
            bad.append(
                Violation(PARITY, f"beta[{i + 1}] - beta[{i + 2}] = {diff} is odd")
            )
        pair = alpha[2 * i] + alpha[2 * i + 1] - cp
        if pair % 2:
            bad.append(
                Violation(
                    PARITY,
                    f"alpha[{2 * i + 1}] + alpha[{2 * i + 2}] - c_plus = {pair} is odd",
                )
            )

    # (3) genus counts
    front_num = beta[n] - cp
    back_num = beta[0] - cp
    genus_ok = True
    if front_num % 2 or front_num < 0:
        genus_ok = False
        bad.append(
            Violation(
                GENUS_COUNT,
                f"front genus count (beta[{n + 1}] - c_plus)/2 = {front_num}/2 "
                "is not a nonnegative integer",
            )
        )
    if back_num % 2 or back_num < 0:
        genus_ok = False
        bad.append(
            Violation(
                GENUS_COUNT,
                f"back genus count (beta[1] - c_plus)/2 = {back_num}/2 "
                "is not a nonnegative integer",
            )
        )

    # (4) region equalities, per loop side
    regions_ok = all(beta_even)
    for i in range(n):
        if not beta_even[i]:
            continue
        b = (beta[i] - beta[i + 1]) // 2
        pair = alpha[2 * i] + alpha[2 * i + 1]
        arcs = f"alpha[{2 * i + 1}] + alpha[{2 * i + 2}] = {pair}"
        if b < 0 and pair != beta[i + 1]:
            regions_ok = False
            bad.append(
                Violation(
                    REGION_EQUALITY,
                    f"{arcs} must equal beta[{i + 2}] = {beta[i + 1]} (left loops)",
                )
            )
        elif b > 0 and pair != beta[i]:
            regions_ok = False
            bad.append(
                Violation(
                    REGION_EQUALITY,
                    f"{arcs} must equal beta[{i + 1}] = {beta[i]} (right loops)",
                )
            )
        elif b == 0 and pair != beta[i]:
            regions_ok = False
            bad.append(
                Violation(
                    REGION_EQUALITY,
                    f"{arcs} must equal beta[{i + 1}] = {beta[i]} (no loops)",
                )
            )

    # (5) triangle bounds: above/below counts must be nonnegative
    minima: list[int] = []
    for i in range(n):
        if not beta_even[i]:
            continue
        b = (beta[i] - beta[i + 1]) // 2
        above = alpha[2 * i] - abs(b)
        below = alpha[2 * i + 1] - abs(b)
        if above < 0:
            regions_ok = False
            bad.append(
                Violation(
                    TRIANGLE,
                    f"above count alpha[{2 * i + 1}] - |b_{i + 1}| = {above} is negative",
                )
            )
        if below < 0:
            regions_ok = False
            bad.append(
                Violation(
                    TRIANGLE,
                    f"below count alpha[{2 * i + 2}] - |b_{i + 1}| = {below} is negative",
                )
            )
        minima.append(min(above, below))

    # (6) twist / copy consistency with gamma
    if genus_ok:
        residue = gamma - front_num // 2 - back_num // 2
        if c > 0:
            if residue < 0:
                bad.append(
                    Violation(
                        TWIST_CONSISTENCY,
                        f"total twist gamma - (front + back genus) = {residue} "
                        "is negative",
                    )
                )
        elif residue != -c:
            bad.append(
                Violation(
                    COPY_CONSISTENCY,
                    f"gamma - (front + back genus) = {residue} does not match "
                    f"the declared {-c} copies of the core curve",
                )
            )

    # (7) boundary-parallel exclusion
    if genus_ok and regions_ok and len(minima) == n:
        floor = min(min(minima), front_num // 2, back_num // 2)
        if floor > 0:
            bad.append(
                Violation(
                    BOUNDARY_PARALLEL,
                    f"min of region floors and genus counts is {floor} > 0: "
                    "the vector contains a curve parallel to the boundary",
                )
            )

    # (8) non-emptiness
    if not any(alpha) and not any(beta) and gamma == 0 and c == 0:
        bad.append(
            Violation(NON_EMPTINESS, "all intersection numbers vanish (empty multicurve)")
        )

    return ValidationReport(valid=not bad, violations=tuple(bad))


def _require_valid(v: IntersectionVector) -> None:
    report = validate_intersections(v)
    if not report.valid:
        raise InvalidVectorError(report)


def _twist_magnitude(v: IntersectionVector) -> int:
    cp = v.cplus
    if cp == 0:
        return 0
    return v.gamma - (v.beta[v.n] - cp) // 2 - (v.beta[0] - cp) // 2


def total_twist(v: IntersectionVector) -> int:
    """Unsigned total twist of a valid vector: how often the twisting strands
    cross the handle arc in excess of the genus arcs."""
    _require_valid(v)
    return _twist_magnitude(v)


def _check_twist_sign(magnitude: int, c: int, twist_sign: int) -> None:
    if twist_sign not in (-1, 0, 1):
        raise TwistSignError(f"twist sign must be -1, 0 or +1, got {twist_sign}")
    if c <= 0 or magnitude == 0:
        if twist_sign != 0:
            raise TwistSignError(
                f"twist sign must be 0 when there is no twist (|T| = {magnitude}, c = {c})"
            )
    elif twist_sign == 0:
        raise TwistSignError(
            f"nonzero total twist {magnitude} needs an explicit direction"
        )


def coordinates_from_intersections(
    v: IntersectionVector, twist_sign: int
) -> DynnikovCoordinates:
    """Encode a valid intersection vector as coordinates.

    ``twist_sign`` supplies the winding direction that crossing counts cannot
    see; it must be 0 exactly when the vector carries no net twist.
    """
    _require_valid(v)
    magnitude = _twist_magnitude(v)
    _check_twist_sign(magnitude, v.c, twist_sign)
    cp = v.cplus
    a = tuple((v.alpha[2 * i + 1] - v.alpha[2 * i] - cp) // 2 for i in range(v.n))
    b = tuple((v.beta[i] - v.beta[i + 1]) // 2 for i in range(v.n))
    return DynnikovCoordinates(v.n, a, b, twist_sign * magnitude, v.c)


def genus_beta_floor(d: DynnikovCoordinates) -> int:
    """Smallest crossing count the puncture regions force on the arc bounding
    the handle region (the max of the per-region lower bounds)."""
    cp = d.cplus
    suffix = 0
    best: int | None = None
    for k in reversed(range(d.n)):
        suffix += d.b[k]
        need = 2 * max(d.b[k], 0) + abs(2 * d.a[k] + cp) - 2 * suffix
        if best is None or need > best:
            best = need
    assert best is not None
    return best


def intersections_from_coordinates(d: DynnikovCoordinates) -> IntersectionVector:
    """Reconstruct the intersection vector of the unique multicurve with the
    given coordinates."""
    n = d.n
    cp = d.cplus
    total_b = sum(d.b)
    last = max(cp, cp - 2 * total_b, genus_beta_floor(d))

    beta = [0] * (n + 1)
    beta[n] = last
    run = last
    for i in reversed(range(n)):
        run += 2 * d.b[i]
        beta[i] = run

    alpha: list[int] = []
    for i in range(n):
        base = beta[i] if d.b[i] >= 0 else beta[i + 1]
        # both branches agree when there are no loops in the region
        assert d.b[i] != 0 or beta[i] == beta[i + 1]
        alpha.append(_half(-2 * d.a[i] - cp + base))
        alpha.append(_half(2 * d.a[i] + cp + base))

    magnitude = abs(d.T) if d.c > 0 else -d.c
    gamma = magnitude + total_b + last - cp
    return IntersectionVector(n, tuple(alpha), tuple(beta), gamma, d.c)


def twist_split(total: int, count: int) -> TwistSplit:
    """Distribute ``total`` twists over ``count`` strands.

    Twist numbers of disjoint strands can differ by at most one, so the
    split is unique once ``m`` is taken as the least nonnegative residue of
    ``total`` modulo ``count``.
    """
    _check_int(total, "total twist")
    _check_int(count, "twisting strand count")
    if total < 0 or count < 0:
        raise ShapeError(f"twist split arguments must be nonnegative, got {total}, {count}")
    if count == 0:
        if total:
            raise CensusError(f"cannot distribute {total} twists over zero strands")
        return TwistSplit(0, 0)
    m = total % count
    return TwistSplit((total - m) // count, m)


def decompose(v: IntersectionVector, twist_sign: int) -> Decomposition:
    """Break a valid intersection vector into its component census."""
    _require_valid(v)
    magnitude = _twist_magnitude(v)
    _check_twist_sign(magnitude, v.c, twist_sign)
    cp = v.cplus
    loops = tuple((v.beta[i] - v.beta[i + 1]) // 2 for i in range(v.n))
    above = tuple(v.alpha[2 * i] - abs(loops[i]) for i in range(v.n))
    below = tuple(v.alpha[2 * i + 1] - abs(loops[i]) for i in range(v.n))
    return Decomposition(
        n=v.n,
        above=above,
        below=below,
        loops=loops,
        front_genus=(v.beta[v.n] - cp) // 2,
        back_genus=(v.beta[0] - cp) // 2,
        c_copies=-v.c if v.c < 0 else 0,
        twisting_count=cp,
        twist_sign=twist_sign,
        twist_split=twist_split(magnitude, cp),
    )


def coordinates_from_decomposition(d: Decomposition) -> DynnikovCoordinates:
    """Read coordinates straight off a census, without reconstructing the
    full intersection vector."""
    cp = d.twisting_count
    a = []
    for i in range(d.n):
        diff = d.below[i] - d.above[i] - cp
        if diff % 2:
            raise CensusError(
                f"region {i + 1}: below - above - twisting_count = {diff} is odd; "
                "no multicurve realizes this census"
            )
        a.append(diff // 2)
    return DynnikovCoordinates(
        d.n,
        tuple(a),
        d.loops,
        d.twist_sign * d.total_twist,
        cp if cp > 0 else -d.c_copies,
    )
