"""Acceptance suite.

One test per criterion; each prints a PASS line when its assertions hold,
so ``pytest tests/test_acceptance.py -s`` gives one line per criterion.
Timing limits are asserted with ``time.perf_counter`` around the checked
operations only.
"""

import json
import random
import time
import xml.etree.ElementTree as ET

from dyntorus import (
    Decomposition,
    DynnikovCoordinates,
    GeneratorConfig,
    IntersectionVector,
    TwistSplit,
    coordinates_from_decomposition,
    coordinates_from_intersections,
    decompose,
    enumerate_small,
    genus_beta_floor,
    intersections_from_coordinates,
    oracle_intersections,
    random_census,
    validate_intersections,
)
from dyntorus.cli import run
from dyntorus.core import _sign

from conftest import (
    FIVE_TWIST_CENSUS,
    FIVE_TWIST_COORDS,
    FIVE_TWIST_VECTOR,
    ONE_TWIST_COORDS,
    ONE_TWIST_VECTOR,
    UNREALIZABLE_VECTOR,
)

BOUND = 6
TRIALS_PER_N = 10_000
N_RANGE = range(2, 7)


def _passed(number, text):
    print(f"\nACCEPTANCE {number}: PASS: {text}")


def _best_of(op, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        op()
        best = min(best, time.perf_counter() - start)
    return best


def _sample(rng, n):
    while True:
        a = tuple(rng.randint(-BOUND, BOUND) for _ in range(n))
        b = tuple(rng.randint(-BOUND, BOUND) for _ in range(n))
        c = rng.randint(-BOUND, BOUND)
        twist = rng.randint(-BOUND, BOUND) if c > 0 else 0
        if any(a) or any(b) or twist or c:
            return DynnikovCoordinates(n, a, b, twist, c)


def _population(n):
    rng = random.Random(1000 + n)
    for _ in range(TRIALS_PER_N):
        yield _sample(rng, n)


def test_criterion_1_encoding_regression():
    assert coordinates_from_intersections(ONE_TWIST_VECTOR, -1) == ONE_TWIST_COORDS
    elapsed = _best_of(lambda: coordinates_from_intersections(ONE_TWIST_VECTOR, -1))
    assert elapsed < 1e-3, f"encoding took {elapsed * 1e3:.3f} ms"
    _passed(1, "one-twist reference curve encodes to (-2,-1,-2; -1,0,1; -1; 1) in < 1 ms")


def test_criterion_2_decoding_regression():
    assert genus_beta_floor(FIVE_TWIST_COORDS) == 5
    vector = intersections_from_coordinates(FIVE_TWIST_COORDS)
    assert vector == FIVE_TWIST_VECTOR
    assert vector.beta == (3, 3, 5, 7)
    assert vector.alpha == (2, 1, 3, 2, 3, 4)
    assert vector.gamma == 7

    census = decompose(vector, -1)
    assert census == FIVE_TWIST_CENSUS
    assert census.front_genus == 2 and census.back_genus == 0
    assert census.loops == (0, -1, -1)
    assert census.above == (2, 2, 2) and census.below == (1, 1, 3)
    assert census.twisting_count == 3
    assert census.twist_split == TwistSplit(1, 2)

    elapsed = _best_of(
        lambda: decompose(intersections_from_coordinates(FIVE_TWIST_COORDS), -1)
    )
    assert elapsed < 1e-3, f"decode + decompose took {elapsed * 1e3:.3f} ms"
    _passed(2, "five-twist reference curve decodes (beta floor 5, beta_4=7) in < 1 ms")


def test_criterion_3_invalid_vector_regression():
    report = validate_intersections(UNREALIZABLE_VECTOR)
    assert not report.valid
    assert any(v.condition == "genus-count" for v in report.violations)
    _passed(3, "unrealizable vector is rejected with a genus-count violation")


def test_criterion_4_bijectivity_suite():
    start = time.perf_counter()
    checked = 0
    for n in N_RANGE:
        for coords in _population(n):
            vector = intersections_from_coordinates(coords)
            assert validate_intersections(vector).valid, (coords, vector)
            assert coordinates_from_intersections(vector, _sign(coords.T)) == coords
            checked += 1
    elapsed = time.perf_counter() - start
    assert checked == TRIALS_PER_N * len(N_RANGE)
    assert elapsed < 10.0, f"bijectivity suite took {elapsed:.1f} s"
    _passed(4, f"{checked} random vectors decode-encode to themselves in {elapsed:.1f} s")


def test_criterion_5_oracle_equivalence():
    start = time.perf_counter()
    checked = 0
    for n in (2, 3):
        for census in enumerate_small(n, 2):
            vector = oracle_intersections(census)
            assert vector == intersections_from_coordinates(
                coordinates_from_decomposition(census)
            ), census
            assert decompose(vector, census.twist_sign) == census
            checked += 1
    exhaustive = checked

    for n in N_RANGE:
        for trial in range(TRIALS_PER_N):
            census = random_census(
                GeneratorConfig(n=n, max_count=5, seed=n * 1_000_000 + trial)
            )
            vector = oracle_intersections(census)
            assert vector == intersections_from_coordinates(
                coordinates_from_decomposition(census)
            ), census
            assert decompose(vector, census.twist_sign) == census
            checked += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"oracle equivalence suite took {elapsed:.1f} s"
    _passed(
        5,
        f"oracle agrees on {exhaustive} exhaustive + "
        f"{checked - exhaustive} random censuses in {elapsed:.1f} s",
    )


def _doubled(census):
    return Decomposition(
        n=census.n,
        above=tuple(2 * x for x in census.above),
        below=tuple(2 * x for x in census.below),
        loops=tuple(2 * x for x in census.loops),
        front_genus=2 * census.front_genus,
        back_genus=2 * census.back_genus,
        c_copies=2 * census.c_copies,
        twisting_count=2 * census.twisting_count,
        twist_sign=census.twist_sign,
        twist_split=TwistSplit(census.twist_split.t, 2 * census.twist_split.m),
    )


def test_criterion_6_invariant_suite():
    checked = 0
    for n in N_RANGE:
        for coords in _population(n):
            vector = intersections_from_coordinates(coords)
            cp = coords.cplus
            for i in range(n):
                assert (vector.beta[i] - vector.beta[i + 1]) % 2 == 0
                assert (vector.alpha[2 * i] + vector.alpha[2 * i + 1] - cp) % 2 == 0

            census = decompose(vector, _sign(coords.T))
            assert census.c_copies * census.twisting_count == 0
            assert vector.beta[n] == cp + 2 * census.front_genus
            assert vector.beta[0] == cp + 2 * census.back_genus
            tail = census.c_copies if coords.c <= 0 else abs(coords.T)
            assert vector.gamma == census.front_genus + census.back_genus + tail
            assert census.total_twist == abs(coords.T)

            single = oracle_intersections(census)
            double = oracle_intersections(_doubled(census))
            assert double.alpha == tuple(2 * x for x in single.alpha)
            assert double.beta == tuple(2 * x for x in single.beta)
            assert double.gamma == 2 * single.gamma
            assert double.c == 2 * single.c
            checked += 1
    assert checked == TRIALS_PER_N * len(N_RANGE)
    _passed(6, f"parity/genus/gamma/exclusivity/split/scaling hold on {checked} samples")


def test_criterion_7_cli_contract(capsys):
    code = run([
        "encode",
        '{"n":3,"alpha":[4,1,3,2,4,1],"beta":[3,5,5,3],"gamma":3,"c":1}',
        "--sign", "-1",
    ])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out == '{"n":3,"a":[-2,-1,-2],"b":[-1,0,1],"T":-1,"c":1}\n'
    assert captured.err == ""

    code = run(["decode", '{"n":3,"a":[-2,-2,-1],"b":[0,-1,-1],"T":-5,"c":3}'])
    out = capsys.readouterr().out
    assert code == 0
    assert out == '{"n":3,"alpha":[2,1,3,2,3,4],"beta":[3,3,5,7],"gamma":7,"c":3}\n'

    code = run([
        "validate",
        '{"n":3,"alpha":[1,1,1,1,1,1],"beta":[0,2,0,2],"gamma":2,"c":1}',
    ])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.out == ""
    assert captured.err == (
        '{"valid":false,"violations":['
        '{"condition":"parity","detail":"alpha[1] + alpha[2] - c_plus = 1 is odd"},'
        '{"condition":"parity","detail":"alpha[3] + alpha[4] - c_plus = 1 is odd"},'
        '{"condition":"parity","detail":"alpha[5] + alpha[6] - c_plus = 1 is odd"},'
        '{"condition":"genus-count","detail":"front genus count (beta[4] - c_plus)/2'
        ' = 1/2 is not a nonnegative integer"},'
        '{"condition":"genus-count","detail":"back genus count (beta[1] - c_plus)/2'
        ' = -1/2 is not a nonnegative integer"}]}\n'
    )

    code = run([
        "render", "--format", "svg",
        '{"n":3,"above":[2,2,2],"below":[1,1,3],"loops":[0,-1,-1],'
        '"front_genus":2,"back_genus":0,"c_copies":0,"twisting_count":3,'
        '"twist_sign":-1,"twist_split":{"t":1,"m":2}}',
    ])
    svg = capsys.readouterr().out
    assert code == 0
    root = ET.fromstring(svg)
    strands = [e for e in root.iter() if e.get("class") == "strand twisting"]
    assert len(strands) == 3
    _passed(7, "CLI examples are byte-exact, exit codes match, SVG shows 3 twisting strands")
