"""Command-line front end and the JSON wire format.

One subcommand per operation; single-line JSON objects in and out.  Exit
codes: 0 success, 1 malformed input, 2 semantic invalidity, 3 property
failure.  When the exit code is nonzero nothing is written to stdout; the
error report goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .core import (
    Decomposition,
    DynnikovCoordinates,
    IntersectionVector,
    TwistSplit,
    ValidationReport,
    _sign,
    coordinates_from_decomposition,
    coordinates_from_intersections,
    decompose,
    intersections_from_coordinates,
    validate_intersections,
)
from .errors import InvalidVectorError, LaminationError, ShapeError
from .oracle import GeneratorConfig, enumerate_small, oracle_intersections, random_census
from .render import render_ascii, render_svg
from .roundtrip import run_suite

# inputs larger than this are refused up front so downstream sums stay tame
VALUE_BOUND = 1 << 40

_SIGN_HELP = (
    "twist direction: -1 clockwise, +1 counterclockwise, 0 when there is no "
    "net twist (the default; an actual twist then makes the command fail "
    "rather than guess a direction)"
)
_C_HELP = (
    "Signed convention: c<0 means |c| parallel copies of the curve c; "
    "c>0 means c twisting components."
)


class ParseError(ValueError):
    """Malformed wire input (exit code 1)."""


# ---------------------------------------------------------------------------
# wire format


def _as_int(obj, where: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise ParseError(f"{where} must be an integer")
    if abs(obj) > VALUE_BOUND:
        raise ParseError(f"{where} exceeds the input bound 2^40")
    return obj


def _as_int_list(obj, where: str, length: int) -> tuple[int, ...]:
    if not isinstance(obj, list) or len(obj) != length:
        raise ParseError(f"{where} must be a list of {length} integers")
    return tuple(_as_int(x, f"{where}[{i}]") for i, x in enumerate(obj))


def _load_object(text: str, keys: tuple[str, ...], what: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError(f"{what} must be a JSON object")
    if set(obj) != set(keys):
        raise ParseError(f"{what} must have exactly the keys {', '.join(keys)}")
    return obj


def _parse_n(obj) -> int:
    n = _as_int(obj, "n")
    if n < 2:
        raise ParseError(f"n must be at least 2, got {n}")
    return n


def parse_intersections(text: str) -> IntersectionVector:
    obj = _load_object(text, ("n", "alpha", "beta", "gamma", "c"), "intersection vector")
    n = _parse_n(obj["n"])
    return IntersectionVector(
        n,
        _as_int_list(obj["alpha"], "alpha", 2 * n),
        _as_int_list(obj["beta"], "beta", n + 1),
        _as_int(obj["gamma"], "gamma"),
        _as_int(obj["c"], "c"),
    )


def parse_coordinates(text: str) -> DynnikovCoordinates:
    obj = _load_object(text, ("n", "a", "b", "T", "c"), "coordinate vector")
    n = _parse_n(obj["n"])
    return DynnikovCoordinates(
        n,
        _as_int_list(obj["a"], "a", n),
        _as_int_list(obj["b"], "b", n),
        _as_int(obj["T"], "T"),
        _as_int(obj["c"], "c"),
    )


_CENSUS_KEYS = (
    "n", "above", "below", "loops", "front_genus", "back_genus",
    "c_copies", "twisting_count", "twist_sign", "twist_split",
)


def parse_census(text: str) -> Decomposition:
    obj = _load_object(text, _CENSUS_KEYS, "census")
    n = _parse_n(obj["n"])
    split = obj["twist_split"]
    if not isinstance(split, dict) or set(split) != {"t", "m"}:
        raise ParseError("twist_split must be an object with exactly the keys t, m")
    for key in ("front_genus", "back_genus", "c_copies", "twisting_count"):
        if _as_int(obj[key], key) < 0:
            raise ParseError(f"{key} must be nonnegative")
    t = _as_int(split["t"], "twist_split.t")
    m = _as_int(split["m"], "twist_split.m")
    if t < 0 or m < 0:
        raise ParseError("twist_split entries must be nonnegative")
    above = _as_int_list(obj["above"], "above", n)
    below = _as_int_list(obj["below"], "below", n)
    if any(x < 0 for x in above) or any(x < 0 for x in below):
        raise ParseError("above/below counts must be nonnegative")
    sign = _as_int(obj["twist_sign"], "twist_sign")
    if sign not in (-1, 0, 1):
        raise ParseError("twist_sign must be -1, 0 or 1")
    return Decomposition(
        n=n,
        above=above,
        below=below,
        loops=_as_int_list(obj["loops"], "loops", n),
        front_genus=obj["front_genus"],
        back_genus=obj["back_genus"],
        c_copies=obj["c_copies"],
        twisting_count=obj["twisting_count"],
        twist_sign=sign,
        twist_split=TwistSplit(t, m),
    )


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _intersections_dict(v: IntersectionVector) -> dict:
    return {"n": v.n, "alpha": list(v.alpha), "beta": list(v.beta),
            "gamma": v.gamma, "c": v.c}


def _coordinates_dict(d: DynnikovCoordinates) -> dict:
    return {"n": d.n, "a": list(d.a), "b": list(d.b), "T": d.T, "c": d.c}


def _census_dict(d: Decomposition) -> dict:
    return {
        "n": d.n,
        "above": list(d.above),
        "below": list(d.below),
        "loops": list(d.loops),
        "front_genus": d.front_genus,
        "back_genus": d.back_genus,
        "c_copies": d.c_copies,
        "twisting_count": d.twisting_count,
        "twist_sign": d.twist_sign,
        "twist_split": {"t": d.twist_split.t, "m": d.twist_split.m},
    }


def intersections_json(v: IntersectionVector) -> str:
    return _dumps(_intersections_dict(v))


def coordinates_json(d: DynnikovCoordinates) -> str:
    return _dumps(_coordinates_dict(d))


def census_json(d: Decomposition) -> str:
    return _dumps(_census_dict(d))


def report_json(report: ValidationReport) -> str:
    return _dumps({
        "valid": report.valid,
        "violations": [
            {"condition": v.condition, "detail": v.detail} for v in report.violations
        ],
    })


# ---------------------------------------------------------------------------
# commands


def _read_input(args) -> str:
    given = getattr(args, "payload", None)
    if given is not None and args.infile is not None:
        raise ParseError("pass the input either inline or via --in, not both")
    if given is not None:
        return given
    if args.infile is not None:
        try:
            with open(args.infile, encoding="utf-8") as handle:
                return handle.read()
        except OSError as exc:
            raise ParseError(f"cannot read {args.infile}: {exc}") from None
    return sys.stdin.read()


def _emit(args, text: str) -> None:
    out = getattr(args, "outfile", None)
    if text and not text.endswith("\n"):
        text += "\n"
    if out is not None:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_encode(args) -> int:
    vector = parse_intersections(_read_input(args))
    _emit(args, coordinates_json(coordinates_from_intersections(vector, args.sign)))
    return 0


def _cmd_decode(args) -> int:
    coords = parse_coordinates(_read_input(args))
    _emit(args, intersections_json(intersections_from_coordinates(coords)))
    return 0


def _cmd_decompose(args) -> int:
    vector = parse_intersections(_read_input(args))
    _emit(args, census_json(decompose(vector, args.sign)))
    return 0


def _cmd_validate(args) -> int:
    vector = parse_intersections(_read_input(args))
    report = validate_intersections(vector)
    if report.valid:
        _emit(args, report_json(report))
        return 0
    print(report_json(report), file=sys.stderr)
    return 2


def _cmd_random(args) -> int:
    cfg = GeneratorConfig(n=args.n, max_count=args.max_count, seed=args.seed)
    census = random_census(cfg)
    _emit(args, _dumps({
        "census": _census_dict(census),
        "intersections": _intersections_dict(oracle_intersections(census)),
        "coordinates": _coordinates_dict(coordinates_from_decomposition(census)),
    }))
    return 0


def _cmd_enumerate(args) -> int:
    lines = [census_json(census) for census in enumerate_small(args.n, args.cap)]
    _emit(args, "\n".join(lines) + "\n" if lines else "")
    return 0


def _cmd_render(args) -> int:
    text = _read_input(args)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("render input must be a JSON object")
    if "above" in obj:
        census = parse_census(text)
    elif "a" in obj:
        coords = parse_coordinates(text)
        census = decompose(intersections_from_coordinates(coords), _sign(coords.T))
    else:
        raise ParseError("render input must be a census or a coordinate vector")
    _emit(args, render_svg(census) if args.format == "svg" else render_ascii(census))
    return 0


def _cmd_roundtrip(args) -> int:
    failure = run_suite(args.n, args.seed, args.trials)
    if failure is None:
        _emit(args, _dumps({"n": args.n, "seed": args.seed,
                            "trials": args.trials, "failures": 0}))
        return 0
    print(f"property failure: {failure.name}: {failure.detail}", file=sys.stderr)
    print(f"counterexample: {coordinates_json(failure.coords)}", file=sys.stderr)
    return 3


def _add_io(sub, payload_help: str) -> None:
    sub.add_argument("payload", nargs="?", help=payload_help + " (default: stdin)")
    sub.add_argument("--in", dest="infile", metavar="PATH",
                     help="read the input from a file instead")
    sub.add_argument("--out", dest="outfile", metavar="PATH",
                     help="write the result to a file instead of stdout")


def _add_sign(sub) -> None:
    sub.add_argument("--sign", type=int, choices=(-1, 0, 1), default=0,
                     help=_SIGN_HELP)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyntorus",
        description="Coordinates for multicurves on a once-holed torus with "
                    "n punctures. " + _C_HELP,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="intersection vector to coordinates")
    _add_io(p, "intersection vector JSON")
    _add_sign(p)
    p.set_defaults(handler=_cmd_encode)

    p = sub.add_parser("decode", help="coordinates to intersection vector")
    _add_io(p, "coordinate vector JSON")
    p.set_defaults(handler=_cmd_decode)

    p = sub.add_parser("decompose", help="intersection vector to component census")
    _add_io(p, "intersection vector JSON")
    _add_sign(p)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("validate", help="check an intersection vector; exit 2 if invalid")
    _add_io(p, "intersection vector JSON")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("random", help="draw a seeded random census")
    p.add_argument("--n", type=int, required=True, help="puncture count (>= 2)")
    p.add_argument("--seed", type=int, default=0, help="generator seed")
    p.add_argument("--max-count", type=int, default=6, help="cap per drawn census field")
    p.add_argument("--out", dest="outfile", metavar="PATH")
    p.set_defaults(handler=_cmd_random)

    p = sub.add_parser("enumerate", help="list every census with fields up to a cap")
    p.add_argument("--n", type=int, required=True, help="puncture count (>= 2)")
    p.add_argument("--cap", type=int, required=True, help="census field cap")
    p.add_argument("--out", dest="outfile", metavar="PATH")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("render", help="draw a census (or coordinates) as text or SVG")
    _add_io(p, "census or coordinate vector JSON")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.set_defaults(handler=_cmd_render)

    p = sub.add_parser("roundtrip", help="run the property suites; exit 3 on failure")
    p.add_argument("--n", type=int, required=True, help="puncture count (>= 2)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--out", dest="outfile", metavar="PATH")
    p.set_defaults(handler=_cmd_roundtrip)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ShapeError as exc:
        # structural problems rank as malformed input, like the wire checks
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvalidVectorError as exc:
        print(report_json(exc.report), file=sys.stderr)
        return 2
    except LaminationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
