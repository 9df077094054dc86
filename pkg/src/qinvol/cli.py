"""Command-line front end: apply involution transforms to CSV rows.

Rows are ``x,y,z`` (vectors) or ``w,x,y,z`` (quaternions); blank lines and
lines starting with ``#`` are skipped. Data goes to --output (stdout by
default); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import math
import sys
from typing import Iterator, Sequence, TextIO

from .core import EPS_RECON, Quaternion, UnitVector3, Vector3
from .involutions import InvolutionAxis, complete_triad, compose_involutions, involute
from .laws import MIN_AXIS_ANGLE, run_all
from .projection import decompose, split

EXIT_OK = 0
EXIT_LAW_FAILURE = 1
EXIT_USAGE = 2

AXIS_TOLERANCE = 1e-6


class InputError(Exception):
    """Malformed input row; the message names the line number."""


class CheckFailure(Exception):
    pass


def parse_axis(text: str) -> UnitVector3:
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"axis must be X,Y,Z numbers, got {text!r}")
    if len(parts) != 3 or not all(math.isfinite(p) for p in parts):
        raise argparse.ArgumentTypeError(f"axis must be three finite numbers, got {text!r}")
    try:
        return UnitVector3.normalize(Vector3(*parts), tol=AXIS_TOLERANCE)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"axis {text!r} is not a unit vector: {exc}")


def read_rows(stream: TextIO, width: int) -> Iterator[tuple[float, ...]]:
    for lineno, line in enumerate(stream, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split(",")
        if len(fields) != width:
            raise InputError(f"line {lineno}: expected {width} fields, got {len(fields)}")
        try:
            row = tuple(float(f) for f in fields)
        except ValueError:
            raise InputError(f"line {lineno}: not a number in {line!r}")
        if not all(math.isfinite(v) for v in row):
            raise InputError(f"line {lineno}: non-finite value in {line!r}")
        yield row


def fmt(values: Sequence[float]) -> str:
    # repr of a float is the shortest string that round-trips
    return ",".join(repr(float(v)) for v in values)


def _width(kind: str) -> int:
    return 3 if kind == "vector" else 4


def cmd_involute(rows, axis: UnitVector3, kind: str) -> Iterator[tuple[float, ...]]:
    nu = InvolutionAxis(axis)
    for row in rows:
        if kind == "vector":
            yield involute(Vector3(*row), nu).as_tuple()
        else:
            yield involute(Quaternion(*row), nu).as_tuple()


def rotation_of(axis_a: UnitVector3, axis_b: UnitVector3) -> tuple[Vector3, float, float]:
    """Rotation axis, rotation angle and axis separation for two involutions."""
    c = axis_a.direction.cross(axis_b.direction)
    s = c.length()
    theta = math.atan2(s, axis_a.direction.dot(axis_b.direction))
    axis = c / s if s > 0 else Vector3()
    return axis, 2 * theta, theta


def cmd_rotate(rows, axis_a: UnitVector3, axis_b: UnitVector3) -> Iterator[tuple[float, ...]]:
    for row in rows:
        yield compose_involutions(Vector3(*row), axis_a, axis_b).as_tuple()


def cmd_project(rows, axis: UnitVector3) -> Iterator[tuple[float, ...]]:
    for row in rows:
        s = split(Vector3(*row), axis)
        yield s.parallel.as_tuple() + s.perpendicular.as_tuple()


def cmd_decompose(rows, seed_axis: UnitVector3, check: bool = False):
    """Yield (a, alpha, beta, gamma) rows.

    With ``check`` set, raises CheckFailure at the first row whose
    reconstruction misses the input by more than EPS_RECON.
    """
    triad = complete_triad(seed_axis)
    for lineno, row in enumerate(rows, 1):
        q = Quaternion(*row)
        d = decompose(q, triad)
        if check:
            err = max(abs(p - r) for p, r in zip(d.reconstruct(), q))
            if err > EPS_RECON:
                raise CheckFailure(f"row {lineno}: reconstruction error {err!r}")
        yield d.coefficients


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qinvol", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def io_args(p):
        p.add_argument("--input", default="-", help="input CSV path (default: stdin)")
        p.add_argument("--output", default="-", help="output CSV path (default: stdout)")

    p = sub.add_parser("involute", help="apply q -> -nu q nu to every row")
    p.add_argument("--axis", type=parse_axis, required=True)
    p.add_argument("--kind", choices=("vector", "quaternion"), default="quaternion")
    io_args(p)

    p = sub.add_parser("rotate", help="involute about --axis then --axis-b")
    p.add_argument("--axis", type=parse_axis, required=True)
    p.add_argument("--axis-b", type=parse_axis, required=True)
    io_args(p)

    p = sub.add_parser("project", help="split vectors along/across an axis")
    p.add_argument("--axis", type=parse_axis, required=True)
    io_args(p)

    p = sub.add_parser("decompose", help="coefficients on a triad grown from --axis")
    p.add_argument("--axis", type=parse_axis, default=UnitVector3.of(1, 0, 0))
    p.add_argument("--check", action="store_true", help="verify reconstruction per row")
    io_args(p)

    p = sub.add_parser("verify", help="run the randomized law suite")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    return parser


def _open_in(path: str):
    return contextlib.nullcontext(sys.stdin) if path == "-" else open(path, newline="")


def _open_out(path: str):
    return contextlib.nullcontext(sys.stdout) if path == "-" else open(path, "w", newline="")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    err = sys.stderr

    if args.command == "verify":
        if args.trials < 1:
            parser.error("--trials must be at least 1")
        report = run_all(args.trials, args.seed)
        out = sys.stdout
        for line in report.lines():
            print(line, file=out)
        print("ALL LAWS PASS" if report.passed else "LAW VERIFICATION FAILED", file=out)
        return EXIT_OK if report.passed else EXIT_LAW_FAILURE

    header: list[str] = []
    if args.command == "involute":
        width = _width(args.kind)
        make = lambda rows: cmd_involute(rows, args.axis, args.kind)  # noqa: E731
    elif args.command == "rotate":
        width = 3
        axis, angle, theta = rotation_of(args.axis, args.axis_b)
        if theta < MIN_AXIS_ANGLE:
            print(f"warning: axes are nearly parallel (angle {theta!r} rad); "
                  "rotation is close to the identity", file=err)
        else:
            print(f"rotation axis: {fmt(axis)}", file=err)
        print(f"rotation angle: {angle!r}", file=err)
        make = lambda rows: cmd_rotate(rows, args.axis, args.axis_b)  # noqa: E731
    elif args.command == "project":
        width = 3
        make = lambda rows: cmd_project(rows, args.axis)  # noqa: E731
    else:
        width = 4
        t = complete_triad(args.axis)
        header = [f"# triad nu1={fmt(t.nu1)} nu2={fmt(t.nu2)} nu3={fmt(t.nu3)}",
                  "# a,alpha,beta,gamma"]
        print(header[0], file=err)
        make = lambda rows: cmd_decompose(rows, args.axis, args.check)  # noqa: E731

    try:
        src = _open_in(args.input)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=err)
        return EXIT_USAGE

    # materialize before writing so a bad row never leaves partial output
    try:
        with src as f:
            results = [fmt(r) for r in make(read_rows(f, width))]
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except CheckFailure as exc:
        print(f"check failed: {exc}", file=err)
        return EXIT_LAW_FAILURE

    try:
        dst = _open_out(args.output)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=err)
        return EXIT_USAGE
    with dst as f:
        for line in header + results:
            f.write(line + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
