"""Command-line interface: ``fglmcodes {gb,decode,info,verify} CODE_FILE ...``

Exit status is 0 on success, 1 when verification fails and 2 for usage,
parse or validation errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from .code import BinaryCode, CodeFormatError, GuardExceeded, UndefinedDistanceError, read_code
from .decoder import OrderingNotDegreeCompatible, decode
from .fglm import FglmResult, run_fglm
from .gf2 import BitVector
from .monomials import TermOrdering
from .oracle import Report, verify_decoding, verify_gb, verify_t, MAX_DECODE_LENGTH

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

OUTPUTS = ("gb", "border", "matphi", "normal-set", "all")


class UsageError(Exception):
    pass


def format_gb(result: FglmResult) -> list[str]:
    return [str(b) for b in result.gb]


def format_border(result: FglmResult) -> list[str]:
    return [str(b) for b in result.border or []]


def format_normal_set(result: FglmResult) -> list[str]:
    return [str(m) for m in result.normal_set]


def format_matphi(result: FglmResult) -> list[str]:
    # one line per variable: the 1-based image index of every normal monomial
    return [" ".join(str(j + 1) for j in t) for t in result.matphi.tables]


def cmd_gb(code: BinaryCode, ordering: TermOrdering, output: str) -> str:
    result = run_fglm(code, ordering)
    sections = {
        "normal-set": format_normal_set,
        "gb": format_gb,
        "border": format_border,
        "matphi": format_matphi,
    }
    if output != "all":
        lines = sections[output](result)
    else:
        lines = []
        for name in ("normal-set", "gb", "border", "matphi"):
            lines.append(f"# {name}")
            lines.extend(sections[name](result))
    return "\n".join(lines) + "\n"


def cmd_decode(code: BinaryCode, ordering: TermOrdering, vector: str,
               engine: str = "matphi") -> str:
    try:
        y = BitVector.from_string(vector)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if y.n != code.n:
        raise UsageError(f"received vector has length {y.n}, code length is {code.n}")
    result = run_fglm(code, ordering, want_border=False)
    res = decode(y, result, engine=engine)
    lines = [f"syndrome={res.syndrome.to_string()}"]
    if res.decoded:
        lines.append(f"error={res.error.to_string()}")
        lines.append(f"codeword={res.codeword.to_string()}")
    else:
        lines.append(f"error=TOO_MANY_ERRORS(w={res.canonical_weight})")
    return "\n".join(lines) + "\n"


def cmd_info(code: BinaryCode, ordering: TermOrdering) -> str:
    result = run_fglm(code, ordering, want_matphi=False, want_border=False)
    try:
        d, t = str(code.min_distance()), str(code.error_capability())
    except UndefinedDistanceError:
        d = t = "undefined"
    t_det = "none" if result.t_detected is None else str(result.t_detected)
    return f"n={code.n} k={code.k} d={d} t={t} t_detected={t_det}\n"


def cmd_verify(code: BinaryCode, ordering: TermOrdering) -> tuple[Report, str]:
    if code.n > MAX_DECODE_LENGTH:
        raise GuardExceeded(f"verify needs n <= {MAX_DECODE_LENGTH}, got n={code.n}")
    result = run_fglm(code, ordering, debug=True)
    report = verify_gb(result)
    for e in result.step4_disagreements:
        report.add(f"step-4 counter test disagrees with divisibility at {e.term}")
    if ordering.degree_compatible:
        report.extend(verify_t(result))
        report.extend(verify_decoding(code, result))
    return report, str(report) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fglmcodes",
        description="Groebner bases and syndrome decoding for binary linear codes.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("code", help="code file: header 'n r' then n rows of r bits")
    common.add_argument("--ordering", default="degrevlex",
                        choices=[o.value for o in TermOrdering])
    common.add_argument("--transposed", action="store_true",
                        help="file body holds the r x n matrix instead")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", parents=[common], help="print Groebner structures")
    p.add_argument("--output", choices=OUTPUTS, default="gb")
    p = sub.add_parser("decode", parents=[common], help="decode a received vector")
    p.add_argument("vector", help="received word as a bit string, e.g. 111010")
    p.add_argument("--engine", choices=("matphi", "gb"), default="matphi")
    sub.add_parser("info", parents=[common], help="code parameters")
    sub.add_parser("verify", parents=[common], help="check everything against brute force")
    return parser


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
         stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    try:
        code = read_code(args.code, transposed=args.transposed)
        ordering = TermOrdering.parse(args.ordering)
        if args.command == "gb":
            stdout.write(cmd_gb(code, ordering, args.output))
        elif args.command == "decode":
            stdout.write(cmd_decode(code, ordering, args.vector, args.engine))
        elif args.command == "info":
            stdout.write(cmd_info(code, ordering))
        else:
            report, text = cmd_verify(code, ordering)
            stdout.write(text)
            return EXIT_OK if report.passed else EXIT_FAIL
    except (OSError, CodeFormatError, GuardExceeded, UsageError,
            OrderingNotDegreeCompatible, ValueError) as exc:
        stderr.write(f"fglmcodes {args.command}: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
