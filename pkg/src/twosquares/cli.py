"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 factorization budget exhausted.
"""
from __future__ import annotations

import argparse
import sys
from typing import Iterable

from . import certificate as certio
from .certificate import CertificateFormatError, SequenceCertificate
from .families import consecutive_triple, quad_n124
from .littlewood import DegenerateOffsets, NonIntegralSolution, SingularParams, construct
from .ntcore import (
    BUDGET_ENV_VAR,
    FactorizationTimeout,
    default_budget,
    is_sum_of_two_squares,
    two_square_decompositions,
)
from .pell import iter_ap_certificates, iter_quint_certificates

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3


class _UsageError(Exception):
    pass


def _decimal(text: str) -> int:
    try:
        return int(text.strip(), 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None


def _positive(text: str) -> int:
    value = _decimal(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _emit(certs: Iterable[SequenceCertificate], args, out) -> int:
    for cert in certs:
        problems = list(cert.failures())
        if problems:
            print(f"internal verification failure: {problems[0]}", file=sys.stderr)
            return EXIT_VERIFY
        if args.json:
            out.write(certio.dumps(cert) + "\n")
        elif args.quiet:
            out.write(f"{cert.n}\n")
        else:
            out.write(cert.describe() + "\n")
        out.flush()
    return EXIT_OK


def _cmd_triple(args, out) -> int:
    try:
        cert = construct(args.h, args.k, args.p, args.q, args.r,
                         reduce_squares=args.reduce_squares)
    except DegenerateOffsets:
        raise _UsageError("offsets must be distinct and nonzero")
    except (SingularParams, NonIntegralSolution) as exc:
        raise _UsageError(str(exc))
    return _emit([cert], args, out)


def _cmd_consecutive(args, out) -> int:
    return _emit([consecutive_triple(args.p, args.q, args.r)], args, out)


def _cmd_quad(args, out) -> int:
    return _emit([quad_n124(args.m, args.r)], args, out)


def _take(it, count):
    for _, item in zip(range(count), it):
        yield item


def _cmd_quint(args, out) -> int:
    return _emit(_take(iter_quint_certificates(), args.count), args, out)


def _cmd_ap16(args, out) -> int:
    return _emit(_take(iter_ap_certificates(args.only_1_mod_18), args.count), args, out)


def _cmd_check(args, out) -> int:
    n = args.n
    if n < 0:
        raise _UsageError(f"n must be nonnegative, got {n}")
    try:
        if args.decompose:
            reps = two_square_decompositions(n, budget=args.budget)
            yes = bool(reps)
        else:
            yes = is_sum_of_two_squares(n, budget=args.budget)
            reps = []
    except FactorizationTimeout as exc:
        print(f"{exc}\nthe value is too hard to factor within the budget "
              f"(raise {BUDGET_ENV_VAR}); to check a claimed representation "
              f"use 'verify-cert' instead", file=sys.stderr)
        return EXIT_TIMEOUT
    if args.json:
        import json
        out.write(json.dumps({
            "n": str(n),
            "sum_of_two_squares": yes,
            "reps": [[str(r.a), str(r.b)] for r in reps],
        }) + "\n")
        return EXIT_OK
    out.write(f"{n} is {'a sum of two squares' if yes else 'not a sum of two squares'}\n")
    for rep in reps:
        out.write(f"  {n} = {rep.a}^2 + {rep.b}^2\n")
    return EXIT_OK


def _cmd_verify_cert(args, out) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {args.path}: {exc}")
    try:
        docs = certio.parse_stream(text)
        parsed = [(doc, certio.document_failures(doc)) for doc in docs]
    except CertificateFormatError as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for i, (doc, problems) in enumerate(parsed):
        if problems:
            print(f"certificate {i} (n = {doc['n']}) FAILED: {problems[0]}", file=sys.stderr)
            return EXIT_VERIFY
    if not args.quiet:
        out.write(f"OK: {len(parsed)} certificate(s) verified\n")
    return EXIT_OK


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output, one JSON document per line")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="minimal output")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="twosquares",
        description="Sequences of integers that are sums of two squares, with certificates.",
        parents=[_common()],
    )
    parser.set_defaults(json=False, quiet=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triple", parents=[common], help="n, n+h, n+k for any offsets h, k")
    for name in ("h", "k"):
        p.add_argument(f"--{name}", type=_decimal, required=True)
    for name in ("p", "q", "r"):
        p.add_argument(f"--{name}", type=_decimal, default=0)
    p.add_argument("--reduce-squares", action="store_true",
                   help="strip the largest common square of h and k, not just powers of 4")
    p.set_defaults(func=_cmd_triple)

    p = sub.add_parser("consecutive", parents=[common], help="n-1, n, n+1")
    for name in ("p", "q", "r"):
        p.add_argument(f"--{name}", type=_decimal, default=0)
    p.set_defaults(func=_cmd_consecutive)

    p = sub.add_parser("quad", parents=[common], help="n, n+1, n+2, n+4")
    for name in ("m", "r"):
        p.add_argument(f"--{name}", type=_decimal, default=0)
    p.set_defaults(func=_cmd_quad)

    p = sub.add_parser("quint", parents=[common], help="n, n+1, n+2, n+4, n+5 from beta^2 - 2 alpha^2 = -1")
    p.add_argument("--count", type=_positive, default=1)
    p.set_defaults(func=_cmd_quint)

    p = sub.add_parser("ap16", parents=[common], help="n, n+4, ..., n+16")
    p.add_argument("--count", type=_positive, default=1)
    p.add_argument("--only-1-mod-18", action="store_true",
                   help="only Pell indices 1 mod 18")
    p.set_defaults(func=_cmd_ap16)

    p = sub.add_parser("check", parents=[common], help="is n a sum of two squares?")
    p.add_argument("n", type=_decimal)
    p.add_argument("--decompose", action="store_true", help="list every representation")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verify-cert", parents=[common], help="verify a certificate file")
    p.add_argument("path")
    p.set_defaults(func=_cmd_verify_cert)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.budget = default_budget()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
