"""Command-line interface.

Subcommands: canonicalize, equivalent, group, bases, puzzle, serve, selftest.
Configurations and matroids are passed as JSON (inline argument, or ``-`` to
read one JSON document from stdin); ``--json`` switches to machine-readable
output. Exit codes: 0 success, 1 validation or parse failure, 2 mathematical
failure (not totally unimodular, singular, failed selftest), 3 internal
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .engine import EngineError, dispatch, serve_http, serve_stdio
from .gaussint import GaussInt
from .selftest import run_checks

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_MATH = 2
EXIT_INTERNAL = 3

_EXIT_BY_CODE = {
    "parse": EXIT_VALIDATION,
    "validation": EXIT_VALIDATION,
    "unknown_op": EXIT_VALIDATION,
    "unsupported_size": EXIT_VALIDATION,
    "not_totally_unimodular": EXIT_MATH,
    "singular": EXIT_MATH,
    "internal": EXIT_INTERNAL,
}


def _read_json_arg(text: str, what: str) -> Any:
    if text == "-":
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise EngineError("parse", f"bad JSON for {what} at column {exc.colno}: {exc.msg}")


def _matroid_params(args: argparse.Namespace) -> dict[str, Any]:
    if args.preset is not None:
        return {"preset": args.preset}
    if args.matroid is None:
        raise EngineError("validation", "pass a matroid JSON argument or --preset")
    return {"matroid": _read_json_arg(args.matroid, "matroid")}


def _gauss_str(pair: list[int]) -> str:
    return str(GaussInt(pair[0], pair[1]))


def _print_certificate(cert: list[list[int]]) -> None:
    print("certificate (net A+Bi firings per node): "
          + "  ".join(_gauss_str(pair) for pair in cert))


def cmd_canonicalize(args: argparse.Namespace) -> int:
    result = dispatch("canonicalize", {"config": _read_json_arg(args.config, "config")})
    if args.json:
        print(json.dumps(result))
    else:
        print("canonical:", tuple(result["canonical"]))
        _print_certificate(result["certificate"])
    return EXIT_OK


def cmd_equivalent(args: argparse.Namespace) -> int:
    result = dispatch("equivalent", {"a": _read_json_arg(args.a, "first config"),
                                     "b": _read_json_arg(args.b, "second config")})
    if args.json:
        print(json.dumps(result))
    elif result["equivalent"]:
        print("equivalent: yes")
        _print_certificate(result["certificate"])
    else:
        print("equivalent: no")
    return EXIT_OK


def cmd_group(args: argparse.Namespace) -> int:
    result = dispatch("group", _matroid_params(args))
    if args.json:
        print(json.dumps(result))
    else:
        factors = result["invariant_factors"]
        pretty = " + ".join(f"Z/{f}" for f in factors) if factors else "trivial"
        print(f"sandpile group: {pretty}")
        print(f"order: {result['order']}")
        print(f"invariant factors: {factors}")
    return EXIT_OK


def cmd_bases(args: argparse.Namespace) -> int:
    result = dispatch("bases", _matroid_params(args))
    if args.json:
        print(json.dumps(result))
    else:
        print(f"bases: {result['count']}")
        for basis in result["bases"]:
            print(" ", tuple(basis))
    return EXIT_OK


def cmd_puzzle(args: argparse.Namespace) -> int:
    params: dict[str, Any] = {"difficulty": args.difficulty}
    if args.seed is not None:
        params["seed"] = args.seed
    result = dispatch("puzzle", params)
    if args.json:
        print(json.dumps(result))
    else:
        print("config:", "  ".join(_gauss_str(pair) for pair in result["config"]))
        print(f"seed: {result['seed']}  difficulty: {result['difficulty']}  "
              f"prng: {result['prng']}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    if args.http is not None:
        return serve_http(args.http)
    return serve_stdio()


def cmd_selftest(args: argparse.Namespace) -> int:
    results = run_checks()
    for r in results:
        status = "ok  " if r.ok else "FAIL"
        print(f"[{status}] {r.name:<28s} {r.detail}  ({r.seconds:.2f}s)")
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_OK if not failed else EXIT_MATH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentachip",
        description="Exact chip-firing engine for the pentagon game on R10.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json_flag(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("canonicalize", help="canonical representative of a configuration")
    p.add_argument("config", help='configuration JSON [[re,im],...x5], or - for stdin')
    add_json_flag(p)
    p.set_defaults(func=cmd_canonicalize)

    p = sub.add_parser("equivalent", help="decide firing equivalence of two configurations")
    p.add_argument("a", help="first configuration JSON")
    p.add_argument("b", help="second configuration JSON")
    add_json_flag(p)
    p.set_defaults(func=cmd_equivalent)

    for name, func, help_text in (
            ("group", cmd_group, "sandpile group of a matroid"),
            ("bases", cmd_bases, "enumerate the bases of a matroid")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("matroid", nargs="?",
                       help='matroid JSON {"r":..,"n":..,"D":[[..]]}, or - for stdin')
        p.add_argument("--preset", choices=["r10"], help="use a built-in matroid")
        add_json_flag(p)
        p.set_defaults(func=func)

    p = sub.add_parser("puzzle", help="generate a solvable scrambled configuration")
    p.add_argument("--seed", type=int, help="unsigned 64-bit seed (random if omitted)")
    p.add_argument("--difficulty", type=int, default=10, help="number of scrambling firings")
    add_json_flag(p)
    p.set_defaults(func=cmd_puzzle)

    p = sub.add_parser("serve", help="JSON-lines request loop on stdin/stdout")
    p.add_argument("--http", type=int, metavar="PORT",
                   help="serve the same schema over HTTP at POST /rpc instead of stdio")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("selftest", help="run the built-in verification suite")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EngineError as exc:
        print(f"error ({exc.code}): {exc.message}", file=sys.stderr)
        return _EXIT_BY_CODE.get(exc.code, EXIT_INTERNAL)
    except BrokenPipeError:
        return EXIT_OK
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
