"""Request dispatch and the long-running serve loop.

The serve loop reads one JSON request per line on stdin and writes exactly
one JSON response per line on stdout, in request order. Per-request failures
(malformed JSON, unknown ops, bad parameters, mathematical failures) are
reported as error responses and never terminate the loop; EOF ends it
cleanly. An optional local HTTP binding exposes the same request schema at
POST /rpc for browser clients; the stdio form is the normative transport.

Error codes: ``parse`` (bad JSON), ``validation`` (bad shape/range),
``unknown_op``, ``not_totally_unimodular``, ``singular``,
``unsupported_size``, ``internal``.
"""

from __future__ import annotations

import json
import secrets
import sys
from typing import Any, Callable

from . import protocol
from .linalg import SingularMatrixError, UnsupportedSizeError
from .matroid import NotTotallyUnimodularError, RegularMatroid
from .protocol import ProtocolError
from .puzzle import generate_puzzle
from .r10 import (ALL_MOVES, R10_MATROID, apply_firing, canonicalize, move_delta,
                  pentagon_config, solve_firings)
from .sandpile import sandpile_group
from .selftest import run_checks

PRESETS: dict[str, RegularMatroid] = {"r10": R10_MATROID}


class EngineError(Exception):
    """Dispatch failure with a protocol error code."""

    def __init__(self, code: str, message: str):
        self.code = code
        self.message = message
        super().__init__(message)


def _params_matroid(params: dict[str, Any]) -> RegularMatroid:
    preset = params.get("preset")
    if preset is not None:
        if preset not in PRESETS:
            raise ProtocolError(f"unknown preset {preset!r}, expected one of {sorted(PRESETS)}")
        return PRESETS[preset]
    if "matroid" not in params:
        raise ProtocolError("params must contain 'matroid' or 'preset'")
    return protocol.decode_matroid(params["matroid"])


def op_canonicalize(params: dict[str, Any]) -> dict[str, Any]:
    config = protocol.decode_config(params.get("config"))
    canonical = canonicalize(config)
    cert = solve_firings(config, pentagon_config(canonical))
    assert cert is not None  # the canonical form is always reachable
    return {"canonical": protocol.encode_canonical(canonical),
            "certificate": protocol.encode_certificate(cert)}


def op_equivalent(params: dict[str, Any]) -> dict[str, Any]:
    a = protocol.decode_config(params.get("a"))
    b = protocol.decode_config(params.get("b"))
    cert = solve_firings(a, b)
    if cert is None:
        return {"equivalent": False}
    return {"equivalent": True, "certificate": protocol.encode_certificate(cert)}


def op_group(params: dict[str, Any]) -> dict[str, Any]:
    group = sandpile_group(_params_matroid(params))
    return {"invariant_factors": list(group.invariant_factors), "order": group.order}


def op_bases(params: dict[str, Any]) -> dict[str, Any]:
    bases = _params_matroid(params).enumerate_bases()
    return {"count": len(bases), "bases": [list(b) for b in bases]}


def op_puzzle(params: dict[str, Any]) -> dict[str, Any]:
    seed = params.get("seed")
    if seed is None:
        seed = secrets.randbits(64)
    if not isinstance(seed, int) or isinstance(seed, bool) or not 0 <= seed < 2**64:
        raise ProtocolError("seed must be an unsigned 64-bit integer")
    difficulty = params.get("difficulty", 10)
    if not isinstance(difficulty, int) or isinstance(difficulty, bool) or difficulty < 1:
        raise ProtocolError("difficulty must be an integer >= 1")
    puzzle = generate_puzzle(seed, difficulty)
    return {"config": protocol.encode_config(puzzle.config),
            "seed": puzzle.seed,
            "difficulty": puzzle.difficulty,
            "moves_applied": puzzle.moves_applied,
            "prng": puzzle.prng}


def op_apply(params: dict[str, Any]) -> dict[str, Any]:
    config = protocol.decode_config(params.get("config"))
    move = protocol.decode_move(params.get("move"))
    return {"config": protocol.encode_config(apply_firing(config, move))}


def op_move_table(params: dict[str, Any]) -> dict[str, Any]:
    return {"moves": [dict(protocol.encode_move(move),
                           delta=protocol.encode_config(move_delta(move)))
                      for move in ALL_MOVES]}


def op_selftest(params: dict[str, Any]) -> dict[str, Any]:
    results = run_checks()
    return {"ok": all(r.ok for r in results),
            "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results]}


HANDLERS: dict[str, Callable[[dict[str, Any]], dict[str, Any]]] = {
    "canonicalize": op_canonicalize,
    "equivalent": op_equivalent,
    "group": op_group,
    "bases": op_bases,
    "puzzle": op_puzzle,
    "apply": op_apply,
    "move_table": op_move_table,
    "selftest": op_selftest,
}


def dispatch(op: Any, params: Any) -> dict[str, Any]:
    if not isinstance(op, str) or op not in HANDLERS:
        raise EngineError("unknown_op", f"unknown op {op!r}")
    if params is None:
        params = {}
    if not isinstance(params, dict):
        raise EngineError("validation", "params must be an object")
    try:
        return HANDLERS[op](params)
    except ProtocolError as exc:
        raise EngineError("validation", str(exc)) from exc
    except NotTotallyUnimodularError as exc:
        raise EngineError("not_totally_unimodular", str(exc)) from exc
    except SingularMatrixError as exc:
        raise EngineError("singular", str(exc)) from exc
    except UnsupportedSizeError as exc:
        raise EngineError("unsupported_size", str(exc)) from exc
    except EngineError:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        raise EngineError("internal", f"{type(exc).__name__}: {exc}") from exc


def handle_request_line(line: str) -> dict[str, Any]:
    """One request line in, one response object out; never raises."""
    try:
        request = json.loads(line)
    except json.JSONDecodeError as exc:
        return {"id": None, "ok": False,
                "error": {"code": "parse", "message": f"bad JSON at column {exc.colno}: {exc.msg}"}}
    if not isinstance(request, dict):
        return {"id": None, "ok": False,
                "error": {"code": "validation", "message": "request must be an object"}}
    request_id = request.get("id")
    try:
        result = dispatch(request.get("op"), request.get("params"))
    except EngineError as exc:
        return {"id": request_id, "ok": False,
                "error": {"code": exc.code, "message": exc.message}}
    return {"id": request_id, "ok": True, "result": result}


def serve_stdio(stdin=None, stdout=None) -> int:
    """Blocking request/response loop; returns 0 on clean EOF."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    for line in stdin:
        if not line.strip():
            continue
        response = handle_request_line(line)
        stdout.write(json.dumps(response, separators=(",", ":")) + "\n")
        stdout.flush()
    return 0


def build_http_server(port: int, host: str = "127.0.0.1"):
    """HTTP binding: POST /rpc with one request object per call.

    Sends permissive CORS headers so a browser UI served from another local
    origin can call the engine directly.
    """
    from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

    class Handler(BaseHTTPRequestHandler):
        def _send(self, status: int, payload: dict[str, Any]) -> None:
            body = json.dumps(payload, separators=(",", ":")).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.end_headers()
            self.wfile.write(body)

        def do_OPTIONS(self) -> None:  # noqa: N802 - fixed by http.server
            self.send_response(204)
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Methods", "POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.end_headers()

        def do_POST(self) -> None:  # noqa: N802 - fixed by http.server
            if self.path != "/rpc":
                self._send(404, {"id": None, "ok": False,
                                 "error": {"code": "validation", "message": "POST /rpc only"}})
                return
            length = int(self.headers.get("Content-Length", "0"))
            body = self.rfile.read(length).decode("utf-8", errors="replace")
            self._send(200, handle_request_line(body))

        def log_message(self, fmt, *args):  # quiet by default
            pass

    return ThreadingHTTPServer((host, port), Handler)


def serve_http(port: int, host: str = "127.0.0.1") -> int:
    server = build_http_server(port, host)
    print(f"engine listening on http://{host}:{server.server_address[1]}/rpc",
          file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0
