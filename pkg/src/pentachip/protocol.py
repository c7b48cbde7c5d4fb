"""Wire formats shared by the CLI, the serve loop, and any UI client.

All values are exact JSON integers. Encodings:

* pentagon configuration: ``[[re, im], ...]`` with exactly 5 pairs
* canonical representative: ``[int, int, int, int, int]``
* certificate: same shape as a configuration (per-node net A/B counts)
* firing move: ``{"kind": "A"|"B"|"-A"|"-B", "node": 0..4}``
* matroid: ``{"r": int, "n": int, "D": [[int, ...], ...]}``
* request: ``{"op": str, "params": object, "id": scalar}``
* response: ``{"id": ..., "ok": true, "result": ...}`` or
  ``{"id": ..., "ok": false, "error": {"code": str, "message": str}}``

Configuration entries are capped at +-10^9 at this boundary so the protocol
stays far away from any client's number-precision cliff; the engine itself
computes with arbitrary precision.
"""

from __future__ import annotations

from typing import Any

from .gaussint import GaussInt
from .linalg import IntMatrix, UnsupportedSizeError
from .matroid import NotTotallyUnimodularError, RegularMatroid
from .r10 import NODES, Certificate, FiringMove, MoveKind, PentagonConfig, pentagon_config

MAX_ABS_ENTRY = 10**9


class ProtocolError(ValueError):
    """Malformed or out-of-range value at the protocol boundary."""


def _require_int(value: Any, what: str) -> int:
    # bool is an int subclass but is not a number on this wire
    if not isinstance(value, int) or isinstance(value, bool):
        raise ProtocolError(f"{what} must be an integer, got {value!r}")
    return value


def _require_bounded_int(value: Any, what: str) -> int:
    n = _require_int(value, what)
    if abs(n) > MAX_ABS_ENTRY:
        raise ProtocolError(f"{what} exceeds the +-10^9 protocol bound: {n}")
    return n


def decode_config(data: Any) -> PentagonConfig:
    if not isinstance(data, list) or len(data) != NODES:
        raise ProtocolError(f"configuration must be a list of {NODES} [re, im] pairs")
    chips = []
    for k, pair in enumerate(data):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ProtocolError(f"node {k} must be an [re, im] pair")
        re = _require_bounded_int(pair[0], f"node {k} real part")
        im = _require_bounded_int(pair[1], f"node {k} imaginary part")
        chips.append(GaussInt(re, im))
    return pentagon_config(chips)


def encode_config(config: PentagonConfig) -> list[list[int]]:
    return [[c.re, c.im] for c in config]


def decode_canonical(data: Any) -> tuple[int, ...]:
    if not isinstance(data, list) or len(data) != NODES:
        raise ProtocolError(f"canonical representative must be a list of {NODES} integers")
    return tuple(_require_bounded_int(x, f"node {k}") for k, x in enumerate(data))


def encode_canonical(rep) -> list[int]:
    return [int(x) for x in rep]


def encode_certificate(cert: Certificate) -> list[list[int]]:
    return encode_config(cert.x)


def decode_certificate(data: Any) -> Certificate:
    return Certificate(x=decode_config(data))


_KIND_BY_NAME = {kind.value: kind for kind in MoveKind}


def decode_move(data: Any) -> FiringMove:
    if not isinstance(data, dict):
        raise ProtocolError("move must be an object with 'kind' and 'node'")
    kind_name = data.get("kind")
    if kind_name not in _KIND_BY_NAME:
        raise ProtocolError(f"unknown move kind {kind_name!r}, "
                            f"expected one of {sorted(_KIND_BY_NAME)}")
    node = _require_int(data.get("node"), "move node")
    if not 0 <= node < NODES:
        raise ProtocolError(f"move node must be in 0..{NODES - 1}, got {node}")
    return FiringMove(node=node, kind=_KIND_BY_NAME[kind_name])


def encode_move(move: FiringMove) -> dict[str, Any]:
    return {"kind": move.kind.value, "node": move.node}


def decode_matroid(data: Any) -> RegularMatroid:
    if not isinstance(data, dict):
        raise ProtocolError("matroid must be an object {r, n, D}")
    r = _require_int(data.get("r"), "matroid rank r")
    n = _require_int(data.get("n"), "matroid ground-set size n")
    d_rows = data.get("D")
    if not isinstance(d_rows, list) or not all(isinstance(row, list) for row in d_rows):
        raise ProtocolError("matroid D must be a list of rows")
    entries = [[_require_bounded_int(x, f"D[{i}][{j}]") for j, x in enumerate(row)]
               for i, row in enumerate(d_rows)]
    if len(entries) != r or any(len(row) != n - r for row in entries):
        raise ProtocolError(f"matroid D must be r x (n-r) = {r}x{n - r}")
    try:
        return RegularMatroid(r=r, n=n, d=IntMatrix.from_rows(entries))
    except (NotTotallyUnimodularError, UnsupportedSizeError):
        # mathematical / size failures keep their own types and error codes
        raise
    except ValueError as exc:
        raise ProtocolError(str(exc)) from exc


def encode_matroid(m: RegularMatroid) -> dict[str, Any]:
    return {"r": m.r, "n": m.n, "D": [list(row) for row in m.d.entries]}
