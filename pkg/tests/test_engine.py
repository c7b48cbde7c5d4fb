import io
import json
import threading
import urllib.request

import pytest

from pentachip.engine import (EngineError, build_http_server, dispatch,
                              handle_request_line, serve_stdio)

ZERO = [[0, 0]] * 5
WORKED = [[3, 1], [4, -6], [7, 1], [-8, -8], [3, 0]]


def request_line(op, params, request_id="t"):
    return json.dumps({"op": op, "params": params, "id": request_id})


class TestDispatch:
    def test_canonicalize(self):
        result = dispatch("canonicalize", {"config": WORKED})
        assert result["canonical"] == [0, 1, 0, 0, 0]
        assert result["certificate"] == [[-5, -1], [-4, 1], [-4, 3], [4, -1], [-1, 0]]

    def test_canonicalize_zero(self):
        result = dispatch("canonicalize", {"config": ZERO})
        assert result["canonical"] == [0, 0, 0, 0, 0]
        assert result["certificate"] == ZERO

    def test_equivalent_true(self):
        result = dispatch("equivalent", {"a": WORKED, "b": [[0, 0], [1, 0], [0, 0], [0, 0], [0, 0]]})
        assert result["equivalent"] is True
        assert result["certificate"] == [[-5, -1], [-4, 1], [-4, 3], [4, -1], [-1, 0]]

    def test_equivalent_false(self):
        result = dispatch("equivalent", {"a": ZERO, "b": [[3, 0], [0, 0], [0, 0], [0, 0], [0, 0]]})
        assert result == {"equivalent": False}

    def test_group_preset(self):
        assert dispatch("group", {"preset": "r10"}) == {
            "invariant_factors": [3, 3, 3, 6], "order": 162}

    def test_group_triangle(self):
        matroid = {"r": 2, "n": 3, "D": [[-1], [-1]]}
        assert dispatch("group", {"matroid": matroid}) == {
            "invariant_factors": [3], "order": 3}

    def test_group_two_element(self):
        matroid = {"r": 1, "n": 2, "D": [[1]]}
        assert dispatch("group", {"matroid": matroid}) == {
            "invariant_factors": [2], "order": 2}

    def test_group_not_tu(self):
        with pytest.raises(EngineError) as exc_info:
            dispatch("group", {"matroid": {"r": 2, "n": 4, "D": [[1, 1], [-1, 1]]}})
        assert exc_info.value.code == "not_totally_unimodular"
        assert "determinant 2" in exc_info.value.message

    def test_bases(self):
        result = dispatch("bases", {"preset": "r10"})
        assert result["count"] == 162
        assert len(result["bases"]) == 162
        assert result["bases"][0] == [0, 1, 2, 3, 4]

    def test_puzzle_deterministic(self):
        one = dispatch("puzzle", {"seed": 11, "difficulty": 4})
        two = dispatch("puzzle", {"seed": 11, "difficulty": 4})
        assert one == two
        assert one["prng"] == "splitmix64"
        assert one["moves_applied"] == 4

    def test_puzzle_random_seed_echoed(self):
        result = dispatch("puzzle", {"difficulty": 2})
        assert 0 <= result["seed"] < 2**64
        repeat = dispatch("puzzle", {"seed": result["seed"], "difficulty": 2})
        assert repeat["config"] == result["config"]

    def test_puzzle_validation(self):
        with pytest.raises(EngineError) as exc_info:
            dispatch("puzzle", {"seed": 1, "difficulty": 0})
        assert exc_info.value.code == "validation"
        with pytest.raises(EngineError):
            dispatch("puzzle", {"seed": -1, "difficulty": 1})
        with pytest.raises(EngineError):
            dispatch("puzzle", {"seed": 2**64, "difficulty": 1})

    def test_apply(self):
        result = dispatch("apply", {"config": ZERO, "move": {"kind": "A", "node": 2}})
        assert result["config"] == [[0, 0], [0, -1], [1, 1], [0, -1], [0, 0]]

    def test_move_table(self):
        moves = dispatch("move_table", {})["moves"]
        assert len(moves) == 20
        kinds = {m["kind"] for m in moves}
        assert kinds == {"A", "B", "-A", "-B"}

    def test_unknown_op(self):
        with pytest.raises(EngineError) as exc_info:
            dispatch("explode", {})
        assert exc_info.value.code == "unknown_op"

    def test_bad_params_type(self):
        with pytest.raises(EngineError) as exc_info:
            dispatch("canonicalize", "zap")
        assert exc_info.value.code == "validation"

    def test_config_validation(self):
        with pytest.raises(EngineError) as exc_info:
            dispatch("canonicalize", {"config": [[0, 0]] * 4})
        assert exc_info.value.code == "validation"


class TestRequestLines:
    def test_ok_response(self):
        response = handle_request_line(request_line("canonicalize", {"config": ZERO}, "abc"))
        assert response == {"id": "abc", "ok": True,
                            "result": {"canonical": [0, 0, 0, 0, 0], "certificate": ZERO}}

    def test_parse_error(self):
        response = handle_request_line("{oops")
        assert response["ok"] is False
        assert response["id"] is None
        assert response["error"]["code"] == "parse"

    def test_non_object_request(self):
        response = handle_request_line("[1,2,3]")
        assert response["error"]["code"] == "validation"

    def test_unknown_op_keeps_id(self):
        response = handle_request_line(json.dumps({"op": "zap", "id": 7}))
        assert response["id"] == 7
        assert response["error"]["code"] == "unknown_op"

    def test_round_trip_encoding(self):
        # encode(decode(x)) == x for response payloads
        line = request_line("equivalent", {"a": WORKED, "b": WORKED}, 3)
        response = handle_request_line(line)
        assert json.loads(json.dumps(response)) == response


class TestServeLoop:
    def run_serve(self, lines):
        stdin = io.StringIO("\n".join(lines) + "\n")
        stdout = io.StringIO()
        assert serve_stdio(stdin, stdout) == 0
        return [json.loads(line) for line in stdout.getvalue().splitlines()]

    def test_one_response_per_request_in_order(self):
        lines = [request_line("canonicalize", {"config": ZERO}, i) for i in range(5)]
        responses = self.run_serve(lines)
        assert [r["id"] for r in responses] == list(range(5))

    def test_errors_do_not_stop_loop(self):
        lines = ["not json",
                 request_line("zap", {}, 1),
                 request_line("group", {"preset": "r10"}, 2)]
        responses = self.run_serve(lines)
        assert len(responses) == 3
        assert responses[0]["error"]["code"] == "parse"
        assert responses[1]["error"]["code"] == "unknown_op"
        assert responses[2]["ok"] is True

    def test_blank_lines_skipped(self):
        responses = self.run_serve(["", request_line("move_table", {}, 1), "   "])
        assert len(responses) == 1

    def test_identical_sequences_identical_responses(self):
        lines = [request_line("puzzle", {"seed": 3, "difficulty": 5}, 1),
                 request_line("canonicalize", {"config": WORKED}, 2)]
        assert self.run_serve(lines) == self.run_serve(lines)


class TestHttpBinding:
    def test_post_rpc(self):
        server = build_http_server(port=0)
        thread = threading.Thread(target=server.serve_forever, daemon=True)
        thread.start()
        try:
            port = server.server_address[1]
            body = request_line("group", {"preset": "r10"}, "h1").encode()
            req = urllib.request.Request(
                f"http://127.0.0.1:{port}/rpc", data=body,
                headers={"Content-Type": "application/json"})
            with urllib.request.urlopen(req) as resp:
                assert resp.headers["Access-Control-Allow-Origin"] == "*"
                payload = json.loads(resp.read())
            assert payload["ok"] is True
            assert payload["result"]["order"] == 162
        finally:
            server.shutdown()
            server.server_close()
