import pytest

from pentachip import protocol
from pentachip.gaussint import gauss_vec
from pentachip.matroid import NotTotallyUnimodularError
from pentachip.protocol import ProtocolError
from pentachip.r10 import Certificate, FiringMove, MoveKind
from pentachip.sandpile import TRIANGLE_MATROID


class TestConfigCodec:
    def test_round_trip(self):
        config = gauss_vec([(3, 1), (4, -6), (7, 1), (-8, -8), (3, 0)])
        assert protocol.decode_config(protocol.encode_config(config)) == config

    def test_wrong_arity(self):
        with pytest.raises(ProtocolError):
            protocol.decode_config([[0, 0]] * 4)
        with pytest.raises(ProtocolError):
            protocol.decode_config([[0, 0, 0]] * 5)
        with pytest.raises(ProtocolError):
            protocol.decode_config("nope")

    def test_non_integer_entries(self):
        with pytest.raises(ProtocolError):
            protocol.decode_config([[0.5, 0]] + [[0, 0]] * 4)
        with pytest.raises(ProtocolError):
            protocol.decode_config([[True, 0]] + [[0, 0]] * 4)

    def test_bound(self):
        protocol.decode_config([[10**9, -(10**9)]] + [[0, 0]] * 4)
        with pytest.raises(ProtocolError):
            protocol.decode_config([[10**9 + 1, 0]] + [[0, 0]] * 4)


class TestCanonicalCodec:
    def test_round_trip(self):
        rep = (3, 0, 1, 2, 0)
        assert protocol.decode_canonical(protocol.encode_canonical(rep)) == rep

    def test_wrong_arity(self):
        with pytest.raises(ProtocolError):
            protocol.decode_canonical([0, 0, 0])


class TestCertificateCodec:
    def test_round_trip(self):
        cert = Certificate(x=gauss_vec([(-5, -1), (-4, 1), (-4, 3), (4, -1), (-1, 0)]))
        encoded = protocol.encode_certificate(cert)
        assert encoded[0] == [-5, -1]
        assert protocol.decode_certificate(encoded) == cert


class TestMoveCodec:
    def test_round_trip_all(self):
        for kind in MoveKind:
            for node in range(5):
                move = FiringMove(node, kind)
                assert protocol.decode_move(protocol.encode_move(move)) == move

    def test_kind_names(self):
        assert protocol.encode_move(FiringMove(1, MoveKind.NEG_A)) == {"kind": "-A", "node": 1}

    def test_bad_kind(self):
        with pytest.raises(ProtocolError):
            protocol.decode_move({"kind": "C", "node": 0})

    def test_bad_node(self):
        with pytest.raises(ProtocolError):
            protocol.decode_move({"kind": "A", "node": 5})


class TestMatroidCodec:
    def test_round_trip(self):
        encoded = protocol.encode_matroid(TRIANGLE_MATROID)
        assert encoded == {"r": 2, "n": 3, "D": [[-1], [-1]]}
        decoded = protocol.decode_matroid(encoded)
        assert decoded.combined_k() == TRIANGLE_MATROID.combined_k()

    def test_shape_mismatch(self):
        with pytest.raises(ProtocolError):
            protocol.decode_matroid({"r": 2, "n": 3, "D": [[-1]]})

    def test_invalid_rank(self):
        with pytest.raises(ProtocolError):
            protocol.decode_matroid({"r": 3, "n": 3, "D": [[], [], []]})

    def test_tu_violation_passes_through(self):
        with pytest.raises(NotTotallyUnimodularError):
            protocol.decode_matroid({"r": 2, "n": 4, "D": [[1, 1], [-1, 1]]})
