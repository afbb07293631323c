import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from plnn.arith import Matrix
from plnn.errors import PieceCapExceeded, ShapeError
from plnn.network import (
    Layer,
    Network,
    TropicalPair,
    architecture_index_sizes,
    decompose,
    default_piece_cap,
    forward_eval,
    piece_counts,
    shape_report,
    validate,
)
from plnn.sampling import rand_network, rand_point, rand_widths

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load(name):
    return Network.from_json(json.loads((FIXTURES / name).read_text()))


def relu():
    return Network((Layer(Matrix.from_rows([[1]]), (0,), (0,)),))


def test_relu_forward_and_decompose():
    net = relu()
    assert forward_eval(net, (Fraction(-2),)) == (0,)
    assert forward_eval(net, (Fraction(3, 2),)) == (Fraction(3, 2),)
    pair = decompose(net)
    assert {p.key for p in pair.pos[0]} == {(1, 0), (0, 0)}
    assert [p.key for p in pair.neg[0]] == [(0, 0)]


def test_printed_autoencoder_is_rejected():
    net = load("autoencoder_printed.json")
    report = shape_report(net)
    assert report.startswith("layer 1:")
    with pytest.raises(ShapeError) as err:
        validate(net)
    assert err.value.layers == (1,)


def test_second_layer_column_mismatch_names_both_layers():
    net = Network((
        Layer(Matrix.from_rows([[1, 2, 3], [0, 1, 0]]), (0, 0), (0, 0)),
        Layer(Matrix.from_rows([[1, 1, 1]]), (0,), (0,)),
    ))
    with pytest.raises(ShapeError) as err:
        validate(net)
    assert err.value.layers == (1, 2)


def test_corrected_autoencoder_value_at_origin():
    net = load("autoencoder_corrected.json")
    assert net.widths == (3, 2, 3)
    # hidden = max{(2, 2), 0} = (2, 2); output = max{W2 (2, 2) + 1/3, 1}
    expected = (Fraction(22, 3), Fraction(41, 6), Fraction(7, 3))
    assert forward_eval(net, (0, 0, 0)) == expected


@pytest.mark.parametrize("prune", [True, False])
def test_corrected_autoencoder_decomposition(prune):
    net = load("autoencoder_corrected.json")
    pair = decompose(net, prune=prune)
    rng = random.Random(1)
    for _ in range(100):
        x = rand_point(rng, 3)
        assert pair(x) == forward_eval(net, x)


def test_random_networks_pruned_and_unpruned_agree():
    rng = random.Random(2)
    for _ in range(15):
        net = rand_network(rng, rand_widths(rng))
        a, b = decompose(net, True), decompose(net, False)
        for pa, pb in zip(piece_counts(a), piece_counts(b)):
            assert pa[0] <= pb[0] and pa[1] <= pb[1]
        for _ in range(20):
            x = rand_point(rng, net.input_dim)
            assert a(x) == b(x) == forward_eval(net, x)


def test_index_sizes():
    assert architecture_index_sizes((3, 2)) == (2, 1)
    # one hidden layer of width 2: prod = 2^2 * 1^2
    assert architecture_index_sizes((3, 2, 3)) == (8, 4)
    pair = decompose(load("autoencoder_corrected.json"))
    assert pair.index_sizes == ((8, 4),) * 3


def test_piece_cap_applies_unpruned():
    rng = random.Random(3)
    net = rand_network(rng, (2, 3, 3, 1))
    with pytest.raises(PieceCapExceeded):
        decompose(net, prune=False, cap=4)


def test_env_cap(monkeypatch):
    monkeypatch.setenv("PLNN_PIECE_CAP", "17")
    assert default_piece_cap() == 17
    monkeypatch.delenv("PLNN_PIECE_CAP")
    assert default_piece_cap() == 10**6


def test_pair_json_roundtrip():
    pair = decompose(load("two_layer.json"))
    obj = json.loads(json.dumps(pair.to_json()))
    assert TropicalPair.from_json(obj) == pair
    assert obj["piece_counts"] == [list(c) for c in piece_counts(pair)]


def test_network_json_roundtrip():
    net = load("autoencoder_corrected.json")
    assert Network.from_json(json.loads(json.dumps(net.to_json()))) == net
