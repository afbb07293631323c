import json
import random
from fractions import Fraction

import pytest

from oracles import networks_agree
from plnn.arith import Matrix
from plnn.equivalence import (
    EquivVerdict,
    dominance_witness,
    equivalent,
    gen_permuted,
    gen_scaled,
    perturb,
)
from plnn.errors import DimensionError
from plnn.network import Layer, Network, forward_eval
from plnn.pl import Affine, PLFunc
from plnn.sampling import rand_network, rand_positive_scales


def single(w, b, t):
    return Network((Layer(Matrix.from_rows([[w]]), (b,), (t,)),))


def test_same_network():
    net = single(1, 0, 0)
    v = equivalent(net, net)
    assert v.equivalent and v.witness is None


def test_single_layer_rigidity():
    assert not equivalent(single(1, 0, 0), single(2, 0, 0))
    assert not equivalent(single(1, 0, 0), single(1, 1, 0))
    assert not equivalent(single(1, 0, 0), single(1, 0, 1))


def test_zero_weight_row_is_not_rigid():
    # max{0x + 1, 2} and max{0x + 0, 2} are the same constant
    assert equivalent(single(0, 1, 2), single(0, 0, 2))


def test_witness_separates():
    n1, n2 = single(1, 0, 0), single(1, Fraction(1, 2), 0)
    v = equivalent(n1, n2)
    assert forward_eval(n1, v.witness) != forward_eval(n2, v.witness)


def test_dimension_mismatch():
    other = Network((Layer(Matrix.from_rows([[1, 1]]), (0,), (0,)),))
    with pytest.raises(DimensionError):
        equivalent(single(1, 0, 0), other)


def test_generators_preserve_function():
    rng = random.Random(4)
    net = rand_network(rng, (2, 3, 2, 1))
    p = gen_permuted(net, 1, [2, 0, 1])
    s = gen_scaled(p, 2, rand_positive_scales(rng, 2))
    for other in (p, s):
        assert equivalent(net, other)
        assert networks_agree(net, other, rng, 100) is None


def test_generator_conventions():
    net = Network((
        Layer(Matrix.from_rows([[1], [2], [3]]), (10, 20, 30), (0, 0, 0)),
        Layer(Matrix.from_rows([[4, 5, 6]]), (0,), (0,)),
    ))
    p = gen_permuted(net, 1, [2, 0, 1])
    assert p.layers[0].W.rows == ((3,), (1,), (2,))
    assert p.layers[0].b == (30, 10, 20)
    assert p.layers[1].W.rows == ((6, 4, 5),)
    assert gen_permuted(net, 1, [0, 1, 2]) == net
    s = gen_scaled(net, 1, [2, 1, Fraction(1, 3)])
    assert s.layers[0].W.rows == ((2,), (2,), (1,))
    assert s.layers[1].W.rows == ((2, 5, 18),)


@pytest.mark.parametrize("bad", [
    lambda n: gen_permuted(n, 2, [0]),
    lambda n: gen_permuted(n, 1, [0, 0, 1]),
    lambda n: gen_scaled(n, 1, [1, 0, 1]),
    lambda n: gen_scaled(n, 1, [1, 1]),
])
def test_generator_errors(bad):
    net = rand_network(random.Random(0), (1, 3, 1))
    with pytest.raises(ValueError):
        bad(net)


def test_perturbation_detected():
    rng = random.Random(9)
    net = rand_network(rng, (2, 2, 1))
    for kind, idx in (("W", (0, 1)), ("b", (0,)), ("t", (0,))):
        other = perturb(net, 2, kind, idx, Fraction(1, 2))
        v = equivalent(net, other)
        assert not v.equivalent
        assert forward_eval(net, v.witness) != forward_eval(other, v.witness)


def test_dominance_witness_hidden_difference():
    # max{x, -x} vs max{x, -x, 0}: differ only near the origin
    lhs = PLFunc((Affine((1,), 0), Affine((-1,), 0)))
    rhs = PLFunc((Affine((1,), 0), Affine((-1,), 0), Affine((0,), 1)))
    x = dominance_witness(lhs, rhs)
    assert lhs(x) != rhs(x)
    with pytest.raises(ValueError):
        dominance_witness(lhs, lhs)


def test_verdict_json_roundtrip():
    n1, n2 = single(1, 0, 0), single(1, 1, 0)
    v = equivalent(n1, n2)
    obj = json.loads(json.dumps(v.to_json()))
    assert set(obj) == {"equivalent", "witness", "outputs"}
    assert set(obj["outputs"][0]) == {"lhs_pieces", "rhs_pieces"}
    assert EquivVerdict.from_json(obj) == v


def test_hidden_widths_may_differ():
    # one ReLU unit versus the same unit split into two halves
    n1 = Network((Layer(Matrix.from_rows([[1]]), (0,), (0,)), Layer(Matrix.from_rows([[3]]), (1,), (-5,))))
    n2 = Network((
        Layer(Matrix.from_rows([[1], [1]]), (0, 0), (0, 0)),
        Layer(Matrix.from_rows([[Fraction(3, 2), Fraction(3, 2)]]), (1,), (-5,)),
    ))
    assert equivalent(n1, n2).equivalent
    n3 = perturb(n2, 2, "W", (0, 1), Fraction(1, 2))
    v = equivalent(n1, n3)
    assert not v.equivalent and forward_eval(n1, v.witness) != forward_eval(n3, v.witness)
