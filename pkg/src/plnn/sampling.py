"""Seeded random rationals, envelopes and networks for fixtures and tests."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .arith import Matrix
from .network import Layer, Network
from .pl import Affine, PLFunc


def rand_rat(rng: random.Random, bound: int = 5, max_den: int = 4, nonzero: bool = False) -> Fraction:
    while True:
        den = rng.randint(1, max_den)
        v = Fraction(rng.randint(-bound * den, bound * den), den)
        if v or not nonzero:
            return v


def rand_point(rng: random.Random, dim: int, bound: int = 5, max_den: int = 8) -> tuple[Fraction, ...]:
    return tuple(rand_rat(rng, bound, max_den) for _ in range(dim))


def rand_affine(rng: random.Random, dim: int, bound: int = 3, max_den: int = 3) -> Affine:
    return Affine(tuple(rand_rat(rng, bound, max_den) for _ in range(dim)), rand_rat(rng, bound, max_den))


def rand_plfunc(rng: random.Random, dim: int, max_pieces: int = 6, **kw) -> PLFunc:
    n = rng.randint(1, max_pieces)
    return PLFunc(tuple(rand_affine(rng, dim, **kw) for _ in range(n)))


def rand_network(
    rng: random.Random,
    widths: Sequence[int],
    bound: int = 3,
    max_den: int = 3,
    nonzero_rows: bool = True,
) -> Network:
    """Random network with layer sizes ``widths = (n_1, m_1, ..., m_L)``."""
    layers = []
    for n_in, n_out in zip(widths[:-1], widths[1:]):
        rows = []
        for _ in range(n_out):
            while True:
                row = tuple(rand_rat(rng, bound, max_den) for _ in range(n_in))
                if any(row) or not nonzero_rows:
                    break
            rows.append(row)
        b = tuple(rand_rat(rng, bound, max_den) for _ in range(n_out))
        t = tuple(rand_rat(rng, bound, max_den) for _ in range(n_out))
        layers.append(Layer(Matrix(tuple(rows)), b, t))
    return Network(tuple(layers))


def rand_widths(rng: random.Random, max_in: int = 3, max_depth: int = 3, max_width: int = 3) -> tuple[int, ...]:
    depth = rng.randint(1, max_depth)
    return (rng.randint(1, max_in),) + tuple(rng.randint(1, max_width) for _ in range(depth))


def rand_positive_scales(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(1, 6), rng.randint(1, 6)) for _ in range(n))
