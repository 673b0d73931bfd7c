import random

import pytest

from nicholslie.braiding import BraidingMatrix
from nicholslie.scalar import Scalar


def rational_matrix(rows):
    """Braiding matrix over Q from integer entries."""
    return BraidingMatrix(
        [[Scalar.from_rational(1, e) for e in row] for row in rows]
    )


def matrix_from_strings(rows, order):
    return BraidingMatrix.from_strings(rows, order)


def random_scalar(rng, order, span=2, nonzero=False):
    """Random small-coefficient scalar in Q(zeta_order)."""
    from nicholslie.scalar import euler_phi

    while True:
        s = Scalar.from_poly(order, [rng.randint(-span, span) for _ in range(euler_phi(order))])
        if s or not nonzero:
            return s


def random_braiding_matrix(rng, n, order):
    return BraidingMatrix(
        [[random_scalar(rng, order, nonzero=True) for _ in range(n)] for _ in range(n)]
    )


@pytest.fixture
def rng():
    return random.Random(20240811)
