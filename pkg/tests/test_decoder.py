import logging

import numpy as np
import pytest

from pycoherence.decoder.topological import brute_force_decode
from pycoherence.decoder.topological import decode_order
from pycoherence.decoder.topological import node_scores
from pycoherence.decoder.topological import order_objective
from pycoherence.exceptions import DimensionErrorException
from pycoherence.story import OrderScoreMatrix
from pycoherence.story import Permutation

from conftest import utility_matrix

logger = logging.getLogger(__name__)


def test_three_elements():
    matrix = OrderScoreMatrix([[0, 0.9, 0.8], [0.1, 0, 0.6], [0.2, 0.4, 0]])
    np.testing.assert_allclose(node_scores(matrix), [1.4, -0.6, -0.8])
    assert decode_order(matrix) == (0, 1, 2)


def test_three_elements_with_consistent_margins():
    matrix = OrderScoreMatrix([[0, 0.9, 0.7], [0.1, 0, 0.8], [0.3, 0.2, 0]])
    np.testing.assert_allclose(node_scores(matrix), [1.2, -0.2, -1.0])
    assert decode_order(matrix) == (0, 1, 2)
    assert brute_force_decode(matrix) == (0, 1, 2)


def test_ties_go_to_the_smaller_index():
    assert decode_order(OrderScoreMatrix(np.full((4, 4), 0.5))) == (0, 1, 2, 3)
    assert decode_order(OrderScoreMatrix(np.zeros((3, 3)))) == (0, 1, 2)


def test_cycle_is_decoded():
    matrix = OrderScoreMatrix([[0, 0.9, 0.1], [0.1, 0, 0.9], [0.9, 0.1, 0]])
    order = decode_order(matrix)
    assert sorted(order) == [0, 1, 2]


def test_scaling_does_not_change_the_order():
    rng = np.random.default_rng(3)
    for _ in range(100):
        n = int(rng.integers(2, 9))
        matrix = OrderScoreMatrix(rng.uniform(size=(n, n)))
        for factor in (0.5, 2.0, 3.0, 10.0):
            assert decode_order(matrix * factor) == decode_order(matrix)


def test_recovers_orders_consistent_with_latent_utilities():
    rng = np.random.default_rng(4)
    for _ in range(500):
        n = int(rng.integers(2, 8))
        gold = Permutation(rng.permutation(n))
        matrix = OrderScoreMatrix(utility_matrix(gold.positions(), beta=float(rng.uniform(0.5, 5.0))))
        assert decode_order(matrix) == gold
        if n <= 6:
            assert brute_force_decode(matrix) == gold


def test_objective():
    matrix = [[0, 0.9, 0.8], [0.1, 0, 0.6], [0.2, 0.4, 0]]
    assert order_objective(matrix, [0, 1, 2]) == pytest.approx(2.3)
    assert order_objective(matrix, [2, 1, 0]) == pytest.approx(0.7)


def test_brute_force_refuses_large_sets():
    with pytest.raises(DimensionErrorException):
        brute_force_decode(OrderScoreMatrix(np.full((9, 9), 0.5)))


def test_agrees_with_brute_force_on_noisy_matrices():
    rng = np.random.default_rng(5)
    agree = 0
    trials = 500
    for _ in range(trials):
        n = int(rng.integers(2, 7))
        positions = rng.permutation(n)
        matrix = OrderScoreMatrix(utility_matrix(positions, beta=1.5, noise=0.5, rng=rng))
        greedy, best = decode_order(matrix), brute_force_decode(matrix)
        if greedy == best:
            agree += 1
        else:
            logger.info("decoders disagree on n=%d: node scores %s, exhaustive %s", n, greedy, best)
    assert agree / trials >= 0.95
