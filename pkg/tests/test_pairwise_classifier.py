import numpy as np
import pytest

from pycoherence.exceptions import DimensionErrorException
from pycoherence.model.ordering_model import OrderingModel
from pycoherence.model.pairwise_classifier import PairClassifierParams
from pycoherence.model.pairwise_classifier import order_matrix
from pycoherence.model.pairwise_classifier import order_matrix_backward
from pycoherence.model.pairwise_classifier import pair_logit
from pycoherence.model.pairwise_classifier import pairwise_loss
from pycoherence.story import Modality
from pycoherence.story import OrderScoreMatrix
from pycoherence.story import Permutation

from conftest import assert_gradients_close
from conftest import numeric_gradient


def test_zero_weights_give_zero_logit_and_half_scores():
    params = PairClassifierParams.zeros(4)
    e = np.random.default_rng(0).standard_normal((3, 4))
    assert pair_logit(e[0], e[1], params) == 0.0
    scores = order_matrix(e, params).scores
    assert np.all(scores[~np.eye(3, dtype=bool)] == 0.5)
    assert not np.diag(scores).any()


def test_unit_weights_over_width():
    d = 6
    params = PairClassifierParams(np.concatenate([np.ones(d), -np.ones(d)]) / d)
    assert pair_logit(np.ones(d), np.zeros(d), params) == pytest.approx(1.0)
    scores = order_matrix(np.stack([np.ones(d), np.zeros(d)]), params).scores
    assert scores[0, 1] == pytest.approx(0.7310585786, abs=1e-9)
    assert scores[1, 0] == pytest.approx(1 - 0.7310585786, abs=1e-9)


def test_no_antisymmetry_is_imposed():
    params = PairClassifierParams(np.concatenate([np.ones(2), np.ones(2)]), 0.3)
    scores = order_matrix(np.array([[1.0, 0.0], [0.0, 2.0]]), params).scores
    assert scores[0, 1] == pytest.approx(scores[1, 0])
    assert scores[0, 1] + scores[1, 0] != pytest.approx(1.0)


def test_pair_width_is_checked():
    with pytest.raises(DimensionErrorException):
        pair_logit(np.zeros(3), np.zeros(4), PairClassifierParams.zeros(4))


def test_equal_scores_give_log_two():
    matrix = OrderScoreMatrix(np.full((4, 4), 0.5))
    loss, _ = pairwise_loss(matrix, Permutation([2, 0, 3, 1]), temperature=0.1)
    assert loss == pytest.approx(np.log(2.0))


def test_loss_is_small_for_a_confident_correct_matrix():
    scores = np.where(np.arange(4)[:, None] < np.arange(4)[None, :], 0.99, 0.01)
    confident, _ = pairwise_loss(OrderScoreMatrix(scores), Permutation(range(4)), temperature=0.1)
    reversed_, _ = pairwise_loss(OrderScoreMatrix(scores), Permutation([3, 2, 1, 0]), temperature=0.1)
    assert confident < 1e-3
    assert reversed_ > 9.0


def test_loss_does_not_depend_on_element_labels():
    rng = np.random.default_rng(5)
    for _ in range(50):
        n = int(rng.integers(2, 7))
        scores = rng.uniform(0.01, 0.99, size=(n, n))
        gold = Permutation(rng.permutation(n))
        relabel = rng.permutation(n)
        positions = gold.positions()
        loss, _ = pairwise_loss(OrderScoreMatrix(scores), gold, 0.1)
        relabeled, _ = pairwise_loss(
            OrderScoreMatrix(scores[np.ix_(relabel, relabel)]), Permutation.from_positions(positions[relabel]), 0.1
        )
        assert relabeled == pytest.approx(loss, rel=1e-12)


def test_gold_size_must_match():
    with pytest.raises(DimensionErrorException):
        pairwise_loss(OrderScoreMatrix(np.full((3, 3), 0.5)), Permutation([0, 1]))


def test_loss_gradient_matches_finite_differences():
    rng = np.random.default_rng(7)
    for temperature in (1.0, 0.1):
        scores = rng.uniform(0.05, 0.95, size=(4, 4))
        np.fill_diagonal(scores, 0.0)
        gold = Permutation(rng.permutation(4))
        _, grad = pairwise_loss(scores, gold, temperature)
        numeric = numeric_gradient(lambda: pairwise_loss(scores, gold, temperature)[0], scores)
        assert_gradients_close(grad, numeric)


def test_classifier_gradient_matches_finite_differences():
    rng = np.random.default_rng(8)
    params = PairClassifierParams(rng.standard_normal(10), 0.2)
    encoded = rng.standard_normal((4, 5))
    upstream = rng.standard_normal((4, 4))
    np.fill_diagonal(upstream, 0.0)

    def loss():
        return float((upstream * order_matrix(encoded, params).scores).sum())

    scores = order_matrix(encoded, params).scores
    grads, d_encoded = order_matrix_backward(encoded, params, scores, upstream)
    assert_gradients_close(grads["weight"], numeric_gradient(loss, params.weight))
    assert_gradients_close(grads["bias"], numeric_gradient(loss, params.bias))
    assert_gradients_close(d_encoded, numeric_gradient(loss, encoded))


@pytest.mark.parametrize("seed", range(10))
def test_model_loss_gradient_matches_finite_differences(seed):
    rng = np.random.default_rng(seed)
    model = OrderingModel.create(Modality.TEXT, 8, 2, seed)
    n = int(rng.integers(2, 5))
    x = rng.standard_normal((n, 8))
    gold = Permutation(rng.permutation(n))
    params = model.params

    def loss():
        return pairwise_loss(model.with_params(params).score_matrix(x), gold, 0.5)[0]

    matrix, cache = model.forward(x)
    _, d_scores = pairwise_loss(matrix, gold, 0.5)
    grads = model.backward(cache, d_scores)
    for name, tensor in params.items():
        assert_gradients_close(grads[name], numeric_gradient(loss, tensor))


def test_model_parameters_round_trip():
    model = OrderingModel.create(Modality.IMAGE, 8, 2, 3)
    rebuilt = OrderingModel.from_params(Modality.IMAGE, 8, 2, model.params)
    x = np.random.default_rng(0).standard_normal((4, 8))
    assert rebuilt.score_matrix(x) == model.score_matrix(x)
    with pytest.raises(DimensionErrorException):
        OrderingModel.from_params(Modality.IMAGE, 16, 2, model.params)
