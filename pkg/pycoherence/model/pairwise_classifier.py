# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging

import numpy as np
from scipy.special import expit, log_expit

from pycoherence.exceptions import DimensionErrorException
from pycoherence.story.order_matrix import OrderScoreMatrix
from pycoherence.story.permutation import Permutation

logger = logging.getLogger(__name__)


class PairClassifierParams(object):
    """
    Linear classifier over the concatenation ``[e1; e2]`` of two context-aware representations.

    :ivar numpy.ndarray weight: vector of width ``2d``
    :ivar numpy.ndarray bias: vector of width 1
    """

    def __init__(self, weight, bias=0.0):
        self.weight = np.asarray(weight, dtype=np.float64).reshape(-1)
        self.bias = np.asarray(bias, dtype=np.float64).reshape(1)
        if self.weight.shape[0] % 2 != 0:
            raise DimensionErrorException("pair classifier weight must have even width")

    @property
    def width(self):
        return self.weight.shape[0] // 2

    @property
    def first(self):
        return self.weight[: self.width]

    @property
    def second(self):
        return self.weight[self.width:]

    @property
    def tensors(self):
        return {"weight": self.weight, "bias": self.bias}

    @classmethod
    def from_tensors(cls, tensors):
        return cls(tensors["weight"], tensors["bias"])

    @classmethod
    def init(cls, d, seed):
        rng = np.random.default_rng(seed)
        limit = 1.0 / np.sqrt(2 * d)
        return cls(rng.uniform(-limit, limit, size=2 * d), 0.0)

    @classmethod
    def zeros(cls, d):
        return cls(np.zeros(2 * d), 0.0)


def pair_logit(e1, e2, params):
    """
    Logit ``o_12`` that element 1 precedes element 2.

    Both directions are computed independently, no antisymmetry is imposed.

    :rtype: float
    """
    e1 = np.asarray(e1, dtype=np.float64).reshape(-1)
    e2 = np.asarray(e2, dtype=np.float64).reshape(-1)
    if e1.shape[0] != params.width or e2.shape[0] != params.width:
        raise DimensionErrorException(
            "pair widths {0}/{1} do not match classifier width {2}".format(e1.shape[0], e2.shape[0], params.width)
        )
    return float(params.first @ e1 + params.second @ e2 + params.bias[0])


def pair_logits(encoded, params):
    """
    All directed logits of a set at once: entry ``(k, l)`` is ``pair_logit(e_k, e_l)``.

    :rtype: numpy.ndarray
    """
    encoded = np.asarray(encoded, dtype=np.float64)
    if encoded.ndim != 2 or encoded.shape[1] != params.width:
        raise DimensionErrorException(
            "encoded set shape {0} does not match classifier width {1}".format(encoded.shape, params.width)
        )
    return (encoded @ params.first)[:, None] + (encoded @ params.second)[None, :] + params.bias[0]


def order_matrix(encoded, params):
    """
    Sigmoid order scores of every ordered pair; the diagonal is 0.

    :param numpy.ndarray encoded: ``n x d`` context-aware representations, ``n >= 2``
    :rtype: OrderScoreMatrix
    """
    encoded = np.asarray(encoded, dtype=np.float64)
    if encoded.ndim != 2 or encoded.shape[0] < 2:
        raise DimensionErrorException("an order matrix needs at least two elements")
    return OrderScoreMatrix(expit(pair_logits(encoded, params)))


def order_matrix_backward(encoded, params, scores, d_scores):
    """
    Gradients of a scalar loss through :func:`order_matrix`.

    :param numpy.ndarray scores: the sigmoid scores returned by the forward call
    :param numpy.ndarray d_scores: gradient of the loss w.r.t. the scores (diagonal ignored)
    :return: (gradients w.r.t. ``weight``/``bias``, gradient w.r.t. the encoded set)
    :rtype: tuple(dict, numpy.ndarray)
    """
    encoded = np.asarray(encoded, dtype=np.float64)
    d_logits = d_scores * scores * (1.0 - scores)
    np.fill_diagonal(d_logits, 0.0)

    row = d_logits.sum(axis=1)
    col = d_logits.sum(axis=0)
    grads = {
        "weight": np.concatenate([encoded.T @ row, encoded.T @ col]),
        "bias": np.array([d_logits.sum()]),
    }
    d_encoded = row[:, None] * params.first[None, :] + col[:, None] * params.second[None, :]
    return grads, d_encoded


def pairwise_loss(matrix, gold_order, temperature=1.0):
    """
    Pairwise order cross-entropy of a (possibly refined) order matrix.

    For every ordered pair ``k != l`` the two-way softmax over ``(m_kl / T, m_lk / T)`` gives
    ``p_kl``; the loss is ``-(1/P) sum_{k != l} [y_kl log p_kl + (1 - y_kl) log(1 - p_kl)]``
    with ``y_kl = 1`` iff ``k`` precedes ``l`` in the gold order and ``P = n (n - 1)``.

    :param OrderScoreMatrix matrix: order scores
    :param gold_order: gold :class:`Permutation` (position-ordered element list)
    :param float temperature: softmax temperature ``T``
    :return: (loss, gradient of the loss w.r.t. every score)
    :rtype: tuple(float, numpy.ndarray)
    """
    scores = matrix.scores if isinstance(matrix, OrderScoreMatrix) else np.asarray(matrix, dtype=np.float64)
    n = scores.shape[0]
    gold = Permutation(gold_order)
    if len(gold) != n or not gold.is_valid():
        raise DimensionErrorException("gold order of size {0} does not fit a {1} x {1} matrix".format(len(gold), n))
    if n < 2:
        raise DimensionErrorException("pairwise loss needs at least two elements")

    positions = gold.positions()
    before = positions[:, None] < positions[None, :]
    pairs = n * (n - 1)

    margins = (scores - scores.T) / temperature
    loss = -2.0 * log_expit(margins[before]).sum() / pairs

    weights = np.zeros_like(scores)
    weights[before] = -2.0 * expit(-margins[before]) / pairs
    grad = (weights - weights.T) / temperature
    return float(loss), grad
