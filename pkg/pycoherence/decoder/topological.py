# !/usr/bin/python3
# -*- coding: utf-8 -*-

import itertools
import logging

import numpy as np
from confapp import conf

from pycoherence.exceptions import DimensionErrorException
from pycoherence.story.order_matrix import OrderScoreMatrix
from pycoherence.story.permutation import Permutation

logger = logging.getLogger(__name__)


def _scores(matrix):
    return matrix.scores if isinstance(matrix, OrderScoreMatrix) else np.asarray(matrix, dtype=np.float64)


def node_scores(matrix):
    """
    Out-weight minus in-weight of every node of the ordering graph:
    ``score(k) = sum_{l != k} (m_kl - m_lk)``.

    :rtype: numpy.ndarray
    """
    scores = _scores(matrix)
    return (scores - scores.T).sum(axis=1)


def decode_order(matrix):
    """
    Full order of a set from its pairwise scores, by descending node score.

    Ties go to the smaller element index. Cyclic preferences need no special handling.

    :param OrderScoreMatrix matrix: pairwise order scores
    :rtype: Permutation
    """
    totals = node_scores(matrix)
    if totals.shape[0] < 1:
        raise DimensionErrorException("cannot decode an empty set")
    return Permutation(sorted(range(totals.shape[0]), key=lambda k: (-totals[k], k)))


def order_objective(matrix, order):
    """
    Sum of ``m_kl`` over every pair where ``k`` is placed before ``l``.

    :rtype: float
    """
    scores = _scores(matrix)
    total = 0.0
    for a in range(len(order)):
        for b in range(a + 1, len(order)):
            total += scores[order[a], order[b]]
    return total


def brute_force_decode(matrix):
    """
    Exhaustive decoder: the permutation maximizing :func:`order_objective`.

    Ties go to the lexicographically smallest permutation.

    :rtype: Permutation
    """
    scores = _scores(matrix)
    n = scores.shape[0]
    if n > conf.PYCOHERENCE_BRUTE_FORCE_MAX_SIZE:
        raise DimensionErrorException(
            "set too large for oracle: {0} > {1}".format(n, conf.PYCOHERENCE_BRUTE_FORCE_MAX_SIZE)
        )

    best, best_value = None, None
    for order in itertools.permutations(range(n)):
        value = order_objective(scores, order)
        if best_value is None or value > best_value:
            best, best_value = order, value
    return Permutation(best)
