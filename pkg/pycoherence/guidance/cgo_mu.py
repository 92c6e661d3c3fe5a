# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging
from enum import Enum

import numpy as np

from pycoherence.exceptions import DimensionErrorException
from pycoherence.guidance.guidance_config import GuidanceDirection, GuidanceMode
from pycoherence.story.order_matrix import OrderScoreMatrix
from pycoherence.story.similarity import CrossModalSimilarity

logger = logging.getLogger(__name__)


class Axis(Enum):
    ROW = "row"
    COLUMN = "column"


def _scores(matrix):
    return matrix.scores if isinstance(matrix, OrderScoreMatrix) else np.asarray(matrix, dtype=np.float64)


def _sim(similarity):
    return similarity.sim if isinstance(similarity, CrossModalSimilarity) else np.asarray(similarity, dtype=np.float64)


def mask_matrix(source, theta):
    """
    Keep the scores strictly greater than ``theta``, zero the rest.

    :rtype: OrderScoreMatrix
    """
    scores = _scores(source)
    return OrderScoreMatrix(np.where(scores > theta, scores, 0.0))


def align_argmax(similarity, source_index, axis):
    """
    Index of the counterpart element most similar to ``source_index``.

    ``Axis.ROW`` reads row ``source_index`` (a sentence) and returns an image index;
    ``Axis.COLUMN`` reads column ``source_index`` (an image) and returns a sentence index.
    Ties go to the smallest index.

    :rtype: int
    """
    sim = _sim(similarity)
    axis = Axis(axis)
    size = sim.shape[0] if axis is Axis.ROW else sim.shape[1]
    if not 0 <= source_index < size:
        raise IndexError("source index {0} out of range for {1} {2}s".format(source_index, size, axis.value))
    line = sim[source_index, :] if axis is Axis.ROW else sim[:, source_index]
    return int(np.argmax(line))


def normalize_pairs(matrix):
    """
    Rescale every unordered pair ``{i, j}`` so that ``m_ij + m_ji = 1``, keeping their ratio.

    Pairs whose two scores are both 0 are left untouched.

    :rtype: OrderScoreMatrix
    """
    scores = _scores(matrix).copy()
    totals = scores + scores.T
    np.fill_diagonal(totals, 0.0)
    nonzero = totals > 0
    scores[nonzero] = scores[nonzero] / totals[nonzero]
    return OrderScoreMatrix(scores)


def normalize_pairs_backward(matrix, d_normalized):
    """
    Gradient of a loss with respect to the scores fed to :func:`normalize_pairs`.

    With ``t = m_ij + m_ji`` the normalized entry is ``m_ij / t``, so
    ``dL/dm_ij = (g_ij - g_ji) * m_ji / t**2``. Pairs left untouched pass the gradient through.

    :param matrix: scores before normalization
    :param d_normalized: gradient with respect to the normalized scores
    :rtype: numpy.ndarray
    """
    scores = _scores(matrix)
    grad = np.asarray(d_normalized, dtype=np.float64)
    totals = scores + scores.T
    np.fill_diagonal(totals, 0.0)
    nonzero = totals > 0

    d_scores = grad.copy()
    d_scores[nonzero] = (grad - grad.T)[nonzero] * scores.T[nonzero] / totals[nonzero] ** 2
    return d_scores


def cgo_mu(target, source, similarity, theta, cfg, direction=GuidanceDirection.TEXT_TO_IMAGE, stats=None):
    """
    Cross-modal guided order matrix updating.

    Every confident source pair ``(p, q)`` (score above ``theta``) is routed through the
    similarity argmax to a target pair ``(i, j)`` and its source score is added to the
    target entry ``(i, j)``. Pairs that collapse onto one target element are skipped.

    :param OrderScoreMatrix target: matrix being refined
    :param OrderScoreMatrix source: matrix of the guiding modality
    :param CrossModalSimilarity similarity: ``M x N`` sentence/image similarity
    :param float theta: mask threshold on the source
    :param GuidanceConfig cfg: guidance settings (mode, renormalize)
    :param GuidanceDirection direction: which modality guides which
    :param dict stats: when given, ``stats["additions"]`` is incremented by the applied updates
    :rtype: OrderScoreMatrix
    """
    target = target if isinstance(target, OrderScoreMatrix) else OrderScoreMatrix(target)
    if cfg.mode is GuidanceMode.OFF:
        return target

    direction = GuidanceDirection(direction)
    source_scores = _scores(source)
    sim = _sim(similarity)
    if direction is GuidanceDirection.TEXT_TO_IMAGE:
        expected = (source_scores.shape[0], target.n)
        axis = Axis.ROW
    else:
        expected = (target.n, source_scores.shape[0])
        axis = Axis.COLUMN
    if sim.shape != expected:
        raise DimensionErrorException(
            "similarity shape {0} does not fit {1} guidance, expected {2}".format(sim.shape, direction.value, expected)
        )

    masked = mask_matrix(source_scores, theta).scores
    aligned = [align_argmax(sim, index, axis) for index in range(source_scores.shape[0])]

    refined = target.copy_scores()
    additions = 0
    for p, q in np.argwhere(masked != 0):
        i, j = aligned[p], aligned[q]
        if i == j:
            continue
        refined[i, j] += source_scores[p, q]
        additions += 1

    if stats is not None:
        stats["additions"] = stats.get("additions", 0) + additions
    logger.debug("CGO-MU %s: %d additions", direction.value, additions)

    result = OrderScoreMatrix(refined)
    return normalize_pairs(result) if cfg.renormalize else result
