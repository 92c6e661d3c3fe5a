# !/usr/bin/python3
# -*- coding: utf-8 -*-

import numpy as np

from pycoherence.exceptions import DimensionErrorException


class OrderScoreMatrix(object):
    """
    Directed pairwise order scores of one element set.

    Entry ``(k, l)`` scores "element k precedes element l". The diagonal is always 0.

    :ivar numpy.ndarray scores: read-only ``n x n`` float64 matrix
    """

    def __init__(self, scores):
        scores = np.array(scores, dtype=np.float64)
        if scores.ndim != 2 or scores.shape[0] != scores.shape[1]:
            raise DimensionErrorException("order score matrix must be square, got {0}".format(scores.shape))
        np.fill_diagonal(scores, 0.0)
        scores.flags.writeable = False
        self._scores = scores

    @property
    def scores(self):
        return self._scores  # type: numpy.ndarray

    @property
    def n(self):
        return self._scores.shape[0]  # type: int

    def copy_scores(self):
        """
        :return: writable copy of the scores
        :rtype: numpy.ndarray
        """
        return self._scores.copy()

    def violations(self, bounded=False):
        """
        :param bool bounded: require off-diagonal entries in (0, 1), as for raw classifier outputs
        :rtype: list(str)
        """
        problems = []
        if not np.all(np.isfinite(self._scores)):
            problems.append("order scores not finite")
        elif np.any(self._scores < 0):
            problems.append("negative order score")
        if bounded and self.n > 1:
            off = self._scores[~np.eye(self.n, dtype=bool)]
            if np.any(off <= 0) or np.any(off >= 1):
                problems.append("order score outside (0, 1)")
        return problems

    def __eq__(self, other):
        return isinstance(other, OrderScoreMatrix) and np.array_equal(self._scores, other._scores)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __mul__(self, factor):
        return OrderScoreMatrix(self._scores * factor)

    __rmul__ = __mul__

    def __repr__(self):
        return "OrderScoreMatrix(n={0})".format(self.n)
