# !/usr/bin/python3
# -*- coding: utf-8 -*-

import numpy as np

from pycoherence.exceptions import DimensionErrorException


class CrossModalSimilarity(object):
    """
    Semantic affinity between the sentences (rows) and the images (columns) of one story.

    :ivar numpy.ndarray sim: read-only ``M x N`` float64 matrix
    """

    def __init__(self, sim):
        sim = np.array(sim, dtype=np.float64)
        if sim.ndim != 2:
            raise DimensionErrorException("similarity must be a matrix, got {0} dimensions".format(sim.ndim))
        sim.flags.writeable = False
        self._sim = sim

    @property
    def sim(self):
        return self._sim  # type: numpy.ndarray

    @property
    def shape(self):
        return self._sim.shape  # type: tuple

    def __eq__(self, other):
        return isinstance(other, CrossModalSimilarity) and np.array_equal(self._sim, other._sim)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "CrossModalSimilarity(shape={0})".format(self.shape)
