# !/usr/bin/python3
# -*- coding: utf-8 -*-

import numpy as np

from pycoherence.story.modality import Modality
from pycoherence.story.permutation import Permutation


class ElementSet(object):
    """
    Unordered set of element embeddings of one modality.

    :ivar numpy.ndarray elements: ``n x d`` float32 embeddings, in the (shuffled) input order
    :ivar numpy.ndarray gold_order: gold position of every element
    :ivar Modality modality: modality of the elements
    """

    def __init__(self, elements, gold_order, modality):
        elements = np.array(elements, dtype=np.float32)
        if elements.ndim != 2:
            elements = elements.reshape(len(elements), -1)
        elements.flags.writeable = False

        gold_order = np.array(gold_order, dtype=np.int64).reshape(-1)
        gold_order.flags.writeable = False

        self._elements = elements
        self._gold_order = gold_order
        self._modality = Modality(modality)

    @property
    def elements(self):
        return self._elements  # type: numpy.ndarray

    @property
    def gold_order(self):
        return self._gold_order  # type: numpy.ndarray

    @property
    def modality(self):
        return self._modality  # type: Modality

    @property
    def n(self):
        return self._elements.shape[0]  # type: int

    @property
    def width(self):
        return self._elements.shape[1]  # type: int

    @property
    def gold_permutation(self):
        """
        Elements listed from the first gold position to the last.

        :rtype: Permutation
        """
        return Permutation.from_positions(self._gold_order)

    def violations(self):
        problems = []
        if self.n < 2:
            problems.append("{0} set has fewer than 2 elements".format(self._modality.value))
        if len(self._gold_order) != self.n:
            problems.append("{0} gold_order length differs from set size".format(self._modality.value))
        elif sorted(self._gold_order.tolist()) != list(range(self.n)):
            problems.append("gold_order not a permutation")
        if not np.all(np.isfinite(self._elements)):
            problems.append("{0} embeddings not finite".format(self._modality.value))
        return problems

    def __eq__(self, other):
        return (
            isinstance(other, ElementSet)
            and self._modality is other._modality
            and np.array_equal(self._gold_order, other._gold_order)
            and self._elements.shape == other._elements.shape
            and np.array_equal(self._elements, other._elements)
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "ElementSet({0}, n={1}, d={2})".format(self._modality.value, self.n, self.width)
