# !/usr/bin/python3
# -*- coding: utf-8 -*-

import numpy as np


class Permutation(tuple):
    """
    Position-ordered list of element indices: ``perm[0]`` is the element placed first.

    Compares equal to any tuple with the same items.
    """

    def __new__(cls, order):
        return super(Permutation, cls).__new__(cls, (int(i) for i in order))

    @classmethod
    def from_positions(cls, positions):
        """
        Build the permutation from the position of every element.

        :param list(int) positions: ``positions[k]`` is the position of element ``k``
        :rtype: Permutation
        """
        return cls(np.argsort(np.asarray(positions), kind="stable"))

    def positions(self):
        """
        Inverse mapping: position of every element.

        :rtype: numpy.ndarray
        """
        positions = np.empty(len(self), dtype=np.int64)
        positions[list(self)] = np.arange(len(self))
        return positions

    def is_valid(self):
        return sorted(self) == list(range(len(self)))

    def __repr__(self):
        return "Permutation({0})".format(list(self))
