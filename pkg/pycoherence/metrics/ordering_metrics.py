# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging

import numpy as np

from pycoherence.exceptions import DataErrorException, DimensionErrorException
from pycoherence.story.permutation import Permutation

logger = logging.getLogger(__name__)


def _pair(pred, gold):
    pred, gold = Permutation(pred), Permutation(gold)
    if len(pred) != len(gold):
        raise DimensionErrorException("prediction of length {0} against gold of length {1}".format(len(pred), len(gold)))
    return pred, gold


def accuracy(pred, gold):
    """
    Fraction of positions holding the same element in both orders.

    :rtype: float
    """
    pred, gold = _pair(pred, gold)
    if len(gold) == 0:
        raise DimensionErrorException("accuracy of an empty order")
    return float(np.mean(np.asarray(pred) == np.asarray(gold)))


def pmr(preds, golds):
    """
    Perfect match ratio: fraction of sets whose predicted order is entirely correct.

    :rtype: float
    """
    if len(preds) != len(golds):
        raise DimensionErrorException("{0} predictions for {1} gold orders".format(len(preds), len(golds)))
    if len(golds) == 0:
        raise DataErrorException("perfect match ratio of an empty corpus")
    return sum(1 for pred, gold in zip(preds, golds) if tuple(_pair(pred, gold)[0]) == tuple(gold)) / len(golds)


def inversions(pred, gold):
    """
    Number of element pairs whose relative order differs between the two orders.

    :rtype: int
    """
    pred, gold = _pair(pred, gold)
    pred_pos, gold_pos = pred.positions(), gold.positions()
    disagree = np.sign(pred_pos[:, None] - pred_pos[None, :]) * np.sign(gold_pos[:, None] - gold_pos[None, :]) < 0
    return int(np.triu(disagree, k=1).sum())


def kendall_tau(pred, gold):
    """
    Kendall's tau, ``1 - 2 * inversions / C(n, 2)``.

    :rtype: float
    """
    n = len(gold)
    if n < 2:
        raise DimensionErrorException("Kendall's tau needs at least two elements")
    return 1.0 - 2.0 * inversions(pred, gold) / (n * (n - 1) // 2)


class CorpusReport(object):
    """
    Corpus-level ordering quality: accuracy and tau are unweighted means over sets.

    :ivar float acc: mean accuracy
    :ivar float pmr: perfect match ratio
    :ivar float tau: mean Kendall's tau
    :ivar int sets: number of sets
    """

    def __init__(self, acc, pmr, tau, sets):
        self.acc = acc
        self.pmr = pmr
        self.tau = tau
        self.sets = sets

    def export(self):
        return {"acc": self.acc, "pmr": self.pmr, "tau": self.tau}

    def __eq__(self, other):
        return isinstance(other, CorpusReport) and self.export() == other.export() and self.sets == other.sets

    def __ne__(self, other):
        return not self.__eq__(other)

    def __str__(self):
        return "acc={0:.6f} pmr={1:.6f} tau={2:.6f}".format(self.acc, self.pmr, self.tau)

    def __repr__(self):
        return "CorpusReport({0}, sets={1})".format(self, self.sets)


def corpus_report(preds, golds):
    """
    :param list preds: predicted permutations
    :param list golds: gold permutations, aligned with ``preds``
    :rtype: CorpusReport
    """
    if len(golds) == 0:
        raise DataErrorException("cannot report on an empty corpus")
    pmr_value = pmr(preds, golds)
    accs = [accuracy(pred, gold) for pred, gold in zip(preds, golds)]
    taus = [kendall_tau(pred, gold) for pred, gold in zip(preds, golds)]
    return CorpusReport(sum(accs) / len(accs), pmr_value, sum(taus) / len(taus), len(golds))
