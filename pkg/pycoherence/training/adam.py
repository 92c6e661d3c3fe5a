# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging

import numpy as np
from confapp import conf

from pycoherence.exceptions import DimensionErrorException

logger = logging.getLogger(__name__)


class OptimizerState(object):
    """
    Adam moment estimates of one parameter dictionary.

    :ivar dict m: first moment per parameter
    :ivar dict v: second moment per parameter
    :ivar int step: number of applied updates
    :ivar list(str) errors: descriptions of skipped updates
    """

    def __init__(self, m=None, v=None, step=0, beta1=None, beta2=None, epsilon=None):
        self.m = m if m is not None else {}  # type: dict
        self.v = v if v is not None else {}  # type: dict
        self.step = int(step)
        self.beta1 = beta1 if beta1 is not None else conf.PYCOHERENCE_ADAM_BETA1
        self.beta2 = beta2 if beta2 is not None else conf.PYCOHERENCE_ADAM_BETA2
        self.epsilon = epsilon if epsilon is not None else conf.PYCOHERENCE_ADAM_EPSILON
        self.errors = []  # type: list(str)

    @classmethod
    def for_params(cls, params):
        return cls(
            {name: np.zeros_like(tensor, dtype=np.float64) for name, tensor in params.items()},
            {name: np.zeros_like(tensor, dtype=np.float64) for name, tensor in params.items()},
        )

    def copy(self):
        state = OptimizerState(
            {name: tensor.copy() for name, tensor in self.m.items()},
            {name: tensor.copy() for name, tensor in self.v.items()},
            self.step,
            self.beta1,
            self.beta2,
            self.epsilon,
        )
        state.errors = list(self.errors)
        return state


def adam_step(params, grads, state, lr):
    """
    One bias-corrected Adam update.

    Non-finite gradients skip the update: parameters and moments are returned unchanged
    and the failure is recorded in ``state.errors``.

    :param dict params: name -> tensor
    :param dict grads: name -> gradient, same shapes as ``params``
    :param OptimizerState state: moments before the update (not modified)
    :param float lr: learning rate
    :return: (updated parameters, updated state)
    :rtype: tuple(dict, OptimizerState)
    """
    if set(grads) != set(params):
        raise DimensionErrorException("gradient names do not match the parameters")
    for name, tensor in params.items():
        if np.shape(grads[name]) != np.shape(tensor):
            raise DimensionErrorException(
                "gradient of {0} has shape {1}, expected {2}".format(name, np.shape(grads[name]), np.shape(tensor))
            )
        if name in state.m and state.m[name].shape != np.shape(tensor):
            raise DimensionErrorException("optimizer moments of {0} do not match the parameter".format(name))

    new_state = state.copy()
    bad = sorted(name for name, grad in grads.items() if not np.all(np.isfinite(grad)))
    if bad:
        message = "non-finite gradient in {0}; step skipped".format(", ".join(bad))
        logger.warning(message)
        new_state.errors.append(message)
        return dict(params), new_state

    new_state.step += 1
    bc1 = 1.0 - new_state.beta1 ** new_state.step
    bc2 = 1.0 - new_state.beta2 ** new_state.step

    updated = {}
    for name, tensor in params.items():
        grad = np.asarray(grads[name], dtype=np.float64)
        m = new_state.m.get(name, np.zeros_like(grad))
        v = new_state.v.get(name, np.zeros_like(grad))
        m = new_state.beta1 * m + (1.0 - new_state.beta1) * grad
        v = new_state.beta2 * v + (1.0 - new_state.beta2) * (grad * grad)
        new_state.m[name] = m
        new_state.v[name] = v
        updated[name] = tensor - lr * (m / bc1) / (np.sqrt(v / bc2) + new_state.epsilon)

    return updated, new_state
