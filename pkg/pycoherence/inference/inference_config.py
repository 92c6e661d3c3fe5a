# !/usr/bin/python3
# -*- coding: utf-8 -*-

from confapp import conf

from pycoherence.exceptions import UsageErrorException
from pycoherence.guidance.guidance_config import GuidanceConfig


class InferenceConfig(object):
    """
    :ivar int steps: boosting steps after the uni-modal prediction
    :ivar bool early_stop: stop once both decoded orders no longer change
    :ivar GuidanceConfig guidance: guidance applied at every step
    """

    FIELDS = ("steps", "early_stop")

    def __init__(self, steps=None, early_stop=None, guidance=None):
        self.steps = steps if steps is not None else conf.PYCOHERENCE_INFERENCE_STEPS
        self.early_stop = early_stop if early_stop is not None else conf.PYCOHERENCE_EARLY_STOP
        self.guidance = guidance if guidance is not None else GuidanceConfig()  # type: GuidanceConfig
        self.validate()

    def validate(self):
        if self.steps < 0:
            raise UsageErrorException("steps must not be negative, got {0}".format(self.steps))
        self.guidance.validate()
        return self

    def export(self):
        values = {"steps": self.steps, "early_stop": self.early_stop}
        values.update(self.guidance.export())
        return values

    def __repr__(self):
        return "InferenceConfig({0})".format(self.export())
