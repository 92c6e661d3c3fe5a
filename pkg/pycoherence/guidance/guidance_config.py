# !/usr/bin/python3
# -*- coding: utf-8 -*-

from enum import Enum

from confapp import conf

from pycoherence.exceptions import UsageErrorException


class GuidanceMode(Enum):
    OFF = "off"
    RELATIVE_ORDER = "relative-order"


class GuidanceDirection(Enum):
    # rows of the similarity are read
    TEXT_TO_IMAGE = "text-to-image"
    # columns of the similarity are read
    IMAGE_TO_TEXT = "image-to-text"


class GuidanceConfig(object):
    """
    Cross-modal guidance settings.

    :ivar float theta_text_source: mask threshold on the text matrix when it guides the image matrix
    :ivar float theta_image_source: mask threshold on the image matrix when it guides the text matrix
    :ivar bool renormalize: rescale every refined pair so that both directions sum to 1
    :ivar GuidanceMode mode: guidance on or off
    """

    FIELDS = ("theta_text_source", "theta_image_source", "renormalize", "mode")

    def __init__(self, theta_text_source=None, theta_image_source=None, renormalize=None, mode=None):
        self.theta_text_source = (
            theta_text_source if theta_text_source is not None else conf.PYCOHERENCE_THETA_TEXT_SOURCE
        )
        self.theta_image_source = (
            theta_image_source if theta_image_source is not None else conf.PYCOHERENCE_THETA_IMAGE_SOURCE
        )
        self.renormalize = renormalize if renormalize is not None else conf.PYCOHERENCE_RENORMALIZE_INFERENCE
        self.mode = mode if mode is not None else conf.PYCOHERENCE_GUIDANCE_MODE
        self.validate()

    def validate(self):
        for name in ("theta_text_source", "theta_image_source"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise UsageErrorException("{0} must lie in [0, 1], got {1}".format(name, value))
        try:
            self.mode = GuidanceMode(self.mode)
        except ValueError:
            raise UsageErrorException("unknown guidance mode {0!r}".format(self.mode))
        return self

    @property
    def enabled(self):
        return self.mode is GuidanceMode.RELATIVE_ORDER

    def theta_for(self, direction):
        """
        Threshold applied to the source matrix of a guidance direction.
        """
        if GuidanceDirection(direction) is GuidanceDirection.TEXT_TO_IMAGE:
            return self.theta_text_source
        return self.theta_image_source

    def export(self):
        return {
            "theta_text_source": self.theta_text_source,
            "theta_image_source": self.theta_image_source,
            "renormalize": self.renormalize,
            "mode": self.mode.value,
        }

    def __repr__(self):
        return "GuidanceConfig({0})".format(self.export())
