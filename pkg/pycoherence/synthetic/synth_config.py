# !/usr/bin/python3
# -*- coding: utf-8 -*-

from enum import Enum

from confapp import conf

from pycoherence.exceptions import UsageErrorException


class SynthConfig(object):
    """
    Settings of the synthetic paired-story generator.

    :ivar int stories: number of stories
    :ivar list(int) set_size_range: inclusive ``[min, max]`` set size
    :ivar int dim: embedding width
    :ivar float order_signal: length of the position signal along the position direction
    :ivar float noise_text: standard deviation of the text feature noise
    :ivar float noise_image: standard deviation of the image feature noise
    :ivar float align_noise: standard deviation of the similarity perturbation
    :ivar int seed: generator seed
    :ivar float content_scale: scale of the per-element content, orthogonal to the position direction
    :ivar bool equal_sizes: both sets of a story have the same size
    """

    FIELDS = (
        "stories", "set_size_range", "dim", "order_signal", "noise_text", "noise_image",
        "align_noise", "seed", "content_scale", "equal_sizes",
    )

    def __init__(
        self,
        stories=None,
        set_size_range=None,
        dim=None,
        order_signal=None,
        noise_text=0.0,
        noise_image=0.0,
        align_noise=0.0,
        seed=None,
        content_scale=None,
        equal_sizes=None,
    ):
        self.stories = stories if stories is not None else conf.PYCOHERENCE_SYNTH_STORIES
        self.set_size_range = list(
            set_size_range if set_size_range is not None else conf.PYCOHERENCE_SYNTH_SET_SIZE_RANGE
        )
        self.dim = dim if dim is not None else conf.PYCOHERENCE_MODEL_WIDTH
        self.order_signal = order_signal if order_signal is not None else conf.PYCOHERENCE_SYNTH_ORDER_SIGNAL
        self.noise_text = noise_text
        self.noise_image = noise_image
        self.align_noise = align_noise
        self.seed = seed if seed is not None else conf.PYCOHERENCE_SEED
        self.content_scale = content_scale if content_scale is not None else conf.PYCOHERENCE_SYNTH_CONTENT_SCALE
        self.equal_sizes = equal_sizes if equal_sizes is not None else conf.PYCOHERENCE_SYNTH_EQUAL_SIZES
        self.validate()

    def validate(self):
        if self.stories < 1:
            raise UsageErrorException("stories must be at least 1, got {0}".format(self.stories))
        if len(self.set_size_range) != 2:
            raise UsageErrorException("set_size_range must be [min, max]")
        low, high = self.set_size_range
        if low < 2 or high < low:
            raise UsageErrorException("invalid set_size_range {0}: need 2 <= min <= max".format(self.set_size_range))
        if self.dim < 2:
            raise UsageErrorException("dim must be at least 2, got {0}".format(self.dim))
        for name in ("order_signal", "noise_text", "noise_image", "align_noise", "content_scale"):
            if getattr(self, name) < 0:
                raise UsageErrorException("{0} must not be negative, got {1}".format(name, getattr(self, name)))
        return self

    def copy(self, **overrides):
        values = self.export()
        values.update(overrides)
        return SynthConfig(**values)

    def export(self):
        return {name: getattr(self, name) for name in self.FIELDS}

    def __repr__(self):
        return "SynthConfig({0})".format(self.export())


class Regime(Enum):
    CLEAN_BOTH = "clean-both"
    STRONG_TEXT_WEAK_IMAGE = "strong-text-weak-image"
    WEAK_BOTH = "weak-both"
    NOISY_ALIGNMENT = "noisy-alignment"


# noise levels of every regime; the other fields come from the settings
REGIME_NOISE = {
    Regime.CLEAN_BOTH: {"noise_text": 0.0, "noise_image": 0.0, "align_noise": 0.0},
    Regime.STRONG_TEXT_WEAK_IMAGE: {"noise_text": 0.05, "noise_image": 1.5, "align_noise": 0.0},
    Regime.WEAK_BOTH: {"noise_text": 1.5, "noise_image": 1.5, "align_noise": 0.0},
    Regime.NOISY_ALIGNMENT: {"noise_text": 0.25, "noise_image": 0.25, "align_noise": 0.5},
}


def regime(name, **overrides):
    """
    Fixed generator settings of a named experimental regime.

    :param name: :class:`Regime` or its value, e.g. ``"strong-text-weak-image"``
    :param overrides: any other :class:`SynthConfig` field (stories, seed, ...)
    :rtype: SynthConfig
    """
    try:
        key = Regime(name)
    except ValueError:
        raise UsageErrorException(
            "unknown regime {0!r}, expected one of {1}".format(name, ", ".join(item.value for item in Regime))
        )
    values = dict(REGIME_NOISE[key])
    values.update(overrides)
    return SynthConfig(**values)
