# !/usr/bin/python3
# -*- coding: utf-8 -*-

from enum import Enum

from confapp import conf

from pycoherence.exceptions import UsageErrorException
from pycoherence.guidance.guidance_config import GuidanceConfig


class Alternation(Enum):
    # image update then text update inside every batch
    PER_BATCH = "per-batch"
    # a full image pass then a full text pass inside every epoch
    PER_EPOCH = "per-epoch"


class TrainConfig(object):
    """
    Joint training settings of both modality models.

    :ivar float learning_rate: Adam learning rate
    :ivar int batch_size: stories per optimizer step
    :ivar int epochs: passes over the corpus
    :ivar int seed: seed of parameter initialization and story shuffling
    :ivar GuidanceConfig guidance: cross-modal guidance applied to the training loss
    :ivar bool ib_in_training: apply cross-modal guidance while training
    :ivar Alternation alternation: granularity of the image/text alternation
    :ivar float pair_temperature: temperature of the pairwise softmax in the loss
    :ivar int n_heads: attention heads of both encoders
    :ivar int n_blocks: encoder blocks
    :ivar int ff_width: encoder feed-forward width (None = 2 * width)
    """

    FIELDS = (
        "learning_rate", "batch_size", "epochs", "seed", "ib_in_training", "alternation",
        "pair_temperature", "n_heads", "n_blocks", "ff_width",
    )

    def __init__(
        self,
        learning_rate=None,
        batch_size=None,
        epochs=None,
        seed=None,
        guidance=None,
        ib_in_training=None,
        alternation=None,
        pair_temperature=None,
        n_heads=None,
        n_blocks=None,
        ff_width=None,
    ):
        self.learning_rate = learning_rate if learning_rate is not None else conf.PYCOHERENCE_LEARNING_RATE
        self.batch_size = batch_size if batch_size is not None else conf.PYCOHERENCE_BATCH_SIZE
        self.epochs = epochs if epochs is not None else conf.PYCOHERENCE_EPOCHS
        self.seed = seed if seed is not None else conf.PYCOHERENCE_SEED
        self.guidance = (
            guidance if guidance is not None else GuidanceConfig(renormalize=conf.PYCOHERENCE_RENORMALIZE_TRAINING)
        )  # type: GuidanceConfig
        self.ib_in_training = ib_in_training if ib_in_training is not None else conf.PYCOHERENCE_IB_IN_TRAINING
        self.alternation = alternation if alternation is not None else conf.PYCOHERENCE_ALTERNATION
        self.pair_temperature = (
            pair_temperature if pair_temperature is not None else conf.PYCOHERENCE_PAIR_TEMPERATURE
        )
        self.n_heads = n_heads if n_heads is not None else conf.PYCOHERENCE_N_HEADS
        self.n_blocks = n_blocks if n_blocks is not None else conf.PYCOHERENCE_N_BLOCKS
        self.ff_width = ff_width if ff_width is not None else conf.PYCOHERENCE_FF_WIDTH
        self.validate()

    def validate(self):
        if not self.learning_rate > 0:
            raise UsageErrorException("learning_rate must be positive, got {0}".format(self.learning_rate))
        if self.batch_size < 1:
            raise UsageErrorException("batch_size must be at least 1, got {0}".format(self.batch_size))
        if self.epochs < 0:
            raise UsageErrorException("epochs must not be negative, got {0}".format(self.epochs))
        if not self.pair_temperature > 0:
            raise UsageErrorException("pair_temperature must be positive, got {0}".format(self.pair_temperature))
        if self.n_heads < 1 or self.n_blocks < 1:
            raise UsageErrorException("n_heads and n_blocks must be at least 1")
        try:
            self.alternation = Alternation(self.alternation)
        except ValueError:
            raise UsageErrorException("unknown alternation {0!r}".format(self.alternation))
        self.guidance.validate()
        return self

    @property
    def guided(self):
        """
        Whether the training loss sees guidance-refined matrices.
        """
        return self.ib_in_training and self.guidance.enabled

    def export(self):
        values = {name: getattr(self, name) for name in self.FIELDS}
        values["alternation"] = self.alternation.value
        values.update(self.guidance.export())
        return values

    @classmethod
    def from_export(cls, values):
        guidance = GuidanceConfig(**{name: values[name] for name in GuidanceConfig.FIELDS if name in values})
        return cls(guidance=guidance, **{name: values[name] for name in cls.FIELDS if name in values})

    def __repr__(self):
        return "TrainConfig({0})".format(self.export())
