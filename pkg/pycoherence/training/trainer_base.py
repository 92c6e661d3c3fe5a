# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging

import numpy as np
from confapp import conf

from pycoherence.exceptions import DimensionErrorException
from pycoherence.exceptions import NumericErrorException
from pycoherence.messaging.epoch_report import EpochReport
from pycoherence.messaging.value import ValueMessage
from pycoherence.messaging.warning import WarningMessage
from pycoherence.model.ordering_model import OrderingModel
from pycoherence.session import Session
from pycoherence.story.modality import Modality
from pycoherence.training.adam import OptimizerState
from pycoherence.training.checkpoint import Checkpoint
from pycoherence.training.epoch import train_epoch
from pycoherence.training.train_config import TrainConfig

logger = logging.getLogger(__name__)


class TrainerBase(object):
    """
    Joint training loop of the text and image ordering models.

    :ivar TrainConfig config: training settings
    :ivar OrderingModel text_model: current text model
    :ivar OrderingModel image_model: current image model
    :ivar OptimizerState text_state: Adam state of the text model
    :ivar OptimizerState image_state: Adam state of the image model
    :ivar int epochs_done: completed epochs, also across checkpoint reloads
    :ivar list(EpochStats) history: statistics of the epochs run by this trainer
    """

    def __init__(
        self,
        config=None,
        width=None,
        text_model=None,
        image_model=None,
        text_state=None,
        image_state=None,
        epochs_done=0,
    ):
        self.config = config if config is not None else TrainConfig()  # type: TrainConfig
        self._session = self.create_session()

        width = width if width is not None else conf.PYCOHERENCE_MODEL_WIDTH
        cfg = self.config
        if text_model is None:
            text_model = OrderingModel.create(
                Modality.TEXT, width, cfg.n_heads, [cfg.seed, 0], cfg.n_blocks, cfg.ff_width
            )
        if image_model is None:
            image_model = OrderingModel.create(
                Modality.IMAGE, width, cfg.n_heads, [cfg.seed, 1], cfg.n_blocks, cfg.ff_width
            )
        if text_model.width != image_model.width:
            raise DimensionErrorException(
                "text width {0} differs from image width {1}".format(text_model.width, image_model.width)
            )

        self.text_model = text_model  # type: OrderingModel
        self.image_model = image_model  # type: OrderingModel
        self.text_state = text_state if text_state is not None else OptimizerState.for_params(text_model.params)
        self.image_state = image_state if image_state is not None else OptimizerState.for_params(image_model.params)
        self.epochs_done = int(epochs_done)
        self.history = []  # type: list

    def create_session(self):
        return Session()

    @property
    def session(self):
        return self._session  # type: Session

    @session.setter
    def session(self, value):
        self._session = value  # type: Session

    @property
    def width(self):
        return self.text_model.width

    def fit(self, corpus, epochs=None):
        """
        Run ``epochs`` more epochs (default: ``config.epochs``) over ``corpus``.

        :param list(StoryPair) corpus: training stories
        :return: statistics of the epochs just run
        :rtype: list(EpochStats)
        """
        epochs = epochs if epochs is not None else self.config.epochs
        if epochs and corpus and corpus[0].text.width != self.width:
            raise DimensionErrorException(
                "data width {0} does not match model width {1}".format(corpus[0].text.width, self.width)
            )

        self.session += ValueMessage("stories", len(corpus))
        run = []
        for epoch in range(self.epochs_done, self.epochs_done + epochs):
            self.text_model, self.image_model, self.text_state, self.image_state, stats = train_epoch(
                corpus, self.text_model, self.image_model, self.config, self.text_state, self.image_state, epoch
            )
            self.epochs_done = epoch + 1

            if not (np.isfinite(stats.text_loss) and np.isfinite(stats.image_loss)):
                raise NumericErrorException("non-finite loss at epoch {0}: {1}".format(epoch, stats))
            if stats.skipped_steps:
                self.session += WarningMessage("{0} optimizer steps skipped".format(stats.skipped_steps), epoch)

            logger.info("%s", stats)
            self.session += EpochReport(stats)
            self.history.append(stats)
            run.append(stats)
        return run

    def checkpoint(self):
        """
        :rtype: Checkpoint
        """
        return Checkpoint(
            self.text_model, self.image_model, self.text_state, self.image_state, self.config, self.epochs_done
        )
