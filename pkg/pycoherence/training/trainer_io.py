# !/usr/bin/python3
# -*- coding: utf-8 -*-

import json
import logging

from pycoherence.messaging.session_info import SessionInfo
from pycoherence.session import Session
from pycoherence.training.checkpoint import load_checkpoint
from pycoherence.training.checkpoint import save_checkpoint
from pycoherence.training.trainer_base import TrainerBase

logger = logging.getLogger(__name__)


class TrainerIO(TrainerBase):
    """
    Trainer I/O logic: session file and checkpoints.
    """

    INFO_CHECKPOINT_SAVED = "CHECKPOINT-SAVED"
    INFO_CHECKPOINT_LOADED = "CHECKPOINT-LOADED"

    def __init__(self, config=None, width=None, session_path=None, session_name=None, **kwargs):
        self.session_path = session_path
        self.session_name = session_name
        super(TrainerIO, self).__init__(config, width, **kwargs)
        self.session += SessionInfo(Session.INFO_CONFIG, json.dumps(self.config.export(), sort_keys=True))

    def create_session(self):
        return Session(self.session_path, self.session_name)

    @classmethod
    def from_checkpoint(cls, path, expected_width=None, config=None, session_path=None, session_name=None):
        """
        Resume from a checkpoint file.

        :param TrainConfig config: replaces the stored configuration when given
        """
        checkpoint = load_checkpoint(path, expected_width)
        trainer = cls(
            config if config is not None else checkpoint.config,
            checkpoint.width,
            session_path,
            session_name,
            text_model=checkpoint.text_model,
            image_model=checkpoint.image_model,
            text_state=checkpoint.text_state,
            image_state=checkpoint.image_state,
            epochs_done=checkpoint.epochs_done,
        )
        trainer.session += SessionInfo(cls.INFO_CHECKPOINT_LOADED, path)
        return trainer

    def save(self, path):
        save_checkpoint(path, self.checkpoint())
        self.session += SessionInfo(self.INFO_CHECKPOINT_SAVED, path)

    def close(self):
        self.session.close()
