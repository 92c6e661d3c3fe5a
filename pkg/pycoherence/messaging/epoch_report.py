# !/usr/bin/python3
# -*- coding: utf-8 -*-
import json

from pycoherence.messaging.base_message import BaseMessage
from pycoherence.utils import date_parser


class EpochReport(BaseMessage):
    """
    End of a training epoch: the epoch number goes to the STEP column, the losses to MSG
    and the full epoch statistics, as JSON, to +INFO.
    """

    MESSAGE_TYPE_ALIAS = "EPOCH"

    def __init__(self, stats):
        self.stats = stats if isinstance(stats, dict) else stats.export()
        super(EpochReport, self).__init__(
            "text_loss={text_loss:.6f} image_loss={image_loss:.6f}".format(**self.stats), self.stats["epoch"]
        )

    @property
    def text_loss(self):
        return self.stats["text_loss"]

    @property
    def image_loss(self):
        return self.stats["image_loss"]

    def tolist(self):
        return [
            self.MESSAGE_TYPE_ALIAS,
            str(self.pc_timestamp),
            self.step,
            None,
            self.content,
            json.dumps(self.stats, sort_keys=True),
        ]

    @classmethod
    def fromlist(cls, row):
        obj = cls(json.loads(row[5]))
        obj.pc_timestamp = date_parser.parse(row[1])
        return obj
