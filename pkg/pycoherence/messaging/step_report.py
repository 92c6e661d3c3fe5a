# !/usr/bin/python3
# -*- coding: utf-8 -*-
import json

from pycoherence.messaging.base_message import BaseMessage
from pycoherence.utils import date_parser


class StepReport(BaseMessage):
    """
    Corpus metrics of one modality after one boosting step.
    """

    MESSAGE_TYPE_ALIAS = "STEP"

    def __init__(self, step, modality, report):
        self.report = report if isinstance(report, dict) else report.export()
        super(StepReport, self).__init__(
            "acc={acc:.6f} pmr={pmr:.6f} tau={tau:.6f}".format(**self.report), step, modality
        )

    def tolist(self):
        return [
            self.MESSAGE_TYPE_ALIAS,
            str(self.pc_timestamp),
            self.step,
            self.modality,
            self.content,
            json.dumps(self.report, sort_keys=True),
        ]

    @classmethod
    def fromlist(cls, row):
        obj = cls(int(row[2]), row[3], json.loads(row[5]))
        obj.pc_timestamp = date_parser.parse(row[1])
        return obj
