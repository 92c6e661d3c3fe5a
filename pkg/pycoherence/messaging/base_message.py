#!/usr/bin/python3
# -*- coding: utf-8 -*-
from datetime import datetime as datetime_now

from pycoherence.utils import date_parser


class BaseMessage(object):
    """
    Represents a record of a run session.

    Rows have the columns ``TYPE, PC-TIME, STEP, MODALITY, MSG, +INFO``.
    """

    MESSAGE_TYPE_ALIAS = "MESSAGE"

    def __init__(self, content, step=None, modality=None):
        self.pc_timestamp = datetime_now.now()
        self.step = step
        self.modality = modality
        self.content = content

    def __str__(self):
        return "step:{0} pc-time:{1} {2}".format(
            self.step if self.step is not None else "",
            self.pc_timestamp.strftime("%Y%m%d%H%M%S") if self.pc_timestamp else "",
            self.content,
        )

    @classmethod
    def check_type(cls, typestr):
        """
        Returns True if the typestr represents the class
        """
        return typestr == cls.MESSAGE_TYPE_ALIAS

    def tolist(self):
        return [
            self.MESSAGE_TYPE_ALIAS,
            str(self.pc_timestamp),
            self.step,
            self.modality,
            self.content,
            None,
        ]

    @classmethod
    def fromlist(cls, row):
        obj = cls(row[4], int(row[2]) if row[2] not in (None, "") else None, row[3] or None)
        obj.pc_timestamp = date_parser.parse(row[1])
        return obj
