# !/usr/bin/python3
# -*- coding: utf-8 -*-
from pycoherence.messaging.base_message import BaseMessage
from pycoherence.utils import date_parser


class ValueMessage(BaseMessage):

    MESSAGE_TYPE_ALIAS = "VAL"

    def __init__(self, value_name, value, step=None):
        super(ValueMessage, self).__init__(value_name, step)
        self._value = value

    @property
    def value_name(self):
        return self.content

    @property
    def value(self):
        return self._value

    def tolist(self):
        return [
            self.MESSAGE_TYPE_ALIAS,
            str(self.pc_timestamp),
            self.step,
            None,
            self.value_name,
            self.value,
        ]

    @classmethod
    def fromlist(cls, row):
        obj = cls(row[4], row[5], int(row[2]) if row[2] not in (None, "") else None)
        obj.pc_timestamp = date_parser.parse(row[1])
        return obj
