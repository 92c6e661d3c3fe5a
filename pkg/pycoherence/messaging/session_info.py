# !/usr/bin/python3
# -*- coding: utf-8 -*-
from pycoherence.messaging.base_message import BaseMessage
from pycoherence.utils import date_parser


class SessionInfo(BaseMessage):
    """
    Named piece of information about the run, e.g. the command or the package version.
    """

    MESSAGE_TYPE_ALIAS = "INFO"

    def __init__(self, infoname, infovalue=None):
        super(SessionInfo, self).__init__(infoname)
        self._infovalue = infovalue

    def tolist(self):
        return [
            self.MESSAGE_TYPE_ALIAS,
            str(self.pc_timestamp),
            None,
            None,
            self.content,
            self._infovalue,
        ]

    @classmethod
    def fromlist(cls, row):
        obj = cls(row[4], row[5] if len(row) > 5 else None)
        obj.pc_timestamp = date_parser.parse(row[1])
        return obj

    @property
    def infoname(self):
        return self.content

    @property
    def infovalue(self):
        return self._infovalue
