# !/usr/bin/python3
# -*- coding: utf-8 -*-
from pycoherence.messaging.base_message import BaseMessage


class ErrorMessage(BaseMessage):
    """
    Error that ended or degraded the run.
    """

    MESSAGE_TYPE_ALIAS = "error"
