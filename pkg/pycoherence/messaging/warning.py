# !/usr/bin/python3
# -*- coding: utf-8 -*-

from pycoherence.messaging.base_message import BaseMessage


class WarningMessage(BaseMessage):

    """ Message that represents a warning """

    MESSAGE_TYPE_ALIAS = "warning"
