# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging
import sys
from datetime import datetime as datetime_now

from confapp import conf
from sca.formats import csv

import pycoherence
from pycoherence.messaging.epoch_report import EpochReport
from pycoherence.messaging.session_info import SessionInfo
from pycoherence.messaging.step_report import StepReport

logger = logging.getLogger(__name__)


class StreamsWrapper(object):
    def __init__(self, streams):
        self.streams = streams

    def write(self, data):
        for stream in self.streams:
            stream.write(data)

    def flush(self):
        for stream in self.streams:
            stream.flush()

    def close(self, owned=()):
        for stream in self.streams:
            stream.flush()
            if stream in owned:
                stream.close()


class Session(object):
    """
    Record of one run (training or evaluation), kept in memory and optionally streamed as CSV.

    Records are added with ``session += message``.

    :ivar list(BaseMessage) history: every record in arrival order
    :ivar list(EpochReport) epochs: training epoch records
    :ivar list(StepReport) steps: evaluation step records
    :ivar datetime start_timestamp: session start
    """

    INFO_SESSION_NAME = "SESSION-NAME"
    INFO_SESSION_STARTED = "SESSION-STARTED"
    INFO_SESSION_ENDED = "SESSION-ENDED"
    INFO_PYCOHERENCE_VERSION = "PYCOHERENCE-VERSION"
    INFO_COMMAND = "COMMAND"
    INFO_CONFIG = "CONFIG"

    def __init__(self, path=None, name=None):
        self.history = []  # type: list
        self.epochs = []  # type: list(EpochReport)
        self.steps = []  # type: list(StepReport)
        self.start_timestamp = datetime_now.now()  # type: datetime

        self._path = path
        self._owned = []
        self.csvwriter = None

        streams = []
        # stream data to a file.
        if path:
            stream = open(path, "w")
            self._owned.append(stream)
            streams.append(stream)

        # stream data to the stdout.
        if conf.PYCOHERENCE_STREAM2STDOUT:
            streams.append(sys.stdout)

        self.csvstream = StreamsWrapper(streams)
        if streams:
            self.csvwriter = csv.writer(
                self.csvstream,
                columns_headers=["TYPE", "PC-TIME", "STEP", "MODALITY", "MSG", "+INFO"],
                software="pycoherence v" + str(pycoherence.__version__),
                def_url="https://pycoherence.readthedocs.io",
                def_text="This file contains the records of a pycoherence run",
            )

        self += SessionInfo(self.INFO_PYCOHERENCE_VERSION, pycoherence.__version__)
        if name:
            self += SessionInfo(self.INFO_SESSION_NAME, name)
        self += SessionInfo(self.INFO_SESSION_STARTED, str(self.start_timestamp))

    def __add__(self, msg):
        if isinstance(msg, EpochReport):
            self.epochs.append(msg)
        elif isinstance(msg, StepReport):
            self.steps.append(msg)

        self.history.append(msg)
        logger.debug("Session record: %s", msg)

        if self.csvwriter:
            self.csvwriter.writerow(msg.tolist())
            self.csvwriter.flush()

        return self

    @property
    def path(self):
        return self._path

    def close(self):
        if self.csvstream is None:
            return
        self += SessionInfo(self.INFO_SESSION_ENDED, str(datetime_now.now()))
        self.csvstream.close(self._owned)
        self.csvstream = None
        self.csvwriter = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()

    def __del__(self):
        if getattr(self, "csvstream", None) is not None:
            self.csvstream.close(self._owned)
