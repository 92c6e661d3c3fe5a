import logging

from pycoherence.messaging.epoch_report import EpochReport
from pycoherence.messaging.error import ErrorMessage
from pycoherence.messaging.session_info import SessionInfo
from pycoherence.messaging.step_report import StepReport
from pycoherence.messaging.value import ValueMessage
from pycoherence.messaging.warning import WarningMessage

logger = logging.getLogger(__name__)


class MessageParser(object):

    MESSAGES_TYPES_CLASSES = [
        SessionInfo,
        ValueMessage,
        EpochReport,
        StepReport,
        WarningMessage,
        ErrorMessage,
    ]

    def fromlist(self, row):
        """
        Parses one row of a session file back into its record.

        :param list row: the columns of the row
        :rtype: BaseMessage
        """
        if row is None or len(row) == 0:
            return ErrorMessage("Parse error: line is empty")

        msg = None
        try:
            msgtype = row[0]

            for msgtype_class in self.MESSAGES_TYPES_CLASSES:
                if msgtype_class.check_type(msgtype):
                    msg = msgtype_class.fromlist(row)
                    break
        except Exception:
            logger.warning("Could not parse session row: {0}".format(str(row)), exc_info=True)
            return ErrorMessage(str(row))

        return msg

