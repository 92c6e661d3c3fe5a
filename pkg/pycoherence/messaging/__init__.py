from pycoherence.messaging.base_message import BaseMessage
from pycoherence.messaging.epoch_report import EpochReport
from pycoherence.messaging.error import ErrorMessage
from pycoherence.messaging.parser import MessageParser
from pycoherence.messaging.session_info import SessionInfo
from pycoherence.messaging.step_report import StepReport
from pycoherence.messaging.value import ValueMessage
from pycoherence.messaging.warning import WarningMessage
