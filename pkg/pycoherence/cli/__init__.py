# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging
import sys

from pycoherence.cli.commands import COMMANDS
from pycoherence.cli.parser import parse_arguments
from pycoherence.exceptions import CoherenceErrorException
from pycoherence.exceptions import DataErrorException
from pycoherence.exceptions import NumericErrorException

logger = logging.getLogger(__name__)


def main(argv=None):
    """
    Command-line entry point.

    :return: exit code, 0 ok, 1 usage error, 2 data error, 3 numeric failure
    :rtype: int
    """
    try:
        args = parse_arguments(argv)
        return COMMANDS[args.command](args)
    except CoherenceErrorException as err:
        logger.debug("Command failed", exc_info=True)
        print("error: {0}".format(err), file=sys.stderr)
        return err.EXIT_CODE
    except OSError as err:
        print("error: {0}".format(err), file=sys.stderr)
        return DataErrorException.EXIT_CODE
    except FloatingPointError as err:
        print("error: {0}".format(err), file=sys.stderr)
        return NumericErrorException.EXIT_CODE
