# !/usr/bin/python3
# -*- coding: utf-8 -*-

import json
import logging

from pycoherence.exceptions import DataErrorException
from pycoherence.exceptions import UsageErrorException

logger = logging.getLogger(__name__)


def read_config_file(path, allowed):
    """
    Flat JSON object of option values keyed by option name.

    :param str path: file to read
    :param allowed: accepted keys
    :raises UsageErrorException: unknown keys
    :raises DataErrorException: not a JSON object
    :rtype: dict
    """
    with open(path, "r", encoding="utf-8") as infile:
        try:
            values = json.load(infile)
        except ValueError as err:
            raise DataErrorException("{0}: not valid JSON: {1}".format(path, err))

    if not isinstance(values, dict):
        raise DataErrorException("{0}: a config file holds one JSON object".format(path))
    unknown = sorted(set(values) - set(allowed))
    if unknown:
        raise UsageErrorException("{0}: unknown option(s) {1}".format(path, ", ".join(unknown)))

    logger.debug("Config file %s: %s", path, values)
    return values
