# !/usr/bin/python3
# -*- coding: utf-8 -*-
from confapp import conf
import loggingbootstrap

__version__ = "0.3.0"
__license__ = "MIT"
__status__ = "Development"


# load the user settings
try:
    import user_settings

    conf += user_settings
except ImportError:
    pass

conf += "pycoherence.settings"

if conf.PYCOHERENCE_LOG_LEVEL is not None:
    # console and file handlers share the same level
    loggingbootstrap.create_double_logger(
        "pycoherence",
        conf.PYCOHERENCE_LOG_LEVEL,
        conf.PYCOHERENCE_LOG_FILE,
        conf.PYCOHERENCE_LOG_LEVEL,
    )
