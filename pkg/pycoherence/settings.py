# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging
import os

# log verbosity, e.g. PYCOHERENCE_LOG_LEVEL=DEBUG; None disables the package loggers
PYCOHERENCE_LOG_LEVEL = getattr(
    logging, os.environ.get("PYCOHERENCE_LOG_LEVEL", "").upper() or "NOTSET", None
) or None
PYCOHERENCE_LOG_FILE = "pycoherence.log"

# stream the session records to the stdout as well as to the session file
PYCOHERENCE_STREAM2STDOUT = False

# CONTEXT ENCODER
# full-scale models use a width of 768; the desk default keeps tests fast
PYCOHERENCE_MODEL_WIDTH = 32
PYCOHERENCE_N_HEADS = 8
PYCOHERENCE_N_BLOCKS = 1
# None means 2 * width
PYCOHERENCE_FF_WIDTH = None
PYCOHERENCE_LAYER_NORM_EPS = 1e-6

# TRAINING
PYCOHERENCE_LEARNING_RATE = 2e-4
PYCOHERENCE_BATCH_SIZE = 16
PYCOHERENCE_EPOCHS = 20
PYCOHERENCE_SEED = 0
PYCOHERENCE_PAIR_TEMPERATURE = 0.1
PYCOHERENCE_IB_IN_TRAINING = True
PYCOHERENCE_ALTERNATION = "per-batch"
PYCOHERENCE_ADAM_BETA1 = 0.9
PYCOHERENCE_ADAM_BETA2 = 0.999
PYCOHERENCE_ADAM_EPSILON = 1e-8

# CROSS-MODAL GUIDANCE
PYCOHERENCE_GUIDANCE_MODE = "relative-order"
# threshold applied to the text matrix when it guides the image matrix
PYCOHERENCE_THETA_TEXT_SOURCE = 0.9
# threshold applied to the image matrix when it guides the text matrix
PYCOHERENCE_THETA_IMAGE_SOURCE = 0.8
PYCOHERENCE_RENORMALIZE_TRAINING = False
PYCOHERENCE_RENORMALIZE_INFERENCE = True

# INFERENCE
PYCOHERENCE_INFERENCE_STEPS = 10
PYCOHERENCE_EARLY_STOP = True

# SYNTHETIC CORPORA
PYCOHERENCE_SYNTH_STORIES = 200
PYCOHERENCE_SYNTH_SET_SIZE_RANGE = [5, 5]
PYCOHERENCE_SYNTH_ORDER_SIGNAL = 4.0
PYCOHERENCE_SYNTH_CONTENT_SCALE = 0.5
PYCOHERENCE_SYNTH_EQUAL_SIZES = True

# largest set accepted by the brute-force decoder
PYCOHERENCE_BRUTE_FORCE_MAX_SIZE = 8
