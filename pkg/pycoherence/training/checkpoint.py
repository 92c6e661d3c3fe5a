# !/usr/bin/python3
# -*- coding: utf-8 -*-

"""
Checkpoint container.

Layout, all integers little-endian::

    magic           8 bytes   b"PYCOHCK\\x00"
    version         uint16    FORMAT_VERSION
    header length   uint32    byte length of the header
    header          UTF-8 JSON object, keys sorted, no whitespace
    payload         float64 little-endian tensors, concatenated in header order

The header carries the training configuration, the model architecture, the optimizer
scalars of both models and the list of tensors (model, group, name, shape). Groups are
``params``, ``m`` and ``v``; tensors are stored for the text model first, then the image
model, each group in that order, parameter names sorted.
"""

import json
import logging

import numpy as np

from pycoherence.exceptions import CheckpointVersionException
from pycoherence.exceptions import DataErrorException
from pycoherence.exceptions import DimensionErrorException
from pycoherence.io.binary_types import BinaryTypes
from pycoherence.io.binary_types import ByteReader
from pycoherence.model.ordering_model import OrderingModel
from pycoherence.story.modality import Modality
from pycoherence.training.adam import OptimizerState
from pycoherence.training.train_config import TrainConfig

logger = logging.getLogger(__name__)

MAGIC = b"PYCOHCK\x00"
FORMAT_VERSION = 1

GROUPS = ("params", "m", "v")
MODALITIES = (Modality.TEXT, Modality.IMAGE)


class Checkpoint(object):
    """
    Content of a checkpoint file.

    :ivar dict models: :class:`Modality` -> :class:`OrderingModel`
    :ivar dict states: :class:`Modality` -> :class:`OptimizerState`
    :ivar TrainConfig config: configuration the models were trained with
    :ivar int epochs_done: completed training epochs
    """

    def __init__(self, text_model, image_model, text_state, image_state, config, epochs_done=0):
        self.models = {Modality.TEXT: text_model, Modality.IMAGE: image_model}
        self.states = {Modality.TEXT: text_state, Modality.IMAGE: image_state}
        self.config = config  # type: TrainConfig
        self.epochs_done = int(epochs_done)

    @property
    def text_model(self):
        return self.models[Modality.TEXT]

    @property
    def image_model(self):
        return self.models[Modality.IMAGE]

    @property
    def text_state(self):
        return self.states[Modality.TEXT]

    @property
    def image_state(self):
        return self.states[Modality.IMAGE]

    @property
    def width(self):
        return self.text_model.width


def _group_tensors(model, state, group):
    params = model.params
    if group == "params":
        return params
    moments = state.m if group == "m" else state.v
    return {name: moments.get(name, np.zeros_like(tensor)) for name, tensor in params.items()}


def encode_checkpoint(checkpoint):
    """
    :rtype: bytes
    """
    text_model = checkpoint.text_model
    for model in checkpoint.models.values():
        if model.width != text_model.width:
            raise DimensionErrorException("both models must share one width")

    entries = []
    payload = []
    for modality in MODALITIES:
        model = checkpoint.models[modality]
        state = checkpoint.states[modality]
        for group in GROUPS:
            tensors = _group_tensors(model, state, group)
            for name in sorted(tensors):
                tensor = np.asarray(tensors[name], dtype=np.float64)
                entries.append({"model": modality.value, "group": group, "name": name, "shape": list(tensor.shape)})
                payload.append(BinaryTypes.get_float64_array(tensor))

    header = {
        "config": checkpoint.config.export(),
        "width": text_model.width,
        "n_heads": text_model.encoder.n_heads,
        "n_blocks": text_model.encoder.n_blocks,
        "ff_width": text_model.encoder.ff_width,
        "epochs_done": checkpoint.epochs_done,
        "optimizer": {
            modality.value: {
                "step": checkpoint.states[modality].step,
                "beta1": checkpoint.states[modality].beta1,
                "beta2": checkpoint.states[modality].beta2,
                "epsilon": checkpoint.states[modality].epsilon,
            }
            for modality in MODALITIES
        },
        "tensors": entries,
    }
    header_bytes = json.dumps(header, sort_keys=True, separators=(",", ":")).encode("utf-8")

    return b"".join(
        [
            MAGIC,
            BinaryTypes.get_uint16_array([FORMAT_VERSION]),
            BinaryTypes.get_uint32_array([len(header_bytes)]),
            header_bytes,
        ]
        + payload
    )


def decode_checkpoint(data, expected_width=None):
    """
    :param bytes data: checkpoint file content
    :param int expected_width: width the caller's data has; a different stored width is an error
    :rtype: Checkpoint
    """
    reader = ByteReader(data)
    try:
        if reader.read(len(MAGIC)) != MAGIC:
            raise CheckpointVersionException("not a pycoherence checkpoint (bad magic bytes)")
        version = reader.read_uint16()
        if version != FORMAT_VERSION:
            raise CheckpointVersionException(
                "checkpoint format version {0} is not supported (expected {1})".format(version, FORMAT_VERSION)
            )
        header = json.loads(reader.read(reader.read_uint32()).decode("utf-8"))

        width = int(header["width"])
        if expected_width is not None and width != expected_width:
            raise DimensionErrorException(
                "checkpoint width {0} does not match data width {1}".format(width, expected_width)
            )

        tensors = {(modality.value, group): {} for modality in MODALITIES for group in GROUPS}
        for entry in header["tensors"]:
            tensors[(entry["model"], entry["group"])][entry["name"]] = reader.read_float64_array(tuple(entry["shape"]))
        if reader.remaining:
            raise DataErrorException("checkpoint has {0} trailing bytes".format(reader.remaining))

        models = {}
        states = {}
        for modality in MODALITIES:
            models[modality] = OrderingModel.from_params(
                modality,
                width,
                header["n_heads"],
                tensors[(modality.value, "params")],
                header["n_blocks"],
                header["ff_width"],
            )
            scalars = header["optimizer"][modality.value]
            states[modality] = OptimizerState(
                tensors[(modality.value, "m")],
                tensors[(modality.value, "v")],
                scalars["step"],
                scalars["beta1"],
                scalars["beta2"],
                scalars["epsilon"],
            )
        config = TrainConfig.from_export(header["config"])
    except EOFError as err:
        raise DataErrorException("truncated checkpoint: {0}".format(err))
    except (KeyError, TypeError, ValueError) as err:
        raise DataErrorException("corrupt checkpoint header: {0}".format(err))

    return Checkpoint(
        models[Modality.TEXT],
        models[Modality.IMAGE],
        states[Modality.TEXT],
        states[Modality.IMAGE],
        config,
        header.get("epochs_done", 0),
    )


def save_checkpoint(path, checkpoint):
    data = encode_checkpoint(checkpoint)
    with open(path, "wb") as outfile:
        outfile.write(data)
    logger.info("Checkpoint saved to %s (%d bytes)", path, len(data))


def load_checkpoint(path, expected_width=None):
    """
    :rtype: Checkpoint
    """
    with open(path, "rb") as infile:
        data = infile.read()
    checkpoint = decode_checkpoint(data, expected_width)
    logger.info("Checkpoint loaded from %s (width %d)", path, checkpoint.width)
    return checkpoint
