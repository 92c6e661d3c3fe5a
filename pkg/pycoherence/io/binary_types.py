# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging
import struct

import numpy as np

logger = logging.getLogger(__name__)


class DataType(object):
    def __init__(self, name, size):
        self.name = name
        self.size = size


class BinaryTypes(object):
    """
    Little-endian encoders and decoders of the fixed-width fields used by the checkpoint container.
    """

    UINT16 = DataType("uint16", 2)
    UINT32 = DataType("uint32", 4)
    FLOAT64 = DataType("float64", 8)

    @staticmethod
    def get_uint16_array(array):
        return np.array(array, dtype="<u2").tobytes()

    @staticmethod
    def get_uint32_array(array):
        return np.array(array, dtype="<u4").tobytes()

    @staticmethod
    def get_float64_array(array):
        return np.ascontiguousarray(array, dtype="<f8").tobytes()

    @staticmethod
    def cvt_uint16(message_bytes):
        return struct.unpack("<H", message_bytes)[0]

    @staticmethod
    def cvt_uint32(message_bytes):
        return struct.unpack("<L", message_bytes)[0]

    @staticmethod
    def cvt_float64_array(message_bytes, shape):
        return np.frombuffer(message_bytes, dtype="<f8").astype(np.float64).reshape(shape)


class ByteReader(object):
    """
    Sequential reader over an in-memory byte buffer.

    Reading past the end raises ``EOFError``, so truncated files are reported as such.
    """

    def __init__(self, data):
        self._data = data
        self._offset = 0

    @property
    def remaining(self):
        return len(self._data) - self._offset

    def read(self, size):
        if size > self.remaining:
            raise EOFError("expected {0} more bytes, {1} left".format(size, self.remaining))
        chunk = self._data[self._offset:self._offset + size]
        self._offset += size
        return chunk

    def read_uint16(self):
        return BinaryTypes.cvt_uint16(self.read(BinaryTypes.UINT16.size))

    def read_uint32(self):
        return BinaryTypes.cvt_uint32(self.read(BinaryTypes.UINT32.size))

    def read_float64_array(self, shape):
        count = int(np.prod(shape, dtype=np.int64))
        return BinaryTypes.cvt_float64_array(self.read(count * BinaryTypes.FLOAT64.size), shape)
