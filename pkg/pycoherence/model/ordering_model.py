# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging

import numpy as np

from pycoherence.exceptions import DimensionErrorException
from pycoherence.model import context_encoder
from pycoherence.model.pairwise_classifier import PairClassifierParams
from pycoherence.model.pairwise_classifier import order_matrix
from pycoherence.model.pairwise_classifier import order_matrix_backward
from pycoherence.story.modality import Modality

logger = logging.getLogger(__name__)

ENCODER_PREFIX = "encoder."
CLASSIFIER_PREFIX = "classifier."


class ForwardCache(object):
    """
    Everything :meth:`OrderingModel.backward` needs from a forward pass.
    """

    def __init__(self, encoded, encoder_cache, scores):
        self.encoded = encoded  # type: numpy.ndarray
        self.encoder_cache = encoder_cache  # type: EncoderCache
        self.scores = scores  # type: numpy.ndarray


class OrderingModel(object):
    """
    Uni-modal ordering model: a context encoder followed by the pairwise order classifier.

    The trainable parameters (:attr:`params`) are exposed as one flat dictionary so the
    optimizer and the checkpoint container can treat both parts alike.

    :ivar Modality modality: modality this model orders
    :ivar EncoderParams encoder: context encoder parameters
    :ivar PairClassifierParams classifier: pairwise classifier parameters
    """

    def __init__(self, modality, encoder, classifier):
        if encoder.width != classifier.width:
            raise DimensionErrorException(
                "encoder width {0} differs from classifier width {1}".format(encoder.width, classifier.width)
            )
        self.modality = Modality(modality)
        self.encoder = encoder  # type: EncoderParams
        self.classifier = classifier  # type: PairClassifierParams

    @classmethod
    def create(cls, modality, width, n_heads, seed, n_blocks=1, ff_width=None):
        """
        Freshly initialized model; encoder and classifier draw from seeds derived from ``seed``.
        """
        seeds = np.random.SeedSequence(seed).generate_state(2)
        encoder = context_encoder.init_params(width, n_heads, int(seeds[0]), n_blocks, ff_width)
        classifier = PairClassifierParams.init(width, int(seeds[1]))
        return cls(modality, encoder, classifier)

    @classmethod
    def from_params(cls, modality, width, n_heads, params, n_blocks=1, ff_width=None):
        """
        Model rebuilt from a flat parameter dictionary, as stored in checkpoints.

        Names and shapes are checked against a freshly laid out model of the same architecture.
        """
        return cls.create(modality, width, n_heads, 0, n_blocks, ff_width).with_params(params)

    @property
    def width(self):
        return self.encoder.width

    @property
    def params(self):
        params = {ENCODER_PREFIX + name: tensor for name, tensor in self.encoder.tensors.items()}
        params.update({CLASSIFIER_PREFIX + name: tensor for name, tensor in self.classifier.tensors.items()})
        return params

    def with_params(self, params):
        """
        Copy of this model carrying new parameter values.

        :param dict params: same keys and shapes as :attr:`params`
        :rtype: OrderingModel
        """
        current = self.params
        if set(params) != set(current):
            raise DimensionErrorException("parameter names do not match the model")
        for name, tensor in params.items():
            if np.shape(tensor) != current[name].shape:
                raise DimensionErrorException(
                    "parameter {0} has shape {1}, expected {2}".format(name, np.shape(tensor), current[name].shape)
                )

        encoder_tensors = {
            name[len(ENCODER_PREFIX):]: np.array(tensor, dtype=np.float64)
            for name, tensor in params.items()
            if name.startswith(ENCODER_PREFIX)
        }
        classifier_tensors = {
            name[len(CLASSIFIER_PREFIX):]: np.array(tensor, dtype=np.float64)
            for name, tensor in params.items()
            if name.startswith(CLASSIFIER_PREFIX)
        }
        return OrderingModel(
            self.modality,
            self.encoder.with_tensors(encoder_tensors),
            PairClassifierParams.from_tensors(classifier_tensors),
        )

    def forward(self, elements):
        """
        :param numpy.ndarray elements: ``n x d`` embeddings of one set
        :return: (order score matrix, cache for :meth:`backward`)
        :rtype: tuple(OrderScoreMatrix, ForwardCache)
        """
        encoded, encoder_cache = context_encoder.encode_set(elements, self.encoder, return_cache=True)
        matrix = order_matrix(encoded, self.classifier)
        return matrix, ForwardCache(encoded, encoder_cache, matrix.scores)

    def score_matrix(self, elements):
        """
        :rtype: OrderScoreMatrix
        """
        return self.forward(elements)[0]

    def backward(self, cache, d_scores):
        """
        Parameter gradients of a scalar loss given its gradient w.r.t. the order scores.

        :rtype: dict
        """
        classifier_grads, d_encoded = order_matrix_backward(cache.encoded, self.classifier, cache.scores, d_scores)
        encoder_grads, _ = context_encoder.backward_from_cache(cache.encoder_cache, self.encoder, d_encoded)

        grads = {ENCODER_PREFIX + name: grad for name, grad in encoder_grads.items()}
        grads.update({CLASSIFIER_PREFIX + name: grad for name, grad in classifier_grads.items()})
        return grads

    def __repr__(self):
        return "OrderingModel({0}, {1})".format(self.modality.value, self.encoder)
