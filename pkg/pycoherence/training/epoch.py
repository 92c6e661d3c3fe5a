# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging

import numpy as np

from pycoherence.exceptions import DataErrorException
from pycoherence.guidance.cgo_mu import cgo_mu
from pycoherence.guidance.cgo_mu import normalize_pairs
from pycoherence.guidance.cgo_mu import normalize_pairs_backward
from pycoherence.guidance.guidance_config import GuidanceConfig
from pycoherence.guidance.guidance_config import GuidanceDirection
from pycoherence.model.pairwise_classifier import pairwise_loss
from pycoherence.story.modality import Modality
from pycoherence.story.validation import validate_story
from pycoherence.training.adam import adam_step
from pycoherence.training.train_config import Alternation

logger = logging.getLogger(__name__)


class EpochStats(object):
    """
    :ivar int epoch: epoch index
    :ivar float text_loss: mean pairwise loss of the text model over the epoch's batches
    :ivar float image_loss: mean pairwise loss of the image model over the epoch's batches
    :ivar int skipped_steps: optimizer steps skipped because of non-finite gradients
    :ivar int guided_additions: guidance updates applied to training matrices
    """

    def __init__(self, epoch, text_loss, image_loss, skipped_steps=0, guided_additions=0):
        self.epoch = epoch
        self.text_loss = text_loss
        self.image_loss = image_loss
        self.skipped_steps = skipped_steps
        self.guided_additions = guided_additions

    def loss(self, modality):
        return self.text_loss if Modality(modality) is Modality.TEXT else self.image_loss

    def export(self):
        return {
            "epoch": self.epoch,
            "text_loss": self.text_loss,
            "image_loss": self.image_loss,
            "skipped_steps": self.skipped_steps,
            "guided_additions": self.guided_additions,
        }

    def __str__(self):
        return "epoch={epoch} text_loss={text_loss:.6f} image_loss={image_loss:.6f}".format(**self.export())


def guidance_direction(target_modality):
    """
    Guidance direction that refines the matrix of ``target_modality``.
    """
    if Modality(target_modality) is Modality.IMAGE:
        return GuidanceDirection.TEXT_TO_IMAGE
    return GuidanceDirection.IMAGE_TO_TEXT


def story_loss(model, story, cfg, counterpart=None):
    """
    Pairwise loss of one story and its parameter gradients.

    When guidance is active the loss is computed on the matrix refined by the frozen
    ``counterpart``; the guidance additions are constants, so no gradient reaches them.
    A pair renormalization of the refined matrix is differentiated through.

    :param OrderingModel model: model being trained
    :param StoryPair story: training story
    :param TrainConfig cfg: training settings
    :param OrderingModel counterpart: frozen model of the other modality
    :return: (loss, gradients, guidance additions)
    :rtype: tuple(float, dict, int)
    """
    element_set = story.element_set(model.modality)
    matrix, cache = model.forward(element_set.elements)

    stats = {}
    refined = None
    if counterpart is not None and cfg.guided:
        if story.cross_sim is None:
            raise DataErrorException("story {0}: missing similarity".format(story.id))
        source = counterpart.score_matrix(story.element_set(counterpart.modality).elements)
        direction = guidance_direction(model.modality)
        additive = GuidanceConfig(
            cfg.guidance.theta_text_source, cfg.guidance.theta_image_source, False, cfg.guidance.mode
        )
        matrix = cgo_mu(matrix, source, story.cross_sim, cfg.guidance.theta_for(direction), additive, direction, stats)
        if cfg.guidance.renormalize:
            refined, matrix = matrix, normalize_pairs(matrix)

    loss, d_scores = pairwise_loss(matrix, element_set.gold_permutation, cfg.pair_temperature)
    if refined is not None:
        d_scores = normalize_pairs_backward(refined, d_scores)
    return loss, model.backward(cache, d_scores), stats.get("additions", 0)


def batch_step(model, state, batch, cfg, counterpart=None):
    """
    One optimizer step of ``model`` over a batch of stories.

    Gradients are averaged over the batch in story order, so the reduction is reproducible.

    :return: (updated model, updated optimizer state, mean batch loss, guidance additions)
    """
    total_loss = 0.0
    total_grads = None
    additions = 0
    for story in batch:
        loss, grads, added = story_loss(model, story, cfg, counterpart)
        total_loss += loss
        additions += added
        if total_grads is None:
            total_grads = grads
        else:
            for name, grad in grads.items():
                total_grads[name] = total_grads[name] + grad

    scale = 1.0 / len(batch)
    mean_grads = {name: grad * scale for name, grad in total_grads.items()}
    params, state = adam_step(model.params, mean_grads, state, cfg.learning_rate)
    return model.with_params(params), state, total_loss * scale, additions


def check_corpus(corpus):
    if len(corpus) == 0:
        raise DataErrorException("cannot train on an empty corpus")
    for story in corpus:
        problems = validate_story(story)
        if problems:
            raise DataErrorException("story {0}: {1}".format(story.id, "; ".join(problems)))


def epoch_batches(corpus, cfg, epoch):
    """
    Deterministic shuffle of the corpus for one epoch, cut into batches.

    :rtype: list(list(StoryPair))
    """
    order = np.random.default_rng([cfg.seed, epoch]).permutation(len(corpus))
    return [
        [corpus[index] for index in order[start:start + cfg.batch_size]]
        for start in range(0, len(corpus), cfg.batch_size)
    ]


def train_epoch(corpus, text_model, image_model, cfg, text_state, image_state, epoch=0):
    """
    One epoch of alternating training of both modality models.

    Each image update sees the current text model frozen, and each text update the current
    image model frozen. Without guidance in training the two models never interact.

    :param list(StoryPair) corpus: validated training stories
    :param OrderingModel text_model: text model
    :param OrderingModel image_model: image model
    :param TrainConfig cfg: training settings
    :param OptimizerState text_state: Adam state of the text model
    :param OptimizerState image_state: Adam state of the image model
    :param int epoch: epoch index, seeds the story shuffle
    :return: (text model, image model, text state, image state, epoch stats)
    """
    check_corpus(corpus)
    batches = epoch_batches(corpus, cfg, epoch)
    skipped_before = len(text_state.errors) + len(image_state.errors)

    losses = {Modality.TEXT: 0.0, Modality.IMAGE: 0.0}
    additions = 0

    def update_image(batch):
        nonlocal image_model, image_state, additions
        image_model, image_state, loss, added = batch_step(image_model, image_state, batch, cfg, text_model)
        losses[Modality.IMAGE] += loss * len(batch)
        additions += added

    def update_text(batch):
        nonlocal text_model, text_state, additions
        text_model, text_state, loss, added = batch_step(text_model, text_state, batch, cfg, image_model)
        losses[Modality.TEXT] += loss * len(batch)
        additions += added

    if cfg.alternation is Alternation.PER_BATCH:
        for batch in batches:
            update_image(batch)
            update_text(batch)
    else:
        for batch in batches:
            update_image(batch)
        for batch in batches:
            update_text(batch)

    stats = EpochStats(
        epoch,
        losses[Modality.TEXT] / len(corpus),
        losses[Modality.IMAGE] / len(corpus),
        len(text_state.errors) + len(image_state.errors) - skipped_before,
        additions,
    )
    logger.debug("Epoch stats: %s", stats.export())
    return text_model, image_model, text_state, image_state, stats
