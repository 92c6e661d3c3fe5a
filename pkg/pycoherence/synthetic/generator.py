# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging

import numpy as np

from pycoherence.story.element_set import ElementSet
from pycoherence.story.modality import Modality
from pycoherence.story.story_pair import StoryPair

logger = logging.getLogger(__name__)

MODALITY_STREAM = {Modality.TEXT: 0, Modality.IMAGE: 1}


def position_direction(width, modality):
    """
    Unit vector along which the position of an element is written.

    Depends on the width and the modality only, so every corpus of one width shares it.

    :rtype: numpy.ndarray
    """
    rng = np.random.default_rng([width, MODALITY_STREAM[Modality(modality)]])
    direction = rng.standard_normal(width)
    return direction / np.linalg.norm(direction)


def correspondence(m, n):
    """
    True image position of every sentence position: ``round(t (N - 1) / (M - 1))``.

    :rtype: numpy.ndarray
    """
    return np.rint(np.arange(m) * (n - 1) / (m - 1)).astype(np.int64)


def _element_set(rng, size, cfg, modality, noise):
    direction = position_direction(cfg.dim, modality)
    positions = np.arange(size) / (size - 1) - 0.5

    content = rng.standard_normal((size, cfg.dim))
    content -= np.outer(content @ direction, direction)

    latent = (
        cfg.order_signal * positions[:, None] * direction[None, :]
        + cfg.content_scale * content
        + noise * rng.standard_normal((size, cfg.dim))
    )
    shuffle = rng.permutation(size)
    # element i of the shuffled set is the element at true position shuffle[i]
    return ElementSet(latent[shuffle], shuffle, modality), shuffle


def _similarity(rng, text_shuffle, image_shuffle, align_noise):
    m, n = len(text_shuffle), len(image_shuffle)
    base = np.zeros((m, n))
    base[np.arange(m), correspondence(m, n)] = 1.0
    base += align_noise * rng.standard_normal((m, n))

    sim = base[np.ix_(text_shuffle, image_shuffle)]
    low = sim.min(axis=1, keepdims=True)
    spread = sim.max(axis=1, keepdims=True) - low
    return np.divide(sim - low, spread, out=np.zeros_like(sim), where=spread > 0)


def generate_story(cfg, seed, story_id):
    """
    :param SynthConfig cfg: generator settings
    :param numpy.random.SeedSequence seed: seed of this story
    :rtype: StoryPair
    """
    rng = np.random.default_rng(seed)
    low, high = cfg.set_size_range
    m = int(rng.integers(low, high + 1))
    n = m if cfg.equal_sizes else int(rng.integers(low, high + 1))

    text, text_shuffle = _element_set(rng, m, cfg, Modality.TEXT, cfg.noise_text)
    image, image_shuffle = _element_set(rng, n, cfg, Modality.IMAGE, cfg.noise_image)
    sim = _similarity(rng, text_shuffle, image_shuffle, cfg.align_noise)
    return StoryPair(story_id, text, image, sim)


def generate_corpus(cfg):
    """
    Deterministic corpus of paired stories.

    Every story draws from its own seed spawned from ``cfg.seed``, so a story does not depend
    on how many stories precede it.

    :param SynthConfig cfg: generator settings
    :rtype: list(StoryPair)
    """
    cfg.validate()
    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.stories)
    width = len(str(cfg.stories - 1))
    corpus = [
        generate_story(cfg, seed, "story-{0:0{1}d}".format(index, width)) for index, seed in enumerate(seeds)
    ]
    logger.info("Generated %d stories (seed %d)", len(corpus), cfg.seed)
    return corpus
