# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging

import numpy as np

logger = logging.getLogger(__name__)


def validate_story(pair):
    """
    Check every invariant of a story.

    :param StoryPair pair: story to check
    :return: violation descriptions, empty when the story is well formed
    :rtype: list(str)
    """
    problems = []
    problems += pair.text.violations()
    problems += pair.image.violations()

    if pair.text.width != pair.image.width:
        problems.append(
            "embedding width mismatch: text {0}, image {1}".format(pair.text.width, pair.image.width)
        )

    if pair.cross_sim is not None:
        if pair.cross_sim.shape != (pair.text.n, pair.image.n):
            problems.append("similarity shape mismatch")
        elif not np.all(np.isfinite(pair.cross_sim.sim)):
            problems.append("similarity not finite")

    return problems


def validate_corpus(stories):
    """
    Validate every story plus the corpus-wide rules: unique ids and a single embedding width.

    :rtype: list(tuple(str, str))
    :return: ``(story id, violation)`` pairs
    """
    problems = []
    seen = set()
    width = None
    for pair in stories:
        for problem in validate_story(pair):
            problems.append((pair.id, problem))
        if pair.id in seen:
            problems.append((pair.id, "duplicate story id"))
        seen.add(pair.id)
        if width is None:
            width = pair.text.width
        elif pair.text.width != width:
            problems.append((pair.id, "embedding width {0} differs from corpus width {1}".format(pair.text.width, width)))

    if problems:
        logger.debug("Corpus violations: %s", problems)
    return problems
