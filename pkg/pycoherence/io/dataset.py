# !/usr/bin/python3
# -*- coding: utf-8 -*-

"""
JSON-lines story datasets: one story per line, fields in this order::

    id, text_embeddings, image_embeddings, gold_text_order, gold_image_order, cross_sim

``cross_sim`` may be ``null``. Numbers are written in shortest round-trip decimal form.
"""

import json
import logging

from pycoherence.exceptions import DataErrorException
from pycoherence.exceptions import UsageErrorException
from pycoherence.story.element_set import ElementSet
from pycoherence.story.modality import Modality
from pycoherence.story.story_pair import StoryPair
from pycoherence.story.validation import validate_corpus
from pycoherence.story.validation import validate_story

logger = logging.getLogger(__name__)

FIELDS = ("id", "text_embeddings", "image_embeddings", "gold_text_order", "gold_image_order", "cross_sim")


def story_to_json(story):
    """
    :rtype: str
    """
    record = {
        "id": story.id,
        "text_embeddings": story.text.elements.tolist(),
        "image_embeddings": story.image.elements.tolist(),
        "gold_text_order": story.text.gold_order.tolist(),
        "gold_image_order": story.image.gold_order.tolist(),
        "cross_sim": story.cross_sim.sim.tolist() if story.cross_sim is not None else None,
    }
    return json.dumps(record, separators=(",", ":"))


def story_from_json(line):
    """
    :raises ValueError: malformed record
    :raises DimensionErrorException: similarity that is not a matrix
    :raises KeyError: missing field
    :rtype: StoryPair
    """
    record = json.loads(line)
    if not isinstance(record, dict):
        raise ValueError("a story must be a JSON object")
    missing = [name for name in FIELDS if name not in record and name != "cross_sim"]
    if missing:
        raise KeyError("missing field(s) {0}".format(", ".join(missing)))
    return StoryPair(
        record["id"],
        ElementSet(record["text_embeddings"], record["gold_text_order"], Modality.TEXT),
        ElementSet(record["image_embeddings"], record["gold_image_order"], Modality.IMAGE),
        record.get("cross_sim"),
    )


def write_corpus(stories, path):
    with open(path, "w", encoding="utf-8", newline="\n") as outfile:
        for story in stories:
            outfile.write(story_to_json(story))
            outfile.write("\n")
    logger.info("Wrote %d stories to %s", len(stories), path)


def read_corpus(path):
    """
    Read and validate a dataset file.

    :raises DataErrorException: unparseable line (named by its 1-based number) or invalid story
    :rtype: list(StoryPair)
    """
    stories = []
    with open(path, "r", encoding="utf-8") as infile:
        for lineno, line in enumerate(infile, 1):
            if not line.strip():
                continue
            try:
                story = story_from_json(line)
            except (DataErrorException, ValueError, KeyError, TypeError) as err:
                raise DataErrorException("{0}: line {1}: {2}".format(path, lineno, err))

            problems = validate_story(story)
            if problems:
                raise DataErrorException(
                    "{0}: line {1}: story {2}: {3}".format(path, lineno, story.id, "; ".join(problems))
                )
            stories.append(story)

    problems = validate_corpus(stories)
    if problems:
        raise DataErrorException(
            "{0}: {1}".format(path, "; ".join("story {0}: {1}".format(sid, problem) for sid, problem in problems))
        )
    logger.info("Read %d stories from %s", len(stories), path)
    return stories


def split_corpus(stories, held_out):
    """
    Deterministic split: the last ``held_out`` stories are held out.

    :rtype: tuple(list(StoryPair), list(StoryPair))
    """
    if not 0 <= held_out < len(stories):
        raise UsageErrorException(
            "held_out must lie in [0, {0}), got {1}".format(len(stories), held_out)
        )
    cut = len(stories) - held_out
    return list(stories[:cut]), list(stories[cut:])
