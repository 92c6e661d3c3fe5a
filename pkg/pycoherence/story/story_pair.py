# !/usr/bin/python3
# -*- coding: utf-8 -*-

from pycoherence.story.element_set import ElementSet
from pycoherence.story.modality import Modality
from pycoherence.story.similarity import CrossModalSimilarity


class StoryPair(object):
    """
    Aligned sentence set and image set of one story.

    :ivar str id: story identifier
    :ivar ElementSet text: the M sentences
    :ivar ElementSet image: the N images
    :ivar CrossModalSimilarity cross_sim: optional ``M x N`` similarity
    """

    def __init__(self, id, text, image, cross_sim=None):
        if cross_sim is not None and not isinstance(cross_sim, CrossModalSimilarity):
            cross_sim = CrossModalSimilarity(cross_sim)
        self._id = str(id)
        self._text = text  # type: ElementSet
        self._image = image  # type: ElementSet
        self._cross_sim = cross_sim  # type: CrossModalSimilarity

    @property
    def id(self):
        return self._id

    @property
    def text(self):
        return self._text

    @property
    def image(self):
        return self._image

    @property
    def cross_sim(self):
        return self._cross_sim

    def element_set(self, modality):
        return self._text if Modality(modality) is Modality.TEXT else self._image

    def __eq__(self, other):
        return (
            isinstance(other, StoryPair)
            and self._id == other._id
            and self._text == other._text
            and self._image == other._image
            and self._cross_sim == other._cross_sim
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "StoryPair({0!r}, M={1}, N={2})".format(self._id, self._text.n, self._image.n)
