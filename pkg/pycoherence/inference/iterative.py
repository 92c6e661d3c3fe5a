# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging

from pycoherence.decoder.topological import decode_order
from pycoherence.exceptions import DataErrorException
from pycoherence.exceptions import DimensionErrorException
from pycoherence.exceptions import UsageErrorException
from pycoherence.guidance.cgo_mu import cgo_mu
from pycoherence.guidance.cgo_mu import normalize_pairs
from pycoherence.guidance.guidance_config import GuidanceDirection
from pycoherence.metrics.ordering_metrics import corpus_report
from pycoherence.story.modality import Modality
from pycoherence.story.order_matrix import OrderScoreMatrix
from pycoherence.story.validation import validate_story

logger = logging.getLogger(__name__)


class TraceStep(object):
    """
    Both matrices and their decoded orders after one boosting step (step 0 is uni-modal).
    """

    def __init__(self, step, text_matrix, image_matrix):
        self.step = step
        self.text_matrix = text_matrix  # type: OrderScoreMatrix
        self.image_matrix = image_matrix  # type: OrderScoreMatrix
        self.text_perm = decode_order(text_matrix)
        self.image_perm = decode_order(image_matrix)

    @property
    def permutations(self):
        return self.text_perm, self.image_perm

    def matrix(self, modality):
        return self.text_matrix if Modality(modality) is Modality.TEXT else self.image_matrix

    def permutation(self, modality):
        return self.text_perm if Modality(modality) is Modality.TEXT else self.image_perm

    def export(self):
        return {
            "step": self.step,
            Modality.TEXT.value: {
                "matrix": self.text_matrix.scores.tolist(),
                "permutation": list(self.text_perm),
            },
            Modality.IMAGE.value: {
                "matrix": self.image_matrix.scores.tolist(),
                "permutation": list(self.image_perm),
            },
        }


class InferenceResult(object):
    """
    :ivar list(TraceStep) trace: one entry per executed step, plus the uni-modal step 0
    """

    def __init__(self, trace):
        self.trace = trace  # type: list(TraceStep)

    @property
    def text_perm(self):
        return self.trace[-1].text_perm

    @property
    def image_perm(self):
        return self.trace[-1].image_perm

    @property
    def steps_run(self):
        return len(self.trace) - 1

    def permutation_at(self, step, modality):
        """
        Decoded order at ``step``; steps after an early stop repeat the final orders.
        """
        return self.trace[min(step, len(self.trace) - 1)].permutation(modality)

    def export(self):
        return [step.export() for step in self.trace]


def iterative_refine(text_matrix, image_matrix, similarity, cfg):
    """
    Multi-step cross-modal boosting of a pair of order matrices.

    Step ``t`` refines both matrices from the step ``t - 1`` values: the text matrix with
    the image matrix as source and the image matrix with the text matrix as source.
    With pair renormalization the step-0 matrices are normalized too.

    :param OrderScoreMatrix text_matrix: uni-modal text scores
    :param OrderScoreMatrix image_matrix: uni-modal image scores
    :param CrossModalSimilarity similarity: ``M x N`` similarity, may be None with guidance off
    :param InferenceConfig cfg: inference settings
    :rtype: InferenceResult
    """
    guidance = cfg.guidance
    if cfg.steps < 0:
        raise UsageErrorException("step count must not be negative, got {0}".format(cfg.steps))
    if guidance.enabled and similarity is None:
        raise DataErrorException("missing similarity")

    text_matrix = text_matrix if isinstance(text_matrix, OrderScoreMatrix) else OrderScoreMatrix(text_matrix)
    image_matrix = image_matrix if isinstance(image_matrix, OrderScoreMatrix) else OrderScoreMatrix(image_matrix)
    if guidance.renormalize:
        text_matrix = normalize_pairs(text_matrix)
        image_matrix = normalize_pairs(image_matrix)

    trace = [TraceStep(0, text_matrix, image_matrix)]
    for step in range(1, cfg.steps + 1):
        refined_text = cgo_mu(
            text_matrix,
            image_matrix,
            similarity,
            guidance.theta_image_source,
            guidance,
            GuidanceDirection.IMAGE_TO_TEXT,
        )
        refined_image = cgo_mu(
            image_matrix,
            text_matrix,
            similarity,
            guidance.theta_text_source,
            guidance,
            GuidanceDirection.TEXT_TO_IMAGE,
        )
        text_matrix, image_matrix = refined_text, refined_image
        trace.append(TraceStep(step, text_matrix, image_matrix))

        if cfg.early_stop and trace[-1].permutations == trace[-2].permutations:
            logger.debug("Orders stable after step %d", step)
            break

    return InferenceResult(trace)


def iterative_infer(story, text_model, image_model, cfg):
    """
    Predict both orders of a story with iterative cross-modal boosting.

    :param StoryPair story: story to order
    :param OrderingModel text_model: trained text model
    :param OrderingModel image_model: trained image model
    :param InferenceConfig cfg: inference settings
    :rtype: InferenceResult
    """
    problems = validate_story(story)
    if problems:
        raise DataErrorException("story {0}: {1}".format(story.id, "; ".join(problems)))
    if story.text.width != text_model.width or story.image.width != image_model.width:
        raise DimensionErrorException(
            "story {0}: embedding width {1} does not match model width {2}".format(
                story.id, story.text.width, text_model.width
            )
        )
    if cfg.guidance.enabled and story.cross_sim is None:
        raise DataErrorException("story {0}: missing similarity".format(story.id))

    return iterative_refine(
        text_model.score_matrix(story.text.elements),
        image_model.score_matrix(story.image.elements),
        story.cross_sim,
        cfg,
    )


def evaluate_corpus(corpus, text_model, image_model, cfg, results=None):
    """
    Corpus metrics of both modalities after every step ``0..cfg.steps``.

    Stories that stopped early contribute their final orders to the later steps.

    :param list results: when given, the per-story :class:`InferenceResult` are appended
    :return: ``{step: {Modality: CorpusReport}}``
    :rtype: dict
    """
    if len(corpus) == 0:
        raise DataErrorException("cannot evaluate an empty corpus")

    outcomes = [iterative_infer(story, text_model, image_model, cfg) for story in corpus]
    if results is not None:
        results.extend(outcomes)

    reports = {}
    for step in range(cfg.steps + 1):
        reports[step] = {}
        for modality in (Modality.TEXT, Modality.IMAGE):
            preds = [outcome.permutation_at(step, modality) for outcome in outcomes]
            golds = [story.element_set(modality).gold_permutation for story in corpus]
            reports[step][modality] = corpus_report(preds, golds)
        logger.debug(
            "step %d: text %s | image %s", step, reports[step][Modality.TEXT], reports[step][Modality.IMAGE]
        )
    return reports


def export_reports(reports):
    """
    JSON-ready form of :func:`evaluate_corpus` output: ``{"<step>": {"<modality>": {acc, pmr, tau}}}``.
    """
    return {
        str(step): {modality.value: report.export() for modality, report in by_modality.items()}
        for step, by_modality in reports.items()
    }
