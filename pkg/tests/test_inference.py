import numpy as np
import pytest

from pycoherence.exceptions import DataErrorException
from pycoherence.exceptions import UsageErrorException
from pycoherence.guidance import GuidanceConfig
from pycoherence.guidance import GuidanceDirection
from pycoherence.guidance import cgo_mu
from pycoherence.guidance import normalize_pairs
from pycoherence.inference import InferenceConfig
from pycoherence.inference import evaluate_corpus
from pycoherence.inference import export_reports
from pycoherence.inference import iterative_infer
from pycoherence.inference import iterative_refine
from pycoherence.story import Modality
from pycoherence.story import OrderScoreMatrix
from pycoherence.story import StoryPair

UPPER = np.arange(3)[:, None] < np.arange(3)[None, :]
TEXT = OrderScoreMatrix(np.where(UPPER, 0.95, 0.05))
IMAGE = OrderScoreMatrix(np.where(UPPER, 0.45, 0.55))


def inference(steps=10, early_stop=True, mode="relative-order", renormalize=True):
    guidance = GuidanceConfig(theta_text_source=0.9, theta_image_source=0.8, renormalize=renormalize, mode=mode)
    return InferenceConfig(steps=steps, early_stop=early_stop, guidance=guidance)


def test_step_zero_is_the_uni_modal_prediction():
    result = iterative_refine(TEXT, IMAGE, np.eye(3), inference(steps=0))
    assert result.steps_run == 0
    assert result.text_perm == (0, 1, 2)
    assert result.image_perm == (2, 1, 0)


def test_confident_text_fixes_the_image_order():
    result = iterative_refine(TEXT, IMAGE, np.eye(3), inference(steps=1, early_stop=False))
    assert len(result.trace) == 2
    assert result.image_perm == (0, 1, 2)
    assert result.text_perm == (0, 1, 2)
    np.testing.assert_allclose(result.trace[1].image_matrix.scores[0, 1], 1.4 / 1.95)
    assert result.trace[1].text_matrix == normalize_pairs(TEXT)


def test_early_stop_once_orders_are_stable():
    result = iterative_refine(TEXT, IMAGE, np.eye(3), inference(steps=10))
    assert result.steps_run == 2
    assert result.trace[-1].permutations == result.trace[-2].permutations
    assert result.permutation_at(7, Modality.IMAGE) == (0, 1, 2)

    full = iterative_refine(TEXT, IMAGE, np.eye(3), inference(steps=10, early_stop=False))
    assert len(full.trace) == 11
    assert [step.step for step in full.trace] == list(range(11))


def test_guidance_off_keeps_the_uni_modal_orders():
    rng = np.random.default_rng(0)
    for _ in range(20):
        text, image = OrderScoreMatrix(rng.uniform(size=(4, 4))), OrderScoreMatrix(rng.uniform(size=(5, 5)))
        result = iterative_refine(text, image, None, inference(steps=5, early_stop=False, mode="off"))
        assert all(step.permutations == result.trace[0].permutations for step in result.trace)


def test_both_modalities_refine_from_the_previous_step():
    rng = np.random.default_rng(1)
    cfg = inference(steps=2, early_stop=False)
    text, image = OrderScoreMatrix(rng.uniform(size=(4, 4))), OrderScoreMatrix(rng.uniform(size=(3, 3)))
    sim = rng.uniform(size=(4, 3))
    result = iterative_refine(text, image, sim, cfg)
    for previous, current in zip(result.trace, result.trace[1:]):
        expected_text = cgo_mu(
            previous.text_matrix, previous.image_matrix, sim, 0.8, cfg.guidance, GuidanceDirection.IMAGE_TO_TEXT
        )
        expected_image = cgo_mu(
            previous.image_matrix, previous.text_matrix, sim, 0.9, cfg.guidance, GuidanceDirection.TEXT_TO_IMAGE
        )
        assert current.text_matrix == expected_text
        assert current.image_matrix == expected_image


def test_renormalized_trace_pairs_sum_to_one():
    rng = np.random.default_rng(2)
    result = iterative_refine(
        OrderScoreMatrix(rng.uniform(0.1, 1.0, size=(4, 4))),
        OrderScoreMatrix(rng.uniform(0.1, 1.0, size=(4, 4))),
        rng.uniform(size=(4, 4)),
        inference(steps=5, early_stop=False),
    )
    upper = np.triu_indices(4, k=1)
    for step in result.trace:
        for modality in (Modality.TEXT, Modality.IMAGE):
            scores = step.matrix(modality).scores
            np.testing.assert_allclose((scores + scores.T)[upper], 1.0)


def test_missing_similarity_with_guidance():
    with pytest.raises(DataErrorException, match="missing similarity"):
        iterative_refine(TEXT, IMAGE, None, inference())


def test_negative_steps_are_rejected():
    with pytest.raises(UsageErrorException):
        inference(steps=-1)


def test_trace_export():
    exported = iterative_refine(TEXT, IMAGE, np.eye(3), inference(steps=1, early_stop=False)).export()
    assert [entry["step"] for entry in exported] == [0, 1]
    assert exported[0]["image"]["permutation"] == [2, 1, 0]
    assert exported[1]["image"]["permutation"] == [0, 1, 2]
    assert len(exported[0]["text"]["matrix"]) == 3


def test_story_without_similarity(tiny_corpus, text_model, image_model):
    story = tiny_corpus[0]
    bare = StoryPair(story.id, story.text, story.image, None)
    with pytest.raises(DataErrorException, match="{0}: missing similarity".format(story.id)):
        iterative_infer(bare, text_model, image_model, inference())
    result = iterative_infer(bare, text_model, image_model, inference(mode="off"))
    assert sorted(result.text_perm) == list(range(story.text.n))


def test_evaluation_reports_every_step(tiny_corpus, text_model, image_model):
    results = []
    reports = evaluate_corpus(tiny_corpus, text_model, image_model, inference(steps=4), results)
    assert sorted(reports) == [0, 1, 2, 3, 4]
    assert len(results) == len(tiny_corpus)
    for by_modality in reports.values():
        for report in by_modality.values():
            assert report.sets == len(tiny_corpus)
            assert 0.0 <= report.acc <= 1.0
            assert -1.0 <= report.tau <= 1.0
    exported = export_reports(reports)
    assert sorted(exported) == ["0", "1", "2", "3", "4"]
    assert sorted(exported["0"]) == ["image", "text"]


def test_evaluation_without_guidance_is_flat(tiny_corpus, text_model, image_model):
    reports = evaluate_corpus(tiny_corpus, text_model, image_model, inference(steps=3, mode="off"))
    for step in (1, 2, 3):
        assert reports[step] == reports[0]


def test_evaluation_pads_stopped_stories(tiny_corpus, text_model, image_model):
    results = []
    cfg = inference(steps=6)
    reports = evaluate_corpus(tiny_corpus, text_model, image_model, cfg, results)
    last = max(result.steps_run for result in results)
    for step in range(last, 7):
        assert reports[step] == reports[last]


def test_evaluation_of_an_empty_corpus(text_model, image_model):
    with pytest.raises(DataErrorException):
        evaluate_corpus([], text_model, image_model, inference())
