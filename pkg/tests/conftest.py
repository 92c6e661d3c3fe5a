import numpy as np
import pytest

from pycoherence.model.ordering_model import OrderingModel
from pycoherence.story.element_set import ElementSet
from pycoherence.story.modality import Modality
from pycoherence.story.story_pair import StoryPair
from pycoherence.synthetic.synth_config import SynthConfig
from pycoherence.synthetic.generator import generate_corpus
from pycoherence.training.train_config import TrainConfig

TINY_WIDTH = 8
TINY_HEADS = 2


def utility_matrix(positions, beta=3.0, noise=0.0, rng=None):
    """
    Order scores ``expit(beta * (u_k - u_l))`` of latent utilities ``u = -position``.
    """
    from scipy.special import expit

    u = -np.asarray(positions, dtype=np.float64)
    logits = beta * (u[:, None] - u[None, :])
    if noise:
        logits = logits + noise * rng.standard_normal(logits.shape)
    return expit(logits)


def numeric_gradient(loss, tensor, eps=1e-5):
    """
    Central finite differences of ``loss()`` w.r.t. every entry of ``tensor`` (perturbed in place).
    """
    grad = np.zeros_like(tensor)
    for index in np.ndindex(tensor.shape):
        original = tensor[index]
        tensor[index] = original + eps
        plus = loss()
        tensor[index] = original - eps
        minus = loss()
        tensor[index] = original
        grad[index] = (plus - minus) / (2 * eps)
    return grad


def assert_gradients_close(analytic, numeric, rtol=1e-4, atol=1e-8):
    np.testing.assert_allclose(analytic, numeric, rtol=rtol, atol=atol)


def make_story(story_id, n=3, width=TINY_WIDTH, seed=0, cross_sim="identity"):
    rng = np.random.default_rng(seed)
    text = ElementSet(rng.standard_normal((n, width)), rng.permutation(n), Modality.TEXT)
    image = ElementSet(rng.standard_normal((n, width)), rng.permutation(n), Modality.IMAGE)
    sim = np.eye(n) if cross_sim == "identity" else cross_sim
    return StoryPair(story_id, text, image, sim)


@pytest.fixture
def tiny_synth_config():
    return SynthConfig(stories=8, set_size_range=[4, 4], dim=TINY_WIDTH, seed=3)


@pytest.fixture
def tiny_corpus(tiny_synth_config):
    return generate_corpus(tiny_synth_config)


@pytest.fixture
def tiny_train_config():
    return TrainConfig(learning_rate=1e-2, batch_size=4, epochs=2, seed=5, n_heads=TINY_HEADS)


@pytest.fixture
def text_model():
    return OrderingModel.create(Modality.TEXT, TINY_WIDTH, TINY_HEADS, 11)


@pytest.fixture
def image_model():
    return OrderingModel.create(Modality.IMAGE, TINY_WIDTH, TINY_HEADS, 12)
