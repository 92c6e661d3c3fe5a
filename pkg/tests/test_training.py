import numpy as np
import pytest

from pycoherence.exceptions import CheckpointVersionException
from pycoherence.exceptions import DataErrorException
from pycoherence.exceptions import DimensionErrorException
from pycoherence.exceptions import UsageErrorException
from pycoherence.guidance import GuidanceConfig
from pycoherence.story import StoryPair
from pycoherence.synthetic import generate_corpus
from pycoherence.training import Trainer
from pycoherence.training import TrainConfig
from pycoherence.training.adam import OptimizerState
from pycoherence.training.checkpoint import FORMAT_VERSION
from pycoherence.training.checkpoint import MAGIC
from pycoherence.training.checkpoint import decode_checkpoint
from pycoherence.training.checkpoint import encode_checkpoint
from pycoherence.training.checkpoint import load_checkpoint
from pycoherence.training.epoch import batch_step
from pycoherence.training.epoch import epoch_batches
from pycoherence.training.epoch import story_loss
from pycoherence.training.epoch import train_epoch

from conftest import TINY_WIDTH
from conftest import assert_gradients_close
from conftest import numeric_gradient


def same_params(first, second):
    return set(first.params) == set(second.params) and all(
        np.array_equal(tensor, second.params[name]) for name, tensor in first.params.items()
    )


def config(**overrides):
    values = dict(learning_rate=1e-2, batch_size=4, epochs=2, seed=5, n_heads=2)
    values.update(overrides)
    return TrainConfig(**values)


def test_zero_epochs_change_nothing(tiny_corpus):
    trainer = Trainer(config(), TINY_WIDTH)
    text_model, image_model = trainer.text_model, trainer.image_model
    assert trainer.fit(tiny_corpus, epochs=0) == []
    assert same_params(trainer.text_model, text_model)
    assert same_params(trainer.image_model, image_model)
    assert trainer.epochs_done == 0


def test_training_is_deterministic(tiny_corpus):
    first = Trainer(config(), TINY_WIDTH)
    second = Trainer(config(), TINY_WIDTH)
    first_stats = [stats.export() for stats in first.fit(tiny_corpus)]
    second_stats = [stats.export() for stats in second.fit(tiny_corpus)]
    assert first_stats == second_stats
    assert same_params(first.text_model, second.text_model)
    assert same_params(first.image_model, second.image_model)
    assert encode_checkpoint(first.checkpoint()) == encode_checkpoint(second.checkpoint())


def test_losses_are_finite_and_recorded(tiny_corpus):
    trainer = Trainer(config(epochs=3), TINY_WIDTH)
    run = trainer.fit(tiny_corpus)
    assert [stats.epoch for stats in run] == [0, 1, 2]
    assert all(np.isfinite(stats.text_loss) and np.isfinite(stats.image_loss) for stats in run)
    assert len(trainer.session.epochs) == 3
    assert trainer.session.epochs[-1].text_loss == run[-1].text_loss
    assert trainer.epochs_done == 3


def test_training_lowers_the_loss(tiny_corpus):
    run = Trainer(config(epochs=15), TINY_WIDTH).fit(tiny_corpus)
    assert run[-1].text_loss < run[0].text_loss
    assert run[-1].image_loss < run[0].image_loss


def _swap_images(corpus, other):
    return [StoryPair(story.id, story.text, alt.image, alt.cross_sim) for story, alt in zip(corpus, other)]


@pytest.mark.parametrize("ib_in_training, mode", [(False, "relative-order"), (True, "off")])
def test_unguided_text_training_ignores_the_images(tiny_corpus, tiny_synth_config, ib_in_training, mode):
    cfg = config(ib_in_training=ib_in_training, guidance=GuidanceConfig(renormalize=False, mode=mode))
    swapped = _swap_images(tiny_corpus, generate_corpus(tiny_synth_config.copy(seed=99)))

    first = Trainer(cfg, TINY_WIDTH)
    second = Trainer(cfg, TINY_WIDTH)
    first.fit(tiny_corpus)
    second.fit(swapped)
    assert same_params(first.text_model, second.text_model)
    assert not same_params(first.image_model, second.image_model)


def test_guided_training_uses_the_counterpart(tiny_corpus, tiny_synth_config):
    cfg = config(guidance=GuidanceConfig(theta_text_source=0.0, theta_image_source=0.0, renormalize=False))
    swapped = _swap_images(tiny_corpus, generate_corpus(tiny_synth_config.copy(seed=99)))
    first = Trainer(cfg, TINY_WIDTH)
    second = Trainer(cfg, TINY_WIDTH)
    stats = first.fit(tiny_corpus)
    second.fit(swapped)
    assert stats[0].guided_additions > 0
    assert not same_params(first.text_model, second.text_model)


def test_counterpart_stays_frozen(tiny_corpus, text_model, image_model):
    cfg = config(guidance=GuidanceConfig(theta_text_source=0.0, theta_image_source=0.0, renormalize=False))
    before = {name: tensor.copy() for name, tensor in text_model.params.items()}
    updated, state, loss, additions = batch_step(
        image_model, OptimizerState.for_params(image_model.params), tiny_corpus[:4], cfg, text_model
    )
    assert all(np.array_equal(tensor, before[name]) for name, tensor in text_model.params.items())
    assert not same_params(updated, image_model)
    assert state.step == 1
    assert np.isfinite(loss)
    assert additions > 0


@pytest.mark.parametrize("renormalize", [False, True])
@pytest.mark.parametrize("trained", ["text", "image"])
def test_guided_loss_gradient_matches_finite_differences(tiny_corpus, text_model, image_model, renormalize, trained):
    cfg = config(
        pair_temperature=0.5,
        guidance=GuidanceConfig(theta_text_source=0.0, theta_image_source=0.0, renormalize=renormalize),
    )
    model, counterpart = (text_model, image_model) if trained == "text" else (image_model, text_model)
    story = tiny_corpus[0]
    params = model.params

    def loss():
        return story_loss(model.with_params(params), story, cfg, counterpart)[0]

    _, grads, additions = story_loss(model, story, cfg, counterpart)
    assert additions > 0
    for name, tensor in params.items():
        assert_gradients_close(grads[name], numeric_gradient(loss, tensor))


def test_guided_training_needs_the_similarity(tiny_corpus, text_model, image_model):
    story = tiny_corpus[0]
    bare = StoryPair(story.id, story.text, story.image, None)
    with pytest.raises(DataErrorException, match="missing similarity"):
        story_loss(image_model, bare, config(), text_model)
    loss, _, additions = story_loss(image_model, bare, config(ib_in_training=False), text_model)
    assert np.isfinite(loss)
    assert additions == 0


def test_per_epoch_alternation(tiny_corpus, text_model, image_model):
    cfg = config(alternation="per-epoch")
    text_state = OptimizerState.for_params(text_model.params)
    image_state = OptimizerState.for_params(image_model.params)
    _, _, text_state, image_state, stats = train_epoch(
        tiny_corpus, text_model, image_model, cfg, text_state, image_state
    )
    assert text_state.step == image_state.step == 2
    assert stats.skipped_steps == 0


def test_batches_cover_the_corpus_once(tiny_corpus):
    batches = epoch_batches(tiny_corpus, config(batch_size=3), 4)
    assert [len(batch) for batch in batches] == [3, 3, 2]
    assert sorted(story.id for batch in batches for story in batch) == sorted(story.id for story in tiny_corpus)
    assert epoch_batches(tiny_corpus, config(batch_size=3), 4)[0] == batches[0]


def test_empty_corpus_is_rejected(text_model, image_model):
    with pytest.raises(DataErrorException):
        train_epoch(
            [], text_model, image_model, config(),
            OptimizerState.for_params(text_model.params), OptimizerState.for_params(image_model.params),
        )


def test_width_mismatch_is_rejected(tiny_corpus):
    with pytest.raises(DimensionErrorException):
        Trainer(config(), 16).fit(tiny_corpus)


def test_config_rejects_bad_values():
    with pytest.raises(UsageErrorException):
        config(alternation="sometimes")
    with pytest.raises(UsageErrorException):
        config(learning_rate=0.0)
    assert TrainConfig.from_export(config().export()).export() == config().export()


def test_checkpoint_round_trip(tiny_corpus):
    trainer = Trainer(config(epochs=1), TINY_WIDTH)
    trainer.fit(tiny_corpus)
    data = encode_checkpoint(trainer.checkpoint())
    assert data[:8] == MAGIC
    checkpoint = decode_checkpoint(data, TINY_WIDTH)

    assert checkpoint.epochs_done == 1
    assert checkpoint.config.export() == trainer.config.export()
    assert same_params(checkpoint.text_model, trainer.text_model)
    assert same_params(checkpoint.image_model, trainer.image_model)
    for restored, original in ((checkpoint.text_state, trainer.text_state), (checkpoint.image_state, trainer.image_state)):
        assert restored.step == original.step == 2
        for name in original.m:
            assert np.array_equal(restored.m[name], original.m[name])
            assert np.array_equal(restored.v[name], original.v[name])
    assert encode_checkpoint(checkpoint) == data


def test_checkpoint_errors(tiny_corpus):
    data = encode_checkpoint(Trainer(config(), TINY_WIDTH).checkpoint())
    with pytest.raises(CheckpointVersionException):
        decode_checkpoint(b"NOTACHCK" + data[8:])
    with pytest.raises(CheckpointVersionException):
        decode_checkpoint(MAGIC + (FORMAT_VERSION + 1).to_bytes(2, "little") + data[10:])
    with pytest.raises(DimensionErrorException):
        decode_checkpoint(data, expected_width=TINY_WIDTH * 2)
    with pytest.raises(DataErrorException):
        decode_checkpoint(data[:-8])
    with pytest.raises(DataErrorException):
        decode_checkpoint(data + b"\x00" * 8)


def test_resume_continues_the_epoch_count(tiny_corpus, tmp_path):
    path = str(tmp_path / "model.ckpt")
    straight = Trainer(config(epochs=2), TINY_WIDTH)
    straight.fit(tiny_corpus)

    first = Trainer(config(epochs=1), TINY_WIDTH)
    first.fit(tiny_corpus)
    first.save(path)
    assert load_checkpoint(path, TINY_WIDTH).epochs_done == 1

    resumed = Trainer.from_checkpoint(path, TINY_WIDTH, config(epochs=1))
    resumed.fit(tiny_corpus)
    assert resumed.epochs_done == 2
    assert same_params(resumed.text_model, straight.text_model)
    assert same_params(resumed.image_model, straight.image_model)
