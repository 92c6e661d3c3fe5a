import numpy as np
import pytest

from pycoherence.exceptions import DimensionErrorException
from pycoherence.training.adam import OptimizerState
from pycoherence.training.adam import adam_step


def test_zero_gradient_leaves_parameters_unchanged():
    params = {"w": np.array([1.0, -2.0]), "b": np.array([0.5])}
    state = OptimizerState.for_params(params)
    updated, new_state = adam_step(params, {name: np.zeros_like(t) for name, t in params.items()}, state, 1e-3)
    for name in params:
        assert np.array_equal(updated[name], params[name])
    assert new_state.step == 1
    assert state.step == 0


def test_first_step_moves_by_the_learning_rate():
    params = {"x": np.array([0.0])}
    updated, state = adam_step(params, {"x": np.array([1.0])}, OptimizerState.for_params(params), 0.001)
    assert updated["x"][0] == pytest.approx(-0.001, rel=1e-6)
    assert state.m["x"][0] == pytest.approx(0.1)
    assert state.v["x"][0] == pytest.approx(0.001)


def test_non_finite_gradient_skips_the_step():
    params = {"x": np.array([3.0, 4.0])}
    state = OptimizerState.for_params(params)
    updated, new_state = adam_step(params, {"x": np.array([np.nan, 1.0])}, state, 0.1)
    assert np.array_equal(updated["x"], params["x"])
    assert new_state.step == 0
    assert len(new_state.errors) == 1
    assert not new_state.m["x"].any()


def test_gradient_shapes_are_checked():
    params = {"x": np.zeros(3)}
    with pytest.raises(DimensionErrorException):
        adam_step(params, {"x": np.zeros(2)}, OptimizerState.for_params(params), 0.1)
    with pytest.raises(DimensionErrorException):
        adam_step(params, {"y": np.zeros(3)}, OptimizerState.for_params(params), 0.1)


def test_minimizes_a_quadratic():
    params = {"x": np.array([5.0, -3.0])}
    state = OptimizerState.for_params(params)
    for _ in range(2000):
        params, state = adam_step(params, {"x": 2.0 * params["x"]}, state, 0.05)
    np.testing.assert_allclose(params["x"], 0.0, atol=5e-2)
