# !/usr/bin/python3
# -*- coding: utf-8 -*-

import logging

import numpy as np
from confapp import conf
from scipy.special import softmax

from pycoherence.exceptions import DimensionErrorException

logger = logging.getLogger(__name__)

GELU_C = np.sqrt(2.0 / np.pi)
GELU_A = 0.044715

# per-block tensors, in creation order
BLOCK_TENSORS = ("wq", "wk", "wv", "wo", "bo", "w1", "b1", "w2", "b2")


class EncoderParams(object):
    """
    Parameters of a set context encoder: ``n_blocks`` pre-norm blocks, each made of multi-head
    self-attention followed by a feed-forward layer, both with residual connections.

    Tensors are stored flat under ``"block<b>.<name>"`` keys:

    * ``wq``, ``wk``, ``wv`` (d x d): query/key/value projections, heads are column slices of width d / h
    * ``wo`` (d x d), ``bo`` (d): attention output projection
    * ``w1`` (d x f), ``b1`` (f), ``w2`` (f x d), ``b2`` (d): feed-forward layer

    :ivar int width: model width d
    :ivar int n_heads: number of attention heads h
    :ivar int n_blocks: number of stacked blocks
    :ivar int ff_width: hidden width f of the feed-forward layer
    :ivar dict tensors: name -> numpy.ndarray
    """

    def __init__(self, width, n_heads, tensors, n_blocks=1, ff_width=None):
        if width % n_heads != 0:
            raise DimensionErrorException("width not divisible by heads: {0} % {1}".format(width, n_heads))
        self.width = int(width)
        self.n_heads = int(n_heads)
        self.n_blocks = int(n_blocks)
        self.ff_width = int(ff_width) if ff_width is not None else 2 * self.width
        self.tensors = tensors  # type: dict

    @property
    def head_width(self):
        return self.width // self.n_heads

    def get(self, block, name):
        return self.tensors["block{0}.{1}".format(block, name)]

    def with_tensors(self, tensors):
        return EncoderParams(self.width, self.n_heads, tensors, self.n_blocks, self.ff_width)

    def __repr__(self):
        return "EncoderParams(d={0}, h={1}, blocks={2}, f={3})".format(
            self.width, self.n_heads, self.n_blocks, self.ff_width
        )


def init_params(d, h, seed, n_blocks=1, ff_width=None):
    """
    Draw fresh encoder parameters.

    Weights are uniform on ``[-1/sqrt(d), 1/sqrt(d)]``, biases are zero.

    :param int d: model width
    :param int h: number of heads, must divide ``d``
    :param int seed: random seed
    :rtype: EncoderParams
    """
    if d % h != 0:
        raise DimensionErrorException("width not divisible by heads: {0} % {1}".format(d, h))

    ff_width = ff_width if ff_width is not None else 2 * d
    rng = np.random.default_rng(seed)
    limit = 1.0 / np.sqrt(d)
    shapes = {
        "wq": (d, d),
        "wk": (d, d),
        "wv": (d, d),
        "wo": (d, d),
        "bo": (d,),
        "w1": (d, ff_width),
        "b1": (ff_width,),
        "w2": (ff_width, d),
        "b2": (d,),
    }

    tensors = {}
    for block in range(n_blocks):
        for name in BLOCK_TENSORS:
            key = "block{0}.{1}".format(block, name)
            if name.startswith("b"):
                tensors[key] = np.zeros(shapes[name])
            else:
                tensors[key] = rng.uniform(-limit, limit, size=shapes[name])

    return EncoderParams(d, h, tensors, n_blocks, ff_width)


class EncoderCache(object):
    """
    Intermediate values of one forward pass, needed by the backward pass.

    :ivar list(dict) blocks: per-block intermediates; ``blocks[b]["attention"]`` holds one
        ``n x n`` attention matrix per head
    """

    def __init__(self):
        self.blocks = []  # type: list(dict)

    @property
    def attention(self):
        return [block["attention"] for block in self.blocks]


def _layer_norm(x, eps):
    centered = x - x.mean(axis=1, keepdims=True)
    inv_std = 1.0 / np.sqrt((centered * centered).mean(axis=1, keepdims=True) + eps)
    return centered * inv_std, inv_std


def _layer_norm_backward(d_out, normed, inv_std):
    mean_d = d_out.mean(axis=1, keepdims=True)
    mean_dn = (d_out * normed).mean(axis=1, keepdims=True)
    return inv_std * (d_out - mean_d - normed * mean_dn)


def _gelu(u):
    return 0.5 * u * (1.0 + np.tanh(GELU_C * (u + GELU_A * u ** 3)))


def _gelu_grad(u):
    t = np.tanh(GELU_C * (u + GELU_A * u ** 3))
    return 0.5 * (1.0 + t) + 0.5 * u * (1.0 - t * t) * GELU_C * (1.0 + 3.0 * GELU_A * u * u)


def _check_inputs(inputs, params):
    x = np.asarray(inputs, dtype=np.float64)
    if x.ndim != 2 or x.shape[0] < 1:
        raise DimensionErrorException("encoder expects a non-empty n x d set, got shape {0}".format(x.shape))
    if x.shape[1] != params.width:
        raise DimensionErrorException(
            "embedding width {0} does not match encoder width {1}".format(x.shape[1], params.width)
        )
    return x


def _block_forward(x, params, block, eps):
    hw = params.head_width
    scale = 1.0 / np.sqrt(hw)

    h1, inv1 = _layer_norm(x, eps)
    q = h1 @ params.get(block, "wq")
    k = h1 @ params.get(block, "wk")
    v = h1 @ params.get(block, "wv")

    attn_out = np.empty_like(q)
    attention = []
    for head in range(params.n_heads):
        cols = slice(head * hw, (head + 1) * hw)
        weights = softmax(q[:, cols] @ k[:, cols].T * scale, axis=1)
        attn_out[:, cols] = weights @ v[:, cols]
        attention.append(weights)

    y = x + attn_out @ params.get(block, "wo") + params.get(block, "bo")

    h2, inv2 = _layer_norm(y, eps)
    u = h2 @ params.get(block, "w1") + params.get(block, "b1")
    g = _gelu(u)
    z = y + g @ params.get(block, "w2") + params.get(block, "b2")

    cache = {
        "h1": h1, "inv1": inv1, "q": q, "k": k, "v": v, "attention": attention,
        "attn_out": attn_out, "h2": h2, "inv2": inv2, "u": u, "g": g,
    }
    return z, cache


def _block_backward(d_z, params, block, cache, grads):
    hw = params.head_width
    scale = 1.0 / np.sqrt(hw)
    key = "block{0}.{1}".format

    # feed-forward sublayer
    d_y = d_z.copy()
    grads[key(block, "w2")] = cache["g"].T @ d_z
    grads[key(block, "b2")] = d_z.sum(axis=0)
    d_u = (d_z @ params.get(block, "w2").T) * _gelu_grad(cache["u"])
    grads[key(block, "w1")] = cache["h2"].T @ d_u
    grads[key(block, "b1")] = d_u.sum(axis=0)
    d_y += _layer_norm_backward(d_u @ params.get(block, "w1").T, cache["h2"], cache["inv2"])

    # attention sublayer
    d_x = d_y.copy()
    grads[key(block, "wo")] = cache["attn_out"].T @ d_y
    grads[key(block, "bo")] = d_y.sum(axis=0)
    d_attn = d_y @ params.get(block, "wo").T

    q, k, v = cache["q"], cache["k"], cache["v"]
    d_q = np.zeros_like(q)
    d_k = np.zeros_like(k)
    d_v = np.zeros_like(v)
    for head, weights in enumerate(cache["attention"]):
        cols = slice(head * hw, (head + 1) * hw)
        d_weights = d_attn[:, cols] @ v[:, cols].T
        d_v[:, cols] = weights.T @ d_attn[:, cols]
        d_scores = weights * (d_weights - (d_weights * weights).sum(axis=1, keepdims=True))
        d_q[:, cols] = d_scores @ k[:, cols] * scale
        d_k[:, cols] = d_scores.T @ q[:, cols] * scale

    h1 = cache["h1"]
    grads[key(block, "wq")] = h1.T @ d_q
    grads[key(block, "wk")] = h1.T @ d_k
    grads[key(block, "wv")] = h1.T @ d_v
    d_h1 = (
        d_q @ params.get(block, "wq").T
        + d_k @ params.get(block, "wk").T
        + d_v @ params.get(block, "wv").T
    )
    d_x += _layer_norm_backward(d_h1, h1, cache["inv1"])
    return d_x


def encode_set(inputs, params, return_cache=False):
    """
    Context-aware representations of an unordered set.

    No positional encoding is applied, so permuting the inputs permutes the outputs identically.

    :param numpy.ndarray inputs: ``n x d`` embeddings
    :param EncoderParams params: encoder parameters
    :param bool return_cache: also return the :class:`EncoderCache` of the forward pass
    :return: ``n x d`` float64 representations (and the cache)
    """
    x = _check_inputs(inputs, params)
    eps = conf.PYCOHERENCE_LAYER_NORM_EPS

    cache = EncoderCache()
    for block in range(params.n_blocks):
        x, block_cache = _block_forward(x, params, block, eps)
        cache.blocks.append(block_cache)

    return (x, cache) if return_cache else x


def backward_from_cache(cache, params, upstream):
    """
    Backward pass through an already computed forward pass.

    :return: (gradients w.r.t. the parameter tensors, gradients w.r.t. the inputs)
    :rtype: tuple(dict, numpy.ndarray)
    """
    d_x = np.asarray(upstream, dtype=np.float64)
    grads = {}
    for block in reversed(range(params.n_blocks)):
        d_x = _block_backward(d_x, params, block, cache.blocks[block], grads)
    return grads, d_x


def encode_set_backward(inputs, params, upstream):
    """
    Analytic gradients of a scalar loss through :func:`encode_set`.

    :param numpy.ndarray inputs: inputs of the forward call
    :param EncoderParams params: encoder parameters
    :param numpy.ndarray upstream: gradient of the loss w.r.t. the ``n x d`` outputs
    :rtype: tuple(dict, numpy.ndarray)
    """
    x = _check_inputs(inputs, params)
    upstream = np.asarray(upstream, dtype=np.float64)
    if upstream.shape != x.shape:
        raise DimensionErrorException(
            "upstream gradient shape {0} does not match outputs {1}".format(upstream.shape, x.shape)
        )
    _, cache = encode_set(x, params, return_cache=True)
    return backward_from_cache(cache, params, upstream)
