# !/usr/bin/python3
# -*- coding: utf-8 -*-

import argparse

import pycoherence
from pycoherence.exceptions import UsageErrorException
from pycoherence.guidance.guidance_config import GuidanceMode
from pycoherence.io.config_file import read_config_file
from pycoherence.synthetic.synth_config import Regime
from pycoherence.training.train_config import Alternation

ON_VALUES = ("on", "true", "yes", "1")
OFF_VALUES = ("off", "false", "no", "0")

# options that are not run settings and cannot come from a config file
NOT_CONFIGURABLE = ("config", "command", "func")


class CoherenceArgumentParser(argparse.ArgumentParser):
    """
    Argument parser raising :class:`UsageErrorException` instead of exiting.
    """

    def error(self, message):
        raise UsageErrorException("{0}: {1}".format(self.prog, message))


def on_off(value):
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ON_VALUES:
        return True
    if text in OFF_VALUES:
        return False
    raise argparse.ArgumentTypeError("expected on or off, got {0!r}".format(value))


def guidance_mode(value):
    text = str(value).strip().lower()
    if text == "on":
        return GuidanceMode.RELATIVE_ORDER.value
    try:
        return GuidanceMode(text).value
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected one of on, {0}; got {1!r}".format(", ".join(mode.value for mode in GuidanceMode), value)
        )


def _add_common_arguments(parser):
    parser.add_argument("--config", metavar="FILE", help="JSON file of option values, overridden by flags")
    parser.add_argument("--log-file", dest="log_file", metavar="FILE", help="stream the session records to FILE")


def _add_guidance_arguments(parser):
    group = parser.add_argument_group("cross-modal guidance")
    group.add_argument("--guidance", dest="mode", type=guidance_mode, help="on, relative-order or off")
    group.add_argument("--theta-text-source", dest="theta_text_source", type=float)
    group.add_argument("--theta-image-source", dest="theta_image_source", type=float)
    group.add_argument("--renormalize", dest="renormalize", type=on_off, metavar="on|off")


def _add_inference_arguments(parser):
    parser.add_argument("--data", metavar="FILE", help="dataset file")
    parser.add_argument("--checkpoint", metavar="FILE", help="trained checkpoint")
    parser.add_argument("--held-out", dest="held_out", type=int, help="use only the last N stories of the dataset")
    group = parser.add_argument_group("iterative inference")
    group.add_argument("--steps", dest="steps", type=int, help="boosting steps after the uni-modal prediction")
    group.add_argument("--early-stop", dest="early_stop", type=on_off, metavar="on|off")
    _add_guidance_arguments(parser)


def build_parser():
    """
    :return: the top-level parser; ``parser.commands`` maps command names to their sub-parsers
    :rtype: CoherenceArgumentParser
    """
    parser = CoherenceArgumentParser(
        prog="pycoherence", description="Cross-modal guided ordering of paired sentence and image sets."
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + pycoherence.__version__)
    subparsers = parser.add_subparsers(dest="command", parser_class=CoherenceArgumentParser)
    parser.commands = {}

    synth = subparsers.add_parser("synth", help="generate a synthetic dataset")
    _add_common_arguments(synth)
    synth.add_argument("--regime", choices=[item.value for item in Regime], default=Regime.CLEAN_BOTH.value)
    synth.add_argument("--stories", type=int)
    synth.add_argument("--seed", type=int)
    synth.add_argument("--dim", type=int)
    synth.add_argument("--set-size-range", dest="set_size_range", type=int, nargs=2, metavar=("MIN", "MAX"))
    synth.add_argument("--order-signal", dest="order_signal", type=float)
    synth.add_argument("--noise-text", dest="noise_text", type=float)
    synth.add_argument("--noise-image", dest="noise_image", type=float)
    synth.add_argument("--align-noise", dest="align_noise", type=float)
    synth.add_argument("--content-scale", dest="content_scale", type=float)
    synth.add_argument("--equal-sizes", dest="equal_sizes", type=on_off, metavar="on|off")
    synth.add_argument("-o", "--output", metavar="FILE")
    parser.commands["synth"] = synth

    train = subparsers.add_parser("train", help="train both ordering models")
    _add_common_arguments(train)
    train.add_argument("--data", metavar="FILE", help="dataset file")
    train.add_argument("--held-out", dest="held_out", type=int, help="leave the last N stories out of training")
    train.add_argument("--resume", metavar="FILE", help="continue from a checkpoint")
    train.add_argument("-o", "--output", metavar="FILE", help="checkpoint to write")
    group = train.add_argument_group("optimization")
    group.add_argument("--epochs", type=int)
    group.add_argument("--learning-rate", dest="learning_rate", type=float)
    group.add_argument("--batch-size", dest="batch_size", type=int)
    group.add_argument("--seed", type=int)
    group.add_argument("--ib-training", dest="ib_in_training", type=on_off, metavar="on|off")
    group.add_argument("--alternation", choices=[item.value for item in Alternation])
    group.add_argument("--pair-temperature", dest="pair_temperature", type=float)
    group = train.add_argument_group("model")
    group.add_argument("--n-heads", dest="n_heads", type=int)
    group.add_argument("--n-blocks", dest="n_blocks", type=int)
    group.add_argument("--ff-width", dest="ff_width", type=int)
    _add_guidance_arguments(train)
    parser.commands["train"] = train

    evaluate = subparsers.add_parser("eval", help="per-step metrics of a checkpoint on a dataset")
    _add_common_arguments(evaluate)
    _add_inference_arguments(evaluate)
    evaluate.add_argument("-o", "--output", metavar="FILE", help="JSON metrics report")
    parser.commands["eval"] = evaluate

    order = subparsers.add_parser("order", help="predict the orders of stories")
    _add_common_arguments(order)
    _add_inference_arguments(order)
    order.add_argument("--story", metavar="ID", help="only this story of the dataset")
    order.add_argument("--trace", metavar="FILE", help="JSON trace of a single story")
    order.add_argument("-o", "--output", metavar="FILE", help="write the orders here instead of the stdout")
    parser.commands["order"] = order

    dump = subparsers.add_parser("trace-dump", help="per-story inference traces as JSON lines")
    _add_common_arguments(dump)
    _add_inference_arguments(dump)
    dump.add_argument("-o", "--output", metavar="FILE")
    parser.commands["trace-dump"] = dump

    return parser


def configurable_options(subparser):
    """
    Option names a config file may set for one command.

    :rtype: set(str)
    """
    return {
        action.dest
        for action in subparser._actions
        if action.dest not in NOT_CONFIGURABLE and action.option_strings and action.dest != "help"
    }


def parse_arguments(argv=None):
    """
    Parse the command line; a ``--config`` file sits between the settings and the flags.

    :rtype: argparse.Namespace
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.error("a command is required")

    if args.config:
        subparser = parser.commands[args.command]
        subparser.set_defaults(**read_config_file(args.config, configurable_options(subparser)))
        args = parser.parse_args(argv)
    return args
