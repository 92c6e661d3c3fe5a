# !/usr/bin/python3
# -*- coding: utf-8 -*-

import json
import logging
import sys

from confapp import conf

from pycoherence.exceptions import DataErrorException
from pycoherence.exceptions import UsageErrorException
from pycoherence.guidance.guidance_config import GuidanceConfig
from pycoherence.inference.inference_config import InferenceConfig
from pycoherence.inference.iterative import evaluate_corpus
from pycoherence.inference.iterative import export_reports
from pycoherence.inference.iterative import iterative_infer
from pycoherence.io.dataset import read_corpus
from pycoherence.io.dataset import split_corpus
from pycoherence.io.dataset import write_corpus
from pycoherence.messaging.session_info import SessionInfo
from pycoherence.messaging.step_report import StepReport
from pycoherence.metrics.ordering_metrics import corpus_report
from pycoherence.session import Session
from pycoherence.story.modality import Modality
from pycoherence.synthetic.generator import generate_corpus
from pycoherence.synthetic.synth_config import SynthConfig
from pycoherence.synthetic.synth_config import regime
from pycoherence.training import Trainer
from pycoherence.training.checkpoint import load_checkpoint
from pycoherence.training.train_config import TrainConfig

logger = logging.getLogger(__name__)

MODALITIES = (Modality.TEXT, Modality.IMAGE)


def _pick(args, names):
    return {name: getattr(args, name) for name in names if getattr(args, name, None) is not None}


def _require(args, name, flag):
    if getattr(args, name, None) is None:
        raise UsageErrorException("{0} is required".format(flag))
    return getattr(args, name)


def _guidance(args, renormalize_default, fallback=None):
    """
    Guidance settings of a command; unset thresholds fall back to those of ``fallback``.
    """
    values = _pick(args, GuidanceConfig.FIELDS)
    values.setdefault("renormalize", renormalize_default)
    if fallback is not None:
        values.setdefault("theta_text_source", fallback.theta_text_source)
        values.setdefault("theta_image_source", fallback.theta_image_source)
    return GuidanceConfig(**values)


def _read_stories(args):
    path = _require(args, "data", "--data")
    corpus = read_corpus(path)
    if not corpus:
        raise DataErrorException("{0} holds no stories".format(path))
    return corpus


def _load_data(args):
    corpus = _read_stories(args)
    if args.held_out:
        _, corpus = split_corpus(corpus, args.held_out)
    return corpus


def _load_models(args, corpus):
    checkpoint = load_checkpoint(_require(args, "checkpoint", "--checkpoint"), corpus[0].text.width)
    guidance = _guidance(args, conf.PYCOHERENCE_RENORMALIZE_INFERENCE, checkpoint.config.guidance)
    cfg = InferenceConfig(guidance=guidance, **_pick(args, InferenceConfig.FIELDS))
    return checkpoint, cfg


def _story_trace(story, result):
    """
    Trace entries of one story, with the per-step metrics of both decoded orders.
    """
    entries = result.export()
    for entry, step in zip(entries, result.trace):
        for modality in MODALITIES:
            report = corpus_report([step.permutation(modality)], [story.element_set(modality).gold_permutation])
            entry[modality.value]["metrics"] = report.export()
    return entries


def _format_order(permutation):
    return " ".join(str(index) for index in permutation)


def cmd_synth(args):
    output = _require(args, "output", "-o/--output")
    cfg = regime(args.regime, **_pick(args, SynthConfig.FIELDS))
    corpus = generate_corpus(cfg)
    write_corpus(corpus, output)
    print("wrote {0} stories to {1}".format(len(corpus), output))
    return 0


def cmd_train(args):
    output = _require(args, "output", "-o/--output")
    corpus = _read_stories(args)
    if args.held_out:
        corpus, _ = split_corpus(corpus, args.held_out)

    guidance = _guidance(args, conf.PYCOHERENCE_RENORMALIZE_TRAINING)
    cfg = TrainConfig(guidance=guidance, **_pick(args, TrainConfig.FIELDS))
    width = corpus[0].text.width

    if args.resume:
        trainer = Trainer.from_checkpoint(args.resume, width, cfg, session_path=args.log_file, session_name="train")
    else:
        trainer = Trainer(cfg, width, session_path=args.log_file, session_name="train")

    with trainer.session:
        trainer.session += SessionInfo(Session.INFO_COMMAND, "train")
        for stats in trainer.fit(corpus):
            print(stats)
        trainer.save(output)
    return 0


def cmd_eval(args):
    corpus = _load_data(args)
    checkpoint, cfg = _load_models(args, corpus)
    reports = evaluate_corpus(corpus, checkpoint.text_model, checkpoint.image_model, cfg)

    with Session(args.log_file, "eval") as session:
        session += SessionInfo(Session.INFO_CONFIG, json.dumps(cfg.export(), sort_keys=True))
        for step, by_modality in sorted(reports.items()):
            for modality in MODALITIES:
                report = by_modality[modality]
                session += StepReport(step, modality.value, report)
                print("step={0} modality={1} {2}".format(step, modality.value, report))

    if args.output:
        with open(args.output, "w", encoding="utf-8") as outfile:
            json.dump(export_reports(reports), outfile, sort_keys=True, indent=2)
            outfile.write("\n")
    return 0


def cmd_order(args):
    corpus = _load_data(args)
    if args.story is not None:
        corpus = [story for story in corpus if story.id == args.story]
        if not corpus:
            raise UsageErrorException("no story with id {0!r}".format(args.story))
    if args.trace and len(corpus) != 1:
        raise UsageErrorException("--trace needs a single story, select one with --story")

    checkpoint, cfg = _load_models(args, corpus)
    lines = []
    for story in corpus:
        result = iterative_infer(story, checkpoint.text_model, checkpoint.image_model, cfg)
        lines.append("{0} text {1}".format(story.id, _format_order(result.text_perm)))
        lines.append("{0} image {1}".format(story.id, _format_order(result.image_perm)))
        if args.trace:
            with open(args.trace, "w", encoding="utf-8") as outfile:
                json.dump(_story_trace(story, result), outfile, sort_keys=True)
                outfile.write("\n")

    if args.output:
        with open(args.output, "w", encoding="utf-8") as outfile:
            outfile.write("\n".join(lines) + "\n")
    else:
        print("\n".join(lines))
    return 0


def cmd_trace_dump(args):
    output = _require(args, "output", "-o/--output")
    corpus = _load_data(args)
    checkpoint, cfg = _load_models(args, corpus)
    with open(output, "w", encoding="utf-8") as outfile:
        for story in corpus:
            result = iterative_infer(story, checkpoint.text_model, checkpoint.image_model, cfg)
            record = {"id": story.id, "steps_run": result.steps_run, "trace": _story_trace(story, result)}
            outfile.write(json.dumps(record, sort_keys=True, separators=(",", ":")))
            outfile.write("\n")
    print("wrote {0} traces to {1}".format(len(corpus), output), file=sys.stdout)
    return 0


COMMANDS = {
    "synth": cmd_synth,
    "train": cmd_train,
    "eval": cmd_eval,
    "order": cmd_order,
    "trace-dump": cmd_trace_dump,
}
