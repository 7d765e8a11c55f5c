"""Command-line interface: ``ssph train``, ``ssph predict``, ``ssph eval``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import LengthMismatch, RecordMismatch, SsphError
from .io import (atomic_write_text, format_label_records, parse_fasta,
                 parse_label_records, parse_labeled_dataset, read_models,
                 write_models)
from .metrics import CLASS_ORDER, confusion, format_report, format_report_csv
from .predictor import predict_structure
from .training import train_models


@dataclass
class RunConfig:
    states: int = 2
    half_width: int = 5
    max_iters: int = 100
    tol: float = 1e-6
    seed: int = 0
    boundary_label: str = "C"
    include_boundary: bool = True
    data: str | None = None
    models: str | None = None
    fasta: str | None = None
    pred: str | None = None
    truth: str | None = None
    out: str | None = None
    csv: str | None = None

    def validate(self) -> None:
        if self.states < 1:
            raise ValueError("--states must be >= 1")
        if self.half_width < 1:
            raise ValueError("--window must be >= 1")
        if self.tol <= 0:
            raise ValueError("--tol must be > 0")
        if self.max_iters < 0:
            raise ValueError("--iters must be >= 0")
        if self.seed < 0:
            raise ValueError("--seed must be >= 0")


def cmd_train(cfg: RunConfig) -> None:
    records = parse_labeled_dataset(Path(cfg.data).read_text(encoding="utf-8"))
    models, traces = train_models(
        records, num_states=cfg.states, half_width=cfg.half_width,
        max_iters=cfg.max_iters, tol=cfg.tol, seed=cfg.seed)
    write_models(models, cfg.out)
    for label in CLASS_ORDER:
        trace = traces[label]
        if trace:
            print(f"class {label}: final log-likelihood {trace[-1]:.6f} "
                  f"after {len(trace)} iterations")
        else:
            print(f"class {label}: no iterations run")


def cmd_predict(cfg: RunConfig) -> None:
    models = read_models(cfg.models)
    records = parse_fasta(Path(cfg.fasta).read_text(encoding="utf-8"))
    predictions = [
        (rec.id, predict_structure(models, rec.sequence,
                                   half_width=cfg.half_width,
                                   boundary_label=cfg.boundary_label))
        for rec in records
    ]
    atomic_write_text(cfg.out, format_label_records(predictions))


def cmd_eval(cfg: RunConfig) -> None:
    preds = parse_label_records(Path(cfg.pred).read_text(encoding="utf-8"))
    truths = parse_label_records(Path(cfg.truth).read_text(encoding="utf-8"))
    if len(preds) != len(truths):
        raise RecordMismatch(f"{len(preds)} prediction records vs "
                             f"{len(truths)} truth records")
    total = np.zeros((3, 3), dtype=np.int64)
    for (pred_id, pred), (truth_id, truth) in zip(preds, truths):
        if pred_id != truth_id:
            raise RecordMismatch(
                f"record id {pred_id!r} in predictions vs {truth_id!r} in truth")
        if len(pred) != len(truth):
            raise LengthMismatch(
                f"record {pred_id!r}: prediction length {len(pred)} != "
                f"truth length {len(truth)}")
        if not cfg.include_boundary:
            pred = pred[cfg.half_width:len(pred) - cfg.half_width]
            truth = truth[cfg.half_width:len(truth) - cfg.half_width]
        total += confusion(pred, truth)
    report = format_report(total)
    if cfg.out:
        atomic_write_text(cfg.out, report)
    else:
        print(report, end="")
    if cfg.csv:
        atomic_write_text(cfg.csv, format_report_csv(total))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ssph",
        description="Sliding-window protein secondary structure prediction "
                    "with per-class hidden Markov models.")
    sub = parser.add_subparsers(dest="command", required=True)

    train = sub.add_parser("train", help="fit the three class models")
    train.add_argument("--data", required=True,
                       help="labeled dataset (3-line records)")
    train.add_argument("--out", required=True, help="model file to write")
    train.add_argument("--states", type=int, default=2,
                       help="hidden states per model (default 2)")
    train.add_argument("--window", type=int, default=5,
                       help="window half-width (default 5)")
    train.add_argument("--iters", type=int, default=100,
                       help="max Baum-Welch iterations (default 100)")
    train.add_argument("--tol", type=float, default=1e-6,
                       help="log-likelihood convergence tolerance")
    train.add_argument("--seed", type=int, default=0,
                       help="seed for model initialization")

    predict = sub.add_parser("predict", help="label FASTA sequences")
    predict.add_argument("--models", required=True, help="trained model file")
    predict.add_argument("--fasta", required=True, help="input sequences")
    predict.add_argument("--out", required=True, help="predictions to write")
    predict.add_argument("--window", type=int, default=5,
                         help="window half-width (default 5)")
    predict.add_argument("--boundary-label", default="C", choices=list("HEC"),
                         help="label for positions without a complete window")

    evaluate = sub.add_parser("eval", help="score predictions against truth")
    evaluate.add_argument("--pred", required=True, help="prediction file")
    evaluate.add_argument("--truth", required=True, help="truth label file")
    evaluate.add_argument("--window", type=int, default=5,
                          help="half-width used when excluding boundaries")
    evaluate.add_argument("--include-boundary-in-eval",
                          action=argparse.BooleanOptionalAction, default=True,
                          help="score the first/last half-width residues too")
    evaluate.add_argument("--out", default=None,
                          help="write the text report here instead of stdout")
    evaluate.add_argument("--csv", default=None,
                          help="also write a CSV report to this path")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    mapping = {
        "states": "states", "window": "half_width", "iters": "max_iters",
        "tol": "tol", "seed": "seed", "boundary_label": "boundary_label",
        "include_boundary_in_eval": "include_boundary", "data": "data",
        "models": "models", "fasta": "fasta", "pred": "pred",
        "truth": "truth", "out": "out", "csv": "csv",
    }
    for arg_name, field in mapping.items():
        if hasattr(args, arg_name):
            setattr(cfg, field, getattr(args, arg_name))
    cfg.validate()
    return cfg


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    commands = {"train": cmd_train, "predict": cmd_predict, "eval": cmd_eval}
    try:
        cfg = _config_from_args(args)
        commands[args.command](cfg)
    except (SsphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
