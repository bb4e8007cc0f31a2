"""Command-line workflow: build-dataset, train, evaluate, baseline, classify."""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from affect2d import Affect2DError, __version__
from affect2d.dataset import (
    CLASS_NAMES,
    TASKS,
    LabeledText,
    build_balanced,
    load_reviews,
    read_dataset,
    write_dataset,
)
from affect2d.emotion import EmotionClassifier
from affect2d.evaluation import cross_validate
from affect2d.features import BASELINE_MODES, BaselineConfig, UnigramExtractor, extractor_for
from affect2d.lexicon import load_general_inquirer, load_sentiwordnet
from affect2d.svm import DEFAULT_SEED, Hyperparams, TrainedModel, train
from affect2d.textproc import segment


class ConfigError(Affect2DError, ValueError):
    pass


def sha256_of(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


@dataclass
class RunConfig:
    command: str
    seed: int = DEFAULT_SEED
    task: str | None = None
    sentiwordnet: Path | None = None
    inquirer: Path | None = None
    reviews: Path | None = None
    dataset: Path | None = None
    models: list[Path] = field(default_factory=list)
    input: Path | None = None
    out: Path | None = None
    per_class: int = 2500
    folds: int = 10
    c: float = 1.0
    epochs: int = 50
    mode: str = "topk"
    k: int = 2000

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        cfg = cls(command=args.command)
        for name in cls.__dataclass_fields__:
            if name == "models":
                cfg.models = [Path(p) for p in (getattr(args, "model", None) or [])]
            elif name != "command" and getattr(args, name, None) is not None:
                value = getattr(args, name)
                if name in ("sentiwordnet", "inquirer", "reviews", "dataset", "input", "out"):
                    value = Path(value)
                setattr(cfg, name, value)
        cfg.validate()
        return cfg

    def validate(self) -> None:
        inputs = [self.sentiwordnet, self.inquirer, self.reviews, self.dataset, self.input]
        if self.command != "train":
            inputs += self.models
        for path in inputs:
            if path is not None and not path.is_file():
                raise ConfigError(f"input file not found: {path}")
        if self.per_class < 1:
            raise ConfigError("--per-class must be >= 1")
        if self.folds < 2:
            raise ConfigError("--folds must be >= 2")

    def hyperparams(self) -> Hyperparams:
        return Hyperparams(c=self.c, epochs=self.epochs, seed=self.seed)

    def header(self, **extra) -> dict:
        inputs = {}
        for name in ("sentiwordnet", "inquirer", "reviews", "dataset", "input"):
            path = getattr(self, name)
            if path is not None:
                inputs[name] = {"file": path.name, "sha256": sha256_of(path)}
        if self.command == "classify":
            inputs["models"] = [{"file": p.name, "sha256": sha256_of(p)} for p in self.models]
        head = {"tool": "affect2d", "version": __version__, "command": self.command, "seed": self.seed}
        head.update(extra)
        head["inputs"] = inputs
        return head


def _header_lines(header: dict) -> list[str]:
    lines = [f"tool=affect2d version={header['version']} command={header['command']} seed={header['seed']}"]
    for key, value in header.items():
        if key not in ("tool", "version", "command", "seed", "inputs"):
            lines.append(f"{key}={value}")
    for name, info in header["inputs"].items():
        for item in info if isinstance(info, list) else [info]:
            lines.append(f"input {name}={item['file']} sha256={item['sha256']}")
    return lines


def _require(cfg: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(cfg, name) is None:
            raise ConfigError(f"--{name.replace('_', '-')} is required for {cfg.command}")


def _out_dir(cfg: RunConfig) -> Path:
    _require(cfg, "out")
    cfg.out.mkdir(parents=True, exist_ok=True)
    return cfg.out


def _labelled_texts(cfg: RunConfig) -> list[LabeledText]:
    if cfg.dataset is not None:
        items = read_dataset(cfg.dataset.read_text(encoding="utf-8"))
        items = [it for it in items if it.task == cfg.task]
        if not items:
            raise ConfigError(f"{cfg.dataset} holds no {cfg.task} examples")
        return items
    if cfg.reviews is None:
        raise ConfigError(f"{cfg.command} needs --dataset or --reviews")
    parsed = load_reviews(cfg.reviews)
    return build_balanced(parsed.records, cfg.task, cfg.per_class, cfg.seed)


def _lexicons(cfg: RunConfig):
    _require(cfg, "sentiwordnet", "inquirer")
    return load_sentiwordnet(cfg.sentiwordnet), load_general_inquirer(cfg.inquirer)


def _label_names(task: str) -> tuple[str, str]:
    return CLASS_NAMES[task][-1], CLASS_NAMES[task][1]


def cmd_build_dataset(cfg: RunConfig) -> int:
    _require(cfg, "reviews", "task")
    out = _out_dir(cfg)
    parsed = load_reviews(cfg.reviews)
    items = build_balanced(parsed.records, cfg.task, cfg.per_class, cfg.seed)
    header = _header_lines(cfg.header(task=cfg.task, per_class=cfg.per_class))
    path = out / f"{cfg.task}_dataset.tsv"
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        write_dataset(items, fh, header)
    rejects = out / f"{cfg.task}_rejects.tsv"
    with rejects.open("w", encoding="utf-8", newline="\n") as fh:
        for line in header:
            fh.write(f"# {line}\n")
        for lineno, reason in parsed.rejects:
            fh.write(f"{lineno}\t{reason}\n")
    print(f"wrote {len(items)} {cfg.task} examples to {path} ({len(parsed.rejects)} rejected lines)")
    return 0


def cmd_train(cfg: RunConfig) -> int:
    _require(cfg, "task")
    if len(cfg.models) != 1:
        raise ConfigError("train needs exactly one --model output path")
    sentlex, catlex = _lexicons(cfg)
    extractor = extractor_for(cfg.task, sentlex, catlex)
    items = _labelled_texts(cfg)
    examples = [(extractor.transform(segment(it.text)), it.label) for it in items]
    model = train(examples, cfg.hyperparams(), label_names=_label_names(cfg.task), task=cfg.task)
    cfg.models[0].parent.mkdir(parents=True, exist_ok=True)
    model.save(cfg.models[0], header=cfg.header(task=cfg.task, examples=len(items)))
    print(f"trained {cfg.task} model on {len(items)} examples -> {cfg.models[0]}")
    return 0


def _write_report(cfg: RunConfig, report, name: str, **extra) -> Path:
    out = _out_dir(cfg)
    header = cfg.header(task=cfg.task, folds=cfg.folds, **extra)
    json_path = out / f"{name}_report.json"
    with json_path.open("w", encoding="utf-8", newline="\n") as fh:
        json.dump({"header": header, "report": report.to_dict()}, fh, indent=2)
        fh.write("\n")
    txt_path = out / f"{name}_report.txt"
    with txt_path.open("w", encoding="utf-8", newline="\n") as fh:
        for line in _header_lines(header):
            fh.write(f"# {line}\n")
        fh.write(f"{cfg.folds}-fold cross-validation, {cfg.task}\n")
        fh.write(f"Mean accuracy: {report.summary()}\n\n")
        fh.write(report.render_table() + "\n")
    return txt_path


def cmd_evaluate(cfg: RunConfig) -> int:
    _require(cfg, "task")
    sentlex, catlex = _lexicons(cfg)
    items = _labelled_texts(cfg)
    examples = [(segment(it.text), it.label) for it in items]
    report = cross_validate(
        examples,
        lambda: extractor_for(cfg.task, sentlex, catlex),
        cfg.hyperparams(),
        k=cfg.folds,
        seed=cfg.seed,
        label_names=_label_names(cfg.task),
    )
    path = _write_report(cfg, report, cfg.task)
    print(f"{cfg.task}: mean accuracy {report.summary()} ({cfg.folds}-fold) -> {path}")
    print(report.render_table())
    return 0


def cmd_baseline(cfg: RunConfig) -> int:
    _require(cfg, "task")
    config = BaselineConfig(cfg.mode, cfg.k)
    sentlex = load_sentiwordnet(cfg.sentiwordnet) if cfg.sentiwordnet is not None else None
    if config.mode in ("adj", "adjadv") and sentlex is None:
        raise ConfigError(f"--sentiwordnet is required for --mode {config.mode}")
    items = _labelled_texts(cfg)
    examples = [(segment(it.text), it.label) for it in items]
    report = cross_validate(
        examples,
        lambda: UnigramExtractor(config, sentlex),
        cfg.hyperparams(),
        k=cfg.folds,
        seed=cfg.seed,
        label_names=_label_names(cfg.task),
    )
    extra = {"mode": config.mode}
    if config.mode == "topk":
        extra["k"] = config.k
    path = _write_report(cfg, report, f"baseline_{cfg.task}_{config.mode}", **extra)
    print(f"baseline {config.mode} ({cfg.task}): mean accuracy {report.summary()} -> {path}")
    return 0


def _model_task(model: TrainedModel) -> str:
    if model.task in TASKS:
        return model.task
    prefix = model.descriptor_id.split("/", 1)[0]
    if prefix in TASKS:
        return prefix
    raise ConfigError(f"cannot tell which task model {model.descriptor_id!r} is for")


def _read_texts(cfg: RunConfig, positional: Sequence[str]) -> list[str]:
    if cfg.input is not None:
        lines = cfg.input.read_text(encoding="utf-8").splitlines()
    elif positional:
        lines = list(positional)
    else:
        lines = sys.stdin.read().splitlines()
    return [line for line in lines if line.strip()]


def cmd_classify(cfg: RunConfig, texts: Sequence[str]) -> int:
    by_task: dict[str, TrainedModel] = {}
    for path in cfg.models:
        model = TrainedModel.load(path)
        task = _model_task(model)
        if task in by_task:
            raise ConfigError(f"two {task} models given")
        by_task[task] = model
    missing = [t for t in TASKS if t not in by_task]
    if missing:
        raise ConfigError(f"classify needs a {missing[0]} model (--model)")
    sentlex, catlex = _lexicons(cfg)
    classifier = EmotionClassifier(by_task["polarity"], by_task["intensity"], sentlex, catlex)
    lines = [json.dumps({"header": cfg.header()})]
    for text in _read_texts(cfg, texts):
        lines.append(json.dumps({"text": text, **classifier.classify(text).to_record()}))
    payload = "\n".join(lines) + "\n"
    if cfg.out is not None:
        path = _out_dir(cfg) / "classify.jsonl"
        path.write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affect2d",
        description="Polarity x intensity text classification on Thayer's emotion quadrants.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def common(p, *, lexicons=True, data=True, training=True):
        p.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"master seed (default {DEFAULT_SEED})")
        if lexicons:
            p.add_argument("--sentiwordnet", metavar="PATH", help="SentiWordNet 3.0 text file")
            p.add_argument("--inquirer", metavar="PATH", help="General Inquirer table (tab or comma separated)")
        if data:
            p.add_argument("--task", choices=TASKS, required=True)
            p.add_argument("--reviews", metavar="PATH", help="JSON-lines reviews with 'text' and 'stars'")
            p.add_argument("--dataset", metavar="PATH", help="dataset TSV written by build-dataset")
            p.add_argument("--per-class", type=int, default=2500, dest="per_class", metavar="N")
        if training:
            p.add_argument("--c", type=float, default=1.0, help="soft-margin weight")
            p.add_argument("--epochs", type=int, default=50)

    p = sub.add_parser("build-dataset", help="apply the star-rating proxies and write a balanced set")
    common(p, lexicons=False, training=False)
    p.add_argument("--out", metavar="DIR", required=True)

    p = sub.add_parser("train", help="fit one task's model")
    common(p)
    p.add_argument("--model", metavar="PATH", action="append", required=True, help="output model file")

    p = sub.add_parser("evaluate", help="stratified k-fold cross-validation")
    common(p)
    p.add_argument("--folds", type=int, default=10, metavar="K")
    p.add_argument("--out", metavar="DIR", required=True)

    p = sub.add_parser("baseline", help="unigram baselines through the same CV harness")
    common(p)
    p.add_argument("--mode", choices=BASELINE_MODES, default="topk")
    p.add_argument("--k", type=int, default=2000)
    p.add_argument("--folds", type=int, default=10, metavar="K")
    p.add_argument("--out", metavar="DIR", required=True)

    p = sub.add_parser("classify", help="map texts to emotion quadrants")
    common(p, data=False, training=False)
    p.add_argument("--model", metavar="PATH", action="append", required=True,
                   help="polarity and intensity model files (give twice)")
    p.add_argument("--input", metavar="PATH", help="file with one text per line (default: stdin)")
    p.add_argument("--out", metavar="DIR")
    p.add_argument("texts", nargs="*", help="texts to classify instead of --input")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig.from_args(args)
        if cfg.command == "build-dataset":
            return cmd_build_dataset(cfg)
        if cfg.command == "train":
            return cmd_train(cfg)
        if cfg.command == "evaluate":
            return cmd_evaluate(cfg)
        if cfg.command == "baseline":
            return cmd_baseline(cfg)
        return cmd_classify(cfg, args.texts)
    except (Affect2DError, OSError) as exc:
        print(f"affect2d: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
