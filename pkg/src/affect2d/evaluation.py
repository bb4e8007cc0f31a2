"""Stratified k-fold cross-validation and confusion-matrix metrics."""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from affect2d import Affect2DError
from affect2d.features import FeatureExtractor
from affect2d.svm import Hyperparams, predict_many, train
from affect2d.textproc import Document


class EvaluationError(Affect2DError, ValueError):
    pass


@dataclass(frozen=True)
class ConfusionMatrix:
    """Counts with +1 as the positive class: tp/fp are predicted +1."""

    tp: int = 0
    fp: int = 0
    fn: int = 0
    tn: int = 0

    def __post_init__(self):
        if min(self.tp, self.fp, self.fn, self.tn) < 0:
            raise EvaluationError("confusion counts must be >= 0")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn

    def __add__(self, other: "ConfusionMatrix") -> "ConfusionMatrix":
        return ConfusionMatrix(
            self.tp + other.tp, self.fp + other.fp, self.fn + other.fn, self.tn + other.tn
        )

    def swapped(self) -> "ConfusionMatrix":
        """The same matrix with the roles of the two classes exchanged."""
        return ConfusionMatrix(tp=self.tn, fp=self.fn, fn=self.fp, tn=self.tp)

    @classmethod
    def from_labels(cls, y_true, y_pred) -> "ConfusionMatrix":
        t = np.asarray(y_true)
        p = np.asarray(y_pred)
        return cls(
            tp=int(np.sum((p == 1) & (t == 1))),
            fp=int(np.sum((p == 1) & (t == -1))),
            fn=int(np.sum((p == -1) & (t == 1))),
            tn=int(np.sum((p == -1) & (t == -1))),
        )

    def to_dict(self) -> dict:
        return {"tp": self.tp, "fp": self.fp, "fn": self.fn, "tn": self.tn}


@dataclass(frozen=True)
class Metrics:
    # None marks a ratio whose denominator is zero.
    accuracy: float | None
    precision_pos: float | None
    precision_neg: float | None
    recall_pos: float | None
    recall_neg: float | None


def _ratio(num: int, den: int) -> float | None:
    return num / den if den > 0 else None


def metrics(cm: ConfusionMatrix) -> Metrics:
    return Metrics(
        accuracy=_ratio(cm.tp + cm.tn, cm.total),
        precision_pos=_ratio(cm.tp, cm.tp + cm.fp),
        precision_neg=_ratio(cm.tn, cm.tn + cm.fn),
        recall_pos=_ratio(cm.tp, cm.tp + cm.fn),
        recall_neg=_ratio(cm.tn, cm.tn + cm.fp),
    )


def stratified_folds(labels: Sequence[int], k: int, seed: int) -> list[np.ndarray]:
    """Per-class seeded shuffle, then round-robin into ``k`` folds.

    The round-robin counter carries over between classes so overall fold
    sizes also differ by at most one.
    """
    if k < 2:
        raise EvaluationError("k must be >= 2")
    labels = np.asarray(labels)
    rng = np.random.default_rng(seed)
    buckets: list[list[int]] = [[] for _ in range(k)]
    slot = 0
    for cls in np.unique(labels):
        members = np.flatnonzero(labels == cls)
        if len(members) < k:
            raise EvaluationError(f"class {cls} has {len(members)} examples, fewer than k={k}")
        for idx in rng.permutation(members):
            buckets[slot].append(int(idx))
            slot = (slot + 1) % k
    return [np.array(sorted(b), dtype=int) for b in buckets]


def format_accuracy(mean: float, std: float) -> str:
    return f"{100 * mean:.2f}% +/- {100 * std:.2f}%"


@dataclass
class CVReport:
    fold_accuracies: list[float]
    pooled_confusion: ConfusionMatrix
    fold_confusions: list[ConfusionMatrix] = field(default_factory=list)
    label_names: tuple[str, str] = ("negative", "positive")
    descriptor_ids: list[str] = field(default_factory=list)

    @property
    def mean_accuracy(self) -> float:
        return statistics.fmean(self.fold_accuracies)

    @property
    def std_accuracy(self) -> float:
        if len(self.fold_accuracies) < 2:
            return 0.0
        return statistics.stdev(self.fold_accuracies)

    def summary(self) -> str:
        return format_accuracy(self.mean_accuracy, self.std_accuracy)

    def to_dict(self) -> dict:
        m = metrics(self.pooled_confusion)
        return {
            "k": len(self.fold_accuracies),
            "fold_accuracies": self.fold_accuracies,
            "mean_accuracy": self.mean_accuracy,
            "std_accuracy": self.std_accuracy,
            "summary": self.summary(),
            "label_names": list(self.label_names),
            "pooled_confusion": self.pooled_confusion.to_dict(),
            "fold_confusions": [c.to_dict() for c in self.fold_confusions],
            "metrics": {
                "accuracy": m.accuracy,
                "precision_pos": m.precision_pos,
                "precision_neg": m.precision_neg,
                "recall_pos": m.recall_pos,
                "recall_neg": m.recall_neg,
            },
            "descriptor_ids": self.descriptor_ids,
        }

    def render_table(self) -> str:
        return render_confusion_table(self.pooled_confusion, self.label_names)


def _pct(value: float | None) -> str:
    return "undefined" if value is None else f"{100 * value:.2f}%"


def render_confusion_table(cm: ConfusionMatrix, label_names: tuple[str, str]) -> str:
    """Plain-text confusion table, positive class first, with precision/recall margins."""
    neg, pos = label_names
    m = metrics(cm)
    rows = [
        ["", f'true "{pos}"', f'true "{neg}"', "Class Precision"],
        [f'pred "{pos}"', str(cm.tp), str(cm.fp), _pct(m.precision_pos)],
        [f'pred "{neg}"', str(cm.fn), str(cm.tn), _pct(m.precision_neg)],
        ["Class Recall", _pct(m.recall_pos), _pct(m.recall_neg), ""],
    ]
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows
    )


def fold_seed(seed: int, fold: int) -> int:
    return int(np.random.SeedSequence([seed, fold]).generate_state(1, dtype=np.uint32)[0])


def cross_validate(
    examples: Sequence[tuple[Document, int]],
    make_extractor: Callable[[], FeatureExtractor],
    hp: Hyperparams,
    k: int = 10,
    seed: int | None = None,
    label_names: tuple[str, str] = ("negative", "positive"),
) -> CVReport:
    """k-fold CV; a fresh extractor is fitted on each fold's training part only.

    Extractors that declare ``stateless = True`` are transformed once up front.
    """
    seed = hp.seed if seed is None else seed
    docs = [d for d, _ in examples]
    labels = np.asarray([lab for _, lab in examples], dtype=int)
    folds = stratified_folds(labels, k, seed)

    shared = make_extractor()
    cached = shared.transform_many(docs) if getattr(shared, "stateless", False) else None

    accuracies: list[float] = []
    confusions: list[ConfusionMatrix] = []
    descriptor_ids: list[str] = []
    for fold, test_idx in enumerate(folds):
        train_mask = np.ones(len(docs), dtype=bool)
        train_mask[test_idx] = False
        train_idx = np.flatnonzero(train_mask)
        if cached is not None:
            train_vecs = [cached[i] for i in train_idx]
            test_vecs = [cached[i] for i in test_idx]
            descriptor_ids.append(shared.descriptor.id)
        else:
            extractor = make_extractor().fit([docs[i] for i in train_idx])
            train_vecs = extractor.transform_many(docs[i] for i in train_idx)
            test_vecs = extractor.transform_many(docs[i] for i in test_idx)
            descriptor_ids.append(extractor.descriptor.id)
        fold_hp = Hyperparams(hp.c, hp.epochs, hp.learning_rate_schedule, fold_seed(seed, fold))
        model = train(list(zip(train_vecs, labels[train_idx].tolist())), fold_hp, label_names=label_names)
        predicted, _ = predict_many(model, test_vecs)
        cm = ConfusionMatrix.from_labels(labels[test_idx], predicted)
        confusions.append(cm)
        accuracies.append((cm.tp + cm.tn) / cm.total)

    pooled = ConfusionMatrix()
    for cm in confusions:
        pooled = pooled + cm
    return CVReport(accuracies, pooled, confusions, label_names, descriptor_ids)
