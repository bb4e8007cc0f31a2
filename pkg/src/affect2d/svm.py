"""Primal linear soft-margin SVM trained by seeded stochastic subgradient descent."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from affect2d import Affect2DError
from affect2d.features import DescriptorMismatchError, FeatureDescriptor, FeatureVector

MODEL_FORMAT = "affect2d-model"
MODEL_FORMAT_VERSION = 1
DEFAULT_SEED = 20140515
SCHEDULES = ("pegasos",)


class TrainingError(Affect2DError, ValueError):
    pass


class ModelFormatError(Affect2DError, ValueError):
    pass


@dataclass(frozen=True)
class Hyperparams:
    c: float = 1.0
    epochs: int = 50
    learning_rate_schedule: str = "pegasos"
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if not self.c > 0:
            raise TrainingError(f"c must be > 0, got {self.c}")
        if self.epochs < 1:
            raise TrainingError(f"epochs must be >= 1, got {self.epochs}")
        if self.learning_rate_schedule not in SCHEDULES:
            raise TrainingError(f"unknown schedule {self.learning_rate_schedule!r}")
        if self.seed < 0:
            raise TrainingError("seed must be unsigned")


@dataclass(frozen=True, eq=False)
class Standardizer:
    means: np.ndarray
    stddevs: np.ndarray

    def transform(self, X: np.ndarray) -> np.ndarray:
        return (np.asarray(X, dtype=float) - self.means) / self.stddevs


def _stack(vectors: Sequence[FeatureVector]) -> tuple[np.ndarray, str]:
    if not vectors:
        raise TrainingError("no feature vectors")
    ids = {v.descriptor_id for v in vectors}
    if len(ids) > 1:
        raise DescriptorMismatchError(f"mixed descriptors: {sorted(ids)}")
    dims = {len(v) for v in vectors}
    if len(dims) > 1:
        raise DescriptorMismatchError(f"dimension mismatch: {sorted(dims)}")
    return np.vstack([v.values for v in vectors]), ids.pop()


def fit_standardizer(vectors: Sequence[FeatureVector] | np.ndarray) -> Standardizer:
    """Per-feature mean and population std; constant features keep std 1."""
    X = vectors if isinstance(vectors, np.ndarray) else _stack(vectors)[0]
    if X.ndim != 2 or X.shape[0] < 2:
        raise TrainingError("standardizer needs at least 2 vectors")
    means = X.mean(axis=0)
    stddevs = X.std(axis=0)
    stddevs[stddevs == 0] = 1.0
    return Standardizer(means, stddevs)


def objective(w: np.ndarray, b: float, X: np.ndarray, y: np.ndarray, c: float) -> float:
    """``½(‖w‖² + b²) + c·Σ max(0, 1 − y(w·x + b))`` on standardized ``X``."""
    margins = y * (X @ w + b)
    return 0.5 * (w @ w + b * b) + c * np.maximum(0.0, 1.0 - margins).sum()


def subgradient(
    w: np.ndarray, b: float, X: np.ndarray, y: np.ndarray, c: float
) -> tuple[np.ndarray, float]:
    """A subgradient of :func:`objective`; points exactly on the hinge count as inactive."""
    active = y * (X @ w + b) < 1.0
    ya = y[active]
    return w - c * (ya @ X[active]), b - c * ya.sum()


def _pegasos(Xa: np.ndarray, y: np.ndarray, hp: Hyperparams, epoch_hook=None) -> np.ndarray:
    n, d = Xa.shape
    lam = 1.0 / (hp.c * n)
    radius = 1.0 / math.sqrt(lam)
    rng = np.random.default_rng(hp.seed)
    theta = np.zeros(d)
    # t-weighted running average of the iterates; this is what gets returned.
    averaged = np.zeros(d)
    t = 0
    for epoch in range(hp.epochs):
        for i in rng.permutation(n):
            t += 1
            x = Xa[i]
            yi = y[i]
            violated = yi * (theta @ x) < 1.0
            theta *= 1.0 - 1.0 / t
            if violated:
                theta += (yi / (lam * t)) * x
            norm = math.sqrt(theta @ theta)
            if norm > radius:
                theta *= radius / norm
            averaged += (2.0 / (t + 1)) * (theta - averaged)
        if epoch_hook is not None:
            epoch_hook(epoch, averaged[:-1].copy(), float(averaged[-1]))
    return averaged


@dataclass(frozen=True, eq=False)
class TrainedModel:
    descriptor: FeatureDescriptor
    weights: np.ndarray
    bias: float
    standardizer: Standardizer
    hyperparams: Hyperparams
    label_names: tuple[str, str] = ("negative", "positive")
    task: str | None = None

    @property
    def descriptor_id(self) -> str:
        return self.descriptor.id

    def decision_values(self, X: np.ndarray) -> np.ndarray:
        return self.standardizer.transform(X) @ self.weights + self.bias

    def to_dict(self, header: dict | None = None) -> dict:
        out = {}
        if header is not None:
            out["header"] = header
        out.update(
            format=MODEL_FORMAT,
            format_version=MODEL_FORMAT_VERSION,
            task=self.task,
            descriptor={"id": self.descriptor.id, "feature_names": list(self.descriptor.feature_names)},
            label_names=list(self.label_names),
            hyperparams=asdict(self.hyperparams),
            seed=self.hyperparams.seed,
            bias=self.bias,
            weights=self.weights.tolist(),
            standardizer={
                "means": self.standardizer.means.tolist(),
                "stddevs": self.standardizer.stddevs.tolist(),
            },
        )
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "TrainedModel":
        if data.get("format") != MODEL_FORMAT:
            raise ModelFormatError("not a model file")
        if data.get("format_version") != MODEL_FORMAT_VERSION:
            raise ModelFormatError(
                f"model format version {data.get('format_version')!r} "
                f"is not supported (expected {MODEL_FORMAT_VERSION})"
            )
        try:
            desc = FeatureDescriptor(data["descriptor"]["id"], tuple(data["descriptor"]["feature_names"]))
            weights = np.asarray(data["weights"], dtype=float)
            std = Standardizer(
                np.asarray(data["standardizer"]["means"], dtype=float),
                np.asarray(data["standardizer"]["stddevs"], dtype=float),
            )
            model = cls(
                descriptor=desc,
                weights=weights,
                bias=float(data["bias"]),
                standardizer=std,
                hyperparams=Hyperparams(**data["hyperparams"]),
                label_names=tuple(data["label_names"]),
                task=data.get("task"),
            )
        except (KeyError, TypeError) as exc:
            raise ModelFormatError(f"malformed model file: {exc}") from None
        if not (len(weights) == len(std.means) == len(std.stddevs) == desc.dimension):
            raise ModelFormatError("model arrays disagree with descriptor dimension")
        if not np.all(np.isfinite(weights)):
            raise ModelFormatError("non-finite weights")
        return model

    def save(self, path, header: dict | None = None) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(header), fh, indent=2)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "TrainedModel":
        with open(path, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ModelFormatError(f"{path}: not valid JSON ({exc})") from None
        return cls.from_dict(data)


def train(
    examples: Sequence[tuple[FeatureVector, int]],
    hp: Hyperparams = Hyperparams(),
    *,
    label_names: tuple[str, str] = ("negative", "positive"),
    task: str | None = None,
    epoch_hook=None,
) -> TrainedModel:
    """Fit a linear SVM on ``(vector, label)`` pairs with labels in {-1, +1}.

    Inputs are standardized, then the bias is folded in as a constant extra
    feature and the whole parameter vector is trained with Pegasos steps
    ``1/(λt)``, ``λ = 1/(c·N)``; the returned parameters are the t-weighted
    average of the iterates. Same inputs and seed give bit-identical weights.
    """
    vectors = [v for v, _ in examples]
    X, _ = _stack(vectors)
    descriptor = vectors[0].descriptor
    if descriptor is None:
        raise TrainingError("feature vectors carry no descriptor")
    y = np.asarray([lab for _, lab in examples], dtype=float)
    if not set(np.unique(y)) <= {-1.0, 1.0}:
        raise TrainingError("labels must be -1 or +1")
    if len(np.unique(y)) < 2:
        raise TrainingError("degenerate labels")
    if not np.all(np.isfinite(X)):
        raise TrainingError("non-finite feature value")
    std = fit_standardizer(X)
    Xs = std.transform(X)
    Xa = np.hstack([Xs, np.ones((len(Xs), 1))])
    theta = _pegasos(Xa, y, hp, epoch_hook)
    return TrainedModel(
        descriptor=descriptor,
        weights=theta[:-1].copy(),
        bias=float(theta[-1]),
        standardizer=std,
        hyperparams=hp,
        label_names=label_names,
        task=task,
    )


def predict(model: TrainedModel, v: FeatureVector) -> tuple[int, float]:
    if v.descriptor_id != model.descriptor_id:
        raise DescriptorMismatchError(
            f"vector descriptor {v.descriptor_id!r} does not match model {model.descriptor_id!r}"
        )
    value = float(model.decision_values(v.values[None, :])[0])
    return (1 if value >= 0 else -1), value


def predict_many(model: TrainedModel, vectors: Sequence[FeatureVector]) -> tuple[np.ndarray, np.ndarray]:
    for v in vectors:
        if v.descriptor_id != model.descriptor_id:
            raise DescriptorMismatchError(
                f"vector descriptor {v.descriptor_id!r} does not match model {model.descriptor_id!r}"
            )
    X = np.vstack([v.values for v in vectors])
    values = model.decision_values(X)
    return np.where(values >= 0, 1, -1), values
