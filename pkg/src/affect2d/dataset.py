"""Star-rated review ingestion and balanced proxy-labelled training sets."""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

import numpy as np

from affect2d import Affect2DError

TASKS = ("polarity", "intensity")
CLASS_NAMES = {
    "polarity": {-1: "negative", 1: "positive"},
    "intensity": {-1: "low", 1: "high"},
}


class DatasetError(Affect2DError, ValueError):
    pass


@dataclass(frozen=True)
class ReviewRecord:
    text: str
    stars: int

    def __post_init__(self):
        if self.stars not in (1, 2, 3, 4, 5):
            raise DatasetError(f"stars must be 1..5, got {self.stars!r}")
        if not isinstance(self.text, str) or not self.text.strip():
            raise DatasetError("review text is blank")


@dataclass(frozen=True)
class LabeledText:
    text: str
    task: str
    label: int


@dataclass
class ParsedReviews:
    records: list[ReviewRecord] = field(default_factory=list)
    rejects: list[tuple[int, str]] = field(default_factory=list)


def _coerce_stars(value) -> int:
    if isinstance(value, bool):
        raise DatasetError(f"stars must be an integer, got {value!r}")
    if isinstance(value, float) and value.is_integer():
        value = int(value)
    if not isinstance(value, int):
        raise DatasetError(f"stars must be an integer, got {value!r}")
    return value


def parse_reviews(stream: TextIO | str, max_reject_fraction: float = 0.5) -> ParsedReviews:
    """Read JSON-lines records carrying ``text`` and ``stars``.

    Invalid lines go to ``rejects`` as ``(line number, reason)``. More than
    half the non-blank lines rejected means the file is not in this format.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    out = ParsedReviews()
    seen = 0
    try:
        for lineno, line in enumerate(stream, start=1):
            if not line.strip():
                continue
            seen += 1
            try:
                obj = json.loads(line)
                if not isinstance(obj, dict):
                    raise DatasetError("record is not an object")
                if "text" not in obj or "stars" not in obj:
                    raise DatasetError("record lacks 'text' or 'stars'")
                out.records.append(ReviewRecord(obj["text"], _coerce_stars(obj["stars"])))
            except (json.JSONDecodeError, DatasetError) as exc:
                out.rejects.append((lineno, str(exc)))
    except (OSError, UnicodeDecodeError) as exc:
        raise DatasetError(f"unreadable review stream: {exc}") from None
    if seen and len(out.rejects) > max_reject_fraction * seen:
        raise DatasetError(
            f"format mismatch: {len(out.rejects)} of {seen} lines rejected"
        )
    return out


def load_reviews(path) -> ParsedReviews:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_reviews(fh)
    except OSError as exc:
        raise DatasetError(f"unreadable review stream: {exc}") from None


def polarity_label(stars: int) -> int | None:
    return {5: 1, 1: -1}.get(stars)


def intensity_label(stars: int) -> int | None:
    return {5: 1, 1: 1, 3: -1}.get(stars)


def proxy_label(task: str, stars: int) -> int | None:
    if task == "polarity":
        return polarity_label(stars)
    if task == "intensity":
        return intensity_label(stars)
    raise DatasetError(f"unknown task {task!r}")


def build_balanced(
    records: Sequence[ReviewRecord], task: str, n_per_class: int, seed: int
) -> list[LabeledText]:
    """Sample exactly ``n_per_class`` records per proxy class, then shuffle."""
    if n_per_class < 1:
        raise DatasetError("n_per_class must be >= 1")
    pools: dict[int, list[int]] = {-1: [], 1: []}
    for i, rec in enumerate(records):
        label = proxy_label(task, rec.stars)
        if label is not None:
            pools[label].append(i)
    rng = np.random.default_rng(seed)
    chosen: list[tuple[int, int]] = []
    for label in (-1, 1):
        pool = pools[label]
        if len(pool) < n_per_class:
            raise DatasetError(
                f"{CLASS_NAMES[task][label]}: need {n_per_class}, have {len(pool)}"
            )
        picks = rng.choice(len(pool), size=n_per_class, replace=False)
        chosen.extend((pool[j], label) for j in sorted(picks))
    order = rng.permutation(len(chosen))
    return [LabeledText(records[chosen[j][0]].text, task, chosen[j][1]) for j in order]


def _escape(text: str) -> str:
    return (
        text.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n").replace("\r", "\\r")
    )


def _unescape(text: str) -> str:
    out = []
    it = iter(text)
    for ch in it:
        if ch != "\\":
            out.append(ch)
            continue
        nxt = next(it, "")
        out.append({"t": "\t", "n": "\n", "r": "\r", "\\": "\\"}.get(nxt, "\\" + nxt))
    return "".join(out)


def write_dataset(items: Iterable[LabeledText], fh: TextIO, header_lines: Sequence[str] = ()) -> None:
    """Tab-separated ``label, task, text``; ``#`` lines form the header."""
    for line in header_lines:
        fh.write(f"# {line}\n")
    for item in items:
        fh.write(f"{item.label:+d}\t{item.task}\t{_escape(item.text)}\n")


def read_dataset(stream: TextIO | str) -> list[LabeledText]:
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    out = []
    for lineno, line in enumerate(stream, start=1):
        line = line.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise DatasetError(f"dataset line {lineno}: expected 3 fields, got {len(parts)}")
        label_text, task, text = parts
        if task not in TASKS:
            raise DatasetError(f"dataset line {lineno}: unknown task {task!r}")
        try:
            label = int(label_text)
        except ValueError:
            raise DatasetError(f"dataset line {lineno}: bad label {label_text!r}") from None
        if label not in (-1, 1):
            raise DatasetError(f"dataset line {lineno}: label must be -1 or +1")
        out.append(LabeledText(_unescape(text), task, label))
    return out
