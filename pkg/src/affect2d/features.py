"""Polarity, intensity and unigram-baseline feature extraction."""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from affect2d import Affect2DError
from affect2d.lexicon import CategoryLexicon, PosTag, SentimentLexicon
from affect2d.textproc import (
    Document,
    contains_negation,
    count_all_caps,
    count_elongated,
    count_exclamations,
    detect_emoticons,
    is_negation,
    quoted_token_count,
)


class DescriptorMismatchError(Affect2DError, ValueError):
    pass


class FeatureError(Affect2DError, ValueError):
    pass


@dataclass(frozen=True)
class FeatureDescriptor:
    id: str
    feature_names: tuple[str, ...]

    def __post_init__(self):
        if not self.feature_names:
            raise FeatureError(f"descriptor {self.id!r} has no features")
        if len(set(self.feature_names)) != len(self.feature_names):
            raise FeatureError(f"descriptor {self.id!r} has duplicate feature names")

    @property
    def dimension(self) -> int:
        return len(self.feature_names)

    def vector(self, values) -> FeatureVector:
        return FeatureVector(self.id, np.asarray(values, dtype=float), self)


@dataclass(frozen=True, eq=False)
class FeatureVector:
    descriptor_id: str
    values: np.ndarray
    descriptor: FeatureDescriptor | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.values.ndim != 1:
            raise FeatureError("feature values must be one-dimensional")
        if self.descriptor is not None and len(self.values) != self.descriptor.dimension:
            raise FeatureError(
                f"{self.descriptor_id}: got {len(self.values)} values, "
                f"descriptor has {self.descriptor.dimension}"
            )
        if not np.all(np.isfinite(self.values)):
            raise FeatureError(f"{self.descriptor_id}: non-finite feature value")

    def __len__(self) -> int:
        return len(self.values)


def sentence_score(tokens, lexicon: SentimentLexicon) -> float:
    """Clamped lexical sum of one sentence, sign-flipped if it carries a negator.

    Negators themselves are excluded from the sum so their own lexicon
    polarity does not leak into the flipped score.
    """
    total = sum(lexicon.score(t.lower) for t in tokens if t.is_word and not is_negation(t))
    total = min(1.0, max(-1.0, total))
    if contains_negation(tokens):
        total = -total
    return total


def review_sentiword_score(doc: Document, lexicon: SentimentLexicon) -> float:
    if not doc.tokens:
        return 0.0
    return sum(sentence_score(s, lexicon) for s in doc.tokens) / doc.n_sentences


def gi_frequencies(doc: Document, catlex: CategoryLexicon) -> np.ndarray:
    out = np.zeros(catlex.size)
    words = doc.words()
    if not words:
        return out
    for tok in words:
        for c in catlex.membership(tok.lower):
            out[c] += 1.0
    return out / len(words)


def count_adverbs(doc: Document, lexicon: SentimentLexicon) -> int:
    return sum(1 for t in doc.words() if lexicon.has_pos(t.lower, PosTag.ADVERB))


class FeatureExtractor:
    """Maps documents to vectors under one descriptor.

    ``fit`` is a no-op for lexicon extractors; corpus-level extractors
    override it and must only ever see training documents.
    """

    descriptor: FeatureDescriptor
    stateless = False

    def fit(self, docs: Sequence[Document]) -> "FeatureExtractor":
        return self

    def transform(self, doc: Document) -> FeatureVector:
        raise NotImplementedError

    def transform_many(self, docs: Iterable[Document]) -> list[FeatureVector]:
        return [self.transform(d) for d in docs]


class PolarityExtractor(FeatureExtractor):
    task = "polarity"
    stateless = True

    def __init__(self, sentlex: SentimentLexicon, catlex: CategoryLexicon):
        self.sentlex = sentlex
        self.catlex = catlex
        names = (
            ["sentiword_score"]
            + [f"gi:{n}" for n in catlex.names]
            + ["emoticon_positive", "emoticon_negative", "quoted_words"]
        )
        self.descriptor = FeatureDescriptor(f"polarity/v1/C={catlex.size}", tuple(names))

    def transform(self, doc: Document) -> FeatureVector:
        pos_emo, neg_emo = detect_emoticons(doc)
        values = np.concatenate([
            [review_sentiword_score(doc, self.sentlex)],
            gi_frequencies(doc, self.catlex),
            [pos_emo, neg_emo, quoted_token_count(doc.raw)],
        ])
        return self.descriptor.vector(values)


class IntensityExtractor(FeatureExtractor):
    task = "intensity"
    stateless = True

    def __init__(self, sentlex: SentimentLexicon, catlex: CategoryLexicon):
        self.sentlex = sentlex
        self.catlex = catlex
        names = (
            ["all_caps_words", "elongated_words", "exclamation_marks", "adverbs"]
            + [f"gi:{n}" for n in catlex.names]
        )
        self.descriptor = FeatureDescriptor(f"intensity/v1/C={catlex.size}", tuple(names))

    def transform(self, doc: Document) -> FeatureVector:
        values = np.concatenate([
            [
                count_all_caps(doc),
                count_elongated(doc),
                count_exclamations(doc.raw),
                count_adverbs(doc, self.sentlex),
            ],
            gi_frequencies(doc, self.catlex),
        ])
        return self.descriptor.vector(values)


def polarity_features(doc: Document, sentlex: SentimentLexicon, catlex: CategoryLexicon) -> FeatureVector:
    return PolarityExtractor(sentlex, catlex).transform(doc)


def intensity_features(doc: Document, sentlex: SentimentLexicon, catlex: CategoryLexicon) -> FeatureVector:
    return IntensityExtractor(sentlex, catlex).transform(doc)


def extractor_for(task: str, sentlex: SentimentLexicon, catlex: CategoryLexicon) -> FeatureExtractor:
    if task == "polarity":
        return PolarityExtractor(sentlex, catlex)
    if task == "intensity":
        return IntensityExtractor(sentlex, catlex)
    raise FeatureError(f"unknown task {task!r}")


# Small closed-class list; the baselines only need the obvious function words gone.
STOPWORDS = frozenset("""
a about above after again against all am an and any are as at be because been
before being below between both but by could did do does doing down during each
few for from further had has have having he her here hers herself him himself his
how i if in into is it its itself just me more most my myself of off on once only
or other our ours ourselves out over own same she should so some such than that
the their theirs them themselves then there these they this those through to too
under until up very was we were what when where which while who whom why will with
would you your yours yourself yourselves s t
""".split())

BASELINE_MODES = ("all", "adjadv", "adj", "topk")


@dataclass(frozen=True)
class BaselineConfig:
    mode: str = "topk"
    k: int = 2000

    def __post_init__(self):
        if self.mode not in BASELINE_MODES:
            raise FeatureError(f"unknown baseline mode {self.mode!r}")
        if self.mode == "topk" and self.k < 1:
            raise FeatureError("topk mode needs k >= 1")


class UnigramExtractor(FeatureExtractor):
    """Binary unigram presence over a vocabulary learned by :meth:`fit`."""

    def __init__(self, config: BaselineConfig, sentlex: SentimentLexicon | None = None):
        if config.mode in ("adjadv", "adj") and sentlex is None:
            raise FeatureError(f"mode {config.mode!r} needs a sentiment lexicon")
        self.config = config
        self.sentlex = sentlex
        self.vocabulary: dict[str, int] = {}
        self.descriptor = None

    def _keep(self, word: str) -> bool:
        if word in STOPWORDS:
            return False
        mode = self.config.mode
        if mode == "adj":
            return self.sentlex.has_pos(word, PosTag.ADJECTIVE)
        if mode == "adjadv":
            return self.sentlex.has_pos(word, PosTag.ADJECTIVE) or self.sentlex.has_pos(
                word, PosTag.ADVERB
            )
        return True

    def fit(self, docs: Sequence[Document]) -> "UnigramExtractor":
        if not docs:
            raise FeatureError("cannot build a vocabulary from an empty corpus")
        counts = Counter(t.lower for d in docs for t in d.words() if self._keep(t.lower))
        if self.config.mode == "topk":
            ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
            words = sorted(w for w, _ in ranked[: self.config.k])
        else:
            words = sorted(counts)
        if not words:
            raise FeatureError("empty vocabulary after filtering")
        self.vocabulary = {w: i for i, w in enumerate(words)}
        digest = hashlib.sha256("\n".join(words).encode("utf-8")).hexdigest()[:12]
        self.descriptor = FeatureDescriptor(
            f"baseline-{self.config.mode}/v1/V={len(words)}/{digest}",
            tuple(f"word:{w}" for w in words),
        )
        return self

    def transform(self, doc: Document) -> FeatureVector:
        if self.descriptor is None:
            raise FeatureError("unigram extractor used before fit")
        values = np.zeros(len(self.vocabulary))
        for t in doc.words():
            i = self.vocabulary.get(t.lower)
            if i is not None:
                values[i] = 1.0
        return self.descriptor.vector(values)


def baseline_unigram_features(
    corpus: Sequence[Document],
    config: BaselineConfig,
    sentlex: SentimentLexicon | None = None,
) -> tuple[FeatureDescriptor, list[FeatureVector]]:
    extractor = UnigramExtractor(config, sentlex).fit(corpus)
    return extractor.descriptor, extractor.transform_many(corpus)
