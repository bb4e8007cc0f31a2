"""Thayer quadrant mapping and the end-to-end text classifier."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from affect2d.features import DescriptorMismatchError, IntensityExtractor, PolarityExtractor
from affect2d.lexicon import CategoryLexicon, SentimentLexicon
from affect2d.svm import TrainedModel, predict
from affect2d.textproc import segment


class EmotionQuadrant(enum.Enum):
    SATISFIED = "Satisfied"
    EXUBERANT = "Exuberant"
    SAD = "Sad"
    ANGRY = "Angry"


_QUADRANTS = {
    (1, -1): EmotionQuadrant.SATISFIED,
    (1, 1): EmotionQuadrant.EXUBERANT,
    (-1, -1): EmotionQuadrant.SAD,
    (-1, 1): EmotionQuadrant.ANGRY,
}


def map_quadrant(polarity: int, intensity: int) -> EmotionQuadrant:
    """Positive/negative polarity x low/high intensity -> quadrant."""
    try:
        return _QUADRANTS[(polarity, intensity)]
    except KeyError:
        raise ValueError(f"labels must be -1 or +1, got ({polarity}, {intensity})") from None


@dataclass(frozen=True)
class EmotionResult:
    polarity_label: int
    polarity_decision_value: float
    intensity_label: int
    intensity_decision_value: float
    quadrant: EmotionQuadrant

    def to_record(self) -> dict:
        return {
            "quadrant": self.quadrant.value,
            "polarity_label": self.polarity_label,
            "intensity_label": self.intensity_label,
            "polarity_decision_value": self.polarity_decision_value,
            "intensity_decision_value": self.intensity_decision_value,
        }


class EmotionClassifier:
    """Holds both models and their extractors; checks descriptors once, up front."""

    def __init__(
        self,
        polarity_model: TrainedModel,
        intensity_model: TrainedModel,
        sentlex: SentimentLexicon,
        catlex: CategoryLexicon,
    ):
        self.polarity_model = polarity_model
        self.intensity_model = intensity_model
        self.polarity_extractor = PolarityExtractor(sentlex, catlex)
        self.intensity_extractor = IntensityExtractor(sentlex, catlex)
        for which, model, extractor in (
            ("polarity", polarity_model, self.polarity_extractor),
            ("intensity", intensity_model, self.intensity_extractor),
        ):
            if model.descriptor_id != extractor.descriptor.id:
                raise DescriptorMismatchError(
                    f"{which} model expects features {model.descriptor_id!r}, "
                    f"lexicons produce {extractor.descriptor.id!r}"
                )

    def classify(self, text: str) -> EmotionResult:
        doc = segment(text)
        p_label, p_value = predict(self.polarity_model, self.polarity_extractor.transform(doc))
        i_label, i_value = predict(self.intensity_model, self.intensity_extractor.transform(doc))
        return EmotionResult(p_label, p_value, i_label, i_value, map_quadrant(p_label, i_label))


def classify_text(
    text: str,
    polarity_model: TrainedModel,
    intensity_model: TrainedModel,
    sentlex: SentimentLexicon,
    catlex: CategoryLexicon,
) -> EmotionResult:
    return EmotionClassifier(polarity_model, intensity_model, sentlex, catlex).classify(text)
