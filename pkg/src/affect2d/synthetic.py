"""Tiny fixture lexicons and a planted-cue review generator for desk-scale runs.

Real SentiWordNet / General Inquirer files are never bundled; these fixtures
follow the same file formats so every code path can run without them.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from affect2d.dataset import ReviewRecord
from affect2d.lexicon import parse_general_inquirer, parse_sentiwordnet

POSITIVE_WORDS = ("good", "great", "delicious", "friendly", "amazing", "excellent",
                  "tasty", "wonderful", "lovely", "fresh")
NEGATIVE_WORDS = ("bad", "awful", "terrible", "rude", "disgusting", "horrible",
                  "bland", "dirty", "stale", "greasy")
MILD_WORDS = ("fine", "okay", "decent", "average", "plain", "ordinary")
NEUTRAL_NOUNS = ("food", "pizza", "service", "coffee", "place", "staff", "menu",
                 "table", "burger", "waiter", "dessert", "room")
INTENSE_ADVERBS = ("extremely", "really", "totally", "absolutely", "incredibly")
CALM_ADVERBS = ("fairly", "somewhat", "mostly", "quite")

# (term, pos letter, pos score, neg score) per sense, rank = order listed.
_SWN_SENSES = {
    "good": [("a", 0.75, 0.0), ("n", 0.5, 0.0), ("a", 0.625, 0.0), ("r", 0.375, 0.0)],
    "great": [("a", 0.75, 0.125), ("a", 0.5, 0.0)],
    "delicious": [("a", 0.875, 0.0)],
    "friendly": [("a", 0.625, 0.0), ("a", 0.5, 0.125)],
    "amazing": [("a", 0.875, 0.0)],
    "excellent": [("a", 1.0, 0.0)],
    "tasty": [("a", 0.625, 0.0)],
    "wonderful": [("a", 0.875, 0.0)],
    "lovely": [("a", 0.75, 0.0), ("a", 0.5, 0.0)],
    "fresh": [("a", 0.5, 0.0), ("a", 0.375, 0.125)],
    "bad": [("a", 0.0, 0.875), ("n", 0.0, 0.625), ("r", 0.0, 0.5)],
    "awful": [("a", 0.0, 0.875), ("r", 0.0, 0.625)],
    "terrible": [("a", 0.0, 0.875)],
    "rude": [("a", 0.0, 0.75)],
    "disgusting": [("a", 0.0, 1.0)],
    "horrible": [("a", 0.0, 0.875)],
    "bland": [("a", 0.0, 0.5), ("a", 0.125, 0.25)],
    "dirty": [("a", 0.0, 0.625)],
    "stale": [("a", 0.0, 0.625)],
    "greasy": [("a", 0.0, 0.5)],
    "fine": [("a", 0.25, 0.0), ("r", 0.125, 0.0)],
    "okay": [("a", 0.125, 0.0)],
    "decent": [("a", 0.25, 0.0)],
    "average": [("a", 0.0, 0.0), ("n", 0.0, 0.0)],
    "plain": [("a", 0.0, 0.125)],
    "ordinary": [("a", 0.0, 0.0)],
    "extremely": [("r", 0.0, 0.0)],
    "really": [("r", 0.125, 0.0), ("r", 0.0, 0.0)],
    "totally": [("r", 0.0, 0.0)],
    "absolutely": [("r", 0.125, 0.0)],
    "incredibly": [("r", 0.0, 0.0)],
    "fairly": [("r", 0.0, 0.0)],
    "somewhat": [("r", 0.0, 0.0)],
    "mostly": [("r", 0.0, 0.0)],
    "quite": [("r", 0.0, 0.0)],
    "food": [("n", 0.0, 0.0)],
    "pizza": [("n", 0.0, 0.0)],
    "coffee": [("n", 0.0, 0.0), ("n", 0.0, 0.0)],
    "service": [("n", 0.0, 0.0), ("v", 0.0, 0.0)],
    "love": [("v", 0.625, 0.0), ("n", 0.625, 0.0)],
    "hate": [("v", 0.0, 0.75)],
    "cold": [("a", 0.0, 0.25), ("n", 0.0, 0.125)],
    "ice_cream": [("n", 0.25, 0.0)],
}

GI_CATEGORIES = ("Positiv", "Negativ", "Strong", "Weak", "Active", "Passive",
                 "Pleasur", "Pain", "Ovrst", "Undrst")
_GI_MEMBERS = {
    "GOOD#1": ("Positiv", "Pleasur"), "GOOD#2": ("Positiv", "Strong"),
    "GREAT": ("Positiv", "Strong", "Ovrst"), "DELICIOUS": ("Positiv", "Pleasur"),
    "FRIENDLY": ("Positiv",), "AMAZING": ("Positiv", "Strong", "Ovrst"),
    "EXCELLENT": ("Positiv", "Strong"), "TASTY": ("Positiv", "Pleasur"),
    "WONDERFUL": ("Positiv", "Pleasur", "Ovrst"), "LOVELY": ("Positiv", "Pleasur"),
    "FRESH": ("Positiv",),
    "BAD": ("Negativ", "Pain"), "AWFUL": ("Negativ", "Strong", "Ovrst"),
    "TERRIBLE": ("Negativ", "Strong", "Ovrst"), "RUDE": ("Negativ", "Active"),
    "DISGUSTING": ("Negativ", "Pain", "Strong"), "HORRIBLE": ("Negativ", "Ovrst"),
    "BLAND": ("Negativ", "Weak"), "DIRTY": ("Negativ",), "STALE": ("Negativ", "Weak"),
    "GREASY": ("Negativ",),
    "FINE": ("Positiv", "Undrst"), "OKAY": ("Undrst",), "DECENT": ("Positiv", "Undrst"),
    "AVERAGE": ("Undrst", "Passive"), "PLAIN": ("Weak", "Undrst"),
    "ORDINARY": ("Undrst", "Passive"),
    "EXTREMELY": ("Ovrst", "Strong"), "REALLY": ("Ovrst",), "TOTALLY": ("Ovrst",),
    "ABSOLUTELY": ("Ovrst", "Strong"), "INCREDIBLY": ("Ovrst",),
    "FAIRLY": ("Undrst",), "SOMEWHAT": ("Undrst",), "MOSTLY": ("Undrst",), "QUITE": ("Undrst",),
    "LOVE": ("Positiv", "Pleasur", "Active"), "HATE": ("Negativ", "Active", "Pain"),
    "RUSH": ("Active",), "WAIT": ("Passive",), "CALM": ("Passive", "Weak"),
}


def fixture_sentiwordnet_text() -> str:
    lines = ["# Synthetic SentiWordNet-format fixture.",
             "# POS\tID\tPosScore\tNegScore\tSynsetTerms\tGloss"]
    synset = 1000
    for term, senses in _SWN_SENSES.items():
        for rank, (pos, ps, ns) in enumerate(senses, start=1):
            synset += 1
            lines.append(f"{pos}\t{synset:08d}\t{ps:g}\t{ns:g}\t{term}#{rank}\tfixture sense of {term}")
    return "\n".join(lines) + "\n"


def fixture_inquirer_text() -> str:
    rows = ["\t".join(("Entry", "Source") + GI_CATEGORIES + ("Othtags", "Defined"))]
    for entry, cats in _GI_MEMBERS.items():
        cells = [c if c in cats else "" for c in GI_CATEGORIES]
        rows.append("\t".join([entry, "Fixture"] + cells + ["", ""]))
    return "\n".join(rows) + "\n"


def fixture_lexicons():
    return parse_sentiwordnet(fixture_sentiwordnet_text()), parse_general_inquirer(fixture_inquirer_text())


def write_fixture_lexicons(directory) -> tuple[Path, Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    swn = directory / "sentiwordnet_fixture.txt"
    gi = directory / "inquirer_fixture.tsv"
    swn.write_text(fixture_sentiwordnet_text(), encoding="utf-8")
    gi.write_text(fixture_inquirer_text(), encoding="utf-8")
    return swn, gi


def _elongate(word: str, rng) -> str:
    i = int(rng.integers(len(word)))
    return word[: i + 1] + word[i] * int(rng.integers(2, 5)) + word[i + 1:]


def _emphasise(word: str, rng, elongate: bool = True) -> str:
    r = rng.random()
    if r < 0.35:
        return word.upper()
    if r < 0.7 and elongate:
        return _elongate(word, rng)
    return word


def _high_review(words, rng) -> str:
    # Polarity words may be shouted but never elongated, so they stay in-vocabulary.
    noun = rng.choice(NEUTRAL_NOUNS)
    adv = rng.choice(INTENSE_ADVERBS)
    adj = rng.choice(words)
    first = f"The {noun} was {_emphasise(adv, rng)} {_emphasise(adj, rng, elongate=False)}"
    interjection = _emphasise(str(rng.choice(("seriously", "honestly", "wow", "so"))), rng)
    second = f"{interjection} {_emphasise(rng.choice(words), rng, elongate=False)} {rng.choice(NEUTRAL_NOUNS)}"
    bangs = "!" * int(rng.integers(1, 5))
    text = f"{first}{bangs} {second}{'!' * int(rng.integers(0, 4))}"
    if rng.random() < 0.2:
        text += " :)" if words is POSITIVE_WORDS else " :-("
    return text


def _low_review(rng) -> str:
    noun = rng.choice(NEUTRAL_NOUNS)
    parts = [
        f"the {noun} was {rng.choice(CALM_ADVERBS)} {rng.choice(MILD_WORDS)}.",
        f"{rng.choice(NEUTRAL_NOUNS)} seemed {rng.choice(MILD_WORDS)} overall.",
    ]
    if rng.random() < 0.5:
        parts.append(f"some {rng.choice(POSITIVE_WORDS + NEGATIVE_WORDS)} parts, nothing special.")
    if rng.random() < 0.08:
        parts[-1] = parts[-1].rstrip(".") + "!"
    return " ".join(parts)


def _mixed_review(rng) -> str:
    return (f"The {rng.choice(NEUTRAL_NOUNS)} was {rng.choice(POSITIVE_WORDS)} but the "
            f"{rng.choice(NEUTRAL_NOUNS)} was {rng.choice(NEGATIVE_WORDS)}.")


def _text_for(stars: int, rng) -> str:
    if stars == 5:
        text = _high_review(POSITIVE_WORDS, rng)
        if rng.random() < 0.15:
            text += f" The {rng.choice(NEUTRAL_NOUNS)} was not {rng.choice(NEGATIVE_WORDS)} either."
        return text
    if stars == 1:
        text = _high_review(NEGATIVE_WORDS, rng)
        if rng.random() < 0.15:
            text += f" The {rng.choice(NEUTRAL_NOUNS)} wasn't {rng.choice(POSITIVE_WORDS)} at all."
        return text
    if stars == 3:
        return _low_review(rng)
    return _mixed_review(rng)


def planted_reviews(n: int = 1000, seed: int = 0, noise: float = 0.03) -> list[ReviewRecord]:
    """Reviews whose star rating agrees with planted lexical and surface cues.

    Star mix: 25% five, 25% one, 40% three, 5% each two and four. A
    ``noise`` fraction of reviews gets text generated for a different
    rating, so the cues are informative but not perfect.
    """
    rng = np.random.default_rng(seed)
    counts = {5: n // 4, 1: n // 4, 3: (2 * n) // 5}
    counts[2] = (n - sum(counts.values())) // 2
    counts[4] = n - sum(counts.values())
    stars = [s for s, c in counts.items() for _ in range(c)]
    out = []
    for s in rng.permutation(stars):
        s = int(s)
        text_stars = s
        if rng.random() < noise:
            text_stars = int(rng.choice([t for t in (1, 3, 5) if t != s]))
        out.append(ReviewRecord(_text_for(text_stars, rng), s))
    return out


def write_reviews(records, path) -> Path:
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        for r in records:
            fh.write(json.dumps({"text": r.text, "stars": r.stars}) + "\n")
    return path
