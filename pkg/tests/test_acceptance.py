"""Exit criteria. Each test is one criterion; the terminal summary prints PASS/FAIL per line."""

import json
import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from affect2d.cli import run
from affect2d.dataset import build_balanced
from affect2d.emotion import EmotionQuadrant, map_quadrant
from affect2d.evaluation import ConfusionMatrix, CVReport, cross_validate, metrics, stratified_folds
from affect2d.features import FeatureDescriptor, FeatureExtractor, extractor_for, gi_frequencies, review_sentiword_score
from affect2d.lexicon import parse_sentiwordnet, word_polarity_score
from affect2d.svm import Hyperparams, fit_standardizer, objective, predict_many, subgradient, train
from affect2d.synthetic import (
    INTENSE_ADVERBS,
    MILD_WORDS,
    NEGATIVE_WORDS,
    NEUTRAL_NOUNS,
    POSITIVE_WORDS,
    planted_reviews,
    write_fixture_lexicons,
)
from affect2d.textproc import NEGATION_WORDS, NEGATIVE_EMOTICONS, POSITIVE_EMOTICONS, segment

pytestmark = pytest.mark.acceptance


def test_ac1_metric_arithmetic_reference_counts():
    cases = [
        (ConfusionMatrix(tp=2143, fp=563, fn=357, tn=1937), (79.19, 84.44, 85.72, 77.48)),
        (ConfusionMatrix(tp=1556, fp=699, fn=944, tn=1801), (69.00, 65.61, 62.24, 72.04)),
    ]
    for cm, printed in cases:
        m = metrics(cm)
        got = (m.precision_pos, m.precision_neg, m.recall_pos, m.recall_neg)
        for value, expected in zip(got, printed):
            assert abs(100 * value - expected) <= 0.005, (value, expected)


def _oracle(table):
    """Rank-weighted mean by direct enumeration in exact arithmetic."""
    pos_order = {"n": 0, "v": 1, "a": 2, "r": 3}
    ordered = sorted(table, key=lambda s: (s[1], pos_order[s[0]]))
    num = sum(((p - n) / k for k, (_, _, p, n) in enumerate(ordered, 1)), Fraction(0))
    den = sum((Fraction(1, k) for k in range(1, len(ordered) + 1)), Fraction(0))
    return num / den


def test_ac2_word_score_matches_brute_force_oracle():
    rng = random.Random(20140515)
    worst = 0.0
    for trial in range(1000):
        m = rng.randint(1, 8)
        slots = rng.sample([(p, r) for p in "nvar" for r in range(1, 9)], m)
        table = []
        for pos, rank in slots:
            p = Fraction(rng.randint(0, 8), 8)
            n = Fraction(rng.randint(0, 8 - int(p * 8)), 8)
            table.append((pos, rank, p, n))
        lines = [f"{pos}\t{i:08d}\t{float(p)}\t{float(n)}\tword#{rank}\tg" for i, (pos, rank, p, n) in enumerate(table)]
        rng.shuffle(lines)
        score = word_polarity_score(parse_sentiwordnet("\n".join(lines)), "word")
        worst = max(worst, abs(score - float(_oracle(table))))
    assert worst <= 1e-12, worst


def test_ac3_prepending_not_flips_sign(sentlex):
    rng = random.Random(3)
    vocab = POSITIVE_WORDS + NEGATIVE_WORDS + MILD_WORDS + NEUTRAL_NOUNS + INTENSE_ADVERBS
    flipped_nonzero = 0
    for _ in range(200):
        words = [rng.choice(vocab) for _ in range(rng.randint(1, 8))]
        sentence = " ".join(words)
        base = review_sentiword_score(segment(sentence), sentlex)
        negated = review_sentiword_score(segment("not " + sentence), sentlex)
        assert negated == -base
        assert abs(negated) == abs(base)
        flipped_nonzero += base != 0
    assert flipped_nonzero > 150


def test_ac4_scores_and_frequencies_bounded(sentlex, catlex):
    rng = random.Random(4)
    pool = (list(POSITIVE_WORDS + NEGATIVE_WORDS + MILD_WORDS + NEUTRAL_NOUNS + INTENSE_ADVERBS)
            + sorted(NEGATION_WORDS) + list(POSITIVE_EMOTICONS + NEGATIVE_EMOTICONS)
            + [".", "!", "?", "!!!", ",", '"', "\n", "GOOD", "baaad", "42", "xyzzy"])
    for _ in range(10_000):
        text = " ".join(rng.choice(pool) for _ in range(rng.randint(1, 25)))
        if not text.strip():
            continue
        doc = segment(text)
        score = review_sentiword_score(doc, sentlex)
        assert -1.0 <= score <= 1.0
        freqs = gi_frequencies(doc, catlex)
        assert np.all((freqs >= 0) & (freqs <= 1))


def _examples(X, y):
    desc = FeatureDescriptor(f"ac5/d={X.shape[1]}", tuple(f"f{i}" for i in range(X.shape[1])))
    return [(desc.vector(x), int(t)) for x, t in zip(X, y)]


def test_ac5_svm_separable_gradient_and_determinism():
    rng = np.random.default_rng(5)
    w_true = np.array([0.8, -0.6])
    X = rng.uniform(-3, 3, size=(2000, 2))
    X = X[np.abs(X @ w_true) > 0.3][:200]
    y = np.where(X @ w_true > 0, 1, -1)
    assert len(X) == 200
    exs = _examples(X, y)
    model = train(exs, Hyperparams(seed=5))
    labels, _ = predict_many(model, [v for v, _ in exs])
    assert (labels == y).mean() == 1.0

    checked = 0
    h = 1e-6
    while checked < 100:
        Xs = rng.normal(size=(40, 5))
        ys = rng.choice([-1.0, 1.0], size=40)
        w = rng.normal(size=5)
        b = float(rng.normal())
        c = float(rng.uniform(0.1, 5.0))
        if np.min(np.abs(1 - ys * (Xs @ w + b))) <= 1e-3:
            continue
        gw, gb = subgradient(w, b, Xs, ys, c)
        for j in range(5):
            e = np.zeros(5)
            e[j] = h
            fd = (objective(w + e, b, Xs, ys, c) - objective(w - e, b, Xs, ys, c)) / (2 * h)
            assert abs(gw[j] - fd) <= 1e-4
        fd_b = (objective(w, b + h, Xs, ys, c) - objective(w, b - h, Xs, ys, c)) / (2 * h)
        assert abs(gb - fd_b) <= 1e-4
        checked += 1

    again = train(exs, Hyperparams(seed=5))
    assert again.weights.tobytes() == model.weights.tobytes()
    assert again.bias == model.bias
    assert again.standardizer.means.tobytes() == model.standardizer.means.tobytes()


class _Gaussian(FeatureExtractor):
    stateless = True
    descriptor = FeatureDescriptor("ac6/v1", ("x", "y"))

    def transform(self, doc):
        return self.descriptor.vector([float(t) for t in doc.raw.split()])


def test_ac6_cv_integrity():
    labels = np.array([1] * 2500 + [-1] * 2500)
    folds = stratified_folds(labels, 10, seed=6)
    for f in folds:
        assert (labels[f] == 1).sum() == 250 and (labels[f] == -1).sum() == 250
    joined = np.concatenate(folds)
    assert len(joined) == 5000 and len(set(joined.tolist())) == 5000

    planted = [0.81, 0.79, 0.84, 0.80, 0.83, 0.78, 0.82, 0.85, 0.80, 0.84]
    mean = sum(planted) / 10
    std = math.sqrt(sum((a - mean) ** 2 for a in planted) / 9)
    rep = CVReport(planted, ConfusionMatrix())
    assert abs(rep.mean_accuracy - mean) <= 1e-12
    assert abs(rep.std_accuracy - std) <= 1e-12

    rng = np.random.default_rng(6)
    pts = np.vstack([rng.normal(-1, 1, (2500, 2)), rng.normal(1, 1, (2500, 2))])
    docs = [(segment(f"{float(a)!r} {float(b)!r}"), int(lab)) for (a, b), lab in zip(pts, -labels)]
    report = cross_validate(docs, _Gaussian, Hyperparams(epochs=3), k=10, seed=6)
    assert report.pooled_confusion.total == 5000
    by_hand = [(c.tp + c.tn) / c.total for c in report.fold_confusions]
    assert all(c.total == 500 for c in report.fold_confusions)
    m = sum(by_hand) / 10
    assert abs(report.mean_accuracy - m) <= 1e-12
    assert abs(report.std_accuracy - math.sqrt(sum((a - m) ** 2 for a in by_hand) / 9)) <= 1e-12


def test_ac7_end_to_end_planted_corpus(lexicons):
    start = time.perf_counter()
    records = planted_reviews(1000, seed=7)
    results = {}
    for task, per_class in (("polarity", 250), ("intensity", 400)):
        data = build_balanced(records, task, per_class, seed=7)
        examples = [(segment(d.text), d.label) for d in data]
        rep = cross_validate(examples, lambda: extractor_for(task, *lexicons), Hyperparams(seed=7), k=10)
        results[task] = rep.mean_accuracy
    elapsed = time.perf_counter() - start
    print(f"planted corpus: polarity {results['polarity']:.4f}, intensity {results['intensity']:.4f}, {elapsed:.1f}s")
    assert results["polarity"] >= 0.95
    assert results["intensity"] >= 0.90
    assert elapsed < 60


def test_ac8_yelp_format_pipeline_emits_report(tmp_path):
    swn, gi = write_fixture_lexicons(tmp_path)
    rng = np.random.default_rng(8)
    path = tmp_path / "yelp_academic_dataset_review.json"
    with path.open("w") as fh:
        for i, rec in enumerate(planted_reviews(600, seed=8)):
            fh.write(json.dumps({
                "review_id": f"r{i:06d}", "user_id": f"u{rng.integers(1000)}", "business_id": f"b{rng.integers(50)}",
                "stars": float(rec.stars), "useful": int(rng.integers(5)), "funny": 0, "cool": 0,
                "text": rec.text, "date": "2014-01-01 12:00:00",
            }) + "\n")
    out = tmp_path / "out"
    for task, n in (("polarity", 150), ("intensity", 240)):
        code = run(["evaluate", "--sentiwordnet", str(swn), "--inquirer", str(gi), "--reviews", str(path),
                    "--task", task, "--per-class", str(n), "--folds", "10", "--seed", "8", "--out", str(out)])
        assert code == 0
        text = (out / f"{task}_report.txt").read_text()
        assert "Mean accuracy:" in text and "% +/- " in text
        assert "Class Precision" in text and "Class Recall" in text
        data = json.loads((out / f"{task}_report.json").read_text())
        assert data["report"]["pooled_confusion"]["tp"] + data["report"]["pooled_confusion"]["fp"] \
            + data["report"]["pooled_confusion"]["fn"] + data["report"]["pooled_confusion"]["tn"] == 2 * n


def test_ac9_thayer_mapping_exhaustive():
    expected = {
        (1, -1): EmotionQuadrant.SATISFIED,
        (1, 1): EmotionQuadrant.EXUBERANT,
        (-1, -1): EmotionQuadrant.SAD,
        (-1, 1): EmotionQuadrant.ANGRY,
    }
    for (p, i), quadrant in expected.items():
        assert map_quadrant(p, i) is quadrant
    assert len(set(expected.values())) == 4
