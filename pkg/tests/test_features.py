import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from affect2d.features import (
    BaselineConfig,
    DescriptorMismatchError,
    FeatureError,
    IntensityExtractor,
    PolarityExtractor,
    UnigramExtractor,
    baseline_unigram_features,
    count_adverbs,
    gi_frequencies,
    intensity_features,
    polarity_features,
    review_sentiword_score,
)
from affect2d.lexicon import PosTag, SentimentLexicon, parse_general_inquirer
from affect2d.synthetic import NEGATIVE_WORDS, NEUTRAL_NOUNS, POSITIVE_WORDS
from affect2d.textproc import segment

ADJ, ADV = PosTag.ADJECTIVE, PosTag.ADVERB

TOY = SentimentLexicon({
    "good": {ADJ: [(0.6, 0.0)]},
    "nice": {ADJ: [(0.4, 0.0)]},
    "meh": {ADJ: [(0.0, 0.2)]},
    "great": {ADJ: [(0.9, 0.0)]},
    "extremely": {ADV: [(0.0, 0.0)]},
    "very": {ADV: [(0.125, 0.0)], ADJ: [(0.0, 0.0)]},
})
GI = parse_general_inquirer("Entry\tPositiv\tNegativ\tStrong\nGOOD\tPositiv\t\t\nGREAT\tPositiv\t\tStrong\nBAD\t\tNegativ\t\n")


class TestReviewScore:
    def test_mean_of_sentences(self):
        assert review_sentiword_score(segment("nice. meh."), TOY) == pytest.approx(0.1, abs=1e-15)

    def test_negation_flip(self):
        assert review_sentiword_score(segment("not good"), TOY) == -0.6

    def test_unknown_words(self):
        assert review_sentiword_score(segment("the pizza arrived"), TOY) == 0.0

    def test_sentence_clamped(self):
        assert review_sentiword_score(segment("great great great"), TOY) == 1.0
        assert review_sentiword_score(segment("great great. meh"), TOY) == pytest.approx(0.4)

    def test_negator_own_polarity_ignored(self, sample_sentlex):
        # "not" carries a negative adverb sense in SentiWordNet; it only flips.
        good = review_sentiword_score(segment("good"), sample_sentlex)
        assert review_sentiword_score(segment("not good"), sample_sentlex) == -good

    sentences = st.lists(
        st.tuples(st.booleans(), st.lists(st.sampled_from(["good", "nice", "meh", "great", "food", "very"]), min_size=1, max_size=6)),
        min_size=1, max_size=5,
    )

    @given(sentences)
    def test_toggling_negation_negates(self, layout):
        def render(flip):
            return ". ".join(("not " if neg != flip else "") + " ".join(ws) for neg, ws in layout)
        assert review_sentiword_score(segment(render(True)), TOY) == -review_sentiword_score(segment(render(False)), TOY)

    @given(sentences)
    def test_duplicating_layoutkeeps_mean(self, layout):
        text = ". ".join(("not " if neg else "") + " ".join(ws) for neg, ws in layout)
        once = review_sentiword_score(segment(text), TOY)
        twice = review_sentiword_score(segment(text + ". " + text), TOY)
        assert twice == pytest.approx(once, abs=1e-12)


class TestGIFrequencies:
    def test_relative_frequency(self):
        freqs = gi_frequencies(segment("good food good service"), GI)
        assert freqs.tolist() == [0.5, 0.0, 0.0]

    def test_no_members(self):
        assert gi_frequencies(segment("pizza"), GI).tolist() == [0.0, 0.0, 0.0]

    def test_no_words(self):
        assert gi_frequencies(segment(":) !!"), GI).tolist() == [0.0, 0.0, 0.0]

    def test_dimension_matches_resource(self):
        gi = parse_general_inquirer("\t".join(["Entry"] + [f"C{i}" for i in range(178)]) + "\n")
        assert len(gi_frequencies(segment("anything"), gi)) == 178

    @given(st.lists(st.sampled_from(["good", "great", "bad", "x", "food"]), min_size=1))
    def test_in_unit_interval(self, ws):
        freqs = gi_frequencies(segment(" ".join(ws)), GI)
        assert np.all((0 <= freqs) & (freqs <= 1))


class TestAdverbs:
    @pytest.mark.parametrize("text, n", [("extremely", 1), ("pizza", 0), ("very very good", 2)])
    def test_counts(self, text, n):
        assert count_adverbs(segment(text), TOY) == n


class TestLexiconVectors:
    def test_polarity_layout(self, sentlex, catlex):
        vec = polarity_features(segment("great food :) \"so good\""), sentlex, catlex)
        ext = PolarityExtractor(sentlex, catlex)
        assert vec.descriptor_id == f"polarity/v1/C={catlex.size}"
        assert len(vec) == catlex.size + 4 == ext.descriptor.dimension
        names = ext.descriptor.feature_names
        values = dict(zip(names, vec.values))
        assert values["emoticon_positive"] == 1
        assert values["quoted_words"] == 2
        assert values["gi:Positiv"] == pytest.approx(2 / 4)

    def test_polarity_dimension_for_178_categories(self, sentlex):
        gi = parse_general_inquirer("\t".join(["Entry"] + [f"C{i}" for i in range(178)]) + "\n")
        assert PolarityExtractor(sentlex, gi).descriptor.dimension == 182
        assert IntensityExtractor(sentlex, gi).descriptor.dimension == 182

    def test_neutral_text_zero(self, sentlex, catlex):
        assert not polarity_features(segment("zzz qqq"), sentlex, catlex).values.any()

    def test_emoticon_only(self, sentlex, catlex):
        vec = polarity_features(segment(":)"), sentlex, catlex)
        assert vec.values[1 + catlex.size] == 1
        assert not vec.values[1:1 + catlex.size].any()

    def test_intensity_layout(self, sentlex, catlex):
        vec = intensity_features(segment("The coffee was too cold!!!"), sentlex, catlex)
        assert vec.descriptor_id == f"intensity/v1/C={catlex.size}"
        assert vec.values[2] == 3
        calm = intensity_features(segment("it was okay"), sentlex, catlex)
        assert not calm.values[:4].any()

    def test_intensity_counts(self, sentlex, catlex):
        vec = intensity_features(segment("SO goood, EXTREMELY extremely fine!!"), sentlex, catlex)
        assert vec.values[:4].tolist() == [2, 1, 2, 3]  # "fine" has an adverb sense too

    def test_descriptor_rejects_wrong_length(self, sentlex, catlex):
        desc = PolarityExtractor(sentlex, catlex).descriptor
        with pytest.raises(FeatureError):
            desc.vector([0.0, 1.0])

    def test_non_finite_rejected(self, sentlex, catlex):
        desc = PolarityExtractor(sentlex, catlex).descriptor
        with pytest.raises(FeatureError):
            desc.vector([np.nan] * desc.dimension)


class TestBaseline:
    def test_stopwords_removed(self):
        desc, vecs = baseline_unigram_features([segment("the pizza good")], BaselineConfig("all"))
        assert desc.feature_names == ("word:good", "word:pizza")
        assert vecs[0].values.tolist() == [1.0, 1.0]

    def test_topk_with_ties(self):
        corpus = [segment(t) for t in ["pizza pizza pizza burger", "burger salad", "soup salad"]]
        desc, _ = baseline_unigram_features(corpus, BaselineConfig("topk", 2))
        assert desc.dimension == 2
        # pizza 3, then burger 2 / salad 2 tie -> burger wins lexicographically
        assert desc.feature_names == ("word:burger", "word:pizza")

    def test_topk_2000(self):
        corpus = [segment(" ".join(f"w{i}x{j}" for j in range(50))) for i in range(60)]
        desc, vecs = baseline_unigram_features(corpus, BaselineConfig("topk", 2000))
        assert desc.dimension == 2000
        assert all(len(v) == 2000 for v in vecs)

    def test_pos_filters(self):
        corpus = [segment("very good pizza extremely nice")]
        adjadv, _ = baseline_unigram_features(corpus, BaselineConfig("adjadv"), TOY)
        adj, _ = baseline_unigram_features(corpus, BaselineConfig("adj"), TOY)
        assert adjadv.feature_names == ("word:extremely", "word:good", "word:nice")
        assert adj.feature_names == ("word:good", "word:nice")

    def test_unseen_document_zero(self):
        ext = UnigramExtractor(BaselineConfig("all")).fit([segment("pizza burger")])
        assert not ext.transform(segment("salad soup")).values.any()

    def test_empty_vocabulary(self):
        with pytest.raises(FeatureError, match="empty vocabulary"):
            baseline_unigram_features([segment("the and of")], BaselineConfig("all"))

    def test_pos_modes_need_lexicon(self):
        with pytest.raises(FeatureError):
            UnigramExtractor(BaselineConfig("adj"))

    def test_descriptors_differ_by_vocabulary(self):
        a = UnigramExtractor(BaselineConfig("all")).fit([segment("pizza burger")])
        b = UnigramExtractor(BaselineConfig("all")).fit([segment("pizza salad")])
        assert a.descriptor.id != b.descriptor.id


def test_descriptor_ids_never_collide(sentlex, catlex):
    ids = {PolarityExtractor(sentlex, catlex).descriptor.id, IntensityExtractor(sentlex, catlex).descriptor.id}
    assert len(ids) == 2


def test_planted_vocabulary_is_in_fixture(sentlex):
    for w in POSITIVE_WORDS:
        assert sentlex.score(w) > 0
    for w in NEGATIVE_WORDS:
        assert sentlex.score(w) < 0
    assert all(sentlex.score(w) == 0 for w in NEUTRAL_NOUNS)
