"""SentiWordNet and General Inquirer parsing, plus the rank-weighted word score."""

from __future__ import annotations

import csv
import enum
import io
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, TextIO

from affect2d import Affect2DError


class LexiconParseError(Affect2DError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class PosTag(enum.IntEnum):
    # Value order is the tie-break order when merging synsets of equal rank.
    NOUN = 0
    VERB = 1
    ADJECTIVE = 2
    ADVERB = 3


SWN_POS = {
    "n": PosTag.NOUN,
    "v": PosTag.VERB,
    "a": PosTag.ADJECTIVE,
    "s": PosTag.ADJECTIVE,  # adjective satellite, seen in some WordNet dumps
    "r": PosTag.ADVERB,
}

# Columns of the Harvard spreadsheet that carry metadata, not categories.
GI_METADATA_COLUMNS = ("Source", "Othtags", "Defined")


@dataclass(frozen=True)
class SynsetRecord:
    pos_tag: PosTag
    synset_id: str
    pos_score: float
    neg_score: float
    terms: tuple[tuple[str, int], ...]

    @property
    def base_score(self) -> float:
        return self.pos_score - self.neg_score


class SentimentLexicon:
    """Lowercase token -> per-POS senses ordered by sense rank.

    ``entries`` values are ``(rank, pos_score, neg_score)`` triples, or bare
    ``(pos_score, neg_score)`` pairs whose ranks are then 1, 2, ... in order.
    Immutable after construction; scores are memoised on first lookup.
    """

    def __init__(self, entries: Mapping[str, Mapping[PosTag, Sequence[tuple]]]):
        self._entries: dict[str, dict[PosTag, tuple[tuple[int, float, float], ...]]] = {}
        for token, by_pos in entries.items():
            slot = self._entries.setdefault(token.lower(), {})
            for pos, senses in by_pos.items():
                ranked = tuple(
                    s if len(s) == 3 else (i, s[0], s[1]) for i, s in enumerate(senses, start=1)
                )
                ranks = [r for r, _, _ in ranked]
                if any(a >= b for a, b in zip(ranks, ranks[1:])):
                    raise ValueError(f"senses of {token!r} ({pos.name.lower()}) not strictly rank-ordered")
                slot[PosTag(pos)] = ranked
        self._scores: dict[str, float] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, token: str) -> bool:
        return token.lower() in self._entries

    def tokens(self) -> Iterable[str]:
        return self._entries.keys()

    def lookup(self, token: str, pos: PosTag) -> tuple[tuple[float, float], ...]:
        senses = self._entries.get(token.lower(), {}).get(pos, ())
        return tuple((p, n) for _, p, n in senses)

    def ranks(self, token: str, pos: PosTag) -> tuple[int, ...]:
        return tuple(r for r, _, _ in self._entries.get(token.lower(), {}).get(pos, ()))

    def has_pos(self, token: str, pos: PosTag) -> bool:
        return bool(self._entries.get(token.lower(), {}).get(pos))

    def ranked_synsets(self, token: str) -> list[tuple[float, float]]:
        """All synsets of ``token`` ordered by sense rank, POS order breaking ties."""
        by_pos = self._entries.get(token.lower())
        if not by_pos:
            return []
        keyed = sorted(
            ((rank, pos), (p, n)) for pos, senses in by_pos.items() for rank, p, n in senses
        )
        return [scores for _, scores in keyed]

    def score(self, token: str) -> float:
        key = token.lower()
        cached = self._scores.get(key)
        if cached is None:
            cached = _rank_weighted_mean(self.ranked_synsets(key))
            self._scores[key] = cached
        return cached


def _rank_weighted_mean(synsets: Sequence[tuple[float, float]]) -> float:
    if not synsets:
        return 0.0
    weighted = 0.0
    total = 0.0
    for k, (pos, neg) in enumerate(synsets, start=1):
        weighted += (pos - neg) / k
        total += 1.0 / k
    return weighted / total


def word_polarity_score(lexicon: SentimentLexicon, token: str) -> float:
    """Rank-weighted mean of ``pos - neg`` over the token's synsets.

    The k-th synset (rank-major, then noun/verb/adjective/adverb) gets weight
    ``1/k``; the weights are normalised by the truncated harmonic sum, so the
    result lies in [-1, 1]. Tokens absent from the lexicon score 0.
    """
    return lexicon.score(token)


def _parse_score(field: str, name: str, lineno: int) -> float:
    try:
        value = float(field)
    except ValueError:
        raise LexiconParseError(f"unparsable {name} {field!r}", lineno) from None
    if not 0.0 <= value <= 1.0:
        raise LexiconParseError(f"{name} {value} outside [0, 1]", lineno)
    return value


def iter_sentiwordnet(stream: TextIO) -> Iterable[tuple[int, SynsetRecord]]:
    for lineno, line in enumerate(stream, start=1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 6:
            raise LexiconParseError(f"expected 6 tab-separated fields, got {len(fields)}", lineno)
        pos_field, synset_id, pos_field_score, neg_field_score, terms_field, _gloss = fields
        pos_tag = SWN_POS.get(pos_field.strip().lower())
        if pos_tag is None:
            raise LexiconParseError(f"unknown POS {pos_field!r}", lineno)
        pos_score = _parse_score(pos_field_score, "PosScore", lineno)
        neg_score = _parse_score(neg_field_score, "NegScore", lineno)
        if pos_score + neg_score > 1.0 + 1e-9:
            raise LexiconParseError("PosScore + NegScore exceeds 1", lineno)
        terms = []
        for item in terms_field.split():
            term, sep, rank_text = item.rpartition("#")
            if not sep or not term:
                raise LexiconParseError(f"synset term {item!r} lacks '#rank'", lineno)
            try:
                rank = int(rank_text)
            except ValueError:
                raise LexiconParseError(f"bad sense rank in {item!r}", lineno) from None
            if rank < 1:
                raise LexiconParseError(f"sense rank {rank} < 1 in {item!r}", lineno)
            terms.append((term, rank))
        yield lineno, SynsetRecord(pos_tag, synset_id, pos_score, neg_score, tuple(terms))


def parse_sentiwordnet(stream: TextIO | str) -> SentimentLexicon:
    """Build a :class:`SentimentLexicon` from SentiWordNet 3.0 text.

    Multiword terms (containing ``_``) are skipped. Per (token, POS) the
    senses are ordered by their sense rank, never by file position.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    ranked: dict[str, dict[PosTag, dict[int, tuple[float, float]]]] = defaultdict(
        lambda: defaultdict(dict)
    )
    for lineno, record in iter_sentiwordnet(stream):
        for term, rank in record.terms:
            if "_" in term:
                continue
            senses = ranked[term.lower()][record.pos_tag]
            if rank in senses:
                raise LexiconParseError(
                    f"duplicate sense rank {rank} for {term!r} ({record.pos_tag.name.lower()})",
                    lineno,
                )
            senses[rank] = (record.pos_score, record.neg_score)
    if not ranked:
        raise LexiconParseError("no entries")
    entries = {
        token: {pos: [(r, *senses[r]) for r in sorted(senses)] for pos, senses in by_pos.items()}
        for token, by_pos in ranked.items()
    }
    return SentimentLexicon(entries)


@dataclass(frozen=True)
class GICategory:
    name: str
    index: int


@dataclass(frozen=True)
class CategoryLexicon:
    categories: tuple[GICategory, ...]
    memberships: Mapping[str, frozenset[int]]

    @property
    def size(self) -> int:
        return len(self.categories)

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.categories]

    def membership(self, token: str) -> frozenset[int]:
        return self.memberships.get(token.lower(), frozenset())


def _sniff_delimiter(header_line: str) -> str:
    return "\t" if "\t" in header_line else ","


def parse_general_inquirer(
    stream: TextIO | str,
    skip_columns: Sequence[str] = GI_METADATA_COLUMNS,
) -> CategoryLexicon:
    """Build a :class:`CategoryLexicon` from a General Inquirer table.

    The header's first column is the entry word; every other column is a
    category unless named in ``skip_columns``. Tab or comma delimited.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    text = stream.read()
    if not text.strip():
        raise LexiconParseError("no entries")
    first_line = text.splitlines()[0]
    reader = csv.reader(io.StringIO(text), delimiter=_sniff_delimiter(first_line))
    header = next(reader)
    skip = set(skip_columns)
    columns: list[tuple[int, str]] = []
    seen: set[str] = set()
    for col, raw_name in enumerate(header[1:], start=1):
        name = raw_name.strip()
        if name in skip:
            continue
        if not name:
            raise LexiconParseError(f"empty category name in column {col + 1}", 1)
        if name in seen:
            raise LexiconParseError(f"duplicate category {name!r} in header", 1)
        seen.add(name)
        columns.append((col, name))
    categories = tuple(GICategory(name, i) for i, (_, name) in enumerate(columns))

    members: dict[str, set[int]] = defaultdict(set)
    for rowno, row in enumerate(reader, start=2):
        if not row or not row[0].strip():
            continue
        if len(row) > len(header):
            raise LexiconParseError(
                f"row has {len(row)} cells but header has {len(header)}", rowno
            )
        word = row[0].strip().split("#", 1)[0].lower()
        bucket = members[word]
        for index, (col, _) in enumerate(columns):
            if col < len(row) and row[col].strip():
                bucket.add(index)
    return CategoryLexicon(categories, {w: frozenset(s) for w, s in members.items()})


def load_sentiwordnet(path) -> SentimentLexicon:
    with open(path, encoding="utf-8") as fh:
        return parse_sentiwordnet(fh)


def load_general_inquirer(path) -> CategoryLexicon:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_general_inquirer(fh)
