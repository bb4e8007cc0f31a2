"""Segmentation and surface cues: sentences, tokens, emoticons, negation, emphasis."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Sequence

from affect2d import Affect2DError


class EmptyDocumentError(Affect2DError, ValueError):
    pass


# Reference emoticon lists. The curly apostrophe forms are verbatim; their
# ASCII-apostrophe twins are added because real text rarely uses U+2019.
POSITIVE_EMOTICONS = (
    ":)", ":]", ":}", ":o)", ":o]", ":o}", ":-]", ":-)", ":-}",
    "=)", "=]", "=}", "=^]", "=^)", "=^}", ":B", ":-D", ":-B", ":-p",
)
NEGATIVE_EMOTICONS = (
    ":-(", "=(", "=[", "={", "=^;",
    ":’(", ":’[", ":’{", "=’{", "=’(", "=’[",
    ":'(", ":'[", ":'{", "='{", "='(", "='[",
    "=\\", ":/",
)
_POSITIVE_SET = frozenset(POSITIVE_EMOTICONS)
_NEGATIVE_SET = frozenset(NEGATIVE_EMOTICONS)

NEGATION_WORDS = frozenset({
    "not", "no", "never", "none", "cannot", "cant", "wont", "dont", "didnt",
    "doesnt", "isnt", "wasnt", "werent", "arent", "aint", "hardly", "barely",
    "scarcely", "neither", "nor", "without",
})

APOSTROPHES = "'’"
QUOTE_CHARS = "\"“”"

_emoticon_alt = "|".join(
    re.escape(e) for e in sorted(_POSITIVE_SET | _NEGATIVE_SET, key=len, reverse=True)
)
# Emoticons ending in a letter (":B", ":-p") must not swallow the start of a word.
_TOKEN_RE = re.compile(
    rf"(?P<emoticon>(?:{_emoticon_alt})(?![^\W_]))"
    rf"|(?P<word>[^\W_]+(?:[{APOSTROPHES}][^\W_]+)*)"
    r"|(?P<punct>\S)"
)
_WORD_RE = re.compile(rf"[^\W_]+(?:[{APOSTROPHES}][^\W_]+)*")
_SENTENCE_RE = re.compile(r"[^.!?\n]*[.!?]*")
_ELONGATION_RE = re.compile(r"(.)\1\1")


class TokenKind(enum.Enum):
    WORD = "word"
    EMOTICON = "emoticon"
    PUNCTUATION = "punctuation"
    NUMBER = "number"


@dataclass(frozen=True)
class Token:
    surface: str
    lower: str
    span: tuple[int, int]
    kind: TokenKind

    @property
    def is_word(self) -> bool:
        return self.kind is TokenKind.WORD


@dataclass(frozen=True)
class Document:
    raw: str
    sentences: tuple[tuple[int, int], ...]
    tokens: tuple[tuple[Token, ...], ...]

    @property
    def n_sentences(self) -> int:
        return len(self.sentences)

    def all_tokens(self):
        for sentence in self.tokens:
            yield from sentence

    def words(self) -> list[Token]:
        return [t for t in self.all_tokens() if t.is_word]


def _tokenize(raw: str, start: int, end: int) -> tuple[Token, ...]:
    out = []
    for m in _TOKEN_RE.finditer(raw, start, end):
        surface = m.group()
        if m.lastgroup == "emoticon":
            kind = TokenKind.EMOTICON
        elif m.lastgroup == "word":
            kind = TokenKind.NUMBER if surface.isdigit() else TokenKind.WORD
        else:
            kind = TokenKind.PUNCTUATION
        out.append(Token(surface, surface.lower(), m.span(), kind))
    return tuple(out)


def segment(text: str) -> Document:
    """Split ``text`` into sentences and tokens.

    Sentences end at runs of ``.``, ``!``, ``?`` or at a newline; there is no
    abbreviation handling. Emoticons are matched before anything else.
    """
    if not text or not text.strip():
        raise EmptyDocumentError("empty document")
    spans = []
    tokens = []
    for m in _SENTENCE_RE.finditer(text):
        start, end = m.span()
        if start == end:
            continue
        chunk = m.group()
        stripped = chunk.lstrip()
        if not stripped.strip():
            continue
        start += len(chunk) - len(stripped)
        end = start + len(stripped.rstrip())
        spans.append((start, end))
        tokens.append(_tokenize(text, start, end))
    return Document(text, tuple(spans), tuple(tokens))


def detect_emoticons(doc: Document) -> tuple[int, int]:
    pos = neg = 0
    for tok in doc.all_tokens():
        if tok.kind is TokenKind.EMOTICON:
            if tok.surface in _POSITIVE_SET:
                pos += 1
            elif tok.surface in _NEGATIVE_SET:
                neg += 1
    return pos, neg


def strip_apostrophes(word: str) -> str:
    return word.translate({ord(a): None for a in APOSTROPHES})


def is_negation(token: Token) -> bool:
    return strip_apostrophes(token.lower) in NEGATION_WORDS


def contains_negation(sentence_tokens: Sequence[Token]) -> bool:
    return any(is_negation(t) for t in sentence_tokens)


def count_exclamations(text: str) -> int:
    return text.count("!")


def _is_all_caps(surface: str) -> bool:
    letters = strip_apostrophes(surface)
    return len(letters) >= 2 and letters.isalpha() and letters.isupper()


def count_all_caps(doc: Document) -> int:
    return sum(1 for t in doc.words() if _is_all_caps(t.surface))


def is_elongated(surface: str) -> bool:
    return _ELONGATION_RE.search(surface) is not None


def count_elongated(doc: Document) -> int:
    return sum(1 for t in doc.words() if is_elongated(t.surface))


def quoted_token_count(text: str) -> int:
    """Words enclosed by double quotes, pairing quote marks left to right."""
    marks = [i for i, ch in enumerate(text) if ch in QUOTE_CHARS]
    count = 0
    for open_at, close_at in zip(marks[0::2], marks[1::2]):
        count += sum(
            1 for m in _WORD_RE.finditer(text, open_at + 1, close_at) if not m.group().isdigit()
        )
    return count
