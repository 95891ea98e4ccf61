"""Keyword-rank emotion classification.

A flat lexicon assigns each keyword to one of six basic emotions.  A post is
tokenized and filtered, every token is matched against the lexicon, and the
per-emotion match counts are turned into ranks; the top-ranked emotion labels
the post, with Neutral reserved for posts that match nothing.
"""

from __future__ import annotations

import csv
import gzip
import io
import logging
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import BinaryIO, Callable, Iterable, Mapping, Optional, Union

logger = logging.getLogger(__name__)

# Canonical order; also the tie-break order for labeling.
EMOTIONS = ("Anger", "Disgust", "Fear", "Happiness", "Sadness", "Surprise")
NEUTRAL = "Neutral"
ALL_LABELS = EMOTIONS + (NEUTRAL,)

# Short column codes used in CSV exports and tabular views.
CODES = {
    "Anger": "A",
    "Disgust": "D",
    "Fear": "F",
    "Happiness": "H",
    "Sadness": "SA",
    "Surprise": "S",
    "Neutral": "N",
}

# Accepted emotion names in lexicon files (case-insensitive).  Source datasets
# commonly label the happiness family "joy".
_EMOTION_ALIASES = {e.lower(): e for e in EMOTIONS}
_EMOTION_ALIASES["joy"] = "Happiness"

_URL_RE = re.compile(r"(?:https?://|www\.)\S+")
_MENTION_RE = re.compile(r"@\w+")
_TOKEN_RE = re.compile(r"[a-z0-9]+")


class LexiconError(ValueError):
    """Raised when a lexicon file cannot be loaded."""


@dataclass(frozen=True)
class Lexicon:
    """Immutable keyword -> emotion map; safe to share across workers."""

    entries: Mapping[str, str]
    counts: Mapping[str, int]
    duplicates: tuple = ()

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class EmotionScores:
    """Per-emotion match counts and ranks for one post."""

    matched: Mapping[str, int]
    token_count: int
    score: Mapping[str, float] = field(default_factory=dict)

    def normalized(self, lexicon: Optional[Lexicon] = None, mode: str = "tokens") -> dict:
        """Ranks under either denominator, for display only.

        ``tokens``: matches / post token count (the default rank).
        ``lexicon``: matches / category keyword count.  Labels always come
        from the raw match counts, so the choice never affects labeling.
        """
        if mode == "tokens":
            return dict(self.score)
        if mode == "lexicon":
            if lexicon is None:
                raise ValueError("lexicon required for mode='lexicon'")
            out = {}
            for e in EMOTIONS:
                n = lexicon.counts.get(e, 0)
                out[e] = self.matched.get(e, 0) / n if n else 0.0
            return out
        raise ValueError(f"unknown normalization mode: {mode!r}")


def _open_stream(source: Union[str, Path, bytes, BinaryIO]) -> io.TextIOBase:
    """Open a lexicon source as UTF-8 text, transparently ungzipping."""
    if isinstance(source, (str, Path)):
        raw: BinaryIO = open(source, "rb")
    elif isinstance(source, bytes):
        raw = io.BytesIO(source)
    elif hasattr(source, "read"):
        data = source.read()
        if isinstance(data, str):
            return io.StringIO(data)
        raw = io.BytesIO(data)
    else:
        raise TypeError(f"unsupported lexicon source: {type(source)!r}")
    head = raw.read(2)
    raw.seek(0)
    if head == b"\x1f\x8b":
        raw = gzip.open(raw, "rb")  # type: ignore[assignment]
    return io.TextIOWrapper(raw, encoding="utf-8")


def load_lexicon(source: Union[str, Path, bytes, BinaryIO]) -> Lexicon:
    """Load a keyword lexicon from CSV with header ``word,emotion``.

    Keywords are lowercased; the first occurrence of a duplicate keyword wins
    and later ones are reported.  Emotion names are case-insensitive and may
    use ``joy`` for Happiness.  Raises :class:`LexiconError` on malformed
    rows, unknown emotion names, or an empty file.
    """
    entries: dict[str, str] = {}
    counts: dict[str, int] = {}
    duplicates = []
    stream = _open_stream(source)
    try:
        reader = csv.reader(stream)
        try:
            header = next(reader, None)
        except csv.Error as exc:
            raise LexiconError(f"malformed CSV at line 1: {exc}") from exc
        if header is None:
            raise LexiconError("empty lexicon")
        header = [h.strip().lower() for h in header]
        if header[:2] != ["word", "emotion"]:
            raise LexiconError(f"expected header 'word,emotion', got {','.join(header)!r}")
        try:
            for lineno, row in enumerate(reader, start=2):
                if not row or (len(row) == 1 and not row[0].strip()):
                    continue
                if len(row) < 2:
                    raise LexiconError(f"malformed CSV at line {lineno}: expected 2 columns, got {len(row)}")
                word = row[0].strip().lower()
                name = row[1].strip().lower()
                emotion = _EMOTION_ALIASES.get(name)
                if emotion is None:
                    raise LexiconError(f"unknown emotion name {row[1].strip()!r} at line {lineno}")
                if not word:
                    raise LexiconError(f"empty keyword at line {lineno}")
                if word in entries:
                    duplicates.append((lineno, word, emotion))
                    continue
                entries[word] = emotion
                counts[emotion] = counts.get(emotion, 0) + 1
        except csv.Error as exc:
            raise LexiconError(f"malformed CSV: {exc}") from exc
    finally:
        stream.close()
    if not entries:
        raise LexiconError("empty lexicon")
    if duplicates:
        logger.warning("lexicon: %d duplicate keywords ignored (first occurrence wins)", len(duplicates))
    return Lexicon(entries=entries, counts=counts, duplicates=tuple(duplicates))


def load_default_lexicon() -> Lexicon:
    """Load the lexicon bundled with the package."""
    ref = resources.files("moodmap").joinpath("data/emotions.csv")
    with ref.open("rb") as f:
        return load_lexicon(f)


def load_function_words(source: Union[str, Path, None] = None) -> frozenset:
    """Load the closed-class filter list (one word per line, '#' comments)."""
    if source is None:
        ref = resources.files("moodmap").joinpath("data/function_words.txt")
        text = ref.read_text(encoding="utf-8")
    else:
        text = Path(source).read_text(encoding="utf-8")
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


_DEFAULT_FUNCTION_WORDS: Optional[frozenset] = None


def default_function_words() -> frozenset:
    global _DEFAULT_FUNCTION_WORDS
    if _DEFAULT_FUNCTION_WORDS is None:
        _DEFAULT_FUNCTION_WORDS = load_function_words()
    return _DEFAULT_FUNCTION_WORDS


def preprocess(
    text: str,
    function_words: Optional[Iterable[str]] = None,
    noun_filter: Optional[Callable[[list], list]] = None,
) -> list:
    """Normalize raw post text into a filtered token list.

    Pipeline: lowercase; strip URLs; strip @-mentions; split on
    non-alphanumeric boundaries (which drops the '#' sigil but keeps hashtag
    bodies); drop pure-numeric tokens; drop closed-class function words.  An
    optional ``noun_filter`` hook runs last; none is applied by default.
    """
    if not text:
        return []
    stop = frozenset(function_words) if function_words is not None else default_function_words()
    lowered = text.lower()
    lowered = _URL_RE.sub(" ", lowered)
    lowered = _MENTION_RE.sub(" ", lowered)
    tokens = [t for t in _TOKEN_RE.findall(lowered) if not t.isdigit() and t not in stop]
    if noun_filter is not None:
        tokens = noun_filter(tokens)
    return tokens


def score(tokens: Iterable[str], lexicon: Lexicon) -> EmotionScores:
    """Rank every emotion against a token list.

    Matches are counted per occurrence (a keyword appearing twice counts
    twice); the rank is matches / token count, or 0 for an empty post.
    """
    tokens = list(tokens)
    matched = {e: 0 for e in EMOTIONS}
    for token in tokens:
        emotion = lexicon.entries.get(token)
        if emotion is not None:
            matched[emotion] += 1
    n = len(tokens)
    scores = {e: (matched[e] / n if n else 0.0) for e in EMOTIONS}
    return EmotionScores(matched=matched, token_count=n, score=scores)


def label(scores: EmotionScores) -> str:
    """Pick the top-ranked emotion; Neutral when nothing matched.

    The argmax key is the raw match count, which equals the rank argmax under
    the default denominator; ties go to the first emotion in canonical order.
    """
    best = NEUTRAL
    best_count = 0
    for e in EMOTIONS:
        if scores.matched.get(e, 0) > best_count:
            best = e
            best_count = scores.matched[e]
    return best


def classify(
    text: str,
    lexicon: Lexicon,
    function_words: Optional[Iterable[str]] = None,
) -> tuple:
    """Full pipeline for one post: preprocess, score, label."""
    scores = score(preprocess(text, function_words=function_words), lexicon)
    return label(scores), scores
