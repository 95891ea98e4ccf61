"""Independent reference implementations used to cross-check the pipeline.

The matcher here deliberately avoids the package's lookup structures: it
scans a flat (word, emotion) row list linearly for every token.  The random
post generator builds posts from a known token sequence and renders them to
decorated text, so the expected label is computable without the pipeline.
"""

from __future__ import annotations

import random

SIX = ("Anger", "Disgust", "Fear", "Happiness", "Sadness", "Surprise")

# Decorations the text renderer may weave in; the pipeline must ignore them.
_URLS = ["http://t.co/abc", "https://example.com/x?y=1", "www.news.example/story"]
_MENTIONS = ["@someone", "@WHO", "@newsdesk42"]


def brute_force_counts(tokens, rows):
    """Linear scan of the lexicon rows for every token occurrence."""
    counts = {e: 0 for e in SIX}
    for token in tokens:
        for word, emotion in rows:
            if word == token:
                counts[emotion] += 1
    return counts


def brute_force_label(tokens, rows):
    counts = brute_force_counts(tokens, rows)
    best, best_n = "Neutral", 0
    for e in SIX:
        if counts[e] > best_n:
            best, best_n = e, counts[e]
    return best


def lexicon_rows(lexicon):
    """Flatten a loaded lexicon into scan rows(word, emotion)."""
    return sorted(lexicon.entries.items())


class PostGenerator:
    """Seeded generator of decorated post texts with known token content."""

    def __init__(self, lexicon, function_words, seed=1234, fillers=None):
        self.rng = random.Random(seed)
        self.rows = lexicon_rows(lexicon)
        self.keywords = [w for w, _ in self.rows]
        self.function_words = sorted(function_words)
        self.fillers = fillers or [
            "lockdown", "india", "today", "people", "news", "city", "home",
            "update", "market", "street", "office", "window", "train",
        ]
        assert not set(self.fillers) & set(self.keywords)

    def make_tokens(self, n_keywords=None, n_fillers=None):
        """A token list mixing keywords, fillers, and function words."""
        rng = self.rng
        n_keywords = rng.randint(0, 4) if n_keywords is None else n_keywords
        n_fillers = rng.randint(0, 6) if n_fillers is None else n_fillers
        tokens = [rng.choice(self.keywords) for _ in range(n_keywords)]
        tokens += [rng.choice(self.fillers) for _ in range(n_fillers)]
        rng.shuffle(tokens)
        return tokens

    def render(self, tokens):
        """Render tokens to decorated text whose filtered form is `tokens`.

        Function words, numerics, mentions, URLs, case changes, and '#'
        sigils are sprinkled in; all are removed by a correct filter.
        """
        rng = self.rng
        parts = []
        for token in tokens:
            if rng.random() < 0.2:
                parts.append(rng.choice(self.function_words))
            word = token.upper() if rng.random() < 0.2 else token
            if rng.random() < 0.15:
                word = "#" + word
            parts.append(word)
        if rng.random() < 0.3:
            parts.append(str(rng.randint(0, 99999)))
        if rng.random() < 0.3:
            parts.insert(rng.randrange(len(parts) + 1), rng.choice(_MENTIONS))
        if rng.random() < 0.3:
            parts.append(rng.choice(_URLS))
        sep = rng.choice([" ", "  ", " ", ", ", "! "])
        return sep.join(parts)

    def make_post(self):
        tokens = self.make_tokens()
        return self.render(tokens), tokens
