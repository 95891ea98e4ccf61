import gzip
import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moodmap import emotions
from moodmap.emotions import (
    EMOTIONS,
    NEUTRAL,
    EmotionScores,
    LexiconError,
    classify,
    label,
    load_lexicon,
    preprocess,
    score,
)

import golden
import oracle
from conftest import TINY_LEXICON_CSV


# -- load_lexicon ---------------------------------------------------------

def test_bundled_lexicon_counts(default_lexicon):
    assert dict(default_lexicon.counts) == golden.LEXICON_COUNTS


def test_empty_stream_rejected():
    with pytest.raises(LexiconError, match="empty lexicon"):
        load_lexicon(io.BytesIO(b"word,emotion\n"))
    with pytest.raises(LexiconError):
        load_lexicon(io.BytesIO(b""))


def test_three_row_fixture_counts(tiny_lexicon):
    assert dict(tiny_lexicon.counts) == {"Happiness": 2, "Anger": 1}
    assert tiny_lexicon.entries["glad"] == "Happiness"


def test_unknown_emotion_name_rejected():
    data = b"word,emotion\nhappy,happiness\nweird,boredom\n"
    with pytest.raises(LexiconError, match="boredom"):
        load_lexicon(io.BytesIO(data))


def test_malformed_row_reports_line_number():
    data = b"word,emotion\nhappy,happiness\nonlyoneword\n"
    with pytest.raises(LexiconError, match="line 3"):
        load_lexicon(io.BytesIO(data))


def test_bad_header_rejected():
    with pytest.raises(LexiconError, match="header"):
        load_lexicon(io.BytesIO(b"term,label\nhappy,happiness\n"))


def test_duplicates_first_wins_and_reported():
    data = b"word,emotion\nhappy,happiness\nhappy,anger\nglad,happiness\n"
    lex = load_lexicon(io.BytesIO(data))
    assert lex.entries["happy"] == "Happiness"
    assert dict(lex.counts) == {"Happiness": 2}
    assert len(lex.duplicates) == 1
    assert lex.duplicates[0][1] == "happy"


def test_joy_alias_and_case_insensitive_names():
    data = b"word,emotion\ncheerful,JOY\nfurious,Anger\n"
    lex = load_lexicon(io.BytesIO(data))
    assert lex.entries["cheerful"] == "Happiness"
    assert lex.entries["furious"] == "Anger"


def test_gzip_stream_supported():
    lex = load_lexicon(gzip.compress(TINY_LEXICON_CSV))
    assert dict(lex.counts) == {"Happiness": 2, "Anger": 1}


def test_load_from_path(tmp_path):
    p = tmp_path / "lex.csv"
    p.write_bytes(TINY_LEXICON_CSV)
    assert len(load_lexicon(p)) == 3


# -- preprocess -----------------------------------------------------------

def test_preprocess_empty():
    assert preprocess("") == []


def test_preprocess_pipeline_stages():
    assert preprocess("I am so happy!! #Covid http://t.co/x @WHO") == ["so", "happy", "covid"]


def test_preprocess_preposition_removed():
    assert preprocess("Lockdown in India") == ["lockdown", "india"]


def test_preprocess_numeric_and_mention_and_url():
    assert preprocess("cases 12345 rise www.example.com/x @user99") == ["cases", "rise"]


def test_preprocess_hashtag_body_kept():
    assert preprocess("#StayHome #covid19") == ["stayhome", "covid19"]


def test_preprocess_noun_filter_hook():
    drop_india = lambda tokens: [t for t in tokens if t != "india"]
    assert preprocess("Lockdown in India", noun_filter=drop_india) == ["lockdown"]


def test_preprocess_custom_function_words():
    assert preprocess("alpha beta", function_words={"beta"}) == ["alpha"]


# -- score / label --------------------------------------------------------

def test_score_multiset_counting(tiny_lexicon):
    s = score(["happy", "glad", "angry"], tiny_lexicon)
    assert s.matched["Happiness"] == 2 and s.matched["Anger"] == 1
    assert s.score["Happiness"] == pytest.approx(2 / 3)
    assert s.score["Anger"] == pytest.approx(1 / 3)
    assert all(s.score[e] == 0 for e in EMOTIONS if e not in ("Happiness", "Anger"))


def test_score_empty_tokens(tiny_lexicon):
    s = score([], tiny_lexicon)
    assert s.token_count == 0
    assert all(v == 0 for v in s.score.values())


def test_score_no_matches(tiny_lexicon):
    s = score(["lockdown", "india"], tiny_lexicon)
    assert all(v == 0 for v in s.matched.values())


def test_label_all_zero_is_neutral(tiny_lexicon):
    assert label(score([], tiny_lexicon)) == NEUTRAL


def test_label_argmax(tiny_lexicon):
    assert label(score(["happy", "glad", "angry"], tiny_lexicon)) == "Happiness"


def test_label_tie_breaks_canonical():
    s = EmotionScores(
        matched={"Anger": 1, "Fear": 1, "Disgust": 0, "Happiness": 0, "Sadness": 0, "Surprise": 0},
        token_count=4,
        score={},
    )
    assert label(s) == "Anger"


# -- classify -------------------------------------------------------------

def test_classify_empty(tiny_lexicon):
    got, scores = classify("", tiny_lexicon)
    assert got == NEUTRAL
    assert scores.token_count == 0


def test_classify_examples(tiny_lexicon):
    assert classify("so happy and glad today", tiny_lexicon)[0] == "Happiness"
    assert classify("angry angry glad", tiny_lexicon)[0] == "Anger"


def test_classify_composition(tiny_lexicon):
    text = "I am SO happy #glad @angry http://angry.example"
    got, scores = classify(text, tiny_lexicon)
    expected_scores = score(preprocess(text), tiny_lexicon)
    assert got == label(expected_scores)
    assert scores == expected_scores


def test_normalized_lexicon_mode(tiny_lexicon):
    s = score(["happy", "angry"], tiny_lexicon)
    by_lex = s.normalized(tiny_lexicon, mode="lexicon")
    assert by_lex["Happiness"] == pytest.approx(1 / 2)
    assert by_lex["Anger"] == pytest.approx(1 / 1)


# -- properties -----------------------------------------------------------

@st.composite
def token_lists(draw, lexicon):
    keywords = sorted(lexicon.entries)
    fillers = ["lockdown", "india", "news", "home", "city", "update"]
    return draw(st.lists(st.sampled_from(keywords + fillers), max_size=12))


@given(data=st.data())
@settings(max_examples=200, deadline=None)
def test_neutral_iff_no_matches(data, tiny_lexicon):
    tokens = data.draw(token_lists(tiny_lexicon))
    s = score(tokens, tiny_lexicon)
    is_neutral = label(s) == NEUTRAL
    assert is_neutral == all(v == 0 for v in s.matched.values())


@given(data=st.data())
@settings(max_examples=200, deadline=None)
def test_appending_keyword_monotonic(data, tiny_lexicon):
    tokens = data.draw(token_lists(tiny_lexicon))
    keyword = data.draw(st.sampled_from(sorted(tiny_lexicon.entries)))
    emotion = tiny_lexicon.entries[keyword]
    before = score(tokens, tiny_lexicon).matched[emotion]
    after = score(tokens + [keyword], tiny_lexicon).matched[emotion]
    assert after >= before


@given(data=st.data())
@settings(max_examples=200, deadline=None)
def test_normalization_preserves_argmax(data, tiny_lexicon):
    tokens = data.draw(token_lists(tiny_lexicon)) + ["happy"]  # force non-empty
    s = score(tokens, tiny_lexicon)
    by_score = max(EMOTIONS, key=lambda e: (s.score[e], -EMOTIONS.index(e)))
    by_matched = max(EMOTIONS, key=lambda e: (s.matched[e], -EMOTIONS.index(e)))
    assert by_score == by_matched


def test_classify_deterministic(default_lexicon, function_words):
    gen = oracle.PostGenerator(default_lexicon, function_words, seed=7)
    posts = [gen.make_post()[0] for _ in range(50)]
    first = [classify(t, default_lexicon)[0] for t in posts]
    second = [classify(t, default_lexicon)[0] for t in reversed(posts)]
    assert first == list(reversed(second))


def test_oracle_equivalence_sample(default_lexicon, function_words):
    gen = oracle.PostGenerator(default_lexicon, function_words, seed=99)
    rows = oracle.lexicon_rows(default_lexicon)
    for _ in range(300):
        text, tokens = gen.make_post()
        assert preprocess(text) == tokens
        got, _ = classify(text, default_lexicon)
        assert got == oracle.brute_force_label(tokens, rows)
