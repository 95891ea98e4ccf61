import io
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from moodmap import emotions, geo

REPO_ROOT = Path(__file__).resolve().parents[1]
SAMPLE_DATA = REPO_ROOT / "sample_data"

TINY_LEXICON_CSV = b"word,emotion\nhappy,happiness\nglad,happiness\nangry,anger\n"


@pytest.fixture(scope="session")
def default_lexicon():
    return emotions.load_default_lexicon()


@pytest.fixture(scope="session")
def boundaries():
    return geo.load_default_boundaries()


@pytest.fixture(scope="session")
def function_words():
    return emotions.default_function_words()


@pytest.fixture(scope="session")
def tiny_lexicon():
    # immutable, safe to share across tests and hypothesis examples
    return emotions.load_lexicon(io.BytesIO(TINY_LEXICON_CSV))
