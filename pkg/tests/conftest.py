from pathlib import Path

import pytest

from cipherclimb import build_log_table, build_table_from_corpus, map_text, normalize

DATA = Path(__file__).resolve().parent.parent / "data"

MEAD_QUOTE = (
    "Always remember that you are absolutely unique. Just like everyone else..."
)
MEAD_NORMALIZED = "alwaysrememberthatyouareabsolutelyuniquejustlikeeveryoneelse"


@pytest.fixture(scope="session")
def corpus_text():
    return (DATA / "corpus.txt").read_text()


@pytest.fixture(scope="session")
def english_table(corpus_text):
    return build_table_from_corpus(corpus_text)


@pytest.fixture(scope="session")
def english_log_table(english_table):
    return build_log_table(english_table)


@pytest.fixture(scope="session")
def plain_mas():
    raw = (DATA / "sample_plain_mas.txt").read_text()
    return map_text(normalize(raw))[:471]


@pytest.fixture(scope="session")
def plain_sct():
    raw = (DATA / "sample_plain_sct.txt").read_text()
    return map_text(normalize(raw))[:596]
