import numpy as np
import pytest
from hypothesis import given, strategies as st

from cipherclimb import demap, map_text, normalize

from conftest import MEAD_NORMALIZED, MEAD_QUOTE


def test_normalize_drops_specials_and_lowercases():
    assert normalize(MEAD_QUOTE) == MEAD_NORMALIZED
    assert len(normalize(MEAD_QUOTE)) == 60


def test_normalize_empty():
    assert normalize("") == ""


def test_normalize_mixed_input():
    assert normalize("A1b2C3") == "abc"


def test_normalize_non_ascii_dropped():
    assert normalize("café İstanbul") == "cafstanbul"


@given(st.text())
def test_normalize_idempotent(raw):
    once = normalize(raw)
    assert normalize(once) == once


@given(st.text())
def test_normalize_length_counts_ascii_letters(raw):
    expected = sum(1 for ch in raw if "a" <= ch <= "z" or "A" <= ch <= "Z")
    assert len(normalize(raw)) == expected


def test_map_text_endpoints():
    assert map_text("a").tolist() == [0]
    assert map_text("z").tolist() == [25]
    assert map_text("abz").tolist() == [0, 1, 25]


def test_map_text_rejects_unnormalized():
    with pytest.raises(ValueError):
        map_text("aBc")
    with pytest.raises((ValueError, UnicodeEncodeError)):
        map_text("a b")
        map_text("é")


def test_demap_examples():
    assert demap(np.array([0])) == "a"
    assert demap(np.array([], dtype=np.int64)) == ""
    assert demap(np.array([19, 7, 4])) == "the"


@given(st.text(alphabet=st.characters(min_codepoint=97, max_codepoint=122)))
def test_round_trip(normalized):
    assert demap(map_text(normalized)) == normalized
