import pytest
from hypothesis import given, strategies as st

from qweyl.words import (
    NotDyckError,
    Word,
    WordParseError,
    balanced_words,
    classify,
    dyck_words,
    height_profile,
    parse_word,
    standard_factorize,
    tunnel_matching,
)


def catalan(n):
    from math import comb

    return comb(2 * n, n) // (n + 1)


def test_parse():
    assert parse_word("").letters == ""
    w = parse_word("xxDxxDDD")
    assert (len(w.letters), w.num_x, w.num_d, w.semilength) == (8, 4, 4, 4)


def test_parse_error_index():
    with pytest.raises(WordParseError) as exc:
        parse_word("xDy")
    assert exc.value.index == 2


def test_classify():
    p = classify("xxDxxDDD")
    assert p.is_balanced and p.is_dyck and p.starts_with_x
    p = classify("Dx")
    assert p.is_balanced and not p.is_dyck and not p.starts_with_x
    assert not classify("xxD").is_balanced


@pytest.mark.parametrize(
    "word, first, inner, rest",
    [("xxDxxDDD", "xxDxxDDD", "xDxxDD", ""), ("xDxD", "xD", "", "xD"), ("xD", "xD", "", "")],
)
def test_standard_factorize(word, first, inner, rest):
    f = standard_factorize(word)
    assert (f.first_block.letters, f.inner.letters, f.rest.letters) == (first, inner, rest)
    assert f.reconstruct() == Word(word)


def test_standard_factorize_rejects_non_dyck():
    with pytest.raises(NotDyckError):
        standard_factorize("DxxD")
    with pytest.raises(ValueError):
        standard_factorize("")


@pytest.mark.parametrize(
    "word, c, h",
    [("xxDxxDDD", (2, 4, 4, 4), (1, 2, 1, 0)), ("xDxD", (1, 2), (0, 0)), ("xxDD", (2, 2), (1, 0))],
)
def test_height_profile(word, c, h):
    p = height_profile(word)
    assert p.column_heights == c
    assert p.east_heights == h


def test_height_profile_needs_balance():
    with pytest.raises(ValueError):
        height_profile("xxD")


def test_tunnel_matching():
    assert tunnel_matching("xD") == [(0, 1)]
    assert tunnel_matching("xxDD") == [(1, 1), (0, 2)]
    # D#1 closes x@1; D#2 closes x@4; D#3 closes x@3; D#4 closes x@0
    assert tunnel_matching("xxDxxDDD") == [(1, 1), (4, 2), (3, 3), (0, 4)]


@pytest.mark.parametrize("n", range(0, 8))
def test_dyck_words_counted_by_catalan(n):
    words = list(dyck_words(n))
    assert len(words) == catalan(n)
    assert len(set(words)) == len(words)
    assert all(classify(w).is_dyck for w in words)


@pytest.mark.parametrize("n", range(1, 6))
def test_balanced_words(n):
    from math import comb

    assert len(list(balanced_words(n))) == comb(2 * n, n)
    xs = list(balanced_words(n, starts_with_x=True))
    assert len(xs) == comb(2 * n - 1, n - 1)
    assert all(w.letters[0] == "x" for w in xs)


@given(st.lists(st.sampled_from("xD"), max_size=16).map("".join))
def test_dyck_iff_prefix_condition(text):
    w = Word(text)
    depth, ok = 0, True
    for ch in text:
        depth += 1 if ch == "x" else -1
        ok = ok and depth >= 0
    assert classify(w).is_dyck == (ok and depth == 0)


@given(st.integers(1, 6).flatmap(lambda n: st.sampled_from(list(dyck_words(n)))))
def test_factorization_round_trip(w):
    f = standard_factorize(w)
    assert f.reconstruct() == w
    assert classify(f.inner).is_dyck and (not f.rest.letters or classify(f.rest).is_dyck)
