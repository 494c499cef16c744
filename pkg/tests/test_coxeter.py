import itertools

import pytest

from hookwalk.coxeter import (
    Word,
    apply_generator,
    apply_word,
    check_signed_permutation,
    enumerate_reduced_words,
    identity,
    is_reduced_word_of_w0,
    longest_element,
)


def test_word_validation():
    w = Word((0, 1, 0, 1), 2)
    assert len(w) == 4 and list(w) == [0, 1, 0, 1]
    with pytest.raises(ValueError):
        Word((2,), 2)
    with pytest.raises(ValueError):
        Word((-1,), 2)
    with pytest.raises(ValueError):
        Word((), 0)


def test_check_signed_permutation():
    check_signed_permutation((2, -1, 3))
    for bad in ((1, 1), (0, 2), (1, 3), (1, -1)):
        with pytest.raises(ValueError):
            check_signed_permutation(bad)


def test_identity_and_longest_element():
    assert identity(3) == (1, 2, 3)
    assert longest_element(3) == (-1, -2, -3)
    with pytest.raises(ValueError):
        identity(0)
    with pytest.raises(ValueError):
        longest_element(0)


def test_apply_generator():
    assert apply_generator((1, 2, 3), 0) == (-1, 2, 3)
    assert apply_generator((1, 2, 3), 1) == (2, 1, 3)
    assert apply_generator((1, 2, 3), 2) == (1, 3, 2)
    assert apply_generator((-2, 1), 0) == (2, 1)
    with pytest.raises(ValueError):
        apply_generator((1, 2), 2)
    with pytest.raises(ValueError):
        apply_generator((1, 2), -1)


def test_generators_are_involutions():
    w = (3, -1, 2)
    for q in range(3):
        assert apply_generator(apply_generator(w, q), q) == w


def test_apply_word_example():
    # the unique geodesics for n = 2 both end at the longest element
    assert apply_word((1, 2), Word((0, 1, 0, 1), 2)) == (-1, -2)
    assert apply_word((1, 2), Word((1, 0, 1, 0), 2)) == (-1, -2)
    with pytest.raises(ValueError):
        apply_word((1, 2, 3), Word((0,), 2))


def test_is_reduced_word_of_w0():
    assert is_reduced_word_of_w0(Word((0, 1, 0, 1), 2))
    assert is_reduced_word_of_w0(Word((1, 0, 1, 0), 2))
    assert not is_reduced_word_of_w0(Word((0, 0, 1, 1), 2))  # right length, wrong end
    assert not is_reduced_word_of_w0(Word((0, 1, 0), 2))  # too short
    assert not is_reduced_word_of_w0(Word((0,) * 5, 2))  # too long
    assert is_reduced_word_of_w0(Word((0,), 1))


def test_enumerate_reduced_words_counts():
    # ranks 1..4: 1, 2, 42, 24024 geodesics, matching the tableau counts
    expected = {1: 1, 2: 2, 3: 42, 4: 24024}
    for n, count in expected.items():
        words = enumerate_reduced_words(n)
        assert len(words) == count
        letter_lists = [w.letters for w in words]
        assert letter_lists == sorted(letter_lists)
        assert len(set(letter_lists)) == len(words)
        if n <= 3:
            for w in words:
                assert is_reduced_word_of_w0(w)


def test_enumerate_reduced_words_exhaustive_for_rank_2():
    words = {w.letters for w in enumerate_reduced_words(2)}
    assert words == {(0, 1, 0, 1), (1, 0, 1, 0)}
    # cross-check against raw enumeration of all length-4 letter strings
    brute = {
        s
        for s in itertools.product(range(2), repeat=4)
        if apply_word((1, 2), Word(s, 2)) == (-1, -2)
    }
    assert words == brute


def test_enumerate_reduced_words_cap():
    with pytest.raises(ValueError):
        enumerate_reduced_words(5)
    with pytest.raises(ValueError):
        enumerate_reduced_words(0)
