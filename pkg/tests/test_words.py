from __future__ import annotations

import pytest

from braidaut.words import (
    Alphabet,
    Word,
    commutator,
    conjugate,
    exponent_sum,
    format_word,
    free_reduce,
    invert,
    is_reduced,
    letter,
    normalize_central,
    parse_word,
    split_central,
    substitute,
)

Z = ("Z",)


def test_parse_format_roundtrip():
    w = parse_word("s1 s2 s1^-1 s1 A1.3^-2 Z")
    assert format_word(w) == "s1 s2 s1^-1 s1 A1.3^-2 Z"
    assert format_word(free_reduce(w)) == "s1 s2 A1.3^-2 Z"


def test_parse_rejects_unknown_token():
    with pytest.raises(ValueError):
        parse_word("q1")


def test_alphabet_range_check():
    with pytest.raises(ValueError):
        parse_word("s5", Alphabet("sigma", 3))
    assert Alphabet("sigma", 3).letters == (("s", 1), ("s", 2))


def test_mono_alphabet_letters():
    assert Alphabet("monoA", 2, 2).letters == (("C", 1), ("C", 2), ("A", 1, 2, 1), ("A", 1, 2, 2), ("Zrn",))


def test_free_reduce_cancels_across_boundaries():
    w = parse_word("A1.2 A1.3 A1.3^-1 A1.2^-1 A2.3")
    assert format_word(free_reduce(w)) == "A2.3"
    assert is_reduced(free_reduce(w))
    assert not is_reduced(w)


def test_invert_and_conjugate():
    x, y = parse_word("s1"), parse_word("s2")
    assert format_word(invert(parse_word("s1 s2^-1"))) == "s2 s1^-1"
    # y^x = x^-1 y x
    assert format_word(conjugate(y, x)) == "s1^-1 s2 s1"
    # [u,v] = u v u^-1 v^-1
    assert format_word(commutator(x, y)) == "s1 s2 s1^-1 s2^-1"


def test_exponent_sum():
    w = parse_word("A1.2^3 A1.3 A1.2^-1")
    assert exponent_sum(w, ("A", 1, 2)) == 2
    assert exponent_sum(w, ("A", 2, 3)) == 0


def test_central_letter_moves_to_the_end():
    w = parse_word("Z A1.2 Z^-1 Z^2 A1.3")
    assert format_word(normalize_central(w, Z)) == "A1.2 A1.3 Z^2"
    body, e = split_central(w, Z)
    assert format_word(body) == "A1.2 A1.3" and e == 2


def test_substitute_is_a_homomorphism_on_a_sample():
    m = {("x", 1): parse_word("x1 x2"), ("x", 2): parse_word("x2^-1")}
    w = parse_word("x1 x2 x1^-1")
    assert format_word(substitute(m, w)) == "x1 x2^-1 x1^-1"


def test_letter_powers_and_word_ops():
    assert letter(("s", 1), 3) == parse_word("s1^3")
    assert isinstance(parse_word("s1") + parse_word("s2"), Word)
    assert format_word(parse_word("s1 s2") ** 2) == "s1 s2 s1 s2"
    assert format_word(parse_word("s1 s2") ** -1) == "s2^-1 s1^-1"
