from __future__ import annotations

import pytest

from braidaut.braid import (
    BraidWord,
    artin_equal,
    artin_images,
    braid_equal,
    braid_is_identity,
    garside_nf,
    halftwist,
    is_left_weighted,
    permutation_of,
)
from braidaut.words import format_word, parse_word


def bw(n, text):
    return BraidWord(n, parse_word(text))


def test_halftwist_normal_form():
    nf = garside_nf(bw(3, "s1 s2 s1"))
    assert nf.inf == 1 and nf.factor_words() == []
    assert format_word(halftwist(4).word) == "s1 s2 s1 s3 s2 s1"


def test_frozen_normal_form_with_negative_infimum():
    nf = garside_nf(bw(4, "s1 s2^-1 s3 s1"))
    assert nf.inf == -1
    assert [format_word(w) for w in nf.factor_words()] == ["s1 s2 s3 s2", "s2 s3 s1", "s1"]
    assert is_left_weighted(nf)


def test_braid_relation_and_commutation():
    assert braid_equal(bw(3, "s1 s2 s1"), bw(3, "s2 s1 s2"))
    assert braid_equal(bw(4, "s1 s3"), bw(4, "s3 s1"))
    assert not braid_equal(bw(3, "s1 s2"), bw(3, "s2 s1"))
    assert braid_is_identity(bw(3, "s1 s2 s2^-1 s1^-1"))


def test_permutation():
    p = permutation_of(bw(4, "s1 s2 s3"))
    assert p.images == (4, 1, 2, 3)
    assert p.cycles() == "(1 4 3 2)"
    assert permutation_of(bw(3, "s1 s1")).images == (1, 2, 3)


def test_artin_action_of_s1():
    imgs = artin_images(bw(3, "s1"))
    assert format_word(imgs[("x", 1)]) == "x1 x2 x1^-1"
    assert format_word(imgs[("x", 2)]) == "x1"
    assert format_word(imgs[("x", 3)]) == "x3"


def test_oracles_agree_on_known_pairs():
    for u, v, same in [("s1 s2 s1", "s2 s1 s2", True), ("s1 s2", "s2 s1", False), ("s1^2 s2", "s2 s1^2", False)]:
        assert braid_equal(bw(3, u), bw(3, v)) is same
        assert artin_equal(bw(3, u), bw(3, v)) is same


def test_letter_out_of_range():
    with pytest.raises(ValueError):
        bw(3, "s3")
