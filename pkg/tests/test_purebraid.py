from __future__ import annotations

import pytest

from braidaut.braid import BraidWord, braid_equal
from braidaut.purebraid import (
    A,
    PureWord,
    ZW,
    agen_sigma,
    comb,
    comb_word,
    is_pure,
    pure_equal_words,
    relation_instances,
    relation_suite_purebraid,
    sigma_to_aword,
    simplify_word,
    to_sigma,
    zword,
)
from braidaut.words import format_word, parse_word


def test_generator_variants_agree():
    assert braid_equal(agen_sigma(1, 3, 4, "left"), agen_sigma(1, 3, 4, "right"))
    with pytest.raises(ValueError):
        agen_sigma(2, 2, 3)


def test_is_pure():
    assert is_pure(BraidWord(3, parse_word("s1 s1")))
    assert not is_pure(BraidWord(3, parse_word("s1")))
    assert is_pure(to_sigma(PureWord(4, A(2, 4))))


def test_sigma_to_aword_frozen():
    assert format_word(sigma_to_aword(BraidWord(3, parse_word("s1 s1 s2 s2")))) == "A1.2 A2.3"


def test_relation_counts():
    # one instance per admissible (r,s,i,j); none exist for n = 2
    assert len(list(relation_instances(2))) == 0
    assert len(list(relation_instances(4))) == 11


@pytest.mark.parametrize("n", [3, 4, 5])
def test_relation_suite(n):
    assert relation_suite_purebraid(n).ok


def test_comb_generator_contract():
    cf = comb(to_sigma(PureWord(3, A(1, 3))))
    assert format_word(cf.level(3)) == "A1.3" and format_word(cf.level(2)) == "" and cf.e == 0
    for n in (3, 4, 5):
        for j in range(2, n + 1):
            for i in range(1, j):
                cf = comb(to_sigma(PureWord(n, A(i, j))))
                assert [len(cf.level(k)) for k in range(2, n + 1)] == [1 if k == j else 0 for k in range(2, n + 1)]


def test_comb_of_center_absorbs_z():
    cf = comb(zword(3)[1])
    assert (format_word(cf.level(3)), format_word(cf.level(2)), cf.e) == ("A1.3 A2.3", "A1.2", 0)
    assert comb_word(3, ZW()) == cf


def test_comb_empty_and_nonpure():
    cf = comb_word(4, parse_word(""))
    assert all(len(cf.level(k)) == 0 for k in range(2, 5)) and cf.e == 0
    with pytest.raises(ValueError):
        comb(BraidWord(3, parse_word("s1")))


def test_comb_reconstruction_frozen():
    w = parse_word("A1.3 A2.4^-1 Z")
    cf = comb_word(4, w)
    assert str(cf) == (
        "L4: A3.4^-1 A1.4^-1 A3.4 A1.4 A2.4^-1 A1.4^-1 A3.4^-1 A1.4 A3.4 A1.4 A2.4 A3.4; L3: A1.3^2 A2.3; L2: A1.2; e=0"
    )
    assert pure_equal_words(4, cf.to_word(), w)


def test_simplify_examples():
    assert format_word(simplify_word(3, parse_word("A1.2 A1.2^-1 A1.3"))) == "A1.3"
    assert format_word(simplify_word(3, parse_word("A1.2 A1.3 A2.3 Z^-1"))) == ""


def test_zword_forms_agree():
    za, zs = zword(4)
    assert format_word(za.word) == "A1.2 A1.3 A2.3 A1.4 A2.4 A3.4"
    assert braid_equal(to_sigma(za), zs)
