from __future__ import annotations

import pytest

from braidaut.braid import BraidWord, braid_equal
from braidaut.monomial import (
    MonoWord,
    RhoWord,
    center_lemma_suite,
    image_is_pure,
    mono_canonical_word,
    mono_equal_words,
    mono_gen_rho,
    mono_generators,
    mono_to_braid,
    mono_to_pure_word,
    monomial_relations,
    rho_embed,
)
from braidaut.words import format_word, letter, parse_word


def test_generator_rho_words_frozen():
    assert format_word(mono_gen_rho(("C", 2), 2, 3).word) == "r1 r0^2 r1^-1"
    assert format_word(mono_gen_rho(("A", 1, 2, 1), 2, 3).word) == "r0^-1 r1^2 r0"


def test_direct_image_frozen():
    assert format_word(mono_to_pure_word(2, 2, parse_word("C1 A1.2.1 Zrn"))) == "A1.2 A2.3 A1.2 Z^2"


def test_central_word_equals_zrn():
    # Z_{2,2} = C1 A^(1) C2 A^(2)
    assert mono_equal_words(2, 2, parse_word("C1 A1.2.1 C2 A1.2.2"), parse_word("Zrn"))
    assert not mono_equal_words(2, 2, parse_word("C1 C2"), parse_word("C2 C1"))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_monomial_relations_hold_in_the_embedding(n):
    for lhs, rhs in monomial_relations(n):
        assert braid_equal(rho_embed(RhoWord(2, n, lhs)), rho_embed(RhoWord(2, n, rhs)))


@pytest.mark.parametrize("r,n", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_routes_agree_and_images_are_pure(r, n):
    for l in mono_generators(r, n):
        w = MonoWord(r, n, letter(l))
        assert braid_equal(mono_to_braid(w, "direct"), mono_to_braid(w, "via_rho"))
        assert image_is_pure(w)


def test_canonical_word_is_a_class_invariant():
    u = parse_word("C1 C2 C1^-1")
    cu = mono_canonical_word(2, 2, u)
    assert mono_equal_words(2, 2, u, cu)
    assert mono_canonical_word(2, 2, parse_word("C1 A1.2.1 A1.2.1^-1 C2 C1^-1")) == cu


@pytest.mark.parametrize("r,n", [(2, 2), (2, 3), (3, 2)])
def test_center_lemma(r, n):
    assert center_lemma_suite(r, n).ok


def test_unknown_route_rejected():
    with pytest.raises(ValueError):
        mono_to_braid(MonoWord(2, 2, parse_word("C1")), "sideways")
    with pytest.raises(ValueError):
        mono_gen_rho(("C", 3), 2, 2)


def test_embedding_lands_in_the_right_group():
    img = mono_to_braid(MonoWord(2, 3, parse_word("C3")))
    assert isinstance(img, BraidWord) and img.n == 4
