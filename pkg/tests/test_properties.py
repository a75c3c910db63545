"""Property tests for the stated invariants."""

from __future__ import annotations

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from braidaut.braid import BraidWord, artin_equal, braid_equal, garside_nf, is_left_weighted
from braidaut.monomial import MonoWord, image_is_pure, mono_canonical_word, mono_equal_words, mono_generators
from braidaut.purebraid import comb_word, pure_equal_words, simplify_word, zword
from braidaut.suites import _relators, rewrite_braid_word
from braidaut.words import Word, free_reduce, invert, is_reduced, letter, substitute

SETTINGS = settings(max_examples=60, deadline=None)


def sigma_words(n, max_len=10):
    syl = st.tuples(st.integers(1, n - 1).map(lambda i: ("s", i)), st.sampled_from([1, -1]))
    return st.lists(syl, max_size=max_len).map(Word)


def pure_words(n, max_len=8):
    gens = [("A", i, j) for j in range(2, n + 1) for i in range(1, j)]
    syl = st.tuples(st.sampled_from(gens), st.sampled_from([1, -1]))
    return st.lists(syl, max_size=max_len).map(free_reduce)


@SETTINGS
@given(sigma_words(4, 20))
def test_free_reduce_idempotent(w):
    r = free_reduce(w)
    assert free_reduce(r) == r and is_reduced(r)


@SETTINGS
@given(sigma_words(4, 20))
def test_invert_is_an_involution_and_cancels(w):
    assert invert(invert(w)) == w
    assert free_reduce(w + invert(w)) == Word()


@SETTINGS
@given(sigma_words(3, 10), sigma_words(3, 10))
def test_substitute_is_a_homomorphism(u, v):
    m = {("s", 1): Word(letter(("s", 2)) + letter(("s", 1), -1)), ("s", 2): letter(("s", 1), 2)}
    assert substitute(m, u + v) == free_reduce(substitute(m, u) + substitute(m, v))


@SETTINGS
@given(sigma_words(4, 12), st.integers(0, 2**16))
def test_garside_form_is_canonical_under_braid_moves(w, seed):
    v = rewrite_braid_word(random.Random(seed), w, 4)
    a, b = garside_nf(BraidWord(4, w)), garside_nf(BraidWord(4, v))
    assert (a.inf, a.factor_words()) == (b.inf, b.factor_words())
    assert is_left_weighted(a)


@SETTINGS
@given(sigma_words(4, 10), sigma_words(4, 10))
def test_two_word_problem_oracles_agree(u, v):
    U, V = BraidWord(4, u), BraidWord(4, v)
    assert braid_equal(U, V) == artin_equal(U, V)


@SETTINGS
@given(st.integers(2, 6))
def test_center_commutes_with_every_sigma(n):
    _, z = zword(n)
    for k in range(1, n):
        s = letter(("s", k))
        assert braid_equal(BraidWord(n, z.word + s), BraidWord(n, s + z.word))


@SETTINGS
@given(st.sampled_from([3, 4, 5]).flatmap(lambda n: st.tuples(st.just(n), pure_words(n), st.integers(0, 2**16))))
def test_comb_is_canonical(data):
    n, u, seed = data
    rng = random.Random(seed)
    rel = rng.choice(_relators(n))
    p = rng.randint(0, len(u))
    v = free_reduce(u[:p] + rel + u[p:])
    assert comb_word(n, u) == comb_word(n, v)


@SETTINGS
@given(st.sampled_from([3, 4]).flatmap(lambda n: st.tuples(st.just(n), pure_words(n), pure_words(n))))
def test_comb_separates_distinct_elements(data):
    n, u, v = data
    assert (comb_word(n, u) == comb_word(n, v)) == pure_equal_words(n, u, v)


@SETTINGS
@given(st.sampled_from([3, 4, 5]).flatmap(lambda n: st.tuples(st.just(n), pure_words(n), st.integers(-2, 2))))
def test_comb_reconstructs_its_input(data):
    n, u, e = data
    w = u + letter(("Z",), e)
    assert pure_equal_words(n, comb_word(n, w).to_word(), w)


@SETTINGS
@given(st.sampled_from([3, 4]).flatmap(lambda n: st.tuples(st.just(n), pure_words(n, 10))))
def test_simplify_preserves_class_never_lengthens_and_is_idempotent(data):
    n, w = data
    s = simplify_word(n, w)
    assert len(s) <= len(w)
    assert pure_equal_words(n, s, w)
    assert simplify_word(n, s) == s


def mono_words(r, n, max_len=6):
    syl = st.tuples(st.sampled_from(mono_generators(r, n)), st.sampled_from([1, -1]))
    return st.lists(syl, max_size=max_len).map(free_reduce)


@SETTINGS
@given(mono_words(2, 3))
def test_mono_images_are_pure(w):
    assert image_is_pure(MonoWord(2, 3, w))


@SETTINGS
@given(mono_words(2, 2), mono_words(2, 2))
def test_mono_canonical_word_decides_equality(u, v):
    same = mono_canonical_word(2, 2, u) == mono_canonical_word(2, 2, v)
    assert same == mono_equal_words(2, 2, u, v)
    assert mono_equal_words(2, 2, u, mono_canonical_word(2, 2, u))
