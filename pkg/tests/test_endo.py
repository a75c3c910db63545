from __future__ import annotations

import pytest

from braidaut.autmono import Psi, Upsilon, mono_transvection_inverse, upsilon_t
from braidaut.autpn import phi, phi_inverse, psi
from braidaut.endo import (
    MonoGroup,
    PureGroup,
    Relation,
    compose,
    endo_diff,
    endo_equal,
    evaluate,
    formal,
    formal_str,
    formally_equivalent,
    identity,
    is_well_defined,
    product,
    z_consistent,
)
from braidaut.words import format_word, letter


def test_formal_expands_powers():
    assert formal_str(formal("rt0 rt1^-1 (et rt1)^2")) == "rt0 rt1^-1 et rt1 et rt1"


def test_formal_equivalence_of_relator_and_equation():
    assert formally_equivalent(formal("Dt rt0 Dt X"), formal("X Dt rt0 Dt"), formal(""))


def test_transvection_tables():
    p = Psi(2, 3)
    assert p.e == -1
    assert format_word(p.table[("C", 1)]) == "C1 Zrn^-2"
    assert format_word(p.table[("C", 2)]) == "C2"
    u = Upsilon(2, 2, 3)
    assert u.e == 1
    assert format_word(u.table[("C", 1)]) == "C1 Zrn" and format_word(u.table[("C", 2)]) == "C2 Zrn^-1"


def test_involutions_and_inverses():
    assert endo_equal(product([Psi(2, 3)] * 2), identity(MonoGroup(2, 3)))
    inv = mono_transvection_inverse(2, 3, upsilon_t(2, 2, 3))
    assert endo_equal(product([Upsilon(2, 2, 3), inv]), identity(MonoGroup(2, 3)))
    assert endo_equal(product([psi(4)] * 2), identity(PureGroup(4)))
    assert endo_equal(product([phi(1, 3, 4), phi_inverse(1, 3, 4)]), identity(PureGroup(4)))


def test_product_applies_left_factor_first():
    a, b = phi(1, 3, 4), psi(4)
    ab = product([a, b])
    g = PureGroup(4)
    for x in g.generators:
        assert g.equal(ab.table[x], b.apply(a.table[x]))
        assert g.equal(evaluate([a, b], letter(x)), ab.table[x])
    assert compose(a, b).e == a.e * b.e


def test_transvections_are_well_defined_and_fix_center():
    for e in (Psi(2, 3), Upsilon(2, 2, 3), psi(4), phi(1, 3, 4)):
        assert is_well_defined(e)
        assert z_consistent(e)


def test_relation_make_checks_the_rewriting():
    rel = Relation.make("r", "Psi Ups2 Psi Ups2", "Psi Ups2", "Ups2^-1 Psi^-1")
    assert rel.text == "Psi Ups2 = Ups2^-1 Psi^-1"
    with pytest.raises(ValueError):
        Relation.make("bad", "Psi Ups2 Ups3", "Psi Ups3 Ups2")
    # a cyclic rotation is accepted
    assert Relation.make("rot", "Psi Ups2", "Ups2 Psi").id == "rot"


def test_endo_diff_lists_every_differing_generator():
    g = PureGroup(4)
    assert endo_diff(psi(4), psi(4)) == []
    assert endo_diff(psi(4), identity(g)) == ["central exponent -1 vs 1"] + [
        line for line in endo_diff(psi(4), identity(g)) if not line.startswith("central")
    ]
