from __future__ import annotations

import pytest

from braidaut.autpn import (
    a,
    autp3_generators,
    conj_sigma,
    epsilon,
    omega,
    omega_inverse,
    phi,
    suite_autp3,
    suite_prop31,
    suite_thm32,
    tau_power_1q,
    tau_power_1q_printed,
    zz,
)
from braidaut.endo import PureGroup, endo_equal, evaluate, identity, is_well_defined, product, z_consistent
from braidaut.words import format_word


def test_omega2_order():
    n = 4
    assert endo_equal(omega(2, n), product([phi(1, 3, n), conj_sigma(2, n)]))
    assert not endo_equal(omega(2, n), product([conj_sigma(2, n), phi(1, 3, n)]))


@pytest.mark.parametrize("k", [1, 3])
def test_omega_k_is_conjugation(k):
    assert endo_equal(omega(k, 4), conj_sigma(k, 4))


def test_omega_inverses():
    g = PureGroup(4)
    for k in (1, 2, 3):
        assert endo_equal(product([omega(k, 4), omega_inverse(k, 4)]), identity(g))
    with pytest.raises(ValueError):
        omega_inverse(4, 4)


def test_tau_power_erratum_is_exactly_z_inverse():
    # the stated tau^(n-1)(A1.n) differs from the computed one by Z^-1, nowhere else
    for n in (4, 5):
        for q in range(3, n + 1):
            for p in range(1, q):
                diff = tau_power_1q(n, p, q) != tau_power_1q_printed(n, p, q)
                assert diff == (q == n and p == n - 1)
    printed = tau_power_1q_printed(4, 3, 4)
    assert format_word(printed) == "A2.4^-1 A2.3^-1 A1.2 A2.3 A2.4"
    assert tau_power_1q(4, 3, 4) == printed + zz(-1)
    tau = [omega(k, 4) for k in range(1, 4)]
    g = PureGroup(4)
    got = evaluate(tau * 3, a(1, 4))
    assert g.equal(got, tau_power_1q(4, 3, 4))
    assert not g.equal(got, printed)


def test_epsilon_frozen_row():
    assert format_word(epsilon(4).table[("A", 1, 2)]) == "A1.2^-1 Z^2"
    assert is_well_defined(epsilon(4)) and z_consistent(epsilon(4))


def test_autp3_generators_are_named():
    gens = autp3_generators()
    assert {"P", "sig", "U"} <= set(gens)


@pytest.mark.parametrize("n", [4, 5])
def test_prop31_suite(n):
    rep = suite_prop31(n)
    assert rep.ok, rep.to_text()


def test_thm32_suite():
    rep = suite_thm32(4)
    assert rep.ok, rep.to_text()


def test_autp3_suite():
    assert suite_autp3().ok


def test_small_n_rejected():
    with pytest.raises(ValueError):
        suite_prop31(3)
