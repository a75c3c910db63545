from __future__ import annotations

import pytest

from braidaut.autmono import (
    CORRECTED_ROWS,
    Psi,
    Upsilon,
    delta_braid,
    delta_tilde,
    delta_tilde_composite,
    eps_tilde,
    eps_tilde_composite,
    nielsen_lifts,
    rho_tilde,
    rho_tilde_composite,
    suite_prop43,
    suite_prop46,
    suite_thm45,
    table_endos,
)
from braidaut.endo import MonoGroup, endo_diff, endo_equal, identity, is_well_defined, product, z_consistent
from braidaut.words import format_word


def _diff_keys(a, b):
    return sorted(line.split(":")[0] for line in endo_diff(a, b))


@pytest.mark.parametrize("r,n", [(2, 3), (3, 3), (2, 4)])
def test_tables_equal_composites(r, n):
    for k in range(n):
        assert endo_equal(rho_tilde(k, r, n), rho_tilde_composite(k, r, n)), f"rt{k}"
    assert endo_equal(eps_tilde(r, n), eps_tilde_composite(r, n))
    assert endo_equal(delta_tilde(r, n), delta_tilde_composite(r, n))


@pytest.mark.parametrize("r,n", [(2, 3), (3, 3)])
def test_tables_are_well_defined_and_fix_center(r, n):
    for e in table_endos(r, n):
        assert is_well_defined(e), e.name
        assert z_consistent(e), e.name


def test_printed_rho1_rows_differ_exactly_where_corrected():
    assert _diff_keys(rho_tilde(1, 2, 3, printed=True), rho_tilde(1, 2, 3)) == ["A1.3.2", "A2.3.2"]
    assert _diff_keys(rho_tilde(1, 3, 3, printed=True), rho_tilde(1, 3, 3)) == ["A1.3.3", "A2.3.3"]
    assert _diff_keys(rho_tilde(1, 2, 4, printed=True), rho_tilde(1, 2, 4)) == ["A1.3.2", "A1.4.2", "A2.3.2", "A2.4.2"]
    for r, n in [(2, 3), (3, 3), (2, 4)]:
        assert not is_well_defined(rho_tilde(1, r, n, printed=True))


def test_printed_rho2_fails_from_four_strands():
    assert endo_diff(rho_tilde(2, 2, 3, printed=True), rho_tilde(2, 2, 3)) == []
    assert _diff_keys(rho_tilde(2, 2, 4, printed=True), rho_tilde(2, 2, 4)) == ["A2.4.2", "A3.4.1"]
    assert not is_well_defined(rho_tilde(2, 2, 4, printed=True))


@pytest.mark.parametrize("r,n,count", [(2, 3, 3), (3, 3, 6)])
def test_printed_delta_is_not_an_involution(r, n, count):
    printed = delta_tilde(r, n, printed=True)
    assert len(endo_diff(printed, delta_tilde(r, n))) == count
    assert not is_well_defined(printed)
    assert not endo_equal(product([printed] * 2), identity(MonoGroup(r, n)))
    assert endo_equal(product([delta_tilde(r, n)] * 2), identity(MonoGroup(r, n)))


def test_corrected_rows_documented():
    assert len(CORRECTED_ROWS) == 5


def test_composite_order_matters_for_delta():
    r, n = 2, 3
    assert endo_equal(delta_tilde(r, n), product([delta_braid(r, n), Psi(r, n), Upsilon(n, r, n)]))
    assert not endo_equal(delta_tilde(r, n), product([Upsilon(n, r, n), Psi(r, n), delta_braid(r, n)]))


def test_p22_printed_lift_does_not_fix_center():
    printed = nielsen_lifts(2, printed=True)["P"]
    assert format_word(printed.table[("C", 1)]) == "C1 A1.2.1 A1.2.2 A1.2.1^-1 A1.2.2^-1"
    assert not z_consistent(printed)
    assert not is_well_defined(printed)
    fixed = nielsen_lifts(2)["P"]
    assert z_consistent(fixed) and is_well_defined(fixed)


@pytest.mark.parametrize("r", [3, 4])
def test_printed_lifts_agree_for_larger_r(r):
    printed, lifts = nielsen_lifts(r, printed=True), nielsen_lifts(r)
    for name in ("P", "Q", "sig", "U"):
        assert endo_equal(printed[name], lifts[name]), name


@pytest.mark.parametrize("r", [2, 3, 4])
def test_prop46_suite(r):
    rep = suite_prop46(r)
    assert rep.ok, rep.to_text()


def test_normalizer_and_presentation_suites():
    for run in (suite_prop43, suite_thm45):
        rep = run(2, 3)
        assert rep.ok, rep.to_text()


def test_three_strand_minimum():
    with pytest.raises(ValueError):
        suite_prop43(2, 2)
