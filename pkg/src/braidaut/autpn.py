"""Automorphisms of the pure braid group P_n.

Every automorphism here is an :class:`~braidaut.endo.Endo` on
:class:`~braidaut.endo.PureGroup`; products use the right-action convention
``a . b = b o a``.  Symbols used in relation strings:

=========  ==========================================
``w<k>``   omega_k, 1 <= k <= n
``eps``    epsilon
``psi``    the transvection A1.2 -> A1.2 Z^-2
``phi<i>.<j>``  the transvection A1.2 -> A1.2 Z, Ai.j -> Ai.j Z^-1
``P``, ``sig``, ``U``  lifts of the Nielsen generators of Aut(F_2), n = 3
=========  ==========================================
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .braid import sigma
from .endo import (
    Endo,
    PureGroup,
    Relation,
    build_cases,
    conjugation_endo,
    endo_equal_case,
    image_case,
    product,
    relation_case,
    table_case,
    well_defined_case,
)
from .report import Budget, VerificationReport, run_cases
from .words import EMPTY, Word, Z, conjugate, free_reduce, invert, letter

# ---------------------------------------------------------------------------
# words


def a(i: int, j: int, k: int = 1) -> Word:
    return letter(("A", i, j), k)


def zz(k: int = 1) -> Word:
    return letter(Z, k)


def prod(words) -> Word:
    out = EMPTY
    for w in words:
        out = out + w
    return free_reduce(out)


def _pairs(n: int):
    return [(i, j) for j in range(2, n + 1) for i in range(1, j)]


def _check_n(n: int, least: int = 3) -> None:
    if n < least:
        raise ValueError(f"need n >= {least}, got {n}")


def phi_indices(n: int) -> list:
    return [p for p in _pairs(n) if p != (1, 2)]


# ---------------------------------------------------------------------------
# transvections


def transvection(n: int, t: dict, name: str = "") -> Endo:
    """``Ai.j -> Ai.j Z^t[i,j]``; the exponents must sum to 0 or -2."""
    total = sum(t.values())
    if total not in (0, -2):
        raise ValueError(f"transvection exponents sum to {total}, expected 0 or -2")
    for p in t:
        if p not in _pairs(n):
            raise ValueError(f"no generator A{p[0]}.{p[1]} in P_{n}")
    imgs = {("A", i, j): a(i, j) + zz(k) for (i, j), k in t.items() if k}
    return Endo.from_dict(PureGroup(n), imgs, 1 + total, name)


def transvection_inverse(n: int, t: dict, name: str = "") -> Endo:
    """Closed form: Z -> Z^e is kept and every exponent becomes ``-e t``."""
    e = 1 + sum(t.values())
    return transvection(n, {p: -e * k for p, k in t.items()}, name)


def psi_table(n: int) -> dict:
    return {(1, 2): -2}


def phi_table(i: int, j: int, n: int) -> dict:
    if (i, j) not in phi_indices(n):
        raise ValueError(f"phi{i}.{j} is not defined for n = {n}")
    return {(1, 2): 1, (i, j): -1}


def psi(n: int) -> Endo:
    return transvection(n, psi_table(n), "psi")


def phi(i: int, j: int, n: int) -> Endo:
    return transvection(n, phi_table(i, j, n), f"phi{i}.{j}")


def phi_inverse(i: int, j: int, n: int) -> Endo:
    return transvection_inverse(n, phi_table(i, j, n), f"phi{i}.{j}^-1")


# ---------------------------------------------------------------------------
# omega_k and epsilon


def _omega_generic(k: int, i: int, j: int) -> Word:
    if k == i - 1:
        return a(i - 1, j)
    if k == i < j - 1:
        return conjugate(a(i + 1, j), a(i, i + 1))
    if k == j - 1 > i:
        return a(i, j - 1)
    if k == j:
        return conjugate(a(i, j + 1), a(j, j + 1))
    return a(i, j)


def _omega_2(i: int, j: int) -> Word:
    if (i, j) == (1, 2):
        return conjugate(a(1, 3), a(2, 3)) + zz()
    if (i, j) == (1, 3):
        return a(1, 2) + zz(-1)
    if i == 2 and j >= 4:
        return conjugate(a(3, j), a(2, 3))
    if i == 3:
        return a(2, j)
    return a(i, j)


def _omega_n(n: int, i: int, j: int) -> Word:
    if j != n:
        return a(i, j)
    w = a(i, n) + prod(a(p, i) for p in range(1, i)) + prod(a(i, q) for q in range(i + 1, n))
    out = invert(w)
    if i <= 2:
        out = out + zz()
    return out


@lru_cache(maxsize=None)
def omega(k: int, n: int) -> Endo:
    _check_n(n)
    if not 1 <= k <= n:
        raise ValueError(f"omega index {k} outside 1..{n}")
    if k == n:
        f = lambda i, j: _omega_n(n, i, j)
    elif k == 2:
        f = _omega_2
    else:
        f = lambda i, j: _omega_generic(k, i, j)
    return Endo.from_dict(PureGroup(n), {("A", i, j): f(i, j) for i, j in _pairs(n)}, 1, f"w{k}")


@lru_cache(maxsize=None)
def epsilon(n: int) -> Endo:
    _check_n(n)
    imgs = {}
    for i, j in _pairs(n):
        if (i, j) == (1, 2):
            imgs[("A", 1, 2)] = a(1, 2, -1) + zz(2)
        else:
            w = prod(a(p, j) for p in range(i + 1, j))
            imgs[("A", i, j)] = conjugate(a(i, j, -1), w)
    return Endo.from_dict(PureGroup(n), imgs, 1, "eps")


@lru_cache(maxsize=None)
def conj_sigma(k: int, n: int, sign: int = 1) -> Endo:
    """``g -> s_k^-sign g s_k^sign``, read back through combing."""
    name = f"c(s{k})" if sign > 0 else f"c(s{k}^-1)"
    return conjugation_endo(PureGroup(n), sigma(k, sign), name)


def omega_inverse(k: int, n: int) -> Endo:
    """Inverse of omega_k from its decomposition; omega_n has none here."""
    if k == n:
        raise ValueError("omega_n is not a conjugation; its inverse is never needed")
    if k == 2:
        # omega_2 = phi1.3 . c(s2) as a product, so its inverse is c(s2^-1) . phi1.3^-1
        return product([conj_sigma(2, n, -1), phi_inverse(1, 3, n)]).named("w2^-1")
    return conj_sigma(k, n, -1).named(f"w{k}^-1")


# ---------------------------------------------------------------------------
# the lifts of Aut(F_2) to P_3


@lru_cache(maxsize=None)
def autp3_generators() -> dict:
    g = PureGroup(3)
    P = Endo.from_dict(g, {("A", 1, 3): a(2, 3), ("A", 2, 3): a(1, 3), ("A", 1, 2): a(2, 3) + a(1, 2) + a(2, 3, -1)}, 1, "P")
    sg = Endo.from_dict(g, {("A", 1, 3): a(1, 3, -1), ("A", 1, 2): a(1, 2) + a(1, 3, 2)}, 1, "sig")
    U = Endo.from_dict(g, {("A", 1, 3): a(1, 3) + a(2, 3), ("A", 1, 2): a(2, 3, -1) + a(1, 2)}, 1, "U")
    return {"P": P, "sig": sg, "U": U}


# ---------------------------------------------------------------------------
# symbol environments


def pure_env(n: int) -> tuple[dict, dict]:
    """Symbol -> endomorphism, and symbol -> closed-form inverse."""
    env = {"psi": psi(n)}
    inv = {"psi": psi(n)}
    for i, j in phi_indices(n):
        env[f"phi{i}.{j}"] = phi(i, j, n)
        inv[f"phi{i}.{j}"] = phi_inverse(i, j, n)
    if n >= 3:
        env["eps"] = epsilon(n)
        for k in range(1, n + 1):
            env[f"w{k}"] = omega(k, n)
    if n == 3:
        env.update(autp3_generators())
    return env, inv


def _ws(ks) -> str:
    return " ".join(f"w{k}" for k in ks)


def mcg_relations(n: int) -> list[Relation]:
    """Extended mapping class group relations among omega_1..omega_n and epsilon."""
    rels = []
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            rels.append(Relation.make(f"mcg:comm:w{i}:w{j}", f"w{i} w{j} w{i}^-1 w{j}^-1", f"w{i} w{j}", f"w{j} w{i}"))
    for i in range(1, n):
        x, y = f"w{i}", f"w{i + 1}"
        rels.append(Relation.make(f"mcg:braid:w{i}", f"{x} {y} {x} {y}^-1 {x}^-1 {y}^-1", f"{x} {y} {x}", f"{y} {x} {y}"))
    ring = _ws(range(1, n)) + f" w{n} w{n} " + _ws(range(n - 1, 0, -1))
    rels.append(Relation.make("mcg:ring", ring, ring))
    cyc = f"({_ws(range(1, n + 1))})^{n + 1}"
    rels.append(Relation.make("mcg:cycle", cyc, cyc))
    rels.append(Relation.make("mcg:eps2", "eps eps", "eps eps"))
    for k in range(1, n + 1):
        rels.append(Relation.make(f"mcg:epsw:{k}", f"(eps w{k})^2", f"(eps w{k})^2"))
    return rels


# ---------------------------------------------------------------------------
# mapping class group relations and the identities used to derive them


def tau_expected(n: int) -> dict:
    """Action of tau = w1 ... w(n-1) on each generator, in closed form."""
    out = {}
    for i, j in _pairs(n):
        if (i, j) == (1, 2):
            w = zz() + conjugate(a(1, n), prod(a(p, n) for p in range(2, n)))
        elif (i, j) == (2, 3):
            w = zz(-1) + a(1, 2)
        elif i == 1:
            x = prod(a(p, n) for p in range(j, n)) + invert(prod(a(p, j - 1) for p in range(1, j - 1)))
            w = conjugate(a(j - 1, n), x)
        else:
            w = a(i - 1, j - 1)
        out[("A", i, j)] = w
    return out


def omega_n_squared_expected(n: int) -> dict:
    out = {}
    for i, j in _pairs(n):
        if j <= n - 1:
            out[("A", i, j)] = a(i, j)
        else:
            x = prod(a(p, i) for p in range(1, i)) + prod(a(i, q) for q in range(i + 1, n))
            out[("A", i, j)] = conjugate(a(i, n), x)
    return out


def reverse_expected(n: int) -> dict:
    """Action of w(n-1) ... w1."""
    out = {}
    for i, j in _pairs(n):
        if (i, j) == (1, 2):
            w = a(2, 3) + zz()
        elif (i, j) == (1, n):
            w = a(1, 2) + zz(-1)
        elif j == n:
            w = a(1, i + 1)
        else:
            w = a(i + 1, j + 1)
        out[("A", i, j)] = w
    return out


def tau_power_1q_printed(n: int, p: int, q: int) -> Word:
    """The uncorrected closed form of tau^p(A1.q), 1 <= p <= q-1."""
    m = n - p + 1
    x = prod(a(s, m) for s in range(1, m)) + prod(a(m, t) for t in range(m + 1, n + 1))
    return conjugate(a(q - p, m), x)


def tau_power_1q(n: int, p: int, q: int) -> Word:
    """tau^p(A1.q); at q = n, p = n-1 the closed form needs a factor Z^-1.

    That step passes through tau(A2.3) = Z^-1 A1.2, and the central factor
    survives.  The printed value is right modulo the center only.
    """
    w = tau_power_1q_printed(n, p, q)
    if q == n and p == n - 1:
        w = w + zz(-1)
    return w


def prop31_cases(n: int) -> list:
    _check_n(n, 4)
    env, inv = pure_env(n)
    g = PureGroup(n)
    cases = build_cases(mcg_relations(n), env, inv, g, [])
    ws = [omega(k, n) for k in range(1, n + 1)]
    tau = ws[: n - 1]
    cases.append(table_case("proof:tau-table", f"{_ws(range(1, n))} on every generator", tau, tau_expected(n)))
    cases.append(table_case("proof:wn2-table", f"w{n} w{n} on every generator", [ws[-1]] * 2, omega_n_squared_expected(n)))
    cases.append(table_case("proof:reverse-table", f"{_ws(range(n - 1, 0, -1))} on every generator", tau[::-1], reverse_expected(n)))
    full = prod(a(p, n) for p in range(1, n))
    second = {("A", 1, j): conjugate(a(j - 1, n), full) for j in range(3, n + 1)}
    cases.append(table_case("proof:tau-a1j-second-form", "tau(A1.j) = A(j-1).n^(A1.n ... A(n-1).n), j >= 3", tau, second))
    top = a(n - 1, n)
    stated = [
        (n - 3, a(2, 3)),
        (n - 2, zz(-1) + a(1, 2)),
        (n - 1, conjugate(a(1, n), prod(a(p, n) for p in range(2, n)))),
        (n, top),
    ]
    for p, want in stated:
        cases.append(image_case(f"proof:tau^{p}:A{n - 1}.{n}", f"tau^{p}(A{n - 1}.{n}) = {want}", tau * p, top, want))
    for q in range(3, n + 1):
        for p in range(1, q):
            want = tau_power_1q(n, p, q)
            cases.append(image_case(f"proof:tau^{p}:A1.{q}", f"tau^{p}(A1.{q}) = {want}", tau * p, a(1, q), want))
        cases.append(image_case(f"proof:tau^q:A1.{q}", f"tau^{q}(A1.{q}) = A{n - q + 1}.{n}", tau * q, a(1, q), a(n - q + 1, n)))
    taun = f"({_ws(range(1, n))})^{n}"
    cases.append(relation_case(Relation.make("proof:tau^n", taun, taun), env, inv, g))
    cases.extend(_epsilon_product_cases(n))
    for k in range(1, n + 1):
        cases.append(well_defined_case(f"wd:w{k}", omega(k, n)))
    cases.append(well_defined_case("wd:eps", epsilon(n)))
    for k in range(1, n):
        if k == 2:
            cases.append(endo_equal_case("conj:w2", "w2 = phi1.3 . c(s2)", omega(2, n), product([phi(1, 3, n), conj_sigma(2, n)])))
        else:
            cases.append(endo_equal_case(f"conj:w{k}", f"w{k} = c(s{k})", omega(k, n), conj_sigma(k, n)))
    return cases


def _epsilon_product_cases(n: int) -> list:
    e = [epsilon(n)]
    out = []
    for j in range(3, n + 1):
        for i in range(2, j):
            w = prod(a(p, j) for p in range(i, j))
            out.append(image_case(f"proof:eps:col:{i}.{j}", f"eps({w}) = ({w})^-1", e, w, invert(w)))
    for i in range(2, n):
        for j in range(i + 1, n + 1):
            w = prod(a(i, q) for q in range(i + 1, j + 1))
            out.append(image_case(f"proof:eps:row:{i}.{j}", f"eps({w}) = ({w})^-1", e, w, invert(w)))
    for j in range(2, n + 1):
        w = prod(a(1, q) for q in range(2, j + 1))
        out.append(image_case(f"proof:eps:row:1.{j}", f"eps({w}) = ({w})^-1 Z^2", e, w, invert(w) + zz(2)))
    return out


def suite_prop31(n: int, budget: Budget | None = None, jobs: int = 1) -> VerificationReport:
    return run_cases("prop31", {"n": n}, prop31_cases(n), budget, jobs)


# ---------------------------------------------------------------------------
# the full presentation of Aut(P_n)


def _phi_sym(i: int, j: int, power: int = 1) -> str:
    s = f"phi{i}.{j}"
    return s if power == 1 else f"{s}^-1"


def omega_phi_rhs(k: int, n: int, i: int, j: int) -> str:
    """Right-hand side of ``w_k^-1 phi_{i,j} w_k`` as a formal product."""
    if k == 1:
        if i == 1:
            return _phi_sym(2, j)
        if i == 2:
            return _phi_sym(1, j)
        return _phi_sym(i, j)
    if k == 2:
        if (i, j) == (1, 3):
            return "phi1.3^-1"
        if i == 2 and j > 3:
            return f"phi1.3^-1 {_phi_sym(3, j)}"
        if i == 3:
            return f"phi1.3^-1 {_phi_sym(2, j)}"
        return f"phi1.3^-1 {_phi_sym(i, j)}"
    if k == n:
        if j < n:
            return f"{_phi_sym(i, j)} {_phi_sym(1, n)} {_phi_sym(2, n)} {_phi_sym(i, n, -1)} {_phi_sym(j, n, -1)}"
        return f"{_phi_sym(i, n, -1)} {_phi_sym(1, n)} {_phi_sym(2, n)}"
    if k == i - 1:
        return _phi_sym(i - 1, j)
    if k == i < j - 1:
        return _phi_sym(i + 1, j)
    if k == j - 1 > i:
        return _phi_sym(i, j - 1)
    if k == j:
        return _phi_sym(i, j + 1)
    return _phi_sym(i, j)


def thm32_relations(n: int) -> list[Relation]:
    rels = list(mcg_relations(n))
    phis = phi_indices(n)
    rels.append(Relation.make("tv:psi2", "psi psi", "psi psi"))
    for i, j in phis:
        f = _phi_sym(i, j)
        rels.append(Relation.make(f"tv:psiphi:{i}.{j}", f"psi {f} psi {f}", f"psi {f} psi", f"{f}^-1"))
    for (i, j), (p, q) in combinations(phis, 2):
        f, h = _phi_sym(i, j), _phi_sym(p, q)
        rels.append(Relation.make(f"tv:comm:{i}.{j}:{p}.{q}", f"{f} {h} {f}^-1 {h}^-1", f"{f} {h}", f"{h} {f}"))
    rels.append(Relation.make("act:eps:psi", "eps psi eps psi^-1", "eps psi eps", "psi"))
    for k in range(1, n + 1):
        rels.append(Relation.make(f"act:w{k}:psi", f"w{k}^-1 psi w{k} psi^-1", f"psi w{k}", f"w{k} psi"))
    for i, j in phis:
        f = _phi_sym(i, j)
        rels.append(Relation.make(f"act:eps:{i}.{j}", f"eps {f} eps {f}", f"eps {f} eps", f"{f}^-1"))
    for k in range(1, n + 1):
        for i, j in phis:
            f = _phi_sym(i, j)
            rhs = omega_phi_rhs(k, n, i, j)
            rels.append(Relation.make(f"act:w{k}:{i}.{j}", f"w{k}^-1 {f} w{k} ({rhs})^-1", f"{f} w{k}", f"w{k} {rhs}"))
    return rels


def thm32_cases(n: int, skipped: list | None = None) -> list:
    if n < 4:
        raise ValueError(f"the presentation is stated for n >= 4, got n = {n}")
    env, inv = pure_env(n)
    return build_cases(thm32_relations(n), env, inv, PureGroup(n), skipped if skipped is not None else [])


def suite_thm32(n: int, budget: Budget | None = None, jobs: int = 1) -> VerificationReport:
    skipped: list = []
    cases = thm32_cases(n, skipped)
    params = {"n": n}
    if skipped:
        params["skipped"] = skipped
    return run_cases("thm32", params, cases, budget, jobs)


# ---------------------------------------------------------------------------
# Aut(P_3)


def autp3_relations() -> list[Relation]:
    R = Relation.make
    return [
        R("r01:P^2", "P P", "P P"),
        R("r02:sig^2", "sig sig", "sig sig"),
        R("r03:(sig P)^4", "(sig P)^4", "(sig P)^4"),
        R("r04:(P sig P U)^2", "(P sig P U)^2", "(P sig P U)^2"),
        R("r05:(U P sig)^3", "(U P sig)^3", "(U P sig)^3"),
        R("r06:[U,sig U sig]", "U sig U sig U^-1 sig^-1 U^-1 sig^-1", "U sig U sig", "sig U sig U"),
        R("r07:[U,psi]", "U psi U^-1 psi^-1", "U psi", "psi U"),
        R("r08:[P,psi]", "P psi P^-1 psi^-1", "P psi", "psi P"),
        R("r09:[sig,psi]", "sig psi sig^-1 psi^-1", "sig psi", "psi sig"),
        R("r10:[U,phi1.3]", "U phi1.3 U^-1 phi1.3^-1", "U phi1.3", "phi1.3 U"),
        R("r11:P phi1.3 P phi2.3^-1", "P phi1.3 P phi2.3^-1", "P phi1.3 P", "phi2.3"),
        R("r12:(sig phi1.3)^2", "(sig phi1.3)^2", "(sig phi1.3)^2"),
        R("r13:psi^2", "psi psi", "psi psi"),
        R("r14a:(psi phi1.3)^2", "(psi phi1.3)^2", "(psi phi1.3)^2"),
        R("r14b:(psi phi2.3)^2", "(psi phi2.3)^2", "(psi phi2.3)^2"),
        R("r15:[phi1.3,phi2.3]", "phi1.3 phi2.3 phi1.3^-1 phi2.3^-1", "phi1.3 phi2.3", "phi2.3 phi1.3"),
        R("r16:phi1.3 [phi2.3,U]", "phi1.3 phi2.3 U phi2.3^-1 U^-1", "phi1.3 phi2.3 U", "U phi2.3"),
        R("r17:P phi2.3 P phi1.3^-1", "P phi2.3 P phi1.3^-1", "P phi2.3 P", "phi1.3"),
        R("r18:[sig,phi2.3]", "sig phi2.3 sig^-1 phi2.3^-1", "sig phi2.3", "phi2.3 sig"),
    ]


def autp3_cases() -> list:
    env, inv = pure_env(3)
    cases = build_cases(autp3_relations(), env, inv, PureGroup(3), [])
    for name in ("P", "sig", "U"):
        cases.append(well_defined_case(f"wd:{name}", env[name]))
    return cases


def suite_autp3(budget: Budget | None = None, jobs: int = 1) -> VerificationReport:
    return run_cases("autp3", {"n": 3}, autp3_cases(), budget, jobs)
