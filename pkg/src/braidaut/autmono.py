"""Automorphisms of the pure monomial braid group P(r,n).

The images of ``rho~_k``, ``eps~`` and ``Delta~`` are entered case by case
from their published tables.  Independently, the same automorphisms are
rebuilt from their definitions as composites of conjugations, transvections
and the automorphisms ``eps``, ``Delta`` of B(r,n), and the two are compared
generator by generator.

Symbols used in relation strings:

=============  ==============================================
``rt<k>``      rho~_k, 0 <= k <= n-1
``et``, ``Dt``  eps~ and Delta~
``Psi``        C1 -> C1 Zrn^-2
``Ups<i>``     C1 -> C1 Zrn, Ci -> Ci Zrn^-1
``Phi<i>.<j>.<p>``  C1 -> C1 Zrn, Ai.j.p -> Ai.j.p Zrn^-1
``P Q sig U``  lifts of the Nielsen generators of Aut(F_{r+1}), n = 2
=============  ==============================================
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .braid import sigma
from .endo import (
    Endo,
    MonoGroup,
    Relation,
    build_cases,
    conjugation_endo,
    endo_equal_case,
    product,
    table_case,
    well_defined_case,
    z_consistent,
)
from .monomial import abrkt, dword, mono_gen_rho, rho_to_mono_word, uword, vword
from .report import Budget, CaseSpec, VerificationReport, run_cases
from .words import EMPTY, ZRN, Word, conjugate, free_reduce, invert, letter, substitute

# ---------------------------------------------------------------------------
# words


def c(j: int, k: int = 1) -> Word:
    return letter(("C", j), k)


def zr(k: int = 1) -> Word:
    return letter(ZRN, k)


def _word(parts) -> Word:
    out = EMPTY
    for w in parts:
        out = out + w
    return free_reduce(out)


class _Indices:
    """Range-checked letter constructor for one (r, n)."""

    def __init__(self, r: int, n: int):
        self.r, self.n = r, n

    def a(self, i: int, j: int, q: int, k: int = 1) -> Word:
        if not (1 <= i < j <= self.n and 1 <= q <= self.r):
            raise ValueError(f"derived index A{i}.{j}.{q} outside P({self.r},{self.n})")
        return letter(("A", i, j, q), k)

    def c(self, j: int, k: int = 1) -> Word:
        if not 1 <= j <= self.n:
            raise ValueError(f"derived index C{j} outside P({self.r},{self.n})")
        return c(j, k)

    def d(self, k: int) -> Word:
        if not 1 <= k <= self.n:
            raise ValueError(f"derived index D{k} outside P({self.r},{self.n})")
        return dword(k, self.r)

    def v(self, i: int, j: int, q: int) -> Word:
        return vword(i, j, q)

    def run(self, i: int, j: int, lo: int, hi: int) -> Word:
        """``A_{i,j}^(lo) ... A_{i,j}^(hi)`` (empty when hi < lo)."""
        return _word(self.a(i, j, q) for q in range(lo, hi + 1))


def _check(r: int, n: int, least_n: int = 1) -> None:
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    if n < least_n:
        raise ValueError(f"need n >= {least_n}, got {n}")


# ---------------------------------------------------------------------------
# transvections


def mono_transvection(r: int, n: int, t: dict, name: str = "") -> Endo:
    """``x -> x Zrn^t[x]`` for generator letters x; the exponents sum to 0 or -2."""
    total = sum(t.values())
    if total not in (0, -2):
        raise ValueError(f"transvection exponents sum to {total}, expected 0 or -2")
    g = MonoGroup(r, n)
    gens = set(g.generators)
    for x in t:
        if x not in gens:
            raise ValueError(f"{x} is not a generator of {g.label}")
    imgs = {x: letter(x) + zr(k) for x, k in t.items() if k}
    return Endo.from_dict(g, imgs, 1 + total, name)


def mono_transvection_inverse(r: int, n: int, t: dict, name: str = "") -> Endo:
    e = 1 + sum(t.values())
    return mono_transvection(r, n, {x: -e * k for x, k in t.items()}, name)


def psi_t(r: int, n: int) -> dict:
    return {("C", 1): -2}


def upsilon_t(i: int, r: int, n: int) -> dict:
    if not 2 <= i <= n:
        raise ValueError(f"Upsilon index {i} outside 2..{n}")
    return {("C", 1): 1, ("C", i): -1}


def phi_t(i: int, j: int, p: int, r: int, n: int) -> dict:
    if not (1 <= i < j <= n and 1 <= p <= r):
        raise ValueError(f"Phi index {i}.{j}.{p} outside P({r},{n})")
    return {("C", 1): 1, ("A", i, j, p): -1}


def Psi(r: int, n: int) -> Endo:
    return mono_transvection(r, n, psi_t(r, n), "Psi")


def Upsilon(i: int, r: int, n: int) -> Endo:
    return mono_transvection(r, n, upsilon_t(i, r, n), f"Ups{i}")


def Phi(i: int, j: int, p: int, r: int, n: int) -> Endo:
    return mono_transvection(r, n, phi_t(i, j, p, r, n), f"Phi{i}.{j}.{p}")


def phi_triples(r: int, n: int) -> list:
    return [(i, j, p) for j in range(2, n + 1) for i in range(1, j) for p in range(1, r + 1)]


# ---------------------------------------------------------------------------
# the published tables


def _gens(r: int, n: int):
    yield from (("C", j) for j in range(1, n + 1))
    yield from (("A", i, j, q) for j in range(2, n + 1) for i in range(1, j) for q in range(1, r + 1))


def _rho0_image(x, I: _Indices) -> Word:
    r = I.r
    if x[0] == "C":
        j = x[1]
        if j == 1:
            return I.c(1)
        return conjugate(I.c(j), invert(I.a(1, j, r - 1)))
    _, i, j, q = x
    if i == 1 and q != 1:
        return I.a(1, j, q - 1)
    if i == 1:
        return conjugate(I.a(1, j, r), I.c(1))
    return I.a(i, j, q)


def _rho1_image(x, I: _Indices, printed: bool = False) -> Word:
    r = I.r
    if x[0] == "C":
        j = x[1]
        if j == 1:
            return conjugate(I.c(2), I.a(1, 2, r)) + zr()
        if j == 2:
            return I.c(1) + zr(-1)
        return I.c(j)
    _, i, j, q = x
    if (i, j) == (1, 2) and q < r:
        return conjugate(I.a(1, 2, r - q), invert(I.c(1) + I.run(1, 2, 1, r - q - 1)))
    if i == 1 and j >= 3 and q == r:
        return I.a(2, j, r) if printed else conjugate(I.a(2, j, r), I.a(1, j, r, -1))
    if i == 1 and j >= 3:
        return conjugate(I.a(2, j, q), invert(I.c(1) + I.run(1, 2, 1, r - q - 1) + I.c(1, -1)))
    if i == 2 and q < r:
        return conjugate(I.a(1, j, q), I.run(1, 2, q + 1, r))
    if i == 2 and not printed:
        return I.a(1, j, r)
    return I.a(i, j, q)


def _rhok_image(k: int, x, I: _Indices, printed: bool = False) -> Word:
    r = I.r
    if x[0] == "C":
        j = x[1]
        if k == j - 1:
            return I.c(j - 1)
        if k == j:
            return conjugate(I.c(j + 1), I.a(j, j + 1, r))
        return I.c(j)
    _, i, j, q = x
    if k == i - 1:
        if q < r and printed:
            return conjugate(I.a(i - 1, j, q), abrkt(i - 1, i, q, r) + I.a(i - 1, i, r))
        if q < r:
            return conjugate(I.a(i - 1, j, q), I.run(i - 1, i, q + 1, r))
        return I.a(i - 1, j, r)
    if k == i < j - 1:
        if q < r:
            return conjugate(I.a(i + 1, j, q), invert(I.d(i) + I.run(i, i + 1, 1, r - q - 1) + invert(I.d(i))))
        return I.a(i + 1, j, r) if printed else conjugate(I.a(i + 1, j, r), I.a(i, j, r, -1))
    if k == i == j - 1 and q < r:
        return conjugate(I.a(i, i + 1, r - q), invert(I.d(i) + I.run(i, i + 1, 1, r - q - 1)))
    if k == j - 1 > i:
        return I.a(i, j - 1, q)
    if k == j:
        return conjugate(I.a(i, j + 1, q), I.a(j, j + 1, r))
    return I.a(i, j, q)


def _eps_image(x, I: _Indices) -> Word:
    r = I.r
    if x[0] == "C":
        j = x[1]
        if j == 1:
            return I.c(1, -1) + zr(2)
        return conjugate(I.c(j, -1), I.v(1, j, r))
    _, i, j, q = x
    if q == r:
        return conjugate(I.a(i, j, r, -1), I.v(i + 1, j, r))
    return conjugate(I.d(i) + I.a(i, j, r - q, -1) + invert(I.d(i)), I.v(i + 1, j, r))


def _delta_image(x, I: _Indices, printed: bool = False) -> Word:
    r, n = I.r, I.n

    def block(m):
        if not 1 <= m <= n:
            raise ValueError(f"derived index U{m} outside P({r},{n})")
        return invert(uword(m, r, n) + I.d(m) + _word(uword(m, q, n) for q in range(1, r)))

    if x[0] == "C":
        j = x[1]
        if j == 1:
            return invert(I.d(n)) + zr()
        if j == n:
            return block(1) + zr()
        return block(n - j + 1)
    _, i, j, q = x
    s, t = n - j + 1, n - i + 1
    if q == r:
        return conjugate(I.a(s, t, r), I.v(s, t, r))
    if printed:
        return conjugate(I.a(s, t, q), I.v(s, t, r) + invert(I.d(s)) + invert(I.d(t)))
    w = _word(I.run(p, t, q + 1, r - 1) for p in range(t - 1, s, -1))
    return conjugate(I.a(s, t, q), invert(w))


def _table_endo(r: int, n: int, f, name: str) -> Endo:
    I = _Indices(r, n)
    return Endo.from_dict(MonoGroup(r, n), {x: f(x, I) for x in _gens(r, n)}, 1, name)


@lru_cache(maxsize=None)
def rho_tilde(k: int, r: int, n: int, printed: bool = False) -> Endo:
    """rho~_k from its table; ``printed=True`` keeps the rows exactly as published.

    The default applies the corrected rows listed in :data:`CORRECTED_ROWS`.
    """
    _check(r, n)
    if not 0 <= k <= n - 1:
        raise ValueError(f"rho~ index {k} outside 0..{n - 1}")
    if k == 0:
        f = _rho0_image
    elif k == 1:
        f = lambda x, I: _rho1_image(x, I, printed)
    else:
        f = lambda x, I: _rhok_image(k, x, I, printed)
    return _table_endo(r, n, f, f"rt{k}" + ("(printed)" if printed else ""))


@lru_cache(maxsize=None)
def eps_tilde(r: int, n: int) -> Endo:
    _check(r, n)
    return _table_endo(r, n, _eps_image, "et")


@lru_cache(maxsize=None)
def delta_tilde(r: int, n: int, printed: bool = False) -> Endo:
    """Delta~ from its table; ``printed=True`` keeps the q < r row as published."""
    _check(r, n, 2)
    return _table_endo(r, n, lambda x, I: _delta_image(x, I, printed), "Dt" + ("(printed)" if printed else ""))


CORRECTED_ROWS = {
    "rt1: A1.j.r, j >= 3": "(A2.j.r)^(A1.j.r^-1), printed A2.j.r",
    "rt1: A2.j.r": "A1.j.r, printed as fixed (no row)",
    "rtk: A_{i,j}^(q), k = i-1, q < r": "conjugator A_{i-1,i}^(q+1) ... A_{i-1,i}^(r), printed A^[q] A^(r)",
    "rtk: A_{i,j}^(r), k = i < j-1": "(A_{i+1,j}^(r))^(A_{i,j}^(r)^-1), printed A_{i+1,j}^(r)",
    "Dt: A_{i,j}^(q), q < r": "(A_{a,b}^(q))^(W^-1), W = A^[q+1]_{b-1,b} ... A^[q+1]_{a+1,b}; printed conjugator V D_a^-1 D_b^-1",
}


# ---------------------------------------------------------------------------
# the composite definitions, built independently


def rho_sigma(k: int) -> Word:
    """Image of rho_k in B_{n+1}."""
    return sigma(1, 2) if k == 0 else sigma(k + 1)


@lru_cache(maxsize=None)
def conj_rho(k: int, r: int, n: int) -> Endo:
    """``x -> rho_k^-1 x rho_k``."""
    return conjugation_endo(MonoGroup(r, n), rho_sigma(k), f"c(rho{k})")


def rho_automorphism(r: int, n: int, images: dict, e: int, name: str) -> Endo:
    """Restrict an automorphism of B(r,n), given on rho_0..rho_{n-1}, to P(r,n)."""
    g = MonoGroup(r, n)
    imgs = {}
    for x in g.generators:
        w = substitute(images, mono_gen_rho(x, r, n).word)
        imgs[x] = g.simplify(rho_to_mono_word(r, n, w))
    return Endo.from_dict(g, imgs, e, name)


def _rho(i: int, k: int = 1) -> Word:
    return letter(("r", i), k)


@lru_cache(maxsize=None)
def eps_braid(r: int, n: int) -> Endo:
    """``rho_i -> rho_i^-1``; sends the center to its inverse."""
    return rho_automorphism(r, n, {("r", i): _rho(i, -1) for i in range(n)}, -1, "eps")


@lru_cache(maxsize=None)
def delta_braid(r: int, n: int) -> Endo:
    """``rho_0 -> (rho_{n-1} .. rho_1 rho_0 rho_1 .. rho_{n-1})^-1``, ``rho_i -> rho_{n-i}``."""
    down = _word(_rho(i) for i in range(n - 1, 0, -1))
    x = down + _rho(0) + _word(_rho(i) for i in range(1, n))
    images = {("r", 0): invert(x)}
    for i in range(1, n):
        images[("r", i)] = _rho(n - i)
    return rho_automorphism(r, n, images, -1, "Delta")


def rho_tilde_composite(k: int, r: int, n: int) -> Endo:
    """rho~_1 = c(rho_1) o Upsilon_2 with Upsilon_2 applied first; the others are conjugations."""
    if k == 1:
        return product([Upsilon(2, r, n), conj_rho(1, r, n)]).named("c(rho1) o Ups2")
    return conj_rho(k, r, n)


def eps_tilde_composite(r: int, n: int) -> Endo:
    """eps~ = eps o Psi."""
    return product([Psi(r, n), eps_braid(r, n)]).named("eps o Psi")


def delta_tilde_composite(r: int, n: int) -> Endo:
    """Delta~ = Delta o Psi o Upsilon_n read left to right: Delta is applied first.

    The opposite reading also fixes Zrn but fails Delta~^2 = 1.
    """
    return product([delta_braid(r, n), Psi(r, n), Upsilon(n, r, n)]).named("Delta o Psi o Ups_n")


# ---------------------------------------------------------------------------
# environments and relations


def mono_env(r: int, n: int) -> tuple[dict, dict]:
    env = {"Psi": Psi(r, n)}
    inv = {"Psi": Psi(r, n)}
    for i in range(2, n + 1):
        t = upsilon_t(i, r, n)
        env[f"Ups{i}"] = mono_transvection(r, n, t, f"Ups{i}")
        inv[f"Ups{i}"] = mono_transvection_inverse(r, n, t, f"Ups{i}^-1")
    for i, j, p in phi_triples(r, n):
        t = phi_t(i, j, p, r, n)
        env[f"Phi{i}.{j}.{p}"] = mono_transvection(r, n, t, f"Phi{i}.{j}.{p}")
        inv[f"Phi{i}.{j}.{p}"] = mono_transvection_inverse(r, n, t, f"Phi{i}.{j}.{p}^-1")
    if n >= 2:
        for k in range(n):
            env[f"rt{k}"] = rho_tilde(k, r, n)
        env["et"] = eps_tilde(r, n)
        env["Dt"] = delta_tilde(r, n)
    if n == 2:
        env.update(nielsen_lifts(r))
    return env, inv


def _rts(ks) -> str:
    return " ".join(f"rt{k}" for k in ks)


def normalizer_relations(n: int) -> list[Relation]:
    R = Relation.make
    rels = []
    for i in range(1, n - 1):
        x, y = f"rt{i}", f"rt{i + 1}"
        rels.append(R(f"nrm:braid:rt{i}", f"{x} {y} {x} {y}^-1 {x}^-1 {y}^-1", f"{x} {y} {x}", f"{y} {x} {y}"))
    for i in range(n):
        for j in range(i + 2, n):
            rels.append(R(f"nrm:comm:rt{i}:rt{j}", f"rt{i} rt{j} rt{i}^-1 rt{j}^-1", f"rt{i} rt{j}", f"rt{j} rt{i}"))
    rels.append(R("nrm:et2", "et et", "et et"))
    cyc = f"({_rts(range(n))})^{n}"
    rels.append(R("nrm:cycle", cyc, cyc))
    rels.append(R("nrm:rt0rt1", "(rt0 rt1)^2 (rt1 rt0)^-2", "(rt0 rt1)^2", "(rt1 rt0)^2"))
    rels.append(R("nrm:Dt2", "Dt Dt", "Dt Dt"))
    x = _rts(range(n - 1, 0, -1)) + " rt0 " + _rts(range(1, n))
    rels.append(R("nrm:lambda", f"Dt rt0 Dt {x}", f"{x} Dt rt0 Dt"))
    for k in range(n):
        rels.append(R(f"nrm:etrt:{k}", f"(et rt{k})^2", f"(et rt{k})^2"))
    rels.append(R("nrm:etDt", "et Dt et^-1 Dt^-1", "et Dt", "Dt et"))
    for k in range(1, n):
        rels.append(R(f"nrm:Dtrt:{k}", f"Dt rt{k} Dt rt{n - k}^-1", f"Dt rt{k} Dt", f"rt{n - k}"))
    return rels


def _conj_rel(rid: str, x: str, t: str, rhs: str) -> Relation:
    """``x^-1 t x = rhs`` checked as ``t x = x rhs``."""
    return Relation.make(rid, f"{x}^-1 {t} {x} ({rhs})^-1", f"{t} {x}", f"{x} {rhs}")


def _sandwich_rel(rid: str, x: str, t: str, rhs: str) -> Relation:
    """``x t x = rhs`` for an involution x; already inverse-free."""
    return Relation.make(rid, f"{x} {t} {x} ({rhs})^-1", f"{x} {t} {x}", rhs)


def _phi(i, j, p, k: int = 1) -> str:
    s = f"Phi{i}.{j}.{p}"
    return s if k == 1 else f"{s}^-1"


def _ups(l, k: int = 1) -> str:
    return f"Ups{l}" if k == 1 else f"Ups{l}^-1"


def rho1_phi_rhs(r: int, i: int, j: int, p: int) -> str:
    """Right-hand side of ``rho~_1^-1 Phi_{i,j,p} rho~_1``, reading the table's q as p."""
    if (i, j) == (1, 2) and p < r:
        return f"Ups2^-1 {_phi(1, 2, r - p)}"
    if i == 1 and j > 2:
        return f"Ups2^-1 {_phi(2, j, p)}"
    if i == 2:
        return f"Ups2^-1 {_phi(1, j, p)}"
    return f"Ups2^-1 {_phi(i, j, p)}"


def rhok_phi_rhs(k: int, r: int, i: int, j: int, p: int) -> str:
    if k == i - 1:
        return _phi(k, j, p)
    if k == i < j - 1:
        return _phi(k + 1, j, p)
    if k == i == j - 1 and p < r:
        return _phi(k, k + 1, r - p)
    if k == j - 1 > i:
        return _phi(i, k, p)
    if k == j:
        return _phi(i, k + 1, p)
    return _phi(i, j, p)


def thm45_relations(r: int, n: int) -> list[Relation]:
    R = Relation.make
    rels = list(normalizer_relations(n))
    ups = list(range(2, n + 1))
    phis = phi_triples(r, n)
    rels.append(R("tv:Psi2", "Psi Psi", "Psi Psi"))
    for l in ups:
        for i, j, p in phis:
            f = _phi(i, j, p)
            rels.append(R(f"tv:comm:Ups{l}:{i}.{j}.{p}", f"Ups{l} {f} Ups{l}^-1 {f}^-1", f"Ups{l} {f}", f"{f} Ups{l}"))
    for l, m in combinations(ups, 2):
        rels.append(R(f"tv:comm:Ups{l}:Ups{m}", f"Ups{l} Ups{m} Ups{l}^-1 Ups{m}^-1", f"Ups{l} Ups{m}", f"Ups{m} Ups{l}"))
    for a, b in combinations(phis, 2):
        f, h = _phi(*a), _phi(*b)
        rels.append(R(f"tv:comm:{f[3:]}:{h[3:]}", f"{f} {h} {f}^-1 {h}^-1", f"{f} {h}", f"{h} {f}"))
    rels.append(_sandwich_rel("act:et:Psi", "et", "Psi", "Psi"))
    for l in ups:
        rels.append(R(f"tv:PsiUps:{l}", f"Psi Ups{l} Psi Ups{l}", f"Psi Ups{l} Psi", f"Ups{l}^-1"))
    for i, j, p in phis:
        f = _phi(i, j, p)
        rels.append(R(f"tv:PsiPhi:{i}.{j}.{p}", f"Psi {f} Psi {f}", f"Psi {f} Psi", f"{f}^-1"))
    rels.append(_sandwich_rel("act:Dt:Psi", "Dt", "Psi", "Psi"))
    for k in range(n):
        rels.append(_conj_rel(f"act:rt{k}:Psi", f"rt{k}", "Psi", "Psi"))
    for l in ups:
        rhs = "Ups{}".format(n) if l == n else f"Ups{n - l + 1}^-1 Ups{n}"
        rels.append(_sandwich_rel(f"act:Dt:Ups{l}", "Dt", f"Ups{l}", rhs))
        rels.append(_sandwich_rel(f"act:et:Ups{l}", "et", f"Ups{l}", f"Ups{l}^-1"))
        rels.append(_conj_rel(f"act:rt0:Ups{l}", "rt0", f"Ups{l}", f"Ups{l}"))
        rels.append(_conj_rel(f"act:rt1:Ups{l}", "rt1", f"Ups{l}", "Ups2^-1" if l == 2 else f"Ups2^-1 Ups{l}"))
        for k in range(2, n):
            rhs = f"Ups{k + 1}" if l == k else f"Ups{k}" if l == k + 1 else f"Ups{l}"
            rels.append(_conj_rel(f"act:rt{k}:Ups{l}", f"rt{k}", f"Ups{l}", rhs))
    for i, j, p in phis:
        f = _phi(i, j, p)
        tag = f"{i}.{j}.{p}"
        if j < n:
            rhs = f"Ups{n - j + 1}^-1 Ups{n - i + 1}^-1 Ups{n} {_phi(n - j + 1, n - i + 1, p)}"
        else:
            rhs = f"Ups{n - i + 1}^-1 Ups{n} {_phi(1, n - i + 1, p)}"
        rels.append(_sandwich_rel(f"act:Dt:{tag}", "Dt", f, rhs))
        rels.append(_sandwich_rel(f"act:et:{tag}", "et", f, _phi(i, j, r - p if p < r else r, -1)))
        if i == 1:
            rhs0 = _phi(1, j, r) if p == 1 else _phi(1, j, p - 1)
        else:
            rhs0 = f
        rels.append(_conj_rel(f"act:rt0:{tag}", "rt0", f, rhs0))
        rels.append(_conj_rel(f"act:rt1:{tag}", "rt1", f, rho1_phi_rhs(r, i, j, p)))
        for k in range(2, n):
            rels.append(_conj_rel(f"act:rt{k}:{tag}", f"rt{k}", f, rhok_phi_rhs(k, r, i, j, p)))
    return rels


# ---------------------------------------------------------------------------
# normalizer relations and table checks


def _tau_tilde_cases(r: int, n: int) -> list:
    """tau~ = rt0 ... rt(n-1) against the conjugation by rho_0 ... rho_{n-1}."""
    g = MonoGroup(r, n)
    tau_word = _word(rho_sigma(k) for k in range(n))
    tau = conjugation_endo(g, tau_word, "c(tau)")
    expected = {}
    for x in g.generators:
        w = tau.table[x]
        if x == ("C", 1):
            w = w + zr()
        elif x == ("C", 2):
            w = w + zr(-1)
        expected[x] = w
    ts = [rho_tilde(k, r, n) for k in range(n)]
    return [table_case("proof:tau~", "tau~ = tau on every generator, up to Zrn on C1 and C2", ts, expected)]


def _zfix_case(a: Endo) -> CaseSpec:
    def run(b):
        return True if z_consistent(a) else (False, ["central word is not fixed"])

    return CaseSpec(f"zfix:{a.name}", f"{a.name} fixes Zrn", run)


def table_endos(r: int, n: int) -> list[Endo]:
    return [rho_tilde(k, r, n) for k in range(n)] + [eps_tilde(r, n), delta_tilde(r, n)]


def double_entry_cases(r: int, n: int) -> list:
    out = []
    for k in range(n):
        comp = rho_tilde_composite(k, r, n)
        out.append(endo_equal_case(f"double:rt{k}", f"table rt{k} = {comp.name}", rho_tilde(k, r, n), comp))
    out.append(endo_equal_case("double:et", "table et = eps o Psi", eps_tilde(r, n), eps_tilde_composite(r, n)))
    out.append(endo_equal_case("double:Dt", "table Dt = Delta o Psi o Ups_n", delta_tilde(r, n), delta_tilde_composite(r, n)))
    return out


def prop43_cases(r: int, n: int) -> list:
    _check(r, n, 3)
    env, inv = mono_env(r, n)
    cases = build_cases(normalizer_relations(n), env, inv, MonoGroup(r, n), [])
    cases.extend(_tau_tilde_cases(r, n))
    for a in table_endos(r, n):
        cases.append(_zfix_case(a))
        cases.append(well_defined_case(f"wd:{a.name}", a))
    cases.extend(double_entry_cases(r, n))
    return cases


def suite_prop43(r: int, n: int, budget: Budget | None = None, jobs: int = 1) -> VerificationReport:
    return run_cases("prop43", {"r": r, "n": n}, prop43_cases(r, n), budget, jobs)


def thm45_cases(r: int, n: int, skipped: list | None = None) -> list:
    _check(r, n, 3)
    env, inv = mono_env(r, n)
    return build_cases(thm45_relations(r, n), env, inv, MonoGroup(r, n), skipped if skipped is not None else [])


def suite_thm45(r: int, n: int, budget: Budget | None = None, jobs: int = 1) -> VerificationReport:
    skipped: list = []
    cases = thm45_cases(r, n, skipped)
    params = {"r": r, "n": n}
    if skipped:
        params["skipped"] = skipped
    return run_cases("thm45", params, cases, budget, jobs)


def zfix_cases(r: int, n: int) -> list:
    return [_zfix_case(a) for a in table_endos(r, n)]


# ---------------------------------------------------------------------------
# P(r,2): lifts of the Nielsen generators


def _z_lift(r: int, images: dict) -> Word:
    """The C1 image forced by fixing Z_{r,2} = C1 A^(1) .. A^(r-1) C2 A^(r)."""
    rest = _word(letter(("A", 1, 2, q)) for q in range(1, r)) + c(2) + letter(("A", 1, 2, r))
    moved = _word(images.get(x, letter(x)) for (x, _) in rest)
    return free_reduce(c(1) + rest + invert(moved))


@lru_cache(maxsize=None)
def nielsen_lifts(r: int, printed: bool = False) -> dict:
    """Lifts of P, Q, sigma, U to Aut(P(r,2)) fixing C2's partners and Z_{r,2}.

    The C1 images are forced by fixing the center.  For r >= 3 they coincide
    with the displayed lifts; at r = 2 the displayed ``C1 -> C1 [A^(1), A^(2)]``
    for P does not fix Z_{2,2}.  ``printed=True`` returns the displayed lifts.
    """
    _check(r, 2)
    g = MonoGroup(r, 2)
    I = _Indices(r, 2)
    A = lambda q, k=1: I.a(1, 2, q, k)
    P = {("A", 1, 2, 1): A(2), ("A", 1, 2, 2): A(1)}
    Q = {("A", 1, 2, q): A(q + 1) for q in range(1, r - 1)}
    Q.update({("A", 1, 2, r - 1): c(2), ("A", 1, 2, r): A(1), ("C", 2): A(r)})
    S = {("A", 1, 2, 1): A(1, -1)}
    U = {("A", 1, 2, 1): A(1) + A(2)}
    if printed:
        P[("C", 1)] = c(1) + A(1) + A(2) + A(1, -1) + A(2, -1)
        Q[("C", 1)] = conjugate(c(1), A(1))
        S[("C", 1)] = c(1) + A(1, 2)
        U[("C", 1)] = c(1) + A(1) + invert(A(1) + A(2))
    else:
        for m in (P, Q, S, U):
            m[("C", 1)] = _z_lift(r, m)
    return {name: Endo.from_dict(g, m, 1, name) for name, m in (("P", P), ("Q", Q), ("sig", S), ("U", U))}


def prop46_relations(r: int) -> list[Relation]:
    """Each row ``X: t -> t'`` read as ``X^-1 t X = t'``."""
    rows = []
    for X in ("P", "Q", "sig", "U"):
        rows.append((X, "Psi", "Psi"))
    rows += [("P", "Ups2", "Ups2"), ("P", _phi(1, 2, 1), _phi(1, 2, 2)), ("P", _phi(1, 2, 2), _phi(1, 2, 1))]
    rows += [("P", _phi(1, 2, p), _phi(1, 2, p)) for p in range(3, r + 1)]
    rows += [("Q", "Ups2", _phi(1, 2, r))]
    rows += [("Q", _phi(1, 2, p), _phi(1, 2, p + 1)) for p in range(1, r - 1)]
    rows += [("Q", _phi(1, 2, r - 1), "Ups2"), ("Q", _phi(1, 2, r), _phi(1, 2, 1))]
    rows += [("sig", "Ups2", "Ups2"), ("sig", _phi(1, 2, 1), _phi(1, 2, 1, -1))]
    rows += [("sig", _phi(1, 2, p), _phi(1, 2, p)) for p in range(2, r + 1)]
    rows += [("U", "Ups2", "Ups2"), ("U", _phi(1, 2, 2), f"{_phi(1, 2, 1, -1)} {_phi(1, 2, 2)}")]
    rows += [("U", _phi(1, 2, p), _phi(1, 2, p)) for p in range(1, r + 1) if p != 2]
    return [_conj_rel(f"act:{X}:{t}", X, t, rhs) for X, t, rhs in rows]


def prop46_cases(r: int) -> list:
    _check(r, 2)
    env, inv = mono_env(r, 2)
    cases = build_cases(prop46_relations(r), env, inv, MonoGroup(r, 2), [])
    shown = nielsen_lifts(r, printed=True)
    for name, a in nielsen_lifts(r).items():
        cases.append(_zfix_case(a))
        cases.append(well_defined_case(f"wd:{name}", a))
        if r >= 3 or name != "P":
            cases.append(endo_equal_case(f"lift:{name}", f"{name} agrees with its displayed lift", a, shown[name]))
    return cases


def suite_prop46(r: int, budget: Budget | None = None, jobs: int = 1) -> VerificationReport:
    return run_cases("prop46", {"r": r, "n": 2}, prop46_cases(r), budget, jobs)
