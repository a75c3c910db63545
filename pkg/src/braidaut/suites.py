"""Suite registry, parameter validation and the seeded random corpora.

Every suite is addressed by name and a parameter dict so that worker
processes can rebuild the same case list from scratch.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .braid import BraidWord, artin_equal, braid_equal, sigma
from .purebraid import A, comb_word, pure_equal_words, relation_instances, relation_rhs
from .report import Budget, CaseSpec, VerificationReport, run_cases
from .words import Word, format_word, free_reduce, invert

# ---------------------------------------------------------------------------
# random corpora


def random_braid_word(rng: random.Random, n: int, length: int) -> Word:
    """A free-reduced sigma word on n strands with at most ``length`` letters."""
    return free_reduce(sigma(rng.randrange(1, n), rng.choice((1, -1)))[0] for _ in range(length))


def rewrite_braid_word(rng: random.Random, w: Word, n: int, tries: int = 8) -> Word:
    """Apply braid relations at random positions; the element is unchanged."""
    s = list(w)
    for _ in range(tries):
        if len(s) < 2:
            break
        p = rng.randrange(len(s) - 1)
        (a, e), (b, f) = s[p], s[p + 1]
        if abs(a[1] - b[1]) >= 2:
            s[p], s[p + 1] = s[p + 1], s[p]
        elif p + 2 < len(s) and e == f == s[p + 2][1] and s[p + 2][0] == a and abs(a[1] - b[1]) == 1:
            s[p : p + 3] = [(b, e), (a, e), (b, e)]
    return free_reduce(s)


def oracle_pairs(n: int, count: int, seed: int, max_len: int = 12) -> list:
    """``count`` pairs of sigma words; roughly half are equal by construction."""
    rng = random.Random(f"oracle:{n}:{seed}")
    out = []
    for k in range(count):
        u = random_braid_word(rng, n, rng.randint(0, max_len))
        if k % 2:
            v = random_braid_word(rng, n, rng.randint(0, max_len))
        else:
            v = rewrite_braid_word(rng, u, n)
        out.append((u, v))
    return out


def _relators(n: int) -> list:
    rels = []
    for c, r, s, i, j in relation_instances(n):
        lhs = A(r, s, -1) + A(i, j) + A(r, s)
        rels.append(free_reduce(lhs + invert(relation_rhs(c, r, s, i, j))))
    return rels


def random_pure_word(rng: random.Random, n: int, length: int) -> Word:
    gens = [(i, j) for j in range(2, n + 1) for i in range(1, j)]
    return free_reduce(A(*rng.choice(gens), rng.choice((1, -1)))[0] for _ in range(length))


def comb_pairs(n: int, count: int, seed: int, max_len: int = 8) -> list:
    """Pairs of A-words; even-indexed pairs differ by an inserted relator."""
    rng = random.Random(f"comb:{n}:{seed}")
    rels = _relators(n)
    out = []
    for k in range(count):
        u = random_pure_word(rng, n, rng.randint(0, max_len))
        if k % 2 == 0 and rels:
            p = rng.randint(0, len(u))
            rel = rng.choice(rels)
            if rng.random() < 0.5:
                rel = invert(rel)
            v = free_reduce(u[:p] + rel + u[p:])
        else:
            v = random_pure_word(rng, n, rng.randint(0, max_len))
        out.append((u, v))
    return out


def _agreement_case(n: int, pairs: list, lo: int) -> CaseSpec:
    def run(b: Budget):
        bad = []
        for k, (u, v) in enumerate(pairs):
            g = braid_equal(BraidWord(n, u), BraidWord(n, v))
            a = artin_equal(BraidWord(n, u), BraidWord(n, v))
            if g != a:
                bad.append(f"pair {lo + k}: {format_word(u)} vs {format_word(v)}: garside={g} artin={a}")
        return True if not bad else (False, bad)

    return CaseSpec(f"artin:n{n}:{lo:04d}", f"garside and free-group verdicts agree on pairs {lo}..{lo + len(pairs) - 1}", run)


def _comb_case(n: int, pairs: list, lo: int) -> CaseSpec:
    def run(b: Budget):
        bad = []
        for k, (u, v) in enumerate(pairs):
            same = comb_word(n, u, b) == comb_word(n, v, b)
            if same != pure_equal_words(n, u, v):
                bad.append(f"pair {lo + k}: {format_word(u)} vs {format_word(v)}: comb={same}")
        return True if not bad else (False, bad)

    return CaseSpec(f"comb:n{n}:{lo:04d}", f"comb(u) = comb(v) iff u = v on pairs {lo}..{lo + len(pairs) - 1}", run)


def oracle_agreement_cases(n: int, pairs: int = 1000, comb: int = 200, seed: int = 0, chunk: int = 100) -> list:
    if n < 2:
        raise ValueError("oracle-agreement needs n >= 2")
    cases = []
    ps = oracle_pairs(n, pairs, seed)
    for lo in range(0, len(ps), chunk):
        cases.append(_agreement_case(n, ps[lo : lo + chunk], lo))
    if n >= 3 and comb:
        cs = comb_pairs(n, comb, seed)
        for lo in range(0, len(cs), chunk):
            cases.append(_comb_case(n, cs[lo : lo + chunk], lo))
    return cases


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Suite:
    name: str
    params: tuple  # required parameter names
    build: Callable  # (**params) -> list[CaseSpec]
    check: Callable  # (**params) -> None, raises ValueError
    summary: str


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _purebraid(n):
    from .purebraid import purebraid_cases

    return purebraid_cases(n)


def _center(r, n):
    from .monomial import center_lemma_cases

    return center_lemma_cases(r, n)


def _prop31(n):
    from .autpn import prop31_cases

    return prop31_cases(n)


def _thm32(n):
    from .autpn import thm32_cases

    return thm32_cases(n, [])


def _autp3():
    from .autpn import autp3_cases

    return autp3_cases()


def _prop43(r, n):
    from .autmono import prop43_cases

    return prop43_cases(r, n)


def _thm45(r, n):
    from .autmono import thm45_cases

    return thm45_cases(r, n, [])


def _prop46(r):
    from .autmono import prop46_cases

    return prop46_cases(r)


def _oracle(n, seed=0):
    return oracle_agreement_cases(n, seed=seed)


SUITES = {
    s.name: s
    for s in (
        Suite("purebraid", ("n",), _purebraid, lambda n: _need(n >= 2, "purebraid needs n >= 2"), "pure braid relations"),
        Suite("center", ("r", "n"), _center, lambda r, n: _need(r >= 1 and n >= 1, "center needs r, n >= 1"), "center of P(r,n)"),
        Suite("prop31", ("n",), _prop31, lambda n: _need(n >= 4, "prop31 needs n >= 4"), "mapping class relations for omega_k, eps"),
        Suite("thm32", ("n",), _thm32, lambda n: _need(n >= 4, "thm32 is stated for n >= 4"), "presentation of Aut(P_n)"),
        Suite("autp3", (), _autp3, lambda: None, "presentation of Aut(P_3)"),
        Suite("prop43", ("r", "n"), _prop43, lambda r, n: _need(r >= 2 and n >= 3, "prop43 needs r >= 2, n >= 3"), "normalizer relations in Aut(P(r,n))"),
        Suite("thm45", ("r", "n"), _thm45, lambda r, n: _need(r >= 2 and n >= 3, "thm45 needs r >= 2, n >= 3"), "presentation of Aut(P(r,n))"),
        Suite("prop46", ("r",), _prop46, lambda r: _need(r >= 2, "prop46 needs r >= 2"), "Aut(P(r,2)) action table"),
        Suite("oracle-agreement", ("n",), _oracle, lambda n, seed=0: _need(n >= 2, "oracle-agreement needs n >= 2"), "garside vs free-group action, combing canonicity"),
    )
}

OPTIONAL = {"oracle-agreement": ("seed",)}


def suite_params(name: str, params: dict) -> dict:
    """Keep the parameters a suite takes, validating presence and range."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    s = SUITES[name]
    missing = [p for p in s.params if params.get(p) is None]
    if missing:
        raise ValueError(f"suite {name} needs parameter(s): {', '.join(missing)}")
    kept = {p: params[p] for p in s.params}
    for p in OPTIONAL.get(name, ()):
        if params.get(p) is not None:
            kept[p] = params[p]
    s.check(**kept)
    return kept


def build_suite(name: str, params: dict) -> list:
    kept = suite_params(name, params)
    return SUITES[name].build(**kept)


def run_suite(name: str, params: dict, budget: Budget | None = None, jobs: int = 1) -> VerificationReport:
    """Build and run a registered suite; raises ValueError on bad parameters."""
    kept = suite_params(name, params)
    specs = SUITES[name].build(**kept)
    return run_cases(name, kept, specs, budget, jobs)
