"""Monomial braid group B(r,n) and pure monomial braid group P(r,n).

Everything is decided inside B_{n+1} through the embedding
``rho_0 -> s1^2``, ``rho_j -> s_{j+1}``.  On P(r,n) the embedding lands in
P_{n+1}:

    C_j        -> A_{1,j+1}^r
    A_{i,j}^(q) -> X^(q-r) A_{i+1,j+1} X^(r-q),  X = A_{1,i+1} ... A_{i,i+1}
    Zrn        -> Z_{n+1}^r

The image is the set of pure braids whose exponent sum in every
``A_{1,j+1}`` is divisible by r.  Level ``j+1`` of a combed image therefore
lies in an index-r subgroup of a free group, freely generated by the images
of ``C_j`` and ``A_{i,j}^(q)``.  :func:`mono_canonical_word` reads each level
back into those letters through a folded coset graph, which gives a
canonical spelling used for growth control.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .braid import BraidWord, BudgetExceeded, braid_equal
from .purebraid import (
    _canon_budget,
    comb_word,
    delta_level,
    is_pure,
    pure_is_identity,
    to_sigma_word,
    window_delete,
)
from .report import Budget, CaseSpec, VerificationReport, run_cases
from .words import (
    EMPTY,
    ZRN,
    Alphabet,
    Word,
    Z,
    format_word,
    free_reduce,
    invert,
    letter,
    normalize_central,
    split_central,
    substitute,
)


def C(j: int, k: int = 1) -> Word:
    return letter(("C", j), k)


def AQ(i: int, j: int, q: int, k: int = 1) -> Word:
    """``(A_{i,j}^(q))^k``."""
    return letter(("A", i, j, q), k)


def ZR(k: int = 1) -> Word:
    return letter(ZRN, k)


def rho(i: int, k: int = 1) -> Word:
    return letter(("r", i), k)


@dataclass(frozen=True)
class RhoWord:
    """A word in ``rho_0 .. rho_{n-1}``; ``r`` only matters for pure subgroups."""

    r: int
    n: int
    word: Word = EMPTY

    def __post_init__(self):
        w = self.word if isinstance(self.word, Word) else Word(self.word)
        Alphabet("rho", self.n).check(w)
        object.__setattr__(self, "word", w)

    def __add__(self, other: "RhoWord") -> "RhoWord":
        return RhoWord(self.r, self.n, self.word + other.word)

    def __pow__(self, k: int) -> "RhoWord":
        return RhoWord(self.r, self.n, self.word ** k)

    def __str__(self) -> str:
        return format_word(self.word)


@dataclass(frozen=True)
class MonoWord:
    """A reduced word in ``C_j``, ``A_{i,j}^(q)`` and the central letter ``Zrn``."""

    r: int
    n: int
    word: Word = EMPTY

    def __post_init__(self):
        w = free_reduce(self.word)
        Alphabet("monoA", self.n, self.r).check(w)
        object.__setattr__(self, "word", w)

    def __add__(self, other: "MonoWord") -> "MonoWord":
        return MonoWord(self.r, self.n, self.word + other.word)

    def inverse(self) -> "MonoWord":
        return MonoWord(self.r, self.n, invert(self.word))

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_word(self.word)


def mono_generators(r: int, n: int) -> list:
    """Non-central letters of the monoA alphabet, in alphabet order."""
    return [l for l in Alphabet("monoA", n, r).letters if l != ZRN]


def _check_mono_letter(l, r: int, n: int) -> None:
    if l not in Alphabet("monoA", n, r) or l == ZRN:
        raise ValueError(f"{l!r} is not a generator of P({r},{n})")


# ---------------------------------------------------------------------------
# rho words


def x_rho(i: int) -> Word:
    """``X_i = rho_{i-1} ... rho_1 rho_0 rho_1 ... rho_{i-1}``."""
    down = [(("r", k), 1) for k in range(i - 1, 0, -1)]
    return Word(down + [(("r", 0), 1)] + down[::-1])


def zeta_rho(n: int) -> Word:
    """``zeta_n = (rho_0 rho_1 ... rho_{n-1})^n``."""
    return Word([(("r", k), 1) for k in range(n)] * n)


def rho_embed(w: RhoWord) -> BraidWord:
    """Image in B_{n+1}."""
    return BraidWord(w.n + 1, _rho_embed_word(w.word))


def _rho_embed_word(w: Word) -> Word:
    out: list = []
    for (_, i), s in w:
        if i == 0:
            out.extend([(("s", 1), s)] * 2)
        else:
            out.append((("s", i + 1), s))
    return free_reduce(out)


def mono_gen_rho(l, r: int, n: int) -> RhoWord:
    """The defining rho-word of a generator of P(r,n)."""
    _check_mono_letter(l, r, n)
    if l[0] == "C":
        j = l[1]
        up = [(("r", k), 1) for k in range(j - 1, 0, -1)]
        w = up + [(("r", 0), 1)] * r + [(("r", k), -1) for k in range(1, j)]
        return RhoWord(r, n, Word(w))
    _, i, j, q = l
    X = x_rho(i)
    mid = [(("r", k), 1) for k in range(j - 1, i, -1)] + [(("r", i), 1)] * 2
    mid += [(("r", k), -1) for k in range(i + 1, j)]
    return RhoWord(r, n, free_reduce(X ** (q - r) + Word(mid) + X ** (r - q)))


# ---------------------------------------------------------------------------
# the embedding into P_{n+1}


@lru_cache(maxsize=None)
def _direct_table(r: int, n: int) -> dict:
    t = {}
    for l in mono_generators(r, n):
        if l[0] == "C":
            t[l] = letter(("A", 1, l[1] + 1), r)
        else:
            _, i, j, q = l
            X = delta_level(i + 1)
            t[l] = free_reduce(X ** (q - r) + letter(("A", i + 1, j + 1)) + X ** (r - q))
    t[ZRN] = letter(Z, r)
    return t


def mono_to_pure_word(r: int, n: int, w: Word) -> Word:
    """Image of a monoA word as an A-word of P_{n+1}."""
    return substitute(_direct_table(r, n), w)


@lru_cache(maxsize=None)
def _rho_table(r: int, n: int) -> dict:
    t = {l: _rho_embed_word(mono_gen_rho(l, r, n).word) for l in mono_generators(r, n)}
    t[ZRN] = _rho_embed_word(zeta_rho(n) ** r)
    return t


def mono_to_braid(w: MonoWord, route: str = "direct") -> BraidWord:
    """Image in B_{n+1}, either through the rho-words or the closed-form A-words."""
    if route == "via_rho":
        return BraidWord(w.n + 1, substitute(_rho_table(w.r, w.n), w.word))
    if route == "direct":
        return BraidWord(w.n + 1, to_sigma_word(w.n + 1, mono_to_pure_word(w.r, w.n, w.word)))
    raise ValueError(f"unknown route {route!r}")


def mono_equal_words(r: int, n: int, u: Word, v: Word) -> bool:
    if u == v:
        return True
    m = n + 1
    return braid_equal(
        BraidWord(m, to_sigma_word(m, mono_to_pure_word(r, n, u))),
        BraidWord(m, to_sigma_word(m, mono_to_pure_word(r, n, v))),
    )


def mono_equal(u: MonoWord, v: MonoWord) -> bool:
    """Equality in P(r,n), decided in B_{n+1}."""
    if (u.r, u.n) != (v.r, v.n):
        raise ValueError("parameter mismatch")
    return mono_equal_words(u.r, u.n, u.word, v.word)


def mono_is_identity(r: int, n: int, w: Word) -> bool:
    return pure_is_identity(n + 1, mono_to_pure_word(r, n, w))


# ---------------------------------------------------------------------------
# derived elements


def abrkt(i: int, j: int, q: int, r: int) -> Word:
    """``A_{i,j}^[q] = A^(q) A^(q+1) ... A^(r-1)`` (q < r)."""
    if not 1 <= q < r:
        raise ValueError(f"A^[q] needs 1 <= q < r, got q={q}, r={r}")
    return Word((("A", i, j, p), 1) for p in range(q, r))


def vword(i: int, j: int, q: int) -> Word:
    """``V_{i,j}^(q) = A_{i,j}^(q) A_{i+1,j}^(q) ... A_{j-1,j}^(q)``."""
    return Word((("A", p, j, q), 1) for p in range(i, j))


def dword(k: int, r: int) -> Word:
    """``D_k = A_{k-1,k}^[1] ... A_{1,k}^[1] C_k V_{1,k}^(r)``."""
    out: list = []
    if r > 1:
        for i in range(k - 1, 0, -1):
            out.extend(abrkt(i, k, 1, r))
    out.append((("C", k), 1))
    out.extend(vword(1, k, r))
    return Word(out)


def uword(i: int, q: int, n: int) -> Word:
    """``U_i^(q) = A_{i,i+1}^(q) ... A_{i,n}^(q)``."""
    return Word((("A", i, p, q), 1) for p in range(i + 1, n + 1))


def zeta_r_word(r: int, n: int) -> Word:
    """``D_1 D_2 ... D_n``."""
    out: list = []
    for k in range(1, n + 1):
        out.extend(dword(k, r))
    return Word(out)


def derived(name: str, indices: tuple, r: int, n: int) -> MonoWord:
    """Named derived elements: ``Abrkt (i,j,q)``, ``V (i,j,q)``, ``D (k,)``, ``U (i,q)``, ``zeta_r ()``."""
    if name == "Abrkt":
        i, j, q = indices
        if not 1 <= i < j <= n:
            raise ValueError("bad indices")
        w = abrkt(i, j, q, r)
    elif name == "V":
        i, j, q = indices
        if not (1 <= i <= j <= n and 1 <= q <= r):
            raise ValueError("bad indices")
        w = vword(i, j, q)
    elif name == "D":
        (k,) = indices
        if not 1 <= k <= n:
            raise ValueError("bad indices")
        w = dword(k, r)
    elif name == "U":
        i, q = indices
        if not (1 <= i <= n and 1 <= q <= r):
            raise ValueError("bad indices")
        w = uword(i, q, n)
    elif name == "zeta_r":
        w = zeta_r_word(r, n)
    else:
        raise ValueError(f"unknown derived element {name!r}")
    return MonoWord(r, n, w)


# ---------------------------------------------------------------------------
# canonical spelling through folded coset graphs


@dataclass
class _Edge:
    src: int
    lab: tuple  # positive letter of the free group
    dst: int
    tag: Word


@dataclass
class LevelGraph:
    """Folded graph of the subgroup of ``U_{k+1}`` generated by level-k letters.

    Reading a reduced loop at vertex 0 and multiplying the tags spells the
    loop in monomial letters.
    """

    r: int
    k: int
    edges: list = field(default_factory=list)
    out: dict = field(default_factory=dict)  # (vertex, letter, sign) -> edge index

    def read(self, w: Word) -> Word:
        v = 0
        out: list = []
        for l, s in w:
            e = self.edges[self.out[(v, l, s)]]
            if s > 0:
                out.extend(e.tag)
                v = e.dst
            else:
                out.extend(invert(e.tag))
                v = e.src
        if v != 0:
            raise ValueError("word does not lie in the pure monomial subgroup")
        return free_reduce(out)

    @property
    def vertices(self) -> set:
        return {e.src for e in self.edges} | {e.dst for e in self.edges}


def _fold(r: int, k: int, petals: list) -> LevelGraph:
    edges: list = []
    nxt = 1
    for gen, w in petals:
        v = 0
        for idx, (l, s) in enumerate(w):
            last = idx == len(w) - 1
            u = 0 if last else nxt
            if not last:
                nxt += 1
            tag = letter(gen) if idx == 0 else EMPTY
            if s > 0:
                edges.append(_Edge(v, l, u, tag))
            else:
                edges.append(_Edge(u, l, v, invert(tag)))
            v = u
    alive = [True] * len(edges)

    def traversals(v):
        for idx, e in enumerate(edges):
            if not alive[idx]:
                continue
            if e.src == v:
                yield idx, (e.lab, 1), e.dst, e.tag
            if e.dst == v:
                yield idx, (e.lab, -1), e.src, invert(e.tag)

    def shift(v, g):
        for idx, e in enumerate(edges):
            if not alive[idx]:
                continue
            if e.dst == v:
                e.tag = free_reduce(e.tag + g)
            if e.src == v:
                e.tag = free_reduce(invert(g) + e.tag)

    changed = True
    while changed:
        changed = False
        verts = sorted({e.src for i, e in enumerate(edges) if alive[i]} | {e.dst for i, e in enumerate(edges) if alive[i]})
        for u in verts:
            seen = {}
            for idx, key, far, tag in traversals(u):
                if key not in seen:
                    seen[key] = (idx, far, tag)
                    continue
                i1, v1, t1 = seen[key]
                i2, v2, t2 = idx, far, tag
                if i1 == i2:
                    continue
                if v1 == v2:
                    if free_reduce(t1) != free_reduce(t2):
                        raise ValueError("level generators are not a free basis")
                    alive[i2] = False
                elif v2 != 0:
                    shift(v2, free_reduce(invert(t2) + t1))
                    alive[i2] = False
                    for e in edges:
                        if e.src == v2:
                            e.src = v1
                        if e.dst == v2:
                            e.dst = v1
                else:
                    shift(v1, free_reduce(invert(t1) + t2))
                    alive[i1] = False
                    for e in edges:
                        if e.src == v1:
                            e.src = v2
                        if e.dst == v1:
                            e.dst = v2
                changed = True
                break
            if changed:
                break
    g = LevelGraph(r, k)
    for idx, e in enumerate(edges):
        if alive[idx]:
            g.edges.append(e)
            g.out[(e.src, e.lab, 1)] = len(g.edges) - 1
            g.out[(e.dst, e.lab, -1)] = len(g.edges) - 1
    return g


@lru_cache(maxsize=None)
def level_graph(r: int, k: int) -> LevelGraph:
    """Folded graph for monomial level k (letters ``C_k`` and ``A_{i,k}^(q)``)."""
    gens = [("C", k)] + [("A", i, k, q) for i in range(1, k) for q in range(1, r + 1)]
    table = _direct_table(r, k)
    petals = [(g, canonical_level_word(k + 1, table[g])) for g in gens]
    return _fold(r, k, petals)


def canonical_level_word(m: int, w: Word) -> Word:
    """The level-m coordinate of an element already known to lie in U_m."""
    cf = comb_word(m, w)
    return cf.level(m)


@lru_cache(maxsize=None)
def _zrn_levels(r: int, n: int) -> tuple:
    """Monomial spelling of the level parts of ``Zrn``."""
    return tuple(level_graph(r, k).read(delta_level(k + 1) ** r) for k in range(1, n + 1))


def mono_levels(r: int, n: int, w: Word, budget: Budget | None = None) -> list[Word]:
    """Monomial spelling of each combed level, for levels 1..n."""
    body, e = split_central(w, ZRN)
    pure = mono_to_pure_word(r, n, free_reduce(body))
    cf = comb_word(n + 1, pure, budget)
    levels = [level_graph(r, k).read(cf.level(k + 1)) for k in range(1, n + 1)]
    if e:
        z = _zrn_levels(r, n)
        levels = [free_reduce(u + z[k] ** e) for k, u in enumerate(levels)]
    return levels


def pure_to_mono_word(r: int, n: int, w: Word, budget: Budget | None = None) -> Word:
    """Spell an element of the image of P(r,n) in P_{n+1} in monomial letters.

    Raises ValueError when the pure braid is not in the image.
    """
    cf = comb_word(n + 1, w, budget)
    parts: list = []
    for k in range(n, 0, -1):
        parts.extend(level_graph(r, k).read(cf.level(k + 1)))
    return Word(parts)


def rho_to_mono_word(r: int, n: int, w: Word, budget: Budget | None = None) -> Word:
    """Spell a rho-word that represents a pure monomial braid in monomial letters."""
    from .purebraid import sigma_to_aword

    b = BraidWord(n + 1, _rho_embed_word(w))
    if not is_pure(b):
        raise ValueError("rho-word is not a pure monomial braid")
    return pure_to_mono_word(r, n, sigma_to_aword(b), budget)


def mono_canonical_word(r: int, n: int, w: Word, budget: Budget | None = None) -> Word:
    """Canonical spelling in P(r,n): equal elements give identical words."""
    levels = mono_levels(r, n, w, budget)
    z = _zrn_levels(r, n)
    m = sum(s for _, s in levels[0])
    cands = sorted({0, m, m - 1, m + 1, m - 2, m + 2, -2, -1, 1, 2}, key=lambda d: (abs(d), d))
    best = None
    for d in cands:
        parts: list = []
        for k in range(n, 0, -1):
            parts.extend(free_reduce(levels[k - 1] + z[k - 1] ** (-d)))
        parts.extend(letter(ZRN, d))
        if best is None or len(parts) < len(best):
            best = parts
    return Word(best)


def mono_canonical(w: MonoWord, budget: Budget | None = None) -> MonoWord:
    return MonoWord(w.r, w.n, mono_canonical_word(w.r, w.n, w.word, budget))


def mono_simplify_word(r: int, n: int, w: Word, window: int = 8, budget: Budget | None = None) -> Word:
    """Never-longer spelling: canonical form if it is no longer, else window deletion."""
    base = normalize_central(w, ZRN)
    try:
        c = mono_canonical_word(r, n, base, _canon_budget(len(base), budget))
        if len(c) <= len(base):
            return c
    except BudgetExceeded:
        if budget is not None:
            budget.check()
    body, e = split_central(base, ZRN)
    table = _direct_table(r, n)
    try:
        body = _mono_window_delete(r, n, body, table, window, budget)
    except BudgetExceeded:
        pass
    return Word(body + letter(ZRN, e))


def _mono_window_delete(r, n, body, table, window, budget):
    # a window is trivial in P(r,n) iff its image is trivial in P_{n+1}
    cur = list(body)
    changed = True
    while changed:
        changed = False
        for size in range(min(window, len(cur)), 1, -1):
            i = 0
            while i + size <= len(cur):
                seg = Word(cur[i : i + size])
                tot: dict = {}
                for l, s in seg:
                    tot[l] = tot.get(l, 0) + s
                if not any(tot.values()) and pure_is_identity(n + 1, substitute(table, seg)):
                    cur = list(free_reduce(cur[:i] + cur[i + size :]))
                    changed = True
                    i = max(0, i - size)
                    if budget is not None:
                        budget.check()
                    continue
                i += 1
    return Word(cur)


# ---------------------------------------------------------------------------
# the center lemma


def _rho_eq(n: int, u: Word, v: Word) -> bool:
    return braid_equal(BraidWord(n + 1, _rho_embed_word(u)), BraidWord(n + 1, _rho_embed_word(v)))


def center_lemma_cases(r: int, n: int) -> list:
    cases = []
    X = {i: x_rho(i) for i in range(1, n + 1)}

    def add(cid, rel, fn):
        cases.append(CaseSpec(cid, rel, lambda b, fn=fn: fn()))

    prod = Word([s for i in range(1, n + 1) for s in X[i]])
    add("a:zeta=X1..Xn", "zeta_n = X_1 X_2 ... X_n", lambda: _rho_eq(n, zeta_rho(n), prod))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            add(f"b:X{i}X{j}", f"X_{i} X_{j} = X_{j} X_{i}", lambda i=i, j=j: _rho_eq(n, X[i] + X[j], X[j] + X[i]))
    for k in range(1, n + 1):
        def dk(k=k):
            lhs = substitute(_rho_table(r, n), dword(k, r))
            return braid_equal(BraidWord(n + 1, lhs), BraidWord(n + 1, _rho_embed_word(X[k] ** r)))

        add(f"c:D{k}=X{k}^r", f"D_{k} = X_{k}^{r}", dk)

    def dprod():
        lhs = _rho_embed_word(zeta_rho(n) ** r)
        rhs = substitute(_rho_table(r, n), zeta_r_word(r, n))
        return braid_equal(BraidWord(n + 1, lhs), BraidWord(n + 1, rhs))

    add("d:zeta^r=D1..Dn", "zeta_n^r = D_1 D_2 ... D_n", dprod)
    zr = _rho_embed_word(zeta_rho(n) ** r)
    for l in mono_generators(r, n):
        g = _rho_table(r, n)[l]
        name = format_word(letter(l))
        add(f"e:central:{name}", f"zeta_n^r {name} = {name} zeta_n^r",
            lambda g=g: braid_equal(BraidWord(n + 1, zr + g), BraidWord(n + 1, g + zr)))
    return cases


def center_lemma_suite(r: int, n: int, budget: Budget | None = None, jobs: int = 1) -> VerificationReport:
    """Center of P(r,n) and the identities used to compute it."""
    if r < 2 or n < 1:
        raise ValueError("center suite needs r >= 2 and n >= 1")
    return run_cases("center", {"r": r, "n": n}, center_lemma_cases(r, n), budget, jobs)


def monomial_relations(n: int) -> list[tuple[Word, Word]]:
    """The defining relations of B(r,n) as pairs of rho words."""
    rels = []
    if n >= 2:
        rels.append(((rho(0) + rho(1)) ** 2, (rho(1) + rho(0)) ** 2))
    for i in range(1, n - 1):
        rels.append((rho(i) + rho(i + 1) + rho(i), rho(i + 1) + rho(i) + rho(i + 1)))
    for i, j in combinations(range(n), 2):
        if j - i > 1:
            rels.append((rho(i) + rho(j), rho(j) + rho(i)))
    return rels


def image_is_pure(w: MonoWord, route: str = "direct") -> bool:
    return is_pure(mono_to_braid(w, route))
