"""The pure braid group P_n in the A-alphabet.

Combing
-------
``U_k = <A_{1,k}, ..., A_{k-1,k}>`` is free and normal in ``P_k`` and
``P_k = U_k x| P_{k-1}``.  Every pure braid is therefore uniquely a product
``u_n u_{n-1} ... u_2`` with ``u_k`` a reduced word in ``U_k``; that tuple is
the :class:`CombedForm`.  The central letter ``Z`` is absorbed into the
levels (``e`` is always 0 in forms built here): ``Z = d_n ... d_2`` with
``d_k = A_{1,k} ... A_{k-1,k}``, and ``d_k`` commutes with ``P_{k-1}``.

A sigma word is first rewritten into A-letters with a Reidemeister-Schreier
pass over the positive permutation-braid transversal, then combed by pushing
each level's letters to the left through the conjugation action of the
lower levels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .braid import BraidWord, BudgetExceeded, braid_equal, braid_is_identity, permutation_of
from .report import Budget, CaseSpec, VerificationReport, run_cases
from .words import (
    EMPTY,
    Z,
    Alphabet,
    Word,
    commutator,
    format_word,
    free_reduce,
    invert,
    letter,
    normalize_central,
    split_central,
    substitute,
)


def A(i: int, j: int, k: int = 1) -> Word:
    """The word ``A_{i,j}^k``."""
    return letter(("A", i, j), k)


def ZW(k: int = 1) -> Word:
    return letter(Z, k)


@dataclass(frozen=True)
class PureWord:
    """A reduced word in ``A_{i,j}`` and the central letter ``Z``."""

    n: int
    word: Word = EMPTY

    def __post_init__(self):
        w = free_reduce(self.word)
        Alphabet("pureA", self.n).check(w)
        object.__setattr__(self, "word", w)

    def __add__(self, other: "PureWord") -> "PureWord":
        if other.n != self.n:
            raise ValueError("strand-count mismatch")
        return PureWord(self.n, self.word + other.word)

    def inverse(self) -> "PureWord":
        return PureWord(self.n, invert(self.word))

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_word(self.word)


def _check_pair(i: int, j: int, n: int) -> None:
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")


# ---------------------------------------------------------------------------
# sigma forms


@lru_cache(maxsize=None)
def _agen_left(i: int, j: int) -> Word:
    up = [(("s", k), 1) for k in range(j - 1, i, -1)]
    return Word(up + [(("s", i), 1)] * 2 + [(("s", k), -1) for k in range(i + 1, j)])


@lru_cache(maxsize=None)
def _agen_right(i: int, j: int) -> Word:
    down = [(("s", k), -1) for k in range(i, j - 1)]
    return Word(down + [(("s", j - 1), 1)] * 2 + [(("s", k), 1) for k in range(j - 2, i - 1, -1)])


def agen_sigma(i: int, j: int, n: int, variant: str = "left") -> BraidWord:
    """``A_{i,j}`` as a sigma word; ``left`` and ``right`` are the two standard spellings."""
    _check_pair(i, j, n)
    if variant == "left":
        return BraidWord(n, _agen_left(i, j))
    if variant == "right":
        return BraidWord(n, _agen_right(i, j))
    raise ValueError(f"unknown variant {variant!r}")


@lru_cache(maxsize=None)
def delta_level(k: int) -> Word:
    """``A_{1,k} A_{2,k} ... A_{k-1,k}``."""
    return Word((("A", i, k), 1) for i in range(1, k))


@lru_cache(maxsize=None)
def z_aform(n: int) -> Word:
    """The product ``(A_{1,2})(A_{1,3}A_{2,3})...(A_{1,n}...A_{n-1,n})``."""
    out: list = []
    for k in range(2, n + 1):
        out.extend(delta_level(k))
    return Word(out)


@lru_cache(maxsize=None)
def z_sigma(n: int) -> Word:
    """``(s_1 s_2 ... s_{n-1})^n``."""
    return Word([(("s", i), 1) for i in range(1, n)] * n)


def zword(n: int) -> tuple[PureWord, BraidWord]:
    """The generator of the center of P_n in both alphabets."""
    if n < 2:
        raise ValueError("zword needs n >= 2")
    return PureWord(n, z_aform(n)), BraidWord(n, z_sigma(n))


@lru_cache(maxsize=None)
def _sigma_table(n: int) -> dict:
    t = {("A", i, j): _agen_left(i, j) for i, j in combinations(range(1, n + 1), 2)}
    t[Z] = z_sigma(n)
    return t


def to_sigma_word(n: int, w: Word) -> Word:
    """Expand A-letters and Z into sigma letters (no reduction beyond the free one)."""
    return substitute(_sigma_table(n), w)


def to_sigma(w: PureWord) -> BraidWord:
    return BraidWord(w.n, to_sigma_word(w.n, w.word))


def pure_is_identity(n: int, w: Word) -> bool:
    w = normalize_central(w, Z)
    if not w:
        return True
    if n < 2:
        return True
    return braid_is_identity(BraidWord(n, to_sigma_word(n, w)))


def pure_equal_words(n: int, u: Word, v: Word) -> bool:
    if u == v:
        return True
    if n < 2:
        return True
    return braid_equal(BraidWord(n, to_sigma_word(n, u)), BraidWord(n, to_sigma_word(n, v)))


def pure_equal(u: PureWord, v: PureWord) -> bool:
    """Equality in P_n, decided by the Garside normal form in B_n."""
    if u.n != v.n:
        raise ValueError("strand-count mismatch")
    return pure_equal_words(u.n, u.word, v.word)


def is_pure(w: BraidWord) -> bool:
    return permutation_of(w).is_identity()


# ---------------------------------------------------------------------------
# conjugation actions used by combing


@lru_cache(maxsize=None)
def _lower_conj(r: int, s: int, sign: int, k: int) -> dict:
    """Table of ``x -> y x y^-1`` on U_k for ``y = A_{r,s}^sign``, ``s < k``."""
    t = {}
    ark, ask = A(r, k), A(s, k)
    for i in range(1, k):
        x = A(i, k)
        if sign < 0:  # y = A_{r,s}^-1, x -> A_{r,s}^-1 x A_{r,s}
            if i == s:
                img = ark + x + A(r, k, -1)
            elif i == r:
                img = ark + ask + x + A(s, k, -1) + A(r, k, -1)
            elif r < i < s:
                K = commutator(ark, ask)
                img = K + x + invert(K)
            else:
                img = x
        else:  # y = A_{r,s}, the inverse action
            if i == r:
                img = A(s, k, -1) + x + ask
            elif i == s:
                img = A(s, k, -1) + A(r, k, -1) + ask + ark + ask
            elif r < i < s:
                M = A(r, k, -1) + A(s, k, -1) + ark + ask
                img = invert(M) + x + M
            else:
                img = x
        t[("A", i, k)] = free_reduce(img)
    return t


def _comb_aword(n: int, w: Word, budget: Budget | None = None) -> list[Word]:
    """Levels ``[u_2, ..., u_n]`` of a Z-free A-word."""
    levels: list = [EMPTY] * (n + 1)
    cur = list(w)
    for k in range(n, 1, -1):
        stack: list = []
        lower: list = []
        for l, s in reversed(cur):
            if l[2] == k:
                if stack and stack[0][0] == l and stack[0][1] == -s:
                    stack.pop(0)
                else:
                    stack.insert(0, (l, s))
            else:
                if stack:
                    stack = list(substitute(_lower_conj(l[1], l[2], s, k), stack))
                    if budget is not None:
                        budget.note(len(stack))
                lower.append((l, s))
        lower.reverse()
        levels[k] = Word(stack)
        cur = lower
    return levels[2:]


# ---------------------------------------------------------------------------
# sigma -> A rewriting


@lru_cache(maxsize=None)
def _sigma_conj(k: int, n: int) -> dict:
    """Table of ``x -> s_k x s_k^-1`` on the A-generators of P_n."""
    t = {}
    for i, j in combinations(range(1, n + 1), 2):
        if i == k and j > k + 1:
            img = A(k + 1, j)
        elif i == k + 1:
            img = A(k, k + 1) + A(k, j) + A(k, k + 1, -1)
        elif j == k and i < k:
            img = A(i, k + 1)
        elif j == k + 1 and i < k:
            img = A(k, k + 1) + A(i, k) + A(k, k + 1, -1)
        else:
            img = A(i, j)
        t[("A", i, j)] = img
    return t


def _transversal_parent(arr: tuple) -> tuple[tuple, int] | None:
    """Write ``T(arr) = T(parent) s_k`` with the smallest possible k."""
    for i in range(len(arr) - 1):
        if arr[i] > arr[i + 1]:
            p = list(arr)
            p[i], p[i + 1] = p[i + 1], p[i]
            return tuple(p), i + 1
    return None


@lru_cache(maxsize=None)
def _transversal_conj(arr: tuple) -> dict:
    """Table of ``x -> T x T^-1`` for the permutation braid ``T`` of ``arr``."""
    n = len(arr)
    par = _transversal_parent(arr)
    if par is None:
        return {("A", i, j): A(i, j) for i, j in combinations(range(1, n + 1), 2)}
    parent, k = par
    outer = _transversal_conj(parent)
    step = _sigma_conj(k, n)
    return {key: canonical_word(n, substitute(outer, img)) for key, img in step.items()}


def sigma_to_aword(w: BraidWord) -> Word:
    """Rewrite a pure sigma word as an A-word representing the same element."""
    if not is_pure(w):
        raise ValueError("braid is not pure")
    n = w.n
    arr = list(range(n))
    out: list = []
    for (_, i), s in w.word:
        p = i - 1
        if s > 0:
            if arr[p] < arr[p + 1]:
                arr[p], arr[p + 1] = arr[p + 1], arr[p]
            else:
                arr[p], arr[p + 1] = arr[p + 1], arr[p]
                out.extend(_transversal_conj(tuple(arr))[("A", i, i + 1)])
        else:
            if arr[p] > arr[p + 1]:
                arr[p], arr[p + 1] = arr[p + 1], arr[p]
            else:
                out.extend(invert(_transversal_conj(tuple(arr))[("A", i, i + 1)]))
                arr[p], arr[p + 1] = arr[p + 1], arr[p]
    return free_reduce(out)


# ---------------------------------------------------------------------------
# combed and canonical forms


@dataclass(frozen=True)
class CombedForm:
    """Levels ``u_2 .. u_n`` (stored in that order) and the central exponent."""

    n: int
    e: int
    levels: tuple

    def level(self, k: int) -> Word:
        return self.levels[k - 2]

    def to_word(self) -> Word:
        """``u_n u_{n-1} ... u_2 Z^e``."""
        out: list = []
        for u in reversed(self.levels):
            out.extend(u)
        out.extend(letter(Z, self.e))
        return Word(out)

    def __str__(self) -> str:
        parts = [f"L{k}: {format_word(self.level(k)) or '1'}" for k in range(self.n, 1, -1)]
        return "; ".join(parts) + f"; e={self.e}"


def comb_word(n: int, w: Word, budget: Budget | None = None) -> CombedForm:
    """Comb an A-word (Z allowed) into levels with ``e = 0``."""
    body, e = split_central(w, Z)
    levels = _comb_aword(n, free_reduce(body), budget)
    if e:
        levels = [free_reduce(u + delta_level(k) ** e) for k, u in zip(range(2, n + 1), levels)]
    return CombedForm(n, 0, tuple(levels))


def comb(w, budget: Budget | None = None) -> CombedForm:
    """Combed form of a pure braid given as a BraidWord or a PureWord."""
    if isinstance(w, PureWord):
        return comb_word(w.n, w.word, budget)
    return comb_word(w.n, sigma_to_aword(w), budget)


def _best_central_split(cf: CombedForm) -> Word:
    n = cf.n
    if n < 2:
        return EMPTY
    m = sum(s for _, s in cf.level(2))
    cands = sorted({0, m, m - 1, m + 1, m - 2, m + 2, -2, -1, 1, 2}, key=lambda d: (abs(d), d))
    best = None
    for d in cands:
        parts: list = []
        for k in range(n, 1, -1):
            parts.extend(free_reduce(cf.level(k) + delta_level(k) ** (-d)))
        parts.extend(letter(Z, d))
        if best is None or len(parts) < len(best):
            best = parts
    return Word(best)


def canonical_word(n: int, w: Word, budget: Budget | None = None) -> Word:
    """A canonical spelling: equal elements of P_n get identical words."""
    if n < 2:
        return EMPTY
    return _best_central_split(comb_word(n, w, budget))


def canonical(w: PureWord, budget: Budget | None = None) -> PureWord:
    return PureWord(w.n, canonical_word(w.n, w.word, budget))


# ---------------------------------------------------------------------------
# simplification


def _exponents_vanish(w) -> bool:
    tot: dict = {}
    for l, s in w:
        tot[l] = tot.get(l, 0) + s
    return not any(tot.values())


def window_delete(n: int, w: Word, window: int = 8, budget: Budget | None = None) -> Word:
    """Drop subwords of length 2..window that are trivial in P_n, longest first."""
    cur = list(w)
    changed = True
    while changed:
        changed = False
        for size in range(min(window, len(cur)), 1, -1):
            i = 0
            while i + size <= len(cur):
                seg = cur[i : i + size]
                if _exponents_vanish(seg) and pure_is_identity(n, Word(seg)):
                    cur = list(free_reduce(cur[:i] + cur[i + size :]))
                    changed = True
                    i = max(0, i - size)
                    if budget is not None:
                        budget.check()
                    continue
                i += 1
    return Word(cur)


def _canon_budget(length: int, outer: Budget | None) -> Budget:
    """Length cap for a canonical-form attempt; combed words can be exponentially long."""
    ms = None
    if outer is not None and outer.ms is not None:
        ms = max(0.0, outer.ms - outer.elapsed_ms())
    return Budget(ms=ms, max_len=8 * length + 64)


def simplify_word(n: int, w: Word, window: int = 8, budget: Budget | None = None, canon: bool = True) -> Word:
    base = normalize_central(w, Z)
    if canon:
        try:
            c = canonical_word(n, base, _canon_budget(len(base), budget))
            if len(c) <= len(base):
                return c
        except BudgetExceeded:
            if budget is not None:
                budget.check()
    body, e = split_central(base, Z)
    try:
        body = window_delete(n, body, window, budget)
    except BudgetExceeded:
        pass
    return Word(body + letter(Z, e))


def simplify(w: PureWord, window: int = 8, budget: Budget | None = None) -> PureWord:
    """Shorter spelling of the same element; never longer than the input."""
    out = simplify_word(w.n, w.word, window, budget)
    if len(out) > len(w.word):
        return w
    return PureWord(w.n, out)


# ---------------------------------------------------------------------------
# the presentation


_CASES = (
    ("i<r<s<j", lambda r, s, i, j: i < r < s < j),
    ("r<s<i<j", lambda r, s, i, j: r < s < i < j),
    ("r<s=i<j", lambda r, s, i, j: r < s == i < j),
    ("r=i<s<j", lambda r, s, i, j: r == i < s < j),
    ("r<i<s<j", lambda r, s, i, j: r < i < s < j),
)


def relation_rhs(case: int, r: int, s: int, i: int, j: int) -> Word:
    """Right side of ``A_{r,s}^-1 A_{i,j} A_{r,s}`` for the numbered case (1..5)."""
    x = A(i, j)
    if case in (1, 2):
        return x
    if case == 3:
        return A(r, j) + x + A(r, j, -1)
    if case == 4:
        return A(r, j) + A(s, j) + x + A(s, j, -1) + A(r, j, -1)
    K = commutator(A(r, j), A(s, j))
    return K + x + invert(K)


def relation_instances(n: int):
    """Every ``(case, r, s, i, j)`` covered by the pure braid relations."""
    pairs = list(combinations(range(1, n + 1), 2))
    for r, s in pairs:
        for i, j in pairs:
            for c, (_, pred) in enumerate(_CASES, 1):
                if pred(r, s, i, j):
                    yield c, r, s, i, j


def _pb_case(n, c, r, s, i, j):
    lhs = A(r, s, -1) + A(i, j) + A(r, s)
    rhs = relation_rhs(c, r, s, i, j)

    def run(budget: Budget):
        budget.note(len(to_sigma_word(n, lhs + invert(rhs))))
        if pure_equal_words(n, lhs, rhs):
            return True
        return False, [format_word(lhs), format_word(rhs)]

    rel = f"A{r}.{s}^-1 A{i}.{j} A{r}.{s} = {format_word(rhs)}"
    return CaseSpec(f"c{c}:r{r}s{s}i{i}j{j}", rel, run, _CASES[c - 1][0])


def purebraid_cases(n: int) -> list:
    return [_pb_case(n, *inst) for inst in relation_instances(n)]


def relation_suite_purebraid(n: int, budget: Budget | None = None, jobs: int = 1) -> VerificationReport:
    """Check every instance of the five relation families in P_n."""
    if n < 2:
        raise ValueError("purebraid suite needs n >= 2")
    return run_cases("purebraid", {"n": n}, purebraid_cases(n), budget, jobs)
