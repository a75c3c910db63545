"""Word problem in the Artin braid group B_n.

Two independent oracles live here:

* :func:`garside_nf`, the left-greedy normal form (primary, polynomial);
* :func:`artin_act`, the faithful action on the free group F_n (cross-check,
  exponential in the worst case and therefore length-budgeted).

Permutation convention
----------------------
A :class:`Permutation` records, for each strand, where it ends:
``p.images[i-1]`` is the final position of the strand that starts at
position ``i``.  Products read left to right, ``(p * q)`` means "first p,
then q", so that ``permutation_of(u + v) == permutation_of(u) * permutation_of(v)``.

Internally the normal form stores each simple factor as an *arrangement*
``arr`` (0-based): ``arr[pos]`` is the starting position of the strand that
occupies ``pos`` after the factor.  Arrangements compose as
``arr_AB[p] = arr_A[arr_B[p]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .words import EMPTY, Word, invert, letter, substitute


class BudgetExceeded(RuntimeError):
    """Raised when an intermediate word grows past the caller's length budget."""


# ---------------------------------------------------------------------------
# BraidWord and permutations


@dataclass(frozen=True)
class BraidWord:
    """A word in sigma letters together with its strand count."""

    n: int
    word: Word = EMPTY

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("strand count must be at least 1")
        w = self.word if isinstance(self.word, Word) else Word(self.word)
        object.__setattr__(self, "word", w)
        for l, _ in w:
            if l[0] != "s" or not 1 <= l[1] <= self.n - 1:
                raise ValueError(f"letter {l!r} is not a generator of B_{self.n}")

    def __add__(self, other: "BraidWord") -> "BraidWord":
        _same_n(self, other)
        return BraidWord(self.n, self.word + other.word)

    def __len__(self) -> int:
        return len(self.word)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, invert(self.word))

    def __pow__(self, k: int) -> "BraidWord":
        return BraidWord(self.n, self.word ** k)

    def __str__(self) -> str:
        return str(self.word)


def sigma(i: int, k: int = 1) -> Word:
    """The word ``s_i^k``."""
    return letter(("s", i), k)


def _same_n(u: BraidWord, v: BraidWord) -> None:
    if u.n != v.n:
        raise ValueError(f"strand-count mismatch: {u.n} vs {v.n}")


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}``; ``images[i-1]`` is where strand ``i`` ends."""

    images: tuple

    def __post_init__(self):
        imgs = tuple(self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``self`` first, then ``other``."""
        return Permutation(tuple(other(self(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, 1))

    def cycles(self) -> str:
        """Cycle notation without fixed points, ``()`` for the identity."""
        seen = set()
        out = []
        for i in range(1, self.n + 1):
            if i in seen or self(i) == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self(i)
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(out) or "()"

    def __str__(self) -> str:
        return self.cycles()

    @classmethod
    def _from_arr(cls, arr: tuple) -> "Permutation":
        fin = [0] * len(arr)
        for pos, start in enumerate(arr):
            fin[start] = pos + 1
        return cls(tuple(fin))


def permutation_of(w: BraidWord) -> Permutation:
    """Image of ``w`` in the symmetric group."""
    pos = list(range(1, w.n + 1))  # pos[strand-1] = current position
    at = list(range(1, w.n + 1))  # at[position-1] = strand there
    for (_, i), _s in w.word:
        a, b = at[i - 1], at[i]
        at[i - 1], at[i] = b, a
        pos[a - 1], pos[b - 1] = i + 1, i
    return Permutation(tuple(pos))


def halftwist(n: int) -> BraidWord:
    """The positive half twist ``s1 (s2 s1) (s3 s2 s1) ...``."""
    if n < 2:
        raise ValueError("half twist needs n >= 2")
    out = []
    for k in range(1, n):
        for i in range(k, 0, -1):
            out.append((("s", i), 1))
    return BraidWord(n, Word(out))


# ---------------------------------------------------------------------------
# Garside normal form


@dataclass(frozen=True)
class GarsideNF:
    """``Delta^inf`` times a left-weighted sequence of proper simple factors."""

    n: int
    inf: int
    factors: tuple  # of Permutation

    def factor_words(self) -> list[Word]:
        """Each factor as a positive sigma word (bubble-sort order)."""
        return [_simple_word(_perm_to_arr(p)) for p in self.factors]

    def to_word(self) -> Word:
        """A sigma word representing this element."""
        if self.n < 2:
            return EMPTY
        d = halftwist(self.n).word ** self.inf
        out = list(d)
        for w in self.factor_words():
            out.extend(w)
        return Word(out)

    def __str__(self) -> str:
        fs = " | ".join(str(w) for w in self.factor_words())
        return f"inf={self.inf} [{fs}]"


def _perm_to_arr(p: Permutation) -> tuple:
    arr = [0] * p.n
    for start, fin in enumerate(p.images):
        arr[fin - 1] = start
    return tuple(arr)


def _simple_word(arr: tuple) -> Word:
    """Positive word of the permutation braid with arrangement ``arr``."""
    # sort arr to identity by adjacent swaps from the right end; each swap
    # peels sigma_i off the right of the braid.
    a = list(arr)
    n = len(a)
    peeled = []
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                peeled.append(i + 1)
                changed = True
    return Word((("s", i), 1) for i in reversed(peeled))


def _delta(n: int) -> tuple:
    return tuple(range(n - 1, -1, -1))


def _tau(arr: tuple) -> tuple:
    n = len(arr)
    return tuple(n - 1 - arr[n - 1 - p] for p in range(n))


def _compose(a: tuple, b: tuple) -> tuple:
    return tuple(a[x] for x in b)


def _inverse(a: tuple) -> tuple:
    inv = [0] * len(a)
    for p, x in enumerate(a):
        inv[x] = p
    return tuple(inv)


@lru_cache(maxsize=1 << 18)
def _left_weight(a: tuple, b: tuple) -> tuple:
    """Left-weight the pair (a, b); returns the new pair."""
    a = list(a)
    b = list(b)
    n = len(a)
    pos = [0] * n
    for p, x in enumerate(b):
        pos[x] = p
    while True:
        for i in range(n - 1):
            if pos[i] > pos[i + 1] and a[i] < a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                pi, pj = pos[i], pos[i + 1]
                b[pi], b[pj] = i + 1, i
                pos[i], pos[i + 1] = pj, pi
                break
        else:
            return tuple(a), tuple(b)


def _simples_of(n: int, w: Word) -> tuple[int, list]:
    """Rewrite ``w`` as ``Delta^-d`` times a list of simple arrangements."""
    ident = tuple(range(n))
    delta = _delta(n)
    items = []  # (sign, arr) in word order; negatives store the run's product
    cur = None
    cur_sign = 0
    for (_, i), s in w:
        i -= 1
        if cur is not None and s == cur_sign:
            # try to extend the run keeping it simple
            if s > 0:
                if cur[i] < cur[i + 1]:
                    cur = list(cur)
                    cur[i], cur[i + 1] = cur[i + 1], cur[i]
                    cur = tuple(cur)
                    continue
            else:
                # the run is P^-1 with P = s_last ... s_first; prepend s_i to P
                pos = _inverse(cur)
                if pos[i] < pos[i + 1]:
                    cur = tuple(i + 1 if x == i else i if x == i + 1 else x for x in cur)
                    continue
        if cur is not None:
            items.append((cur_sign, cur))
        t = list(ident)
        t[i], t[i + 1] = t[i + 1], t[i]
        cur, cur_sign = tuple(t), s
    if cur is not None:
        items.append((cur_sign, cur))
    d = 0
    out = []
    for s, arr in reversed(items):
        if s > 0:
            out.append(_tau(arr) if d % 2 else arr)
        else:
            x = _compose(delta, _inverse(arr))
            out.append(_tau(x) if d % 2 else x)
            d += 1
    out.reverse()
    return d, out


def _normal_form(n: int, w: Word) -> tuple[int, tuple]:
    if n < 2:
        return 0, ()
    ident = tuple(range(n))
    delta = _delta(n)
    d, simples = _simples_of(n, w)
    inf = -d
    fs: list = []
    for x in simples:
        if x == ident:
            continue
        if x == delta and not fs:
            inf += 1
            continue
        fs.append(x)
        k = len(fs) - 2
        while k >= 0:
            a, b = fs[k], fs[k + 1]
            na, nb = _left_weight(a, b)
            if na == a:
                break
            fs[k], fs[k + 1] = na, nb
            k -= 1
        while fs and fs[-1] == ident:
            fs.pop()
        while fs and fs[0] == delta:
            fs.pop(0)
            inf += 1
    return inf, tuple(fs)


_NF_CACHE: dict = {}
_NF_CACHE_LIMIT = 400_000


def garside_nf(w: BraidWord) -> GarsideNF:
    """Left-greedy normal form; equal braids get identical forms."""
    inf, fs = _nf_key(w.n, w.word)
    return GarsideNF(w.n, inf, tuple(Permutation._from_arr(a) for a in fs))


def _nf_key(n: int, w: Word) -> tuple[int, tuple]:
    key = (n, w)
    hit = _NF_CACHE.get(key)
    if hit is None:
        if len(_NF_CACHE) >= _NF_CACHE_LIMIT:
            _NF_CACHE.clear()
        hit = _NF_CACHE[key] = _normal_form(n, w)
    return hit


def is_left_weighted(nf: GarsideNF) -> bool:
    arrs = [_perm_to_arr(p) for p in nf.factors]
    n = nf.n
    ident, delta = tuple(range(n)), _delta(n)
    if any(a in (ident, delta) for a in arrs):
        return False
    return all(_left_weight(a, b) == (a, b) for a, b in zip(arrs, arrs[1:]))


def braid_equal(u: BraidWord, v: BraidWord) -> bool:
    """Whether ``u`` and ``v`` are the same element of B_n."""
    _same_n(u, v)
    if u.word == v.word:
        return True
    return _nf_key(u.n, u.word) == _nf_key(v.n, v.word)


def braid_is_identity(w: BraidWord) -> bool:
    return _nf_key(w.n, w.word) == (0, ())


def cache_items() -> list:
    """Snapshot of the normal-form cache as ``((n, word), (inf, factors))`` pairs."""
    return list(_NF_CACHE.items())


def remember(n: int, w: Word, value: tuple) -> None:
    """Seed the normal-form cache (used when loading a persisted cache)."""
    _NF_CACHE[(n, Word(w))] = value


def clear_caches() -> None:
    _NF_CACHE.clear()
    _left_weight.cache_clear()


# ---------------------------------------------------------------------------
# Artin action on the free group


def _artin_letter(i: int, s: int, n: int) -> dict:
    x = lambda k, e=1: letter(("x", k), e)  # noqa: E731
    table = {k: x(k) for k in range(1, n + 1)}
    if s > 0:
        table[i] = x(i) + x(i + 1) + x(i, -1)
        table[i + 1] = x(i)
    else:
        table[i] = x(i + 1)
        table[i + 1] = x(i + 1, -1) + x(i) + x(i + 1)
    return {("x", k): v for k, v in table.items()}


def artin_images(w: BraidWord, max_len: int | None = None) -> dict:
    """Images of every ``x_k`` under the automorphism induced by ``w``."""
    n = w.n
    images = {("x", k): letter(("x", k)) for k in range(1, n + 1)}
    for (_, i), s in w.word:
        step = _artin_letter(i, s, n)
        images = {key: substitute(images, val) for key, val in step.items()}
        if max_len is not None and any(len(v) > max_len for v in images.values()):
            raise BudgetExceeded(f"free-group image exceeded {max_len} letters")
    return images


def artin_act(w: BraidWord, k: int, max_len: int | None = None) -> Word:
    """Image of ``x_k`` under the Artin action of ``w``."""
    if not 1 <= k <= w.n:
        raise ValueError(f"generator index {k} out of range 1..{w.n}")
    return artin_images(w, max_len)[("x", k)]


def artin_equal(u: BraidWord, v: BraidWord, max_len: int = 20000) -> bool:
    """Equality through the free-group action; raises BudgetExceeded on blowup."""
    _same_n(u, v)
    return artin_images(u, max_len) == artin_images(v, max_len)


