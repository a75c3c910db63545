"""Signed-letter words over the finite alphabets used throughout the package.

A letter is a small tuple whose first entry names its kind::

    ("s", i)          sigma_i                   text: s<i>
    ("A", i, j)       pure braid generator      text: A<i>.<j>
    ("A", i, j, q)    pure monomial generator   text: A<i>.<j>.<q>
    ("C", j)          pure monomial generator   text: C<j>
    ("r", i)          rho_i                     text: r<i>
    ("x", i)          free generator            text: x<i>
    ("Z",)            center of P_n             text: Z
    ("Zrn",)          center of P(r, n)         text: Zrn

A word is an immutable tuple of ``(letter, sign)`` pairs with ``sign`` in
``{+1, -1}``.  Powers are always expanded.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping

Letter = tuple
Syllable = tuple  # (Letter, int)

Z = ("Z",)
ZRN = ("Zrn",)


class Word(tuple):
    """Immutable sequence of ``(letter, sign)`` pairs."""

    __slots__ = ()

    def __new__(cls, syllables: Iterable[Syllable] = ()):
        return super().__new__(cls, syllables)

    def __add__(self, other):  # concatenation, no reduction
        return Word(tuple.__add__(self, tuple(other)))

    def __pow__(self, k: int) -> "Word":
        if k >= 0:
            return Word(tuple(self) * k)
        return invert(self) ** (-k)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    @property
    def inverse(self) -> "Word":
        return invert(self)


EMPTY = Word()


def letter(l: Letter, k: int = 1) -> Word:
    """The word ``l^k``."""
    s = 1 if k > 0 else -1
    return Word(((l, s),) * abs(k))


def word(*parts) -> Word:
    """Concatenate letters, ``(letter, power)`` pairs and words."""
    out: list = []
    for p in parts:
        if isinstance(p, Word):
            out.extend(p)
        elif isinstance(p, tuple) and len(p) == 2 and isinstance(p[0], tuple) and isinstance(p[1], int):
            out.extend(letter(p[0], p[1]))
        else:
            out.append((p, 1))
    return Word(out)


def free_reduce(w: Iterable[Syllable]) -> Word:
    out: list = []
    for syl in w:
        if out and out[-1][0] == syl[0] and out[-1][1] == -syl[1]:
            out.pop()
        else:
            out.append(syl)
    return Word(out)


def is_reduced(w: Word) -> bool:
    return all(not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(w, w[1:]))


def invert(w: Iterable[Syllable]) -> Word:
    return Word((l, -s) for l, s in reversed(tuple(w)))


def conjugate(y: Word, x: Word) -> Word:
    """``y^x = x^-1 y x``, freely reduced."""
    return free_reduce(invert(x) + y + x)


def commutator(u: Word, v: Word) -> Word:
    """``[u, v] = u v u^-1 v^-1``, freely reduced."""
    return free_reduce(u + v + invert(u) + invert(v))


def exponent_sum(w: Word, l: Letter) -> int:
    return sum(s for x, s in w if x == l)


def normalize_central(w: Iterable[Syllable], z: Letter) -> Word:
    """Collect every ``z^{+-1}`` into a single power at the tail.

    Only meaningful when ``z`` is central in the group the word represents.
    The non-central part is freely reduced afterwards.
    """
    e = 0
    rest = []
    for l, s in w:
        if l == z:
            e += s
        else:
            rest.append((l, s))
    return Word(tuple(free_reduce(rest)) + tuple(letter(z, e)))


def split_central(w: Iterable[Syllable], z: Letter) -> tuple[Word, int]:
    e = 0
    rest = []
    for l, s in w:
        if l == z:
            e += s
        else:
            rest.append((l, s))
    return Word(rest), e


# ---------------------------------------------------------------------------
# alphabets


@dataclass(frozen=True)
class Alphabet:
    """A finite, totally ordered alphabet.

    ``kind`` is one of ``sigma``, ``pureA``, ``rho``, ``monoA``, ``freeX``.
    ``n`` is the strand count (or rank for ``freeX``); ``r`` is only used
    by ``monoA``.
    """

    kind: str
    n: int
    r: int = 0
    letters: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n, r = self.n, self.r
        if self.kind == "sigma":
            ls = [("s", i) for i in range(1, n)]
        elif self.kind == "pureA":
            ls = [("A", i, j) for i, j in combinations(range(1, n + 1), 2)] + [Z]
        elif self.kind == "rho":
            ls = [("r", i) for i in range(n)]
        elif self.kind == "monoA":
            if r < 1:
                raise ValueError("monoA alphabet needs r >= 1")
            ls = [("C", j) for j in range(1, n + 1)]
            ls += [("A", i, j, q) for i, j in combinations(range(1, n + 1), 2) for q in range(1, r + 1)]
            ls.append(ZRN)
        elif self.kind == "freeX":
            ls = [("x", i) for i in range(1, n + 1)]
        else:
            raise ValueError(f"unknown alphabet kind {self.kind!r}")
        object.__setattr__(self, "letters", tuple(ls))

    @property
    def central(self) -> Letter | None:
        return {"pureA": Z, "monoA": ZRN}.get(self.kind)

    def __contains__(self, l) -> bool:
        return l in self._letterset

    @property
    def _letterset(self) -> frozenset:
        return _letterset(self)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def check(self, w: Word) -> Word:
        for l, s in w:
            if l not in self:
                raise ValueError(f"letter {format_letter(l)} is not in the {self.kind} alphabet (n={self.n}, r={self.r})")
            if s not in (1, -1):
                raise ValueError(f"bad sign {s!r}")
        return w


_LETTERSETS: dict = {}


def _letterset(a: Alphabet) -> frozenset:
    key = (a.kind, a.n, a.r)
    s = _LETTERSETS.get(key)
    if s is None:
        s = _LETTERSETS[key] = frozenset(a.letters)
    return s


# ---------------------------------------------------------------------------
# generator maps


@dataclass(frozen=True)
class GeneratorMap:
    """Images of the generators of a finitely generated group.

    ``images`` maps every non-central source letter to a word; the central
    letter (if any) is sent to ``central^central_exponent``.  Letters without
    an entry are rejected by :func:`substitute`.
    """

    images: Mapping
    central: Letter | None = None
    central_exponent: int = 1

    def image(self, l: Letter) -> Word:
        if self.central is not None and l == self.central:
            return letter(self.central, self.central_exponent)
        try:
            return self.images[l]
        except KeyError:
            raise KeyError(f"letter {format_letter(l)} is outside the source alphabet of this map") from None


def substitute(m, w: Iterable[Syllable]) -> Word:
    """Apply the homomorphism ``m`` to ``w`` and freely reduce.

    ``m`` may be a :class:`GeneratorMap` or a plain mapping from letters to
    words.
    """
    get = m.image if isinstance(m, GeneratorMap) else m.__getitem__
    out: list = []
    cache: dict = {}
    for l, s in w:
        key = (l, s)
        img = cache.get(key)
        if img is None:
            img = get(l)
            if s < 0:
                img = invert(img)
            cache[key] = img
        for syl in img:
            if out and out[-1][0] == syl[0] and out[-1][1] == -syl[1]:
                out.pop()
            else:
                out.append(syl)
    return Word(out)


# ---------------------------------------------------------------------------
# text format

_TOKEN = re.compile(
    r"^(?:(?P<zrn>Zrn)|(?P<z>Z)|s(?P<s>\d+)|A(?P<a1>\d+)\.(?P<a2>\d+)(?:\.(?P<a3>\d+))?"
    r"|C(?P<c>\d+)|r(?P<r>\d+)|x(?P<x>\d+))(?:\^(?P<pow>[+-]?\d+))?$"
)


def parse_letter_token(tok: str) -> tuple[Letter, int]:
    m = _TOKEN.match(tok)
    if not m:
        raise ValueError(f"cannot parse token {tok!r}")
    g = m.groupdict()
    if g["zrn"]:
        l = ZRN
    elif g["z"]:
        l = Z
    elif g["s"] is not None:
        l = ("s", int(g["s"]))
    elif g["a1"] is not None:
        if g["a3"] is not None:
            l = ("A", int(g["a1"]), int(g["a2"]), int(g["a3"]))
        else:
            l = ("A", int(g["a1"]), int(g["a2"]))
    elif g["c"] is not None:
        l = ("C", int(g["c"]))
    elif g["r"] is not None:
        l = ("r", int(g["r"]))
    else:
        l = ("x", int(g["x"]))
    k = int(g["pow"]) if g["pow"] is not None else 1
    if k == 0:
        raise ValueError(f"zero power in token {tok!r}")
    return l, k


def parse_word(text: str, alphabet: Alphabet | None = None) -> Word:
    """Parse the whitespace separated token grammar; empty text is the identity."""
    out: list = []
    for tok in text.split():
        l, k = parse_letter_token(tok)
        out.extend(letter(l, k))
    w = Word(out)
    if alphabet is not None:
        alphabet.check(w)
    return w


def format_letter(l: Letter) -> str:
    kind = l[0]
    if kind in ("Z", "Zrn"):
        return kind
    if kind == "A":
        return "A" + ".".join(str(x) for x in l[1:])
    return f"{kind}{l[1]}"


def format_word(w: Iterable[Syllable], compress: bool = True) -> str:
    """Inverse of :func:`parse_word`; runs are written as powers."""
    w = tuple(w)
    toks = []
    i = 0
    while i < len(w):
        l, s = w[i]
        k = 1
        if compress:
            while i + k < len(w) and w[i + k] == (l, s):
                k += 1
        p = s * k
        name = format_letter(l)
        toks.append(name if p == 1 else f"{name}^{p}")
        i += k
    return " ".join(toks)
