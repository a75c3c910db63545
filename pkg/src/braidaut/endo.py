"""Endomorphisms of P_n and P(r,n) given by generator images.

Composition follows the right-action convention ``a . b = b o a``: the
product ``w_1 w_2 ... w_k`` sends ``g`` to ``w_k( ... w_1(g))``.  Worked
example, with ``psi`` and ``phi = phi_{1,3}`` on P_3::

    (psi . phi)(A1.2) = phi(A1.2 Z^-2) = A1.2 Z Z^-2 = A1.2 Z^-1
    (phi . psi)(A1.2) = psi(A1.2 Z)    = A1.2 Z^-2 Z^-1 = A1.2 Z^-3

The two orders differ, and the unit tests pin both values down.

Equality verdicts always come from the Garside oracle; canonical forms are
only used to keep intermediate words short.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .monomial import mono_generators, mono_is_identity, mono_simplify_word, mono_to_pure_word, zeta_r_word
from .purebraid import (
    canonical_word,
    pure_equal_words,
    pure_is_identity,
    relation_instances,
    relation_rhs,
    simplify_word,
    z_aform,
)
from .report import Budget, CaseSpec
from .words import (
    EMPTY,
    ZRN,
    Alphabet,
    GeneratorMap,
    Word,
    Z,
    format_letter,
    format_word,
    free_reduce,
    invert,
    letter,
    normalize_central,
    substitute,
)


# ---------------------------------------------------------------------------
# group contexts


@dataclass(frozen=True)
class PureGroup:
    """P_n with the central letter Z."""

    n: int
    window: int = 8

    kind = "pure"

    @property
    def central(self):
        return Z

    @property
    def generators(self) -> list:
        return [l for l in Alphabet("pureA", self.n).letters if l != Z]

    @property
    def label(self) -> str:
        return f"P_{self.n}"

    def simplify(self, w: Word, budget: Budget | None = None) -> Word:
        return simplify_word(self.n, w, self.window, budget)

    def is_identity(self, w: Word) -> bool:
        return pure_is_identity(self.n, w)

    def equal(self, u: Word, v: Word) -> bool:
        return pure_equal_words(self.n, u, v)

    def central_word(self) -> Word:
        """Z written in the other generators."""
        return z_aform(self.n)


@dataclass(frozen=True)
class MonoGroup:
    """P(r,n) with the central letter Zrn."""

    r: int
    n: int
    window: int = 8

    kind = "mono"

    @property
    def central(self):
        return ZRN

    @property
    def generators(self) -> list:
        return mono_generators(self.r, self.n)

    @property
    def label(self) -> str:
        return f"P({self.r},{self.n})"

    def simplify(self, w: Word, budget: Budget | None = None) -> Word:
        return mono_simplify_word(self.r, self.n, w, self.window, budget)

    def is_identity(self, w: Word) -> bool:
        return mono_is_identity(self.r, self.n, w)

    def equal(self, u: Word, v: Word) -> bool:
        return self.is_identity(free_reduce(u + invert(v)))

    def central_word(self) -> Word:
        return zeta_r_word(self.r, self.n)


# ---------------------------------------------------------------------------
# endomorphisms


@dataclass(frozen=True)
class Endo:
    """Images of the non-central generators plus ``central -> central^e``."""

    group: object
    images: tuple  # ((letter, Word), ...) in generator order
    e: int = 1
    name: str = ""

    @classmethod
    def from_dict(cls, group, images: dict, e: int = 1, name: str = "") -> "Endo":
        gens = group.generators
        missing = [g for g in gens if g not in images]
        if missing:
            images = dict(images)
            for g in missing:
                images[g] = letter(g)
        return cls(group, tuple((g, free_reduce(images[g])) for g in gens), e, name)

    @property
    def table(self) -> dict:
        return _table(self)

    def image(self, l) -> Word:
        if l == self.group.central:
            return letter(l, self.e)
        return self.table[l]

    def gmap(self) -> GeneratorMap:
        return GeneratorMap(self.table, self.group.central, self.e)

    def apply(self, w: Word, budget: Budget | None = None, simplify: bool = True) -> Word:
        out = substitute(self.gmap(), w)
        if budget is not None:
            budget.note(len(out))
        if simplify:
            out = self.group.simplify(out, budget)
        return out

    def named(self, name: str) -> "Endo":
        return Endo(self.group, self.images, self.e, name)

    def __str__(self) -> str:
        lines = [f"{self.name or 'endo'} on {self.group.label}:"]
        for g, w in self.images:
            lines.append(f"  {format_letter(g)} -> {format_word(w) or '1'}")
        c = self.group.central
        lines.append(f"  {format_letter(c)} -> {format_word(letter(c, self.e)) or '1'}")
        return "\n".join(lines)


@lru_cache(maxsize=4096)
def _table(a: Endo) -> dict:
    return dict(a.images)


def identity(group) -> Endo:
    return Endo.from_dict(group, {}, 1, "id")


def compose(a: Endo, b: Endo, budget: Budget | None = None) -> Endo:
    """The product ``a . b``: first a, then b."""
    if a.group != b.group:
        raise ValueError("endomorphisms act on different groups")
    imgs = {g: b.apply(w, budget) for g, w in a.images}
    return Endo.from_dict(a.group, imgs, a.e * b.e, f"{a.name}.{b.name}")


def product(endos: Sequence[Endo], budget: Budget | None = None) -> Endo:
    if not endos:
        raise ValueError("empty product")
    out = endos[0]
    for b in endos[1:]:
        out = compose(out, b, budget)
    return out


def evaluate(endos: Sequence[Endo], w: Word, budget: Budget | None = None) -> Word:
    """``(w_1 ... w_k)(w)``, simplifying after every step."""
    x = w
    for a in endos:
        x = a.apply(x, budget)
    return x


def central_exponent(endos: Iterable[Endo]) -> int:
    e = 1
    for a in endos:
        e *= a.e
    return e


def endo_equal(a: Endo, b: Endo) -> bool:
    """Same central exponent and equal images on every generator."""
    if a.group != b.group:
        raise ValueError("endomorphisms act on different groups")
    if a.e != b.e:
        return False
    return all(a.group.equal(a.table[g], b.table[g]) for g in a.group.generators)


def endo_diff(a: Endo, b: Endo) -> list[str]:
    """Human-readable witnesses for every generator where a and b differ."""
    out = []
    if a.e != b.e:
        out.append(f"central exponent {a.e} vs {b.e}")
    for g in a.group.generators:
        if not a.group.equal(a.table[g], b.table[g]):
            out.append(f"{format_letter(g)}: {format_word(a.table[g])} vs {format_word(b.table[g])}")
    return out


def products_equal(lhs: Sequence[Endo], rhs: Sequence[Endo], budget: Budget | None = None):
    """Compare two products generator by generator; returns True or (False, witnesses)."""
    group = (lhs or rhs)[0].group
    el, er = central_exponent(lhs), central_exponent(rhs)
    wit = []
    if el != er:
        wit.append(f"central exponent {el} vs {er}")
    for g in group.generators:
        u = evaluate(lhs, letter(g), budget)
        v = evaluate(rhs, letter(g), budget)
        if budget is not None:
            budget.check()
        if not group.equal(u, v):
            wit.append(f"{format_letter(g)}: {format_word(u) or '1'} vs {format_word(v) or '1'}")
    return True if not wit else (False, wit)


# ---------------------------------------------------------------------------
# well-definedness


def z_consistent(a: Endo) -> bool:
    """The image of the central word equals ``central^e``."""
    img = substitute(a.gmap(), a.group.central_word())
    return a.group.equal(img, letter(a.group.central, a.e))


def _pure_relations(n: int) -> list:
    from .purebraid import A

    rels = []
    for c, r, s, i, j in relation_instances(n):
        rels.append((A(r, s, -1) + A(i, j) + A(r, s), relation_rhs(c, r, s, i, j)))
    return rels


@lru_cache(maxsize=None)
def _mono_relations(r: int, n: int) -> tuple:
    """Conjugation relations ``y^-1 x y = w`` between combing levels of P(r,n).

    P(r,n) is an iterated semidirect product of free groups, so these
    relations, one per (higher generator, lower generator, sign), present it.
    """
    from .monomial import mono_canonical_word

    def level(l):
        return l[1] if l[0] == "C" else l[2]

    gens = mono_generators(r, n)
    rels = []
    for x in gens:
        for y in gens:
            if level(y) >= level(x):
                continue
            for s in (1, -1):
                lhs = letter(y, -s) + letter(x) + letter(y, s)
                rels.append((lhs, mono_canonical_word(r, n, lhs)))
    return tuple(rels)


def defining_relations(group) -> list:
    if group.kind == "pure":
        return _pure_relations(group.n)
    return list(_mono_relations(group.r, group.n))


def well_defined(a: Endo, budget: Budget | None = None):
    """Whether the generator images respect every defining relation and fix the center class."""
    wit = []
    for lhs, rhs in defining_relations(a.group):
        u = substitute(a.gmap(), lhs)
        v = substitute(a.gmap(), rhs)
        if budget is not None:
            budget.note(len(u) + len(v))
        if not a.group.equal(u, v):
            wit.append(f"{format_word(lhs)} = {format_word(rhs)}")
    if not z_consistent(a):
        wit.append("central word is not sent to a power of the central letter")
    return True if not wit else (False, wit)


def is_well_defined(a: Endo) -> bool:
    return well_defined(a) is True


# ---------------------------------------------------------------------------
# conjugation endomorphisms


def conjugation_endo(group, x_sigma: Word, name: str = "") -> Endo:
    """``g -> x^-1 g x`` for a braid x in the ambient B_m, read back into the group.

    ``x_sigma`` is a sigma word in B_n (pure) or B_{n+1} (mono).  The image of
    each generator is recovered through combing, which requires the
    conjugate to lie in the subgroup; an error is raised otherwise.
    """
    from .braid import BraidWord
    from .purebraid import sigma_to_aword, to_sigma_word

    if group.kind == "pure":
        m = group.n
        imgs = {}
        for g in group.generators:
            w = invert(x_sigma) + to_sigma_word(m, letter(g)) + x_sigma
            imgs[g] = canonical_word(m, sigma_to_aword(BraidWord(m, free_reduce(w))))
        return Endo.from_dict(group, imgs, 1, name)
    from .monomial import pure_to_mono_word

    m = group.n + 1
    imgs = {}
    for g in group.generators:
        w = invert(x_sigma) + to_sigma_word(m, mono_to_pure_word(group.r, group.n, letter(g))) + x_sigma
        aw = sigma_to_aword(BraidWord(m, free_reduce(w)))
        imgs[g] = group.simplify(pure_to_mono_word(group.r, group.n, aw))
    return Endo.from_dict(group, imgs, 1, name)


def normalize(group, w: Word) -> Word:
    return normalize_central(w, group.central)


# ---------------------------------------------------------------------------
# relations between endomorphisms
#
# A relation is stored three ways: the relator as printed (a formal word in
# endomorphism symbols), and the inverse-free pair ``lhs = rhs`` that is
# actually evaluated.  Inverse symbols may only appear where a closed-form
# inverse exists (transvections).  :func:`formally_equivalent` confirms that
# the rewritten pair is a cyclic conjugate of the relator (or its inverse),
# so moving inverses never changes the statement being checked.

_SYM = re.compile(r"^(?P<name>[A-Za-z][A-Za-z0-9.]*)(?:\^(?P<pow>[+-]?\d+))?$")


def formal(text: str) -> Word:
    """Parse ``"w1 phi1.3^-1 (w1 w2)^3"``-style text into a formal word.

    Parenthesised groups may carry a power.  The letter ``1`` is the empty word.
    """
    text = text.strip()
    if text in ("", "1"):
        return EMPTY
    out: list = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "(":
            depth, j = 1, i + 1
            while depth:
                depth += {"(": 1, ")": -1}.get(text[j], 0)
                j += 1
            inner = formal(text[i + 1 : j - 1])
            k = 1
            m = re.match(r"\^([+-]?\d+)", text[j:])
            if m:
                k = int(m.group(1))
                j += m.end()
            out.extend(inner**k)
            i = j
            continue
        j = i
        while j < len(text) and not text[j].isspace() and text[j] != "(":
            j += 1
        m = _SYM.match(text[i:j])
        if not m:
            raise ValueError(f"cannot parse symbol {text[i:j]!r}")
        k = int(m.group("pow")) if m.group("pow") else 1
        out.extend(letter(m.group("name"), k))
        i = j
    return Word(out)


def formal_str(w: Word) -> str:
    return " ".join(l if s > 0 else f"{l}^-1" for l, s in w) or "1"


def _cyclic_reduce(w: Word) -> Word:
    w = list(free_reduce(w))
    while len(w) > 1 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return Word(w)


def formally_equivalent(relator: Word, lhs: Word, rhs: Word) -> bool:
    """``lhs rhs^-1`` is a cyclic conjugate of the relator or of its inverse."""
    x = _cyclic_reduce(lhs + invert(rhs))
    for r in (_cyclic_reduce(relator), _cyclic_reduce(invert(relator))):
        if len(r) == len(x) and (not r or any(Word(r[i:] + r[:i]) == x for i in range(len(r)))):
            return True
    return False


@dataclass(frozen=True)
class Relation:
    id: str
    relator: Word
    lhs: Word
    rhs: Word

    @classmethod
    def make(cls, rid: str, relator: str, lhs: str, rhs: str = "1") -> "Relation":
        rel = cls(rid, formal(relator), formal(lhs), formal(rhs))
        if not formally_equivalent(rel.relator, rel.lhs, rel.rhs):
            raise ValueError(f"{rid}: {lhs} = {rhs} is not a rewriting of {relator}")
        return rel

    @property
    def text(self) -> str:
        return f"{formal_str(self.lhs)} = {formal_str(self.rhs)}"


class Undefined(KeyError):
    """A relation mentions a symbol with no endomorphism (for example phi1.2)."""


def resolve(w: Word, env: dict, inverses: dict) -> list:
    out = []
    for name, s in w:
        table = env if s > 0 else inverses
        if name not in table:
            if name in env:
                raise ValueError(f"no closed-form inverse for {name}")
            raise Undefined(name)
        out.append(table[name])
    return out


def relation_case(rel: Relation, env: dict, inverses: dict, group) -> CaseSpec:
    lhs = resolve(rel.lhs, env, inverses)
    rhs = resolve(rel.rhs, env, inverses)
    ident = [identity(group)]
    return CaseSpec(rel.id, rel.text, lambda b: products_equal(lhs or ident, rhs or ident, b))


def image_case(cid: str, text: str, endos: Sequence[Endo], src: Word, expected: Word) -> CaseSpec:
    """``(w_1 ... w_k)(src) = expected`` for a closed-form identity."""
    group = endos[0].group

    def run(b):
        got = evaluate(endos, src, b)
        if group.equal(got, expected):
            return True
        return False, [f"{format_word(src)} -> {format_word(got) or '1'}, expected {format_word(expected) or '1'}"]

    return CaseSpec(cid, text, run)


def table_case(cid: str, text: str, endos: Sequence[Endo], expected: dict) -> CaseSpec:
    """``(w_1 ... w_k)(g) = expected[g]`` for every generator g in the table."""
    group = endos[0].group

    def run(b):
        wit = []
        for g, want in expected.items():
            got = evaluate(endos, letter(g), b)
            if not group.equal(got, want):
                wit.append(f"{format_letter(g)} -> {format_word(got) or '1'}, expected {format_word(want) or '1'}")
        return True if not wit else (False, wit)

    return CaseSpec(cid, text, run)


def well_defined_case(cid: str, a: Endo) -> CaseSpec:
    return CaseSpec(cid, f"{a.name} respects the relations and sends the center to itself", lambda b: well_defined(a, b))


def endo_equal_case(cid: str, text: str, a: Endo, b_: Endo) -> CaseSpec:
    def run(b):
        wit = endo_diff(a, b_)
        return True if not wit else (False, wit)

    return CaseSpec(cid, text, run)


def build_cases(relations: Iterable[Relation], env: dict, inverses: dict, group, skipped: list) -> list:
    """Relation cases; instances naming an undefined symbol are skipped and logged."""
    out = []
    for rel in relations:
        try:
            out.append(relation_case(rel, env, inverses, group))
        except Undefined as exc:
            skipped.append(f"{rel.id}: undefined symbol {exc.args[0]}")
    return out
