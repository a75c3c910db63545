"""Command-line front end.

Exit codes: 0 all pass (or query answered), 1 some case failed, 2 usage or
parameter error, 3 no failure but some case ran out of budget.

Examples::

    braidaut nf --n 4 "s1 s2 s1 s2^-1"
    braidaut eq --n 3 "s1 s2 s1" "s2 s1 s2"
    braidaut comb --n 4 "A1.3 A2.4^-1 Z"
    braidaut simplify --n 3 --window 6 "A1.2 A1.3 A2.3 Z^-1"
    braidaut mono-eq --r 2 --n 2 "C1 C2" "C2 C1"
    braidaut verify thm45 --r 2 --n 3 --json --jobs 2
    braidaut verify prop46 --r 3 --figure prop46.png
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass

from . import braid
from .braid import BraidWord, braid_equal, garside_nf, permutation_of
from .monomial import mono_canonical_word, mono_equal_words
from .purebraid import comb_word, sigma_to_aword, simplify_word
from .report import Budget
from .words import Alphabet, Word, format_word, parse_word

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_INDETERMINATE = 0, 1, 2, 3
CACHE_VERSION = 1
CACHE_KEEP = 50_000


@dataclass(frozen=True)
class RunConfig:
    budget_ms: float | None = None
    max_len: int | None = None
    window: int = 8
    seed: int = 0
    json: bool = False
    cache: str | None = None
    jobs: int = 1

    def __post_init__(self):
        for name in ("budget_ms", "max_len"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ValueError(f"--{name.replace('_', '-')} must be positive")
        if self.window <= 0:
            raise ValueError("--window must be positive")
        if self.jobs < 1:
            raise ValueError("--jobs must be at least 1")

    def budget(self) -> Budget:
        return Budget(self.budget_ms, self.max_len)


# ---------------------------------------------------------------------------
# normal-form cache


def _digest(entries: list) -> str:
    return hashlib.sha256(json.dumps(entries, separators=(",", ":")).encode()).hexdigest()


def load_cache(path: str) -> int:
    """Seed the Garside cache from ``path``; a bad file is treated as a cold cache."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        entries = data["entries"]
        if data.get("version") != CACHE_VERSION or data.get("sha256") != _digest(entries):
            raise ValueError("checksum mismatch")
        for n, w, inf, factors in entries:
            word = Word(((("s", i), s) for i, s in w))
            braid.remember(n, word, (inf, tuple(tuple(f) for f in factors)))
        return len(entries)
    except FileNotFoundError:
        return 0
    except (ValueError, KeyError, TypeError) as exc:
        print(f"warning: ignoring cache {path}: {exc}", file=sys.stderr)
        return 0


def save_cache(path: str) -> int:
    items = braid.cache_items()[-CACHE_KEEP:]
    entries = [[n, [[l[1], s] for l, s in w], inf, [list(f) for f in fs]] for (n, w), (inf, fs) in items]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"version": CACHE_VERSION, "sha256": _digest(entries), "entries": entries}, fh)
    return len(entries)


# ---------------------------------------------------------------------------
# commands


def _emit(cfg: RunConfig, payload: dict, text: str) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True) if cfg.json else text)


def _braid(n: int, text: str) -> BraidWord:
    return BraidWord(n, parse_word(text, Alphabet("sigma", n)))


def cmd_nf(args, cfg: RunConfig) -> int:
    nf = garside_nf(_braid(args.n, args.word))
    factors = [format_word(w) for w in nf.factor_words()]
    _emit(cfg, {"n": args.n, "inf": nf.inf, "factors": factors}, str(nf))
    return EXIT_PASS


def cmd_eq(args, cfg: RunConfig) -> int:
    same = braid_equal(_braid(args.n, args.u), _braid(args.n, args.v))
    _emit(cfg, {"n": args.n, "equal": same}, "true" if same else "false")
    return EXIT_PASS


def cmd_perm(args, cfg: RunConfig) -> int:
    p = permutation_of(_braid(args.n, args.word))
    _emit(cfg, {"n": args.n, "images": list(p.images), "cycles": p.cycles()}, p.cycles())
    return EXIT_PASS


def _pure_word(n: int, text: str) -> Word:
    """Accept either a sigma word (which must be pure) or an A-word."""
    w = parse_word(text)
    if w and all(l[0] == "s" for l, _ in w):
        return sigma_to_aword(BraidWord(n, w))
    return Alphabet("pureA", n).check(w)


def cmd_comb(args, cfg: RunConfig) -> int:
    cf = comb_word(args.n, _pure_word(args.n, args.word), cfg.budget())
    levels = {str(k): format_word(cf.level(k)) for k in range(2, args.n + 1)}
    _emit(cfg, {"n": args.n, "levels": levels, "e": cf.e, "word": format_word(cf.to_word())}, str(cf))
    return EXIT_PASS


def cmd_simplify(args, cfg: RunConfig) -> int:
    w = _pure_word(args.n, args.word)
    out = simplify_word(args.n, w, cfg.window, cfg.budget())
    _emit(cfg, {"n": args.n, "input_len": len(w), "output_len": len(out), "word": format_word(out)}, format_word(out) or "1")
    return EXIT_PASS


def cmd_mono_eq(args, cfg: RunConfig) -> int:
    al = Alphabet("monoA", args.n, args.r)
    u, v = parse_word(args.u, al), parse_word(args.v, al)
    same = mono_equal_words(args.r, args.n, u, v)
    payload = {"r": args.r, "n": args.n, "equal": same}
    if args.canonical:
        payload["canonical"] = [format_word(mono_canonical_word(args.r, args.n, x)) for x in (u, v)]
    _emit(cfg, payload, "true" if same else "false")
    return EXIT_PASS


def cmd_verify(args, cfg: RunConfig) -> int:
    from .suites import run_suite

    params = {"n": args.n, "r": args.r, "seed": cfg.seed}
    report = run_suite(args.suite, params, cfg.budget(), cfg.jobs)
    if cfg.json:
        print(report.to_json(timing=not args.no_timing))
    else:
        sys.stdout.write(report.to_text())
    if args.figure:
        from .plotting import report_figure

        report_figure(report, args.figure)
        print(f"figure written to {args.figure}", file=sys.stderr)
    return report.exit_code()


# ---------------------------------------------------------------------------
# parser


_COMMON = (
    (("--json",), {"action": "store_true", "default": False, "help": "machine-readable output"}),
    (("--seed",), {"type": int, "default": 0, "help": "seed for random corpora"}),
    (("--budget-ms",), {"type": float, "default": None, "help": "per-case wall-clock budget"}),
    (("--max-len",), {"type": int, "default": None, "help": "per-case intermediate word length budget"}),
    (("--window",), {"type": int, "default": 8, "help": "deletion window for simplify"}),
    (("--cache",), {"default": None, "help": "persisted normal-form cache file"}),
    (("--jobs",), {"type": int, "default": 1, "help": "worker processes for verify"}),
)


def _add_common(p: argparse.ArgumentParser, top: bool) -> None:
    """Shared flags are accepted before or after the subcommand."""
    for flags, kw in _COMMON:
        kw = dict(kw)
        if not top:
            kw["default"] = argparse.SUPPRESS
        p.add_argument(*flags, **kw)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidaut", description="Braid group calculus and automorphism relation checks.")
    _add_common(p, top=True)
    sub = p.add_subparsers(dest="command", required=True)

    def command(name: str, help: str, func, r: bool = False, n_required: bool = True):
        s = sub.add_parser(name, help=help)
        _add_common(s, top=False)
        if r:
            s.add_argument("--r", type=int, required=True)
        s.add_argument("--n", type=int, required=n_required, default=None)
        s.set_defaults(func=func)
        return s

    command("nf", "Garside normal form of a sigma word", cmd_nf).add_argument("word")
    s = command("eq", "equality of two sigma words in B_n", cmd_eq)
    s.add_argument("u")
    s.add_argument("v")
    command("perm", "permutation of a sigma word", cmd_perm).add_argument("word")
    command("comb", "combed form of a pure braid (sigma or A word)", cmd_comb).add_argument("word")
    command("simplify", "shorter A-word for the same pure braid", cmd_simplify).add_argument("word")
    s = command("mono-eq", "equality of two words in P(r,n)", cmd_mono_eq, r=True)
    s.add_argument("u")
    s.add_argument("v")
    s.add_argument("--canonical", action="store_true", help="also print canonical spellings")

    from .suites import SUITES

    s = sub.add_parser("verify", help="run a relation suite")
    _add_common(s, top=False)
    s.add_argument("suite", choices=sorted(SUITES))
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--r", type=int, default=None)
    s.add_argument("--figure", default=None, metavar="PNG", help="also draw per-case time and peak length")
    s.add_argument("--no-timing", action="store_true", help="omit timing fields from JSON")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args.budget_ms, args.max_len, args.window, args.seed, args.json, args.cache, args.jobs)
    except ValueError as exc:
        parser.error(str(exc))
    if cfg.cache:
        load_cache(cfg.cache)
    try:
        code = args.func(args, cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.cache:
        save_cache(cfg.cache)
    return code


if __name__ == "__main__":
    sys.exit(main())
