"""Command-line front end.

Subcommands: check, pieces, decompose, eq, oracle, fuzz, bench.  All output
is line-oriented with stable `key: value` prefixes.  Exit codes are stable:

  0  YES / valid (e.g. the words are equivalent, the presentation is C(4))
  1  NO / invalid (non-equivalent, condition fails, oracle NO or UNKNOWN)
  2  usage or input error (bad flags, parse errors, non-piece --prefix)
  3  internal assertion (uniqueness violations, solver invariant breaches)
"""

from __future__ import annotations

import argparse
import gc
import random
import statistics
import sys
import time

from .errors import AmbiguityViolation, NotC3Error, NotC4Error, ParseError
from .generate import random_c4_presentation, random_word
from .oracle import OracleCaps, closure, oracle_equivalent
from .presentation import (
    Presentation,
    PresentationIndex,
    Word,
    build_index,
    c4_certificate,
    check_condition,
    decompose,
    enumerate_pieces,
    is_piece,
    max_piece_prefix,
    max_piece_suffix,
    parse_presentation,
)
from .solver import wp_prefix

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _load(path: str) -> Presentation:
    with open(path, encoding="utf-8") as handle:
        return parse_presentation(handle.read())


def _parse_word(pres: Presentation, text: str, compact: bool) -> Word:
    return pres.parse_word(text, compact=compact)


def _fmt(pres: Presentation, w: Word) -> str:
    return pres.format_word(w)


# --- check / pieces / decompose ------------------------------------------------

def _print_decompositions(pres: Presentation) -> None:
    decomps = decompose(pres)
    k = max((d.z_len for d in decomps), default=0)
    lmax = max((len(rw) for rw in pres.relation_words), default=0)
    print(f"k: {k}")
    print(f"Lmax: {lmax}")
    for d in decomps:
        partner = decomps[d.partner_index]
        print(f"decomposition: {_fmt(pres, d.word)} = "
              f"{_fmt(pres, d.x)} | {_fmt(pres, d.y)} | {_fmt(pres, d.z)} "
              f"(partner: {_fmt(pres, partner.word)})")


def cmd_check(args) -> int:
    pres = _load(args.file)
    print(f"generators: {len(pres.alphabet)}")
    print(f"relations: {len(pres.relations)}")
    print(f"R-length: {pres.total_relation_length}")
    vacuous = " (vacuous)" if not pres.relations else ""
    flags = {n: check_condition(pres, n) for n in (1, 2, 3, 4)}
    for n in (1, 2, 3, 4):
        print(f"C({n}): {'yes' if flags[n] else 'no'}{vacuous}")
    if not flags[4]:
        cert = c4_certificate(pres)
        if cert is not None:
            rw, parts = cert
            print(f"certificate: {_fmt(pres, rw)} = " + " . ".join(_fmt(pres, p) for p in parts))
    print(f"pieces: {len(enumerate_pieces(pres))}")
    if flags[3]:
        _print_decompositions(pres)
    return EXIT_YES if flags[4] else EXIT_NO


def cmd_pieces(args) -> int:
    pres = _load(args.file)
    if args.word is not None:
        w = _parse_word(pres, args.word, args.compact)
        verdict = is_piece(pres, w)
        print(f"word: {_fmt(pres, w)}")
        print(f"is-piece: {'yes' if verdict else 'no'}")
        print(f"max-piece-prefix: {max_piece_prefix(pres, w)}")
        print(f"max-piece-suffix: {max_piece_suffix(pres, w)}")
        return EXIT_YES if verdict else EXIT_NO
    pieces = enumerate_pieces(pres)
    print(f"pieces: {len(pieces)}")
    for piece in pieces:
        print(f"piece: {_fmt(pres, piece)}")
    return EXIT_YES


def cmd_decompose(args) -> int:
    pres = _load(args.file)
    try:
        _print_decompositions(pres)
    except NotC3Error as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NO
    return EXIT_YES


# --- eq --------------------------------------------------------------------------

def cmd_eq(args) -> int:
    pres = _load(args.file)
    try:
        idx = build_index(pres)
    except NotC4Error as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NO
    u = _parse_word(pres, args.u, args.compact)
    v = _parse_word(pres, args.v, args.compact)
    if args.prefix is not None:
        p = _parse_word(pres, args.prefix, args.compact)
        if not is_piece(pres, p):
            print(f"error: --prefix {_fmt(pres, p)} is not a piece", file=sys.stderr)
            return EXIT_USAGE
        out = wp_prefix(idx, u, v, p, trace=args.trace)
    else:
        if len(v) < len(u):
            u, v = v, u
        out = wp_prefix(idx, u, v, trace=args.trace)
    print(f"answer: {'YES' if out.answer else 'NO'}")
    if args.stats:
        print(f"stats: recursive-calls={out.recursive_calls} bound={out.bound}")
    if args.trace:
        for label, lu, lv, p in out.trace:
            print(f"trace: {label} |u|={lu} |v|={lv} p={_fmt(pres, p)}")
    return EXIT_YES if out.answer else EXIT_NO


# --- oracle -----------------------------------------------------------------------

def cmd_oracle(args) -> int:
    pres = _load(args.file)
    u = _parse_word(pres, args.u, args.compact)
    v = _parse_word(pres, args.v, args.compact)
    caps = OracleCaps(
        max_word_len=args.max_len if args.max_len is not None else max(len(u), len(v)),
        max_states=args.max_states,
        max_depth=args.max_depth,
    )
    cl = closure(pres, u, caps)
    if v in cl:
        answer = "YES"
    elif cl.complete:
        answer = "NO"
    else:
        answer = "UNKNOWN"
    print(f"answer: {answer}")
    print(f"closure-size: {len(cl)}")
    print(f"complete: {'yes' if cl.complete else 'no'}")
    if answer == "YES":
        print(f"depth: {cl.depths[v]}")
    return EXIT_YES if answer == "YES" else EXIT_NO


# --- fuzz -------------------------------------------------------------------------

def _fuzz_pair(rng: random.Random, pres: Presentation, max_len: int) -> tuple[Word, Word]:
    n_letters = len(pres.alphabet)
    u = random_word(rng, n_letters, rng.randint(0, max_len))
    mode = rng.random()
    if mode < 0.4:
        v = random_word(rng, n_letters, len(u))
    elif mode < 0.55:
        v = random_word(rng, n_letters, rng.randint(0, max_len))
    else:
        from .oracle import rewrite_neighbors

        v = u
        for _ in range(rng.randint(1, 3)):
            neighbors = sorted(rewrite_neighbors(pres, v))
            if not neighbors:
                break
            v = rng.choice(neighbors)
    return u, v


def _fuzz_caps(pres: Presentation, u: Word, v: Word) -> OracleCaps:
    lmax = max((len(rw) for rw in pres.relation_words), default=0)
    return OracleCaps(max_word_len=max(len(u), len(v)) + lmax, max_states=20_000)


def _solver_vs_oracle(idx: PresentationIndex, u: Word, v: Word):
    """(solver answer, oracle verdict, bound ok).  Oracle verdict may be None."""
    pres = idx.presentation
    want = oracle_equivalent(pres, u, v, _fuzz_caps(pres, u, v))
    uu, vv = (u, v) if len(u) <= len(v) else (v, u)
    out = wp_prefix(idx, uu, vv)
    return out.answer, want, out.recursive_calls <= out.bound


def _shrink_disagreement(idx: PresentationIndex, u: Word, v: Word) -> tuple[Word, Word]:
    pres = idx.presentation

    def disagrees(a: Word, b: Word) -> bool:
        got, want, _ = _solver_vs_oracle(idx, a, b)
        return want is not None and got != want

    changed = True
    while changed:
        changed = False
        for which in (0, 1):
            word = (u, v)[which]
            for i in range(len(word)):
                cand = word[:i] + word[i + 1:]
                nu, nv = (cand, v) if which == 0 else (u, cand)
                if disagrees(nu, nv):
                    u, v = nu, nv
                    changed = True
                    break
            if changed:
                break
    return u, v


def _fuzz_one_presentation(idx: PresentationIndex, rng: random.Random, pairs: int, max_len: int) -> int:
    pres = idx.presentation
    agree = 0
    skipped = 0
    for _ in range(pairs):
        u, v = _fuzz_pair(rng, pres, max_len)
        got, want, bound_ok = _solver_vs_oracle(idx, u, v)
        if not bound_ok:
            print(f"violation: recursion bound exceeded on u={_fmt(pres, u)} v={_fmt(pres, v)}")
            return EXIT_INTERNAL
        if want is None:
            skipped += 1
            continue
        if got != want:
            u, v = _shrink_disagreement(idx, u, v)
            got, want, _ = _solver_vs_oracle(idx, u, v)
            print("disagreement: solver and oracle differ; minimised reproducer follows")
            for line in pres.to_text().splitlines():
                print(f"reproducer: {line}")
            print(f"reproducer-u: {_fmt(pres, u)}")
            print(f"reproducer-v: {_fmt(pres, v)}")
            print(f"reproducer-solver: {'YES' if got else 'NO'}")
            print(f"reproducer-oracle: {'YES' if want else 'NO'}")
            return EXIT_INTERNAL
        agree += 1
    print(f"agree: {agree}/{agree}")
    if skipped:
        print(f"skipped-unknown: {skipped}")
    return EXIT_YES


def cmd_fuzz(args) -> int:
    rng = random.Random(args.seed)
    if args.random:
        for i in range(args.presentations):
            pres, rejected = random_c4_presentation(rng, length_preserving=True)
            print(f"presentation-index: {i}")
            print(f"rejected-candidates: {rejected}")
            for line in pres.to_text().splitlines():
                print(f"presentation: {line}")
            status = _fuzz_one_presentation(build_index(pres), rng, args.pairs, args.len)
            if status != EXIT_YES:
                return status
        return EXIT_YES
    if args.file is None:
        print("error: provide a presentation file or --random", file=sys.stderr)
        return EXIT_USAGE
    pres = _load(args.file)
    try:
        idx = build_index(pres)
    except NotC4Error as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NO
    return _fuzz_one_presentation(idx, rng, args.pairs, args.len)


# --- bench ------------------------------------------------------------------------

def build_equivalent_pair(rng: random.Random, idx: PresentationIndex, length: int) -> tuple[Word, Word]:
    """An equivalent pair of about the requested length: u interleaves random
    letters with whole relation words, and v applies an independent rewrite
    at a random subset of the matched sites in one left-to-right pass."""
    pres = idx.presentation
    n_letters = len(pres.alphabet)
    sides = list(pres.relation_words)
    letters: list[int] = []
    while len(letters) < length:
        if sides and rng.random() < 0.5:
            letters.extend(rng.choice(sides))
        else:
            letters.append(rng.randrange(n_letters))
    u = tuple(letters[:length])
    swaps = [(rel.lhs, rel.rhs) for rel in pres.relations]
    swaps += [(rel.rhs, rel.lhs) for rel in pres.relations]
    v: list[int] = []
    i = 0
    while i < len(u):
        if rng.random() < 0.5:
            for src, dst in swaps:
                m = len(src)
                if m and u[i:i + m] == src:
                    v.extend(dst)
                    i += m
                    break
            else:
                v.append(u[i])
                i += 1
        else:
            v.append(u[i])
            i += 1
    return u, tuple(v)


def build_distinct_pair(rng: random.Random, idx: PresentationIndex, length: int) -> tuple[Word, Word]:
    """A non-equivalent same-length pair: mutate one letter of u and confirm
    non-equivalence with the solver."""
    u, _ = build_equivalent_pair(rng, idx, length)
    n_letters = len(idx.presentation.alphabet)
    for _ in range(100):
        pos = rng.randrange(len(u))
        new = rng.randrange(n_letters)
        if new == u[pos]:
            continue
        v = u[:pos] + (new,) + u[pos + 1:]
        uu, vv = (u, v) if len(u) <= len(v) else (v, u)
        if not wp_prefix(idx, uu, vv).answer:
            return u, v
    raise RuntimeError("could not build a non-equivalent pair by single-letter mutation")


def _timed_solve(idx: PresentationIndex, u: Word, v: Word, reps: int):
    """(median seconds, recursive calls, bound) over reps runs."""
    if len(v) < len(u):
        u, v = v, u
    times = []
    out = None
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(reps):
            start = time.perf_counter()
            out = wp_prefix(idx, u, v)
            times.append(time.perf_counter() - start)
    finally:
        if gc_was_enabled:
            gc.enable()
    return statistics.median(times), out.recursive_calls, out.bound


def run_scaling_bench(idx: PresentationIndex, lengths, reps: int, rng: random.Random):
    """Rows of {length, kind, answer, median, calls, bound} for equivalent
    and mutated (non-equivalent) pairs at each length."""
    rows = []
    for length in lengths:
        eq_pair = build_equivalent_pair(rng, idx, length)
        ne_pair = build_distinct_pair(rng, idx, length)
        for kind, (u, v) in (("equal", eq_pair), ("distinct", ne_pair)):
            median, calls, bound = _timed_solve(idx, u, v, reps)
            rows.append({
                "length": length,
                "kind": kind,
                "median": median,
                "calls": calls,
                "bound": bound,
            })
    return rows


def cmd_bench(args) -> int:
    pres = _load(args.file)
    try:
        idx = build_index(pres)
    except NotC4Error as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NO
    lengths = []
    length = args.min_len
    while length <= args.max_len:
        lengths.append(length)
        length = int(length * args.growth_factor)
    rng = random.Random(args.seed)
    rows = run_scaling_bench(idx, lengths, args.reps, rng)
    previous: dict[str, float] = {}
    worst_calls = (0, 1)
    for row in rows:
        ratio = ""
        if row["kind"] in previous:
            ratio = f"{row['median'] / previous[row['kind']]:.2f}"
        previous[row["kind"]] = row["median"]
        print(f"bench: len={row['length']} kind={row['kind']} "
              f"median-s={row['median']:.6f} ratio={ratio or '-'} "
              f"calls={row['calls']} bound={row['bound']}")
        if row["calls"] * worst_calls[1] > worst_calls[0] * row["bound"]:
            worst_calls = (row["calls"], row["bound"])
    ok = all(row["calls"] <= row["bound"] for row in rows)
    print(f"bench: recursion-max={worst_calls[0]} bound={worst_calls[1]} ok={'yes' if ok else 'no'}")
    return EXIT_YES if ok else EXIT_INTERNAL


# --- argument parsing ---------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smalloverlap",
        description="Word problem and condition checking for small overlap monoid presentations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_compact(p):
        p.add_argument("--compact", action="store_true",
                       help="treat every character of a word argument as one generator token")

    p = sub.add_parser("check", help="report C(1)..C(4), decompositions, pieces; exit 0 iff C(4)")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("pieces", help="list pieces, or classify one word with --word")
    p.add_argument("file")
    p.add_argument("--word", help="report is-piece and maximal piece prefix/suffix for this word")
    add_compact(p)
    p.set_defaults(func=cmd_pieces)

    p = sub.add_parser("decompose", help="print the X | Y | Z decomposition table")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("eq", help="decide whether two words are equivalent (exit 0 yes, 1 no)")
    p.add_argument("file")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--prefix", help="also require this piece to be a possible prefix of u")
    p.add_argument("--trace", action="store_true", help="print the step labels visited")
    p.add_argument("--stats", action="store_true", help="print recursion count and bound")
    add_compact(p)
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("oracle", help="brute-force closure check (YES/NO/UNKNOWN)")
    p.add_argument("file")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--max-len", type=int, default=None, help="cap on word length (default max(|u|,|v|))")
    p.add_argument("--max-states", type=int, default=100_000)
    p.add_argument("--max-depth", type=int, default=None)
    add_compact(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("fuzz", help="differential test: solver vs oracle on random pairs")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--random", action="store_true",
                   help="generate random C(4) presentations instead of reading a file")
    p.add_argument("--pairs", type=int, default=200)
    p.add_argument("--len", type=int, default=7, help="maximum word length")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--presentations", type=int, default=5,
                   help="number of random presentations with --random")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("bench", help="time the solver at geometrically growing word lengths")
    p.add_argument("file")
    p.add_argument("--min-len", type=int, default=2 ** 13)
    p.add_argument("--max-len", type=int, default=2 ** 16)
    p.add_argument("--growth-factor", type=float, default=2.0)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except AmbiguityViolation as err:
        print(f"internal: {err}", file=sys.stderr)
        return EXIT_INTERNAL
    except RuntimeError as err:
        print(f"internal: {err}", file=sys.stderr)
        return EXIT_INTERNAL


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
