"""The word-problem decision loop for C(4) presentations.

wp_prefix decides, for words u and v and a piece p, whether u and v represent
the same monoid element AND p is a possible prefix of u.  Every recursive
call of the underlying procedure is a tail call, so the implementation is a
loop over three mutable states: suffix views of u and v (cursor plus a
bounded prepended prefix, so no step copies a word tail) and the piece p.
Each iteration inspects bounded prefixes only; the number of iterations is
at most (k+2)|u| + 1 where k is the length of the longest maximal piece
suffix, which makes the whole decision linear in |u| for a fixed
presentation.  equivalent() swaps its arguments so the shorter word drives
the bound.

Step labels (reported in stats and traces):

  A:yes, A:no       terminal lines for empty u or v
  B, B:no-letter, B:no-piece-letter
                    no clean overlap prefix: drop one letter / mismatch
  C:no-prefix       p is a prefix of neither X nor the partner's X
  C:no-v            v starts with neither XY nor the partner's XY
  C1a/C1b .. C6, C6:no
                    the six shapes once u = XY...; a/b split by whether the
                    tail is active for the partner's Z
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import AmbiguityViolation, NotC4Error, PieceExpectedError
from .prefixes import is_p_active
from .presentation import Presentation, PresentationIndex, Word, build_index, is_piece, parse_presentation


@dataclass
class WpOutcome:
    """Result of one wp_prefix run.  recursive_calls counts loop iterations
    after the initial call and never exceeds bound = (k+2)|u| + 1 for the u
    passed in.  trace, when requested, lists (label, |u|, |v|, p) snapshots
    taken as each step fired, terminal step included."""

    answer: bool
    recursive_calls: int
    bound: int
    case_counts: dict[str, int]
    trace: list[tuple[str, int, int, Word]] | None = None


class _Tail:
    """Suffix view of a word with a bounded prepended prefix.

    Every solver step replaces a bounded-length prefix, so the view keeps a
    cursor into the original word plus a small prepend tuple; prepends are
    pieces, and any clean overlap prefix strictly covers a leading piece, so
    the prepend never outlives the next type-C step.
    """

    __slots__ = ("pre", "base", "cur")

    def __init__(self, word: Word):
        self.pre = ()
        self.base = word
        self.cur = 0

    def __len__(self):
        return len(self.pre) + len(self.base) - self.cur

    def __getitem__(self, i):
        k = i - len(self.pre)
        return self.pre[i] if k < 0 else self.base[self.cur + k]

    def startswith(self, pat: Word, at: int = 0) -> bool:
        if at + len(pat) > len(self):
            return False
        for letter in pat:
            if self[at] != letter:
                return False
            at += 1
        return True

    def drop(self, m: int) -> None:
        have = len(self.pre)
        if m < have:
            self.pre = self.pre[m:]
        else:
            self.cur += m - have
            self.pre = ()

    def prepend(self, pat: Word) -> None:
        self.pre = pat + self.pre if self.pre else pat


def _is_prefix(p: Word, w: Word) -> bool:
    return w[:len(p)] == p


def wp_prefix(idx: PresentationIndex, u: Word, v: Word, p: Word = (), *, trace: bool = False) -> WpOutcome:
    """Decide whether u = v in the presented monoid and p is a possible
    prefix of u.  p must be a piece (PieceExpectedError otherwise); the index
    must be C(4)-validated (NotC4Error otherwise)."""
    if not idx.is_c4:
        raise NotC4Error("wp_prefix requires a C(4)-validated index")
    u, v, p = tuple(u), tuple(v), tuple(p)
    if not is_piece(idx.presentation, p):
        raise PieceExpectedError(
            f"p = {idx.presentation.format_word(p)} is not a piece of the presentation")

    bound = (idx.k + 2) * len(u) + 1
    U = _Tail(u)
    V = _Tail(v)
    calls = 0
    counts: Counter[str] = Counter()
    steps: list[tuple[str, int, int, Word]] | None = [] if trace else None
    decomps = idx.decomps
    matches_at = idx.xy_matcher.matches_at

    def finish(answer: bool, label: str) -> WpOutcome:
        counts[label] += 1
        if steps is not None:
            steps.append((label, len(U), len(V), p))
        return WpOutcome(answer, calls, bound, dict(counts), steps)

    def step(label: str) -> None:
        nonlocal calls
        counts[label] += 1
        calls += 1
        if calls > bound:
            raise RuntimeError(
                "recursion bound exceeded; the index invariants do not hold")

    while True:
        lu = len(U)
        lv = len(V)
        if lu == 0 or lv == 0:
            if lu == 0 and lv == 0 and not p:
                return finish(True, "A:yes")
            return finish(False, "A:no")

        pids = matches_at(U, 0)
        d = None
        if pids:
            if len(pids) > 1:
                raise AmbiguityViolation("two relation words' XY factors prefix u")
            d = decomps[pids[0]]
            for j in range(d.x_len + 1, d.xy_len):
                if matches_at(U, j):
                    d = None  # relation prefix exists but is not clean
                    break

        if d is None:
            a = U[0]
            if a != V[0]:
                return finish(False, "B:no-letter")
            if p and p[0] != a:
                return finish(False, "B:no-piece-letter")
            if steps is not None:
                steps.append(("B", lu, lv, p))
            step("B")
            U.drop(1)
            V.drop(1)
            if p:
                p = p[1:]
            continue

        # type C: u = XY u' with XY a clean overlap prefix
        dbar = decomps[d.partner_index]
        if not (_is_prefix(p, d.x) or _is_prefix(p, dbar.x)):
            return finish(False, "C:no-prefix")
        v_xy = V.startswith(d.xy)
        v_xybar = V.startswith(dbar.xy)
        if not (v_xy or v_xybar):
            return finish(False, "C:no-v")
        u_z = U.startswith(d.z, d.xy_len)
        if steps is not None:
            snapshot = (lu, lv, p)

        if v_xy:
            if u_z and V.startswith(d.z, d.xy_len):
                # u = XYZu'', v = XYZv''
                U.drop(d.xy_len + d.z_len)
                V.drop(d.xy_len + d.z_len)
                if is_p_active(idx, U, dbar.z):
                    label = "C1a"
                    U.prepend(dbar.z)
                    V.prepend(dbar.z)
                else:
                    label = "C1b"
                    U.prepend(d.z)
                    V.prepend(d.z)
                p = ()
            else:
                # u = XYu', v = XYv', Z missing on at least one side
                U.drop(d.xy_len)
                V.drop(d.xy_len)
                if _is_prefix(p, d.x):
                    label = "C2a"
                    p = ()
                else:
                    label = "C2b"
                    p = d.z
        else:
            v_zbar = V.startswith(dbar.z, dbar.xy_len)
            if u_z and v_zbar:
                # u = XYZu'', v = XbYbZb v''
                U.drop(d.xy_len + d.z_len)
                V.drop(dbar.xy_len + dbar.z_len)
                if is_p_active(idx, U, dbar.z):
                    label = "C3a"
                    U.prepend(dbar.z)
                    V.prepend(dbar.z)
                else:
                    label = "C3b"
                    U.prepend(d.z)
                    V.prepend(d.z)
                p = ()
            elif v_zbar:
                # u = XYu' without Z, v = XbYbZb v''
                label = "C4"
                U.drop(d.xy_len)
                V.drop(dbar.xy_len + dbar.z_len)
                V.prepend(d.z)
                p = ()
            elif u_z:
                # u = XYZu'', v = XbYb v' without Zb
                label = "C5"
                U.drop(d.xy_len + d.z_len)
                U.prepend(dbar.z)
                V.drop(dbar.xy_len)
                p = ()
            else:
                # u = XYu', v = XbYb v', neither Z nor Zb present
                U.drop(d.xy_len)
                V.drop(dbar.xy_len)
                if not (U.startswith(d.z1) and V.startswith(dbar.z1)):
                    return finish(False, "C6:no")
                label = "C6"
                U.drop(len(d.z1))
                V.drop(len(dbar.z1))
                p = d.mcs
        if steps is not None:
            steps.append((label, *snapshot))
        step(label)


def equivalent(idx: PresentationIndex, u: Word, v: Word) -> bool:
    """The word problem: do u and v represent the same element?  Runs
    wp_prefix with empty p after swapping so the shorter word comes first,
    making the run linear in min(|u|, |v|)."""
    if len(v) < len(u):
        u, v = v, u
    return wp_prefix(idx, u, v).answer


def uniform_solve(text: str, u_text: str, v_text: str, compact: bool = False) -> bool:
    """The uniform word problem: parse a presentation, validate C(4) (with a
    certificate on failure), build the index, and decide u = v.  Index
    construction costs O(|R|^2) and the decision O(|R|^2 min(|u|, |v|))."""
    pres = parse_presentation(text)
    idx = build_index(pres)
    u = pres.parse_word(u_text, compact=compact)
    v = pres.parse_word(v_text, compact=compact)
    return equivalent(idx, u, v)
