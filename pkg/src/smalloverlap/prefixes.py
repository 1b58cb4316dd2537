"""Relation-prefix detection and the weak cancellation primitives.

Everything here answers questions about bounded prefixes of words: does a
word start with a clean overlap prefix XY, is a word p-active, what is the
maximal common suffix of two maximal piece suffixes.  The hot-path variants
scan windows whose size depends only on the presentation, so one solver step
costs O(1) for a fixed presentation; *_reference variants scan whole words
and exist for differential testing.

All functions accept any random-access sequence of letter ids as the word
argument, so the solver's suffix views work as well as plain tuples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbiguityViolation
from .presentation import PresentationIndex, RelationDecomposition, Word


@dataclass(frozen=True)
class RelationPrefixHit:
    """An occurrence of some relation word's XY factor: the word has the
    relation prefix a XY with |a| = xy_start and total length end."""

    xy_start: int
    end: int
    decomp: RelationDecomposition


@dataclass(frozen=True)
class CleanXY:
    """A clean overlap prefix of the form XY (no leading a): XY is a prefix
    of the subject word and no relation word's XY factor begins strictly
    inside Y."""

    decomp: RelationDecomposition

    @property
    def z_is_empty(self) -> bool:
        return self.decomp.z_len == 0


@dataclass(frozen=True)
class SuffixSplit:
    """z is the maximal common suffix of Z and Zbar; Z = z1 z, Zbar = z2 z."""

    z: Word
    z1: Word
    z2: Word


@dataclass(frozen=True)
class OverlapChain:
    """Factorisation b X1 Y1' ... Xn Yn of an overlap prefix: y_used is the
    number of letters of each middle word consumed, with y_used < Y_len for
    the non-final links and y_used = Y_len for the final one."""

    b_len: int
    links: tuple[tuple[RelationDecomposition, int], ...]

    @property
    def end(self) -> int:
        total = self.b_len
        for decomp, y_used in self.links:
            total += decomp.x_len + y_used
        return total


def _take(seq, n: int) -> tuple:
    if isinstance(seq, tuple):
        return seq[:n]
    n = min(n, len(seq))
    return tuple(seq[i] for i in range(n))


def first_xy_hit(idx: PresentationIndex, seq, stop: int | None = None):
    """The earliest-ending XY occurrence in seq as (start, end, decomp), or
    None.  Two occurrences sharing the earliest end would make the relation
    prefix factorisation non-unique, which C(4) forbids: AmbiguityViolation.
    Only occurrences with end <= stop are considered when stop is given."""
    for end, pids in idx.xy_matcher.scan(seq, stop=stop):
        if len(pids) > 1:
            raise AmbiguityViolation(
                f"two relation prefixes end at position {end}: "
                + ", ".join(idx.decomps[pid].ref() for pid in pids))
        d = idx.decomps[pids[0]]
        return end - d.xy_len, end, d
    return None


def xy_occurrence_at(idx: PresentationIndex, w, i: int) -> RelationPrefixHit | None:
    """The XY occurrence starting at position i of w, if any.  At most one
    relation word can match at a given start under C(4); two matching raise
    AmbiguityViolation."""
    pids = idx.xy_matcher.matches_at(w, i)
    if not pids:
        return None
    if len(pids) > 1:
        raise AmbiguityViolation(
            f"two relation prefixes begin at position {i}: "
            + ", ".join(idx.decomps[pid].ref() for pid in pids))
    d = idx.decomps[pids[0]]
    return RelationPrefixHit(i, i + d.xy_len, d)


def shortest_relation_prefix(idx: PresentationIndex, w, window: int | None = None) -> RelationPrefixHit | None:
    """The shortest relation prefix of w: the XY occurrence minimising the
    prefix length |a X Y|.  With window given, only prefixes of length
    <= window are considered (bounded scan)."""
    hit = first_xy_hit(idx, w, stop=window)
    if hit is None:
        return None
    start, end, d = hit
    return RelationPrefixHit(start, end, d)


def _clean_xy_decomp(idx: PresentationIndex, w) -> RelationDecomposition | None:
    """The decomposition whose XY is a clean overlap prefix of w, or None.
    Reads at most x_len + y_len + Lmax letters of w."""
    pids = idx.xy_matcher.matches_at(w, 0)
    if not pids:
        return None
    if len(pids) > 1:
        raise AmbiguityViolation(
            "two relation words' XY factors are prefixes of the same word: "
            + ", ".join(idx.decomps[pid].ref() for pid in pids))
    d = idx.decomps[pids[0]]
    matches_at = idx.xy_matcher.matches_at
    for j in range(d.x_len + 1, d.xy_len):
        if matches_at(w, j):
            return None
    return d


def clean_overlap_prefix_xy(idx: PresentationIndex, w) -> CleanXY | None:
    """CleanXY when some relation word's XY is a prefix of w and no relation
    word's XY factor begins strictly inside Y; None otherwise."""
    d = _clean_xy_decomp(idx, w)
    return None if d is None else CleanXY(d)


def clean_overlap_prefix_xy_reference(idx: PresentationIndex, w) -> CleanXY | None:
    """Full-scan reference for clean_overlap_prefix_xy: collects every XY
    occurrence in all of w and applies the definition directly."""
    w = tuple(w)
    starts: list[tuple[int, int]] = []
    for end, pids in idx.xy_matcher.scan(w):
        for pid in pids:
            starts.append((end - idx.decomps[pid].xy_len, pid))
    at_zero = [pid for s, pid in starts if s == 0]
    if not at_zero:
        return None
    if len(at_zero) > 1:
        raise AmbiguityViolation("two relation words' XY factors are prefixes of the same word")
    d = idx.decomps[at_zero[0]]
    if any(d.x_len < s < d.xy_len for s, _ in starts):
        return None
    return CleanXY(d)


def is_p_active(idx: PresentationIndex, u, p) -> bool:
    """Whether u is p-active: the shortest relation prefix of p u is NOT p
    followed by the shortest relation prefix of u.  Equivalently, the
    earliest-ending XY occurrence in p u begins inside p.  A word with no
    relation prefix at all is p-inactive for every p.

    p must be a piece.  Scans a window of |p| + 2 Lmax letters; any window
    of at least |p| + Lmax letters gives the same answer, since an
    occurrence beginning inside p ends before |p| + Lmax and any later in-u
    occurrence loses to its own shift.
    """
    p = tuple(p)
    seq = p + _take(u, 2 * idx.lmax)
    hit = first_xy_hit(idx, seq)
    return hit is not None and hit[0] < len(p)


def is_p_active_reference(idx: PresentationIndex, u, p) -> bool:
    """Full-scan reference for is_p_active: searches all of p u."""
    seq = tuple(p) + tuple(u)
    hit = first_xy_hit(idx, seq)
    return hit is not None and hit[0] < len(p)


def maximal_common_suffix(z: Word, zbar: Word) -> SuffixSplit:
    """Split z and zbar against their longest common suffix."""
    z, zbar = tuple(z), tuple(zbar)
    m = 0
    while m < len(z) and m < len(zbar) and z[len(z) - 1 - m] == zbar[len(zbar) - 1 - m]:
        m += 1
    return SuffixSplit(z=z[len(z) - m:], z1=z[:len(z) - m], z2=zbar[:len(zbar) - m])


def overlap_chain(idx: PresentationIndex, w) -> OverlapChain | None:
    """Extend the shortest relation prefix of w into a clean overlap prefix
    and return its factorisation, or None when w has no relation prefix.

    Diagnostic operation: used by tests and trace output, not by the solver.
    """
    w = tuple(w)
    first = shortest_relation_prefix(idx, w)
    if first is None:
        return None
    b_len = first.xy_start
    links: list[tuple[RelationDecomposition, int]] = [(first.decomp, first.decomp.y_len)]
    end = first.end
    matches_at = idx.xy_matcher.matches_at
    while True:
        d, _ = links[-1]
        y_start = end - d.y_len
        best = None  # (end, start, decomp) of the earliest-ending interior hit
        for j in range(y_start + 1, end):
            for pid in matches_at(w, j):
                d2 = idx.decomps[pid]
                e2 = j + d2.xy_len
                if best is None or e2 < best[0]:
                    best = (e2, j, d2)
                elif e2 == best[0]:
                    raise AmbiguityViolation("two interior relation prefixes end together")
        if best is None:
            break
        e2, j, d2 = best
        # An interior occurrence contained in the current prefix would make
        # its XY a piece, so it must extend past the current end.
        assert e2 > end, "interior XY occurrence does not extend the prefix"
        links[-1] = (d, j - y_start)
        links.append((d2, d2.y_len))
        end = e2
    # Nothing may begin before the end of b; under C(4) the shortest relation
    # prefix already guarantees it, so this is a sanity scan.
    for e3, pids in idx.xy_matcher.scan(w, stop=min(len(w), b_len + idx.lmax)):
        for pid in pids:
            if e3 - idx.decomps[pid].xy_len < b_len:
                raise AmbiguityViolation("XY occurrence begins before the overlap prefix body")
    return OverlapChain(b_len, tuple(links))
