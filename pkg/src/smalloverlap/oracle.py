"""Brute-force ground truth for the word problem.

Bounded breadth-first closure of a word under single rewrites with the
defining relations.  On length-preserving presentations the closure is
finite and the oracle is exact; otherwise the search may be capped, which
the three-valued verdicts report (True / False / None for unknown).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .presentation import Presentation, Word


@dataclass(frozen=True)
class OracleCaps:
    """Soft limits for closure exploration.  max_word_len prunes rewrites
    producing longer words; max_states stops the search outright; max_depth
    (when given) limits derivation length."""

    max_word_len: int
    max_states: int
    max_depth: int | None = None

    def validate(self, seed: Word) -> None:
        if self.max_word_len < len(seed):
            raise ValueError("max_word_len smaller than the seed word")
        if self.max_states < 1:
            raise ValueError("max_states must be at least 1")
        if self.max_depth is not None and self.max_depth < 0:
            raise ValueError("max_depth must be non-negative")


@dataclass
class OracleClosure:
    """Words reachable from a seed by rewriting, with minimal derivation
    depths.  complete is True iff no cap pruned anything, in which case the
    word set is exactly the equivalence class of the seed."""

    depths: dict[Word, int]
    complete: bool
    frontier_depth: int

    @property
    def words(self) -> set[Word]:
        return set(self.depths)

    def __contains__(self, w: Word) -> bool:
        return tuple(w) in self.depths

    def __len__(self) -> int:
        return len(self.depths)


def rewrite_neighbors(pres: Presentation, w: Word) -> set[Word]:
    """All words obtained from w by replacing one occurrence of one side of
    one relation with the other side.  Every occurrence at every position
    contributes; an empty side occurs at every boundary position."""
    w = tuple(w)
    out = set()
    for lhs, rhs in pres.relations:
        for src, dst in ((lhs, rhs), (rhs, lhs)):
            m = len(src)
            for i in range(len(w) - m + 1):
                if w[i:i + m] == src:
                    out.add(w[:i] + dst + w[i + m:])
    return out


def closure(pres: Presentation, w: Word, caps: OracleCaps) -> OracleClosure:
    """Breadth-first closure of w under rewriting, subject to caps."""
    w = tuple(w)
    caps.validate(w)
    depths = {w: 0}
    queue = deque([w])
    complete = True
    frontier_depth = 0
    while queue:
        cur = queue.popleft()
        d = depths[cur]
        neighbors = rewrite_neighbors(pres, cur)
        if caps.max_depth is not None and d >= caps.max_depth:
            if any(nb not in depths for nb in neighbors):
                complete = False
            continue
        for nb in neighbors:
            if nb in depths:
                continue
            if len(nb) > caps.max_word_len:
                complete = False
                continue
            if len(depths) >= caps.max_states:
                complete = False
                queue.clear()
                break
            depths[nb] = d + 1
            frontier_depth = d + 1
            queue.append(nb)
    return OracleClosure(depths, complete, frontier_depth)


def _default_caps(u: Word, v: Word = ()) -> OracleCaps:
    return OracleCaps(max_word_len=max(len(u), len(v)), max_states=100_000)


def oracle_equivalent(pres: Presentation, u: Word, v: Word, caps: OracleCaps | None = None) -> bool | None:
    """True when v lies in the closure of u, False when the complete closure
    excludes it, None when a cap was hit first.  The default caps suit
    length-preserving presentations, where they are never hit."""
    u, v = tuple(u), tuple(v)
    if caps is None:
        caps = _default_caps(u, v)
    cl = closure(pres, u, caps)
    if v in cl:
        return True
    return False if cl.complete else None


def oracle_possible_prefix(pres: Presentation, u: Word, p: Word, caps: OracleCaps | None = None) -> bool | None:
    """Whether p is a possible prefix of u: some word equivalent to u starts
    with p literally (p w' is equivalent to u for some w' exactly when some
    member of u's class begins with p).  Three-valued like oracle_equivalent."""
    u, p = tuple(u), tuple(p)
    if caps is None:
        caps = _default_caps(u)
    cl = closure(pres, u, caps)
    m = len(p)
    if any(word[:m] == p for word in cl.depths):
        return True
    return False if cl.complete else None
