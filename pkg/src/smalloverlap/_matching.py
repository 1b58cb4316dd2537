"""Multi-pattern occurrence detection over integer sequences.

A small Aho-Corasick automaton.  scan() reports complete occurrences in
increasing end-position order, which makes "earliest-ending occurrence"
queries a single short pass; matches_at() answers point queries by direct
comparison.  Both accept any random-access sequence of letter ids, so the
solver's suffix views work as well as plain tuples.
"""

from __future__ import annotations

from collections import deque


class MultiPatternMatcher:
    def __init__(self, patterns):
        self.patterns = [tuple(p) for p in patterns]
        for pat in self.patterns:
            if not pat:
                raise ValueError("empty pattern")
        goto = [{}]
        out = [()]
        for pid, pat in enumerate(self.patterns):
            state = 0
            for letter in pat:
                nxt = goto[state].get(letter)
                if nxt is None:
                    nxt = len(goto)
                    goto.append({})
                    out.append(())
                    goto[state][letter] = nxt
                state = nxt
            out[state] += (pid,)

        fail = [0] * len(goto)
        queue = deque(goto[0].values())
        while queue:
            state = queue.popleft()
            for letter, nxt in goto[state].items():
                queue.append(nxt)
                f = fail[state]
                while f and letter not in goto[f]:
                    f = fail[f]
                f = goto[f].get(letter, 0)
                fail[nxt] = f
                if out[f]:
                    out[nxt] += out[f]

        self._goto = goto
        self._fail = fail
        self._out = out
        by_first: dict[int, list[int]] = {}
        for pid, pat in enumerate(self.patterns):
            by_first.setdefault(pat[0], []).append(pid)
        self._by_first = by_first

    def scan(self, seq, stop=None):
        """Yield (end, pids) for every end position with at least one complete
        occurrence, in increasing end order.  pids lists every pattern ending
        there (one being a suffix of another yields both).  Only end positions
        <= stop are reported when stop is given."""
        goto, fail, out = self._goto, self._fail, self._out
        n = len(seq)
        if stop is not None and stop < n:
            n = stop
        state = 0
        for i in range(n):
            letter = seq[i]
            while True:
                nxt = goto[state].get(letter)
                if nxt is not None:
                    state = nxt
                    break
                if state == 0:
                    break
                state = fail[state]
            hits = out[state]
            if hits:
                yield i + 1, hits

    def matches_at(self, seq, i):
        """Pattern ids with a complete occurrence starting at position i."""
        n = len(seq)
        if i >= n:
            return ()
        candidates = self._by_first.get(seq[i])
        if not candidates:
            return ()
        found = []
        for pid in candidates:
            pat = self.patterns[pid]
            if i + len(pat) > n:
                continue
            k = i
            for letter in pat:
                if seq[k] != letter:
                    break
                k += 1
            else:
                found.append(pid)
        return tuple(found)
