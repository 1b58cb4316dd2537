"""Finite monoid presentations and their piece machinery.

A presentation is an alphabet of generator tokens plus a list of relations
(pairs of words).  Words are tuples of generator ids.  This module provides
parsing of the presentation file format, piece queries, the maximal piece
prefix/suffix scan, the X|Y|Z decomposition of relation words, the C(n) and
OL(x) condition checks, and the PresentationIndex consumed by the solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from ._matching import MultiPatternMatcher
from .errors import NotC3Error, NotC4Error, ParseError

Word = tuple[int, ...]
EPSILON: Word = ()

# Characters that cannot appear in generator names (file-format delimiters),
# plus the literal "1" which denotes the empty word.
_BANNED_CHARS = set(" \t\r\n=#,")
EMPTY_WORD_TOKEN = "1"


class Relation(NamedTuple):
    lhs: Word
    rhs: Word


class Presentation:
    """A finite monoid presentation.  Immutable after construction.

    alphabet        -- tuple of generator display names; letter i is alphabet[i]
    relations       -- tuple of Relation
    relation_words  -- the sides of all relations in order
                       (lhs of relation 0, rhs of relation 0, lhs of 1, ...)
    total_relation_length -- sum of the lengths of all relation words
    """

    def __init__(self, alphabet: Sequence[str], relations: Iterable[tuple[Sequence[int], Sequence[int]]]):
        alphabet = tuple(alphabet)
        seen = set()
        for name in alphabet:
            if not name or any(ch in _BANNED_CHARS for ch in name):
                raise ValueError(f"invalid generator name {name!r}")
            if name == EMPTY_WORD_TOKEN:
                raise ValueError(f"generator name {EMPTY_WORD_TOKEN!r} is reserved for the empty word")
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
        rels = []
        for lhs, rhs in relations:
            lhs = tuple(lhs)
            rhs = tuple(rhs)
            for letter in lhs + rhs:
                if not 0 <= letter < len(alphabet):
                    raise ValueError(f"letter id {letter} out of range for alphabet of size {len(alphabet)}")
            rels.append(Relation(lhs, rhs))
        self.alphabet = alphabet
        self.relations = tuple(rels)
        self.relation_words = tuple(w for rel in self.relations for w in rel)
        self.total_relation_length = sum(len(w) for w in self.relation_words)
        self._ids = {name: i for i, name in enumerate(alphabet)}

    def __repr__(self):
        rels = ", ".join(f"{self.format_word(l)} = {self.format_word(r)}" for l, r in self.relations)
        return f"<Presentation {' '.join(self.alphabet)} | {rels}>"

    def parse_word(self, text: str, compact: bool = False) -> Word:
        """Parse a word: whitespace-separated generator tokens, with the
        literal "1" denoting (a factor equal to) the empty word.  With
        compact=True every character is one token instead."""
        tokens = list(text) if compact else text.split()
        letters = []
        for tok in tokens:
            if tok == EMPTY_WORD_TOKEN:
                continue
            if tok not in self._ids:
                raise ParseError(f"undeclared generator {tok!r}")
            letters.append(self._ids[tok])
        return tuple(letters)

    def format_word(self, word: Sequence[int], compact: bool = False) -> str:
        if not word:
            return EMPTY_WORD_TOKEN
        names = (self.alphabet[letter] for letter in word)
        return ("" if compact else " ").join(names)

    def to_text(self) -> str:
        """Render back into the presentation file format."""
        lines = ["generators: " + " ".join(self.alphabet)]
        for lhs, rhs in self.relations:
            lines.append(f"relation: {self.format_word(lhs)} = {self.format_word(rhs)}")
        return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation file format.

    Lines starting with '#' and blank lines are ignored.  Exactly one
    'generators:' line must come before any 'relation:' line.  Each
    'relation:' line holds two words separated by a single '='; the literal
    "1" denotes the empty word.  Zero relation lines is legal (free monoid).
    """
    alphabet: list[str] = []
    have_generators = False
    relation_texts: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("generators:"):
            if have_generators:
                raise ParseError("second 'generators:' line", lineno)
            have_generators = True
            for tok in line[len("generators:"):].split():
                if tok == EMPTY_WORD_TOKEN:
                    raise ParseError(f"generator name {EMPTY_WORD_TOKEN!r} is reserved for the empty word",
                                     lineno, raw.index(tok) + 1)
                if tok in alphabet:
                    raise ParseError(f"duplicate generator name {tok!r}", lineno, raw.index(tok) + 1)
                alphabet.append(tok)
        elif line.startswith("relation:"):
            if not have_generators:
                raise ParseError("'relation:' line before 'generators:' line", lineno)
            body = line[len("relation:"):]
            sides = body.split("=")
            if len(sides) != 2:
                raise ParseError("a relation needs exactly one '='", lineno, raw.index(body) + 1)
            relation_texts.append((sides[0], sides[1], lineno))
        else:
            word = line.split()[0]
            raise ParseError(f"unrecognised line (expected 'generators:', 'relation:' or '#'): {word!r}",
                             lineno, raw.index(word) + 1)
    if not have_generators:
        raise ParseError("missing 'generators:' line")

    ids = {name: i for i, name in enumerate(alphabet)}
    relations = []
    for lhs_text, rhs_text, lineno in relation_texts:
        sides = []
        for side_text in (lhs_text, rhs_text):
            tokens = side_text.split()
            if not tokens:
                raise ParseError("empty side in relation (use '1' for the empty word)", lineno)
            letters = []
            for tok in tokens:
                if tok == EMPTY_WORD_TOKEN:
                    continue
                if tok not in ids:
                    raise ParseError(f"undeclared generator {tok!r}", lineno)
                letters.append(ids[tok])
            sides.append(tuple(letters))
        relations.append((sides[0], sides[1]))
    return Presentation(alphabet, relations)


# ---------------------------------------------------------------------------
# piece machinery


def is_piece(pres: Presentation, w: Sequence[int]) -> bool:
    """True iff w occurs as a factor at two distinct (relation word, position)
    locations, or w is empty.  Occurrences may overlap; the two sides of one
    relation count as distinct relation words."""
    w = tuple(w)
    m = len(w)
    if m == 0:
        return True
    count = 0
    for rw in pres.relation_words:
        for i in range(len(rw) - m + 1):
            if rw[i:i + m] == w:
                count += 1
                if count >= 2:
                    return True
    return False


def max_piece_prefix(pres: Presentation, w: Sequence[int]) -> int:
    """Length of the longest prefix of w that is a piece.

    Runs the two-counter scan: for every suffix position of every relation
    word take the longest common prefix with w; the answer is the largest
    value attained at two distinct positions (the second maximum), since a
    prefix is a piece exactly when two positions reach its length.  Cost is
    O(|w| * total relation length).
    """
    w = tuple(w)
    nw = len(w)
    best = second = 0
    for rw in pres.relation_words:
        n = len(rw)
        for i in range(n):
            m = 0
            top = min(nw, n - i)
            while m < top and rw[i + m] == w[m]:
                m += 1
            if m >= best:
                second = best
                best = m
            elif m > second:
                second = m
    return second


def max_piece_suffix(pres: Presentation, w: Sequence[int]) -> int:
    """Length of the longest suffix of w that is a piece (mirror scan)."""
    w = tuple(w)
    nw = len(w)
    best = second = 0
    for rw in pres.relation_words:
        n = len(rw)
        for i in range(1, n + 1):  # i = end position of the relation-word prefix
            m = 0
            top = min(nw, i)
            while m < top and rw[i - 1 - m] == w[nw - 1 - m]:
                m += 1
            if m >= best:
                second = best
                best = m
            elif m > second:
                second = m
    return second


def enumerate_pieces(pres: Presentation) -> list[Word]:
    """All pieces of the presentation, shortlex-sorted.  Includes the empty
    word.  Intended for inspection and piece sampling, not for hot paths."""
    counts: dict[Word, int] = {}
    for rw in pres.relation_words:
        n = len(rw)
        for i in range(n):
            for j in range(i + 1, n + 1):
                f = rw[i:j]
                counts[f] = counts.get(f, 0) + 1
    pieces = [f for f, c in counts.items() if c >= 2]
    pieces.append(EPSILON)
    pieces.sort(key=lambda f: (len(f), f))
    return pieces


def min_piece_factorisation(pres: Presentation, w: Sequence[int]) -> list[Word] | None:
    """A factorisation of w into the minimum number of pieces, or None when w
    is no product of pieces at all.  The empty word factors into zero pieces.

    Every prefix of a piece is a piece, so from position i any jump of up to
    max_piece_prefix(w[i:]) letters lands on a valid piece; a forward DP over
    positions then minimises the number of parts.
    """
    w = tuple(w)
    n = len(w)
    reach = [max_piece_prefix(pres, w[i:]) for i in range(n)]
    INF = n + 2
    cost = [0] + [INF] * n
    back = [-1] * (n + 1)
    for i in range(n):
        if cost[i] == INF or reach[i] == 0:
            continue
        for j in range(i + 1, i + reach[i] + 1):
            if cost[i] + 1 < cost[j]:
                cost[j] = cost[i] + 1
                back[j] = i
    if cost[n] == INF and n > 0:
        return None
    parts = []
    j = n
    while j > 0:
        i = back[j]
        parts.append(w[i:j])
        j = i
    parts.reverse()
    return parts


def _xz_lengths(pres: Presentation) -> list[tuple[int, int]]:
    """(max piece prefix length, max piece suffix length) per relation word."""
    return [(max_piece_prefix(pres, rw), max_piece_suffix(pres, rw)) for rw in pres.relation_words]


def check_condition(pres: Presentation, n: int) -> bool:
    """Whether the presentation satisfies C(n): no relation word is a product
    of strictly fewer than n pieces.

    n=1: the empty word is not a relation word.
    n=2: additionally, no relation word is itself a piece.
    n=3: every relation word R has |X_R| + |Z_R| < |R|.
    n=4: additionally, no middle word Y_R is a piece.

    n=3 and n=4 run in O(total relation length squared).  For n >= 5 the
    generic minimal piece factorisation is used (no complexity guarantee).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return all(len(rw) > 0 for rw in pres.relation_words)
    if n == 2:
        return check_condition(pres, 1) and not any(is_piece(pres, rw) for rw in pres.relation_words)
    if n == 3:
        return all(x + z < len(rw) for rw, (x, z) in zip(pres.relation_words, _xz_lengths(pres)))
    if n == 4:
        for rw, (x, z) in zip(pres.relation_words, _xz_lengths(pres)):
            if x + z >= len(rw):
                return False
            if is_piece(pres, rw[x:len(rw) - z]):
                return False
        return True
    return check_condition_bruteforce(pres, n)


def check_condition_bruteforce(pres: Presentation, n: int) -> bool:
    """C(n) by direct search: factorise every relation word into the minimum
    number of pieces and compare against n.  Independent of the
    characterisations used by check_condition; kept for cross-checking."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for rw in pres.relation_words:
        parts = min_piece_factorisation(pres, rw)
        if parts is not None and len(parts) < n:
            return False
    return True


def c4_certificate(pres: Presentation) -> tuple[Word, list[Word]] | None:
    """A witness that C(4) fails: (relation word, its factorisation into
    fewer than four pieces), or None when C(4) holds."""
    for rw in pres.relation_words:
        parts = min_piece_factorisation(pres, rw)
        if parts is not None and len(parts) < 4:
            return rw, parts
    return None


def check_ol(pres: Presentation, x) -> bool:
    """Whether the presentation satisfies OL(x) for rational x in (0, 1]:
    every piece occurring as a factor of a relation word R is shorter than
    x * |R|.  The comparison is exact (Fraction arithmetic)."""
    x = Fraction(x)
    if not 0 < x <= 1:
        raise ValueError("x must lie in (0, 1]")
    for rw in pres.relation_words:
        longest = 0
        for i in range(len(rw)):
            longest = max(longest, max_piece_prefix(pres, rw[i:]))
        if longest >= x * len(rw):
            return False
    return True


# ---------------------------------------------------------------------------
# relation word decomposition and the solver index


@dataclass(frozen=True)
class RelationDecomposition:
    """The X|Y|Z split of one relation word: maximal piece prefix, middle
    word, maximal piece suffix.  Cached factors avoid re-slicing in the
    solver; mcs/z1 pre-split Z against the partner's maximal piece suffix
    (Z = z1 + mcs with mcs the longest suffix shared with the partner's Z)."""

    rel_index: int
    side: int  # 0 = lhs, 1 = rhs
    word: Word
    x_len: int
    y_len: int
    z_len: int
    partner_index: int
    x: Word
    y: Word
    z: Word
    xy: Word
    mcs: Word
    z1: Word

    @property
    def xy_len(self) -> int:
        return self.x_len + self.y_len

    def ref(self) -> str:
        return f"relation {self.rel_index} {'lhs' if self.side == 0 else 'rhs'}"


def _common_suffix(a: Word, b: Word) -> Word:
    m = 0
    while m < len(a) and m < len(b) and a[len(a) - 1 - m] == b[len(b) - 1 - m]:
        m += 1
    return a[len(a) - m:]


def decompose(pres: Presentation) -> list[RelationDecomposition]:
    """X|Y|Z decompositions of all relation words, in relation_words order.

    Raises NotC3Error when some relation word is a product of at most two
    pieces (maximal piece prefix and suffix meet or overlap), since then no
    non-empty middle word exists.
    """
    lengths = _xz_lengths(pres)
    for rw, (x, z) in zip(pres.relation_words, lengths):
        if x + z >= len(rw):
            parts = min_piece_factorisation(pres, rw)
            raise NotC3Error(
                f"relation word {pres.format_word(rw)} is a product of at most two pieces",
                relation_word=rw, pieces=parts)
    decomps = []
    for i, (rw, (x, z)) in enumerate(zip(pres.relation_words, lengths)):
        partner = i + 1 if i % 2 == 0 else i - 1
        partner_word = pres.relation_words[partner]
        partner_z = partner_word[len(partner_word) - lengths[partner][1]:]
        this_z = rw[len(rw) - z:]
        mcs = _common_suffix(this_z, partner_z)
        decomps.append(RelationDecomposition(
            rel_index=i // 2,
            side=i % 2,
            word=rw,
            x_len=x,
            y_len=len(rw) - x - z,
            z_len=z,
            partner_index=partner,
            x=rw[:x],
            y=rw[x:len(rw) - z],
            z=this_z,
            xy=rw[:len(rw) - z],
            mcs=mcs,
            z1=this_z[:len(this_z) - len(mcs)],
        ))
    return decomps


class PresentationIndex:
    """Per-presentation data the solver needs: decompositions, the partner
    links, the XY occurrence matcher, k (longest maximal piece suffix) and
    Lmax (longest relation word).  Immutable; safe to share across threads.

    With require_c4=True (the default) construction raises NotC4Error, with a
    certificate, when the presentation is not C(4).  With require_c4=False
    the condition flags are still computed but only C(3) is required (the
    decompositions would not exist otherwise); such an index cannot be used
    with the solver.
    """

    def __init__(self, presentation: Presentation, require_c4: bool = True):
        self.presentation = presentation
        self.conditions = {n: check_condition(presentation, n) for n in (1, 2, 3, 4)}
        self.is_c4 = self.conditions[4]
        if require_c4 and not self.is_c4:
            cert = c4_certificate(presentation)
            detail = ""
            if cert is not None:
                rw, parts = cert
                detail = (f": {presentation.format_word(rw)} = "
                          + " . ".join(presentation.format_word(p) for p in parts))
            raise NotC4Error("presentation is not C(4)" + detail, certificate=cert)
        if not self.conditions[3]:
            raise NotC3Error("presentation is not C(3); no decomposition index exists")
        self.decomps = tuple(decompose(presentation))
        if self.conditions[2]:
            # C(2) forces all relation words to be pairwise distinct words
            # (a repeated side would be a piece); the solver relies on this.
            words = [d.word for d in self.decomps]
            assert len(set(words)) == len(words), "relation word repeated under C(2)"
        self.k = max((d.z_len for d in self.decomps), default=0)
        self.lmax = max((len(rw) for rw in presentation.relation_words), default=0)
        self.xy_matcher = MultiPatternMatcher([d.xy for d in self.decomps])

    def condition(self, n: int) -> bool:
        return self.conditions[n]

    def decomp_of(self, rel_index: int, side: int) -> RelationDecomposition:
        return self.decomps[2 * rel_index + side]


def build_index(pres: Presentation, require_c4: bool = True) -> PresentationIndex:
    return PresentationIndex(pres, require_c4=require_c4)
