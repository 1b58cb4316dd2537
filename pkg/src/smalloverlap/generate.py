"""Random corpora for differential testing.

Random words, random presentations, and rejection-sampled C(4)
presentations.  Everything is driven by a caller-supplied random.Random so
runs are reproducible from a seed.
"""

from __future__ import annotations

import random
import string

from .presentation import Presentation, Word, check_condition

_NAMES = string.ascii_lowercase


def random_word(rng: random.Random, n_letters: int, length: int) -> Word:
    return tuple(rng.randrange(n_letters) for _ in range(length))


def random_presentation(
    rng: random.Random,
    *,
    n_gens: int = 4,
    n_rels: int = 1,
    min_len: int = 1,
    max_len: int = 5,
    length_preserving: bool = False,
) -> Presentation:
    """A random presentation: n_rels relations over n_gens generators with
    side lengths drawn from [min_len, max_len].  Up to 26 generators get
    single-letter names (so words print compactly); above that the names are
    g0, g1, ...  With length_preserving=True the two sides of each relation
    have equal length, which keeps rewriting closures finite."""
    if n_gens <= len(_NAMES):
        alphabet = _NAMES[:n_gens]
    else:
        alphabet = [f"g{i}" for i in range(n_gens)]
    rels = []
    for _ in range(n_rels):
        n_lhs = rng.randint(min_len, max_len)
        n_rhs = n_lhs if length_preserving else rng.randint(min_len, max_len)
        rels.append((random_word(rng, n_gens, n_lhs), random_word(rng, n_gens, n_rhs)))
    return Presentation(alphabet, rels)


def random_c4_presentation(
    rng: random.Random,
    *,
    n_gens: int = 6,
    n_rels: int = 2,
    min_len: int = 3,
    max_len: int = 6,
    length_preserving: bool = False,
    max_tries: int = 2000,
) -> tuple[Presentation, int]:
    """Rejection-sample a presentation satisfying C(4); returns it together
    with the number of rejected candidates.  Sampling against the checked
    definition cannot bias correctness testing; the rejection count lets
    callers report the rate."""
    rejected = 0
    for _ in range(max_tries):
        pres = random_presentation(
            rng, n_gens=n_gens, n_rels=n_rels, min_len=min_len, max_len=max_len,
            length_preserving=length_preserving)
        if check_condition(pres, 4):
            return pres, rejected
        rejected += 1
    raise RuntimeError(f"no C(4) presentation found in {max_tries} tries")
