"""Words and permutations in one-line notation.

A *word* is a tuple of positive integers.  A *permutation* of size n is a
word containing each letter of 1..n exactly once; the letter at (1-based)
position i is u[i-1].  Both are plain tuples, so structural equality,
lexicographic ordering and hashing come for free.

The generalized factor order compares words letterwise: u embeds into w at
index j when every u_i is dominated by w_{j+i-1}.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import (
    DuplicateLetter,
    EmptyPattern,
    MalformedToken,
    MissingLetter,
    NonPositiveLetter,
)

_SEPARATORS = re.compile(r"[,\s]+")


def as_word(letters: Iterable[int]) -> tuple[int, ...]:
    """Validate and freeze a word (letters may repeat, all must be >= 1)."""
    w = tuple(int(x) for x in letters)
    for x in w:
        if x < 1:
            raise NonPositiveLetter(f"letter {x} is not a positive integer")
    return w


def as_permutation(letters: Iterable[int]) -> tuple[int, ...]:
    """Validate and freeze a permutation of 1..n.

    >>> as_permutation([2, 1, 3])
    (2, 1, 3)
    """
    w = as_word(letters)
    n = len(w)
    if n == 0:
        raise MissingLetter("a permutation has at least one letter")
    if len(set(w)) != n:
        raise DuplicateLetter(f"duplicate letter in {w}")
    if max(w) != n:
        raise MissingLetter(f"letters of {w} are not exactly 1..{n}")
    return w


def parse_permutation(text: str, n_hint: int | None = None) -> tuple[int, ...]:
    """Parse permutation text.

    Two formats are accepted: a compact digit string such as ``"592738164"``
    (one digit per letter, so only usable while all letters are <= 9), and a
    comma- or space-separated list such as ``"3, 12, 1, 2"`` which is
    required as soon as a letter exceeds 9.

    >>> parse_permutation("1")
    (1,)
    >>> parse_permutation("3 1 2")
    (3, 1, 2)
    """
    text = text.strip()
    if not text:
        raise MalformedToken("empty permutation text")
    if _SEPARATORS.search(text):
        tokens = _SEPARATORS.split(text)
        letters = []
        for tok in tokens:
            if not tok:
                continue
            try:
                letters.append(int(tok))
            except ValueError:
                raise MalformedToken(f"token {tok!r} is not an integer") from None
    elif text.isdigit():
        letters = [int(c) for c in text]
    else:
        raise MalformedToken(f"cannot read {text!r} as a permutation")
    u = as_permutation(letters)
    if n_hint is not None and len(u) != n_hint:
        raise MissingLetter(f"expected a permutation of 1..{n_hint}, got size {len(u)}")
    return u


def format_word(w: Sequence[int]) -> str:
    """Render a word compactly when all letters fit one digit."""
    if w and max(w) <= 9:
        return "".join(str(x) for x in w)
    return " ".join(str(x) for x in w)


def identity(n: int) -> tuple[int, ...]:
    """The identity permutation 1 2 ... n."""
    return tuple(range(1, n + 1))


def inverse(u: Sequence[int]) -> tuple[int, ...]:
    """Inverse permutation: the result t satisfies t[u[i]-1] == i+1.

    >>> inverse((5, 9, 2, 7, 3, 8, 1, 6, 4))
    (7, 3, 5, 9, 1, 8, 4, 6, 2)
    """
    inv = [0] * len(u)
    for i, x in enumerate(u):
        inv[x - 1] = i + 1
    return tuple(inv)


def reversal(w: Sequence[int]) -> tuple[int, ...]:
    """The word read right to left.

    >>> reversal((3, 2, 4, 1, 5))
    (5, 1, 4, 2, 3)
    """
    return tuple(reversed(w))


def reduced_form(w: Sequence[int]) -> tuple[int, ...]:
    """Relabel a distinct-letter word order-isomorphically onto 1..k.

    The smallest letter becomes 1, the second smallest 2, and so on.

    >>> reduced_form((7, 3, 5))
    (3, 1, 2)
    """
    if len(set(w)) != len(w):
        raise DuplicateLetter(f"cannot reduce {tuple(w)}: repeated letters")
    rank = {x: i + 1 for i, x in enumerate(sorted(w))}
    return tuple(rank[x] for x in w)


def un_reduce(alphabet: Iterable[int], pattern: Sequence[int]) -> tuple[int, ...]:
    """Write ``pattern`` using the given alphabet: the unique word over
    ``alphabet`` whose reduced form is ``pattern``.
    """
    letters = sorted(alphabet)
    if len(letters) != len(pattern):
        from .errors import SizeMismatch

        raise SizeMismatch(
            f"alphabet size {len(letters)} != pattern size {len(pattern)}"
        )
    return tuple(letters[t - 1] for t in pattern)


def weight(w: Sequence[int]) -> tuple[int, int]:
    """(length, sum of letters) of a word.

    >>> weight((3, 2, 2))
    (3, 7)
    >>> weight(())
    (0, 0)
    """
    return len(w), sum(w)


def embedding_set(u: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    """All 1-based start indices at which ``u`` embeds into ``w``.

    Index j is included when u_i <= w_{j+i-1} for every position i of u.
    The scan is the naive O(|u|*|w|) one; hosts here are small.

    >>> embedding_set((3, 2, 2), (2, 3, 4, 3, 2, 1, 3, 4, 2, 1))
    (2, 3, 7)
    """
    if len(u) == 0:
        raise EmptyPattern("the pattern word must be non-empty")
    m, n = len(u), len(w)
    hits = []
    for j in range(n - m + 1):
        if all(u[i] <= w[j + i] for i in range(m)):
            hits.append(j + 1)
    return tuple(hits)
