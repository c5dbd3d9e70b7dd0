"""Minimal prefixes with periodic complement, and their two correspondences.

A length-i word u over 1..n (distinct letters) is a *minimal periodic-
complement prefix* when the unused letters form an arithmetic progression
(a periodic set) while no proper prefix of u has that property.  Deleting the
letters of u from 1..n one at a time and recording the gap vector after each
deletion yields a *trapezoidal sequence*: a tower whose top level is the
first constant vector after the base.  That map is reversible, and the
prefixes of length k < n//2 additionally correspond to the permutations of
size k+1 with no interval suffix.  Both directions of both correspondences
live here.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _permutations
from typing import Sequence

from .errors import (
    InvalidTrapezoid,
    NotAPrefix,
    NotInB,
    OutOfRange,
    RangeViolation,
    SizeTooSmall,
)
from .pyramid import (
    DiffVector,
    consecutive_differences,
    set_from_differences,
    validate_transition,
)
from .words import reduced_form, reversal


def is_periodic_vector(d: Sequence[int]) -> bool:
    """True when all entries are equal (single entries count).

    >>> is_periodic_vector((2, 2, 2))
    True
    >>> is_periodic_vector((1, 2, 2, 2))
    False
    """
    return all(e == d[0] for e in d)


def is_periodic_set(values) -> bool:
    """True when the sorted elements form an arithmetic progression."""
    return is_periodic_vector(consecutive_differences(values))


def _complement(letters, n: int) -> set[int]:
    return set(range(1, n + 1)) - set(letters)


def is_minimal_prefix(u: Sequence[int], n: int) -> bool:
    """Membership test straight from the definition: complement periodic,
    no proper prefix with periodic complement, letters distinct in 1..n."""
    i = len(u)
    if n < 3 or not 1 <= i <= n - 2:
        return False
    if len(set(u)) != i or not all(1 <= x <= n for x in u):
        return False
    remaining = set(range(1, n + 1))
    for j, x in enumerate(u, start=1):
        remaining.discard(x)
        periodic = is_periodic_set(remaining)
        if j < i:
            if periodic:
                return False
        else:
            return periodic
    return False


def _periodic_subsets(size: int, n: int):
    """All arithmetic progressions of the given size inside 1..n."""
    gaps = size - 1
    for d in range(1, (n - 1) // gaps + 1):
        for a in range(1, n - gaps * d + 1):
            yield tuple(range(a, a + gaps * d + 1, d))


@lru_cache(maxsize=None)
def minimal_prefixes(i: int, n: int) -> tuple[tuple[int, ...], ...]:
    """The set D of minimal periodic-complement prefixes of length i over
    1..n, sorted lexicographically.

    Built recursively: length-1 prefixes are pinned ({1,2,3} for n=3, else
    {1, n}); longer prefixes enumerate periodic complements, order the
    remaining letters in every way, and reject words with a shorter prefix
    already in some D.

    >>> minimal_prefixes(2, 5)
    ((2, 1), (2, 4), (4, 2), (4, 5))
    """
    if n < 3 or not 1 <= i <= n - 2:
        raise OutOfRange(f"need n >= 3 and 1 <= i <= n-2, got i={i}, n={n}")
    if i == 1:
        if n == 3:
            return ((1,), (2,), (3,))
        return ((1,), (n,))
    smaller = [frozenset(minimal_prefixes(j, n)) for j in range(1, i)]
    out = []
    for comp in _periodic_subsets(n - i, n):
        letters = sorted(set(range(1, n + 1)) - set(comp))
        for w in _permutations(letters):
            if all(w[:j] not in smaller[j - 1] for j in range(1, i)):
                out.append(w)
    return tuple(sorted(out))


@dataclass(frozen=True)
class TrapezoidalSequence:
    """Validated initial tower (levels[0] longest) whose top level is the
    only constant vector apart from the all-ones base."""

    levels: tuple[DiffVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(tuple(v) for v in self.levels))
        levels = self.levels
        n = len(levels[0]) + 1 if levels else 0
        height = len(levels) - 1
        if not 1 <= height <= n - 2:
            raise InvalidTrapezoid(f"height {height} out of range for size {n}")
        if levels[0] != (1,) * (n - 1):
            raise InvalidTrapezoid(f"base level must be all ones, got {levels[0]}")
        for j, level in enumerate(levels, start=1):
            if len(level) != n - j or any(e < 1 for e in level):
                raise InvalidTrapezoid(f"level {j} malformed: {level}")
        for j in range(len(levels) - 1):
            if not validate_transition(levels[j], levels[j + 1]):
                raise InvalidTrapezoid(
                    f"no admissible step from {levels[j]} to {levels[j + 1]}"
                )
        if not is_periodic_vector(levels[-1]):
            raise InvalidTrapezoid(f"top level {levels[-1]} is not constant")
        for j in range(1, len(levels) - 1):
            if is_periodic_vector(levels[j]):
                raise InvalidTrapezoid(
                    f"interior level {j + 1} {levels[j]} must not be constant"
                )

    @property
    def n(self) -> int:
        return len(self.levels[0]) + 1

    @property
    def height(self) -> int:
        return len(self.levels) - 1

    def to_json(self) -> list[list[int]]:
        return [list(v) for v in self.levels]


def prefix_to_trapezoid(u: Sequence[int], n: int) -> TrapezoidalSequence:
    """Delete the letters of ``u`` from 1..n in order, recording the gap
    vector of the surviving set after each deletion.

    For length-1 prefixes the images of 1 and n coincide (deleting either
    endpoint leaves gaps (1,...,1)), so the map is two-to-one there and
    injective at every greater height.
    """
    u = tuple(u)
    if not is_minimal_prefix(u, n):
        raise NotAPrefix(f"{u} is not a minimal periodic-complement prefix for n={n}")
    remaining = set(range(1, n + 1))
    levels = [consecutive_differences(remaining)]
    for x in u:
        remaining.remove(x)
        levels.append(consecutive_differences(remaining))
    return TrapezoidalSequence(tuple(levels))


def trapezoid_to_prefix(t: TrapezoidalSequence) -> tuple[int, ...]:
    """Reverse of :func:`prefix_to_trapezoid`.

    Walk the tower upward keeping the surviving letter set: each level is
    rebuilt from its gap vector anchored at the current minimum, except when
    the next level equals the current one with its first gap dropped, which
    means the minimum itself was deleted and the anchor advances past it.
    Where the prefix map is two-to-one (height 1), this walk returns the
    deleted-minimum reading, i.e. the prefix (1,).
    """
    levels = t.levels
    n = t.n
    survivors = tuple(range(1, n + 1))
    prefix = []
    for j in range(len(levels) - 1):
        current = levels[j]
        nxt = levels[j + 1]
        low = survivors[0]
        anchor = low + current[0] if nxt == current[1:] else low
        rebuilt = set_from_differences(anchor, nxt)
        removed = set(survivors) - set(rebuilt)
        if len(removed) != 1 or not set(rebuilt) < set(survivors):
            raise InvalidTrapezoid(
                f"level {j + 2} {nxt} does not delete one letter from {survivors}"
            )
        prefix.append(removed.pop())
        survivors = rebuilt
    return tuple(prefix)


def is_non_interval(b: Sequence[int]) -> bool:
    """No prefix of length 2..n-1 uses a contiguous block of values.

    >>> is_non_interval((2, 4, 1, 3))
    True
    >>> is_non_interval((1, 2, 3))
    False
    """
    n = len(b)
    if n < 2:
        raise SizeTooSmall("defined for size >= 2")
    lo = hi = b[0]
    for l in range(2, n):
        x = b[l - 1]
        lo = x if x < lo else lo
        hi = x if x > hi else hi
        if hi - lo == l - 1:
            return False
    return True


def _has_no_interval_suffix(b: Sequence[int]) -> bool:
    # suffixes of b are prefixes of its reversal
    return is_non_interval(reversal(b))


def prefix_to_noninterval(u: Sequence[int], n: int) -> tuple[int, ...]:
    """Compress a minimal prefix with interval complement to a permutation
    with no interval suffix.

    Appending the least unused letter collapses the complement block to one
    letter under reduction, leaving a permutation of size k+1 none of whose
    proper suffixes is an interval.  Every prefix of length k < n//2 has an
    interval complement (and on that range this map is a bijection); longer
    prefixes qualify only individually, and those with a spread-out
    complement are rejected.

    >>> prefix_to_noninterval((4, 5), 5)
    (2, 3, 1)
    """
    u = tuple(u)
    if not is_minimal_prefix(u, n):
        raise NotAPrefix(f"{u} is not a minimal periodic-complement prefix for n={n}")
    complement = sorted(_complement(u, n))
    if complement[-1] - complement[0] != len(complement) - 1:
        raise RangeViolation(
            f"complement of {u} is not an interval (guaranteed only for "
            f"lengths below {n // 2})"
        )
    return reduced_form(u + (complement[0],))


def noninterval_to_prefix(b: Sequence[int], n: int) -> tuple[int, ...]:
    """Reverse of :func:`prefix_to_noninterval`.

    Letters above the final one are shifted up by n-k-1, re-opening the gap
    the reduction closed.

    >>> noninterval_to_prefix((2, 3, 1), 5)
    (4, 5)
    """
    b = tuple(b)
    k = len(b) - 1
    if not 1 <= k <= n - 2:
        raise RangeViolation(f"pattern size {k + 1} does not fit inside 1..{n}")
    if sorted(b) != list(range(1, k + 2)) or not _has_no_interval_suffix(b):
        raise NotInB(f"{b} is not an interval-suffix-free permutation")
    pivot = b[-1]
    return tuple(x if x < pivot else x + (n - k - 1) for x in b[:-1])
