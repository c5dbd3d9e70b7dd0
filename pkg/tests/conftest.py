"""Shared test helpers: whole symmetric groups and reference computations
kept independent of the implementations they check."""
from __future__ import annotations

from itertools import permutations


def symmetric_group(n):
    """All permutations of 1..n as tuples, lexicographic order."""
    return permutations(range(1, n + 1))


def pyramid_by_suffix_alphabets(u):
    """Reference pyramid: sort each suffix of the inverse and difference it.

    This is the definition-side computation; the library computes the same
    levels from letter positions.  Returns plain level tuples.
    """
    n = len(u)
    inv = [0] * n
    for i, x in enumerate(u):
        inv[x - 1] = i + 1
    levels = []
    for i in range(1, n):
        suffix = sorted(inv[i - 1 :])
        levels.append(tuple(b - a for a, b in zip(suffix, suffix[1:])))
    return tuple(levels)


def brute_class_map(n):
    """{pyramid levels: sorted members} over all of S_n, by the reference
    computation above."""
    groups = {}
    for u in symmetric_group(n):
        groups.setdefault(pyramid_by_suffix_alphabets(u), []).append(u)
    return groups
