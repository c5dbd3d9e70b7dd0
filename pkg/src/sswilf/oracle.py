"""Brute-force ground truth.

Everything here recomputes, by exhaustive enumeration, quantities that the
rest of the package obtains from recurrences, bijections, or structure rules:
the partition of S_n by pyramid, the minimal-prefix sets, and the orbit
partitions under rigid shifts.  The oracle side deliberately avoids the
recursive shortcuts so that agreement is meaningful.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations as _permutations
from math import factorial

from . import kernel
from .errors import InternalError, LimitExceeded, OutOfRange
from .shift import enumerate_rigid_shifts
from .words import reversal

DEFAULT_SS_LIMIT = 9
DEFAULT_SHIFT_LIMIT = 7
_LIMIT_ENV = "SSWILF_ORACLE_LIMIT"


def _resolve_limit(limit: int | None, default: int) -> int:
    if limit is not None:
        return limit
    env = os.environ.get(_LIMIT_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise OutOfRange(f"{_LIMIT_ENV}={env!r} is not an integer") from None
    return default


@dataclass(frozen=True)
class ClassPartitionReport:
    """Partition of S_n: class count, histogram of log2 sizes, and per class
    the grouping key, size, and lexicographically least member."""

    n: int
    class_count: int
    size_histogram: dict[int, int]
    classes: tuple[tuple[bytes, int, tuple[int, ...]], ...]

    def to_json(self, include_classes: bool = False) -> dict:
        out: dict = {
            "n": self.n,
            "class_count": self.class_count,
            "histogram": {str(j): c for j, c in sorted(self.size_histogram.items())},
        }
        if include_classes:
            out["classes"] = [
                {"key": key.hex(), "size": size, "representative": list(rep)}
                for key, size, rep in self.classes
            ]
        return out


def _finish_report(n: int, items) -> ClassPartitionReport:
    """items: iterable of (key, (size, packed least member)) per class."""
    histogram: dict[int, int] = {}
    classes = []
    total = 0
    for key, (size, code) in items:
        j = size.bit_length() - 1
        if 1 << j != size:
            raise InternalError(f"class size {size} is not a power of two")
        histogram[j] = histogram.get(j, 0) + 1
        classes.append((key, size, kernel.unpack_code(code, n)))
        total += size
    if total != factorial(n):
        raise InternalError(f"class sizes sum to {total}, expected {factorial(n)}")
    classes.sort(key=lambda item: item[2])
    return ClassPartitionReport(n, len(classes), histogram, tuple(classes))


def _merge(into: dict[bytes, list[int]], part: dict[bytes, list[int]]) -> None:
    for key, (count, code) in part.items():
        entry = into.get(key)
        if entry is None:
            into[key] = [count, code]
        else:
            entry[0] += count
            if code < entry[1]:
                entry[1] = code


def bruteforce_ss_partition(
    n: int, workers: int = 1, limit: int | None = None
) -> ClassPartitionReport:
    """Group all of S_n by pyramid key.

    With ``workers`` > 1 the lexicographic order is split into contiguous
    blocks swept in separate processes; per-block tallies merge by summing
    counts and keeping the least representative.
    """
    if n < 2:
        raise OutOfRange(f"defined for n >= 2, got {n}")
    if n > _resolve_limit(limit, DEFAULT_SS_LIMIT):
        raise LimitExceeded(f"n={n} exceeds the sweep limit; pass a higher limit")
    total = factorial(n)
    if workers <= 1 or total < 10_000:
        groups = kernel.sweep_block(n, 0, total)
        return _finish_report(n, groups.items())
    bounds = [total * b // workers for b in range(workers + 1)]
    groups: dict[bytes, list[int]] = {}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(kernel.sweep_block, n, lo, hi - lo)
            for lo, hi in zip(bounds, bounds[1:])
            if hi > lo
        ]
        for future in futures:
            _merge(groups, future.result())
    return _finish_report(n, groups.items())


def _periodic_complement_table(n: int) -> bytearray:
    """table[mask of used letters] = 1 iff the unused letters form an
    arithmetic progression (needs at least two of them)."""
    full = (1 << n) - 1
    table = bytearray(1 << n)
    for mask in range(1 << n):
        comp = full & ~mask
        xs = [k + 1 for k in range(n) if comp >> k & 1]
        if len(xs) >= 2:
            first = xs[1] - xs[0]
            table[mask] = int(all(b - a == first for a, b in zip(xs, xs[1:])))
    return table


def bruteforce_minimal_prefixes(
    i: int, n: int, limit: int | None = None
) -> tuple[tuple[int, ...], ...]:
    """Filter every length-i distinct-letter word over 1..n by the defining
    conditions (periodic complement, no shorter prefix with one), without the
    recursive construction."""
    if n < 3 or not 1 <= i <= n - 2:
        raise OutOfRange(f"need n >= 3 and 1 <= i <= n-2, got i={i}, n={n}")
    if n > _resolve_limit(limit, DEFAULT_SS_LIMIT):
        raise LimitExceeded(f"n={n} exceeds the sweep limit; pass a higher limit")
    table = _periodic_complement_table(n)
    out = []
    last = i - 1
    for w in _permutations(range(1, n + 1), i):
        mask = 0
        for j, x in enumerate(w):
            mask |= 1 << (x - 1)
            if table[mask]:
                if j == last:
                    out.append(w)
                break
        # words whose complement never turns periodic are dropped by the loop
    return tuple(out)


def bruteforce_shift_partition(
    n: int, with_reversals: bool, limit: int | None = None
) -> ClassPartitionReport:
    """Partition S_n into orbit closures under rigid shifts (and reversals
    when flagged) by plain breadth-first search, no pyramid involved."""
    if n < 2:
        raise OutOfRange(f"defined for n >= 2, got {n}")
    if n > _resolve_limit(limit, DEFAULT_SHIFT_LIMIT):
        raise LimitExceeded(f"n={n} exceeds the BFS limit; pass a higher limit")
    seen: set[tuple[int, ...]] = set()
    entries = []
    for start in _permutations(range(1, n + 1)):
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            neighbours = [r for _, r in enumerate_rigid_shifts(x)]
            if with_reversals:
                neighbours.append(reversal(x))
            for r in neighbours:
                if r not in orbit:
                    orbit.add(r)
                    frontier.append(r)
        seen |= orbit
        # `start` is lexicographically least: S_n is walked in ascending order;
        # the pyramid key only labels the orbit, it plays no part in grouping
        entries.append((kernel.pyramid_key(start), (len(orbit), kernel.pack_code(start))))
    return _finish_report(n, entries)


# -- agreement checks driven by the CLI --------------------------------------

def check_ss(n_max: int, workers: int = 1, limit: int | None = None) -> list[str]:
    """Compare swept class counts and histograms against the recurrences."""
    from .counting import class_count, class_count_by_exponent

    mismatches = []
    for n in range(2, n_max + 1):
        report = bruteforce_ss_partition(n, workers=workers, limit=limit)
        expected = class_count(n)
        if report.class_count != expected:
            mismatches.append(
                f"n={n}: swept {report.class_count} classes, recurrence says {expected}"
            )
        for j in range(1, n):
            got = report.size_histogram.get(j, 0)
            want = class_count_by_exponent(j, n)
            if got != want:
                mismatches.append(
                    f"n={n}: {got} classes of size 2^{j}, recurrence says {want}"
                )
    return mismatches


def check_prefixes(n_max: int, limit: int | None = None) -> list[str]:
    """Compare brute-forced minimal prefix sets against the recursive
    construction and the counting recurrence."""
    from .counting import minimal_prefix_count
    from .trapezoid import minimal_prefixes

    mismatches = []
    for n in range(3, n_max + 1):
        for i in range(1, n - 1):
            brute = set(bruteforce_minimal_prefixes(i, n, limit=limit))
            built = set(minimal_prefixes(i, n))
            if brute != built:
                extra = sorted(built - brute)[:3]
                missing = sorted(brute - built)[:3]
                mismatches.append(
                    f"(i={i}, n={n}): sets differ; built-only {extra}, "
                    f"brute-only {missing}"
                )
            want = minimal_prefix_count(i, n)
            if len(brute) != want:
                mismatches.append(
                    f"(i={i}, n={n}): {len(brute)} prefixes, recurrence says {want}"
                )
    return mismatches


def check_shift(n_max: int, limit: int | None = None) -> list[str]:
    """Compare BFS orbit partitions against the class recurrences: without
    reversals against the class count, with reversals against the shift
    class count."""
    from .counting import class_count, shift_class_count

    mismatches = []
    for n in range(2, n_max + 1):
        plain = bruteforce_shift_partition(n, with_reversals=False, limit=limit)
        if plain.class_count != class_count(n):
            mismatches.append(
                f"n={n}: {plain.class_count} rigid-shift orbits, "
                f"class recurrence says {class_count(n)}"
            )
        mirrored = bruteforce_shift_partition(n, with_reversals=True, limit=limit)
        if mirrored.class_count != shift_class_count(n):
            mismatches.append(
                f"n={n}: {mirrored.class_count} shift orbits, "
                f"formula says {shift_class_count(n)}"
            )
    return mismatches
