"""Rigid shifts of permutation skyline diagrams and the orbits they generate.

Draw a permutation as a bar chart (column i has height u_i), cut at height h,
and slide every block above the cut by one common offset so that each block
lands on a column whose truncated height is exactly h.  The orbit of a
permutation under such moves is its strong shift class, which coincides with
its super-strong Wilf equivalence class; allowing reversals as well merges
each class with its mirror, except for the two classes that are their own
mirror.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidMove, SizeMismatch
from .pyramid import is_ss_equivalent, pyramidal_sequence
from .words import identity, reversal


@dataclass(frozen=True, order=True)
class RigidShiftMove:
    """Cut height and common offset of one rigid shift (offset never 0)."""

    height: int
    offset: int

    def __post_init__(self):
        if self.height < 1:
            raise InvalidMove(f"cut height must be >= 1, got {self.height}")
        if self.offset == 0:
            raise InvalidMove("offset 0 would be the identity move")


def apply_rigid_shift(u: Sequence[int], move: RigidShiftMove) -> tuple[int, ...]:
    """Perform one rigid shift.

    Columns strictly above the cut move by ``move.offset``; each must land on
    a column of height >= cut (so its truncated height is exactly the cut).
    Landing positions take height cut + moved excess, the one tall column
    left uncovered drops to the cut height, everything below the cut stays.

    >>> apply_rigid_shift((3, 2, 4, 1, 5), RigidShiftMove(3, -2))
    (4, 2, 5, 1, 3)
    """
    n = len(u)
    h = move.height
    if h > n:
        raise InvalidMove(f"cut height {h} exceeds the diagram height {n}")
    received = {}
    for i, x in enumerate(u):
        if x > h:
            t = i + move.offset
            if not 0 <= t < n:
                raise InvalidMove(f"column {i + 1} would leave the diagram")
            if u[t] < h:
                raise InvalidMove(
                    f"column {i + 1} would land on height {u[t]} < cut {h}"
                )
            received[t] = x
    result = []
    for j, x in enumerate(u):
        if j in received:
            result.append(received[j])
        elif x >= h:
            result.append(h)
        else:
            result.append(x)
    return tuple(result)


def enumerate_rigid_shifts(
    u: Sequence[int],
) -> tuple[tuple[RigidShiftMove, tuple[int, ...]], ...]:
    """All valid moves with a non-empty moved set, with their results,
    ordered by (height, offset).  Cuts at the full height move nothing and
    are omitted."""
    n = len(u)
    out = []
    for h in range(1, n):
        moved = [i for i, x in enumerate(u) if x > h]
        lo = -min(moved)
        hi = (n - 1) - max(moved)
        for offset in range(lo, hi + 1):
            if offset == 0:
                continue
            if all(u[i + offset] >= h for i in moved):
                move = RigidShiftMove(h, offset)
                out.append((move, apply_rigid_shift(u, move)))
    return tuple(out)


def _closure(seed: tuple[int, ...], with_reversals: bool) -> frozenset:
    seen = {seed}
    frontier = [seed]
    while frontier:
        x = frontier.pop()
        neighbours = [r for _, r in enumerate_rigid_shifts(x)]
        if with_reversals:
            neighbours.append(reversal(x))
        for r in neighbours:
            if r not in seen:
                seen.add(r)
                frontier.append(r)
    return frozenset(seen)


def strong_shift_class(u: Sequence[int]) -> frozenset:
    """Orbit of ``u`` under rigid shifts alone (breadth-first closure)."""
    return _closure(tuple(u), with_reversals=False)


def _mirror_invariant_pyramid(u: Sequence[int]) -> bool:
    # the two self-mirror classes: the identity's, and the one of
    # 1 2 .. (n-3) (n-1) (n-2) n whose pyramid is all ones below a top (2,)
    n = len(u)
    p = pyramidal_sequence(u).levels
    if all(set(level) == {1} for level in p):
        return True
    return p[-1] == (2,) and all(set(level) == {1} for level in p[:-1])


def shift_class(u: Sequence[int]) -> frozenset:
    """Orbit of ``u`` under rigid shifts and reversals, by the structure
    rule: the strong class alone when it is mirror-invariant, otherwise its
    union with the strong class of the reversal."""
    u = tuple(u)
    n = len(u)
    if n == 1:
        return frozenset({u})
    if n == 2:
        return frozenset({(1, 2), (2, 1)})
    own = strong_shift_class(u)
    if _mirror_invariant_pyramid(u):
        return own
    return own | strong_shift_class(reversal(u))


def is_shift_equivalent(u: Sequence[int], v: Sequence[int]) -> bool:
    """True when some chain of rigid shifts and reversals links u to v."""
    if len(u) != len(v):
        raise SizeMismatch(f"sizes differ: {len(u)} vs {len(v)}")
    return tuple(v) in shift_class(u)


def is_strong_shift_equivalent(u: Sequence[int], v: Sequence[int]) -> bool:
    """True when some chain of rigid shifts alone links u to v."""
    if len(u) != len(v):
        raise SizeMismatch(f"sizes differ: {len(u)} vs {len(v)}")
    return tuple(v) in strong_shift_class(u)


def find_witness(
    u: Sequence[int], v: Sequence[int], with_reversals: bool
) -> list[RigidShiftMove | str] | None:
    """Breadth-first move sequence turning u into v, or None.

    Reversal steps appear as the string ``"reversal"``.
    """
    if len(u) != len(v):
        raise SizeMismatch(f"sizes differ: {len(u)} vs {len(v)}")
    u, v = tuple(u), tuple(v)
    if u == v:
        return []
    parents: dict[tuple[int, ...], tuple] = {u: None}
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            steps = list(enumerate_rigid_shifts(x))
            if with_reversals:
                steps.append(("reversal", reversal(x)))
            for move, r in steps:
                if r in parents:
                    continue
                parents[r] = (x, move)
                if r == v:
                    path = []
                    node = v
                    while parents[node] is not None:
                        node, mv = parents[node]
                        path.append(mv)
                    path.reverse()
                    return path
                nxt.append(r)
        frontier = nxt
    return None


def reversal_invariant_members(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Seeds of the two mirror-invariant classes of S_n (n >= 3): the
    identity and 1 2 .. (n-3) (n-1) (n-2) n."""
    v = tuple(range(1, n - 2)) + (n - 1, n - 2, n)
    return identity(n), v
