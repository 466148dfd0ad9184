"""Exact domination predicates, numbers, and minimum-set counts.

Counting is exhaustive subset enumeration over bit masks, in lexicographic
k-combination order, with one pruning rule: a prefix is abandoned as soon as
even the union of every remaining neighborhood cannot cover the vertex set.
Counts are therefore exact, deterministic, and independent of enumeration
chunking.  ``count_sets_naive`` re-implements the same contract with plain
vertex lists and set arithmetic as an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from .errors import SizeLimitError, UndefinedTotalDominationError
from .graphs import Graph, VertexSet

Mode = Literal["dominating", "total"]

COUNT_VERTEX_CAP = 64

DEFAULT_WITNESS_CAP = 1000


def _require_mode(mode: str) -> None:
    if mode not in ("dominating", "total"):
        raise ValueError(f"mode must be 'dominating' or 'total', got {mode!r}")


def _require_countable(g: Graph) -> None:
    if g.n > COUNT_VERTEX_CAP:
        raise SizeLimitError(
            f"counting supports n <= {COUNT_VERTEX_CAP}, got n={g.n}"
        )


def _cover_rows(g: Graph, mode: str) -> list[int]:
    """Per-vertex coverage masks: closed neighborhoods for 'dominating',
    open neighborhoods for 'total'."""
    if mode == "dominating":
        return [row | 1 << v for v, row in enumerate(g.rows)]
    return list(g.rows)


def is_dominating(g: Graph, s: VertexSet) -> bool:
    """True iff every vertex outside s has a neighbor in s (members count
    as covered by themselves)."""
    if s.n != g.n:
        raise ValueError(f"vertex set is over n={s.n}, graph has n={g.n}")
    covered = 0
    mask = s.mask
    while mask:
        v = (mask & -mask).bit_length() - 1
        covered |= g.rows[v] | 1 << v
        mask &= mask - 1
    return covered == (1 << g.n) - 1


def is_total_dominating(g: Graph, s: VertexSet) -> bool:
    """True iff every vertex of g (members of s included) has a neighbor in s."""
    if s.n != g.n:
        raise ValueError(f"vertex set is over n={s.n}, graph has n={g.n}")
    covered = 0
    mask = s.mask
    while mask:
        v = (mask & -mask).bit_length() - 1
        covered |= g.rows[v]
        mask &= mask - 1
    return covered == (1 << g.n) - 1


def _exists_k_cover(rows: list[int], full: int, k: int) -> bool:
    """Does some k-subset of vertices have coverage union == full?"""
    n = len(rows)
    if k < 0:
        return False
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | rows[i]

    def rec(start: int, slots: int, acc: int) -> bool:
        if acc == full:
            return True
        if slots == 0:
            return False
        for j in range(start, n - slots + 1):
            # suffix[j] shrinks with j, so the first failure ends the loop
            if acc | suffix[j] != full:
                return False
            if rec(j + 1, slots - 1, acc | rows[j]):
                return True
        return False

    return rec(0, k, 0)


def _count_k_covers(
    rows: list[int], full: int, k: int, witness_cap: int = 0
) -> tuple[int, list[int]]:
    """Count k-subsets with coverage union == full; optionally collect the
    first ``witness_cap`` of them (lexicographic order) as vertex masks."""
    n = len(rows)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | rows[i]
    total = 0
    witnesses: list[int] = []

    def emit_completions(chosen: int, start: int, slots: int) -> None:
        room = witness_cap - len(witnesses)
        if room <= 0:
            return
        for rest in combinations(range(start, n), slots):
            mask = chosen
            for v in rest:
                mask |= 1 << v
            witnesses.append(mask)
            room -= 1
            if room == 0:
                return

    def rec(start: int, slots: int, acc: int, chosen: int) -> None:
        nonlocal total
        if acc == full:
            total += math.comb(n - start, slots)
            if witness_cap:
                emit_completions(chosen, start, slots)
            return
        if slots == 0:
            return
        for j in range(start, n - slots + 1):
            if acc | suffix[j] != full:
                return
            rec(j + 1, slots - 1, acc | rows[j], chosen | 1 << j)

    rec(0, k, 0, 0)
    return total, witnesses


def domination_number(g: Graph) -> int:
    """Smallest size of a dominating set, by iterative deepening k = 1, 2, ..."""
    if g.n < 1:
        raise ValueError("domination number is undefined for the empty graph")
    full = (1 << g.n) - 1
    rows = _cover_rows(g, "dominating")
    for k in range(1, g.n + 1):
        if _exists_k_cover(rows, full, k):
            return k
    raise AssertionError("unreachable: the whole vertex set always dominates")


def total_domination_number(g: Graph) -> int:
    """Smallest size of a total dominating set; requires no isolated vertex."""
    if g.n < 1:
        raise ValueError("total domination number is undefined for the empty graph")
    if g.has_isolated_vertex():
        raise UndefinedTotalDominationError(
            "total domination is undefined: graph has an isolated vertex"
        )
    full = (1 << g.n) - 1
    rows = _cover_rows(g, "total")
    for k in range(1, g.n + 1):
        if _exists_k_cover(rows, full, k):
            return k
    raise AssertionError("unreachable: V totally dominates when no vertex is isolated")


def count_sets(g: Graph, k: int, mode: Mode) -> int:
    """Exact number of k-subsets that are (total) dominating sets.

    Requires n <= 64.  The count is independent of vertex labeling and of
    any enumeration chunking.
    """
    count, _ = count_sets_with_witnesses(g, k, mode, 0)
    return count


def count_sets_with_witnesses(
    g: Graph, k: int, mode: Mode, witness_cap: int
) -> tuple[int, tuple[VertexSet, ...]]:
    """Like :func:`count_sets`, also returning up to ``witness_cap`` of the
    qualifying sets in lexicographic order."""
    _require_mode(mode)
    _require_countable(g)
    if k < 0:
        raise ValueError(f"subset size must be nonnegative, got {k}")
    if witness_cap < 0:
        raise ValueError("witness_cap must be nonnegative")
    if k > g.n:
        return 0, ()
    full = (1 << g.n) - 1
    count, masks = _count_k_covers(_cover_rows(g, mode), full, k, witness_cap)
    return count, tuple(VertexSet(g.n, mask) for mask in masks)


@dataclass(frozen=True)
class DominationReport:
    """Minimum (total) dominating set size, exact count, capped witnesses."""

    mode: Mode
    gamma: int
    count: int
    witnesses: tuple[VertexSet, ...]


def count_minimum(
    g: Graph, mode: Mode, witness_cap: int = DEFAULT_WITNESS_CAP
) -> DominationReport:
    """Minimum set size for ``mode`` plus the exact number of minimum sets.

    Collects at most ``witness_cap`` witnesses in lexicographic order; pass 0
    to skip collection.
    """
    _require_mode(mode)
    _require_countable(g)
    if witness_cap < 0:
        raise ValueError("witness_cap must be nonnegative")
    if mode == "total":
        gamma = total_domination_number(g)
    else:
        gamma = domination_number(g)
    count, witnesses = count_sets_with_witnesses(g, gamma, mode, witness_cap)
    return DominationReport(mode=mode, gamma=gamma, count=count, witnesses=witnesses)


def count_sets_naive(g: Graph, k: int, mode: Mode) -> int:
    """Reference oracle for :func:`count_sets`.

    Works from explicit neighbor lists and Python sets with no bit packing,
    no pruning, and no shared code with the fast path.
    """
    _require_mode(mode)
    _require_countable(g)
    if k < 0:
        raise ValueError(f"subset size must be nonnegative, got {k}")
    if k > g.n:
        return 0
    neighbors = [set(g.neighbors(v)) for v in range(g.n)]
    everything = set(range(g.n))
    count = 0
    for subset in combinations(range(g.n), k):
        covered = set()
        for v in subset:
            covered |= neighbors[v]
            if mode == "dominating":
                covered.add(v)
        if covered == everything:
            count += 1
    return count
