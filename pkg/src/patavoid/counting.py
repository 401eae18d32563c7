"""
Exact counting and enumeration of pattern-avoiding permutations.

The workhorse is an insertion tree: the nodes at depth n are exactly the
length-n avoiders, and the children of pi are the copies of pi with the new
maximum n+1 inserted into each of its n+1 gaps, keeping a child iff it still
avoids the pattern set. The pruning is sound because deleting the maximum of
an avoider yields an avoider, so every avoider is reached from its parent.
The payoff is that the work is proportional to the number of avoiders, not
to n!.

Checking a child only requires looking for pattern occurrences that use the
newly inserted maximum (anything else would already occur in the parent).
An occurrence of sigma using the new maximum at gap p is the same thing as
an embedding, in the parent, of sigma with its maximum deleted, positioned
so that gap p splits the embedding exactly at the deleted maximum. Both
engines below exploit this:

- engine="vector" processes whole tree levels as numpy arrays, testing all
  candidate embeddings of each reduced pattern with one gather and one
  matrix product per pattern. This is the default; it is exact and is what
  makes full surveys practical.
- engine="tree" is a direct per-permutation implementation, kept deliberately
  simple, with an optional ``debug_full_check`` that re-tests children
  against the whole pattern set instead of only the new maximum.

``count_avoiders_naive`` filters all n! permutations and exists purely as an
independent oracle for the engines above.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .perms import PatternSet, Perm, all_perms, avoids, pattern_set

DEFAULT_NODE_BUDGET = 10**8
NODE_BUDGET_ENV_VAR = "PATAVOID_NODE_BUDGET"


class BudgetExceededError(RuntimeError):
    """A configured resource budget (tree nodes, subset count) ran out."""


def resolve_node_budget(node_budget: int | None) -> int:
    """Explicit argument, else the PATAVOID_NODE_BUDGET env var, else 10**8."""
    if node_budget is not None:
        return node_budget
    return int(os.environ.get(NODE_BUDGET_ENV_VAR, DEFAULT_NODE_BUDGET))


@dataclass(frozen=True)
class CountSequence:
    """
    Counts indexed by length n = 0..max_n, with the pattern set they count
    (None for sequences that do not come from avoidance counting). Behaves
    as a read-only sequence of ints.
    """

    counts: tuple[int, ...]
    patterns: PatternSet | None = None

    @property
    def max_n(self) -> int:
        return len(self.counts) - 1

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, n):
        return self.counts[n]

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)


# ---------------------------------------------------------------------------
# Shared preprocessing
# ---------------------------------------------------------------------------

def _prepare(patterns: Iterable[Sequence[int]]) -> tuple[PatternSet, list[tuple[Perm, int, Perm]]]:
    """
    Normalize the pattern set and precompute, for each pattern, the index of
    its maximum and the pattern with the maximum deleted (already a
    permutation of 1..l-1 since the maximum is the largest value).
    """
    sigma = pattern_set(patterns)
    prepped = []
    for s in sigma:
        if len(s) == 0:
            continue  # handled by callers: nothing avoids the empty pattern
        m_idx = s.index(len(s))
        reduced = s[:m_idx] + s[m_idx + 1:]
        prepped.append((s, m_idx, reduced))
    return sigma, prepped


def _gap_range(positions: Sequence[int], m_idx: int, n: int) -> tuple[int, int]:
    """
    Given an embedding of a reduced pattern at ``positions`` in a length-n
    parent, the inclusive range of gaps p whose insertion completes it to an
    occurrence of the full pattern: elements before the deleted maximum must
    land left of p, the rest right of it.
    """
    lo = positions[m_idx - 1] + 1 if m_idx >= 1 else 0
    hi = positions[m_idx] if m_idx < len(positions) else n
    return lo, hi


# ---------------------------------------------------------------------------
# Pure-python tree engine
# ---------------------------------------------------------------------------

def _occurrence_gaps(parent: Perm, reduced: Perm, m_idx: int) -> Iterator[tuple[int, int]]:
    """
    Yield the gap ranges of every embedding of ``reduced`` in ``parent``
    (backtracking with order-isomorphism pruning, same idea as contains()).
    """
    k = len(reduced)
    n = len(parent)
    if k == 0:
        yield _gap_range((), m_idx, n)
        return
    if k > n:
        return
    chosen_pos: list[int] = []
    chosen_val: list[int] = []

    def go(depth: int, start: int) -> Iterator[tuple[int, int]]:
        if depth == k:
            yield _gap_range(chosen_pos, m_idx, n)
            return
        r_d = reduced[depth]
        for pos in range(start, n - (k - depth) + 1):
            v = parent[pos]
            for t, w in enumerate(chosen_val):
                if (w < v) != (reduced[t] < r_d):
                    break
            else:
                chosen_pos.append(pos)
                chosen_val.append(v)
                yield from go(depth + 1, pos + 1)
                chosen_pos.pop()
                chosen_val.pop()

    yield from go(0, 0)


def _bad_gaps(parent: Perm, prepped: list[tuple[Perm, int, Perm]]) -> set[int]:
    """Gaps of ``parent`` where inserting the new maximum creates an occurrence."""
    n = len(parent)
    bad: set[int] = set()
    for _sigma, m_idx, reduced in prepped:
        if len(reduced) > n:
            continue
        for lo, hi in _occurrence_gaps(parent, reduced, m_idx):
            bad.update(range(lo, hi + 1))
            if len(bad) == n + 1:
                return bad
    return bad


def _grow_tree(
    patterns: PatternSet,
    prepped: list[tuple[Perm, int, Perm]],
    max_n: int,
    budget: int,
    debug_full_check: bool,
) -> Iterator[list[Perm]]:
    """Yield the avoider levels 0..max_n in order, as lists of tuples."""
    level: list[Perm] = [()] if avoids((), patterns) else []
    nodes = len(level)
    yield level
    for n in range(max_n):
        new_val = n + 1
        nxt: list[Perm] = []
        for parent in level:
            if debug_full_check:
                keep = [
                    p
                    for p in range(n + 1)
                    if avoids(parent[:p] + (new_val,) + parent[p:], patterns)
                ]
            else:
                bad = _bad_gaps(parent, prepped)
                keep = [p for p in range(n + 1) if p not in bad]
            for p in keep:
                nxt.append(parent[:p] + (new_val,) + parent[p:])
        nodes += len(nxt)
        if nodes > budget:
            raise BudgetExceededError(
                f"insertion tree exceeded node budget {budget} at length {n + 1}"
            )
        level = nxt
        yield level


# ---------------------------------------------------------------------------
# Vectorized tree engine
# ---------------------------------------------------------------------------

_DTYPE = np.int16
_CHUNK_CELLS = 4_000_000  # cap on gather size (rows * combos * pattern length)


@lru_cache(maxsize=None)
def _combo_index(n: int, k: int) -> np.ndarray:
    """All k-subsets of range(n) as a (C, k) index array, lexicographic."""
    combos = list(itertools.combinations(range(n), k))
    return np.array(combos, dtype=np.intp).reshape(len(combos), k)


@lru_cache(maxsize=None)
def _gap_matrix(n: int, k: int, m_idx: int) -> np.ndarray:
    """(C, n+1) float32 matrix: gap p completes embedding c, per _gap_range."""
    combos = _combo_index(n, k)
    c = combos.shape[0]
    lo = np.zeros(c, dtype=np.int64)
    hi = np.full(c, n, dtype=np.int64)
    if m_idx >= 1:
        lo = combos[:, m_idx - 1] + 1
    if m_idx < k:
        hi = combos[:, m_idx]
    gaps = np.arange(n + 1)
    return ((gaps >= lo[:, None]) & (gaps <= hi[:, None])).astype(np.float32)


@lru_cache(maxsize=None)
def _value_order(reduced: Perm) -> tuple[int, ...]:
    """Positions of the reduced pattern sorted by value (for chain checks)."""
    return tuple(sorted(range(len(reduced)), key=reduced.__getitem__))


def _level_bad_gaps(level: np.ndarray, prepped: list[tuple[Perm, int, Perm]]) -> np.ndarray:
    """Boolean (rows, n+1) array of gaps killed by some pattern."""
    rows, n = level.shape
    bad = np.zeros((rows, n + 1), dtype=bool)
    for _sigma, m_idx, reduced in prepped:
        k = len(reduced)
        if k > n:
            continue
        if k == 0:
            bad[:] = True  # the pattern is a single element; every gap realizes it
            break
        combos = _combo_index(n, k)
        gaps = _gap_matrix(n, k, m_idx)
        order = _value_order(reduced)
        chunk = max(1, _CHUNK_CELLS // (combos.shape[0] * k))
        for start in range(0, rows, chunk):
            g = level[start:start + chunk][:, combos]  # (rows, C, k)
            match = np.ones(g.shape[:2], dtype=bool)
            for a, b in zip(order, order[1:]):
                match &= g[:, :, a] < g[:, :, b]
            hits = match.astype(np.float32) @ gaps
            bad[start:start + chunk] |= hits > 0.5
    return bad


def _grow_vector(
    patterns: PatternSet,
    prepped: list[tuple[Perm, int, Perm]],
    max_n: int,
    budget: int,
) -> Iterator[np.ndarray]:
    """Yield levels 0..max_n as (count, n) int arrays."""
    if not avoids((), patterns):
        for n in range(max_n + 1):
            yield np.zeros((0, n), dtype=_DTYPE)
        return
    level = np.zeros((1, 0), dtype=_DTYPE)
    nodes = 1
    yield level
    for n in range(max_n):
        if level.shape[0] == 0:
            level = np.zeros((0, n + 1), dtype=_DTYPE)
            yield level
            continue
        keep = ~_level_bad_gaps(level, prepped)
        total = int(keep.sum())
        nodes += total
        if nodes > budget:
            raise BudgetExceededError(
                f"insertion tree exceeded node budget {budget} at length {n + 1}"
            )
        children = np.empty((total, n + 1), dtype=_DTYPE)
        out = 0
        for p in range(n + 1):
            sel = keep[:, p]
            m = int(sel.sum())
            if m == 0:
                continue
            children[out:out + m, :p] = level[sel, :p]
            children[out:out + m, p] = n + 1
            children[out:out + m, p + 1:] = level[sel, p:]
            out += m
        level = children
        yield level


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------

def _levels(
    patterns: Iterable[Sequence[int]],
    max_n: int,
    engine: str,
    node_budget: int | None,
    debug_full_check: bool,
) -> tuple[PatternSet, Iterator]:
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    if engine not in ("vector", "tree"):
        raise ValueError(f"unknown engine {engine!r}; expected 'vector' or 'tree'")
    sigma, prepped = _prepare(patterns)
    budget = resolve_node_budget(node_budget)
    if any(len(s) == 0 for s in sigma):
        # the empty pattern occurs in everything, including the empty perm
        empty: Iterator = iter([[] for _ in range(max_n + 1)])
        return sigma, empty
    if engine == "vector":
        return sigma, _grow_vector(sigma, prepped, max_n, budget)
    return sigma, _grow_tree(sigma, prepped, max_n, budget, debug_full_check)


def count_avoiders(
    patterns: Iterable[Sequence[int]],
    max_n: int,
    *,
    engine: str = "vector",
    node_budget: int | None = None,
    debug_full_check: bool = False,
) -> CountSequence:
    """
    The number of permutations of each length 0..max_n avoiding every
    pattern of the set. Exact (python ints never overflow).

    >>> count_avoiders([(1, 3, 2)], 6).counts
    (1, 1, 2, 5, 14, 42, 132)
    >>> count_avoiders([(1,)], 3).counts
    (1, 0, 0, 0)
    """
    sigma, levels = _levels(patterns, max_n, engine, node_budget, debug_full_check)
    counts = tuple(len(level) for level in levels)
    return CountSequence(counts=counts, patterns=sigma)


def enumerate_avoiders(
    patterns: Iterable[Sequence[int]],
    n: int,
    *,
    engine: str = "vector",
    node_budget: int | None = None,
) -> frozenset[Perm]:
    """
    The full set of length-n avoiders. Memory is the caller's problem;
    the node budget is the safety net.

    >>> sorted(enumerate_avoiders([(1, 2)], 3))
    [(3, 2, 1)]
    """
    _sigma, levels = _levels(patterns, n, engine, node_budget, False)
    last = None
    for last in levels:
        pass
    if isinstance(last, np.ndarray):
        return frozenset(tuple(int(v) for v in row) for row in last)
    return frozenset(last)


def count_avoiders_naive(patterns: Iterable[Sequence[int]], max_n: int) -> CountSequence:
    """
    Count by filtering all n! permutations. Oracle only: max_n is capped at
    8 to keep misuse from burning hours.
    """
    if max_n > 8:
        raise ValueError(f"naive counting is capped at max_n=8, got {max_n}")
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    sigma = pattern_set(patterns)
    counts = tuple(
        sum(1 for pi in all_perms(n) if avoids(pi, sigma)) for n in range(max_n + 1)
    )
    return CountSequence(counts=counts, patterns=sigma)
