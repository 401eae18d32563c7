"""
Template-generated families of permutations and finite certification that a
family avoids a pattern set.

A template is a pair (order, slots): ``order`` is a permutation of length t
and ``slots`` a string of '0'/'1' of the same length. A permutation of
length n >= 2 belongs to the family of a template collection iff, for some
template, it splits into t consecutive subwords whose value ranges stack
according to ``order`` (the subword at a higher ``order`` entry sits
entirely above one at a lower entry), where a '0' slot holds exactly one
element, a '1' slot holds any number including zero, every subword is
strictly shorter than the whole, and each nonempty subword, renumbered to
1..len, belongs to the family itself. Length 0 and 1 families are fixed at
{()} and {(1,)}.

Because the value ranges stack totally, each subword occupies a consecutive
block of values, so generation is mechanical: choose a template, choose the
subword sizes, pick each subword's content from the (memoized) smaller
family, and shift each block into place.

The point of such families is the certification theorem: if the slot
strings have at most k zeros and some member of the family contains a
pattern of length l, then some member of length at most (l-1)(k+1)+1
already does. Checking the finitely many lengths up to that bound therefore
proves avoidance for every length at once; ``certify_avoidance`` does
exactly that and returns the evidence.

Generated families are memoized per (template set, length) for the life of
the process; the cache tolerates concurrent readers (worst case a value is
computed twice). ``clear_family_cache`` drops it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .counting import CountSequence
from .perms import PatternSet, Perm, contains, format_perm, parse_perm, pattern_set, perm


class Template(NamedTuple):
    order: Perm  # relative heights of the value blocks, one per slot
    slots: str  # '1' = free subword (may be empty), '0' = exactly one element

    def __str__(self) -> str:
        return format_template(self)


TemplateSet = tuple[Template, ...]


def template(order: Sequence[int], slots: str) -> Template:
    """Validate and build a template."""
    p = perm(order)
    if len(p) != len(slots) or len(p) == 0:
        raise ValueError(f"template needs matching nonempty order/slots, got {order}/{slots}")
    if set(slots) - {"0", "1"}:
        raise ValueError(f"slots must be a binary string, got {slots!r}")
    return Template(p, slots)


def _as_template(t: Template | tuple) -> Template:
    if isinstance(t, Template):
        return t
    order, slots = t
    return template(order, slots)


def template_set(templates: Iterable[Template | tuple]) -> TemplateSet:
    """Normalize to a sorted, deduplicated, nonempty tuple of templates."""
    normalized = {_as_template(t) for t in templates}
    if not normalized:
        raise ValueError("template set must be nonempty")
    return tuple(sorted(normalized))


def parse_template(text: str) -> Template:
    """
    Parse the ``order:slots`` text form.

    >>> parse_template("231:101")
    Template(order=(2, 3, 1), slots='101')
    """
    head, sep, tail = text.partition(":")
    if not sep:
        raise ValueError(f"bad template {text!r}: expected order:slots")
    return template(parse_perm(head), tail)


def parse_template_list(text: str) -> TemplateSet:
    """Comma-separated ``order:slots`` entries."""
    entries = [tok.strip() for tok in text.split(",")]
    out = []
    for i, tok in enumerate(entries):
        if not tok:
            raise ValueError(f"bad template list {text!r}: empty entry at position {i + 1}")
        try:
            out.append(parse_template(tok))
        except ValueError as e:
            raise ValueError(f"bad template list: entry {i + 1}: {e}") from None
    return template_set(out)


def format_template(t: Template) -> str:
    return f"{format_perm(t.order)}:{t.slots}"


# ---------------------------------------------------------------------------
# Generation
# ---------------------------------------------------------------------------

def _subword_sizes(n: int, slots: str) -> Iterable[tuple[int, ...]]:
    """
    All ways to split n >= 2 elements over the slots: '0' slots take exactly
    one, '1' slots take any count, and every slot stays strictly below n so
    the recursion only ever consults shorter lengths.
    """
    free = [i for i, b in enumerate(slots) if b == "1"]
    spare = n - (len(slots) - len(free))  # elements left for the free slots
    if spare < 0:
        return
    sizes = [1] * len(slots)
    if not free:
        if spare == 0:
            yield tuple(sizes)
        return

    def spread(idx: int, remaining: int):
        if idx == len(free) - 1:
            if remaining < n:
                sizes[free[idx]] = remaining
                yield tuple(sizes)
            return
        for take in range(min(remaining, n - 1) + 1):
            sizes[free[idx]] = take
            yield from spread(idx + 1, remaining - take)

    yield from spread(0, spare)


def _block_offsets(order: Perm, sizes: Sequence[int]) -> list[int]:
    """Starting value (exclusive prefix sum) of each slot's value block."""
    offsets = [0] * len(order)
    total = 0
    for slot in sorted(range(len(order)), key=order.__getitem__):
        offsets[slot] = total
        total += sizes[slot]
    return offsets


@lru_cache(maxsize=None)
def _family(templates: TemplateSet, n: int) -> frozenset[Perm]:
    if n == 0:
        return frozenset({()})
    if n == 1:
        return frozenset({(1,)})
    members: set[Perm] = set()
    for t in templates:
        for sizes in _subword_sizes(n, t.slots):
            offsets = _block_offsets(t.order, sizes)
            choices = [_family(templates, s) for s in sizes]
            for combo in itertools.product(*choices):
                word: list[int] = []
                for sub, off in zip(combo, offsets):
                    word.extend(v + off for v in sub)
                members.add(tuple(word))
    return frozenset(members)


def generate_family(templates: Iterable[Template | tuple], n: int) -> frozenset[Perm]:
    """
    The length-n members of the family generated by a template collection.

    >>> sorted(generate_family([((2, 3, 1), "101")], 3))
    [(1, 2, 3), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    tset = template_set(templates)
    for m in range(2, n):  # warm the cache iteratively; keeps recursion shallow
        _family(tset, m)
    return _family(tset, n)


def generate_single(t: Template | tuple, n: int) -> frozenset[Perm]:
    """Family of a single template; same as generate_family([t], n)."""
    return generate_family([t], n)


def clear_family_cache() -> None:
    _family.cache_clear()


# ---------------------------------------------------------------------------
# Certification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """
    Outcome of the finite avoidance check for (templates, patterns).

    verified=True means no family member up to length ``bound`` contains any
    of the patterns, which by the certification theorem extends to every
    length. Otherwise ``witness`` is the smallest offending member (smallest
    length, then lexicographic) and ``witness_pattern`` what it contains.
    """

    templates: TemplateSet
    patterns: PatternSet
    bound: int
    verified: bool
    witness: Perm | None = None
    witness_pattern: Perm | None = None

    @property
    def witness_length(self) -> int | None:
        return None if self.witness is None else len(self.witness)


def certification_bound(templates: TemplateSet, pattern_length: int) -> int:
    """(l-1)(k+1)+1 for a length-l pattern, k = most zeros in any slot string."""
    k = max(t.slots.count("0") for t in templates)
    return (pattern_length - 1) * (k + 1) + 1


def certify_avoidance(
    templates: Iterable[Template | tuple], patterns: Iterable[Sequence[int]]
) -> Certificate:
    """
    Decide whether every member of the template family, of every length,
    avoids every pattern: generate members up to the certification bound
    and test each against each pattern.

    >>> certify_avoidance([((1, 2), "11")], [(1, 2)]).verified
    False
    """
    tset = template_set(templates)
    sigma = pattern_set(patterns)
    if not sigma or any(len(s) == 0 for s in sigma):
        raise ValueError("pattern set must be nonempty, with nonempty patterns")
    bound = max(certification_bound(tset, len(s)) for s in sigma)
    for m in range(bound + 1):
        for pi in sorted(_family_at(tset, m)):
            for s in sigma:
                if contains(pi, s):
                    return Certificate(
                        templates=tset,
                        patterns=sigma,
                        bound=bound,
                        verified=False,
                        witness=pi,
                        witness_pattern=s,
                    )
    return Certificate(templates=tset, patterns=sigma, bound=bound, verified=True)


def _family_at(tset: TemplateSet, m: int) -> frozenset[Perm]:
    for i in range(2, m):
        _family(tset, i)
    return _family(tset, m)


def verify_family_avoids(
    templates: Iterable[Template | tuple],
    patterns: Iterable[Sequence[int]],
    max_length: int,
) -> tuple[bool, Perm | None]:
    """
    Brute confirmation that family members avoid the patterns for all
    lengths up to max_length, independent of any bound. Returns (ok,
    first witness or None). Used to spot-check certificates past their
    theorem bound.
    """
    tset = template_set(templates)
    sigma = pattern_set(patterns)
    for m in range(max_length + 1):
        for pi in sorted(_family_at(tset, m)):
            if not all(not contains(pi, s) for s in sigma):
                return False, pi
    return True, None


# ---------------------------------------------------------------------------
# Counting recurrences for the two stacked-block shapes shipped with the
# package demos: families whose members are determined by the positions of
# two pinned values that split the word into three independent segments.
# ---------------------------------------------------------------------------

def three_segment_counts(max_n: int, variants: int = 1) -> CountSequence:
    """
    c_0 = c_1 = 1 and, for n > 1,

        c_n = variants * sum_{i=1}^{n-1} sum_{j=i+1}^{n} c_{i-1} c_{j-i-1} c_{n-j}

    counting words split by a pinned pair at positions i < j into three
    segments filled independently from the same family, with ``variants``
    height assignments of the pinned pair per split.

    >>> three_segment_counts(4).counts
    (1, 1, 1, 3, 6)
    >>> three_segment_counts(3, variants=2).counts
    (1, 1, 2, 6)
    """
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    c = [1, 1]
    for n in range(2, max_n + 1):
        total = 0
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                total += c[i - 1] * c[j - i - 1] * c[n - j]
        c.append(variants * total)
    return CountSequence(counts=tuple(c[: max_n + 1]))
