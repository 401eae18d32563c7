"""
Survey campaigns over pattern sets: symmetry-class enumeration, Wilf
fingerprint clustering, polynomial scans, and randomized classification
experiments.

A survey works on one record per symmetry class. The canonical
representative is the least symmetry image of the set; counting one
representative covers the whole class because the eight symmetries preserve
containment and hence avoidance counts. Fingerprints (the counts at lengths
1..N) cluster classes that are indistinguishable up to the horizon: equal
fingerprints are necessary but not sufficient for Wilf equivalence, so the
number of distinct fingerprints is a lower bound on the number of Wilf
classes, and is always reported together with its horizon.

Long surveys stream results to a JSON Lines file as they complete, one
record per line, so an interrupted survey resumes by skipping the classes
already on disk.
"""
from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import IO, Iterable, Iterator

from .counting import BudgetExceededError, count_avoiders, resolve_node_budget
from .perms import (
    SYMMETRIES,
    PatternSet,
    all_perms,
    apply_symmetry,
    format_perm,
    parse_perm,
    pattern_set,
    pattern_set_key,
)
from .seqanalysis import ClassificationReport, classify, detect_eventual_polynomial, detect_fib_like

DEFAULT_SUBSET_BUDGET = 10**7


@dataclass
class SurveyRecord:
    """One symmetry class: canonical pattern set, orbit size, and results."""

    patterns: PatternSet
    orbit_size: int
    counts: tuple[int, ...] | None = None  # avoidance counts at lengths 1..N
    report: ClassificationReport | None = None
    error: str | None = None

    def to_json_dict(self) -> dict:
        out: dict = {
            "class": [format_perm(p) for p in self.patterns],
            "orbit": self.orbit_size,
        }
        if self.counts is not None:
            out["counts"] = list(self.counts)
        if self.report is not None:
            out["verdict"] = self.report.to_json_dict()
        if self.error is not None:
            out["error"] = self.error
        return out


def enumerate_symmetry_classes(
    num_patterns: int,
    pattern_length: int,
    *,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
) -> list[SurveyRecord]:
    """
    Group all num_patterns-subsets of the length-pattern_length permutations
    into symmetry classes. Returns one record stub per class (counts not yet
    filled in), sorted by canonical set; orbit sizes add up to the total
    number of subsets.

    >>> [r.orbit_size for r in enumerate_symmetry_classes(1, 3)]
    [2, 4]
    """
    universe = sorted(all_perms(pattern_length))
    total = math.comb(len(universe), num_patterns)
    if total > subset_budget:
        raise BudgetExceededError(
            f"{total} subsets exceed the survey budget {subset_budget}"
        )
    # canonicalizing via precomputed per-pattern images: the image of a set
    # is the sorted tuple of its patterns' images (all the same length here,
    # so plain tuple order is the length-lex order)
    images = {p: tuple(apply_symmetry(g, p) for g in SYMMETRIES) for p in universe}
    orbit_counts: dict[PatternSet, int] = {}
    for combo in itertools.combinations(universe, num_patterns):
        canon = min(
            tuple(sorted(images[p][gi] for p in combo)) for gi in range(len(SYMMETRIES))
        )
        orbit_counts[canon] = orbit_counts.get(canon, 0) + 1
    return [
        SurveyRecord(patterns=canon, orbit_size=orbit_counts[canon])
        for canon in sorted(orbit_counts, key=pattern_set_key)
    ]


# ---------------------------------------------------------------------------
# Counting the records (parallelizable map)
# ---------------------------------------------------------------------------

def _count_one(args: tuple[PatternSet, int, int]) -> tuple[PatternSet, tuple[int, ...] | None, str | None]:
    patterns, max_n, budget = args
    try:
        seq = count_avoiders(patterns, max_n, node_budget=budget)
        return patterns, tuple(seq.counts[1:]), None
    except BudgetExceededError as e:
        return patterns, None, str(e)


def _map_counts(
    tasks: list[tuple[PatternSet, int, int]], workers: int
) -> Iterator[tuple[PatternSet, tuple[int, ...] | None, str | None]]:
    if workers <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield _count_one(task)
        return
    ctx = get_context("fork")
    with ctx.Pool(workers) as pool:
        # ordered imap keeps the output stream deterministic for any K
        yield from pool.imap(_count_one, tasks, chunksize=8)


def fill_counts(
    records: list[SurveyRecord],
    max_n: int,
    *,
    workers: int = 1,
    node_budget: int | None = None,
    classify_records: bool = True,
    stream: IO[str] | None = None,
) -> None:
    """
    Compute avoidance counts (lengths 1..max_n) for every record in place,
    classify them, and optionally append each finished record to a JSONL
    stream. Budget failures are recorded on the record, not raised.
    """
    budget = resolve_node_budget(node_budget)
    todo = [r for r in records if r.counts is None and r.error is None]
    tasks = [(r.patterns, max_n, budget) for r in todo]
    by_patterns = {r.patterns: r for r in todo}
    for patterns, counts, error in _map_counts(tasks, workers):
        record = by_patterns[patterns]
        record.counts = counts
        record.error = error
        if counts is not None and classify_records:
            record.report = classify(list(counts))
        if stream is not None:
            stream.write(json.dumps(record.to_json_dict()) + "\n")
            stream.flush()


# ---------------------------------------------------------------------------
# Wilf fingerprint clustering
# ---------------------------------------------------------------------------

@dataclass
class WilfClustering:
    """Fingerprint clusters at a fixed horizon."""

    horizon: int
    clusters: dict[tuple[int, ...], list[SurveyRecord]]
    failed: list[SurveyRecord] = field(default_factory=list)

    @property
    def num_distinct(self) -> int:
        return len(self.clusters)


def wilf_survey(
    records: list[SurveyRecord],
    max_n: int,
    *,
    workers: int = 1,
    node_budget: int | None = None,
    stream: IO[str] | None = None,
) -> WilfClustering:
    """
    Count every record up to max_n and group by the fingerprint
    (counts at lengths 1..max_n). Records that blow the node budget are
    collected under ``failed`` instead of aborting the survey.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    fill_counts(records, max_n, workers=workers, node_budget=node_budget, stream=stream)
    clusters: dict[tuple[int, ...], list[SurveyRecord]] = {}
    failed = []
    for record in records:
        if record.counts is None:
            failed.append(record)
            continue
        fingerprint = tuple(record.counts[:max_n])
        clusters.setdefault(fingerprint, []).append(record)
    return WilfClustering(horizon=max_n, clusters=clusters, failed=failed)


def polynomial_scan(
    records: Iterable[SurveyRecord], max_n: int, max_degree: int
) -> list[tuple[PatternSet, int]]:
    """
    The records whose counting sequence matches a polynomial over the whole
    stored range (threshold 0: constant d-th differences from the first
    counted length on, witnessed by at least d + 3 terms) with degree
    between 1 and max_degree. Later-threshold fits are deliberately not
    counted here; they are visible through each record's classify() report.
    Sorted by degree, then canonical set.
    """
    if max_n < max_degree + 3:
        raise ValueError("need max_n >= max_degree + 3 for a confirmed fit")
    found = []
    for record in records:
        if record.counts is None:
            continue
        counts = list(record.counts[:max_n])
        fit = detect_eventual_polynomial(counts, max_degree)
        if fit is not None and fit.threshold == 0 and 1 <= fit.degree <= max_degree:
            found.append((record.patterns, fit.degree))
    found.sort(key=lambda item: (item[1], pattern_set_key(item[0])))
    return found


# ---------------------------------------------------------------------------
# Randomized classification experiments
# ---------------------------------------------------------------------------

BUCKETS = ("zero", "constant", "degree_1", "degree_2", "degree_3", "higher_poly", "non_polynomial")


def bucket_of(report: ClassificationReport) -> str:
    if report.verdict == "zero":
        return "zero"
    if report.verdict == "polynomial":
        if report.degree == 0:
            return "constant"
        if report.degree in (1, 2, 3):
            return f"degree_{report.degree}"
        return "higher_poly"
    return "non_polynomial"


@dataclass
class TrialResult:
    index: int
    patterns: PatternSet
    counts: tuple[int, ...]  # full sequence, lengths 0..max_n
    report: ClassificationReport

    @property
    def bucket(self) -> str:
        return bucket_of(self.report)


@dataclass
class ExperimentResult:
    num_patterns: int
    max_n: int
    trials: int
    seed: int
    bucket_counts: dict[str, int]
    # non-polynomial trials whose tail obeys the drift recurrence for at
    # least six consecutive steps up to the horizon (the by-eye standard);
    # fib_like_strict applies the classifier's seven-step standard instead
    fib_like_nonpoly: int
    fib_like_strict: int
    results: list[TrialResult]

    @property
    def fractions(self) -> dict[str, float]:
        return {k: v / self.trials for k, v in self.bucket_counts.items()}

    def to_json_dict(self) -> dict:
        nonpoly = self.bucket_counts["non_polynomial"]
        return {
            "num_patterns": self.num_patterns,
            "max_n": self.max_n,
            "trials": self.trials,
            "seed": self.seed,
            "buckets": dict(self.bucket_counts),
            "fractions": {k: round(v, 6) for k, v in self.fractions.items()},
            "non_polynomial": {
                "total": nonpoly,
                "fib_like": self.fib_like_nonpoly,
                "fib_like_strict": self.fib_like_strict,
            },
        }


def sample_pattern_subset(seed: int, trial: int, num_patterns: int, pattern_length: int = 4) -> PatternSet:
    """
    The trial's uniform random pattern subset. Each trial owns a generator
    seeded seed * 2**32 + trial (so trials are independent of execution
    order) and draws by partial Fisher-Yates over the sorted pattern list
    using randrange only, which is stable across python versions.
    """
    rng = random.Random(seed * (2**32) + trial)
    pool = sorted(all_perms(pattern_length))
    if num_patterns > len(pool):
        raise ValueError(f"cannot draw {num_patterns} patterns from {len(pool)}")
    for i in range(num_patterns):
        j = rng.randrange(i, len(pool))
        pool[i], pool[j] = pool[j], pool[i]
    return pattern_set(pool[:num_patterns])


def _run_trial(args: tuple[int, int, int, int, int, int]) -> TrialResult:
    seed, trial, num_patterns, pattern_length, max_n, budget = args
    patterns = sample_pattern_subset(seed, trial, num_patterns, pattern_length)
    seq = count_avoiders(patterns, max_n, node_budget=budget)
    report = classify(list(seq.counts))
    return TrialResult(index=trial, patterns=patterns, counts=seq.counts, report=report)


def random_experiment(
    num_patterns: int,
    max_n: int,
    trials: int,
    seed: int,
    *,
    pattern_length: int = 4,
    workers: int = 1,
    node_budget: int | None = None,
) -> ExperimentResult:
    """
    Draw ``trials`` random pattern subsets (with replacement across trials),
    count avoiders to max_n, classify each full counting sequence, and
    tabulate the verdict buckets. Deterministic given the seed, for any
    worker count.

    The drift-recurrence tally over the non-polynomial trials accepts a
    tail of six consecutive recurrence steps (two to solve for the drift,
    four confirming). The classifier proper wants five confirmations; on a
    13-step horizon that misses sequences that only settle seven steps
    before the end, which the original by-eye survey counted. Both tallies
    are reported.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    budget = resolve_node_budget(node_budget)
    tasks = [(seed, t, num_patterns, pattern_length, max_n, budget) for t in range(trials)]
    if workers <= 1:
        results = [_run_trial(task) for task in tasks]
    else:
        ctx = get_context("fork")
        with ctx.Pool(workers) as pool:
            results = list(pool.imap(_run_trial, tasks, chunksize=4))
    bucket_counts = {b: 0 for b in BUCKETS}
    fib = 0
    fib_strict = 0
    for r in results:
        bucket_counts[r.bucket] += 1
        if r.bucket == "non_polynomial":
            if r.report.verdict == "fib_like":
                fib_strict += 1
                fib += 1
            elif len(r.counts) >= 9 and detect_fib_like(r.counts, min_confirmations=4):
                fib += 1
    return ExperimentResult(
        num_patterns=num_patterns,
        max_n=max_n,
        trials=trials,
        seed=seed,
        bucket_counts=bucket_counts,
        fib_like_nonpoly=fib,
        fib_like_strict=fib_strict,
        results=results,
    )


# ---------------------------------------------------------------------------
# JSONL persistence
# ---------------------------------------------------------------------------

def record_from_json_dict(data: dict) -> SurveyRecord:
    patterns = pattern_set(parse_perm(t) for t in data["class"])
    record = SurveyRecord(patterns=patterns, orbit_size=int(data["orbit"]))
    if "counts" in data:
        record.counts = tuple(int(v) for v in data["counts"])
        record.report = classify(list(record.counts)) if len(record.counts) >= 4 else None
    if "error" in data:
        record.error = data["error"]
    return record


def read_survey(path: str) -> list[SurveyRecord]:
    records = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                records.append(record_from_json_dict(json.loads(line)))
    return records


def run_survey_to_file(
    num_patterns: int,
    pattern_length: int,
    max_n: int,
    out_path: str,
    *,
    workers: int = 1,
    node_budget: int | None = None,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
) -> list[SurveyRecord]:
    """
    Enumerate symmetry classes, count each representative to max_n, and
    stream finished records to out_path as JSON Lines. If the file already
    holds records, their classes are skipped (resume semantics) and the
    loaded records are merged into the result.
    """
    records = enumerate_symmetry_classes(
        num_patterns, pattern_length, subset_budget=subset_budget
    )
    done: dict[PatternSet, SurveyRecord] = {}
    try:
        for prior in read_survey(out_path):
            done[prior.patterns] = prior
    except FileNotFoundError:
        pass
    for record in records:
        prior = done.get(record.patterns)
        if prior is not None and (prior.counts is not None or prior.error is not None):
            record.counts = prior.counts
            record.report = prior.report
            record.error = prior.error
    with open(out_path, "a", encoding="utf-8") as fh:
        fill_counts(records, max_n, workers=workers, node_budget=node_budget, stream=fh)
    return records
