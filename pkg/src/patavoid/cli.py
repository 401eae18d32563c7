"""
Command-line entry point.

Subcommands: count, template gen, template certify, analyze, survey
(run / wilf / polyscan), experiment, reproduce. All randomness flows from
--seed; all output is byte-deterministic for a fixed invocation. Exit
status: 0 success, 1 invalid input or failed reproduction, 2 resource
budget exhausted.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .claims import CLAIMS, run_claim
from .counting import (
    BudgetExceededError,
    count_avoiders,
    count_avoiders_naive,
    enumerate_avoiders,
)
from .perms import format_perm, parse_pattern_list
from .seqanalysis import classify
from .survey import polynomial_scan, random_experiment, read_survey, run_survey_to_file
from .templates import certify_avoidance, generate_family, parse_template_list


class CLIError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse from sys.exit(2) on bad flags
        raise CLIError(message)


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(data) -> None:
    _emit(json.dumps(data, separators=(", ", ": ")))


def _parse_seq(text: str) -> list[int]:
    out = []
    for i, tok in enumerate(t.strip() for t in text.split(",")):
        try:
            out.append(int(tok))
        except ValueError:
            raise CLIError(f"bad sequence: entry {i + 1} ({tok!r}) is not an integer") from None
    if not out:
        raise CLIError("empty sequence")
    return out


def build_parser() -> Parser:
    parser = Parser(prog="patavoid", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p_count = sub.add_parser("count", help="count avoiders of a pattern set")
    p_count.add_argument("--patterns", required=True, help="e.g. 1234,1243,1342,4231")
    p_count.add_argument("--max-n", type=int, required=True)
    p_count.add_argument("--naive", action="store_true", help="use the n!-filter oracle")
    p_count.add_argument("--engine", choices=["vector", "tree"], default="vector")
    p_count.add_argument("--emit", choices=["text", "json", "csv"], default="text")
    p_count.add_argument("--from-one", action="store_true", help="drop the length-0 entry")
    p_count.add_argument("--node-budget", type=int, default=None)
    p_count.add_argument("--enumerate", action="store_true", help="list the avoiders of length max-n")

    p_template = sub.add_parser("template", help="template family operations")
    tsub = p_template.add_subparsers(dest="template_cmd", metavar="SUBCOMMAND")
    p_gen = tsub.add_parser("gen", help="generate the length-n family members")
    p_gen.add_argument("--templates", required=True, help="e.g. 231:101 or 14253:10101,15243:10101")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--emit", choices=["text", "json"], default="text")
    p_cert = tsub.add_parser("certify", help="certify the family avoids a pattern set")
    p_cert.add_argument("--templates", required=True)
    p_cert.add_argument("--patterns", required=True)
    p_cert.add_argument("--emit", choices=["text", "json"], default="text")

    p_analyze = sub.add_parser("analyze", help="classify an integer sequence")
    p_analyze.add_argument("--seq", required=True, help="comma-separated integers, first term is index 0")
    p_analyze.add_argument("--max-degree", type=int, default=7)
    p_analyze.add_argument("--emit", choices=["text", "json"], default="json")

    p_survey = sub.add_parser("survey", help="symmetry-class survey campaigns")
    p_survey.add_argument("--num-patterns", type=int, default=4)
    p_survey.add_argument("--pattern-length", type=int, default=4)
    p_survey.add_argument("--max-n", type=int, default=10)
    p_survey.add_argument("--out", default=None, help="JSONL output (resumable)")
    p_survey.add_argument("--workers", type=int, default=1)
    p_survey.add_argument("--node-budget", type=int, default=None)
    ssub = p_survey.add_subparsers(dest="survey_cmd", metavar="SUBCOMMAND")
    p_wilf = ssub.add_parser("wilf", help="fingerprint clustering of a finished survey")
    p_wilf.add_argument("--in", dest="infile", required=True)
    p_wilf.add_argument("--max-n", type=int, default=None, help="horizon (default: full stored counts)")
    p_wilf.add_argument("--emit", choices=["text", "json"], default="text")
    p_scan = ssub.add_parser("polyscan", help="polynomial classes of a finished survey")
    p_scan.add_argument("--in", dest="infile", required=True)
    p_scan.add_argument("--max-degree", type=int, default=7)
    p_scan.add_argument("--max-n", type=int, default=None)
    p_scan.add_argument("--emit", choices=["text", "json", "csv"], default="text")

    p_exp = sub.add_parser("experiment", help="random pattern-set classification experiment")
    p_exp.add_argument("--num-patterns", type=int, required=True)
    p_exp.add_argument("--max-n", type=int, required=True)
    p_exp.add_argument("--trials", type=int, required=True)
    p_exp.add_argument("--seed", type=int, default=42)
    p_exp.add_argument("--workers", type=int, default=1)
    p_exp.add_argument("--node-budget", type=int, default=None)
    p_exp.add_argument("--emit", choices=["text", "json"], default="text")

    p_rep = sub.add_parser("reproduce", help="run a named reproduction check")
    p_rep.add_argument("claim", help=f"one of: {', '.join(sorted(CLAIMS))}")
    p_rep.add_argument("--workers", type=int, default=1)
    p_rep.add_argument("--seed", type=int, default=42)

    return parser


def _cmd_count(args) -> int:
    patterns = parse_pattern_list(args.patterns)
    if args.enumerate:
        members = enumerate_avoiders(patterns, args.max_n, engine=args.engine, node_budget=args.node_budget)
        for pi in sorted(members):
            _emit(format_perm(pi))
        return 0
    if args.naive:
        seq = count_avoiders_naive(patterns, args.max_n)
    else:
        seq = count_avoiders(patterns, args.max_n, engine=args.engine, node_budget=args.node_budget)
    counts = list(seq.counts[1:] if args.from_one else seq.counts)
    if args.emit == "json":
        _emit_json({
            "patterns": [format_perm(p) for p in seq.patterns],
            "counts": counts,
            "max_n": args.max_n,
        })
    elif args.emit == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "count"])
        start = 1 if args.from_one else 0
        for n, c in enumerate(counts, start=start):
            writer.writerow([n, c])
        sys.stdout.write(buf.getvalue())
    else:
        _emit(",".join(str(c) for c in counts))
    return 0


def _cmd_template(args) -> int:
    if args.template_cmd == "gen":
        templates = parse_template_list(args.templates)
        members = sorted(generate_family(templates, args.n))
        if args.emit == "json":
            _emit_json({
                "templates": [str(t) for t in templates],
                "n": args.n,
                "size": len(members),
                "members": [format_perm(p) for p in members],
            })
        else:
            for pi in members:
                _emit(format_perm(pi))
        return 0
    if args.template_cmd == "certify":
        templates = parse_template_list(args.templates)
        patterns = parse_pattern_list(args.patterns)
        cert = certify_avoidance(templates, patterns)
        if args.emit == "json":
            _emit_json({
                "templates": [str(t) for t in cert.templates],
                "patterns": [format_perm(p) for p in cert.patterns],
                "bound": cert.bound,
                "verified": cert.verified,
                "witness": None if cert.witness is None else format_perm(cert.witness),
            })
        else:
            if cert.verified:
                _emit(f"verified: true (bound {cert.bound})")
            else:
                _emit(
                    f"verified: false (bound {cert.bound}, witness {format_perm(cert.witness)} "
                    f"of length {cert.witness_length} contains {format_perm(cert.witness_pattern)})"
                )
        return 0
    raise CLIError("template requires a subcommand: gen or certify")


def _cmd_analyze(args) -> int:
    seq = _parse_seq(args.seq)
    if len(seq) < 4:
        raise CLIError("need at least 4 terms to classify")
    report = classify(seq, args.max_degree)
    if args.emit == "json":
        _emit_json(report.to_json_dict())
    else:
        fields = report.to_json_dict()
        verdict = fields.pop("verdict")
        rest = " ".join(f"{k}={v}" for k, v in fields.items())
        _emit(f"{verdict}{' ' + rest if rest else ''}")
    return 0


def _survey_records(args):
    records = read_survey(args.infile)
    if not records:
        raise CLIError(f"no survey records in {args.infile}")
    return records


def _horizon(args, records) -> int:
    if args.max_n is not None:
        return args.max_n
    lengths = [len(r.counts) for r in records if r.counts]
    if not lengths:
        raise CLIError("no record in the survey carries counts")
    return min(lengths)


def _cmd_survey(args) -> int:
    if args.survey_cmd == "wilf":
        records = _survey_records(args)
        horizon = _horizon(args, records)
        clusters: dict = {}
        failed = 0
        for r in records:
            if r.counts is None:
                failed += 1
                continue
            if len(r.counts) < horizon:
                raise CLIError(f"record {r.patterns} has fewer than {horizon} counts")
            clusters.setdefault(tuple(r.counts[:horizon]), []).append(r)
        payload = {
            "horizon": horizon,
            "records": len(records),
            "failed": failed,
            "distinct_fingerprints": len(clusters),
            "clusters": [
                {
                    "counts": list(fp),
                    "classes": [[format_perm(p) for p in r.patterns] for r in group],
                }
                for fp, group in sorted(clusters.items())
            ],
        }
        if args.emit == "json":
            _emit_json(payload)
        else:
            _emit(
                f"records: {len(records)}  failed: {failed}  horizon: {horizon}  "
                f"distinct fingerprints (Wilf lower bound): {len(clusters)}"
            )
        return 0
    if args.survey_cmd == "polyscan":
        records = _survey_records(args)
        horizon = _horizon(args, records)
        flagged = polynomial_scan(records, horizon, args.max_degree)
        if args.emit == "json":
            _emit_json({
                "horizon": horizon,
                "max_degree": args.max_degree,
                "total": len(flagged),
                "classes": [
                    {"class": [format_perm(p) for p in ps], "degree": d} for ps, d in flagged
                ],
            })
        elif args.emit == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf)
            writer.writerow(["patterns", "counts", "degree"])
            by_class = {r.patterns: r for r in records}
            for ps, d in flagged:
                counts = by_class[ps].counts[:horizon]
                writer.writerow([
                    " ".join(format_perm(p) for p in ps),
                    " ".join(str(c) for c in counts),
                    d,
                ])
            sys.stdout.write(buf.getvalue())
        else:
            _emit(f"polynomial classes (degree 1..{args.max_degree}) at horizon {horizon}: {len(flagged)}")
            for ps, d in flagged:
                _emit(f"  degree {d}: {{{','.join(format_perm(p) for p in ps)}}}")
        return 0
    # no subcommand: run the survey
    if args.out is None:
        raise CLIError("survey run requires --out (or use the wilf/polyscan subcommands)")
    records = run_survey_to_file(
        args.num_patterns,
        args.pattern_length,
        args.max_n,
        args.out,
        workers=args.workers,
        node_budget=args.node_budget,
    )
    failed = sum(1 for r in records if r.error is not None)
    _emit(
        f"surveyed {len(records)} symmetry classes of {args.num_patterns} patterns "
        f"of length {args.pattern_length} to n={args.max_n} ({failed} budget failures) -> {args.out}"
    )
    return 0


def _cmd_experiment(args) -> int:
    result = random_experiment(
        args.num_patterns,
        args.max_n,
        args.trials,
        args.seed,
        workers=args.workers,
        node_budget=args.node_budget,
    )
    if args.emit == "json":
        _emit_json(result.to_json_dict())
    else:
        _emit(
            f"{args.trials} trials of {args.num_patterns} random patterns, counts to n={args.max_n}, "
            f"seed {args.seed}:"
        )
        for bucket, count in result.bucket_counts.items():
            _emit(f"  {bucket:15s} {count:6d}  ({count / args.trials:6.1%})")
        nonpoly = result.bucket_counts["non_polynomial"]
        _emit(f"  fib-like among non-polynomial: {result.fib_like_nonpoly}/{nonpoly}")
    return 0


def _cmd_reproduce(args) -> int:
    result = run_claim(args.claim, workers=args.workers, seed=args.seed)
    status = "PASS" if result.passed else "FAIL"
    _emit(f"{status} {result.claim}")
    for line in result.lines:
        _emit(f"  {line}")
    return 0 if result.passed else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help()
            return 1
        handler = {
            "count": _cmd_count,
            "template": _cmd_template,
            "analyze": _cmd_analyze,
            "survey": _cmd_survey,
            "experiment": _cmd_experiment,
            "reproduce": _cmd_reproduce,
        }[args.command]
        return handler(args)
    except CLIError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except BudgetExceededError as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
