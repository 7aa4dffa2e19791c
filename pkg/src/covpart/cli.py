"""Command-line interface.

Commands: ``check`` (decide one file), ``report`` (every decision route
plus degrees and neighborhoods), ``verify`` (self-test across enumerated
and random coverings), ``bench`` (CSV timing of the decision routes) and
``gen`` (write a seeded random covering).

Exit codes: 0 partition, 1 not a partition, 2 input error, 3 inconclusive
(sufficient-only methods). Exit 70 is reserved for the never-expected
case that two exact decision routes disagree.
"""

import argparse
import json
import sys

from .bench import rows_to_csv, run_bench
from .core import (
    Covering,
    CoveringError,
    InternalDisagreement,
    PartitionVerdict,
)
from .covgen import random_covering
from .degrees import incidence_masks
from .fileformat import format_covering, parse_covering_file, write_covering
from .neighborhoods import oracle_is_neighborhood_partition
from .partition_check import (
    Report,
    check_excluded_number,
    check_reduct_sufficient,
    check_uniform_sufficient,
    full_report,
)
from .verify import run_suite

__all__ = ["main", "build_parser"]

EXIT_PARTITION = 0
EXIT_NOT_PARTITION = 1
EXIT_INPUT_ERROR = 2
EXIT_INCONCLUSIVE = 3
EXIT_INTERNAL = 70

CHECK_SCHEMA = "covpart-check/1"
REPORT_SCHEMA = "covpart-report/1"


def _witness_detail(c: Covering, verdict: PartitionVerdict) -> str:
    x, y = verdict.witness
    lx, ly = c.universe.label(x), c.universe.label(y)
    if verdict.method == "excluded":
        inc = incidence_masks(c)
        if inc[x] & ~inc[y] == 0:
            a, b = lx, ly
        else:
            a, b = ly, lx
        return f"every block containing {a} also contains {b}, but not conversely"
    return f"the neighborhoods of {lx} and {ly} overlap but differ"


def _emit_verdict(c: Covering, verdict: PartitionVerdict, as_json: bool, out) -> int:
    witness_labels = None
    detail = None
    if verdict.witness is not None:
        witness_labels = [c.universe.label(i) for i in verdict.witness]
        detail = _witness_detail(c, verdict)
    if as_json:
        doc = {
            "schema": CHECK_SCHEMA,
            "method": verdict.method,
            "partition": verdict.is_partition,
            "witness": witness_labels,
            "detail": detail,
        }
        print(json.dumps(doc, sort_keys=True), file=out)
    else:
        if verdict.is_partition:
            print("partition", file=out)
        else:
            print("not a partition", file=out)
            print(f"witness: {witness_labels[0]} {witness_labels[1]} ({detail})", file=out)
    return EXIT_PARTITION if verdict.is_partition else EXIT_NOT_PARTITION


def _emit_sufficient(method: str, outcome: bool | None, as_json: bool, out) -> int:
    texts = {
        "reduct": ("reduct is a partition", "reduct is not a partition"),
        "uniform": ("all blocks uniform", "some block is not uniform"),
    }
    positive, negative = texts[method]
    if as_json:
        doc = {
            "schema": CHECK_SCHEMA,
            "method": method,
            "partition": True if outcome else None,
            "witness": None,
            "detail": positive if outcome else negative,
        }
        print(json.dumps(doc, sort_keys=True), file=out)
    elif outcome:
        print(f"partition ({positive})", file=out)
    else:
        print(f"inconclusive ({negative})", file=out)
    return EXIT_PARTITION if outcome else EXIT_INCONCLUSIVE


def cmd_check(args) -> int:
    covering, warns = parse_covering_file(args.path)
    for w in warns:
        print(f"warning: {w}", file=sys.stderr)
    method = args.method
    if method in ("auto", "excluded", "oracle"):
        if method == "oracle":
            verdict = oracle_is_neighborhood_partition(covering)
        else:
            verdict = check_excluded_number(covering)
            if method == "auto" and covering.universe.n <= args.cross_check_max_n:
                other = oracle_is_neighborhood_partition(covering)
                if other.is_partition != verdict.is_partition:
                    raise InternalDisagreement(
                        f"excluded-number verdict {verdict.is_partition} vs "
                        f"neighborhood oracle {other.is_partition}"
                    )
        return _emit_verdict(covering, verdict, args.json, sys.stdout)
    if method == "reduct":
        return _emit_sufficient("reduct", check_reduct_sufficient(covering), args.json, sys.stdout)
    return _emit_sufficient("uniform", check_uniform_sufficient(covering), args.json, sys.stdout)


def _fmt_set(c: Covering, mask: int) -> str:
    return "{" + " ".join(c.universe.labels_of(mask)) + "}"


def _verdict_text(c: Covering, verdict: PartitionVerdict) -> str:
    if verdict.is_partition:
        return "partition"
    x, y = verdict.witness
    return (
        f"not a partition [witness {c.universe.label(x)} {c.universe.label(y)}: "
        f"{_witness_detail(c, verdict)}]"
    )


def _sufficient_text(outcome: bool | None) -> str:
    return "partition" if outcome else "inconclusive"


def render_report_text(r: Report) -> str:
    c = r.covering
    u = c.universe
    n = u.n
    lines = [f"universe ({n}): " + " ".join(u.labels)]
    lines.append(f"blocks ({len(c.blocks)}):")
    for b in c.blocks:
        lines.append(f"  {_fmt_set(c, b.mask)}")
    lines.append("neighborhoods:")
    for x in range(n):
        lines.append(f"  N({u.labels[x]}) = {_fmt_set(c, r.neighborhoods[x].mask)}")
    induced = " ".join(_fmt_set(c, b.mask) for b in r.induced.blocks)
    lines.append(f"induced family ({len(r.induced.blocks)}): {induced}")
    kept = " ".join(_fmt_set(c, b.mask) for b in r.reduct.blocks)
    lines.append(f"reduct ({len(r.reduct.blocks)} of {len(c.blocks)} blocks kept): {kept}")
    uniform_sets = [_fmt_set(c, b.mask) for b, ok in zip(c.blocks, r.uniform) if ok]
    shown = " ".join(uniform_sets) if uniform_sets else "(none)"
    lines.append(f"uniform blocks ({len(uniform_sets)} of {len(c.blocks)}): {shown}")
    degs = " ".join(f"{u.labels[x]}={r.degrees.membership[x]}" for x in range(n))
    lines.append(f"membership degrees: {degs}")
    lines.append("pair degrees:")
    if n == 1:
        lines.append("  (none)")
    else:
        for x in range(n - 1):
            row = " ".join(
                f"({u.labels[x]},{u.labels[y]})={r.degrees.common(x, y)}"
                for y in range(x + 1, n)
            )
            lines.append(f"  {row}")
    lines.append("verdicts:")
    lines.append(f"  excluded-number test: {_verdict_text(c, r.excluded)}")
    lines.append(f"  neighborhood oracle: {_verdict_text(c, r.oracle)}")
    lines.append(f"  reduct shortcut: {_sufficient_text(r.reduct_sufficient)}")
    lines.append(f"  uniform shortcut: {_sufficient_text(r.uniform_sufficient)}")
    lines.append(f"result: {'partition' if r.is_partition else 'not a partition'}")
    return "\n".join(lines) + "\n"


def report_to_dict(r: Report) -> dict:
    c = r.covering
    u = c.universe
    n = u.n

    def sets(fam):
        return [list(u.labels_of(b.mask)) for b in fam.blocks]

    def verdict(v: PartitionVerdict):
        return {
            "method": v.method,
            "partition": v.is_partition,
            "witness": None if v.witness is None else [u.label(i) for i in v.witness],
        }

    return {
        "schema": REPORT_SCHEMA,
        "universe": list(u.labels),
        "blocks": sets(c),
        "neighborhoods": [list(u.labels_of(b.mask)) for b in r.neighborhoods],
        "induced_family": sets(r.induced),
        "reduct": sets(r.reduct),
        "uniform_blocks": list(r.uniform),
        "degrees": {
            "membership": list(r.degrees.membership),
            "pairs": [
                [x, y, r.degrees.common(x, y)]
                for x in range(n)
                for y in range(x + 1, n)
            ],
        },
        "verdicts": {
            "excluded": verdict(r.excluded),
            "oracle": verdict(r.oracle),
            "reduct_sufficient": r.reduct_sufficient,
            "uniform_sufficient": r.uniform_sufficient,
        },
        "partition": r.is_partition,
    }


def cmd_report(args) -> int:
    covering, warns = parse_covering_file(args.path)
    for w in warns:
        print(f"warning: {w}", file=sys.stderr)
    report = full_report(covering)
    if args.json:
        print(json.dumps(report_to_dict(report), indent=2, sort_keys=True))
    else:
        print(render_report_text(report), end="")
    return EXIT_PARTITION


def cmd_verify(args) -> int:
    if args.max_n > 4:
        print("error: --max-n is capped at 4 for the exhaustive phase", file=sys.stderr)
        return EXIT_INPUT_ERROR
    summary = run_suite(
        max_n=args.max_n,
        samples=args.samples,
        seed=args.seed,
        n_lo=args.min_random_n,
        n_hi=args.max_random_n,
    )
    print(
        f"exhaustive: {summary.exhaustive_coverings} coverings over n <= {args.max_n}"
    )
    if args.samples > 0:
        print(
            f"randomized: {summary.random_coverings} coverings, "
            f"n in [{args.min_random_n}, {args.max_random_n}], seed {args.seed}"
        )
    else:
        print("randomized: skipped (samples=0)")
    print(f"assertion groups run: {summary.assertion_groups}")
    if summary.ok:
        print("all assertions hold")
        return 0
    print(f"FAILURES: {len(summary.failures)}")
    for f in summary.failures:
        print(f"--- {f.message}")
        if f.replay:
            print(f"    replay: {f.replay}")
        for line in f.covering_text.rstrip("\n").splitlines():
            print(f"    {line}")
    return 1


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok]


def _float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok]


def cmd_bench(args) -> int:
    rows = run_bench(
        _int_list(args.n_list),
        _int_list(args.m_list),
        _float_list(args.density_list),
        args.seed,
        args.reps,
    )
    csv_text = rows_to_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(csv_text)
    else:
        print(csv_text, end="")
    return 0


def cmd_gen(args) -> int:
    covering = random_covering(args.n, args.m, args.density, args.seed)
    if args.out:
        write_covering(covering, args.out)
    else:
        print(format_covering(covering), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covpart",
        description="Decide whether the neighborhoods induced by a covering form a partition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide partitionhood of one covering file")
    p_check.add_argument("path", help="covering file")
    p_check.add_argument(
        "--method",
        choices=["auto", "excluded", "oracle", "reduct", "uniform"],
        default="auto",
        help="decision route (default: excluded-number test, cross-checked on small universes)",
    )
    p_check.add_argument("--json", action="store_true", help="machine-readable verdict")
    p_check.add_argument(
        "--cross-check-max-n",
        type=int,
        default=64,
        help="with --method auto, also run the oracle when n is at most this (default 64)",
    )
    p_check.set_defaults(func=cmd_check)

    p_report = sub.add_parser("report", help="print every decision route plus degrees")
    p_report.add_argument("path", help="covering file")
    p_report.add_argument("--json", action="store_true", help="machine-readable report")
    p_report.set_defaults(func=cmd_report)

    p_verify = sub.add_parser("verify", help="self-test all routes against each other")
    p_verify.add_argument("--max-n", type=int, default=4, help="exhaustive phase cap (<= 4)")
    p_verify.add_argument("--samples", type=int, default=1000, help="random coverings (0 skips)")
    p_verify.add_argument("--seed", type=int, default=1, help="master seed for the random phase")
    p_verify.add_argument("--min-random-n", type=int, default=5, help="smallest random universe")
    p_verify.add_argument("--max-random-n", type=int, default=24, help="largest random universe")
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time the decision routes, CSV output")
    p_bench.add_argument("--n-list", default="8,16,32", help="comma-separated universe sizes")
    p_bench.add_argument("--m-list", default="4", help="comma-separated block targets")
    p_bench.add_argument("--density-list", default="0.0,0.3,0.8", help="comma-separated densities")
    p_bench.add_argument("--seed", type=int, default=1)
    p_bench.add_argument("--reps", type=int, default=5, help="timings per method (median reported)")
    p_bench.add_argument("--out", help="write CSV here instead of stdout")
    p_bench.set_defaults(func=cmd_bench)

    p_gen = sub.add_parser("gen", help="generate a seeded random covering file")
    p_gen.add_argument("--n", type=int, required=True, help="universe size")
    p_gen.add_argument("--m", type=int, required=True, help="target block count")
    p_gen.add_argument("--density", type=float, default=0.0, help="overlap knob in [0, 1]")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", help="write the covering here instead of stdout")
    p_gen.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalDisagreement as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (CoveringError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
