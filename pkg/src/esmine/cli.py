"""Command-line entry point: ``esmine {mine,bench,gen,verify}``.

Exit codes: 0 success, 1 usage, 2 I/O, 3 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import statistics
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .dataset import (
    ParseError,
    SupportThreshold,
    TransactionDB,
    generate_synthetic,
    read_fimi,
    resolve_minsup,
    save_fimi,
)
from .oracle import OracleRefused
from .search import ALL_SCHEMES, Algorithm, MiningResult, Scheme, mine
from .verify import fuzz, verify_instance

log = logging.getLogger("esmine")

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_VERIFY = 0, 1, 2, 3

METRICS_FORMAT_VERSION = 1
CSV_COLUMNS = [
    "dataset", "algorithm", "early_stopping", "minsup_abs", "minsup_rel",
    "num_candidates", "num_expanded", "ratio", "num_frequent",
    "num_comparisons", "runtime_ms_mean", "runtime_ms_per_run",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class MetricsRecord:
    dataset: str
    algorithm: str
    early_stopping: bool
    minsup_abs: int
    minsup_rel: float
    num_candidates: int
    num_expanded: int
    num_frequent: int
    num_comparisons: int
    runtime_ms_mean: float
    runtime_ms_per_run: list[float] = field(default_factory=list)

    @property
    def ratio(self) -> str:
        return format_ratio(self.num_candidates, self.num_expanded)

    def to_json(self) -> str:
        payload = {"format_version": METRICS_FORMAT_VERSION, **asdict(self), "ratio": self.ratio}
        return json.dumps(payload, sort_keys=False)

    def csv_row(self) -> dict:
        row = asdict(self)
        row["early_stopping"] = int(self.early_stopping)
        row["ratio"] = self.ratio
        row["runtime_ms_mean"] = f"{self.runtime_ms_mean:.3f}"
        row["runtime_ms_per_run"] = ";".join(f"{t:.3f}" for t in self.runtime_ms_per_run)
        return row


@dataclass
class BenchConfig:
    input: Path
    schemes: list[Scheme]
    minsups: list[SupportThreshold]
    repetitions: int = 10
    csv_path: Path | None = None
    report_path: Path | None = None
    dataset: str | None = None

    def __post_init__(self):
        if not self.schemes:
            raise UsageError("at least one scheme is required")
        if not self.minsups:
            raise UsageError("at least one minsup is required")
        if self.repetitions < 1:
            raise UsageError("repetitions must be >= 1")


def format_ratio(candidates: int, expanded: int) -> str:
    """candidates / expanded rounded half-up to 2 decimals, in integers."""
    if expanded == 0:
        return ""
    hundredths = (200 * candidates + expanded) // (2 * expanded)
    return f"{hundredths // 100}.{hundredths % 100:02d}"


def make_record(dataset: str, scheme: Scheme, minsup: int, n: int,
                runs: list[MiningResult], minsup_rel: float | None = None) -> MetricsRecord:
    m = runs[0].metrics
    times = [r.metrics.runtime * 1000.0 for r in runs]
    if minsup_rel is None:
        minsup_rel = minsup / n if n else 0.0
    return MetricsRecord(
        dataset=dataset, algorithm=scheme.algorithm.label, early_stopping=scheme.es,
        minsup_abs=minsup, minsup_rel=minsup_rel,
        num_candidates=m.num_candidates, num_expanded=m.num_expanded,
        num_frequent=m.num_frequent, num_comparisons=m.num_comparisons,
        runtime_ms_mean=statistics.fmean(times), runtime_ms_per_run=times,
    )


def _threshold(args) -> SupportThreshold:
    try:
        if args.minsup_abs is not None:
            return SupportThreshold.absolute(args.minsup_abs)
        return SupportThreshold.fraction(args.minsup_rel)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load(path) -> TransactionDB:
    try:
        return read_fimi(path)
    except ParseError as exc:
        raise OSError(f"{path}: {exc}") from exc


def cmd_mine(args) -> int:
    threshold = _threshold(args)
    scheme = Scheme(Algorithm(args.algo), args.es)
    db = _load(args.input)
    try:
        minsup = resolve_minsup(threshold, db.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = mine(db, minsup, scheme)
    Path(args.output).write_text("".join(line + "\n" for line in result.lines()))
    if args.metrics:
        rel = threshold.value if threshold.relative else None
        rec = make_record(Path(args.input).name, scheme, minsup, db.n, [result], rel)
        Path(args.metrics).write_text(rec.to_json() + "\n")
    log.info("%s: %d frequent itemsets at minsup %d", scheme, len(result.frequent), minsup)
    return EXIT_OK


def run_bench(config: BenchConfig) -> list[MetricsRecord]:
    db = _load(config.input)
    name = config.dataset or Path(config.input).name
    records = []
    for threshold in config.minsups:
        minsup = resolve_minsup(threshold, db.n)
        rel = threshold.value if threshold.relative else None
        for scheme in config.schemes:
            runs = [mine(db, minsup, scheme) for _ in range(config.repetitions)]
            first = runs[0]
            for r in runs[1:]:
                if r.metrics.counters() != first.metrics.counters() or r.frequent != first.frequent:
                    raise RuntimeError(
                        f"non-deterministic counters in cell ({scheme}, minsup={minsup})")
            records.append(make_record(name, scheme, minsup, db.n, runs, rel))
            log.info("%s minsup=%d: %d comparisons", scheme, minsup,
                     first.metrics.num_comparisons)
    return records


def write_csv(records: list[MetricsRecord], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for rec in records:
            writer.writerow(rec.csv_row())


def cmd_bench(args) -> int:
    if args.algos:
        algos = [Algorithm(a) for a in args.algos]
    else:
        algos = list(Algorithm)
    es_variants = {"both": (False, True), "es": (True,), "no-es": (False,)}[args.es_variants]
    schemes = [Scheme(a, es) for a in algos for es in es_variants]
    try:
        minsups = ([SupportThreshold.absolute(v) for v in args.minsup_abs or []]
                   + [SupportThreshold.fraction(v) for v in args.minsup_rel or []])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    config = BenchConfig(Path(args.input), schemes, minsups, args.repetitions,
                         Path(args.csv), Path(args.report) if args.report else None,
                         args.dataset)
    records = run_bench(config)
    write_csv(records, config.csv_path)
    if config.report_path:
        config.report_path.write_text("".join(r.to_json() + "\n" for r in records))
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        db = generate_synthetic(args.trans, args.items, args.mean_len, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    save_fimi(db, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    failures = 0
    if args.input:
        if args.minsup_abs is None or args.minsup_abs < 1:
            raise UsageError("--input needs --minsup-abs N with N >= 1")
        db = _load(args.input)
        problems = verify_instance(db, args.minsup_abs)
        if problems:
            print(f"{args.input} minsup={args.minsup_abs}: {problems[0]}")
            failures += 1
    if args.fuzz:
        for k, (db, minsup, problems) in enumerate(
                fuzz(args.fuzz, args.seed, args.max_items, args.max_trans)):
            if problems:
                print(f"fuzz instance {k} (n={db.n}, minsup={minsup}): {problems[0]}")
                failures += 1
                break
    if not args.input and not args.fuzz:
        raise UsageError("nothing to verify: give --input or --fuzz")
    if failures:
        return EXIT_VERIFY
    print("ok")
    return EXIT_OK


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="esmine", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    m = sub.add_parser("mine", help="mine frequent itemsets from a FIMI file")
    m.add_argument("--algo", required=True, choices=[a.value for a in Algorithm])
    es = m.add_mutually_exclusive_group()
    es.add_argument("--es", dest="es", action="store_true", help="early-stopping kernels")
    es.add_argument("--no-es", dest="es", action="store_false")
    ms = m.add_mutually_exclusive_group(required=True)
    ms.add_argument("--minsup-abs", type=_positive_int)
    ms.add_argument("--minsup-rel", type=float)
    m.add_argument("--input", required=True)
    m.add_argument("--output", required=True)
    m.add_argument("--metrics")
    m.set_defaults(func=cmd_mine, es=False)

    b = sub.add_parser("bench", help="run a scheme x minsup grid and write CSV")
    b.add_argument("--input", required=True)
    b.add_argument("--algos", nargs="+", choices=[a.value for a in Algorithm])
    b.add_argument("--es-variants", choices=["both", "es", "no-es"], default="both")
    b.add_argument("--minsup-abs", type=_positive_int, nargs="+")
    b.add_argument("--minsup-rel", type=float, nargs="+")
    b.add_argument("--repetitions", type=_positive_int, default=10)
    b.add_argument("--csv", required=True)
    b.add_argument("--report", help="JSON-lines file, one metrics record per line")
    b.add_argument("--dataset", help="name recorded in the dataset column")
    b.set_defaults(func=cmd_bench)

    g = sub.add_parser("gen", help="write a synthetic FIMI database")
    g.add_argument("--trans", type=int, required=True)
    g.add_argument("--items", type=int, required=True)
    g.add_argument("--mean-len", type=float, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--output", required=True)
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check all variants against the brute-force oracle")
    v.add_argument("--input")
    v.add_argument("--minsup-abs", type=int)
    v.add_argument("--fuzz", type=int, default=0, metavar="K")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-items", type=_positive_int, default=12)
    v.add_argument("--max-trans", type=_positive_int, default=30)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, OracleRefused) as exc:
        print(f"esmine {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"esmine {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
