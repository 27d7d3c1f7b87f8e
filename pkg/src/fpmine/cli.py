"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data error, 3 miner disagreement.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .apriori import mine_apriori
from .dhp import HashConfig, mine_dhp
from .errors import DataError, MinerDisagreement
from .ingest import GeneratorSpec, InputFormat, generate_synthetic, read_transactions, write_transactions
from .model import SupportThreshold
from .oracle import enumerate_frequent
from .report import FORMATS, ReportInvariantError, compare, render, render_result

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_DISAGREE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_input(p):
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--separator", choices=("auto", "comma", "whitespace"), default="auto")


def _add_threshold(p, allow_ratio=True):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--min-support", type=int, metavar="N")
    if allow_ratio:
        group.add_argument("--min-support-ratio", type=str, metavar="F")


def _add_mining(p):
    _add_threshold(p)
    _add_input(p)
    p.add_argument("--buckets", type=int, default=7, metavar="B")
    p.add_argument("--base", type=int, default=10, metavar="R")
    p.add_argument("--hash-until-level", type=int, default=None, metavar="K")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--list-itemsets", action="store_true")


def build_parser():
    parser = _Parser(prog="fpmine", description="Apriori / DHP frequent-itemset mining")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    mine = sub.add_parser("mine", help="run one miner")
    mine.add_argument("--algo", choices=("apriori", "dhp"), required=True)
    _add_mining(mine)

    cmp_ = sub.add_parser("compare", help="run both miners and print the per-level comparison")
    _add_mining(cmp_)

    orc = sub.add_parser("oracle", help="brute-force enumeration (ground truth)")
    _add_threshold(orc, allow_ratio=False)
    _add_input(orc)
    orc.add_argument("--max-k", type=int, default=None, metavar="K")
    orc.add_argument("--format", choices=("text", "json"), default="text")

    gen = sub.add_parser("gen", help="write a synthetic transaction file")
    gen.add_argument("--items", type=int, required=True, metavar="N")
    gen.add_argument("--txns", type=int, required=True, metavar="M")
    gen.add_argument("--mean-size", type=float, required=True, metavar="S")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--output", required=True, metavar="PATH")
    gen.add_argument("--separator", choices=("comma", "whitespace"), default="comma")
    return parser


def _load(args):
    if not os.path.isfile(args.input):
        raise UsageError(f"input file not found: {args.input}")
    return read_transactions(args.input, InputFormat(separator=args.separator))


def _threshold(args, db):
    if getattr(args, "min_support_ratio", None) is not None:
        return SupportThreshold.from_ratio(args.min_support_ratio, len(db))
    return SupportThreshold(args.min_support)


def _color(stream):
    return os.environ.get("FPM_COLOR") != "0" and hasattr(stream, "isatty") and stream.isatty()


def _write(stdout, payload: bytes):
    buffer = getattr(stdout, "buffer", None)
    if buffer is not None:
        buffer.write(payload)
        buffer.flush()
    else:
        stdout.write(payload.decode("utf-8"))


def _run(args, stdout):
    if args.command == "gen":
        spec = GeneratorSpec(args.items, args.txns, args.mean_size, args.seed)
        write_transactions(generate_synthetic(spec), args.output, args.separator)
        return

    db = _load(args)
    threshold = _threshold(args, db)

    if args.command == "oracle":
        found = enumerate_frequent(db, threshold, args.max_k)
        if args.format == "json":
            payload = json.dumps([{"items": list(c.items), "support": c.support} for c in found], indent=2) + "\n"
        else:
            payload = "".join(f"{c}\n" for c in found)
        _write(stdout, payload.encode("utf-8"))
        return

    config = HashConfig(args.buckets, args.base, args.hash_until_level)
    color = _color(stdout)
    if args.command == "compare":
        report = compare(db, threshold, config)
        _write(stdout, render(report, args.format, args.list_itemsets, color))
    elif args.algo == "apriori":
        result = mine_apriori(db, threshold)
        _write(stdout, render_result(result, db, args.format, args.list_itemsets, color=color))
    else:
        result = mine_dhp(db, threshold, config)
        _write(stdout, render_result(result, db, args.format, args.list_itemsets, config, color))


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        _run(args, stdout)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except (MinerDisagreement, ReportInvariantError) as exc:
        print(f"miner disagreement: {exc}", file=stderr)
        return EXIT_DISAGREE
    except DataError as exc:
        print(f"data error: {exc}", file=stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
