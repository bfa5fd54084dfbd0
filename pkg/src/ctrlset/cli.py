"""``ctrlset`` command-line entry point.

Exit codes: 0 success, 1 usage error, 2 data error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .bench import run_benchmark, run_verify
from .control import all_input, baseline_all_input
from .errors import CtrlsetError, MethodDisagreement
from .formats import input_digest, make_document, parse_edge_list, write_edge_list, write_report
from .generators import GenSpec, generate
from .graph import degree_stats
from .oracle import oracle_possible_inputs

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_VERIFY = 3

METHODS = {
    "new": all_input,
    "baseline": baseline_all_input,
    "oracle": oracle_possible_inputs,
}
MODELS = {"er": "er", "sf": "scale_free"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_model_args(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--model", choices=sorted(MODELS), required=required)
    p.add_argument("--n", type=int, required=required)
    p.add_argument("--k", type=float, required=required, help="average total degree")
    p.add_argument("--gamma", type=float, default=3.0, help="power-law exponent (sf only)")
    p.add_argument("--seed", type=int, required=required)


def _spec(args) -> GenSpec:
    return GenSpec(MODELS[args.model], args.n, args.k, args.gamma, args.gamma, args.seed)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ctrlset", description="Possible input nodes of directed networks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="compute MIS and all possible input nodes of an edge list")
    p.add_argument("path", type=Path)
    p.add_argument("--method", choices=sorted(METHODS), default="new")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", type=Path)

    p = sub.add_parser("generate", help="write a random digraph as an edge list")
    _add_model_args(p, required=True)
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("bench", help="time all_input against the per-node baseline")
    p.add_argument("--input", type=Path)
    _add_model_args(p, required=False)
    p.add_argument("--trials", type=int, default=3)

    p = sub.add_parser("verify", help="compare all methods with the exhaustive oracle")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    return parser


def cmd_analyze(args) -> int:
    data = args.path.read_bytes()
    g, labels = parse_edge_list(data)
    t0 = time.perf_counter()
    report = METHODS[args.method](g)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    doc = make_document(report, labels, elapsed_ms, input_digest(data))
    out = write_report(doc, args.format)
    if args.out:
        args.out.write_bytes(out)
    else:
        sys.stdout.buffer.write(out)
        sys.stdout.flush()
    return EXIT_OK


def cmd_generate(args) -> int:
    g = generate(_spec(args))
    args.out.write_bytes(write_edge_list(g))
    stats = degree_stats(g)
    print(f"n={g.n} L={g.num_edges} avg_degree={float(stats.avg_degree):.6f}")
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if args.input is not None:
        g, _ = parse_edge_list(args.input.read_bytes())
        source = str(args.input)
    elif None not in (args.model, args.n, args.k, args.seed):
        spec = _spec(args)
        g = generate(spec)
        source = f"{spec.model} n={spec.n} k={spec.k_avg:g} gamma={spec.gamma_in:g} seed={spec.seed}"
    else:
        raise UsageError("give --input FILE or all of --model, --n, --k, --seed")
    result = run_benchmark(g, trials=args.trials, source=source)
    print(json.dumps(result.as_dict()))
    return EXIT_OK


def cmd_verify(args, tamper=None) -> int:
    if not 1 <= args.n_max <= 12:
        raise UsageError("--n-max must be between 1 and 12")
    outcome = run_verify(args.n_max, args.trials, args.seed, tamper=tamper)
    print(f"passed={outcome.passed} failed={outcome.failed}")
    for f in outcome.failures[:5]:
        print(
            f"FAIL n={f.n} edges={f.edges} all_input={list(f.all_input)} "
            f"baseline={list(f.baseline)} oracle={list(f.oracle)}",
            file=sys.stderr,
        )
    return EXIT_OK if outcome.ok else EXIT_VERIFY


COMMANDS = {
    "analyze": cmd_analyze,
    "generate": cmd_generate,
    "bench": cmd_bench,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"ctrlset: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MethodDisagreement as exc:
        print(f"ctrlset: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (CtrlsetError, OSError) as exc:
        print(f"ctrlset: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
