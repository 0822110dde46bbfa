"""Command line driver.

Exit codes: 0 decomposition found, 1 none of width <= k exists, 2 input or
usage error, 3 timeout, 4 the engine produced an invalid decomposition.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from htdecomp.engine import ACCEPT, REJECT, DecompositionTimeout, Decomposer, EngineConfig
from htdecomp.formats import FORMATS, read_hypergraph, serialize_decomposition
from htdecomp.hypergraph import HypergraphError
from htdecomp.validator import validate

EXIT_FOUND = 0
EXIT_NONE = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3
EXIT_INVALID = 4


@dataclass(frozen=True)
class CliConfig:
    input_path: str
    k: int
    validate: bool = False
    stats: bool = False
    output_path: str | None = None
    format: str = "text"
    use_fail_cache: bool = True
    use_succ_cache: bool = True
    all_covers: bool = False
    empty_components: str = ACCEPT
    timeout_seconds: float | None = None
    backend: str | None = None

    def engine_config(self) -> EngineConfig:
        return EngineConfig(use_fail_cache=self.use_fail_cache,
                            use_succ_cache=self.use_succ_cache,
                            all_covers=self.all_covers,
                            empty_components=self.empty_components)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("k must be at least 1")
    return value


def _non_negative_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("timeout must not be negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="htdecomp",
                description="Find a hypertree decomposition of width at most k.")
    p.add_argument("input", help="hypergraph file (edge terms, final '.')")
    p.add_argument("-k", "--k", type=_positive_int, required=True, help="width bound")
    p.add_argument("--validate", action="store_true",
                   help="check the result and exit 4 if it is not a valid decomposition")
    p.add_argument("--stats", action="store_true",
                   help="print search counters as key=value pairs on stderr")
    p.add_argument("-o", "--output", help="write the decomposition here instead of stdout")
    p.add_argument("-f", "--format", choices=FORMATS, default="text")
    p.add_argument("--no-fail-cache", action="store_true", help="disable the failed-pair cache")
    p.add_argument("--no-succ-cache", action="store_true", help="disable the succeeded-pair cache")
    p.add_argument("--all-covers", action="store_true",
                   help="try every cover of size <= k, not only irredundant ones")
    p.add_argument("--empty-components", choices=(ACCEPT, REJECT), default=ACCEPT,
                   help="whether a separator leaving no components counts as success")
    p.add_argument("--timeout", type=_non_negative_float, metavar="SECONDS")
    p.add_argument("--backend", choices=("python", "cython"),
                   help="kernel backend (default: compiled if available)")
    return p


def parse_args(argv=None) -> CliConfig:
    ns = build_parser().parse_args(argv)
    return CliConfig(
        input_path=ns.input, k=ns.k, validate=ns.validate, stats=ns.stats,
        output_path=ns.output, format=ns.format,
        use_fail_cache=not ns.no_fail_cache, use_succ_cache=not ns.no_succ_cache,
        all_covers=ns.all_covers, empty_components=ns.empty_components,
        timeout_seconds=ns.timeout, backend=ns.backend,
    )


def _emit_stats(decomposer, outcome, elapsed):
    pairs = dict(outcome=outcome, k=decomposer.k, **decomposer.stats.as_dict(),
                 fail_seps=len(decomposer.fail_seps), succ_seps=len(decomposer.succ_seps),
                 backend=decomposer.h.kernel_backend, wall_time=f"{elapsed:.6f}")
    print(" ".join(f"{key}={value}" for key, value in pairs.items()), file=sys.stderr)


def run_cli(argv=None) -> int:
    try:
        cfg = parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        h = read_hypergraph(cfg.input_path, cfg.backend)
    except OSError as exc:
        print(f"htdecomp: cannot read {cfg.input_path}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_USAGE
    except (HypergraphError, ValueError) as exc:
        print(f"htdecomp: {cfg.input_path}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    start = time.monotonic()
    deadline = None if cfg.timeout_seconds is None else start + cfg.timeout_seconds
    decomposer = Decomposer(h, cfg.k, cfg.engine_config(), deadline)
    try:
        tree = decomposer.run()
    except DecompositionTimeout:
        if cfg.stats:
            _emit_stats(decomposer, "timeout", time.monotonic() - start)
        print(f"htdecomp: timeout after {cfg.timeout_seconds} s", file=sys.stderr)
        return EXIT_TIMEOUT
    elapsed = time.monotonic() - start

    if tree is None:
        if cfg.stats:
            _emit_stats(decomposer, "none", elapsed)
        print(f"htdecomp: no hypertree decomposition of width <= {cfg.k}", file=sys.stderr)
        return EXIT_NONE

    if cfg.stats:
        _emit_stats(decomposer, "found", elapsed)
    if cfg.validate:
        report = validate(h, tree, cfg.k)
        if not report.ok:
            for v in report.violations:
                print(f"htdecomp: invalid: {v.condition} at {list(v.path)}: {v.detail}",
                      file=sys.stderr)
            if not report.within_width:
                print(f"htdecomp: invalid: width {report.width} exceeds {cfg.k}", file=sys.stderr)
            return EXIT_INVALID

    text = serialize_decomposition(h, tree, cfg.format)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_FOUND


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
