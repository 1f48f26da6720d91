"""Batch command-line front end.

Subcommands: ``search`` (run one matcher over bytes from a file, stdin or
a flag), ``verify`` (cross-check matchers against the oracle over
exhaustive or seeded-random instance spaces), ``flaw-demo`` (the worked
false-positive trace), ``dfa-growth``/``dfa-states`` (state-count
tables), and ``bench`` (seeded throughput measurements as CSV).

Exit codes: 0 success (for ``search``: at least one match), 1 no match,
2 error / failed verification.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from random import Random
from typing import Sequence

from .dfa import (
    DEFAULT_STATE_CAP,
    build_swap_nfa,
    determinize,
    growth_csv,
    growth_table,
    minimize,
)
from .oracle import oracle_search
from .report import MatchReport
from .smalgo import (
    SEARCHERS,
    exhaustive_strings,
    find_discrepancies,
    format_discrepancies,
    smalgo1_trace,
    smalgo_precompute,
)

WORD_BITS = 64

# desk-scale guards for verify
MAX_EXHAUSTIVE_PAIRS = 5_000_000
MAX_SPACE_STRINGS = 500_000
MAX_TRIALS = 1_000_000
MAX_RANDOM_T = 65_536
MAX_RANDOM_P = 512
MAX_BENCH_T = 100_000_000


@dataclass(frozen=True)
class BenchRecord:
    """One benchmark measurement (median over repetitions)."""

    algo: str
    p: int
    t: int
    sigma: int
    words: int
    reps: int
    median_ns: int
    throughput_sym_per_s: float
    seed: int

    def csv_row(self) -> str:
        return (
            f"{self.algo},{self.p},{self.t},{self.sigma},{self.words},"
            f"{self.reps},{self.median_ns},{self.throughput_sym_per_s:.0f},{self.seed}"
        )


BENCH_CSV_HEADER = "algo,p,t,sigma,words,reps,median_ns,throughput_sym_per_s,seed"


def random_symbols(n: int, sigma: int, rng: Random) -> bytes:
    """n random bytes drawn from the first sigma byte values."""
    if not 1 <= sigma <= 256:
        raise ValueError("sigma must be in 1..256")
    raw = rng.randbytes(n)
    if sigma == 256:
        return raw
    return raw.translate(bytes(i % sigma for i in range(256)))


def run_bench(
    algos: Sequence[str],
    p_list: Sequence[int],
    t: int,
    sigma: int,
    seed: int,
    reps: int,
) -> list[BenchRecord]:
    """Median-of-reps timings on seeded random text, one record per (algo, p)."""
    if reps < 3:
        raise ValueError("reps must be >= 3")
    if t > MAX_BENCH_T:
        raise ValueError(f"t={t} exceeds the cap {MAX_BENCH_T}")
    records = []
    for algo in algos:
        search = SEARCHERS[algo]
        for p in p_list:
            rng = Random(seed)
            pattern = random_symbols(p, sigma, rng)
            text = random_symbols(t, sigma, rng)
            times = []
            for _ in range(reps):
                t0 = time.perf_counter_ns()
                search(pattern, text)
                times.append(time.perf_counter_ns() - t0)
            median_ns = int(statistics.median(times))
            records.append(
                BenchRecord(
                    algo=algo,
                    p=p,
                    t=t,
                    sigma=sigma,
                    words=-(-p // WORD_BITS),
                    reps=reps,
                    median_ns=median_ns,
                    throughput_sym_per_s=t / (median_ns / 1e9),
                    seed=seed,
                )
            )
    return records


# -- flaw demo -----------------------------------------------------------------

FLAW_PATTERN = "abab"
FLAW_TEXT = "aaba"


def flaw_demo_text() -> str:
    """The worked SMALGO-I false positive, rendered as printable tables."""
    pattern, text = FLAW_PATTERN, FLAW_TEXT
    p = len(pattern)
    masks = smalgo_precompute(pattern)
    out = []
    out.append(f"SMALGO-I false positive demo: pattern={pattern} text={text}")
    out.append("")
    out.append("Degenerate masks and triplet path masks (rows are positions i=1..4):")
    degenerate_sets = []
    for i in range(1, p + 1):
        ordered = []
        for idx in (i - 1, i - 2, i):  # current symbol first, then neighbors
            if 0 <= idx < p and pattern[idx] not in ordered:
                ordered.append(pattern[idx])
        degenerate_sets.append("[" + "".join(ordered) + "]")
    triples = sorted(
        ((x1, x2, x3) for x1 in "ab" for x2 in "ab" for x3 in "ab"),
        key=lambda t: (t.count("b"), t),
    )
    header = ["i", "deg"] + ["D~a", "D~b"] + ["".join(t) for t in triples]
    rows = []
    for i in range(1, p + 1):
        row = [str(i), degenerate_sets[i - 1]]
        row.append(str(masks.dtilde_for("a").get_bit(i)))
        row.append(str(masks.dtilde_for("b").get_bit(i)))
        for t in triples:
            row.append(str(masks.pmask3_for(t).get_bit(i)))
        rows.append(row)
    widths = [max(len(header[c]), *(len(r[c]) for r in rows)) for c in range(len(header))]
    out.append("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for r in rows:
        out.append("  ".join(v.ljust(w) for v, w in zip(r, widths)))
    out.append("")

    r1, steps, report = smalgo1_trace(pattern, text)
    out.append("Execution (vectors shown position 1 first):")
    out.append(f"R^1 = {r1.to01()}")
    for s in steps:
        key = "".join(str(x) for x in s.pmask_key)
        out.append(
            f"R^{s.j} = LSO(R^{s.j - 1}) & D~[{text[s.j - 1]}] & RShift(D~[{text[s.j] if s.j < len(text) else '?'}]) & P({key})"
            f" = {s.lso_r.to01()} & {s.dtilde_cur.to01()} & {s.rshift_dtilde_next.to01()}"
            f" & {s.pmask.to01()} = {s.r_next.to01()}"
        )
    out.append("")
    out.append(
        f"Match check looks at position {p - 1} of each vector; "
        f"R^3 has bit {p - 1} = {steps[-1].r_next.get_bit(p - 1)}."
    )
    out.append(
        f"smalgo1 reports positions: {list(report.positions)}"
    )
    verdict = oracle_search(pattern, text).positions
    out.append(f"oracle reports positions:  {list(verdict)}")
    out.append(
        "verdict: no swap match exists (two b's cannot come from one), "
        "so the reported match is a false positive."
    )
    return "\n".join(out) + "\n"


# -- input plumbing --------------------------------------------------------------

def _read_text_input(args) -> bytes:
    if args.text is not None:
        data = args.text.encode("latin-1")
    elif args.file is not None:
        with open(args.file, "rb") as fh:
            data = fh.read()
    else:
        data = sys.stdin.buffer.read()
    if args.fasta:
        lines = [ln for ln in data.splitlines() if not ln.startswith(b">")]
        data = b"".join(lines)
    elif args.strip_newlines:
        data = data.replace(b"\r", b"").replace(b"\n", b"")
    return data


def _print_report(report: MatchReport, fmt: str) -> None:
    if fmt == "jsonl":
        for k in report.positions:
            print(
                json.dumps(
                    {
                        "algorithm": report.algorithm,
                        "pattern_len": report.pattern_len,
                        "text_len": report.text_len,
                        "position": k,
                        "position0": k - 1,
                    },
                    sort_keys=True,
                )
            )
    else:
        for k in report.positions:
            print(k)


def cmd_search(args) -> int:
    try:
        pattern = args.pattern.encode("latin-1")
        if not pattern:
            raise ValueError("pattern must be non-empty")
        text = _read_text_input(args)
        report = SEARCHERS[args.algo](pattern, text)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _print_report(report, args.format)
    return 0 if report.positions else 1


def _space_size(sigma: int, lo: int, hi: int) -> int:
    return sum(sigma ** n for n in range(lo, hi + 1))


def _verify_one(algo: str, patterns: list[str], texts: list[str]):
    return find_discrepancies(patterns, texts, algo)


def cmd_verify(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    unknown = [a for a in algos if a not in SEARCHERS or a == "oracle"]
    if unknown:
        print(f"error: cannot verify {unknown}", file=sys.stderr)
        return 2
    sigma = args.sigma
    try:
        if args.mode == "exhaustive":
            n_pat = _space_size(len(sigma), args.p_min, args.p_max)
            n_txt = _space_size(len(sigma), args.t_min, args.t_max)
            if n_pat > MAX_SPACE_STRINGS or n_txt > MAX_SPACE_STRINGS:
                raise ValueError("string space exceeds the desk-scale cap")
            if n_pat * n_txt > MAX_EXHAUSTIVE_PAIRS:
                raise ValueError(
                    f"{n_pat * n_txt} pairs exceed the cap {MAX_EXHAUSTIVE_PAIRS}"
                )
            patterns = list(exhaustive_strings(sigma, args.p_min, args.p_max))
            texts = list(exhaustive_strings(sigma, args.t_min, args.t_max))
        else:
            if args.trials > MAX_TRIALS:
                raise ValueError(f"trials cap is {MAX_TRIALS}")
            if args.t_max > MAX_RANDOM_T or args.p_max > MAX_RANDOM_P:
                raise ValueError(
                    f"random caps: t<={MAX_RANDOM_T}, p<={MAX_RANDOM_P}"
                )
            if args.t_min < args.p_min:
                raise ValueError("random mode needs t-min >= p-min")
            rng = Random(args.seed)
            patterns = []
            texts = []
            for _ in range(args.trials):
                t_len = rng.randint(args.t_min, args.t_max)
                p_len = rng.randint(args.p_min, min(args.p_max, t_len))
                patterns.append("".join(rng.choice(sigma) for _ in range(p_len)))
                texts.append("".join(rng.choice(sigma) for _ in range(t_len)))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    failed = False
    all_found = []
    for algo in algos:
        if args.mode == "exhaustive":
            if args.workers > 1:
                # contiguous chunks keep the merged order identical to a
                # sequential scan
                size = -(-len(patterns) // args.workers)
                chunks = [
                    patterns[i : i + size] for i in range(0, len(patterns), size)
                ]
                with ThreadPoolExecutor(max_workers=args.workers) as pool:
                    results = list(
                        pool.map(lambda ch: _verify_one(algo, ch, texts), chunks)
                    )
                found = [d for res in results for d in res.discrepancies]
                scanned = sum(res.pairs_scanned for res in results)
            else:
                res = find_discrepancies(patterns, texts, algo)
                found = list(res.discrepancies)
                scanned = res.pairs_scanned
        else:
            # random mode pairs patterns[i] with texts[i] only
            found = []
            scanned = 0
            search = SEARCHERS[algo]
            for pat, txt in zip(patterns, texts):
                scanned += 1
                if search(pat, txt).positions != oracle_search(pat, txt).positions:
                    res = find_discrepancies([pat], [txt], algo)
                    found.extend(res.discrepancies)
        all_found.extend(found)
        print(f"algo={algo} pairs={scanned} discrepancies={len(found)}")
        for d in found:
            print(
                f"  {d.algorithm}\t{d.pattern}\t{d.text}\t{d.position}\t{d.kind}"
            )
        if found and algo in ("gsm", "bma"):
            failed = True
    if args.fixture_out:
        with open(args.fixture_out, "w", encoding="utf-8") as fh:
            fh.write(format_discrepancies(all_found))
    return 2 if failed else 0


def cmd_flaw_demo(_args) -> int:
    sys.stdout.write(flaw_demo_text())
    return 0


def cmd_dfa_growth(args) -> int:
    try:
        rows = growth_table(args.k_max, state_cap=args.state_cap)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(growth_csv(rows))
    bad = [r for r in rows if not r.bound_ok]
    if bad:
        print(f"error: lower bound violated at k={[r.k for r in bad]}", file=sys.stderr)
        return 2
    return 0


def cmd_dfa_states(args) -> int:
    try:
        pattern = args.pattern
        if not pattern:
            raise ValueError("pattern must be non-empty")
        nfa = build_swap_nfa(pattern, args.alphabet or None)
        dfa = determinize(nfa, args.state_cap)
        mdfa = minimize(dfa)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print("pattern,pattern_length,nfa_states,dfa_states,min_dfa_states")
    print(f"{pattern},{len(pattern)},{nfa.n_states},{dfa.n_states},{mdfa.n_states}")
    return 0


def cmd_bench(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    unknown = [a for a in algos if a not in SEARCHERS]
    if unknown:
        print(f"error: unknown algorithms {unknown}", file=sys.stderr)
        return 2
    try:
        p_list = [int(x) for x in args.p_list.split(",")]
        records = run_bench(algos, p_list, args.t, args.sigma, args.seed, args.reps)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(BENCH_CSV_HEADER)
    for rec in records:
        print(rec.csv_row())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swapmatch",
        description="Swap pattern matching toolkit: search, cross-verify, benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_search = sub.add_parser("search", help="find swap matches of a pattern")
    p_search.add_argument("--algo", default="gsm", choices=sorted(SEARCHERS))
    p_search.add_argument("--pattern", required=True)
    src = p_search.add_mutually_exclusive_group()
    src.add_argument("--text", help="text given inline (latin-1)")
    src.add_argument("--file", help="read text bytes from a file")
    p_search.add_argument("--format", default="text", choices=["text", "jsonl"])
    p_search.add_argument(
        "--fasta", action="store_true", help="drop FASTA headers and newlines"
    )
    p_search.add_argument(
        "--strip-newlines", action="store_true", help="drop newline bytes"
    )
    p_search.set_defaults(fn=cmd_search)

    p_verify = sub.add_parser("verify", help="cross-check algorithms against the oracle")
    p_verify.add_argument("--mode", default="exhaustive", choices=["exhaustive", "random"])
    p_verify.add_argument("--algos", default="gsm")
    p_verify.add_argument("--sigma", default="ab", help="alphabet as a string of symbols")
    p_verify.add_argument("--p-min", type=int, default=1)
    p_verify.add_argument("--p-max", type=int, default=4)
    p_verify.add_argument("--t-min", type=int, default=1)
    p_verify.add_argument("--t-max", type=int, default=6)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--trials", type=int, default=1000)
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--fixture-out", help="write discrepancies to this file")
    p_verify.set_defaults(fn=cmd_verify)

    p_flaw = sub.add_parser("flaw-demo", help="show the worked SMALGO-I false positive")
    p_flaw.set_defaults(fn=cmd_flaw_demo)

    p_growth = sub.add_parser("dfa-growth", help="DFA state growth for the blowup family")
    p_growth.add_argument("--k-max", type=int, default=6)
    p_growth.add_argument("--state-cap", type=int, default=DEFAULT_STATE_CAP)
    p_growth.set_defaults(fn=cmd_dfa_growth)

    p_states = sub.add_parser("dfa-states", help="automaton sizes for one pattern")
    p_states.add_argument("--pattern", required=True)
    p_states.add_argument("--alphabet", default="")
    p_states.add_argument("--state-cap", type=int, default=DEFAULT_STATE_CAP)
    p_states.set_defaults(fn=cmd_dfa_states)

    p_bench = sub.add_parser("bench", help="seeded throughput benchmark (CSV)")
    p_bench.add_argument("--algos", default="gsm")
    p_bench.add_argument("--p-list", default="32,64")
    p_bench.add_argument("--t", type=int, default=1_000_000)
    p_bench.add_argument("--sigma", type=int, default=4)
    p_bench.add_argument("--seed", type=int, default=42)
    p_bench.add_argument("--reps", type=int, default=5)
    p_bench.set_defaults(fn=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
