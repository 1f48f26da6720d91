"""The SMALGO matchers, reimplemented faithfully, flaws included.

SMALGO-I filters a Shift-And run with degenerate symbol masks plus
triplet path masks over the pattern graph; SMALGO-II replaces the
triplets with edge-pair masks and up/down/middle change masks. Both rest
on the assumption that consecutive locally-feasible triplets (or pairs)
share vertices, which is false, so both report false positives (for
example pattern ``abab`` over text ``aaba``). This module reproduces that behavior
bit-exactly on purpose; :func:`find_discrepancies` hunts such instances
against the brute-force oracle.

SMALGO-II here follows the repaired form of the original pseudocode
(initialization and indexing fixed); the repairs do not remove the
false positives.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .bitvec import BitVector
from .gsm import gsm_search
from .model import build_pgraph, bma_search
from .oracle import oracle_search
from .report import MatchReport

Pair = tuple[object, object]
Triple = tuple[object, object, object]


@dataclass(frozen=True)
class SmalgoMasks:
    """Mask tables for both SMALGO variants, in logical bit order (bit i = position i).

    ``dtilde[x]`` marks positions whose degenerate symbol set contains x
    (supersets of the plain masks). ``pmask3[(x1,x2,x3)]`` marks columns
    that sit mid-path on a labeled triplet; triples absent from the map
    share ``pmask3_default`` (bit 1 alone; bit 1 is set for every triple).
    The pair masks drive SMALGO-II: ``pmask2`` marks columns entered by an
    edge labeled (x, y), and ``up``/``down``/``middle`` mark columns where
    that edge lands on row -1 / +1 / 0.
    """

    p: int
    dtilde: Mapping[object, BitVector]
    pmask3: Mapping[Triple, BitVector]
    pmask3_default: BitVector
    pmask2: Mapping[Pair, BitVector]
    pmask2_default: BitVector
    up: Mapping[Pair, BitVector]
    down: Mapping[Pair, BitVector]
    middle: Mapping[Pair, BitVector]

    def dtilde_for(self, symbol) -> BitVector:
        vec = self.dtilde.get(symbol)
        return BitVector.zeros(self.p) if vec is None else vec

    def pmask3_for(self, triple: Triple) -> BitVector:
        return self.pmask3.get(triple, self.pmask3_default)


def smalgo_precompute(pattern: str | bytes) -> SmalgoMasks:
    """Build every SMALGO mask from the pattern graph; needs p >= 2."""
    p = len(pattern)
    if p < 2:
        raise ValueError("SMALGO masks need a pattern of length >= 2")
    graph = build_pgraph(pattern)

    # Degenerate sets are exactly the column label sets of the graph.
    dtilde_vals: dict = {}
    for c in range(1, p + 1):
        for v in graph.column(c):
            x = graph.label(*v)
            dtilde_vals[x] = dtilde_vals.get(x, 0) | (1 << (c - 1))

    pmask3_vals: dict[Triple, int] = {}
    pmask2_vals: dict[Pair, int] = {}
    up_vals: dict[Pair, int] = {}
    down_vals: dict[Pair, int] = {}
    middle_vals: dict[Pair, int] = {}
    for (r1, c1), (r2, c2) in graph.edges():
        x, y = graph.label(r1, c1), graph.label(r2, c2)
        bit = 1 << (c2 - 1)
        pmask2_vals[(x, y)] = pmask2_vals.get((x, y), 0) | bit
        rowmap = {-1: up_vals, 0: middle_vals, 1: down_vals}[r2]
        rowmap[(x, y)] = rowmap.get((x, y), 0) | bit
        for r3, c3 in graph.successors(r2, c2):
            z = graph.label(r3, c3)
            key = (x, y, z)
            pmask3_vals[key] = pmask3_vals.get(key, 0) | bit

    # Bit 1 is set for every triple/pair mask; masks that would carry
    # nothing else collapse into the shared default.
    default = BitVector(p, 1)
    pmask3 = {
        key: BitVector(p, v | 1) for key, v in pmask3_vals.items() if v > 1
    }
    pmask2 = {
        key: BitVector(p, v | 1) for key, v in pmask2_vals.items() if v > 1
    }
    return SmalgoMasks(
        p=p,
        dtilde={x: BitVector(p, v) for x, v in dtilde_vals.items()},
        pmask3=pmask3,
        pmask3_default=default,
        pmask2=pmask2,
        pmask2_default=default,
        up={k: BitVector(p, v) for k, v in up_vals.items()},
        down={k: BitVector(p, v) for k, v in down_vals.items()},
        middle={k: BitVector(p, v) for k, v in middle_vals.items()},
    )


def _single_symbol_search(algorithm: str, pattern, text) -> MatchReport:
    # Swap matching a length-1 pattern degenerates to plain Shift-And,
    # i.e. exact matching of the single symbol.
    sym = pattern[0]
    positions = tuple(i + 1 for i, c in enumerate(text) if c == sym)
    return MatchReport(algorithm, positions, 1, len(text))


@dataclass(frozen=True)
class Smalgo1Step:
    """One full SMALGO-I iteration, as displayed in a mask-table trace."""

    j: int  # 1-based index of the text symbol whose vector is produced
    lso_r: BitVector
    dtilde_cur: BitVector
    rshift_dtilde_next: BitVector
    pmask: BitVector
    pmask_key: Triple
    r_next: BitVector


def _smalgo1(pattern, text, steps: list[Smalgo1Step] | None = None):
    """Shared SMALGO-I engine; optionally records full-iteration traces."""
    p, t = len(pattern), len(text)
    masks = smalgo_precompute(pattern)
    dt = {x: v.value for x, v in masks.dtilde.items()}
    pm3 = {key: v.value for key, v in masks.pmask3.items()}
    default3 = masks.pmask3_default.value
    check = 1 << (p - 2)
    positions: list[int] = []

    r = 1 & dt.get(text[0], 0) if t else 0

    def report(j: int, vec: int) -> None:
        # A set check bit at R^j claims p-1 matched symbols ending at j
        # plus the lookahead, i.e. a window starting at j-p+2.
        if vec & check and p - 1 <= j <= t - 1:
            positions.append(j - p + 2)

    report(1, r)
    for j0 in range(1, t):
        cur = text[j0]
        if j0 + 1 < t:
            prev, nxt = text[j0 - 1], text[j0 + 1]
            key = (prev, cur, nxt)
            lso = (r << 1) | 1
            dcur = dt.get(cur, 0)
            dnext_shifted = dt.get(nxt, 0) >> 1
            pmask = pm3.get(key, default3)
            r = lso & dcur & dnext_shifted & pmask
            if steps is not None:
                steps.append(
                    Smalgo1Step(
                        j=j0 + 1,
                        lso_r=BitVector(p, lso),
                        dtilde_cur=BitVector(p, dcur),
                        rshift_dtilde_next=BitVector(p, dnext_shifted),
                        pmask=BitVector(p, pmask),
                        pmask_key=key,
                        r_next=BitVector(p, r),
                    )
                )
        else:
            # Final iteration: the lookahead symbol is past the text, so the
            # rshift and pmask terms drop (an all-ones sentinel).
            r = ((r << 1) | 1) & dt.get(cur, 0)
        report(j0 + 1, r)
    return MatchReport("smalgo1", tuple(positions), p, t)


def smalgo1_search(pattern: str | bytes, text: str | bytes) -> MatchReport:
    """SMALGO-I positions, false positives and all."""
    if len(pattern) == 0:
        raise ValueError("pattern must be non-empty")
    if len(pattern) == 1:
        return _single_symbol_search("smalgo1", pattern, text)
    if len(text) < len(pattern):
        return MatchReport("smalgo1", (), len(pattern), len(text))
    return _smalgo1(pattern, text)


def smalgo1_trace(pattern: str | bytes, text: str | bytes):
    """Run SMALGO-I and capture R^1 plus every full iteration's vectors."""
    if len(pattern) < 2:
        raise ValueError("trace needs a pattern of length >= 2")
    steps: list[Smalgo1Step] = []
    masks = smalgo_precompute(pattern)
    p = len(pattern)
    r1 = BitVector(p, 1 & masks.dtilde_for(text[0]).value) if text else BitVector(p)
    report = _smalgo1(pattern, text, steps)
    return r1, steps, report


def _reversed_int(vec: BitVector) -> int:
    # SMALGO-II registers run the other way around: position i sits at
    # physical bit p-i, the seed enters at the top and matches exit at bit 0.
    p = vec.length
    return sum(1 << (p - i) for i in vec.positions())


def smalgo2_search(pattern: str | bytes, text: str | bytes) -> MatchReport:
    """Corrected SMALGO-II positions (the false positives survive)."""
    p, t = len(pattern), len(text)
    if p == 0:
        raise ValueError("pattern must be non-empty")
    if p == 1:
        return _single_symbol_search("smalgo2", pattern, text)
    if t < p:
        return MatchReport("smalgo2", (), p, t)

    masks = smalgo_precompute(pattern)
    dt = {x: _reversed_int(v) for x, v in masks.dtilde.items()}
    pm2 = {k: _reversed_int(v) for k, v in masks.pmask2.items()}
    up = {k: _reversed_int(v) for k, v in masks.up.items()}
    down = {k: _reversed_int(v) for k, v in masks.down.items()}
    middle = {k: _reversed_int(v) for k, v in masks.middle.items()}
    pm2_default = _reversed_int(masks.pmask2_default)

    top = 1 << (p - 1)
    positions: list[int] = []

    r = top & dt.get(text[0], 0)
    r >>= 1
    checkup = checkdown = 0
    for j in range(t - 1):
        pair = (text[j], text[j + 1])
        d = dt.get(text[j + 1], 0)
        pm = pm2.get(pair, pm2_default)
        u = up.get(pair, 0)
        dn = down.get(pair, 0)
        mi = middle.get(pair, 0)

        r &= pm & d
        r &= ~checkup | dn | mi
        checkup = (u & ~dn & ~mi) >> 1
        r &= ~checkdown | u
        checkdown = (dn & ~u) >> 1
        if r & 1:
            # match ends at text index j+1 (0-based): start = j - p + 3 1-based
            positions.append(j - p + 3)
        r = (r >> 1) | top
    return MatchReport("smalgo2", tuple(positions), p, t)


# -- discrepancy hunting -------------------------------------------------------

SEARCHERS = {
    "gsm": gsm_search,
    "bma": bma_search,
    "oracle": oracle_search,
    "smalgo1": smalgo1_search,
    "smalgo2": smalgo2_search,
}


@dataclass(frozen=True)
class Discrepancy:
    """A position where an algorithm and the oracle disagree; re-verified on construction."""

    algorithm: str
    pattern: str | bytes
    text: str | bytes
    position: int
    kind: str  # "false-positive" | "false-negative"

    def __post_init__(self) -> None:
        if self.kind not in ("false-positive", "false-negative"):
            raise ValueError(f"unknown kind {self.kind!r}")
        reported = self.position in SEARCHERS[self.algorithm](self.pattern, self.text).positions
        truth = self.position in oracle_search(self.pattern, self.text).positions
        expected = self.kind == "false-positive"
        if (reported, truth) != (expected, not expected):
            raise ValueError(
                f"not a genuine {self.kind}: {self.algorithm} on "
                f"({self.pattern!r}, {self.text!r}) at {self.position}"
            )


@dataclass(frozen=True)
class ScanResult:
    discrepancies: tuple[Discrepancy, ...]
    pairs_scanned: int
    partial: bool  # budget ran out before the spaces were exhausted


def find_discrepancies(
    patterns: Iterable[str | bytes],
    texts: Sequence[str | bytes] | Iterable[str | bytes],
    algorithm: str,
    budget: int | None = None,
) -> ScanResult:
    """Scan pattern x text for positions where ``algorithm`` contradicts the oracle.

    ``texts`` is materialized once and replayed per pattern. Scanning stops
    after ``budget`` pairs, flagging the result as partial. Output order is
    deterministic: input order, then ascending positions.
    """
    if algorithm not in SEARCHERS or algorithm == "oracle":
        raise ValueError(f"cannot scan algorithm {algorithm!r}")
    search = SEARCHERS[algorithm]
    text_list = list(texts)
    found: list[Discrepancy] = []
    scanned = 0
    for pattern in patterns:
        for text in text_list:
            if budget is not None and scanned >= budget:
                return ScanResult(tuple(found), scanned, True)
            scanned += 1
            got = search(pattern, text).positions
            want = oracle_search(pattern, text).positions
            if got == want:
                continue
            want_set = frozenset(want)
            got_set = frozenset(got)
            for k in got:
                if k not in want_set:
                    found.append(
                        Discrepancy(algorithm, pattern, text, k, "false-positive")
                    )
            for k in want:
                if k not in got_set:
                    found.append(
                        Discrepancy(algorithm, pattern, text, k, "false-negative")
                    )
    return ScanResult(tuple(found), scanned, False)


def exhaustive_strings(alphabet: str, min_len: int, max_len: int) -> Iterator[str]:
    """Every string over the alphabet with length in [min_len, max_len]."""
    for n in range(min_len, max_len + 1):
        for tup in itertools.product(alphabet, repeat=n):
            yield "".join(tup)


def _text_field(value: str | bytes) -> str:
    return value.decode("latin-1") if isinstance(value, bytes) else value


def format_discrepancies(items: Iterable[Discrepancy]) -> str:
    """Line-oriented fixture: algo<TAB>pattern<TAB>text<TAB>position<TAB>kind."""
    return "".join(
        f"{d.algorithm}\t{_text_field(d.pattern)}\t{_text_field(d.text)}"
        f"\t{d.position}\t{d.kind}\n"
        for d in items
    )


def parse_discrepancies(payload: str) -> tuple[Discrepancy, ...]:
    """Inverse of format_discrepancies (str fields; positions as ints)."""
    out = []
    for line in payload.splitlines():
        if not line.strip():
            continue
        algo, pattern, text, position, kind = line.split("\t")
        out.append(Discrepancy(algo, pattern, text, int(position), kind))
    return tuple(out)
