"""GSM matcher: masks, the 13-op step, searches, and oracle equivalence."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from swapmatch.bitvec import BitVector, count_ops
from swapmatch.gsm import (
    GsmState,
    gsm_accepts,
    gsm_precompute,
    gsm_search,
    gsm_search_stream,
    gsm_step,
    zero_state,
)
from swapmatch.oracle import oracle_match_at, oracle_search

patterns = st.text(alphabet="abc", min_size=1, max_size=9)
texts = st.text(alphabet="abcd", min_size=0, max_size=40)


# -- reference reachability DPs ------------------------------------------------

def reach_sets(pattern: str, text: str, strict: bool) -> list[set]:
    """For each prefix T[1..j], the set of (row, column) a prefix swap-match
    can end in. ``strict`` forbids swapping equal symbols, matching the
    definition; relaxed mode is plain graph reachability."""
    p = len(pattern)
    out: list[set] = []
    prev: set = set()
    for c in text:
        candidates = {(0, 1), (1, 1)}
        for r, i in prev:
            if i + 1 > p:
                continue
            if r == 1:
                candidates.add((-1, i + 1))
            else:
                candidates.add((0, i + 1))
                candidates.add((1, i + 1))
        cur: set = set()
        for r, i in candidates:
            if r == -1 and i == 1:
                continue
            if r == 1 and i == p:
                continue
            if c != pattern[r + i - 1]:
                continue
            if strict:
                if r == -1 and pattern[i - 2] == pattern[i - 1]:
                    continue
                if r == 1 and pattern[i - 1] == pattern[i]:
                    continue
            cur.add((r, i))
        out.append(cur)
        prev = cur
    return out


def state_bits(state: GsmState) -> set:
    bits = set()
    for r, vec in ((-1, state.ru), (0, state.rm), (1, state.rd)):
        for i in vec.positions():
            bits.add((r, i))
    return bits


# -- precompute ------------------------------------------------------------------

def test_precompute_positions():
    masks = gsm_precompute("abab")
    assert masks.d["a"].positions() == (1, 3)
    assert masks.d["b"].positions() == (2, 4)


def test_precompute_uniform():
    masks = gsm_precompute("aaaa", alphabet="ab")
    assert masks.d["a"].positions() == (1, 2, 3, 4)
    assert masks.d["b"].positions() == ()


def test_precompute_acbab():
    masks = gsm_precompute("acbab")
    assert masks.d["a"].positions() == (1, 4)
    assert masks.d["c"].positions() == (2,)
    assert masks.d["b"].positions() == (3, 5)


def test_precompute_masks_partition_positions():
    masks = gsm_precompute("abcabcxyz")
    for i in range(1, 10):
        owners = [x for x, v in masks.d.items() if v.get_bit(i)]
        assert len(owners) == 1


def test_precompute_errors():
    with pytest.raises(ValueError):
        gsm_precompute("")
    with pytest.raises(ValueError):
        gsm_precompute("abc", alphabet="ab")


def test_unknown_symbol_filters_to_zero():
    masks = gsm_precompute("ab")
    assert masks.mask_for("z").value == 0


# -- the step ----------------------------------------------------------------------

def test_step_hand_example_match_symbol():
    masks = gsm_precompute("ab")
    st1 = gsm_step(zero_state(2), masks, "a")
    assert state_bits(st1) == {(0, 1)}


def test_step_hand_example_swap_pending():
    masks = gsm_precompute("ab")
    st1 = gsm_step(zero_state(2), masks, "b")
    assert state_bits(st1) == {(1, 1)}


def test_step_figure_prefix_accepts_after_five():
    masks = gsm_precompute("acbab")
    state = zero_state(5)
    seen_accept = []
    for c in "abcab":
        state = gsm_step(state, masks, c)
        seen_accept.append(gsm_accepts(state))
    assert seen_accept == [False, False, False, False, True]


def test_step_is_thirteen_bitwise_ops():
    masks = gsm_precompute("acbab")
    state = zero_state(5)
    for c in "abcab":
        with count_ops() as ops:
            state = gsm_step(state, masks, c)
        assert sum(ops.values()) == 13
        assert ops == {"lshift": 4, "or": 5, "and": 3, "rshift": 1}


def test_accepts_cases():
    p = 4
    state = GsmState(
        BitVector.zeros(p),
        BitVector.from_positions(p, [p]),
        BitVector.zeros(p),
    )
    assert gsm_accepts(state) is True
    assert gsm_accepts(zero_state(p)) is False


def test_state_invariants_rejected():
    with pytest.raises(ValueError):
        GsmState(
            BitVector.from_positions(3, [1]),
            BitVector.zeros(3),
            BitVector.zeros(3),
        )
    with pytest.raises(ValueError):
        GsmState(
            BitVector.zeros(3),
            BitVector.zeros(3),
            BitVector.from_positions(3, [3]),
        )


@given(patterns, texts)
def test_state_invariants_hold_under_fuzz(pattern, text):
    masks = gsm_precompute(pattern)
    state = zero_state(len(pattern))
    for c in text:
        state = gsm_step(state, masks, c)  # GsmState validates on construction
        assert state.ru.length == len(pattern)


# -- searches -----------------------------------------------------------------------

def test_search_rejects_flaw_instance():
    assert gsm_search("abab", "aaba").positions == ()


def test_search_figure_example():
    assert gsm_search("acbab", "babcabc").positions == (2,)


def test_search_alternating():
    assert gsm_search("ab", "bababa").positions == (1, 2, 3, 4, 5)


def test_search_single_symbol_pattern():
    assert gsm_search("a", "abca").positions == (1, 4)


def test_search_empty_pattern_rejected():
    with pytest.raises(ValueError):
        gsm_search("", "abc")


def test_search_type_mismatch():
    with pytest.raises(TypeError):
        gsm_search("ab", b"ab")


def test_search_high_byte_values():
    pattern = bytes([200, 255])
    text = bytes([1, 255, 200, 200, 255, 7])
    assert (
        gsm_search(pattern, text).positions
        == oracle_search(pattern, text).positions
        == (2, 4)
    )


def test_search_bytes_and_str_agree():
    assert (
        gsm_search(b"acbab", b"babcabc").positions
        == gsm_search("acbab", "babcabc").positions
    )


@given(patterns, texts)
@settings(max_examples=200)
def test_search_equals_oracle(pattern, text):
    assert gsm_search(pattern, text).positions == oracle_search(pattern, text).positions


@given(patterns, texts)
def test_search_equals_step_chain(pattern, text):
    p = len(pattern)
    masks = gsm_precompute(pattern)
    state = zero_state(p)
    hits = []
    for j, c in enumerate(text, 1):
        state = gsm_step(state, masks, c)
        if gsm_accepts(state) and j >= p:
            hits.append(j - p + 1)
    assert tuple(hits) == gsm_search(pattern, text).positions


def test_search_multiword_random_vs_oracle():
    rng = random.Random(99)
    for _ in range(300):
        sigma = rng.choice(["ab", "abcd", "abcdefghijklmnopqrst"])
        t = rng.randint(1, 400)
        p = rng.randint(1, min(96, t))
        pattern = "".join(rng.choice(sigma) for _ in range(p))
        text = "".join(rng.choice(sigma) for _ in range(t))
        assert (
            gsm_search(pattern, text).positions
            == oracle_search(pattern, text).positions
        ), (pattern, text)


# -- pointwise signal semantics ---------------------------------------------------

def test_signals_match_graph_reachability_and_oracle_certificates():
    rng = random.Random(4242)
    for _ in range(300):
        p = rng.randint(1, 8)
        t = rng.randint(p, 20)
        pattern = "".join(rng.choice("abc") for _ in range(p))
        text = "".join(rng.choice("abc") for _ in range(t))
        relaxed = reach_sets(pattern, text, strict=False)
        strict = reach_sets(pattern, text, strict=True)
        masks = gsm_precompute(pattern)
        state = zero_state(p)
        for j in range(1, t + 1):
            state = gsm_step(state, masks, text[j - 1])
            bits = state_bits(state)
            # signals are exactly graph reachability
            assert bits == relaxed[j - 1], (pattern, text, j)
            # a definition-level certificate always raises the signal
            assert strict[j - 1] <= bits, (pattern, text, j)
            # accepting signals certify a real window match
            if j >= p:
                for r in (-1, 0):
                    if (r, p) in bits:
                        assert oracle_match_at(pattern, text, j - p + 1)


def test_equal_symbol_swap_signal_is_relaxed_only():
    # reading 'a' against pattern 'aa' raises the pending-swap signal even
    # though the definition forbids swapping equal symbols; the relaxed
    # graph semantics allows it and match-level answers stay correct
    masks = gsm_precompute("aa")
    state = gsm_step(zero_state(2), masks, "a")
    assert (1, 1) in state_bits(state)
    assert reach_sets("aa", "a", strict=True)[0] == {(0, 1)}
    assert gsm_search("aa", "aa").positions == oracle_search("aa", "aa").positions


# -- streaming ----------------------------------------------------------------------

def test_stream_known_chunks():
    assert list(gsm_search_stream("abab", ["aab", "a"])) == []
    assert list(gsm_search_stream("acbab", ["bab", "cabc"])) == [2]


def test_stream_single_chunk_equals_search():
    text = "babcabcaabbacbab"
    assert (
        tuple(gsm_search_stream("acbab", [text]))
        == gsm_search("acbab", text).positions
    )


def test_stream_empty_iterator():
    assert list(gsm_search_stream("ab", [])) == []


def test_stream_type_mismatch():
    with pytest.raises(TypeError):
        list(gsm_search_stream("ab", [b"ab"]))


def test_stream_bytes_chunks():
    chunks = [b"bab", b"cab", b"c"]
    assert list(gsm_search_stream(b"acbab", chunks)) == [2]


def test_shared_masks_across_threads():
    # one mask table, several concurrent stepped searches
    from concurrent.futures import ThreadPoolExecutor

    pattern = "acbab"
    masks = gsm_precompute(pattern)
    rng = random.Random(64)
    texts_ = ["".join(rng.choice("abc") for _ in range(200)) for _ in range(8)]

    def run(text):
        state = zero_state(len(pattern))
        hits = []
        for j, c in enumerate(text, 1):
            state = gsm_step(state, masks, c)
            if gsm_accepts(state) and j >= len(pattern):
                hits.append(j - len(pattern) + 1)
        return tuple(hits)

    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(run, texts_))
    assert results == [gsm_search(pattern, t).positions for t in texts_]


@given(patterns, texts, st.lists(st.integers(min_value=0, max_value=40), max_size=6))
def test_stream_equals_search_any_chunking(pattern, text, cuts):
    bounds = sorted({min(c, len(text)) for c in cuts})
    chunks = []
    prev = 0
    for b in bounds + [len(text)]:
        chunks.append(text[prev:b])
        prev = b
    assert "".join(chunks) == text
    assert (
        tuple(gsm_search_stream(pattern, chunks))
        == gsm_search(pattern, text).positions
    )
