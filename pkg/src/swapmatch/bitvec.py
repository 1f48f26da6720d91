"""Fixed-length bit vectors with 1-based logical indexing.

A :class:`BitVector` holds ``length`` logical bits; bit 1 is the least
significant bit of word 0. Values are kept canonical: every bit at a
position greater than ``length`` is zero after every operation, so shifts
silently discard overflow instead of growing the vector.

The payload is a single Python int (CPython already stores ints as arrays
of machine words, so this is the multi-word representation), while the
``words`` property exposes the conventional view as 64-bit words.
"""

from __future__ import annotations

from collections import Counter
from contextlib import contextmanager
from typing import Iterable, Iterator

WORD_BITS = 64

# Live operation tally, or None when instrumentation is off.  Enabled via
# count_ops() so the bitwise cost of an algorithm step can be asserted.
_COUNTS: Counter[str] | None = None


def _tally(op: str) -> None:
    if _COUNTS is not None:
        _COUNTS[op] += 1


@contextmanager
def count_ops() -> Iterator[Counter[str]]:
    """Count primitive bitwise operations executed inside the block.

    Yields a live Counter keyed by operation kind (``lshift``, ``rshift``,
    ``and``, ``or``, ``not``). Nesting restores the previous tally.
    """
    global _COUNTS
    prev = _COUNTS
    _COUNTS = Counter()
    try:
        yield _COUNTS
    finally:
        _COUNTS = prev


class BitVector:
    """Immutable bit vector of a fixed logical length (may be 0)."""

    __slots__ = ("value", "length")

    value: int
    length: int

    def __init__(self, length: int, value: int = 0):
        if length < 0:
            raise ValueError(f"bit length must be >= 0, got {length}")
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "value", value & ((1 << length) - 1))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("BitVector is immutable")

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        """All-zero vector of the given logical length."""
        return cls(length)

    @classmethod
    def from_positions(cls, length: int, positions: Iterable[int]) -> "BitVector":
        """Vector with exactly the given 1-based bit positions set."""
        value = 0
        for i in positions:
            if not 1 <= i <= length:
                raise IndexError(f"bit index {i} out of range 1..{length}")
            value |= 1 << (i - 1)
        return cls(length, value)

    @classmethod
    def from01(cls, bits: str) -> "BitVector":
        """Parse the debug rendering: leftmost character is bit 1."""
        if bits.strip("01"):
            raise ValueError(f"expected a string of 0s and 1s, got {bits!r}")
        value = 0
        for i, ch in enumerate(bits):
            if ch == "1":
                value |= 1 << i
        return cls(len(bits), value)

    @property
    def words(self) -> tuple[int, ...]:
        """The vector as ceil(length/64) machine words, word 0 first."""
        n = (self.length + WORD_BITS - 1) // WORD_BITS
        mask = (1 << WORD_BITS) - 1
        return tuple((self.value >> (WORD_BITS * k)) & mask for k in range(n))

    # -- primitive operations ------------------------------------------------

    def lshift1(self) -> "BitVector":
        """Shift every bit one position up; bit 1 becomes 0, overflow is lost."""
        _tally("lshift")
        return BitVector(self.length, self.value << 1)

    def lso(self) -> "BitVector":
        """Left-shift-or-one: lshift1 with bit 1 forced to 1."""
        shifted = self.lshift1()
        _tally("or")
        return BitVector(self.length, shifted.value | 1)

    def rshift1(self) -> "BitVector":
        """Shift every bit one position down; the old bit 1 is lost."""
        _tally("rshift")
        return BitVector(self.length, self.value >> 1)

    def _require_same_length(self, other: "BitVector") -> None:
        if self.length != other.length:
            raise ValueError(
                f"length mismatch: {self.length} vs {other.length}"
            )

    def __and__(self, other: "BitVector") -> "BitVector":
        self._require_same_length(other)
        _tally("and")
        return BitVector(self.length, self.value & other.value)

    def __or__(self, other: "BitVector") -> "BitVector":
        self._require_same_length(other)
        _tally("or")
        return BitVector(self.length, self.value | other.value)

    def __invert__(self) -> "BitVector":
        _tally("not")
        return BitVector(self.length, ~self.value)

    # -- bit access ----------------------------------------------------------

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.length:
            raise IndexError(f"bit index {i} out of range 1..{self.length}")

    def get_bit(self, i: int) -> int:
        """Read logical bit i (1-based)."""
        self._check_index(i)
        return (self.value >> (i - 1)) & 1

    def set_bit(self, i: int, bit: int = 1) -> "BitVector":
        """Return a copy with logical bit i set to ``bit``."""
        self._check_index(i)
        if bit:
            return BitVector(self.length, self.value | (1 << (i - 1)))
        return BitVector(self.length, self.value & ~(1 << (i - 1)))

    def positions(self) -> tuple[int, ...]:
        """Ascending 1-based positions of all set bits."""
        return tuple(i for i in range(1, self.length + 1) if (self.value >> (i - 1)) & 1)

    def to01(self) -> str:
        """Debug rendering, bit 1 first: bits {1,2,3} of length 4 -> '1110'."""
        return "".join("1" if (self.value >> i) & 1 else "0" for i in range(self.length))

    # -- dunder plumbing -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.length == other.length and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.length, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __len__(self) -> int:
        return self.length

    def __repr__(self) -> str:
        return f"BitVector.from01({self.to01()!r})"
