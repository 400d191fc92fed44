"""Word pairs from the two border recurrences, and Zeckendorf numbering.

The uw family grows by ``u' = u w`` and ``w' = u w w``; the xy family by
``x' = x y`` and ``y' = y x y``; both start from (B, W).  The second words
double in length with golden-ratio-squared growth, so beyond moderate indices
only letter-at-index queries are practical; those are answered from the
memoized length tables without ever materializing the words.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fib import fib

FAMILIES = ("uw", "xy")


@dataclass(frozen=True)
class RecurrencePair:
    n: int
    first: str  # u_n or x_n
    second: str  # w_n or y_n
    family: str


def uw_pair(n: int) -> RecurrencePair:
    if n < 0:
        raise ValueError("index must be >= 0")
    u, w = "B", "W"
    for _ in range(n):
        u, w = u + w, u + w + w
    return RecurrencePair(n, u, w, "uw")


def xy_pair(n: int) -> RecurrencePair:
    if n < 0:
        raise ValueError("index must be >= 0")
    x, y = "B", "W"
    for _ in range(n):
        x, y = x + y, y + x + y
    return RecurrencePair(n, x, y, "xy")


# --- lengths and letter-at-index queries (no materialization) --------------

_lengths: list[tuple[int, int]] = [(1, 1)]  # (|first|, |second|) per index


def pair_lengths(n: int) -> tuple[int, int]:
    """(|first|, |second|) at index n; identical for both families."""
    if n < 0:
        raise ValueError("index must be >= 0")
    while len(_lengths) <= n:
        a, b = _lengths[-1]
        _lengths.append((a + b, a + 2 * b))
    return _lengths[n]


def _letter(family: str, which: int, n: int, i: int) -> str:
    # which: 0 = first word, 1 = second word
    while n > 0:
        a, b = pair_lengths(n - 1)
        if which == 0:  # first' = first second
            if i >= a:
                which, i = 1, i - a
        elif family == "uw":  # second' = first second second
            if i < a:
                which = 0
            else:
                i = (i - a) % b
        else:  # second' = second first second
            if i < b:
                pass
            elif i < b + a:
                which, i = 0, i - b
            else:
                i -= b + a
        n -= 1
    return "B" if which == 0 else "W"


def letter_at(family: str, n: int, offset: int) -> str:
    """Letter at a separator-relative offset of the index-n decomposition.

    The second word of index n+1 splits into a left part and a right part:
    ``u_n | w_n w_n`` for the uw family and ``y_n | x_n y_n`` for xy.
    Offset 0 is the first letter right of the separator; negative offsets
    index the left part from its end.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    if n < 0:
        raise ValueError("index must be >= 0")
    a, b = pair_lengths(n)
    if family == "uw":
        left, right = a, 2 * b
    else:
        left, right = b, a + b
    if not -left <= offset < right:
        raise IndexError(f"offset {offset} outside [-{left}, {right})")
    if family == "uw":
        if offset < 0:
            return _letter("uw", 0, n, a + offset)
        return _letter("uw", 1, n, offset % b)
    if offset < 0:
        return _letter("xy", 1, n, b + offset)
    if offset < a:
        return _letter("xy", 0, n, offset)
    return _letter("xy", 1, n, offset - a)


def growth_evidence(n: int) -> Fraction:
    """Length ratio |w_(n+1)| / |w_n|, exact."""
    if n < 1:
        raise ValueError("index must be >= 1")
    return Fraction(pair_lengths(n + 1)[1], pair_lengths(n)[1])


# --- Zeckendorf codes -------------------------------------------------------


class InvalidZeckendorfCode(ValueError):
    pass


def _basis(limit: int) -> list[int]:
    # distinct Fibonacci values 1, 2, 3, 5, ... up to limit, ascending
    out = []
    n = 1
    while fib(n) <= limit:
        out.append(fib(n))
        n += 1
    return out


def zeckendorf_encode(m: int) -> str:
    """Greedy sum of non-consecutive Fibonacci numbers, as a bit word."""
    if m < 1:
        raise ValueError(f"positive integer required, got {m}")
    bits = []
    for value in reversed(_basis(m)):
        if value <= m:
            bits.append("1")
            m -= value
        else:
            bits.append("0")
    return "".join(bits)


def zeckendorf_decode(code: str) -> int:
    """Inverse of encode; rejects malformed codes."""
    if not code or code.strip("01"):
        raise InvalidZeckendorfCode(f"not a bit word: {code!r}")
    if code[0] != "1":
        raise InvalidZeckendorfCode(f"leading bit must be 1: {code!r}")
    if "11" in code:
        raise InvalidZeckendorfCode(f"consecutive 1s in {code!r}")
    return sum(fib(i) for i, bit in enumerate(reversed(code), start=1) if bit == "1")
