"""Fibonacci sequence helpers with the f(0) = f(1) = 1 indexing.

Used as the independent counting oracle throughout the test suites.
"""

from __future__ import annotations

from typing import Optional

_memo = [1, 1]


def fib(n: int) -> int:
    """n-th Fibonacci number, f(0) = f(1) = 1."""
    if n < 0:
        raise ValueError("fib is defined for n >= 0")
    while len(_memo) <= n:
        _memo.append(_memo[-1] + _memo[-2])
    return _memo[n]


def fib_upto(limit: int) -> list[int]:
    """All Fibonacci values <= limit, ascending, without the duplicate 1."""
    out = []
    n = 1
    while fib(n) <= limit:
        out.append(fib(n))
        n += 1
    return out


def fib_index(m: int) -> Optional[int]:
    """Smallest n with f(n) == m, or None when m is not a Fibonacci number."""
    if m < 1:
        return None
    n = 0
    while fib(n) < m:
        n += 1
    return n if fib(n) == m else None


def is_fibonacci(m: int) -> bool:
    return fib_index(m) is not None
