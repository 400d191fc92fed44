"""Iterated pushdown stores.

A level-k store is a sequence of entries, each pairing a stack symbol with a
flag that is itself a store of level at most k-1.  The empty store plays the
role of the level-0 store.  Only the leftmost chain of a store is readable
(`topsym`) or writable (`pop` / `push`); everything else is frozen until the
entries in front of it are consumed.

Stores are immutable values: every operation returns a new store and shares
structure with its inputs.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple


class StoreError(Exception):
    """An operation was applied to a store on which it is undefined."""


class UndefinedPopError(StoreError):
    pass


class UndefinedPushError(StoreError):
    pass


class Store:
    """Immutable iterated pushdown store.

    ``entries`` is a tuple of ``(symbol, flag)`` pairs, where ``flag`` is again
    a :class:`Store`.  Hash, total entry count, nesting depth and the length of
    the longest inner store are memoized on first use so that search code can
    use stores as dictionary keys and prune on size cheaply; stores created in
    hot loops that never ask for them pay nothing.
    """

    __slots__ = ("entries", "_hash", "_size", "_depth", "_max_inner")

    entries: Tuple[Tuple[str, "Store"], ...]

    def __init__(self, entries: Iterable[Tuple[str, "Store"]] = ()):
        object.__setattr__(self, "entries", tuple(entries))

    @property
    def size(self) -> int:
        """Total number of entries, inner stores included."""
        try:
            return self._size
        except AttributeError:
            n = len(self.entries) + sum(flag.size for _, flag in self.entries)
            object.__setattr__(self, "_size", n)
            return n

    @property
    def depth(self) -> int:
        """Nesting depth: 0 for the empty store."""
        try:
            return self._depth
        except AttributeError:
            d = 1 + max((f.depth for _, f in self.entries), default=-1)
            object.__setattr__(self, "_depth", d)
            return d

    @property
    def max_inner(self) -> int:
        """Length of the longest inner store anywhere below the top level."""
        try:
            return self._max_inner
        except AttributeError:
            m = 0
            for _, flag in self.entries:
                inner = max(len(flag.entries), flag.max_inner)
                if inner > m:
                    m = inner
            object.__setattr__(self, "_max_inner", m)
            return m

    def __setattr__(self, name, value):
        raise AttributeError("Store is immutable")

    def __hash__(self) -> int:
        try:
            return self._hash
        except AttributeError:
            h = hash(self.entries)
            object.__setattr__(self, "_hash", h)
            return h

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Store):
            return NotImplemented
        return self.entries == other.entries

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __repr__(self) -> str:
        return f"Store<{render(self)}>"

    def __str__(self) -> str:
        return render(self)


EMPTY = Store()


def flat(symbols: Iterable[str], flag: Store = EMPTY) -> Store:
    """Store with one entry per symbol, all carrying the same flag."""
    return Store(tuple((sym, flag) for sym in symbols))


def render(s: Store) -> str:
    """Debug text for a store: ``ε`` when empty, else dot-separated entries.

    Each entry prints as ``A[...]`` with the flag rendered inside the
    brackets (an empty flag renders as ``[]``), e.g. ``X1[F[]].X2[F[]]``.
    The format is stable; traces rely on it.
    """
    if not s.entries:
        return "ε"
    return ".".join(_render_entry(sym, flag) for sym, flag in s.entries)


def _render_entry(sym: str, flag: Store) -> str:
    inner = ".".join(_render_entry(a, f) for a, f in flag.entries)
    return f"{sym}[{inner}]"


def topsym(s: Store) -> Tuple[str, ...]:
    """The word read down the leftmost chain of ``s``.

    Empty store reads as the empty word; otherwise the first entry's symbol
    followed by the topsym of its flag.
    """
    out = []
    while s.entries:
        sym, s = s.entries[0]
        out.append(sym)
    return tuple(out)


def pop(j: int, s: Store) -> Store:
    """Remove at level ``j`` along the leftmost chain.

    Level 1 discards the whole first entry, flag included.  Higher levels
    recurse into the first entry's flag and leave everything else untouched.
    """
    if j < 1:
        raise ValueError(f"pop level must be >= 1, got {j}")
    if not s.entries:
        raise UndefinedPopError(f"pop_{j} is undefined on the empty store")
    if j == 1:
        return Store(s.entries[1:])
    sym, flag = s.entries[0]
    return Store(((sym, pop(j - 1, flag)),) + s.entries[1:])


def push(j: int, word: Sequence[str], s: Store) -> Store:
    """Write ``word`` at level ``j`` along the leftmost chain.

    At level 1 the first entry's symbol is replaced by the word, every new
    entry receiving a copy of the old flag; on the empty store only a
    single-letter word may be pushed (it gets an empty flag).  Higher levels
    recurse into the first entry's flag.
    """
    if j < 1:
        raise ValueError(f"push level must be >= 1, got {j}")
    if not word:
        raise ValueError("push word must be non-empty")
    if not s.entries:
        if j > 1:
            raise UndefinedPushError(f"push_{j} is undefined on the empty store")
        if len(word) > 1:
            raise UndefinedPushError(
                "push_1 on the empty store takes a single letter"
            )
        return Store(((word[0], EMPTY),))
    if j == 1:
        _, flag = s.entries[0]
        return Store(tuple((sym, flag) for sym in word) + s.entries[1:])
    sym, flag = s.entries[0]
    return Store(((sym, push(j - 1, word, flag)),) + s.entries[1:])
