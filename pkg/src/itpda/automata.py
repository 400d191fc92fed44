"""Built-in 2-level automata and exact membership deciders.

Two table constructors: the recognizer of a^m for Fibonacci m, and the
recognizer of ball contour words in {p,4} / {p+2,3} tessellations (the
pentagrid and heptagrid being the classic instances).  Both guess a level by
growing an inner store of F symbols, then commit and unwind.

The raw engine cannot reject on its own (the guessing phase is unbounded), so
the exact deciders bound the inner store: any accepting run keeps its inner
stores no longer than the level it committed to, which the input length pins
down.  Membership then becomes a terminating decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .engine import (
    IterPda,
    Pop,
    Push,
    Transition,
    Verdict,
    apply_op,
    run,
)
from .fib import fib, fib_index, is_fibonacci  # noqa: F401  (re-exported oracle)
from .store import Store, StoreError
from .store import pop as store_pop
from .store import push as store_push


@lru_cache(maxsize=None)
def fibonacci_automaton() -> IterPda:
    """The 2-level automaton accepting a^m exactly when m is Fibonacci."""
    t = _table(
        """
        q0 eps Z     -> q0 push2 F
        q0 eps Z     -> q0 push1 X2
        q0 eps Z,F   -> q0 push2 F,F
        q0 eps Z,F   -> q0 push1 X2
        q0 eps X1,F  -> q1 pop2
        q0 eps X2,F  -> q2 pop2
        q0 a   X1    -> q0 pop1
        q0 a   X2    -> q0 pop1
        q1 eps X1,F  -> q0 push1 X1,X2
        q2 eps X2,F  -> q0 push1 X1
        q1 eps X1    -> q0 push1 X1,X2
        q2 eps X2    -> q0 push1 X1
        """
    )
    return IterPda(
        k=2,
        states=("q0", "q1", "q2"),
        input_alphabet=("a",),
        stack_alphabet=("Z", "X1", "X2", "F"),
        transitions=t,
        initial_state="q0",
        initial_symbol="Z",
    )


@dataclass(frozen=True)
class ContourParams:
    """Tree parameter and sector count of a tessellation's contour language.

    ``tree_p`` is the p of the shared {p,4} / {p+2,3} spanning tree (white
    nodes have p-2 children, black ones p-3); ``sectors`` is how many copies
    of the tree surround the central tile.
    """

    tree_p: int
    sectors: int

    def __post_init__(self):
        if self.tree_p < 5:
            raise ValueError(f"tree_p must be >= 5, got {self.tree_p}")
        if self.sectors < 3:
            raise ValueError(f"sectors must be >= 3, got {self.sectors}")


PENTAGRID = ContourParams(tree_p=5, sectors=5)
HEPTAGRID = ContourParams(tree_p=5, sectors=7)


@lru_cache(maxsize=None)
def contour_automaton(cp: ContourParams) -> IterPda:
    """The 2-level automaton accepting the contour words of balls.

    The commit step lays down one white root per sector; white tops expand to
    B W^(p-3), black tops to B W^(p-4), once per remaining inner-store level;
    flat tops consume the matching lowercase input letter.
    """
    roots = ",".join(["W"] * cp.sectors)
    white = ",".join(["B"] + ["W"] * (cp.tree_p - 3))
    black = ",".join(["B"] + ["W"] * (cp.tree_p - 4))
    t = _table(
        f"""
        q0 eps Z    -> q0 push2 F
        q0 eps Z    -> q0 push1 {roots}
        q0 eps Z,F  -> q0 push2 F,F
        q0 eps Z,F  -> q0 push1 {roots}
        q0 eps W,F  -> q1 pop2
        q0 eps B,F  -> q1 pop2
        q0 b   B    -> q0 pop1
        q0 w   W    -> q0 pop1
        q1 eps W,F  -> q0 push1 {white}
        q1 eps B,F  -> q0 push1 {black}
        q1 eps W    -> q0 push1 {white}
        q1 eps B    -> q0 push1 {black}
        """
    )
    return IterPda(
        k=2,
        states=("q0", "q1"),
        input_alphabet=("b", "w"),
        stack_alphabet=("Z", "B", "W", "F"),
        transitions=t,
        initial_state="q0",
        initial_symbol="Z",
    )


def _table(spec_lines: str) -> tuple[Transition, ...]:
    out = []
    for line in spec_lines.strip().splitlines():
        toks = line.split()
        src, inp, pattern, _, dst, op_tok = toks[:6]
        level = int(op_tok[-1])
        op = Pop(level) if op_tok.startswith("pop") else Push(level, tuple(toks[6].split(",")))
        out.append(Transition(src, None if inp == "eps" else inp, tuple(pattern.split(",")), dst, op))
    return tuple(out)


def accepts_fibonacci_exact(m: int) -> Verdict:
    """Terminating decision of whether a^m is accepted.

    Any accepting run commits to some level k and then consumes exactly
    fib(k) letters, so levels whose Fibonacci value exceeds m are futile;
    capping the inner store at the first such level makes the search space
    finite.  Never returns BudgetExhausted.
    """
    if m < 0:
        raise ValueError("word length must be >= 0")
    cap = 0
    while fib(cap) <= m:
        cap += 1
    return run(
        fibonacci_automaton(),
        "a" * m,
        fuel=None,
        flag_cap=cap,
        dedup=False,
        keep_trace=False,
    ).verdict


def accepts_contour_exact(cp: ContourParams, word: str) -> Verdict:
    """Terminating decision of contour-word membership.

    Branch words (the unique word each committed level can consume) have
    strictly increasing lengths, so the input length determines the only
    candidate level; words whose length matches no level are rejected
    outright.  Never returns BudgetExhausted.
    """
    a = contour_automaton(cp)
    for candidate in _branch_words(a):
        if len(candidate) == len(word):
            return Verdict.ACCEPTED if candidate == word else Verdict.REJECTED
        if len(candidate) > len(word):
            return Verdict.REJECTED
    raise AssertionError("branch enumeration is infinite")  # pragma: no cover


def branch_word(a: IterPda, level: int) -> Optional[str]:
    """The unique input word consumable after committing at ``level``.

    Replays the table's guessing steps ``level`` times, applies the commit
    push, then follows the (checked) deterministic remainder of the run,
    collecting consumed letters.  None when the branch dies before emptying
    the store.  Raises ValueError if the table is not branch-deterministic.
    """
    state, store = _committed(a, level)
    return _deterministic_word(a, state, store)


_branch_memo: dict[IterPda, list[str]] = {}


def _branch_words(a: IterPda) -> Iterator[str]:
    words = _branch_memo.setdefault(a, [])
    level = 0
    while True:
        if level == len(words):
            w = branch_word(a, level)
            if w is None:
                raise ValueError(f"branch {level} of the table dies")
            if words and len(w) <= len(words[-1]):
                raise ValueError("branch word lengths are not increasing")
            words.append(w)
        yield words[level]
        level += 1


def _committed(a: IterPda, level: int) -> tuple[str, Store]:
    grow0, commit0 = _guess_rules(a, length=1)
    grow1, commit1 = _guess_rules(a, length=2)
    state, store = a.initial_state, a.initial_store
    if level == 0:
        return commit0.dst, apply_op(commit0.op, store)
    store = apply_op(grow0.op, store)
    state = grow0.dst
    for _ in range(level - 1):
        store = apply_op(grow1.op, store)
        state = grow1.dst
    return commit1.dst, apply_op(commit1.op, store)


def _guess_rules(a: IterPda, length: int) -> tuple[Transition, Transition]:
    z = a.initial_symbol
    rules = [
        t
        for t in a.transitions
        if t.src == a.initial_state
        and t.inp is None
        and len(t.pattern) == length
        and t.pattern[0] == z
    ]
    grows = [t for t in rules if isinstance(t.op, Push) and t.op.level == 2]
    commits = [t for t in rules if isinstance(t.op, Push) and t.op.level == 1]
    if len(grows) != 1 or len(commits) != 1 or len(rules) != 2:
        raise ValueError("table does not have the standard guessing shape")
    return grows[0], commits[0]


def _deterministic_word(a: IterPda, state: str, store: Store) -> Optional[str]:
    # The top-level entries live in a python list (top at the end) so the
    # table ops are amortized O(1) instead of copying a tuple per step; the
    # flags stay immutable Stores manipulated through pop/push.
    index = a._index
    chunks: list[str] = []
    stack = list(reversed(store.entries))
    while stack:
        sym, flag = stack[-1]
        ts = [sym]
        f = flag
        while f.entries:
            s2, f = f.entries[0]
            ts.append(s2)
        cands = index.get((state, tuple(ts)), ())
        if not cands:
            return None
        if len(cands) > 1:
            raise ValueError("branch of the table is not deterministic")
        t = cands[0]
        op = t.op
        if (
            t.inp is not None
            and t.dst == state
            and type(op) is Pop
            and op.level == 1
            and len(t.pattern) == 1
        ):
            # Sibling leaves form runs of identical flat entries; consume the
            # whole run in one step (same unique transition fires each time).
            r = 1
            i = len(stack) - 2
            while i >= 0 and stack[i][0] == sym and not stack[i][1].entries:
                r += 1
                i -= 1
            chunks.append(t.inp * r)
            del stack[len(stack) - r :]
            continue
        if type(op) is Pop:
            if op.level == 1:
                stack.pop()
            else:
                try:
                    stack[-1] = (sym, store_pop(op.level - 1, flag))
                except StoreError:
                    return None
        else:
            if op.level == 1:
                stack.pop()
                for w in reversed(op.word):
                    stack.append((w, flag))
            else:
                try:
                    stack[-1] = (sym, store_push(op.level - 1, op.word, flag))
                except StoreError:
                    return None
        if t.inp is not None:
            chunks.append(t.inp)
        state = t.dst
    return "".join(chunks)
