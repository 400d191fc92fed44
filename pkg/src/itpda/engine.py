"""k-iterated pushdown automata: model, definition format, bounded runner.

An automaton reads an input word while rewriting an iterated pushdown store.
A transition fires when its source state matches, its pattern equals the
store's topsym exactly (token-sequence equality, not prefix matching) and its
input letter is the epsilon marker or the next unread letter.  A word is
accepted when some computation reaches empty input together with the empty
store, in any state.

Nondeterminism is resolved by exhaustive breadth-first search under explicit
budgets, so verdicts are Accepted, Rejected (search space exhausted) or
BudgetExhausted.  BFS guarantees that accepting traces are shortest.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Union

from .store import EMPTY, Store, StoreError, pop, push, topsym

DEFAULT_FUEL = 1_000_000


class Verdict(enum.Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class Pop:
    level: int

    def __str__(self) -> str:
        return f"pop{self.level}"


@dataclass(frozen=True)
class Push:
    level: int
    word: tuple[str, ...]

    def __str__(self) -> str:
        return f"push{self.level} {','.join(self.word)}"


Op = Union[Pop, Push]


@dataclass(frozen=True)
class Transition:
    """One instruction: (src, input-letter-or-None, pattern) -> (dst, op)."""

    src: str
    inp: Optional[str]
    pattern: tuple[str, ...]
    dst: str
    op: Op

    def __str__(self) -> str:
        inp = self.inp if self.inp is not None else "eps"
        return f"{self.src} {inp} {','.join(self.pattern)} -> {self.dst} {self.op}"


class AutomatonSyntaxError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class AutomatonSemanticError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


@dataclass(frozen=True)
class IterPda:
    """A k-iterated pushdown automaton over single-character input letters."""

    k: int
    states: tuple[str, ...]
    input_alphabet: tuple[str, ...]
    stack_alphabet: tuple[str, ...]
    transitions: tuple[Transition, ...]
    initial_state: str
    initial_symbol: str

    def __post_init__(self):
        _validate(self)

    @property
    def initial_store(self) -> Store:
        return Store(((self.initial_symbol, EMPTY),))

    @cached_property
    def _index(self) -> dict[tuple[str, tuple[str, ...]], tuple[Transition, ...]]:
        idx: dict[tuple[str, tuple[str, ...]], list[Transition]] = {}
        for t in self.transitions:
            idx.setdefault((t.src, t.pattern), []).append(t)
        return {key: tuple(ts) for key, ts in idx.items()}


def _validate(a: IterPda) -> None:
    if a.k < 1:
        raise AutomatonSemanticError(f"level count must be >= 1, got {a.k}")
    states = set(a.states)
    stack = set(a.stack_alphabet)
    inputs = set(a.input_alphabet)
    if len(states) != len(a.states):
        raise AutomatonSemanticError("duplicate state names")
    if len(stack) != len(a.stack_alphabet):
        raise AutomatonSemanticError("duplicate stack symbols")
    if len(inputs) != len(a.input_alphabet):
        raise AutomatonSemanticError("duplicate input letters")
    for c in a.input_alphabet:
        if len(c) != 1:
            raise AutomatonSemanticError(
                f"input letters must be single characters, got {c!r}"
            )
    if a.initial_state not in states:
        raise AutomatonSemanticError(f"unknown initial state {a.initial_state!r}")
    if a.initial_symbol not in stack:
        raise AutomatonSemanticError(f"unknown initial symbol {a.initial_symbol!r}")
    seen = set()
    for t in a.transitions:
        if t in seen:
            raise AutomatonSemanticError(f"duplicate transition: {t}")
        seen.add(t)
        if t.src not in states:
            raise AutomatonSemanticError(f"unknown state {t.src!r} in: {t}")
        if t.dst not in states:
            raise AutomatonSemanticError(f"unknown state {t.dst!r} in: {t}")
        if t.inp is not None and t.inp not in inputs:
            raise AutomatonSemanticError(f"unknown input letter {t.inp!r} in: {t}")
        if not t.pattern or len(t.pattern) > a.k:
            raise AutomatonSemanticError(
                f"pattern must have between 1 and k={a.k} symbols in: {t}"
            )
        for sym in t.pattern:
            if sym not in stack:
                raise AutomatonSemanticError(f"unknown stack symbol {sym!r} in: {t}")
        if not 1 <= t.op.level <= a.k:
            raise AutomatonSemanticError(
                f"operation level must be within 1..{a.k} in: {t}"
            )
        if isinstance(t.op, Push):
            if not t.op.word:
                raise AutomatonSemanticError(f"push word must be non-empty in: {t}")
            for sym in t.op.word:
                if sym not in stack:
                    raise AutomatonSemanticError(
                        f"unknown stack symbol {sym!r} in: {t}"
                    )


@dataclass(frozen=True)
class Configuration:
    state: str
    remaining: str
    store: Store

    def __str__(self) -> str:
        word = self.remaining if self.remaining else "ε"
        return f"({self.state}, {word}, {self.store})"


@dataclass
class RunOutcome:
    verdict: Verdict
    trace: Optional[tuple[tuple[Configuration, Optional[Transition]], ...]] = None
    expanded: int = 0


class NoAcceptingRunError(Exception):
    pass


def apply_op(op: Op, s: Store) -> Store:
    """Apply a pop or push instruction to a store; StoreError if undefined."""
    if isinstance(op, Pop):
        return pop(op.level, s)
    return push(op.level, op.word, s)


def step(a: IterPda, c: Configuration) -> list[tuple[Transition, Configuration]]:
    """All one-step successors of a configuration, in table order.

    A transition contributes a successor iff its source state and pattern
    match and its input letter is available; transitions whose operation is
    undefined on the store are skipped silently.
    """
    out = []
    for t in a._index.get((c.state, topsym(c.store)), ()):
        if t.inp is None:
            rest = c.remaining
        elif c.remaining and c.remaining[0] == t.inp:
            rest = c.remaining[1:]
        else:
            continue
        try:
            new_store = apply_op(t.op, c.store)
        except StoreError:
            continue
        out.append((t, Configuration(t.dst, rest, new_store)))
    return out


def run(
    a: IterPda,
    word: str,
    *,
    fuel: Optional[int] = DEFAULT_FUEL,
    store_cap: Optional[int] = None,
    flag_cap: Optional[int] = None,
    start_state: Optional[str] = None,
    start_store: Optional[Store] = None,
    goal_state: Optional[str] = None,
    goal_store: Optional[Store] = None,
    dedup: bool = True,
    keep_trace: bool = True,
) -> RunOutcome:
    """Bounded breadth-first membership search.

    Starts from ``(initial state, word, Z[])`` unless a start state/store is
    supplied, and accepts at empty input with empty store (or with the given
    goal state/store).  ``fuel`` bounds the number of expanded configurations
    (None = unbounded), ``store_cap`` prunes configurations whose store holds
    more total entries, and ``flag_cap`` prunes configurations in which some
    inner store grows longer than the cap.  Visited-set deduplication on
    exact configurations is on by default; callers searching trees with no
    reconverging paths may disable it to run in constant memory.
    """
    if fuel is not None and fuel < 1:
        raise ValueError("fuel must be positive")
    alphabet = set(a.input_alphabet)
    for ch in word:
        if ch not in alphabet:
            raise ValueError(f"input letter {ch!r} is not in the alphabet")

    n = len(word)
    s0 = start_state if start_state is not None else a.initial_state
    st0 = start_store if start_store is not None else a.initial_store
    want_store = goal_store if goal_store is not None else EMPTY

    def accepting(state: str, pos: int, store: Store) -> bool:
        if pos != n or store != want_store:
            return False
        return goal_state is None or state == goal_state

    index = a._index
    start_key = (s0, 0, st0)
    parents: Optional[dict] = {start_key: None} if keep_trace else None
    visited = {start_key} if dedup else None
    if accepting(s0, 0, st0):
        return RunOutcome(
            Verdict.ACCEPTED, _rebuild_trace(parents, start_key, word), 0
        )
    if (store_cap is not None and st0.size > store_cap) or (
        flag_cap is not None and st0.max_inner > flag_cap
    ):
        return RunOutcome(Verdict.REJECTED, None, 0)

    queue = deque((start_key,))
    expanded = 0
    while queue:
        if fuel is not None and expanded >= fuel:
            return RunOutcome(Verdict.BUDGET_EXHAUSTED, None, expanded)
        state, pos, store = queue.popleft()
        expanded += 1
        for t in index.get((state, topsym(store)), ()):
            if t.inp is None:
                npos = pos
            elif pos < n and word[pos] == t.inp:
                npos = pos + 1
            else:
                continue
            try:
                nstore = apply_op(t.op, store)
            except StoreError:
                continue
            if store_cap is not None and nstore.size > store_cap:
                continue
            # Ops touch only the leftmost chain, so given a compliant
            # predecessor the inner-store cap needs rechecking there only.
            if flag_cap is not None and _chain_exceeds(nstore, flag_cap):
                continue
            key = (t.dst, npos, nstore)
            if visited is not None:
                if key in visited:
                    continue
                visited.add(key)
            if parents is not None and key not in parents:
                parents[key] = ((state, pos, store), t)
            if accepting(*key):
                return RunOutcome(
                    Verdict.ACCEPTED, _rebuild_trace(parents, key, word), expanded
                )
            queue.append(key)
    return RunOutcome(Verdict.REJECTED, None, expanded)


def _chain_exceeds(s: Store, cap: int) -> bool:
    entries = s.entries
    while entries:
        inner = entries[0][1].entries
        if len(inner) > cap:
            return True
        entries = inner
    return False


def _rebuild_trace(parents, final_key, word):
    if parents is None:
        return None
    steps = [(_to_config(final_key, word), None)]
    key = final_key
    while parents[key] is not None:
        key, t = parents[key]
        steps.append((_to_config(key, word), t))
    steps.reverse()
    return tuple(steps)


def _to_config(key, word) -> Configuration:
    state, pos, store = key
    return Configuration(state, word[pos:], store)


def trace_accepting(a: IterPda, word: str, **kwargs) -> list[Configuration]:
    """The witness path of an accepting run, initial configuration first.

    Raises NoAcceptingRunError when the search does not accept under the
    given budgets.
    """
    kwargs.setdefault("keep_trace", True)
    outcome = run(a, word, **kwargs)
    if outcome.verdict is not Verdict.ACCEPTED or outcome.trace is None:
        raise NoAcceptingRunError(
            f"no accepting run for {word!r} ({outcome.verdict.value})"
        )
    return [c for c, _ in outcome.trace]


# ---------------------------------------------------------------------------
# Definition format
#
#   itpda 2
#   states q0 q1 q2
#   input a
#   stack Z X1 X2 F
#   init q0 Z
#   q0 eps Z,F -> q0 push2 F,F
#   q0 a   X1  -> q0 pop1
#
# Tokens are whitespace-separated, `#` starts a comment, patterns and push
# words are comma-separated symbol lists, ops are popJ / pushJ with
# 1 <= J <= k, and `eps` marks an epsilon transition.
# ---------------------------------------------------------------------------


def parse_automaton(text: str) -> IterPda:
    """Parse an automaton definition document (see module format notes)."""
    lines: list[tuple[int, list[str]]] = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((no, body.split()))

    if not lines:
        raise AutomatonSyntaxError("empty document")

    it = iter(lines)

    def expect(keyword: str, minimum: int) -> tuple[int, list[str]]:
        try:
            no, toks = next(it)
        except StopIteration:
            raise AutomatonSyntaxError(f"missing {keyword!r} declaration") from None
        if toks[0] != keyword:
            raise AutomatonSyntaxError(
                f"expected {keyword!r} declaration, got {toks[0]!r}", no
            )
        if len(toks) < minimum:
            raise AutomatonSyntaxError(f"incomplete {keyword!r} declaration", no)
        return no, toks

    no, toks = expect("itpda", 2)
    if len(toks) != 2 or not toks[1].isdigit() or int(toks[1]) < 1:
        raise AutomatonSyntaxError("itpda takes a positive level count", no)
    k = int(toks[1])

    _, toks = expect("states", 2)
    states = tuple(toks[1:])
    _, toks = expect("input", 1)
    input_alphabet = tuple(toks[1:])
    _, toks = expect("stack", 2)
    stack_alphabet = tuple(toks[1:])
    no, toks = expect("init", 3)
    if len(toks) != 3:
        raise AutomatonSyntaxError("init takes a state and a stack symbol", no)
    initial_state, initial_symbol = toks[1], toks[2]

    transitions = []
    for no, toks in it:
        transitions.append(_parse_transition(no, toks, k))

    return IterPda(
        k,
        states,
        input_alphabet,
        stack_alphabet,
        tuple(transitions),
        initial_state,
        initial_symbol,
    )


def _parse_transition(no: int, toks: list[str], k: int) -> Transition:
    if "->" not in toks:
        raise AutomatonSyntaxError("transition is missing '->'", no)
    arrow = toks.index("->")
    lhs, rhs = toks[:arrow], toks[arrow + 1 :]
    if len(lhs) != 3:
        raise AutomatonSyntaxError(
            "transition needs 'FROM INPUT PATTERN' before '->'", no
        )
    src, inp_tok, pattern_tok = lhs
    inp = None if inp_tok == "eps" else inp_tok
    pattern = tuple(sym for sym in pattern_tok.split(",") if sym)
    if not pattern:
        raise AutomatonSyntaxError("empty pattern", no)
    if len(rhs) < 2:
        raise AutomatonSyntaxError("transition needs 'TO OP' after '->'", no)
    dst, op_tok = rhs[0], rhs[1]
    if op_tok.startswith("pop"):
        level = _parse_level(no, op_tok, "pop", k)
        if len(rhs) != 2:
            raise AutomatonSyntaxError("pop takes no argument", no)
        op: Op = Pop(level)
    elif op_tok.startswith("push"):
        level = _parse_level(no, op_tok, "push", k)
        if len(rhs) != 3:
            raise AutomatonSyntaxError("push takes a comma-separated word", no)
        word = tuple(sym for sym in rhs[2].split(",") if sym)
        if not word:
            raise AutomatonSyntaxError("empty push word", no)
        op = Push(level, word)
    else:
        raise AutomatonSyntaxError(f"unknown operation {op_tok!r}", no)
    return Transition(src, inp, pattern, dst, op)


def _parse_level(no: int, op_tok: str, kind: str, k: int) -> int:
    digits = op_tok[len(kind) :]
    if not digits.isdigit():
        raise AutomatonSyntaxError(f"malformed operation {op_tok!r}", no)
    level = int(digits)
    if not 1 <= level <= k:
        raise AutomatonSemanticError(
            f"operation level {level} out of range 1..{k}", no
        )
    return level


def format_automaton(a: IterPda) -> str:
    """Render an automaton in the definition format (parses back equal)."""
    out = [
        f"itpda {a.k}",
        "states " + " ".join(a.states),
        "input " + " ".join(a.input_alphabet),
        "stack " + " ".join(a.stack_alphabet),
        f"init {a.initial_state} {a.initial_symbol}",
    ]
    for t in a.transitions:
        inp = t.inp if t.inp is not None else "eps"
        line = f"{t.src} {inp} {','.join(t.pattern)} -> {t.dst} "
        if isinstance(t.op, Pop):
            line += f"pop{t.op.level}"
        else:
            line += f"push{t.op.level} {','.join(t.op.word)}"
        out.append(line)
    return "\n".join(out) + "\n"
