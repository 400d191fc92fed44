from importlib.resources import files

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from itpda.engine import (
    AutomatonSemanticError,
    AutomatonSyntaxError,
    Configuration,
    IterPda,
    NoAcceptingRunError,
    Pop,
    Push,
    Transition,
    Verdict,
    apply_op,
    format_automaton,
    parse_automaton,
    run,
    step,
    trace_accepting,
)
from itpda.store import EMPTY, Store, StoreError, flat, render, topsym

from conftest import store_strategy

FIB_DOC = (files("itpda") / "data" / "fibonacci.itpda").read_text()


@pytest.fixture(scope="module")
def fib_pda():
    return parse_automaton(FIB_DOC)


# --- parsing ----------------------------------------------------------------


def test_parse_counts(fib_pda):
    assert fib_pda.k == 2
    assert len(fib_pda.states) == 3
    assert len(fib_pda.transitions) == 12
    # the table has ten distinct (state, input, pattern) rules; two of them
    # carry a pair of instructions
    keys = {(t.src, t.inp, t.pattern) for t in fib_pda.transitions}
    assert len(keys) == 10


def test_parse_format_round_trip(fib_pda):
    assert parse_automaton(format_automaton(fib_pda)) == fib_pda


def test_parse_comments_and_blanks():
    doc = """
    # a comment
    itpda 1
    states q0   # trailing comment
    input a
    stack Z

    init q0 Z
    """
    a = parse_automaton(doc)
    assert a.transitions == ()


def test_parse_level_zero_is_semantic_error():
    doc = "itpda 2\nstates q0\ninput a\nstack Z F\ninit q0 Z\nq0 eps Z -> q0 push0 F\n"
    with pytest.raises(AutomatonSemanticError):
        parse_automaton(doc)


def test_parse_level_above_k_is_semantic_error():
    doc = "itpda 2\nstates q0\ninput a\nstack Z F\ninit q0 Z\nq0 eps Z -> q0 push3 F\n"
    with pytest.raises(AutomatonSemanticError):
        parse_automaton(doc)


def test_parse_unknown_symbol():
    doc = "itpda 2\nstates q0\ninput a\nstack Z\ninit q0 Z\nq0 eps Q -> q0 pop1\n"
    with pytest.raises(AutomatonSemanticError, match="unknown stack symbol"):
        parse_automaton(doc)


def test_parse_missing_arrow_reports_line():
    doc = "itpda 2\nstates q0\ninput a\nstack Z\ninit q0 Z\nq0 eps Z q0 pop1\n"
    with pytest.raises(AutomatonSyntaxError, match="line 6"):
        parse_automaton(doc)


def test_parse_pop_takes_no_argument():
    doc = "itpda 2\nstates q0\ninput a\nstack Z\ninit q0 Z\nq0 eps Z -> q0 pop1 Z\n"
    with pytest.raises(AutomatonSyntaxError):
        parse_automaton(doc)


def test_parse_duplicate_transition():
    doc = (
        "itpda 2\nstates q0\ninput a\nstack Z\ninit q0 Z\n"
        "q0 a Z -> q0 pop1\nq0 a Z -> q0 pop1\n"
    )
    with pytest.raises(AutomatonSemanticError, match="duplicate"):
        parse_automaton(doc)


def test_parse_multichar_input_letter_rejected():
    doc = "itpda 1\nstates q0\ninput ab\nstack Z\ninit q0 Z\n"
    with pytest.raises(AutomatonSemanticError, match="single characters"):
        parse_automaton(doc)


def test_parse_empty_document():
    with pytest.raises(AutomatonSyntaxError):
        parse_automaton("  \n# nothing\n")


# --- stepping ---------------------------------------------------------------


def test_step_guessing_branches(fib_pda):
    succ = step(fib_pda, Configuration("q0", "a", flat(["Z"])))
    stores = {render(c.store) for _, c in succ}
    assert stores == {"Z[F[]]", "X2[]"}
    assert all(c.remaining == "a" for _, c in succ)


def test_step_consumes_letter(fib_pda):
    succ = step(fib_pda, Configuration("q0", "a", flat(["X2"])))
    assert len(succ) == 1
    _, c = succ[0]
    assert (c.state, c.remaining, c.store) == ("q0", "", EMPTY)


def test_step_no_rule_matches(fib_pda):
    assert step(fib_pda, Configuration("q1", "a", flat(["Z"]))) == []


def test_step_exact_pattern_match_not_prefix(fib_pda):
    # with a non-empty flag the one-symbol rule must stay silent
    deep = Store((("X1", flat(["F"])),))
    patterns = {t.pattern for t, _ in step(fib_pda, Configuration("q0", "a", deep))}
    assert patterns == {("X1", "F")}


@settings(deadline=None)
@given(
    st.sampled_from(["q0", "q1", "q2"]),
    st.text(alphabet="a", max_size=3),
    store_strategy(max_leaves=6),
)
def test_step_agrees_with_brute_force(state, word, store):
    a = parse_automaton(FIB_DOC)
    c = Configuration(state, word, store)
    brute = []
    for t in a.transitions:
        if t.src != c.state or t.pattern != topsym(c.store):
            continue
        if t.inp is None:
            rest = c.remaining
        elif c.remaining and c.remaining[0] == t.inp:
            rest = c.remaining[1:]
        else:
            continue
        try:
            brute.append((t, Configuration(t.dst, rest, apply_op(t.op, c.store))))
        except StoreError:
            continue
    assert step(a, c) == brute


# --- running ----------------------------------------------------------------


def test_run_accepts_single_letter(fib_pda):
    assert run(fib_pda, "a", fuel=10_000).verdict is Verdict.ACCEPTED


def test_run_rejects_four_letters_under_cap(fib_pda):
    assert (
        run(fib_pda, "aaaa", fuel=10_000, store_cap=40).verdict is Verdict.REJECTED
    )


def test_run_budget_exhausted_without_caps(fib_pda):
    # the guessing phase is unbounded, so an uncapped search cannot reject
    assert run(fib_pda, "aaaa", fuel=200).verdict is Verdict.BUDGET_EXHAUSTED


def test_run_empty_table_rejects_empty_word():
    a = IterPda(1, ("q0",), ("a",), ("Z",), (), "q0", "Z")
    assert run(a, "", fuel=10).verdict is Verdict.REJECTED


def test_run_validates_input_letters(fib_pda):
    with pytest.raises(ValueError):
        run(fib_pda, "ab")


def test_trace_single_letter(fib_pda):
    path = trace_accepting(fib_pda, "a", fuel=10_000)
    assert [str(c) for c in path] == [
        "(q0, a, Z[])",
        "(q0, a, X2[])",
        "(q0, ε, ε)",
    ]


def test_trace_two_letters_guesses_level_two(fib_pda):
    path = trace_accepting(fib_pda, "aa", fuel=10_000)
    assert any(render(c.store) == "X2[F[].F[]]" for c in path)


def test_trace_raises_without_accepting_run(fib_pda):
    with pytest.raises(NoAcceptingRunError):
        trace_accepting(fib_pda, "aaaa", fuel=10_000, store_cap=40)


@pytest.mark.parametrize("m", [1, 2, 3, 5, 8])
def test_trace_replays_through_step(fib_pda, m):
    out = run(fib_pda, "a" * m, fuel=10_000)
    assert out.verdict is Verdict.ACCEPTED
    trace = out.trace
    assert trace[0][0] == Configuration("q0", "a" * m, fib_pda.initial_store)
    last, last_t = trace[-1]
    assert (last.remaining, last.store, last_t) == ("", EMPTY, None)
    for (c, t), (succ, _) in zip(trace, trace[1:]):
        assert c.store.depth <= fib_pda.k
        assert (t, succ) in step(fib_pda, c)


@pytest.mark.parametrize("m,expected", [(3, Verdict.ACCEPTED), (4, Verdict.REJECTED)])
def test_run_monotone_in_fuel(fib_pda, m, expected):
    decided_at = None
    for fuel in (5, 50, 500, 5_000, 50_000):
        verdict = run(fib_pda, "a" * m, fuel=fuel, store_cap=30).verdict
        if verdict is not Verdict.BUDGET_EXHAUSTED:
            assert verdict is expected
            if decided_at is None:
                decided_at = fuel
    assert decided_at is not None


def test_run_from_start_to_goal(fib_pda):
    # one block of X2 with a two-deep flag consumes exactly two letters
    start = Store((("X2", flat(["F", "F"])), ("X2", EMPTY)))
    goal = flat(["X2"])
    out = run(
        fib_pda,
        "aa",
        start_state="q0",
        start_store=start,
        goal_state="q0",
        goal_store=goal,
    )
    assert out.verdict is Verdict.ACCEPTED
    assert out.trace[-1][0].store == goal


def test_run_flag_cap_prunes_guessing(fib_pda):
    # with inner stores capped at 1 only lengths fib(0..2) remain reachable
    assert run(fib_pda, "aa", fuel=None, flag_cap=1).verdict is Verdict.REJECTED
    assert run(fib_pda, "a", fuel=None, flag_cap=1).verdict is Verdict.ACCEPTED


def test_run_rejects_noncompliant_start_store(fib_pda):
    start = Store((("X2", flat(["F", "F", "F"])),))
    out = run(fib_pda, "aaa", start_store=start, flag_cap=2)
    assert out.verdict is Verdict.REJECTED


def test_transition_str_round_trips_through_ops():
    t = Transition("q0", None, ("Z", "F"), "q1", Push(1, ("X1", "X2")))
    assert "push1" in str(t) and "eps" in str(t)
    assert apply_op(Pop(1), flat(["Z"])) == EMPTY
