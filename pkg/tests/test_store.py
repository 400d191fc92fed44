import pytest
from hypothesis import given
import hypothesis.strategies as st

from itpda.store import (
    EMPTY,
    Store,
    UndefinedPopError,
    UndefinedPushError,
    flat,
    pop,
    push,
    render,
    topsym,
)

from conftest import SYMBOLS, nonempty_stores, stores


def test_topsym_empty():
    assert topsym(EMPTY) == ()


def test_topsym_single_entry():
    assert topsym(flat(["Z"])) == ("Z",)


def test_topsym_reads_leftmost_chain_only():
    s = Store((("Z", flat(["F", "F"])),))
    assert topsym(s) == ("Z", "F")


def test_pop1_removes_entry_with_flag():
    s = Store((("X1", EMPTY), ("X2", EMPTY)))
    assert pop(1, s) == flat(["X2"])


def test_pop2_shortens_inner_store():
    s = Store((("X2", flat(["F", "F"])),))
    assert pop(2, s) == Store((("X2", flat(["F"])),))


def test_pop2_undefined_on_empty_flag():
    with pytest.raises(UndefinedPopError):
        pop(2, flat(["X1"]))


def test_pop_undefined_on_empty_store():
    with pytest.raises(UndefinedPopError):
        pop(1, EMPTY)


def test_push2_grows_flag():
    assert push(2, ["F"], flat(["Z"])) == Store((("Z", flat(["F"])),))


def test_push1_duplicates_flag_per_letter():
    inner = flat(["F"])
    s = Store((("X1", inner), ("Z", EMPTY)))
    out = push(1, ["X1", "X2"], s)
    assert out == Store((("X1", inner), ("X2", inner), ("Z", EMPTY)))


def test_push1_single_letter_on_empty():
    assert push(1, ["Z"], EMPTY) == flat(["Z"])


def test_push_undefined_cases():
    with pytest.raises(UndefinedPushError):
        push(2, ["F"], EMPTY)
    with pytest.raises(UndefinedPushError):
        push(1, ["X1", "X2"], EMPTY)


def test_render_format():
    assert render(EMPTY) == "ε"
    s = Store((("X1", flat(["F"])), ("X2", flat(["F"]))))
    assert render(s) == "X1[F[]].X2[F[]]"
    assert str(s) == render(s)


def test_depth_and_size():
    assert EMPTY.depth == 0 and EMPTY.size == 0
    s = Store((("Z", flat(["F", "F"])),))
    assert s.depth == 2
    assert s.size == 3
    assert s.max_inner == 2


@given(nonempty_stores)
def test_pop1_exposes_remainder(s):
    assert topsym(pop(1, s)) == topsym(Store(s.entries[1:]))


@given(nonempty_stores, st.lists(st.sampled_from(SYMBOLS), min_size=1, max_size=4))
def test_push1_counts_and_flags(s, word):
    out = push(1, word, s)
    assert len(out.entries) == len(word) + len(s.entries) - 1
    flag = s.entries[0][1]
    assert all(e[1] == flag for e in out.entries[: len(word)])
    assert out.entries[len(word) :] == s.entries[1:]


@given(nonempty_stores, st.sampled_from(SYMBOLS))
def test_level2_ops_touch_first_flag_only(s, sym):
    first_sym, flag = s.entries[0]
    if flag.entries:
        popped = pop(2, s)
        assert popped.entries[0][0] == first_sym
        assert popped.entries[1:] == s.entries[1:]
    pushed = push(2, [sym], s)
    assert pushed.entries[0][0] == first_sym
    assert pushed.entries[1:] == s.entries[1:]


@given(nonempty_stores, st.sampled_from(SYMBOLS))
def test_push2_then_pop2_restores_empty_flag(s, sym):
    if s.entries[0][1].entries:
        return  # identity only holds when the first flag starts empty
    assert pop(2, push(2, [sym], s)) == s


@given(stores)
def test_values_are_immutable(s):
    snapshot = render(s)
    if s.entries:
        pop(1, s)
        push(1, ["Z"], s)
        if s.entries[0][1].entries:
            pop(2, s)
    push_result = push(2, ["F"], s) if s.entries else None
    assert render(s) == snapshot
    assert push_result is None or push_result is not s


@given(st.data())
def test_depth_never_exceeds_level_bound(data):
    k = 2
    s = flat(["Z"])
    for _ in range(data.draw(st.integers(0, 12))):
        level = data.draw(st.integers(1, k))
        kind = data.draw(st.sampled_from(["pop", "push"]))
        word = data.draw(
            st.lists(st.sampled_from(SYMBOLS), min_size=1, max_size=2)
        )
        try:
            s = pop(level, s) if kind == "pop" else push(level, word, s)
        except (UndefinedPopError, UndefinedPushError):
            continue
        assert s.depth <= k
