import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from itpda.fib import fib
from itpda.grammars import (
    Grammar,
    contour_word,
    expand_level,
    level_counts,
    make_grammar,
    sample_variant_level,
)


def test_presets():
    g0 = make_grammar("G0")
    assert (g0.tree_p, g0.sectors, g0.white_variant, g0.black_variant) == (5, 5, 0, 0)
    assert make_grammar("G1") == g0
    assert make_grammar("G2").white_variant == 1
    assert make_grammar("G3", seed=9).seed == 9
    gp = make_grammar("Gp", p=8, sectors=8)
    assert (gp.white_arity, gp.black_arity) == (6, 5)


def test_preset_errors():
    with pytest.raises(ValueError):
        make_grammar("G9")
    with pytest.raises(ValueError):
        make_grammar("Gp")
    with pytest.raises(ValueError):
        Grammar(4, 5)
    with pytest.raises(ValueError):
        Grammar(5, 5, white_variant=3)


def test_children_variants_cover_all_positions():
    g = Grammar(5, 5)
    assert [g.white_children(v) for v in range(3)] == ["BWW", "WBW", "WWB"]
    assert [g.black_children(v) for v in range(2)] == ["BW", "WB"]


def test_expand_level_first_levels():
    g0 = make_grammar("G0")
    assert expand_level(g0, "W", 0).letters == "W"
    assert expand_level(g0, "W", 1).letters == "BWW"
    assert expand_level(make_grammar("G2"), "W", 1).letters == "WBW"
    assert len(expand_level(g0, "W", 3)) == 21


def test_expand_level_validation():
    with pytest.raises(ValueError):
        expand_level(make_grammar("G0"), "Q", 1)
    with pytest.raises(ValueError):
        expand_level(make_grammar("G0"), "W", -1)


def test_recursion_identity():
    g = make_grammar("G2")
    for n in range(5):
        children = g.white_children()
        joined = "".join(expand_level(g, c, n).letters for c in children)
        assert expand_level(g, "W", n + 1).letters == joined


def test_contour_words():
    assert contour_word(make_grammar("G0"), 1) == "bww" * 5
    assert contour_word(Grammar(5, 7), 0) == "w" * 7
    assert contour_word(Grammar(8, 8), 1) == ("b" + "w" * 5) * 8


def test_level_counts_examples():
    g = Grammar(5, 5)
    assert level_counts(g, 0) == (0, 1)
    assert level_counts(g, 3) == (8, 13)
    assert sum(level_counts(g, 15)) == fib(31)


@pytest.mark.parametrize("p", [5, 6, 8])
def test_level_counts_match_expansion_tallies(p):
    g = Grammar(p, p)
    for n in range(7):
        word = expand_level(g, "W", n).letters
        assert level_counts(g, n) == (word.count("B"), word.count("W"))


def test_level_length_law():
    g = Grammar(5, 5)
    for n in range(12):
        assert len(expand_level(g, "W", n)) == fib(2 * n + 1)
        assert len(expand_level(g, "B", n)) == fib(2 * n)


def test_sampling_is_reproducible():
    a = sample_variant_level(42, 6)
    b = sample_variant_level(42, 6)
    assert a == b
    assert sample_variant_level(43, 6) != a


def test_sampling_level_zero():
    assert sample_variant_level(0, 0).letters == "W"


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 2**32 - 1), st.integers(0, 7))
def test_sampled_lengths_and_counts_are_variant_independent(seed, n):
    lw = sample_variant_level(seed, n)
    assert len(lw) == fib(2 * n + 1)
    blacks, whites = level_counts(Grammar(5, 5), n)
    assert lw.letters.count("B") == blacks
    assert lw.letters.count("W") == whites
