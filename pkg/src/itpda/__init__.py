"""Iterated pushdown automata, tessellation tree grammars and contour words."""

from .store import (
    EMPTY,
    Store,
    StoreError,
    UndefinedPopError,
    UndefinedPushError,
    flat,
    pop,
    push,
    render,
    topsym,
)
from .engine import (
    AutomatonSemanticError,
    AutomatonSyntaxError,
    Configuration,
    IterPda,
    NoAcceptingRunError,
    Op,
    Pop,
    Push,
    RunOutcome,
    Transition,
    Verdict,
    apply_op,
    format_automaton,
    parse_automaton,
    run,
    step,
    trace_accepting,
)
from .automata import (
    HEPTAGRID,
    PENTAGRID,
    ContourParams,
    accepts_contour_exact,
    accepts_fibonacci_exact,
    branch_word,
    contour_automaton,
    fibonacci_automaton,
)
from .fib import fib, fib_index, fib_upto, is_fibonacci
from .grammars import (
    Grammar,
    LevelWord,
    contour_word,
    expand_level,
    level_counts,
    make_grammar,
    sample_variant_level,
)
from .words import (
    InvalidZeckendorfCode,
    RecurrencePair,
    growth_evidence,
    letter_at,
    pair_lengths,
    uw_pair,
    xy_pair,
    zeckendorf_decode,
    zeckendorf_encode,
)
from .disc import (
    NonHyperbolicError,
    RenderOptions,
    Tile,
    base_polygon,
    generate_tiles,
    reflect,
    to_svg,
)

__version__ = "0.1.0"
