"""Named property checks tying the modules to their independent oracles.

Each check returns pass/fail with a detail line; the CLI ``verify`` command
runs them all and the acceptance test suite runs the subset it pins at full
scale.  Quick mode shrinks sweep ranges, never tolerances.
"""

from __future__ import annotations

import math
import random
import time
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Callable, Optional

from . import disc
from .automata import (
    ContourParams,
    accepts_contour_exact,
    accepts_fibonacci_exact,
    contour_automaton,
    fibonacci_automaton,
)
from .engine import Configuration, Verdict, apply_op, run, step
from .fib import fib, is_fibonacci
from .grammars import Grammar, expand_level, contour_word, level_counts, sample_variant_level
from .store import EMPTY, Store, StoreError, flat, pop, push, topsym
from .words import growth_evidence, uw_pair, xy_pair, zeckendorf_decode, zeckendorf_encode

PHI_SQUARED = ((1 + math.sqrt(5)) / 2) ** 2

CONTOUR_CASES = (
    ContourParams(5, 5),
    ContourParams(5, 7),
    ContourParams(8, 8),
    ContourParams(7, 9),
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: str
    seconds: float


def check_fibonacci_language(quick: bool, seed: int) -> tuple[bool, str]:
    limit = 120 if quick else 500
    t0 = time.perf_counter()
    bad = [
        m
        for m in range(1, limit + 1)
        if (accepts_fibonacci_exact(m) is Verdict.ACCEPTED) != is_fibonacci(m)
    ]
    elapsed = time.perf_counter() - t0
    in_budget = elapsed < 10.0
    ok = not bad and in_budget
    return ok, f"m <= {limit}, {len(bad)} disagreements, {elapsed:.2f}s (budget 10s)"


def check_fib_block_consumption(quick: bool, seed: int) -> tuple[bool, str]:
    # From X2[F^k].rest the run consumes fib(k) letters and leaves rest;
    # from X1[F^k].rest it consumes fib(k+1).
    a = fibonacci_automaton()
    kmax = 8 if quick else 12
    runs = failures = 0
    for k in range(kmax + 1):
        inner = flat(["F"] * k)
        for rest in ((), (("X2", EMPTY),)):
            goal = Store(rest)
            for sym, letters in (("X2", fib(k)), ("X1", fib(k + 1))):
                start = Store(((sym, inner),) + rest)
                out = run(
                    a,
                    "a" * letters,
                    start_state="q0",
                    start_store=start,
                    goal_state="q0",
                    goal_store=goal,
                    keep_trace=False,
                )
                runs += 1
                if out.verdict is not Verdict.ACCEPTED:
                    failures += 1
    return failures == 0, f"{runs - failures}/{runs} block runs accepted (k <= {kmax})"


def check_contour_equivalence(quick: bool, seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    radii = range(5) if quick else range(9)
    mutations = 12 if quick else 100
    flips = {"b": "w", "w": "b"}
    false_rejects = false_accepts = cases = 0
    for cp in CONTOUR_CASES:
        g = Grammar(cp.tree_p, cp.sectors)
        for n in radii:
            word = contour_word(g, n)
            cases += 1
            if accepts_contour_exact(cp, word) is not Verdict.ACCEPTED:
                false_rejects += 1
            for _ in range(mutations):
                i = rng.randrange(len(word))
                mutant = word[:i] + flips[word[i]] + word[i + 1 :]
                if accepts_contour_exact(cp, mutant) is not Verdict.REJECTED:
                    false_accepts += 1
    detail = (
        f"{cases} canonical words, {cases * mutations} mutants: "
        f"{false_rejects} false rejects, {false_accepts} false accepts"
    )
    return false_rejects == 0 and false_accepts == 0, detail


def check_level_length_law(quick: bool, seed: int) -> tuple[bool, str]:
    g = Grammar(5, 5)
    nmax = 15
    ok = all(
        len(expand_level(g, "W", n)) == fib(2 * n + 1)
        and len(expand_level(g, "B", n)) == fib(2 * n)
        for n in range(nmax + 1)
    )
    return ok, f"white level n has fib(2n+1) nodes, black fib(2n), n <= {nmax}"


def check_recurrence_grammar_bridge(quick: bool, seed: int) -> tuple[bool, str]:
    bridge_n = 10 if quick else 15
    factor_n = 12 if quick else 20
    g0, g2 = Grammar(5, 5), Grammar(5, 5, white_variant=1)
    for n in range(bridge_n + 1):
        p, q = uw_pair(n), xy_pair(n)
        if p.second != expand_level(g0, "W", n).letters:
            return False, f"w_{n} differs from the level word"
        if p.first != expand_level(g0, "B", n).letters:
            return False, f"u_{n} differs from the level word"
        if q.second != expand_level(g2, "W", n).letters:
            return False, f"y_{n} differs from the level word"
        if q.first != expand_level(g2, "B", n).letters:
            return False, f"x_{n} differs from the level word"
    # factor laws along one incremental pass (second words get large)
    u, w = "B", "W"
    x, y = "B", "W"
    for n in range(factor_n):
        u2, w2 = u + w, u + w + w
        if not (w2.endswith(w) and u2.startswith(u) and w2 == u + w + w):
            return False, f"uw factor law fails at {n} -> {n + 1}"
        u, w = u2, w2
        x2, y2 = x + y, y + x + y
        if not (y2.endswith(y) and y2.startswith(y) and x2.startswith(x)):
            return False, f"xy factor law fails at {n} -> {n + 1}"
        x, y = x2, y2
    return True, f"letter-for-letter bridge n <= {bridge_n}, factor laws n <= {factor_n}"


def check_variant_invariance(quick: bool, seed: int) -> tuple[bool, str]:
    samples = 10 if quick else 50
    nmax = 6 if quick else 10
    g = Grammar(5, 5)
    for n in range(nmax + 1):
        blacks, whites = level_counts(g, n)
        for s in range(samples):
            lw = sample_variant_level(seed + s, n)
            if len(lw) != fib(2 * n + 1):
                return False, f"seed {seed + s} level {n} has wrong length"
            if lw.letters.count("B") != blacks or lw.letters.count("W") != whites:
                return False, f"seed {seed + s} level {n} has wrong color counts"
    return True, f"{samples} seeds per level, n <= {nmax}: lengths and counts match"


def check_zeckendorf(quick: bool, seed: int) -> tuple[bool, str]:
    roundtrip = 10_000 if quick else 100_000
    unique = 2_000 if quick else 10_000
    for m in range(1, roundtrip + 1):
        code = zeckendorf_encode(m)
        if "11" in code or zeckendorf_decode(code) != m:
            return False, f"round trip fails at {m}"
    # uniqueness: enumerate every no-consecutive-1 subset of the basis and
    # count the sums it can produce
    basis = []
    n = 1
    while fib(n) <= unique:
        basis.append(fib(n))
        n += 1
    seen: dict[int, int] = {}
    stack = [(0, 0)]  # (partial sum, smallest basis index still usable)
    while stack:
        total, start = stack.pop()
        for i in range(start, len(basis)):
            s = total + basis[i]
            if s <= unique:
                seen[s] = seen.get(s, 0) + 1
                stack.append((s, i + 2))  # skip the consecutive neighbour
    multiple = [m for m in range(1, unique + 1) if seen.get(m, 0) != 1]
    if multiple:
        return False, f"{len(multiple)} integers without a unique code"
    return True, f"round trip to {roundtrip}, uniqueness exhaustive to {unique}"


def check_growth_ratio(quick: bool, seed: int) -> tuple[bool, str]:
    ratio = float(growth_evidence(15))
    delta = abs(ratio - PHI_SQUARED)
    return delta < 1e-3, f"|w_16|/|w_15| = {ratio:.6f}, off golden-ratio^2 by {delta:.2e}"


def check_reflection_involution(quick: bool, seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    cases = 200 if quick else 1000
    worst = 0.0
    for _ in range(cases):
        pts = []
        while len(pts) < 3:
            z = complex(rng.uniform(-0.95, 0.95), rng.uniform(-0.95, 0.95))
            if abs(z) < 0.95:
                pts.append(z)
        a, b, z = pts
        if abs(a - b) < 0.05:
            continue
        back = disc.reflect((a, b), disc.reflect((a, b), z))
        worst = max(worst, abs(back - z))
    return worst < 1e-9, f"{cases} double reflections, worst error {worst:.2e}"


def check_tile_counts(quick: bool, seed: int) -> tuple[bool, str]:
    rmax = 3 if quick else 4
    for (p, q, s) in ((5, 4, 5), (7, 3, 7)):
        tiles = disc.generate_tiles(p, q, rmax)
        for r in range(rmax + 1):
            expected = 1 + s * sum(fib(2 * k + 1) for k in range(r))
            got = sum(1 for t in tiles if t.distance <= r)
            if got != expected:
                return False, f"{{{p},{q}}} radius {r}: {got} tiles, expected {expected}"
        centers = [t.center for t in tiles]
        closest = min(
            abs(a - b) for i, a in enumerate(centers) for b in centers[i + 1 :]
        )
        if closest <= 1e-8:
            return False, f"{{{p},{q}}}: centers {closest:.2e} apart (dedup margin)"
    return True, f"ball sizes match 1 + s*sum fib(2k+1) for radius <= {rmax}, both grids"


def check_svg_render(quick: bool, seed: int) -> tuple[bool, str]:
    depth = 3 if quick else 4
    t0 = time.perf_counter()
    tiles = disc.generate_tiles(5, 4, depth)
    svg = disc.to_svg(tiles, disc.RenderOptions(highlight=depth))
    elapsed = time.perf_counter() - t0
    root = ET.fromstring(svg)
    paths = [e for e in root if e.tag.endswith("path")]
    if len(paths) != len(tiles):
        return False, f"{len(paths)} paths for {len(tiles)} tiles"
    if svg != disc.to_svg(tiles, disc.RenderOptions(highlight=depth)):
        return False, "output is not deterministic"
    if elapsed >= 5.0:
        return False, f"depth-{depth} render took {elapsed:.2f}s (budget 5s)"
    return True, f"well-formed, deterministic, depth {depth} in {elapsed:.2f}s"


def check_store_operations(quick: bool, seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    symbols = ("Z", "X1", "X2", "F")
    cases = 100 if quick else 300

    def random_store(depth: int) -> Store:
        if depth == 0 or rng.random() < 0.25:
            return EMPTY
        width = rng.randint(1, 3)
        return Store(
            tuple((rng.choice(symbols), random_store(depth - 1)) for _ in range(width))
        )

    for _ in range(cases):
        s = random_store(3)
        if s.entries:
            rest = Store(s.entries[1:])
            if topsym(pop(1, s)) != topsym(rest):
                return False, "pop1 does not expose the remainder"
            word = tuple(rng.choice(symbols) for _ in range(rng.randint(1, 3)))
            pushed = push(1, word, s)
            if len(pushed.entries) != len(word) + len(s.entries) - 1:
                return False, "push1 entry count is off"
            flag = s.entries[0][1]
            if any(e[1] != flag for e in pushed.entries[: len(word)]):
                return False, "push1 does not duplicate the flag"
            if not flag.entries:
                if pop(2, push(2, (word[0],), s)) != s:
                    return False, "push2 then pop2 is not the identity"
            else:
                if pop(2, s).entries[1:] != s.entries[1:]:
                    return False, "pop2 modifies entries beyond the first"
    return True, f"{cases} random stores satisfy the operation laws"


def check_engine_step_exactness(quick: bool, seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    cases = 150 if quick else 400
    autos = (fibonacci_automaton(), contour_automaton(ContourParams(5, 5)))
    for _ in range(cases):
        a = rng.choice(autos)
        state = rng.choice(a.states)
        symbols = a.stack_alphabet
        width = rng.randint(0, 3)
        entries = tuple(
            (rng.choice(symbols), flat([rng.choice(symbols)] * rng.randint(0, 2)))
            for _ in range(width)
        )
        c = Configuration(
            state,
            "".join(rng.choice(a.input_alphabet) for _ in range(rng.randint(0, 3))),
            Store(entries),
        )
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
        if step(a, c) != brute:
            return False, f"step mismatch at {c}"
    # fuel monotonicity at a few budgets
    a = fibonacci_automaton()
    for m in (1, 4, 8):
        verdicts = [
            run(a, "a" * m, fuel=f, store_cap=30, keep_trace=False).verdict
            for f in (10, 100, 2000, 20000)
        ]
        decided = [v for v in verdicts if v is not Verdict.BUDGET_EXHAUSTED]
        if decided and any(v is not decided[0] for v in decided):
            return False, f"fuel monotonicity broken for m={m}: {verdicts}"
    return True, f"{cases} random configurations match the brute-force filter"


CHECKS: dict[str, Callable[[bool, int], tuple[bool, str]]] = {
    "fibonacci-language": check_fibonacci_language,
    "fib-block-consumption": check_fib_block_consumption,
    "contour-equivalence": check_contour_equivalence,
    "level-length-law": check_level_length_law,
    "recurrence-grammar-bridge": check_recurrence_grammar_bridge,
    "variant-invariance": check_variant_invariance,
    "zeckendorf": check_zeckendorf,
    "growth-ratio": check_growth_ratio,
    "reflection-involution": check_reflection_involution,
    "tile-counts": check_tile_counts,
    "svg-render": check_svg_render,
    "store-operations": check_store_operations,
    "engine-step-exactness": check_engine_step_exactness,
}


def run_check(name: str, quick: bool = False, seed: int = 0) -> CheckResult:
    fn = CHECKS[name]
    t0 = time.perf_counter()
    try:
        passed, details = fn(quick, seed)
    except Exception as exc:  # a crashing check is a failing check
        passed, details = False, f"raised {type(exc).__name__}: {exc}"
    return CheckResult(name, passed, details, time.perf_counter() - t0)


def run_all(quick: bool = False, seed: int = 0) -> list[CheckResult]:
    return [run_check(name, quick, seed) for name in CHECKS]
