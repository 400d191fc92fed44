"""Substitution grammars over black/white node colors.

One grammar drives one family of trees: a white node has p-2 children and a
black node p-3, each batch containing exactly one black child.  The variant
indices pick where the black child sits; leaving them fixed gives the
deterministic trees, seeding the grammar instead draws a fresh variant for
every node.  Level words are computed by iterated word substitution, never by
materializing trees.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

COLORS = ("B", "W")


@dataclass(frozen=True)
class Grammar:
    tree_p: int
    sectors: int
    white_variant: int = 0
    black_variant: int = 0
    seed: Optional[int] = None  # set -> per-node random variant choice

    def __post_init__(self):
        p = self.tree_p
        if p < 5:
            raise ValueError(f"tree_p must be >= 5, got {p}")
        if self.sectors < 3:
            raise ValueError(f"sectors must be >= 3, got {self.sectors}")
        if not 0 <= self.white_variant <= p - 3:
            raise ValueError(f"white_variant must be in 0..{p - 3}")
        if not 0 <= self.black_variant <= p - 4:
            raise ValueError(f"black_variant must be in 0..{p - 4}")

    @property
    def white_arity(self) -> int:
        return self.tree_p - 2

    @property
    def black_arity(self) -> int:
        return self.tree_p - 3

    def white_children(self, variant: Optional[int] = None) -> str:
        v = self.white_variant if variant is None else variant
        return "W" * v + "B" + "W" * (self.white_arity - 1 - v)

    def black_children(self, variant: Optional[int] = None) -> str:
        v = self.black_variant if variant is None else variant
        return "W" * v + "B" + "W" * (self.black_arity - 1 - v)


@dataclass(frozen=True)
class LevelWord:
    letters: str
    level: int

    def __len__(self) -> int:
        return len(self.letters)


def make_grammar(
    preset: str,
    *,
    seed: Optional[int] = None,
    p: Optional[int] = None,
    sectors: Optional[int] = None,
) -> Grammar:
    """Named grammar presets.

    G0 and G1 are the canonical pentagrid trees (black child first), G2 puts
    the white node's black child in second position, G3 samples a variant per
    node from ``seed``, and Gp generalizes to {p,4} / {p+2,3} with ``p`` and
    an optional sector count (defaults to p).
    """
    if preset in ("G0", "G1"):
        return Grammar(5, 5)
    if preset == "G2":
        return Grammar(5, 5, white_variant=1)
    if preset == "G3":
        return Grammar(5, 5, seed=seed if seed is not None else 0)
    if preset == "Gp":
        if p is None:
            raise ValueError("preset Gp needs p")
        return Grammar(p, sectors if sectors is not None else p)
    raise ValueError(f"unknown preset {preset!r}")


def expand_level(g: Grammar, root: str, n: int) -> LevelWord:
    """Left-to-right colors of level n of the tree rooted at ``root``."""
    if root not in COLORS:
        raise ValueError(f"root must be one of {COLORS}, got {root!r}")
    if n < 0:
        raise ValueError("level must be >= 0")
    word = root
    if g.seed is None:
        table = {ord("W"): g.white_children(), ord("B"): g.black_children()}
        for _ in range(n):
            word = word.translate(table)
        return LevelWord(word, n)

    rng = random.Random(g.seed)
    nw, nb = g.white_arity, g.black_arity
    for _ in range(n):
        chunks = []
        for c in word:
            if c == "W":
                chunks.append(g.white_children(rng.randrange(nw)))
            else:
                chunks.append(g.black_children(rng.randrange(nb)))
        word = "".join(chunks)
    return LevelWord(word, n)


def contour_word(g: Grammar, n: int) -> str:
    """Border word of the radius-n ball: one level word per sector, lowercased."""
    return (expand_level(g, "W", n).letters * g.sectors).lower()


def level_counts(g: Grammar, n: int) -> tuple[int, int]:
    """(black, white) node counts on level n below a white root.

    Every node contributes exactly one black child, so blacks(n+1) is the
    whole level n; whites multiply per the arities.
    """
    if n < 0:
        raise ValueError("level must be >= 0")
    p = g.tree_p
    blacks, whites = 0, 1
    for _ in range(n):
        blacks, whites = blacks + whites, (p - 4) * blacks + (p - 3) * whites
    return blacks, whites


def sample_variant_level(seed: int, n: int) -> LevelWord:
    """Level word of a per-node random pentagrid tree drawn from ``seed``."""
    return expand_level(make_grammar("G3", seed=seed), "W", n)
