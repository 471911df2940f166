"""Induced-forest constructions for the word-based families.

The engine is a closure operator on "pairable" word sets.  A set of words
of equal length is pairable when grouping by head (all symbols but the
last) yields exactly two words per occupied head.  The closure of one
block {s.a, s.b} lives one level deeper:

    from the block's own heads:   {saa, sab} and {sba, sbb}
    from every other symbol k:    {sk(k-1), sk(k+1)}   (mod p)

Closing the seed {1, 2} a total of n-1 times produces a 2p^(n-1)-vertex
set inducing a forest in the level-n base graph; its complement is a
minimum feedback vertex set.  Small alphabet variants for the plus and
plusplus families are built on top.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .addressing import (
    APEX_LABEL,
    EMPTY_WORD_LABEL,
    format_word,
    parse_word,
    word_separator,
)
from .generators import sierpinski_plusplus
from .graph_core import find_cycle

__all__ = [
    "NotPairableError",
    "PairablePartition",
    "closure",
    "closure_block",
    "closure_split",
    "forest_plus",
    "forest_plusplus",
    "forest_sierpinski",
    "fvs_sierpinski",
    "pairable_partition",
]


class NotPairableError(ValueError):
    """Raised when a word set admits no head-disjoint pairing."""

    def __init__(self, head_label: str, count: int):
        super().__init__(
            f"head {head_label!r} holds {count} word(s), needs exactly 2"
        )
        self.head = head_label


@dataclass(frozen=True)
class PairablePartition:
    """The unique block partition of a pairable word set.

    blocks holds (word, word) pairs ordered within each block and between
    blocks; both words of a block share a head and differ in the last
    symbol.
    """

    blocks: tuple

    @property
    def heads(self) -> tuple:
        return tuple(b[0][:-1] for b in self.blocks)

    def words(self) -> frozenset:
        return frozenset(w for b in self.blocks for w in b)

    def labels(self, p: int) -> frozenset:
        return frozenset(format_word(w, p) for w in self.words())

    def __len__(self) -> int:
        return 2 * len(self.blocks)


def pairable_partition(labels, p: int) -> PairablePartition:
    """Group a word set into its pairable blocks.

    Words must all have the same positive length.  Fails with
    NotPairableError if any head does not hold exactly two words.
    """
    words = sorted(parse_word(str(s), p) for s in labels)
    if len(set(words)) != len(words):
        raise ValueError("duplicate words in input")
    if words and any(len(w) != len(words[0]) for w in words):
        raise ValueError("words of mixed lengths")
    if words and len(words[0]) == 0:
        raise ValueError("the empty word cannot be paired")
    by_head = {}
    for w in words:
        by_head.setdefault(w[:-1], []).append(w)
    for head, group in sorted(by_head.items()):
        if len(group) != 2:
            label = format_word(head, p) or EMPTY_WORD_LABEL
            raise NotPairableError(label, len(group))
    return PairablePartition(
        tuple((g[0], g[1]) for _, g in sorted(by_head.items()))
    )


def _closure_block_split(block, p: int):
    """One block's closure, split into its head-extending part and the
    other-symbol part.  block is a pair of word tuples."""
    if p < 3:
        raise ValueError(f"the closure needs at least 3 symbols, got {p}")
    wa, wb = block
    s, a, b = wa[:-1], wa[-1], wb[-1]
    if wb[:-1] != s or a == b:
        raise ValueError(f"not a block: {block!r}")
    own = [
        ((*s, a, a), (*s, a, b)),
        ((*s, b, a), (*s, b, b)),
    ]
    other = [
        ((*s, k, (k - 1) % p), (*s, k, (k + 1) % p))
        for k in range(p)
        if k != a and k != b
    ]
    return own, other


def closure_block(block, p: int) -> set:
    """All 2p labels one level below a single block.

    block may be given as labels or word tuples; the two words must share
    a head.
    """
    pair = tuple(sorted(w if isinstance(w, tuple) else parse_word(str(w), p) for w in block))
    if len(pair) != 2:
        raise ValueError(f"a block has exactly 2 words, got {len(pair)}")
    own, other = _closure_block_split(pair, p)
    return {format_word(w, p) for blk in own + other for w in blk}


def closure(partition: PairablePartition, p: int) -> PairablePartition:
    """Close every block; the result is pairable with p times as many
    words, its heads being every one-symbol extension of the old heads."""
    blocks = []
    for block in partition.blocks:
        own, other = _closure_block_split(block, p)
        blocks.extend(own)
        blocks.extend(other)
    blocks.sort()
    heads = [b[0][:-1] for b in blocks]
    assert len(set(heads)) == len(heads)
    return PairablePartition(tuple(blocks))


def closure_split(partition: PairablePartition, p: int):
    """The closure's words split by origin: (head-extending part,
    other-symbol part).  No edge of the level-m base graph joins the two
    parts, which is what makes the closure induce a forest."""
    part1, part2 = set(), set()
    for block in partition.blocks:
        own, other = _closure_block_split(block, p)
        part1.update(format_word(w, p) for blk in own for w in blk)
        part2.update(format_word(w, p) for blk in other for w in blk)
    return frozenset(part1), frozenset(part2)


def _seed(a: int, b: int) -> PairablePartition:
    return PairablePartition((((a,), (b,)),))


def _closed_labels(seed: PairablePartition, p: int, n: int) -> set:
    part = seed
    for _ in range(n - 1):
        part = closure(part, p)
    return set(part.labels(p))


def forest_sierpinski(p: int, n: int) -> set:
    """A maximum induced forest of the level-n base graph, as labels.

    For p >= 3 this is the (n-1)-fold closure of {1, 2}, of size
    2p^(n-1).  For p = 2 the graph is a path, so everything is returned.
    """
    if p < 2:
        raise ValueError(f"need at least 2 symbols, got {p}")
    if n < 1:
        raise ValueError(f"level must be at least 1, got {n}")
    if p == 2:
        sep = word_separator(p)
        return {sep.join(t) for t in itertools.product("01", repeat=n)}
    return _closed_labels(_seed(1, 2), p, n)


def fvs_sierpinski(p: int, n: int) -> set:
    """Complement of forest_sierpinski: a minimum feedback vertex set of
    size p^(n-1) * (p-2)."""
    forest = forest_sierpinski(p, n)
    sep = word_separator(p)
    sym = [str(k) for k in range(p)]
    return {sep.join(t) for t in itertools.product(sym, repeat=n)} - forest


def forest_plus(p: int, n: int) -> set:
    """Maximum induced forest of the apex family.

    Swaps the extreme 1^n out of the base forest for the word 1^(n-1).0
    and the apex; the apex then has only the extreme 2^n as a forest
    neighbor.  Needs n >= 2 for p >= 3: at n = 1 the graph is complete
    and no forest of this size exists.
    """
    if p < 2:
        raise ValueError(f"need at least 2 symbols, got {p}")
    if n < 1:
        raise ValueError(f"level must be at least 1, got {n}")
    if p == 2:
        return forest_sierpinski(2, n)
    if n == 1:
        raise ValueError("no level-1 construction: the apex graph is complete")
    sep = word_separator(p)
    forest = forest_sierpinski(p, n)
    forest.remove(sep.join(["1"] * n))
    forest.add(sep.join(["1"] * (n - 1) + ["0"]))
    forest.add(APEX_LABEL)
    return forest


def _copy_seed(p: int) -> PairablePartition:
    # the copy's forest must keep its extremes off the host's attachment
    # points; {3,4} does that outright, the small alphabets get the best
    # available substitute
    if p >= 5:
        return _seed(3, 4)
    if p == 4:
        return _seed(0, 3)
    return _seed(0, 1)


def forest_plusplus(p: int, n: int) -> set:
    """Maximum induced forest of the extended family: the host forest plus
    a forest of the attached copy.

    The copy seed is chosen so that at most one attachment edge lands
    inside the union, and that one (p = 3 only) bridges two components.
    The union is checked for acyclicity; a cycle raises ValueError with
    the cycle as witness.
    """
    if p < 2:
        raise ValueError(f"need at least 2 symbols, got {p}")
    if n < 1:
        raise ValueError(f"level must be at least 1, got {n}")
    sep = word_separator(p)
    if p == 2:
        host = {sep.join(t) for t in itertools.product("01", repeat=n)}
        copy = {f"2:{sep.join(t)}" for t in itertools.product("01", repeat=n - 1)}
        return (host | copy) - {sep.join(["0"] * n)}
    if n < 2:
        raise ValueError("no level-1 construction: the copy collapses to a point")
    host = forest_sierpinski(p, n)
    copy_words = _closed_labels(_copy_seed(p), p, n - 1)
    union = host | {f"{p}:{w}" for w in copy_words}
    cycle = find_cycle(sierpinski_plusplus(p, n), union)
    if cycle is not None:
        raise ValueError(f"construction induced a cycle: {cycle}")
    return union
