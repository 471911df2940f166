"""Generators for the four graph families.

All four are defined over the alphabet P = {0, ..., p-1}:

  * sierpinski(p, n)          base family on words of length n; level 1 is
                              the complete graph, p = 2 gives paths
  * sierpinski_plus(p, n)     base family plus one apex joined to the p
                              extreme vertices i^n
  * sierpinski_plusplus(p, n) base family with a scaled copy one level
                              smaller glued onto the extremes
  * triangle(p, n)            the quotient of level n+1 under contraction
                              of all its non-clique edges

triangle_explicit builds the quotient from closed-form edge families
instead of contracting, and can cross-check itself against triangle.
"""

from __future__ import annotations

import itertools

from .addressing import (
    APEX_LABEL,
    EMPTY_WORD_LABEL,
    Contracted,
    Hat,
    format_vertex,
    word_separator,
)
from .graph_core import GraphError, LabeledGraph, build_graph, contract_edges, relabel

__all__ = [
    "expected_order",
    "expected_size",
    "nonclique_edges",
    "sierpinski",
    "sierpinski_plus",
    "sierpinski_plusplus",
    "triangle",
    "triangle_explicit",
]


def _check_params(p: int, n: int, n_min: int) -> None:
    if p < 1:
        raise ValueError(f"alphabet size must be positive, got {p}")
    if n < n_min:
        raise ValueError(f"level must be at least {n_min}, got {n}")


def _word_labels(p: int, n: int):
    if n == 0:
        return [EMPTY_WORD_LABEL]
    sep = word_separator(p)
    sym = [str(k) for k in range(p)]
    return [sep.join(t) for t in itertools.product(sym, repeat=n)]


def _sierpinski_edges(p: int, n: int):
    """Edges of the base family as label pairs.

    One edge per (d, s, i, j): the word s.i.j^(d-1) meets s.j.i^(d-1).
    d = 1 gives the p-cliques on sibling words, d >= 2 the bridges
    between subcopies.
    """
    sep = word_separator(p)
    sym = [str(k) for k in range(p)]
    for d in range(1, n + 1):
        for s in itertools.product(sym, repeat=n - d):
            base = list(s)
            for i in range(p):
                si = sym[i]
                for j in range(i + 1, p):
                    sj = sym[j]
                    yield (
                        sep.join(base + [si] + [sj] * (d - 1)),
                        sep.join(base + [sj] + [si] * (d - 1)),
                    )


def sierpinski(p: int, n: int) -> LabeledGraph:
    """The base graph on p^n words."""
    _check_params(p, n, 0)
    return build_graph(_word_labels(p, n), _sierpinski_edges(p, n))


def sierpinski_plus(p: int, n: int) -> LabeledGraph:
    """Base graph plus an apex adjacent to the p extreme vertices."""
    _check_params(p, n, 1)
    sep = word_separator(p)
    extremes = [sep.join([str(i)] * n) for i in range(p)]
    edges = itertools.chain(
        _sierpinski_edges(p, n), ((APEX_LABEL, e) for e in extremes)
    )
    return build_graph(_word_labels(p, n) + [APEX_LABEL], edges)


def sierpinski_plusplus(p: int, n: int) -> LabeledGraph:
    """Base graph with an extra copy one level smaller glued on.

    The copy's word u is labeled "p:u"; its extreme i^(n-1) is joined to
    the host extreme i^n, so every host extreme gets one new neighbor.
    """
    _check_params(p, n, 1)
    sep = word_separator(p)
    copy = [f"{p}:{sep.join(t)}" for t in itertools.product([str(k) for k in range(p)], repeat=n - 1)]
    extremes = [
        (f"{p}:{sep.join([str(i)] * (n - 1))}", sep.join([str(i)] * n))
        for i in range(p)
    ]
    edges = itertools.chain(
        _sierpinski_edges(p, n),
        ((f"{p}:{u}", f"{p}:{v}") for u, v in _sierpinski_edges(p, n - 1)),
        extremes,
    )
    return build_graph(_word_labels(p, n) + copy, edges)


def nonclique_edges(p: int, m: int):
    """The d >= 2 edges of the level-m base graph, tagged with the quotient
    vertex each one collapses to.

    Returns a list of (u, v, name) label triples.  These edges form a
    perfect matching on the non-extreme words: every such word has a
    unique maximal trailing constant run, which pins down its single
    d >= 2 edge.
    """
    _check_params(p, m, 1)
    sep = word_separator(p)
    sym = [str(k) for k in range(p)]
    out = []
    for d in range(2, m + 1):
        for s in itertools.product(sym, repeat=m - d):
            base = list(s)
            for i in range(p):
                si = sym[i]
                for j in range(i + 1, p):
                    sj = sym[j]
                    u = sep.join(base + [si] + [sj] * (d - 1))
                    v = sep.join(base + [sj] + [si] * (d - 1))
                    name = f"{sep.join(base)}:{{{i},{j}}}"
                    out.append((u, v, name))
    return out


def triangle(p: int, n: int) -> LabeledGraph:
    """Quotient of the level n+1 base graph: contract every non-clique
    edge, then rename the surviving extremes i^(n+1) to corners "^i"."""
    _check_params(p, n, 0)
    if p < 2:
        raise ValueError(f"the quotient family needs at least 2 symbols, got {p}")
    g = sierpinski(p, n + 1)
    matching = nonclique_edges(p, n + 1)
    names = {frozenset((u, v)): name for u, v, name in matching}
    h = contract_edges(g, ((u, v) for u, v, _ in matching), lambda u, v: names[frozenset((u, v))])
    del g
    sep = word_separator(p)
    corners = {sep.join([str(i)] * (n + 1)): f"^{i}" for i in range(p)}
    return relabel(h, lambda v: corners.get(v, v))


def _explicit_edges(p: int, n: int):
    """Closed-form edge families of the quotient graph, as vertex objects."""
    rng = range(p)

    def words(length):
        return itertools.product(rng, repeat=length)

    if n == 0:
        for a, b in itertools.combinations(rng, 2):
            yield Hat(a), Hat(b)
        return

    # corner k hangs off the depth n-1 vertices over the prefix k^(n-1)
    for k in rng:
        kp = (k,) * (n - 1)
        for j in rng:
            if j != k:
                yield Hat(k), Contracted(kp, (min(j, k), max(j, k)))

    # triples at the deepest level sharing a prefix and a symbol
    for s in words(n - 1):
        for i in rng:
            others = [j for j in rng if j != i]
            for a, b in itertools.combinations(others, 2):
                yield (
                    Contracted(s, (min(i, a), max(i, a))),
                    Contracted(s, (min(i, b), max(i, b))),
                )

    # each shallower vertex {i,k} over s reaches the deepest level through
    # the run s.k.i.i...i; j = k is allowed
    for v in range(1, n):
        tail_len = n - 1 - v
        for s in words(v - 1):
            for i in rng:
                for k in rng:
                    if k == i:
                        continue
                    deep_prefix = s + (k,) + (i,) * tail_len
                    for j in rng:
                        if j == i:
                            continue
                        yield (
                            Contracted(deep_prefix, (min(i, j), max(i, j))),
                            Contracted(s, (min(i, k), max(i, k))),
                        )


def triangle_explicit(p: int, n: int, cross_check: bool = True) -> LabeledGraph:
    """The quotient graph built directly from closed-form edge families,
    without constructing the level n+1 parent.

    With cross_check the contraction-based construction is also built and
    any edge discrepancy raises GraphError.
    """
    _check_params(p, n, 0)
    if p < 2:
        raise ValueError(f"the quotient family needs at least 2 symbols, got {p}")
    vertices = [format_vertex(Hat(k), p) for k in range(p)]
    for length in range(n):
        for s in itertools.product(range(p), repeat=length):
            for pair in itertools.combinations(range(p), 2):
                vertices.append(format_vertex(Contracted(s, pair), p))
    edges = set()
    for u, v in _explicit_edges(p, n):
        lu, lv = format_vertex(u, p), format_vertex(v, p)
        edges.add((min(lu, lv), max(lu, lv)))
    if len(edges) != expected_size("hat", p, n):
        raise GraphError(
            f"explicit edge families produced {len(edges)} edges, "
            f"expected {expected_size('hat', p, n)}"
        )
    g = build_graph(vertices, edges)
    if cross_check:
        h = triangle(p, n)
        if g != h:
            ge, he = set(g.edges()), set(h.edges())
            raise GraphError(
                "explicit and contracted constructions disagree: "
                f"{sorted(ge - he)[:5]} only explicit, "
                f"{sorted(he - ge)[:5]} only contracted"
            )
    return g


def expected_order(family: str, p: int, n: int) -> int:
    """Closed-form vertex count for a family at (p, n)."""
    if family == "s":
        return p**n
    if family == "plus":
        return p**n + 1
    if family == "pp":
        return (p + 1) * p ** (n - 1)
    if family == "hat":
        num = p * (p**n + 1)
        assert num % 2 == 0
        return num // 2
    raise ValueError(f"unknown family {family!r}")


def expected_size(family: str, p: int, n: int) -> int:
    """Closed-form edge count for a family at (p, n)."""
    if family == "s":
        num = p * (p**n - 1)
    elif family == "plus":
        num = p * (p**n + 1)
    elif family == "pp":
        num = (p + 1) * p**n
    elif family == "hat":
        num = (p - 1) * p ** (n + 1)
    else:
        raise ValueError(f"unknown family {family!r}")
    assert num % 2 == 0
    return num // 2
