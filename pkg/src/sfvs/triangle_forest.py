"""Feedback-set and induced-forest constructions for the contracted
(triangle) family, plus their closed-form order predictors.

Two constructions live here.  For a 3-symbol alphabet, a recursive minimum
feedback set is assembled from three twisted copies of the previous level:
copy j is re-colored by a cyclic symbol permutation before being embedded
into subtriangle j, which makes the three copies overlap in exactly one
vertex per pair and keeps exactly one corner in the set.

For alphabets of size at least 4 the roles flip and the object built is a
large induced linear forest: corner-to-corner paths through each even
subtriangle pair, glued copies one level up, with the top-level vertices
joining two even corners removed to break the resulting cycles.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

from .addressing import Contracted, Hat, format_vertex, prefix_triangle
from .generators import expected_order, triangle
from .graph_core import LabeledGraph, find_cycle

__all__ = [
    "GapReport",
    "StructureReport",
    "conjecture_gap",
    "corner_path_base",
    "forest_order_bound",
    "forest_order_recurrence",
    "forest_order_small",
    "forest_triangle",
    "fvs_triangle3",
    "structure_report",
    "tail_path_base",
]

# cyclic recolorings used by the 3-symbol recursion; _SIGMA[j][k] is the
# image of symbol k in copy j
_SIGMA = ((0, 1, 2), (2, 0, 1), (1, 2, 0))


def _permute(v, sigma):
    if isinstance(v, Hat):
        return Hat(sigma[v.k])
    prefix = tuple(sigma[x] for x in v.prefix)
    i, j = sigma[v.pair[0]], sigma[v.pair[1]]
    return Contracted(prefix, (min(i, j), max(i, j)))


def _embed3(j: int, v):
    return prefix_triangle(j, _permute(v, _SIGMA[j]))


def fvs_triangle3(n: int) -> set:
    """A minimum feedback vertex set of the 3-symbol triangle graph at
    level n, as labels.  Size (3^n+1)/2; contains one corner vertex."""
    if n < 0:
        raise ValueError(f"level must be nonnegative, got {n}")
    current = {Hat(0)}
    for _ in range(n):
        current = {_embed3(j, v) for j in range(3) for v in current}
    return {format_vertex(v, 3) for v in current}


def forest_order_small(p: int, n: int) -> int:
    """Maximum induced forest order of the triangle family for levels 0-2."""
    if p < 2:
        raise ValueError(f"need at least 2 symbols, got {p}")
    if n not in (0, 1, 2):
        raise ValueError(f"only levels 0-2 have small closed forms, got {n}")
    if p % 2 == 0:
        return (2, 3 * p // 2, p * p + p // 2)[n]
    return (2, (3 * p - 1) // 2, p * p + (p - 1) // 2)[n]


def _wrap_pair(i: int, p: int):
    j = (i + 1) % p
    return (min(i, j), max(i, j))


def _corner_path_objects(s: int, p: int) -> set:
    out = {Hat(s), Hat(s + 1), Contracted((), (s, s + 1))}
    for i in range(p):
        if i == s:
            continue
        out.add(Contracted((s,), _wrap_pair(i, p)))
        out.add(Contracted((s + 1,), _wrap_pair(i, p)))
    return out


def corner_path_base(s: int, p: int) -> set:
    """The level-2 path joining corners s and s+1, as labels: both
    corners, the vertex merging them, and a ladder of pair vertices
    through both subtriangles.  Order 2p+1."""
    if p < 4:
        raise ValueError(f"need at least 4 symbols, got {p}")
    if s % 2 or s + 1 >= p:
        raise ValueError(f"corner index must be even with s+1 < p, got {s}")
    return {format_vertex(v, p) for v in _corner_path_objects(s, p)}


def _tail_path_objects(p: int) -> set:
    out = {Hat(p - 1)}
    for i in range(p - 1):
        out.add(Contracted((p - 1,), (i, i + 1)))
    return out


def tail_path_base(p: int) -> set:
    """Odd alphabets leave one corner unpaired; this level-2 path of order
    p covers its subtriangle, running from the corner into the pair
    ladder without wrapping around."""
    if p < 5 or p % 2 == 0:
        raise ValueError(f"only odd alphabets of size >= 5 have a tail path, got {p}")
    return {format_vertex(v, p) for v in _tail_path_objects(p)}


def _even_starts(p: int):
    return range(0, p - 1, 2)


def _b_star_objects(p: int, n: int) -> set:
    level = set()
    for s in _even_starts(p):
        level |= _corner_path_objects(s, p)
    if p % 2:
        level |= _tail_path_objects(p)
    removed = {
        Contracted((), (s1, s2))
        for s1, s2 in itertools.combinations(_even_starts(p), 2)
    }
    for _ in range(n - 2):
        level = {
            prefix_triangle(j, v) for j in range(p) for v in level
        } - removed
    return level


def forest_order_recurrence(p: int, n: int) -> int:
    """Level-by-level size of the large-alphabet forest: each step scales
    by p, loses one vertex per corner pair to overlap, and loses the
    removed top vertices."""
    if p < 4 or n < 2:
        raise ValueError(f"defined for p >= 4, n >= 2, got ({p}, {n})")
    count = forest_order_small(p, 2)
    pairs = math.comb(len(_even_starts(p)), 2)
    for _ in range(n - 2):
        count = p * count - p * (p - 1) // 2 - pairs
    return count


def forest_order_bound(p: int, n: int) -> int:
    """Closed form for the order of the constructed forest, level >= 3.
    Exact integer arithmetic; divisibility is asserted rather than
    rounded."""
    if p < 4 or n < 3:
        raise ValueError(f"defined for p >= 4, n >= 3, got ({p}, {n})")
    if p % 2 == 0:
        geo = p * (p ** (n - 2) - 1)
        assert geo % (p - 1) == 0
        num = 8 * p**n - p ** (n - 1) + geo // (p - 1) + 5 * p
        assert num % 8 == 0
        return num // 8
    num = p ** (n - 1) + p ** (n - 2) - 5 * p + 3
    assert num % 8 == 0
    return p**n - num // 8


def forest_triangle(p: int, n: int, graph: LabeledGraph | None = None) -> set:
    """An induced linear forest of the triangle family, as labels.

    Size follows forest_order_recurrence (equals forest_order_bound for
    n >= 3).  The result is verified against the graph: a cycle or a
    vertex of induced degree 3 raises ValueError.  Pass the prebuilt
    graph to skip the internal construction.
    """
    if p < 4:
        raise ValueError(f"need at least 4 symbols, got {p}")
    if n < 2:
        raise ValueError(f"level must be at least 2, got {n}")
    labels = {format_vertex(v, p) for v in _b_star_objects(p, n)}
    g = triangle(p, n) if graph is None else graph
    if g.order != expected_order("hat", p, n):
        raise ValueError(
            f"graph has order {g.order}, expected {expected_order('hat', p, n)}"
        )
    cycle = find_cycle(g, labels)
    if cycle is not None:
        raise ValueError(f"construction induced a cycle: {cycle}")
    sub = g.induced(labels)
    for v in sub.vertices():
        if sub.degree(v) > 2:
            raise ValueError(f"construction is not a linear forest at {v!r}")
    return labels


@dataclass(frozen=True)
class StructureReport:
    """Component decomposition of the constructed forest versus its
    predicted path multiset.  problems is empty when everything agrees."""

    p: int
    n: int
    total: int
    expected_paths: tuple  # sorted (order, count)
    actual_paths: tuple
    problems: tuple

    @property
    def ok(self) -> bool:
        return not self.problems


def _expected_path_multiset(p: int, n: int) -> Counter:
    starts = len(_even_starts(p))
    expected = Counter()
    expected[2 ** (n - 1) * p + 1] += starts
    for k in range(3, n + 1):
        copies = p ** (n - k)
        expected[2**k * p - 1] += math.comb(starts, 2) * copies
        if p % 2:
            expected[2 ** (k - 2) * p + 2 * p - 1] += starts * copies
    if p % 2:
        expected[p] += 1
    return expected


def structure_report(
    p: int, n: int, graph: LabeledGraph | None = None
) -> StructureReport:
    """Decompose the constructed forest into components and compare with
    the predicted multiset of path orders.  Collects problems instead of
    raising, so a report is always produced."""
    g = triangle(p, n) if graph is None else graph
    problems = []
    try:
        labels = forest_triangle(p, n, graph=g)
    except ValueError as exc:
        return StructureReport(p, n, 0, (), (), (str(exc),))
    sub = g.induced(labels)
    actual = Counter()
    for comp in sub.components():
        degs = sorted(sub.degree(v) for v in comp)
        interior = [d for d in degs if d == 2]
        # a path has exactly its two ends below degree 2 (or is a point)
        if len(comp) > 1 and (degs[-1] > 2 or len(interior) != len(comp) - 2):
            problems.append(f"component holding {comp[0]!r} is not a path")
        actual[len(comp)] += 1
    expected = _expected_path_multiset(p, n)
    if actual != expected:
        only_exp = {k: v for k, v in (expected - actual).items()}
        only_act = {k: v for k, v in (actual - expected).items()}
        problems.append(
            f"path multiset differs: expected extra {only_exp}, actual extra {only_act}"
        )
    total = len(labels)
    if total != forest_order_recurrence(p, n):
        problems.append(
            f"size {total} != recurrence {forest_order_recurrence(p, n)}"
        )
    return StructureReport(
        p,
        n,
        total,
        tuple(sorted(expected.items())),
        tuple(sorted(actual.items())),
        tuple(problems),
    )


@dataclass(frozen=True)
class GapReport:
    """Conjectured-versus-known summary for one triangle-family instance."""

    p: int
    n: int
    order: int
    forest_lower: int
    tau_upper: int
    tau_exact: int | None
    gap: int | None
    status: str  # bound-only | confirmed | gap


def conjecture_gap(
    p: int, n: int, solve: bool = False, budget: int | None = None
) -> GapReport:
    """Report how the constructed forest bound relates to the exact
    feedback number, when the exact solver can supply one.

    Without solve (or when the budget runs out) the report carries the
    bound alone, status "bound-only".  A finished exact run yields
    "confirmed" on a zero gap and "gap" otherwise.
    """
    if p < 4:
        raise ValueError(f"the open cases start at 4 symbols, got {p}")
    if n < 0:
        raise ValueError(f"level must be nonnegative, got {n}")
    order = expected_order("hat", p, n)
    graph = None
    forest: set | None = None
    if n <= 1:
        forest_lower = forest_order_small(p, n)
    else:
        graph = triangle(p, n)
        forest = forest_triangle(p, n, graph=graph)
        forest_lower = len(forest)
        if n >= 3:
            assert forest_lower == forest_order_bound(p, n)
    tau_upper = order - forest_lower
    tau_exact = None
    gap = None
    status = "bound-only"
    if solve:
        from .exact_fvs import tau_bnb

        if graph is None:
            graph = triangle(p, n)
        seed = sorted(set(graph.vertices()) - forest) if forest is not None else None
        cert = tau_bnb(graph, budget=budget, seed=seed)
        if cert.optimal:
            tau_exact = cert.tau
            gap = tau_upper - tau_exact
            status = "confirmed" if gap == 0 else "gap"
    return GapReport(p, n, order, forest_lower, tau_upper, tau_exact, gap, status)
