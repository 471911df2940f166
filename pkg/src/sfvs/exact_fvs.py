"""Exact feedback vertex number, two independent ways.

tau_bruteforce enumerates vertex subsets by increasing size and is the
ground-truth oracle for small graphs.  tau_bnb is a branch-and-bound
search over a multigraph that supports the classic reductions:

  * vertices of degree <= 1 are irrelevant and vanish
  * a self-loop forces its vertex into the solution
  * a degree-2 vertex is bypassed, its two edges fused into one; fusing a
    parallel pair into a loop is what makes double edges count
  * a parallel pair with one endpoint barred from the solution forces the
    other endpoint

Branching excludes a vertex by adding it to a forbidden set, which the
reductions respect; components split off and are solved independently
(feedback numbers add across components).  The lower bound is the better
of an edge-density argument and greedy disjoint clique packing, each of
which happens to be tight on the graph families this package generates.
A search that runs out of budget still returns its incumbent, flagged
non-optimal.  Every certificate is re-verified against the input graph
before being returned.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .graph_core import LabeledGraph, Multigraph, is_forest

__all__ = [
    "BUDGET_ENV_VAR",
    "DEFAULT_BUDGET",
    "FvsCertificate",
    "resolve_budget",
    "tau_bnb",
    "tau_bruteforce",
    "verify_certificate",
]

DEFAULT_BUDGET = 10_000_000
BUDGET_ENV_VAR = "SFVS_BUDGET"


def resolve_budget(budget: int | None = None) -> int:
    """The node budget to use: the explicit argument, else the
    environment override, else the default."""
    if budget is None:
        text = os.environ.get(BUDGET_ENV_VAR, "").strip()
        if not text:
            return DEFAULT_BUDGET
        try:
            budget = int(text)
        except ValueError:
            raise ValueError(
                f"{BUDGET_ENV_VAR} must be an integer, got {text!r}"
            ) from None
    if budget < 1:
        raise ValueError(f"budget must be positive, got {budget}")
    return budget


@dataclass(frozen=True)
class FvsCertificate:
    """A feedback vertex set with its size and an optimality flag."""

    tau: int
    witness: tuple  # sorted labels
    optimal: bool


def verify_certificate(g: LabeledGraph, cert: FvsCertificate) -> bool:
    """Recheck a certificate from scratch: the witness matches tau, lies
    in the graph, and its removal leaves a forest."""
    witness = set(cert.witness)
    if len(cert.witness) != cert.tau or len(witness) != cert.tau:
        return False
    vertices = set(g.vertices())
    if not witness <= vertices:
        return False
    return is_forest(g, vertices - witness)


def tau_bruteforce(g: LabeledGraph, cap: int = 22) -> FvsCertificate:
    """Exact feedback number by subset enumeration in increasing size.

    Exponential; refuses graphs above cap vertices (use tau_bnb there).
    """
    n = g.order
    if n > cap:
        raise ValueError(
            f"{n} vertices exceeds the brute-force cap of {cap}; use tau_bnb"
        )
    labels = sorted(g.vertices())
    index = {v: i for i, v in enumerate(labels)}
    edges = [(index[u], index[v]) for u, v in g.edges()]

    def acyclic_without(removed) -> bool:
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in edges:
            if u in removed or v in removed:
                continue
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    for k in range(n + 1):
        for combo in itertools.combinations(range(n), k):
            if acyclic_without(set(combo)):
                witness = tuple(labels[i] for i in combo)
                return FvsCertificate(k, witness, True)
    raise AssertionError("unreachable: removing every vertex leaves a forest")


class _BudgetExhausted(Exception):
    pass


class _Ticker:
    __slots__ = ("left",)

    def __init__(self, budget: int):
        self.left = budget

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise _BudgetExhausted


class _Best:
    """Incumbent solution; offer() keeps the smaller one."""

    __slots__ = ("tau", "witness")

    def __init__(self, tau: int, witness):
        self.tau = tau
        self.witness = witness

    def offer(self, chosen):
        if len(chosen) < self.tau:
            self.tau = len(chosen)
            self.witness = tuple(sorted(chosen))


def _reduce(mg: Multigraph, forbidden, chosen) -> bool:
    """Apply reductions until fixpoint, appending forced vertices to
    chosen.  False means the forbidden set blocks every solution."""
    changed = True
    while changed:
        changed = False
        for v in mg.live_vertices():
            if not mg.alive[v]:
                continue
            nbrs = mg.adj[v]
            if v in nbrs:
                if v in forbidden:
                    return False
                chosen.append(v)
                mg.remove_vertex(v)
                changed = True
                continue
            # a parallel pair is a 2-cycle: a barred endpoint forces the other
            forced = None
            for u, mult in nbrs.items():
                if mult >= 2:
                    if v in forbidden and u in forbidden:
                        return False
                    if u in forbidden:
                        forced = v
                        break
                    if v in forbidden:
                        forced = u
                        break
            if forced is not None:
                if forced in forbidden:
                    return False
                chosen.append(forced)
                mg.remove_vertex(forced)
                changed = True
                continue
            deg = mg.degree(v)
            if deg <= 1:
                mg.remove_vertex(v)
                changed = True
                continue
            if deg == 2:
                items = list(nbrs.items())
                if len(items) == 1:
                    # v's whole cycle structure passes through u
                    u = items[0][0]
                    pick = u if u not in forbidden else v
                    if pick in forbidden:
                        return False
                    chosen.append(pick)
                    mg.remove_vertex(pick)
                    changed = True
                    continue
                u, w = items[0][0], items[1][0]
                if v in forbidden or u not in forbidden or w not in forbidden:
                    # bypass v; skipped only when v alone is still eligible
                    mg.remove_vertex(v)
                    mg.add_edge(u, w)
                    changed = True
                    continue
    return True


def _is_forest_mg(mg: Multigraph) -> bool:
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in mg.live_vertices():
        parent[v] = v
    for v in mg.live_vertices():
        for u, mult in mg.adj[v].items():
            if u == v or mult >= 2:
                return False
            if u > v:
                continue
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def _feasible(mg: Multigraph, removed) -> bool:
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    live = [v for v in mg.live_vertices() if v not in removed]
    for v in live:
        parent[v] = v
    for v in live:
        for u, mult in mg.adj[v].items():
            if u in removed:
                continue
            if u == v or mult >= 2:
                return False
            if u > v:
                continue
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
    return True


def _minimalize(mg: Multigraph, chosen) -> list:
    """Drop redundant vertices from a feasible deletion set, last in
    first reconsidered."""
    keep = list(chosen)
    for v in sorted(set(chosen), reverse=True):
        trial = [x for x in keep if x != v]
        if _feasible(mg, set(trial)):
            keep = trial
    return keep


def _greedy_fvs(mg: Multigraph) -> list:
    """Quick feasible solution: peel trivial structure, then repeatedly
    delete a maximum-degree vertex; minimalized before returning."""
    work = mg.copy()
    chosen = []
    while True:
        changed = True
        while changed:
            changed = False
            for v in work.live_vertices():
                if not work.alive[v]:
                    continue
                if v in work.adj[v]:
                    chosen.append(v)
                    work.remove_vertex(v)
                    changed = True
                elif work.degree(v) <= 1:
                    work.remove_vertex(v)
                    changed = True
        live = work.live_vertices()
        if not live or _is_forest_mg(work):
            break
        v = max(live, key=lambda x: (work.degree(x), -x))
        chosen.append(v)
        work.remove_vertex(v)
    return _minimalize(mg, chosen)


def _density_bound(order: int, edge_count: int, degs_desc) -> int:
    """Least t for which deleting even the t busiest vertices could leave
    few enough edges for a forest."""
    t = 0
    prefix = 0
    while edge_count - prefix > max(order - t - 1, 0):
        if t >= order:
            return order
        prefix += degs_desc[t]
        t += 1
    return t


def _pack_cliques(mg: Multigraph):
    """Greedy vertex-disjoint cliques of size >= 3; each contributes
    size - 2 to the bound."""
    used = set()
    bound = 0
    for v in mg.live_vertices():
        if v in used:
            continue
        cand = [u for u in mg.adj[v] if u != v and u not in used]
        clique = [v]
        while cand:
            best_u = None
            best_score = -1
            for u in cand:
                score = sum(1 for x in cand if x != u and x in mg.adj[u])
                if score > best_score:
                    best_u, best_score = u, score
            clique.append(best_u)
            cand = [u for u in cand if u != best_u and u in mg.adj[best_u]]
        if len(clique) >= 3:
            bound += len(clique) - 2
            used.update(clique)
    return bound, used


def _lower_bound(mg: Multigraph) -> int:
    live = mg.live_vertices()
    order = len(live)
    if order == 0:
        return 0
    edges = mg.edge_count()
    degs = sorted((mg.degree(v) for v in live), reverse=True)
    best = _density_bound(order, edges, degs)
    packed, used = _pack_cliques(mg)
    if packed:
        rest = [v for v in live if v not in used]
        if rest:
            rest_set = set(rest)
            rest_edges = 0
            rest_degs = []
            for v in rest:
                d = 0
                for u, mult in mg.adj[v].items():
                    if u in rest_set and u != v:
                        d += mult
                        if u > v:
                            rest_edges += mult
                rest_degs.append(d)
            rest_degs.sort(reverse=True)
            packed += _density_bound(len(rest), rest_edges, rest_degs)
        best = max(best, packed)
    return best


def _components(mg: Multigraph):
    seen = set()
    comps = []
    for start in mg.live_vertices():
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            v = queue.pop()
            for u in mg.adj[v]:
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def _restrict(mg: Multigraph, comp) -> Multigraph:
    keep = set(comp)
    out = Multigraph(0)
    out.adj = [dict(mg.adj[v]) if v in keep else {} for v in range(len(mg.adj))]
    out.alive = [v in keep for v in range(len(mg.alive))]
    return out


def _branch_vertex(mg: Multigraph, candidates):
    multi = [
        v
        for v in candidates
        if any(u != v and m >= 2 for u, m in mg.adj[v].items())
    ]
    pool = multi or candidates
    return max(pool, key=lambda v: (mg.degree(v), -v))


def _grow_clique(mg: Multigraph, v) -> list:
    """Greedy maximal clique through v, preferring well-connected
    extensions."""
    cand = [u for u in mg.adj[v] if u != v]
    clique = [v]
    while cand:
        best_u = None
        best_score = -1
        for u in cand:
            score = sum(1 for x in cand if x != u and x in mg.adj[u])
            if score > best_score:
                best_u, best_score = u, score
        clique.append(best_u)
        cand = [u for u in cand if u != best_u and u in mg.adj[best_u]]
    return clique


def _exclusion_sets(locked, free):
    """All ways to leave at most two clique vertices out of the solution,
    every locked vertex staying out."""
    if len(locked) == 0:
        yield frozenset()
        for a in free:
            yield frozenset((a,))
        for i, a in enumerate(free):
            for b in free[i + 1 :]:
                yield frozenset((a, b))
    elif len(locked) == 1:
        yield frozenset(locked)
        for a in free:
            yield frozenset((locked[0], a))
    else:
        yield frozenset(locked)


def _solve_component(sub: Multigraph, forbidden, cutoff: int, ticker):
    """Exact minimum for one component, or None when nothing beats the
    cutoff (including infeasibility under the forbidden set)."""
    best = _Best(cutoff, None)
    _search(sub, [], forbidden, best, ticker)
    return None if best.witness is None else list(best.witness)


def _search(mg: Multigraph, chosen, forbidden, best, ticker):
    # the caller hands over ownership of mg and chosen
    ticker.tick()
    if not _reduce(mg, forbidden, chosen):
        return
    if len(chosen) >= best.tau:
        return
    live = mg.live_vertices()
    if not live:
        best.offer(chosen)
        return
    # reductions leave minimum degree 2, so every component has a cycle
    comps = _components(mg)
    if len(comps) > 1:
        comps.sort(key=lambda c: (len(c), c[0]))
        for comp in comps[:-1]:
            allowance = best.tau - len(chosen)
            solved = _solve_component(
                _restrict(mg, comp),
                forbidden,
                min(len(comp) + 1, allowance),
                ticker,
            )
            if solved is None:
                return
            chosen.extend(solved)
            if len(chosen) >= best.tau:
                return
        mg = _restrict(mg, comps[-1])
    bound = len(chosen) + _lower_bound(mg)
    if bound >= best.tau:
        return
    candidates = [v for v in mg.live_vertices() if v not in forbidden]
    if not candidates:
        return
    v = _branch_vertex(mg, candidates)
    clique = _grow_clique(mg, v)
    if len(clique) >= 3:
        # a clique can keep at most two vertices out of any solution
        locked = [u for u in clique if u in forbidden]
        if len(locked) > 2:
            return
        free = [u for u in clique if u not in forbidden]
        for excl in _exclusion_sets(locked, free):
            include = [u for u in clique if u not in excl]
            if len(chosen) + len(include) >= best.tau:
                continue
            child = mg.copy()
            for u in include:
                child.remove_vertex(u)
            _search(child, chosen + include, forbidden | excl, best, ticker)
            if bound >= best.tau:
                return
        return
    taken = mg.copy()
    taken.remove_vertex(v)
    _search(taken, chosen + [v], forbidden, best, ticker)
    if bound >= best.tau:
        return
    _search(mg, list(chosen), forbidden | {v}, best, ticker)


def tau_bnb(
    g: LabeledGraph, budget: int | None = None, seed=None
) -> FvsCertificate:
    """Branch-and-bound feedback number.

    seed, when given, must be a valid feedback vertex set (by label); it
    becomes the starting incumbent.  The certificate is optimal unless
    the node budget ran out, in which case the incumbent is returned
    with optimal False.
    """
    budget = resolve_budget(budget)
    mg, labels = Multigraph.from_labeled(g)
    index = {v: i for i, v in enumerate(labels)}
    if seed is not None:
        seed_labels = sorted({str(v) for v in seed})
        for v in seed_labels:
            if v not in index:
                raise ValueError(f"seed contains unknown vertex {v!r}")
        if not is_forest(g, set(labels) - set(seed_labels)):
            raise ValueError("seed is not a feedback vertex set")
        incumbent = _minimalize(mg, [index[v] for v in seed_labels])
    else:
        incumbent = _greedy_fvs(mg)
    best = _Best(len(incumbent), tuple(sorted(incumbent)))
    ticker = _Ticker(budget)
    optimal = True
    try:
        _search(mg.copy(), [], frozenset(), best, ticker)
    except _BudgetExhausted:
        optimal = False
    witness = tuple(sorted(labels[i] for i in best.witness))
    cert = FvsCertificate(best.tau, witness, optimal)
    if not verify_certificate(g, cert):
        raise RuntimeError("solver produced an invalid certificate")
    return cert
