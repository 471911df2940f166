"""Verification suites and the command line front end.

Each suite builds graphs, runs the matching forest construction, checks
the forest certificate, compares sizes against the closed-form
prediction, and optionally confirms with the exact solver.  Suites are
addressed by fixed keys:

  counts      order and size of every family against the counting formulas
  thm2.4      feedback number of the base family equals p^(n-1)(p-2)
  cor2.7      same value on the apex variant (p=2 falls back to 1)
  cor2.8      the two-level sum on the expanded variant (p=2 falls back to 1)
  thm3.2      triangle family at p=3, deletion set size (3^n+1)/2
  thm4.1      triangle family forest is linear and matches the closed form
  conjecture  triangle family at p>=4: constructed forest vs exact optimum

A report row carries the prediction, the constructed value, the exact
value when a solve finished, and a status: "match" when everything
present agrees, "bound-only" when exactness was requested or implied but
not achieved, "mismatch" when something present disagrees.  Exit codes:
0 all rows clean, 1 at least one mismatch, 2 a construction failed its
certificate or the parameters were unusable.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace

from .exact_fvs import resolve_budget, tau_bnb, tau_bruteforce
from .generators import (
    expected_order,
    expected_size,
    sierpinski,
    sierpinski_plus,
    sierpinski_plusplus,
    triangle,
)
from .graph_core import GraphError, export_dot, export_edgelist, find_cycle
from .pairable_forest import (
    forest_plus,
    forest_plusplus,
    forest_sierpinski,
    fvs_sierpinski,
)
from .triangle_forest import (
    conjecture_gap,
    forest_order_bound,
    forest_order_recurrence,
    forest_triangle,
    fvs_triangle3,
    structure_report,
)

__all__ = [
    "SCHEMA_VERSION",
    "SUITES",
    "VerificationError",
    "VerificationReport",
    "main",
    "render_json",
    "render_table",
    "run_suite",
]

SUITES = ("counts", "thm2.4", "cor2.7", "cor2.8", "thm3.2", "thm4.1", "conjecture")
SCHEMA_VERSION = 1

_BUILDERS = {
    "s": sierpinski,
    "plus": sierpinski_plus,
    "pp": sierpinski_plusplus,
    "hat": triangle,
}
_FAMILY_ORDER = ("s", "plus", "pp", "hat")
_GLYPH = {"match": "✓", "bound-only": "∙", "mismatch": "✗"}


class VerificationError(RuntimeError):
    """A construction failed its certificate; carries a witness cycle."""

    def __init__(self, message: str, cycle=None):
        super().__init__(message)
        self.cycle = list(cycle) if cycle else []

    def __reduce__(self):
        return (type(self), (self.args[0], self.cycle))


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    family: str
    p: int
    n: int
    check: str
    predicted: int | None
    constructed: int | None
    exact: int | None
    status: str
    runtime_ms: int


def _status(predicted, constructed, exact, want_exact: bool) -> str:
    if exact is not None and exact != predicted:
        return "mismatch"
    if constructed is not None and constructed != predicted:
        return "mismatch"
    if want_exact and exact is None:
        return "bound-only"
    return "match"


def _row(suite, family, p, n, check, predicted, constructed, exact, want_exact):
    return VerificationReport(
        suite,
        family,
        p,
        n,
        check,
        predicted,
        constructed,
        exact,
        _status(predicted, constructed, exact, want_exact),
        0,
    )


def _assert_forest(g, labels, context: str):
    cycle = find_cycle(g, set(labels))
    if cycle is not None:
        raise VerificationError(
            f"{context}: constructed set is not a forest, cycle {' '.join(cycle)}",
            cycle,
        )


def _solve(g, budget, seed):
    cert = tau_bnb(g, budget=budget, seed=seed)
    return cert.tau if cert.optimal else None


def _counts_rows(family, p, n, exact, budget):
    g = _BUILDERS[family](p, n)
    return [
        _row("counts", family, p, n, "order", expected_order(family, p, n), g.order, None, False),
        _row("counts", family, p, n, "size", expected_size(family, p, n), g.size, None, False),
    ]


def _tau_formula_rows(suite, family, p, n, exact, budget):
    if family == "s":
        g = sierpinski(p, n)
        forest = forest_sierpinski(p, n)
        predicted = p ** (n - 1) * (p - 2)
    elif family == "plus":
        g = sierpinski_plus(p, n)
        forest = forest_plus(p, n)
        predicted = 1 if p == 2 else p ** (n - 1) * (p - 2)
    else:
        g = sierpinski_plusplus(p, n)
        forest = forest_plusplus(p, n)
        predicted = 1 if p == 2 else p ** (n - 2) * (p - 2) * (p + 1)
    _assert_forest(g, forest, f"{family} p={p} n={n}")
    constructed = g.order - len(forest)
    exact_val = None
    if exact:
        seed = sorted(set(g.vertices()) - set(forest))
        exact_val = _solve(g, budget, seed)
    return [_row(suite, family, p, n, "tau", predicted, constructed, exact_val, exact)]


def _triangle3_rows(p, n, exact, budget):
    g = triangle(3, n)
    cut = fvs_triangle3(n)
    forest = set(g.vertices()) - set(cut)
    _assert_forest(g, forest, f"hat p=3 n={n}")
    predicted = (3 ** n + 1) // 2
    exact_val = _solve(g, budget, sorted(cut)) if exact else None
    return [_row("thm3.2", "hat", 3, n, "tau", predicted, len(cut), exact_val, exact)]


def _linear_forest_rows(p, n, exact, budget):
    g = triangle(p, n)
    try:
        forest = forest_triangle(p, n, graph=g)
    except ValueError as e:
        raise VerificationError(f"hat p={p} n={n}: {e}") from None
    closed = forest_order_bound(p, n)
    recurrence = forest_order_recurrence(p, n)
    rows = [
        _row("thm4.1", "hat", p, n, "order", closed, len(forest), None, False),
        _row("thm4.1", "hat", p, n, "recurrence", closed, recurrence, None, False),
    ]
    rep = structure_report(p, n, graph=g)
    expected_paths = sum(count for _, count in rep.expected_paths)
    actual_paths = sum(count for _, count in rep.actual_paths)
    status = "match" if rep.ok else "mismatch"
    rows.append(
        replace(
            _row("thm4.1", "hat", p, n, "structure", expected_paths, actual_paths, None, False),
            status=status,
        )
    )
    return rows


def _conjecture_rows(p, n, exact, budget):
    gap = conjecture_gap(p, n, solve=exact, budget=budget)
    exact_val = None
    if gap.tau_exact is not None:
        exact_val = gap.order - gap.tau_exact
    predicted = forest_order_bound(p, n) if n >= 3 else forest_order_recurrence(p, n)
    return [
        _row("conjecture", "hat", p, n, "forest", predicted, gap.forest_lower, exact_val, True)
    ]


def _expand(suite: str, ps, ns):
    """Validate the parameter grid and return (family, p, n) tasks."""
    tasks = []
    for p in ps:
        for n in ns:
            if suite == "counts":
                if p < 2 or n < 1:
                    raise ValueError(f"counts needs p >= 2 and n >= 1, got ({p},{n})")
                tasks.extend((fam, p, n) for fam in _FAMILY_ORDER)
            elif suite == "thm2.4":
                if p < 2 or n < 1:
                    raise ValueError(f"thm2.4 needs p >= 2 and n >= 1, got ({p},{n})")
                tasks.append(("s", p, n))
            elif suite in ("cor2.7", "cor2.8"):
                if p < 2 or n < 1 or (p >= 3 and n < 2):
                    raise ValueError(
                        f"{suite} needs n >= 2 for p >= 3 (n >= 1 at p=2), got ({p},{n})"
                    )
                tasks.append(("plus" if suite == "cor2.7" else "pp", p, n))
            elif suite == "thm3.2":
                if p != 3 or n < 0:
                    raise ValueError(f"thm3.2 is defined for p=3, n >= 0, got ({p},{n})")
                tasks.append(("hat", p, n))
            elif suite == "thm4.1":
                if p < 4 or n < 3:
                    raise ValueError(f"thm4.1 needs p >= 4 and n >= 3, got ({p},{n})")
                tasks.append(("hat", p, n))
            elif suite == "conjecture":
                if p < 4 or n < 2:
                    raise ValueError(f"conjecture needs p >= 4 and n >= 2, got ({p},{n})")
                tasks.append(("hat", p, n))
            else:
                raise ValueError(f"unknown suite {suite!r}")
    return sorted(set(tasks), key=lambda t: (t[1], t[2], _FAMILY_ORDER.index(t[0])))


def _run_instance(task):
    suite, family, p, n, exact, budget = task
    start = time.perf_counter()
    if suite == "counts":
        rows = _counts_rows(family, p, n, exact, budget)
    elif suite in ("thm2.4", "cor2.7", "cor2.8"):
        rows = _tau_formula_rows(suite, family, p, n, exact, budget)
    elif suite == "thm3.2":
        rows = _triangle3_rows(p, n, exact, budget)
    elif suite == "thm4.1":
        rows = _linear_forest_rows(p, n, exact, budget)
    else:
        rows = _conjecture_rows(p, n, exact, budget)
    ms = int((time.perf_counter() - start) * 1000)
    return [replace(r, runtime_ms=ms) for r in rows]


def run_suite(suite, ps, ns, exact=False, budget=None, jobs=1):
    """Run one verification suite over the (p, n) grid.

    Rows come back sorted by (p, n, family) no matter how many worker
    processes ran.  Raises VerificationError when a construction fails
    its certificate and ValueError for unusable parameters.
    """
    tasks = [
        (suite, family, p, n, exact, budget) for family, p, n in _expand(suite, ps, ns)
    ]
    reports = []
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for rows in pool.map(_run_instance, tasks):
                reports.extend(rows)
    else:
        for task in tasks:
            reports.extend(_run_instance(task))
    return reports


def render_json(reports) -> str:
    payload = {"schema": SCHEMA_VERSION, "reports": [asdict(r) for r in reports]}
    return json.dumps(payload, indent=2) + "\n"


def render_table(reports) -> str:
    if not reports:
        return ""
    header = ("", "suite", "family", "p", "n", "check", "predicted", "constructed", "exact", "status", "ms")
    rows = [header]
    for r in reports:
        rows.append(
            (
                _GLYPH[r.status],
                r.suite,
                r.family,
                str(r.p),
                str(r.n),
                r.check,
                "-" if r.predicted is None else str(r.predicted),
                "-" if r.constructed is None else str(r.constructed),
                "-" if r.exact is None else str(r.exact),
                r.status,
                str(r.runtime_ms),
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = [
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        for row in rows
    ]
    return "\n".join(lines) + "\n"


def _parse_values(text: str):
    """Parse "3", "2,5", "4:6", or a mix into a sorted list of ints."""
    values = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise ValueError(f"empty entry in {text!r}")
        if ":" in part:
            lo, _, hi = part.partition(":")
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError(f"empty range {part!r}")
            values.update(range(lo, hi + 1))
        else:
            values.add(int(part))
    return sorted(values)


def _write_out(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _seed_labels(family, p, n):
    """The construction-backed deletion set for a family instance, when
    one exists."""
    try:
        if family == "s":
            return sorted(fvs_sierpinski(p, n))
        g = _BUILDERS[family](p, n)
        if family == "plus":
            forest = forest_plus(p, n)
        elif family == "pp":
            forest = forest_plusplus(p, n)
        elif p == 3:
            return sorted(fvs_triangle3(n))
        elif p == 2:
            return []
        else:
            forest = forest_triangle(p, n, graph=g)
        return sorted(set(g.vertices()) - set(forest))
    except ValueError:
        return None


def _cmd_generate(args) -> int:
    g = _BUILDERS[args.family](args.p, args.n)
    text = export_dot(g) if args.format == "dot" else export_edgelist(g)
    _write_out(text, args.out)
    return 0


def _cmd_forest(args) -> int:
    family, p, n = args.family, args.p, args.n
    if args.structure:
        if family != "hat":
            raise ValueError("--structure only applies to the hat family")
        rep = structure_report(p, n)
        payload = {
            "p": p,
            "n": n,
            "total": rep.total,
            "expected_paths": [list(pair) for pair in rep.expected_paths],
            "actual_paths": [list(pair) for pair in rep.actual_paths],
            "problems": list(rep.problems),
            "ok": rep.ok,
        }
        _write_out(json.dumps(payload, indent=2) + "\n", args.out)
        return 0 if rep.ok else 1
    g = _BUILDERS[family](p, n)
    if family == "s":
        forest = forest_sierpinski(p, n)
    elif family == "plus":
        forest = forest_plus(p, n)
    elif family == "pp":
        forest = forest_plusplus(p, n)
    elif p == 3:
        forest = sorted(set(g.vertices()) - set(fvs_triangle3(n)))
    elif p == 2:
        forest = g.vertices()
    else:
        forest = forest_triangle(p, n, graph=g)
    forest = sorted(forest)
    _assert_forest(g, forest, f"{family} p={p} n={n}")
    lines = list(forest)
    lines.append(f"size={len(forest)} complement={g.order - len(forest)} acyclic=true")
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_tau(args) -> int:
    g = _BUILDERS[args.family](args.p, args.n)
    if args.method == "brute":
        cert = tau_bruteforce(g)
    else:
        seed = None if args.seed == "none" else _seed_labels(args.family, args.p, args.n)
        cert = tau_bnb(g, budget=args.budget, seed=seed)
    flag = "true" if cert.optimal else "false"
    _write_out(
        f"tau={cert.tau} optimal={flag} witness={','.join(cert.witness)}\n", args.out
    )
    return 0


def _cmd_verify(args) -> int:
    reports = run_suite(
        args.suite,
        _parse_values(args.p),
        _parse_values(args.n),
        exact=args.exact,
        budget=args.budget,
        jobs=args.jobs,
    )
    text = render_json(reports) if args.format == "json" else render_table(reports)
    _write_out(text, args.out)
    return 1 if any(r.status == "mismatch" for r in reports) else 0


def _load_reports(path: str):
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if not isinstance(payload, dict) or payload.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"{path}: expected a schema {SCHEMA_VERSION} report file")
    try:
        return [VerificationReport(**entry) for entry in payload["reports"]]
    except (KeyError, TypeError):
        raise ValueError(f"{path}: malformed report entries") from None


def _cmd_report(args) -> int:
    reports = _load_reports(args.path)
    text = render_json(reports) if args.format == "json" else render_table(reports)
    _write_out(text, args.out)
    return 1 if any(r.status == "mismatch" for r in reports) else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sfvs",
        description="Generate self-similar graph families, build their "
        "maximum induced forests, and verify the size formulas.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def family_params(sp, n_type=int):
        sp.add_argument("--family", choices=_FAMILY_ORDER, required=True)
        sp.add_argument("-p", type=int, required=True, help="number of symbols")
        sp.add_argument("-n", type=n_type, required=True, help="recursion level")

    gen = sub.add_parser("generate", help="emit a graph as an edge list or DOT")
    family_params(gen)
    gen.add_argument("--format", choices=("edges", "dot"), default="edges")
    gen.add_argument("--out")
    gen.set_defaults(func=_cmd_generate)

    forest = sub.add_parser("forest", help="emit the induced-forest construction")
    family_params(forest)
    forest.add_argument(
        "--structure",
        action="store_true",
        help="emit the path decomposition report instead (hat family)",
    )
    forest.add_argument("--out")
    forest.set_defaults(func=_cmd_forest)

    tau = sub.add_parser("tau", help="solve for the exact feedback vertex number")
    family_params(tau)
    tau.add_argument("--method", choices=("bnb", "brute"), default="bnb")
    tau.add_argument("--budget", type=int, default=None, help="search node budget")
    tau.add_argument(
        "--seed",
        choices=("auto", "none"),
        default="auto",
        help="start from the construction-backed deletion set when available",
    )
    tau.add_argument("--out")
    tau.set_defaults(func=_cmd_tau)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", choices=SUITES, required=True)
    verify.add_argument("-p", required=True, help="values like 4, 3:6, or 2,5")
    verify.add_argument("-n", required=True, help="values like 2, 1:5, or 1,3")
    verify.add_argument("--exact", action="store_true", help="confirm with the solver")
    verify.add_argument("--budget", type=int, default=None)
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--format", choices=("table", "json"), default="table")
    verify.add_argument("--out")
    verify.set_defaults(func=_cmd_verify)

    report = sub.add_parser("report", help="render a saved JSON report")
    report.add_argument("path")
    report.add_argument("--format", choices=("table", "json"), default="table")
    report.add_argument("--out")
    report.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, GraphError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
