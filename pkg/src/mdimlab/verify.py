"""Golden-value regression suite.

Every quantitative claim the library stands behind lives in data/golden.json
as one row: an id, a human-readable claim, a provenance label ("formula",
"computed", or "literature"), a tier, the name of a registered check, its
arguments, and the frozen expected value.  Running the suite recomputes each
runnable row and compares; "recorded" rows are literature values with no
constructor in this package and are reported without being recomputed.

Tiers: "default" rows run always, "slow" rows only with include_slow,
"recorded" rows never run.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from importlib import resources
from typing import Any, Callable

from . import families
from .designs import (
    design_complement,
    design_from_graph,
    incidence_graph,
    pg2,
    three_lines_2blocking,
    is_double_blocking,
)
from .graphs import Graph, bfs_distances, intersection_array, is_primitive
from .imprimitivity import antipodal_structure, classify_ah, fold, halve
from .lifting import lift_folded, lift_halved, taylor_lift
from .mdim import (
    babai_bounds,
    exhaustive_mdim,
    is_resolving,
    lower_bound_nd,
    mdim_exact,
    mdim_greedy,
    min_semi_resolving,
    split_mdim,
)
from .zoo import SOLVABLE, ZOO


@dataclass(frozen=True)
class GoldenRow:
    id: str
    claim: str
    source: str
    tier: str
    check: str | None
    args: dict[str, Any]
    expected: Any


@dataclass(frozen=True)
class RowResult:
    row: GoldenRow
    computed: Any
    ok: bool | None  # None: not run (recorded or filtered out)

    @property
    def ran(self) -> bool:
        return self.ok is not None


@dataclass(frozen=True)
class Report:
    results: tuple[RowResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results if r.ran)

    @property
    def counts(self) -> dict[str, int]:
        ran = [r for r in self.results if r.ran]
        return {
            "passed": sum(1 for r in ran if r.ok),
            "failed": sum(1 for r in ran if not r.ok),
            "recorded": sum(1 for r in self.results if not r.ran),
        }

    def render(self) -> str:
        lines = []
        width = max((len(r.row.id) for r in self.results), default=10) + 2
        for r in self.results:
            if not r.ran:
                status = "recorded"
                detail = f"literature value {_shorten(r.row.expected)}"
            elif r.ok:
                status = "pass"
                detail = _shorten(r.computed)
            else:
                status = "FAIL"
                detail = (
                    f"expected {_shorten(r.row.expected)}, "
                    f"computed {_shorten(r.computed)}"
                )
            lines.append(f"{r.row.id:<{width}} {status:<9} {detail}")
        c = self.counts
        lines.append(
            f"{c['passed']} passed, {c['failed']} failed, "
            f"{c['recorded']} recorded"
        )
        return "\n".join(lines)

    def to_json(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "counts": self.counts,
            "rows": [
                {
                    "id": r.row.id,
                    "claim": r.row.claim,
                    "source": r.row.source,
                    "tier": r.row.tier,
                    "expected": r.row.expected,
                    "computed": r.computed,
                    "pass": r.ok,
                }
                for r in self.results
            ],
        }


def _shorten(value: Any, limit: int = 64) -> str:
    text = json.dumps(value, sort_keys=True) if not isinstance(value, str) else value
    return text if len(text) <= limit else text[: limit - 3] + "..."


def load_golden() -> list[GoldenRow]:
    raw = resources.files("mdimlab.data").joinpath("golden.json").read_text()
    data = json.loads(raw)
    return [GoldenRow(**entry) for entry in data["entries"]]


# ---------------------------------------------------------------------------
# check implementations; each returns a JSON-comparable value


def _graph_from_args(args: dict[str, Any]) -> Graph:
    if "zoo" in args:
        return ZOO[args["zoo"]]()
    return families.family(args["family"], *args.get("params", ()))


def _check_mdim_formula(args: dict[str, Any], threads: int) -> list[int]:
    return [
        mdim_exact(families.family(args["family"], *ps), threads=threads).mu
        for ps in args["param_sets"]
    ]


def _check_mdim_family(args: dict[str, Any], threads: int) -> int:
    return mdim_exact(_graph_from_args(args), threads=threads).mu


def _check_mdim_zoo(args: dict[str, Any], threads: int) -> int:
    return mdim_exact(ZOO[args["name"]](), threads=threads).mu


def _check_double_equals_base(args: dict[str, Any], threads: int) -> list[int]:
    base = ZOO[args["name"]]()
    dbl = families.bipartite_double(base).graph
    return [mdim_exact(base, threads=threads).mu, mdim_exact(dbl, threads=threads).mu]


def _check_halved_lift_size(args: dict[str, Any], threads: int) -> int:
    g = _graph_from_args(args)
    gp, gm, _, _ = halve(g)
    r_plus = mdim_exact(gp, threads=threads).set
    r_minus = mdim_exact(gm, threads=threads).set
    lifted = lift_halved(g, r_plus, r_minus)
    return len(lifted.set)


def _check_folded_lift(args: dict[str, Any], threads: int) -> dict[str, Any]:
    g = _graph_from_args(args)
    structure = antipodal_structure(g)
    folded, _ = fold(g, structure)
    r_bar = mdim_exact(folded, threads=threads).set
    result = lift_folded(g, r_bar, structure)
    return {"case": result.case, "size": len(result.certificate.set)}


def _check_taylor_plus_one(args: dict[str, Any], threads: int) -> list[int]:
    base = _graph_from_args(args)
    cover = families.taylor(base)
    mu_base = mdim_exact(base, threads=threads).mu
    mu_cover = mdim_exact(cover.graph, threads=threads).mu
    # the lift must also land at mu_base + 1 and verify
    lifted = taylor_lift(cover, mdim_exact(base, threads=threads).set)
    assert len(lifted.set) == mu_base + 1
    return [mu_base, mu_cover]


def _check_descendant_values(args: dict[str, Any], threads: int) -> list[int]:
    from .graphs import induced_neighborhood

    cover = families.taylor(_graph_from_args(args))
    values = set()
    for w in range(cover.graph.n):
        local, _ = induced_neighborhood(cover.graph, w)
        values.add(mdim_exact(local, threads=threads).mu)
    return sorted(values)


def _check_biplane_mu(args: dict[str, Any], threads: int) -> dict[str, Any]:
    rk = families.rook(4, 4)
    design = design_from_graph(families.bipartite_double(rk).graph)
    inc = incidence_graph(design).graph
    mu = mdim_exact(inc, threads=threads).mu
    mu_base = mdim_exact(rk, threads=threads).mu
    return {"mu": mu, "at_most_twice_base": mu <= 2 * mu_base}


def _check_fano_pair(args: dict[str, Any], threads: int) -> list[int]:
    plane = pg2(2)
    a = mdim_exact(incidence_graph(plane).graph, threads=threads).mu
    b = mdim_exact(incidence_graph(design_complement(plane)).graph, threads=threads).mu
    return [a, b]


def _check_blocking_triple(args: dict[str, Any], threads: int) -> dict[str, Any]:
    from .mdim import is_semi_resolving_for_blocks

    plane = pg2(args["q"])
    _, points = three_lines_2blocking(plane)
    survives = all(
        is_semi_resolving_for_blocks(plane, tuple(p for p in points if p != x))
        for x in points
    )
    return {
        "size": len(points),
        "double_blocking": is_double_blocking(plane, points),
        "survives_point_removal": survives,
    }


def _check_ah_zoo(args: dict[str, Any], threads: int) -> dict[str, str]:
    names = [
        "petersen", "C_7", "K_6", "K_3x4", "Q_3", "heawood", "icosahedron",
        "Q_4", "Q_6", "johnson_8_4", "gq22_incidence", "desargues", "Q_8",
    ]
    return {name: classify_ah(ZOO[name]()).label for name in names}


def _check_random_soundness(args: dict[str, Any], threads: int) -> dict[str, int]:
    rng = random.Random(args["seed"])
    mismatches = 0
    undersized = 0
    for _ in range(args["count"]):
        n = rng.randint(4, args["max_n"])
        p = rng.uniform(0.25, 0.75)
        while True:
            edges = [
                (u, w)
                for u in range(n)
                for w in range(u + 1, n)
                if rng.random() < p
            ]
            g = Graph.from_edges(n, edges)
            dm = bfs_distances(g)
            if dm.connected:
                break
        exact = mdim_exact(g, dm=dm)
        oracle = exhaustive_mdim(g, dm=dm)
        if exact.mu != oracle.mu or not is_resolving(dm, exact.set):
            mismatches += 1
            continue
        if exact.mu >= 1:
            for _ in range(args["subsets"]):
                subset = rng.sample(range(n), exact.mu - 1)
                if is_resolving(dm, subset):
                    undersized += 1
                    break
    return {"mismatches": mismatches, "undersized_successes": undersized}


def _check_bounds_chain(args: dict[str, Any], threads: int) -> dict[str, Any]:
    violations = []
    for name in sorted(ZOO):
        g = ZOO[name]()
        dm = bfs_distances(g)
        greedy = len(mdim_greedy(g, dm=dm).set)
        lb = lower_bound_nd(g.n, dm.diameter) if dm.connected else 0
        if name in SOLVABLE:
            mu = mdim_exact(g, dm=dm).mu
            if not lb <= mu <= greedy:
                violations.append(name)
        elif lb > greedy:
            violations.append(name)
    return {"violations": violations}


def _check_babai_cross(args: dict[str, Any], threads: int) -> dict[str, Any]:
    violations = []
    for name in sorted(SOLVABLE):
        g = ZOO[name]()
        dm = bfs_distances(g)
        if not dm.connected or not is_primitive(g, dm):
            continue
        mu = mdim_exact(g, dm=dm).mu
        report = babai_bounds(g, dm=dm)
        for label, bound in (
            ("general", report.general),
            ("srg", report.srg),
            ("distance_class", report.distance_class),
        ):
            if bound is not None and bound <= mu:
                violations.append(f"{name}:{label}")
    return {"violations": violations}


def _check_semi_resolving(args: dict[str, Any], threads: int) -> int:
    return min_semi_resolving(pg2(args["q"]), side=args["side"], threads=threads).mu


def _check_split_value(args: dict[str, Any], threads: int) -> int:
    return split_mdim(pg2(args["q"]), threads=threads).mu_star


def _check_intersection_array(args: dict[str, Any], threads: int) -> str:
    return intersection_array(_graph_from_args(args)).standard_notation()


CHECKS: dict[str, Callable[[dict[str, Any], int], Any]] = {
    "mdim_formula": _check_mdim_formula,
    "mdim_family": _check_mdim_family,
    "mdim_zoo": _check_mdim_zoo,
    "double_equals_base": _check_double_equals_base,
    "halved_lift_size": _check_halved_lift_size,
    "folded_lift": _check_folded_lift,
    "taylor_plus_one": _check_taylor_plus_one,
    "descendant_values": _check_descendant_values,
    "biplane_mu": _check_biplane_mu,
    "fano_pair": _check_fano_pair,
    "blocking_triple": _check_blocking_triple,
    "ah_zoo": _check_ah_zoo,
    "random_soundness": _check_random_soundness,
    "bounds_chain": _check_bounds_chain,
    "babai_cross": _check_babai_cross,
    "semi_resolving": _check_semi_resolving,
    "split_value": _check_split_value,
    "intersection_array": _check_intersection_array,
}


def run_suite(
    include_slow: bool = False,
    only: set[str] | None = None,
    threads: int = 1,
) -> Report:
    """Run the golden rows and compare against frozen expectations.

    only restricts to the given row ids (recorded rows still render).
    """
    results = []
    for row in load_golden():
        if only is not None and row.id not in only:
            continue
        runnable = row.check is not None and (row.tier != "slow" or include_slow)
        if not runnable:
            results.append(RowResult(row=row, computed=None, ok=None))
            continue
        computed = CHECKS[row.check](row.args, threads)
        results.append(RowResult(row=row, computed=computed, ok=computed == row.expected))
    return Report(results=tuple(results))


def oracle_rows(max_n: int = 32) -> list[tuple[str, Any, Any, bool]]:
    """Recompute computed-source metric dimension rows with the exhaustive
    oracle where the instance is small enough.

    Returns (id, frozen expected, oracle value, agree) tuples; rows whose
    instance exceeds max_n vertices are skipped.  This is the bootstrap that
    justified the frozen values in the first place.
    """
    out = []
    fetchers = {
        "mdim_zoo": lambda a: ZOO[a["name"]](),
        "mdim_family": _graph_from_args,
    }
    for row in load_golden():
        if row.source != "computed" or row.check not in fetchers:
            continue
        g = fetchers[row.check](row.args)
        if g.n > max_n:
            out.append((row.id, row.expected, None, True))
            continue
        value = exhaustive_mdim(g).mu
        out.append((row.id, row.expected, value, value == row.expected))
    return out
