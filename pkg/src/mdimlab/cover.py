"""Minimum pair-separation set cover by branch and bound over bitsets.

The reduction shared by metric dimension and semi-resolving sets: a matrix
row per chooser, a column per entity, and chooser v separates the entity
pair (i, j) iff its row differs at columns i and j.  A cover is a chooser
set separating every pair.

The solver branches on an uncovered pair with few remaining separators,
trying its separators in decreasing marginal-coverage order; each branch
bans the separators already tried at that node, so the subtrees partition
the solution space.  Pruning uses chosen + ceil(remaining / best possible
marginal coverage) against the incumbent, plus an optional external lower
bound that stops the search as soon as it is met.  All tie-breaks are by
ascending id, so sequential results are fully deterministic.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

DEFAULT_BUDGET = 10**8


def pack_bits(arr: np.ndarray) -> int:
    """Bool array -> int with bit p set iff arr[p]."""
    return int.from_bytes(
        np.packbits(arr, bitorder="little").tobytes(), "little"
    )


@dataclass(frozen=True)
class PairCoverInstance:
    """Pair-separation instance.

    items: the column pairs, lexicographically ordered.
    coverage[v]: bitset over item indices separated by chooser v.
    resolvers[p]: bitset over choosers separating item p.
    """

    n_choosers: int
    items: tuple[tuple[int, int], ...]
    coverage: tuple[int, ...]
    resolvers: tuple[int, ...]

    @property
    def n_items(self) -> int:
        return len(self.items)


def build_instance(matrix: np.ndarray) -> PairCoverInstance:
    """Instance whose choosers are the matrix rows and whose items are all
    unordered column pairs."""
    n_choosers, n_cols = matrix.shape
    items = tuple((i, j) for i, j in combinations(range(n_cols), 2))
    iu = np.fromiter((p[0] for p in items), dtype=np.intp, count=len(items))
    iw = np.fromiter((p[1] for p in items), dtype=np.intp, count=len(items))
    sep = np.empty((n_choosers, len(items)), dtype=bool)
    for v in range(n_choosers):
        row = matrix[v]
        sep[v] = row[iu] != row[iw]
    coverage = tuple(pack_bits(sep[v]) for v in range(n_choosers))
    resolvers = tuple(pack_bits(sep[:, p]) for p in range(len(items)))
    return PairCoverInstance(
        n_choosers=n_choosers,
        items=items,
        coverage=coverage,
        resolvers=resolvers,
    )


@dataclass(frozen=True)
class CoverResult:
    chosen: tuple[int, ...]
    nodes: int
    optimal: bool

    @property
    def size(self) -> int:
        return len(self.chosen)


def greedy_cover(inst: PairCoverInstance, forced: Sequence[int] = ()) -> list[int]:
    """Maximum-marginal-coverage greedy, seeded with the forced choosers.

    Ties break toward the lowest chooser id.
    """
    all_items = (1 << inst.n_items) - 1
    chosen = list(forced)
    covered = 0
    for v in chosen:
        covered |= inst.coverage[v]
    while covered != all_items:
        best_v = -1
        best_gain = 0
        for v in range(inst.n_choosers):
            gain = (inst.coverage[v] & ~covered).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        if best_v < 0:
            raise ValueError("instance is infeasible: some pair has no separator")
        chosen.append(best_v)
        covered |= inst.coverage[best_v]
    return chosen


class _Stop(Exception):
    pass


class _Search:
    """Sequential branch and bound state."""

    PIVOT_WINDOW = 8  # uncovered items examined per node when picking a pivot

    def __init__(self, inst: PairCoverInstance, budget: int, lower_stop: int):
        self.inst = inst
        self.budget = budget
        self.lower_stop = lower_stop
        self.all_items = (1 << inst.n_items) - 1
        self.nodes = 0
        self.exhausted = True
        self.best: list[int] = []
        # items by ascending static separator count, then index
        counts = [r.bit_count() for r in inst.resolvers]
        self.item_order = sorted(range(inst.n_items), key=lambda p: (counts[p], p))
        # choosers by descending static coverage, then id, for bound scans
        cov_counts = [c.bit_count() for c in inst.coverage]
        self.chooser_order = sorted(
            range(inst.n_choosers), key=lambda v: (-cov_counts[v], v)
        )
        self.cov_counts = cov_counts

    def run(self, start: Sequence[int], seed: Sequence[int]) -> CoverResult:
        self.best = list(seed)
        covered = 0
        for v in start:
            covered |= self.inst.coverage[v]
        try:
            if len(self.best) > self.lower_stop:
                self._search(list(start), covered, 0)
        except _Stop:
            pass
        return CoverResult(
            chosen=tuple(sorted(self.best)),
            nodes=self.nodes,
            optimal=self.exhausted or len(self.best) <= self.lower_stop,
        )

    def _search(self, chosen: list[int], covered: int, banned: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            self.exhausted = False
            raise _Stop
        uncovered = self.all_items & ~covered
        if not uncovered:
            if len(chosen) < len(self.best):
                self.best = list(chosen)
                if len(self.best) <= self.lower_stop:
                    raise _Stop
            return
        slack = len(self.best) - 1 - len(chosen)
        if slack <= 0:
            return
        unc_cnt = uncovered.bit_count()
        # prune: even `slack` more choosers at the best possible marginal
        # coverage cannot finish
        threshold = -(-unc_cnt // slack)  # ceil
        if not self._coverage_reachable(uncovered, banned, threshold):
            return
        pivot_resolvers = self._pick_pivot(uncovered, banned)
        if pivot_resolvers == 0:
            return  # some pair lost all its separators
        cands = sorted(
            _bits(pivot_resolvers),
            key=lambda v: (-(self.inst.coverage[v] & uncovered).bit_count(), v),
        )
        tried = 0
        for v in cands:
            chosen.append(v)
            self._search(chosen, covered | self.inst.coverage[v], banned | tried)
            chosen.pop()
            tried |= 1 << v
            if len(self.best) - 1 - len(chosen) <= 0:
                return  # incumbent improved enough to close this node

    def _coverage_reachable(self, uncovered: int, banned: int, threshold: int) -> bool:
        """True iff some unbanned chooser covers >= threshold uncovered items."""
        coverage = self.inst.coverage
        for v in self.chooser_order:
            if banned >> v & 1:
                continue
            if self.cov_counts[v] < threshold:
                return False  # static counts only shrink dynamically
            if (coverage[v] & uncovered).bit_count() >= threshold:
                return True
        return False

    def _pick_pivot(self, uncovered: int, banned: int) -> int:
        """Separator set of the branching pair.

        Walks items in static separator-count order and takes the dynamic
        minimum among the first PIVOT_WINDOW uncovered ones.
        """
        best_bits = 0
        best_cnt = 1 << 62
        seen = 0
        for p in self.item_order:
            if not uncovered >> p & 1:
                continue
            avail = self.inst.resolvers[p] & ~banned
            cnt = avail.bit_count()
            if cnt == 0:
                return 0
            if cnt < best_cnt:
                best_cnt, best_bits = cnt, avail
                if cnt == 1:
                    break
            seen += 1
            if seen >= self.PIVOT_WINDOW:
                break
        return best_bits


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def min_cover(
    inst: PairCoverInstance,
    forced: Sequence[int] = (),
    budget: int = DEFAULT_BUDGET,
    lower_stop: int = 0,
    threads: int = 1,
) -> CoverResult:
    """Minimum cover containing the forced choosers.

    lower_stop is an external lower bound on the optimum: any incumbent of
    that size is accepted as optimal without exhausting the tree.  A spent
    budget downgrades the result to a verified upper bound
    (optimal=False).  With threads > 1, the root branches are solved in
    worker processes; the optimum is independent of the worker count.
    """
    forced = sorted(set(forced))
    lower_stop = max(lower_stop, len(forced))
    seed = greedy_cover(inst, forced)
    covered = 0
    for v in forced:
        covered |= inst.coverage[v]
    all_items = (1 << inst.n_items) - 1
    if covered == all_items:
        return CoverResult(chosen=tuple(forced), nodes=0, optimal=True)
    if len(seed) <= lower_stop:
        return CoverResult(chosen=tuple(sorted(seed)), nodes=0, optimal=True)
    if threads <= 1:
        search = _Search(inst, budget, lower_stop)
        return search.run(forced, seed)
    return _parallel_min_cover(inst, forced, budget, lower_stop, threads, seed, covered)


def _parallel_min_cover(inst, forced, budget, lower_stop, threads, seed, covered):
    probe = _Search(inst, budget, lower_stop)
    uncovered = probe.all_items & ~covered
    pivot = probe._pick_pivot(uncovered, 0)
    if pivot == 0:
        # forced choices killed every separator of some pair; fall back
        return _Search(inst, budget, lower_stop).run(forced, seed)
    cands = sorted(
        _bits(pivot),
        key=lambda v: (-(inst.coverage[v] & uncovered).bit_count(), v),
    )
    tried = 0
    tasks = []
    for v in cands:
        tasks.append((inst, list(forced) + [v], tried, budget // len(cands) + 1,
                      lower_stop, list(seed)))
        tried |= 1 << v
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=min(threads, len(tasks))) as pool:
        results = pool.map(_solve_branch, tasks)
    best = list(seed)
    nodes = 1
    exhausted = True
    for res in results:
        nodes += res.nodes
        if not res.optimal:
            exhausted = False
        if res.size < len(best):
            best = list(res.chosen)
    return CoverResult(
        chosen=tuple(sorted(best)),
        nodes=nodes,
        optimal=exhausted or len(best) <= lower_stop,
    )


def _solve_branch(args) -> CoverResult:
    inst, start, banned, budget, lower_stop, seed = args
    search = _Search(inst, budget, lower_stop)
    covered = 0
    for v in start:
        covered |= inst.coverage[v]
    search.best = list(seed)
    try:
        search._search(list(start), covered, banned)
    except _Stop:
        pass
    return CoverResult(
        chosen=tuple(sorted(search.best)),
        nodes=search.nodes,
        optimal=search.exhausted,
    )
