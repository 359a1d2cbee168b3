#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""Exact simultaneous chromatic number of small families.

The family is reduced to its conflict graph, which is vertex colored by
branch and bound: a greedy clique gives the lower bound, DSATUR the first
upper bound, and the search branches on the most saturated node. A node may
only open the next unused color, which removes the palette permutations.
"""

import os
from itertools import combinations, product
from typing import Iterable, List, Optional

from simcolor.constructions import random_family
from simcolor.documents import write_family
from simcolor.exceptions import ConstructionError, InstanceTooLarge
from simcolor.globals import safe_makedirs
from simcolor.graph_core import ConflictGraph, GraphFamily, SimultaneousColoring, conflict_graph
from simcolor.logger import logger
from simcolor.timer import Counter, Timer

try:
    from pydantic.dataclasses import dataclass
except ImportError:
    from dataclasses import dataclass

EXACT = 'exact'
TIMED_OUT = 'timed_out'
TOO_LARGE = 'too_large'

DEFAULT_MAX_CONFLICT_NODES = 30
DEFAULT_TIME_BUDGET = 60.0
DEFAULT_BRUTE_FORCE_MAX_EDGES = 8


class ExactResult:
    """Outcome of exact_chi.

    With status 'exact', chi is the optimum. With 'timed_out', chi is the best
    palette found (best_upper) and the optimum lies in [best_lower, best_upper].
    """

    def __init__(self, chi, optimal_coloring, nodes_explored, status, best_upper, best_lower):
        self.chi = chi
        self.optimal_coloring = optimal_coloring
        self.nodes_explored = nodes_explored
        self.status = status
        self.best_upper = best_upper
        self.best_lower = best_lower

    def __repr__(self):
        return (
            f'ExactResult(chi={self.chi}, status={self.status}, '
            f'bounds=[{self.best_lower}, {self.best_upper}], nodes={self.nodes_explored})'
        )

    @property
    def is_exact(self) -> bool:
        return self.status == EXACT

    def as_dict(self):
        return {
            'chi': self.chi,
            'status': self.status,
            'best_lower': self.best_lower,
            'best_upper': self.best_upper,
            'nodes_explored': self.nodes_explored,
        }


def greedy_clique(cg: ConflictGraph) -> List[int]:
    """Largest of the greedy cliques grown from every node."""
    best = []
    for seed in sorted(range(cg.num_nodes), key=lambda i: (-cg.degree(i), i)):
        if cg.degree(seed) + 1 <= len(best):
            break
        clique = [seed]
        candidates = set(cg.neighbors(seed))
        while candidates:
            x = min(candidates, key=lambda i: (-len(cg.neighbors(i) & candidates), i))
            clique.append(x)
            candidates &= cg.neighbors(x)
        if len(clique) > len(best):
            best = clique
    return best


def dsatur(cg: ConflictGraph) -> List[int]:
    """DSATUR greedy coloring: the most saturated node takes its smallest free color."""
    colors = [-1] * cg.num_nodes
    seen = [set() for _ in range(cg.num_nodes)]
    for _ in range(cg.num_nodes):
        v = min(
            (i for i in range(cg.num_nodes) if colors[i] < 0),
            key=lambda i: (-len(seen[i]), -cg.degree(i), i),
        )
        c = 0
        while c in seen[v]:
            c += 1
        colors[v] = c
        for w in cg.neighbors(v):
            seen[w].add(c)
    return colors


class _BranchAndBound:
    def __init__(self, cg: ConflictGraph, lower: int, upper: List[int], timer: Timer):
        self.cg = cg
        self.lower = lower
        self.best_colors = list(upper)
        self.best = max(upper, default=-1) + 1
        self.timer = timer
        self.nodes_explored = 0
        self.timed_out = False

        self.colors = [-1] * cg.num_nodes
        # Per node: color -> number of colored neighbors holding it
        self.around = [{} for _ in range(cg.num_nodes)]

    def done(self):
        return self.timed_out or self.best <= self.lower

    def assign(self, v, c):
        self.colors[v] = c
        for w in self.cg.neighbors(v):
            self.around[w][c] = self.around[w].get(c, 0) + 1

    def unassign(self, v):
        c = self.colors[v]
        self.colors[v] = -1
        for w in self.cg.neighbors(v):
            self.around[w][c] -= 1
            if not self.around[w][c]:
                del self.around[w][c]

    def select(self):
        """Uncolored node with most distinct neighbor colors, then most uncolored neighbors, then lowest index."""
        best, best_key = None, None
        for i in range(self.cg.num_nodes):
            if self.colors[i] >= 0:
                continue
            free_degree = sum(1 for w in self.cg.neighbors(i) if self.colors[w] < 0)
            key = (-len(self.around[i]), -free_degree, i)
            if best_key is None or key < best_key:
                best, best_key = i, key
        return best

    def branch(self, colored, used):
        if self.done():
            return
        self.nodes_explored += 1
        if self.timer.finished():
            self.timed_out = True
            return
        if used >= self.best:
            return
        if colored == self.cg.num_nodes:
            self.best = used
            self.best_colors = list(self.colors)
            logger.debug(f"Branch and bound: {used} colors after {self.nodes_explored} nodes")
            return

        v = self.select()
        # Colors 0..used-1 plus at most one new color, and strictly fewer than the best
        for c in range(min(used + 1, self.best - 1)):
            # best may have dropped in an earlier child
            if c >= self.best - 1:
                break
            if c in self.around[v]:
                continue
            self.assign(v, c)
            self.branch(colored + 1, max(used, c + 1))
            self.unassign(v)
            if self.done():
                return

    def run(self):
        if not self.done():
            self.branch(0, 0)


def exact_chi(
    family: GraphFamily,
    max_conflict_nodes: int = DEFAULT_MAX_CONFLICT_NODES,
    time_budget: Optional[float] = DEFAULT_TIME_BUDGET,
    allow_oversize: bool = False,
) -> ExactResult:
    """Minimum palette of a simultaneous coloring of family.

    Raise InstanceTooLarge when the union has more than max_conflict_nodes edges,
    unless allow_oversize is set: the search then runs anyway and may time out.
    """
    cg = conflict_graph(family)
    if cg.num_nodes > max_conflict_nodes and not allow_oversize:
        raise InstanceTooLarge(f"{cg.num_nodes} union edges, the exact solver is capped at {max_conflict_nodes}")
    if cg.num_nodes == 0:
        return ExactResult(0, SimultaneousColoring({}), 0, EXACT, 0, 0)

    counter = Counter()
    lower = len(greedy_clique(cg))
    upper = dsatur(cg)
    search = _BranchAndBound(cg, lower, upper, Timer(time_budget))
    search.run()

    status = TIMED_OUT if search.timed_out else EXACT
    coloring = SimultaneousColoring({cg.nodes[i]: c for i, c in enumerate(search.best_colors)})
    result = ExactResult(
        chi=search.best,
        optimal_coloring=coloring,
        nodes_explored=search.nodes_explored,
        status=status,
        best_upper=search.best,
        best_lower=search.best if status == EXACT else lower,
    )
    logger.debug(
        f"Exact chi of {family} ({cg}): clique {lower}, DSATUR {max(upper) + 1}, {result} in {counter.get():.3f}s"
    )
    return result


def brute_force_chi(family: GraphFamily, max_edges: int = DEFAULT_BRUTE_FORCE_MAX_EDGES) -> int:
    """Smallest c such that some assignment of c colors is proper on every member.

    Tries every assignment, the first union edge being pinned to color 0. The
    constraints are read from the members, not from the conflict graph.
    """
    edges = family.union.edges
    if len(edges) > max_edges:
        raise InstanceTooLarge(f"{len(edges)} union edges, brute force is capped at {max_edges}")
    if not edges:
        return 0

    index = {e: i for i, e in enumerate(edges)}
    constraints = set()
    for member in family.members:
        for v in range(member.num_vertices):
            for e, f in combinations(member.incident(v), 2):
                constraints.add((index[e], index[f]))

    for c in range(1, len(edges) + 1):
        for rest in product(range(c), repeat=len(edges) - 1):
            colors = (0,) + rest
            if all(colors[i] != colors[j] for i, j in constraints):
                return c
    return len(edges)


@dataclass
class ProbeRow:
    """One probed family. excess is chi - delta when chi is known."""

    trial: int
    seed: Optional[int]
    n: int
    delta: int
    union_edges: int
    chi: Optional[int]
    excess: Optional[int]
    status: str
    flagged: bool
    artifact: Optional[str] = None

    def as_dict(self):
        return {
            'trial': self.trial,
            'seed': self.seed,
            'n': self.n,
            'delta': self.delta,
            'union_edges': self.union_edges,
            'chi': self.chi,
            'excess': self.excess,
            'status': self.status,
            'flagged': self.flagged,
            'artifact': self.artifact,
        }


class ProbeReport:
    """Rows of a probe run. A flagged row has an exact chi above delta + 1."""

    def __init__(self, rows: List[ProbeRow] = None):
        self.rows = list(rows or [])

    def __len__(self):
        return len(self.rows)

    @property
    def flagged(self) -> List[ProbeRow]:
        return [r for r in self.rows if r.flagged]

    @property
    def max_excess(self) -> Optional[int]:
        return max((r.excess for r in self.rows if r.excess is not None), default=None)

    def as_dict(self):
        return {
            'trials': len(self.rows),
            'flagged': len(self.flagged),
            'max_excess': self.max_excess,
            'rows': [r.as_dict() for r in self.rows],
        }


def probe_families(
    families: Iterable[GraphFamily],
    seeds: Optional[Iterable[Optional[int]]] = None,
    max_conflict_nodes: int = DEFAULT_MAX_CONFLICT_NODES,
    time_budget: Optional[float] = DEFAULT_TIME_BUDGET,
    artifact_dir: Optional[str] = None,
) -> ProbeReport:
    """Compute the exact chi of every family and flag the ones above delta + 1.

    Flagged families are written as JSON into artifact_dir when it is given.
    """
    families = list(families)
    seeds = list(seeds) if seeds is not None else [None] * len(families)
    report = ProbeReport()
    for trial, (family, seed) in enumerate(zip(families, seeds)):
        union_edges = len(family.union.edges)
        try:
            result = exact_chi(family, max_conflict_nodes=max_conflict_nodes, time_budget=time_budget)
        except InstanceTooLarge as e:
            logger.info(f"Probe trial {trial} skipped: {e}")
            chi, status = None, TOO_LARGE
        else:
            chi, status = result.chi, result.status

        flagged = status == EXACT and chi > family.delta + 1
        row = ProbeRow(
            trial=trial,
            seed=seed,
            n=family.num_vertices,
            delta=family.delta,
            union_edges=union_edges,
            chi=chi,
            excess=None if chi is None else chi - family.delta,
            status=status,
            flagged=flagged,
        )
        if flagged:
            logger.warning(f"Probe trial {trial} (seed {seed}): chi {chi} > delta + 1 = {family.delta + 1}")
            if artifact_dir is not None:
                safe_makedirs(artifact_dir)
                name = f'probe-seed-{seed}.json' if seed is not None else f'probe-trial-{trial}.json'
                row.artifact = os.path.join(artifact_dir, name)
                write_family(row.artifact, family)
        report.rows.append(row)
    return report


def probe_pair_conjecture(
    trials: int,
    n: int,
    delta: int,
    overlap: float,
    seed: int,
    max_conflict_nodes: int = DEFAULT_MAX_CONFLICT_NODES,
    time_budget: Optional[float] = DEFAULT_TIME_BUDGET,
    artifact_dir: Optional[str] = None,
) -> ProbeReport:
    """Exact chi of seeded random pairs (trial t uses seed + t), reported against delta + 1.

    Report only: nothing here passes or fails.
    """
    if trials < 0:
        raise ConstructionError(f"Negative number of trials {trials}")
    seeds = [seed + t for t in range(trials)]
    families = (random_family(n, 2, delta, overlap, s) for s in seeds)
    report = probe_families(
        families,
        seeds=seeds,
        max_conflict_nodes=max_conflict_nodes,
        time_budget=time_budget,
        artifact_dir=artifact_dir,
    )
    logger.info(f"Probe: {len(report)} pairs, {len(report.flagged)} flagged, max excess {report.max_excess}")
    return report
