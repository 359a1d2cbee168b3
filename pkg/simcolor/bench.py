#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""Benchmark harness: seeded suites, one row per (instance, algorithm).

A failing run is recorded in its row (status = error class name) and the
harness goes on with the next one.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

import psutil

from simcolor.colorers import color_family
from simcolor.constructions import random_family, star_family
from simcolor.exact_oracle import DEFAULT_MAX_CONFLICT_NODES, DEFAULT_TIME_BUDGET, exact_chi
from simcolor.exceptions import ConstructionError, InstanceTooLarge, SimcolorError
from simcolor.graph_core import GraphFamily
from simcolor.logger import logger
from simcolor.timer import Counter

try:
    from pydantic.dataclasses import dataclass
except ImportError:
    from dataclasses import dataclass

SUITES = ('pairs', 'random', 'star')
DEFAULT_STAR_ELLS = (2, 8, 18)
STAR_DELTA = 4


@dataclass
class BenchRow:
    instance: str
    n: int
    ell: int
    delta: int
    union_edges: int
    algorithm: str
    palette_used: Optional[int]
    palette_bound: Optional[int]
    exact_chi: Optional[int]
    wall_time: float
    rss_mb: float
    status: str = 'ok'

    def as_csv(self):
        return [
            self.instance,
            self.n,
            self.ell,
            self.delta,
            self.union_edges,
            self.algorithm,
            '' if self.palette_used is None else self.palette_used,
            '' if self.palette_bound is None else self.palette_bound,
            '' if self.exact_chi is None else self.exact_chi,
            f'{self.wall_time:.6f}',
            f'{self.rss_mb:.1f}',
            self.status,
        ]


class BenchJob:
    """One instance and the algorithms to run on it. Picklable for the worker pool."""

    def __init__(self, instance: str, family: GraphFamily, algorithms: Sequence[str], max_conflict_nodes, time_budget):
        self.instance = instance
        self.family = family
        self.algorithms = tuple(algorithms)
        self.max_conflict_nodes = max_conflict_nodes
        self.time_budget = time_budget

    def __repr__(self):
        return f'BenchJob({self.instance}, {self.family}, {self.algorithms})'


def rss_mb() -> float:
    """Resident memory of the current process in MB."""
    return psutil.Process().memory_info().rss / 1048576


def run_job(job: BenchJob) -> List[BenchRow]:
    family = job.family
    exact = None
    try:
        result = exact_chi(family, max_conflict_nodes=job.max_conflict_nodes, time_budget=job.time_budget)
        if result.is_exact:
            exact = result.chi
    except InstanceTooLarge:
        pass

    rows = []
    for algo in job.algorithms:
        counter = Counter()
        palette_used = palette_bound = None
        try:
            _, certificate = color_family(family, algo)
            palette_used, palette_bound = certificate.palette_used, certificate.palette_bound
            status = 'ok'
        except SimcolorError as e:
            logger.error(f"Bench {job.instance}/{algo}: {e.__class__.__name__}: {e}")
            status = e.__class__.__name__
        rows.append(
            BenchRow(
                instance=job.instance,
                n=family.num_vertices,
                ell=family.ell,
                delta=family.delta,
                union_edges=len(family.union.edges),
                algorithm=algo,
                palette_used=palette_used,
                palette_bound=palette_bound,
                exact_chi=exact,
                wall_time=counter.get(),
                rss_mb=rss_mb(),
                status=status,
            )
        )
    return rows


def build_suite(
    suite: str,
    instances: int = 10,
    n: int = 12,
    ell: int = 2,
    delta: int = 3,
    overlap: float = 0.3,
    seed: int = 0,
    star_ells: Sequence[int] = DEFAULT_STAR_ELLS,
    max_conflict_nodes: int = DEFAULT_MAX_CONFLICT_NODES,
    time_budget: Optional[float] = DEFAULT_TIME_BUDGET,
) -> List[BenchJob]:
    """The jobs of a suite.

    pairs:  seeded random pairs, algorithms sqrt and pair.
    random: seeded random families of ell members, sqrt and trivial (plus pair or vizing when they apply).
    star:   star_family(ell, 4) for each ell of star_ells, sqrt and trivial.
    """
    if suite not in SUITES:
        raise ConstructionError(f"Unknown bench suite {suite!r} (one of {', '.join(SUITES)})")
    if instances < 0:
        raise ConstructionError(f"Negative number of instances {instances}")

    jobs = []
    if suite == 'pairs':
        for i in range(instances):
            family = random_family(n, 2, delta, overlap, seed + i)
            jobs.append(BenchJob(f'pairs-{seed + i}', family, ('sqrt', 'pair'), max_conflict_nodes, time_budget))
    elif suite == 'random':
        algorithms = ['sqrt', 'trivial']
        if ell == 2:
            algorithms.append('pair')
        elif ell == 1:
            algorithms.append('vizing')
        for i in range(instances):
            family = random_family(n, ell, delta, overlap, seed + i)
            jobs.append(BenchJob(f'random-{seed + i}', family, algorithms, max_conflict_nodes, time_budget))
    else:
        for star_ell in star_ells:
            family = star_family(star_ell, STAR_DELTA)
            jobs.append(BenchJob(f'star-{star_ell}', family, ('sqrt', 'trivial'), max_conflict_nodes, time_budget))
    return jobs


def run_bench(jobs: Sequence[BenchJob], workers: int = 1) -> List[BenchRow]:
    """Run the jobs, on a process pool when workers > 1. Rows keep the job order."""
    counter = Counter()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(run_job, jobs))
    else:
        results = [run_job(job) for job in jobs]
    rows = [row for job_rows in results for row in job_rows]
    logger.info(f"Bench: {len(jobs)} instances, {len(rows)} rows in {counter.get():.2f}s ({workers} workers)")
    return rows
