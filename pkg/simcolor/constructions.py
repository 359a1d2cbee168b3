#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""Instance generators.

Star families: the leaves of a star are cut in blocks A_1, A_2, ... and every
member is the union of two blocks. Any two star edges then meet in a member,
so every edge needs its own color.
"""

import math
import random
from itertools import combinations

from simcolor.exceptions import ConstructionError, OddDelta, TooFewGraphs
from simcolor.graph_core import GraphFamily, SimpleGraph
from simcolor.logger import logger

# Random families: attempts per wanted edge before giving up on a member
RANDOM_RETRY_FACTOR = 20


class StarFamilyParams:
    """Parameters of star_family: k = floor(sqrt(ell / 2)), 2k blocks of delta / 2 leaves."""

    def __init__(self, ell: int, delta: int):
        if delta % 2 == 1:
            raise OddDelta(f"The star family needs an even maximum degree ({delta} given)")
        if delta < 2:
            raise ConstructionError(f"The star family needs delta >= 2 ({delta} given)")
        self.ell = ell
        self.delta = delta
        self.k = math.isqrt(max(ell, 0) // 2)
        if self.k < 1:
            raise TooFewGraphs(f"ell = {ell} gives k = 0, at least ell = 2 is needed")

    def __repr__(self):
        return f'StarFamilyParams(ell={self.ell}, delta={self.delta}, k={self.k})'

    @property
    def num_blocks(self) -> int:
        return 2 * self.k

    @property
    def block_size(self) -> int:
        return self.delta // 2

    @property
    def num_members(self) -> int:
        return self.k * (2 * self.k - 1)

    @property
    def num_leaves(self) -> int:
        return self.k * self.delta


def _star_blocks(num_blocks, block_size):
    """Consecutive blocks of leaves 1, 2, ... attached to the center 0."""
    return [[(0, 1 + b * block_size + i) for i in range(block_size)] for b in range(num_blocks)]


def _pair_members(blocks):
    return [blocks[i] + blocks[j] for i, j in combinations(range(len(blocks)), 2)]


def star_family(ell: int, delta: int, pad=False) -> GraphFamily:
    """Star with k * delta leaves, one member per pair of blocks (k(2k - 1) <= ell members).

    With pad, empty members are added up to ell members.
    """
    params = StarFamilyParams(ell, delta)
    blocks = _star_blocks(params.num_blocks, params.block_size)
    members = _pair_members(blocks)
    if pad:
        members.extend([] for _ in range(ell - len(members)))
    logger.debug(f"Star family {params}: {len(members)} members")
    return GraphFamily.from_edge_lists(params.num_leaves + 1, members)


def star_three(delta: int) -> GraphFamily:
    """Star with 3 floor(delta / 2) leaves and the three members A_i + A_j."""
    if delta < 2:
        raise ConstructionError(f"star_three needs delta >= 2 ({delta} given)")
    size = delta // 2
    blocks = _star_blocks(3, size)
    return GraphFamily.from_edge_lists(3 * size + 1, _pair_members(blocks))


def random_family(n: int, ell: int, delta: int, overlap: float, seed: int, retry_factor=RANDOM_RETRY_FACTOR):
    """Seeded random family: ell members on n vertices, each of maximum degree <= delta.

    Every member aims at n * delta // 2 edges. Each random pair accepted by a
    member is copied into every other member with probability overlap, when
    their degree cap allows it. Pairs breaking the cap are rejected; a member
    gives up after retry_factor attempts per wanted edge.
    """
    if n < 2:
        raise ConstructionError(f"A random family needs n >= 2 ({n} given)")
    if ell < 1:
        raise ConstructionError(f"A random family needs ell >= 1 ({ell} given)")
    if delta < 0:
        raise ConstructionError(f"Negative maximum degree {delta}")
    if not 0.0 <= overlap <= 1.0:
        raise ConstructionError(f"Overlap must be in [0, 1] ({overlap} given)")

    rng = random.Random(seed)
    edges = [set() for _ in range(ell)]
    degrees = [[0] * n for _ in range(ell)]
    target = min(n * delta // 2, n * (n - 1) // 2)

    def fits(i, u, v):
        return (u, v) not in edges[i] and degrees[i][u] < delta and degrees[i][v] < delta

    def add(i, u, v):
        edges[i].add((u, v))
        degrees[i][u] += 1
        degrees[i][v] += 1

    for i in range(ell):
        attempts = retry_factor * target
        while len(edges[i]) < target and attempts > 0:
            attempts -= 1
            u, v = sorted(rng.sample(range(n), 2))
            if not fits(i, u, v):
                continue
            add(i, u, v)
            for j in range(ell):
                if j != i and rng.random() < overlap and fits(j, u, v):
                    add(j, u, v)

    family = GraphFamily.from_edge_lists(n, [sorted(e) for e in edges])
    logger.debug(f"Random family (n={n}, ell={ell}, delta={delta}, overlap={overlap}, seed={seed}): {family}")
    return family


def identical_pair(graph: SimpleGraph) -> GraphFamily:
    """Two copies of the same graph: simultaneous coloring is plain edge coloring."""
    return GraphFamily(graph.num_vertices, [graph, graph])
