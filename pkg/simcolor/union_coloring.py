#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""Simultaneous coloring of any number of graphs.

The union edges are split on their multiplicity: edges held by at least k
members (the heavy part) are edge colored as one graph, the other ones (the
light part) are colored greedily on a disjoint palette above it.
"""

import math
from typing import Iterable, Tuple

from simcolor.bounds import BoundCertificate, bound_sqrt, bound_sqrt_exact, bound_trivial, sqrt_threshold
from simcolor.exceptions import CertificateError, InvariantError, PaletteExhausted, UnknownEdge
from simcolor.graph_core import Edge, GraphFamily, SimpleGraph, SimultaneousColoring, UnionGraph
from simcolor.logger import logger
from simcolor.vizing import vizing_color


class MultiplicitySplit:
    """Partition of the union edges around the multiplicity threshold k."""

    def __init__(self, k: float, heavy: SimpleGraph, light: SimpleGraph):
        self.k = k
        self.heavy = heavy
        self.light = light

    def __repr__(self):
        return f'MultiplicitySplit(k={self.k:.3f}, heavy={len(self.heavy)}, light={len(self.light)})'

    @property
    def heavy_edges(self):
        return self.heavy.edge_set

    @property
    def light_edges(self):
        return self.light.edge_set


def split_by_multiplicity(union: UnionGraph, k: float) -> MultiplicitySplit:
    """Heavy edges have multiplicity >= k, light ones < k (k may be any positive real)."""
    if not k > 0:
        raise ValueError(f"Threshold k must be positive ({k} given)")
    # Multiplicities are integers: m >= k iff m >= ceil(k)
    threshold = math.ceil(k)
    heavy, light = [], []
    for e in union.edges:
        (heavy if union.multiplicity(e) >= threshold else light).append(e)
    split = MultiplicitySplit(k, union.base.subgraph(heavy), union.base.subgraph(light))

    # A vertex sees at most ell * delta edges counted with multiplicity
    cap = union.num_members * union.delta // threshold
    for v in range(union.base.num_vertices):
        if split.heavy.degree(v) > cap:
            raise InvariantError(f"Heavy degree {split.heavy.degree(v)} at vertex {v} exceeds {cap}")
    logger.debug(f"{split} (heavy degree {split.heavy.max_degree} <= {cap})")
    return split


def greedy_extend(
    family: GraphFamily, partial: SimultaneousColoring, edges: Iterable[Edge], palette: range
) -> SimultaneousColoring:
    """Extend partial to the given edges, one at a time, with the smallest free color of palette.

    The color of an edge e avoids every colored edge which touches e and shares
    a member with it.
    """
    union = family.union
    assignment = dict(partial.assignment)
    for e in edges:
        if e not in union.membership:
            raise UnknownEdge(f"Edge {e.u}-{e.v} is not in the union")
        if e in assignment:
            raise InvariantError(f"Edge {e.u}-{e.v} is already colored")
        mask = union.mask(e)
        forbidden = set()
        for x in e:
            for f in union.base.incident(x):
                if f != e and union.mask(f) & mask and f in assignment:
                    forbidden.add(assignment[f])
        color = next((c for c in palette if c not in forbidden), None)
        if color is None:
            raise PaletteExhausted(f"No free color in {palette} for edge {e.u}-{e.v} ({len(forbidden)} forbidden)")
        assignment[e] = color
    return SimultaneousColoring(assignment)


def color_with_threshold(family: GraphFamily, k: float) -> Tuple[SimultaneousColoring, BoundCertificate]:
    """Multiplicity split at k, heavy part edge colored, light part greedy above it."""
    union = family.union
    ell, delta = family.ell, family.delta
    split = split_by_multiplicity(union, k)

    heavy = vizing_color(split.heavy)
    offset = heavy.palette_size
    width = 2 * (math.ceil(k) - 1) * max(delta - 1, 0) + 1
    coloring = greedy_extend(family, heavy, split.light.edges, range(offset, offset + width))

    certificate = BoundCertificate(
        algorithm='sqrt',
        palette_used=coloring.colors_used,
        palette_bound=bound_sqrt_exact(ell, delta, k),
        general_bound=bound_sqrt(ell, delta),
        ell=ell,
        delta=delta,
        k=k,
    )
    if not certificate.holds():
        raise CertificateError(f"{certificate.palette_used} colors used, bound is {certificate.palette_bound}")
    return coloring, certificate


def color_union_sqrt(family: GraphFamily, sweep_k=False) -> Tuple[SimultaneousColoring, BoundCertificate]:
    """Color the family with at most ceil(2 sqrt(2 ell) delta - sqrt(2 ell) + 2) colors.

    The threshold is k = sqrt(ell / 2). With sweep_k, the integer thresholds
    1..ell are tried as well and the coloring with the fewest colors is kept.
    """
    ks = [sqrt_threshold(family.ell)]
    if sweep_k:
        ks.extend(float(i) for i in range(1, family.ell + 1) if float(i) != ks[0])

    best = None
    for k in ks:
        coloring, certificate = color_with_threshold(family, k)
        logger.debug(f"Threshold k={k:.3f}: {certificate.palette_used} colors (bound {certificate.palette_bound})")
        if best is None or certificate.palette_used < best[1].palette_used:
            best = (coloring, certificate)
    return best


def color_union_trivial(family: GraphFamily) -> Tuple[SimultaneousColoring, BoundCertificate]:
    """Edge color the union as a single graph: at most ell * delta + 1 colors."""
    union = family.union
    coloring = SimultaneousColoring(vizing_color(union.base).assignment)
    certificate = BoundCertificate(
        algorithm='trivial',
        palette_used=coloring.colors_used,
        palette_bound=union.base.max_degree + 1,
        general_bound=bound_trivial(family.ell, family.delta),
        ell=family.ell,
        delta=family.delta,
    )
    if not certificate.holds():
        raise CertificateError(f"{certificate.palette_used} colors used, bound is {certificate.palette_bound}")
    return coloring, certificate
