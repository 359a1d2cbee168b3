#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""Simultaneous coloring of two graphs with floor(3 delta / 2) + 4 colors.

Edges held by a single member (private parts) are halved by a degree factor K.
The leftovers L1 and L2 are colored on one shared palette, since no member holds
edges of both. The common edges together with K1 and K2 form R, colored above.
"""

from typing import List, Tuple

from simcolor.bounds import BoundCertificate, bound_pair
from simcolor.exceptions import CertificateError, InvariantError, WrongArity
from simcolor.graph_core import GraphFamily, SimpleGraph, SimultaneousColoring
from simcolor.logger import logger
from simcolor.vizing import vizing_color

__all__ = [
    'FactorDecomposition',
    'FactorWindow',
    'PairSplit',
    'bound_pair',
    'color_pair',
    'decompose_pair',
    'half_factor',
    'split_private_common',
]


class PairSplit:
    """Common edges (both members) and private edges (exactly one member)."""

    def __init__(self, common: SimpleGraph, private_1: SimpleGraph, private_2: SimpleGraph):
        self.common = common
        self.private_1 = private_1
        self.private_2 = private_2

    def __repr__(self):
        return f'PairSplit(common={len(self.common)}, private=({len(self.private_1)}, {len(self.private_2)}))'

    @property
    def privates(self):
        return (self.private_1, self.private_2)


class FactorWindow:
    """Degree window [g(v), f(v)] around half of the degree.

    g(v) = max(0, ceil(d/2 - 1)), f(v) = ceil(d/2), theta = 1/2.
    """

    theta = 0.5

    def __init__(self, graph: SimpleGraph):
        degrees = graph.degrees()
        self.degrees = degrees
        self.f = [(d + 1) // 2 for d in degrees]
        self.g = [max(0, (d + 1) // 2 - 1) for d in degrees]

    def conditions_hold(self) -> bool:
        """Integer g < f on non-isolated vertices and g <= theta * d <= f everywhere."""
        for d, g, f in zip(self.degrees, self.g, self.f):
            if d >= 1 and not g < f:
                return False
            if not g <= self.theta * d <= f:
                return False
        return True

    def violations(self, factor: SimpleGraph) -> List[int]:
        """Vertices whose factor degree falls outside the window."""
        return [v for v in range(len(self.degrees)) if not self.g[v] <= factor.degree(v) <= self.f[v]]


class FactorDecomposition:
    """K_i is a degree factor of private part i, L_i the rest of it.

    R = common + K_1 + K_2 and L = L_1 + L_2 cover the union.
    """

    def __init__(self, k_1, k_2, l_1, l_2, r, l):
        self.k_1 = k_1
        self.k_2 = k_2
        self.l_1 = l_1
        self.l_2 = l_2
        self.r = r
        self.l = l  # noqa: E741

    def __repr__(self):
        return f'FactorDecomposition(L={len(self.l)}, R={len(self.r)})'


def split_private_common(family: GraphFamily) -> PairSplit:
    if family.ell != 2:
        raise WrongArity(f"The pair algorithm needs exactly 2 member graphs ({family.ell} given)")
    union = family.union
    common, private_1, private_2 = [], [], []
    for e in union.edges:
        mask = union.mask(e)
        if mask == 0b11:
            common.append(e)
        elif mask == 0b01:
            private_1.append(e)
        else:
            private_2.append(e)
    base = union.base
    return PairSplit(base.subgraph(common), base.subgraph(private_1), base.subgraph(private_2))


def _euler_circuit(start, adjacency, used, pointer):
    """Hierholzer walk from start, always leaving by the lowest unused edge.

    Return the edge indexes of the circuit in walking order.
    """
    stack = [(start, None)]
    circuit = []
    while stack:
        v, via = stack[-1]
        while pointer[v] < len(adjacency[v]) and used[adjacency[v][pointer[v]][1]]:
            pointer[v] += 1
        if pointer[v] == len(adjacency[v]):
            stack.pop()
            if via is not None:
                circuit.append(via)
        else:
            w, idx = adjacency[v][pointer[v]]
            used[idx] = True
            stack.append((w, idx))
    circuit.reverse()
    return circuit


def half_factor(graph: SimpleGraph) -> SimpleGraph:
    """Return K with max(0, ceil(d/2) - 1) <= deg_K(v) <= ceil(d/2) at every vertex.

    A dummy vertex (index n) is joined to every odd-degree vertex so that every
    component is Eulerian. Edges are split alternately along an Euler circuit of
    each component. The dummy component starts at the dummy vertex; another
    component with an odd circuit has a single imbalanced vertex (its start), and
    K takes the class which is short there.
    """
    n = graph.num_vertices
    dummy = n
    pairs = [tuple(e) for e in graph.edges]
    odd = [v for v in range(n) if graph.degree(v) % 2 == 1]
    pairs.extend((v, dummy) for v in odd)
    real = len(graph.edges)

    # Graph edges are sorted and the dummy has the highest index: adjacency lists are sorted
    adjacency = [[] for _ in range(n + 1)]
    for idx, (a, b) in enumerate(pairs):
        adjacency[a].append((b, idx))
        adjacency[b].append((a, idx))
    used = [False] * len(pairs)
    pointer = [0] * (n + 1)

    kept = []
    for start in ([dummy] if odd else []) + list(range(n)):
        if all(used[idx] for _, idx in adjacency[start]):
            continue
        circuit = _euler_circuit(start, adjacency, used, pointer)
        keep = 1 if len(circuit) % 2 == 1 and start != dummy else 0
        kept.extend(idx for pos, idx in enumerate(circuit) if pos % 2 == keep and idx < real)

    factor = graph.subgraph(pairs[idx] for idx in kept)
    window = FactorWindow(graph)
    bad = window.violations(factor)
    if bad:
        v = bad[0]
        raise InvariantError(
            f"Factor degree {factor.degree(v)} at vertex {v} outside [{window.g[v]}, {window.f[v]}] ({len(bad)} vertices)"
        )
    return factor


def decompose_pair(family: GraphFamily) -> FactorDecomposition:
    """Build K_i, L_i, R and L, checking the degree bounds of each piece."""
    split = split_private_common(family)
    delta = family.delta
    n = family.num_vertices

    factors, leftovers = [], []
    for private in split.privates:
        k = half_factor(private)
        left = private.subgraph(private.edge_set - k.edge_set)
        for v in range(n):
            if left.degree(v) > private.degree(v) // 2 + 1 or left.degree(v) > delta // 2 + 1:
                raise InvariantError(f"Leftover degree {left.degree(v)} at vertex {v} (private degree {private.degree(v)})")
        factors.append(k)
        leftovers.append(left)

    r = SimpleGraph(n, split.common.edge_set | factors[0].edge_set | factors[1].edge_set)
    if r.max_degree > delta + 1:
        raise InvariantError(f"R has degree {r.max_degree} > {delta + 1}")
    l = SimpleGraph(n, leftovers[0].edge_set | leftovers[1].edge_set)  # noqa: E741
    decomposition = FactorDecomposition(factors[0], factors[1], leftovers[0], leftovers[1], r, l)
    logger.debug(f"{split} -> {decomposition}")
    return decomposition


def color_pair(family: GraphFamily) -> Tuple[SimultaneousColoring, BoundCertificate]:
    """Color two graphs with at most floor(3 delta / 2) + 4 colors."""
    decomposition = decompose_pair(family)

    # L_1 and L_2 share the low palette
    low_1 = vizing_color(decomposition.l_1)
    low_2 = vizing_color(decomposition.l_2)
    width = max(low_1.palette_size, low_2.palette_size)
    low = SimultaneousColoring({**low_1.assignment, **low_2.assignment})

    high = vizing_color(decomposition.r).shifted(width)
    coloring = low.merged(high)

    bound = bound_pair(family.delta)
    certificate = BoundCertificate(
        algorithm='pair',
        palette_used=coloring.colors_used,
        palette_bound=bound,
        general_bound=bound,
        ell=2,
        delta=family.delta,
    )
    if not certificate.holds():
        raise CertificateError(f"{certificate.palette_used} colors used, bound is {certificate.palette_bound}")
    logger.debug(f"Pair coloring: L palette {width}, R palette {high.palette_size - width}")
    return coloring, certificate
