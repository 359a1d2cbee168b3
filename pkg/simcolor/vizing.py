#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""Proper edge coloring of a simple graph with at most max_degree + 1 colors.

Edges are inserted one at a time in canonical order. To color uv we build a
maximal fan at u, flip the alternating path of the two colors free at u and at
the fan end, rotate the fan prefix and color the last edge of the prefix.
"""

from typing import Dict, List, Tuple

from simcolor.bounds import BoundCertificate
from simcolor.exceptions import CertificateError, InvariantError, WrongArity
from simcolor.graph_core import Edge, GraphFamily, SimpleGraph, SimultaneousColoring
from simcolor.logger import logger


class EdgeColoring(SimultaneousColoring):
    """Proper edge coloring of a single graph."""


class _FanColorer:
    """Coloring state: edge colors and, per vertex, the neighbor reached by each color."""

    def __init__(self, graph: SimpleGraph):
        self.graph = graph
        self.num_colors = graph.max_degree + 1
        self.colors: Dict[Edge, int] = {}
        self.at: List[Dict[int, int]] = [{} for _ in range(graph.num_vertices)]

    def free(self, x):
        """Smallest color missing at x."""
        for c in range(self.num_colors):
            if c not in self.at[x]:
                return c
        raise InvariantError(f"No free color at vertex {x}")

    def is_free(self, x, c):
        return c not in self.at[x]

    def edge_color(self, x, y):
        return self.colors.get(Edge.make(x, y))

    def set_color(self, x, y, c):
        self.colors[Edge.make(x, y)] = c
        self.at[x][c] = y
        self.at[y][c] = x

    def clear_color(self, x, y):
        c = self.colors.pop(Edge.make(x, y))
        del self.at[x][c]
        del self.at[y][c]

    def maximal_fan(self, u, v):
        """Fan at u starting with the uncolored edge uv.

        Each next fan vertex w is the lowest-index neighbor of u such that the
        color of uw is free at the current fan end.
        """
        fan = [v]
        in_fan = {v}
        extended = True
        while extended:
            extended = False
            last = fan[-1]
            for w in self.graph.neighbors(u):
                if w in in_fan:
                    continue
                c = self.edge_color(u, w)
                if c is not None and self.is_free(last, c):
                    fan.append(w)
                    in_fan.add(w)
                    extended = True
                    break
        return fan

    def invert_path(self, x, c, d):
        """Swap c and d along the c/d alternating path leaving x by its d edge."""
        path = []
        visited = {x}
        current, wanted = x, d
        while wanted in self.at[current]:
            nxt = self.at[current][wanted]
            if nxt in visited:
                raise InvariantError(f"Alternating {c}/{d} path from {x} comes back to {nxt}")
            path.append((current, nxt, wanted))
            visited.add(nxt)
            current = nxt
            wanted = c if wanted == d else d
        for a, b, _ in path:
            self.clear_color(a, b)
        for a, b, col in path:
            self.set_color(a, b, c if col == d else d)
        return len(path)

    def color_edge(self, u, v):
        fan = self.maximal_fan(u, v)
        c = self.free(u)
        d = self.free(fan[-1])
        if c != d:
            self.invert_path(u, c, d)

        # First vertex of the fan where d is free, while the prefix is still a fan
        stop = None
        for i, w in enumerate(fan):
            if i > 0 and not self.is_free(fan[i - 1], self.edge_color(u, w)):
                break
            if self.is_free(w, d):
                stop = i
                break
        if stop is None:
            raise InvariantError(f"No fan vertex with color {d} free while coloring {u}-{v}")

        # Rotate the prefix then close it with d
        shifted = [self.edge_color(u, fan[j + 1]) for j in range(stop)]
        for j in range(1, stop + 1):
            self.clear_color(u, fan[j])
        for j, col in enumerate(shifted):
            self.set_color(u, fan[j], col)
        self.set_color(u, fan[stop], d)

    def run(self) -> EdgeColoring:
        for e in self.graph.edges:
            self.color_edge(e.u, e.v)
        return EdgeColoring(self.colors)


def vizing_color(graph: SimpleGraph) -> EdgeColoring:
    """Return a proper edge coloring of graph using at most max_degree + 1 colors.

    The result only depends on the graph: edges are processed in sorted order and
    every choice takes the smallest free color or the lowest-index vertex.
    """
    coloring = _FanColorer(graph).run()
    logger.debug(f"Edge coloring of {graph}: {coloring.colors_used} colors (max degree {graph.max_degree})")
    return coloring


def color_single(family: GraphFamily) -> Tuple[SimultaneousColoring, BoundCertificate]:
    """Edge color a one-member family, certified against max_degree + 1."""
    if family.ell != 1:
        raise WrongArity(f"Vizing coloring needs exactly 1 member graph ({family.ell} given)")
    coloring = SimultaneousColoring(vizing_color(family[0]).assignment)
    certificate = BoundCertificate(
        algorithm='vizing',
        palette_used=coloring.colors_used,
        palette_bound=family.delta + 1,
        general_bound=family.delta + 1,
        ell=1,
        delta=family.delta,
    )
    if not certificate.holds():
        raise CertificateError(f"{certificate.palette_used} colors used, bound is {certificate.palette_bound}")
    return coloring, certificate
