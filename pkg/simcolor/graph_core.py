#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""Core graph objects: simple graphs, families, unions, colorings and conflict graphs.

All these objects are immutable once built and can be shared between workers.
"""

from collections import Counter
from functools import cached_property
from itertools import combinations
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from simcolor.exceptions import FamilyError, InvariantError
from simcolor.globals import MAX_MEMBERS, bits, popcount

VertexId = int
ColorId = int


class Edge(NamedTuple):
    """An undirected edge, always stored with u < v."""

    u: VertexId
    v: VertexId

    @classmethod
    def make(cls, u, v):
        """Return the canonical edge between u and v."""
        if u == v:
            raise FamilyError(f"Loop on vertex {u} is not allowed")
        return cls(u, v) if u < v else cls(v, u)

    def other(self, x):
        """Return the endpoint which is not x."""
        return self.v if x == self.u else self.u


class SimpleGraph:
    """A simple loopless graph on the vertices 0..num_vertices-1.

    Duplicated edges are rejected, they are not silently merged.
    """

    def __init__(self, num_vertices: int, edges: Iterable = ()):
        if not isinstance(num_vertices, int) or isinstance(num_vertices, bool) or num_vertices < 0:
            raise FamilyError(f"Invalid number of vertices: {num_vertices!r}")
        self._num_vertices = num_vertices

        edge_set = set()
        for pair in edges:
            try:
                a, b = pair
            except (TypeError, ValueError):
                raise FamilyError(f"Edge {pair!r} is not a pair of vertices") from None
            for x in (a, b):
                if not isinstance(x, int) or isinstance(x, bool):
                    raise FamilyError(f"Vertex {x!r} is not an integer")
                if not 0 <= x < num_vertices:
                    raise FamilyError(f"Vertex {x} out of range [0, {num_vertices})")
            e = Edge.make(a, b)
            if e in edge_set:
                raise FamilyError(f"Duplicate edge {e.u}-{e.v}")
            edge_set.add(e)

        self._edges = tuple(sorted(edge_set))
        self._edge_set = frozenset(edge_set)

        # Edges are sorted, so each neighbor list is sorted too
        adjacency = [[] for _ in range(num_vertices)]
        for e in self._edges:
            adjacency[e.u].append(e.v)
            adjacency[e.v].append(e.u)
        self._adjacency = tuple(tuple(a) for a in adjacency)
        self._max_degree = max((len(a) for a in self._adjacency), default=0)

    def __repr__(self):
        return f'SimpleGraph(num_vertices={self._num_vertices}, edges={len(self._edges)})'

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._num_vertices == other._num_vertices and self._edge_set == other._edge_set

    def __hash__(self):
        return hash((self._num_vertices, self._edge_set))

    def __len__(self):
        return len(self._edges)

    def __iter__(self):
        return iter(self._edges)

    def __contains__(self, edge):
        return edge in self._edge_set

    @property
    def num_vertices(self) -> int:
        return self._num_vertices

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Edges in canonical sorted order."""
        return self._edges

    @property
    def edge_set(self) -> FrozenSet[Edge]:
        return self._edge_set

    @property
    def max_degree(self) -> int:
        return self._max_degree

    def neighbors(self, v: VertexId) -> Tuple[VertexId, ...]:
        return self._adjacency[v]

    def incident(self, v: VertexId) -> List[Edge]:
        """Edges incident to v, sorted by the other endpoint."""
        return [Edge.make(v, w) for w in self._adjacency[v]]

    def degree(self, v: VertexId) -> int:
        return len(self._adjacency[v])

    def degrees(self) -> List[int]:
        return [len(a) for a in self._adjacency]

    def subgraph(self, edges: Iterable[Edge]) -> 'SimpleGraph':
        """Spanning subgraph with the given edges (all the vertices are kept)."""
        return SimpleGraph(self._num_vertices, edges)


class GraphFamily:
    """The problem instance: ell simple graphs on a common vertex set."""

    def __init__(self, num_vertices: int, members: Iterable[SimpleGraph]):
        members = tuple(members)
        if not members:
            raise FamilyError("A family needs at least one member graph")
        if len(members) > MAX_MEMBERS:
            raise FamilyError(f"A family holds at most {MAX_MEMBERS} member graphs ({len(members)} given)")
        for i, g in enumerate(members):
            if g.num_vertices != num_vertices:
                raise FamilyError(f"Member {i} has {g.num_vertices} vertices, the family has {num_vertices}")
        self._num_vertices = num_vertices
        self._members = members
        self._delta = max(g.max_degree for g in members)

    @classmethod
    def from_edge_lists(cls, num_vertices: int, edge_lists: Iterable[Iterable]) -> 'GraphFamily':
        return cls(num_vertices, [SimpleGraph(num_vertices, edges) for edges in edge_lists])

    def __repr__(self):
        return f'GraphFamily(num_vertices={self._num_vertices}, ell={self.ell}, delta={self._delta})'

    def __eq__(self, other):
        if not isinstance(other, GraphFamily):
            return NotImplemented
        return self._num_vertices == other._num_vertices and self._members == other._members

    def __hash__(self):
        return hash((self._num_vertices, self._members))

    def __getstate__(self):
        # The cached union holds mapping proxies, which do not pickle
        state = dict(self.__dict__)
        state.pop('union', None)
        return state

    def __len__(self):
        return len(self._members)

    def __iter__(self):
        return iter(self._members)

    def __getitem__(self, index):
        return self._members[index]

    @property
    def num_vertices(self) -> int:
        return self._num_vertices

    @property
    def members(self) -> Tuple[SimpleGraph, ...]:
        return self._members

    @property
    def ell(self) -> int:
        return len(self._members)

    @property
    def delta(self) -> int:
        """Maximum degree over the member graphs (not the degree of the union)."""
        return self._delta

    @cached_property
    def union(self) -> 'UnionGraph':
        return build_union(self)


class UnionGraph:
    """Edge union of a family, with the members holding each edge.

    membership maps each union edge to a bitmask: bit i is set when member i holds the edge.
    """

    def __init__(self, base: SimpleGraph, membership: Mapping[Edge, int], num_members: int, delta: int):
        self._base = base
        self._membership = MappingProxyType(dict(membership))
        self._num_members = num_members
        self._delta = delta

    def __repr__(self):
        return f'UnionGraph(edges={len(self._base)}, ell={self._num_members})'

    @property
    def base(self) -> SimpleGraph:
        return self._base

    @property
    def membership(self) -> Mapping[Edge, int]:
        return self._membership

    @property
    def num_members(self) -> int:
        return self._num_members

    @property
    def delta(self) -> int:
        """Family maximum degree."""
        return self._delta

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._base.edges

    def mask(self, edge: Edge) -> int:
        return self._membership[edge]

    def members_of(self, edge: Edge) -> List[int]:
        return bits(self._membership[edge])

    def multiplicity(self, edge: Edge) -> int:
        return popcount(self._membership[edge])

    def multiplicity_histogram(self) -> Dict[int, int]:
        """Number of union edges for each multiplicity."""
        return dict(sorted(Counter(popcount(m) for m in self._membership.values()).items()))


def build_union(family: GraphFamily) -> UnionGraph:
    """Build the union of the family members."""
    membership = {}
    for i, g in enumerate(family.members):
        bit = 1 << i
        for e in g.edges:
            membership[e] = membership.get(e, 0) | bit
    base = SimpleGraph(family.num_vertices, membership.keys())
    return UnionGraph(base, membership, family.ell, family.delta)


def family_delta(family: GraphFamily) -> int:
    """Maximum degree over the member graphs."""
    return family.delta


class SimultaneousColoring:
    """An edge -> color assignment over (some of) the union edges.

    palette_size is one more than the largest color, unless a bigger value is given.
    """

    def __init__(self, assignment: Mapping[Edge, ColorId], palette_size: Optional[int] = None):
        assignment = dict(assignment)
        for e, c in assignment.items():
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise InvariantError(f"Invalid color {c!r} on edge {e}")
        top = max(assignment.values(), default=-1) + 1
        if palette_size is None:
            palette_size = top
        elif palette_size < top:
            raise InvariantError(f"Color {top - 1} does not fit a palette of size {palette_size}")
        self._assignment = MappingProxyType(assignment)
        self._palette_size = palette_size

    def __repr__(self):
        return f'{self.__class__.__name__}(edges={len(self._assignment)}, palette_size={self._palette_size})'

    def __eq__(self, other):
        if not isinstance(other, SimultaneousColoring):
            return NotImplemented
        return dict(self._assignment) == dict(other._assignment) and self._palette_size == other._palette_size

    def __len__(self):
        return len(self._assignment)

    def __contains__(self, edge):
        return edge in self._assignment

    def __getitem__(self, edge):
        return self._assignment[edge]

    @property
    def assignment(self) -> Mapping[Edge, ColorId]:
        return self._assignment

    @property
    def palette_size(self) -> int:
        return self._palette_size

    @property
    def colors_used(self) -> int:
        """Number of distinct colors present."""
        return len(set(self._assignment.values()))

    def get(self, edge, default=None):
        return self._assignment.get(edge, default)

    def items(self):
        return self._assignment.items()

    def shifted(self, offset: int) -> 'SimultaneousColoring':
        """Same coloring with every color moved up by offset."""
        return SimultaneousColoring({e: c + offset for e, c in self._assignment.items()})

    def merged(self, other: 'SimultaneousColoring') -> 'SimultaneousColoring':
        """Union of two colorings on disjoint edge sets."""
        common = set(self._assignment) & set(other.assignment)
        if common:
            raise InvariantError(f"Colorings overlap on {len(common)} edges")
        assignment = dict(self._assignment)
        assignment.update(other.assignment)
        return SimultaneousColoring(assignment)


class ConflictGraph:
    """Vertex coloring view of the simultaneity constraints.

    Nodes are the union edges in canonical order; two nodes conflict when the
    edges share an endpoint and some member holds both of them.
    """

    def __init__(self, nodes: Sequence[Edge], conflicts: Iterable[Tuple[int, int]]):
        self._nodes = tuple(nodes)
        self._conflicts = frozenset((min(i, j), max(i, j)) for i, j in conflicts)
        neighbors = [set() for _ in self._nodes]
        for i, j in self._conflicts:
            neighbors[i].add(j)
            neighbors[j].add(i)
        self._neighbors = tuple(frozenset(n) for n in neighbors)

    def __repr__(self):
        return f'ConflictGraph(nodes={len(self._nodes)}, conflicts={len(self._conflicts)})'

    def __len__(self):
        return len(self._nodes)

    @property
    def nodes(self) -> Tuple[Edge, ...]:
        return self._nodes

    @property
    def conflicts(self) -> FrozenSet[Tuple[int, int]]:
        return self._conflicts

    @property
    def num_nodes(self) -> int:
        return len(self._nodes)

    @property
    def num_conflicts(self) -> int:
        return len(self._conflicts)

    def neighbors(self, i: int) -> FrozenSet[int]:
        return self._neighbors[i]

    def degree(self, i: int) -> int:
        return len(self._neighbors[i])

    def is_proper(self, coloring: Mapping[Edge, ColorId]) -> bool:
        """True if every node is colored and no conflicting pair shares a color."""
        if any(e not in coloring for e in self._nodes):
            return False
        return all(coloring[self._nodes[i]] != coloring[self._nodes[j]] for i, j in self._conflicts)


def conflict_graph(family: GraphFamily) -> ConflictGraph:
    """Reduce the simultaneous edge coloring of the family to a vertex coloring."""
    union = family.union
    nodes = union.edges
    index = {e: i for i, e in enumerate(nodes)}
    conflicts = set()
    for v in range(union.base.num_vertices):
        for e, f in combinations(union.base.incident(v), 2):
            if union.mask(e) & union.mask(f):
                i, j = index[e], index[f]
                conflicts.add((min(i, j), max(i, j)))
    return ConflictGraph(nodes, conflicts)
