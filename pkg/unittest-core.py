#!/usr/bin/env python
#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""simcolor unitary tests suite."""

import math
import os
import tempfile
import unittest
from itertools import combinations

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from simcolor import __version__
from simcolor.bench import BenchRow, build_suite, run_bench
from simcolor.bounds import (
    BoundCertificate,
    bound_pair,
    bound_sqrt,
    bound_sqrt_exact,
    bound_trivial,
    lower_bound_star,
    sqrt_threshold,
)
from simcolor.colorers import color_family
from simcolor.config import Config
from simcolor.constructions import StarFamilyParams, identical_pair, random_family, star_family, star_three
from simcolor.documents import ColoringDocument, family_digest, family_dumps, family_from_dict, load_family
from simcolor.exact_oracle import (
    EXACT,
    TIMED_OUT,
    _BranchAndBound,
    brute_force_chi,
    dsatur,
    exact_chi,
    greedy_clique,
    probe_families,
    probe_pair_conjecture,
)
from simcolor.exceptions import (
    CertificateError,
    ConstructionError,
    FamilyError,
    InstanceTooLarge,
    InvariantError,
    OddDelta,
    PaletteExhausted,
    TooFewGraphs,
    UnknownEdge,
    WrongArity,
)
from simcolor.exports.bench_csv import BENCH_HEADER, BenchCsv
from simcolor.globals import json_loads
from simcolor.graph_core import Edge, GraphFamily, SimpleGraph, SimultaneousColoring, conflict_graph, family_delta
from simcolor.pair_coloring import FactorWindow, color_pair, decompose_pair, half_factor, split_private_common
from simcolor.timer import Counter, Timer
from simcolor.union_coloring import (
    color_union_sqrt,
    color_union_trivial,
    color_with_threshold,
    greedy_extend,
    split_by_multiplicity,
)
from simcolor.verifier import check_certificate, verify
from simcolor.vizing import color_single, vizing_color

# Global variables
# =================

TRIANGLE = [(0, 1), (1, 2), (0, 2)]
K4 = list(combinations(range(4), 2))
STAR_1_5 = [(0, i) for i in range(1, 6)]
PETERSEN = sorted(tuple(sorted(e)) for e in nx.petersen_graph().edges())

# Random family parameters: (n, ell, delta, overlap, seed)
family_params = st.tuples(
    st.integers(min_value=2, max_value=16),
    st.integers(min_value=1, max_value=5),
    st.integers(min_value=0, max_value=5),
    st.floats(min_value=0.0, max_value=1.0),
    st.integers(min_value=0, max_value=10**6),
)
pair_params = st.tuples(
    st.integers(min_value=2, max_value=20),
    st.integers(min_value=0, max_value=7),
    st.floats(min_value=0.0, max_value=1.0),
    st.integers(min_value=0, max_value=10**6),
)


def family(n, *edge_lists):
    return GraphFamily.from_edge_lists(n, edge_lists)


def single(n, edges):
    return family(n, edges)


def proper_single(graph, coloring):
    """Plain edge coloring check, written apart from the verifier."""
    for v in range(graph.num_vertices):
        colors = [coloring[e] for e in graph.incident(v)]
        if len(colors) != len(set(colors)):
            return False
    return len(coloring) == len(graph)


# Unitest class
# ==============
print(f'Unitary tests for simcolor {__version__}')


class TestSimcolor(unittest.TestCase):
    """Test simcolor library."""

    def setUp(self):
        """The function is called *every time* before test_*."""
        print('\n' + '=' * 78)

    def test_000_simple_graph(self):
        """Simple graph validation."""
        print('INFO: [TEST_000] Simple graph validation')
        g = SimpleGraph(4, [(2, 1), (0, 1)])
        self.assertEqual(g.edges, (Edge(0, 1), Edge(1, 2)))
        self.assertEqual(g.degrees(), [1, 2, 1, 0])
        self.assertEqual(g.max_degree, 2)
        self.assertEqual(Edge.make(3, 1), Edge(1, 3))
        self.assertEqual(Edge(1, 3).other(1), 3)
        with self.assertRaises(FamilyError):
            SimpleGraph(3, [(1, 1)])
        with self.assertRaises(FamilyError):
            SimpleGraph(3, [(0, 3)])
        with self.assertRaises(FamilyError):
            SimpleGraph(3, [(0, 1), (1, 0)])
        with self.assertRaises(FamilyError):
            SimpleGraph(3, [(0, 'a')])
        with self.assertRaises(FamilyError):
            SimpleGraph(-1, [])

    def test_001_family(self):
        """Family validation."""
        print('INFO: [TEST_001] Family validation')
        f = family(3, [(0, 1)], [(1, 2)])
        self.assertEqual(f.ell, 2)
        self.assertEqual(f.num_vertices, 3)
        with self.assertRaises(FamilyError):
            GraphFamily(3, [])
        with self.assertRaises(FamilyError):
            GraphFamily(3, [SimpleGraph(3), SimpleGraph(4)])
        with self.assertRaises(FamilyError):
            GraphFamily.from_edge_lists(2, [[]] * 65)

    def test_002_union(self):
        """Union and multiplicities."""
        print('INFO: [TEST_002] Union and multiplicities')
        union = family(3, [(0, 1)], [(1, 2)]).union
        self.assertEqual(union.edges, (Edge(0, 1), Edge(1, 2)))
        self.assertEqual([union.multiplicity(e) for e in union.edges], [1, 1])

        union = family(2, [(0, 1)], [(0, 1)]).union
        self.assertEqual(union.edges, (Edge(0, 1),))
        self.assertEqual(union.multiplicity(Edge(0, 1)), 2)
        self.assertEqual(union.members_of(Edge(0, 1)), [0, 1])

        union = star_three(4).union
        self.assertEqual(len(union.edges), 6)
        self.assertTrue(all(e.u == 0 for e in union.edges))
        self.assertEqual(union.multiplicity_histogram(), {2: 6})

        union = family(4, [(0, 1), (1, 2)], [(1, 2), (2, 3)]).union
        self.assertEqual(union.mask(Edge(1, 2)), 0b11)
        self.assertEqual(union.multiplicity_histogram(), {1: 2, 2: 1})

    def test_003_conflict_graph(self):
        """Conflict graph reduction."""
        print('INFO: [TEST_003] Conflict graph')
        cg = conflict_graph(single(3, TRIANGLE))
        self.assertEqual((cg.num_nodes, cg.num_conflicts), (3, 3))

        cg = conflict_graph(star_three(4))
        self.assertEqual((cg.num_nodes, cg.num_conflicts), (6, 15))

        cg = conflict_graph(family(4, [(0, 1)], [(2, 3)]))
        self.assertEqual((cg.num_nodes, cg.num_conflicts), (2, 0))

        # Edges meeting in the union only
        cg = conflict_graph(family(3, [(0, 1)], [(0, 2)]))
        self.assertEqual(cg.num_conflicts, 0)

        cg = conflict_graph(family(4, [(0, 1), (1, 2)], [(1, 2), (2, 3)]))
        self.assertEqual(cg.num_conflicts, 2)

    def test_004_conflict_graph_is_line_graph(self):
        """A single member gives its line graph."""
        print('INFO: [TEST_004] Conflict graph of one member against networkx line graph')
        for seed in range(20):
            f = random_family(12, 1, 4, 0.0, seed)
            cg = conflict_graph(f)
            lg = nx.line_graph(nx.Graph(list(f[0].edges)))
            expected = {frozenset((Edge.make(*a), Edge.make(*b))) for a, b in lg.edges()}
            got = {frozenset((cg.nodes[i], cg.nodes[j])) for i, j in cg.conflicts}
            self.assertEqual(got, expected)

    def test_005_family_delta(self):
        """Family maximum degree."""
        print('INFO: [TEST_005] Family delta')
        f = family(3, [(0, 1)], [(0, 2)])
        self.assertEqual(family_delta(f), 1)
        self.assertEqual(f.union.base.degree(0), 2)
        self.assertEqual(family_delta(star_family(8, 4)), 4)
        self.assertEqual(family_delta(single(5, [])), 0)

    def test_006_simultaneous_coloring(self):
        """Coloring objects."""
        print('INFO: [TEST_006] Simultaneous coloring objects')
        c = SimultaneousColoring({Edge(0, 1): 0, Edge(1, 2): 2})
        self.assertEqual(c.palette_size, 3)
        self.assertEqual(c.colors_used, 2)
        self.assertEqual(c.shifted(3)[Edge(1, 2)], 5)
        merged = c.merged(SimultaneousColoring({Edge(2, 3): 0}))
        self.assertEqual(len(merged), 3)
        with self.assertRaises(InvariantError):
            c.merged(SimultaneousColoring({Edge(0, 1): 1}))
        with self.assertRaises(InvariantError):
            SimultaneousColoring({Edge(0, 1): -1})
        with self.assertRaises(InvariantError):
            SimultaneousColoring({Edge(0, 1): 4}, palette_size=2)

    def test_007_vizing(self):
        """Vizing edge coloring examples."""
        print('INFO: [TEST_007] Vizing examples')
        g = SimpleGraph(3, TRIANGLE)
        c = vizing_color(g)
        self.assertTrue(proper_single(g, c))
        self.assertEqual(c.colors_used, 3)

        g = SimpleGraph(6, STAR_1_5)
        c = vizing_color(g)
        self.assertTrue(proper_single(g, c))
        self.assertEqual(c.colors_used, 5)

        g = SimpleGraph(10, PETERSEN)
        c = vizing_color(g)
        self.assertTrue(proper_single(g, c))
        self.assertLessEqual(c.colors_used, 4)

        self.assertEqual(vizing_color(SimpleGraph(3)).colors_used, 0)

        coloring, certificate = color_single(single(10, PETERSEN))
        self.assertEqual(certificate.palette_bound, 4)
        self.assertTrue(verify(single(10, PETERSEN), coloring).valid)
        with self.assertRaises(WrongArity):
            color_single(star_three(4))

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=1, max_value=30), st.integers(min_value=0, max_value=8), st.integers(0, 10**6))
    def test_008_vizing_property(self, n, delta, seed):
        """Vizing: proper, at most max degree + 1 colors, deterministic."""
        g = random_family(max(n, 2), 1, delta, 0.0, seed)[0]
        c = vizing_color(g)
        self.assertTrue(proper_single(g, c))
        self.assertLessEqual(c.palette_size, g.max_degree + 1)
        self.assertEqual(c, vizing_color(g))

    def test_009_vizing_bulk(self):
        """500 random graphs up to 100 vertices."""
        print('INFO: [TEST_009] Vizing on 500 random graphs')
        for seed in range(500):
            n = 2 + (seed * 37) % 99
            delta = 1 + seed % 8
            g = random_family(n, 1, delta, 0.0, seed)[0]
            c = vizing_color(g)
            self.assertTrue(proper_single(g, c), f"seed {seed}")
            self.assertLessEqual(c.colors_used, g.max_degree + 1, f"seed {seed}")

    def test_010_petersen(self):
        """Petersen graph: 4 colors, 3 is infeasible."""
        print('INFO: [TEST_010] Petersen graph chromatic index')
        result = exact_chi(single(10, PETERSEN))
        self.assertEqual(result.status, EXACT)
        self.assertEqual(result.chi, 4)
        self.assertEqual(vizing_color(SimpleGraph(10, PETERSEN)).colors_used, 4)

    def test_011_bounds(self):
        """Bound formulas."""
        print('INFO: [TEST_011] Bound formulas')
        self.assertEqual(bound_sqrt(8, 5), 38)
        self.assertEqual(bound_sqrt(2, 3), 12)
        self.assertEqual(bound_pair(0), 4)
        self.assertEqual(bound_pair(4), 10)
        self.assertEqual(bound_pair(5), 11)
        self.assertEqual(bound_pair(10), 19)
        self.assertEqual(bound_trivial(3, 10), 31)
        self.assertEqual(lower_bound_star(8, 4), 8)
        self.assertEqual(lower_bound_star(18, 4), 12)
        self.assertEqual(lower_bound_star(2, 4), 4)
        self.assertEqual(lower_bound_star(1, 4), 0)
        self.assertAlmostEqual(sqrt_threshold(8), 2.0)
        for ell in range(1, 65):
            for delta in range(1, 20):
                exact = bound_sqrt_exact(ell, delta, sqrt_threshold(ell))
                self.assertLessEqual(exact, bound_sqrt(ell, delta), f"ell={ell} delta={delta}")
        with self.assertRaises(ValueError):
            bound_sqrt_exact(2, 3, 0)
        with self.assertRaises(ValueError):
            bound_pair(-1)
        # Edgeless families
        self.assertEqual(bound_sqrt(8, 0), 0)
        self.assertEqual(bound_sqrt(1, 0), 1)
        for ell in range(1, 65):
            self.assertGreaterEqual(bound_sqrt(ell, 0), 0)
        _, certificate = color_union_sqrt(family(3, *[[]] * 8))
        self.assertEqual(certificate.general_bound, 0)
        self.assertTrue(certificate.holds())

    def test_012_split_by_multiplicity(self):
        """Multiplicity split."""
        print('INFO: [TEST_012] Multiplicity split')
        f = family(3, [(0, 1), (1, 2)], [(0, 1), (1, 2)])
        split = split_by_multiplicity(f.union, 1.5)
        self.assertEqual(len(split.heavy), 2)
        self.assertEqual(len(split.light), 0)

        f = family(3, [(0, 1)], [(1, 2)])
        split = split_by_multiplicity(f.union, 1)
        self.assertEqual(len(split.heavy), 2)
        self.assertEqual(len(split.light), 0)

        split = split_by_multiplicity(star_three(4).union, math.sqrt(3 / 2))
        self.assertEqual(len(split.heavy), 6)
        self.assertEqual(split.light_edges, frozenset())

        split = split_by_multiplicity(family(4, [(0, 1), (1, 2)], [(1, 2), (2, 3)]).union, 2)
        self.assertEqual(split.heavy_edges, frozenset([Edge(1, 2)]))
        self.assertEqual(split.light_edges, frozenset([Edge(0, 1), Edge(2, 3)]))

        with self.assertRaises(ValueError):
            split_by_multiplicity(f.union, 0)

    def test_013_greedy_extend(self):
        """Greedy extension."""
        print('INFO: [TEST_013] Greedy extension')
        f = single(4, [(0, 1), (0, 2), (0, 3)])
        partial = SimultaneousColoring({Edge(0, 1): 0, Edge(0, 2): 1})
        c = greedy_extend(f, partial, [Edge(0, 3)], range(0, 5))
        self.assertEqual(c[Edge(0, 3)], 2)
        self.assertEqual(c[Edge(0, 1)], 0)

        c = greedy_extend(f, SimultaneousColoring({}), [Edge(0, 3)], range(0, 5))
        self.assertEqual(c[Edge(0, 3)], 0)

        f = family(3, [(0, 1), (1, 2)], [(1, 2)])
        c = greedy_extend(f, SimultaneousColoring({Edge(0, 1): 0}), [Edge(1, 2)], range(0, 5))
        self.assertEqual(c[Edge(1, 2)], 1)

        # No shared member: the color may be reused
        f = family(3, [(0, 1)], [(1, 2)])
        c = greedy_extend(f, SimultaneousColoring({Edge(0, 1): 0}), [Edge(1, 2)], range(0, 5))
        self.assertEqual(c[Edge(1, 2)], 0)

        f = single(4, [(0, 1), (0, 2), (0, 3)])
        with self.assertRaises(PaletteExhausted):
            greedy_extend(f, partial, [Edge(0, 3)], range(0, 1))
        with self.assertRaises(UnknownEdge):
            greedy_extend(f, partial, [Edge(2, 3)], range(0, 5))
        with self.assertRaises(InvariantError):
            greedy_extend(f, partial, [Edge(0, 1)], range(0, 5))

    def test_014_color_union_sqrt(self):
        """Multiplicity-split colorer examples."""
        print('INFO: [TEST_014] sqrt colorer')
        f = random_family(20, 1, 5, 0.0, 3)
        coloring, certificate = color_union_sqrt(f)
        self.assertTrue(verify(f, coloring).valid)
        self.assertLessEqual(coloring.colors_used, f.delta + 1)

        f = GraphFamily.from_edge_lists(6, [STAR_1_5] * 8)
        coloring, certificate = color_union_sqrt(f)
        self.assertEqual(certificate.general_bound, 38)
        self.assertEqual(certificate.algorithm, 'sqrt')
        self.assertTrue(certificate.holds())
        self.assertEqual(coloring.colors_used, 5)

        f = random_family(15, 2, 3, 0.5, 11)
        coloring, certificate = color_union_sqrt(f)
        self.assertEqual(certificate.general_bound, bound_sqrt(2, f.delta))
        self.assertTrue(check_certificate(verify(f, coloring), certificate))

        coloring, certificate = color_with_threshold(star_three(4), math.sqrt(3 / 2))
        self.assertEqual(coloring.colors_used, 6)

    def test_015_sweep_k(self):
        """Threshold sweep never does worse."""
        print('INFO: [TEST_015] sqrt colorer with sweep')
        for seed in range(20):
            f = random_family(14, 1 + seed % 6, 4, 0.4, seed)
            plain, _ = color_union_sqrt(f)
            swept, certificate = color_union_sqrt(f, sweep_k=True)
            self.assertLessEqual(swept.colors_used, plain.colors_used)
            self.assertTrue(verify(f, swept).valid)
            self.assertLessEqual(certificate.palette_used, certificate.palette_bound)

    def test_016_color_union_trivial(self):
        """Union colorer examples."""
        print('INFO: [TEST_016] trivial colorer')
        coloring, certificate = color_union_trivial(family(2, [(0, 1)], [(0, 1)]))
        self.assertEqual(coloring.colors_used, 1)

        coloring, certificate = color_union_trivial(star_three(4))
        self.assertLessEqual(coloring.colors_used, 7)
        self.assertEqual(coloring.colors_used, 6)

        coloring, certificate = color_union_trivial(star_three(10))
        self.assertEqual(certificate.general_bound, 31)
        self.assertEqual(coloring.colors_used, 15)

    @settings(max_examples=60, deadline=None)
    @given(family_params)
    def test_017_sqrt_property(self, params):
        """sqrt and trivial colorers on random families."""
        f = random_family(*params)
        for algo in ('sqrt', 'trivial'):
            coloring, certificate = color_family(f, algo)
            self.assertLessEqual(coloring.colors_used, certificate.palette_bound)
            if f.delta >= 1:
                self.assertLessEqual(certificate.palette_bound, certificate.general_bound)

    def test_018_sqrt_bulk(self):
        """200 random families: sqrt colorer within ceil(2 sqrt(2 ell) delta - sqrt(2 ell) + 2)."""
        print('INFO: [TEST_018] sqrt colorer on 200 random families')
        for seed in range(200):
            n = 4 + (seed * 7) % 57
            ell = 1 + seed % 8
            delta = seed % 9
            f = random_family(n, ell, delta, (seed % 5) / 4, seed)
            coloring, certificate = color_union_sqrt(f)
            report = verify(f, coloring)
            self.assertTrue(report.valid, f"seed {seed}")
            if delta >= 1:
                self.assertLessEqual(report.palette_used, bound_sqrt(f.ell, f.delta), f"seed {seed}")
            if len(f.union.edges) <= 20:
                result = exact_chi(f, time_budget=10)
                if result.status == EXACT:
                    self.assertLessEqual(result.chi, coloring.colors_used, f"seed {seed}")

    def test_019_split_private_common(self):
        """Private / common split."""
        print('INFO: [TEST_019] Private and common edges')
        split = split_private_common(family(4, K4, K4))
        self.assertEqual(len(split.common), 6)
        self.assertEqual(len(split.private_1) + len(split.private_2), 0)

        split = split_private_common(family(4, [(0, 1)], [(2, 3)]))
        self.assertEqual(len(split.common), 0)

        split = split_private_common(family(4, [(0, 1), (1, 2)], [(1, 2), (2, 3)]))
        self.assertEqual(split.common.edges, (Edge(1, 2),))
        self.assertEqual(split.private_1.edges, (Edge(0, 1),))
        self.assertEqual(split.private_2.edges, (Edge(2, 3),))

        with self.assertRaises(WrongArity):
            split_private_common(star_three(4))

    def test_020_half_factor(self):
        """Degree factor examples."""
        print('INFO: [TEST_020] Half factor')
        c4 = SimpleGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        k = half_factor(c4)
        self.assertEqual(k.degrees(), [1, 1, 1, 1])

        k = half_factor(SimpleGraph(3, TRIANGLE))
        self.assertEqual(len(k), 1)
        self.assertEqual(sorted(k.degrees()), [0, 1, 1])

        k = half_factor(SimpleGraph(6, STAR_1_5))
        self.assertIn(k.degree(0), (2, 3))
        self.assertTrue(all(k.degree(v) <= 1 for v in range(1, 6)))

        self.assertEqual(len(half_factor(SimpleGraph(3))), 0)

        window = FactorWindow(SimpleGraph(6, STAR_1_5))
        self.assertTrue(window.conditions_hold())
        self.assertEqual((window.g[0], window.f[0]), (2, 3))

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=2, max_value=40), st.integers(min_value=0, max_value=12), st.integers(0, 10**6))
    def test_021_half_factor_property(self, n, delta, seed):
        """Factor window at every vertex."""
        g = random_family(n, 1, delta, 0.0, seed)[0]
        k = half_factor(g)
        self.assertTrue(k.edge_set <= g.edge_set)
        for v in range(n):
            d = g.degree(v)
            self.assertLessEqual(max(0, math.ceil(d / 2 - 1)), k.degree(v))
            self.assertLessEqual(k.degree(v), math.ceil(d / 2))

    def test_022_half_factor_bulk(self):
        """200 random graphs up to 100 vertices."""
        print('INFO: [TEST_022] Half factor on 200 random graphs')
        for seed in range(200):
            n = 2 + (seed * 13) % 99
            g = random_family(n, 1, 1 + seed % 12, 0.0, seed)[0]
            k = half_factor(g)
            window = FactorWindow(g)
            self.assertEqual(window.violations(k), [], f"seed {seed}")

    def test_023_color_pair(self):
        """Pair colorer examples."""
        print('INFO: [TEST_023] Pair colorer')
        f = family(4, K4, K4)
        decomposition = decompose_pair(f)
        self.assertEqual(len(decomposition.l), 0)
        self.assertEqual(decomposition.r, SimpleGraph(4, K4))
        coloring, certificate = color_pair(f)
        self.assertLessEqual(coloring.colors_used, 4)
        self.assertEqual(certificate.palette_bound, 8)
        self.assertTrue(verify(f, coloring).valid)

        f = family(5, [(0, 1), (0, 2), (0, 3), (0, 4)], [(1, 2), (2, 3), (3, 4), (1, 4)])
        coloring, certificate = color_pair(f)
        self.assertEqual(certificate.palette_bound, 10)
        self.assertTrue(check_certificate(verify(f, coloring), certificate))

        with self.assertRaises(WrongArity):
            color_pair(star_three(4))

    @settings(max_examples=80, deadline=None)
    @given(pair_params)
    def test_024_pair_property(self, params):
        """Pair colorer on random pairs, with the decomposition degree bounds."""
        n, delta, overlap, seed = params
        f = random_family(n, 2, delta, overlap, seed)
        decomposition = decompose_pair(f)
        for v in range(n):
            self.assertLessEqual(decomposition.l_1.degree(v), f.delta // 2 + 1)
            self.assertLessEqual(decomposition.l_2.degree(v), f.delta // 2 + 1)
            self.assertLessEqual(decomposition.r.degree(v), f.delta + 1)
        coloring, certificate = color_pair(f)
        self.assertTrue(check_certificate(verify(f, coloring), certificate))

    def test_025_pair_bulk(self):
        """200 random pairs: pair colorer within floor(3 delta / 2) + 4, exact chi below both colorers."""
        print('INFO: [TEST_025] Pair colorer on 200 random pairs')
        for seed in range(200):
            n = 4 + (seed * 11) % 57
            delta = seed % 11
            f = random_family(n, 2, delta, (seed % 5) / 4, seed)
            pair, _ = color_pair(f)
            report = verify(f, pair)
            self.assertTrue(report.valid, f"seed {seed}")
            self.assertLessEqual(report.palette_used, bound_pair(f.delta), f"seed {seed}")
            if len(f.union.edges) <= 20:
                sqrt, _ = color_union_sqrt(f)
                chi = exact_chi(f).chi
                self.assertLessEqual(chi, pair.colors_used, f"seed {seed}")
                self.assertLessEqual(chi, sqrt.colors_used, f"seed {seed}")

    def test_026_star_family(self):
        """Star family construction."""
        print('INFO: [TEST_026] Star family')
        f = star_family(8, 4)
        self.assertEqual(f.ell, 6)
        self.assertEqual(f.num_vertices, 9)
        self.assertEqual(len(f.union.edges), 8)
        self.assertEqual(f.delta, 4)

        f = star_family(2, 4)
        self.assertEqual(f.ell, 1)
        self.assertEqual(len(f[0]), 4)

        self.assertEqual(star_family(8, 4, pad=True).ell, 8)
        self.assertEqual(StarFamilyParams(18, 4).num_members, 15)
        with self.assertRaises(OddDelta):
            star_family(8, 3)
        with self.assertRaises(TooFewGraphs):
            star_family(1, 4)
        with self.assertRaises(ConstructionError):
            star_family(8, 0)

    def test_027_star_three(self):
        """Three-member star."""
        print('INFO: [TEST_027] star_three')
        f = star_three(4)
        self.assertEqual((f.ell, len(f.union.edges)), (3, 6))
        f = star_three(10)
        self.assertEqual((f.ell, len(f.union.edges), f.num_vertices), (3, 15, 16))
        f = star_three(2)
        self.assertEqual(len(f.union.edges), 3)
        self.assertEqual(exact_chi(f).chi, 3)
        with self.assertRaises(ConstructionError):
            star_three(1)

    def test_028_random_family(self):
        """Seeded random families."""
        print('INFO: [TEST_028] Random family')
        f = random_family(10, 3, 0, 0.5, 1)
        self.assertEqual(f.ell, 3)
        self.assertTrue(all(len(g) == 0 for g in f))

        f = random_family(4, 1, 3, 0.0, 1)
        self.assertLessEqual(f.delta, 3)

        a = family_dumps(random_family(20, 3, 5, 0.3, 7))
        b = family_dumps(random_family(20, 3, 5, 0.3, 7))
        self.assertEqual(a, b)

        f = random_family(12, 3, 3, 1.0, 5)
        self.assertTrue(all(f.union.multiplicity(e) >= 1 for e in f.union.edges))

        with self.assertRaises(ConstructionError):
            random_family(1, 1, 1, 0.0, 0)
        with self.assertRaises(ConstructionError):
            random_family(5, 1, 1, 1.5, 0)

    @settings(max_examples=60, deadline=None)
    @given(family_params)
    def test_029_random_family_property(self, params):
        """Degree cap and determinism."""
        n, ell, delta, overlap, seed = params
        f = random_family(n, ell, delta, overlap, seed)
        self.assertEqual(f.ell, ell)
        self.assertTrue(all(g.max_degree <= delta for g in f))
        self.assertEqual(f, random_family(n, ell, delta, overlap, seed))

    def test_030_verify(self):
        """Verifier examples."""
        print('INFO: [TEST_030] Verifier')
        f = star_three(4)
        edges = f.union.edges
        distinct = SimultaneousColoring({e: i for i, e in enumerate(edges)})
        report = verify(f, distinct)
        self.assertTrue(report.valid)
        self.assertEqual(report.palette_used, 6)

        # (0, 1) and (0, 2) form the first block
        bad = dict(distinct.assignment)
        bad[Edge(0, 2)] = bad[Edge(0, 1)]
        report = verify(f, SimultaneousColoring(bad))
        self.assertFalse(report.valid)
        self.assertGreaterEqual(len(report.violations), 1)
        for violation in report.violations:
            member = f[violation.member_index]
            self.assertTrue(all(Edge(*e) in member for e in violation.edges))
            self.assertEqual(violation.vertex, 0)

        f = family(3, [(0, 1)], [(0, 2)])
        self.assertTrue(verify(f, SimultaneousColoring({Edge(0, 1): 0, Edge(0, 2): 0})).valid)

        report = verify(f, SimultaneousColoring({Edge(0, 1): 0}))
        self.assertFalse(report.valid)
        self.assertEqual(report.violations, [])
        self.assertEqual(report.uncolored, [(0, 2)])

        with self.assertRaises(UnknownEdge):
            verify(f, SimultaneousColoring({Edge(1, 2): 0}))

    def test_031_check_certificate(self):
        """Certificate check examples."""
        print('INFO: [TEST_031] Certificate check')
        f = star_three(4)
        valid = verify(f, SimultaneousColoring({e: i for i, e in enumerate(f.union.edges)}))
        invalid = verify(f, SimultaneousColoring({e: 0 for e in f.union.edges}))

        def certificate(bound):
            return BoundCertificate('test', palette_used=6, palette_bound=bound, general_bound=bound, ell=3, delta=4)

        self.assertTrue(check_certificate(valid, certificate(10)))
        self.assertFalse(check_certificate(invalid, certificate(10)))
        self.assertFalse(check_certificate(valid, certificate(5)))

        star = single(12, [(0, i) for i in range(1, 12)])
        eleven = verify(star, SimultaneousColoring({Edge(0, i): i - 1 for i in range(1, 12)}))
        self.assertEqual(eleven.palette_used, 11)
        self.assertFalse(check_certificate(eleven, certificate(10)))

    @settings(max_examples=80, deadline=None)
    @given(family_params, st.integers(min_value=1, max_value=6), st.randoms(use_true_random=False))
    def test_032_verify_matches_conflict_graph(self, params, colors, rnd):
        """verify agrees with properness on the conflict graph, and is repeatable."""
        f = random_family(*params)
        coloring = SimultaneousColoring({e: rnd.randrange(colors) for e in f.union.edges})
        report = verify(f, coloring)
        self.assertEqual(report.valid, conflict_graph(f).is_proper(coloring.assignment))
        self.assertEqual(report.as_dict(), verify(f, coloring).as_dict())

    def test_033_exact_chi(self):
        """Exact oracle examples."""
        print('INFO: [TEST_033] Exact chi')
        self.assertEqual(exact_chi(single(4, [(0, 1), (1, 2), (2, 3)])).chi, 2)

        for f, chi in ((star_three(4), 6), (star_three(6), 9), (star_family(8, 4), 8)):
            counter = Counter()
            result = exact_chi(f)
            self.assertEqual(result.status, EXACT)
            self.assertEqual(result.chi, chi)
            self.assertEqual(result.optimal_coloring.colors_used, chi)
            self.assertTrue(verify(f, result.optimal_coloring).valid)
            self.assertLess(counter.get(), 10)

        result = exact_chi(star_three(10))
        self.assertEqual(result.chi, 15)

        result = exact_chi(single(3, []))
        self.assertEqual((result.chi, result.status), (0, EXACT))

        with self.assertRaises(InstanceTooLarge):
            exact_chi(star_three(4), max_conflict_nodes=5)

    def test_034_exact_sandwich(self):
        """Clique and DSATUR bounds around chi."""
        print('INFO: [TEST_034] Clique <= chi <= DSATUR')
        for seed in range(30):
            f = random_family(8, 2, 3, 0.5, seed)
            cg = conflict_graph(f)
            clique = greedy_clique(cg)
            self.assertTrue(all(j in cg.neighbors(i) for i, j in combinations(clique, 2)))
            upper = dsatur(cg)
            self.assertTrue(cg.is_proper({cg.nodes[i]: c for i, c in enumerate(upper)}))
            chi = exact_chi(f).chi
            self.assertLessEqual(len(clique), chi)
            self.assertLessEqual(chi, max(upper, default=-1) + 1)

    def test_035_exact_timeout(self):
        """A spent time budget returns the best bounds found."""
        print('INFO: [TEST_035] Exact chi timeout')
        f = single(10, PETERSEN)
        result = exact_chi(f, time_budget=-1)
        self.assertEqual(result.status, TIMED_OUT)
        self.assertEqual(result.chi, result.best_upper)
        self.assertGreaterEqual(result.best_upper, 4)
        self.assertLessEqual(result.best_lower, 4)
        self.assertTrue(verify(f, result.optimal_coloring).valid)

        result = exact_chi(star_three(10), max_conflict_nodes=5, allow_oversize=True)
        self.assertEqual(result.chi, 15)

    def test_036_brute_force(self):
        """Brute force oracle and cross-check on 50 small families."""
        print('INFO: [TEST_036] Brute force cross-check')
        self.assertEqual(brute_force_chi(family(4, [(0, 1)], [(2, 3)])), 1)
        self.assertEqual(brute_force_chi(single(3, TRIANGLE)), 3)
        self.assertEqual(brute_force_chi(single(3, [])), 0)
        with self.assertRaises(InstanceTooLarge):
            brute_force_chi(single(10, PETERSEN))

        checked = 0
        seed = 0
        while checked < 50:
            f = random_family(5, 1 + seed % 3, 1 + seed % 2, 0.5, seed)
            seed += 1
            if len(f.union.edges) > 8:
                continue
            self.assertEqual(exact_chi(f).chi, brute_force_chi(f), f"seed {seed - 1}")
            checked += 1

    def test_037_star_lower_bound(self):
        """Exact chi of the star families equals floor(sqrt(ell / 2)) delta."""
        print('INFO: [TEST_037] Star families reach the lower bound')
        for ell in (2, 8, 18):
            f = star_family(ell, 4)
            self.assertEqual(exact_chi(f).chi, lower_bound_star(ell, 4))
            coloring, _ = color_union_sqrt(f)
            self.assertGreaterEqual(coloring.colors_used, lower_bound_star(ell, 4))

    def test_038_probe(self):
        """Probe of the pair question: report only."""
        print('INFO: [TEST_038] Probe')
        self.assertEqual(len(probe_pair_conjecture(0, 7, 3, 0.5, 0)), 0)

        pairs = [identical_pair(random_family(8, 1, 3, 0.0, seed)[0]) for seed in range(10)]
        report = probe_families(pairs)
        self.assertEqual(len(report), 10)
        for row in report.rows:
            self.assertEqual(row.status, EXACT)
            self.assertLessEqual(row.chi, row.delta + 1)
            self.assertFalse(row.flagged)

        with tempfile.TemporaryDirectory() as artifact_dir:
            report = probe_pair_conjecture(100, 7, 3, 0.5, 0, time_budget=10, artifact_dir=artifact_dir)
            self.assertEqual(len(report), 100)
            self.assertEqual([r.seed for r in report.rows], list(range(100)))
            for row in report.flagged:
                self.assertTrue(os.path.isfile(row.artifact))
                self.assertGreater(load_family(row.artifact).union.num_members, 1)
            self.assertEqual(report.as_dict()['trials'], 100)

        with tempfile.TemporaryDirectory() as artifact_dir:
            f = star_three(4)
            report = probe_families([f], artifact_dir=artifact_dir)
            self.assertEqual(len(report.flagged), 1)
            row = report.flagged[0]
            self.assertEqual((row.chi, row.delta, row.excess), (6, 4, 2))
            self.assertTrue(os.path.isfile(row.artifact))
            self.assertEqual(family_digest(load_family(row.artifact)), family_digest(f))
            self.assertEqual(report.max_excess, 2)

    def test_039_documents(self):
        """Family and coloring documents."""
        print('INFO: [TEST_039] JSON documents')
        f = family_from_dict({'num_vertices': 3, 'graphs': [[[1, 0], [2, 1]], [[0, 2]]]})
        self.assertEqual(f, family(3, [(0, 1), (1, 2)], [(0, 2)]))
        self.assertEqual(family_dumps(f), b'{"graphs":[[[0,1],[1,2]],[[0,2]]],"num_vertices":3}')
        same = family_from_dict({'graphs': [[[2, 1], [0, 1]], [[2, 0]]], 'num_vertices': 3})
        self.assertEqual(family_digest(f), family_digest(same))
        self.assertNotEqual(family_digest(f), family_digest(star_three(4)))

        for bad in (
            {'num_vertices': 3, 'graphs': [[[1, 1]]]},
            {'num_vertices': 3, 'graphs': [[[0, 3]]]},
            {'num_vertices': 3, 'graphs': [[[0, 1], [1, 0]]]},
            {'num_vertices': 3},
            {'num_vertices': 3, 'graphs': []},
            [1, 2],
        ):
            with self.assertRaises(FamilyError):
                family_from_dict(bad)

        coloring, certificate = color_pair(f)
        document = ColoringDocument(coloring, 'pair', family_digest(f), certificate)
        loaded = ColoringDocument.from_dict(json_loads(document.dumps()))
        self.assertEqual(loaded.coloring, coloring)
        self.assertEqual(loaded.certificate, certificate)
        self.assertEqual(loaded.family_digest, family_digest(f))

        data = document.as_dict()
        data['colors'].append([1, 0, 0])
        with self.assertRaises(FamilyError):
            ColoringDocument.from_dict(data)
        with self.assertRaises(FamilyError):
            ColoringDocument.from_dict({'colors': [[0, 1]], 'family_digest': ''})
        for palette_size in (True, 0, '3', 1.5):
            with self.assertRaises(FamilyError):
                ColoringDocument.from_dict({'colors': [[0, 1, 0]], 'family_digest': '', 'palette_size': palette_size})

    def test_040_colorers(self):
        """Colorers by name."""
        print('INFO: [TEST_040] Colorers by name')
        f = random_family(10, 2, 3, 0.3, 2)
        for algo in ('sqrt', 'pair', 'trivial'):
            coloring, certificate = color_family(f, algo)
            self.assertEqual(certificate.algorithm, algo)
            self.assertTrue(check_certificate(verify(f, coloring), certificate))
        with self.assertRaises(WrongArity):
            color_family(f, 'vizing')
        with self.assertRaises(ValueError):
            color_family(f, 'nope')
        self.assertTrue(issubclass(CertificateError, Exception))

    def test_041_bench(self):
        """Bench suites."""
        print('INFO: [TEST_041] Bench')
        rows = run_bench(build_suite('pairs', instances=10, n=12, delta=3, seed=1, time_budget=10))
        self.assertEqual(len(rows), 20)
        self.assertEqual({r.algorithm for r in rows}, {'sqrt', 'pair'})
        for row in rows:
            self.assertEqual(row.status, 'ok')
            self.assertLessEqual(row.palette_used, row.palette_bound)
            if row.exact_chi is not None:
                self.assertLessEqual(row.exact_chi, row.palette_used)

        rows = run_bench(build_suite('star', time_budget=10))
        self.assertEqual([r.exact_chi for r in rows if r.algorithm == 'sqrt'], [4, 8, 12])

        rows = run_bench(build_suite('random', instances=2, n=8, ell=1, delta=3, seed=4))
        self.assertEqual(len(rows), 6)

        with self.assertRaises(ConstructionError):
            build_suite('nope')

    def test_042_bench_csv(self):
        """CSV export of the bench rows."""
        print('INFO: [TEST_042] Bench CSV export')
        row = BenchRow('pairs-0', 12, 2, 3, 20, 'pair', 5, 8, None, 0.01, 30.0)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'bench.csv')
            with BenchCsv(path) as export:
                self.assertTrue(export.update(row))
            with BenchCsv(path) as export:
                self.assertTrue(export.update(row))
            with open(path) as f:
                lines = f.read().splitlines()
            self.assertEqual(lines[0], ','.join(BENCH_HEADER))
            self.assertEqual(len(lines), 3)
            self.assertEqual(lines[1].split(',')[8], '')
            self.assertEqual(lines[1].split(',')[-1], 'ok')

            with open(path, 'w') as f:
                f.write('other,header\n')
            with BenchCsv(path) as export:
                self.assertFalse(export.update(row))
            with BenchCsv(path, overwrite=True) as export:
                self.assertTrue(export.update(row))
            with open(path) as f:
                self.assertEqual(len(f.read().splitlines()), 2)

    def test_043_config(self):
        """Configuration defaults and overrides."""
        print('INFO: [TEST_043] Configuration')
        config = Config()
        self.assertEqual(config.get_int_value('exact', 'max_conflict_nodes'), 30)
        self.assertEqual(config.get_float_value('exact', 'timeout'), 60.0)
        self.assertEqual(config.get_int_value('probe', 'trials'), 100)
        self.assertEqual(config.get_int_value('random', 'retry_factor'), 20)
        self.assertIsNone(config.loaded_config_file)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'simcolor.conf')
            with open(path, 'w') as f:
                f.write('[exact]\nmax_conflict_nodes=5\n')
            config = Config(path)
            self.assertEqual(config.get_int_value('exact', 'max_conflict_nodes'), 5)
            self.assertEqual(config.get_int_value('exact', 'brute_force_max_edges'), 8)
            self.assertEqual(config.get_int_value('bench', 'workers'), 1)
            self.assertEqual(config.as_dict()['exact']['max_conflict_nodes'], '5')

    def test_044_timer(self):
        """Timer and counter."""
        print('INFO: [TEST_044] Timer')
        self.assertFalse(Timer(None).finished())
        self.assertTrue(Timer(-1).finished())
        self.assertFalse(Timer(3600).finished())
        self.assertGreaterEqual(Counter().get(), 0)

    def test_045_branch_and_bound_weak_bounds(self):
        """Search from a clique bound of 1 and one color per node still finds chi."""
        print('INFO: [TEST_045] Branch and bound with weak bounds')
        path5 = single(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        cg = conflict_graph(path5)
        search = _BranchAndBound(cg, 1, list(range(cg.num_nodes)), Timer(60))
        search.run()
        self.assertEqual(search.best, 2)
        self.assertTrue(cg.is_proper({cg.nodes[i]: c for i, c in enumerate(search.best_colors)}))

        checked = 0
        seed = 0
        while checked < 100:
            f = random_family(6, 1 + seed % 3, 1 + seed % 3, 0.4, seed)
            seed += 1
            if not 1 <= len(f.union.edges) <= 8:
                continue
            cg = conflict_graph(f)
            search = _BranchAndBound(cg, 1, list(range(cg.num_nodes)), Timer(60))
            search.run()
            self.assertFalse(search.timed_out)
            self.assertEqual(search.best, brute_force_chi(f), f"seed {seed - 1}")
            coloring = {cg.nodes[i]: c for i, c in enumerate(search.best_colors)}
            self.assertTrue(cg.is_proper(coloring))
            self.assertEqual(len(set(coloring.values())), search.best)
            checked += 1


if __name__ == '__main__':
    unittest.main()
