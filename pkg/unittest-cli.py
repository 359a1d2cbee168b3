#!/usr/bin/env python
#
# This file is part of simcolor.
#
# SPDX-FileCopyrightText: 2024 simcolor contributors
#
# SPDX-License-Identifier: LGPL-3.0-only
#

"""simcolor unitary tests suite for the command line."""

import json
import os
import shutil
import subprocess
import sys
import tempfile
import unittest

from simcolor import __version__

ROOT = os.path.dirname(os.path.abspath(__file__))
tmp = None

# Unitest class
# ==============
print(f'Command line unitary tests for simcolor {__version__}')


def simcolor(*args, stdin=None):
    """Run python -m simcolor and return (exit code, stdout, stderr)."""
    ret = subprocess.run(
        [sys.executable, '-m', 'simcolor', *args],
        cwd=ROOT,
        input=stdin,
        capture_output=True,
    )
    return ret.returncode, ret.stdout, ret.stderr


def path(name):
    return os.path.join(tmp, name)


def write(name, data):
    with open(path(name), 'w') as f:
        json.dump(data, f)
    return path(name)


def read(name):
    with open(path(name), 'rb') as f:
        return f.read()


class TestSimcolorCli(unittest.TestCase):
    """Test the simcolor command line."""

    @classmethod
    def setUpClass(cls):
        global tmp
        tmp = tempfile.mkdtemp(prefix='simcolor-')

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(tmp, ignore_errors=True)

    def setUp(self):
        """The function is called *every time* before test_*."""
        print('\n' + '=' * 78)

    def test_000_version(self):
        """Version."""
        print('INFO: [TEST_000] Version')
        code, out, _ = simcolor('-V')
        self.assertEqual(code, 0)
        self.assertIn(__version__, out.decode())

    def test_001_generate(self):
        """Family generators."""
        print('INFO: [TEST_001] generate')
        code, _, _ = simcolor('generate', 'star', '--l', '8', '--delta', '4', '-o', path('star.json'))
        self.assertEqual(code, 0)
        data = json.loads(read('star.json'))
        self.assertEqual(len(data['graphs']), 6)
        self.assertEqual(len({tuple(e) for g in data['graphs'] for e in g}), 8)

        code, out, _ = simcolor('generate', 'star3', '--delta', '10')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(len(data['graphs']), 3)
        self.assertEqual(data['num_vertices'], 16)

        cmd = ('generate', 'random', '--n', '20', '--l', '3', '--delta', '5', '--overlap', '0.3', '--seed', '7')
        first = simcolor(*cmd)
        second = simcolor(*cmd)
        self.assertEqual(first[0], 0)
        self.assertEqual(first[1], second[1])

    def test_002_generate_errors(self):
        """Invalid generator parameters."""
        print('INFO: [TEST_002] generate errors')
        code, _, err = simcolor('generate', 'random', '--n', '20', '--l', '3', '--delta', '5')
        self.assertEqual(code, 2)
        self.assertIn(b'--seed', err)

        code, _, err = simcolor('generate', 'star', '--l', '8', '--delta', '3')
        self.assertEqual(code, 2)
        self.assertIn(b'OddDelta', err)

        code, _, _ = simcolor('generate', 'star', '--l', '1', '--delta', '4')
        self.assertEqual(code, 2)

    def test_003_color_verify(self):
        """generate, color, verify for every algorithm."""
        print('INFO: [TEST_003] color then verify')
        simcolor('generate', 'random', '--n', '15', '--l', '2', '--delta', '4', '--overlap', '0.4', '--seed', '3',
                 '-o', path('pair.json'))
        simcolor('generate', 'random', '--n', '15', '--l', '1', '--delta', '4', '--seed', '3', '-o', path('one.json'))
        simcolor('generate', 'random', '--n', '15', '--l', '4', '--delta', '4', '--overlap', '0.4', '--seed', '3',
                 '-o', path('four.json'))
        cases = (
            ('pair.json', 'sqrt'),
            ('pair.json', 'pair'),
            ('pair.json', 'trivial'),
            ('one.json', 'vizing'),
            ('one.json', 'sqrt'),
            ('four.json', 'sqrt'),
            ('four.json', 'trivial'),
        )
        for family, algo in cases:
            code, _, err = simcolor('color', '--algo', algo, path(family), '-o', path('col.json'))
            self.assertEqual(code, 0, err)
            document = json.loads(read('col.json'))
            self.assertEqual(document['algorithm'], algo)
            self.assertLessEqual(document['certificate']['palette_used'], document['certificate']['palette_bound'])
            code, out, _ = simcolor('verify', path(family), path('col.json'))
            self.assertEqual(code, 0)
            report = json.loads(out)
            self.assertTrue(report['valid'])
            self.assertTrue(report['certificate_ok'])

        code, _, _ = simcolor('color', '--algo', 'sqrt', '--sweep-k', path('four.json'), '-o', path('col.json'))
        self.assertEqual(code, 0)

    def test_004_color_errors(self):
        """Arity and parse errors."""
        print('INFO: [TEST_004] color errors')
        simcolor('generate', 'star3', '--delta', '4', '-o', path('star3.json'))
        code, _, err = simcolor('color', '--algo', 'pair', path('star3.json'))
        self.assertEqual(code, 2)
        self.assertIn(b'WrongArity', err)

        code, _, _ = simcolor('color', '--algo', 'vizing', path('star3.json'))
        self.assertEqual(code, 2)

        with open(path('broken.json'), 'w') as f:
            f.write('{"num_vertices": 3, "graphs": [[[0, 1]]')
        code, _, _ = simcolor('color', path('broken.json'))
        self.assertEqual(code, 2)

        write('loop.json', {'num_vertices': 3, 'graphs': [[[1, 1]]]})
        code, _, _ = simcolor('color', path('loop.json'))
        self.assertEqual(code, 2)

        code, _, _ = simcolor('color', path('missing.json'))
        self.assertEqual(code, 2)

        code, _, _ = simcolor('color', '--algo', 'pair', '--sweep-k', path('star3.json'))
        self.assertEqual(code, 2)

    def test_005_certificate_bounds(self):
        """Certified bounds."""
        print('INFO: [TEST_005] certificate bounds')
        star = [[0, i] for i in range(1, 5)]
        cycle = [[1, 2], [2, 3], [3, 4], [1, 4]]
        write('delta4.json', {'num_vertices': 5, 'graphs': [star, cycle]})
        code, out, _ = simcolor('color', '--algo', 'pair', path('delta4.json'))
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['certificate']['palette_bound'], 10)

        star5 = [[0, i] for i in range(1, 6)]
        write('ell8.json', {'num_vertices': 6, 'graphs': [star5] * 8})
        code, out, _ = simcolor('color', '--algo', 'sqrt', path('ell8.json'))
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['certificate']['general_bound'], 38)

    def test_006_exact(self):
        """Exact chi."""
        print('INFO: [TEST_006] exact')
        simcolor('generate', 'star3', '--delta', '4', '-o', path('star3.json'))
        code, out, _ = simcolor('exact', path('star3.json'), '-o', path('opt.json'))
        self.assertEqual(code, 0)
        result = json.loads(out)
        self.assertEqual((result['chi'], result['status']), (6, 'exact'))
        code, out, _ = simcolor('verify', path('star3.json'), path('opt.json'))
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['palette_used'], 6)

        simcolor('generate', 'star', '--l', '8', '--delta', '4', '-o', path('star.json'))
        code, out, _ = simcolor('exact', path('star.json'))
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['chi'], 8)

        simcolor('generate', 'star3', '--delta', '2', '-o', path('star3-2.json'))
        code, out, _ = simcolor('exact', '--brute-force', path('star3-2.json'))
        self.assertEqual(code, 0)
        result = json.loads(out)
        self.assertEqual((result['chi'], result['brute_force_chi']), (3, 3))

        write('empty.json', {'num_vertices': 4, 'graphs': [[]]})
        code, out, _ = simcolor('exact', path('empty.json'))
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['chi'], 0)

        code, _, err = simcolor('exact', '--max-edges', '5', path('star3.json'))
        self.assertEqual(code, 2)
        self.assertIn(b'InstanceTooLarge', err)
        code, out, _ = simcolor('exact', '--max-edges', '5', '--allow-timeout', path('star3.json'))
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['chi'], 6)

    def test_007_verify(self):
        """Verify exit codes."""
        print('INFO: [TEST_007] verify')
        simcolor('generate', 'star3', '--delta', '4', '-o', path('star3.json'))
        simcolor('generate', 'star', '--l', '8', '--delta', '4', '-o', path('star.json'))
        simcolor('color', '--algo', 'trivial', path('star3.json'), '-o', path('col3.json'))

        code, _, err = simcolor('verify', path('star.json'), path('col3.json'))
        self.assertEqual(code, 2)
        self.assertIn(b'DigestMismatch', err)

        document = json.loads(read('col3.json'))
        document['colors'][1][2] = document['colors'][0][2]
        document['certificate'] = None
        write('bad.json', document)
        code, out, _ = simcolor('verify', path('star3.json'), path('bad.json'))
        self.assertEqual(code, 1)
        report = json.loads(out)
        self.assertFalse(report['valid'])
        self.assertGreaterEqual(len(report['violations']), 1)

        document['colors'].append([0, 15, 0])
        write('unknown.json', document)
        code, _, _ = simcolor('verify', path('star3.json'), path('unknown.json'))
        self.assertEqual(code, 2)

        with open(path('garbage.json'), 'w') as f:
            f.write('not json')
        code, _, _ = simcolor('verify', path('star3.json'), path('garbage.json'))
        self.assertEqual(code, 2)

    def test_008_stats(self):
        """Family statistics."""
        print('INFO: [TEST_008] stats')
        simcolor('generate', 'star', '--l', '8', '--delta', '4', '-o', path('star.json'))
        code, out, _ = simcolor('stats', path('star.json'))
        self.assertEqual(code, 0)
        stats = json.loads(out)
        self.assertEqual((stats['n'], stats['ell'], stats['delta'], stats['union_edges']), (9, 6, 4, 8))
        self.assertEqual(stats['multiplicity_histogram'], {'3': 8})
        self.assertEqual(stats['lower_bound_star'], 8)
        self.assertNotIn('bound_pair', stats)

    def test_009_bench(self):
        """Bench CSV."""
        print('INFO: [TEST_009] bench')
        csv_path = path('bench.csv')
        code, _, err = simcolor('bench', '--suite', 'pairs', '--instances', '3', '--seed', '1', '-o', csv_path)
        self.assertEqual(code, 0, err)
        with open(csv_path) as f:
            lines = f.read().splitlines()
        self.assertTrue(lines[0].startswith('instance,n,ell,delta,union_edges,algorithm'))
        self.assertEqual(len(lines), 7)

        code, _, _ = simcolor('bench', '--suite', 'star', '--star-ells', '2,8', '-o', csv_path)
        self.assertEqual(code, 0)
        with open(csv_path) as f:
            self.assertEqual(len(f.read().splitlines()), 11)

        with open(csv_path, 'w') as f:
            f.write('a,b\n')
        code, _, _ = simcolor('bench', '--suite', 'pairs', '--instances', '1', '-o', csv_path)
        self.assertEqual(code, 2)
        code, _, _ = simcolor('bench', '--suite', 'pairs', '--instances', '2', '--workers', '2', '--overwrite',
                              '-o', csv_path)
        self.assertEqual(code, 0)
        with open(csv_path) as f:
            self.assertEqual(len(f.read().splitlines()), 5)

    def test_010_probe(self):
        """Probe report and artifacts."""
        print('INFO: [TEST_010] probe')
        code, out, _ = simcolor('probe', '--trials', '5', '--n', '6', '--delta', '3', '--seed', '2',
                                '--artifact-dir', path('findings'))
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(report['trials'], 5)
        for row in report['rows']:
            if row['flagged']:
                self.assertTrue(os.path.isfile(row['artifact']))

        code, out, _ = simcolor('probe', '--trials', '0')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['rows'], [])

    def test_011_config(self):
        """Configuration file given with -C."""
        print('INFO: [TEST_011] -C configuration file')
        conf = path('simcolor.conf')
        with open(conf, 'w') as f:
            f.write('[exact]\nmax_conflict_nodes=5\n')
        simcolor('generate', 'star3', '--delta', '4', '-o', path('star3.json'))
        code, _, _ = simcolor('-C', conf, 'exact', path('star3.json'))
        self.assertEqual(code, 2)
        code, _, _ = simcolor('-C', os.path.join(ROOT, 'conf', 'simcolor.conf'), 'exact', path('star3.json'))
        self.assertEqual(code, 0)
        code, _, _ = simcolor('-C', path('nowhere.conf'), 'stats', path('star3.json'))
        self.assertEqual(code, 2)

        with open(conf, 'w') as f:
            f.write('[exact]\nmax_conflict_nodes=abc\n')
        code, _, err = simcolor('-C', conf, 'exact', path('star3.json'))
        self.assertEqual(code, 2)
        self.assertNotIn(b'Traceback', err)
        with open(conf, 'w') as f:
            f.write('[exact]\ntimeout=soon\n')
        code, _, err = simcolor('-C', conf, 'exact', path('star3.json'))
        self.assertEqual(code, 2)
        self.assertNotIn(b'Traceback', err)
        with open(conf, 'w') as f:
            f.write('max_conflict_nodes=5\n')
        code, _, err = simcolor('-C', conf, 'stats', path('star3.json'))
        self.assertEqual(code, 2)
        self.assertNotIn(b'Traceback', err)

    def test_012_stdin(self):
        """Family from standard input."""
        print('INFO: [TEST_012] standard input')
        _, family, _ = simcolor('generate', 'star3', '--delta', '2')
        code, out, _ = simcolor('exact', '-', stdin=family)
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['chi'], 3)


if __name__ == '__main__':
    unittest.main()
