import json
import os
import tempfile
from io import StringIO
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from complexes.checks import generators
from core import ComplexKind, ExitCode
from core.cli import RunConfig, run
from core.management.base import format_table
from core.management.commands.verify import Command as VerifyCommand
from core.utils import CheckReport
from graphs.canonical import canonical_form
from graphs.contraction import graph_boundary, project
from graphs.factories import DumbbellGraphFactory, LoopGraphFactory
from graphs.serializers import format_chain, format_graph


def call(*args) -> str:
    out = StringIO()
    call_command(*args, stdout=out, stderr=StringIO())
    return out.getvalue()


# ==================== Run config ====================

class RunConfigTest(SimpleTestCase):
    """Test cases for option validation."""

    def test_defaults(self):
        """Test that a bare config uses SRGC and the configured dimension."""
        config = RunConfig.from_options('enumerate', {'edges': 2})
        self.assertEqual(config.complex, ComplexKind.SRGC)
        self.assertEqual(config.max_edges, 2)
        self.assertEqual(config.space_dimension, 2)
        self.assertFalse(config.as_json)

    def test_graph_filter(self):
        """Test that the filter carries complex, (g, n) and connectivity."""
        config = RunConfig.from_options('homology', {'complex': 'krgc', 'genus': 1, 'marked': 2, 'connected': True})
        graph_filter = config.graph_filter()
        self.assertEqual(graph_filter.kind, ComplexKind.KRGC)
        self.assertEqual((graph_filter.genus, graph_filter.marked), (1, 2))
        self.assertTrue(graph_filter.connected)

    def test_edge_bounds(self):
        """Test that edge counts must lie in 1..RIBBON_MAX_EDGES."""
        for edges in (0, -1, 7):
            with self.assertRaises(CommandError) as context:
                RunConfig.from_options('enumerate', {'edges': edges})
            self.assertEqual(context.exception.returncode, ExitCode.USAGE_ERROR)

    def test_negative_genus(self):
        """Test that a negative genus is a usage error."""
        with self.assertRaises(CommandError):
            RunConfig.from_options('enumerate', {'edges': 1, 'genus': -1})

    def test_zero_marked_points(self):
        """Test that at least one marked point is required."""
        with self.assertRaises(CommandError):
            RunConfig.from_options('enumerate', {'edges': 1, 'marked': 0})

    def test_unknown_complex(self):
        """Test that only the three complexes are accepted."""
        with self.assertRaises(CommandError):
            RunConfig.from_options('enumerate', {'edges': 1, 'complex': 'grt'})

    def test_dimension_override(self):
        """Test that --dimension replaces the configured default."""
        config = RunConfig.from_options('verify', {'max_edges': 1, 'dimension': 3})
        self.assertEqual(config.space_dimension, 3)


# ==================== Output ====================

class FormatTableTest(SimpleTestCase):

    def test_columns_are_aligned(self):
        """Test left-aligned columns separated by two spaces."""
        self.assertEqual(format_table(('a', 'bb'), [(1, 2), (10, 3)]), 'a   bb\n1   2\n10  3')

    def test_header_only(self):
        """Test a table without rows."""
        self.assertEqual(format_table(('degree', 'dim'), []), 'degree  dim')


# ==================== Exit codes ====================

class RunTest(SimpleTestCase):
    """Test cases for the exit codes of run(argv)."""

    def test_zero_edges_is_usage_error(self):
        """Test `enumerate --edges 0` exits with 2."""
        self.assertEqual(run(['enumerate', '--edges', '0'], StringIO(), StringIO()), ExitCode.USAGE_ERROR)

    def test_unknown_command(self):
        """Test that an unknown or missing subcommand exits with 2."""
        self.assertEqual(run(['contract'], StringIO(), StringIO()), ExitCode.USAGE_ERROR)
        self.assertEqual(run([], StringIO(), StringIO()), ExitCode.USAGE_ERROR)

    def test_argparse_error(self):
        """Test that a missing required option exits with 2."""
        stderr = StringIO()
        self.assertEqual(run(['enumerate'], StringIO(), stderr), ExitCode.USAGE_ERROR)
        self.assertIn('Error:', stderr.getvalue())

    def test_unknown_suite(self):
        """Test that verify rejects suites it does not know."""
        self.assertEqual(run(['verify', 'jacobi'], StringIO(), StringIO()), ExitCode.USAGE_ERROR)

    def test_passing_suite(self):
        """Test `verify d2` on small generators exits with 0."""
        stdout = StringIO()
        argv = ['verify', 'd2', '--max-edges', '2', '--max-factors', '2', '--max-total-length', '3', '--dimension', '1']
        code = run(argv, stdout, StringIO())
        self.assertEqual(code, ExitCode.SUCCESS)
        self.assertIn('d2: PASS', stdout.getvalue())

    def test_failing_suite(self):
        """Test that a failed check exits with 1 and prints the first counterexample."""
        report = CheckReport('d2')
        report.record('theta', False, 'nonzero')
        stderr = StringIO()
        with mock.patch('core.management.commands.verify.run_suite', return_value=report):
            code = run(['verify', 'd2', '--max-edges', '1'], StringIO(), stderr)
        self.assertEqual(code, ExitCode.VERIFICATION_FAILURE)
        self.assertIn('First counterexample: theta nonzero', stderr.getvalue())

    def test_nonpositive_factor_bound(self):
        """Test that --max-factors 0 is a usage error."""
        self.assertEqual(run(['verify', 'd2', '--max-factors', '0'], StringIO(), StringIO()), ExitCode.USAGE_ERROR)

    def test_lambda_bounds_reach_the_suite(self):
        """Test that the factor and total length bounds are passed through, defaulting to 3 and 6."""
        report = CheckReport('d2')
        with mock.patch('core.management.commands.verify.run_suite', return_value=report) as run_suite:
            run(['verify', 'd2', '--max-edges', '1'], StringIO(), StringIO())
            run(['verify', 'projections', '--max-edges', '1', '--max-factors', '2', '--max-total-length', '4'], StringIO(), StringIO())
        (first, _), (second, _) = run_suite.call_args_list
        self.assertEqual(first[2:], (1, 4, 3, 6))
        self.assertEqual(second[2:], (1, 4, 2, 4))


# ==================== Commands ====================

class EnumerateCommandTest(SimpleTestCase):
    """Test cases for the enumerate command."""

    def test_text_output(self):
        """Test the header line and one row per class."""
        lines = call('enumerate', '--edges', '1', '--genus', '0', '--marked', '3').splitlines()
        self.assertTrue(lines[0].startswith('# srgc E=1: '))
        count = int(lines[0].split(': ')[1].split()[0])
        self.assertEqual(len(lines), count + 2)
        self.assertTrue(lines[1].startswith('#'))

    def test_json_output(self):
        """Test that every listed class has the requested (g, n) and the loop graph is among them."""
        entries = json.loads(call('enumerate', '--edges', '1', '--genus', '0', '--marked', '3', '--json'))
        self.assertTrue(entries)
        self.assertTrue(all((entry['g'], entry['n']) == (0, 3) for entry in entries))
        self.assertTrue(all(not entry['zero'] for entry in entries))
        self.assertIn(format_graph(canonical_form(LoopGraphFactory()).graph), call('enumerate', '--edges', '1'))

    def test_deterministic(self):
        """Test that two runs print identical output."""
        self.assertEqual(call('enumerate', '--edges', '2'), call('enumerate', '--edges', '2'))


class BoundaryCommandTest(SimpleTestCase):
    """Test cases for the boundary command."""

    def write(self, text: str) -> str:
        handle = tempfile.NamedTemporaryFile('w', suffix='.txt', delete=False)
        handle.write(text)
        handle.close()
        self.addCleanup(os.remove, handle.name)
        return handle.name

    def test_boundary_of_file(self):
        """Test that each graph is followed by its boundary chain."""
        graph = DumbbellGraphFactory()
        path = self.write(format_graph(graph) + '\n')
        expected = f'# d {format_graph(graph)}\n{format_chain(project(graph_boundary(graph), ComplexKind.SRGC))}\n'
        self.assertEqual(call('boundary', path), expected)

    def test_loop_has_no_boundary(self):
        """Test that the single loop graph prints the zero chain."""
        path = self.write(format_graph(LoopGraphFactory()) + '\n')
        self.assertEqual(call('boundary', path).splitlines()[1], '0')

    def test_missing_file(self):
        """Test that an unreadable file is a usage error."""
        self.assertEqual(run(['boundary', '/nonexistent/graphs.txt'], StringIO(), StringIO()), ExitCode.USAGE_ERROR)

    def test_malformed_file(self):
        """Test that a record without vertices is a usage error."""
        path = self.write('E=1; sigma1=[(0,1)]\n')
        self.assertEqual(run(['boundary', path], StringIO(), StringIO()), ExitCode.USAGE_ERROR)


class HomologyCommandTest(SimpleTestCase):
    """Test cases for the homology command."""

    def test_table(self):
        """Test one row per degree under the slice header."""
        lines = call('homology', '--genus', '1', '--marked', '1', '--max-edges', '3').splitlines()
        self.assertEqual(lines[0], '# srgc g=1 n=1 connected=False E<=3')
        self.assertEqual(lines[1], '# unaugmented graph complex homology, no degree-0 term')
        self.assertEqual(lines[2].split(), ['degree', 'dim', 'rank', 'betti'])
        self.assertEqual([line.split()[0] for line in lines[3:]], ['1', '2', '3'])

    def test_json_euler_identity(self):
        """Test Σ(-1)^k betti_k = Σ(-1)^k dim C_k on a complete slice."""
        payload = json.loads(call('homology', '--complex', 'rgc', '--genus', '1', '--marked', '1', '--max-edges', '3', '--json'))
        self.assertTrue(payload['complete'])
        self.assertFalse(payload['augmented'])
        degrees = payload['degrees']
        self.assertEqual(
            sum((-1) ** row['degree'] * row['betti'] for row in degrees),
            sum((-1) ** row['degree'] * row['dim'] for row in degrees),
        )

    def test_dense_check(self):
        """Test that sparse and dense ranks agree."""
        code = run(['homology', '--genus', '0', '--marked', '3', '--max-edges', '3', '--dense-check'], StringIO(), StringIO())
        self.assertEqual(code, ExitCode.SUCCESS)

    def test_truncated_slice_is_flagged(self):
        """Test that a slice below its top degree says so."""
        output = call('homology', '--genus', '0', '--marked', '4', '--max-edges', '2')
        self.assertIn('# truncated below the top degree 6', output)

    def test_genus_is_required(self):
        """Test that homology needs a (g, n) slice."""
        self.assertEqual(run(['homology', '--marked', '1', '--max-edges', '2'], StringIO(), StringIO()), ExitCode.USAGE_ERROR)

    def test_emit_matrices(self):
        """Test that --emit-matrices writes bases and matrices."""
        with tempfile.TemporaryDirectory() as directory:
            call('homology', '--genus', '1', '--marked', '1', '--max-edges', '3', '--emit-matrices', directory)
            self.assertIn('basis_srgc_g1_n1_E1.txt', os.listdir(directory))


class EulerCommandTest(SimpleTestCase):
    """Test cases for the euler command."""

    def test_alternating_sum(self):
        """Test that each row's total is the alternating sum of its counts."""
        rows = json.loads(call('euler', '--max-edges', '2', '--genus', '0', '--marked', '3', '--json'))
        self.assertEqual([(row['g'], row['n']) for row in rows], [(0, 3)])
        for row in rows:
            self.assertEqual(row['euler'], sum((-1) ** int(degree) * count for degree, count in row['counts'].items()))

    def test_text_header(self):
        """Test the column headers."""
        header = call('euler', '--max-edges', '2').splitlines()[0]
        self.assertEqual(header.split(), ['g', 'n', 'E=1', 'E=2', 'euler'])

    def test_max_edges_required(self):
        """Test that euler needs an edge bound."""
        self.assertEqual(run(['euler'], StringIO(), StringIO()), ExitCode.USAGE_ERROR)


class FinishTest(SimpleTestCase):

    def test_failure_raises_with_exit_code_one(self):
        """Test that a failed report turns into CommandError(returncode=1)."""
        report = CheckReport('chainmap')
        report.record('abc123 round-trip', False, '-1 | E=1')
        command = VerifyCommand(stdout=StringIO(), stderr=StringIO())
        with self.assertRaises(CommandError) as context:
            command.finish(report)
        self.assertEqual(context.exception.returncode, ExitCode.VERIFICATION_FAILURE)
        self.assertIn('abc123 round-trip', str(context.exception))

    def test_json_report(self):
        """Test the machine-readable report of a passing suite."""
        stdout = StringIO()
        command = VerifyCommand(stdout=stdout, stderr=StringIO())
        report = CheckReport('hopf')
        report.record('case', True)
        command.finish(report, as_json=True)
        self.assertEqual(json.loads(stdout.getvalue()), {'suite': 'hopf', 'status': 'PASS', 'checked': 1, 'failures': []})

    def test_cases_are_listed(self):
        """Test that per-case rows precede the summary and appear in the JSON report."""
        report = CheckReport('chainmap')
        report.record('abc123 round-trip', True)
        report.add_case('abc123', True, 'E=1')
        stdout = StringIO()
        VerifyCommand(stdout=stdout, stderr=StringIO()).finish(report)
        lines = stdout.getvalue().splitlines()
        self.assertEqual(lines[0].split(), ['case', 'status', 'detail'])
        self.assertEqual(lines[1].split(), ['abc123', 'PASS', 'E=1'])
        self.assertEqual(lines[2], 'chainmap: PASS (1 checked, 0 failed)')

        stdout = StringIO()
        VerifyCommand(stdout=stdout, stderr=StringIO()).finish(report, as_json=True)
        self.assertEqual(json.loads(stdout.getvalue())['cases'], [{'case': 'abc123', 'status': 'PASS', 'detail': 'E=1'}])


class VerifyCommandTest(SimpleTestCase):
    """Test cases for the verify command."""

    def test_chainmap_reports_every_generator(self):
        """Test one PASS record per generator, keyed by its canonical digest."""
        payload = json.loads(call('verify', 'chainmap', '--max-edges', '1', '--json'))
        graphs = generators(1)
        self.assertEqual(payload['status'], 'PASS')
        self.assertEqual([case['case'] for case in payload['cases']], [canonical_form(graph).digest for graph in graphs])
        self.assertTrue(all(case['status'] == 'PASS' for case in payload['cases']))
        self.assertEqual(payload['cases'][0]['detail'], format_graph(graphs[0]))

    def test_enumeration_suite(self):
        """Test that the enumerator matches the naive oracle for every complex."""
        self.assertIn('enumeration: PASS', call('verify', 'enumeration', '--max-edges', '2'))

    def test_homology_oracle_suite(self):
        """Test one row per (complex, g, n) slice."""
        payload = json.loads(call('verify', 'homology-oracle', '--max-edges', '2', '--json'))
        self.assertEqual(payload['status'], 'PASS')
        self.assertEqual(len(payload['cases']), 18)
        self.assertIn('rgc g=1 n=1 connected=False E<=2', [case['case'] for case in payload['cases']])
