import io
import json
import os
import tempfile

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from ..codes.samples import fixture_path
from .dispatch import cli_dispatch


FIG1 = fixture_path('fig1.json')
TABLE1 = fixture_path('table1.json')
FIG1_SCHEME = fixture_path('fig1_scheme.json')
GF3_SYSTEM = fixture_path('gf3_system.json')


class CliTestCase(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def write(self, name, document):
        path = self.path(name)
        with open(path, 'w') as handle:
            json.dump(document, handle)
        return path

    def run_cli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        status = cli_dispatch(list(argv), stdout=out, stderr=err)
        return status, out.getvalue(), err.getvalue()

    def run_json(self, *argv):
        status, out, _ = self.run_cli(*argv, '--json')
        return status, json.loads(out)


class VerifyTests(CliTestCase):

    def test_verify_mds(self):
        status, out, _ = self.run_cli('verify-mds', FIG1)
        self.assertEqual(status, 0)
        self.assertIn('MDS: 6/6 subsets invertible', out)

        status, out, _ = self.run_cli('verify-mds', TABLE1)
        self.assertEqual(status, 0)
        self.assertIn('MDS: 15/15 subsets invertible', out)

    def test_verify_mds_failure(self):
        with open(FIG1) as handle:
            document = json.load(handle)
        document['encoding'][1][0] = [[1, 1], [1, 1]]
        status, out, _ = self.run_cli('verify-mds', self.write('broken.json', document))
        self.assertEqual(status, 1)
        self.assertIn('MDS: 5/6 subsets invertible', out)
        self.assertIn('failing: nodes [2, 4]', out)

    def test_verify_mds_json(self):
        status, report = self.run_json('verify-mds', FIG1)
        self.assertEqual(status, 0)
        self.assertEqual(report['schema'], 1)
        self.assertEqual(report['checked'], 6)
        self.assertEqual(report['failing'], [])

    def test_verify_repair(self):
        status, out, _ = self.run_cli('verify-repair', FIG1, FIG1_SCHEME)
        self.assertEqual(status, 0)
        self.assertIn('2/2 nodes repairable', out)

        status, out, _ = self.run_cli('verify-repair', FIG1, FIG1_SCHEME, '--fail', '2')
        self.assertEqual(status, 0)
        self.assertIn('1/1 nodes repairable', out)

    def test_verify_repair_violation(self):
        scheme = self.write('bad.json', {'repairs': [{'failed': 1, 'helpers': [
            {'node': 2, 'basis': [[0, 1]]},
            {'node': 3, 'basis': [[0, 1]]},
            {'node': 4, 'basis': [[1, 1]]},
        ]}]})
        status, out, _ = self.run_cli('verify-repair', FIG1, scheme)
        self.assertEqual(status, 1)
        self.assertIn('alignment [2, 2]', out)

        status, report = self.run_json('verify-repair', FIG1, scheme)
        self.assertEqual(status, 1)
        self.assertEqual(report['reports'][0]['violations'][0]['indices'], [2, 2])


class RepairTests(CliTestCase):

    def test_worked_example(self):
        data = self.write('data.json', {'schema': 1, 'systematic': [[1, 0], [1, 1]]})
        status, out, _ = self.run_cli('repair', FIG1, FIG1_SCHEME, '--fail', '1', '--data', data)
        self.assertEqual(status, 0)
        self.assertIn('node 2 sent (1)', out)
        self.assertIn('node 3 sent (1)', out)
        self.assertIn('node 4 sent (0)', out)
        self.assertIn('recovered (1, 0) (exact)', out)
        self.assertIn('bandwidth: 3 symbols (optimal 3, naive 4)', out)

    def test_random_data(self):
        for seed in range(5):
            status, report = self.run_json('repair', FIG1, FIG1_SCHEME, '--fail', '2', '--seed', str(seed))
            self.assertEqual(status, 0)
            self.assertTrue(report['exact'])
            self.assertEqual(report['symbols'], 3)
            self.assertEqual([t['node'] for t in report['transmissions']], [1, 3, 4])

    def test_parity_node_is_rejected(self):
        status, _, err = self.run_cli('repair', FIG1, FIG1_SCHEME, '--fail', '3')
        self.assertEqual(status, 2)
        self.assertTrue(err)


class SearchTests(CliTestCase):

    def test_fig1_solutions(self):
        status, out, _ = self.run_cli('search-scheme', FIG1, '--fail', '1')
        self.assertEqual(status, 0)
        self.assertIn('node 1: 3 solution(s)', out)
        for line in ('span(1, 0), span(1, 0)', 'span(1, 1), span(1, 1)', 'span(0, 1), span(0, 1)'):
            self.assertIn(line, out)

    def test_table1_pipeline(self):
        scheme = self.path('table1_scheme.json')
        status, out, _ = self.run_cli('search-scheme', TABLE1, '--out', scheme)
        self.assertEqual(status, 0)
        self.assertTrue(os.path.exists(scheme))

        status, out, _ = self.run_cli('verify-repair', TABLE1, scheme)
        self.assertEqual(status, 0)
        self.assertIn('4/4 nodes repairable', out)

        status, report = self.run_json('repair', TABLE1, scheme, '--fail', '4', '--seed', '9')
        self.assertEqual(status, 0)
        self.assertEqual(report['symbols'], 5)

        status, out, _ = self.run_cli('reduce-theta', TABLE1, scheme)
        self.assertEqual(status, 0)
        self.assertIn('3 pairs anchored at node 4', out)
        self.assertIn('check_sc: passed', out)
        self.assertIn('identity family: 4 matrices, rank 4, independent', out)

    def test_no_scheme(self):
        identity = [[1, 0], [0, 1]]
        code = self.write('scalar.json', {
            'field': {'p': 5, 'm': 1, 'reduction': None}, 'ell': 2, 'k': 2, 'r': 2,
            'encoding': [[identity, identity], [identity, [[2, 0], [0, 2]]]],
        })
        status, out, err = self.run_cli('search-scheme', code)
        self.assertEqual(status, 1)
        self.assertIn('NoSchemeExists', err)

        status, report = self.run_json('search-scheme', code)
        self.assertEqual(status, 1)
        self.assertEqual(report['error'], 'NoSchemeExists')
        self.assertEqual(report['payload']['failed'], 1)

    def test_maxk(self):
        status, report = self.run_json('search-maxk', '--ell', '2', '--r', '2', '--p', '3')
        self.assertEqual(status, 0)
        self.assertEqual(report['kmax'], 3)
        self.assertTrue(report['exhaustive'])
        self.assertEqual(len(report['witness']['pairs']), 3)

        status, out, _ = self.run_cli('search-maxk', '--ell', '2', '--r', '2', '--p', '2')
        self.assertIn('kmax = 2 over GF(2) at ell=2, r=2 (exhaustive)', out)

    def test_maxk_witness_feeds_certify(self):
        system = self.path('witness.json')
        status, _, _ = self.run_cli('search-maxk', '--ell', '2', '--r', '2', '--p', '5', '--out', system)
        self.assertEqual(status, 0)
        status, out, _ = self.run_cli('certify', system, '--family', 'upsilon', '--pairs', '1:2')
        self.assertEqual(status, 0)
        self.assertIn('2 matrices, rank 2, independent', out)

    def test_maxk_bad_field(self):
        status, _, err = self.run_cli('search-maxk', '--ell', '2', '--r', '2', '--p', '4')
        self.assertEqual(status, 2)
        self.assertIn('NonPrimeCharacteristic', err)


class CertifyTests(CliTestCase):

    def test_upsilon(self):
        status, out, _ = self.run_cli('certify', GF3_SYSTEM, '--family', 'upsilon', '--pairs', '1:2')
        self.assertEqual(status, 0)
        self.assertIn('2 matrices, rank 2, independent', out)

    def test_t_family(self):
        status, out, _ = self.run_cli('certify', GF3_SYSTEM, '--family', 't', '--partition', '1;2')
        self.assertEqual(status, 0)
        self.assertIn('corollary: holds (vacuous)', out)

        status, _, err = self.run_cli('certify', GF3_SYSTEM, '--family', 't', '--partition', '1;2;3')
        self.assertEqual(status, 2)

    def test_identity(self):
        status, report = self.run_json('certify', GF3_SYSTEM, '--family', 'identity')
        self.assertEqual(status, 0)
        self.assertEqual(report['kind'], 'identity')
        self.assertEqual(report['rank'], 4)
        self.assertTrue(report['independent'])
        self.assertEqual(len(report['members']), 4)

    def test_sum(self):
        status, out, _ = self.run_cli('certify', GF3_SYSTEM, '--family', 'sum', '--partition', '1,2')
        self.assertEqual(status, 0)
        self.assertIn('dim 2', out)

    def test_bad_arguments(self):
        status, _, _ = self.run_cli('certify', GF3_SYSTEM, '--family', 'upsilon', '--pairs', '1-2')
        self.assertEqual(status, 2)
        status, _, _ = self.run_cli('certify', GF3_SYSTEM, '--family', 'upsilon', '--pairs', '1:9')
        self.assertEqual(status, 2)
        status, _, _ = self.run_cli('certify', GF3_SYSTEM, '--family', 'omega')
        self.assertEqual(status, 2)


class BoundsTests(CliTestCase):

    def test_worked_values(self):
        status, out, _ = self.run_cli('bounds', '--ell', '8192', '--r', '2')
        self.assertEqual(status, 0)
        self.assertIn('logsq: 365', out)

        status, out, _ = self.run_cli('bounds', '--ell', '2', '--r', '2')
        self.assertIn('logsq: 5', out)
        self.assertIn('quadratic: 4', out)

    def test_json(self):
        status, report = self.run_json('bounds', '--ell', '4', '--r', '2', '--n', '6')
        self.assertEqual(status, 0)
        for key in ('quadratic', 'linear_r2', 'logsq', 'known_achievable', 'bandwidth'):
            self.assertIn(key, report)
        self.assertEqual(report['bandwidth'], '10')

    def test_consistency(self):
        status, out, _ = self.run_cli('bounds', '--ell', '2', '--r', '2', '--kmax', '3')
        self.assertEqual(status, 0)
        status, _, err = self.run_cli('bounds', '--ell', '2', '--r', '2', '--kmax', '4')
        self.assertEqual(status, 1)
        self.assertIn('BoundViolated', err)

    def test_code_counts(self):
        status, out, _ = self.run_cli('bounds', '--ell', '2', '--r', '2', '--kmax', '4', '--counts', 'code')
        self.assertEqual(status, 0)
        self.assertIn('k=4 (code count) is within every bound', out)

        status, _, _ = self.run_cli('bounds', '--ell', '2', '--r', '2', '--kmax', '5', '--counts', 'code')
        self.assertEqual(status, 1)
        status, _, _ = self.run_cli('bounds', '--ell', '2', '--r', '2', '--kmax', '4', '--counts', 'nodes')
        self.assertEqual(status, 2)


class UsageTests(CliTestCase):

    def test_usage_errors(self):
        self.assertEqual(self.run_cli()[0], 2)
        self.assertEqual(self.run_cli('explode')[0], 2)
        self.assertEqual(self.run_cli('bounds', '--ell', 'two', '--r', '2')[0], 2)
        self.assertEqual(self.run_cli('verify-mds', self.path('missing.json'))[0], 2)

    def test_malformed_files(self):
        with open(self.path('garbage.json'), 'w') as handle:
            handle.write('{not json')
        self.assertEqual(self.run_cli('verify-mds', self.path('garbage.json'))[0], 2)

        with open(FIG1) as handle:
            document = json.load(handle)
        document['encoding'][0][0] = [[2, 0], [0, 1]]
        status, _, err = self.run_cli('verify-mds', self.write('range.json', document))
        self.assertEqual(status, 2)
        self.assertIn('invalid input', err)

        document['schema'] = 2
        self.assertEqual(self.run_cli('verify-mds', self.write('schema.json', document))[0], 2)


class CommandTests(CliTestCase):

    def test_call_command(self):
        out = io.StringIO()
        call_command('msrlab', 'verify-mds', FIG1, stdout=out)
        self.assertIn('MDS: 6/6 subsets invertible', out.getvalue())

    def test_failure_raises(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('msrlab', 'bounds', '--ell', '2', '--r', '2', '--kmax', '9',
                         stdout=io.StringIO(), stderr=io.StringIO())
        self.assertEqual(ctx.exception.returncode, 1)
