from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from ..codes.encoding import encode, random_fill, zero_fill
from ..codes.models import CodeParams, DataFill
from ..codes.samples import fig1
from ..ffalg.exceptions import ShapeMismatch
from ..ffalg.subspaces import span, subspace_intersect
from . import exceptions as e
from .engine import (
    bandwidth_of, change_of_basis, execute_repair, naive_bandwidth, residual_block, verify_all,
    verify_scheme,
)
from .models import RepairScheme
from .samples import fig1_scheme
from .serializers import SchemeFileSerializer, TranscriptSerializer


class VerifySchemeTests(SimpleTestCase):

    def test_common_subspace_repairs_node_1(self):
        report = verify_scheme(fig1(), fig1_scheme(), 1)
        self.assertTrue(report.passed)
        self.assertEqual(report.violations, ())

    def test_node_2(self):
        scheme = fig1_scheme(failed=2, overrides={4: [[1, 0]]})
        self.assertTrue(verify_scheme(fig1(), scheme, 2))

    def test_alignment_violation(self):
        report = verify_scheme(fig1(), fig1_scheme(overrides={4: [[1, 1]]}), 1)
        self.assertFalse(report.passed)
        self.assertEqual([(v.kind, v.indices) for v in report.violations], [('alignment', (2, 2))])

    def test_deficient_sum(self):
        code = fig1().replace(2, 1, [[1, 0], [0, 1]])
        report = verify_scheme(code, fig1_scheme(), 1)
        kinds = {v.kind: v for v in report.violations}
        self.assertIn('direct_sum', kinds)
        self.assertEqual(kinds['direct_sum'].dimension, 1)

    def test_rank_deficient_basis(self):
        report = verify_scheme(fig1(), fig1_scheme(overrides={3: [[0, 0]]}), 1)
        self.assertIn('rank', [v.kind for v in report.violations])

    def test_uncovered_and_bad_nodes(self):
        self.assertFalse(verify_scheme(fig1(), fig1_scheme(), 2))
        with self.assertRaises(ShapeMismatch):
            verify_scheme(fig1(), fig1_scheme(), 3)

    def test_verify_all(self):
        scheme = fig1_scheme().merge(fig1_scheme(failed=2, overrides={4: [[1, 0]]}))
        reports = verify_all(fig1(), scheme)
        self.assertEqual(sorted(reports), [1, 2])
        self.assertTrue(all(reports.values()))

    def test_residuals_form_a_direct_sum(self):
        code, scheme = fig1(), fig1_scheme()
        first, second = (span(residual_block(code, scheme, 1, t)) for t in (1, 2))
        self.assertTrue(subspace_intersect(first, second).is_zero())

    def test_scheme_shapes(self):
        code = fig1()
        with self.assertRaises(ShapeMismatch):
            RepairScheme(code.params, code.field, {1: {2: [[0, 1]], 3: [[0, 1]]}})
        with self.assertRaises(ShapeMismatch):
            RepairScheme(code.params, code.field, {1: {2: [[0, 1], [1, 0]], 3: [[0, 1]], 4: [[0, 1]]}})
        with self.assertRaises(ShapeMismatch):
            RepairScheme.uniform(code.params, code.field, 3, [[0, 1]])


class ExecuteRepairTests(SimpleTestCase):

    def test_worked_example(self):
        code = fig1()
        nodes = encode(code, DataFill.build(code.field, [[1, 0], [1, 1]]))
        transcript = execute_repair(code, fig1_scheme(), 1, nodes)
        self.assertEqual({j: v.tolist() for j, v in transcript.transmissions.items()},
                         {2: [1], 3: [1], 4: [0]})
        self.assertEqual(transcript.recovered.tolist(), [1, 0])
        self.assertEqual(transcript.symbols, 3)

    def test_zero_data(self):
        code = fig1()
        transcript = execute_repair(code, fig1_scheme(), 1, encode(code, zero_fill(code)))
        self.assertFalse(np.any(transcript.recovered != 0))
        self.assertTrue(all(not np.any(v != 0) for v in transcript.transmissions.values()))

    def test_random_fills(self):
        code = fig1()
        scheme = fig1_scheme().merge(fig1_scheme(failed=2, overrides={4: [[1, 0]]}))
        rng = np.random.default_rng(17)
        for _ in range(100):
            data = random_fill(code, rng)
            nodes = encode(code, data)
            for failed in (1, 2):
                survivors = {j: nodes[j - 1] for j in range(1, 5) if j != failed}
                transcript = execute_repair(code, scheme, failed, survivors)
                self.assertTrue(np.array_equal(transcript.recovered, data.vector(failed)))
                self.assertEqual(transcript.symbols, bandwidth_of(code.params))

    def test_invalid_scheme(self):
        code = fig1()
        nodes = encode(code, zero_fill(code))
        with self.assertRaises(e.SchemeInvalid) as ctx:
            execute_repair(code, fig1_scheme(overrides={4: [[1, 1]]}), 1, nodes)
        self.assertEqual(ctx.exception.payload['violations'][0]['indices'], [2, 2])

    def test_inconsistent_nodes(self):
        code = fig1()
        nodes = encode(code, DataFill.build(code.field, [[1, 0], [1, 1]]))
        nodes[3] = code.field([0, 0])
        with self.assertRaises(e.InconsistentNodeData):
            execute_repair(code, fig1_scheme(), 1, nodes)
        with self.assertRaises(e.InconsistentNodeData):
            execute_repair(code, fig1_scheme(), 1, {2: nodes[1], 3: nodes[2]})

    def test_change_of_basis(self):
        code = fig1()
        scheme = fig1_scheme()
        self.assertEqual(change_of_basis(code, scheme, 1, 2, 2).tolist(), [[1]])
        with self.assertRaises(e.SchemeInvalid):
            change_of_basis(code, fig1_scheme(overrides={4: [[1, 1]]}), 1, 2, 2)


class BandwidthTests(SimpleTestCase):

    def test_values(self):
        self.assertEqual(bandwidth_of(CodeParams(ell=2, k=2, r=2)), 3)
        self.assertEqual(bandwidth_of(CodeParams(ell=2, k=4, r=2)), 5)
        self.assertEqual(bandwidth_of(CodeParams(ell=2 ** 13, k=3, r=2)), Fraction(4 * 2 ** 13, 2))
        self.assertEqual(naive_bandwidth(CodeParams(ell=2, k=4, r=2)), 8)


class SchemeFileTests(SimpleTestCase):

    def test_parse_and_emit(self):
        code = fig1()
        document = {
            'schema': 1,
            'repairs': [{'failed': 1, 'helpers': [
                {'node': 2, 'basis': [[0, 1]]},
                {'node': 3, 'basis': [[0, 1]]},
                {'node': 4, 'basis': [[0, 1]]},
            ]}],
        }
        serializer = SchemeFileSerializer(data=document, context={'code': code})
        serializer.is_valid(raise_exception=True)
        scheme = serializer.save()
        self.assertEqual(scheme, fig1_scheme())
        self.assertEqual(SchemeFileSerializer(scheme).data, document)

        document['repairs'][0]['helpers'].pop()
        self.assertFalse(SchemeFileSerializer(data=document, context={'code': code}).is_valid())

    def test_transcript(self):
        code = fig1()
        nodes = encode(code, DataFill.build(code.field, [[1, 0], [1, 1]]))
        data = TranscriptSerializer(execute_repair(code, fig1_scheme(), 1, nodes)).data
        self.assertEqual(data['symbols'], 3)
        self.assertEqual(data['recovered'], [1, 0])
        self.assertEqual(data['transmissions'][0], {'node': 2, 'vector': [1]})
