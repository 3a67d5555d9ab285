import itertools
import json

import numpy as np
from django.test import SimpleTestCase, override_settings

from ..ffalg.exceptions import ShapeMismatch
from ..ffalg.fields import field_make
from . import exceptions as e
from .encoding import encode, random_fill, reconstruct, verify_mds, zero_fill
from .models import ArrayCode, CodeParams, DataFill
from .samples import fig1, fixture_path, table1
from .serializers import CodeFileSerializer, DataFileSerializer


class CodeParamsTests(SimpleTestCase):

    def test_derived_sizes(self):
        params = CodeParams(ell=4, k=3, r=2)
        self.assertEqual(params.n, 5)
        self.assertEqual(params.sub_dim, 2)
        self.assertTrue(params.is_parity(4))
        self.assertFalse(params.is_parity(3))

    def test_r_must_divide_ell(self):
        with self.assertRaises(e.InvalidParams):
            CodeParams(ell=3, k=2, r=2)
        with self.assertRaises(e.InvalidParams):
            CodeParams(ell=2, k=0, r=2)

    def test_encoding_shape(self):
        gf2 = field_make(2)
        with self.assertRaises(ShapeMismatch):
            ArrayCode.build(gf2, 2, [[[[1, 0], [0, 1]]], [[[1, 0]]]])


class EncodeTests(SimpleTestCase):

    def test_fig1_nodes(self):
        code = fig1()
        data = DataFill.build(code.field, [[1, 0], [1, 1]])
        nodes = [node.tolist() for node in encode(code, data)]
        # node 3 = (a1 + b1, a2 + b2), node 4 = (a2 + b1, a1 + a2 + b2)
        self.assertEqual(nodes, [[1, 0], [1, 1], [0, 1], [1, 0]])

    def test_zero_data(self):
        code = table1()
        for node in encode(code, zero_fill(code)):
            self.assertFalse(np.any(node != 0))

    def test_table1_parities(self):
        code = table1()
        data = DataFill.build(code.field, [[1, 0], [0, 0], [0, 0], [0, 0]])
        nodes = encode(code, data)
        self.assertEqual(nodes[4].tolist(), [1, 0])
        self.assertEqual(nodes[5].tolist(), [1, 0])
        data = DataFill.build(code.field, [[0, 1], [0, 0], [0, 0], [0, 0]])
        self.assertEqual(encode(code, data)[5].tolist(), [5, 3])

    def test_shape_mismatch(self):
        code = fig1()
        with self.assertRaises(ShapeMismatch):
            encode(code, DataFill.build(code.field, [[1, 0, 1], [1, 1, 0]]))

    def test_linearity(self):
        code = table1()
        rng = np.random.default_rng(11)
        for _ in range(20):
            x, y = random_fill(code, rng), random_fill(code, rng)
            alpha, beta = code.field.random((), rng), code.field.random((), rng)
            combined = DataFill(code.field, alpha * x.systematic + beta * y.systematic)
            expected = [alpha * a + beta * b for a, b in zip(encode(code, x), encode(code, y))]
            for got, want in zip(encode(code, combined), expected):
                self.assertTrue(np.array_equal(got, want))


class VerifyMdsTests(SimpleTestCase):

    def test_fig1(self):
        report = verify_mds(fig1())
        self.assertTrue(report.passed)
        self.assertEqual((report.succeeded, report.checked), (6, 6))
        self.assertTrue(report.invertible_encoding)

    def test_table1(self):
        report = verify_mds(table1())
        self.assertTrue(report.passed)
        self.assertEqual(report.checked, 15)

    def test_singular_block(self):
        code = fig1().replace(2, 1, [[1, 1], [1, 1]])
        report = verify_mds(code)
        self.assertFalse(report.passed)
        self.assertEqual(report.failing, ((2, 4),))
        self.assertFalse(report.invertible_encoding)

    @override_settings(MSRLAB_MDS_SUBSET_LIMIT=5)
    def test_subset_cap(self):
        with self.assertRaises(e.TooManySubsets):
            verify_mds(fig1())


class ReconstructTests(SimpleTestCase):

    def test_fig1_from_parities(self):
        code = fig1()
        data = DataFill.build(code.field, [[1, 0], [0, 1]])
        nodes = encode(code, data)
        recovered = reconstruct(code, {3: nodes[2], 4: nodes[3]})
        self.assertEqual(recovered.as_lists(), [[1, 0], [0, 1]])

    def test_round_trip_every_subset(self):
        rng = np.random.default_rng(3)
        for code in (fig1(), table1()):
            for _ in range(20):
                data = random_fill(code, rng)
                nodes = encode(code, data)
                for subset in itertools.combinations(range(1, code.n + 1), code.k):
                    recovered = reconstruct(code, {i: nodes[i - 1] for i in subset})
                    self.assertTrue(np.array_equal(recovered.systematic, data.systematic))

    def test_parities_plus_systematic(self):
        code = table1()
        rng = np.random.default_rng(5)
        for _ in range(100):
            data = random_fill(code, rng)
            nodes = encode(code, data)
            recovered = reconstruct(code, {1: nodes[0], 3: nodes[2], 5: nodes[4], 6: nodes[5]})
            self.assertTrue(np.array_equal(recovered.systematic, data.systematic))

    def test_errors(self):
        code = fig1().replace(2, 1, [[1, 1], [1, 1]])
        nodes = encode(code, zero_fill(code))
        with self.assertRaises(e.SingularSystem):
            reconstruct(code, {2: nodes[1], 4: nodes[3]})
        with self.assertRaises(e.InvalidNodeSet):
            reconstruct(code, {1: nodes[0]})
        with self.assertRaises(e.InvalidNodeSet):
            reconstruct(code, {1: nodes[0], 7: nodes[1]})


class CodeFileTests(SimpleTestCase):

    def test_emits_what_it_parsed(self):
        with open(fixture_path('table1.json')) as handle:
            document = json.load(handle)
        self.assertEqual(CodeFileSerializer(table1()).data, document)

    def test_rejects_bad_documents(self):
        with open(fixture_path('fig1.json')) as handle:
            document = json.load(handle)
        for key, value in (('r', 3), ('ell', 3), ('schema', 2)):
            bad = dict(document, **{key: value})
            self.assertFalse(CodeFileSerializer(data=bad).is_valid(), key)

        bad = dict(document, encoding=[[[[2, 0], [0, 1]], [[1, 0], [0, 1]]], document['encoding'][1]])
        self.assertFalse(CodeFileSerializer(data=bad).is_valid())
        bad = dict(document, field={'p': 4, 'm': 1, 'reduction': None})
        self.assertFalse(CodeFileSerializer(data=bad).is_valid())

    def test_data_file(self):
        code = fig1()
        serializer = DataFileSerializer(data={'systematic': [[1, 0], [1, 1]]}, context={'code': code})
        serializer.is_valid(raise_exception=True)
        data = serializer.save()
        self.assertEqual(DataFileSerializer(data).data, {'schema': 1, 'systematic': [[1, 0], [1, 1]]})

        serializer = DataFileSerializer(data={'systematic': [[1, 0]]}, context={'code': code})
        self.assertFalse(serializer.is_valid())
