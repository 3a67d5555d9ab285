import numpy as np
from django.test import SimpleTestCase

from ..codes.encoding import verify_mds
from ..codes.models import ArrayCode
from ..codes.samples import fig1, table1, three_parity
from ..ffalg.exceptions import ShapeMismatch
from ..ffalg.fields import field_make
from ..ffalg.matrices import family_independent
from ..ffalg.subspaces import span
from ..repair.engine import verify_scheme
from ..repair.exceptions import SchemeInvalid
from ..repair.samples import fig1_scheme
from . import exceptions as e
from .conditions import GENERAL, RELAXED, TWO_PARITY, check_constant_conditions, check_sc
from .models import PhiSystem
from .samples import fig1_theta, three_parity_system
from .serializers import SystemFileSerializer
from .theta import normalize_identity_parity, theta_operators, theta_reduce, transform_scheme


GF2 = field_make(2)
GF5 = field_make(5)
GF7 = field_make(7)


class ThetaTests(SimpleTestCase):

    def test_fig1(self):
        system = fig1_theta()
        self.assertEqual(system.labels, (1,))
        self.assertEqual(system.phis[0].tolist(), [[1, 1], [1, 0]])
        self.assertEqual(system.subspaces[0], span(GF2([[0, 1]])))
        self.assertTrue(check_sc(system))
        self.assertTrue(family_independent([GF2.identity(2), *system.phis]))

    def test_other_anchor(self):
        scheme = fig1_scheme(failed=2, overrides={4: [[1, 0]]})
        system = theta_reduce(fig1(), scheme, anchor=1)
        self.assertEqual(system.labels, (2,))
        self.assertEqual(system.phis[0].tolist(), [[0, 1], [1, 1]])
        self.assertTrue(check_sc(system))

    def test_scalar_code_collapses_to_identity(self):
        identity, double = GF5.identity(2), GF5([[2, 0], [0, 2]])
        code = ArrayCode.build(GF5, 2, [[identity] * 3, [double] * 3])
        for theta in theta_operators(code).values():
            self.assertTrue(np.array_equal(theta, identity))

        system = PhiSystem.build(GF5, 2, 2, [(identity, [[1, 0]]), (identity, [[0, 1]])])
        report = check_sc(system)
        self.assertFalse(report)
        self.assertEqual({v.kind for v in report.violations}, {'intersection'})

    def test_errors(self):
        code = ArrayCode.build(GF2, 2, [[GF2.identity(2), GF2.identity(2)]])
        with self.assertRaises(e.RequiresTwoParities):
            theta_operators(code)
        with self.assertRaises(SchemeInvalid):
            theta_reduce(fig1(), fig1_scheme(overrides={4: [[1, 1]]}))
        with self.assertRaises(SchemeInvalid):
            theta_reduce(fig1(), fig1_scheme(failed=2, overrides={4: [[1, 0]]}))


class ConditionTests(SimpleTestCase):

    def test_modes_on_fig1(self):
        system = fig1_theta()
        self.assertTrue(check_constant_conditions(system))
        self.assertTrue(check_constant_conditions(system, mode=TWO_PARITY))
        self.assertTrue(check_constant_conditions(system, mode=RELAXED))

    def test_dimension_guard(self):
        system = PhiSystem.build(GF2, 2, 2, [(GF2([[1, 1], [1, 0]]), [[1, 0], [0, 1]])])
        with self.assertRaises(ShapeMismatch):
            check_constant_conditions(system)

    def test_general_form(self):
        theta = GF2([[0, 1], [1, 1]])
        grid = [[GF2.identity(2), GF2.identity(2)], [theta, GF2.identity(2)]]
        system = PhiSystem.build(GF2, 2, 2, [(theta, [[0, 1]]), (theta, [[0, 1]])], operators=grid)
        report = check_constant_conditions(system)
        self.assertEqual(
            [(v.kind, v.indices) for v in report.violations],
            [('invariance', (2, 1, 2)), ('direct_sum', (2,))],
        )
        self.assertTrue(check_constant_conditions(system.restrict([1]), code_row=[[grid[0][0]], [grid[1][0]]]))
        with self.assertRaises(ShapeMismatch):
            check_constant_conditions(system.restrict([1]), mode=GENERAL)

    def test_three_parity_general_form(self):
        system = three_parity_system()
        self.assertEqual(system.r, 3)
        report = check_constant_conditions(system)
        self.assertEqual(
            [(v.kind, v.indices, v.dimension) for v in report.violations],
            [('invariance', (2, 1, 2), None), ('invariance', (2, 1, 3), None), ('direct_sum', (2,), 1)],
        )

        column = [[row[0]] for row in system.operators]
        self.assertTrue(check_constant_conditions(system.restrict([1]), code_row=column))
        self.assertTrue(check_constant_conditions(system.restrict([1]), mode=RELAXED))

    def test_identity_operator_fails(self):
        system = PhiSystem.build(GF2, 2, 2, [(GF2.identity(2), [[0, 1]])])
        self.assertFalse(check_sc(system))
        self.assertFalse(check_constant_conditions(system))


class NormalizeTests(SimpleTestCase):

    def test_fig1(self):
        normalized = normalize_identity_parity(fig1())
        for j in (1, 2):
            self.assertTrue(np.array_equal(normalized.code.matrix(2, j), GF2.identity(2)))
        self.assertEqual(normalized.phis[0].tolist(), [[1, 1], [1, 0]])
        self.assertTrue(verify_mds(normalized.code))

    def test_table1_stays_mds(self):
        normalized = normalize_identity_parity(table1())
        self.assertTrue(verify_mds(normalized.code))
        self.assertEqual(len(normalized.phis), 4)

    def test_schemes_carry_over(self):
        scheme = fig1_scheme().merge(fig1_scheme(failed=2, overrides={4: [[1, 0]]}))
        normalized = normalize_identity_parity(fig1())
        moved = transform_scheme(scheme, normalized)
        self.assertTrue(verify_scheme(normalized.code, moved, 1))
        self.assertTrue(verify_scheme(normalized.code, moved, 2))

    def test_singular(self):
        with self.assertRaises(e.SingularEncodingMatrix):
            normalize_identity_parity(fig1().replace(2, 1, [[1, 1], [1, 1]]))

    def test_three_parities(self):
        code = three_parity()
        normalized = normalize_identity_parity(code)
        for j in (1, 2):
            self.assertTrue(np.array_equal(normalized.code.matrix(2, j), GF7.identity(3)))
        self.assertEqual(normalized.code.matrix(3, 2).tolist(), [[5, 0, 0], [0, 1, 0], [0, 0, 1]])
        self.assertEqual(normalized.code.matrix(3, 1).tolist(), code.matrix(2, 1).tolist())
        self.assertTrue(verify_mds(code))
        self.assertTrue(verify_mds(normalized.code))

    def test_needs_a_second_parity(self):
        code = ArrayCode.build(GF2, 2, [[GF2.identity(2), GF2.identity(2)]])
        with self.assertRaises(ShapeMismatch):
            normalize_identity_parity(code)


class SystemFileTests(SimpleTestCase):

    def test_round_trip(self):
        document = SystemFileSerializer(fig1_theta()).data
        self.assertEqual(document['pairs'], [{'node': 1, 'phi': [[1, 1], [1, 0]], 's': [[0, 1]]}])
        serializer = SystemFileSerializer(data=document)
        serializer.is_valid(raise_exception=True)
        system = serializer.save()
        self.assertEqual(system.labels, (1,))
        self.assertEqual(system.subspaces, fig1_theta().subspaces)

    def test_rejects_singular_operator(self):
        document = SystemFileSerializer(fig1_theta()).data
        document['pairs'][0]['phi'] = [[1, 1], [1, 1]]
        self.assertFalse(SystemFileSerializer(data=document).is_valid())

    def test_shipped_system(self):
        system = three_parity_system()
        self.assertEqual(system.labels, (1, 2))
        self.assertEqual(len(system.operators), 3)
        document = SystemFileSerializer(system).data
        self.assertEqual(len(document['operators']), 3)
        self.assertEqual(document['pairs'][0]['s'], [[1, 0, 0]])
