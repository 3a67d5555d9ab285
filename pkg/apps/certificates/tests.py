import itertools

from django.test import SimpleTestCase, override_settings

from ..bounds.helpers import exact_log2
from ..ffalg.fields import field_make
from ..reduction.conditions import check_sc
from ..reduction.models import PhiSystem
from ..reduction.products import tensor_systems
from ..reduction.samples import fig1_theta
from . import exceptions as e
from .builders import (
    build_gamma, build_identity_family, build_lambda, build_R, build_T, build_upsilon,
    check_corollary1, complementary_pairs, greedy_pairing, intersects_trivially, log_partition,
    remaining_sets, sum_dim_check, _require_independent,
)
from .models import CertificateFamily, FamilyKind
from .serializers import FamilySerializer


GF2 = field_make(2)


def three_pairs(p):
    """Lines (1,0), (0,1), (1,1); each operator fixes the other two lines
    """
    field = field_make(p)
    return PhiSystem.build(field, 2, 2, [
        ([[2, 1], [0, 1]], [[1, 0]]),
        ([[1, 0], [1, 2]], [[0, 1]]),
        ([[1, 0], [0, 2]], [[1, 1]]),
    ])


def shared_line_system():
    return PhiSystem.build(GF2, 2, 2, [
        ([[1, 1], [0, 1]], [[1, 0]]),
        ([[0, 1], [1, 1]], [[1, 0]]),
    ])


def identity_system(lines):
    return PhiSystem.build(GF2, 2, 2, [(GF2.identity(2), line) for line in lines])


def lifted_system():
    """Two copies of three_pairs(3) side by side in F^4; S_1 and S_4 share a line
    """
    return tensor_systems(three_pairs(3), three_pairs(3))


class SystemsTests(SimpleTestCase):

    def test_sample_systems_satisfy_the_conditions(self):
        for p in (3, 5, 7):
            self.assertTrue(check_sc(three_pairs(p)))


class TFamilyTests(SimpleTestCase):

    def test_cardinality(self):
        system = identity_system([[[1, 0]], [[0, 1]], [[1, 0]], [[0, 1]]])
        family = build_T(system, [1, 3], [2, 4])
        self.assertEqual(family.size, 4)
        self.assertEqual(family.claim, 4)
        self.assertEqual(family.labels, ((1, 2), (1, 4), (3, 2), (3, 4)))
        single = build_T(three_pairs(7), [1], [2])
        self.assertEqual(single.size, 1)

    def test_errors(self):
        system = three_pairs(7)
        with self.assertRaises(e.OverlappingSets):
            build_T(system, [1], [1])
        with self.assertRaises(e.IndexOutOfRange):
            build_T(system, [1], [9])
        with self.assertRaises(e.OverlappingSets):
            build_T(system, [1, 2], [3])

    def test_corollary_vacuous(self):
        system = three_pairs(7)
        result = check_corollary1(system, build_T(system, [1], [2]))
        self.assertTrue(result.holds)
        self.assertTrue(result.vacuous)

    def test_corollary_nontrivial(self):
        system = shared_line_system()
        result = check_corollary1(system, build_T(system, [1], [2]))
        self.assertTrue(result)
        self.assertFalse(result.vacuous)
        self.assertTrue(result.independent)

    def test_dependent_family_names_a_complementary_pair(self):
        system = identity_system([[[1, 0]], [[1, 0]], [[1, 0]], [[0, 1]]])
        result = check_corollary1(system, build_T(system, [1, 3], [2, 4]))
        self.assertTrue(result.vacuous)
        self.assertFalse(result.independent)
        self.assertTrue(any(result.coefficients))
        self.assertIn(result.witness, [(1, 4), (3, 4)])
        self.assertTrue(intersects_trivially(system, *result.witness))

    def test_dependent_without_complementary_pair(self):
        system = identity_system([[[1, 0]]] * 4)
        result = check_corollary1(system, build_T(system, [1, 3], [2, 4]))
        self.assertFalse(result.holds)
        self.assertIsNone(result.witness)


class UpsilonTests(SimpleTestCase):

    def test_empty_and_single_pair(self):
        system = three_pairs(7)
        empty = build_upsilon(system, [])
        self.assertEqual(empty.size, 1)
        single = build_upsilon(system, [(1, 2)])
        self.assertEqual(single.labels, ((0,), (1,)))
        self.assertEqual(single.rank, 2)

    def test_errors(self):
        with self.assertRaises(e.PairsOverlap):
            build_upsilon(three_pairs(7), [(1, 2), (2, 3)])
        with self.assertRaises(e.PairsNotComplementary):
            build_upsilon(shared_line_system(), [(1, 2)])

    def test_counterexample_keeps_the_family(self):
        system = identity_system([[[1, 0]], [[0, 1]]])
        members = (GF2.identity(2), GF2.identity(2))
        family = CertificateFamily(FamilyKind.UPSILON, members, ((0,), (1,)), claim=2)
        with self.assertRaises(e.CounterexampleFound) as ctx:
            _require_independent(family, system)
        payload = ctx.exception.payload
        self.assertEqual(payload['kind'], 'upsilon')
        self.assertEqual(payload['members'], [[[1, 0], [0, 1]], [[1, 0], [0, 1]]])
        self.assertEqual(payload['labels'], [[0], [1]])


class PreconditionTests(SimpleTestCase):

    def test_builders_refuse_systems_outside_the_conditions(self):
        system = identity_system([[[1, 0]], [[0, 1]]])
        self.assertFalse(check_sc(system))
        builders = [
            lambda: build_upsilon(system, [(1, 2)]),
            lambda: build_R(system, [(1, 2)], build_T(system, [], [])),
            lambda: build_lambda(system, [[1, 2]]),
            lambda: build_gamma(system, [[1], [2]]),
        ]
        for build in builders:
            with self.assertRaises(e.HypothesisFailed) as ctx:
                build()
            kinds = {violation['kind'] for violation in ctx.exception.payload['violations']}
            self.assertEqual(kinds, {'intersection'})


class RFamilyTests(SimpleTestCase):

    def test_all_paired(self):
        system = three_pairs(7)
        pairs = greedy_pairing(system)
        self.assertEqual(pairs, [(1, 2)])
        odd, even = remaining_sets(system, pairs)
        family = build_R(system, pairs, build_T(system, odd, even))
        self.assertEqual(family.size, 2)
        self.assertTrue(family.independent())

    def test_no_pairs(self):
        system = lifted_system()
        t_family = build_T(system, [1], [4])
        family = build_R(system, [], t_family)
        self.assertEqual(family.size, t_family.size)
        self.assertEqual(family.kind, FamilyKind.R)

    def test_errors(self):
        system = three_pairs(7)
        with self.assertRaises(e.IndexClash):
            build_R(system, [(1, 2)], build_T(system, [1], [3]))
        with self.assertRaises(e.HypothesisFailed):
            build_R(system, [], build_T(system, [1], [2]))


class LambdaTests(SimpleTestCase):

    def test_spanning_block(self):
        family = build_lambda(three_pairs(7), [[2, 1]])
        self.assertEqual(family.size, 2)
        self.assertTrue(family.independent())

    def test_errors(self):
        system = three_pairs(7)
        with self.assertRaises(e.SumNotFull):
            build_lambda(system, [[1, 2], [3]])
        with self.assertRaises(e.PartitionInvalid):
            build_lambda(system, [[1], [1, 2]])
        with self.assertRaises(e.PartitionInvalid):
            build_lambda(system, [])

    def test_log_partition(self):
        self.assertEqual(log_partition(three_pairs(7)), [[1, 2]])


class GammaTests(SimpleTestCase):

    def test_singletons(self):
        system = three_pairs(7)
        family = build_gamma(system, [[1, 2, 3]])
        self.assertEqual(family.labels, ((1,), (2,), (3,)))
        self.assertEqual(family.rank, 3)

    def test_pairs_match_corollary(self):
        system = lifted_system()
        gamma = build_gamma(system, [[1], [4]])
        t_family = build_T(system, [1], [4])
        self.assertEqual(gamma.labels, ((1, 4),))
        self.assertEqual(gamma.labels, t_family.labels)
        self.assertEqual(gamma.independent(), check_corollary1(system, t_family).independent)
        self.assertEqual(build_gamma(three_pairs(7), [[1], [2]]).size, 0)

    def test_errors(self):
        with self.assertRaises(e.UnequalParts):
            build_gamma(three_pairs(7), [[1, 2], [3]])

    @override_settings(MSRLAB_GAMMA_LIMIT=2)
    def test_size_cap(self):
        with self.assertRaises(e.TooLarge):
            build_gamma(three_pairs(7), [[1, 2, 3]])


class IdentityFamilyTests(SimpleTestCase):

    def test_meets_the_quadratic_bound(self):
        family = build_identity_family(three_pairs(7))
        self.assertEqual((family.size, family.rank), (4, 4))
        self.assertEqual(build_identity_family(fig1_theta()).rank, 2)

    def test_failing_system_is_not_asserted(self):
        family = build_identity_family(identity_system([[[1, 0]]]))
        self.assertFalse(family.independent())

    def test_serialized(self):
        data = FamilySerializer(build_identity_family(fig1_theta())).data
        self.assertEqual(data['kind'], 'identity')
        self.assertEqual((data['size'], data['rank'], data['independent']), (2, 2, True))
        self.assertEqual(data['members'][1], {'label': [1], 'matrix': [[1, 1], [1, 0]]})


class SumDimensionTests(SimpleTestCase):

    def test_examples(self):
        system = three_pairs(7)
        single = sum_dim_check(system, [1])
        self.assertEqual((single.dim, single.bound, single.ok), (1, 1, True))
        spanning = sum_dim_check(system, [1, 2])
        self.assertEqual((spanning.dim, spanning.bound), (2, 2))

    def test_general_r_bound(self):
        rows = [[1 if c == r else 0 for c in range(9)] for r in range(9)]
        system = PhiSystem.build(GF2, 9, 3, [(GF2.identity(9), rows[0:3]), (GF2.identity(9), rows[3:6])])
        result = sum_dim_check(system, [1, 2])
        self.assertEqual((result.dim, result.bound, result.ok), (6, 5, True))

    def test_every_small_subset(self):
        for p in (3, 5, 7):
            system = three_pairs(p)
            limit = exact_log2(system.ell) + 2
            for size in range(1, limit + 1):
                for subset in itertools.combinations(system.labels, size):
                    self.assertTrue(sum_dim_check(system, subset).ok, subset)

    def test_complementary_pairs(self):
        self.assertEqual(complementary_pairs(three_pairs(7)), [(1, 2), (1, 3), (2, 3)])
        self.assertEqual(complementary_pairs(shared_line_system()), [])
