import itertools

import numpy as np
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from ..bounds.helpers import bound_report, consistency_assert, exact_log2
from ..certificates.builders import (
    build_gamma, build_identity_family, build_lambda, build_R, build_T, build_upsilon,
    check_corollary1, greedy_pairing, log_partition, remaining_sets, sum_dim_check,
)
from ..codes.encoding import encode, random_fill
from ..codes.models import ArrayCode
from ..codes.samples import fig1, table1, three_parity
from ..ffalg.fields import field_make
from ..ffalg.matrices import is_invertible
from ..ffalg.subspaces import span
from ..reduction.conditions import check_sc
from ..reduction.products import tensor_systems
from ..reduction.theta import normalize_identity_parity, theta_reduce, transform_scheme
from ..repair.engine import bandwidth_of, execute_repair, verify_scheme
from . import exceptions as e
from .cliques import candidate_table, explore_branch
from .enumeration import (
    enumerate_invertible, enumerate_subspaces, gaussian_binomial, gl_order, sample_invertible,
    sample_subspaces,
)
from .maxk import search_max_k, verify_witness
from .models import SearchConfig, SearchMode
from .schemes import search_scheme
from .serializers import SchemeSearchSerializer, SearchResultSerializer
from .tasks import explore_branches


GF2 = field_make(2)
GF3 = field_make(3)
GF5 = field_make(5)
GF7 = field_make(7)


class EnumerationTests(SimpleTestCase):

    def test_counts(self):
        self.assertEqual(len(enumerate_subspaces(2, 1, GF2)), 3)
        self.assertEqual(len(enumerate_subspaces(2, 1, GF5)), 6)
        self.assertEqual(len(enumerate_subspaces(4, 2, GF2)), 35)
        self.assertEqual(gaussian_binomial(4, 2, 2), 35)
        self.assertEqual(gaussian_binomial(3, 1, 2), 7)
        self.assertEqual(len(enumerate_invertible(2, GF3)), gl_order(2, 3))
        self.assertEqual(gl_order(2, 2), 6)

    def test_canonical_order(self):
        lines = [s.as_lists() for s in enumerate_subspaces(2, 1, GF2)]
        self.assertEqual(lines, [[[1, 0]], [[1, 1]], [[0, 1]]])
        self.assertEqual(enumerate_subspaces(3, 2, GF2)[0].as_lists(), [[1, 0, 0], [0, 1, 0]])

    def test_distinct(self):
        subspaces = enumerate_subspaces(3, 1, GF3)
        self.assertEqual(len(set(subspaces)), gaussian_binomial(3, 1, 3))

    @override_settings(MSRLAB_SUBSPACE_LIMIT=10)
    def test_limit(self):
        with self.assertRaises(e.TooLarge):
            enumerate_subspaces(4, 2, GF2)

    @settings(deadline=None, max_examples=20)
    @given(seed=st.integers(min_value=0, max_value=2 ** 32 - 1))
    def test_sampling(self, seed):
        matrices = sample_invertible(2, GF5, 10, np.random.default_rng(seed))
        self.assertEqual(len(matrices), 10)
        self.assertTrue(all(is_invertible(m) for m in matrices))
        keys = [tuple(int(v) for v in m.flat) for m in matrices]
        self.assertEqual(keys, sorted(set(keys)))

        subspaces = sample_subspaces(4, 2, GF2, 5, np.random.default_rng(seed))
        self.assertEqual(len(set(subspaces)), 5)
        self.assertTrue(all(s.dim == 2 for s in subspaces))


class SchemeSearchTests(SimpleTestCase):

    def test_fig1_solutions(self):
        result = search_scheme(fig1())
        self.assertTrue(result.exhaustive)
        found = {tuple(s.as_lists()[0]) for s, _ in result.solutions[1]}
        self.assertEqual(found, {(1, 0), (1, 1), (0, 1)})
        for first, second in result.solutions[1]:
            self.assertEqual(first, second)
        self.assertEqual(len(result.solutions[2]), 3)

    def test_table1(self):
        code = table1()
        result = search_scheme(code)
        self.assertEqual(result.scheme.failed_nodes(), [1, 2, 3, 4])
        self.assertEqual(
            {node: s[0][0].as_lists() for node, s in result.solutions.items()},
            {1: [[1, 0]], 2: [[0, 1]], 3: [[1, 1]], 4: [[1, 4]]},
        )
        for failed in range(1, 5):
            self.assertTrue(verify_scheme(code, result.scheme, failed))

        rng = np.random.default_rng(3)
        for _ in range(100):
            data = random_fill(code, rng)
            nodes = encode(code, data)
            for failed in range(1, 5):
                survivors = {j: nodes[j - 1] for j in range(1, code.n + 1) if j != failed}
                transcript = execute_repair(code, result.scheme, failed, survivors)
                self.assertTrue(np.array_equal(transcript.recovered, data.vector(failed)))
                self.assertEqual(transcript.symbols, bandwidth_of(code.params))
        self.assertEqual(bandwidth_of(code.params), 5)

    def test_table1_reduces(self):
        result = search_scheme(table1())
        system = theta_reduce(table1(), result.scheme)
        self.assertEqual(system.labels, (1, 2, 3))
        self.assertTrue(check_sc(system))
        family = build_identity_family(system)
        self.assertEqual(family.rank, 4)

    def test_table1_anchors(self):
        code = table1()
        scheme = search_scheme(code).scheme
        for anchor in (1, 2, 3):
            system = theta_reduce(code, scheme, anchor=anchor)
            self.assertEqual(system.labels, tuple(i for i in range(1, 5) if i != anchor))
            self.assertTrue(check_sc(system))
            self.assertEqual(build_identity_family(system).rank, 4)

    def test_three_parities(self):
        code = three_parity()
        result = search_scheme(code)
        self.assertTrue(result.exhaustive)
        e1, e2, e3 = (span(GF7([row])) for row in ([1, 0, 0], [0, 1, 0], [0, 0, 1]))
        self.assertIn((e1, e1, e1), result.solutions[1])
        self.assertIn((e1, e3, e2), result.solutions[2])
        for failed in (1, 2):
            self.assertTrue(verify_scheme(code, result.scheme, failed))

        rng = np.random.default_rng(8)
        for _ in range(20):
            data = random_fill(code, rng)
            nodes = encode(code, data)
            for failed in (1, 2):
                transcript = execute_repair(code, result.scheme, failed, nodes)
                self.assertTrue(np.array_equal(transcript.recovered, data.vector(failed)))
                self.assertEqual(transcript.symbols, 4)

        normalized = normalize_identity_parity(code)
        moved = transform_scheme(result.scheme, normalized)
        for failed in (1, 2):
            self.assertTrue(verify_scheme(normalized.code, moved, failed))

    def test_scalar_code_has_no_scheme(self):
        identity = GF5.identity(2)
        code = ArrayCode.build(GF5, 2, [[identity, identity], [identity, GF5([[2, 0], [0, 2]])]])
        with self.assertRaises(e.NoSchemeExists) as ctx:
            search_scheme(code)
        self.assertEqual(ctx.exception.payload['failed'], 1)

    def test_selected_nodes(self):
        result = search_scheme(table1(), nodes=[2])
        self.assertEqual(result.scheme.failed_nodes(), [2])

    def test_budget(self):
        with self.assertRaises(e.BudgetExhausted):
            search_scheme(table1(), budget=1)

    def test_randomized(self):
        result = search_scheme(fig1(), randomized=True, seed=5, samples=16)
        self.assertFalse(result.exhaustive)
        self.assertTrue(verify_scheme(fig1(), result.scheme, 1))

    def test_serializer(self):
        data = SchemeSearchSerializer(search_scheme(fig1())).data
        self.assertEqual(data['schema'], 1)
        self.assertEqual(data['solutions'], {'1': 3, '2': 3})
        self.assertEqual([r['failed'] for r in data['scheme']['repairs']], [1, 2])


class CliqueTests(SimpleTestCase):

    def test_vertices_are_valid_pairs(self):
        table = candidate_table(GF3, 2, 2)
        self.assertEqual(len(table.subspaces), 4)
        self.assertEqual(len(table.matrices), 48)
        for s, m in table.vertices:
            subspace = table.subspaces[s]
            image = span(subspace.basis @ table.matrices[m])
            self.assertNotEqual(image, subspace)

    def test_neighbours_are_symmetric(self):
        table = candidate_table(GF2, 2, 2)
        for a, bits in enumerate(table.neighbours):
            for b in range(table.size):
                if bits >> b & 1:
                    self.assertTrue(table.neighbours[b] >> a & 1)

    def test_branch(self):
        table = candidate_table(GF3, 2, 2)
        clique, expansions, complete = explore_branch(table, 0, 10 ** 6)
        self.assertTrue(complete)
        self.assertGreater(expansions, 0)
        self.assertEqual(clique[0], 0)
        self.assertEqual(list(clique), sorted(clique))

    def test_task(self):
        payload = {'field': GF3.as_dict(), 'ell': 2, 'r': 2, 'samples': None, 'seed': 0, 'budget': 1000}
        ret = explore_branches(payload, [0, 1])
        self.assertEqual([b['root'] for b in ret], [0, 1])
        self.assertTrue(all(b['complete'] for b in ret))


class MaxKTests(SimpleTestCase):

    def test_small_fields(self):
        for field, expected in ((GF2, 2), (GF3, 3), (GF5, 3)):
            result = search_max_k(SearchConfig(ell=2, r=2, field=field))
            self.assertEqual(result.kmax, expected, field)
            self.assertTrue(result.exhaustive)
            self.assertFalse(result.lower_bound)
            self.assertEqual(result.witness.size, expected)
            self.assertTrue(verify_witness(result.witness))
            self.assertTrue(consistency_assert(result.kmax, bound_report(2, 2)))

    def test_symmetry_fix(self):
        fixed = search_max_k(SearchConfig(ell=2, r=2, field=GF3))
        free = search_max_k(SearchConfig(ell=2, r=2, field=GF3, symmetry_fix=False))
        self.assertEqual(fixed.kmax, free.kmax)
        self.assertGreater(free.branches, fixed.branches)

    def test_deterministic(self):
        first = search_max_k(SearchConfig(ell=2, r=2, field=GF3))
        with override_settings(MSRLAB_THREADS=3):
            second = search_max_k(SearchConfig(ell=2, r=2, field=GF3))
        with override_settings(MSRLAB_THREADS=1):
            third = search_max_k(SearchConfig(ell=2, r=2, field=GF3))
        self.assertEqual(first.clique, second.clique)
        self.assertEqual(first.clique, third.clique)

    def test_budget_gives_lower_bound(self):
        result = search_max_k(SearchConfig(ell=2, r=2, field=GF3, budget=1))
        self.assertFalse(result.exhaustive)
        self.assertTrue(result.lower_bound)
        self.assertGreaterEqual(result.kmax, 1)
        self.assertTrue(verify_witness(result.witness))

    def test_no_pairs(self):
        result = search_max_k(SearchConfig(ell=1, r=1, field=GF2))
        self.assertEqual(result.kmax, 0)
        self.assertIsNone(result.witness)

    def test_randomized(self):
        config = SearchConfig(ell=4, r=2, field=GF2, samples=40, seed=11)
        result = search_max_k(config)
        self.assertTrue(result.lower_bound)
        self.assertGreaterEqual(result.kmax, 1)
        self.assertTrue(check_sc(result.witness))
        report = sum_dim_check(result.witness, result.witness.labels)
        self.assertGreaterEqual(report.dim, 2)

    def test_witness_certificates(self):
        witness = search_max_k(SearchConfig(ell=2, r=2, field=GF5)).witness
        self.assertTrue(build_identity_family(witness).independent())
        self.assertTrue(sum_dim_check(witness, witness.labels).ok)

    def test_config_errors(self):
        with self.assertRaises(e.InvalidConfig):
            SearchConfig(ell=3, r=2, field=GF2)
        with self.assertRaises(e.InvalidConfig):
            SearchConfig(ell=2, r=2, field=GF2, budget=0)
        with self.assertRaises(e.InvalidConfig):
            search_max_k(SearchConfig(ell=2, r=2, field=GF2, mode=SearchMode.SCHEME_FOR_CODE))

    @override_settings(MSRLAB_CANDIDATE_LIMIT=10)
    def test_candidate_limit(self):
        with self.assertRaises(e.TooLarge):
            candidate_table.__wrapped__(GF5, 2, 2)

    def test_serializer(self):
        data = SearchResultSerializer(search_max_k(SearchConfig(ell=2, r=2, field=GF3))).data
        self.assertEqual(data['schema'], 1)
        self.assertEqual(data['kmax'], 3)
        self.assertFalse(data['lower_bound'])
        self.assertEqual(data['field'], {'p': 3, 'm': 1, 'reduction': None})
        self.assertEqual(len(data['witness']['pairs']), 3)


class CertificateSuiteTests(SimpleTestCase):
    """Every certificate family built on searched or reduced systems is independent
    """

    def check_system(self, system):
        self.assertTrue(check_sc(system))
        self.assertTrue(build_identity_family(system).independent())

        pairs = greedy_pairing(system)
        build_upsilon(system, pairs)
        t_family = build_T(system, *remaining_sets(system, pairs))
        self.assertTrue(check_corollary1(system, t_family).holds)
        build_R(system, pairs, t_family)

        partition = log_partition(system)
        if partition:
            build_lambda(system, partition)
            build_gamma(system, partition)

        limit = exact_log2(system.ell) + 2
        for size in range(1, min(limit, system.size) + 1):
            for labels in itertools.combinations(system.labels, size):
                self.assertTrue(sum_dim_check(system, labels).ok, labels)

    def test_exhaustive_witnesses(self):
        for field in (GF2, GF3):
            self.check_system(search_max_k(SearchConfig(ell=2, r=2, field=field)).witness)

    def test_reduced_table1(self):
        result = search_scheme(table1())
        self.check_system(theta_reduce(table1(), result.scheme))

    def test_lifted_gf2_witness(self):
        witness = search_max_k(SearchConfig(ell=2, r=2, field=GF2)).witness
        system = tensor_systems(witness, witness)
        self.assertEqual((system.ell, system.size), (4, 4))
        pairs = greedy_pairing(system)
        self.assertEqual(pairs, [(1, 2), (3, 4)])
        upsilon = build_upsilon(system, pairs)
        self.assertEqual(upsilon.size, 4)
        self.assertTrue(upsilon.independent())
        self.assertEqual(build_R(system, pairs, build_T(system, [], [])).rank, 4)
        self.check_system(system)

    def test_lifted_gf3_witness(self):
        witness = search_max_k(SearchConfig(ell=2, r=2, field=GF3)).witness
        system = tensor_systems(witness, witness)
        pairs = greedy_pairing(system)
        self.assertEqual(pairs, [(1, 2), (4, 5)])
        t_family = build_T(system, *remaining_sets(system, pairs))
        self.assertEqual(t_family.labels, ((3, 6),))
        r_family = build_R(system, pairs, t_family)
        self.assertEqual((r_family.size, r_family.rank), (4, 4))
        self.check_system(system)

    def test_lifted_table1(self):
        system = theta_reduce(table1(), search_scheme(table1()).scheme)
        lifted = tensor_systems(system, system)
        self.assertEqual((lifted.field, lifted.ell, lifted.size), (GF7, 4, 6))
        self.check_system(lifted)

    @settings(deadline=None, max_examples=3)
    @given(seed=st.integers(min_value=0, max_value=2 ** 16))
    def test_randomized_witnesses(self, seed):
        config = SearchConfig(ell=4, r=2, field=GF2, samples=16, seed=seed, budget=20000)
        result = search_max_k(config)
        if result.witness is not None:
            self.check_system(result.witness)
