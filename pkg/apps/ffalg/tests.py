import itertools

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from . import exceptions as e
from .fields import field_make, spec_of
from .matrices import (
    family_independent, invert, is_invertible, left_null_vector, matrix_product, rank, rref,
    solve_left,
)
from .subspaces import (
    full_space, intersection_of, is_direct_sum, span, subspace_apply, subspace_intersect,
    subspace_sum, sum_of, zero_subspace,
)


GF2 = field_make(2)
GF3 = field_make(3)
GF7 = field_make(7)

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def random_matrix(field, shape, rng):
    return field.random(shape, rng=rng)


def random_invertible(field, size, rng):
    while True:
        matrix = field.random((size, size), rng=rng)
        if is_invertible(matrix):
            return matrix


class FieldMakeTests(SimpleTestCase):

    def test_prime_fields(self):
        self.assertEqual(GF2.order, 2)
        self.assertEqual(GF7.order, 7)
        self.assertEqual(GF7.label, 'GF(7)')
        self.assertEqual(GF7.inv(3), 5)
        self.assertEqual(GF7.mul(6, 6), 1)

    def test_extension_field_inverse(self):
        gf4 = field_make(2, 2, [1, 1, 1])
        self.assertEqual(gf4.order, 4)
        # x * (x + 1) = x^2 + x = 1
        self.assertEqual(gf4.inv(2), 3)
        self.assertEqual(gf4.mul(2, 3), 1)
        self.assertEqual(gf4.add(2, 3), 1)
        self.assertEqual(gf4.pow(2, 3), 1)

    def test_errors(self):
        with self.assertRaises(e.NonPrimeCharacteristic):
            field_make(4)
        with self.assertRaises(e.MissingReduction):
            field_make(2, 2)
        with self.assertRaises(e.ReduciblePolynomial):
            field_make(2, 2, [1, 0, 1])
        with self.assertRaises(e.ReduciblePolynomial):
            field_make(2, 2, [1, 1])
        with self.assertRaises(e.FieldSpecError):
            field_make(3, 0)
        with self.assertRaises(e.FieldTooLarge):
            field_make(2, 64, [1, 1] + [0] * 62 + [1])

    def test_spec_round_trip(self):
        gf8 = field_make(2, 3, [1, 1, 0, 1])
        self.assertEqual(spec_of(gf8([[1, 2]])), gf8)
        self.assertEqual(spec_of(GF3([1])), GF3)


class MatrixTests(SimpleTestCase):

    def test_rref(self):
        reduced, r = rref(GF2([[0, 1], [1, 1]]))
        self.assertTrue(np.array_equal(reduced, GF2.identity(2)))
        self.assertEqual(r, 2)
        reduced, r = rref(GF2.identity(2))
        self.assertEqual(r, 2)
        reduced, r = rref(GF2.zeros((3, 3)))
        self.assertEqual(r, 0)
        self.assertFalse(np.any(reduced != 0))

    def test_rref_rejects_plain_arrays(self):
        with self.assertRaises(e.FieldMismatch):
            rref(np.eye(2, dtype=int))

    def test_invert(self):
        self.assertTrue(np.array_equal(invert(GF2([[0, 1], [1, 1]])), GF2([[1, 1], [1, 0]])))
        self.assertTrue(np.array_equal(invert(GF2.identity(3)), GF2.identity(3)))
        with self.assertRaises(e.SingularMatrix):
            invert(GF2([[1, 1], [1, 1]]))
        with self.assertRaises(e.ShapeMismatch):
            invert(GF2([[1, 1, 0], [1, 0, 0]]))

    def test_mixed_fields(self):
        with self.assertRaises(e.FieldMismatch):
            matrix_product(GF2.identity(2), GF3.identity(2))

    def test_solve_left(self):
        system = GF7([[1, 0, 2], [0, 1, 3]])
        target = GF7([[2, 5, 5]])
        solution = solve_left(system, target)
        self.assertTrue(np.array_equal(solution @ system, target))
        with self.assertRaises(e.NotInRowSpace):
            solve_left(system, GF7([[0, 0, 1]]))

    def test_left_null_vector(self):
        self.assertIsNone(left_null_vector(GF2.identity(2)))
        vector = left_null_vector(GF2([[1, 1], [1, 1]]))
        self.assertFalse(np.any(vector @ GF2([[1, 1], [1, 1]]) != 0))

    @settings(deadline=None, max_examples=50)
    @given(seed=seeds, size=st.integers(min_value=1, max_value=5), p=st.sampled_from([2, 3, 7]))
    def test_invert_is_inverse(self, seed, size, p):
        field = field_make(p)
        matrix = random_matrix(field, (size, size), np.random.default_rng(seed))
        if rank(matrix) < size:
            with self.assertRaises(e.SingularMatrix):
                invert(matrix)
        else:
            self.assertTrue(np.array_equal(matrix @ invert(matrix), field.identity(size)))


class FamilyTests(SimpleTestCase):

    def test_examples(self):
        theta = GF2([[1, 1], [1, 0]])
        self.assertTrue(family_independent([GF2.identity(2), theta]))
        self.assertFalse(family_independent([GF2.identity(2), GF2.identity(2)]))
        too_many = [GF2.identity(1), GF2([[1]])]
        self.assertFalse(family_independent(too_many))

    def test_shape_mismatch(self):
        with self.assertRaises(e.ShapeMismatch):
            family_independent([GF2.identity(2), GF2.identity(3)])

    def brute_force_independent(self, field, matrices):
        for coefficients in itertools.product(range(field.order), repeat=len(matrices)):
            if not any(coefficients):
                continue
            combination = field.zeros(matrices[0].shape)
            for c, matrix in zip(coefficients, matrices):
                combination = combination + field(c) * matrix
            if not np.any(combination != 0):
                return False
        return True

    def test_agrees_with_brute_force(self):
        rng = np.random.default_rng(2024)
        for p in (2, 3):
            field = field_make(p)
            for _ in range(40):
                size = int(rng.integers(1, 6))
                ell = int(rng.integers(1, 3))
                if field.order ** size > 10 ** 6:
                    continue
                matrices = [random_matrix(field, (ell, ell), rng) for _ in range(size)]
                self.assertEqual(
                    family_independent(matrices), self.brute_force_independent(field, matrices)
                )


class SubspaceTests(SimpleTestCase):

    def test_span_examples(self):
        self.assertEqual(span(GF2([[0, 1], [1, 1]])), full_space(GF2, 2))
        line = span(GF2([[0, 1]]))
        self.assertEqual(line.dim, 1)
        self.assertEqual(line.as_lists(), [[0, 1]])
        self.assertEqual(span(GF2([[0, 0]])), zero_subspace(GF2, 2))

    def test_sum_and_intersection(self):
        a = span(GF2([[0, 1]]))
        b = span(GF2([[1, 1]]))
        self.assertEqual(subspace_sum(a, b), full_space(GF2, 2))
        self.assertEqual(subspace_sum(a, a), a)
        self.assertEqual(subspace_sum(a, zero_subspace(GF2, 2)), a)
        self.assertTrue(subspace_intersect(a, b).is_zero())
        self.assertEqual(subspace_intersect(a, a), a)
        self.assertEqual(subspace_intersect(a, full_space(GF2, 2)), a)
        self.assertTrue(is_direct_sum([a, b], 2))
        self.assertFalse(is_direct_sum([a, a], 2))

    def test_ambient_mismatch(self):
        with self.assertRaises(e.AmbientMismatch):
            subspace_sum(span(GF2([[0, 1]])), span(GF2([[0, 1, 1]])))
        with self.assertRaises(e.AmbientMismatch):
            subspace_intersect(span(GF2([[0, 1]])), span(GF2([[0, 1, 1]])))

    def test_apply(self):
        line = span(GF2([[0, 1]]))
        self.assertEqual(subspace_apply(line, GF2([[0, 1], [1, 1]])), span(GF2([[1, 1]])))
        self.assertEqual(subspace_apply(line, GF2.identity(2)), line)
        self.assertTrue(subspace_apply(line, GF2.zeros((2, 2))).is_zero())
        with self.assertRaises(e.DimensionMismatch):
            subspace_apply(line, GF2.identity(3))

    def test_contains_and_hashing(self):
        plane = span(GF3([[1, 0, 2], [0, 1, 1]]))
        self.assertTrue(plane.contains([1, 1, 0]))
        self.assertFalse(plane.contains([0, 0, 1]))
        self.assertEqual(len({plane, span(GF3([[1, 1, 0], [0, 1, 1]]))}), 1)

    def test_reductions(self):
        lines = [span(GF2([[1, 0, 0]])), span(GF2([[0, 1, 0]])), span(GF2([[0, 0, 1]]))]
        self.assertEqual(sum_of(lines, GF2, 3), full_space(GF2, 3))
        self.assertTrue(intersection_of(lines, GF2, 3).is_zero())
        self.assertEqual(intersection_of([], GF2, 3), full_space(GF2, 3))

    @settings(deadline=None, max_examples=60)
    @given(seed=seeds, ell=st.integers(min_value=1, max_value=6), p=st.sampled_from([2, 3]))
    def test_canonical_under_row_operations(self, seed, ell, p):
        field = field_make(p)
        rng = np.random.default_rng(seed)
        rows = int(rng.integers(1, ell + 1))
        matrix = random_matrix(field, (rows, ell), rng)
        mixer = random_invertible(field, rows, rng)
        self.assertEqual(span(matrix), span(mixer @ matrix))

    def test_dimension_formula(self):
        rng = np.random.default_rng(7)
        for _ in range(1000):
            field = GF2 if rng.integers(2) else GF3
            ell = int(rng.integers(1, 7))
            a = span(random_matrix(field, (int(rng.integers(1, ell + 1)), ell), rng))
            b = span(random_matrix(field, (int(rng.integers(1, ell + 1)), ell), rng))
            total = subspace_sum(a, b)
            common = subspace_intersect(a, b)
            self.assertEqual(a.dim + b.dim, total.dim + common.dim)
            self.assertEqual(subspace_intersect(common, a), common)
