from fractions import Fraction

from django.test import SimpleTestCase

from . import exceptions as e
from .helpers import (
    bound_linear_r2, bound_logsq, bound_quadratic, bound_report, consistency_assert,
    floor_log_delta, known_achievable, linear_r2_intro,
)
from .models import CODE
from .serializers import BoundReportSerializer


POWERS = [2 ** e for e in range(1, 17)]


class BoundValueTests(SimpleTestCase):

    def test_quadratic(self):
        self.assertEqual(bound_quadratic(2), 4)
        self.assertEqual(bound_quadratic(1), 1)
        self.assertEqual(bound_quadratic(8), 64)

    def test_linear(self):
        self.assertEqual(bound_linear_r2(8), 32)
        self.assertEqual(bound_linear_r2(2), 8)
        self.assertEqual(bound_linear_r2(16), 64)
        self.assertEqual(linear_r2_intro(8), 33)
        with self.assertRaises(e.NonPowerOfTwo):
            bound_linear_r2(12)

    def test_logsq(self):
        self.assertEqual(bound_logsq(2 ** 13, 2), 365)
        self.assertEqual(bound_logsq(2, 2), 5)
        self.assertEqual(bound_logsq(4, 3), 17)
        with self.assertRaises(e.InvalidParams):
            bound_logsq(1, 2)
        with self.assertRaises(e.InvalidParams):
            bound_logsq(4, 1)
        with self.assertRaises(e.NonPowerOfTwo):
            bound_logsq(6, 2)

    def test_floor_log_delta(self):
        self.assertEqual(floor_log_delta(4, 3), 3)
        self.assertEqual(floor_log_delta(2 ** 13, 2), 13)
        self.assertEqual(floor_log_delta(1, 5), 0)

    def test_known_achievable(self):
        self.assertEqual(known_achievable(4, 2), 6)
        self.assertEqual(known_achievable(2, 2), 3)
        self.assertEqual(known_achievable(9, 3), 8)
        approx = known_achievable(10, 3)
        self.assertLess(abs(float(approx) - 4 * 2.0959032742893844), 1e-6)


class BoundPropertyTests(SimpleTestCase):

    def test_monotone_in_ell(self):
        for r in (2, 3, 4):
            reports = [bound_report(ell, r) for ell in POWERS]
            for field in ('quadratic', 'logsq'):
                values = [getattr(report, field) for report in reports]
                self.assertEqual(values, sorted(values), (field, r))
        values = [bound_linear_r2(ell) for ell in POWERS]
        self.assertEqual(values, sorted(values))

    def test_ordering_at_scale(self):
        for ell in POWERS:
            if ell >= 2 ** 10:
                report = bound_report(ell, 2)
                self.assertLess(report.logsq, report.linear_r2)
                self.assertLess(report.linear_r2, report.quadratic)
            if ell >= 16:
                self.assertLessEqual(bound_logsq(ell, 2), bound_quadratic(ell))

    def test_known_gap(self):
        for r in (2, 3, 4):
            for ell in POWERS:
                self.assertLessEqual(known_achievable(ell, r), bound_logsq(ell, r))


class ReportTests(SimpleTestCase):

    def test_report_fields(self):
        report = bound_report(2, 2, n=6)
        self.assertEqual(report.bandwidth, 5)
        self.assertEqual(report.delta, 2)
        data = BoundReportSerializer(report).data
        for key in ('quadratic', 'linear_r2', 'logsq', 'known_achievable', 'bandwidth'):
            self.assertIn(key, data)
        self.assertEqual(data['schema'], 1)
        self.assertEqual(data['logsq'], 5)
        self.assertEqual(data['known_achievable'], '3')

    def test_non_applicable_entries(self):
        report = bound_report(9, 3)
        self.assertIsNone(report.linear_r2)
        self.assertIsNone(report.logsq)
        self.assertIsNone(report.bandwidth)
        self.assertEqual(report.known_achievable, Fraction(8))
        self.assertEqual(BoundReportSerializer(report).data['logsq'], None)


class ConsistencyTests(SimpleTestCase):

    def test_within_bounds(self):
        report = bound_report(2, 2)
        self.assertTrue(consistency_assert(3, report))
        self.assertTrue(consistency_assert(4, report, counts=CODE))

    def test_violation_keeps_the_evidence(self):
        with self.assertRaises(e.BoundViolated) as ctx:
            consistency_assert(10, bound_report(2, 2))
        names = [entry['bound'] for entry in ctx.exception.payload['violated']]
        self.assertEqual(names, ['quadratic', 'linear_r2', 'linear_r2_intro', 'logsq'])
        self.assertEqual(ctx.exception.payload['kmax'], 10)
