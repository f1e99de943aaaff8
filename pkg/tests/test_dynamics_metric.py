"""Tests the semiact metric and separation on (T^S)^n."""

import unittest
from fractions import Fraction

from semiact.action.construction import family
from semiact.action.duality.torus import TorusPoint
from semiact.action.dynamics import metric
from semiact.action.exceptions import ShapeMismatchException

HALF = Fraction(1, 2)


class SemiactDynamicsMetricTestCase(unittest.TestCase):
    """Tests the semiact metric and separation on (T^S)^n."""

    def test_rho(self):
        """Ensure rho is the distance on R / Z."""
        self.assertEqual(metric.rho(Fraction(9, 10), Fraction(1, 10)), Fraction(1, 5))
        self.assertEqual(metric.rho(Fraction(3, 2), 0), HALF)
        self.assertEqual(metric.rho(Fraction(1, 4), Fraction(-3, 4)), 0)

    def test_metric(self):
        """Ensure d weights element s by 2^-(s + 1) and takes the max over j."""
        zero = TorusPoint.zero(1, 2)

        self.assertEqual(
            metric.metric_d(TorusPoint((HALF, 0), 2), zero), Fraction(1, 6)
        )
        self.assertEqual(
            metric.metric_d(TorusPoint((0, HALF), 2), zero), Fraction(1, 12)
        )
        self.assertEqual(
            metric.metric_d(TorusPoint((HALF, HALF), 2), zero), Fraction(1, 4)
        )

        wide = TorusPoint((0, HALF, HALF, 0), 2)
        self.assertEqual(metric.metric_d(wide, TorusPoint.zero(2, 2)), Fraction(1, 6))

    def test_metric_weights(self):
        """Ensure each coordinate contributes rho / (2^(s + 1) (1 + rho)) exactly."""
        point = TorusPoint((Fraction(1, 4), Fraction(1, 3), HALF), 3)
        zero = TorusPoint.zero(1, 3)

        self.assertEqual(metric.metric_d(point, zero), Fraction(49, 240))
        self.assertEqual(
            metric.metric_d(TorusPoint((Fraction(3, 4), 0, 0), 3), zero),
            Fraction(1, 10),
        )

    def test_metric_is_symmetric(self):
        """Ensure d is symmetric and vanishes on the diagonal."""
        x = TorusPoint((Fraction(1, 3), Fraction(4, 5)), 2)
        y = TorusPoint((Fraction(2, 7), HALF), 2)

        self.assertEqual(metric.metric_d(x, y), metric.metric_d(y, x))
        self.assertEqual(metric.metric_d(x, x), 0)

    def test_separation(self):
        """Ensure separation takes the maximum over every shift."""
        group = family.cyclic_group(2)
        zero = TorusPoint.zero(1, 2)

        self.assertEqual(
            metric.separation(TorusPoint((0, HALF), 2), zero, group), Fraction(1, 6)
        )

        null = family.null_with_zero(2)
        self.assertEqual(metric.separation(TorusPoint((0, HALF), 2), zero, null), 0)

    def test_shape_mismatch(self):
        """Ensure points of different shapes are rejected."""
        with self.assertRaises(ShapeMismatchException):
            metric.metric_d(TorusPoint.zero(1, 2), TorusPoint.zero(2, 2))

        with self.assertRaises(ShapeMismatchException):
            metric.separation(
                TorusPoint.zero(1, 2), TorusPoint.zero(1, 1), family.cyclic_group(2)
            )
