"""Tests the semiact disjoint unions with an adjoined zero."""

import os
import random
import unittest

import semiact.action
from semiact.action.algebra import element, linear
from semiact.action.algebra.element import AlgElem
from semiact.action.algebra.ring import Ring
from semiact.action.construction import family, union
from semiact.action.construction.union import UnionSpec
from semiact.action.exceptions import ValidationException
from semiact.action.semigroup import table


class SemiactConstructionUnionTestCase(unittest.TestCase):
    """Tests the semiact disjoint unions with an adjoined zero."""

    def setUp(self):
        """Ensure the application is setup for testing."""
        self.fixtures_path = os.path.join(
            os.path.dirname(os.path.abspath(__file__)), "fixtures/union/"
        )

    def tearDown(self):
        """Ensure everything is torn down between tests."""
        pass

    def spec(self, name):
        document = semiact.action.loader.document.from_file(
            os.path.join(self.fixtures_path, name),
            semiact.action.model.construction.Union,
        )
        return union.from_document(document)

    def test_table(self):
        """Ensure products across components fall to the adjoined zero."""
        spec = self.spec("001-group-and-right-zero.valid.json")
        semigroup = union.union_table(spec)

        self.assertEqual(spec.size, 5)
        self.assertEqual(spec.offset(1), 3)
        self.assertEqual(semigroup.multiply(1, 2), 2)
        self.assertEqual(semigroup.multiply(2, 2), 1)
        self.assertEqual(semigroup.multiply(1, 3), 0)
        self.assertEqual(semigroup.multiply(3, 4), 4)
        self.assertEqual(semigroup.label(0), "z")
        self.assertEqual(semigroup.label(4), "r1_2")

    def test_left_identity(self):
        """Ensure the left identity is assembled from the component identities."""
        report = union.union_report(self.spec("001-group-and-right-zero.valid.json"))

        self.assertEqual(report.size, 5)
        self.assertTrue(report.expansive)
        self.assertIsNotNone(report.left_identity)
        self.assertEqual(report.left_identity.coeffs["0"], [-1, 1])

        semigroup = union.union_table(self.spec("001-group-and-right-zero.valid.json"))
        identity = element.from_document(report.left_identity, semigroup)
        self.assertTrue(linear.is_left_identity(identity))

    def test_no_left_identity(self):
        """Ensure a component without a left identity leaves none for the union."""
        report = union.union_report(self.spec("002-group-and-null.valid.json"))

        self.assertFalse(report.expansive)
        self.assertIsNone(report.left_identity)
        self.assertIsNotNone(report.component_identities[0])
        self.assertIsNone(report.component_identities[1])

    def test_single_component(self):
        """Ensure unions need at least two components."""
        with self.assertRaises(ValidationException):
            UnionSpec((family.cyclic_group(2),))

        with self.assertRaises(ValidationException):
            semiact.action.loader.document.from_file(
                os.path.join(self.fixtures_path, "001-single.invalid.json"),
                semiact.action.model.construction.Union,
            )

    def test_random_unions(self):
        """Ensure the union has a left identity exactly when every component does,
        and is expansive exactly when every component is.
        """
        rng = random.Random(13)
        components = [
            family.cyclic_group(2),
            family.cyclic_group(3),
            family.right_zero(2),
            family.left_zero(2),
            family.trunc_min(2),
            family.null_with_zero(2),
        ]

        for _ in range(20):
            chosen = tuple(rng.choice(components) for _ in range(rng.randint(2, 3)))
            semigroup, identity = union.union_build(UnionSpec(chosen))

            self.assertEqual(
                identity is not None,
                all(linear.solve_left_identity(c) is not None for c in chosen),
            )
            self.assertEqual(
                identity is not None,
                linear.solve_left_identity(semigroup) is not None,
            )
            self.assertEqual(
                table.is_expansive(semigroup),
                all(table.is_expansive(c) for c in chosen),
            )

    def test_unions_of_small_components(self):
        """Ensure e * delta_s = delta_s across random unions of Z/2, Z/3, R2 and L2,
        with an identity exactly when no left zero component is present.
        """
        rng = random.Random(29)
        left_zero = family.left_zero(2)
        components = [
            family.cyclic_group(2),
            family.cyclic_group(3),
            family.right_zero(2),
            left_zero,
        ]

        for _ in range(50):
            chosen = tuple(rng.choice(components) for _ in range(rng.randint(2, 4)))
            semigroup, identity = union.union_build(UnionSpec(chosen))

            self.assertEqual(identity is None, left_zero in chosen)
            if identity is None:
                self.assertIsNone(linear.solve_left_identity(semigroup))
                continue

            self.assertEqual(identity.coefficient(0), Ring.RAT.coerce(1 - len(chosen)))
            for s in semigroup.elements:
                delta = AlgElem.delta(semigroup, s, Ring.RAT)
                self.assertEqual(identity * delta, delta)
