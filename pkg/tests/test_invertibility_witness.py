"""Tests the semiact right invertible witnesses and lattice membership."""

import os
import random
import unittest
from fractions import Fraction

import semiact.action
from semiact.action.algebra import linear
from semiact.action.algebra import matrix as algmatrix
from semiact.action.algebra.element import AlgElem
from semiact.action.algebra.matrix import AlgMat
from semiact.action.algebra.ring import Ring
from semiact.action.construction import family, union
from semiact.action.duality.module import ModulePresentation
from semiact.action.dynamics import expansivity
from semiact.action.exceptions import NoLeftIdentityException, ShapeMismatchException
from semiact.action.invertibility import witness


def random_matrix(rng, semigroup, n, k):
    return AlgMat.from_rows(
        [
            [
                AlgElem.from_values(
                    semigroup,
                    {
                        s: rng.choice((-2, -1, 1, 2))
                        for s in semigroup.elements
                        if rng.random() < 0.5
                    },
                )
                for _ in range(k)
            ]
            for _ in range(n)
        ]
    )


class SemiactInvertibilityWitnessTestCase(unittest.TestCase):
    """Tests the semiact right invertible witnesses and lattice membership."""

    def setUp(self):
        """Ensure the application is setup for testing."""
        self.fixtures_path = os.path.join(
            os.path.dirname(os.path.abspath(__file__)), "fixtures/presentation/"
        )

    def tearDown(self):
        """Ensure everything is torn down between tests."""
        pass

    def presentation(self, name):
        document = semiact.action.loader.document.from_file(
            os.path.join(self.fixtures_path, name),
            semiact.action.model.presentation.Document,
        )
        return semiact.action.loader.document.to_presentation(document)

    def test_cyclic_group(self):
        """Ensure J = 2Z[Z/2] has the witness B = 2 delta_0 with C = delta_0 / 2."""
        presentation = self.presentation("001-cyclic-2.valid.json")
        group = presentation.semigroup
        found = witness.theorem_b_witness(presentation)

        self.assertEqual(found.scalar, 2)
        two = AlgElem.delta(group, 0, coefficient=2)
        self.assertEqual(found.b, AlgMat.from_rows([[two]]))
        half = AlgElem.delta(group, 0, Ring.RAT, Fraction(1, 2))
        self.assertEqual(found.c, AlgMat.from_rows([[half]]))
        self.assertEqual(found.solution, AlgMat.from_rows([[half]]))
        self.assertTrue(found.two_sided)

        report = found.to_report()
        self.assertTrue(report.present)
        self.assertEqual(report.scalar, 2)
        self.assertEqual(report.B.entries[0][0].coeffs, {"0": [2, 1]})

    def test_left_identity_only(self):
        """Ensure witnesses exist with a one-sided identity, without C * B = Re{I}."""
        found = witness.theorem_b_witness(
            self.presentation("002-right-zero-2.valid.json")
        )

        self.assertIsNotNone(found)
        self.assertEqual(found.scalar, 2)
        self.assertFalse(found.two_sided)

    def test_no_witness(self):
        """Ensure no witness exists for a non-expansive action."""
        self.assertIsNone(
            witness.theorem_b_witness(self.presentation("004-cyclic-2-arc.valid.json"))
        )

    def test_no_left_identity(self):
        """Ensure a missing left identity is reported."""
        semigroup = family.null_with_zero(2)
        presentation = ModulePresentation(
            semigroup, AlgMat.from_rows([[AlgElem.delta(semigroup, 0, coefficient=2)]])
        )

        with self.assertRaises(NoLeftIdentityException):
            witness.theorem_b_witness(presentation)

    def test_module_membership(self):
        """Ensure lattice membership is decided exactly."""
        presentation = self.presentation("001-cyclic-2.valid.json")

        self.assertTrue(witness.module_membership([2, 0], presentation))
        self.assertTrue(witness.module_membership([2, 4], presentation))
        self.assertTrue(witness.module_membership([0, 0], presentation))
        self.assertFalse(witness.module_membership([1, 0], presentation))
        self.assertFalse(witness.module_membership([2, 3], presentation))

        with self.assertRaises(ShapeMismatchException):
            witness.module_membership([2, 0, 0], presentation)

    def test_module_membership_skew(self):
        """Ensure membership handles lattices which are not diagonal."""
        group = family.cyclic_group(3)
        matrix = AlgMat.from_rows([[AlgElem.from_values(group, {0: 2, 1: 1})]])
        presentation = ModulePresentation(group, matrix)

        self.assertTrue(witness.module_membership([2, 1, 0], presentation))
        self.assertTrue(witness.module_membership([2, 3, 1], presentation))
        self.assertFalse(witness.module_membership([1, 0, 0], presentation))

    def test_witness_iff_expansive(self):
        """Ensure a witness exists exactly when the action is expansive, whenever the
        convolution algebra has a left identity, and that B * C = Re{I} with every
        column of B in J.
        """
        rng = random.Random(11)
        semigroups = [
            family.right_zero(2),
            family.right_zero(3),
            family.trunc_min(3),
            family.cyclic_group(4),
            union.union_table(
                union.UnionSpec((family.cyclic_group(2), family.right_zero(2)))
            ),
            union.union_table(
                union.UnionSpec((family.cyclic_group(3), family.right_zero(2)))
            ),
        ]
        shapes = [(1, 1), (1, 2), (2, 1), (2, 2)]
        found_count = 0

        for semigroup in semigroups:
            identity = linear.solve_left_identity(semigroup).real_part()
            usable = shapes if semigroup.size <= 4 else shapes[:3]
            for index in range(50):
                n, k = usable[index % len(usable)]
                presentation = ModulePresentation(
                    semigroup, random_matrix(rng, semigroup, n, k)
                )
                found = witness.theorem_b_witness(presentation)
                report = expansivity.decide_expansive(presentation, budget=1)

                self.assertIn(report.route, ("RankTheoremA", "TorusArc"))
                self.assertEqual(found is not None, report.decision == "Expansive")
                if found is None:
                    continue

                found_count += 1
                self.assertEqual(found.identity, AlgMat.identity(identity, n))
                self.assertEqual(found.b.to_ring(Ring.RAT) * found.c, found.identity)
                for column in found.b.columns():
                    self.assertTrue(
                        witness.module_membership(
                            [int(v) for v in algmatrix.flatten(column)], presentation
                        )
                    )

        self.assertGreater(found_count, 0)
