"""Tests the semiact Rees matrix semigroups and their criteria."""

import os
import random
import unittest
from fractions import Fraction

import semiact.action
from semiact.action.algebra import element, linear
from semiact.action.algebra.element import AlgElem
from semiact.action.algebra.matrix import AlgMat
from semiact.action.algebra.ring import Ring
from semiact.action.construction import family, rees
from semiact.action.construction.rees import ReesSpec
from semiact.action.exceptions import InvalidGroupException, ValidationException
from semiact.action.semigroup import cover, table


def sweep_specs():
    rng = random.Random(3)
    groups = [family.cyclic_group(m) for m in (1, 2, 3)]
    return [rees.random_spec(rng, rng.choice(groups)) for _ in range(200)]


def sparse_element(rng, semigroup):
    support = rng.sample(list(semigroup.elements), min(3, semigroup.size))
    return AlgElem.from_values(
        semigroup,
        {s: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for s in support},
        Ring.RAT,
    )


class SemiactConstructionReesTestCase(unittest.TestCase):
    """Tests the semiact Rees matrix semigroups and their criteria."""

    def setUp(self):
        """Ensure the application is setup for testing."""
        self.fixtures_path = os.path.join(
            os.path.dirname(os.path.abspath(__file__)), "fixtures/rees/"
        )

    def tearDown(self):
        """Ensure everything is torn down between tests."""
        pass

    def spec(self, name):
        document = semiact.action.loader.document.from_file(
            os.path.join(self.fixtures_path, name),
            semiact.action.model.construction.Rees,
        )
        return rees.from_document(document)

    def test_spec_validation(self):
        """Ensure invalid specs are rejected."""
        group = family.cyclic_group(2)

        with self.assertRaises(InvalidGroupException):
            ReesSpec(family.trunc_min(2), 1, 1, ((0,),))

        with self.assertRaises(InvalidGroupException):
            ReesSpec(group, 1, 1, ((2,),))

        with self.assertRaises(ValidationException):
            ReesSpec(group, 2, 1, ((0,),))

        with self.assertRaises(ValidationException):
            ReesSpec(group, 0, 1, ((),))

    def test_index(self):
        """Ensure element indices and triples are inverse to each other."""
        spec = self.spec("003-cyclic-2.valid.json")

        self.assertEqual(spec.size, 9)
        for index in range(1, spec.size):
            self.assertEqual(spec.index(*spec.triple(index)), index)

    def test_build(self):
        """Ensure products follow (i, g, l)(j, h, m) = (i, g p(l, j) h, m)."""
        spec = self.spec("003-cyclic-2.valid.json")
        semigroup = rees.rees_build(spec)

        left, right = spec.index(0, 1, 1), spec.index(1, 1, 0)
        self.assertEqual(semigroup.multiply(left, right), spec.index(0, 1, 0))
        self.assertEqual(semigroup.multiply(0, left), 0)

        spec = self.spec("002-zero-column.valid.json")
        semigroup = rees.rees_build(spec)
        left, right = spec.index(0, 0, 0), spec.index(1, 0, 0)
        self.assertEqual(semigroup.multiply(left, right), 0)

    def test_image_is_multiplicative(self):
        """Ensure a -> image(a) turns convolution into the P-twisted product."""
        spec = self.spec("003-cyclic-2.valid.json")
        semigroup = rees.rees_build(spec)
        p = rees.sandwich_matrix(spec)

        for s in range(1, spec.size):
            for t in range(1, spec.size):
                a = AlgElem.delta(semigroup, s, Ring.RAT)
                b = AlgElem.delta(semigroup, t, Ring.RAT)
                self.assertEqual(
                    rees.rees_image(spec, a * b),
                    rees.rees_image(spec, a) * p * rees.rees_image(spec, b),
                )

    def test_trivial(self):
        """Ensure the 1 x 1 sandwich over the trivial group is unital and integral."""
        report = rees.rees_report(self.spec("001-trivial.valid.json"))

        self.assertEqual(report.size, 2)
        self.assertTrue(report.expansive)
        self.assertTrue(report.idempotent_cover)
        self.assertTrue(report.unital_l1)
        self.assertTrue(report.integral_identity)
        self.assertEqual(report.cover, [1])
        self.assertEqual(report.idempotents, [1])
        spec = self.spec("001-trivial.valid.json")
        self.assertEqual(rees.rees_idempotents(spec), [0, 1])

    def test_zero_column(self):
        """Ensure a zero column prevents an idempotent cover, but not expansivity."""
        spec = self.spec("002-zero-column.valid.json")
        report = rees.rees_report(spec)

        self.assertTrue(report.expansive)
        self.assertFalse(report.idempotent_cover)
        self.assertFalse(report.unital_l1)
        self.assertEqual(report.cover, [1, 2])
        self.assertIsNone(report.idempotents)
        self.assertIsNone(report.identity)
        self.assertIsNone(
            cover.reduce_to_idempotents(rees.rees_build(spec), report.cover)
        )

    def test_singular_sandwich(self):
        """Ensure a singular sandwich matrix is not unital."""
        report = rees.rees_report(self.spec("003-cyclic-2.valid.json"))

        self.assertTrue(report.expansive)
        self.assertTrue(report.idempotent_cover)
        self.assertFalse(report.unital_l1)

    def test_half_identity(self):
        """Ensure a unital algebra may have an identity which is not integral."""
        spec = self.spec("004-half-identity.valid.json")
        report = rees.rees_report(spec)

        self.assertTrue(report.unital_l1)
        self.assertFalse(report.integral_identity)

        semigroup = rees.rees_build(spec)
        identity = element.from_document(report.identity, semigroup)
        self.assertTrue(linear.is_two_sided_identity(identity))

    def test_zero_sandwich(self):
        """Ensure an all zero sandwich is neither expansive nor unital."""
        spec = ReesSpec(family.cyclic_group(2), 2, 2, ((None, None), (None, None)))
        report = rees.rees_report(spec)

        self.assertFalse(report.expansive)
        self.assertFalse(report.idempotent_cover)
        self.assertFalse(report.unital_l1)
        self.assertFalse(table.is_expansive(rees.rees_build(spec)))

    def test_criteria_agree_with_tables(self):
        """Ensure the sandwich criteria agree with the built semigroups."""
        for spec in sweep_specs():
            semigroup = rees.rees_build(spec)
            report = rees.rees_report(spec)

            self.assertEqual(report.expansive, table.is_expansive(semigroup))
            if report.expansive:
                reduced = cover.reduce_to_idempotents(semigroup, report.cover)
                self.assertEqual(report.idempotent_cover, reduced is not None)
            else:
                self.assertFalse(report.idempotent_cover)

            self.assertEqual(
                rees.rees_idempotents(spec), list(table.idempotents(semigroup))
            )

            identity = linear.solve_left_identity(semigroup, two_sided=True)
            self.assertEqual(report.unital_l1, identity is not None)

    def test_image_is_multiplicative_random(self):
        """Ensure image(a * b) = image(a) P image(b) for random rational elements."""
        rng = random.Random(31)
        for spec in sweep_specs():
            semigroup = rees.rees_build(spec)
            p = rees.sandwich_matrix(spec)

            for _ in range(100):
                a, b = (sparse_element(rng, semigroup) for _ in range(2))
                self.assertEqual(
                    rees.rees_image(spec, a * b),
                    rees.rees_image(spec, a) * p * rees.rees_image(spec, b),
                )

    def test_sweep(self):
        """Ensure sweeps are deterministic and only report non-integral identities."""
        groups = [family.cyclic_group(1)]
        found = rees.rees_sweep(5, 40, groups, workers=2)

        self.assertEqual(
            [spec for spec, _ in found],
            [spec for spec, _ in rees.rees_sweep(5, 40, groups, workers=1)],
        )
        for spec, report in found:
            self.assertTrue(report.unital_l1)
            self.assertFalse(report.integral_identity)

    def test_document(self):
        """Ensure specs survive conversion to and from documents."""
        spec = self.spec("004-half-identity.valid.json")

        self.assertEqual(rees.from_document(spec.to_document()), spec)

    def test_sandwich_matrix(self):
        """Ensure P is built over Q[G] with zeros for null entries."""
        spec = self.spec("002-zero-column.valid.json")
        group = spec.group

        self.assertEqual(
            rees.sandwich_matrix(spec),
            AlgMat.from_rows(
                [[AlgElem.delta(group, 0, Ring.RAT), AlgElem.zero(group, Ring.RAT)]]
            ),
        )
