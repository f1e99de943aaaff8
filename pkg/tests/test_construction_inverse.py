"""Tests the semiact identities of inverse semigroup algebras."""

import os
import unittest

import semiact.action
from semiact.action.algebra import linear
from semiact.action.algebra.element import AlgElem
from semiact.action.algebra.ring import Ring
from semiact.action.construction import family, inverse
from semiact.action.exceptions import NotInverseException
from semiact.action.semigroup import table


class SemiactConstructionInverseTestCase(unittest.TestCase):
    """Tests the semiact identities of inverse semigroup algebras."""

    def setUp(self):
        """Ensure the application is setup for testing."""
        self.fixtures_path = os.path.join(
            os.path.dirname(os.path.abspath(__file__)), "fixtures/semigroup/"
        )

    def tearDown(self):
        """Ensure everything is torn down between tests."""
        pass

    def test_semilattice(self):
        """Ensure the identity of a semilattice without a top is found."""
        document = semiact.action.loader.document.from_file(
            os.path.join(self.fixtures_path, "003-semilattice.valid.json"),
            semiact.action.model.semigroup.Document,
        )
        semigroup = table.from_document(document)
        identity = inverse.inverse_semigroup_identity(semigroup)

        self.assertEqual(
            identity, AlgElem.from_values(semigroup, {0: -1, 1: 1, 2: 1}, Ring.RAT)
        )
        self.assertTrue(linear.is_two_sided_identity(identity))

    def test_group(self):
        """Ensure the identity of a group algebra is delta of the unit."""
        group = family.cyclic_group(3)

        self.assertEqual(
            inverse.inverse_semigroup_identity(group), AlgElem.delta(group, 0, Ring.RAT)
        )

    def test_chain(self):
        """Ensure the identity of a chain is delta of its top."""
        chain = family.trunc_min(4)

        self.assertEqual(
            inverse.inverse_semigroup_identity(chain), AlgElem.delta(chain, 3, Ring.RAT)
        )

    def test_not_inverse(self):
        """Ensure semigroups which are not inverse are rejected."""
        with self.assertRaises(NotInverseException):
            inverse.inverse_semigroup_identity(family.left_zero(2))

        with self.assertRaises(NotInverseException):
            inverse.inverse_semigroup_identity(family.null_with_zero(2))
