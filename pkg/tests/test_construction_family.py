"""Tests the semiact named semigroup families."""

import unittest

from semiact.action.construction import family
from semiact.action.exceptions import UnknownFamilyException, ValidationException
from semiact.action.semigroup import table


class SemiactConstructionFamilyTestCase(unittest.TestCase):
    """Tests the semiact named semigroup families."""

    def test_families(self):
        """Ensure every named family builds a semigroup of the requested order."""
        for name in family.FAMILIES:
            for m in range(1, 5):
                self.assertEqual(family.family(name, {"m": m}).size, m)

    def test_chain_semilattice(self):
        """Ensure the chain semilattice is the chain under min."""
        self.assertEqual(
            family.family("chain_semilattice", {"m": 3}), family.trunc_min(3)
        )

    def test_direct_product(self):
        """Ensure direct products multiply componentwise."""
        left, right = family.cyclic_group(2), family.right_zero(2)
        product = family.family(
            "direct_product",
            {
                "left": {"family": "cyclic_group", "params": {"m": 2}},
                "right": {"family": "right_zero", "params": {"m": 2}},
            },
        )

        self.assertEqual(product, family.direct_product(left, right))
        self.assertEqual(product.size, 4)
        self.assertEqual(product.multiply(1 * 2 + 0, 1 * 2 + 1), 0 * 2 + 1)
        self.assertEqual(product.label(3), "(1,r1)")

    def test_invalid_params(self):
        """Ensure invalid parameters are rejected."""
        with self.assertRaises(ValidationException):
            family.family("cyclic_group", {"m": 0})

        with self.assertRaises(ValidationException):
            family.family("cyclic_group", {})

        with self.assertRaises(ValidationException):
            family.family("cyclic_group", {"m": "many"})

        with self.assertRaises(ValidationException):
            family.family("direct_product", {"left": {"family": "cyclic_group"}})

        with self.assertRaises(ValidationException):
            family.family("direct_product", {"left": 1, "right": 2})

        with self.assertRaises(ValidationException):
            family.family(
                "direct_product",
                {"left": {"size": 1, "table": [[0]], "colour": "blue"}, "right": {}},
            )

    def test_unknown_family(self):
        """Ensure unknown families are rejected."""
        with self.assertRaises(UnknownFamilyException):
            family.family("free_monoid", {"m": 2})

    def test_family_report(self):
        """Ensure family reports carry the flags and convolution left identity."""
        report = family.family_report("right_zero", {"m": 3})

        self.assertEqual(report.name, "right_zero")
        self.assertEqual(report.semigroup.size, 3)
        self.assertTrue(report.flags.has_left_identity_element)
        self.assertIsNotNone(report.left_identity)

        report = family.family_report("null_with_zero", {"m": 3})
        self.assertFalse(report.flags.is_expansive)
        self.assertIsNone(report.left_identity)

    def test_families_are_semigroups(self):
        """Ensure the family tables pass validation and have the expected shape."""
        self.assertTrue(table.is_group(family.cyclic_group(4)))
        self.assertEqual(table.classify(family.trunc_min(4)).identity, 3)
        self.assertEqual(table.product_set(family.null_with_zero(4)), frozenset({0}))
