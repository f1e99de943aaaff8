"""Tests the semiact report outputs."""

import json
import os
import unittest

import semiact.action
from semiact.action import model
from semiact.action.construction import family
from semiact.action.dynamics import expansivity
from semiact.action.output import document, pretty


class SemiactOutputDocumentTestCase(unittest.TestCase):
    """Tests the semiact report outputs."""

    def setUp(self):
        """Ensure the application is setup for testing."""
        self.fixtures_path = os.path.join(
            os.path.dirname(os.path.abspath(__file__)), "fixtures/presentation/"
        )

    def tearDown(self):
        """Ensure everything is torn down between tests."""
        pass

    def report(self, name):
        loaded = semiact.action.loader.document.from_file(
            os.path.join(self.fixtures_path, name), model.presentation.Document
        )
        presentation = semiact.action.loader.document.to_presentation(loaded)
        return expansivity.decide_expansive(presentation)

    def test_render_json(self):
        """Ensure absent fields are omitted, and reports can be read back."""
        report = self.report("001-cyclic-2.valid.json")
        rendered = json.loads(document.render(report))

        self.assertNotIn("witness", rendered)
        self.assertNotIn("reason", rendered)
        self.assertEqual(rendered["optimal_constant"], [1, 6])
        self.assertEqual(model.report.Expansivity.model_validate(rendered), report)

    def test_render_witness(self):
        """Ensure nested witnesses are rendered."""
        report = self.report("003-null-2-generated.valid.json")
        rendered = json.loads(document.render(report))

        self.assertEqual(rendered["witness"]["kind"], "pair")
        self.assertEqual(rendered["witness"]["y"]["coords"], [[0, 1], [1, 2]])

    def test_render_semigroup_table(self):
        """Ensure semigroups rendered as tables carry no family parameters."""
        report = family.family_report("cyclic_group", {"m": 2})
        rendered = json.loads(document.render(report))

        self.assertNotIn("params", rendered["semigroup"])
        self.assertNotIn("family", rendered["semigroup"])
        self.assertEqual(rendered["semigroup"]["table"], [[0, 1], [1, 0]])
        self.assertIsNone(family.cyclic_group(2).to_document().params)

    def test_format_rational(self):
        """Ensure integral rationals are rendered without a denominator."""
        self.assertEqual(pretty.format_rational([1, 6]), "1/6")
        self.assertEqual(pretty.format_rational([-3, 1]), "-3")

    def test_format_element(self):
        """Ensure elements are rendered as sums of scaled deltas."""
        element = model.algebra.Element(ring="Rat", coeffs={"0": [-1, 1], "2": [1, 2]})
        gaussian = model.algebra.Element(ring="GaussRat", coeffs={"1": [1, 1, 2, 3]})

        self.assertEqual(pretty.format_element(element), "-1 d0 + 1/2 d2")
        self.assertEqual(pretty.format_element(gaussian), "(1 + 2/3i) d1")
        self.assertEqual(pretty.format_element(model.algebra.Element()), "0")

    def test_format_value(self):
        """Ensure points and lists are rendered recursively."""
        point = model.presentation.TorusPoint(coords=[[1, 2], [0, 1]])

        self.assertEqual(pretty.format_value(point), "(1/2, 0)")
        self.assertEqual(pretty.format_value([1, 2]), "[1, 2]")
        self.assertEqual(pretty.format_value(None), "None")
