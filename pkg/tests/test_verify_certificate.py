"""Tests the semiact re-verification of report certificates."""

import os
import unittest

import semiact.action
from semiact.action import model
from semiact.action.construction import family, rees, union
from semiact.action.dynamics import expansivity
from semiact.action.exceptions import VerificationException
from semiact.action.invertibility import laurent, witness
from semiact.action.semigroup import analysis, table
from semiact.action.verify import certificate


class SemiactVerifyCertificateTestCase(unittest.TestCase):
    """Tests the semiact re-verification of report certificates."""

    def setUp(self):
        """Ensure the application is setup for testing."""
        self.fixtures_path = os.path.join(
            os.path.dirname(os.path.abspath(__file__)), "fixtures/"
        )

    def tearDown(self):
        """Ensure everything is torn down between tests."""
        pass

    def load(self, name, schema):
        return semiact.action.loader.document.from_file(
            os.path.join(self.fixtures_path, name), schema
        )

    def presentation(self, name):
        document = self.load(f"presentation/{name}", model.presentation.Document)
        return semiact.action.loader.document.to_presentation(document)

    def failed(self, verification):
        return [check.name for check in verification.checks if not check.passed]

    def test_analysis(self):
        """Ensure analysis certificates verify, and tampered covers do not."""
        report = analysis.analyze(family.trunc_min(3))
        verification = certificate.verify_report(report)

        self.assertTrue(verification.passed)
        self.assertIn("regular cover", [check.name for check in verification.checks])

        tampered = report.model_copy(update={"idempotent_cover": [1]})
        self.assertEqual(
            self.failed(certificate.verify_report(tampered)), ["idempotent cover"]
        )

    def test_expansive(self):
        """Ensure expansive reports verify, and tampered bounds do not."""
        presentation = self.presentation("001-cyclic-2.valid.json")
        report = expansivity.decide_expansive(presentation)

        self.assertTrue(certificate.verify_report(report, presentation).passed)

        tampered = report.model_copy(update={"theoretical_bound": [1, 7]})
        self.assertIn(
            "theoretical bound",
            self.failed(certificate.verify_report(tampered, presentation)),
        )

        tampered = report.model_copy(update={"matrix_norm": 3})
        self.assertIn(
            "matrix norm",
            self.failed(certificate.verify_report(tampered, presentation)),
        )

    def test_torus_arc(self):
        """Ensure annihilator witnesses verify, and tampered functionals do not."""
        presentation = self.presentation("004-cyclic-2-arc.valid.json")
        report = expansivity.decide_expansive(presentation)

        self.assertTrue(certificate.verify_report(report, presentation).passed)

        witness_ = report.witness.model_copy(update={"functional": [[1, 1], [0, 1]]})
        tampered = report.model_copy(update={"witness": witness_})
        self.assertIn(
            "annihilator",
            self.failed(certificate.verify_report(tampered, presentation)),
        )

    def test_pair(self):
        """Ensure non-separated pairs verify, and identical points do not."""
        presentation = self.presentation("003-null-2-generated.valid.json")
        report = expansivity.decide_expansive(presentation)

        self.assertTrue(certificate.verify_report(report, presentation).passed)

        witness_ = report.witness.model_copy(update={"y": report.witness.x})
        tampered = report.model_copy(update={"witness": witness_})
        self.assertEqual(
            self.failed(certificate.verify_report(tampered, presentation)),
            ["non-separated pair"],
        )

    def test_theorem_b(self):
        """Ensure witnesses verify, and a tampered scalar does not."""
        presentation = self.presentation("001-cyclic-2.valid.json")
        report = witness.theorem_b_witness(presentation).to_report()
        verification = certificate.verify_report(report, presentation)

        self.assertTrue(verification.passed)
        self.assertIn("C B = Re{I}", [check.name for check in verification.checks])

        tampered = report.model_copy(update={"scalar": 3})
        self.assertEqual(
            self.failed(certificate.verify_report(tampered, presentation)),
            ["B = A (mX)"],
        )

        absent = model.report.TheoremB(present=False, reason="none")
        self.assertEqual(certificate.verify_report(absent, presentation).checks, [])

    def test_laurent(self):
        """Ensure truncated inverses verify, and tampered residuals do not."""
        element = laurent.from_document(
            self.load("laurent/001-shift-minus-two.valid.json", model.laurent.Document)
        )
        report = laurent.laurent_invertible(element)
        report = report.model_copy(
            update={"inverse": laurent.laurent_inverse_truncated(element)}
        )

        self.assertTrue(certificate.verify_report(report, element).passed)

        inverse = report.inverse.model_copy(update={"residual": 1.0})
        tampered = report.model_copy(update={"inverse": inverse})
        self.assertEqual(
            self.failed(certificate.verify_report(tampered, element)), ["residual"]
        )

        inverse = report.inverse.model_copy(update={"tail_bound": 1e-20})
        tampered = report.model_copy(update={"inverse": inverse})
        self.assertEqual(
            self.failed(certificate.verify_report(tampered, element)), ["tail bound"]
        )

    def test_constructions(self):
        """Ensure Rees, union and family reports verify."""
        spec = rees.from_document(
            self.load("rees/004-half-identity.valid.json", model.construction.Rees)
        )
        self.assertTrue(certificate.verify_report(rees.rees_report(spec)).passed)

        spec = union.from_document(
            self.load(
                "union/001-group-and-right-zero.valid.json", model.construction.Union
            )
        )
        report = union.union_report(spec)
        self.assertTrue(certificate.verify_report(report).passed)

        identity = model.algebra.Element(ring="Int", coeffs={"1": [1, 1]})
        tampered = report.model_copy(update={"left_identity": identity})
        self.assertEqual(
            self.failed(certificate.verify_report(tampered)), ["left identity"]
        )

        report = family.family_report("right_zero", {"m": 3})
        self.assertTrue(certificate.verify_report(report).passed)

    def test_sweep(self):
        """Ensure sweeps verify every found entry."""
        groups = [family.cyclic_group(1)]
        found = rees.rees_sweep(5, 20, groups, workers=2)
        report = model.report.ReesSweep(
            seed=5,
            count=20,
            found=[
                model.report.ReesSweepEntry(spec=spec.to_document(), report=result)
                for spec, result in found
            ],
        )

        self.assertTrue(certificate.verify_report(report).passed)
        self.assertTrue(
            certificate.verify_report(model.report.ReesSweep(seed=0, count=0)).passed
        )

    def test_unsupported(self):
        """Ensure reports without certificates are rejected."""
        flags = table.classify(family.cyclic_group(2))

        with self.assertRaises(VerificationException):
            certificate.verify_report(flags)
