import math
import unittest
from dataclasses import replace

import numpy as np

from symtruss.errors import Mechanism, ModelError, ParseError
from symtruss.isometry import Axis, reflection2, rotation2, sigma_h
from symtruss.trussfem import (
    Element,
    NodalLoad,
    Node,
    Support,
    TrussModel,
    assemble,
    builtin_case,
    compare,
    element_geometry,
    element_stiffness,
    reduced_system,
    scale_loads,
    solve,
    transform_model,
)

D2_FORCES = {"AB": 173, "BC": -328, "CD": -826, "DA": 0, "AC": 462, "BD": -952}
ASYM_FORCES = {"AB": 370, "BC": -347, "CD": -964, "DA": 0, "AC": 580, "BD": -1086}

# |K| entries of the symmetric frame as printed in the case study (rounded there)
PUBLISHED_MAGNITUDES = [0.0] * 25 + [3712346.0] * 23 + [10500000.0] * 8 + [14212000.0] + [14212346.0] * 7
PUBLISHED_REDUCED = [
    [14212346.0, -3712346.0, -10500000.0, 0.0],
    [-3712346.0, 14212346.0, 0.0, 0.0],
    [-10500000.0, 0.0, 14212346.0, 3712346.0],
    [0.0, 0.0, 3712346.0, 14212346.0],
]


def triangle(**overrides):
    fields = {
        "nodes": (Node("A", 0.0, 0.0), Node("B", 1.0, 0.0), Node("C", 0.0, 1.0)),
        "elements": (Element("AB", "A", "B"), Element("BC", "B", "C"), Element("CA", "C", "A")),
        "supports": (Support("A"), Support("B", fix_x=False)),
        "loads": (NodalLoad("C", Fx=100.0),),
        "name": "triangle",
    }
    fields.update(overrides)
    return TrussModel(**fields)


def displacement_mm(result, node_id):
    return [1000 * v for v in result.displacement(node_id)]


class GeometryTests(unittest.TestCase):
    def test_diagonal_geometry(self):
        g = element_geometry(builtin_case("d2"), builtin_case("d2").element("AC"))
        self.assertAlmostEqual(g.length, 2.8284271, places=7)
        self.assertAlmostEqual(g.c, 0.7071068, places=7)
        self.assertAlmostEqual(g.s, 0.7071068, places=7)

        asym = builtin_case("asym")
        g = element_geometry(asym, asym.element("AC"))
        self.assertAlmostEqual(g.length, 2.5)
        self.assertAlmostEqual(g.c, 0.6)
        self.assertAlmostEqual(g.s, 0.8)

    def test_element_stiffness_of_a_vertical_bar(self):
        model = builtin_case("d2")
        ke = element_stiffness(210e9, 1e-4, element_geometry(model, model.element("AB")))
        np.testing.assert_allclose(np.diag(ke), [0.0, 1.05e7, 0.0, 1.05e7], atol=1e-6)
        self.assertAlmostEqual(ke[1, 3], -1.05e7)
        np.testing.assert_array_equal(ke, ke.T)
        np.testing.assert_allclose(ke.sum(axis=1), 0.0, atol=1e-6)


class AssemblyTests(unittest.TestCase):
    def test_global_stiffness_of_the_symmetric_frame(self):
        k = assemble(builtin_case("d2"))
        self.assertEqual(k.shape, (8, 8))
        np.testing.assert_allclose(k, k.T, rtol=0, atol=1e-6)
        diagonal = 2.1e7 / (2 * math.sqrt(2)) / 2
        magnitudes = np.abs(k)
        self.assertTrue(math.isclose(k[0, 0], 1.05e7 + diagonal, rel_tol=1e-4))
        self.assertTrue(math.isclose(k[0, 1], diagonal, rel_tol=1e-4))
        self.assertTrue(math.isclose(k[1, 3], -1.05e7, rel_tol=1e-4))
        self.assertEqual(int(np.sum(np.isclose(magnitudes, 1.05e7, rtol=1e-9, atol=0))), 8)
        self.assertEqual(int(np.sum(np.isclose(magnitudes, 1.05e7 + diagonal, rtol=1e-9, atol=0))), 8)
        self.assertEqual(int(np.sum(np.isclose(magnitudes, diagonal, rtol=1e-9, atol=0))), 24)
        self.assertEqual(int(np.sum(magnitudes < 1e-6)), 24)

    def test_published_matrix_differs_in_one_entry(self):
        ours = np.sort(np.abs(assemble(builtin_case("d2"))).ravel())
        published = np.sort(PUBLISHED_MAGNITUDES)
        self.assertEqual(published.size, 64)
        mismatches = ~np.isclose(ours, published, rtol=1e-4, atol=1e-6)
        self.assertEqual(int(mismatches.sum()), 1)

    def test_reduced_system(self):
        system = reduced_system(builtin_case("d2"))
        self.assertEqual(system.labels, ("Bx", "By", "Cx", "Cy"))
        self.assertEqual(system.free, (2, 3, 4, 5))
        np.testing.assert_array_equal(system.loads, [1000.0, -500.0, 0.0, -500.0])
        self.assertEqual(system.stiffness.shape, (4, 4))
        np.testing.assert_allclose(system.stiffness, PUBLISHED_REDUCED, rtol=1e-4, atol=1e-6)


class SolveTests(unittest.TestCase):
    def test_symmetric_frame(self):
        result = solve(builtin_case("d2"))
        np.testing.assert_allclose(displacement_mm(result, "B"), [0.1979, 0.0165], atol=1e-3)
        np.testing.assert_allclose(displacement_mm(result, "C"), [0.1667, -0.0787], atol=1e-3)
        self.assertAlmostEqual(1000 * result.u_norm, 0.271, delta=2e-3)
        for element_id, force in D2_FORCES.items():
            with self.subTest(element=element_id):
                self.assertAlmostEqual(result.axial[element_id], force, delta=3)
        self.assertEqual(result.axial["DA"], 0.0)
        self.assertEqual(result.peak()[0], "BD")

    def test_asymmetric_frame(self):
        result = solve(builtin_case("asym"))
        np.testing.assert_allclose(displacement_mm(result, "B"), [0.2624, 0.0352], atol=1e-3)
        np.testing.assert_allclose(displacement_mm(result, "C"), [0.2376, -0.0919], atol=1e-3)
        self.assertAlmostEqual(1000 * result.u_norm, 0.367, delta=2e-3)
        for element_id, force in ASYM_FORCES.items():
            with self.subTest(element=element_id):
                self.assertAlmostEqual(result.axial[element_id], force, delta=3)

    def test_reactions_balance_the_loads(self):
        result = solve(builtin_case("d2"))
        self.assertEqual([(r.node, r.direction) for r in result.reactions], [("A", "x"), ("A", "y"), ("D", "x"), ("D", "y")])
        rx, ry = result.reaction_totals()
        self.assertAlmostEqual(rx, -1000.0, delta=1e-6)
        self.assertAlmostEqual(ry, 2000.0, delta=1e-6)

    def test_nodal_equilibrium_at_free_nodes(self):
        model = builtin_case("asym")
        result = solve(model)
        loads = {load.node: np.array([load.Fx, load.Fy]) for load in model.loads}
        for node_id in ("B", "C"):
            node = model.node(node_id)
            total = loads.get(node_id, np.zeros(2)).copy()
            for element in model.elements:
                if node_id not in (element.node_i, element.node_j):
                    continue
                other = model.node(element.node_j if element.node_i == node_id else element.node_i)
                toward = np.array([other.x - node.x, other.y - node.y])
                total += result.axial[element.id] * toward / np.linalg.norm(toward)
            np.testing.assert_allclose(total, 0.0, atol=1e-6)

    def test_large_loads_on_a_braced_frame_still_solve(self):
        model = builtin_case("asym")
        base, heavy = solve(model), solve(scale_loads(model, 1e8))
        for element_id, force in base.axial.items():
            self.assertAlmostEqual(heavy.axial[element_id], 1e8 * force, delta=1e-9 * 1e8 * abs(base.peak()[1]))

    def test_equilibrium_is_checked_to_a_micronewton(self):
        result = solve(builtin_case("d2"))
        first, *rest = result.reactions
        with self.assertRaises(Mechanism):
            replace(result, reactions=(replace(first, force=first.force + 1e-5), *rest))

    def test_unbraced_frame_is_a_mechanism(self):
        with self.assertRaises(Mechanism):
            solve(builtin_case("unbraced"))

    def test_fully_supported_model_has_no_free_dofs(self):
        model = triangle(supports=(Support("A"), Support("B"), Support("C")))
        result = solve(model)
        self.assertEqual(result.u_norm, 0.0)
        self.assertEqual(set(result.axial.values()), {0.0})
        self.assertAlmostEqual(result.reaction_totals()[0], -100.0)

    def test_load_scaling_is_linear(self):
        model = builtin_case("d2")
        base, doubled = solve(model), solve(scale_loads(model, 2.0))
        np.testing.assert_allclose(doubled.u, 2 * base.u, rtol=1e-12, atol=0)


class ModelValidationTests(unittest.TestCase):
    def test_invalid_models(self):
        cases = {
            "duplicate node": {"nodes": (Node("A", 0, 0), Node("A", 1, 0), Node("C", 0, 1))},
            "unknown node": {"elements": (Element("AX", "A", "X"),)},
            "self loop": {"elements": (Element("AA", "A", "A"),)},
            "zero length": {"nodes": (Node("A", 0, 0), Node("B", 0, 0), Node("C", 0, 1))},
            "stiffness": {"elements": (Element("AB", "A", "B", E=0.0),)},
            "duplicate element": {"elements": (Element("AB", "A", "B"), Element("AB", "B", "C"))},
            "no supports": {"supports": ()},
            "double support": {"supports": (Support("A"), Support("A", fix_y=False))},
            "load node": {"loads": (NodalLoad("Z", Fx=1.0),)},
            "no elements": {"elements": ()},
        }
        for label, override in cases.items():
            with self.subTest(case=label):
                with self.assertRaises(ModelError):
                    triangle(**override)

    def test_builtin_cases(self):
        self.assertEqual(builtin_case(" D2 ").name, "d2")
        self.assertEqual(len(builtin_case("unbraced").elements), 4)
        with self.assertRaises(ParseError) as caught:
            builtin_case("asymm")
        self.assertIn("did you mean 'asym'", str(caught.exception))
        with self.assertRaises(ParseError) as caught:
            builtin_case("qqq")
        self.assertNotIn("did you mean", str(caught.exception))


class CompareTests(unittest.TestCase):
    def test_symmetric_versus_asymmetric(self):
        report = compare(builtin_case("d2"), builtin_case("asym"))
        self.assertEqual(report.peak_first[0], "BD")
        self.assertEqual(report.peak_second[0], "BD")
        self.assertAlmostEqual(report.peak_delta_pct, 14, delta=1)
        self.assertAlmostEqual(report.norm_delta_pct, 35, delta=1)
        self.assertEqual([row.element for row in report.rows], ["AB", "BC", "CD", "DA", "AC", "BD"])

    def test_model_against_itself(self):
        model = builtin_case("d2")
        report = compare(model, model)
        self.assertEqual(report.peak_delta_pct, 0.0)
        self.assertEqual(report.norm_delta_pct, 0.0)

    def test_rows_cover_elements_of_both_models(self):
        braced = builtin_case("d2")
        fewer = TrussModel(
            nodes=braced.nodes,
            elements=braced.elements[:5],
            supports=braced.supports,
            loads=braced.loads,
            name="no-bd",
        )
        report = compare(fewer, braced)
        self.assertEqual(report.rows[-1].element, "BD")
        self.assertIsNone(report.rows[-1].first)


class TransformTests(unittest.TestCase):
    def test_mirror_image_carries_the_same_forces(self):
        model = builtin_case("d2")
        mirrored = transform_model(model, reflection2(Axis.Y))
        self.assertEqual(mirrored.node("A").x, 1.0)
        self.assertEqual(mirrored.loads[1], NodalLoad("B", -1000.0, -500.0))
        base, image = solve(model), solve(mirrored)
        for element_id, force in base.axial.items():
            self.assertAlmostEqual(image.axial[element_id], force, delta=1e-9 * 1000)

    def test_partial_supports_follow_axis_permutations(self):
        model = triangle()
        quarter = transform_model(model, rotation2(math.pi / 2), suffix="'")
        self.assertEqual(quarter.supports[1], Support("B'", fix_x=True, fix_y=False))
        self.assertEqual(quarter.notes, ())
        flipped = transform_model(model, reflection2(Axis.X))
        self.assertEqual(flipped.supports[1], Support("B", fix_x=False, fix_y=True))

    def test_partial_supports_become_pins_under_general_rotations(self):
        with self.assertLogs("symtruss.trussfem", level="WARNING"):
            turned = transform_model(triangle(), rotation2(math.pi / 4))
        self.assertEqual(turned.supports[1], Support("B"))
        self.assertEqual(len(turned.notes), 1)
        self.assertIn("converted to a pin", turned.notes[0])

    def test_spatial_isometries_are_rejected(self):
        with self.assertRaises(ModelError):
            transform_model(triangle(), sigma_h())


if __name__ == "__main__":
    unittest.main()
