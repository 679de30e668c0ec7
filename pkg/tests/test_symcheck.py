import math
import unittest

import numpy as np

from symtruss.errors import NoSamples
from symtruss.isometry import Axis, dihedral, rotation2
from symtruss.numcore import Line2, Line3, Plane3
from symtruss.symcheck import (
    Axis2D,
    Axis3D,
    Center,
    ImplicitFigure,
    MirrorPlane,
    PointFigure,
    as_isometry,
    axial_image2,
    axis_image3,
    central_image,
    check_definition,
    image,
    is_invariant,
    is_symmetric,
    plane_image3,
)

ELEMENTS = (
    Center((1.0, -2.0)),
    Center((0.5, 0.0, 3.0)),
    Axis2D(Line2(1.0, -2.0, 0.5)),
    Axis2D(Line2.vertical(-1.5)),
    Axis3D(Line3((1.0, 2.0, 0.0), (0.0, 1.0, 1.0))),
    MirrorPlane(Plane3(1.0, 1.0, -1.0, 2.0)),
)


def sample_point(element):
    dim = 2 if isinstance(element, Axis2D) or (isinstance(element, Center) and len(element.point) == 2) else 3
    return np.array([0.7, -1.3, 2.9][:dim])


class ImageMapTests(unittest.TestCase):
    def test_central_image(self):
        np.testing.assert_array_equal(central_image((2.0, -5.0), (0.0, 0.0)), (-2.0, 5.0))
        np.testing.assert_array_equal(central_image((3.0, 1.0), (1.0, 1.0)), (-1.0, 1.0))
        np.testing.assert_array_equal(central_image((4.0, 4.0), (4.0, 4.0)), (4.0, 4.0))

    def test_axis_parallel_maps(self):
        np.testing.assert_array_equal(axial_image2((2.0, 3.0), Axis.Y), (-2.0, 3.0))
        np.testing.assert_array_equal(axial_image2((2.0, 3.0), Axis.X, offset=1.0), (2.0, -1.0))
        np.testing.assert_array_equal(axis_image3((1.0, 2.0, 3.0), Axis.X), (1.0, -2.0, -3.0))
        np.testing.assert_array_equal(plane_image3((1.0, 2.0, 3.0), Axis.X, offset=-1.0), (-3.0, 2.0, 3.0))
        np.testing.assert_array_equal(plane_image3((-1.0, 7.0, 0.0), Axis.X, offset=-1.0), (-1.0, 7.0, 0.0))

    def test_general_maps_agree_with_axis_parallel_ones(self):
        p = (1.0, 2.0, 3.0)
        np.testing.assert_allclose(image(p, MirrorPlane(Plane3.coordinate(0, -1.0))), plane_image3(p, Axis.X, -1.0))
        through = (0.0, 5.0, -20.0)
        np.testing.assert_allclose(
            image(p, Axis3D(Line3(through, (0.0, 0.0, 1.0)))), axis_image3(p, Axis.Z, through)
        )
        np.testing.assert_allclose(image((2.0, 3.0), Axis2D(Line2.horizontal(1.0))), (2.0, -1.0))

    def test_maps_are_involutions_that_satisfy_the_definition(self):
        for element in ELEMENTS:
            with self.subTest(element=element.describe()):
                p = sample_point(element)
                q = image(p, element)
                np.testing.assert_allclose(image(q, element), p, atol=1e-12)
                self.assertTrue(check_definition(p, q, element).holds)


class DefinitionTests(unittest.TestCase):
    def test_fixed_point_satisfies_both_conditions(self):
        report = check_definition((1.0, 0.0), (1.0, 0.0), Axis2D(Line2.vertical(0.0)))
        self.assertTrue(report.aligned)
        self.assertTrue(report.equidistant)

    def test_non_collinear_pair_fails_central_condition(self):
        report = check_definition((1.0, 2.0), (0.0, 5.0), Center((0.0, 0.0)))
        self.assertFalse(report.aligned)
        self.assertFalse(report.holds)

    def test_wrong_distance_fails_axis_condition(self):
        report = check_definition((1.0, 3.0), (-2.0, 3.0), Axis2D(Line2.vertical(0.0)))
        self.assertTrue(report.aligned)
        self.assertFalse(report.equidistant)


class FigureTests(unittest.TestCase):
    def test_isosceles_triangle_about_y_axis(self):
        triangle = PointFigure(((2.0, 1.0), (-2.0, 1.0), (0.0, 4.0)))
        self.assertTrue(is_symmetric(triangle, Axis2D(Line2.vertical(0.0))))
        self.assertFalse(is_symmetric(triangle, Axis2D(Line2.horizontal(0.0))))
        self.assertFalse(is_symmetric(triangle, Center((0.0, 0.0))))

    def test_unit_circle_has_central_symmetry(self):
        circle = ImplicitFigure(lambda p: p[0] ** 2 + p[1] ** 2 - 1.0)
        angles = np.linspace(0.0, 2 * math.pi, 64, endpoint=False)
        samples = np.column_stack([np.cos(angles), np.sin(angles)])
        self.assertTrue(is_symmetric(circle, Center((0.0, 0.0)), samples))
        self.assertFalse(is_symmetric(circle, Center((0.5, 0.0)), samples))

    def test_paraboloid_has_no_center(self):
        paraboloid = ImplicitFigure(lambda p: p[0] ** 2 + p[1] ** 2 - p[2])
        samples = [(x, y, x * x + y * y) for x in (-1.0, 0.5, 2.0) for y in (-0.5, 1.0)]
        self.assertFalse(is_symmetric(paraboloid, Center((0.0, 0.0, 0.0)), samples))
        self.assertTrue(is_symmetric(paraboloid, Axis3D(Line3((0.0, 0.0, 0.0), (0.0, 0.0, 1.0))), samples))

    def test_implicit_figures_need_member_samples(self):
        circle = ImplicitFigure(lambda p: p[0] ** 2 + p[1] ** 2 - 1.0)
        with self.assertRaises(NoSamples):
            is_symmetric(circle, Center((0.0, 0.0)), [])
        with self.assertRaises(NoSamples):
            is_symmetric(circle, Center((0.0, 0.0)))
        with self.assertRaises(NoSamples):
            is_symmetric(circle, Center((0.0, 0.0)), [(3.0, 3.0)])
        with self.assertRaises(ValueError):
            ImplicitFigure(lambda p: 0.0, membership_tol=0.0)

    def test_square_is_invariant_under_its_elements(self):
        square = PointFigure(((1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)))
        elements = [
            Center((0.0, 0.0)),
            Axis2D(Line2.vertical(0.0)),
            Axis2D(Line2.horizontal(0.0)),
            Axis2D(Line2(1.0, -1.0)),
            Axis2D(Line2(1.0, 1.0)),
        ]
        identity = rotation2(0.0)
        for element in elements:
            with self.subTest(element=element.describe()):
                self.assertTrue(is_symmetric(square, element))
                self.assertTrue(is_invariant(square, [identity, as_isometry(element)]))
        self.assertTrue(is_invariant(square, dihedral(4)))
        self.assertFalse(is_invariant(square, [rotation2(math.pi / 6)]))

    def test_as_isometry_requires_elements_through_the_origin(self):
        with self.assertRaises(ValueError):
            as_isometry(Center((1.0, 0.0)))
        with self.assertRaises(ValueError):
            as_isometry(Axis2D(Line2.vertical(2.0)))
        half_turn = as_isometry(Axis3D(Line3((0.0, 0.0, 0.0), (1.0, 0.0, 0.0))))
        np.testing.assert_allclose(half_turn.apply((1.0, 2.0, 3.0)), (1.0, -2.0, -3.0), atol=1e-15)


if __name__ == "__main__":
    unittest.main()
