import cmath
import math
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from torus_cones.errors import DomainError, NotRotationError
from torus_cones.geometry.cones import LinkCone, knot_lambda, knot_root_lambdas, link_lambda
from torus_cones.geometry.holonomy import (
    calibrate_link_factor_matrix,
    knot_generators,
    knot_relation_residual,
    lemma2_factorization_check,
    lemma3_factorization_check,
    link_factor_matrix,
    link_generators,
    link_prefactor,
    link_prefactor_gap,
    link_relation_residual,
    orbifold_relation_residual,
    power_AB_closed_form,
    rotation_angle,
    swap_isometry,
)
from torus_cones.geometry.model import Isometry, ModelPoint
from torus_cones.reports.suites import rhombus_point

PI = math.pi
angles = st.floats(min_value=0.01, max_value=2 * PI - 0.01)
lambdas = st.floats(min_value=-0.95, max_value=0.95)


class TestGenerators(unittest.TestCase):

    def test_trefoil_generators(self):
        pair = knot_generators(PI, 0.5)
        expected_A = np.array([[1, 0], [1, -1]], dtype=complex)
        expected_B = np.array([[-1, 1], [0, 1]], dtype=complex)
        self.assertLess(np.max(np.abs(pair.A.matrix - expected_A)), 1e-15)
        self.assertLess(np.max(np.abs(pair.B.matrix - expected_B)), 1e-15)
        self.assertEqual(pair.cone_angles, (PI,))

    def test_determinants(self):
        pair = link_generators(1.3, 4.1, 0.4)
        det_A = np.linalg.det(pair.A.matrix)
        det_B = np.linalg.det(pair.B.matrix)
        self.assertAlmostEqual(det_A, cmath.exp(1.3j), places=14)
        self.assertAlmostEqual(det_B, cmath.exp(4.1j), places=14)

    def test_fixed_points(self):
        pair = link_generators(2.2, 3.7, -0.3)
        p1, p2 = ModelPoint(1 + 0j, 0j), ModelPoint(0j, 1 + 0j)
        self.assertEqual((p1 @ pair.A).distance_to(p1), 0.0)
        self.assertEqual((p2 @ pair.B).distance_to(p2), 0.0)

    def test_rejects_angle(self):
        for alpha in (0.0, 2 * PI, -1.0, math.nan):
            with self.assertRaises(DomainError):
                knot_generators(alpha, 0.3)
        with self.assertRaises(DomainError):
            link_generators(1.0, 7.0, 0.3)

    @given(angles, lambdas)
    @settings(max_examples=50, deadline=None)
    def test_swap_conjugates_generators(self, alpha, lam):
        pair = knot_generators(alpha, lam)
        c = swap_isometry()
        self.assertLess((c @ pair.A @ c).distance_to(pair.B), 1e-15)
        self.assertLess((c @ c).distance_to(Isometry.identity()), 1e-15)


class TestRotationAngle(unittest.TestCase):

    @given(angles, lambdas)
    @settings(max_examples=50, deadline=None)
    def test_generator_angles(self, alpha, lam):
        pair = link_generators(alpha, 2 * PI - alpha, lam)
        self.assertAlmostEqual(rotation_angle(pair.A), alpha, delta=1e-9)
        self.assertAlmostEqual(rotation_angle(pair.B), 2 * PI - alpha, delta=1e-9)

    def test_identity_is_not_a_rotation(self):
        with self.assertRaises(NotRotationError):
            rotation_angle(Isometry.identity())

    def test_scaling_is_not_a_rotation(self):
        with self.assertRaises(NotRotationError):
            rotation_angle(Isometry(2 + 0j, 0j, 0j, 3 + 0j))


class TestKnotRelation(unittest.TestCase):

    def test_relation_holds_at_selected_lambda(self):
        for n in range(1, 6):
            for alpha in (0.95 * PI, PI, 1.05 * PI):
                pair = knot_generators(alpha, knot_lambda(n, alpha))
                self.assertLessEqual(knot_relation_residual(pair, n), 1e-10)

    def test_relation_holds_at_every_admissible_root(self):
        for choice in knot_root_lambdas(3, PI):
            pair = knot_generators(PI, choice.value)
            self.assertLessEqual(knot_relation_residual(pair, 3), 1e-10)

    def test_relation_fails_off_roots(self):
        pair = knot_generators(PI, 0.9)
        self.assertGreater(knot_relation_residual(pair, 1), 0.1)

    @given(st.integers(min_value=1, max_value=6), angles, lambdas)
    @settings(max_examples=200, deadline=None)
    def test_factorization(self, n, alpha, lam):
        self.assertLessEqual(lemma2_factorization_check(n, alpha, lam), 1e-9)

    def test_power_closed_form(self):
        for n in range(1, 5):
            for alpha in (0.97 * PI, PI, 1.1 * PI):
                pair = knot_generators(alpha, knot_lambda(n, alpha))
                word = pair.A @ pair.B
                for k in range(0, 2 * n + 3):
                    closed = power_AB_closed_form(k, n, alpha)
                    self.assertLessEqual(closed.distance_to(word.power(k)), 1e-10)

    def test_power_closed_form_trefoil(self):
        expected = np.array([[-1, 1], [-1, 0]], dtype=complex)
        self.assertLess(np.max(np.abs(power_AB_closed_form(1, 1, PI).matrix - expected)), 1e-14)

    def test_power_closed_form_domain(self):
        with self.assertRaises(DomainError):
            power_AB_closed_form(1, 1, 0.2)


class TestLinkRelation(unittest.TestCase):

    def test_relation_holds_at_selected_lambda(self):
        for n in range(2, 6):
            for u, v in ((0.0, 0.0), (0.3, -0.5), (-0.6, 0.7)):
                alpha, beta = rhombus_point(n, u, v)
                pair = link_generators(alpha, beta, link_lambda(n, alpha, beta))
                self.assertLessEqual(link_relation_residual(pair, n), 1e-10)

    def test_relation_fails_off_roots(self):
        pair = link_generators(PI, PI, 0.3)
        self.assertGreater(link_relation_residual(pair, 2), 0.01)

    def test_abelian_image(self):
        for n in range(2, 6):
            for alpha, beta in ((PI, PI), (0.4, 5.1), (2.2, 1.3)):
                pair = link_generators(alpha, beta, 0.0)
                self.assertEqual(link_relation_residual(pair, n), 0.0)
                self.assertEqual(lemma3_factorization_check(n, alpha, beta, 0.0), 0.0)

    @given(st.integers(min_value=2, max_value=6), angles, angles, lambdas)
    @settings(max_examples=200, deadline=None)
    def test_factorization(self, n, alpha, beta, lam):
        self.assertLessEqual(lemma3_factorization_check(n, alpha, beta, lam), 1e-9)
        self.assertLessEqual(link_prefactor_gap(n, alpha, beta, lam), 1e-8)

    def test_calibrated_factor_matches_closed_form(self):
        for n in range(2, 6):
            factor = calibrate_link_factor_matrix(n, 1.2, 2.9, 0.45)
            self.assertLess(np.max(np.abs(factor - link_factor_matrix(n, 0.45))), 1e-8)
            self.assertLessEqual(lemma3_factorization_check(n, 1.2, 2.9, 0.45, factor), 1e-9)

    def test_calibration_at_vanishing_prefactor(self):
        self.assertEqual(link_prefactor(3, 1.2, 2.9, 0.0), 0.0)
        with self.assertRaises(ZeroDivisionError):
            calibrate_link_factor_matrix(3, 1.2, 2.9, 0.0)


class TestOrbifoldRelations(unittest.TestCase):

    def test_knot_orbifolds(self):
        for n, m in ((1, 2), (1, 3), (1, 5), (2, 3), (3, 2)):
            alpha = 2 * PI / m
            pair = knot_generators(alpha, knot_lambda(n, alpha))
            self.assertLessEqual(orbifold_relation_residual(pair, m), 1e-12)
            self.assertLessEqual(knot_relation_residual(pair, n), 1e-10)
        pair = knot_generators(2 * PI / 5, knot_lambda(1, 2 * PI / 5))
        self.assertGreater(orbifold_relation_residual(pair, 4), 0.1)

    def test_link_orbifolds(self):
        cone = LinkCone(2, PI, PI)
        m1, m2 = cone.orbifold_orders
        pair = link_generators(PI, PI, link_lambda(2, PI, PI))
        self.assertLessEqual(orbifold_relation_residual(pair, m1, m2), 1e-12)
        alpha, beta = 2 * PI / 3, PI
        pair = link_generators(alpha, beta, link_lambda(3, alpha, beta))
        self.assertLessEqual(orbifold_relation_residual(pair, 3, 2), 1e-12)
        self.assertGreater(orbifold_relation_residual(pair, 2), 0.1)

    @given(st.integers(min_value=2, max_value=12), lambdas)
    @settings(max_examples=100, deadline=None)
    def test_any_lambda(self, m, lam):
        pair = knot_generators(2 * PI / m, lam)
        self.assertLessEqual(orbifold_relation_residual(pair, m), 1e-12)

    def test_non_orbifold_angle(self):
        pair = knot_generators(1.1 * PI, knot_lambda(1, 1.1 * PI))
        self.assertGreater(orbifold_relation_residual(pair, 2), 0.1)


if __name__ == '__main__':
    unittest.main()
