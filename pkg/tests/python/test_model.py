import math
import unittest

import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from torus_cones.errors import ModelParameterError, NormalizationError
from torus_cones.geometry.holonomy import knot_generators, link_generators
from torus_cones.geometry.model import (
    Isometry,
    ModelParameter,
    ModelPoint,
    as_parameter,
    distance,
    embed,
    gram_det,
    hermitian_product,
    inner_product,
    is_isometry,
    lambda_norm,
    normalize,
)

lambdas = st.floats(min_value=-0.95, max_value=0.95)
coordinates = st.floats(min_value=-2.0, max_value=2.0)
angles = st.floats(min_value=0.01, max_value=2 * math.pi - 0.01)


@st.composite
def unit_points(draw, lam):
    z1 = complex(draw(coordinates), draw(coordinates))
    z2 = complex(draw(coordinates), draw(coordinates))
    point = ModelPoint(z1, z2)
    assume(lambda_norm(point, lam) > 1e-3)
    return normalize(point, lam)


P1 = ModelPoint(1 + 0j, 0j)
P2 = ModelPoint(0j, 1 + 0j)


class TestModelParameter(unittest.TestCase):

    def test_rejects_degenerate_lambda(self):
        for lam in (1.0, -1.0, 1.5, 1.0 - 1e-13):
            with self.assertRaises(ModelParameterError):
                ModelParameter(lam)

    def test_guard_override(self):
        with self.assertRaises(ModelParameterError) as context:
            ModelParameter(0.95, guard=0.1)
        self.assertIn("1 - 0.1", str(context.exception))
        self.assertEqual(ModelParameter(0.95).guard, 1e-12)
        self.assertEqual(ModelParameter(0.5, guard=0.1), ModelParameter(0.5))
        with self.assertRaises(ModelParameterError):
            as_parameter(0.95, {"lambda_guard": 0.1})
        self.assertEqual(as_parameter(0.95, {}).lam, 0.95)

    def test_forced_parameter_allows_indefinite_form(self):
        lam = ModelParameter(1.3, strict=False)
        self.assertFalse(lam.definite)
        with self.assertRaises(ModelParameterError):
            embed(P1, lam)


class TestProducts(unittest.TestCase):

    def test_hermitian_product(self):
        self.assertAlmostEqual(hermitian_product(P1, P2, 0.5), 0.5)
        self.assertAlmostEqual(hermitian_product(P1, P1, 0.7), 1.0)
        product = hermitian_product(ModelPoint(1j, 0j), P2, 0.3)
        self.assertAlmostEqual(product.real, 0.0)
        self.assertAlmostEqual(product.imag, 0.3)

    def test_inner_product(self):
        self.assertAlmostEqual(inner_product(ModelPoint(1j, 0j), P2, 0.3), 0.0)
        self.assertAlmostEqual(inner_product(P1, P2, 0.5), 0.5)

    @given(st.data(), lambdas)
    @settings(max_examples=50, deadline=None)
    def test_inner_product_symmetric(self, data, lam):
        p = data.draw(unit_points(lam))
        q = data.draw(unit_points(lam))
        self.assertAlmostEqual(inner_product(p, q, lam), inner_product(q, p, lam), places=12)
        self.assertAlmostEqual(inner_product(p, p, lam), 1.0, places=12)


class TestDistance(unittest.TestCase):

    def test_distance_examples(self):
        for lam in (-0.4, 0.0, 0.5, 0.9):
            self.assertAlmostEqual(distance(P1, P2, lam), math.acos(lam), places=12)
        self.assertEqual(distance(P1, P1, 0.3), 0.0)
        self.assertAlmostEqual(distance(P1, ModelPoint(-1 + 0j, 0j), 0.5), math.pi)

    def test_distance_rejects_unnormalized(self):
        with self.assertRaises(NormalizationError):
            distance(ModelPoint(2 + 0j, 0j), P1, 0.5)

    @given(st.data(), lambdas)
    @settings(max_examples=50, deadline=None)
    def test_distance_symmetric_and_bounded(self, data, lam):
        p = data.draw(unit_points(lam))
        q = data.draw(unit_points(lam))
        d = distance(p, q, lam)
        self.assertAlmostEqual(d, distance(q, p, lam), places=12)
        self.assertTrue(0.0 <= d <= math.pi)


class TestIsometry(unittest.TestCase):

    def test_identity(self):
        check = is_isometry(Isometry.identity(), 0.4)
        self.assertTrue(check)
        self.assertEqual(check.residual, 0.0)

    def test_scaling_is_not_isometry(self):
        check = is_isometry(Isometry(2 + 0j, 0j, 0j, 1 + 0j), 0.4)
        self.assertFalse(check)
        self.assertGreater(check.residual, 1.0)

    @given(angles, lambdas, st.data())
    @settings(max_examples=50, deadline=None)
    def test_generators_preserve_inner_product(self, alpha, lam, data):
        pair = knot_generators(alpha, lam)
        self.assertTrue(is_isometry(pair.A, lam, 1e-12))
        self.assertTrue(is_isometry(pair.B, lam, 1e-12))
        p = data.draw(unit_points(lam))
        q = data.draw(unit_points(lam))
        for m in (pair.A, pair.B, pair.A @ pair.B):
            self.assertLessEqual(abs(inner_product(p @ m, q @ m, lam) - inner_product(p, q, lam)), 1e-12)

    def test_link_generators_are_isometries(self):
        pair = link_generators(1.3, 2.9, 0.6)
        self.assertTrue(is_isometry(pair.A, 0.6, 1e-12))
        self.assertTrue(is_isometry(pair.B, 0.6, 1e-12))


class TestEmbedding(unittest.TestCase):

    def test_embed_example(self):
        image = embed(P1, 0.0)
        self.assertAlmostEqual(image.xi1, math.sqrt(0.5))
        self.assertAlmostEqual(image.xi2, math.sqrt(0.5))

    def test_embed_distance_example(self):
        self.assertAlmostEqual(distance(P1, P2, 0.5), math.pi / 3)
        self.assertAlmostEqual(embed(P1, 0.5).angle_to(embed(P2, 0.5)), math.pi / 3)

    @given(st.data(), lambdas)
    @settings(max_examples=50, deadline=None)
    def test_embedding_is_isometric(self, data, lam):
        p = data.draw(unit_points(lam))
        q = data.draw(unit_points(lam))
        ep, eq = embed(p, lam), embed(q, lam)
        self.assertAlmostEqual(np.linalg.norm(ep.vector), 1.0, places=12)
        self.assertAlmostEqual(float(np.dot(ep.vector, eq.vector)), inner_product(p, q, lam), places=12)


class TestGramDet(unittest.TestCase):

    def test_identity_rows(self):
        self.assertAlmostEqual(gram_det(P1, ModelPoint(1j, 0j), P2, ModelPoint(0j, 1j)), 1.0)

    def test_repeated_point(self):
        q = ModelPoint(0.3 + 0.1j, -0.2j)
        self.assertEqual(gram_det(P1, q, q, P2), 0.0)

    def test_antisymmetric(self):
        a, b, c, d = P1, ModelPoint(1j, 0j), P2, ModelPoint(0j, 1j)
        self.assertAlmostEqual(gram_det(a, c, b, d), -gram_det(a, b, c, d))
        points = [ModelPoint(0.2 + 0.3j, 0.7 - 0.1j), ModelPoint(-0.5j, 0.4), ModelPoint(0.9, 0.1j), ModelPoint(0.1 + 0.1j, -0.6)]
        value = gram_det(*points)
        for i in range(4):
            for j in range(i + 1, 4):
                swapped = list(points)
                swapped[i], swapped[j] = swapped[j], swapped[i]
                self.assertAlmostEqual(gram_det(*swapped), -value, places=12)


class TestNormalize(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(normalize(ModelPoint(2 + 0j, 0j), 0.4), P1)
        point = normalize(ModelPoint(1 + 0j, 1 + 0j), 0.0)
        self.assertAlmostEqual(point.z1, 1 / math.sqrt(2))
        self.assertAlmostEqual(point.z2, 1 / math.sqrt(2))

    def test_idempotent(self):
        point = normalize(ModelPoint(0.3 + 0.4j, -1.2j), 0.6)
        again = normalize(point, 0.6)
        self.assertLess(point.distance_to(again), 1e-14)

    def test_zero_norm(self):
        with self.assertRaises(NormalizationError):
            normalize(ModelPoint(0j, 0j), 0.5)


if __name__ == '__main__':
    unittest.main()
