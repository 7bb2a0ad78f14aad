import unittest

import numpy as np

from tetra.polyring import EQ, GT, LT
from tetra.polyring import GREVLEX
from tetra.polyring import LEX
from tetra.polyring import MonomialOrder
from tetra.polyring import compare_monomials
from tetra.polyring.exc import LengthMismatch
from tetra.polyring.poly import monomial_mul
from tetra.polyring.tests.base import random_exponent


ORDERS = [
    GREVLEX,
    LEX,
    MonomialOrder.elimination(2),
    MonomialOrder.weighted([[1, 1, 1, 1], [1, 0, 0, 0]]),
]


class CompareMonomialsTestCase(unittest.TestCase):

    def test_grevlex_square_beats_mixed(self):
        self.assertEqual(compare_monomials(GREVLEX, (2, 0, 0), (1, 1, 0)), GT)

    def test_grevlex_breaks_ties_on_last_variable(self):
        # x*z < y^2: the last nonzero entry of the difference is negative
        self.assertEqual(compare_monomials(GREVLEX, (1, 0, 1), (0, 2, 0)), LT)

    def test_lex(self):
        self.assertEqual(compare_monomials(LEX, (1, 0), (0, 2)), GT)

    def test_elimination_block_dominates(self):
        order = MonomialOrder.elimination(1)
        self.assertEqual(compare_monomials(order, (0, 5), (1, 0)), LT)
        self.assertEqual(compare_monomials(order, (1, 0), (0, 5)), GT)

    def test_equal(self):
        for order in ORDERS:
            self.assertEqual(compare_monomials(order, (1, 2, 0, 1), (1, 2, 0, 1)), EQ)

    def test_length_mismatch(self):
        with self.assertRaises(LengthMismatch):
            compare_monomials(GREVLEX, (1, 0), (1, 0, 0))
        with self.assertRaises(LengthMismatch):
            compare_monomials(MonomialOrder.weighted([1, 1]), (1, 0, 0), (0, 0, 1))

    def test_parse(self):
        self.assertEqual(MonomialOrder.parse('grevlex'), GREVLEX)
        self.assertEqual(MonomialOrder.parse('elim:3'), MonomialOrder.elimination(3))
        self.assertEqual(str(MonomialOrder.parse('weighted:1,1|1,0')), 'weighted:1,1|1,0')
        with self.assertRaises(ValueError):
            MonomialOrder.parse('revlex')


class OrderAxiomsTestCase(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(11)

    def test_total_and_antisymmetric(self):
        for order in ORDERS:
            for _ in range(200):
                a = random_exponent(self.rng, 4, 5)
                b = random_exponent(self.rng, 4, 5)
                ab, ba = compare_monomials(order, a, b), compare_monomials(order, b, a)
                self.assertEqual(ab, -ba)
                self.assertEqual(ab == EQ, a == b)

    def test_multiplicative(self):
        for order in ORDERS:
            for _ in range(200):
                a, b, c = (random_exponent(self.rng, 4, 4) for _ in range(3))
                self.assertEqual(compare_monomials(order, a, b),
                    compare_monomials(order, monomial_mul(a, c), monomial_mul(b, c)))

    def test_one_is_minimal(self):
        one = (0, 0, 0, 0)
        for order in ORDERS:
            for _ in range(100):
                a = random_exponent(self.rng, 4, 4)
                if any(a):
                    self.assertEqual(compare_monomials(order, a, one), GT)

    def test_transitive(self):
        for order in ORDERS:
            for _ in range(200):
                a, b, c = sorted((random_exponent(self.rng, 4, 4) for _ in range(3)),
                    key=order.key)
                self.assertNotEqual(compare_monomials(order, a, b), GT)
                self.assertNotEqual(compare_monomials(order, b, c), GT)
                self.assertNotEqual(compare_monomials(order, a, c), GT)
