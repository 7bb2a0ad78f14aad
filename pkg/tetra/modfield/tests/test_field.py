import unittest

import numpy as np

from tetra.modfield import Field
from tetra.modfield import FieldScalar
from tetra.modfield import inv
from tetra.modfield import get_field
from tetra.modfield.exc import DivisionByZero
from tetra.modfield.exc import FieldMismatch
from tetra.modfield.exc import InvalidModulus


P = 10000019


class InverseTestCase(unittest.TestCase):

    def test_inverse_of_one(self):
        self.assertEqual(inv(FieldScalar(1, P)), FieldScalar(1, P))

    def test_inverse_of_minus_one(self):
        self.assertEqual(inv(FieldScalar(P - 1, P)).value, P - 1)

    def test_inverse_of_two(self):
        self.assertEqual(inv(FieldScalar(2, P)).value, 5000010)

    def test_inverse_of_zero_raises(self):
        with self.assertRaises(DivisionByZero):
            inv(FieldScalar(0, P))

    def test_division_by_zero_is_zero_division_error(self):
        with self.assertRaises(ZeroDivisionError):
            FieldScalar(3, P) / 0

    def test_random_inverse_properties(self):
        rng = np.random.default_rng(11)
        F = get_field(P)
        for _ in range(200):
            a = F.random(rng, nonzero=True)
            b = F.random(rng, nonzero=True)
            self.assertEqual(a * inv(a), 1)
            self.assertEqual(inv(a * b), inv(b) * inv(a))
            self.assertEqual(inv(inv(a)), a)


class FieldScalarTestCase(unittest.TestCase):

    def test_value_is_reduced(self):
        self.assertEqual(FieldScalar(-1, 7).value, 6)
        self.assertEqual(FieldScalar(15, 7).value, 1)

    def test_arithmetic_with_integers(self):
        a = FieldScalar(5, 7)
        self.assertEqual(a + 3, 1)
        self.assertEqual(3 - a, 5)
        self.assertEqual(a * 3, 1)
        self.assertEqual(a / 5, 1)
        self.assertEqual(a ** -1, 3)
        self.assertEqual(-a, 2)

    def test_mixing_moduli_raises(self):
        with self.assertRaises(FieldMismatch):
            FieldScalar(1, 7) + FieldScalar(1, 11)

    def test_immutable(self):
        a = FieldScalar(1, 7)
        with self.assertRaises(AttributeError):
            a.value = 3

    def test_signed_representative(self):
        self.assertEqual(FieldScalar(6, 7).signed(), -1)
        self.assertEqual(FieldScalar(3, 7).signed(), 3)

    def test_hash_agrees_with_reduced_integers(self):
        a = FieldScalar(5, P)
        self.assertEqual(a, 5)
        self.assertEqual(hash(a), hash(5))
        self.assertIn(5, {a})
        self.assertEqual({a: 'five'}[5], 'five')
        self.assertEqual({5: 'five'}[FieldScalar(P + 5, P)], 'five')


class FieldTestCase(unittest.TestCase):

    def test_rejects_composite_modulus(self):
        with self.assertRaises(InvalidModulus):
            Field(10000020)

    def test_rejects_characteristic_two(self):
        with self.assertRaises(InvalidModulus):
            Field(2)

    def test_get_field_is_shared(self):
        self.assertIs(get_field(65537), get_field(65537))


if __name__ == '__main__':
    unittest.main()
