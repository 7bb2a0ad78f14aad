import unittest

from tetra.polyring import RingDescriptor
from tetra.polyring import format_poly
from tetra.polyring import parse_ideal_text
from tetra.polyring import parse_map_text
from tetra.polyring import parse_poly
from tetra.polyring.exc import ParseError
from tetra.polyring.exc import RingMismatch
from tetra.polyring.exc import UnknownVariable
from tetra.polyring.tests.base import P


SEXTIC_FAMILY = (
    "l_0*s_0*s_1^3*s_2*s_3+l_1*s_0^2*s_1^2*s_2^2+l_2*s_0^2*s_1^2*s_2*s_3+"
    "l_3*s_0^2*s_1^2*s_3^2+l_4*s_0^3*s_1*s_2*s_3+l_5*s_0*s_1^2*s_2^2*s_3+"
    "l_6*s_0*s_1^2*s_2*s_3^2+l_7*s_0^2*s_1*s_2^2*s_3+l_8*s_0^2*s_1*s_2*s_3^2+"
    "l_9*s_1^2*s_2^2*s_3^2+l_10*s_0*s_1*s_2^3*s_3+l_11*s_0*s_1*s_2^2*s_3^2+"
    "l_12*s_0*s_1*s_2*s_3^3+l_13*s_0^2*s_2^2*s_3^2")

CORPUS = [
    ('x_0,x_1,y_0,y_1,z_0,z_1', 'x_0^2*y_0^2*z_0^2'),
    ('x_0,x_1,y_0,y_1,z_0,z_1', 'x_0*x_1*y_0*y_1*z_1^2'),
    ('w_0..w_13', 'w_10*w_12-w_9*w_13'),
    ('w_0..w_13', 'w_11^2-w_9*w_13'),
    ('w_0..w_13', 'w_2^2-w_0*w_4'),
    ('t_0..t_5', 't_1*t_4-t_0*t_5'),
    ('s_0..s_3', 's_0+s_3'),
    ('s_0..s_3', 's_2+s_3'),
    ('s_0..s_3', 's_1-s_2'),
    ('l_0..l_13,s_0..s_3', SEXTIC_FAMILY),
    ('l_10..l_13,s_0..s_3', 'l_10-l_11+l_12-l_13'),
    ('l_10..l_13,s_0..s_3', '-2*l_10+l_11+2*l_13'),
    ('l_10..l_13,s_0..s_2', 'l_13*s_1^3-l_10*s_0^2*s_2+2*l_10*s_0*s_1*s_2-l_11*s_0*s_1*s_2'),
]


class ParsePolyTestCase(unittest.TestCase):

    def test_binomial(self):
        ring = RingDescriptor('s_0..s_3', P)
        f = parse_poly('s_0+s_3', ring)
        self.assertEqual(len(f), 2)
        self.assertEqual(set(f.terms.values()), {1})

    def test_generator_of_q_under_renaming(self):
        s = RingDescriptor('s_0..s_5', P)
        t = RingDescriptor('t_0..t_5', P)
        f = parse_poly('s_2*s_3 - s_0*s_5', s)
        renamed = f.relabel(s.rename({'s_%s' % i: 't_%s' % i for i in range(6)}))
        self.assertEqual(renamed, parse_poly('t_2*t_3-t_0*t_5', t))
        self.assertEqual(f.identify(t), renamed)
        with self.assertRaises(UnknownVariable):
            f.set_ring(t)

    def test_relabel_needs_the_same_size(self):
        f = parse_poly('x*y', RingDescriptor('x,y', P))
        with self.assertRaises(RingMismatch):
            f.relabel(RingDescriptor('a,b,c', P))

    def test_identify_prefers_names(self):
        f = parse_poly('y^2', RingDescriptor('x,y', P))
        other = RingDescriptor('y,x', P)
        self.assertEqual(f.identify(other), parse_poly('y^2', other))

    def test_negative_exponent_is_rejected(self):
        ring = RingDescriptor('x', P)
        with self.assertRaises(ParseError) as ctx:
            parse_poly('x^(-1)', ring)
        self.assertEqual(ctx.exception.position, 2)

    def test_unknown_variable_position(self):
        ring = RingDescriptor('x,y', P)
        with self.assertRaises(ParseError) as ctx:
            parse_poly('x + 3*z', ring)
        self.assertEqual(ctx.exception.position, 6)

    def test_coefficients_are_reduced(self):
        ring = RingDescriptor('x', P)
        self.assertEqual(parse_poly('%s*x + 1' % (P + 2), ring), parse_poly('2*x+1', ring))
        self.assertTrue(parse_poly('%s*x' % P, ring).is_zero())

    def test_juxtaposed_variables(self):
        ring = RingDescriptor('w_0..w_13', P)
        self.assertEqual(parse_poly('w_10w_12-w_9w_13', ring),
            parse_poly('w_10*w_12-w_9*w_13', ring))

    def test_round_trip(self):
        for variables, text in CORPUS:
            ring = RingDescriptor(variables, P)
            f = parse_poly(text, ring)
            self.assertEqual(parse_poly(format_poly(f), ring), f)
            self.assertEqual(parse_poly(format_poly(f, signed=True), ring), f)

    def test_canonical_printing(self):
        ring = RingDescriptor('x,y', P)
        self.assertEqual(format_poly(parse_poly('y - x^2 + 3', ring)), '10000018*x^2+y+3')
        self.assertEqual(format_poly(parse_poly('y - x^2', ring), signed=True), '-x^2+y')
        self.assertEqual(format_poly(ring.zero()), '0')


class DocumentTestCase(unittest.TestCase):

    def test_ideal_document(self):
        ring, gens = parse_ideal_text(
            "# the quadric Q\n"
            "ring p=10000019 vars=t_0..t_5 order=grevlex\n"
            "t_1*t_4-t_0*t_5\n"
            "\n"
            "t_2*t_3-t_0*t_5\n")
        self.assertEqual(ring.variables, tuple('t_%s' % i for i in range(6)))
        self.assertEqual(len(gens), 2)

    def test_prime_override(self):
        ring, _ = parse_ideal_text("ring p=10000019 vars=x,y\nx-y\n", prime=101)
        self.assertEqual(ring.prime, 101)

    def test_map_document(self):
        source, target, forms = parse_map_text(
            "map p=10000019 source=s_0..s_3 target=t_0..t_5\n"
            "s_0*s_1\ns_1*s_2\ns_1*s_3\ns_0*s_2\ns_0*s_3\ns_2*s_3\n")
        self.assertEqual(source.nvars, 4)
        self.assertEqual(target.nvars, 6)
        self.assertTrue(all(f.degree() == 2 for f in forms))

    def test_map_document_form_count(self):
        with self.assertRaises(ParseError):
            parse_map_text("map source=x,y target=a,b\nx\n")

    def test_bad_line_reports_line_number(self):
        with self.assertRaises(ParseError) as ctx:
            parse_ideal_text("ring vars=x,y\nx+\n")
        self.assertIn('line 2', str(ctx.exception))
