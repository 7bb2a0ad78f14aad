"""Text forms of polynomials, ideals and maps.

Grammar (whitespace insignificant)::

    poly := sign? term (('+'|'-') term)*
    term := coeff? ('*'? var ('^' nat)?)*
    var  := name '_' index | name

Integer coefficients are reduced modulo the ring's prime.
"""
import re

from tetra.polyring.exc import ParseError
from tetra.polyring.exc import UnknownVariable
from tetra.polyring.order import MonomialOrder
from tetra.polyring.poly import Polynomial
from tetra.polyring.ring import RingDescriptor


VAR = re.compile(r'[A-Za-z][A-Za-z0-9]*(?:_[0-9]+)?')
NAT = re.compile(r'[0-9]+')


class PolynomialParser(object):

    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.pos = 0

    def error(self, message):
        raise ParseError(message, position=self.pos, text=self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def parse(self):
        p = self.ring.p
        terms = {}
        sign = 1
        if self.peek() in ('+', '-'):
            sign = -1 if self.text[self.pos] == '-' else 1
            self.pos += 1
        while True:
            monomial, coeff = self.term()
            terms[monomial] = (terms.get(monomial, 0) + sign * coeff) % p
            c = self.peek()
            if not c:
                break
            if c not in ('+', '-'):
                self.error("unexpected character %r" % c)
            sign = -1 if c == '-' else 1
            self.pos += 1
        return Polynomial(self.ring, terms)

    def term(self):
        coeff = None
        exponents = [0] * self.ring.nvars
        factors = 0
        if self.peek().isdigit():
            m = NAT.match(self.text, self.pos)
            coeff = int(m.group(0))
            self.pos = m.end()
        while True:
            c = self.peek()
            if c == '*':
                self.pos += 1
                if not self.peek().isalpha():
                    self.error("expected a variable after '*'")
                continue
            if not c.isalpha():
                break
            start = self.pos
            m = VAR.match(self.text, self.pos)
            name = m.group(0)
            self.pos = m.end()
            try:
                i = self.ring.index(name)
            except UnknownVariable:
                self.pos = start
                self.error("unknown variable %r" % name)
            e = 1
            if self.peek() == '^':
                self.pos += 1
                self.skip()
                m = NAT.match(self.text, self.pos)
                if m is None:
                    self.error("malformed exponent")
                e = int(m.group(0))
                self.pos = m.end()
            exponents[i] += e
            factors += 1
        if coeff is None and not factors:
            self.error("expected a term")
        return tuple(exponents), 1 if coeff is None else coeff


def parse_poly(text, ring):
    """Parse `text` into a :class:`Polynomial` of `ring`."""
    return PolynomialParser(text, ring).parse()


def format_monomial(ring, monomial):
    parts = []
    for name, e in zip(ring.variables, monomial):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append('%s^%s' % (name, e))
    return '*'.join(parts)


def format_poly(f, signed=False):
    """Canonical text form: terms in descending order, coefficients
    as least nonnegative residues. With `signed`, coefficients above
    p/2 print as negatives (for human-facing output only).
    """
    if not f.terms:
        return '0'
    p = f.ring.p
    out = []
    for m, c in f.sorted_terms():
        mono = format_monomial(f.ring, m)
        negative = signed and c > p // 2
        if negative:
            c = p - c
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = '%s*%s' % (c, mono)
        if out:
            out.append(('-' if negative else '+') + body)
        else:
            out.append(('-' if negative else '') + body)
    return ''.join(out)


def _content_lines(text):
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if line and not line.startswith('#'):
            yield lineno, line


def parse_ideal_text(text, prime=None):
    """Parse the ideal file format: a ``ring`` header followed by one
    polynomial per line. Returns ``(ring, generators)``.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty ideal document", position=0)
    ring = RingDescriptor.parse_header(lines[0][1], prime=prime)
    gens = []
    for lineno, line in lines[1:]:
        try:
            gens.append(parse_poly(line, ring))
        except ParseError as e:
            raise ParseError("line %s: %s" % (lineno, e), position=e.position, text=line)
    return ring, gens


def format_ideal_text(ring, generators):
    lines = [ring.header()]
    lines.extend(format_poly(f) for f in generators)
    return '\n'.join(lines) + '\n'


def parse_map_text(text, prime=None):
    """Parse a map document: a header
    ``map p=<prime> source=<vars> target=<vars> [order=...]`` and one
    form per target variable, written in the source variables.
    Returns ``(source_ring, target_ring, forms)``.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty map document", position=0)
    header = lines[0][1].split()
    if not header or header[0] != 'map':
        raise ParseError("expected a map header", position=0, text=lines[0][1])
    params = dict(item.partition('=')[::2] for item in header[1:])
    for key in ('source', 'target'):
        if key not in params:
            raise ParseError("map header without %s" % key, position=0, text=lines[0][1])
    prime = prime or int(params.get('p', 0)) or None
    order = MonomialOrder.parse(params.get('order', 'grevlex'))
    source = RingDescriptor(params['source'], prime, order) if prime\
        else RingDescriptor(params['source'], order=order)
    target = RingDescriptor(params['target'], source.prime)
    forms = [parse_poly(line, source) for _, line in lines[1:]]
    if len(forms) != target.nvars:
        raise ParseError("%s forms for %s target variables"
            % (len(forms), target.nvars), position=0)
    return source, target, forms


def read_ideal_file(path, prime=None):
    with open(path, 'r') as f:
        return parse_ideal_text(f.read(), prime=prime)


def write_ideal_file(path, ring, generators):
    with open(path, 'w') as f:
        f.write(format_ideal_text(ring, generators))


def read_map_file(path, prime=None):
    with open(path, 'r') as f:
        return parse_map_text(f.read(), prime=prime)
