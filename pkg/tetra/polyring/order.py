"""Monomial orders.

Every order is represented by a sort key: a flat tuple of integers
such that a larger key means a larger monomial. Keys are memoized per
order instance, since the Gröbner engine compares the same exponent
vectors many times.
"""
from tetra.polyring.exc import LengthMismatch


LT = -1
EQ = 0
GT = 1

MAX_CACHE = 1 << 20


class MonomialOrder(object):
    """A monomial order of one of the kinds ``grevlex``, ``lex``,
    ``weighted`` (graded by one or more weight rows, ties broken by
    grevlex) or ``elim`` (block elimination: grevlex on the first
    `block` variables, ties broken by grevlex on the rest).
    """
    kinds = ('grevlex', 'lex', 'weighted', 'elim')

    def __init__(self, kind='grevlex', block=None, weights=None):
        assert kind in self.kinds, kind
        if kind == 'elim':
            assert block is not None and block >= 0
        if kind == 'weighted':
            weights = tuple(tuple(int(w) for w in row) for row in weights)
            assert weights and all(w > 0 for w in weights[0]),\
                "the first weight row must be positive"
        self.kind = kind
        self.block = block
        self.weights = weights
        self._keys = {}
        self._key = getattr(self, '_key_' + kind)

    @classmethod
    def grevlex(cls):
        return GREVLEX

    @classmethod
    def lex(cls):
        return LEX

    @classmethod
    def elimination(cls, block):
        return cls('elim', block=block)

    @classmethod
    def weighted(cls, rows):
        if rows and isinstance(rows[0], int):
            rows = [rows]
        return cls('weighted', weights=rows)

    @classmethod
    def parse(cls, text):
        """Parse ``grevlex``, ``lex``, ``elim:k`` or
        ``weighted:1,1,1|1,0,0``.
        """
        text = text.strip()
        if text in ('grevlex', 'lex'):
            return cls(text)
        kind, _, arg = text.partition(':')
        if kind == 'elim' and arg.isdigit():
            return cls.elimination(int(arg))
        if kind == 'weighted' and arg:
            return cls.weighted([[int(x) for x in row.split(',')]
                for row in arg.split('|')])
        raise ValueError("unknown monomial order: %r" % text)

    @staticmethod
    def _grevlex(m):
        return (sum(m),) + tuple(-e for e in reversed(m))

    def _key_grevlex(self, m):
        return self._grevlex(m)

    def _key_lex(self, m):
        return tuple(m)

    def _key_elim(self, m):
        k = self.block
        return self._grevlex(m[:k]) + self._grevlex(m[k:])

    def _key_weighted(self, m):
        return tuple(sum(w * e for w, e in zip(row, m)) for row in self.weights)\
            + self._grevlex(m)

    def key(self, m):
        """Return the sort key of the exponent vector `m`."""
        try:
            return self._keys[m]
        except KeyError:
            if len(self._keys) > MAX_CACHE:
                self._keys.clear()
            k = self._keys[m] = self._key(m)
            return k

    def compare(self, a, b):
        if len(a) != len(b):
            raise LengthMismatch("%s and %s differ in length" % (a, b))
        if self.kind == 'weighted' and len(self.weights[0]) != len(a):
            raise LengthMismatch("weight rows do not match %s" % (a,))
        ka, kb = self.key(tuple(a)), self.key(tuple(b))
        return GT if ka > kb else (LT if ka < kb else EQ)

    def is_graded(self):
        """True if the order refines total degree."""
        if self.kind == 'grevlex':
            return True
        if self.kind == 'weighted':
            return len(set(self.weights[0])) == 1
        if self.kind == 'elim':
            return self.block == 0
        return False

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.kind == other.kind\
            and self.block == other.block and self.weights == other.weights

    def __hash__(self):
        return hash((self.kind, self.block, self.weights))

    def __str__(self):
        if self.kind == 'elim':
            return 'elim:%s' % self.block
        if self.kind == 'weighted':
            return 'weighted:' + '|'.join(','.join(map(str, r)) for r in self.weights)
        return self.kind

    def __repr__(self):
        return "MonomialOrder(%s)" % self


GREVLEX = MonomialOrder('grevlex')
LEX = MonomialOrder('lex')


def compare_monomials(order, a, b):
    """Compare exponent vectors `a` and `b` under `order`, returning
    :data:`LT`, :data:`EQ` or :data:`GT`.
    """
    return order.compare(a, b)
