# Copyright (c) 2016 The canbas developers.
#
# This file is part of canbas.
#
# canbas is free software: you can redistribute it and/or modify it under
# the terms of the GNU General Public License as published by the Free Software
# Foundation; either version 3 of the License, or (at your option) any later
# version.
# This program is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE. See the GNU General Public License for more
# details.
# You should have received a copy of the GNU General Public License along with
# this program. If not, see <http://www.gnu.org/licenses/>.

class Error (Exception): pass

ZERO_CLASS = 'zero'
ONE_CLASS = 'one'
IN_QZQ_CLASS = 'in_qZq'
BAR_SYMMETRIC_CLASS = 'bar_symmetric'
OTHER_CLASS = 'other'


class LaurentPoly:
    '''Element of Z[q,q^-1], stored as exponent -> nonzero integer coefficient.
       Treat as immutable: every operation returns a new polynomial.'''
    __slots__ = ('terms', '_hash')

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {int(e): int(c) for e, c in terms.items() if c != 0}
        self._hash = None


    @classmethod
    def _from_clean(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p


    def __eq__(self, other):
        if isinstance(other, int):
            other = constant(other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms


    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash


    def __bool__(self):
        return len(self.terms) > 0


    def __len__(self):
        return len(self.terms)


    def __repr__(self):
        return 'LaurentPoly(' + str(self) + ')'


    def __str__(self):
        if len(self.terms) == 0:
            return '0'

        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                body = str(abs(c))
            else:
                body = 'q' if e == 1 else 'q^' + str(e)
                if abs(c) != 1:
                    body = str(abs(c)) + '*' + body

            if len(pieces) == 0:
                pieces.append(body if c > 0 else '-' + body)
            else:
                pieces.append(('+ ' if c > 0 else '- ') + body)

        return ' '.join(pieces)


    def _combine(self, other, sign):
        if isinstance(other, int):
            other = constant(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            new = terms.get(e, 0) + sign * c
            if new == 0:
                terms.pop(e, None)
            else:
                terms[e] = new
        return LaurentPoly._from_clean(terms)


    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__


    def __sub__(self, other):
        return self._combine(other, -1)


    def __rsub__(self, other):
        return (-self)._combine(other, 1)


    def __neg__(self):
        return LaurentPoly._from_clean({e: -c for e, c in self.terms.items()})


    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly._from_clean({e: c * other for e, c in self.terms.items()})

        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__


    def shift(self, k):
        '''Multiplies by q^k'''
        if k == 0:
            return self
        return LaurentPoly._from_clean({e + k: c for e, c in self.terms.items()})


    def min_exponent(self):
        return min(self.terms) if len(self.terms) else None


    def max_exponent(self):
        return max(self.terms) if len(self.terms) else None


    def to_json(self):
        return {str(e): str(self.terms[e]) for e in sorted(self.terms, reverse=True)}


    @classmethod
    def from_json(cls, d):
        try:
            return cls({int(e): int(c) for e, c in d.items()})
        except (AttributeError, ValueError):
            raise Error('Cannot make a polynomial from ' + str(d) + '. Cannot continue.')


def constant(c):
    return LaurentPoly({0: c})


def monomial(e, c=1):
    return LaurentPoly({e: c})


ZERO = LaurentPoly()
ONE = constant(1)
Q = monomial(1)


def arith(p, r, kind):
    if kind == 'add':
        return p + r
    elif kind == 'sub':
        return p - r
    elif kind == 'mul':
        return p * r
    else:
        raise Error('Unknown arithmetic operation "' + str(kind) + '". Cannot continue.')


def bar(p):
    return LaurentPoly._from_clean({-e: c for e, c in p.terms.items()})


def evaluate(p, q=1):
    '''Integer value at an integer q. Negative exponents need q = 1 or -1'''
    if q in (1, -1):
        return sum(c * (q ** (e % 2)) for e, c in p.terms.items())
    if any(e < 0 for e in p.terms):
        raise Error('Cannot evaluate ' + str(p) + ' at q=' + str(q) + ' exactly in the integers. Cannot continue.')
    return sum(c * q ** e for e, c in p.terms.items())


def in_qZq(p):
    return all(e >= 1 for e in p.terms)


def is_bar_symmetric(p):
    return all(p.terms.get(-e) == c for e, c in p.terms.items())


def is_positive(p):
    return all(c > 0 for c in p.terms.values())


def classify(p):
    if len(p.terms) == 0:
        return ZERO_CLASS
    elif p.terms == {0: 1}:
        return ONE_CLASS
    elif in_qZq(p):
        return IN_QZQ_CLASS
    elif is_bar_symmetric(p):
        return BAR_SYMMETRIC_CLASS
    else:
        return OTHER_CLASS


def bar_symmetric_completion(p):
    '''The bar-symmetric s with p - s in qZ[q]. Built from the terms of p
       with exponent <= 0, mirroring the negative ones'''
    terms = {}
    for e, c in p.terms.items():
        if e == 0:
            terms[0] = c
        elif e < 0:
            terms[e] = c
            terms[-e] = c
    return LaurentPoly._from_clean(terms)
