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
import time
from canbas import common, laurent, orders

class Error (Exception): pass

F = 'f'
E = 'e'
DOT = '.'

PR_K = 'pr_k'
PR_0 = 'pr_0'
PR_SIGMA = 'pr_sigma'


class TensorVec:
    '''Finite combination of monomial vectors v_b of V^n (typeC, sigma is None)
       or of V^sigma (typeA). Terms map tuple -> nonzero LaurentPoly'''
    __slots__ = ('n', 'sigma', 'terms')

    def __init__(self, n, terms=None, sigma=None):
        if sigma is not None:
            sigma = tuple(sigma)
            if len(sigma) != n:
                raise Error('Sign vector has length ' + str(len(sigma)) + ' but tensor length is ' + str(n) + '. Cannot continue.')
        self.n = n
        self.sigma = sigma
        self.terms = {}
        if terms is not None:
            for b, p in terms.items():
                b = tuple(b)
                if len(b) != n:
                    raise Error('Tuple ' + str(b) + ' does not have length ' + str(n) + '. Cannot continue.')
                if not isinstance(p, laurent.LaurentPoly):
                    p = laurent.constant(p)
                if p:
                    self.terms[b] = p


    @classmethod
    def _from_clean(cls, n, sigma, terms):
        v = cls.__new__(cls)
        v.n = n
        v.sigma = sigma
        v.terms = terms
        return v


    def space(self):
        return orders.TYPE_C if self.sigma is None else orders.TYPE_A


    def _check_space(self, other):
        if self.n != other.n or self.sigma != other.sigma:
            raise Error('Cannot combine vectors from different tensor spaces. Cannot continue.')


    def __eq__(self, other):
        return type(other) is type(self) and self.n == other.n and self.sigma == other.sigma and self.terms == other.terms


    def __len__(self):
        return len(self.terms)


    def __bool__(self):
        return len(self.terms) > 0


    def __contains__(self, b):
        return tuple(b) in self.terms


    def coefficient(self, b):
        return self.terms.get(tuple(b), laurent.ZERO)


    def support(self):
        return sorted(self.terms)


    def add_term(self, b, p):
        '''In-place addition, only for vectors still being built'''
        new = self.terms.get(b, laurent.ZERO) + p
        if new:
            self.terms[b] = new
        else:
            self.terms.pop(b, None)


    def __add__(self, other):
        self._check_space(other)
        result = TensorVec._from_clean(self.n, self.sigma, dict(self.terms))
        for b, p in other.terms.items():
            result.add_term(b, p)
        return result


    def __neg__(self):
        return TensorVec._from_clean(self.n, self.sigma, {b: -p for b, p in self.terms.items()})


    def __sub__(self, other):
        return self + (-other)


    def scale(self, p):
        if isinstance(p, int):
            p = laurent.constant(p)
        if not p:
            return TensorVec(self.n, sigma=self.sigma)
        return TensorVec._from_clean(self.n, self.sigma, {b: c * p for b, c in self.terms.items()})


    def tensor_slot(self, j, sign=None):
        '''This vector tensored on the right with v_j (v_j^sign for typeA)'''
        if (sign is None) != (self.sigma is None):
            raise Error('Tensor slot sign must be given exactly for typeA vectors. Cannot continue.')
        sigma = None if sign is None else self.sigma + (sign,)
        return TensorVec._from_clean(self.n + 1, sigma, {b + (j,): p for b, p in self.terms.items()})


    def weights(self):
        return set(orders.weight_of(b, sigma=self.sigma) for b in self.terms)


    def is_homogeneous(self):
        return len(self.weights()) <= 1


    def __str__(self):
        if len(self.terms) == 0:
            return '0'
        pieces = []
        for b in self.support():
            p = self.terms[b]
            vec = 'v[' + common.tuple_to_string(b) + ']'
            if p.terms == {0: 1}:
                term = vec
            elif p.terms == {0: -1}:
                term = '-' + vec
            elif len(p) == 1:
                term = str(p) + ' ' + vec
            else:
                term = '(' + str(p) + ') ' + vec

            if len(pieces) == 0:
                pieces.append(term)
            elif term.startswith('-'):
                pieces.append('- ' + term[1:])
            else:
                pieces.append('+ ' + term)
        return ' '.join(pieces)


    def to_json(self):
        d = {'space': self.space(), 'n': self.n}
        if self.sigma is not None:
            d['sigma'] = common.sigma_to_string(self.sigma)
        d['terms'] = [{'b': list(b), 'poly': self.terms[b].to_json()} for b in self.support()]
        return d


    @classmethod
    def from_json(cls, d):
        try:
            sigma = common.parse_sigma(d['sigma']) if 'sigma' in d else None
            terms = {tuple(t['b']): laurent.LaurentPoly.from_json(t['poly']) for t in d['terms']}
            return cls(d['n'], terms=terms, sigma=sigma)
        except (KeyError, TypeError):
            raise Error('Cannot make a tensor vector from ' + str(d) + '. Cannot continue.')


def monomial_vector(b, sigma=None, coeff=None):
    b = tuple(b)
    common.check_length(b, sigma)
    if coeff is None:
        coeff = laurent.ONE
    return TensorVec(len(b), terms={b: coeff}, sigma=sigma)


def _slot_mark(x, i, sign):
    '''The i-signature mark of one slot holding v_x (sign is None for typeC)'''
    if sign is None:
        if x == i or x == -i:
            return F
        elif x == 1 + i or x == 1 - i:
            return E
    elif sign > 0:
        if x == i:
            return F
        elif x == 1 + i:
            return E
    else:
        if x == 1 + i:
            return F
        elif x == i:
            return E
    return DOT


def isig(b, i, sigma=None):
    '''The i-signature of b: one mark per slot from f, e and . (the empty mark)'''
    common.check_length(b, sigma)
    if sigma is None:
        if i < 0:
            raise Error('typeC signatures need i >= 0, got ' + str(i) + '. Cannot continue.')
        return tuple(_slot_mark(x, i, None) for x in b)
    return tuple(_slot_mark(x, i, s) for x, s in zip(b, sigma))


def shift_slot(b, t, kind, sigma=None):
    '''The tuple obtained when f (kind F) or e (kind E) acts on slot t'''
    step = 1 if sigma is None else sigma[t]
    if kind == E:
        step = -step
    return b[:t] + (b[t] + step,) + b[t + 1:]


def k_exponent(x, i, sign=None):
    '''Exponent of q in the eigenvalue of k_i on v_x'''
    if sign is None:
        return (x == i) + (x == -i) - (x == 1 + i) - (x == 1 - i)
    e = (x == i) - (x == 1 + i)
    return e if sign > 0 else -e


def _check_kind(kind):
    if kind not in (F, E):
        raise Error('Chevalley generator must be f or e, got "' + str(kind) + '". Cannot continue.')


def _chevalley(v, i, kind, quantum, max_terms, deadline=None):
    _check_kind(kind)
    if deadline is not None and time.monotonic() >= deadline:
        raise common.GuardError('Time budget exceeded before applying ' + kind + str(i) + '. Cannot continue.')
    result = TensorVec._from_clean(v.n, v.sigma, {})
    sigma = v.sigma

    for b, p in v.terms.items():
        signs = [None] * v.n if sigma is None else sigma
        exponents = [k_exponent(x, i, s) for x, s in zip(b, signs)] if quantum else None
        for t in range(v.n):
            if _slot_mark(b[t], i, signs[t]) != kind:
                continue
            coeff = p
            if quantum:
                if kind == F:
                    coeff = p.shift(sum(exponents[t + 1:]))
                else:
                    coeff = p.shift(-sum(exponents[:t]))
            result.add_term(shift_slot(b, t, kind, sigma), coeff)

        if max_terms is not None and len(result) > max_terms:
            raise common.GuardError('Support guard of ' + str(max_terms) + ' terms exceeded while applying ' + kind + str(i) + '. Cannot continue.')

    return result


def chevalley_classical(v, i, kind, max_terms=None):
    return _chevalley(v, i, kind, False, max_terms)


def chevalley_quantum(v, i, kind, max_terms=None):
    '''f_i on slot t picks up the k_i eigenvalues of slots t+1..n,
       e_i on slot t the inverse k_i eigenvalues of slots 1..t-1'''
    return _chevalley(v, i, kind, True, max_terms)


def apply_word(v, word, kind=F, quantum=True, max_terms=None, deadline=None):
    '''Applies the generators indexed by word in order, word[0] first.
       deadline is a time.monotonic() value after which GuardError is raised'''
    for i in word:
        v = _chevalley(v, i, kind, quantum, max_terms, deadline=deadline)
    return v


def specialize(v):
    '''Evaluates every coefficient at q=1'''
    terms = {b: laurent.constant(laurent.evaluate(p)) for b, p in v.terms.items()}
    return TensorVec(v.n, terms=terms, sigma=v.sigma)


def project(v, target, k=None, sigma=None):
    if target == PR_K:
        if v.sigma is not None or k is None:
            raise Error('pr_k needs a typeC vector and k. Cannot continue.')
        return TensorVec._from_clean(v.n, None, {b: p for b, p in v.terms.items() if orders.in_bk(b, k)})
    elif target == PR_0:
        if v.sigma is None:
            raise Error('pr_0 needs a typeA vector. Cannot continue.')
        return TensorVec._from_clean(v.n, v.sigma, {b: p for b, p in v.terms.items() if orders.in_b0(b)})
    elif target == PR_SIGMA:
        if v.sigma is not None or sigma is None:
            raise Error('pr_sigma needs a typeC vector and a sign vector. Cannot continue.')
        sigma = tuple(sigma)
        if len(sigma) != v.n:
            raise Error('Sign vector length does not match the vector. Cannot continue.')
        terms = {orders.prime_map(b): p for b, p in v.terms.items() if orders.in_bsigma(b, sigma)}
        return TensorVec._from_clean(v.n, sigma, terms)
    else:
        raise Error('Unknown projection "' + str(target) + '". Cannot continue.')


def include(v):
    '''Inclusion of the B0 part of V^sigma into V^n, right inverse of pr_sigma'''
    if v.sigma is None:
        raise Error('include needs a typeA vector. Cannot continue.')
    terms = {orders.inverse_prime_map(b, v.sigma): p for b, p in v.terms.items()}
    return TensorVec._from_clean(v.n, None, terms)
