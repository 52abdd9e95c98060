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
import itertools
import multiprocessing
import time
from canbas import common, laurent, orders, tensor

class Error (Exception): pass


class CanonicalEntry:
    def __init__(self, b, vector, rough, sigma=None):
        self.b = b
        self.vector = vector
        self.rough = rough
        self.sigma = sigma


    def __str__(self):
        return str(self.vector)


    def d(self, a):
        '''Coefficient of v_a in the canonical vector'''
        return self.vector.coefficient(a)


class CanonicalBasis:
    '''Computes canonical basis vectors of V^n (sigma=None) and V^sigma.
       Every vector is memoized, keyed by (sigma, b), so one engine should be
       reused for a whole run. time_budget, if given, is the number of seconds
       each outermost canonical_basis call may take'''
    def __init__(self, support_guard=common.DEFAULT_SUPPORT_GUARD, depth_guard=common.DEFAULT_DEPTH_GUARD, time_budget=None, verbose=0):
        if time_budget is not None and time_budget <= 0:
            raise Error('Time budget must be positive, got ' + str(time_budget) + '. Cannot continue.')
        self.support_guard = support_guard
        self.depth_guard = depth_guard
        self.time_budget = time_budget
        self._deadline = None
        self.verbose = verbose
        self.memo = {}
        self.rough_memo = {}
        self._in_progress = set()


    @classmethod
    def from_config(cls, config, verbose=0):
        return cls(support_guard=config.support_guard, depth_guard=config.depth_guard, verbose=verbose)


    def _check_input(self, b, sigma):
        if len(b) == 0:
            raise Error('Cannot compute canonical basis vector of an empty tuple. Cannot continue.')
        common.check_length(b, sigma)


    def _check_support(self, v, what):
        if len(v) > self.support_guard:
            raise common.GuardError('Support guard of ' + str(self.support_guard) + ' terms exceeded in ' + what + '. Cannot continue.')


    def _check_time(self, what):
        if self._deadline is not None and time.monotonic() >= self._deadline:
            raise common.GuardError('Time budget of ' + str(self.time_budget) + ' seconds exceeded in ' + what + '. Cannot continue.')


    def _rough_j_and_word(self, b, prefix, sigma):
        last = b[-1]
        if sigma is None:
            j = min([last] + [-abs(x) for a in prefix.terms for x in a])
            return j, [abs(m) for m in range(j, last)]

        if sigma[-1] > 0:
            j = min([last] + [x if s > 0 else x - 1 for a in prefix.terms for x, s in zip(a, sigma)])
            return j, list(range(j, last))
        else:
            j = max([last] + [x + 1 if s > 0 else x for a in prefix.terms for x, s in zip(a, sigma)])
            return j, list(range(j - 1, last - 1, -1))


    def rough_invariant(self, b, sigma=None):
        '''The bar-invariant vector f_{w_m} ... f_{w_1}(c_prefix x v_j) with leading term v_b'''
        b = tuple(b)
        sigma = None if sigma is None else tuple(sigma)
        self._check_input(b, sigma)
        key = (sigma, b)
        if key in self.rough_memo:
            return self.rough_memo[key]

        if len(b) == 1:
            rough = tensor.monomial_vector(b, sigma=sigma)
        else:
            prefix_sigma = None if sigma is None else sigma[:-1]
            prefix = self.canonical_basis(b[:-1], sigma=prefix_sigma).vector
            j, word = self._rough_j_and_word(b, prefix, sigma)
            if sigma is None:
                start = prefix.tensor_slot(j)
            else:
                start = prefix.tensor_slot(j, sign=sigma[-1])
            rough = tensor.apply_word(start, word, kind=tensor.F, quantum=True, max_terms=self.support_guard, deadline=self._deadline)
            if self.verbose > 1:
                print('Rough vector for', common.tuple_to_string(b), 'uses j =', j, 'and', len(word), 'generators,', len(rough), 'terms', flush=True)

        if rough.coefficient(b) != laurent.ONE:
            raise Error('Rough vector for ' + str(b) + ' does not have leading coefficient 1. Cannot continue.')
        self.rough_memo[key] = rough
        return rough


    def minimal(self, tuples, sigma=None):
        '''A Bruhat-minimal element of tuples, taking the lexicographically
           first one when there are several'''
        tuples = sorted(tuples)
        for a in tuples:
            if not any(c != a and orders.bruhat_leq(c, a, sigma=sigma) for c in tuples):
                return a
        raise Error('No minimal element found among ' + str(tuples) + '. Cannot continue.')


    def _straighten(self, b, rough, sigma):
        v = rough
        iterations = 0
        while True:
            offending = [a for a, p in v.terms.items() if a != b and not laurent.in_qZq(p)]
            if len(offending) == 0:
                return v

            iterations += 1
            if iterations > self.depth_guard:
                raise common.GuardError('Depth guard of ' + str(self.depth_guard) + ' straightening steps exceeded for ' + str(b) + '. Cannot continue.')

            self._check_time('straightening of ' + str(b))
            a = self.minimal(offending, sigma=sigma)
            if not orders.bruhat_less(b, a, sigma=sigma):
                raise Error('Straightening of ' + str(b) + ' met ' + str(a) + ', which is not above it in the Bruhat order. Cannot continue.')
            correction = laurent.bar_symmetric_completion(v.terms[a])
            if self.verbose > 1:
                print('Straightening', common.tuple_to_string(b), ': subtract (' + str(correction) + ') * c[' + common.tuple_to_string(a) + ']', flush=True)

            v = v - self.canonical_basis(a, sigma=sigma).vector.scale(correction)
            assert laurent.in_qZq(v.coefficient(a))
            assert v.coefficient(b) == laurent.ONE
            self._check_support(v, 'straightening of ' + str(b))


    def canonical_basis(self, b, sigma=None):
        b = tuple(b)
        sigma = None if sigma is None else tuple(sigma)
        self._check_input(b, sigma)
        key = (sigma, b)
        if key in self.memo:
            return self.memo[key]
        if key in self._in_progress:
            raise Error('Canonical basis recursion returned to ' + str(b) + '. Cannot continue.')
        if len(self._in_progress) >= self.depth_guard:
            raise common.GuardError('Depth guard of ' + str(self.depth_guard) + ' nested computations exceeded at ' + str(b) + '. Cannot continue.')

        outermost = len(self._in_progress) == 0
        if self.verbose and outermost:
            print('Computing canonical basis vector for', common.tuple_to_string(b), flush=True)

        if outermost and self.time_budget is not None:
            self._deadline = time.monotonic() + self.time_budget
        self._in_progress.add(key)
        try:
            rough = self.rough_invariant(b, sigma=sigma)
            vector = self._straighten(b, rough, sigma)
        except RecursionError:
            raise common.GuardError('Recursion too deep while computing ' + str(b) + '. Cannot continue.')
        finally:
            self._in_progress.discard(key)
            if outermost:
                self._deadline = None

        entry = CanonicalEntry(b, vector, rough, sigma=sigma)
        self.memo[key] = entry
        if self.verbose and outermost:
            print('Finished', common.tuple_to_string(b), 'with', len(vector), 'terms. Memo size', len(self.memo), flush=True)
        return entry


    def express_in_rough(self, v):
        '''Coefficients u_a with v = sum u_a * rough_invariant(a), found by
           eliminating Bruhat-minimal terms one at a time'''
        remaining = v
        coeffs = {}
        iterations = 0
        while remaining:
            iterations += 1
            if iterations > self.depth_guard:
                raise common.GuardError('Depth guard of ' + str(self.depth_guard) + ' elimination steps exceeded. Cannot continue.')
            a = self.minimal(list(remaining.terms), sigma=v.sigma)
            u = remaining.terms[a]
            coeffs[a] = coeffs.get(a, laurent.ZERO) + u
            if not coeffs[a]:
                del coeffs[a]
            remaining = remaining - self.rough_invariant(a, sigma=v.sigma).scale(u)
            self._check_support(remaining, 'rough basis elimination')
        return coeffs


    def certify(self, entry):
        '''Checks the defining properties of a computed canonical vector.
           Returns certificate name -> bool'''
        b = entry.b
        others = [a for a in entry.vector.terms if a != b]
        certificates = {
            'leading_coefficient_one': entry.vector.coefficient(b) == laurent.ONE,
            'off_diagonal_in_qZq': all(laurent.in_qZq(entry.vector.terms[a]) for a in others),
            'support_above_b': all(orders.bruhat_less(b, a, sigma=entry.sigma) for a in others),
            'weight_homogeneous': entry.vector.is_homogeneous(),
        }
        rough_coeffs = self.express_in_rough(entry.vector)
        certificates['bar_invariant'] = all(laurent.is_bar_symmetric(u) for u in rough_coeffs.values())
        return certificates


    def check(self, entry):
        certificates = self.certify(entry)
        failed = [name for name in sorted(certificates) if not certificates[name]]
        if len(failed):
            raise Error('Canonical vector for ' + str(entry.b) + ' failed checks: ' + ', '.join(failed) + '. Cannot continue.')
        return certificates


    def canonical_basis_k(self, b, k):
        '''pr_k of c_b for b in B_k, checked to be unitriangular inside B_k'''
        b = tuple(b)
        if not orders.in_bk(b, k):
            raise Error('Tuple ' + str(b) + ' is not in B_' + str(k) + '. Cannot continue.')
        v = tensor.project(self.canonical_basis(b).vector, tensor.PR_K, k=k)
        for a, p in v.terms.items():
            if a != b and not (laurent.in_qZq(p) and orders.bruhat_less(b, a)):
                raise Error('Truncation of canonical vector for ' + str(b) + ' is not unitriangular at ' + str(a) + '. Cannot continue.')
        return v


def construct_dominant(b):
    '''Returns (a, word) with a strictly decreasing and typical, and word the
       f-indices in the order they act, so that f_word v_a = v_b + higher terms'''
    b = tuple(b)
    if len(b) == 0:
        raise Error('Cannot construct from an empty tuple. Cannot continue.')
    a = [b[0]]
    for s in range(1, len(b)):
        a.append(min([b[s]] + [min(a[r] - 1, -b[r]) for r in range(s)]))

    word = []
    for s in range(1, len(b)):
        word.extend(abs(m) for m in range(a[s], b[s]))
    return tuple(a), word


def verify_ckw(b, engine):
    '''Compares pr_sigma(c_b) with pr_0(c^sigma_b') where sigma is the sign
       pattern of b. Returns (equal, left side, right side)'''
    b = tuple(b)
    sigma = orders.sigma_of(b)
    lhs = tensor.project(engine.canonical_basis(b).vector, tensor.PR_SIGMA, sigma=sigma)
    rhs = tensor.project(engine.canonical_basis(orders.prime_map(b), sigma=sigma).vector, tensor.PR_0)
    return lhs == rhs, lhs, rhs


_ENGINES = {}

def get_engine(support_guard=common.DEFAULT_SUPPORT_GUARD, depth_guard=common.DEFAULT_DEPTH_GUARD, time_budget=None):
    '''One shared engine per guard setting in each process'''
    key = (support_guard, depth_guard, time_budget)
    if key not in _ENGINES:
        _ENGINES[key] = CanonicalBasis(support_guard=support_guard, depth_guard=depth_guard, time_budget=time_budget)
    return _ENGINES[key]


def box_tuples(n, box, weight=None, sigma=None):
    '''All tuples of length n with entries in box=(lo, hi), optionally only
       those with total weight equal to weight'''
    lo, hi = box
    for b in itertools.product(range(lo, hi + 1), repeat=n):
        if weight is None or orders.weight_of(b, sigma=sigma) == weight:
            yield b


class NegativityScanner:
    def __init__(self, tuples, support_guard=common.DEFAULT_SUPPORT_GUARD, depth_guard=common.DEFAULT_DEPTH_GUARD, time_budget=None, threads=1, verbose=0):
        if time_budget is not None and time_budget <= 0:
            raise Error('Time budget must be positive, got ' + str(time_budget) + '. Cannot continue.')
        self.tuples = sorted(set(tuple(b) for b in tuples))
        self.support_guard = support_guard
        self.depth_guard = depth_guard
        self.time_budget = time_budget
        self.threads = threads
        self.verbose = verbose
        self.hits = []
        self.exhausted = []


    def _scan_one(self, b):
        engine = get_engine(self.support_guard, self.depth_guard, self.time_budget)
        try:
            entry = engine.canonical_basis(b)
        except common.GuardError as error:
            return b, None, str(error)

        hits = [(a, b, p) for a, p in sorted(entry.vector.terms.items()) if not laurent.is_positive(p)]
        return b, hits, None


    def run(self):
        if self.verbose:
            print('Scanning', len(self.tuples), 'tuples using', self.threads, 'thread(s)', flush=True)

        if self.threads > 1:
            pool = multiprocessing.Pool(self.threads)
            results = pool.map(self._scan_one, self.tuples)
            pool.close()
            pool.join()
        else:
            results = [self._scan_one(b) for b in self.tuples]

        self.hits = []
        self.exhausted = []
        for b, hits, message in results:
            if message is not None:
                self.exhausted.append((b, message))
                if self.verbose:
                    print('Budget exhausted for', common.tuple_to_string(b), ':', message, flush=True)
            else:
                self.hits.extend(hits)
                if self.verbose > 1:
                    print('Scanned', common.tuple_to_string(b), 'negative coefficients:', len(hits), flush=True)

        return self.hits


def negativity_scan(tuples, support_guard=common.DEFAULT_SUPPORT_GUARD, depth_guard=common.DEFAULT_DEPTH_GUARD, time_budget=None, threads=1, verbose=0):
    '''Returns (hits, exhausted): hits are (a, b, d_ab) with a negative
       coefficient in d_ab, exhausted are (b, message) for tuples whose
       computation ran out of budget. time_budget is in seconds per tuple'''
    scanner = NegativityScanner(tuples, support_guard=support_guard, depth_guard=depth_guard, time_budget=time_budget, threads=threads, verbose=verbose)
    scanner.run()
    return scanner.hits, scanner.exhausted
