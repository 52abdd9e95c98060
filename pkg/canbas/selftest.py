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
import random
import sys
import time
from canbas import canonical, common, crystal, laurent, orders, tensor

class Error (Exception): pass

N6_CASES = [
    ((-1, 2, -1, 2, -1, 2), (1, 1, 0, 1, 0, 0), {7: 1, 5: 4, 3: 3, 1: -1}),
    ((-1, -2, 3, -2, 3, 2), (1, -1, 2, -1, 2, 0), {3: 8, 1: -1}),
]


def expected_n2(i, j):
    '''Closed form of the canonical basis vector c_(i,j) in V x V'''
    q = laurent.Q
    if i + j != 1:
        if i >= j:
            terms = {(i, j): laurent.ONE}
        else:
            terms = {(i, j): laurent.ONE, (j, i): q}
    elif i > 0:
        terms = {(i, 1 - i): laurent.ONE, (1 + i, -i): q}
    elif i < 0:
        terms = {(i, 1 - i): laurent.ONE, (i + 1, -i): q, (-i, i + 1): q, (1 - i, i): q * q}
    else:
        terms = {(0, 1): laurent.ONE, (1, 0): q * q}
    return tensor.TensorVec(2, terms=terms)


def all_sigmas(n):
    return list(itertools.product((1, -1), repeat=n))


class Tester:
    def __init__(self, config=None, skip_slow=False, seed=42, verbose=0):
        self.config = common.Config() if config is None else config
        self.skip_slow = skip_slow
        self.seed = seed
        self.verbose = verbose
        self.engine = canonical.CanonicalBasis.from_config(self.config)
        self.results = []


    def _box(self, n, lo, hi):
        return list(itertools.product(range(lo, hi + 1), repeat=n))


    def check_n2_table(self):
        for i, j in self._box(2, -4, 4):
            got = self.engine.canonical_basis((i, j)).vector
            if got != expected_n2(i, j):
                return False, 'c(' + str(i) + ',' + str(j) + ') = ' + str(got) + ', expected ' + str(expected_n2(i, j))
        return True, '81 vectors match'


    def check_n6_coefficients(self):
        for b, a, terms in N6_CASES:
            got = self.engine.canonical_basis(b).d(a)
            if got != laurent.LaurentPoly(terms):
                return False, 'd(' + str(a) + ',' + str(b) + ') = ' + str(got)
        return True, 'both coefficients match'


    def check_bar_certificate(self):
        count = 0
        for n in range(1, 4):
            for b in self._box(n, -2, 2):
                certificates = self.engine.certify(self.engine.canonical_basis(b))
                failed = [name for name in sorted(certificates) if not certificates[name]]
                if len(failed):
                    return False, str(b) + ' failed ' + ','.join(failed)
                count += 1
        return True, str(count) + ' vectors certified'


    def check_ckw(self):
        rng = random.Random(self.seed)
        tuples = [b for n in (1, 2) for b in self._box(n, -3, 3)]
        tuples += [tuple(rng.randint(-3, 3) for x in range(3)) for y in range(50)]
        for b in tuples:
            equal, lhs, rhs = canonical.verify_ckw(b, self.engine)
            if not equal:
                return False, str(b) + ': ' + str(lhs) + ' != ' + str(rhs)
        return True, str(len(tuples)) + ' tuples agree'


    def check_order_oracle(self):
        pairs = 0
        for n in range(1, 4):
            box = self._box(n, -2, 2)
            for sigma in [None] + all_sigmas(n):
                if sigma is None:
                    weights = {b: orders.wt_c(b) for b in box}
                else:
                    weights = {b: orders.wt_a(b, sigma) for b in box}
                for a in box:
                    for b in box:
                        if orders.bruhat_leq(a, b, sigma=sigma) != orders.inverse_dominance_leq(weights[a], weights[b]):
                            return False, 'disagreement at ' + str(a) + ', ' + str(b) + ', sigma ' + str(sigma)
                        pairs += 1
        return True, str(pairs) + ' pairs agree'


    def check_prime_map(self):
        for n in range(1, 4):
            box = self._box(n, -2, 2)
            for sigma in all_sigmas(n):
                inside = [b for b in box if orders.in_bsigma(b, sigma)]
                for a in inside:
                    for b in inside:
                        if orders.bruhat_leq(a, b) != orders.bruhat_leq(orders.prime_map(a), orders.prime_map(b), sigma=sigma):
                            return False, 'order differs at ' + str(a) + ', ' + str(b)
        return True, 'order preserved and reflected'


    def check_crystal(self):
        b = (2, -1, -1, 4, -2, -2, 3, 2, -2)
        if crystal.crystal_op(b, 2, tensor.F) != (2, -1, -1, 4, -2, -2, 3, 2, -1):
            return False, 'f2 golden example'
        if crystal.crystal_op(b, 2, tensor.E) is not None:
            return False, 'e2 golden example'

        box = (-2, 2)
        graph = crystal.ComponentGraph(3, (box[0] - 1, box[1] + 1))
        graph.explore()
        for b in self._box(3, box[0], box[1]):
            if orders.is_antidominant(b):
                word = crystal.connect_to_z(b)
                if crystal.apply_crystal_word((0, 0, 0), word) != b:
                    return False, 'word does not reach ' + str(b)
            elif b in graph.graph:
                return False, str(b) + ' reached but not antidominant'
        return True, 'golden example and component of z on n=3 box'


    def check_typeA_positivity(self):
        count = 0
        for n in range(1, 4):
            for sigma in all_sigmas(n):
                for b in self._box(n, 1, 4):
                    vector = self.engine.canonical_basis(b, sigma=sigma).vector
                    for a, p in vector.terms.items():
                        if not laurent.is_positive(p):
                            return False, 'coefficient ' + str(p) + ' at ' + str(a) + ' of c^' + common.sigma_to_string(sigma) + str(b)
                    count += 1
        return True, str(count) + ' vectors nonnegative'


    def check_construct_dominant(self):
        rng = random.Random(self.seed)
        for x in range(500):
            n = rng.randint(1, 5)
            b = tuple(rng.randint(-5, 5) for y in range(n))
            a, word = canonical.construct_dominant(b)
            if not (orders.is_strictly_dominant(a) and orders.is_typical(a)):
                return False, str(a) + ' from ' + str(b) + ' not dominant typical'
            v = tensor.apply_word(tensor.monomial_vector(a), word, quantum=False)
            if v.coefficient(b) != laurent.ONE:
                return False, 'coefficient of ' + str(b) + ' is ' + str(v.coefficient(b))
            if not all(orders.bruhat_less(b, c) for c in v.terms if c != b):
                return False, 'lower term in word applied to ' + str(a)
        return True, '500 random tuples'


    def checks(self):
        names = [
            'n2_table',
            'n6_coefficients',
            'bar_certificate',
            'ckw',
            'order_oracle',
            'prime_map',
            'crystal',
            'typeA_positivity',
            'construct_dominant',
        ]
        if self.skip_slow:
            names.remove('n6_coefficients')
        return names


    def _check_method(self, name):
        if not hasattr(self, 'check_' + name):
            raise Error('Unknown check "' + name + '". Cannot continue.')
        return getattr(self, 'check_' + name)


    def run(self):
        '''Runs every check, printing one line each. Returns the number of failures'''
        failures = 0
        self.results = []
        for name in self.checks():
            start = time.time()
            try:
                ok, message = self._check_method(name)()
            except (canonical.Error, crystal.Error) as error:
                ok, message = False, str(error)
            elapsed = time.time() - start
            self.results.append((name, ok, message))
            if ok:
                print('PASS', name, message, sep='\t', flush=True)
            else:
                failures += 1
                print('FAIL', name, message, sep='\t', flush=True)
                print('Check', name, 'failed:', message, file=sys.stderr)
            if self.verbose:
                print('   ', name, 'took', round(elapsed, 2), 'seconds', flush=True)
        return failures
