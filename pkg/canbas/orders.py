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
from canbas import common

class Error (Exception): pass

TYPE_C = 'typeC'
TYPE_A = 'typeA'


class Weight:
    '''Element of the weight lattice: index i -> coefficient of eps_i.
       typeC weights live on indices 0,1,2,..., typeA on all integers'''
    __slots__ = ('coeffs', 'domain')

    def __init__(self, coeffs=None, domain=TYPE_C):
        if domain not in (TYPE_C, TYPE_A):
            raise Error('Unknown weight domain "' + str(domain) + '". Cannot continue.')
        self.domain = domain
        self.coeffs = {} if coeffs is None else {i: c for i, c in coeffs.items() if c != 0}
        if domain == TYPE_C and any(i < 0 for i in self.coeffs):
            raise Error('typeC weights only have indices >= 0, got ' + str(self.coeffs) + '. Cannot continue.')


    def _check_domain(self, other):
        if self.domain != other.domain:
            raise Error('Cannot combine a ' + self.domain + ' weight with a ' + other.domain + ' weight. Cannot continue.')


    def __eq__(self, other):
        return type(other) is type(self) and self.domain == other.domain and self.coeffs == other.coeffs


    def __hash__(self):
        return hash((self.domain, frozenset(self.coeffs.items())))


    def __add__(self, other):
        self._check_domain(other)
        coeffs = dict(self.coeffs)
        for i, c in other.coeffs.items():
            coeffs[i] = coeffs.get(i, 0) + c
        return Weight(coeffs, self.domain)


    def __neg__(self):
        return Weight({i: -c for i, c in self.coeffs.items()}, self.domain)


    def __sub__(self, other):
        return self + (-other)


    def __rmul__(self, k):
        return Weight({i: k * c for i, c in self.coeffs.items()}, self.domain)


    def __str__(self):
        if len(self.coeffs) == 0:
            return '0'
        pieces = []
        for i in sorted(self.coeffs):
            c = self.coeffs[i]
            body = 'eps' + str(i) if abs(c) == 1 else str(abs(c)) + '*eps' + str(i)
            if len(pieces) == 0:
                pieces.append(body if c > 0 else '-' + body)
            else:
                pieces.append(('+ ' if c > 0 else '- ') + body)
        return ' '.join(pieces)


    def __repr__(self):
        return 'Weight(' + self.domain + ': ' + str(self) + ')'


def epsilon(i, domain=TYPE_C, c=1):
    return Weight({i: c}, domain)


def simple_root(i, domain=TYPE_C):
    if domain == TYPE_C:
        if i == 0:
            return Weight({0: -2}, TYPE_C)
        elif i > 0:
            return Weight({i - 1: 1, i: -1}, TYPE_C)
        else:
            raise Error('No typeC simple root with index ' + str(i) + '. Cannot continue.')
    return Weight({i: 1, i + 1: -1}, TYPE_A)


def total(weights, domain=TYPE_C):
    result = Weight(domain=domain)
    for w in weights:
        result = result + w
    return result


def wt_c(b):
    return [epsilon(x - 1) if x > 0 else epsilon(-x, c=-1) for x in b]


def wt_a(b, sigma):
    common.check_length(b, sigma)
    return [epsilon(x, domain=TYPE_A, c=s) for x, s in zip(b, sigma)]


def weight_of(b, sigma=None):
    if sigma is None:
        return total(wt_c(b))
    return total(wt_a(b, sigma), domain=TYPE_A)


def simple_root_coordinates(weight):
    '''Coordinates m_i with weight = sum m_i alpha_i, or None if weight is not in
       the root lattice. Coordinates may be negative; zeros are not stored.'''
    coeffs = weight.coeffs
    if len(coeffs) == 0:
        return {}
    coords = {}

    if weight.domain == TYPE_A:
        if sum(coeffs.values()) != 0:
            return None
        running = 0
        for i in range(min(coeffs), max(coeffs)):
            running += coeffs.get(i, 0)
            if running != 0:
                coords[i] = running
        return coords

    # alpha_0 = -2eps_0 and alpha_j = eps_{j-1} - eps_j make m_j minus the tail sum from j
    running = 0
    for j in range(max(coeffs), 0, -1):
        running += coeffs.get(j, 0)
        if running != 0:
            coords[j] = -running
    running += coeffs.get(0, 0)
    if running % 2 != 0:
        return None
    if running != 0:
        coords[0] = -running // 2
    return coords


def dominates(lam, mu):
    '''True iff lam - mu is a sum of simple roots with nonnegative coefficients'''
    coords = simple_root_coordinates(lam - mu)
    return coords is not None and all(m >= 0 for m in coords.values())


def inverse_dominance_leq(beta, gamma):
    if len(beta) != len(gamma):
        raise Error('Weight sequences have different lengths. Cannot continue.')
    domains = set(w.domain for w in beta) | set(w.domain for w in gamma)
    if len(domains) > 1:
        raise Error('Cannot compare weight sequences with mixed domains. Cannot continue.')
    domain = domains.pop() if len(domains) else TYPE_C

    partial_beta = Weight(domain=domain)
    partial_gamma = Weight(domain=domain)
    for s in range(len(beta)):
        partial_beta = partial_beta + beta[s]
        partial_gamma = partial_gamma + gamma[s]
        if not dominates(partial_beta, partial_gamma):
            return False

    return partial_beta == partial_gamma


def _c_step(x, i):
    if x > i:
        return 1
    elif x <= -i:
        return -1
    else:
        return 0


def n_stat_c(b, i, s):
    if not 1 <= s <= len(b):
        raise Error('Prefix length ' + str(s) + ' out of range for tuple of length ' + str(len(b)) + '. Cannot continue.')
    return sum(_c_step(x, i) for x in b[:s])


def n_stat_a(b, sigma, i, s):
    common.check_length(b, sigma)
    if not 1 <= s <= len(b):
        raise Error('Prefix length ' + str(s) + ' out of range for tuple of length ' + str(len(b)) + '. Cannot continue.')
    return sum(sigma[r] for r in range(s) if b[r] > i)


def _check_pair(a, b, sigma):
    if len(a) != len(b) or len(a) == 0:
        raise Error('Cannot compare tuples ' + str(a) + ' and ' + str(b) + '. They must be nonempty and of the same length. Cannot continue.')
    common.check_length(a, sigma)


def bruhat_witness(a, b, sigma=None):
    '''Returns None if a <= b in the Bruhat order (typeC if sigma is None,
       typeA for sigma otherwise). Else returns the first violated condition
       as a tuple (s, i, N(a), N(b), reason)'''
    _check_pair(a, b, sigma)
    n = len(a)

    if sigma is None:
        indices = range(max(abs(x) for x in a + b) + 1)
    else:
        indices = range(min(a + b) - 1, max(a + b) + 1)

    for i in indices:
        na = 0
        nb = 0
        for s in range(n):
            if sigma is None:
                na += _c_step(a[s], i)
                nb += _c_step(b[s], i)
            else:
                if a[s] > i:
                    na += sigma[s]
                if b[s] > i:
                    nb += sigma[s]

            if s == n - 1:
                if na != nb:
                    return (s + 1, i, na, nb, 'unequal')
            elif na > nb:
                return (s + 1, i, na, nb, 'greater')
            elif sigma is None and i == 0 and (na - nb) % 2 != 0:
                return (s + 1, i, na, nb, 'parity')

    return None


def bruhat_leq(a, b, sigma=None):
    if a == b:
        _check_pair(a, b, sigma)
        return True
    return bruhat_witness(a, b, sigma=sigma) is None


def bruhat_less(a, b, sigma=None):
    return a != b and bruhat_leq(a, b, sigma=sigma)


def prime_map(b):
    return tuple(x if x > 0 else 1 - x for x in b)


def inverse_prime_map(b, sigma):
    common.check_length(b, sigma)
    if any(x <= 0 for x in b):
        raise Error('inverse_prime_map needs positive entries, got ' + str(b) + '. Cannot continue.')
    return tuple(x if s > 0 else 1 - x for x, s in zip(b, sigma))


def sigma_of(b):
    return tuple(1 if x > 0 else -1 for x in b)


def in_b0(b):
    return all(x > 0 for x in b)


def in_bk(b, k):
    return all(-k < x <= k for x in b)


def in_bsigma(b, sigma):
    common.check_length(b, sigma)
    return sigma_of(b) == tuple(sigma)


def _prefix_n_stats(b, i):
    stats = []
    running = 0
    for x in b:
        running += _c_step(x, i)
        stats.append(running)
    return stats


def in_b_leq_k(b, k):
    stats = _prefix_n_stats(b, k)
    return all(x <= 0 for x in stats[:-1]) and stats[-1] == 0


def in_b_lt_k(b, k):
    stats = _prefix_n_stats(b, k)
    return in_b_leq_k(b, k) and any(x < 0 for x in stats[:-1])


def _sigma_prefix_gaps(b, sigma):
    '''Prefix sums of sigma minus N(b,0)'''
    common.check_length(b, sigma)
    stats = _prefix_n_stats(b, 0)
    gaps = []
    running = 0
    for s in range(len(b)):
        running += sigma[s]
        gaps.append(running - stats[s])
    return gaps


def in_b_leq_sigma(b, sigma):
    gaps = _sigma_prefix_gaps(b, sigma)
    return all(x >= 0 for x in gaps[:-1]) and gaps[-1] == 0


def in_b_lt_sigma(b, sigma):
    gaps = _sigma_prefix_gaps(b, sigma)
    return in_b_leq_sigma(b, sigma) and any(x > 0 for x in gaps[:-1])


def _check_n0n1(b, n0, n1):
    if n0 < 0 or n1 < 0 or n0 + n1 != len(b):
        raise Error('Block sizes ' + str(n0) + '|' + str(n1) + ' do not match tuple ' + str(b) + '. Cannot continue.')


def in_b_n0n1(b, n0, n1):
    _check_n0n1(b, n0, n1)
    return len([x for x in b if x > 0]) == n0


def in_b_sharp(b, n0, n1):
    _check_n0n1(b, n0, n1)
    return all(x > 0 for x in b[:n0]) and all(x <= 0 for x in b[n0:])


def in_b_plus(b, n0, n1):
    return in_b_sharp(b, n0, n1) and is_strictly_dominant(b)


def in_b_upper_n0n1(b, n0, n1):
    '''b_1 > ... > b_n0 and b_{n0+1} < ... < b_n'''
    _check_n0n1(b, n0, n1)
    return is_strictly_dominant(b[:n0]) and all(b[r] < b[r + 1] for r in range(n0, len(b) - 1))


def is_dominant(b):
    return all(b[r] >= b[r + 1] for r in range(len(b) - 1))


def is_strictly_dominant(b):
    return all(b[r] > b[r + 1] for r in range(len(b) - 1))


def is_antidominant(b):
    return all(b[r] <= b[r + 1] for r in range(len(b) - 1))


def is_typical(b):
    entries = set()
    for x in b:
        if 1 - x in entries:
            return False
        entries.add(x)
    return True


SET_NAMES = [
    'B0',
    'Bk',
    'Bsigma',
    'B_leq_k',
    'B_lt_k',
    'B_leq_sigma',
    'B_lt_sigma',
    'B_n0n1',
    'B_sharp',
    'B_plus',
    'B_upper_n0n1',
    'dominant',
    'strictly_dominant',
    'antidominant',
    'typical',
]


def set_membership(b, name, k=None, sigma=None, n0=None, n1=None):
    if name not in SET_NAMES:
        raise Error('Unknown set "' + str(name) + '". Cannot continue.')

    needs = {
        'Bk': ['k'], 'B_leq_k': ['k'], 'B_lt_k': ['k'],
        'Bsigma': ['sigma'], 'B_leq_sigma': ['sigma'], 'B_lt_sigma': ['sigma'],
        'B_n0n1': ['n0', 'n1'], 'B_sharp': ['n0', 'n1'], 'B_plus': ['n0', 'n1'], 'B_upper_n0n1': ['n0', 'n1'],
    }
    params = {'k': k, 'sigma': sigma, 'n0': n0, 'n1': n1}
    for p in needs.get(name, []):
        if params[p] is None:
            raise Error('Set ' + name + ' needs parameter ' + p + '. Cannot continue.')

    if name == 'B0':
        return in_b0(b)
    elif name == 'Bk':
        return in_bk(b, k)
    elif name == 'Bsigma':
        return in_bsigma(b, sigma)
    elif name == 'B_leq_k':
        return in_b_leq_k(b, k)
    elif name == 'B_lt_k':
        return in_b_lt_k(b, k)
    elif name == 'B_leq_sigma':
        return in_b_leq_sigma(b, sigma)
    elif name == 'B_lt_sigma':
        return in_b_lt_sigma(b, sigma)
    elif name == 'B_n0n1':
        return in_b_n0n1(b, n0, n1)
    elif name == 'B_sharp':
        return in_b_sharp(b, n0, n1)
    elif name == 'B_plus':
        return in_b_plus(b, n0, n1)
    elif name == 'B_upper_n0n1':
        return in_b_upper_n0n1(b, n0, n1)
    elif name == 'dominant':
        return is_dominant(b)
    elif name == 'strictly_dominant':
        return is_strictly_dominant(b)
    elif name == 'antidominant':
        return is_antidominant(b)
    else:
        return is_typical(b)
