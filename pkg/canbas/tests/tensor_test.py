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
import unittest
import random
import time
from canbas import common, laurent, orders, tensor

q = laurent.Q
F = tensor.F
E = tensor.E


def v(*b, sigma=None):
    return tensor.monomial_vector(b, sigma=sigma)


def random_vector(rng, n, lo, hi, sigma=None, terms=4):
    vec = tensor.TensorVec(n, sigma=sigma)
    for x in range(terms):
        b = tuple(rng.randint(lo, hi) for y in range(n))
        vec = vec + tensor.monomial_vector(b, sigma=sigma, coeff=laurent.monomial(rng.randint(-2, 2), rng.choice([-2, -1, 1, 3])))
    return vec


class TestTensorVec(unittest.TestCase):
    def test_init(self):
        '''test TensorVec init'''
        vec = tensor.TensorVec(2, terms={(0, 1): 1, (1, 0): 0, (2, -1): laurent.ZERO})
        self.assertEqual(1, len(vec))
        self.assertEqual(laurent.ONE, vec.coefficient((0, 1)))
        self.assertEqual(laurent.ZERO, vec.coefficient((1, 0)))
        self.assertNotIn((1, 0), vec)
        with self.assertRaises(tensor.Error):
            tensor.TensorVec(2, terms={(0, 1, 2): 1})
        with self.assertRaises(tensor.Error):
            tensor.TensorVec(2, sigma=(1,))


    def test_arithmetic(self):
        '''test TensorVec add, sub, scale'''
        a = v(0, 1) + v(1, 0).scale(q * q)
        self.assertEqual(tensor.TensorVec(2), a - a)
        self.assertFalse(a - a)
        self.assertEqual(v(0, 1).scale(2), v(0, 1) + v(0, 1))
        self.assertEqual(tensor.TensorVec(2), a.scale(0))
        self.assertEqual(q * q * q, a.scale(q).coefficient((1, 0)))
        with self.assertRaises(tensor.Error):
            v(0, 1) + v(0, 1, sigma=(1, 1))
        with self.assertRaises(tensor.Error):
            v(0, 1) + v(0, 1, 2)


    def test_tensor_slot(self):
        '''test tensor_slot'''
        self.assertEqual(v(0, 1, -3), v(0, 1).tensor_slot(-3))
        self.assertEqual(v(1, 2, sigma=(1, -1)), v(1, sigma=(1,)).tensor_slot(2, sign=-1))
        with self.assertRaises(tensor.Error):
            v(1).tensor_slot(2, sign=1)
        with self.assertRaises(tensor.Error):
            v(1, sigma=(1,)).tensor_slot(2)


    def test_str(self):
        '''test TensorVec __str__'''
        self.assertEqual('0', str(tensor.TensorVec(2)))
        self.assertEqual('v[0,1] + q^2 v[1,0]', str(v(0, 1) + v(1, 0).scale(q * q)))
        self.assertEqual('v[0,1] - v[1,0]', str(v(0, 1) - v(1, 0)))
        self.assertEqual('(q + 1) v[-1,2]', str(v(-1, 2).scale(q + 1)))
        self.assertEqual('-q v[3]', str(v(3).scale(-q)))


    def test_json(self):
        '''test to_json and from_json'''
        vec = v(0, 1) + v(1, 0).scale(q * q)
        expected = {
            'space': orders.TYPE_C,
            'n': 2,
            'terms': [
                {'b': [0, 1], 'poly': {'0': '1'}},
                {'b': [1, 0], 'poly': {'2': '1'}},
            ],
        }
        self.assertEqual(expected, vec.to_json())
        self.assertEqual(vec, tensor.TensorVec.from_json(vec.to_json()))
        vec = v(2, 2, sigma=(1, -1)).scale(q)
        self.assertEqual('+-', vec.to_json()['sigma'])
        self.assertEqual(vec, tensor.TensorVec.from_json(vec.to_json()))
        with self.assertRaises(tensor.Error):
            tensor.TensorVec.from_json({'n': 2})


    def test_weights(self):
        '''test weights and is_homogeneous'''
        self.assertTrue((v(1, 0) + v(2, -1)).is_homogeneous())
        self.assertFalse((v(1, 0) + v(2, 0)).is_homogeneous())
        self.assertEqual({orders.Weight()}, (v(1, 0) + v(2, -1)).weights())


class TestSignatures(unittest.TestCase):
    def test_isig(self):
        '''test isig'''
        b = (2, -1, -1, 4, -2, -2, 3, 2, -2)
        self.assertEqual(('f', 'e', 'e', '.', 'f', 'f', 'e', 'f', 'f'), tensor.isig(b, 2))
        self.assertEqual((F, F), tensor.isig((0, 0), 0))
        self.assertEqual((F, E), tensor.isig((1, 2), 1, sigma=(1, 1)))
        self.assertEqual((E, F), tensor.isig((1, 2), 1, sigma=(-1, -1)))
        with self.assertRaises(tensor.Error):
            tensor.isig((0, 0), -1)


    def test_shift_slot(self):
        '''test shift_slot'''
        self.assertEqual((1, 1), tensor.shift_slot((0, 1), 0, F))
        self.assertEqual((0, 0), tensor.shift_slot((0, 1), 1, E))
        self.assertEqual((0, 0), tensor.shift_slot((0, 1), 1, F, sigma=(1, -1)))
        self.assertEqual((0, 2), tensor.shift_slot((0, 1), 1, E, sigma=(1, -1)))


class TestChevalley(unittest.TestCase):
    def test_classical(self):
        '''test chevalley_classical'''
        self.assertEqual(v(2, -1) + v(1, 0), tensor.chevalley_classical(v(1, -1), 1, F))
        self.assertEqual(v(0, 1) + v(1, 0), tensor.chevalley_classical(v(1, 1), 0, E))
        self.assertEqual(tensor.TensorVec(2), tensor.chevalley_classical(v(0, 0), 5, F))
        with self.assertRaises(tensor.Error):
            tensor.chevalley_classical(v(0, 0), 0, 'k')


    def test_quantum(self):
        '''test chevalley_quantum'''
        self.assertEqual(v(2, -1).scale(q) + v(1, 0), tensor.chevalley_quantum(v(1, -1), 1, F))
        self.assertEqual(v(1, 0).scale(q * q) + v(0, 1), tensor.chevalley_quantum(v(0, 0), 0, F))
        self.assertEqual(v(2, 1, sigma=(1, 1)).scale(q) + v(1, 2, sigma=(1, 1)), tensor.chevalley_quantum(v(1, 1, sigma=(1, 1)), 1, F))


    def test_apply_word(self):
        '''test apply_word'''
        expected = v(-1, 2) + v(0, 1).scale(q) + v(1, 0).scale(q) + v(2, -1).scale(q * q)
        self.assertEqual(expected, tensor.apply_word(v(-1, -1), [1, 0, 1]))
        self.assertEqual(v(3), tensor.apply_word(v(0), [0, 1, 2]))
        self.assertEqual(v(0), tensor.apply_word(v(3), [2, 1, 0], kind=E))


    def test_guard(self):
        '''test max_terms and deadline guards'''
        with self.assertRaises(common.GuardError):
            tensor.apply_word(v(-1, -1), [1, 0, 1], max_terms=1)
        with self.assertRaises(common.GuardError):
            tensor.apply_word(v(0), [0, 1, 2], deadline=time.monotonic() - 1)
        self.assertEqual(v(3), tensor.apply_word(v(0), [0, 1, 2], deadline=time.monotonic() + 60))


    def test_classical_is_quantum_at_one(self):
        '''test evaluating quantum coefficients at q=1 gives the classical action'''
        rng = random.Random(1)
        for x in range(100):
            n = rng.randint(1, 3)
            sigma = None if rng.random() < 0.5 else tuple(rng.choice((1, -1)) for y in range(n))
            vec = random_vector(rng, n, -3, 3, sigma=sigma)
            i = rng.randint(0, 3) if sigma is None else rng.randint(-3, 3)
            for kind in (F, E):
                self.assertEqual(tensor.specialize(tensor.chevalley_classical(vec, i, kind)), tensor.specialize(tensor.chevalley_quantum(vec, i, kind)))


    def test_weight_shift(self):
        '''test f_i lowers weights by alpha_i and e_i raises them'''
        rng = random.Random(2)
        for x in range(100):
            n = rng.randint(1, 4)
            b = tuple(rng.randint(-3, 3) for y in range(n))
            sigma = None if x % 2 else tuple(rng.choice((1, -1)) for y in range(n))
            if sigma is None:
                i = rng.randint(0, 3)
                root = orders.simple_root(i)
            else:
                i = rng.randint(-3, 3)
                root = orders.simple_root(i, orders.TYPE_A)
            wt = orders.weight_of(b, sigma=sigma)
            for a in tensor.chevalley_quantum(v(*b, sigma=sigma), i, F).terms:
                self.assertEqual(wt - root, orders.weight_of(a, sigma=sigma))
            for a in tensor.chevalley_quantum(v(*b, sigma=sigma), i, E).terms:
                self.assertEqual(wt + root, orders.weight_of(a, sigma=sigma))


class TestProjections(unittest.TestCase):
    def test_project(self):
        '''test project'''
        self.assertEqual(v(1, 0), tensor.project(v(1, 0), tensor.PR_K, k=2))
        self.assertEqual(tensor.TensorVec(2), tensor.project(v(3, 0), tensor.PR_K, k=2))
        got = tensor.project(v(1, 0) + v(2, -1).scale(q), tensor.PR_SIGMA, sigma=(1, -1))
        self.assertEqual(v(1, 1, sigma=(1, -1)) + v(2, 2, sigma=(1, -1)).scale(q), got)
        got = tensor.project(v(1, 0, sigma=(1, 1)) + v(1, 2, sigma=(1, 1)), tensor.PR_0)
        self.assertEqual(v(1, 2, sigma=(1, 1)), got)
        with self.assertRaises(tensor.Error):
            tensor.project(v(1, 0), tensor.PR_0)
        with self.assertRaises(tensor.Error):
            tensor.project(v(1, 0), tensor.PR_SIGMA, sigma=(1,))
        with self.assertRaises(tensor.Error):
            tensor.project(v(1, 0), 'pr_x')


    def test_intertwining(self):
        '''test pr_sigma commutes with f_i and e_i for i >= 1'''
        rng = random.Random(3)
        for x in range(100):
            n = rng.randint(1, 3)
            sigma = tuple(rng.choice((1, -1)) for y in range(n))
            vec = random_vector(rng, n, -3, 3, terms=6)
            for y in range(n):
                c = tuple(rng.randint(1, 3) if s > 0 else rng.randint(-3, 0) for s in sigma)
                vec = vec + v(*c)
            projected = tensor.project(vec, tensor.PR_SIGMA, sigma=sigma)
            for i in range(1, 4):
                for kind in (F, E):
                    for act in (tensor.chevalley_classical, tensor.chevalley_quantum):
                        self.assertEqual(tensor.project(act(vec, i, kind), tensor.PR_SIGMA, sigma=sigma), act(projected, i, kind))


    def test_include(self):
        '''test include is a right inverse of pr_sigma'''
        rng = random.Random(4)
        for x in range(50):
            n = rng.randint(1, 3)
            sigma = tuple(rng.choice((1, -1)) for y in range(n))
            vec = random_vector(rng, n, 1, 4, sigma=sigma)
            self.assertEqual(vec, tensor.project(tensor.include(vec), tensor.PR_SIGMA, sigma=sigma))
        with self.assertRaises(tensor.Error):
            tensor.include(v(1, 0))
