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
from canbas import laurent, selftest, tensor

q = laurent.Q


class TestSelftest(unittest.TestCase):
    def test_expected_n2(self):
        '''test expected_n2'''
        self.assertEqual(tensor.TensorVec(2, terms={(3, 1): 1}), selftest.expected_n2(3, 1))
        self.assertEqual(tensor.TensorVec(2, terms={(1, 3): 1, (3, 1): q}), selftest.expected_n2(1, 3))
        self.assertEqual(tensor.TensorVec(2, terms={(2, -1): 1, (3, -2): q}), selftest.expected_n2(2, -1))
        self.assertEqual(tensor.TensorVec(2, terms={(0, 1): 1, (1, 0): q * q}), selftest.expected_n2(0, 1))
        self.assertEqual(4, len(selftest.expected_n2(-2, 3)))


    def test_checks(self):
        '''test checks'''
        self.assertIn('n6_coefficients', selftest.Tester().checks())
        names = selftest.Tester(skip_slow=True).checks()
        self.assertNotIn('n6_coefficients', names)
        self.assertEqual(8, len(names))


    def test_quick_checks(self):
        '''test the quicker acceptance checks pass'''
        tester = selftest.Tester()
        for name in ['n2_table', 'prime_map', 'crystal', 'construct_dominant']:
            ok, message = getattr(tester, 'check_' + name)()
            self.assertTrue(ok, msg=name + ': ' + message)


    def test_run(self):
        '''test run counts failures'''
        class OneCheck(selftest.Tester):
            def checks(self):
                return ['n2_table', 'failing']

            def check_failing(self):
                return False, 'always fails'

        tester = OneCheck()
        self.assertEqual(1, tester.run())
        self.assertEqual([('n2_table', True, '81 vectors match'), ('failing', False, 'always fails')], tester.results)


    def test_run_unknown_check(self):
        '''test run stops on a check that does not exist'''
        class Misspelt(selftest.Tester):
            def checks(self):
                return ['no_such_check']

        with self.assertRaises(selftest.Error):
            Misspelt().run()
