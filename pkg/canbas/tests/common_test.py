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
import argparse
from canbas import common


class TestCommon(unittest.TestCase):
    def test_config(self):
        '''test Config'''
        c = common.Config()
        self.assertEqual(10 ** 6, c.support_guard)
        self.assertEqual(10 ** 4, c.depth_guard)
        self.assertEqual('pretty', c.output)
        with self.assertRaises(common.Error):
            common.Config(support_guard=0)
        with self.assertRaises(common.Error):
            common.Config(depth_guard=-1)
        with self.assertRaises(common.Error):
            common.Config(output='xml')


    def test_config_from_env(self):
        '''test Config.from_env'''
        c = common.Config.from_env(environ={})
        self.assertEqual(common.Config(), c)
        c = common.Config.from_env(environ={'CANBAS_SUPPORT_GUARD': '42', 'CANBAS_DEPTH_GUARD': '7'})
        self.assertEqual(common.Config(support_guard=42, depth_guard=7), c)
        c = common.Config.from_env(support_guard=5, environ={'CANBAS_SUPPORT_GUARD': '42'}, output='json')
        self.assertEqual(common.Config(support_guard=5, output='json'), c)
        with self.assertRaises(common.Error):
            common.Config.from_env(environ={'CANBAS_DEPTH_GUARD': 'lots'})


    def test_parse_tuple(self):
        '''test parse_tuple'''
        self.assertEqual((2, -1, -1, 4), common.parse_tuple('2,-1,-1,4'))
        self.assertEqual((5,), common.parse_tuple('5'))
        with self.assertRaises(common.Error):
            common.parse_tuple('1,,2')
        with self.assertRaises(common.Error):
            common.parse_tuple('a')


    def test_parse_sigma(self):
        '''test parse_sigma and sigma_to_string'''
        self.assertEqual((1, -1, 1), common.parse_sigma('+-+'))
        self.assertEqual('+-+', common.sigma_to_string((1, -1, 1)))
        with self.assertRaises(common.Error):
            common.parse_sigma('+x')
        with self.assertRaises(common.Error):
            common.parse_sigma('')


    def test_parse_box(self):
        '''test parse_box'''
        self.assertEqual((-2, 2), common.parse_box('-2,2'))
        with self.assertRaises(common.Error):
            common.parse_box('2,-2')
        with self.assertRaises(common.Error):
            common.parse_box('1,2,3')


    def test_argparse_types(self):
        '''test argparse type wrappers'''
        self.assertEqual((0, 1), common.tuple_arg('0,1'))
        with self.assertRaises(argparse.ArgumentTypeError):
            common.tuple_arg('0;1')
        with self.assertRaises(argparse.ArgumentTypeError):
            common.sigma_arg('++a')


    def test_check_length(self):
        '''test check_length'''
        common.check_length((1, 2), (1, -1))
        common.check_length((1, 2), None)
        with self.assertRaises(common.Error):
            common.check_length((1, 2), (1,))
