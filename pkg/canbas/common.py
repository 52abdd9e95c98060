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
import argparse
import os
version = '0.1.0'

class Error (Exception): pass

class GuardError (Exception): pass


DEFAULT_SUPPORT_GUARD = 10 ** 6
DEFAULT_DEPTH_GUARD = 10 ** 4
OUTPUT_FORMATS = ['json', 'pretty']
SUPPORT_GUARD_ENV = 'CANBAS_SUPPORT_GUARD'
DEPTH_GUARD_ENV = 'CANBAS_DEPTH_GUARD'


class Config:
    def __init__(self, support_guard=DEFAULT_SUPPORT_GUARD, depth_guard=DEFAULT_DEPTH_GUARD, output='pretty'):
        for name, value in [('support_guard', support_guard), ('depth_guard', depth_guard)]:
            if type(value) is not int or value <= 0:
                raise Error('Guard ' + name + ' must be a positive integer, got ' + str(value) + '. Cannot continue.')
        if output not in OUTPUT_FORMATS:
            raise Error('Unknown output format "' + str(output) + '". Cannot continue.')

        self.support_guard = support_guard
        self.depth_guard = depth_guard
        self.output = output


    def __eq__(self, other):
        return type(other) is type(self) and self.__dict__ == other.__dict__


    def __str__(self):
        return 'support_guard=' + str(self.support_guard) + ' depth_guard=' + str(self.depth_guard) + ' output=' + self.output


    @classmethod
    def from_env(cls, support_guard=None, depth_guard=None, output='pretty', environ=None):
        '''Guards given explicitly win, then the environment, then the defaults'''
        if environ is None:
            environ = os.environ
        if support_guard is None:
            support_guard = _int_from_env(environ, SUPPORT_GUARD_ENV, DEFAULT_SUPPORT_GUARD)
        if depth_guard is None:
            depth_guard = _int_from_env(environ, DEPTH_GUARD_ENV, DEFAULT_DEPTH_GUARD)
        return cls(support_guard=support_guard, depth_guard=depth_guard, output=output)


def _int_from_env(environ, key, default):
    if key not in environ:
        return default
    try:
        return int(environ[key])
    except ValueError:
        raise Error('Environment variable ' + key + ' must be an integer, got "' + environ[key] + '". Cannot continue.')


def parse_tuple(s):
    '''Parses "1,-2,3" into (1, -2, 3)'''
    try:
        entries = tuple(int(x) for x in s.split(','))
    except ValueError:
        raise Error('Could not parse tuple "' + s + '". Expected comma-separated integers. Cannot continue.')
    return entries


def parse_sigma(s):
    '''Parses "+-+" into (1, -1, 1)'''
    if len(s) == 0 or any(c not in '+-' for c in s):
        raise Error('Could not parse sign vector "' + s + '". Expected a string of + and -. Cannot continue.')
    return tuple(1 if c == '+' else -1 for c in s)


def sigma_to_string(sigma):
    return ''.join('+' if x > 0 else '-' for x in sigma)


def tuple_to_string(b):
    return ','.join(str(x) for x in b)


def parse_box(s):
    box = parse_tuple(s)
    if len(box) != 2 or box[0] > box[1]:
        raise Error('Box must be LO,HI with LO <= HI, got "' + s + '". Cannot continue.')
    return box


def _argparse_type(parser_function):
    def f(s):
        try:
            return parser_function(s)
        except Error as error:
            raise argparse.ArgumentTypeError(str(error))
    f.__name__ = parser_function.__name__
    return f


tuple_arg = _argparse_type(parse_tuple)
sigma_arg = _argparse_type(parse_sigma)
box_arg = _argparse_type(parse_box)


def check_length(b, sigma):
    if sigma is not None and len(sigma) != len(b):
        raise Error('Sign vector ' + sigma_to_string(sigma) + ' has different length from tuple ' + tuple_to_string(b) + '. Cannot continue.')
