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
from canbas import common, crystal, orders, tensor

class Error (Exception): pass

CIRCLE = 'o'
DOWN = 'v'
UP = '^'
CROSS = 'x'


class ArcDiagram:
    '''Labelling of the vertices 1, 2, 3, ... by o, v, ^, x. Only the
       finitely many vertices not labelled ^ are stored'''
    def __init__(self, labels, n):
        self.labels = {}
        for vertex, label in labels.items():
            if vertex < 1 or label not in (CIRCLE, DOWN, UP, CROSS):
                raise Error('Bad vertex label ' + str(vertex) + ':' + str(label) + '. Cannot continue.')
            if label != UP:
                self.labels[vertex] = label
        self.n = n


    def __eq__(self, other):
        return type(other) is type(self) and self.__dict__ == other.__dict__


    def __hash__(self):
        return hash((self.n, frozenset(self.labels.items())))


    def label(self, vertex):
        return self.labels.get(vertex, UP)


    def count(self, label):
        return len([x for x in self.labels.values() if x == label])


    def __str__(self):
        return render(self)


    def to_json(self):
        return {'non_wedge': {str(v): self.labels[v] for v in sorted(self.labels)}, 'n': self.n}


def render(diagram):
    '''Labels of vertices 1 .. (last non-^ vertex + 2), then "..." for the
       all-^ tail. For example "^v^^..."'''
    last = max(diagram.labels) if len(diagram.labels) else 0
    return ''.join(diagram.label(v) for v in range(1, last + 3)) + '...'


def in_lambda(diagram):
    return diagram.count(CROSS) + diagram.count(CIRCLE) + 2 * diagram.count(DOWN) == diagram.n


def weight_diagram(b):
    b = tuple(b)
    if not orders.is_strictly_dominant(b):
        raise Error('Weight diagrams need a strictly dominant tuple, got ' + str(b) + '. Cannot continue.')

    down_set = set(x for x in b if x > 0)
    not_up_set = set(1 - x for x in b if x <= 0)
    labels = {}
    for vertex in down_set | not_up_set:
        if vertex in down_set:
            labels[vertex] = DOWN if vertex in not_up_set else CROSS
        else:
            labels[vertex] = CIRCLE
    return ArcDiagram(labels, len(b))


def atypicality(b):
    return len([1 for r in range(len(b)) for s in range(r + 1, len(b)) if b[r] + b[s] == 1])


def same_entry_atypicality(b):
    return len([1 for r in range(len(b)) for s in range(r + 1, len(b)) if b[r] == b[s]])


def block_stats(b):
    n0 = len([x for x in b if x > 0])
    return n0, len(b) - n0, atypicality(b)


def _next_step(b):
    '''One step towards a typical tuple: returns (operator, new tuple)'''
    entries = set(b)
    r = min(r for r in range(len(b)) if 1 - b[r] in b[r + 1:])
    i = b[r]
    j = i
    while j + 1 in entries or -j in entries:
        j += 1

    if j == i:
        kind, index = tensor.F, i
        expected = tuple(i + 1 if x == i else x for x in b)
    elif j in entries:
        kind, index = tensor.F, j
        expected = tuple(j + 1 if x == j else x for x in b)
    elif 1 - j in entries:
        kind, index = tensor.E, j
        expected = tuple(-j if x == 1 - j else x for x in b)
    else:
        raise Error('No crystal step found for ' + str(b) + '. Cannot continue.')

    c = crystal.crystal_op(b, index, kind)
    if c != expected:
        raise Error('Crystal operator ' + kind + str(index) + ' on ' + str(b) + ' gave ' + str(c) + ', expected ' + str(expected) + '. Cannot continue.')
    return (kind, index), c


def typical_connection(b, max_steps=10000):
    '''Crystal word (operators in the order they act) from b in B+_{n0|n1}
       to a typical tuple in the same set, and that tuple'''
    b = tuple(b)
    n0, n1, atyp = block_stats(b)
    if not orders.in_b_plus(b, n0, n1):
        raise Error('Tuple ' + str(b) + ' is not in B+. Cannot continue.')

    word = []
    while not orders.is_typical(b):
        if len(word) >= max_steps:
            raise common.GuardError('No typical tuple reached after ' + str(max_steps) + ' steps. Cannot continue.')
        op, b = _next_step(b)
        word.append(op)

    if not orders.in_b_plus(b, n0, n1):
        raise Error('Typical endpoint ' + str(b) + ' left B+. Cannot continue.')
    return word, b
