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
import collections
import itertools
import networkx
import pyfastaq
from canbas import common, orders, tensor

class Error (Exception): pass


def reduce_signature(sig):
    '''Cancels every e with the nearest uncancelled f to its right'''
    marks = list(sig)
    open_e = []
    for t, mark in enumerate(marks):
        if mark == tensor.E:
            open_e.append(t)
        elif mark == tensor.F and len(open_e):
            s = open_e.pop()
            marks[s] = tensor.DOT
            marks[t] = tensor.DOT
    return tuple(marks)


def crystal_op(b, i, kind, sigma=None, k=None):
    '''The crystal operator f~_i (kind f) or e~_i (kind e) on b. Returns None
       for the null result. If k is given this is the crystal of B_k, which
       only has operators with 0 <= i < k'''
    b = tuple(b)
    if kind not in (tensor.F, tensor.E):
        raise Error('Crystal operator must be f or e, got "' + str(kind) + '". Cannot continue.')
    if k is not None:
        if sigma is not None:
            raise Error('The B_k crystal is typeC only. Cannot continue.')
        if not 0 <= i < k:
            raise Error('The B_' + str(k) + ' crystal has no operator with index ' + str(i) + '. Cannot continue.')
        if not orders.in_bk(b, k):
            raise Error('Tuple ' + str(b) + ' is not in B_' + str(k) + '. Cannot continue.')

    reduced = reduce_signature(tensor.isig(b, i, sigma=sigma))
    positions = [t for t, mark in enumerate(reduced) if mark == kind]
    if len(positions) == 0:
        return None
    t = positions[-1] if kind == tensor.F else positions[0]
    return tensor.shift_slot(b, t, kind, sigma=sigma)


def apply_crystal_word(b, word, sigma=None):
    '''Applies (kind, i) operators in order, word[0] first. None propagates'''
    for kind, i in word:
        if b is None:
            return None
        b = crystal_op(b, i, kind, sigma=sigma)
    return b


def component_membership(b):
    '''b is in the connected component of (0,...,0)'''
    return orders.is_antidominant(b)


def prinjective(b):
    return orders.is_antidominant(b)


def z_k(n, k):
    return tuple([1 - k] * n)


def z_k_weight(n, k):
    return orders.epsilon(k - 1, c=-n)


def proof_word(b):
    '''Operators x_t ... x_1 x_{t+1} ... x_n in the order they act, with t the
       last slot holding a negative entry. x_r raises 0 to b_r with f~_0, f~_1, ...
       when b_r >= 0 and lowers it with e~_1, e~_2, ... when b_r < 0'''
    negatives = [r for r in range(len(b)) if b[r] < 0]
    t = negatives[-1] + 1 if len(negatives) else 0
    order = list(range(t - 1, -1, -1)) + list(range(t, len(b)))
    word = []
    for r in order:
        if b[r] >= 0:
            word.extend((tensor.F, i) for i in range(b[r]))
        else:
            word.extend((tensor.E, i) for i in range(1, -b[r] + 1))
    return word


def connect_to_z(b, max_margin=4, verbose=0):
    '''A word of crystal operators taking (0,...,0) to b. The explicit word
       from proof_word is tried first; when it does not land on b, the
       shortest path in a bounded component graph is used instead'''
    b = tuple(b)
    if not orders.is_antidominant(b):
        raise Error('Tuple ' + str(b) + ' is not antidominant, so not connected to z. Cannot continue.')
    z = z_k(len(b), 1)
    word = proof_word(b)
    if apply_crystal_word(z, word) == b:
        return word

    if verbose:
        print('Explicit word does not reach', common.tuple_to_string(b), '... searching component graph', flush=True)
    for margin in range(1, max_margin + 1):
        box = (min(b[0], 0) - margin, max(b[-1], 0) + margin)
        graph = ComponentGraph(len(b), box)
        graph.explore()
        if b in graph.graph:
            word = graph.path(b)
            assert apply_crystal_word(z, word) == b
            return word

    raise Error('Could not connect ' + str(b) + ' to z within margin ' + str(max_margin) + '. Cannot continue.')


def word_to_string(word):
    return ' '.join(kind + str(i) for kind, i in word)


class ComponentGraph:
    '''Bounded breadth-first exploration of the crystal component containing
       z_k. Edges are f~_i arrows; e~_i is walked as the reverse arrow'''
    def __init__(self, n, box, k=1, verbose=0):
        self.n = n
        self.box = box
        self.k = k
        self.verbose = verbose
        self.start = z_k(n, k)
        self.graph = networkx.DiGraph()
        self.max_index = max(abs(box[0]), abs(box[1])) + 1

        if not self._in_box(self.start):
            raise Error('Start tuple ' + str(self.start) + ' is not inside box ' + str(box) + '. Cannot continue.')


    def _in_box(self, b):
        return all(self.box[0] <= x <= self.box[1] for x in b)


    def explore(self):
        self.graph.add_node(self.start)
        queue = collections.deque([self.start])
        while len(queue):
            b = queue.popleft()
            for i in range(self.max_index + 1):
                for kind in (tensor.F, tensor.E):
                    c = crystal_op(b, i, kind)
                    if c is None or not self._in_box(c):
                        continue
                    if c not in self.graph:
                        self.graph.add_node(c)
                        queue.append(c)
                    if kind == tensor.F:
                        self.graph.add_edge(b, c, i=i)
                    else:
                        self.graph.add_edge(c, b, i=i)

        if self.verbose:
            print('Component of', common.tuple_to_string(self.start), 'inside box', self.box, 'has', self.graph.number_of_nodes(), 'nodes', flush=True)


    def reached(self):
        return sorted(self.graph.nodes())


    def path(self, b):
        '''Crystal word from the start tuple to b along a shortest path'''
        nodes = networkx.shortest_path(self.graph.to_undirected(as_view=True), self.start, b)
        word = []
        for u, v in zip(nodes, nodes[1:]):
            if self.graph.has_edge(u, v):
                word.append((tensor.F, self.graph[u][v]['i']))
            else:
                word.append((tensor.E, self.graph[v][u]['i']))
        return word


    def report(self):
        reached = set(self.graph.nodes())
        lo, hi = self.box
        not_reached = []
        not_antidominant = 0
        for b in itertools.product(range(lo, hi + 1), repeat=self.n):
            if not orders.is_antidominant(b):
                not_antidominant += 1
            elif b not in reached:
                not_reached.append(b)

        return {
            'start': list(self.start),
            'box': list(self.box),
            'reached': [list(b) for b in sorted(reached)],
            'not_reached_within_box': [list(b) for b in not_reached],
            'not_antidominant': not_antidominant,
        }


    def adjacency(self):
        '''tuple -> {operator: tuple}, both as strings'''
        adjacency = {}
        for b in self.reached():
            ops = {}
            for c in sorted(self.graph.successors(b)):
                ops['f' + str(self.graph[b][c]['i'])] = common.tuple_to_string(c)
            for a in sorted(self.graph.predecessors(b)):
                ops['e' + str(self.graph[a][b]['i'])] = common.tuple_to_string(a)
            adjacency[common.tuple_to_string(b)] = {key: ops[key] for key in sorted(ops)}
        return adjacency


    def write_dot(self, filename):
        f = pyfastaq.utils.open_file_write(filename)
        print('digraph crystal {', file=f)
        for b in self.reached():
            print('    "' + common.tuple_to_string(b) + '";', file=f)
        for a, c in sorted(self.graph.edges()):
            print('    "' + common.tuple_to_string(a) + '" -> "' + common.tuple_to_string(c) + '" [label="f' + str(self.graph[a][c]['i']) + '"];', file=f)
        print('}', file=f)
        pyfastaq.utils.close(f)
