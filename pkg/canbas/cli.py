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
import json
import sys
import pyfastaq
from canbas import blocks, canonical, common, crystal, laurent, orders, selftest, tensor

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_GUARD = 2
EXIT_USAGE = 3


class UsageError (Exception): pass


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(self.prog + ': error: ' + message, file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _weight_arg(s):
    '''Parses "0:-2,1:1" into the typeC weight -2eps0 + eps1'''
    try:
        coeffs = {}
        for piece in s.split(','):
            i, c = piece.split(':')
            coeffs[int(i)] = coeffs.get(int(i), 0) + int(c)
        return orders.Weight(coeffs)
    except (ValueError, orders.Error):
        raise argparse.ArgumentTypeError('Could not parse weight "' + s + '". Expected index:coefficient pairs, e.g. 0:-2,1:1')


def _write(options, config, json_data, pretty_lines):
    f = pyfastaq.utils.open_file_write(options.outfile)
    if config.output == 'json':
        print(json.dumps(json_data, indent=2), file=f)
    else:
        for line in pretty_lines:
            print(line, file=f)
    pyfastaq.utils.close(f)


def _sigma_for_type(options, b):
    if options.type == 'c':
        if options.sigma is not None:
            raise UsageError('--sigma is only used with --type a')
        return None
    if options.sigma is None:
        raise UsageError('--type a needs --sigma')
    if len(options.sigma) != len(b):
        raise UsageError('--sigma and the tuple have different lengths')
    return options.sigma


def run_canonical(options, config):
    sigma = _sigma_for_type(options, options.b)
    engine = canonical.CanonicalBasis.from_config(config, verbose=options.verbose)
    entry = engine.canonical_basis(options.b, sigma=sigma)
    vector = tensor.specialize(entry.vector) if options.q1 else entry.vector

    certificates = {}
    if not options.no_check:
        certificates = engine.certify(entry)

    json_data = vector.to_json()
    json_data['certificates'] = certificates
    _write(options, config, json_data, [str(vector)])

    failed = [name for name in sorted(certificates) if not certificates[name]]
    if len(failed):
        print('Failed checks:', ', '.join(failed), file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def run_bruhat(options, config):
    if len(options.a) != len(options.b):
        raise UsageError('--a and --b have different lengths')
    sigma = _sigma_for_type(options, options.b)
    witness = orders.bruhat_witness(options.a, options.b, sigma=sigma)
    reverse = orders.bruhat_witness(options.b, options.a, sigma=sigma)

    if options.a == options.b:
        line = 'a ⪯ b (equal)'
    elif witness is None:
        line = 'a ⪯ b'
    else:
        s, i, na, nb, reason = witness
        line = 'a ⋠ b (' + reason + ' at s=' + str(s) + ', i=' + str(i) + ': N(a)=' + str(na) + ', N(b)=' + str(nb) + ')'
    lines = [line]
    if options.a != options.b and reverse is None:
        lines.append('b ⪯ a')

    def witness_json(w):
        if w is None:
            return None
        return {'s': w[0], 'i': w[1], 'N_a': w[2], 'N_b': w[3], 'reason': w[4]}

    json_data = {
        'a': list(options.a),
        'b': list(options.b),
        'order': orders.TYPE_C if sigma is None else orders.TYPE_A,
        'leq': witness is None,
        'geq': reverse is None,
        'equal': options.a == options.b,
        'violation': witness_json(witness),
    }
    if sigma is not None:
        json_data['sigma'] = common.sigma_to_string(sigma)
    _write(options, config, json_data, lines)
    return EXIT_OK


def run_crystal(options, config):
    if options.sigma is not None and len(options.sigma) != len(options.b):
        raise UsageError('--sigma and --b have different lengths')
    if options.sigma is None and options.i < 0:
        raise UsageError('typeC crystal operators need --i >= 0')
    result = crystal.crystal_op(options.b, options.i, options.op, sigma=options.sigma)
    line = 'none' if result is None else common.tuple_to_string(result)
    json_data = {'b': list(options.b), 'op': options.op + str(options.i), 'result': None if result is None else list(result)}
    _write(options, config, json_data, [line])
    return EXIT_OK


def run_component(options, config):
    graph = crystal.ComponentGraph(options.n, options.box, k=options.k, verbose=options.verbose)
    graph.explore()
    report = graph.report()
    lines = [
        'start\t' + common.tuple_to_string(report['start']),
        'box\t' + common.tuple_to_string(report['box']),
        'reached\t' + str(len(report['reached'])),
    ]
    lines.extend('\t' + common.tuple_to_string(b) for b in report['reached'])
    lines.append('not_reached_within_box\t' + str(len(report['not_reached_within_box'])))
    lines.extend('\t' + common.tuple_to_string(b) for b in report['not_reached_within_box'])
    lines.append('not_antidominant\t' + str(report['not_antidominant']))

    if options.connect is not None:
        if len(options.connect) != options.n:
            raise UsageError('--connect tuple must have length --n')
        word = crystal.connect_to_z(options.connect, verbose=options.verbose)
        report['connect'] = {'b': list(options.connect), 'word': [kind + str(i) for kind, i in word]}
        lines.append('connect\t' + common.tuple_to_string(options.connect) + '\t' + crystal.word_to_string(word))

    if options.json is not None:
        f = pyfastaq.utils.open_file_write(options.json)
        print(json.dumps(graph.adjacency(), indent=2), file=f)
        pyfastaq.utils.close(f)
    if options.dot is not None:
        graph.write_dot(options.dot)

    _write(options, config, report, lines)
    return EXIT_OK


def run_arc(options, config):
    b = options.b
    n0, n1, atypicality = blocks.block_stats(b)
    json_data = {'b': list(b), 'n0': n0, 'n1': n1, 'atypicality': atypicality, 'diagram': None}
    lines = ['n0\t' + str(n0), 'n1\t' + str(n1), 'atypicality\t' + str(atypicality)]
    if orders.is_strictly_dominant(b):
        diagram = blocks.weight_diagram(b)
        json_data['diagram'] = diagram.to_json()
        json_data['in_lambda'] = blocks.in_lambda(diagram)
        word, typical = blocks.typical_connection(b)
        json_data['typical_connection'] = {'word': [kind + str(i) for kind, i in word], 'typical': list(typical)}
        lines = ['diagram\t' + blocks.render(diagram)] + lines
        lines.append('in_lambda\t' + ('yes' if json_data['in_lambda'] else 'no'))
        lines.append('typical\t' + common.tuple_to_string(typical) + '\t' + crystal.word_to_string(word))
    else:
        lines = ['diagram\tnone (not strictly dominant)'] + lines
    _write(options, config, json_data, lines)
    return EXIT_OK


def run_scan(options, config):
    if options.b is not None:
        tuples = options.b
        if options.n is not None and any(len(b) != options.n for b in tuples):
            raise UsageError('every --b must have length --n')
    else:
        if options.n is None or options.box is None:
            raise UsageError('scan needs --n and --box, or at least one --b')
        tuples = list(canonical.box_tuples(options.n, options.box, weight=options.weight))
    if options.time_budget is not None and options.time_budget <= 0:
        raise UsageError('--time_budget must be positive')

    hits, exhausted = canonical.negativity_scan(
        tuples,
        support_guard=config.support_guard,
        depth_guard=config.depth_guard,
        time_budget=options.time_budget,
        threads=options.threads,
        verbose=options.verbose,
    )
    lines = ['scanned\t' + str(len(set(tuples))), 'negative\t' + str(len(hits))]
    lines.extend('\t'.join(['hit', common.tuple_to_string(a), common.tuple_to_string(b), str(p)]) for a, b, p in hits)
    lines.append('exhausted\t' + str(len(exhausted)))
    lines.extend('\t'.join(['exhausted', common.tuple_to_string(b), message]) for b, message in exhausted)
    json_data = {
        'scanned': len(set(tuples)),
        'hits': [{'a': list(a), 'b': list(b), 'poly': p.to_json()} for a, b, p in hits],
        'exhausted': [{'b': list(b), 'message': message} for b, message in exhausted],
    }
    _write(options, config, json_data, lines)
    return EXIT_OK


def run_ckw(options, config):
    engine = canonical.CanonicalBasis.from_config(config, verbose=options.verbose)
    equal, lhs, rhs = canonical.verify_ckw(options.b, engine)
    lines = [
        'sigma\t' + common.sigma_to_string(orders.sigma_of(options.b)),
        'pr_sigma(c_b)\t' + str(lhs),
        'pr_0(c^sigma_b\')\t' + str(rhs),
        'equal\t' + ('yes' if equal else 'no'),
    ]
    json_data = {'b': list(options.b), 'equal': equal, 'lhs': lhs.to_json(), 'rhs': rhs.to_json()}
    _write(options, config, json_data, lines)
    return EXIT_OK if equal else EXIT_FAILURE


def run_selftest(options, config):
    tester = selftest.Tester(config=config, skip_slow=options.skip_slow, verbose=options.verbose)
    failures = tester.run()
    return EXIT_FAILURE if failures else EXIT_OK


def _make_parser():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument('--output', choices=common.OUTPUT_FORMATS, default='pretty', help='Output format [%(default)s]')
    shared.add_argument('--outfile', default='-', help='Write output to this file, "-" for stdout [%(default)s]', metavar='FILENAME')
    shared.add_argument('--support_guard', type=int, help='Maximum number of terms in any vector [env ' + common.SUPPORT_GUARD_ENV + ' or ' + str(common.DEFAULT_SUPPORT_GUARD) + ']', metavar='INT')
    shared.add_argument('--depth_guard', type=int, help='Maximum straightening steps and nesting depth [env ' + common.DEPTH_GUARD_ENV + ' or ' + str(common.DEFAULT_DEPTH_GUARD) + ']', metavar='INT')
    shared.add_argument('--verbose', action='count', default=0, help='Be verbose. Use twice for more detail')

    parser = ArgumentParser(
        prog='canbas',
        description='Canonical bases, Bruhat orders and crystals for tensor powers of the natural modules of sp(2infinity) and sl(+infinity)',
    )
    parser.add_argument('--version', action='version', version=common.version)
    subparsers = parser.add_subparsers(title='Available commands', help='', metavar='')

    def add(name, description, func):
        sub = subparsers.add_parser(name, parents=[shared], help=description, description=description)
        sub.set_defaults(func=func)
        return sub

    sub = add('canonical', 'Canonical basis vector c_b', run_canonical)
    sub.add_argument('--type', choices=['c', 'a'], default='c', help='c: V^n for sp, a: V^sigma for sl [%(default)s]')
    sub.add_argument('--sigma', type=common.sigma_arg, help='Sign vector for --type a, e.g. +-+')
    sub.add_argument('--b', type=common.tuple_arg, required=True, help='Comma-separated tuple, e.g. 0,1', metavar='B')
    sub.add_argument('--q1', action='store_true', help='Specialize coefficients at q=1')
    sub.add_argument('--no_check', action='store_true', help='Do not certify the computed vector')

    sub = add('bruhat', 'Compare two tuples in the Bruhat order', run_bruhat)
    sub.add_argument('--type', choices=['c', 'a'], default='c', help='Order to use [%(default)s]')
    sub.add_argument('--sigma', type=common.sigma_arg, help='Sign vector for --type a')
    sub.add_argument('--a', type=common.tuple_arg, required=True, metavar='A')
    sub.add_argument('--b', type=common.tuple_arg, required=True, metavar='B')

    sub = add('crystal', 'Apply a crystal operator', run_crystal)
    sub.add_argument('--op', choices=[tensor.F, tensor.E], required=True)
    sub.add_argument('--i', type=int, required=True, metavar='I')
    sub.add_argument('--b', type=common.tuple_arg, required=True, metavar='B')
    sub.add_argument('--sigma', type=common.sigma_arg, help='Use the sl crystal with this sign vector')

    sub = add('component', 'Explore the crystal component of z inside a box', run_component)
    sub.add_argument('--box', type=common.box_arg, required=True, help='Entry range LO,HI', metavar='LO,HI')
    sub.add_argument('--n', type=int, required=True, metavar='N')
    sub.add_argument('--k', type=int, default=1, help='Start from z_k = (1-k,...,1-k) [%(default)s]')
    sub.add_argument('--connect', type=common.tuple_arg, help='Also print a crystal word from z to this antidominant tuple', metavar='B')
    sub.add_argument('--json', help='Write JSON adjacency of the component to this file', metavar='FILENAME')
    sub.add_argument('--dot', help='Write the component in DOT format to this file', metavar='FILENAME')

    sub = add('arc', 'Weight diagram and block statistics', run_arc)
    sub.add_argument('--b', type=common.tuple_arg, required=True, metavar='B')

    sub = add('scan', 'Search canonical vectors for negative coefficients', run_scan)
    sub.add_argument('--n', type=int, metavar='N')
    sub.add_argument('--box', type=common.box_arg, metavar='LO,HI')
    sub.add_argument('--weight', type=_weight_arg, help='Only tuples with this total weight, e.g. 0:-2,1:1', metavar='W')
    sub.add_argument('--b', type=common.tuple_arg, action='append', help='Scan this tuple. Can be used more than once', metavar='B')
    sub.add_argument('--threads', type=int, default=1, help='Number of threads [%(default)s]', metavar='INT')
    sub.add_argument('--time_budget', type=float, help='Give up on a tuple after this many seconds and report it as exhausted [no limit]', metavar='FLOAT')

    sub = add('ckw', 'Compare pr_sigma(c_b) with pr_0(c^sigma_b\')', run_ckw)
    sub.add_argument('--b', type=common.tuple_arg, required=True, metavar='B')

    sub = add('selftest', 'Run the acceptance checks', run_selftest)
    sub.add_argument('--skip_slow', action='store_true', help='Skip the n=6 examples')

    return parser


def main(argv=None):
    parser = _make_parser()
    options = parser.parse_args(argv)
    if not hasattr(options, 'func'):
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        config = common.Config.from_env(options.support_guard, options.depth_guard, options.output)
        return options.func(options, config)
    except UsageError as error:
        parser.print_usage(sys.stderr)
        print('canbas: error:', error, file=sys.stderr)
        return EXIT_USAGE
    except common.Error as error:
        print(error, file=sys.stderr)
        return EXIT_USAGE
    except common.GuardError as error:
        print('Guard exhausted:', error, file=sys.stderr)
        return EXIT_GUARD
    except (blocks.Error, canonical.Error, crystal.Error, laurent.Error, orders.Error, selftest.Error, tensor.Error) as error:
        print(error, file=sys.stderr)
        return EXIT_FAILURE
