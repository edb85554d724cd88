# -*- coding: utf-8 -*-
"""
Command-line interface to lambdabuildings
"""

import argparse
import json
import logging
import sys
from fractions import Fraction

from sklearn.utils import Bunch

from .errors import InvariantViolation, LambdaBuildingError, PrecisionExhausted
from .exact_fields import as_rational, get_default_depth
from .info import __version__
from . import utils

LGR = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3
FORMATS = ('json', 'text', 'dot')


def make_config(n=2, depth=None, seed=1234, samples=50, output='json',
                n_jobs=1):
    """
    Validates command-line settings

    Parameters
    ----------
    n : int, optional
        Dimension, between 2 and 4. Default: 2
    depth : rational, optional
        Truncation depth. Default: ``LB_DEPTH`` if set, else 8
    seed : int, optional
        Seed for random number generation. Default: 1234
    samples : int, optional
        Number of sampled instances. Default: 50
    output : {'json', 'text', 'dot'}, optional
        Output format. Default: 'json'
    n_jobs : int, optional
        Number of parallel workers. Default: 1

    Returns
    -------
    config : :class:`sklearn.utils.Bunch`
        With keys 'n', 'truncation_depth', 'seed', 'sample_size', 'output'
        and 'n_jobs'

    Raises
    ------
    InvariantViolation
        If any setting is out of range
    """
    if not 2 <= n <= 4:
        raise InvariantViolation('Provided `n` must lie in [2, 4], not {}'
                                 .format(n))
    depth = get_default_depth(depth)
    if depth <= 0:
        raise InvariantViolation('Provided `depth` must be positive, not {}'
                                 .format(depth))
    if samples < 1:
        raise InvariantViolation('Provided `samples` must be positive, not {}'
                                 .format(samples))
    if not 0 <= seed < 2 ** 64:
        raise InvariantViolation('Provided `seed` must be a 64-bit unsigned '
                                 'integer, not {}'.format(seed))
    if output not in FORMATS:
        raise InvariantViolation('Provided `output` must be one of {}, not {}'
                                 .format(list(FORMATS), output))
    return Bunch(n=n, truncation_depth=depth, seed=seed, sample_size=samples,
                 output=output, n_jobs=n_jobs)


def _seed(config):
    # numpy seeds are 32-bit
    return config.seed % (2 ** 32)


def _read_json(fname):
    try:
        with open(fname, 'r') as src:
            return json.load(src)
    except OSError as err:
        raise ValueError('Could not read {}: {}'.format(fname, err))
    except json.JSONDecodeError as err:
        raise ValueError('Invalid JSON in {}: {}'.format(fname, err))


def _pair(data):
    points = data.get('points') if isinstance(data, dict) else data
    if not isinstance(points, list) or len(points) != 2:
        raise ValueError('Input must hold exactly two points')
    return points


def cmd_dist(args, config):
    """Distances between the two points of a JSON file"""
    points = _pair(_read_json(args.file))
    depth = config.truncation_depth
    if args.space == 'symmetric':
        from .symmetric_space import (lambda_distance, pd_point_from_json,
                                      valuation_distance, valuation_vector)
        P, Q = (pd_point_from_json(p, depth=depth) for p in points)
        out = dict(vector=[str(v) for v in valuation_vector(P, Q)],
                   scalar=str(valuation_distance(P, Q)))
        try:
            out['lambda'] = str(lambda_distance(P, Q))
        except LambdaBuildingError as err:
            LGR.info('Skipping log-valued distance: %s', err)
        return out, EXIT_OK
    from .building import building_point_from_json, distance_report
    x, y = (building_point_from_json(p, depth=depth) for p in points)
    return distance_report(x, y), EXIT_OK


def _report_result(report):
    out = utils.report_to_dict(report)
    return out, EXIT_OK if report.passed else EXIT_FAIL


def cmd_axioms(args, config):
    """Building axiom suite"""
    from .axioms import axiom_suite
    return _report_result(axiom_suite(n=config.n,
                                      sample_size=config.sample_size,
                                      seed=_seed(config),
                                      n_jobs=config.n_jobs,
                                      verbose=args.verbose,
                                      depth=config.truncation_depth))


def cmd_cone(args, config):
    """Cone distances along both paths"""
    from .cone import compare_paths, load_trajectory, worked_example_distances
    if args.examples:
        results = worked_example_distances()
        ok = all(r['equal'] and r['building_distance'] == r['expected']
                 for r in results)
        return dict(examples=results), EXIT_OK if ok else EXIT_FAIL
    if len(args.files) != 2:
        raise ValueError('cone needs two trajectory files or --examples')
    first, second = (load_trajectory(f, depth=config.truncation_depth)
                     for f in args.files)
    result = compare_paths(first, second)
    return result, EXIT_OK if result['equal'] else EXIT_FAIL


def cmd_flags(args, config):
    """Chambers of a sector in the local building and at infinity"""
    from .building import building_point_from_json
    from .flags import chamber_at_infinity, germ_at, sector_from_json
    data = _read_json(args.file)
    depth = config.truncation_depth
    sector = sector_from_json(data.get('sector', data)
                              if isinstance(data, dict) else data,
                              depth=depth)
    if isinstance(data, dict) and 'point' in data:
        # germ of the parallel sector, read in the given representative
        base = building_point_from_json(data['point'], depth=depth)
        local = sector.based_at(base)
    else:
        base, local = sector.base, sector
    return dict(base=base.to_json(),
                germ=germ_at(base, local).to_json(),
                infinity=chamber_at_infinity(sector).to_json()), EXIT_OK


def cmd_pd_point(args, config):
    """Validates a symmetric space point and reports its projection"""
    from .building import project, base_point, vector_distance
    from .symmetric_space import pd_point_from_json, valuation_distance
    from .symmetric_space import identity_point
    P = pd_point_from_json(_read_json(args.file),
                           depth=config.truncation_depth)
    x = project(P)
    vec = vector_distance(base_point(P.n), x)
    return dict(point=P.to_json(), projection=x.to_json(),
                distance_to_identity=str(valuation_distance(
                    identity_point(P.n), P)),
                projection_vector=[str(v) for v in vec]), EXIT_OK


def cmd_tree(args, config):
    """Subtree of the n = 2 building spanned by sampled points"""
    from .building import tree_fragment_dot
    from .datasets import make_building_point
    seeds = utils.draw_seeds(_seed(config), config.sample_size)
    points = [make_building_point(2, seed=s, denominators=(1,))
              for s in seeds]
    if config.output == 'dot':
        return tree_fragment_dot(points), EXIT_OK
    return dict(points=[p.to_json() for p in points]), EXIT_OK


def cmd_kostant(args, config):
    """Kostant convexity of Iwasawa projections"""
    from .symmetric_space import kostant_check
    return _report_result(kostant_check(samples=config.sample_size,
                                        n=config.n, seed=_seed(config),
                                        n_jobs=config.n_jobs,
                                        verbose=args.verbose,
                                        depth=config.truncation_depth))


COMMANDS = {
    'dist': cmd_dist,
    'axioms': cmd_axioms,
    'cone': cmd_cone,
    'flags': cmd_flags,
    'pd-point': cmd_pd_point,
    'tree': cmd_tree,
    'kostant': cmd_kostant,
}


def get_parser():
    """Returns the argument parser of the `lambdabuildings` command"""
    parser = argparse.ArgumentParser(
        prog='lambdabuildings',
        description='Exact computations in affine buildings of SL_n over a '
                    'field of Puiseux series. Exit codes: 0 success, 1 '
                    'counterexample or mismatch, 2 invalid input, 3 '
                    'precision exhausted.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='Increase logging verbosity')
    parser.add_argument('--n', type=int, default=2,
                        help='Dimension of sampled configurations (2-4)')
    parser.add_argument('--depth', type=as_rational, default=None,
                        help='Truncation depth; defaults to $LB_DEPTH or 8')
    parser.add_argument('--seed', type=int, default=1234,
                        help='Seed for random sampling')
    parser.add_argument('--samples', type=int, default=50,
                        help='Number of sampled instances')
    parser.add_argument('--format', dest='output', default='json',
                        choices=FORMATS, help='Output format')
    parser.add_argument('--n-jobs', type=int, default=1,
                        help='Number of parallel workers')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    dist = sub.add_parser('dist', help=cmd_dist.__doc__)
    dist.add_argument('file', help='JSON file with two points')
    dist.add_argument('--space', choices=('building', 'symmetric'),
                      default='building',
                      help='Read building points or positive definite '
                           'points')
    sub.add_parser('axioms', help=cmd_axioms.__doc__)
    cone = sub.add_parser('cone', help=cmd_cone.__doc__)
    cone.add_argument('files', nargs='*', help='Two JSON trajectory files')
    cone.add_argument('--examples', action='store_true',
                      help='Run the packaged worked examples')
    flags = sub.add_parser('flags', help=cmd_flags.__doc__)
    flags.add_argument('file', help='JSON file with a sector and optionally '
                                     'a point of its apartment')
    pd_point = sub.add_parser('pd-point', help=cmd_pd_point.__doc__)
    pd_point.add_argument('file', help='JSON file with a point')
    sub.add_parser('tree', help=cmd_tree.__doc__)
    sub.add_parser('kostant', help=cmd_kostant.__doc__)
    return parser


def _default(value):
    if isinstance(value, Fraction):
        return str(value)
    raise TypeError('Cannot serialize {!r}'.format(value))


def _as_text(value, indent=0):
    pad = '  ' * indent
    if isinstance(value, dict):
        lines = []
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and item:
                lines.append('{}{}:'.format(pad, key))
                lines.append(_as_text(item, indent + 1))
            else:
                lines.append('{}{}: {}'.format(pad, key, item))
        return '\n'.join(lines)
    if isinstance(value, list):
        return '\n'.join(_as_text(v, indent) if isinstance(v, (dict, list))
                         else '{}- {}'.format(pad, v) for v in value)
    return '{}{}'.format(pad, value)


def render(result, output):
    """Serializes a command result in the requested format"""
    if isinstance(result, str):
        return result
    if output == 'text':
        return _as_text(result)
    return json.dumps(result, indent=2, sort_keys=True, default=_default)


def main(argv=None):
    """
    Runs the command line and returns its exit code

    Parameters
    ----------
    argv : list of str, optional
        Arguments; defaults to ``sys.argv[1:]``

    Returns
    -------
    code : int
    """
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code
    logging.basicConfig(stream=sys.stderr,
                        format='%(name)s %(levelname)s: %(message)s',
                        level=max(logging.WARNING - 10 * args.verbose,
                                  logging.DEBUG))
    utils.set_verbosity(args.verbose)
    try:
        config = make_config(n=args.n, depth=args.depth, seed=args.seed,
                             samples=args.samples, output=args.output,
                             n_jobs=args.n_jobs)
        if config.output == 'dot' and args.command != 'tree':
            raise InvariantViolation('dot output is only available for tree')
        result, code = COMMANDS[args.command](args, config)
    except PrecisionExhausted as err:
        print('precision exhausted in {}: {}'.format(err.operation, err),
              file=sys.stderr)
        return EXIT_PRECISION
    except (ValueError, TypeError, LambdaBuildingError) as err:
        print('error: {}'.format(err), file=sys.stderr)
        return EXIT_USAGE
    print(render(result, config.output))
    return code


if __name__ == '__main__':
    sys.exit(main())
