# -*- coding: utf-8 -*-
"""Command line interface

Partitions are written as JSON lists of blocks, e.g. ``[[0,1],[2]]``.
Commutator terms use ``term := x | [term,term(,term)*]``. Cubes print their
vertices in index order, where bit k of the index is coordinate k.

Exit codes: 0 success or property holds, 1 property fails or a
counterexample was found, 2 usage or input error, 3 a resource cap was hit.
"""
import json
import logging
import sys
import click

from . import __version__
from . import cube as cubes_
from .commutator import centrality, higher_commutator, higher_commutator_oracle, hc8_diagnostic
from .congruence import Partition
from .convert import load_finite_algebra
from .matrices import generate_full
from .options import OPTIONS, load_options, set_options
from .series import check as check_property, derived_series, dim_series, left_lcs, right_lcs, parse_term
from .utils import HicommException, ResourceCapError
from .verify import CHECKS, Bounds, run_check

log = logging.getLogger(__name__)


class PartitionType(click.ParamType):
    name = 'partition'

    def convert(self, value, param, ctx):
        if isinstance(value, Partition):
            return value
        try:
            return Partition.parse(value)
        except HicommException as e:
            self.fail(str(e.parameter), param, ctx)


class SigmaType(click.ParamType):
    name = 'permutation'

    def convert(self, value, param, ctx):
        try:
            return [int(s) for s in value.split(',')]
        except ValueError:
            self.fail('%r is not a comma separated permutation' % value, param, ctx)


PARTITION = PartitionType()
SIGMA = SigmaType()
ALGEBRA = click.Path(exists=True, dir_okay=False)


def _emit(ctx, text_lines, obj):
    if ctx.obj['format'] == 'json':
        click.echo(json.dumps(obj, sort_keys=True))
    else:
        for line in text_lines:
            click.echo(line)


def _load(path, congruences=()):
    alg = load_finite_algebra(path)
    for p in congruences:
        if p.size != alg.size:
            raise click.BadParameter('partition %s is on %d points, %s has size %d'
                                     % (p.render(), p.size, alg.name, alg.size))
    return alg


@click.group(context_settings={'help_option_names': ['-h', '--help']})
@click.version_option(__version__, prog_name='hicomm')
@click.option('--cube-cap', type=int, default=None, help='Most cubes stored by bounded generation.')
@click.option('--matrix-cap', type=int, default=None, help='Largest N**(2**n) for full generation.')
@click.option('--config', type=click.Path(exists=True, dir_okay=False), default=None,
              help='YAML file of options; flags override it.')
@click.option('--seed', type=int, default=None, help='Seed recorded with the run.')
@click.option('--workers', type=int, default=None, help='Threads for block evaluation.')
@click.option('--format', 'fmt', type=click.Choice(['text', 'json']), default='text')
@click.option('--verbose', is_flag=True, help='Log progress to stderr.')
@click.pass_context
def cli(ctx, cube_cap, matrix_cap, config, seed, workers, fmt, verbose):
    """Higher commutators of finite algebras and bounded checks on the
    ladder algebras."""
    if verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)
    values = load_options(config) if config else {}
    for name, value in (('cube_cap', cube_cap), ('matrix_cap', matrix_cap),
                        ('seed', seed), ('workers', workers)):
        if value is not None:
            values[name] = value
    try:
        ctx.with_resource(set_options(**values))
    except ValueError as e:
        raise click.UsageError(str(e))
    ctx.obj = {'format': fmt}
    resolved = dict(OPTIONS, format=fmt)
    click.echo('config: %s' % json.dumps(resolved, sort_keys=True), err=True)


@cli.command()
@click.option('-a', '--algebra', 'path', type=ALGEBRA, required=True)
@click.option('-c', '--congruence', 'thetas', type=PARTITION, multiple=True, required=True)
@click.option('--sigma', type=SIGMA, default=None, help='Permutation such as 2,0,1.')
@click.option('--oracle', is_flag=True, help='Use the brute force meet over Con(A).')
@click.pass_context
def commutator(ctx, path, thetas, sigma, oracle):
    """Print the commutator [theta_0, ..., theta_{n-1}]."""
    alg = _load(path, thetas)
    fn = higher_commutator_oracle if oracle else higher_commutator
    result = fn(alg, list(thetas), sigma)
    _emit(ctx, [result.render()], {'commutator': result.blocks()})
    return 0


@cli.command('oracle-commutator')
@click.option('-a', '--algebra', 'path', type=ALGEBRA, required=True)
@click.option('-c', '--congruence', 'thetas', type=PARTITION, multiple=True, required=True)
@click.option('--sigma', type=SIGMA, default=None)
@click.pass_context
def oracle_commutator(ctx, path, thetas, sigma):
    """Print the commutator as the meet of all centralizing congruences."""
    alg = _load(path, thetas)
    result = higher_commutator_oracle(alg, list(thetas), sigma)
    _emit(ctx, [result.render()], {'commutator': result.blocks()})
    return 0


@cli.command('centrality')
@click.option('-a', '--algebra', 'path', type=ALGEBRA, required=True)
@click.option('-c', '--congruence', 'thetas', type=PARTITION, multiple=True, required=True)
@click.option('--delta', type=PARTITION, default=None, help='Defaults to the zero congruence.')
@click.option('--sigma', type=SIGMA, default=None)
@click.pass_context
def centrality_cmd(ctx, path, thetas, delta, sigma):
    """Check C(theta_sigma(0), ..., theta_sigma(n-1); delta)."""
    alg = _load(path, list(thetas) + ([delta] if delta is not None else []))
    report = centrality(alg, list(thetas), sigma, delta)
    if report.holds:
        lines = ['holds']
        obj = {'holds': True}
    else:
        h = report.counterexample
        lines = ['fails', 'cube: %s' % cubes_.render(h),
                 'pivot: %s' % cubes_.render(cubes_.Cube(report.pivot, 1))]
        obj = {'holds': False, 'counterexample': cubes_.render(h),
               'pivot': cubes_.render(cubes_.Cube(report.pivot, 1))}
    _emit(ctx, lines, obj)
    return 0 if report.holds else 1


def _series_kind(kind):
    if kind == 'derived':
        return lambda alg, alpha, m: derived_series(alg, alpha, m)
    if kind == 'lcs-left':
        return lambda alg, alpha, m: left_lcs(alg, alpha, m)
    if kind == 'lcs-right':
        return lambda alg, alpha, m: right_lcs(alg, alpha, m)
    if kind.startswith('dim:'):
        try:
            n = int(kind[4:])
        except ValueError:
            n = 0
        if n >= 2:
            return lambda alg, alpha, m: dim_series(alg, alpha, n, m)
    raise click.BadParameter('kind must be derived, lcs-left, lcs-right or dim:N with N >= 2, got %r'
                             % kind, param_hint='--kind')


@cli.command()
@click.option('-a', '--algebra', 'path', type=ALGEBRA, required=True)
@click.option('--kind', default='derived', help='derived, lcs-left, lcs-right or dim:N.')
@click.option('--alpha', type=PARTITION, default=None, help='Defaults to the total congruence.')
@click.option('--max', 'max_m', type=click.IntRange(min=0), default=8)
@click.pass_context
def series(ctx, path, kind, alpha, max_m):
    """Print the steps of a commutator series."""
    fn = _series_kind(kind)
    alg = _load(path, [alpha] if alpha is not None else [])
    if alpha is None:
        alpha = Partition.one(alg.size)
    report = fn(alg, alpha, max_m)
    lines = ['%d: %s' % (k, p.render()) for k, p in enumerate(report.steps)]
    if report.reached_zero:
        lines.append('reached zero at step %d' % report.zero_step)
    elif report.stabilized:
        lines.append('stabilized at step %d' % (len(report.steps) - 1))
    else:
        lines.append('not stabilized within %d steps' % max_m)
    _emit(ctx, lines, {'kind': report.kind, 'steps': [p.blocks() for p in report.steps],
                       'stabilized': report.stabilized, 'reached_zero': report.reached_zero})
    return 0


@cli.command()
@click.option('-a', '--algebra', 'path', type=ALGEBRA, required=True)
@click.option('--property', 'prop', default=None,
              help='solvable, left-nilpotent, right-nilpotent, supernilpotent:K, '
                   'solvable-in-dimension:N or term:T.')
@click.option('--term', default=None, help='Shorthand for --property term:T.')
@click.option('--max', 'max_m', type=click.IntRange(min=0), default=8)
@click.pass_context
def check(ctx, path, prop, term, max_m):
    """Decide a solvability or nilpotence property, up to --max steps."""
    if (prop is None) == (term is None):
        raise click.UsageError('give exactly one of --property and --term')
    if term is not None:
        parse_term(term)
        prop = 'term:' + term
    alg = _load(path)
    try:
        verdict = check_property(alg, prop, max_m)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint='--property')
    _emit(ctx, [str(verdict)], {'property': prop, 'status': verdict.status,
                                'step': verdict.step, 'detail': verdict.detail})
    return verdict.exit_code


@cli.command('gen-matrices')
@click.option('-a', '--algebra', 'path', type=ALGEBRA, required=True)
@click.option('-c', '--congruence', 'thetas', type=PARTITION, multiple=True, required=True)
@click.option('--dump', is_flag=True, help='List every cube with its provenance.')
@click.pass_context
def gen_matrices(ctx, path, thetas, dump):
    """Generate M(theta_0, ..., theta_{n-1})."""
    alg = _load(path, thetas)
    mset = generate_full(alg, list(thetas))
    lines = ['cubes: %d' % len(mset), 'levels: %d' % mset.depth]
    obj = {'count': len(mset), 'levels': mset.depth}
    if dump:
        lines += mset.dump()
        obj['cubes'] = [cubes_.render(mset.cube(k)) for k in mset.sorted_indices()]
    _emit(ctx, lines, obj)
    return 0


@cli.command()
@click.option('--n', 'n', type=click.IntRange(min=2), default=2, help='Arity of the ladder algebra.')
@click.option('--lemma', type=click.Choice(CHECKS), required=True)
@click.option('--imax', type=click.IntRange(min=0), default=None)
@click.option('--jmax', type=click.IntRange(min=0), default=None)
@click.option('--depth', type=click.IntRange(min=0), default=None)
@click.option('--g-samples', type=click.IntRange(min=0), default=None)
@click.pass_context
def verify(ctx, n, lemma, imax, jmax, depth, g_samples):
    """Bounded verification on the ladder algebras and the pointed algebra."""
    bounds = Bounds(i_max=imax, j_max=jmax, depth=depth, g_samples=g_samples)
    vlog = run_check(lemma, n, bounds)
    log.info('%s took %.2fs', lemma, vlog.elapsed)
    _emit(ctx, vlog.render(), vlog.to_dict())
    return 0 if vlog.passed else 1


cli.add_command(verify, 'paper')


@cli.command()
@click.option('-a', '--algebra', 'path', type=ALGEBRA, required=True)
@click.option('-c', '--congruence', 'thetas', type=PARTITION, multiple=True, required=True)
@click.option('--split', 'm', type=int, required=True)
@click.pass_context
def hc8(ctx, path, thetas, m):
    """Report whether the nested commutator lies below the flat one."""
    alg = _load(path, thetas)
    try:
        out = hc8_diagnostic(alg, list(thetas), m)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint='--split')
    _emit(ctx, ['nested: %s' % out['nested'].render(), 'flat: %s' % out['flat'].render(),
                'held: %s' % ('yes' if out['held'] else 'no')],
          {'nested': out['nested'].blocks(), 'flat': out['flat'].blocks(), 'held': out['held']})
    return 0


def main(argv=None):
    '''Run the command line and return its exit code.'''
    try:
        rv = cli.main(args=argv, prog_name='hicomm', standalone_mode=False)
    except ResourceCapError as e:
        click.echo('error: %s' % e.parameter, err=True)
        return 3
    except click.ClickException as e:
        click.echo('error: %s' % e.format_message(), err=True)
        return 2
    except click.Abort:
        click.echo('error: aborted', err=True)
        return 2
    except (HicommException, ValueError) as e:
        click.echo('error: %s' % (e.parameter if isinstance(e, HicommException) else e), err=True)
        return 2
    return rv if isinstance(rv, int) else 0


if __name__ == '__main__':
    sys.exit(main())
