'''
Bounded checks of the structural lemmas on the ladder algebras: how the
operation collides, which squares have successor columns, and which cubes
with R labelled support lines can occur in M(1, ..., 1).
'''
import itertools
import logging
import numpy as np

from ..algebras import ladder_algebra
from ..cube import line_indices, square_indices
from ..elements import Rel, Oel, render
from ..matrices import generate_bounded
from ._bounds import Bounds, VerdictLog, derivation, timer
from ._sample import (CodeMask, all_pairs, injectivity_sample, is_rel,
                      patterned_prune, r_elements, seed_elements)

log = logging.getLogger(__name__)

MAX_REPORTED = 5


def _render_args(args):
    return '(%s)' % ', '.join(render(a) for a in args)


def _collision_kind(n, value, tuples):
    '''Name the pattern behind a shared value, or None if there is none.

    Two patterns are allowed:

    - ``'o'``: t(..., r[4i]^[j]) = t(..., r[4i+2]^[j]) = o[i,g]^[j] with
      equal first n-1 arguments spelling g.
    - ``'successor'``: t(r[4i+2]^[j], ..., r[4i+2]^[j]) =
      t(r[4i+6]^[j], ..., r[4i+6]^[j], r[4i+4]^[j]) = r[i+1]^[j+1], the
      two ends of neighbouring rungs meeting at level j+1.
    '''
    if len(tuples) != 2:
        return None
    a, b = tuples
    if isinstance(value, Oel):
        i, j, g = value.i, value.j, value.g
        for k in range(n - 1):
            if a[k] != b[k] or a[k] != Rel(4 * i + 2 * g[k], j):
                return None
        if {a[-1], b[-1]} == {Rel(4 * i, j), Rel(4 * i + 2, j)}:
            return 'o'
        return None
    if isinstance(value, Rel) and value.i >= 1 and value.j >= 1:
        i, j = value.i - 1, value.j - 1
        low = (Rel(4 * i + 2, j),) * n
        high = (Rel(4 * i + 6, j),) * (n - 1) + (Rel(4 * i + 4, j),)
        if {tuple(a), tuple(b)} == {low, high}:
            return 'successor'
    return None


def check_injectivity_lemma(n, bounds=None):
    '''Evaluate t on every n-tuple of the injectivity sample and check that
    values in R or O only come from arguments in R, and that every collision
    is an o[i,g]^[j] pair or a successor pair (see :func:`_collision_kind`).

    Args:
        n (int): arity of the ladder algebra.
        bounds (Bounds): sample bounds.

    Returns:
        VerdictLog: ``notes['collisions']`` counts the colliding values,
        ``notes['o collisions']`` and ``notes['successor collisions']`` split
        them by pattern and ``notes['successor values']`` lists the values
        reached from two neighbouring rungs.
    '''
    bounds = bounds or Bounds()
    alg = ladder_algebra(n)
    vlog = VerdictLog('injectivity', n, bounds)
    with timer(vlog):
        sample = injectivity_sample(alg, bounds)
        values = {}
        for args in itertools.product(sample, repeat=n):
            v = alg.apply('t', args)
            vlog.instances += 1
            if not alg.is_free(v) and not all(is_rel(a) for a in args):
                vlog.fail('special value from an argument outside R',
                          args=_render_args(args), value=render(v))
            values.setdefault(v, []).append(args)
        kinds = {'o': 0, 'successor': 0}
        successor_values = []
        for v, tuples in values.items():
            if len(tuples) < 2:
                continue
            kind = _collision_kind(n, v, tuples)
            if kind is None:
                vlog.fail('unexpected collision', value=render(v),
                          args=[_render_args(a) for a in tuples])
                continue
            kinds[kind] += 1
            if kind == 'successor':
                successor_values.append(render(v))
        collisions = sum(len(t) > 1 for t in values.values())
        vlog.notes['sample'] = len(sample)
        vlog.notes['collisions'] = collisions
        vlog.notes['o collisions'] = kinds['o']
        vlog.notes['successor collisions'] = kinds['successor']
        vlog.notes['successor values'] = successor_values
    log.info('injectivity n=%d: %d tuples, %d collisions (%d successor)',
             n, vlog.instances, collisions, kinds['successor'])
    return vlog


def _r_keep(verts):
    is_r = CodeMask(is_rel)
    verts = list(verts)

    def keep(codebook, rows):
        return np.all(is_r(codebook)[rows[:, verts]], axis=1)
    return keep


def _gcube_mask(rows, dim):
    '''Rows that are gcube(dim, i, x, y) for some axis i (constant included).'''
    ok = np.zeros(rows.shape[0], dtype=bool)
    for i in range(dim):
        lo, hi = line_indices(dim, i)
        ok |= np.all(rows[:, lo] == rows[:, lo[:1]], axis=1) & \
            np.all(rows[:, hi] == rows[:, hi[:1]], axis=1)
    return ok


def _report(vlog, mset, ks, reason):
    for k in ks[:MAX_REPORTED]:
        vlog.fail(reason, derivation=derivation(mset, k))
    if len(ks) > MAX_REPORTED:
        vlog.notes['unreported counterexamples'] = len(ks) - MAX_REPORTED


def check_successors(n, bounds=None):
    '''Squares of M(1, 1) with a constant left column and an R labelled right
    column ``r[i]^[j], r[k]^[l]`` must have ``j = l`` and ``|i - k| <= 1``.

    Only squares with the right column in R are generated, which loses
    nothing since an R value needs R arguments at the same vertex.
    '''
    bounds = bounds or Bounds()
    alg = ladder_algebra(n)
    vlog = VerdictLog('successors', n, bounds)
    with timer(vlog):
        sample = seed_elements(alg, bounds)
        right = [1, 3]
        mset = generate_bounded(alg, [all_pairs(sample)] * 2, bounds.depth,
                                cube_cap=bounds.cube_cap, collapse=True,
                                keep=_r_keep(right), prune=patterned_prune(n, right))
        rows = mset.rows
        targets = np.flatnonzero(rows[:, 0] == rows[:, 2])
        bad, adjacent = [], 0
        for k in targets:
            a, b = mset.element(rows[k, 1]), mset.element(rows[k, 3])
            if a.j != b.j or abs(a.i - b.i) > 1:
                bad.append(int(k))
            elif a.i != b.i:
                adjacent += 1
        vlog.instances = int(targets.size)
        vlog.notes['squares'] = len(mset)
        vlog.notes['adjacent'] = adjacent
        _report(vlog, mset, bad, 'right column is not a successor pair')
    return vlog


def check_generators(n, bounds=None):
    '''Three checks on M(1, ..., 1):

    - squares with R at vertices 0, 1 and 2 are gcube squares,
    - for n >= 3, n-cubes whose (n-1)-support lines lie in R x R are
      gcubes. At n = 2 one support line is too weak, as
      t(gcube(2, 0, r[2]^[0], r[0]^[0]), gcube(2, 1, r[0]^[0], r[2]^[0]))
      = [r[0]^[1], o, r[1]^[1], o] shows, so only the corner check applies,
    - cubes all of whose cross section squares are gcube squares are gcubes.
    '''
    bounds = bounds or Bounds()
    alg = ladder_algebra(n)
    vlog = VerdictLog('generators', n, bounds)
    with timer(vlog):
        sample = seed_elements(alg, bounds)
        pairs = all_pairs(sample)

        corners = [0, 1, 2]
        sq = generate_bounded(alg, [pairs] * 2, bounds.depth, cube_cap=bounds.cube_cap,
                              collapse=True, keep=_r_keep(corners),
                              prune=patterned_prune(n, corners))
        bad = np.flatnonzero(~_gcube_mask(sq.rows, 2))
        _report(vlog, sq, [int(k) for k in bad], 'square with three R corners is not a gcube')

        n_cubes = 0
        if n >= 3:
            lo, hi = line_indices(n, n - 1)
            support = sorted(set(lo[:-1].tolist()) | set(hi[:-1].tolist()))
            cb = generate_bounded(alg, [pairs] * n, bounds.depth, cube_cap=bounds.cube_cap,
                                  collapse=True, keep=_r_keep(support),
                                  prune=patterned_prune(n, support))
            bad = np.flatnonzero(~_gcube_mask(cb.rows, n))
            _report(vlog, cb, [int(k) for k in bad], 'cube with R support lines is not a gcube')
            n_cubes = len(cb)

        # squares to cubes
        base = all_pairs(r_elements(bounds.i_max, 0))
        lift = generate_bounded(alg, [base] * n, min(bounds.depth, 1),
                                cube_cap=bounds.cube_cap, collapse=True)
        rows = lift.rows
        premise = np.ones(rows.shape[0], dtype=bool)
        for i in range(n):
            for j in range(i + 1, n):
                for s in square_indices(n, i, j):
                    a, b, c, d = (rows[:, v] for v in s)
                    premise &= ((a == b) & (c == d)) | ((a == c) & (b == d))
        bad = np.flatnonzero(premise & ~_gcube_mask(rows, n))
        _report(vlog, lift, [int(k) for k in bad], 'every square is a gcube but the cube is not')

        vlog.notes['squares'] = len(sq)
        vlog.notes['cubes'] = n_cubes
        vlog.notes['lifted'] = int(premise.sum())
        vlog.instances = len(sq) + n_cubes + int(premise.sum())
    return vlog
