'''
Certified lower bounds for the dimension-n derived series of 1 on the
ladder algebras.

At level j the pairs ``r[4i]^[j], r[4i+2]^[j]`` are related, so the cube
``t(gcube(n, 0, a, b), ..., gcube(n, n-1, a, b))`` with ``a = r[4i]^[j]``,
``b = r[4i+2]^[j]`` lies in the matrices of level j. Its (n-1)-support
lines are constant and its pivot line is ``r[i]^[j+1], r[i+1]^[j+1]``,
which is therefore related at level j+1. Transitivity then puts every
``r[i]^[j+1]`` below the needed index into one class.
'''
import logging

from ..algebras import ladder_algebra
from ..commutator import commutator_lower_bound, is_forced
from ..congruence import PartialCongruence
from ..cube import Cube, Line, gcube, lines, render as render_cube
from ..elements import Rel, render
from ._bounds import Bounds, VerdictLog, timer

log = logging.getLogger(__name__)


def needed_indices(i_max, j_max):
    '''need[j]: how many successor pairs r[i]^[j] ~ r[i+1]^[j] level j must
    certify so that level j+1 can certify need[j+1] of its own.

    '''
    need = [0] * (j_max + 1)
    need[j_max] = max(i_max, 1)
    for j in range(j_max - 1, -1, -1):
        need[j] = 4 * (need[j + 1] - 1) + 2
    return need


def witness_cube(alg, n, a, b):
    '''t applied to gcube(n, d, a, b) for d = 0, ..., n-1.'''
    gens = [gcube(n, d, a, b) for d in range(n)]
    return Cube([alg.apply('t', tuple(g.verts[v] for g in gens)) for v in range(2 ** n)], n)


def nonsolvability_witness(n, bounds=None, j_max=None):
    '''Certify ``r[0]^[j] ~ r[i]^[j]`` in a lower bound of the j-th step of
    the dimension-n derived series of 1, for i <= i_max and j <= j_max.

    Args:
        n (int): arity of the ladder algebra.
        bounds (Bounds): i_max and j_max are taken from here.
        j_max (int): overrides bounds.j_max.

    Returns:
        VerdictLog: ``notes['class sizes']`` has the size of the class of
        r[0]^[j] found at every level.
    '''
    bounds = bounds or Bounds()
    j_max = bounds.j_max if j_max is None else j_max
    alg = ladder_algebra(n)
    vlog = VerdictLog('witness', n, bounds)
    eq = lambda x, y: x == y
    with timer(vlog):
        need = needed_indices(bounds.i_max, j_max)
        top = max(need[0], bounds.i_max)
        levels = [PartialCongruence.full([Rel(i, 0) for i in range(top + 1)])]
        witnesses = []
        for j in range(j_max):
            W = [Rel(4 * i + d, j) for i in range(need[j + 1]) for d in (0, 2)]
            seed = levels[j].restrict(W)
            forced = []
            lb = commutator_lower_bound(alg, [seed] * n, depth=1, ambient=W, record=forced)
            for i in range(need[j + 1]):
                a, b = Rel(4 * i, j), Rel(4 * i + 2, j)
                expected = Line(Rel(i, j + 1), Rel(i + 1, j + 1))
                h = witness_cube(alg, n, a, b)
                if not seed.related(a, b):
                    vlog.fail('generator pair is not related at level %d' % j,
                              pair='%s, %s' % (render(a), render(b)))
                if not is_forced(h, eq) or lines(h, n - 1)[1] != expected:
                    vlog.fail('witness cube does not force the expected pair', cube=render_cube(h))
                if not lb.related(*expected):
                    vlog.fail('pair not certified at level %d' % (j + 1),
                              pair='%s, %s' % (render(expected.a), render(expected.b)))
                witnesses.append(render_cube(h))
                vlog.instances += 1
            log.debug('level %d: %d forced pivots', j + 1, len(forced))
            levels.append(lb)
        sizes = []
        for j, pc in enumerate(levels):
            for i in range(bounds.i_max + 1):
                if not pc.related(Rel(0, j), Rel(i, j)):
                    vlog.fail('chain not certified at level %d' % j,
                              pair='%s, %s' % (render(Rel(0, j)), render(Rel(i, j))))
                vlog.instances += 1
            sizes.append(len(pc.class_of(Rel(0, j))))
        vlog.notes['class sizes'] = sizes
        vlog.notes['needed'] = need
        vlog.notes['witnesses'] = len(witnesses)
        if witnesses:
            vlog.notes['first witness'] = witnesses[0]
    return vlog
