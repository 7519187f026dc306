'''
The pointed algebra ``t(o, y) = o``, ``t(x, y) = s(x, y)`` otherwise, with
delta the partition {o} | G.

Bounded evidence that it is right nilpotent but not left nilpotent:

- C(1, 1; delta): no square of M(1, 1) has delta-related support and an
  unrelated pivot, so [1, 1] <= delta.
- C(delta, 1; 0): the same for M(delta, 1) with equality, so [delta, 1] = 0.
- the left series keeps a nontrivial class: the square
  ``t(gcube(2, 0, o, a), gcube(2, 1, y, a))`` has constant support
  ``o, o`` and pivot ``t(a, y), t(a, a)``.
'''
import logging

from ..algebras import pointed_algebra
from ..commutator import bounded_centrality, commutator_lower_bound
from ..congruence import PartialCongruence
from ..cube import Cube, gcube, render as render_cube
from ..elements import OAtom, render
from ._bounds import Bounds, VerdictLog, timer
from ._sample import all_pairs, pointed_sample

log = logging.getLogger(__name__)


def in_delta(x, y):
    return (x is OAtom) == (y is OAtom)


def _left_step(alg, theta0, theta1, a, ys):
    '''Lower bound of [theta0, theta1]; returns the class of t(a, a) among
    the values t(a, y).

    '''
    lb = commutator_lower_bound(alg, [theta0, theta1], depth=1)
    anchor = alg.apply('t', (a, a))
    values = [alg.apply('t', (a, y)) for y in ys]
    for c in lb.classes(within=values):
        if anchor in c:
            return c
    return [anchor]


def display_square(alg, a, y):
    '''``t(gcube(2, 0, o, a), gcube(2, 1, y, a))``.'''
    h0, h1 = gcube(2, 0, OAtom, a), gcube(2, 1, y, a)
    return Cube([alg.apply('t', (h0.verts[v], h1.verts[v])) for v in range(4)], 2)


def pointed_asymmetry(bounds=None):
    '''Run the three checks on a sample of o and g_samples (at least 3)
    G elements.

    Returns:
        VerdictLog: ``notes['left class sizes']`` holds the size of the
        class found at the first two steps of the left series.
    '''
    bounds = bounds or Bounds()
    alg = pointed_algebra()
    vlog = VerdictLog('pointed', 2, bounds)
    with timer(vlog):
        sample = pointed_sample(max(3, bounds.g_samples))
        pairs = all_pairs(sample)
        dpairs = [(x, y) for x, y in pairs if in_delta(x, y)]

        right = bounded_centrality(alg, [pairs, pairs], bounds.depth, in_delta,
                                   cube_cap=bounds.cube_cap)
        if not right.holds:
            vlog.fail('C(1,1;delta) violated', cube=render_cube(right.counterexample))
        abelian = bounded_centrality(alg, [dpairs, pairs], bounds.depth, lambda x, y: x == y,
                                     cube_cap=bounds.cube_cap)
        if not abelian.holds:
            vlog.fail('C(delta,1;0) violated', cube=render_cube(abelian.counterexample))

        a = sample[1]
        c1 = _left_step(alg, PartialCongruence.full(sample), PartialCongruence.full(sample),
                        a, sample)
        b = c1[0]
        c2 = _left_step(alg, PartialCongruence.full([OAtom] + c1), PartialCongruence.full(c1),
                        b, c1)
        sizes = [len(c1), len(c2)]
        if min(sizes) < 3:
            vlog.fail('left series class too small', sizes=sizes)

        vlog.instances = right.instances + abelian.instances + sum(sizes)
        vlog.notes['right scan'] = '%d cubes, %d with related support' % (right.scanned, right.instances)
        vlog.notes['delta scan'] = '%d cubes, %d with constant support' % (abelian.scanned, abelian.instances)
        vlog.notes['left class sizes'] = sizes
        vlog.notes['left class'] = '[%s]' % ', '.join(render(e) for e in c1)
        vlog.notes['display square'] = render_cube(display_square(alg, a, sample[2]))
    return vlog
