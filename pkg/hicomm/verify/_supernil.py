'''
Bounded supernilpotence scan of the ladder algebras.

The n-ary ladder algebra is n-step supernilpotent exactly when no cube of
M(1, ..., 1) of dimension n+1 has constant n-support lines and a
non-constant n-pivot line. The scan builds the levels below the last one
completely and checks every stored cube. For the last level it only
combines arguments that can produce constant support lines: a support line
of ``t(h_0, ..., h_{n-1})`` is constant only if the same line of every h_d
is constant, except that the last argument may instead carry a pair
``r[4i]^[j], r[4i+2]^[j]``.
'''
import logging
import numpy as np

from ..algebras import ladder_algebra
from ..cube import line_indices
from ..matrices import generate_bounded
from ._bounds import Bounds, VerdictLog, derivation, timer
from ._sample import RelIndex, all_pairs, seed_elements

log = logging.getLogger(__name__)

MAX_REPORTED = 5


def supernilpotence_scan(n, bounds=None):
    '''Scan X_depth of M(1, ..., 1) in dimension n+1 over the n-ary ladder
    algebra for support-constant cubes with a non-constant pivot.

    Returns:
        VerdictLog: ``instances`` counts support-constant cubes, those of
        the last level counted once per evaluation.
    '''
    bounds = bounds or Bounds()
    alg = ladder_algebra(n)
    dim = n + 1
    vlog = VerdictLog('supernilpotence', n, bounds)
    lo, hi = line_indices(dim, n)
    slo, shi, plo, phi = lo[:-1], hi[:-1], lo[-1], hi[-1]

    def support_constant(rows):
        return np.all(rows[:, slo] == rows[:, shi], axis=1)

    def violations(rows):
        return support_constant(rows) & (rows[:, plo] != rows[:, phi])

    with timer(vlog):
        sample = seed_elements(alg, bounds)
        m = bounds.depth
        mset = generate_bounded(alg, [all_pairs(sample)] * dim, max(m - 1, 0),
                                cube_cap=bounds.cube_cap, collapse=True)
        instances = int(support_constant(mset.rows).sum())
        bad = list(np.flatnonzero(violations(mset.rows)))
        counts = {'last': 0}
        if m >= 1:
            rel = RelIndex()

            def argument_filter(p, codebook, rows):
                eq = rows[:, slo] == rows[:, shi]
                if p < n - 1:
                    return np.all(eq, axis=1)
                return np.all(eq | rel.pattern_pair(codebook, rows[:, slo], rows[:, shi]), axis=1)

            def on_block(codebook, rows):
                counts['last'] += int(support_constant(rows).sum())

            before = len(mset)
            mset.extend(argument_filter=argument_filter,
                        keep=lambda codebook, rows: support_constant(rows),
                        on_block=on_block)
            bad += [before + int(k) for k in np.flatnonzero(violations(mset.rows[before:]))]
        vlog.instances = instances + counts['last']
        for k in bad[:MAX_REPORTED]:
            vlog.fail('support lines constant but pivot line is not', derivation=derivation(mset, k))
        vlog.notes['cubes'] = len(mset)
        vlog.notes['evaluations'] = mset.evaluations
    log.info('supernilpotence n=%d: %d instances, %d violations', n, vlog.instances, len(bad))
    return vlog
