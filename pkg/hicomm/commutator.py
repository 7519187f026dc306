'''
Centrality and higher commutators.

For congruences theta_0, ..., theta_{n-1}, a permutation sigma of n and a
congruence delta, the condition C(theta_sigma(0), ..., theta_sigma(n-1); delta)
holds when every cube of M(theta_0, ..., theta_{n-1}) whose
sigma(n-1)-support lines are all delta-pairs also has a delta-pair as its
sigma(n-1)-pivot line. The commutator [theta_0, ..., theta_{n-1}] is the
least delta for which it holds.
'''
from dataclasses import dataclass, field
from typing import Optional
import logging
import numpy as np

from .congruence import Partition, PartialCongruence, all_congruences, cg, meet
from .cube import Cube, Line, line_indices, lines
from .elements import sort_key
from .matrices import generate_full, generate_bounded

log = logging.getLogger(__name__)


@dataclass
class CentralityReport:
    """Outcome of a centrality scan.

    Attributes:
        holds (bool): whether the condition held on every scanned cube.
        counterexample (Cube): least violating cube, when it fails.
        pivot (Line): its pivot line.
        pivot_axis (int): the axis used as pivot direction.
        instances (int): cubes whose support lines were all related.
        scanned (int): cubes scanned.
    """
    holds: bool
    counterexample: Optional[Cube] = None
    pivot: Optional[Line] = None
    pivot_axis: int = 0
    instances: int = 0
    scanned: int = 0
    extra: dict = field(default_factory=dict)

    def __bool__(self):
        return self.holds


def pivot_axis(n, sigma=None):
    '''The pivot direction sigma(n-1); sigma defaults to the identity.'''
    if sigma is None:
        return n - 1
    sigma = [int(s) for s in sigma]
    if sorted(sigma) != list(range(n)):
        raise ValueError('%r is not a permutation of range(%d)' % (sigma, n))
    return sigma[n - 1]


def _violations(rows, labels, axis, dim):
    '''Masks (support related, violating) over coded cube rows.'''
    lo, hi = line_indices(dim, axis)
    if lo.size > 1:
        sup = np.all(labels[rows[:, lo[:-1]]] == labels[rows[:, hi[:-1]]], axis=1)
    else:
        sup = np.ones(rows.shape[0], dtype=bool)
    piv = labels[rows[:, lo[-1]]] != labels[rows[:, hi[-1]]]
    return sup, sup & piv


def centrality(alg, thetas, sigma=None, delta=None, mset=None):
    '''Scan M(thetas) for a violation of C(theta_sigma(0), ...; delta).

    Args:
        alg (FiniteAlgebra): the algebra.
        thetas (list): congruences theta_0, ..., theta_{n-1}.
        sigma (list): permutation of range(n); identity by default.
        delta (Partition): defaults to the zero congruence.
        mset (TableMatrixSet): precomputed M(thetas), optional.

    Returns:
        CentralityReport
    '''
    n = len(thetas)
    axis = pivot_axis(n, sigma)
    if delta is None:
        delta = Partition.zero(alg.size)
    if mset is None:
        mset = generate_full(alg, thetas)
    rows = mset.rows
    sup, bad = _violations(rows, delta.labels, axis, n)
    report = CentralityReport(holds=not bad.any(), pivot_axis=axis,
                              instances=int(sup.sum()), scanned=rows.shape[0])
    if bad.any():
        viol = rows[bad]
        least = viol[np.lexsort(viol.T[::-1])[0]]
        report.counterexample = Cube([mset.element(v) for v in least], n)
        report.pivot = lines(report.counterexample, axis)[1]
    return report


def higher_commutator(alg, thetas, sigma=None, mset=None):
    '''[theta_0, ..., theta_{n-1}] as a least fixpoint.

    Starts from delta = 0, adds the pivot pair of every cube whose support
    lines are delta-pairs but whose pivot is not, closes to a congruence and
    repeats until nothing is added.
    '''
    n = len(thetas)
    axis = pivot_axis(n, sigma)
    if mset is None:
        mset = generate_full(alg, thetas)
    rows = mset.rows
    lo, hi = line_indices(n, axis)
    delta = Partition.zero(alg.size)
    rounds = 0
    while True:
        rounds += 1
        _, bad = _violations(rows, delta.labels, axis, n)
        if not bad.any():
            break
        forced = np.stack([rows[bad, lo[-1]], rows[bad, hi[-1]]], axis=1)
        delta = cg(alg, np.unique(forced, axis=0), base=delta)
    log.debug('commutator over %s stable after %d rounds: %s', alg.name, rounds, delta.render())
    return delta


def higher_commutator_oracle(alg, thetas, sigma=None, mset=None, congruences=None):
    '''The meet of every congruence delta for which the centrality
    condition holds, by brute force over Con(alg).

    '''
    n = len(thetas)
    axis = pivot_axis(n, sigma)
    if mset is None:
        mset = generate_full(alg, thetas)
    if congruences is None:
        congruences = all_congruences(alg)
    result = Partition.one(alg.size)
    for delta in congruences:
        _, bad = _violations(mset.rows, delta.labels, axis, n)
        if not bad.any():
            result = meet(result, delta)
    return result


def supernilpotence_check(alg, k):
    '''Whether alg is k-step supernilpotent, i.e. whether no cube of
    M(1, ..., 1) of dimension k+1 has constant k-support lines and a
    non-constant k-pivot line.

    '''
    one = Partition.one(alg.size)
    return centrality(alg, [one] * (k + 1), delta=Partition.zero(alg.size))


def hc8_diagnostic(alg, thetas, m):
    '''Compare [theta_0..theta_{m-1}, [theta_m..theta_{n-1}]] with
    [theta_0..theta_{n-1}]. Only reports; the inequality is not expected
    to hold outside congruence permutable varieties.

    '''
    n = len(thetas)
    if not 1 <= m <= n - 2:
        raise ValueError('split point must satisfy 1 <= m <= n-2, got m=%d, n=%d' % (m, n))
    inner = higher_commutator(alg, list(thetas[m:]))
    nested = higher_commutator(alg, list(thetas[:m]) + [inner])
    flat = higher_commutator(alg, list(thetas))
    return {'nested': nested, 'flat': flat, 'held': nested <= flat}


# computable algebras

def _pair_mask(codebook, a, b, related):
    '''related(x, y) evaluated on coded arrays a, b of equal shape.'''
    if a.size == 0:
        return np.zeros(a.shape, dtype=bool)
    pairs = np.stack([a.ravel(), b.ravel()], axis=1)
    uniq, inverse = np.unique(pairs, axis=0, return_inverse=True)
    vals = np.array([bool(related(codebook.element(x), codebook.element(y)))
                     for x, y in uniq.tolist()], dtype=bool)
    return vals[inverse.reshape(-1)].reshape(a.shape)


def scan_rows(codebook, rows, dim, axis, related):
    '''Masks (support related, violating) for coded rows of a computable
    algebra, related being a predicate on element pairs.

    '''
    lo, hi = line_indices(dim, axis)
    if lo.size > 1:
        sup = np.all(_pair_mask(codebook, rows[:, lo[:-1]], rows[:, hi[:-1]], related), axis=1)
    else:
        sup = np.ones(rows.shape[0], dtype=bool)
    piv = ~_pair_mask(codebook, rows[:, lo[-1]], rows[:, hi[-1]], related)
    return sup, sup & piv


def _least_cube(cubes):
    return min(cubes, key=lambda h: tuple(sort_key(v) for v in h.verts))


def bounded_centrality(alg, seeds, depth, related, axis=None, collapse=True, **kwargs):
    '''Centrality scan of the bounded level X_depth over a computable algebra.

    Args:
        alg (ComputableAlgebra): the algebra.
        seeds (list): element pairs per axis.
        depth (int): generation depth.
        related: predicate on element pairs playing the role of delta.
        axis (int): pivot axis, the last one by default.
        collapse (bool): canonically rename free values while generating.
            Only valid when related depends on free values through
            equality and freeness alone.

    Returns:
        CentralityReport: ``scanned`` counts the cubes of X_depth.
    '''
    dim = len(seeds)
    axis = dim - 1 if axis is None else axis
    mset = generate_bounded(alg, seeds, depth, collapse=collapse, **kwargs)
    sup, bad = scan_rows(mset.codebook, mset.rows, dim, axis, related)
    report = CentralityReport(holds=not bad.any(), pivot_axis=axis,
                              instances=int(sup.sum()), scanned=len(mset))
    if bad.any():
        report.counterexample = _least_cube([mset.cube(k) for k in np.flatnonzero(bad)])
        report.pivot = lines(report.counterexample, axis)[1]
    report.extra['evaluations'] = mset.evaluations
    return report


def is_forced(h, related, axis=None):
    '''True if every axis-support line of h is related, so that its pivot
    pair lies in every delta containing the relation for which centrality
    holds.

    '''
    axis = h.dim - 1 if axis is None else axis
    support, _ = lines(h, axis)
    return all(related(l.a, l.b) for l in support)


def commutator_lower_bound(alg, seed_pcs, depth, rounds=1, sigma=None, ambient=None, record=None):
    '''A sound lower bound for the commutator of the congruences generated
    by the partial congruences seed_pcs.

    The matrices generated from the related pairs of each seed are scanned;
    whenever a cube's support lines are already related, its pivot pair is
    related too. Forcing runs to a fixpoint, then the relation is closed
    under the operations over every discovered element; this is repeated
    for the given number of rounds.

    Args:
        alg (ComputableAlgebra): the algebra.
        seed_pcs (list): one PartialCongruence per axis.
        depth (int): generation depth.
        rounds (int): force-and-close rounds.
        sigma (list): permutation choosing the pivot axis.
        ambient (list): elements the closing step draws contexts from; every
            discovered element by default.
        record (list): if given, receives ``(cube, pivot line)`` for every
            forced pivot.

    Returns:
        PartialCongruence
    '''
    n = len(seed_pcs)
    axis = pivot_axis(n, sigma)
    result = PartialCongruence()
    seeds = [pc.pairs() for pc in seed_pcs]
    if not any(seeds):
        return result
    mset = generate_bounded(alg, seeds, depth)
    codebook = mset.codebook
    rows = mset.rows
    lo, hi = line_indices(n, axis)
    for r in range(rounds):
        while True:
            labels = _pc_labels(result, codebook)
            sup, bad = _violations(rows, labels, axis, n)
            if not bad.any():
                break
            for k in np.flatnonzero(bad):
                a = codebook.element(rows[k, lo[-1]])
                b = codebook.element(rows[k, hi[-1]])
                if result.union(a, b) and record is not None:
                    record.append((mset.cube(k), Line(a, b)))
        before = len(result.nontrivial_pairs())
        result.close(alg, codebook.elements if ambient is None else ambient)
        log.debug('lower bound round %d: %d related pairs after closing (%d before)',
                  r, len(result.nontrivial_pairs()), before)
    return result


def _pc_labels(pc, codebook):
    '''Label per code: the code of the class root, or the code itself.'''
    labels = np.arange(len(codebook), dtype=np.int64)
    roots = {}
    for c, e in enumerate(list(codebook.elements)):
        if e in pc:
            root = pc.find(e)
            labels[c] = roots.setdefault(root, c)
    return labels
