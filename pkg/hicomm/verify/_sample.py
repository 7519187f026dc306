'''
Deterministic element samples for the ladder algebras.

Extra O and G elements are the first values of the operation, over tuples
of seed elements in lexicographic order, that land in O or in G. They are
reachable by construction.
'''
import itertools
import numpy as np

from ..elements import Rel, Oel, SNode, OAtom


def r_elements(i_max, j_max):
    '''r[i]^[j] for i <= i_max and j <= j_max, level by level.'''
    return [Rel(i, j) for j in range(j_max + 1) for i in range(i_max + 1)]


def o_elements(n, i_max, j_max):
    return [Oel(i, j, g) for j in range(j_max + 1) for i in range(i_max + 1)
            for g in itertools.product((0, 1), repeat=n - 1)]


def extras(alg, base, count):
    '''The first count O values and the first count G values of the
    operation on tuples from base.

    '''
    symbol, k = alg.signature[0]
    found_o, found_g = [], []
    if count == 0:
        return []
    for args in itertools.product(base, repeat=k):
        v = alg.apply(symbol, args)
        if isinstance(v, Oel) and len(found_o) < count and v not in found_o:
            found_o.append(v)
        elif alg.is_free(v) and len(found_g) < count and v not in found_g:
            found_g.append(v)
        if len(found_o) == count and len(found_g) == count:
            break
    return found_o + found_g


def seed_elements(alg, bounds):
    '''The seed sample of a scan: r[i]^[j] within the bounds plus extras.'''
    base = r_elements(bounds.i_max, bounds.j_max)
    return base + extras(alg, base, bounds.g_samples)


def all_pairs(elements):
    return [(x, y) for x in elements for y in elements]


def injectivity_sample(alg, bounds):
    '''r[i]^[j] for i <= 4*i_max+3, O elements for i <= i_max, both with
    j <= j_max, plus g_samples G values.

    '''
    n = alg.signature[0][1]
    rs = r_elements(4 * bounds.i_max + 3, bounds.j_max)
    gs = [e for e in extras(alg, rs, bounds.g_samples) if alg.is_free(e)]
    return rs + o_elements(n, bounds.i_max, bounds.j_max) + gs


def pointed_sample(count):
    '''o followed by count distinct G elements built from o.'''
    gs = [SNode('s', (OAtom, OAtom))]
    while len(gs) < count:
        last = gs[-1]
        gs.append(SNode('s', (OAtom, last)) if len(gs) % 2 else SNode('s', (last, OAtom)))
    return [OAtom] + gs[:count]


class CodeMask(object):
    """Boolean array over the codes of a codebook, extended as new elements
    are interned."""
    def __init__(self, predicate):
        self.predicate = predicate
        self.values = np.zeros(0, dtype=bool)

    def __call__(self, codebook):
        k = self.values.size
        if k < len(codebook):
            new = [bool(self.predicate(e)) for e in codebook.elements[k:]]
            self.values = np.concatenate([self.values, np.array(new, dtype=bool)])
        return self.values


class RelIndex(object):
    """Arrays (i, j) over codes; -1 for elements outside R."""
    def __init__(self):
        self.i = np.zeros(0, dtype=np.int64)
        self.j = np.zeros(0, dtype=np.int64)

    def __call__(self, codebook):
        k = self.i.size
        if k < len(codebook):
            new = codebook.elements[k:]
            self.i = np.concatenate([self.i, np.array([e.i if isinstance(e, Rel) else -1 for e in new], dtype=np.int64)])
            self.j = np.concatenate([self.j, np.array([e.j if isinstance(e, Rel) else -1 for e in new], dtype=np.int64)])
        return self.i, self.j

    def pattern_pair(self, codebook, a, b):
        '''True where {a, b} = {r[4i]^[j], r[4i+2]^[j]} for some i, j.'''
        i, j = self(codebook)
        ia, ib = i[a], i[b]
        lo = np.minimum(ia, ib)
        return (lo >= 0) & (j[a] == j[b]) & (np.abs(ia - ib) == 2) & (lo % 4 == 0)


def is_rel(e):
    return isinstance(e, Rel)


def patterned_prune(n, verts):
    '''Argument filter keeping cubes whose values at verts can feed an R
    value: r[4i+2]^[j] in the first n-1 positions, r[4i]^[j] or
    r[4i+2]^[j] in the last one.

    '''
    verts = list(verts)
    two = CodeMask(lambda e: isinstance(e, Rel) and e.i % 4 == 2)
    even = CodeMask(lambda e: isinstance(e, Rel) and e.i % 2 == 0)

    def prune(p, codebook, rows):
        m = even(codebook) if p == n - 1 else two(codebook)
        return np.all(m[rows[:, verts]], axis=1)
    return prune
