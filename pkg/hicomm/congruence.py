'''
Partitions and congruences.

:class:`Partition` is an equivalence relation on ``{0, ..., N-1}`` stored as
canonical block labels (blocks numbered by first occurrence). Congruence
tests and generation work on whole operation tables at once.

:class:`PartialCongruence` is a union-find over the finitely many elements of
a computable algebra discovered so far. Every pair it relates lies in the
congruence generated by the pairs it was seeded with, so it is a sound lower
bound for that congruence.
'''
import itertools
import json
import logging
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .elements import sort_key, render as render_element
from .options import get_option
from .utils import (canonical_labels, check_cap, restricted_growth_strings,
                    PartitionParseError, SizeMismatchError)

log = logging.getLogger(__name__)


class Partition(object):
    """An equivalence relation on a finite carrier.

    Args:
        labels (array_like): block label of each carrier index; any labelling
            is accepted and canonicalized.
    """
    __slots__ = ('labels', '_key')

    def __init__(self, labels):
        labels = canonical_labels(labels)
        labels.flags.writeable = False
        self.labels = labels
        self._key = tuple(int(x) for x in labels)

    @classmethod
    def zero(cls, size):
        return cls(np.arange(size))

    @classmethod
    def one(cls, size):
        return cls(np.zeros(size, dtype=np.intp))

    @classmethod
    def from_blocks(cls, blocks, size=None):
        '''Build from a list of blocks that covers ``range(size)`` exactly.'''
        flat = [x for b in blocks for x in b]
        if any(not isinstance(x, int) or isinstance(x, bool) or x < 0 for x in flat):
            raise PartitionParseError('blocks must contain natural numbers: %r' % (blocks,))
        if size is None:
            size = max(flat) + 1 if flat else 0
        if sorted(flat) != list(range(size)):
            raise PartitionParseError('blocks %r do not partition range(%d)' % (blocks, size))
        labels = np.empty(size, dtype=np.intp)
        for k, b in enumerate(blocks):
            labels[list(b)] = k
        return cls(labels)

    @classmethod
    def from_pairs(cls, size, pairs):
        '''The equivalence relation generated by pairs.'''
        return cls(_merge(np.arange(size), pairs))

    @classmethod
    def parse(cls, text, size=None):
        '''Parse the text form ``[[0,1],[2]]``.'''
        try:
            blocks = json.loads(text)
        except ValueError:
            raise PartitionParseError('cannot parse partition %r' % text)
        if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
            raise PartitionParseError('a partition is a list of lists, got %r' % text)
        return cls.from_blocks(blocks, size)

    @property
    def size(self):
        return len(self._key)

    @property
    def num_blocks(self):
        return int(self.labels.max()) + 1 if self.size else 0

    def reps(self):
        '''Smallest element of the block of each carrier index.'''
        first = np.unique(self.labels, return_index=True)[1]
        return first[self.labels]

    def blocks(self):
        out = [[] for _ in range(self.num_blocks)]
        for x, b in enumerate(self._key):
            out[b].append(x)
        return out

    def render(self):
        return json.dumps(self.blocks(), separators=(',', ':'))

    def related(self, a, b):
        return self._key[a] == self._key[b]

    def pairs(self):
        '''All related pairs (reflexive ones included) as an (m, 2) array.'''
        pairs = [(a, b) for blk in self.blocks() for a in blk for b in blk]
        return np.array(pairs, dtype=np.intp).reshape(-1, 2)

    def is_zero(self):
        return self.num_blocks == self.size

    def is_one(self):
        return self.num_blocks <= 1

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __le__(self, other):
        '''Refinement order.'''
        _check_sizes(self, other)
        # other must be constant on each block of self
        return bool(np.all(other.labels == other.labels[self.reps()]))

    def __ge__(self, other):
        return other.__le__(self)

    def __lt__(self, other):
        return self <= other and self != other

    def __gt__(self, other):
        return other < self

    def __and__(self, other):
        return meet(self, other)

    def __repr__(self):
        return 'Partition(%s)' % self.render()


def _check_sizes(p, q):
    if p.size != q.size:
        raise SizeMismatchError('partitions on %d and %d points' % (p.size, q.size))


def _merge(labels, pairs):
    '''Labels of the equivalence relation generated by a labelling and pairs.'''
    labels = np.asarray(labels)
    n = labels.size
    pairs = np.asarray(pairs, dtype=np.intp).reshape(-1, 2)
    first = np.unique(labels, return_index=True, return_inverse=True)
    reps = first[1][first[2].reshape(-1)]
    rows = np.concatenate([np.arange(n), pairs[:, 0]])
    cols = np.concatenate([reps, pairs[:, 1]])
    graph = coo_matrix((np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(n, n))
    _, comp = connected_components(graph, directed=False)
    return canonical_labels(comp)


def meet(p, q):
    '''Common refinement.'''
    _check_sizes(p, q)
    return Partition(p.labels * max(q.num_blocks, 1) + q.labels)


def _violations(alg, labels, reps):
    '''Pairs (f(..x..), f(..rep(x)..)) whose labels differ.'''
    found = []
    for op in alg.operations:
        if op.arity == 0:
            continue
        T = op.table
        LT = labels[T]
        for d in range(op.arity):
            Tr = np.take(T, reps, axis=d)
            bad = LT != labels[Tr]
            if bad.any():
                found.append(np.stack([T[bad], Tr[bad]], axis=1))
    if not found:
        return np.zeros((0, 2), dtype=np.intp)
    return np.concatenate(found)


def is_congruence(alg, p):
    '''True if p is invariant under every operation of alg.'''
    if p.size != alg.size:
        raise SizeMismatchError('partition on %d points, algebra of size %d' % (p.size, alg.size))
    reps = p.reps()
    for op in alg.operations:
        if op.arity == 0:
            continue
        LT = p.labels[op.table]
        for d in range(op.arity):
            if np.any(LT != p.labels[np.take(op.table, reps, axis=d)]):
                return False
    return True


def cg(alg, pairs, base=None):
    '''The least congruence of alg containing pairs (and base, if given).

    Compares every operation value with the value at the block
    representative in one argument position, unions the differences and
    repeats until nothing changes.
    '''
    labels = np.arange(alg.size) if base is None else base.labels
    labels = _merge(labels, pairs)
    rounds = 0
    while True:
        rounds += 1
        first = np.unique(labels, return_index=True)[1]
        new = _violations(alg, labels, first[labels])
        if new.size == 0:
            break
        labels = _merge(labels, new)
    log.debug('cg on %s stable after %d rounds', alg.name, rounds)
    return Partition(labels)


def join_in_con(alg, p, q):
    '''Join of two congruences in Con(alg).'''
    _check_sizes(p, q)
    qpairs = np.stack([np.arange(q.size), q.reps()], axis=1)
    return cg(alg, qpairs, base=p)


def all_congruences(alg, cap=None):
    '''Every congruence of alg in lexicographic order of block labels.

    Raises:
        ResourceCapError: if alg.size exceeds the ``congruence_cap`` option.
    '''
    cap = get_option('congruence_cap', cap)
    check_cap('congruence_cap', alg.size, cap)
    out = []
    for rgs in restricted_growth_strings(alg.size):
        p = Partition(rgs)
        if is_congruence(alg, p):
            out.append(p)
    log.debug('%s has %d congruences', alg.name, len(out))
    return out


class PartialCongruence(object):
    """Union-find over discovered elements of a computable algebra.

    Pairs are only ever added. Elements are kept in insertion order so that
    every listing is deterministic.
    """
    def __init__(self, element_cap=None):
        self.element_cap = get_option('element_cap', element_cap)
        self._parent = {}
        self._rank = {}
        self._order = []

    @classmethod
    def full(cls, elements, element_cap=None):
        '''All given elements in one class.'''
        pc = cls(element_cap)
        elements = list(elements)
        for e in elements:
            pc.add(e)
        for e in elements[1:]:
            pc.union(elements[0], e)
        return pc

    @classmethod
    def from_classes(cls, classes, element_cap=None):
        pc = cls(element_cap)
        for c in classes:
            c = list(c)
            for e in c:
                pc.add(e)
            for e in c[1:]:
                pc.union(c[0], e)
        return pc

    def copy(self):
        pc = PartialCongruence(self.element_cap)
        pc._parent = dict(self._parent)
        pc._rank = dict(self._rank)
        pc._order = list(self._order)
        return pc

    def __len__(self):
        return len(self._order)

    def __contains__(self, e):
        return e in self._parent

    @property
    def elements(self):
        return list(self._order)

    def add(self, e):
        if e not in self._parent:
            check_cap('element_cap', len(self._order) + 1, self.element_cap)
            self._parent[e] = e
            self._rank[e] = 0
            self._order.append(e)

    def find(self, e):
        self.add(e)
        root = e
        while self._parent[root] != root:
            root = self._parent[root]
        # path compression
        while self._parent[e] != root:
            self._parent[e], e = root, self._parent[e]
        return root

    def union(self, a, b):
        '''Relate a and b; return True if two classes were merged.'''
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        if self._rank[a] < self._rank[b]:
            a, b = b, a
        self._parent[b] = a
        if self._rank[a] == self._rank[b]:
            self._rank[a] += 1
        return True

    def related(self, a, b):
        if a == b:
            return True
        if a not in self._parent or b not in self._parent:
            return False
        return self.find(a) == self.find(b)

    def classes(self, within=None):
        '''Classes as lists sorted by sort_key, ordered by their least member.
        With within, only those elements are listed.

        '''
        groups = {}
        members = self._order if within is None else [e for e in within if e in self._parent]
        for e in members:
            groups.setdefault(self.find(e), []).append(e)
        out = [sorted(set(g), key=sort_key) for g in groups.values()]
        return sorted(out, key=lambda g: sort_key(g[0]))

    def class_of(self, e):
        if e not in self._parent:
            return [e]
        root = self.find(e)
        return sorted((x for x in self._order if self.find(x) == root), key=sort_key)

    def pairs(self, within=None):
        '''Every related ordered pair (reflexive included) among the listed
        elements, in deterministic order.

        '''
        return [(a, b) for c in self.classes(within) for a in c for b in c]

    def nontrivial_pairs(self, within=None):
        return [(a, b) for a, b in self.pairs(within) if a != b]

    def restrict(self, elements):
        '''A new partial congruence on the given elements only.'''
        return PartialCongruence.from_classes(self.classes(within=elements), self.element_cap)

    def close(self, alg, ambient):
        '''Add images of related tuples drawn from ambient until stable.

        Tuples differing in one position are enough, since a chain of such
        single changes connects any two related tuples over ambient.
        '''
        ambient = sorted(set(ambient), key=sort_key)
        for e in ambient:
            self.add(e)
        cache = {}
        rounds = 0
        while True:
            rounds += 1
            groups = [g for g in self.classes(within=ambient) if len(g) > 1]
            before = [tuple(g) for g in groups]
            if not groups:
                break
            for symbol, k in alg.signature:
                for p in range(k):
                    for ctx in itertools.product(ambient, repeat=k - 1):
                        for g in groups:
                            first = None
                            for x in g:
                                args = ctx[:p] + (x,) + ctx[p:]
                                key = (symbol, args)
                                v = cache.get(key)
                                if v is None:
                                    v = cache[key] = alg.apply(symbol, args)
                                if first is None:
                                    first = v
                                else:
                                    self.union(first, v)
            after = [tuple(g) for g in self.classes(within=ambient) if len(g) > 1]
            if after == before:
                break
        log.debug('partial congruence closed after %d rounds, %d elements', rounds, len(self))
        return self

    def render(self):
        return '[%s]' % ','.join('[%s]' % ','.join(render_element(e) for e in c)
                                 for c in self.classes())

    def __repr__(self):
        return 'PartialCongruence(%s)' % self.render()


def pc_new(element_cap=None):
    return PartialCongruence(element_cap)

def pc_union(pc, a, b):
    pc.union(a, b)
    return pc

def pc_related(pc, a, b):
    return pc.related(a, b)

def pc_close(pc, alg, ambient):
    return pc.close(alg, ambient)
