'''
The algebra of (theta_0, ..., theta_{n-1})-matrices.

``M(theta_0, ..., theta_{n-1})`` is the subalgebra of ``A**(2**n)`` generated by
the cubes ``gcube(n, i, x, y)`` with ``(x, y)`` in ``theta_i``.

- :func:`generate_full` computes it exactly for a finite algebra.
- :func:`generate_bounded` computes the levels ``X_0 <= X_1 <= ... <= X_m`` for a
  computable algebra, where ``X_0`` holds the generators of finitely many seed
  pairs and ``X_{k+1}`` adds every operation value on tuples from ``X_k``.
'''
import logging
import numpy as np
import pandas as pd

from . import cube as cubes_
from .cube import Cube, line_indices
from .congruence import is_congruence
from .elements import FinIdx, FreeMark, sort_key
from .options import get_option
from .utils import check_cap, vertex_weights, NotACongruenceError, SizeMismatchError
from ._closure import Closure, CodeBook, CodeStore, RowStore, TableEvaluator

log = logging.getLogger(__name__)


class MatrixSet(object):
    """Cubes of a matrix algebra with their provenance.

    Attributes:
        algebra: the algebra the cubes live over.
        dim (int): cube dimension n.
        closure: the underlying :class:`~hicomm._closure.Closure`.
    """
    def __init__(self, algebra, dim, closure):
        self.algebra = algebra
        self.dim = dim
        self.closure = closure

    def __len__(self):
        return len(self.closure)

    @property
    def rows(self):
        '''Integer coded cubes, one row per cube.'''
        return self.closure.cubes

    @property
    def depth(self):
        return self.closure.depth

    @property
    def evaluations(self):
        return self.closure.evaluations

    @property
    def symbols(self):
        raise NotImplementedError

    def element(self, code):
        raise NotImplementedError

    def cube(self, k):
        return Cube([self.element(c) for c in self.rows[k]], self.dim)

    def cubes(self):
        return [self.cube(k) for k in range(len(self))]

    def cube_set(self):
        return frozenset(self.cubes())

    def __iter__(self):
        return iter(self.cubes())

    def level(self, k):
        return int(self.closure.level[k])

    def provenance(self, k):
        '''``None`` for a generator, else ``(symbol, argument cube indices)``.'''
        o = int(self.closure.op[k])
        if o < 0:
            return None
        args = tuple(int(a) for a in self.closure.args[k] if a >= 0)
        return self.symbols[o], args

    def sorted_indices(self):
        '''Cube indices in lexicographic order of their vertices.'''
        keys = [tuple(sort_key(v) for v in c.verts) for c in self.cubes()]
        return sorted(range(len(self)), key=keys.__getitem__)

    def replay(self, k):
        '''Re-evaluate the recorded operation of cube k on its argument cubes.'''
        prov = self.provenance(k)
        if prov is None:
            return self.cube(k)
        symbol, args = prov
        arg_cubes = [self.cube(a) for a in args]
        verts = [self.algebra.apply(symbol, tuple(c.verts[v] for c in arg_cubes))
                 for v in range(2 ** self.dim)]
        return Cube(verts, self.dim)

    def dump(self):
        '''One line per cube, vertices in index order, with provenance.'''
        lines = []
        for k in self.sorted_indices():
            prov = self.provenance(k)
            if prov is None:
                how = 'generator'
            else:
                how = '%s(%s)' % (prov[0], ', '.join('#%d' % a for a in prov[1]))
            lines.append('#%d: %s  <- level %d, %s' % (k, cubes_.render(self.cube(k)), self.level(k), how))
        return lines

    def to_frame(self):
        '''A pandas DataFrame with one row per cube.'''
        rows = []
        for k in range(len(self)):
            prov = self.provenance(k)
            rows.append({'cube': cubes_.render(self.cube(k)),
                         'level': self.level(k),
                         'op': None if prov is None else prov[0],
                         'args': None if prov is None else list(prov[1])})
        return pd.DataFrame(rows, columns=['cube', 'level', 'op', 'args'])


class TableMatrixSet(MatrixSet):
    """Matrices over a finite algebra; codes are carrier indices."""

    @property
    def symbols(self):
        return self.algebra.symbols

    def element(self, code):
        return FinIdx(int(code))

    def apply(self, symbol, args):
        return self.algebra.apply(symbol, args)

    def sorted_indices(self):
        rows = self.rows
        if rows.shape[0] == 0:
            return []
        return list(np.lexsort(rows.T[::-1]))

    def contains(self, h):
        row = [v.v if isinstance(v, FinIdx) else int(v) for v in h.verts]
        return self.closure.store.lookup(row)


class BoundedMatrixSet(MatrixSet):
    """Depth bounded matrices over a computable algebra.

    Attributes:
        codebook: the :class:`~hicomm._closure.CodeBook` interning elements.
        collapsed (bool): whether free values were canonically relabelled.
    """
    def __init__(self, algebra, dim, closure, codebook, collapsed=False):
        super().__init__(algebra, dim, closure)
        self.codebook = codebook
        self.collapsed = collapsed

    @property
    def symbols(self):
        return self.algebra.symbols

    def element(self, code):
        return self.codebook.element(code)

    def replay(self, k):
        h = super().replay(k)
        return relabel_free(self.algebra, h) if self.collapsed else h

    def extend(self, argument_filter=None, keep=None, on_block=None):
        '''Compute one more level in place; the callbacks take the codebook
        like those of :func:`generate_bounded`. Returns the number of new cubes.

        '''
        cb = self.codebook
        return self.closure.step(
            argument_filter=None if argument_filter is None else (lambda p, r: argument_filter(p, cb, r)),
            keep=None if keep is None else (lambda r: keep(cb, r)),
            on_block=None if on_block is None else (lambda r: on_block(cb, r)))

    def contains(self, h):
        if self.collapsed:
            h = relabel_free(self.algebra, h)
        row = [self.codebook.code(v) for v in h.verts]
        return self.closure.store.lookup(row)


def relabel_free(algebra, h):
    '''Rename the free values of h to g[0], g[1], ... by first occurrence.'''
    names = {}
    verts = []
    for v in h.verts:
        if algebra.is_free(v):
            if v not in names:
                names[v] = FreeMark(len(names))
            verts.append(names[v])
        else:
            verts.append(v)
    return Cube(verts, h.dim)


def _check_thetas(alg, thetas):
    if len(thetas) < 1:
        raise ValueError('need at least one congruence')
    for k, theta in enumerate(thetas):
        if theta.size != alg.size:
            raise SizeMismatchError('theta_%d is on %d points, algebra has size %d'
                                    % (k, theta.size, alg.size))
        if not is_congruence(alg, theta):
            raise NotACongruenceError('theta_%d = %s is not a congruence of %s'
                                      % (k, theta.render(), alg.name))


def _gcube_rows(n, i, pairs):
    '''Coded gcube(n, i, x, y) for an (m, 2) array of pairs.'''
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    bit = (np.arange(2 ** n) >> i) & 1
    return np.where(bit[None, :] == 1, pairs[:, 1:2], pairs[:, 0:1])


def generator_rows(thetas):
    '''Coded generator cubes, deduplicated in first occurrence order.'''
    n = len(thetas)
    rows = np.concatenate([_gcube_rows(n, i, theta.pairs()) for i, theta in enumerate(thetas)])
    _, first = np.unique(rows, axis=0, return_index=True)
    return rows[np.sort(first)]


def matrix_generators(alg, thetas):
    '''All gcube(n, i, x, y) with (x, y) in theta_i, without repeats.'''
    _check_thetas(alg, thetas)
    return [Cube([FinIdx(int(v)) for v in row]) for row in generator_rows(thetas)]


def line_closed_count(size, thetas, chunk=2**16):
    '''Number of cubes in ``A**(2**n)`` whose i-lines all lie in theta_i. It
    bounds the size of M(thetas) from above.

    '''
    n = len(thetas)
    V = 2 ** n
    weights = vertex_weights(size, V)
    axes = [line_indices(n, i) for i in range(n)]
    total = 0
    for start in range(0, size ** V, chunk):
        codes = np.arange(start, min(start + chunk, size ** V), dtype=np.int64)
        digits = (codes[:, None] // weights[None, :]) % size
        ok = np.ones(codes.size, dtype=bool)
        for (lo, hi), theta in zip(axes, thetas):
            L = theta.labels
            ok &= np.all(L[digits[:, lo]] == L[digits[:, hi]], axis=1)
        total += int(ok.sum())
    return total


def generate_full(alg, thetas, matrix_cap=None, tuple_cap=None, workers=None, chunk=None):
    '''Compute M(theta_0, ..., theta_{n-1}) for a finite algebra.

    Args:
        alg (FiniteAlgebra): the algebra.
        thetas (list): n congruences of alg.
        matrix_cap (int): refuse to run when ``alg.size ** (2 ** n)`` exceeds it.

    Returns:
        TableMatrixSet: every cube of the matrix algebra.

    Raises:
        ResourceCapError: if a cap is exceeded.
        NotACongruenceError: if some theta is not a congruence.
    '''
    _check_thetas(alg, thetas)
    n = len(thetas)
    V = 2 ** n
    matrix_cap = get_option('matrix_cap', matrix_cap)
    check_cap('matrix_cap', alg.size ** V, matrix_cap)
    closure = Closure(TableEvaluator(alg), CodeStore(alg.size, V), V,
                      chunk=get_option('chunk', chunk),
                      workers=get_option('workers', workers),
                      tuple_cap=get_option('tuple_cap', tuple_cap),
                      cube_cap=alg.size ** V)
    closure.limit = line_closed_count(alg.size, thetas)
    closure.seed(generator_rows(thetas))
    closure.run()
    log.info('M(%s) over %s: %d cubes, %d levels, %d evaluations',
             ','.join(t.render() for t in thetas), alg.name, len(closure),
             closure.depth, closure.evaluations)
    return TableMatrixSet(alg, n, closure)


def generate_bounded(alg, seeds, depth, cube_cap=None, tuple_cap=None, collapse=False,
                     keep=None, prune=None, argument_filter=None, on_block=None,
                     workers=None, chunk=None):
    '''Compute the level X_depth of a matrix algebra over a computable algebra.

    Args:
        alg (ComputableAlgebra): the algebra.
        seeds (list): one list of element pairs per axis; the cube dimension
            is ``len(seeds)``.
        depth (int): number of levels to compute.
        collapse (bool): canonically rename free values in every cube.
        keep: optional ``f(codebook, rows) -> bool mask``; only cubes passing
            it are stored. It must hold for every argument of every cube it
            accepts, or targets will be missed.
        prune: optional ``f(position, codebook, rows) -> bool mask``
            restricting the arguments used at every level. Only sound when no
            kept cube can be derived from a pruned argument.
        argument_filter: like prune, but applied at the last level only.
        on_block: optional ``f(codebook, rows)`` observing every evaluated
            block of cubes (duplicates included).

    Returns:
        BoundedMatrixSet

    Raises:
        ResourceCapError: if ``cube_cap`` or ``tuple_cap`` is exceeded; its
            ``depth`` attribute holds the last completed level.
    '''
    if depth < 0:
        raise ValueError('depth must be >= 0')
    n = len(seeds)
    if n < 1:
        raise ValueError('need seed pairs for at least one axis')
    V = 2 ** n
    codebook = CodeBook(alg)
    rows = []
    for i, pairs in enumerate(seeds):
        coded = [(codebook.code(x), codebook.code(y)) for x, y in pairs]
        if coded:
            rows.append(_gcube_rows(n, i, coded))
    rows = np.concatenate(rows) if rows else np.zeros((0, V), dtype=np.int64)
    closure = Closure(codebook, RowStore(), V, collapse=collapse,
                      chunk=get_option('chunk', chunk),
                      workers=get_option('workers', workers),
                      tuple_cap=get_option('tuple_cap', tuple_cap),
                      cube_cap=get_option('cube_cap', cube_cap))
    closure.seed(rows, keep=None if keep is None else (lambda r: keep(codebook, r)))
    mset = BoundedMatrixSet(alg, n, closure, codebook, collapsed=collapse)
    for level in range(1, depth + 1):
        mset.extend(argument_filter=_conjoin(prune, argument_filter if level == depth else None),
                    keep=keep, on_block=on_block)
    log.info('bounded matrices over %s: dim %d, depth %d, %d cubes, %d evaluations',
             alg.name, n, depth, len(closure), closure.evaluations)
    return mset


def _conjoin(f, g):
    if f is None or g is None:
        return f if g is None else g
    return lambda p, cb, r: np.asarray(f(p, cb, r), dtype=bool) & np.asarray(g(p, cb, r), dtype=bool)
