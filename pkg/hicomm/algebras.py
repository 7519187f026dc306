'''
Finite algebras given by operation tables, and computable algebras given by
evaluators.

Operation tables are numpy arrays of shape ``(N,) * arity``; the flat
row-major table of the algebra file format is ``table.ravel()``.

The computable algebras are

- :func:`ladder_algebra`: the n-ary algebra on ``O u R u G`` whose operation
  sends patterns of ``r[4i]^[j]``/``r[4i+2]^[j]`` arguments to
  ``r[i]^[j+1]``, ``r[i+1]^[j+1]`` or ``o[i,g]^[j]``, and every other tuple
  injectively into the free part ``G``. It is n-step supernilpotent but not
  solvable in any dimension up to n.
- :func:`pointed_algebra`: the binary algebra on ``G u {o}`` with
  ``t(o, y) = o`` and ``t(x, y) = s(x, y)`` otherwise. It is right nilpotent
  but not left nilpotent.
'''
import itertools
import logging
import numpy as np

from .elements import FinIdx, Rel, Oel, FreeMark, SNode, OAtom, is_element
from .utils import AlgebraValidationError, UnknownSymbolError, ArityError

log = logging.getLogger(__name__)


class Operation(object):
    """A named operation of a finite algebra.

    Attributes:
        symbol (str): operation symbol.
        arity (int): number of arguments.
        table (ndarray): read-only array of shape ``(N,) * arity``.
    """
    def __init__(self, symbol, arity, table):
        self.symbol = symbol
        self.arity = arity
        self.table = table

    def __repr__(self):
        return 'Operation(%r, arity=%d)' % (self.symbol, self.arity)


class FiniteAlgebra(object):
    """A finite algebra on ``{0, ..., size-1}``.

    Args:
        name (str): name of the algebra.
        size (int): carrier size, at least 1.
        operations (list): ``(symbol, arity, table)`` triples where table is
            a flat row-major list of ``size**arity`` carrier indices.

    Raises:
        AlgebraValidationError: on a bad size, arity, table length, entry or
            a duplicate symbol.
    """
    def __init__(self, name, size, operations):
        if not isinstance(size, (int, np.integer)) or isinstance(size, bool) or size < 1:
            raise AlgebraValidationError('size must be a positive integer, got %r' % (size,))
        self.name = name
        self.size = int(size)
        ops = []
        seen = set()
        for symbol, arity, table in operations:
            if symbol in seen:
                raise AlgebraValidationError('duplicate operation symbol %r' % symbol)
            seen.add(symbol)
            if not isinstance(arity, (int, np.integer)) or isinstance(arity, bool) or arity < 0:
                raise AlgebraValidationError('operation %r has invalid arity %r' % (symbol, arity))
            flat = np.asarray(table)
            if flat.ndim != 1 or flat.size != self.size ** arity:
                raise AlgebraValidationError('operation %r needs %d table entries, got %d'
                                             % (symbol, self.size ** arity, flat.size))
            if flat.size and not np.issubdtype(flat.dtype, np.integer):
                raise AlgebraValidationError('operation %r has non-integer entries' % symbol)
            flat = flat.astype(np.intp)
            bad = (flat < 0) | (flat >= self.size)
            if bad.any():
                k = int(np.flatnonzero(bad)[0])
                raise AlgebraValidationError('operation %r: entry %d at position %d is out of range for size %d'
                                             % (symbol, flat[k], k, self.size))
            arr = flat.reshape((self.size,) * int(arity))
            arr.flags.writeable = False
            ops.append(Operation(symbol, int(arity), arr))
        self.operations = tuple(ops)
        self._by_symbol = {op.symbol: op for op in self.operations}

    def __repr__(self):
        return 'FiniteAlgebra(%r, size=%d, operations=%s)' % (
            self.name, self.size, [(op.symbol, op.arity) for op in self.operations])

    @property
    def symbols(self):
        return [op.symbol for op in self.operations]

    def op(self, symbol):
        try:
            return self._by_symbol[symbol]
        except KeyError:
            raise UnknownSymbolError('algebra %r has no operation %r' % (self.name, symbol))

    def elements(self):
        return [FinIdx(v) for v in range(self.size)]

    def apply(self, symbol, args):
        '''Apply an operation to FinIdx (or int) arguments.'''
        op = self.op(symbol)
        if len(args) != op.arity:
            raise ArityError('%r takes %d arguments, got %d' % (symbol, op.arity, len(args)))
        idx = []
        for a in args:
            v = a.v if isinstance(a, FinIdx) else a
            if not isinstance(v, (int, np.integer)) or not 0 <= v < self.size:
                raise ValueError('%r is not an element of %r' % (a, self.name))
            idx.append(int(v))
        return FinIdx(int(op.table[tuple(idx)]))

    def as_computable(self):
        '''View this algebra as a computable algebra over FinIdx elements.'''
        return FiniteView(self)


class ComputableAlgebra(object):
    """Base class for algebras given by a total, pure evaluator.

    Subclasses set ``name`` and ``signature`` (a tuple of ``(symbol, arity)``)
    and implement :meth:`evaluate`.
    """
    name = None
    signature = ()

    def __repr__(self):
        return '%s(%r)' % (type(self).__name__, self.name)

    @property
    def symbols(self):
        return [s for s, _ in self.signature]

    def arity(self, symbol):
        for s, k in self.signature:
            if s == symbol:
                return k
        raise UnknownSymbolError('algebra %r has no operation %r' % (self.name, symbol))

    def apply(self, symbol, args):
        args = tuple(args)
        k = self.arity(symbol)
        if len(args) != k:
            raise ArityError('%r takes %d arguments, got %d' % (symbol, k, len(args)))
        for a in args:
            if not is_element(a):
                raise TypeError('not an element: %r' % (a,))
        return self.evaluate(symbol, args)

    def evaluate(self, symbol, args):
        raise NotImplementedError

    def is_free(self, e):
        '''True for members of the free part G of the carrier.'''
        return isinstance(e, (SNode, FreeMark))


class FiniteView(ComputableAlgebra):
    def __init__(self, algebra):
        self.algebra = algebra
        self.name = algebra.name
        self.signature = tuple((op.symbol, op.arity) for op in algebra.operations)

    def evaluate(self, symbol, args):
        return self.algebra.apply(symbol, args)

    def is_free(self, e):
        return False


class LadderAlgebra(ComputableAlgebra):
    """The n-ary ladder algebra. Use :func:`ladder_algebra` to build one."""

    def __init__(self, n):
        if not isinstance(n, int) or n < 2:
            raise ValueError('ladder algebras need n >= 2, got %r' % (n,))
        self.n = n
        self.name = 'ladder%d' % n
        self.signature = (('t', n),)

    def pattern(self, args):
        '''Return (i, j, f) if every argument is r[4i]^[j] or r[4i+2]^[j] for
        a common i and j, with f[d] = 1 exactly when argument d is r[4i+2]^[j];
        otherwise None.

        '''
        first = args[0]
        if not isinstance(first, Rel):
            return None
        i, j = first.i // 4, first.j
        f = []
        for a in args:
            if not isinstance(a, Rel) or a.j != j or a.i // 4 != i:
                return None
            rem = a.i % 4
            if rem == 0:
                f.append(0)
            elif rem == 2:
                f.append(1)
            else:
                return None
        return i, j, tuple(f)

    def evaluate(self, symbol, args):
        p = self.pattern(args)
        if p is None:
            return SNode('s', args)
        i, j, f = p
        if all(f[:-1]):
            return Rel(i + f[-1], j + 1)
        return Oel(i, j, f[:-1])


class PointedAlgebra(ComputableAlgebra):
    """The binary algebra on ``G u {o}``. Use :func:`pointed_algebra`."""

    def __init__(self):
        self.name = 'pointed'
        self.signature = (('t', 2),)

    def evaluate(self, symbol, args):
        x, y = args
        if x is OAtom:
            return OAtom
        return SNode('s', (x, y))


def ladder_algebra(n):
    '''The computable n-ary ladder algebra (n >= 2).'''
    return LadderAlgebra(n)


def pointed_algebra():
    '''The computable binary algebra with ``t(o, y) = o``.'''
    return PointedAlgebra()


an_algebra = ladder_algebra


# builders for small finite algebras

def cyclic_group(m):
    '''Z_m under addition.'''
    a = np.arange(m)
    table = (a[:, None] + a[None, :]) % m
    return FiniteAlgebra('Z%d' % m, m, [('add', 2, table.ravel())])


def symmetric_group(k=3):
    '''S_k under composition, elements numbered by lexicographic order of
    the permutations (so 0 is the identity).

    '''
    perms = list(itertools.permutations(range(k)))
    index = {p: n for n, p in enumerate(perms)}
    table = [index[tuple(x[y[c]] for c in range(k))] for x in perms for y in perms]
    return FiniteAlgebra('S%d' % k, len(perms), [('mul', 2, table)])


def semilattice(size=2):
    '''The chain {0 < ... < size-1} under meet.'''
    a = np.arange(size)
    return FiniteAlgebra('meet%d' % size, size, [('meet', 2, np.minimum.outer(a, a).ravel())])


def trivial_algebra():
    return FiniteAlgebra('trivial', 1, [('t', 2, [0])])


def set_algebra(size):
    '''A bare set, no operations.'''
    return FiniteAlgebra('set%d' % size, size, [])


def random_algebra(size, seed, arity=2, name=None):
    '''A single random operation of the given arity, reproducible from seed.'''
    rng = np.random.default_rng(seed)
    table = rng.integers(0, size, size ** arity)
    if name is None:
        name = 'random%d_%d' % (size, seed)
    return FiniteAlgebra(name, size, [('t', arity, table)])
