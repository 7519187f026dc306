'''
Vertex labelled cubes.

A cube of dimension n has 2**n vertices. Vertex f (a function n -> 2) is
stored at the integer index whose bit k is f(k), so coordinate 0 is the
lowest bit. A square is a 2-dimensional cube whose first coordinate is the
smaller of the two axes it was cut along.
'''
from typing import NamedTuple, Any
import numpy as np

from . import elements
from .utils import CoordinateError


class Cube(object):
    __slots__ = ('dim', 'verts', '_hash')

    def __init__(self, verts, dim=None):
        verts = tuple(verts)
        if dim is None:
            dim = len(verts).bit_length() - 1
        if dim < 0 or len(verts) != 2 ** dim:
            raise CoordinateError('a cube needs a power of two vertices, got %d' % len(verts))
        object.__setattr__(self, 'dim', dim)
        object.__setattr__(self, 'verts', verts)
        object.__setattr__(self, '_hash', hash((dim, verts)))

    def __setattr__(self, name, value):
        raise AttributeError('Cube is immutable')

    def __eq__(self, other):
        if not isinstance(other, Cube):
            return NotImplemented
        return self.dim == other.dim and self.verts == other.verts

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.verts)

    def __getitem__(self, f):
        if isinstance(f, (tuple, list)):
            f = vertex_index(f)
        return self.verts[f]

    def __repr__(self):
        return 'Cube(%s)' % render(self)

    def __reduce__(self):
        return (Cube, (self.verts, self.dim))


Square = Cube


class Line(NamedTuple):
    a: Any
    b: Any


def vertex_index(f):
    '''Bitmask of a vertex given as a sequence of bits.'''
    return sum(int(b) << k for k, b in enumerate(f))


def vertex_bits(index, dim):
    return tuple((index >> k) & 1 for k in range(dim))


def _check_axis(i, dim):
    if not isinstance(i, (int, np.integer)) or not 0 <= i < dim:
        raise CoordinateError('coordinate %r out of range for dimension %d' % (i, dim))


def _spread(bits, coords):
    '''Put bit k of bits at position coords[k].'''
    idx = 0
    for k, c in enumerate(coords):
        idx |= ((bits >> k) & 1) << c
    return idx


def face_indices(dim, assignment):
    '''Vertex indices of the subcube fixing the given coordinates, ordered
    by the remaining coordinates.

    '''
    for c, b in assignment.items():
        _check_axis(c, dim)
        if b not in (0, 1):
            raise CoordinateError('coordinate %d must be assigned 0 or 1, got %r' % (c, b))
    base = sum(b << c for c, b in assignment.items())
    free = [c for c in range(dim) if c not in assignment]
    return [base | _spread(g, free) for g in range(2 ** len(free))]


def subcube(h, assignment):
    '''The cube h_f for a partial assignment f of coordinates to bits.'''
    idx = face_indices(h.dim, assignment)
    return Cube([h.verts[k] for k in idx], h.dim - len(assignment))


def gcube(n, i, x, y):
    '''The n-cube with x where coordinate i is 0 and y where it is 1.'''
    _check_axis(i, n)
    return Cube([y if (k >> i) & 1 else x for k in range(2 ** n)], n)


def line_indices(dim, i):
    '''Index arrays (lo, hi) of the i-cross section lines, one row per f on
    the other coordinates in increasing order; the last row is the pivot.

    '''
    _check_axis(i, dim)
    others = [c for c in range(dim) if c != i]
    lo = np.array([_spread(g, others) for g in range(2 ** (dim - 1))], dtype=np.intp)
    return lo, lo | (1 << i)


def lines(h, i):
    '''Return (support, pivot) i-cross section lines of h.'''
    lo, hi = line_indices(h.dim, i)
    ls = [Line(h.verts[a], h.verts[b]) for a, b in zip(lo, hi)]
    return ls[:-1], ls[-1]


def square_indices(dim, i, j):
    '''Index array with one row of four vertices per (i, j)-cross section
    square; the last row is the pivot.

    '''
    _check_axis(i, dim)
    _check_axis(j, dim)
    if i == j:
        raise CoordinateError('square axes must differ, got %d twice' % i)
    lo, hi = min(i, j), max(i, j)
    others = [c for c in range(dim) if c not in (i, j)]
    rows = []
    for g in range(2 ** (dim - 2)):
        base = _spread(g, others)
        rows.append([base, base | 1 << lo, base | 1 << hi, base | 1 << lo | 1 << hi])
    return np.array(rows, dtype=np.intp)


def squares(h, i, j):
    '''Return (support, pivot) (i, j)-cross section squares of h.'''
    sq = [Cube([h.verts[k] for k in row], 2) for row in square_indices(h.dim, i, j)]
    return sq[:-1], sq[-1]


def is_constant(c):
    if isinstance(c, Cube):
        vs = c.verts
    elif isinstance(c, Line):
        vs = (c.a, c.b)
    else:
        vs = tuple(c)
    return all(v == vs[0] for v in vs)


def gcube_axis(h):
    '''If h is gcube(n, i, x, y) with x != y return (i, x, y); for a constant
    cube return (None, x, x); otherwise None.

    '''
    if is_constant(h):
        return None, h.verts[0], h.verts[0]
    x = h.verts[0]
    for i in range(h.dim):
        y = h.verts[1 << i]
        if y != x and h == gcube(h.dim, i, x, y):
            return i, x, y
    return None


def render(h):
    '''Vertices in index order, comma separated.'''
    return ', '.join(elements.render(v) for v in h.verts)


def parse(text):
    parts = elements.split_top_level(text)
    n = len(parts)
    if n & (n - 1):
        raise CoordinateError('a cube needs a power of two vertices, got %d' % n)
    return Cube([elements.parse(p) for p in parts])
