# -*- coding: utf-8 -*-
"""Exceptions and small helpers shared across hicomm"""
import numpy as np


class HicommException(Exception):
    def __init__(self, value):
        self.parameter = value
    def __str__(self):
        return repr(self.parameter)

class AlgebraFormatError(HicommException):
    pass

class AlgebraValidationError(HicommException):
    pass

class ElementParseError(HicommException):
    pass

class PartitionParseError(HicommException):
    pass

class TermParseError(HicommException):
    pass

class UnknownSymbolError(HicommException):
    pass

class ArityError(HicommException):
    pass

class CoordinateError(HicommException):
    pass

class SizeMismatchError(HicommException):
    pass

class NotACongruenceError(HicommException):
    pass

class ResourceCapError(HicommException):
    """Raised whenever a configured cap would be exceeded.

    Attributes:
        cap (str): name of the option that was exceeded.
        limit (int): its value.
        depth (int): generation depth completed before the cap was hit,
            or None when the cap was checked up front.
    """
    def __init__(self, value, cap=None, limit=None, depth=None):
        super().__init__(value)
        self.cap = cap
        self.limit = limit
        self.depth = depth


def check_cap(name, value, limit, depth=None):
    '''Raise ResourceCapError if value is over limit.'''
    if value > limit:
        raise ResourceCapError('%s exceeded: %d > %d' % (name, value, limit),
                               cap=name, limit=limit, depth=depth)


def canonical_labels(labels):
    '''Renumber block labels by first occurrence: [5, 5, 2, 5, 0] -> [0, 0, 1, 0, 2].'''
    labels = np.asarray(labels)
    if labels.size == 0:
        return np.zeros(0, dtype=np.intp)
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    # rank the distinct labels by where they first appear
    order = np.argsort(first, kind='stable')
    rank = np.empty_like(order)
    rank[order] = np.arange(order.size)
    return rank[inverse.reshape(-1)].astype(np.intp)


def restricted_growth_strings(n):
    '''Yield every restricted growth string of length n in lexicographic
    order. Each one is the canonical label list of a set partition of n
    points, so there are Bell(n) of them.

    '''
    if n == 0:
        yield ()
        return
    a = [0] * n
    # m[k] is the max of a[0..k-1]
    m = [0] * n
    while True:
        yield tuple(a)
        k = n - 1
        while k > 0 and a[k] > m[k]:
            k -= 1
        if k == 0:
            return
        a[k] += 1
        for i in range(k + 1, n):
            a[i] = 0
            m[i] = max(m[i - 1], a[i - 1])


def vertex_weights(size, nverts):
    '''Positional weights size**v, used to give each cube an integer code.'''
    return size ** np.arange(nverts, dtype=np.int64)
