# -*- coding: utf-8 -*-
"""Functions for reading and writing algebra files"""
import json
import logging

from .algebras import FiniteAlgebra
from .utils import AlgebraFormatError

log = logging.getLogger(__name__)


def algebra_from_document(doc):
    '''Build a FiniteAlgebra from a decoded algebra document, a mapping
    ``{"name": str, "size": N, "operations": [{"symbol": s, "arity": k,
    "table": [...]}]}``.

    '''
    if not isinstance(doc, dict):
        raise AlgebraFormatError('algebra document must be a JSON object')
    for key in ('size', 'operations'):
        if key not in doc:
            raise AlgebraFormatError('algebra document is missing %r' % key)
    if not isinstance(doc['operations'], list):
        raise AlgebraFormatError('"operations" must be a list')
    ops = []
    for k, op in enumerate(doc['operations']):
        if not isinstance(op, dict):
            raise AlgebraFormatError('operation %d must be a JSON object' % k)
        missing = [key for key in ('symbol', 'arity', 'table') if key not in op]
        if missing:
            raise AlgebraFormatError('operation %d is missing %s' % (k, ', '.join(missing)))
        if not isinstance(op['table'], list):
            raise AlgebraFormatError('operation %r: table must be a list' % op['symbol'])
        ops.append((op['symbol'], op['arity'], op['table']))
    return FiniteAlgebra(doc.get('name', 'algebra'), doc['size'], ops)


def load_finite_algebra(path):
    '''Read and validate a JSON algebra file.

    Raises:
        AlgebraFormatError: if the file is not a well formed algebra document.
        AlgebraValidationError: if the tables do not describe an algebra.
    '''
    try:
        with open(path, 'r') as f:
            doc = json.load(f)
    except json.JSONDecodeError as e:
        raise AlgebraFormatError('%s is not valid JSON: %s' % (path, e))
    alg = algebra_from_document(doc)
    log.debug('loaded %r from %s', alg, path)
    return alg


def algebra_document(alg):
    return {'name': alg.name,
            'size': alg.size,
            'operations': [{'symbol': op.symbol, 'arity': op.arity,
                            'table': [int(x) for x in op.table.ravel()]}
                           for op in alg.operations]}


def save_finite_algebra(alg, path):
    with open(path, 'w') as f:
        json.dump(algebra_document(alg), f)
