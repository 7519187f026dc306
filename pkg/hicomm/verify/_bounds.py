# -*- coding: utf-8 -*-
"""Bounds for verification runs and the logs they produce"""
from dataclasses import dataclass, field, asdict
import time
import pandas as pd

from .. import cube as cubes_
from ..options import get_option


@dataclass
class Bounds:
    """How far a verification run looks.

    Attributes:
        i_max (int): largest index i of seed elements r[i]^[j].
        j_max (int): largest level j of seed elements.
        depth (int): generation depth m.
        g_samples (int): extra O and G elements mixed into the seeds.
        cube_cap (int): most cubes a single generation may store.
    """
    i_max: int = None
    j_max: int = None
    depth: int = None
    g_samples: int = None
    cube_cap: int = None

    def __post_init__(self):
        for name in ('i_max', 'j_max', 'depth', 'g_samples', 'cube_cap'):
            setattr(self, name, get_option(name, getattr(self, name)))
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError('bound %s must be a natural number, got %r' % (name, value))

    def to_dict(self):
        return asdict(self)


@dataclass
class VerdictLog:
    """Result of one verification run.

    The run passes exactly when no counterexample was found. Everything
    needed to replay it is in ``lemma``, ``n`` and ``bounds``.
    """
    lemma: str
    n: int
    bounds: Bounds
    instances: int = 0
    counterexamples: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self):
        return not self.counterexamples

    def fail(self, reason, **details):
        details['reason'] = reason
        self.counterexamples.append(details)

    def to_dict(self, timing=False):
        '''A JSON ready mapping; wall-clock time only when timing is set.'''
        out = {'lemma': self.lemma,
               'n': self.n,
               'bounds': self.bounds.to_dict(),
               'passed': self.passed,
               'instances': self.instances,
               'counterexamples': self.counterexamples,
               'notes': self.notes}
        if timing:
            out['elapsed'] = self.elapsed
        return out

    def to_frame(self):
        row = {'lemma': self.lemma, 'n': self.n, 'passed': self.passed,
               'instances': self.instances,
               'counterexamples': len(self.counterexamples),
               'elapsed': self.elapsed}
        row.update(self.bounds.to_dict())
        return pd.DataFrame([row])

    def render(self):
        '''Text report lines.'''
        lines = ['%s n=%d: %s' % (self.lemma, self.n, 'pass' if self.passed else 'FAIL'),
                 'bounds: %s' % ', '.join('%s=%d' % kv for kv in self.bounds.to_dict().items()),
                 'instances: %d' % self.instances]
        for k in sorted(self.notes):
            lines.append('%s: %s' % (k, self.notes[k]))
        for c in self.counterexamples:
            lines.append('counterexample: %s' % c['reason'])
            for k in sorted(c):
                if k != 'reason':
                    value = c[k]
                    if isinstance(value, list):
                        lines.extend('  %s' % v for v in value)
                    else:
                        lines.append('  %s: %s' % (k, value))
        return lines


def summary_frame(logs):
    '''One row per log.'''
    return pd.concat([v.to_frame() for v in logs], ignore_index=True)


class timer(object):
    """Context manager storing the wall-clock time of a block in a log."""
    def __init__(self, vlog):
        self.vlog = vlog

    def __enter__(self):
        self.start = time.perf_counter()
        return self.vlog

    def __exit__(self, type, value, traceback):
        self.vlog.elapsed = time.perf_counter() - self.start


def derivation(mset, k):
    '''Lines giving cube k and every cube it was derived from.'''
    todo, seen = [int(k)], set()
    while todo:
        c = todo.pop()
        if c in seen:
            continue
        seen.add(c)
        prov = mset.provenance(c)
        if prov is not None:
            todo.extend(prov[1])
    out = []
    for c in sorted(seen):
        prov = mset.provenance(c)
        how = 'generator' if prov is None else \
            '%s(%s)' % (prov[0], ', '.join('#%d' % a for a in prov[1]))
        out.append('#%d: %s  <- %s' % (c, cubes_.render(mset.cube(c)), how))
    return out
