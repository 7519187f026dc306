'''
Commutator terms and commutator series of finite algebras.

A commutator term is ``x`` or ``[t0, ..., tk-1]`` with ``2 <= k <= n``. For a
congruence alpha, ``x`` evaluates to alpha and a node to the higher
commutator of its children's values.

The series computed here are

- derived: ``[a]_{m+1} = [[a]_m, [a]_m]``
- left lower central: ``(a]_{m+1} = [a, (a]_m]``
- right lower central: ``(a]'_{m+1} = [(a]'_m, a]``
- dimension n: ``[a]^n_{m+1} = [[a]^n_m, ..., [a]^n_m]`` (n-ary)

Every series is weakly decreasing, so once two consecutive steps agree it
has stabilized for good.
'''
from dataclasses import dataclass, field
from typing import List, Optional, Tuple
import logging
import warnings

from .commutator import higher_commutator, supernilpotence_check
from .congruence import Partition
from .utils import ResourceCapError, TermParseError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommutatorTerm:
    children: Tuple['CommutatorTerm', ...] = ()

    @property
    def is_leaf(self):
        return not self.children

    @property
    def arity(self):
        return len(self.children)

    def max_arity(self):
        '''Largest node arity in the term, 0 for x.'''
        return max([self.arity] + [c.max_arity() for c in self.children])

    def depth(self):
        return 1 + max(c.depth() for c in self.children) if self.children else 0

    def render(self):
        if self.is_leaf:
            return 'x'
        return '[%s]' % ','.join(c.render() for c in self.children)

    def __str__(self):
        return self.render()


X = CommutatorTerm()


def node(*children):
    return CommutatorTerm(tuple(children))


def parse_term(text, n=None):
    '''Parse ``term := x | [term,term(,term)*]``, ignoring whitespace.

    Args:
        text (str): the term.
        n (int): largest allowed node arity, unbounded if None.

    Raises:
        TermParseError: on bad syntax or a node with too many children.
    '''
    s = ''.join(text.split())
    pos = 0

    def fail(msg):
        raise TermParseError('%s at offset %d of %r' % (msg, pos, text))

    def term():
        nonlocal pos
        if pos >= len(s):
            fail('unexpected end of term')
        if s[pos] == 'x':
            pos += 1
            return X
        if s[pos] != '[':
            fail('expected x or [')
        pos += 1
        kids = [term()]
        while pos < len(s) and s[pos] == ',':
            pos += 1
            kids.append(term())
        if pos >= len(s) or s[pos] != ']':
            fail('expected , or ]')
        pos += 1
        if len(kids) < 2:
            fail('a commutator needs at least 2 arguments')
        if n is not None and len(kids) > n:
            fail('a %d-ary commutator is over the bound %d' % (len(kids), n))
        return CommutatorTerm(tuple(kids))

    t = term()
    if pos != len(s):
        fail('trailing input')
    return t


def eval_term(alg, t, alpha, cache=None):
    '''Value of the commutator term t at alpha.

    Args:
        cache (dict): optional memo of already computed values, shared
            between calls on the same algebra.
    '''
    if cache is None:
        cache = {}
    key = (t, alpha)
    if key in cache:
        return cache[key]
    if t.is_leaf:
        value = alpha
    else:
        value = higher_commutator(alg, [eval_term(alg, c, alpha, cache) for c in t.children])
    cache[key] = value
    return value


@dataclass
class SeriesReport:
    """Steps of a commutator series.

    Attributes:
        kind (str): derived, left-lower-central, right-lower-central or
            dimension-n.
        steps (list): the partitions computed, starting with alpha.
        stabilized (bool): the last two steps are equal.
        reached_zero (bool): some step is the zero congruence.
    """
    kind: str
    steps: List[Partition]
    stabilized: bool = False
    reached_zero: bool = False

    @property
    def zero_step(self):
        for k, p in enumerate(self.steps):
            if p.is_zero():
                return k
        return None

    def at(self, m):
        '''Step m; after stabilization later steps equal the last one.'''
        if m < len(self.steps):
            return self.steps[m]
        if self.stabilized or self.reached_zero:
            return self.steps[-1]
        raise IndexError('step %d was not computed' % m)


def _series(kind, alpha, nxt, max_m, warn=True):
    steps = [alpha]
    while len(steps) - 1 < max_m and not steps[-1].is_zero():
        steps.append(nxt(steps[-1]))
        log.debug('%s step %d: %s', kind, len(steps) - 1, steps[-1].render())
        if steps[-1] == steps[-2]:
            break
    report = SeriesReport(kind, steps,
                          stabilized=len(steps) > 1 and steps[-1] == steps[-2],
                          reached_zero=steps[-1].is_zero())
    if warn and not (report.stabilized or report.reached_zero):
        warnings.warn('%s series did not stabilize within %d steps' % (kind, max_m))
    return report


def derived_series(alg, alpha, max_m=8):
    return _series('derived', alpha, lambda p: higher_commutator(alg, [p, p]), max_m)


def left_lcs(alg, alpha, max_m=8):
    return _series('left-lower-central', alpha,
                   lambda p: higher_commutator(alg, [alpha, p]), max_m)


def right_lcs(alg, alpha, max_m=8):
    return _series('right-lower-central', alpha,
                   lambda p: higher_commutator(alg, [p, alpha]), max_m)


def dim_series(alg, alpha, n, max_m=8, warn=True):
    if n < 2:
        raise ValueError('dimension must be at least 2, got %d' % n)
    return _series('dimension-%d' % n, alpha,
                   lambda p: higher_commutator(alg, [p] * n), max_m, warn)


@dataclass
class Verdict:
    """Outcome of a property check.

    Attributes:
        prop (str): the property checked.
        status (str): ``holds``, ``fails`` or ``inconclusive``.
        step (int): step at which it holds, or the step where the series
            stabilized when it fails.
        detail (str): extra wording for the report.
    """
    prop: str
    status: str
    step: Optional[int] = None
    detail: str = ''
    report: object = None
    extra: dict = field(default_factory=dict)

    @property
    def exit_code(self):
        return {'holds': 0, 'fails': 1, 'inconclusive': 3}[self.status]

    def __bool__(self):
        return self.status == 'holds'

    def __str__(self):
        if self.detail:
            return '%s (%s)' % (self.status, self.detail)
        if self.step is None:
            return self.status
        return '%s at step %d' % (self.status, self.step)


_SERIES = {
    'solvable': derived_series,
    'left-nilpotent': left_lcs,
    'right-nilpotent': right_lcs,
}

PROPERTIES = ('solvable', 'left-nilpotent', 'right-nilpotent', 'supernilpotent:K',
              'solvable-in-dimension:N', 'term:T')


def parse_property(text):
    '''Split ``name[:arg]`` and validate it; returns (name, arg).'''
    name, _, arg = text.partition(':')
    if name in _SERIES and not arg:
        return name, None
    if name in ('supernilpotent', 'solvable-in-dimension'):
        try:
            k = int(arg)
        except ValueError:
            raise ValueError('%s needs an integer argument, got %r' % (name, text))
        if k < (1 if name == 'supernilpotent' else 2):
            raise ValueError('argument of %s out of range: %d' % (name, k))
        return name, k
    if name == 'term' and arg:
        return name, parse_term(arg)
    raise ValueError('unknown property %r; expected one of %s' % (text, ', '.join(PROPERTIES)))


def _series_verdict(prop, report):
    if report.reached_zero:
        return Verdict(prop, 'holds', report.zero_step, report=report)
    if report.stabilized:
        k = len(report.steps) - 1
        return Verdict(prop, 'fails', k, 'stabilized at step %d above zero' % k, report=report)
    return Verdict(prop, 'inconclusive', None,
                   'no stabilization within %d steps' % (len(report.steps) - 1), report=report)


def check(alg, prop, max_m=8):
    '''Check a solvability, nilpotence or supernilpotence property.

    Args:
        alg (FiniteAlgebra): the algebra.
        prop (str): one of ``solvable``, ``left-nilpotent``,
            ``right-nilpotent``, ``supernilpotent:k``,
            ``solvable-in-dimension:n`` or ``term:T`` (T a commutator term,
            holding when T(1) = 0).
        max_m (int): most series steps to compute.

    Returns:
        Verdict
    '''
    name, arg = parse_property(prop)
    one = Partition.one(alg.size)
    try:
        if name in _SERIES:
            return _series_verdict(prop, _SERIES[name](alg, one, max_m))
        if name == 'solvable-in-dimension':
            return _series_verdict(prop, dim_series(alg, one, arg, max_m))
        if name == 'supernilpotent':
            report = supernilpotence_check(alg, arg)
            if report.holds:
                return Verdict(prop, 'holds', arg, report=report)
            return Verdict(prop, 'fails', arg, '%d-ary [1,...,1] is not zero' % (arg + 1),
                           report=report)
        value = eval_term(alg, arg, one)
        if value.is_zero():
            return Verdict(prop, 'holds', detail='%s(1) = 0' % arg.render(), report=value)
        return Verdict(prop, 'fails', detail='%s(1) = %s' % (arg.render(), value.render()),
                       report=value)
    except ResourceCapError as e:
        log.info('check %s on %s hit a cap: %s', prop, alg.name, e)
        return Verdict(prop, 'inconclusive', None, 'cap %s exceeded' % e.cap)


def series_bound(t):
    '''Steps of the dimension series that sit below t: 0 for x, one more
    than the largest child bound for a node.

    '''
    if t.is_leaf:
        return 0
    return 1 + max(series_bound(c) for c in t.children)


def term_bound_check(alg, t, alpha, n=None, cache=None):
    '''Check ``[alpha]^n_m <= t(alpha)`` with m = series_bound(t).

    n defaults to the largest node arity of t (at least 2), and must not be
    smaller than it.
    '''
    n = max(2, t.max_arity()) if n is None else n
    if t.max_arity() > n:
        raise ValueError('term %s has nodes of arity above %d' % (t.render(), n))
    m = series_bound(t)
    lower = dim_series(alg, alpha, n, max_m=m, warn=False).at(m)
    value = eval_term(alg, t, alpha, cache)
    held = lower <= value
    return Verdict('term-bound:%s' % t.render(), 'holds' if held else 'fails', m,
                   extra={'lower': lower, 'value': value, 'n': n})


def zero_term_check(alg, n, terms, max_m=8):
    '''For every term t with t(1) = 0, the dimension-n series of 1 must
    reach zero within series_bound(t) steps.

    Returns:
        Verdict: ``extra['applicable']`` lists the terms with t(1) = 0.
    '''
    one = Partition.one(alg.size)
    cache = {}
    applicable, violations = [], []
    for t in terms:
        if t.max_arity() > n:
            raise ValueError('term %s has nodes of arity above %d' % (t.render(), n))
        if eval_term(alg, t, one, cache).is_zero():
            applicable.append(t)
    bound = max([max_m] + [series_bound(t) for t in applicable])
    series = dim_series(alg, one, n, bound, warn=False)
    for t in applicable:
        m = series_bound(t)
        z = series.zero_step
        if z is None or z > m:
            violations.append(t)
    status = 'fails' if violations else 'holds'
    return Verdict('zero-term:%d' % n, status, series.zero_step,
                   extra={'applicable': applicable, 'violations': violations})
