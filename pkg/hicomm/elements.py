'''
Elements of finite and computable algebras.

A finite algebra has elements ``FinIdx(v)``. The ladder algebras built by
:func:`hicomm.algebras.ladder_algebra` have atoms ``Rel(i, j)`` (written
``r[i]^[j]``) and ``Oel(i, j, g)`` (written ``o[i,(g...)]^[j]``), and every
other value is a free application node ``SNode('s', args)``. The pointed
algebra has the constant ``OAtom`` (written ``o``). ``FreeMark(k)`` (written
``g[k]``) is a placeholder for an anonymous free value.

All elements are immutable and hashable, and equality is structural.
'''
import re
from dataclasses import dataclass
from typing import Tuple, Union

from .utils import ElementParseError


@dataclass(frozen=True)
class FinIdx:
    v: int

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Rel:
    i: int
    j: int

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Oel:
    i: int
    j: int
    g: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'g', tuple(int(b) for b in self.g))

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class FreeMark:
    k: int

    def __str__(self):
        return render(self)


class _OAtom(object):
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'OAtom'

    def __str__(self):
        return 'o'

    def __reduce__(self):
        return (_OAtom, ())

OAtom = _OAtom()


class SNode(object):
    """A free application node ``op(children...)``.

    The hash is computed once, so deep terms stay cheap to intern.
    """
    __slots__ = ('op', 'children', '_hash')

    def __init__(self, op, children):
        children = tuple(children)
        object.__setattr__(self, 'op', op)
        object.__setattr__(self, 'children', children)
        object.__setattr__(self, '_hash', hash(('SNode', op, children)))

    def __setattr__(self, name, value):
        raise AttributeError('SNode is immutable')

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, SNode):
            return NotImplemented
        return (self._hash == other._hash and self.op == other.op
                and self.children == other.children)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return 'SNode(%r, %r)' % (self.op, self.children)

    def __str__(self):
        return render(self)

    def __reduce__(self):
        return (SNode, (self.op, self.children))


Element = Union[FinIdx, Rel, Oel, FreeMark, _OAtom, SNode]


def is_element(e):
    return isinstance(e, (FinIdx, Rel, Oel, FreeMark, SNode)) or e is OAtom


def sort_key(e):
    '''A total order on elements, used for every deterministic report.'''
    if isinstance(e, FinIdx):
        return (0, e.v)
    if e is OAtom:
        return (1,)
    if isinstance(e, Rel):
        return (2, e.j, e.i)
    if isinstance(e, Oel):
        return (3, e.j, e.i, e.g)
    if isinstance(e, FreeMark):
        return (4, e.k)
    if isinstance(e, SNode):
        return (5, e.op, tuple(sort_key(c) for c in e.children))
    raise TypeError('not an element: %r' % (e,))


def depth(e):
    '''Nesting depth of free application nodes (atoms have depth 0).'''
    if isinstance(e, SNode):
        return 1 + max((depth(c) for c in e.children), default=0)
    return 0


# rendering

def render(e):
    if isinstance(e, FinIdx):
        return str(e.v)
    if e is OAtom:
        return 'o'
    if isinstance(e, Rel):
        return 'r[%d]^[%d]' % (e.i, e.j)
    if isinstance(e, Oel):
        return 'o[%d,(%s)]^[%d]' % (e.i, ','.join(str(b) for b in e.g), e.j)
    if isinstance(e, FreeMark):
        return 'g[%d]' % e.k
    if isinstance(e, SNode):
        return '%s(%s)' % (e.op, ', '.join(render(c) for c in e.children))
    raise TypeError('not an element: %r' % (e,))


# parsing

_TOKEN = re.compile(r'\d+|[A-Za-z_][A-Za-z_0-9]*|[\[\](),^]')
_WHITESPACE = re.compile(r'\s+')


def _tokenize(text, error):
    compact = _WHITESPACE.sub('', text)
    tokens = []
    pos = 0
    while pos < len(compact):
        m = _TOKEN.match(compact, pos)
        if m is None:
            raise error('unexpected character %r in %r' % (compact[pos], text))
        tokens.append(m.group())
        pos = m.end()
    return tokens


class _ElementParser(object):
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text, ElementParseError)
        self.pos = 0

    def fail(self, msg):
        raise ElementParseError('%s at token %d of %r' % (msg, self.pos, self.text))

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None:
            self.fail('unexpected end of input')
        if expected is not None and tok != expected:
            self.fail('expected %r, got %r' % (expected, tok))
        self.pos += 1
        return tok

    def natural(self):
        tok = self.take()
        if not tok.isdigit():
            self.fail('expected a natural number, got %r' % tok)
        return int(tok)

    def bracketed(self):
        self.take('[')
        v = self.natural()
        self.take(']')
        return v

    def superscript(self):
        self.take('^')
        return self.bracketed()

    def element(self):
        tok = self.take()
        if tok.isdigit():
            return FinIdx(int(tok))
        if not (tok[0].isalpha() or tok[0] == '_'):
            self.fail('unexpected %r' % tok)
        nxt = self.peek()
        if nxt == '(':
            self.take('(')
            children = [self.element()]
            while self.peek() == ',':
                self.take(',')
                children.append(self.element())
            self.take(')')
            return SNode(tok, children)
        if tok == 'o' and nxt == '[':
            self.take('[')
            i = self.natural()
            self.take(',')
            self.take('(')
            g = []
            if self.peek() != ')':
                g.append(self.bit())
                while self.peek() == ',':
                    self.take(',')
                    g.append(self.bit())
            self.take(')')
            self.take(']')
            j = self.superscript()
            return Oel(i, j, tuple(g))
        if tok == 'o':
            return OAtom
        if tok == 'r':
            i = self.bracketed()
            return Rel(i, self.superscript())
        if tok == 'g':
            return FreeMark(self.bracketed())
        self.fail('unknown element %r' % tok)

    def bit(self):
        b = self.natural()
        if b not in (0, 1):
            self.fail('expected a bit, got %d' % b)
        return b


def parse(text):
    '''Parse one element from its text form (whitespace is ignored).'''
    p = _ElementParser(text)
    e = p.element()
    if p.peek() is not None:
        p.fail('trailing input')
    return e


element_render = render
element_parse = parse


def split_top_level(text, error=ElementParseError):
    '''Split on commas that are not nested inside brackets or parentheses.'''
    parts = []
    level = 0
    start = 0
    for k, ch in enumerate(text):
        if ch in '([':
            level += 1
        elif ch in ')]':
            level -= 1
            if level < 0:
                raise error('unbalanced brackets in %r' % text)
        elif ch == ',' and level == 0:
            parts.append(text[start:k])
            start = k + 1
    if level != 0:
        raise error('unbalanced brackets in %r' % text)
    parts.append(text[start:])
    return [p.strip() for p in parts]
