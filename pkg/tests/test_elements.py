import unittest
from unittest import TestCase

from hypothesis import given, strategies as st

from hicomm.elements import (FinIdx, Rel, Oel, FreeMark, OAtom, SNode, depth, element_parse,
                            element_render, parse, render, sort_key)
from hicomm.utils import ElementParseError

atoms = st.one_of(st.builds(FinIdx, st.integers(0, 50)),
                  st.builds(Rel, st.integers(0, 40), st.integers(0, 5)),
                  st.builds(Oel, st.integers(0, 10), st.integers(0, 3),
                            st.lists(st.integers(0, 1), min_size=1, max_size=3).map(tuple)),
                  st.builds(FreeMark, st.integers(0, 9)),
                  st.just(OAtom))
elements = st.recursive(atoms, lambda kids: st.builds(SNode, st.just('s'),
                                                      st.lists(kids, min_size=1, max_size=3)),
                        max_leaves=8)


class TestRender(TestCase):
    def test_atoms(self):
        self.assertEqual(render(Rel(4, 2)), 'r[4]^[2]')
        self.assertEqual(render(Oel(1, 0, (1, 0))), 'o[1,(1,0)]^[0]')
        self.assertEqual(render(OAtom), 'o')
        self.assertEqual(render(FreeMark(3)), 'g[3]')
        self.assertEqual(render(FinIdx(5)), '5')

    def test_nodes(self):
        e = SNode('s', (Rel(0, 0), SNode('s', (OAtom, FinIdx(1)))))
        self.assertEqual(render(e), 's(r[0]^[0], s(o, 1))')
        self.assertEqual(depth(e), 2)
        self.assertEqual(depth(Rel(0, 0)), 0)

    @given(elements)
    def test_parse_inverts_render(self, e):
        self.assertEqual(parse(render(e)), e)

    def test_whitespace_is_ignored(self):
        self.assertEqual(parse(' r[ 3 ]^[1] '), Rel(3, 1))

    def test_long_names(self):
        self.assertEqual(element_render(Oel(1, 0, (1, 0))), 'o[1,(1,0)]^[0]')
        self.assertEqual(element_parse('r[2]^[1]'), Rel(2, 1))

    def test_parse_errors(self):
        for text in ('r[1]', 'q[1]', 'o[1,(2)]^[0]', 's(r[0]^[0]', 'r[0]^[0] x'):
            with self.assertRaises(ElementParseError):
                parse(text)


class TestElements(TestCase):
    def test_structural_equality(self):
        a = SNode('s', (Rel(1, 0), Rel(2, 0)))
        b = SNode('s', (Rel(1, 0), Rel(2, 0)))
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertNotEqual(a, SNode('s', (Rel(2, 0), Rel(1, 0))))

    def test_immutable(self):
        with self.assertRaises(AttributeError):
            SNode('s', ()).op = 't'

    def test_oatom_is_a_singleton(self):
        self.assertIs(parse('o'), OAtom)

    @given(st.lists(elements, min_size=2, max_size=6))
    def test_sort_key_is_total(self, es):
        ordered = sorted(es, key=sort_key)
        keys = [sort_key(e) for e in ordered]
        self.assertEqual(keys, sorted(keys))

    def test_sort_key_orders_rel_by_level(self):
        self.assertLess(sort_key(Rel(9, 0)), sort_key(Rel(0, 1)))


if __name__ == '__main__':
    unittest.main()
