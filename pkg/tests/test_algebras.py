import os
import shutil
import tempfile
import unittest
from unittest import TestCase

import numpy as np
from hypothesis import given, strategies as st

from hicomm.algebras import (FiniteAlgebra, an_algebra, cyclic_group, ladder_algebra, pointed_algebra,
                             random_algebra, semilattice, symmetric_group, trivial_algebra)
from hicomm.convert import algebra_document, algebra_from_document, load_finite_algebra, save_finite_algebra
from hicomm.elements import FinIdx, Oel, OAtom, Rel, SNode
from hicomm.utils import AlgebraFormatError, AlgebraValidationError, ArityError, UnknownSymbolError

from .corpus import data_file, load

rels = st.builds(Rel, st.integers(0, 40), st.integers(0, 3))


class TestFiniteAlgebra(TestCase):
    def test_semilattice(self):
        alg = load('meet2')
        self.assertEqual(alg.size, 2)
        self.assertEqual(alg.symbols, ['meet'])
        self.assertEqual(alg.apply('meet', (1, 1)), FinIdx(1))
        self.assertEqual(alg.apply('meet', (FinIdx(0), FinIdx(1))), FinIdx(0))

    def test_table_files_match_builders(self):
        for name, alg in (('s3', symmetric_group(3)), ('z4', cyclic_group(4)),
                          ('z2', cyclic_group(2)), ('meet2', semilattice(2))):
            loaded = load(name)
            self.assertEqual(loaded.size, alg.size)
            np.testing.assert_array_equal(loaded.operations[0].table, alg.operations[0].table)

    def test_validation(self):
        with self.assertRaises(AlgebraValidationError):
            FiniteAlgebra('x', 0, [])
        with self.assertRaises(AlgebraValidationError):
            FiniteAlgebra('x', 2, [('t', 2, [0, 1, 2, 0])])
        with self.assertRaises(AlgebraValidationError):
            FiniteAlgebra('x', 2, [('t', 1, [0, 1]), ('t', 1, [1, 0])])
        with self.assertRaises(AlgebraValidationError):
            load_finite_algebra(data_file('bad_table.json'))

    def test_apply_errors(self):
        alg = cyclic_group(2)
        with self.assertRaises(UnknownSymbolError):
            alg.apply('mul', (0, 1))
        with self.assertRaises(ArityError):
            alg.apply('add', (0,))
        with self.assertRaises(ValueError):
            alg.apply('add', (0, 2))

    def test_trivial_and_nullary(self):
        self.assertEqual(trivial_algebra().apply('t', (0, 0)), FinIdx(0))
        alg = FiniteAlgebra('pointed2', 2, [('c', 0, [1]), ('f', 1, [1, 0])])
        self.assertEqual(alg.apply('c', ()), FinIdx(1))

    def test_random_algebra_is_reproducible(self):
        a, b = random_algebra(3, 7), random_algebra(3, 7)
        np.testing.assert_array_equal(a.operations[0].table, b.operations[0].table)
        self.assertEqual(random_algebra(2, 1, arity=3).operations[0].arity, 3)


class TestDocuments(TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_save_and_load(self):
        alg = symmetric_group(3)
        path = os.path.join(self.tmp, 's3.json')
        save_finite_algebra(alg, path)
        again = load_finite_algebra(path)
        self.assertEqual(algebra_document(again), algebra_document(alg))

    def test_format_errors(self):
        with self.assertRaises(AlgebraFormatError):
            algebra_from_document([1, 2])
        with self.assertRaises(AlgebraFormatError):
            algebra_from_document({'size': 2})
        with self.assertRaises(AlgebraFormatError):
            algebra_from_document({'size': 2, 'operations': [{'symbol': 't', 'arity': 2}]})
        path = os.path.join(self.tmp, 'broken.json')
        with open(path, 'w') as f:
            f.write('{"size": 2,')
        with self.assertRaises(AlgebraFormatError):
            load_finite_algebra(path)


class TestLadderAlgebra(TestCase):
    def test_patterns(self):
        A = ladder_algebra(2)
        r = lambda i, j=0: Rel(i, j)
        self.assertEqual(A.apply('t', (r(2), r(0))), Rel(0, 1))
        self.assertEqual(A.apply('t', (r(2), r(2))), Rel(1, 1))
        self.assertEqual(A.apply('t', (r(6, 1), r(4, 1))), Rel(1, 2))
        self.assertEqual(A.apply('t', (r(0), r(2))), Oel(0, 0, (0,)))
        self.assertEqual(A.apply('t', (r(1), r(2))), SNode('s', (r(1), r(2))))
        self.assertEqual(A.apply('t', (r(0), r(4))), SNode('s', (r(0), r(4))))
        self.assertEqual(A.apply('t', (r(0), r(0, 1))), SNode('s', (r(0), r(0, 1))))

    def test_ternary(self):
        A = ladder_algebra(3)
        self.assertEqual(A.apply('t', (Rel(6, 0), Rel(6, 0), Rel(4, 0))), Rel(1, 1))
        self.assertEqual(A.apply('t', (Rel(2, 0), Rel(0, 0), Rel(2, 0))), Oel(0, 0, (1, 0)))
        with self.assertRaises(ArityError):
            A.apply('t', (Rel(0, 0), Rel(0, 0)))
        with self.assertRaises(ValueError):
            ladder_algebra(1)
        self.assertEqual(an_algebra(3).apply('t', (Rel(2, 0),) * 3), Rel(1, 1))

    @given(st.lists(rels, min_size=2, max_size=2), st.lists(rels, min_size=2, max_size=2))
    def test_free_part_is_injective(self, xs, ys):
        A = ladder_algebra(2)
        u, v = A.apply('t', xs), A.apply('t', ys)
        if A.is_free(u) and u == v:
            self.assertEqual(xs, ys)

    def test_free_values(self):
        A = ladder_algebra(2)
        self.assertTrue(A.is_free(A.apply('t', (Oel(0, 0, (1,)), Rel(0, 0)))))
        self.assertFalse(A.is_free(Rel(0, 0)))


class TestPointedAlgebra(TestCase):
    def test_absorbing_point(self):
        P = pointed_algebra()
        g = SNode('s', (OAtom, OAtom))
        self.assertIs(P.apply('t', (OAtom, g)), OAtom)
        self.assertEqual(P.apply('t', (g, OAtom)), SNode('s', (g, OAtom)))


if __name__ == '__main__':
    unittest.main()
