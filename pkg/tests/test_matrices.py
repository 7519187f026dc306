import unittest
from unittest import TestCase

import numpy as np

from hypothesis import given, settings, strategies as st

from hicomm._closure import Closure, CodeStore, TableEvaluator
from hicomm.algebras import (cyclic_group, ladder_algebra, pointed_algebra, random_algebra, semilattice,
                             symmetric_group)
from hicomm.congruence import Partition
from hicomm.cube import Cube, gcube
from hicomm.elements import FinIdx, FreeMark, Oel, OAtom, Rel, SNode
from hicomm.matrices import (TableMatrixSet, generate_bounded, generate_full, generator_rows,
                             line_closed_count, matrix_generators, relabel_free)
from hicomm.options import set_options
from hicomm.utils import NotACongruenceError, ResourceCapError, SizeMismatchError


def bits(*vs):
    return Cube([FinIdx(v) for v in vs])


class TestFullGeneration(TestCase):
    def test_semilattice_squares(self):
        one = Partition.one(2)
        mset = generate_full(semilattice(2), [one, one])
        self.assertEqual(len(matrix_generators(semilattice(2), [one, one])), 6)
        self.assertEqual(len(mset), 10)
        self.assertTrue(mset.contains(bits(0, 0, 0, 1)))
        self.assertFalse(mset.contains(bits(0, 1, 1, 0)))
        self.assertEqual(line_closed_count(2, [one, one]), 16)

    def test_abelian_groups_give_affine_cubes(self):
        Z2, Z4 = cyclic_group(2), cyclic_group(4)
        self.assertEqual(len(generate_full(Z2, [Partition.one(2)] * 2)), 8)
        self.assertEqual(len(generate_full(Z4, [Partition.one(4)] * 2)), 64)
        self.assertEqual(len(generate_full(Z2, [Partition.one(2)] * 3)), 16)

    def test_zero_congruence_gives_constant_cubes(self):
        S3 = symmetric_group(3)
        mset = generate_full(S3, [Partition.zero(6), Partition.one(6)])
        for h in mset:
            self.assertEqual(h.verts[0], h.verts[1])
            self.assertEqual(h.verts[2], h.verts[3])

    def test_provenance_replays(self):
        S3 = symmetric_group(3)
        A3 = Partition.parse('[[0,3,4],[1,2,5]]')
        mset = generate_full(S3, [A3, Partition.one(6)])
        for k in range(len(mset)):
            self.assertEqual(mset.replay(k), mset.cube(k))
        self.assertEqual(mset.provenance(0), None)
        lines = mset.dump()
        self.assertEqual(len(lines), len(mset))
        self.assertEqual(list(mset.to_frame().columns), ['cube', 'level', 'op', 'args'])

    def test_errors(self):
        S3 = symmetric_group(3)
        with self.assertRaises(ResourceCapError):
            generate_full(S3, [Partition.one(6)] * 3)
        with self.assertRaises(NotACongruenceError):
            generate_full(S3, [Partition.parse('[[0,1],[2],[3],[4],[5]]')] * 2)
        with self.assertRaises(SizeMismatchError):
            generate_full(S3, [Partition.one(2)] * 2)
        with set_options(tuple_cap=10):
            with self.assertRaises(ResourceCapError):
                generate_full(cyclic_group(4), [Partition.one(4)] * 2)

    def test_workers_do_not_change_the_result(self):
        Z4 = cyclic_group(4)
        one = Partition.one(4)
        a = generate_full(Z4, [one, one], workers=1, chunk=7)
        b = generate_full(Z4, [one, one], workers=3, chunk=7)
        np.testing.assert_array_equal(a.rows, b.rows)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(2, 3), st.integers(0, 10 ** 6), st.randoms(use_true_random=False))
    def test_generator_order_does_not_matter(self, size, seed, rnd):
        alg = random_algebra(size, seed)
        one = Partition.one(size)
        rows = generator_rows([one, one])
        order = list(range(rows.shape[0]))
        rnd.shuffle(order)
        closure = Closure(TableEvaluator(alg), CodeStore(size, 4), 4, cube_cap=size ** 4)
        closure.seed(rows[order]).run()
        shuffled = TableMatrixSet(alg, 2, closure)
        self.assertEqual(shuffled.cube_set(), generate_full(alg, [one, one]).cube_set())


class TestBoundedGeneration(TestCase):
    def test_ladder_square(self):
        A = ladder_algebra(2)
        pairs = [(Rel(0, 0), Rel(2, 0))]
        mset = generate_bounded(A, [pairs, pairs], 1)
        a, b = Rel(0, 0), Rel(2, 0)
        h0, h1 = gcube(2, 0, a, b), gcube(2, 1, a, b)
        h = Cube([A.apply('t', (h0.verts[v], h1.verts[v])) for v in range(4)])
        self.assertEqual(h.verts, (Oel(0, 0, (0,)), Rel(0, 1), Oel(0, 0, (0,)), Rel(1, 1)))
        self.assertTrue(mset.contains(h))
        self.assertEqual(mset.depth, 1)
        self.assertEqual(mset.level(len(mset) - 1), 1)

    def test_depth_zero_is_the_generators(self):
        A = ladder_algebra(2)
        pairs = [(Rel(0, 0), Rel(2, 0)), (Rel(0, 0), Rel(0, 0))]
        mset = generate_bounded(A, [pairs, pairs], 0)
        self.assertEqual(len(mset), 3)
        self.assertTrue(all(mset.provenance(k) is None for k in range(len(mset))))

    def test_collapse_relabels_free_values(self):
        P = pointed_algebra()
        g = SNode('s', (OAtom, OAtom))
        pairs = [(OAtom, g), (g, g)]
        plain = generate_bounded(P, [pairs, pairs], 2)
        collapsed = generate_bounded(P, [pairs, pairs], 2, collapse=True)
        self.assertLessEqual(len(collapsed), len(plain))
        relabelled = {relabel_free(P, h) for h in plain}
        self.assertEqual(relabelled, collapsed.cube_set())
        for k in range(len(collapsed)):
            self.assertEqual(collapsed.replay(k), collapsed.cube(k))

    def test_relabel_free(self):
        P = pointed_algebra()
        g, h = SNode('s', (OAtom, OAtom)), SNode('s', (OAtom, SNode('s', (OAtom, OAtom))))
        self.assertEqual(relabel_free(P, Cube([h, OAtom, g, h])).verts,
                         (FreeMark(0), OAtom, FreeMark(1), FreeMark(0)))

    def test_cube_cap(self):
        A = ladder_algebra(2)
        pairs = [(Rel(i, 0), Rel(k, 0)) for i in range(4) for k in range(4)]
        with self.assertRaises(ResourceCapError) as cm:
            generate_bounded(A, [pairs, pairs], 2, cube_cap=40)
        self.assertEqual(cm.exception.cap, 'cube_cap')

    def test_keep_restricts_stored_cubes(self):
        A = ladder_algebra(2)
        pairs = [(Rel(i, 0), Rel(k, 0)) for i in range(3) for k in range(3)]
        full = generate_bounded(A, [pairs, pairs], 1)
        kept = generate_bounded(A, [pairs, pairs], 1,
                                keep=lambda codebook, rows: rows[:, 0] == rows[:, 1])
        self.assertLess(len(kept), len(full))
        for h in kept:
            self.assertEqual(h.verts[0], h.verts[1])
            self.assertTrue(full.contains(h))


if __name__ == '__main__':
    unittest.main()
