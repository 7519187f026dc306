import unittest
from unittest import TestCase

from hypothesis import given, settings, strategies as st

from hicomm.algebras import cyclic_group, random_algebra, semilattice, symmetric_group
from hicomm.congruence import (Partition, PartialCongruence, all_congruences, cg, is_congruence,
                               join_in_con, meet)
from hicomm.elements import Rel
from hicomm.options import set_options
from hicomm.utils import PartitionParseError, ResourceCapError, restricted_growth_strings

from .corpus import A3


class TestPartition(TestCase):
    def test_canonical_form(self):
        p = Partition([5, 5, 2, 5, 0])
        self.assertEqual(p.labels.tolist(), [0, 0, 1, 0, 2])
        self.assertEqual(p.render(), '[[0,1,3],[2],[4]]')
        self.assertEqual(Partition.parse('[[2],[4],[3,1,0]]'), p)

    def test_parse_errors(self):
        for text in ('[[0],[0]]', '[[0],[2]]', '[0,1]', 'nonsense', '[[-1]]'):
            with self.assertRaises(PartitionParseError):
                Partition.parse(text)
        with self.assertRaises(PartitionParseError):
            Partition.parse('[[0,1]]', size=3)

    def test_order_and_meet(self):
        zero, one = Partition.zero(6), Partition.one(6)
        self.assertTrue(zero <= A3 <= one)
        self.assertTrue(zero.is_zero() and one.is_one())
        self.assertEqual(meet(A3, one), A3)
        self.assertEqual(meet(A3, zero), zero)
        self.assertEqual(A3 & Partition.parse('[[0,1,2],[3,4,5]]'),
                         Partition.parse('[[0],[1,2],[3,4],[5]]'))

    def test_pairs(self):
        p = Partition.parse('[[0,2],[1]]')
        self.assertTrue(p.related(0, 2))
        self.assertFalse(p.related(0, 1))
        self.assertEqual(sorted(map(tuple, p.pairs().tolist())), [(0, 0), (0, 2), (1, 1), (2, 0), (2, 2)])

    def test_restricted_growth_strings(self):
        self.assertEqual(len(list(restricted_growth_strings(4))), 15)


class TestCongruences(TestCase):
    def test_s3(self):
        S3 = symmetric_group(3)
        self.assertEqual(all_congruences(S3), [Partition.one(6), A3, Partition.zero(6)])
        self.assertEqual(cg(S3, [(0, 3)]), A3)
        self.assertEqual(cg(S3, [(0, 1)]), Partition.one(6))
        self.assertEqual(join_in_con(S3, Partition.zero(6), A3), A3)
        self.assertFalse(is_congruence(S3, Partition.parse('[[0,1],[2],[3],[4],[5]]')))

    def test_z4(self):
        Z4 = cyclic_group(4)
        cons = all_congruences(Z4)
        self.assertEqual(len(cons), 3)
        self.assertIn(Partition.parse('[[0,2],[1,3]]'), cons)
        self.assertEqual(len(all_congruences(semilattice(2))), 2)

    def test_congruence_cap(self):
        with set_options(congruence_cap=4):
            with self.assertRaises(ResourceCapError):
                all_congruences(symmetric_group(3))

    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 4), st.integers(0, 10 ** 6), st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                                                                max_size=3))
    def test_cg_is_the_least_congruence_above(self, size, seed, pairs):
        alg = random_algebra(size, seed)
        pairs = [(a % size, b % size) for a, b in pairs]
        p = cg(alg, pairs)
        self.assertTrue(is_congruence(alg, p))
        above = [c for c in all_congruences(alg) if all(c.related(a, b) for a, b in pairs)]
        expected = Partition.one(size)
        for c in above:
            expected = meet(expected, c)
        self.assertEqual(p, expected)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(2, 4), st.integers(0, 10 ** 6))
    def test_con_is_a_lattice(self, size, seed):
        alg = random_algebra(size, seed)
        cons = all_congruences(alg)
        for p in cons:
            for q in cons:
                self.assertIn(meet(p, q), cons)
                self.assertIn(join_in_con(alg, p, q), cons)


class TestPartialCongruence(TestCase):
    def test_union_find(self):
        pc = PartialCongruence.from_classes([[Rel(0, 0), Rel(2, 0)], [Rel(1, 0)]])
        self.assertTrue(pc.related(Rel(2, 0), Rel(0, 0)))
        self.assertFalse(pc.related(Rel(1, 0), Rel(0, 0)))
        self.assertFalse(pc.related(Rel(5, 0), Rel(0, 0)))
        self.assertTrue(pc.union(Rel(1, 0), Rel(2, 0)))
        self.assertFalse(pc.union(Rel(1, 0), Rel(0, 0)))
        self.assertEqual(pc.class_of(Rel(0, 0)), [Rel(0, 0), Rel(1, 0), Rel(2, 0)])
        self.assertEqual(pc.render(), '[[r[0]^[0],r[1]^[0],r[2]^[0]]]')

    def test_restrict(self):
        pc = PartialCongruence.full([Rel(i, 0) for i in range(4)])
        sub = pc.restrict([Rel(0, 0), Rel(3, 0)])
        self.assertEqual(sub.elements, [Rel(0, 0), Rel(3, 0)])
        self.assertEqual(len(sub.nontrivial_pairs()), 2)

    def test_element_cap(self):
        pc = PartialCongruence(element_cap=2)
        pc.add(Rel(0, 0))
        pc.add(Rel(1, 0))
        with self.assertRaises(ResourceCapError):
            pc.add(Rel(2, 0))

    def test_close_on_a_finite_view(self):
        S3 = symmetric_group(3)
        view = S3.as_computable()
        elements = S3.elements()
        pc = PartialCongruence.from_classes([[elements[0], elements[3]]])
        pc.close(view, elements)
        self.assertEqual([[e.v for e in c] for c in pc.classes() if len(c) > 1], [[0, 3, 4], [1, 2, 5]])


if __name__ == '__main__':
    unittest.main()
