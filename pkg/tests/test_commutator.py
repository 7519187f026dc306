import unittest
from unittest import TestCase

from hypothesis import given, settings, strategies as st

from hicomm.algebras import cyclic_group, random_algebra, semilattice, symmetric_group
from hicomm.commutator import (bounded_centrality, centrality, commutator_lower_bound, hc8_diagnostic,
                               higher_commutator, higher_commutator_oracle, is_forced, pivot_axis,
                               supernilpotence_check)
from hicomm.congruence import Partition, PartialCongruence, all_congruences, meet
from hicomm.cube import Cube, lines
from hicomm.elements import FinIdx
from hicomm.matrices import generate_full

from .corpus import A3, corpus, derived_subgroup_partition, load, theta_tuples


class TestKnownCommutators(TestCase):
    def test_s3(self):
        S3 = symmetric_group(3)
        one, zero = Partition.one(6), Partition.zero(6)
        self.assertEqual(higher_commutator(S3, [one, one]), A3)
        self.assertEqual(higher_commutator_oracle(S3, [one, one]), A3)
        self.assertEqual(higher_commutator(S3, [one, A3]), A3)
        self.assertEqual(higher_commutator(S3, [A3, A3]), zero)
        self.assertEqual(higher_commutator(S3, [zero, one]), zero)

    def test_abelian_group(self):
        Z4 = cyclic_group(4)
        one = Partition.one(4)
        self.assertTrue(higher_commutator(Z4, [one, one]).is_zero())
        self.assertTrue(higher_commutator(Z4, [one, one, one]).is_zero())

    def test_semilattice(self):
        meet2 = semilattice(2)
        one = Partition.one(2)
        self.assertEqual(higher_commutator(meet2, [one, one]), one)
        self.assertEqual(higher_commutator_oracle(meet2, [one, one]), one)

    def test_sigma_permutes_the_arguments(self):
        S3 = symmetric_group(3)
        one = Partition.one(6)
        self.assertEqual(higher_commutator(S3, [A3, one], sigma=[1, 0]),
                         higher_commutator(S3, [one, A3]))
        self.assertEqual(pivot_axis(3, [2, 0, 1]), 1)
        with self.assertRaises(ValueError):
            pivot_axis(3, [0, 0, 1])

    def test_precomputed_matrices_are_reused(self):
        S3 = symmetric_group(3)
        one = Partition.one(6)
        mset = generate_full(S3, [one, one])
        self.assertEqual(higher_commutator(S3, [one, one], mset=mset), A3)


class TestOracleAgreement(TestCase):
    def check_corpus(self, arity):
        for alg in corpus(arity):
            cons = all_congruences(alg)
            for thetas in theta_tuples(alg, arity):
                mset = generate_full(alg, thetas)
                fast = higher_commutator(alg, thetas, mset=mset)
                slow = higher_commutator_oracle(alg, thetas, mset=mset, congruences=cons)
                self.assertEqual(fast, slow, '%s %s' % (alg.name, [t.render() for t in thetas]))
                bound = thetas[0]
                for t in thetas[1:]:
                    bound = meet(bound, t)
                self.assertTrue(fast <= bound)

    def test_binary(self):
        self.check_corpus(2)

    def test_ternary(self):
        self.check_corpus(3)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(2, 4), st.integers(0, 10 ** 6))
    def test_monotone(self, size, seed):
        alg = random_algebra(size, seed)
        cons = all_congruences(alg)
        one = Partition.one(size)
        top = higher_commutator(alg, [one, one])
        for p in cons:
            self.assertTrue(higher_commutator(alg, [p, one]) <= top)
            self.assertTrue(higher_commutator(alg, [one, p]) <= top)


class TestCentrality(TestCase):
    def test_s3(self):
        S3 = symmetric_group(3)
        one = Partition.one(6)
        report = centrality(S3, [one, one])
        self.assertFalse(report.holds)
        self.assertFalse(bool(report))
        h = report.counterexample
        self.assertEqual(report.pivot, lines(h, 1)[1])
        self.assertNotEqual(report.pivot.a, report.pivot.b)
        for line in lines(h, 1)[0]:
            self.assertEqual(line.a, line.b)
        self.assertTrue(centrality(S3, [one, one], delta=A3).holds)

    def test_supernilpotence(self):
        self.assertTrue(supernilpotence_check(cyclic_group(4), 1).holds)
        self.assertTrue(supernilpotence_check(cyclic_group(2), 2).holds)
        self.assertFalse(supernilpotence_check(symmetric_group(3), 1).holds)

    def test_hc8(self):
        one = Partition.one(2)
        out = hc8_diagnostic(cyclic_group(2), [one, one, one], 1)
        self.assertTrue(out['held'])
        self.assertTrue(out['nested'].is_zero())
        with self.assertRaises(ValueError):
            hc8_diagnostic(cyclic_group(2), [one, one], 1)


class TestComputableScans(TestCase):
    def test_bounded_centrality_on_a_finite_view(self):
        meet2 = semilattice(2).as_computable()
        pairs = [(FinIdx(a), FinIdx(b)) for a in range(2) for b in range(2)]
        report = bounded_centrality(meet2, [pairs, pairs], 1, lambda x, y: x == y)
        self.assertFalse(report.holds)
        self.assertTrue(is_forced(report.counterexample, lambda x, y: x == y))
        self.assertTrue(bounded_centrality(meet2, [pairs, pairs], 1, lambda x, y: True).holds)

    def test_lower_bound_is_sound(self):
        meet2 = semilattice(2).as_computable()
        full = PartialCongruence.full([FinIdx(0), FinIdx(1)])
        record = []
        lb = commutator_lower_bound(meet2, [full, full], depth=1, record=record)
        self.assertTrue(lb.related(FinIdx(0), FinIdx(1)))
        self.assertTrue(record)
        cube, pivot = record[0]
        self.assertEqual(lines(cube, 1)[1], pivot)

    def test_lower_bound_below_the_commutator(self):
        S3 = symmetric_group(3)
        view = S3.as_computable()
        full = PartialCongruence.full(S3.elements())
        lb = commutator_lower_bound(view, [full, full], depth=1)
        for a, b in lb.pairs():
            self.assertTrue(A3.related(a.v, b.v))

    def test_is_forced(self):
        h = Cube([FinIdx(0), FinIdx(1), FinIdx(0), FinIdx(1)])
        self.assertTrue(is_forced(h, lambda x, y: x == y))
        self.assertFalse(is_forced(h, lambda x, y: x == y, axis=0))


class TestCommutatorLaws(TestCase):
    def test_groups_match_their_derived_subgroups(self):
        for group in (load('s3'), symmetric_group(3), cyclic_group(4), load('z4')):
            one = Partition.one(group.size)
            self.assertEqual(higher_commutator(group, [one, one]), derived_subgroup_partition(group),
                             group.name)

    def test_abelian_iff_one_step_supernilpotent(self):
        for alg in corpus(2):
            one = Partition.one(alg.size)
            self.assertEqual(supernilpotence_check(alg, 1).holds,
                             higher_commutator(alg, [one, one]).is_zero(), alg.name)

    def test_ternary_below_binary(self):
        for alg in corpus(3):
            for thetas in theta_tuples(alg, 3):
                self.assertTrue(higher_commutator(alg, thetas) <= higher_commutator(alg, thetas[1:]),
                                '%s %s' % (alg.name, [t.render() for t in thetas]))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(2, 4), st.integers(0, 10 ** 6), st.data())
    def test_monotone_componentwise(self, size, seed, data):
        alg = random_algebra(size, seed)
        cons = all_congruences(alg)
        big = [data.draw(st.sampled_from(cons)) for _ in range(2)]
        small = [data.draw(st.sampled_from([c for c in cons if c <= b])) for b in big]
        self.assertTrue(higher_commutator(alg, small) <= higher_commutator(alg, big))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(2, 4), st.integers(0, 10 ** 6), st.data())
    def test_coordinate_symmetry_binary(self, size, seed, data):
        alg = random_algebra(size, seed)
        cons = all_congruences(alg)
        a, b = (data.draw(st.sampled_from(cons)) for _ in range(2))
        self.assertEqual(higher_commutator(alg, [b, a], sigma=[1, 0]), higher_commutator(alg, [a, b]))

    @settings(max_examples=10, deadline=None)
    @given(st.integers(0, 10 ** 6), st.permutations(range(3)), st.data())
    def test_coordinate_symmetry_ternary(self, seed, perm, data):
        alg = random_algebra(2, seed)
        cons = all_congruences(alg)
        thetas = [data.draw(st.sampled_from(cons)) for _ in range(3)]
        moved = [thetas[p] for p in perm]
        pivot = perm.index(2)
        sigma = [q for q in range(3) if q != pivot] + [pivot]
        self.assertEqual(higher_commutator(alg, moved, sigma=sigma), higher_commutator(alg, thetas))


if __name__ == '__main__':
    unittest.main()
