import random
from fractions import Fraction
from math import comb, factorial, inf

import pytest

from symideal.combinat import Partition, Permutation
from symideal.ideals import (DEGLEX, DEGREVLEX, EliminationOrder, Ideal,
                             _normal_form, _spoly, maximal_power, orbit_ideal,
                             orbit_points, point_ideal)
from symideal.poly import Polynomial, apply_permutation, power_sum


def x(i, n):
    return Polynomial.variable(i, n)


def random_poly(rng, n, max_degree=2, terms=3):
    out = Polynomial.zero(n)
    for _ in range(terms):
        mono = [0] * n
        for _ in range(rng.randint(0, max_degree)):
            mono[rng.randrange(n)] += 1
        out = out + Polynomial.monomial(tuple(mono), rng.randint(-4, 4))
    return out


class TestGroebner:
    def test_single_linear_generator(self):
        ideal = Ideal(2, [x(1, 2) - x(2, 2)])
        assert ideal.groebner_basis() == (x(1, 2) - x(2, 2),)

    def test_power_sums_colength(self):
        n = 3
        ideal = Ideal(n, [power_sum(k, n) for k in range(1, n + 1)])
        assert ideal.colength() == 6
        assert ideal.hilbert_function() == (1, 2, 2, 1)

    def test_reduced_basis_is_canonical(self):
        n = 3
        gens = [power_sum(2, n), power_sum(1, n) * x(2, n), x(1, n) ** 2 - x(3, n) ** 2]
        a = Ideal(n, gens).groebner_basis()
        b = Ideal(n, list(reversed(gens))).groebner_basis()
        assert a == b

    def test_buchberger_criterion_on_output(self):
        rng = random.Random(11)
        for _ in range(8):
            n = rng.choice([2, 3])
            gens = [random_poly(rng, n) for _ in range(3)]
            ideal = Ideal(n, [g for g in gens if not g.is_zero()])
            basis = ideal._engine_basis(DEGREVLEX)
            for i in range(len(basis)):
                for j in range(i + 1, len(basis)):
                    s = _spoly(basis[i], basis[j], DEGREVLEX)
                    if s:
                        rem, _ = _normal_form(s, basis, DEGREVLEX)
                        assert not rem

    def test_membership_agrees_across_orders(self):
        rng = random.Random(5)
        for _ in range(10):
            n = rng.choice([2, 3, 4])
            ideal_gens = [random_poly(rng, n) for _ in range(2)]
            probe = random_poly(rng, n)
            a = Ideal(n, ideal_gens)
            b = Ideal(n, ideal_gens)
            assert a.normal_form(probe, DEGREVLEX).is_zero() == b.normal_form(probe, DEGLEX).is_zero()


class TestNormalForm:
    def test_generators_reduce_to_zero(self):
        n = 3
        ideal = Ideal(n, [power_sum(k, n) for k in range(1, n + 1)])
        for g in ideal.generators:
            assert ideal.normal_form(g).is_zero()

    def test_idempotent(self):
        n = 3
        ideal = Ideal(n, [power_sum(1, n), power_sum(2, n)])
        f = x(1, n) ** 3 + 2 * x(2, n)
        once = ideal.normal_form(f)
        assert ideal.normal_form(once) == once

    def test_linear(self):
        n = 2
        ideal = Ideal(n, [x(1, n) ** 2 - x(2, n)])
        f, g = x(1, n) ** 2, x(2, n) ** 2
        lhs = ideal.normal_form(f + 3 * g)
        assert lhs == ideal.normal_form(f) + 3 * ideal.normal_form(g)


class TestColength:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_square_of_maximal(self, n):
        assert maximal_power(n, 2).colength() == n + 1

    @pytest.mark.parametrize("n,d", [(2, 3), (3, 2), (3, 3), (4, 2)])
    def test_stars_and_bars(self, n, d):
        assert maximal_power(n, d).colength() == comb(n + d - 1, n)

    def test_positive_dimensional_reports_infinite(self):
        assert Ideal(2, [x(1, 2)]).colength() is inf
        assert Ideal(2, []).colength() is inf

    def test_whole_ring(self):
        assert Ideal(2, [Polynomial.one(2)]).colength() == 0

    def test_order_independence(self):
        n = 3
        for gens in ([power_sum(1, n), power_sum(2, n), power_sum(3, n)],
                     [x(1, n) ** 2, x(2, n) ** 2, x(3, n) ** 2, x(1, n) * x(2, n) * x(3, n)]):
            ideal_a, ideal_b = Ideal(n, gens), Ideal(n, gens)
            assert ideal_a.colength(DEGREVLEX) == ideal_b.colength(DEGLEX)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_power_sum_fiber_has_factorial_colength(self, n):
        point = tuple(range(1, n + 1))
        gens = [power_sum(j, n) - Fraction(power_sum(j, n).evaluate(point))
                for j in range(1, n + 1)]
        assert Ideal(n, gens).colength() == factorial(n)


class TestHilbertFunction:
    def test_maximal_square(self):
        assert maximal_power(3, 2).hilbert_function() == (1, 3)

    def test_point_module_of_partition_with_one_part_dropped(self):
        n = 4
        ideal = Ideal(n, [power_sum(1, n)]) + maximal_power(n, 2)
        assert ideal.hilbert_function() == (1, n - 1)

    def test_rejects_inhomogeneous(self):
        with pytest.raises(ValueError):
            Ideal(2, [x(1, 2) - Polynomial.one(2)]).hilbert_function()

    def test_classification_row_shapes(self):
        # (p1, squares, pair products) + m^3 has shape (1, 3, 1) at n=4
        from symideal.classification import pair_products, square_differences

        n = 4
        gens = [power_sum(1, n)] + square_differences(n) + pair_products(n)
        ideal = Ideal(n, gens) + maximal_power(n, 3)
        assert ideal.hilbert_function() == (1, 3, 1)
        gens = [power_sum(1, n), power_sum(2, n)] + pair_products(n)
        ideal = Ideal(n, gens) + maximal_power(n, 3)
        assert ideal.hilbert_function() == (1, 3, 3)


class TestIntersect:
    def test_self_intersection(self):
        n = 2
        ideal = Ideal(n, [x(1, n) ** 2, x(2, n)])
        assert ideal.intersect(ideal) == ideal

    def test_three_points(self):
        pts = [point_ideal((0, 0)), point_ideal((1, 2)), point_ideal((3, 5))]
        total = pts[0].intersect(pts[1]).intersect(pts[2])
        assert total.colength() == 3

    def test_colength_additivity_on_random_points(self):
        rng = random.Random(23)
        for _ in range(6):
            n = rng.choice([2, 3])
            pts = set()
            while len(pts) < 4:
                pts.add(tuple(rng.randint(-4, 4) for _ in range(n)))
            pts = sorted(pts)
            left = point_ideal(pts[0]).intersect(point_ideal(pts[1]))
            right = point_ideal(pts[2]).intersect(point_ideal(pts[3]))
            assert left.colength() == 2 and right.colength() == 2
            assert left.intersect(right).colength() == 4


class TestOrbitIdeal:
    def test_diagonal_point(self):
        n = 3
        ideal = orbit_ideal((2, 2, 2))
        expected = Ideal(n, [x(i, n) - 2 for i in range(1, n + 1)])
        assert ideal == expected

    def test_two_value_orbit_size(self):
        ideal = orbit_ideal((5, 1, 1))
        assert ideal.colength() == 3

    @pytest.mark.parametrize("point", [(1, 1, -2), (3, -1, -1, -1), (1, 2, -3, 0)])
    def test_colength_is_orbit_size(self, point):
        assert orbit_ideal(point).colength() == len(orbit_points(point))

    def test_power_sum_translates_contained(self):
        rng = random.Random(3)
        for n in (2, 3, 4):
            point = tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n))
            ideal = orbit_ideal(point)
            for j in range(1, n + 1):
                shifted = power_sum(j, n) - Fraction(power_sum(j, n).evaluate(point))
                assert ideal.contains(shifted)

    def test_output_is_symmetric(self):
        ideal = orbit_ideal((4, 1, 1))
        n = 3
        for sigma in (Permutation.transposition(1, 2, n), Permutation.cycle(n)):
            for g in ideal.groebner_basis():
                assert ideal.contains(apply_permutation(sigma, g))


class TestAssociatedGraded:
    def test_homogeneous_fixed_point(self):
        ideal = maximal_power(3, 2)
        assert ideal.associated_graded() == ideal

    def test_rejects_infinite_colength(self):
        with pytest.raises(ValueError):
            Ideal(2, [x(1, 2)]).associated_graded()

    def test_colength_preserved_and_idempotent(self):
        rng = random.Random(17)
        for _ in range(5):
            n = rng.choice([2, 3])
            vals = rng.sample(range(-5, 6), 2)
            point = tuple([vals[0]] + [vals[1]] * (n - 1))
            ideal = orbit_ideal(point)
            graded = ideal.associated_graded()
            assert graded.colength() == ideal.colength()
            assert graded.associated_graded() == graded

    def test_two_value_orbit_gives_partition_ideal(self):
        from symideal.tanisaki import tanisaki_ideal

        ideal = orbit_ideal((2, -1, -1))  # coordinate sum zero
        assert ideal.associated_graded() == tanisaki_ideal(Partition([2, 1]))


class TestMaximalPower:
    def test_generators_listed(self):
        ideal = maximal_power(2, 1)
        assert set(ideal.generators) == {x(1, 2), x(2, 2)}

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_cube_inside_squarefree_relations(self, n):
        from symideal.classification import pair_products, square_differences

        gens = [power_sum(1, n)] + square_differences(n) + pair_products(n)
        ideal = Ideal(n, gens)
        for g in maximal_power(n, 3).generators:
            assert ideal.contains(g)


class TestLemmaMemberships:
    @pytest.mark.parametrize("n", [4, 5])
    def test_cube_difference_membership(self, n):
        from symideal.classification import (lemma_membership_ideal_a,
                                             lemma_membership_ideal_b)

        cube = x(1, n) ** 3 - x(2, n) ** 3
        p2_diff = power_sum(2, n) * (x(1, n) - x(2, n))
        assert lemma_membership_ideal_a(n).contains(cube)
        ideal_b = lemma_membership_ideal_b(n)
        assert ideal_b.contains(p2_diff)
        assert ideal_b.contains(cube)


class TestSerialization:
    def test_round_trip(self):
        n = 3
        ideal = Ideal(n, [power_sum(1, n), x(1, n) * x(2, n)])
        ideal.groebner_basis()
        clone = Ideal.from_json(ideal.to_json())
        assert clone == ideal

    def test_elimination_order_keys(self):
        order = EliminationOrder(1)
        # any power of the tail variable beats anything without it
        assert order.key((0, 0, 1)) > order.key((5, 5, 0))
