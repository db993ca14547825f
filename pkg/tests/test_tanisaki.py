import pytest

from symideal.combinat import (Partition, d_min, multinomial, partitions_of,
                               transpose)
from symideal.equivariant import decompose_quotient
from symideal.ideals import Ideal, maximal_power
from symideal.poly import Polynomial, power_sum
from symideal.tanisaki import (MODES, TanisakiSpec, homogeneous_membership,
                               inclusion_chain_check, power_sum_specht_ideal,
                               tanisaki_ideal, tilde_ideal,
                               two_row_presentation,
                               _subset_elementary_generators)


class TestConstruction:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_extreme_shapes(self, n):
        assert tanisaki_ideal(Partition([n])) == maximal_power(n, 1)
        power_sums = Ideal(n, [power_sum(k, n) for k in range(1, n + 1)])
        assert tanisaki_ideal(Partition([1] * n)) == power_sums

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_one_dropped_part(self, n):
        lam = Partition([n - 1, 1])
        expected = Ideal(n, [power_sum(1, n)]) + maximal_power(n, 2)
        assert tanisaki_ideal(lam) == expected

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_colength_vs_multinomial(self, n):
        for lam in partitions_of(n):
            assert tanisaki_ideal(lam).colength() == multinomial(lam)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            tanisaki_ideal(Partition([2, 1]), "nonsense")
        with pytest.raises(ValueError):
            TanisakiSpec(Partition([2, 1]), "nonsense")

    def test_spec_builder(self):
        spec = TanisakiSpec(Partition([2, 1]), "apolar")
        assert spec.build() == tanisaki_ideal(Partition([2, 1]))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_mode_agreement_small(self, n):
        for lam in partitions_of(n):
            reference = tanisaki_ideal(lam, "subset_elementary")
            for mode in MODES[1:]:
                assert tanisaki_ideal(lam, mode) == reference

    def test_generator_thresholds_match_transpose(self):
        lam = Partition([3, 1, 1])
        gens = _subset_elementary_generators(lam)
        n, lam_t = lam.n, transpose(lam)
        for g in gens:
            assert g.is_homogeneous()
        # subsets strictly smaller than n - lam_1 + 1 contribute nothing
        sizes = {max(sum(m) for m in g.terms) or None for g in gens}
        assert min(
            len([i for i in range(n) if m[i]]) for g in gens for m in g.terms
        ) >= 1


class TestTwoRowPresentation:
    def test_rejects_other_lengths(self):
        with pytest.raises(ValueError):
            two_row_presentation(Partition([3]))
        with pytest.raises(ValueError):
            two_row_presentation(Partition([2, 1, 1]))

    def test_close_parts_need_no_monomial_orbit(self):
        lam = Partition([2, 2])
        ideal = two_row_presentation(lam)
        degrees = {g.degree() for g in ideal.generators}
        assert degrees == {1, 2}
        assert ideal == tanisaki_ideal(lam)

    @pytest.mark.parametrize("parts", [(3, 1), (4, 2), (4, 1), (3, 2)])
    def test_agrees_with_subset_construction(self, parts):
        lam = Partition(parts)
        assert two_row_presentation(lam) == tanisaki_ideal(lam)

    def test_colength_binomial(self):
        lam = Partition([4, 2])
        assert two_row_presentation(lam).colength() == 15


class TestTildeIdeal:
    def test_column_shape_contents(self):
        n = 4
        ideal = tilde_ideal(Partition([1] * n))
        gens = {str(g) for g in ideal.generators}
        for j in range(1, n):
            assert str(power_sum(j, n)) in gens
        assert str(Polynomial.variable(1, n) ** n) in gens

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_contained_in_partition_ideal(self, n):
        for mu in partitions_of(n):
            big = tanisaki_ideal(mu)
            assert all(big.contains(g) for g in tilde_ideal(mu).generators)

    def test_second_inclusion_strict_witness(self):
        # the documented eight-variable example, checked degreewise
        mu = Partition([3, 3, 1, 1])
        smaller = list(tilde_ideal(mu).generators)
        witness = None
        for g in sorted(_subset_elementary_generators(mu),
                        key=lambda f: (f.degree(), str(f))):
            if not homogeneous_membership(g, smaller):
                witness = g
                break
        assert witness is not None
        assert witness.degree() == 5
        assert homogeneous_membership(witness, smaller) is False


class TestInclusionChain:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_chain_holds(self, n):
        for mu in partitions_of(n):
            report = inclusion_chain_check(mu)
            assert report.ok, report.failures

    def test_first_strict_for_hook_of_three(self):
        report = inclusion_chain_check(Partition([2, 1]))
        assert report.first_strict
        assert "first" in report.witnesses

    def test_single_row_collapses(self):
        report = inclusion_chain_check(Partition([3]))
        assert report.ok
        assert not report.first_strict and not report.second_strict

    def test_power_sum_specht_ideal_contents(self):
        mu = Partition([2, 1])
        ideal = power_sum_specht_ideal(mu)
        # shapes failing to dominate (2,1): only the single column
        degrees = sorted({g.degree() for g in ideal.generators})
        assert degrees == [1, 2, 3]


class TestDegreewiseMembership:
    def test_agrees_with_groebner_route(self):
        n = 4
        gens = [power_sum(1, n), power_sum(2, n)]
        ideal = Ideal(n, gens)
        probes = [
            power_sum(1, n) * power_sum(2, n),
            Polynomial.variable(1, n) ** 2,
            power_sum(3, n),
            Polynomial.variable(1, n) * power_sum(1, n),
        ]
        for f in probes:
            assert homogeneous_membership(f, gens) == ideal.contains(f)

    def test_rejects_inhomogeneous(self):
        with pytest.raises(ValueError):
            homogeneous_membership(Polynomial.variable(1, 2) + 1, [Polynomial.variable(1, 2)])


class TestHomogeneousUniqueness:
    @pytest.mark.parametrize("n", [3, 4])
    def test_classification_entries_with_permutation_quotient(self, n):
        """Any catalogued homogeneous symmetric ideal whose quotient is a
        single permutation module must be the partition's ideal."""
        from symideal.classification import classification_cases
        from symideal.combinat import kostka_decomposition

        singles = {kostka_decomposition(lam): lam for lam in partitions_of(n)}
        found = 0
        for case in classification_cases(n):
            lam = singles.get(case.expected)
            if lam is None or case.colength != multinomial(lam):
                continue
            found += 1
            assert case.ideal == tanisaki_ideal(lam), case.label
        assert found >= 2  # at least the maximal-ideal and length-two rows


class TestModuleStructure:
    @pytest.mark.parametrize("n", [3, 4])
    def test_quotient_is_permutation_module(self, n):
        from symideal.combinat import kostka_decomposition

        for lam in partitions_of(n):
            ideal = tanisaki_ideal(lam)
            assert decompose_quotient(ideal) == kostka_decomposition(lam)

    @pytest.mark.parametrize("n", [3, 4])
    def test_own_shape_multiplicity_sits_at_minimal_degree(self, n):
        for lam in partitions_of(n):
            ideal = tanisaki_ideal(lam)
            decomposition = decompose_quotient(ideal)
            assert decomposition.multiplicity(lam) == 1
            layers = dict(decomposition.graded)
            located = [d for d, layer in layers.items() if dict(layer).get(lam)]
            assert located == [d_min(lam)]
