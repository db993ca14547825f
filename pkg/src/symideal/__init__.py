"""Exact-arithmetic toolkit for zero-dimensional symmetric ideals.

Builds Specht and higher Specht polynomials, Tanisaki-type ideals,
isotypic decompositions of finite quotient rings, and equivariant
tangent-space dimensions of invariant punctual Hilbert schemes, all over
the rationals.
"""

__version__ = "0.1.0"

from .combinat import (IsotypicDecomposition, Partition, Permutation,
                       Tableau, d_min, dominates, irreducible_character,
                       kostka_decomposition, kostka_number, multinomial,
                       partitions_of, r_lambda, R_k, specht_dimension,
                       standard_tableaux, transpose, word)
from .combinat import index as tableau_index
from .equivariant import (TangentReport, decompose_quotient,
                          is_permutation_module_sum, is_symmetric,
                          tangent_dimension)
from .ideals import (DEGLEX, DEGREVLEX, EliminationOrder, Ideal,
                     associated_graded, colength, groebner,
                     hilbert_function, intersect, maximal_power,
                     normal_form, orbit_ideal)
from .poly import (Polynomial, apolar_pair, apply_permutation,
                   elementary_symmetric, parse_polynomial, power_sum,
                   reynolds)
from .specht import (SpechtDatum, coinvariant_isotypic_basis,
                     higher_specht, lemma_component, specht_ideal,
                     specht_polynomial, vandermonde)
from .tanisaki import (TanisakiSpec, inclusion_chain_check, tanisaki_ideal,
                       tilde_ideal, two_row_presentation)
