"""Isotypic decomposition of quotient rings and equivariant tangent spaces.

The tangent computation follows the presentation route: pick a minimal
graded stable generating space of the ideal, span the relations among
those generators, and intersect the relation constraints with the
equivariance constraints on module homomorphisms into the quotient.

All linear algebra is arranged to scale with the colength rather than
with ambient degree pieces: generator complements come from integrating
Macaulay inverse systems (whose graded dimensions are the Hilbert
function), and relations are only ever needed modulo the square of the
ideal, where coefficients live in the finite quotient.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .combinat import (IsotypicDecomposition, Partition, Permutation,
                       conjugacy_class_size, irreducible_character,
                       kostka_number, partitions_of)
from .ideals import Ideal
from .linalg import Echelon, KernelEchelon, solve_in_span
from .poly import (Monomial, Polynomial, apply_permutation, apolar_scalar,
                   integrate_duals, monomial_key)


def group_generators(n: int) -> list[Permutation]:
    """An adjacent transposition and the long cycle generate everything."""
    if n == 1:
        return [Permutation.identity(1)]
    return [Permutation.transposition(1, 2, n), Permutation.cycle(n)]


def is_symmetric(ideal: Ideal) -> bool:
    """True iff each generator stays inside under the two group generators."""
    for sigma in group_generators(ideal.ambient_n):
        for g in ideal.generators:
            if not ideal.contains(apply_permutation(sigma, g)):
                return False
    return True


def _permuted_monomial(sigma: Permutation, m: Monomial) -> Monomial:
    out = [0] * len(m)
    for i, e in enumerate(m):
        if e:
            out[sigma.images[i] - 1] = e
    return tuple(out)


def decompose_quotient(ideal: Ideal, graded: bool | None = None) -> IsotypicDecomposition:
    """Multiplicities of the irreducibles in the quotient ring.

    One representative permutation per conjugacy class is traced on the
    standard-monomial basis; multiplicities come from pairing the trace
    vector with the character table.
    """
    n = ideal.ambient_n
    if ideal.colength() == float("inf"):
        raise ValueError("quotient must be finite-dimensional")
    if not is_symmetric(ideal):
        raise ValueError("ideal is not stable under variable permutations")
    if graded is None:
        graded = ideal.is_homogeneous()

    basis = ideal.standard_monomials()
    classes = partitions_of(n)
    degrees = sorted({sum(m) for m in basis})
    traces: dict[Partition, dict[int, Fraction]] = {}
    for mu in classes:
        sigma = Permutation.from_cycle_type(mu)
        per_degree: dict[int, Fraction] = {d: Fraction(0) for d in degrees}
        for m in basis:
            image = _permuted_monomial(sigma, m)
            if image == m:
                per_degree[sum(m)] += 1
                continue
            reduced = ideal.normal_form(Polynomial.monomial(image))
            per_degree[sum(m)] += reduced.coefficient(m)
        traces[mu] = per_degree

    order = factorial(n)
    mult: dict[Partition, int] = {}
    graded_mult: dict[int, dict[Partition, int]] = {d: {} for d in degrees}
    for lam in classes:
        for d in degrees:
            total = Fraction(0)
            for mu in classes:
                total += conjugacy_class_size(mu) * irreducible_character(lam, mu) * traces[mu][d]
            value = total / order
            if value.denominator != 1 or value < 0:
                raise ArithmeticError(f"non-integral multiplicity {value} for {lam}")
            if value:
                graded_mult[d][lam] = int(value)
                mult[lam] = mult.get(lam, 0) + int(value)
    return IsotypicDecomposition.from_dict(mult, graded_mult if graded else None)


def is_permutation_module_sum(rho: IsotypicDecomposition) -> list[Partition] | None:
    """Express rho as a sum of permutation modules, if possible.

    The Kostka matrix is unitriangular for the dominance order, so
    peeling from the dominance-minimal side decides the question exactly.
    """
    if not rho.multiplicities:
        return []
    n = rho.multiplicities[0][0].n
    remaining = dict(rho.multiplicities)
    coefficients: dict[Partition, int] = {}
    for mu in reversed(partitions_of(n)):  # ascending: dominance-minimal first
        value = remaining.get(mu, 0)
        if value < 0:
            return None
        if value:
            coefficients[mu] = value
            for lam in partitions_of(n):
                k = kostka_number(lam, mu)
                if k:
                    remaining[lam] = remaining.get(lam, 0) - k * value
    if any(v != 0 for v in remaining.values()):
        return None
    out: list[Partition] = []
    for mu, count in sorted(coefficients.items(), reverse=True):
        out.extend([mu] * count)
    return out


# ---------------------------------------------------------------------------
# tangent space of the invariant Hilbert scheme at a homogeneous ideal


@dataclass
class TangentReport:
    """Result of the equivariant tangent-space computation."""

    ideal: Ideal
    n1_dims: dict[int, int]
    n2_count: int
    syzygy_bound: int
    tangent_dim: int
    equivariant_hom_dim: int
    wall_time_s: float = 0.0
    details: dict = field(default_factory=dict)

    def ideal_hash(self) -> str:
        text = json.dumps([self.ideal.ambient_n, sorted(str(g) for g in self.ideal.generators)])
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def to_json(self) -> str:
        return json.dumps({
            "ideal_hash": self.ideal_hash(),
            "n1_graded_dims": {str(d): v for d, v in sorted(self.n1_dims.items())},
            "n2_count": self.n2_count,
            "syzygy_degree_bound": self.syzygy_bound,
            "tangent_dim": self.tangent_dim,
            "wall_time_s": round(self.wall_time_s, 3),
        })


def _poly_row(f: Polynomial) -> dict:
    return dict(f.terms)


def _minimal_generator_space(ideal: Ideal) -> tuple[dict[int, list[Polynomial]], int]:
    """Graded minimal generating space of a homogeneous ideal.

    Works degree by degree with Macaulay inverse systems: the dual space
    of the degree-d quotient piece is carried along, the orthogonal
    complement W_d of m*I inside the full degree piece is obtained by
    integrating the previous dual space, and the new generators are the
    members of W_d lying in the ideal.  Returns ({degree: generators}, N)
    where the quotient vanishes from degree N on.
    """
    n = ideal.ambient_n
    hf = ideal.hilbert_function()
    N = len(hf)
    duals: list[Polynomial] = [Polynomial.one(n)]
    generators: dict[int, list[Polynomial]] = {}
    for d in range(1, N + 1):
        w_space = integrate_duals(duals, n, d)
        hf_d = hf[d] if d < len(hf) else 0
        # members of W_d inside the ideal are exactly the new generators
        tracker = KernelEchelon(key=monomial_key)
        new_gens: list[Polynomial] = []
        for idx, f in enumerate(w_space):
            relation = tracker.add(_poly_row(ideal.normal_form(f)), idx)
            if relation is not None:
                g = Polynomial.zero(n)
                for t, c in relation.items():
                    g = g + w_space[t] * c
                new_gens.append(g)
        if len(new_gens) != len(w_space) - hf_d:
            raise ArithmeticError(f"generator count mismatch in degree {d}")
        if d < N:
            # next dual space: the pairing-orthogonal complement of the new
            # generators inside W_d (the pairing is definite, so dims add)
            dual_tracker = KernelEchelon(key=lambda c: c)
            next_duals: list[Polynomial] = []
            for idx, f in enumerate(w_space):
                col = {}
                for gi, g in enumerate(new_gens):
                    value = apolar_scalar(g, f)
                    if value:
                        col[gi] = value
                relation = dual_tracker.add(col, idx)
                if relation is not None:
                    h = Polynomial.zero(n)
                    for t, c in relation.items():
                        h = h + w_space[t] * c
                    next_duals.append(h)
            if len(next_duals) != hf_d:
                raise ArithmeticError(f"dual dimension mismatch in degree {d}")
            duals = next_duals
        if new_gens:
            generators[d] = new_gens
    return generators, N


def _hom_basis_equivariant(ideal: Ideal, gens: list[Polynomial],
                           gen_degrees: list[int]) -> list[dict]:
    """Basis of the equivariant linear maps from the generator space into
    the quotient, as dicts {(basis_monomial, generator_index): coeff}."""
    n = ideal.ambient_n
    basis = ideal.standard_monomials()
    sigmas = group_generators(n)

    rho_action = []  # per sigma, per basis position: image in coordinates
    for sigma in sigmas:
        cols = []
        for m in basis:
            image = _permuted_monomial(sigma, m)
            reduced = ideal.normal_form(Polynomial.monomial(image))
            cols.append({b: c for b, c in reduced.terms.items()})
        rho_action.append(cols)

    by_degree: dict[int, list[int]] = {}
    for i, d in enumerate(gen_degrees):
        by_degree.setdefault(d, []).append(i)
    gen_action = []  # per sigma: {(j, i): c} meaning sigma(v_i) = sum_j c v_j
    for sigma in sigmas:
        matrix: dict[tuple[int, int], Fraction] = {}
        for d, indices in by_degree.items():
            rows = [_poly_row(gens[i]) for i in indices]
            for i in indices:
                image = apply_permutation(sigma, gens[i])
                coeffs = solve_in_span(rows, _poly_row(image), key=monomial_key)
                if coeffs is None:
                    raise ArithmeticError("generator space is not permutation-stable")
                for pos, c in enumerate(coeffs):
                    if c:
                        matrix[(indices[pos], i)] = c
        gen_action.append(matrix)

    position = {m: p for p, m in enumerate(basis)}
    tracker = KernelEchelon(key=lambda c: c)
    solutions: list[dict] = []
    for i in range(len(gens)):
        for b in basis:
            col: dict = {}
            for s in range(len(sigmas)):
                for row, c in rho_action[s][position[b]].items():
                    key = (s, row, i)
                    col[key] = col.get(key, 0) + c
                for (jj, i_prime), c in gen_action[s].items():
                    if jj == i:
                        key = (s, b, i_prime)
                        value = col.get(key, 0) - c
                        if value:
                            col[key] = value
                        else:
                            col.pop(key, None)
            relation = tracker.add(col, (b, i))
            if relation is not None:
                solutions.append(relation)
    return solutions


def tangent_dimension(ideal: Ideal, extra_syzygy_degrees: int = 0) -> TangentReport:
    """Dimension of the equivariant module homomorphisms into the quotient.

    This is the Zariski tangent space of the invariant punctual Hilbert
    scheme at the point cut out by the (homogeneous, symmetric,
    finite-colength) ideal.
    """
    start = time.monotonic()
    n = ideal.ambient_n
    if not ideal.is_homogeneous():
        raise ValueError("tangent computation needs a homogeneous ideal")
    colength = ideal.colength()
    if colength == float("inf") or colength == 0:
        raise ValueError("tangent computation needs 0 < colength < infinity")
    if not is_symmetric(ideal):
        raise ValueError("ideal is not stable under variable permutations")

    graded_gens, N = _minimal_generator_space(ideal)
    gens = [g for d, gs in sorted(graded_gens.items()) for g in gs]
    gen_degrees = [d for d, gs in sorted(graded_gens.items()) for _ in gs]
    max_gen_degree = max(gen_degrees)
    syzygy_bound = N + max_gen_degree  # relations from this degree on are vacuous

    hom_basis = _hom_basis_equivariant(ideal, gens, gen_degrees)
    k = len(hom_basis)
    basis = ideal.standard_monomials()

    hom_values: list[list[Polynomial]] = []
    for t in range(k):
        values = []
        for i in range(len(gens)):
            terms = {b: c for (b, i2), c in hom_basis[t].items() if i2 == i}
            values.append(Polynomial(n, terms))
        hom_values.append(values)

    gb = ideal.groebner_basis()
    square = Ideal(n, [a * b for idx, a in enumerate(gb) for b in gb[idx:]])
    by_degree: dict[int, list[Monomial]] = {}
    for m in basis:
        by_degree.setdefault(sum(m), []).append(m)

    n2_count = 0
    constraint_rank = Echelon(key=lambda c: c)
    top = syzygy_bound - 1 + extra_syzygy_degrees
    for d in range(min(gen_degrees) + 1, top + 1):
        tracker = KernelEchelon(key=monomial_key)
        relations: list[dict] = []
        for i, e_i in enumerate(gen_degrees):
            for b in by_degree.get(d - e_i, []):
                product = Polynomial.monomial(b) * gens[i]
                relation = tracker.add(_poly_row(square.normal_form(product)), (i, b))
                if relation is not None:
                    relations.append(relation)
        n2_count += len(relations)
        for relation in relations:
            rows: dict[Monomial, dict[int, Fraction]] = {}
            for t in range(k):
                total = Polynomial.zero(n)
                for (i, b), coeff in relation.items():
                    value = hom_values[t][i]
                    if not value.is_zero():
                        total = total + ideal.normal_form(Polynomial.monomial(b) * value) * coeff
                for m, c in total.terms.items():
                    rows.setdefault(m, {})[t] = c
            for row in rows.values():
                constraint_rank.add(row)

    tangent = k - constraint_rank.rank
    return TangentReport(
        ideal=ideal,
        n1_dims={d: len(gs) for d, gs in sorted(graded_gens.items())},
        n2_count=n2_count,
        syzygy_bound=syzygy_bound,
        tangent_dim=tangent,
        equivariant_hom_dim=k,
        wall_time_s=time.monotonic() - start,
    )
