"""Tanisaki ideals by three independent constructions, the monomial-orbit
companion ideal, and the inclusion-chain verification.

The three constructions of the ideal attached to a partition:

* ``subset_elementary``: partial elementary symmetric polynomials
  e_r(x_S) for every subset S with |S| >= r >= r_lambda(|S|);
* ``reduced``: the full elementary symmetric polynomials of degrees up
  to the number of parts, plus the threshold generator e_{r_lambda(|S|)}
  per admissible subset;
* ``apolar``: degreewise annihilator of the span of the Specht
  polynomials of the shape, capped by a power of the maximal ideal.

All three generate the same ideal; tests compare their reduced Groebner
bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .combinat import Partition, R_k, d_min, r_lambda
from .ideals import Ideal, maximal_power
from .linalg import KernelEchelon
from .poly import (Polynomial, apolar_pair, apolar_scalar,
                   elementary_symmetric, integrate_duals, monomial_key,
                   power_sum)
from .specht import distinct_specht_polynomials

MODES = ("subset_elementary", "reduced", "apolar")


@dataclass(frozen=True)
class TanisakiSpec:
    """A partition together with a chosen generator construction."""

    lam: Partition
    generator_mode: str = "subset_elementary"

    def __post_init__(self) -> None:
        if self.generator_mode not in MODES:
            raise ValueError(f"unknown mode {self.generator_mode!r}; choose from {MODES}")

    def build(self) -> "Ideal":
        return tanisaki_ideal(self.lam, self.generator_mode)


def _subset_elementary_generators(lam: Partition) -> list[Polynomial]:
    n = lam.n
    gens = []
    for size in range(n - lam.parts[0] + 1, n + 1):
        threshold = r_lambda(lam, size)
        for subset in combinations(range(1, n + 1), size):
            for r in range(max(threshold, 1), size + 1):
                gens.append(elementary_symmetric(r, subset, n))
    return gens


def _reduced_generators(lam: Partition) -> list[Polynomial]:
    n = lam.n
    full = list(range(1, n + 1))
    gens = [elementary_symmetric(r, full, n) for r in range(1, lam.m + 1)]
    for size in range(n - lam.parts[0] + 1, n):
        threshold = r_lambda(lam, size)
        if threshold > size:
            continue
        for subset in combinations(range(1, n + 1), size):
            gens.append(elementary_symmetric(max(threshold, 1), subset, n))
    return gens


def _degree_monomials(n: int, d: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def walk(i: int, remaining: int, prefix: tuple) -> None:
        if i == n - 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            walk(i + 1, remaining - e, prefix + (e,))

    walk(0, d, ())
    return out


def _dual_layer(spechts: list[Polynomial], n: int, d: int) -> list[Polynomial]:
    """Basis of the span of the degree-d derivatives of the Specht span.

    This is the pairing-orthogonal complement of the annihilator in the
    full degree piece; its dimension is the quotient's Hilbert function,
    so all subsequent linear algebra stays small.
    """
    from .linalg import Echelon

    ech = Echelon(key=monomial_key)
    basis: list[Polynomial] = []
    if not spechts:
        return basis
    top = spechts[0].degree()
    for s in spechts:
        for mono in _degree_monomials(n, top - d):
            image = apolar_pair(Polynomial.monomial(mono), s)
            if not image.is_zero() and ech.add(dict(image.terms)) is not None:
                basis.append(image)
    return basis


def _apolar_generators(lam: Partition) -> list[Polynomial]:
    """Minimal generators of the annihilator of the Specht span, degree by
    degree: integrate the previous dual layer to get the orthocomplement of
    the carried part, then keep the members orthogonal to the current layer."""
    n = lam.n
    top = d_min(lam)
    spechts = distinct_specht_polynomials(lam)
    gens: list[Polynomial] = []
    previous_duals = _dual_layer(spechts, n, 0)
    for d in range(1, top + 1):
        w_space = integrate_duals(previous_duals, n, d)
        current_duals = _dual_layer(spechts, n, d)
        tracker = KernelEchelon(key=lambda c: c)
        for idx, f in enumerate(w_space):
            col = {}
            for ui, u in enumerate(current_duals):
                value = apolar_scalar(f, u)
                if value:
                    col[ui] = value
            relation = tracker.add(col, idx)
            if relation is not None:
                g = Polynomial.zero(n)
                for t, c in relation.items():
                    g = g + w_space[t] * c
                gens.append(g)
        previous_duals = current_duals
    return gens


def tanisaki_ideal(lam: Partition, mode: str = "subset_elementary") -> Ideal:
    """The ideal attached to the partition, by the requested construction."""
    n = lam.n
    if mode == "subset_elementary":
        return Ideal(n, _subset_elementary_generators(lam))
    if mode == "reduced":
        return Ideal(n, _reduced_generators(lam))
    if mode == "apolar":
        return Ideal(n, _apolar_generators(lam)) + maximal_power(n, d_min(lam) + 1)
    raise ValueError(f"unknown mode {mode!r}; choose from {MODES}")


def two_row_presentation(lam: Partition) -> Ideal:
    """Presentation for two-part shapes: (p1, squares) plus, when the parts
    differ by at least two, the orbit of the squarefree monomial of degree
    one more than the second part."""
    if lam.m != 2:
        raise ValueError("the presentation needs exactly two parts")
    n = lam.n
    gens = [power_sum(1, n)]
    gens += [Polynomial.variable(i, n) ** 2 for i in range(1, n + 1)]
    lam1, lam2 = lam.parts
    if lam1 >= lam2 + 2:
        for subset in combinations(range(1, n + 1), lam2 + 1):
            mono = [0] * n
            for i in subset:
                mono[i - 1] = 1
            gens.append(Polynomial.monomial(tuple(mono)))
    return Ideal(n, gens)


def tilde_ideal(mu: Partition) -> Ideal:
    """Monomial-orbit companion: low power sums, the orbit of the m-th
    variable power, and the orbits of k-th powers of squarefree monomials
    whose support size is the tail-sum threshold."""
    n, m = mu.n, mu.m
    gens: list[Polynomial] = [power_sum(j, n) for j in range(1, m)]
    gens += [Polynomial.variable(i, n) ** m for i in range(1, n + 1)]
    for k in range(1, m):
        size = R_k(mu, k)
        for subset in combinations(range(1, n + 1), size):
            mono = [0] * n
            for i in subset:
                mono[i - 1] = k
            gens.append(Polynomial.monomial(tuple(mono)))
    return Ideal(n, gens)


def power_sum_specht_ideal(mu: Partition) -> Ideal:
    """(p_1..p_n, Specht polynomials of every shape not dominating mu)."""
    from .combinat import dominates, partitions_of

    n = mu.n
    gens = [power_sum(j, n) for j in range(1, n + 1)]
    for lam in partitions_of(n):
        if not dominates(lam, mu):
            gens.extend(distinct_specht_polynomials(lam))
    return Ideal(n, gens)


@dataclass
class InclusionReport:
    """Outcome of the two-step inclusion chain check for one partition."""

    mu: Partition
    first_holds: bool
    second_holds: bool
    first_strict: bool
    second_strict: bool
    failures: list[str] = field(default_factory=list)
    witnesses: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.first_holds and self.second_holds


def _strictness_witness(smaller: Ideal, larger: Ideal) -> Polynomial | None:
    """A generator of the larger ideal missing from the smaller one."""
    for g in sorted(larger.generators, key=lambda f: (f.degree(), str(f))):
        if not smaller.contains(g):
            return g
    return None


def inclusion_chain_check(mu: Partition) -> InclusionReport:
    """Verify (power sums + non-dominating Specht) inside the monomial-orbit
    companion inside the subset-elementary ideal, with strictness witnesses."""
    small = power_sum_specht_ideal(mu)
    middle = tilde_ideal(mu)
    large = tanisaki_ideal(mu)
    failures: list[str] = []
    for g in small.generators:
        if not middle.contains(g):
            failures.append(f"first inclusion fails at {g}")
    for g in middle.generators:
        if not large.contains(g):
            failures.append(f"second inclusion fails at {g}")
    first_holds = not any(f.startswith("first") for f in failures)
    second_holds = not any(f.startswith("second") for f in failures)
    witnesses: dict[str, str] = {}
    first_strict = second_strict = False
    if first_holds:
        w = _strictness_witness(small, middle)
        if w is not None:
            first_strict = True
            witnesses["first"] = str(w)
    if second_holds:
        w = _strictness_witness(middle, large)
        if w is not None:
            second_strict = True
            witnesses["second"] = str(w)
    return InclusionReport(mu, first_holds, second_holds, first_strict, second_strict,
                           failures, witnesses)


def homogeneous_membership(f: Polynomial, generators: list[Polynomial]) -> bool:
    """Degreewise membership test for homogeneous data, no Groebner basis.

    Decides whether f lies in the span of the degree-matched multiples of
    the generators; valid because everything is homogeneous.
    """
    if f.is_zero():
        return True
    if not f.is_homogeneous():
        raise ValueError("degreewise membership needs homogeneous input")
    n = f.ambient_n
    d = f.degree()
    span = KernelEchelon(key=monomial_key)
    counter = 0
    for g in generators:
        if not g.is_homogeneous():
            raise ValueError("degreewise membership needs homogeneous generators")
        e = g.degree()
        if e > d or g.is_zero():
            continue
        for mono in _degree_monomials(n, d - e):
            counter += 1
            span.add(dict((Polynomial.monomial(mono) * g).terms), ("g", counter))
    return span.add(dict(f.terms), "target") is not None
