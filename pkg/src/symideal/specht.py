"""Vandermonde, Specht, and higher Specht polynomial constructions.

Also houses the explicit low-degree spanning sets used by the colength
classification (degrees up to three) and the ideals generated by Specht
polynomials of a fixed shape.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .combinat import (Partition, Permutation, Tableau, all_tableaux,
                       index, standard_tableaux, word)
from .ideals import Ideal
from .poly import Polynomial, apply_permutation, power_sum


class SpechtDatum:
    """A tableau pair of common shape with its polynomial built lazily.

    The first tableau supplies the variables, the second (standard) one the
    exponents; the resulting symmetrized polynomial is cached on first use.
    """

    __slots__ = ("filling", "exponent_source", "_polynomial")

    def __init__(self, filling: Tableau, exponent_source: Tableau):
        if filling.shape != exponent_source.shape:
            raise ValueError("shapes differ")
        if not exponent_source.is_standard():
            raise ValueError("the exponent tableau must be standard")
        self.filling = filling
        self.exponent_source = exponent_source
        self._polynomial: Polynomial | None = None

    @property
    def shape(self) -> Partition:
        return self.filling.shape

    def polynomial(self) -> "Polynomial":
        if self._polynomial is None:
            self._polynomial = higher_specht(self.filling, self.exponent_source)
        return self._polynomial

    def __repr__(self) -> str:
        return f"SpechtDatum({self.filling!r}, {self.exponent_source!r})"


def vandermonde(indices, n: int) -> Polynomial:
    """Product of (x_i - x_j) over index pairs in the given sequence order."""
    seq = [int(i) for i in indices]
    if len(set(seq)) != len(seq):
        raise ValueError(f"indices must be distinct: {seq}")
    if any(not 1 <= i <= n for i in seq):
        raise ValueError("index out of range")
    result = Polynomial.one(n)
    for a, b in combinations(seq, 2):
        result = result * (Polynomial.variable(a, n) - Polynomial.variable(b, n))
    return result


def specht_polynomial(t: Tableau, n: int | None = None) -> Polynomial:
    """Product of the column Vandermonde polynomials of the tableau."""
    n = n or t.n
    result = Polynomial.one(n)
    for col in t.columns():
        result = result * vandermonde(col, n)
    return result


def _column_group(t: Tableau) -> list[tuple[Permutation, int]]:
    """Column stabilizer with signs."""
    return _stabilizer(t.columns(), t.n, signed=True)


def _row_group(t: Tableau) -> list[tuple[Permutation, int]]:
    return _stabilizer([tuple(row) for row in t.rows], t.n, signed=False)


def _stabilizer(blocks, n: int, signed: bool) -> list[tuple[Permutation, int]]:
    out = [(Permutation.identity(n), 1)]
    for block in blocks:
        extended = []
        for arrangement in permutations(block):
            images = list(range(1, n + 1))
            for src, dst in zip(block, arrangement):
                images[src - 1] = dst
            sigma = Permutation(images)
            sign = sigma.sign() if signed else 1
            extended.extend((sigma * tau, sign * s) for tau, s in out)
        out = extended
    return out


def tableau_monomial(t: Tableau, s: Tableau) -> Polynomial:
    """The monomial whose exponents are the index word of s on the word of t."""
    if t.shape != s.shape:
        raise ValueError("shapes differ")
    exps = [0] * t.n
    for variable, e in zip(word(t), index(s)):
        exps[variable - 1] = e
    return Polynomial.monomial(tuple(exps))


def higher_specht(t: Tableau, s: Tableau) -> Polynomial:
    """Young-symmetrizer image of the tableau monomial: the row stabilizer
    acts first, then the signed column stabilizer."""
    if t.shape != s.shape:
        raise ValueError("shapes differ")
    if not s.is_standard():
        raise ValueError("second tableau must be standard")
    base = tableau_monomial(t, s)
    row_images = [apply_permutation(tau, base) for tau, _ in _row_group(t)]
    row_sum = Polynomial.zero(t.n)
    for f in row_images:
        row_sum = row_sum + f
    total = Polynomial.zero(t.n)
    for sigma, sign in _column_group(t):
        total = total + sign * apply_permutation(sigma, row_sum)
    return total


def minimal_index_tableau(lam: Partition) -> Tableau:
    """The standard tableau whose index word has the smallest entry sum.

    Located by exhaustive search; it comes out as the row-by-row filling."""
    return min(standard_tableaux(lam), key=lambda s: (sum(index(s)), s.reading()))


def coinvariant_isotypic_basis(lam: Partition) -> list[Polynomial]:
    """Higher Specht polynomials for all standard pairs of this shape."""
    tabs = standard_tableaux(lam)
    return [higher_specht(t, s) for s in tabs for t in tabs]


def distinct_specht_polynomials(lam: Partition) -> list[Polynomial]:
    """Specht polynomials over all fillings, deduplicated up to scalar."""
    seen: set[Polynomial] = set()
    for t in all_tableaux(lam):
        seen.add(specht_polynomial(t).monic())
    return sorted(seen, key=str)


def specht_ideal(lam: Partition) -> Ideal:
    """Ideal generated by all Specht polynomials of the given shape."""
    return Ideal(lam.n, distinct_specht_polynomials(lam))


# ---------------------------------------------------------------------------
# explicit isotypic spanning sets in degrees one to three


def _distinct_index_family(n: int, k: int, builder) -> list[Polynomial]:
    """Normalized span of builder(i1..ik) over distinct indices."""
    seen: set[Polynomial] = set()
    for combo in permutations(range(1, n + 1), k):
        f = builder(*combo)
        if not f.is_zero():
            seen.add(f.monic())
    return sorted(seen, key=str)


def _x(i: int, n: int) -> Polynomial:
    return Polynomial.variable(i, n)


def _component_builders(n: int) -> dict[str, tuple[object, Partition]]:
    """Tag -> (generator list builder, irreducible type)."""
    p1 = power_sum(1, n)
    p2 = power_sum(2, n)
    p3 = power_sum(3, n)
    triv = Partition([n])
    std = Partition([n - 1, 1]) if n >= 2 else triv
    builders: dict[str, tuple[object, Partition]] = {
        "p1": (lambda: [p1], triv),
        "xi-xj": (lambda: _distinct_index_family(n, 2, lambda i, j: _x(i, n) - _x(j, n)), std),
        "p1^2": (lambda: [p1 * p1], triv),
        "p2": (lambda: [p2], triv),
        "p1(xi-xj)": (lambda: _distinct_index_family(n, 2, lambda i, j: p1 * (_x(i, n) - _x(j, n))), std),
        "xi^2-xj^2": (lambda: _distinct_index_family(n, 2, lambda i, j: _x(i, n) ** 2 - _x(j, n) ** 2), std),
        "p1^3": (lambda: [p1 ** 3], triv),
        "p1p2": (lambda: [p1 * p2], triv),
        "p3": (lambda: [p3], triv),
        "p1^2(xi-xj)": (lambda: _distinct_index_family(n, 2, lambda i, j: p1 * p1 * (_x(i, n) - _x(j, n))), std),
        "p2(xi-xj)": (lambda: _distinct_index_family(n, 2, lambda i, j: p2 * (_x(i, n) - _x(j, n))), std),
        "p1(xi^2-xj^2)": (lambda: _distinct_index_family(n, 2, lambda i, j: p1 * (_x(i, n) ** 2 - _x(j, n) ** 2)), std),
        "xi^3-xj^3": (lambda: _distinct_index_family(n, 2, lambda i, j: _x(i, n) ** 3 - _x(j, n) ** 3), std),
    }
    if n >= 4:
        pair = Partition([n - 2, 2])
        builders["(xi-xj)(xk-xl)"] = (
            lambda: _distinct_index_family(
                n, 4, lambda i, j, k, l: (_x(i, n) - _x(j, n)) * (_x(k, n) - _x(l, n))),
            pair)
        builders["p1(xi-xj)(xk-xl)"] = (
            lambda: _distinct_index_family(
                n, 4, lambda i, j, k, l: p1 * (_x(i, n) - _x(j, n)) * (_x(k, n) - _x(l, n))),
            pair)
        builders["(xi+xj+xk+xl)(xi-xj)(xk-xl)"] = (
            lambda: _distinct_index_family(
                n, 4,
                lambda i, j, k, l: (_x(i, n) + _x(j, n) + _x(k, n) + _x(l, n))
                * (_x(i, n) - _x(j, n)) * (_x(k, n) - _x(l, n))),
            pair)
    hook = Partition([n - 2, 1, 1]) if n >= 4 else Partition([1, 1, 1])
    builders["(xi-xj)(xi-xk)(xj-xk)"] = (
        lambda: _distinct_index_family(
            n, 3,
            lambda i, j, k: (_x(i, n) - _x(j, n)) * (_x(i, n) - _x(k, n)) * (_x(j, n) - _x(k, n))),
        hook)
    if n >= 6:
        builders["(xi-xj)(xk-xl)(xs-xt)"] = (
            lambda: _distinct_index_family(
                n, 6,
                lambda i, j, k, l, s, t: (_x(i, n) - _x(j, n)) * (_x(k, n) - _x(l, n))
                * (_x(s, n) - _x(t, n))),
            Partition([n - 3, 3]))
    return builders


def degree_component_tags(d: int, n: int) -> list[str]:
    """Valid summand tags for the degree-d decomposition at this n."""
    if n < 3:
        raise ValueError("decompositions are tabulated for n >= 3")
    if d == 1:
        return ["p1", "xi-xj"]
    if d == 2:
        tags = ["p1^2", "p2", "p1(xi-xj)", "xi^2-xj^2"]
        if n >= 4:
            tags.append("(xi-xj)(xk-xl)")
        return tags
    if d == 3:
        tags = ["p1^3", "p1p2", "p3", "p1^2(xi-xj)", "p2(xi-xj)", "p1(xi^2-xj^2)"]
        if n >= 4:
            tags.append("xi^3-xj^3")
            tags.append("p1(xi-xj)(xk-xl)")
        if n >= 5:
            tags.append("(xi+xj+xk+xl)(xi-xj)(xk-xl)")
        tags.append("(xi-xj)(xi-xk)(xj-xk)")
        if n >= 6:
            tags.append("(xi-xj)(xk-xl)(xs-xt)")
        return tags
    raise ValueError("decompositions are tabulated for degrees 1..3")


def lemma_component(d: int, n: int, tag: str) -> list[Polynomial]:
    """Spanning set of one named direct summand of the degree-d piece."""
    if tag not in degree_component_tags(d, n):
        raise ValueError(f"tag {tag!r} is not a summand for degree {d} at n={n}")
    builders = _component_builders(n)
    build, _ = builders[tag]
    return build()


def component_type(tag: str, n: int) -> Partition:
    """The irreducible type a tagged summand carries."""
    return _component_builders(n)[tag][1]


def format_component(lam_or_tag, d: int, polys: list[Polynomial]) -> str:
    """Plain-text export: a header line then one polynomial per line."""
    lines = [f"# component={lam_or_tag} degree={d} count={len(polys)}"]
    lines.extend(str(f) for f in polys)
    return "\n".join(lines) + "\n"
