"""Sparse multivariate polynomials over the rationals, with the S_n action.

Coefficients are exact ``fractions.Fraction`` values; exponent vectors are
plain tuples of length ``ambient_n``.  Polynomials are immutable: every
operation returns a new value, so sharing across threads is safe.

The text format is round-trip exact: terms joined by ``+``/``-``,
coefficients printed as ``p/q``, variables ``x1..xn``, powers marked with
``^`` (for example ``x1^2*x2 - 3/2*x3``).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from itertools import combinations, permutations
from math import factorial

from .combinat import Permutation

Monomial = tuple[int, ...]


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_key(m: Monomial) -> tuple:
    """Ascending key for the graded reverse-lexicographic order."""
    return (sum(m), tuple(-e for e in reversed(m)))


class Polynomial:
    """An exact-rational polynomial in variables x1..xn."""

    __slots__ = ("ambient_n", "terms", "_hash")

    def __init__(self, ambient_n: int, terms: dict[Monomial, Fraction] | None = None):
        self.ambient_n = ambient_n
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != ambient_n:
                    raise ValueError(f"monomial {mono} does not have {ambient_n} entries")
                coeff = Fraction(coeff)
                if coeff:
                    clean[mono] = coeff
        self.terms = clean
        self._hash: int | None = None

    # ---- constructors -------------------------------------------------
    @staticmethod
    def zero(n: int) -> "Polynomial":
        return Polynomial(n)

    @staticmethod
    def constant(c, n: int) -> "Polynomial":
        return Polynomial(n, {(0,) * n: Fraction(c)})

    @staticmethod
    def one(n: int) -> "Polynomial":
        return Polynomial.constant(1, n)

    @staticmethod
    def variable(i: int, n: int) -> "Polynomial":
        """The variable x_i (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        mono = tuple(1 if j == i - 1 else 0 for j in range(n))
        return Polynomial(n, {mono: Fraction(1)})

    @staticmethod
    def monomial(exponents: Monomial, coeff=1) -> "Polynomial":
        return Polynomial(len(exponents), {tuple(exponents): Fraction(coeff)})

    # ---- basic queries -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(m) for m in self.terms}
        return len(degrees) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial(self.ambient_n, {m: c for m, c in self.terms.items() if sum(m) == d})

    def homogeneous_parts(self) -> dict[int, "Polynomial"]:
        out: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self.terms.items():
            out.setdefault(sum(m), {})[m] = c
        return {d: Polynomial(self.ambient_n, t) for d, t in sorted(out.items())}

    def top_form(self) -> "Polynomial":
        """Highest-degree homogeneous part."""
        return self.homogeneous_part(self.degree())

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=monomial_key)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient()
        return Polynomial(self.ambient_n, {m: c / lc for m, c in self.terms.items()})

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)

    # ---- arithmetic ----------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ambient_n != self.ambient_n:
                raise ValueError("ambient sizes differ")
            return other
        return Polynomial.constant(other, self.ambient_n)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            new = terms.get(m, Fraction(0)) + c
            if new:
                terms[m] = new
            else:
                terms.pop(m, None)
        return Polynomial(self.ambient_n, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ambient_n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial(self.ambient_n, {m: c * v for m, v in self.terms.items()})
        if other.ambient_n != self.ambient_n:
            raise ValueError("ambient sizes differ")
        terms: dict[Monomial, Fraction] = {}
        small, large = (self.terms, other.terms) if len(self.terms) <= len(other.terms) else (other.terms, self.terms)
        for m1, c1 in small.items():
            for m2, c2 in large.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                new = terms.get(m, Fraction(0)) + c1 * c2
                if new:
                    terms[m] = new
                else:
                    terms.pop(m, None)
        return Polynomial(self.ambient_n, terms)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Polynomial":
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.ambient_n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.ambient_n)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ambient_n == other.ambient_n and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ambient_n, frozenset(self.terms.items())))
        return self._hash

    def evaluate(self, point) -> Fraction:
        values = [Fraction(v) for v in point]
        if len(values) != self.ambient_n:
            raise ValueError("point has wrong length")
        total = Fraction(0)
        for m, c in self.terms.items():
            prod = c
            for v, e in zip(values, m):
                if e:
                    prod *= v**e
            total += prod
        return total

    # ---- printing / parsing ---------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in self.sorted_terms():
            factors = [
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(mono)
                if e
            ]
            body = "*".join(factors)
            mag = abs(coeff)
            if not factors:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not pieces:
                pieces.append(text if coeff > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self.ambient_n}, {str(self)!r})"


_TERM_RE = re.compile(r"^(?:(?P<coeff>\d+(?:/\d+)?)\*?)?(?P<body>(?:x\d+(?:\^\d+)?(?:\*x\d+(?:\^\d+)?)*)?)$")


def parse_polynomial(text: str, n: int) -> Polynomial:
    """Parse the text format produced by ``str(poly)``."""
    compact = text.replace(" ", "")
    if not compact or compact == "0":
        return Polynomial.zero(n)
    # split into signed terms
    chunks: list[tuple[int, str]] = []
    sign, start = 1, 0
    if compact[0] in "+-":
        sign = -1 if compact[0] == "-" else 1
        start = 1
    current = []
    for ch in compact[start:]:
        if ch in "+-":
            chunks.append((sign, "".join(current)))
            sign = -1 if ch == "-" else 1
            current = []
        else:
            current.append(ch)
    chunks.append((sign, "".join(current)))

    terms: dict[Monomial, Fraction] = {}
    for sgn, chunk in chunks:
        match = _TERM_RE.match(chunk)
        if not match or (not match.group("coeff") and not match.group("body")):
            raise ValueError(f"cannot parse term {chunk!r}")
        coeff = Fraction(match.group("coeff")) if match.group("coeff") else Fraction(1)
        exps = [0] * n
        body = match.group("body")
        if body:
            for factor in body.split("*"):
                if "^" in factor:
                    var, power = factor.split("^")
                else:
                    var, power = factor, "1"
                idx = int(var[1:])
                if not 1 <= idx <= n:
                    raise ValueError(f"variable {var} out of range for n={n}")
                exps[idx - 1] += int(power)
        mono = tuple(exps)
        new = terms.get(mono, Fraction(0)) + sgn * coeff
        if new:
            terms[mono] = new
        else:
            terms.pop(mono, None)
    return Polynomial(n, terms)


# ---- the S_n action and symmetric builders --------------------------------

def apply_permutation(sigma: Permutation, f: Polynomial) -> Polynomial:
    """Relabel variables: x_i goes to x_{sigma(i)}."""
    if sigma.n != f.ambient_n:
        raise ValueError("ambient sizes differ")
    images = sigma.images
    terms: dict[Monomial, Fraction] = {}
    for mono, coeff in f.terms.items():
        new = [0] * f.ambient_n
        for i, e in enumerate(mono):
            if e:
                new[images[i] - 1] = e
        terms[tuple(new)] = coeff
    return Polynomial(f.ambient_n, terms)


def reynolds(f: Polynomial) -> Polynomial:
    """Average of f over all permutations of the variables."""
    n = f.ambient_n
    total = Polynomial.zero(n)
    for images in permutations(range(1, n + 1)):
        total = total + apply_permutation(Permutation(images), f)
    return total * Fraction(1, factorial(n))


def orbit_polynomials(f: Polynomial) -> list[Polynomial]:
    """Distinct images of f under all variable permutations, in print order."""
    n = f.ambient_n
    seen = {apply_permutation(Permutation(images), f) for images in permutations(range(1, n + 1))}
    return sorted(seen, key=str)


def power_sum(k: int, n: int) -> Polynomial:
    """x1^k + ... + xn^k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return Polynomial(n, {
        tuple(k if j == i else 0 for j in range(n)): Fraction(1) for i in range(n)
    })


def elementary_symmetric(r: int, subset, n: int) -> Polynomial:
    """Degree-r elementary symmetric polynomial in the variables indexed by subset."""
    indices = sorted(set(int(i) for i in subset))
    if any(not 1 <= i <= n for i in indices):
        raise ValueError("subset indices out of range")
    if r < 0 or r > len(indices):
        raise ValueError(f"need 0 <= r <= |S|, got r={r}, |S|={len(indices)}")
    if r == 0:
        return Polynomial.one(n)
    terms: dict[Monomial, Fraction] = {}
    for combo in combinations(indices, r):
        mono = [0] * n
        for i in combo:
            mono[i - 1] = 1
        terms[tuple(mono)] = Fraction(1)
    return Polynomial(n, terms)


def apolar_pair(f: Polynomial, g: Polynomial) -> Polynomial:
    """Apply f as a constant-coefficient differential operator to g."""
    if f.ambient_n != g.ambient_n:
        raise ValueError("ambient sizes differ")
    n = f.ambient_n
    terms: dict[Monomial, Fraction] = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            if any(bi < ai for ai, bi in zip(a, b)):
                continue
            scale = 1
            for ai, bi in zip(a, b):
                if ai:
                    scale *= factorial(bi) // factorial(bi - ai)
            mono = tuple(bi - ai for ai, bi in zip(a, b))
            new = terms.get(mono, Fraction(0)) + ca * cb * scale
            if new:
                terms[mono] = new
            else:
                terms.pop(mono, None)
    return Polynomial(n, terms)


def apolar_scalar(f: Polynomial, g: Polynomial) -> Fraction:
    """The pairing of two equal-degree homogeneous polynomials, as a number."""
    result = apolar_pair(f, g)
    return result.coefficient((0,) * f.ambient_n)


def monomial_weight(m: Monomial) -> int:
    """Self-pairing of a monomial: the product of factorials of its exponents."""
    return reduce(lambda acc, e: acc * factorial(e), m, 1)


def derivative(f: Polynomial, i: int) -> Polynomial:
    """Partial derivative with respect to x_i (1-based)."""
    j = i - 1
    terms: dict[Monomial, Fraction] = {}
    for m, c in f.terms.items():
        e = m[j]
        if e:
            terms[m[:j] + (e - 1,) + m[j + 1:]] = c * e
    return Polynomial(f.ambient_n, terms)


def integrate_duals(duals: list[Polynomial], n: int, d: int) -> list[Polynomial]:
    """Degree-d polynomials whose partials all lie in the span of ``duals``.

    Macaulay-duality workhorse: a tuple (m_1..m_n) of span members with
    matching cross-partials integrates to (1/d) * sum x_j m_j by the Euler
    identity, and every admissible polynomial arises exactly once.  The
    linear algebra runs over the (small) dual span, never over the full
    degree piece.
    """
    from .linalg import KernelEchelon

    if not duals or d <= 0:
        return []
    partials = {(j, t): derivative(duals[t], j + 1)
                for j in range(n) for t in range(len(duals))}
    tracker = KernelEchelon(key=lambda c: c)
    solutions: list[dict] = []
    for j in range(n):
        for t in range(len(duals)):
            col: dict = {}
            for k in range(n):
                if k == j:
                    continue
                lo, hi = min(j, k), max(j, k)
                sign = 1 if j == lo else -1
                for m, c in partials[(k, t)].terms.items():
                    key = ((lo, hi), m)
                    value = col.get(key, 0) + sign * c
                    if value:
                        col[key] = value
                    else:
                        col.pop(key, None)
            relation = tracker.add(col, (j, t))
            if relation is not None:
                solutions.append(relation)
    out = []
    for relation in solutions:
        f = Polynomial.zero(n)
        for (j, t), coeff in relation.items():
            f = f + Polynomial.variable(j + 1, n) * duals[t] * coeff
        if not f.is_zero():
            out.append(f * Fraction(1, d))
    return out
