"""Exact sparse linear algebra over the rationals.

Rows are dicts mapping hashable column keys to integers.  Elimination is
fraction-free: a reduction step replaces r by (p[c]*r - r[c]*p) followed by
content removal, so entries stay integral and bounded.  Rational input is
cleared to integers on entry; rational answers are reconstructed from the
tracked tags on the way out.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _strip_content(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def to_int_row(row: dict) -> dict:
    """Clear denominators and strip content; keys with zero values dropped."""
    lcm = 1
    for v in row.values():
        if isinstance(v, Fraction):
            d = v.denominator
            lcm = lcm * d // gcd(lcm, d)
    out = {}
    for k, v in row.items():
        value = int(v * lcm) if isinstance(v, Fraction) else int(v) * lcm
        if value:
            out[k] = value
    return _strip_content(out)


class Echelon:
    """Incremental echelon form over arbitrary hashable column keys.

    ``key`` orders the columns; each row pivots on its largest column.
    """

    def __init__(self, key=None):
        self.key = key if key is not None else lambda c: c
        self.pivots: dict = {}  # pivot column -> reduced integer row

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        """Fully reduce an integer row against the current pivots."""
        row = dict(row)
        while row:
            col = max(row, key=self.key)
            pivot = self.pivots.get(col)
            if pivot is None:
                return row
            a, b = pivot[col], row[col]
            g = gcd(a, b)
            ca, cb = a // g, b // g
            new = {}
            for k, v in row.items():
                new[k] = ca * v
            for k, v in pivot.items():
                value = new.get(k, 0) - cb * v
                if value:
                    new[k] = value
                else:
                    new.pop(k, None)
            row = _strip_content(new)
        return row

    def add(self, row: dict) -> dict | None:
        """Insert a row; returns the reduced pivot row, or None if dependent."""
        reduced = self.reduce(to_int_row(row))
        if not reduced:
            return None
        col = max(reduced, key=self.key)
        if reduced[col] < 0:
            reduced = {k: -v for k, v in reduced.items()}
        self.pivots[col] = reduced
        return reduced

    def contains(self, row: dict) -> bool:
        return not self.reduce(to_int_row(row))

    def rows(self) -> list[dict]:
        return [self.pivots[c] for c in sorted(self.pivots, key=self.key, reverse=True)]


class KernelEchelon:
    """Echelon form that tracks tags, exposing kernel combinations.

    Feed vectors one at a time with distinct tags.  When a vector is
    dependent on the earlier ones, ``add`` returns the integer relation
    {tag: coefficient} expressing the dependency (sum of coeff*vector = 0).
    """

    def __init__(self, key=None):
        self.key = key if key is not None else lambda c: c
        self.pivots: dict = {}  # pivot column -> (row, tags)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: dict, tag) -> dict | None:
        # clear denominators only; the scale goes into the tag so that the
        # invariant "stored row == sum of tag-coefficients times originals"
        # holds exactly (content stripping would silently break it)
        lcm = 1
        for v in row.values():
            if isinstance(v, Fraction):
                lcm = lcm * v.denominator // gcd(lcm, v.denominator)
        row = {k: int(v * lcm) for k, v in row.items() if v}
        tags = {tag: lcm}
        while row:
            col = max(row, key=self.key)
            entry = self.pivots.get(col)
            if entry is None:
                self.pivots[col] = (row, tags)
                return None
            pivot, pivot_tags = entry
            a, b = pivot[col], row[col]
            g = gcd(a, b)
            ca, cb = a // g, b // g
            new_row = {k: ca * v for k, v in row.items()}
            for k, v in pivot.items():
                value = new_row.get(k, 0) - cb * v
                if value:
                    new_row[k] = value
                else:
                    new_row.pop(k, None)
            new_tags = {k: ca * v for k, v in tags.items()}
            for k, v in pivot_tags.items():
                value = new_tags.get(k, 0) - cb * v
                if value:
                    new_tags[k] = value
                else:
                    new_tags.pop(k, None)
            # strip a common content across row and tags together
            g_all = 0
            for v in new_row.values():
                g_all = gcd(g_all, v)
            for v in new_tags.values():
                g_all = gcd(g_all, v)
            if g_all > 1:
                new_row = {k: v // g_all for k, v in new_row.items()}
                new_tags = {k: v // g_all for k, v in new_tags.items()}
            row, tags = new_row, new_tags
        return tags


def nullspace_tags(vectors: list[tuple[dict, object]], key=None) -> list[dict]:
    """Kernel relations among tagged vectors, as integer tag-combinations."""
    tracker = KernelEchelon(key=key)
    out = []
    for row, tag in vectors:
        relation = tracker.add(row, tag)
        if relation is not None:
            out.append(relation)
    return out


def solve_in_span(basis: list[dict], target: dict, key=None) -> list[Fraction] | None:
    """Coefficients expressing target over the basis rows, or None."""
    tracker = KernelEchelon(key=key)
    for i, row in enumerate(basis):
        if tracker.add(row, i) is not None:
            raise ValueError("basis rows are linearly dependent")
    relation = tracker.add(target, "target")
    if relation is None:
        return None
    scale = relation["target"]
    return [Fraction(-relation.get(i, 0), scale) for i in range(len(basis))]


def rank_of(rows: list[dict], key=None) -> int:
    ech = Echelon(key=key)
    for row in rows:
        ech.add(row)
    return ech.rank
