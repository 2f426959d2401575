"""Matrix functionals over exact rationals.

``diagram_product`` extends ``prod a[i, p(i)]`` from permutations to every
partition diagram; the recombinant sums it against a partition-algebra
character, just as the immanant sums ``prod a[i, p(i)]`` against a
symmetric-group character.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .diagrams import Diagram, enumerate_diagrams, is_propagating
from .errors import OrderMismatchError, ShapeLevelError, check_order
from .pachar import ShapeIndex, character
from .scalars import Poly, Scalar, format_rational, parse_rational
from .symchar import as_partition, cycle_type, mn_character

RECOMBINANT_LIMIT = 4
IMMANANT_LIMIT = 8


@dataclass(frozen=True)
class SquareMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar | str]]) -> SquareMatrix:
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        out = []
        for row in rows:
            if len(row) != n:
                raise ValueError(f"matrix is not square: row of length {len(row)} in order {n}")
            out.append(tuple(parse_rational(x) if isinstance(x, str) else Fraction(x) for x in row))
        return cls(tuple(out))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        """1-based entry ``a[i, j]``."""
        i, j = ij
        return self.entries[i - 1][j - 1]

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [[format_rational(x) for x in row] for row in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> SquareMatrix:
        try:
            n, rows = data["n"], data["entries"]
        except (KeyError, TypeError) as exc:
            raise ValueError("matrix JSON needs 'n' and 'entries'") from exc
        if not isinstance(rows, list) or any(not isinstance(row, list) for row in rows):
            raise ValueError("matrix 'entries' must be an array of arrays")
        m = cls.from_rows(rows)
        if m.n != n:
            raise ValueError(f"matrix declares n={n} but has {m.n} rows")
        return m

    @classmethod
    def load(cls, path: str) -> SquareMatrix:
        with open(path, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}: malformed JSON: {exc}") from exc
        return cls.from_json(data)


def _check(d: Diagram, a: SquareMatrix) -> None:
    if d.n != a.n:
        raise OrderMismatchError(f"diagram of order {d.n} vs {a.n}x{a.n} matrix")


def diagram_product(d: Diagram, a: SquareMatrix) -> Fraction:
    """Product over propagating blocks B of every ``a[i, j]`` with i, j' in B.

    Diagrams with no propagating block give 0.
    """
    _check(d, a)
    total = Fraction(1)
    propagating = False
    for b in d.blocks:
        if not is_propagating(b):
            continue
        propagating = True
        tops = [v for v in b if v > 0]
        bottoms = [-v for v in b if v < 0]
        for i in tops:
            row = a.entries[i - 1]
            for j in bottoms:
                total *= row[j - 1]
    return total if propagating else Fraction(0)


def immanant(lam: Sequence[int], a: SquareMatrix) -> Fraction:
    """Sum over permutations of ``chi^lam(sigma) * prod a[i, sigma(i)]``."""
    lam = as_partition(lam)
    n = a.n
    if sum(lam) != n:
        raise ShapeLevelError(f"shape {list(lam)} does not partition {n}")
    check_order(n, IMMANANT_LIMIT, "immanant")
    total = Fraction(0)
    for sigma in permutations(range(n)):
        term = Fraction(1)
        for i, j in enumerate(sigma):
            term *= a.entries[i][j]
            if term == 0:
                break
        if term:
            total += mn_character(lam, cycle_type([j + 1 for j in sigma])) * term
    return total


def determinant(a: SquareMatrix) -> Fraction:
    """Bareiss fraction-free elimination."""
    m = [list(row) for row in a.entries]
    n = a.n
    sign, prev = 1, Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def permanent(a: SquareMatrix) -> Fraction:
    """Ryser's inclusion-exclusion formula over column subsets, in Gray-code order."""
    n = a.n
    row_sums = [Fraction(0)] * n
    total = Fraction(0)
    subset = 0
    for g in range(1, 1 << n):
        # flip the column given by the lowest set bit of g
        j = (g & -g).bit_length() - 1
        subset ^= 1 << j
        sgn = 1 if subset >> j & 1 else -1
        for i in range(n):
            row_sums[i] += sgn * a.entries[i][j]
        term = Fraction(1)
        for s in row_sums:
            term *= s
        size = bin(subset).count("1")
        total += term if (n - size) % 2 == 0 else -term
    return total


def recombinant(ix: ShapeIndex, a: SquareMatrix) -> Poly:
    """Sum over all diagrams d of ``chi^ix(d) * diagram_product(d, a)``."""
    if ix.level != a.n:
        raise OrderMismatchError(f"shape at level {ix.level} vs {a.n}x{a.n} matrix")
    check_order(a.n, RECOMBINANT_LIMIT, "recombinant")
    total = Poly()
    for d in enumerate_diagrams(a.n):
        if not any(is_propagating(b) for b in d.blocks):
            continue
        weight = diagram_product(d, a)
        if weight == 0:
            continue
        total = total + character(ix, d) * weight
    return total
