"""Self-checks behind ``parec verify``.

Each suite yields :class:`Check` records; a suite passes when every record
does. Random matrices come from a seeded :class:`random.Random`, so a given
``(n, suite, seed)`` always produces the same report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterator

from . import algebra
from .diagrams import (
    as_permutation,
    conjugate_by_permutation,
    enumerate_diagrams,
    identity_diagram,
    pad,
    parse_diagram,
    propagation_number,
)
from .errors import BoundError
from .matfun import SquareMatrix, determinant, immanant, permanent, recombinant
from .pachar import ShapeIndex, character, dimension, shapes
from .scalars import R, Poly
from .symchar import all_partitions, centralizer_size, cycle_type, hook_dimension, mn_character

SUITES = ("table1", "example", "theorem", "traces", "algebra", "symchar")

# order-2 diagrams and their trivial-shape character values, row by row
TABLE1 = [
    ("{{2',1',1,2}}", Poly([1])),
    ("{{2',1,2},{1'}}", Poly([1])),
    ("{{2'},{1',1,2}}", Poly([1])),
    ("{{2',1'},{1,2}}", R),
    ("{{2'},{1'},{1,2}}", R),
    ("{{2',1',1},{2}}", Poly([1])),
    ("{{2',1},{1',2}}", Poly([2])),
    ("{{2',1},{1'},{2}}", R),
    ("{{2',2},{1',1}}", Poly([2])),
    ("{{2',1',2},{1}}", Poly([1])),
    ("{{2',2},{1'},{1}}", R),
    ("{{2'},{1',1},{2}}", R),
    ("{{2'},{1',2},{1}}", R),
    ("{{2',1'},{1},{2}}", R),
    ("{{2'},{1'},{1},{2}}", R * R),
]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.suite}: {self.name}{tail}"


def random_matrix(rng: random.Random, n: int) -> SquareMatrix:
    return SquareMatrix.from_rows(
        [[Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(n)] for _ in range(n)]
    )


def rec_empty_closed_form(a: SquareMatrix) -> Poly:
    """Trivial-shape recombinant of a 2x2 matrix, written out term by term."""
    a11, a12, a21, a22 = a[1, 1], a[1, 2], a[2, 1], a[2, 2]
    constant = (
        a11 * a12 * a21 * a22
        + a11 * a21 + a11 * a12 + a12 * a22 + a21 * a22
        + 2 * (a11 * a22 + a12 * a21)
    )
    return Poly([constant, a11 + a12 + a21 + a22])


def suite_table1(n: int, rng: random.Random) -> Iterator[Check]:
    empty = ShapeIndex((), 2)
    listed = {parse_diagram(text): value for text, value in TABLE1}
    enumerated = set(enumerate_diagrams(2))
    yield Check("table1", "golden order-2 list covers every diagram once",
                set(listed) == enumerated and len(listed) == 15)
    bad = [str(d) for d, v in listed.items() if character(empty, d) != v]
    yield Check("table1", "trivial-shape character matches golden values", not bad, ", ".join(bad))
    bad = [str(d) for d in enumerated if algebra.left_ideal_trace_on(d) != character(empty, d)]
    yield Check("table1", "trace on span{d4, d14} equals the character", not bad, ", ".join(bad))


def suite_example(n: int, rng: random.Random) -> Iterator[Check]:
    empty = ShapeIndex((), 2)
    mats = [random_matrix(rng, 2) for _ in range(25)]
    bad = sum(recombinant(empty, a) != rec_empty_closed_form(a) for a in mats)
    yield Check("example", "2x2 trivial recombinant closed form", bad == 0, f"{25 - bad}/25 matrices")
    a = SquareMatrix.from_rows([[1, 2], [3, 4]])
    got = recombinant(empty, a)
    yield Check("example", "Rec of [[1,2],[3,4]] is 10*r + 69", got == Poly([69, 10]), str(got))


def suite_theorem(n: int, rng: random.Random) -> Iterator[Check]:
    mats = [random_matrix(rng, n) for _ in range(10)]
    for lam in all_partitions(n):
        ix = ShapeIndex(lam, n)
        ok = True
        for a in mats:
            rec = recombinant(ix, a)
            if not rec.is_constant() or rec.constant_term() != immanant(lam, a):
                ok = False
                break
        yield Check("theorem", f"n={n} shape {list(lam)}: recombinant equals immanant", ok, "10 matrices")


def suite_traces(n: int, rng: random.Random) -> Iterator[Check]:
    diagrams = list(enumerate_diagrams(n))
    ixs = shapes(n)
    bad = sum(
        1 for ix in ixs for d in diagrams
        if propagation_number(d) < ix.size and not character(ix, d).is_zero()
    )
    yield Check("traces", f"n={n} vanishing below the shape size", bad == 0, f"{bad} violations")

    bad = 0
    for lam in all_partitions(n):
        for d in diagrams:
            p = as_permutation(d)
            if p is not None and character(ShapeIndex(lam, n), d) != mn_character(lam, cycle_type(p)):
                bad += 1
    yield Check("traces", f"n={n} full-size shapes restrict to S_n characters", bad == 0, f"{bad} violations")

    if n >= 2:
        bad = sum(
            1 for d in enumerate_diagrams(n - 1) for ix in shapes(n - 1)
            if character(ShapeIndex(ix.shape, n), pad(d)) != R * character(ix, d)
        )
        yield Check("traces", f"n={n} padding by singletons multiplies by r", bad == 0, f"{bad} violations")

    bad = sum(1 for ix in ixs if character(ix, identity_diagram(n)) != dimension(ix))
    yield Check("traces", f"n={n} character at identity is the dimension", bad == 0)
    total = sum(dimension(ix) ** 2 for ix in ixs)
    yield Check("traces", f"n={n} sum of squared dimensions is Bell(2n)",
                total == len(diagrams), f"{total} vs {len(diagrams)}")

    sample = diagrams if n <= 2 else rng.sample(diagrams, min(50, len(diagrams)))
    bad = sum(
        1 for d in sample
        if algebra.left_regular_trace(d)
        != sum((character(ix, d) * dimension(ix) for ix in ixs), Poly())
    )
    yield Check("traces", f"n={n} regular trace decomposes over irreducibles",
                bad == 0, f"{len(sample)} diagrams")

    perms = list(permutations(range(1, n + 1)))
    sample = diagrams if n <= 2 else rng.sample(diagrams, min(40, len(diagrams)))
    bad = sum(
        1 for d in sample for s in perms for ix in ixs
        if character(ix, conjugate_by_permutation(d, s)) != character(ix, d)
    )
    yield Check("traces", f"n={n} characters are conjugation invariant", bad == 0)


def suite_algebra(n: int, rng: random.Random) -> Iterator[Check]:
    diagrams = list(enumerate_diagrams(n))
    basis = {d: algebra.Element.basis(d) for d in diagrams}
    if n <= 2:
        triples = [(a, b, c) for a in diagrams for b in diagrams for c in diagrams]
    else:
        triples = [tuple(rng.choice(diagrams) for _ in range(3)) for _ in range(500)]
    bad = sum(
        1 for a, b, c in triples
        if (basis[a] * basis[b]) * basis[c] != basis[a] * (basis[b] * basis[c])
    )
    yield Check("algebra", f"n={n} associativity", bad == 0, f"{len(triples)} triples")
    one = algebra.identity(n)
    bad = sum(1 for d in diagrams if one * basis[d] != basis[d] or basis[d] * one != basis[d])
    yield Check("algebra", f"n={n} identity is a two-sided unit", bad == 0)
    for ell in range(1, n + 1):
        e = algebra.e_idempotent(n, ell)
        yield Check("algebra", f"n={n} E_{ell} is idempotent", e * e == e)


def suite_symchar(n: int, rng: random.Random) -> Iterator[Check]:
    for m in range(n + 1):
        lams = all_partitions(m)
        bad = sum(1 for lam in lams if mn_character(lam, (1,) * m) != hook_dimension(lam))
        yield Check("symchar", f"n={m} identity class gives hook-length dimension", bad == 0)
        fact = 1
        for i in range(2, m + 1):
            fact *= i
        bad = 0
        for lam in lams:
            for nu in lams:
                inner = sum(
                    fact // centralizer_size(mu) * mn_character(lam, mu) * mn_character(nu, mu)
                    for mu in lams
                )
                bad += inner != (fact if lam == nu else 0)
        yield Check("symchar", f"n={m} row orthogonality", bad == 0)
    mats = [random_matrix(rng, n) for _ in range(5)]
    ok = all(
        immanant((1,) * n, a) == determinant(a) and immanant((n,), a) == permanent(a)
        for a in mats
    )
    yield Check("symchar", f"n={n} immanant specializes to det and perm", ok, "5 matrices")


_RUNNERS: dict[str, Callable[[int, random.Random], Iterator[Check]]] = {
    "table1": suite_table1,
    "example": suite_example,
    "theorem": suite_theorem,
    "traces": suite_traces,
    "algebra": suite_algebra,
    "symchar": suite_symchar,
}


def run(n: int, suite: str = "all", seed: int = 0, slow: bool = False) -> list[Check]:
    limit = 4 if slow else 3
    if not 1 <= n <= limit:
        raise BoundError(f"verify: order out of supported range (n={n}, limit={limit})")
    names = SUITES if suite == "all" else (suite,)
    if any(name not in _RUNNERS for name in names):
        raise ValueError(f"unknown suite {suite!r}")
    checks: list[Check] = []
    for name in names:
        # one generator per suite keeps a suite's draws independent of the others
        checks.extend(_RUNNERS[name](n, random.Random(f"{seed}:{name}")))
    return checks
