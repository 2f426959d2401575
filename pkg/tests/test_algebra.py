import random

import pytest

from parec.algebra import (
    D4,
    D14,
    Element,
    e_idempotent,
    identity,
    left_ideal_trace_on,
    left_regular_trace,
    multiply,
)
from parec.diagrams import as_permutation, enumerate_diagrams, identity_diagram, parse_diagram, propagation_number
from parec.errors import NotInvariantError, OrderMismatchError, ResourceLimitError
from parec.pachar import character, dimension, shapes
from parec.scalars import R, Poly, RatFunc

from oracles import bell_triangle

D7 = parse_diagram("{{1,2'},{2,1'}}")
D15 = parse_diagram("{{1},{2},{1'},{2'}}")


def basis(d):
    return Element.basis(d)


def test_multiply_examples():
    assert basis(D4) * basis(D4) == Element.basis(D4, R)
    assert basis(D15) * basis(D4) == Element.basis(D14, R)
    x = Element.from_terms(2, [(D4, 3), (D7, RatFunc(1, R))])
    assert identity(2) * x == x


def test_identity():
    assert identity(2).support() == [parse_diagram("{{1,1'},{2,2'}}")]
    assert as_permutation(identity(3).support()[0]) == (1, 2, 3)
    for n in (1, 2, 3):
        one = identity(n)
        for d in enumerate_diagrams(n):
            assert one * basis(d) == basis(d) == basis(d) * one


def test_order_mismatch():
    with pytest.raises(OrderMismatchError):
        multiply(identity(2), identity(3))


def test_linear_structure():
    x = Element.from_terms(2, [(D4, 1), (D7, 2)])
    assert (x - x).is_zero()
    assert (x + x) == x * 2
    assert Element.from_terms(2, [(D4, 1), (D4, -1)]).is_zero()


def test_json_round_trip():
    x = Element.from_terms(2, [(D4, R + 1), (D7, RatFunc(1, R))])
    assert Element.from_json(x.to_json()) == x
    assert x.to_json()["n"] == 2


def test_associativity_exhaustive_n2():
    diagrams = list(enumerate_diagrams(2))
    el = {d: basis(d) for d in diagrams}
    for a in diagrams:
        for b in diagrams:
            ab = el[a] * el[b]
            for c in diagrams:
                assert ab * el[c] == el[a] * (el[b] * el[c])


def test_associativity_sampled_n3():
    rng = random.Random(3)
    diagrams = list(enumerate_diagrams(3))
    for _ in range(200):
        a, b, c = (basis(rng.choice(diagrams)) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_associativity_on_combinations():
    rng = random.Random(9)
    diagrams = list(enumerate_diagrams(2))

    def rand_elem():
        return Element.from_terms(
            2, [(rng.choice(diagrams), RatFunc(Poly([rng.randint(-3, 3), rng.randint(-3, 3)]), R)) for _ in range(3)]
        )

    for _ in range(30):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert (a * b) * c == a * (b * c)


def test_e_idempotent_examples():
    e = e_idempotent(2, 2)
    assert e == Element.basis(parse_diagram("{{1,1'},{2},{2'}}"), RatFunc(1, R))
    for n in (1, 2, 3):
        for ell in range(1, n + 1):
            e = e_idempotent(n, ell)
            assert e * e == e
            (d,) = e.support()
            assert propagation_number(d) == ell - 1
    with pytest.raises(ValueError):
        e_idempotent(2, 3)


def test_ideal_of_e2_lowers_propagation():
    e = e_idempotent(2, 2)
    for d in enumerate_diagrams(2):
        for prod in (basis(d) * e, e * basis(d)):
            assert all(propagation_number(x) < 2 for x in prod.support())


def regular_matrix_trace(d):
    """Trace from the full matrix of left multiplication on the diagram basis."""
    diagrams = list(enumerate_diagrams(d.n))
    left = basis(d)
    return sum((left * basis(b)).coefficient(b) for b in diagrams)


def test_left_regular_trace_examples():
    assert left_regular_trace(identity_diagram(2)) == Poly([bell_triangle(4)])
    assert left_regular_trace(identity_diagram(3)) == Poly([bell_triangle(6)])
    for d in enumerate_diagrams(2):
        assert RatFunc(left_regular_trace(d)) == regular_matrix_trace(d)
    expected = sum((dimension(ix) * character(ix, D4) for ix in shapes(2)), Poly())
    assert left_regular_trace(D4) == expected


def test_left_regular_trace_guard():
    with pytest.raises(ResourceLimitError):
        left_regular_trace(identity_diagram(5))


def test_left_ideal_trace_examples():
    assert left_ideal_trace_on(D4) == R
    assert left_ideal_trace_on(D7) == Poly([2])
    assert left_ideal_trace_on(D15) == R * R


def test_left_ideal_trace_rejects_non_invariant_span():
    with pytest.raises(NotInvariantError):
        left_ideal_trace_on(D15, [identity_diagram(2)])
