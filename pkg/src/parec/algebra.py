"""The partition algebra P_n(r) on its diagram basis.

Elements are sparse maps from diagrams to :class:`RatFunc` coefficients.
The product of two diagrams is ``r**loops`` times their stacked composition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .diagrams import (
    Diagram,
    compose,
    enumerate_diagrams,
    identity_diagram,
    parse_diagram,
)
from .errors import NotInvariantError, OrderMismatchError, check_order
from .scalars import R, Poly, RatFunc, Scalar

REGULAR_TRACE_LIMIT = 4


@dataclass(frozen=True, eq=False)
class Element:
    """A finite linear combination of order-n diagrams."""

    n: int
    terms: Mapping[Diagram, RatFunc]

    @classmethod
    def from_terms(cls, n: int, items: Iterable[tuple[Diagram, RatFunc | Poly | Scalar]]) -> Element:
        acc: dict[Diagram, RatFunc] = {}
        for d, c in items:
            if d.n != n:
                raise OrderMismatchError(f"diagram of order {d.n} in element of order {n}")
            acc[d] = acc.get(d, RatFunc()) + RatFunc.coerce(c)
        return cls(n, {d: c for d, c in acc.items() if not c.is_zero()})

    @classmethod
    def basis(cls, d: Diagram, coeff: RatFunc | Poly | Scalar = 1) -> Element:
        return cls.from_terms(d.n, [(d, coeff)])

    def coefficient(self, d: Diagram) -> RatFunc:
        return self.terms.get(d, RatFunc())

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Diagram]:
        return sorted(self.terms, key=Diagram.sort_key)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.n == other.n and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def _check(self, other: Element) -> None:
        if other.n != self.n:
            raise OrderMismatchError(f"orders {self.n} and {other.n} differ")

    def __add__(self, other: Element) -> Element:
        self._check(other)
        return Element.from_terms(self.n, [*self.terms.items(), *other.terms.items()])

    def __neg__(self) -> Element:
        return Element(self.n, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def __mul__(self, other: Element | RatFunc | Poly | Scalar) -> Element:
        if isinstance(other, Element):
            return multiply(self, other)
        c = RatFunc.coerce(other)
        return Element.from_terms(self.n, [(d, a * c) for d, a in self.terms.items()])

    def __rmul__(self, other: RatFunc | Poly | Scalar) -> Element:
        return self * other

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[d]})*{d}" for d in self.support())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"diagram": d.to_json(), "coeff": self.terms[d].to_json()}
                for d in self.support()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> Element:
        try:
            n = data["n"]
            items = [
                (Diagram.from_json(t["diagram"]), RatFunc.from_json(t["coeff"]))
                for t in data["terms"]
            ]
        except (KeyError, TypeError) as exc:
            raise ValueError("element JSON needs 'n' and 'terms'") from exc
        return cls.from_terms(n, items)


def multiply(a: Element, b: Element) -> Element:
    a._check(b)
    items = []
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            res = compose(d1, d2)
            items.append((res.diagram, c1 * c2 * R**res.loops))
    return Element.from_terms(a.n, items)


def identity(n: int) -> Element:
    return Element.basis(identity_diagram(n))


def e_idempotent(n: int, ell: int) -> Element:
    """``(1/r)`` times ``{{1,1'},...,{l-1,(l-1)'},{l..n},{l'..n'}}``."""
    if not 1 <= ell <= n:
        raise ValueError(f"need 1 <= l <= n, got l={ell}, n={n}")
    blocks: list[Sequence[int]] = [(i, -i) for i in range(1, ell)]
    blocks.append(tuple(range(ell, n + 1)))
    blocks.append(tuple(-i for i in range(ell, n + 1)))
    return Element.basis(Diagram.from_blocks(n, blocks), RatFunc(1, R))


def left_regular_trace(d: Diagram) -> Poly:
    """Trace of left multiplication by ``d`` on the whole diagram basis."""
    check_order(d.n, REGULAR_TRACE_LIMIT, "left_regular_trace")
    loops: dict[int, int] = {}
    for b in enumerate_diagrams(d.n):
        res = compose(d, b)
        if res.diagram == b:
            loops[res.loops] = loops.get(res.loops, 0) + 1
    if not loops:
        return Poly()
    return Poly([loops.get(i, 0) for i in range(max(loops) + 1)])


D4 = parse_diagram("{{1,2},{1',2'}}")
D14 = parse_diagram("{{1},{2},{1',2'}}")


def left_ideal_trace_on(d: Diagram, basis: Sequence[Diagram] = (D4, D14)) -> Poly:
    """Trace of left multiplication by ``d`` on the span of ``basis``.

    Raises NotInvariantError when some product leaves the span.
    """
    members = set(basis)
    trace = RatFunc()
    for b in basis:
        if b.n != d.n:
            raise OrderMismatchError(f"basis diagram of order {b.n} vs order {d.n}")
        res = compose(d, b)
        if res.diagram not in members:
            raise NotInvariantError(f"{d} * {b} = r^{res.loops} {res.diagram} leaves the span")
        if res.diagram == b:
            trace = trace + R**res.loops
    return trace.as_poly()
