"""Partition diagrams of order n.

A diagram is a set partition of the ``2n`` vertices ``1..n`` (top row) and
``1'..n'`` (bottom row). Internally a top vertex ``i`` is the integer ``+i``
and a bottom vertex ``i'`` is ``-i``. The canonical vertex order is
``1 < 2 < ... < n < 1' < ... < n'``; blocks are sorted internally by that
order and listed by their least vertex.

Composition stacks ``upper`` above ``lower``: upper's bottom row is glued to
lower's top row, and connected components that touch neither outer row are
counted as loops.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

from .errors import OrderMismatchError, check_order

Block = tuple[int, ...]
Permutation = tuple[int, ...]

ENUMERATION_LIMIT = 6


def vertex_key(v: int, n: int) -> int:
    """Position of a signed vertex in the canonical total order."""
    return v if v > 0 else n - v


def format_vertex(v: int) -> str:
    return str(v) if v > 0 else f"{-v}'"


def set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    """Set partitions of ``items`` in restricted-growth-string order.

    Blocks come out in order of first appearance, each block in the input
    order. The first partition is the single block, the last is all
    singletons.
    """
    m = len(items)
    if m == 0:
        yield []
        return
    rgs = [0] * m
    # prefix maxima: maxes[i] = max(rgs[:i+1])
    maxes = [0] * m
    while True:
        blocks: list[list[int]] = [[] for _ in range(maxes[-1] + 1)]
        for item, label in zip(items, rgs):
            blocks[label].append(item)
        yield blocks
        i = m - 1
        while i > 0 and rgs[i] > maxes[i - 1]:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        maxes[i] = max(maxes[i - 1], rgs[i])
        for j in range(i + 1, m):
            rgs[j] = 0
            maxes[j] = maxes[i]


@dataclass(frozen=True)
class Diagram:
    """A partition diagram in canonical form. Build with :meth:`from_blocks`."""

    n: int
    blocks: tuple[Block, ...]

    @classmethod
    def from_blocks(cls, n: int, blocks: Sequence[Sequence[int]]) -> Diagram:
        if n < 1:
            raise ValueError(f"diagram order must be positive, got {n}")
        seen: set[int] = set()
        canon: list[Block] = []
        for block in blocks:
            if not block:
                raise ValueError("diagram blocks must be nonempty")
            for v in block:
                if not isinstance(v, int) or v == 0 or abs(v) > n:
                    raise ValueError(f"vertex {v!r} out of range for order {n}")
                if v in seen:
                    raise ValueError(f"vertex {format_vertex(v)} appears twice")
                seen.add(v)
            canon.append(tuple(sorted(block, key=lambda v: vertex_key(v, n))))
        if len(seen) != 2 * n:
            raise ValueError(f"blocks do not cover all {2 * n} vertices")
        canon.sort(key=lambda b: vertex_key(b[0], n))
        return cls(n, tuple(canon))

    def __str__(self) -> str:
        inner = ",".join(
            "{" + ",".join(format_vertex(v) for v in b) + "}" for b in self.blocks
        )
        return "{" + inner + "}"

    def __repr__(self) -> str:
        return f"Diagram({self})"

    def sort_key(self) -> tuple:
        return tuple(tuple(vertex_key(v, self.n) for v in b) for b in self.blocks)

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> Diagram:
        try:
            n, blocks = data["n"], data["blocks"]
        except (KeyError, TypeError) as exc:
            raise ValueError("diagram JSON needs 'n' and 'blocks'") from exc
        if not isinstance(n, int) or not isinstance(blocks, list):
            raise ValueError("diagram JSON has wrong field types")
        return cls.from_blocks(n, blocks)

    @property
    def propagation_number(self) -> int:
        return propagation_number(self)


_VERTEX = re.compile(r"^(\d+)('?)$")


def parse_diagram(text: str, n: int | None = None) -> Diagram:
    """Parse ``"{{1,2'},{2,1'}}"``. The order is inferred unless given.

    A JSON object in the ``{"n": .., "blocks": ..}`` form is accepted too.
    """
    text = text.strip()
    if text.startswith("{\"") or text.startswith("{ \""):
        try:
            return Diagram.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed diagram JSON: {exc}") from exc
    compact = re.sub(r"\s+", "", text)
    if not (compact.startswith("{{") and compact.endswith("}}")):
        raise ValueError(f"malformed diagram {text!r}")
    blocks: list[list[int]] = []
    for chunk in compact[2:-2].split("},{"):
        block = []
        for tok in chunk.split(","):
            m = _VERTEX.match(tok)
            if not m:
                raise ValueError(f"malformed vertex {tok!r} in {text!r}")
            i = int(m.group(1))
            block.append(-i if m.group(2) else i)
        blocks.append(block)
    if n is None:
        n = max(abs(v) for b in blocks for v in b)
    return Diagram.from_blocks(n, blocks)


def enumerate_diagrams(n: int) -> Iterator[Diagram]:
    """All Bell(2n) diagrams of order n in restricted-growth-string order."""
    check_order(n, ENUMERATION_LIMIT, "enumerate_diagrams")
    vertices = list(range(1, n + 1)) + [-i for i in range(1, n + 1)]
    for blocks in set_partitions(vertices):
        # RGS blocks already satisfy the canonical ordering
        yield Diagram(n, tuple(tuple(b) for b in blocks))


def identity_diagram(n: int) -> Diagram:
    return Diagram(n, tuple((i, -i) for i in range(1, n + 1)))


def permutation_diagram(p: Sequence[int]) -> Diagram:
    """Diagram ``{{1, p(1)'}, ..., {n, p(n)'}}`` for a one-line permutation."""
    n = len(p)
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(p)} is not a permutation of 1..{n}")
    return Diagram.from_blocks(n, [(i, -p[i - 1]) for i in range(1, n + 1)])


def is_propagating(block: Block) -> bool:
    return block[0] > 0 and block[-1] < 0


def propagation_number(d: Diagram) -> int:
    return sum(1 for b in d.blocks if is_propagating(b))


def as_permutation(d: Diagram) -> Permutation | None:
    """One-line permutation ``(p(1), ..., p(n))``, or None for other diagrams."""
    image = [0] * d.n
    for b in d.blocks:
        if len(b) != 2 or not is_propagating(b):
            return None
        image[b[0] - 1] = -b[1]
    return tuple(image)


def pad(d: Diagram) -> Diagram:
    """Embed at order n+1 by adding singleton blocks {n+1} and {(n+1)'}."""
    m = d.n + 1
    return Diagram.from_blocks(m, list(d.blocks) + [(m,), (-m,)])


@dataclass(frozen=True)
class CompositionResult:
    diagram: Diagram
    loops: int


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def compose(upper: Diagram, lower: Diagram) -> CompositionResult:
    """Stack ``upper`` over ``lower`` and count loops in the glued middle row."""
    n = upper.n
    if lower.n != n:
        raise OrderMismatchError(f"cannot compose orders {n} and {lower.n}")
    # slots: [0, n) upper top, [n, 2n) middle, [2n, 3n) lower bottom
    uf = _UnionFind(3 * n)
    for b in upper.blocks:
        first = b[0] - 1 if b[0] > 0 else n - b[0] - 1
        for v in b[1:]:
            uf.union(first, v - 1 if v > 0 else n - v - 1)
    for b in lower.blocks:
        first = n + b[0] - 1 if b[0] > 0 else 2 * n - b[0] - 1
        for v in b[1:]:
            uf.union(first, n + v - 1 if v > 0 else 2 * n - v - 1)
    comps: dict[int, list[int]] = {}
    for i in range(n):
        comps.setdefault(uf.find(i), []).append(i + 1)
    for i in range(n):
        comps.setdefault(uf.find(2 * n + i), []).append(-(i + 1))
    middle_roots = {uf.find(n + i) for i in range(n)}
    loops = len(middle_roots - comps.keys())
    return CompositionResult(Diagram.from_blocks(n, list(comps.values())), loops)


def conjugate_by_permutation(d: Diagram, sigma: Sequence[int]) -> Diagram:
    """Relabel ``i -> sigma(i)`` on both rows, giving ``sigma d sigma^-1``."""
    if len(sigma) != d.n:
        raise OrderMismatchError(f"permutation of length {len(sigma)} for order {d.n}")
    return Diagram.from_blocks(
        d.n,
        [[sigma[v - 1] if v > 0 else -sigma[-v - 1] for v in b] for b in d.blocks],
    )


@lru_cache(maxsize=1 << 16)
def conjugation_canonical(d: Diagram) -> Diagram:
    """Least relabeling of ``d`` over all n! conjugations."""
    best = d
    best_key = d.sort_key()
    for sigma in permutations(range(1, d.n + 1)):
        c = conjugate_by_permutation(d, sigma)
        key = c.sort_key()
        if key < best_key:
            best, best_key = c, key
    return best
