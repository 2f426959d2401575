"""Irreducible characters of the partition algebra for indeterminate ``r``.

For a shape ``lam`` with ``|lam| = k <= n`` the cell module has basis
(half-diagram) x (Specht module of ``lam``). A half-diagram is a set
partition of ``1..n`` with ``k`` marked blocks, labeled ``1..k`` by least
element. A diagram acts monomially: each half-diagram goes to another
half-diagram times a power of ``r`` and a permutation of the marked labels,
or to zero. Only fixed half-diagrams contribute to the trace, each with
``r^loops`` times the symmetric-group character at the label permutation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .diagrams import (
    Diagram,
    _UnionFind,
    conjugation_canonical,
    enumerate_diagrams,
    set_partitions,
)
from .errors import OrderMismatchError, ShapeLevelError, check_order
from .scalars import Poly
from .symchar import Partition, all_partitions, as_partition, cycle_type, hook_dimension, mn_character

TABLE_LIMIT = 4
# n! relabelings per lookup; beyond this the raw diagram is the cache key
CANONICAL_LIMIT = 5


@dataclass(frozen=True)
class ShapeIndex:
    shape: Partition
    level: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "shape", as_partition(self.shape))
        if self.level < 1:
            raise ShapeLevelError(f"level must be positive, got {self.level}")
        if self.size > self.level:
            raise ShapeLevelError(
                f"shape {list(self.shape)} has size {self.size} > level {self.level}"
            )

    @property
    def size(self) -> int:
        return sum(self.shape)

    def __str__(self) -> str:
        return json.dumps(list(self.shape))


def shapes(n: int) -> list[ShapeIndex]:
    """Every shape index at level n, by size then reverse-lexicographically."""
    return [ShapeIndex(lam, n) for k in range(n + 1) for lam in all_partitions(k)]


@dataclass(frozen=True)
class HalfDiagram:
    n: int
    blocks: tuple[tuple[int, ...], ...]
    marked: frozenset[tuple[int, ...]] = field(default_factory=frozenset)

    @property
    def k(self) -> int:
        return len(self.marked)

    def labels(self) -> list[tuple[int, ...]]:
        """Marked blocks in label order (ascending least element)."""
        return [b for b in self.blocks if b in self.marked]

    def __str__(self) -> str:
        parts = []
        for b in self.blocks:
            s = "{" + ",".join(map(str, b)) + "}"
            parts.append(s + "*" if b in self.marked else s)
        return "{" + ",".join(parts) + "}"


@dataclass(frozen=True)
class ActionResult:
    image: HalfDiagram
    loops: int
    induced_perm: tuple[int, ...]


@lru_cache(maxsize=None)
def _half_diagrams(n: int, k: int) -> tuple[HalfDiagram, ...]:
    out = []
    for blocks in set_partitions(list(range(1, n + 1))):
        bt = tuple(tuple(b) for b in blocks)
        for chosen in combinations(bt, k):
            out.append(HalfDiagram(n, bt, frozenset(chosen)))
    return tuple(out)


def enumerate_half_diagrams(n: int, k: int) -> list[HalfDiagram]:
    if not 0 <= k <= n:
        raise ShapeLevelError(f"need 0 <= k <= n, got n={n}, k={k}")
    return list(_half_diagrams(n, k))


def act(d: Diagram, h: HalfDiagram) -> ActionResult | None:
    """Left action of ``d`` on ``h``; None means the action gives zero."""
    n = d.n
    if h.n != n:
        raise OrderMismatchError(f"diagram order {n} vs half-diagram order {h.n}")
    # slots: [0, n) top row of d, [n, 2n) bottom row of d glued to h
    uf = _UnionFind(2 * n)
    for b in d.blocks:
        slots = [v - 1 if v > 0 else n - v - 1 for v in b]
        for s in slots[1:]:
            uf.union(slots[0], s)
    for b in h.blocks:
        for v in b[1:]:
            uf.union(n + b[0] - 1, n + v - 1)

    label_of = {b: i for i, b in enumerate(h.labels(), start=1)}
    marks: dict[int, int] = {}
    for b, label in label_of.items():
        root = uf.find(n + b[0] - 1)
        if root in marks:
            return None  # two marked blocks merge
        marks[root] = label
    tops: dict[int, list[int]] = {}
    for i in range(n):
        tops.setdefault(uf.find(i), []).append(i + 1)
    if any(root not in tops for root in marks):
        return None  # marked block cut off from the top row
    middle_roots = {uf.find(n + b[0] - 1) for b in h.blocks}
    loops = len(middle_roots - tops.keys())

    blocks = sorted((tuple(vs) for vs in tops.values()), key=lambda b: b[0])
    marked_blocks = {tuple(tops[root]): old for root, old in marks.items()}
    induced = [0] * len(label_of)
    new_label = 0
    for b in blocks:
        if b in marked_blocks:
            new_label += 1
            induced[marked_blocks[b] - 1] = new_label
    image = HalfDiagram(n, tuple(blocks), frozenset(marked_blocks))
    return ActionResult(image, loops, tuple(induced))


@lru_cache(maxsize=None)
def stirling2(n: int, t: int) -> int:
    """Stirling number of the second kind S(n, t)."""
    if n == t:
        return 1
    if t == 0 or t > n:
        return 0
    return t * stirling2(n - 1, t) + stirling2(n - 1, t - 1)


def dimension(ix: ShapeIndex) -> int:
    """Dimension of the irreducible module indexed by ``ix``."""
    k = ix.size
    count = sum(stirling2(ix.level, t) * comb(t, k) for t in range(k, ix.level + 1))
    return hook_dimension(ix.shape) * count


def _trace(shape: Partition, d: Diagram) -> Poly:
    coeffs: dict[int, int] = {}
    for h in _half_diagrams(d.n, sum(shape)):
        res = act(d, h)
        if res is None or res.image != h:
            continue
        coeffs[res.loops] = coeffs.get(res.loops, 0) + mn_character(
            shape, cycle_type(res.induced_perm)
        )
    if not coeffs:
        return Poly()
    return Poly([coeffs.get(i, 0) for i in range(max(coeffs) + 1)])


@lru_cache(maxsize=None)
def _cached_trace(shape: Partition, key: Diagram) -> Poly:
    return _trace(shape, key)


def character(ix: ShapeIndex, d: Diagram) -> Poly:
    """Irreducible character ``ix`` at ``d``, an integer polynomial in ``r``."""
    if ix.level != d.n:
        raise ShapeLevelError(f"shape at level {ix.level} applied to diagram of order {d.n}")
    key = conjugation_canonical(d) if d.n <= CANONICAL_LIMIT else d
    return _cached_trace(ix.shape, key)


def character_table(n: int) -> dict[tuple[ShapeIndex, Diagram], Poly]:
    """Every character value at level n, diagrams in enumeration order."""
    check_order(n, TABLE_LIMIT, "character_table")
    diagrams = list(enumerate_diagrams(n))
    return {(ix, d): character(ix, d) for ix in shapes(n) for d in diagrams}


def table_to_json(table: dict[tuple[ShapeIndex, Diagram], Poly]) -> list[dict]:
    return [
        {"shape": list(ix.shape), "diagram": d.to_json(), "value": v.to_json()}
        for (ix, d), v in table.items()
    ]


def shape_from_json(data: Sequence[int] | str, level: int) -> ShapeIndex:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed shape {data!r}") from exc
    if not isinstance(data, list):
        raise ValueError(f"shape must be a JSON array, got {data!r}")
    return ShapeIndex(as_partition(data), level)
