"""Integer partitions and irreducible characters of the symmetric group.

Partitions are plain tuples of non-increasing positive ints; ``()`` is the
empty partition. Characters are evaluated with the Murnaghan-Nakayama rule on
beta-sets: removing a border strip of length ``k`` is moving a bead from
position ``b`` to the empty position ``b - k``, with sign ``(-1)`` to the
number of beads jumped over.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

from .errors import ShapeLevelError

Partition = tuple[int, ...]


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate and freeze a partition given as any int sequence."""
    out = tuple(parts)
    for p in out:
        if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
            raise ValueError(f"partition parts must be positive integers, got {list(parts)}")
    if any(a < b for a, b in zip(out, out[1:])):
        raise ValueError(f"partition parts must be non-increasing, got {list(parts)}")
    return out


def all_partitions(n: int) -> list[Partition]:
    """Partitions of n in reverse-lexicographic order: (n) first, (1^n) last."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")

    def gen(remaining: int, cap: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return list(gen(n, n))


def cycle_type(sigma: Sequence[int]) -> Partition:
    """Cycle lengths, sorted decreasingly, of a one-line permutation of 1..n."""
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(sigma)} is not a permutation of 1..{n}")
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = sigma[i] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def _beta_set(lam: Partition, length: int) -> frozenset[int]:
    padded = list(lam) + [0] * (length - len(lam))
    return frozenset(padded[i] + length - 1 - i for i in range(length))


@lru_cache(maxsize=None)
def _mn(beta: frozenset[int], mu: Partition) -> int:
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        if b - k < 0 or (b - k) in beta:
            continue
        jumped = sum(1 for c in beta if b - k < c < b)
        sign = -1 if jumped % 2 else 1
        total += sign * _mn((beta - {b}) | {b - k}, rest)
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Value of the irreducible character ``lam`` on the class of cycle type ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ShapeLevelError(f"|{lam}| = {sum(lam)} differs from |{mu}| = {sum(mu)}")
    # removing larger strips first prunes the recursion hardest
    return _mn(_beta_set(lam, len(lam)), tuple(sorted(mu, reverse=True)))


def conjugate_partition(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0] if lam else 0))


def hook_lengths(lam: Sequence[int]) -> list[int]:
    lam = as_partition(lam)
    cols = conjugate_partition(lam)
    return [lam[i] - j + cols[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def hook_dimension(lam: Sequence[int]) -> int:
    """Dimension of the Specht module, by the hook-length formula."""
    lam = as_partition(lam)
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def centralizer_size(mu: Sequence[int]) -> int:
    """``z_mu = prod i^m_i m_i!``, the order of the centralizer of a permutation of type mu."""
    return prod(i**m * factorial(m) for i, m in Counter(mu).items())
