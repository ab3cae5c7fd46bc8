"""Permutation fundamentals: validation, cycle structure, patterns, symmetries.

Permutations are 1-indexed throughout (one-line notation), so ``p(i)`` is the
value at position ``i`` for ``1 <= i <= n``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class NotABijection(ValueError):
    """The value sequence is not a bijection on {1..n}."""


class NotAnInvolution(ValueError):
    """The permutation is not equal to its own inverse."""


class PositionRole(enum.Enum):
    EXCEDANCE = "E"
    DEFICIENCY = "D"
    FIXED = "F"

    @property
    def letter(self) -> str:
        return self.value


_TOKEN = re.compile(r"\((\d+)\)|(\d)")


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of {1..n} in one-line notation, n >= 1."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.values)
        if n == 0:
            raise NotABijection("empty permutation")
        seen = [False] * n
        for v in self.values:
            if not isinstance(v, int) or not 1 <= v <= n:
                raise NotABijection(f"value {v!r} out of range 1..{n}")
            if seen[v - 1]:
                raise NotABijection(f"value {v} repeated")
            seen[v - 1] = True

    @classmethod
    def of(cls, values: Iterable[int]) -> "Permutation":
        return cls(tuple(values))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse one-line text: space-separated integers, or contiguous digits
        for n <= 9, with parenthesized multi-digit entries allowed (``529416(10)837``).
        """
        text = text.strip()
        if not text:
            raise NotABijection("empty permutation text")
        if any(ch.isspace() for ch in text):
            return cls(tuple(int(tok) for tok in text.split()))
        values = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise NotABijection(f"cannot parse permutation text {text!r}")
            values.append(int(m.group(1) or m.group(2)))
            pos = m.end()
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        """Image of position i (1-indexed)."""
        return self.values[i - 1]

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)

    def compact(self) -> str:
        """Digit string for n <= 9, space-separated otherwise."""
        if len(self) <= 9:
            return "".join(str(v) for v in self.values)
        return str(self)

    def is_involution(self) -> bool:
        return all(self.values[v - 1] == i + 1 for i, v in enumerate(self.values))

    def cycle_decomposition(self) -> "CycleDecomposition":
        if not self.is_involution():
            raise NotAnInvolution(f"{self} is not an involution")
        transpositions = []
        fixed = []
        for i, v in enumerate(self.values, start=1):
            if v == i:
                fixed.append(i)
            elif i < v:
                transpositions.append((i, v))
        return CycleDecomposition(tuple(transpositions), tuple(fixed))

    def contains(self, pattern: "Permutation") -> bool:
        """True iff some subsequence is order-isomorphic to ``pattern``.

        Exhaustive subsequence search with prefix pruning; intended for
        patterns of length <= 4 and desk-scale hosts.
        """
        k = len(pattern)
        n = len(self)
        if k > n:
            return False
        pat = pattern.values
        vals = self.values

        def extend(start: int, chosen: tuple[int, ...]) -> bool:
            j = len(chosen)
            if j == k:
                return True
            for i in range(start, n - (k - j) + 1):
                v = vals[i]
                if all((v > w) == (pat[j] > pat[jj]) for jj, w in enumerate(chosen)):
                    if extend(i + 1, chosen + (v,)):
                        return True
            return False

        return extend(0, ())

    def avoids_all(self, patterns: Iterable["Permutation"]) -> bool:
        return not any(self.contains(q) for q in patterns)

    def reverse_complement(self) -> "Permutation":
        n = len(self)
        return Permutation(tuple(n + 1 - self.values[n - i] for i in range(1, n + 1)))

    def position_roles(self) -> tuple[PositionRole, ...]:
        roles = []
        for i, v in enumerate(self.values, start=1):
            if v > i:
                roles.append(PositionRole.EXCEDANCE)
            elif v < i:
                roles.append(PositionRole.DEFICIENCY)
            else:
                roles.append(PositionRole.FIXED)
        return tuple(roles)


@dataclass(frozen=True, slots=True)
class CycleDecomposition:
    """Transpositions (m_i, M_i) with m_i < M_i sorted by m_i, plus fixed points."""

    transpositions: tuple[tuple[int, int], ...]
    fixed_points: tuple[int, ...]

    @property
    def n(self) -> int:
        return 2 * len(self.transpositions) + len(self.fixed_points)

    def rebuild(self) -> Permutation:
        values = [0] * self.n
        for i in self.fixed_points:
            values[i - 1] = i
        for m, big in self.transpositions:
            values[m - 1] = big
            values[big - 1] = m
        return Permutation(tuple(values))


def standardize(values: Sequence[int]) -> Permutation:
    """Pattern of an integer sequence: replace entries by their ranks."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0] * len(values)
    for r, i in enumerate(order, start=1):
        ranks[i] = r
    return Permutation(tuple(ranks))


def all_involutions(n: int) -> Iterator[Permutation]:
    """All involutions of length n, generated directly from cycle structure.

    Independent of the Motzkin-path machinery, so it can serve as an oracle
    for path-based generation.
    """
    values = [0] * n

    def fill(free: list[int]) -> Iterator[Permutation]:
        if not free:
            yield Permutation(tuple(values))
            return
        i = free[0]
        values[i - 1] = i
        yield from fill(free[1:])
        for idx in range(1, len(free)):
            j = free[idx]
            values[i - 1] = j
            values[j - 1] = i
            yield from fill(free[1:idx] + free[idx + 1 :])

    yield from fill(list(range(1, n + 1)))


def brute_force_contains(p: Permutation, pattern: Permutation) -> bool:
    """Plain combinations-based containment check, used as a test oracle."""
    k = len(pattern)
    if k > len(p):
        return False
    target = pattern.values
    for idxs in combinations(range(len(p)), k):
        window = [p.values[i] for i in idxs]
        if standardize(window).values == target:
            return True
    return False
