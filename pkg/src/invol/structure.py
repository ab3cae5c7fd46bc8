"""Intervals, simplicity, substitution decomposition, and the fine classes.

Involutions of length >= 2 split into: inflations of 12 (sum-decomposable),
inflations of 21 (skew-decomposable), simple permutations of length > 2, and
proper inflations of such simples.  Length 1 is its own class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .perms import NotAnInvolution, Permutation, standardize
from .paths import LabelledMotzkinPath, involution_of_path, path_of_involution


class OutOfDomain(ValueError):
    """Operation applied outside its proven domain."""


class ArityMismatch(ValueError):
    pass


class PositionOutOfRange(ValueError):
    pass


class NotADyckPath(ValueError):
    pass


class NotIrreducible(ValueError):
    pass


class Undecomposable(ValueError):
    """Length-1 permutations have no skeleton decomposition."""


class FineClass(enum.Enum):
    ONE = "one"
    TYPE12 = "type12"
    TYPE21 = "type21"
    SIMPLE = "simple"
    INFLATION_OF_SIMPLE = "inflation_of_simple"

    @property
    def token(self) -> str:
        return self.value


def proper_intervals(p: Permutation) -> list[tuple[int, int]]:
    """All windows [lo, hi] of length 2..n-1 whose image is a contiguous
    value range.  Brute-force window scan with incremental min/max.
    """
    n = len(p)
    out = []
    for lo in range(1, n + 1):
        vmin = vmax = p(lo)
        for hi in range(lo + 1, n + 1):
            v = p(hi)
            vmin = min(vmin, v)
            vmax = max(vmax, v)
            if hi - lo == n - 1:
                break
            if vmax - vmin == hi - lo:
                out.append((lo, hi))
    return out


def is_simple(p: Permutation, include_short: bool = False) -> bool:
    """No proper intervals and length >= 4; ``include_short`` also admits the
    degenerate simples of length 1 and 2.
    """
    n = len(p)
    if n < 4:
        return include_short and n <= 2
    return not proper_intervals(p)


def is_simple_via_path(p: Permutation) -> bool:
    """Simplicity through the path criteria, valid on involutions avoiding 4321:
    the path is irreducible, has no adjacent horizontal steps, and no adjacent
    up-step pair maps to an adjacent down-step pair.
    """
    if not p.is_involution():
        raise OutOfDomain(f"{p} is not an involution")
    if p.contains(Permutation.parse("4321")):
        raise OutOfDomain(f"{p} contains 4321")
    if len(p) < 4:
        return False
    path = path_of_involution(p)
    if not path.is_irreducible():
        return False
    if "HH" in path.steps:
        return False
    ups = [i for i, c in enumerate(path.steps) if c == "U"]
    downs = [i for i, c in enumerate(path.steps) if c == "D"]
    for i in range(len(ups) - 1):
        if ups[i + 1] == ups[i] + 1 and downs[i + 1] == downs[i] + 1:
            return False
    return True


def connected_components(p: Permutation) -> list[Permutation]:
    """Finest split into consecutive windows mapped to themselves, each
    returned standardized.
    """
    out = []
    start = 1
    reach = 0
    for i in range(1, len(p) + 1):
        reach = max(reach, i, p(i))
        if reach == i:
            out.append(Permutation(tuple(v - start + 1 for v in p.values[start - 1 : i])))
            start = i + 1
    return out


def sum_decomposable(p: Permutation) -> bool:
    """True iff some proper prefix maps onto the bottom values (inflation of 12)."""
    top = 0
    for i in range(1, len(p)):
        top = max(top, p(i))
        if top == i:
            return True
    return False


def skew_decomposable(p: Permutation) -> bool:
    """True iff some proper prefix maps onto the top values (inflation of 21)."""
    n = len(p)
    bottom = n + 1
    for i in range(1, n):
        bottom = min(bottom, p(i))
        if bottom == n - i + 1:
            return True
    return False


def classify(p: Permutation) -> FineClass:
    if not p.is_involution():
        raise NotAnInvolution(f"{p} is not an involution")
    if len(p) == 1:
        return FineClass.ONE
    if sum_decomposable(p):
        return FineClass.TYPE12
    if skew_decomposable(p):
        return FineClass.TYPE21
    if is_simple(p):
        return FineClass.SIMPLE
    return FineClass.INFLATION_OF_SIMPLE


@dataclass(frozen=True, slots=True)
class Decomposition:
    """Skeleton (12, 21, or a simple permutation) with standardized blocks."""

    skeleton: Permutation
    blocks: tuple[Permutation, ...]

    def sketch(self) -> str:
        inner = ", ".join(b.compact() for b in self.blocks)
        return f"{self.skeleton.compact()}[{inner}]"


def inflate(skeleton: Permutation, blocks: Sequence[Permutation]) -> Permutation:
    """Replace each skeleton entry by a block with the given pattern."""
    k = len(skeleton)
    if len(blocks) != k:
        raise ArityMismatch(f"skeleton length {k} but {len(blocks)} blocks")
    lengths = [len(b) for b in blocks]
    offsets = [0] * k
    acc = 0
    for i in sorted(range(k), key=lambda i: skeleton.values[i]):
        offsets[i] = acc
        acc += lengths[i]
    values: list[int] = []
    for i in range(k):
        values.extend(offsets[i] + v for v in blocks[i].values)
    return Permutation(tuple(values))


def skeleton_decomposition(p: Permutation) -> Decomposition:
    """Substitution decomposition.  Sum/skew cases use the shortest first
    block; otherwise the skeleton is the (unique) simple quotient over the
    maximal proper intervals.
    """
    n = len(p)
    if n == 1:
        raise Undecomposable("length-1 permutation")
    if sum_decomposable(p):
        top = 0
        for i in range(1, n):
            top = max(top, p(i))
            if top == i:
                k = i
                break
        first = Permutation(p.values[:k])
        rest = Permutation(tuple(v - k for v in p.values[k:]))
        return Decomposition(Permutation.parse("12"), (first, rest))
    if skew_decomposable(p):
        bottom = n + 1
        for i in range(1, n):
            bottom = min(bottom, p(i))
            if bottom == n - i + 1:
                k = i
                break
        first = Permutation(tuple(v - (n - k) for v in p.values[:k]))
        rest = Permutation(p.values[k:])
        return Decomposition(Permutation.parse("21"), (first, rest))
    intervals = proper_intervals(p)
    if not intervals:
        one = Permutation.parse("1")
        return Decomposition(p, tuple(one for _ in range(n)))
    maximal = [
        iv
        for iv in intervals
        if not any(jv != iv and jv[0] <= iv[0] and iv[1] <= jv[1] for jv in intervals)
    ]
    maximal.sort()
    windows: list[tuple[int, int]] = []
    pos = 1
    for lo, hi in maximal:
        if lo < pos:
            raise AssertionError(f"overlapping maximal intervals in {p}")
        windows.extend((i, i) for i in range(pos, lo))
        windows.append((lo, hi))
        pos = hi + 1
    windows.extend((i, i) for i in range(pos, n + 1))
    skeleton = standardize([p(lo) for lo, _ in windows])
    blocks = tuple(standardize(p.values[lo - 1 : hi]) for lo, hi in windows)
    if not is_simple(skeleton) or inflate(skeleton, blocks) != p:
        raise AssertionError(f"bad substitution decomposition for {p}")
    return Decomposition(skeleton, blocks)


def type21_normal_form(p: Permutation) -> tuple[int, ...] | None:
    """Report (k,) if p = 21[1..k, 1..k], or (k, m) if p = 321[1..k, 1..m, 1..k]."""
    n = len(p)
    if n % 2 == 0:
        k = n // 2
        ident = Permutation.identity(k)
        if p == inflate(Permutation.parse("21"), (ident, ident)):
            return (k,)
    for k in range(1, (n - 1) // 2 + 1):
        m = n - 2 * k
        outer = Permutation.identity(k)
        if p == inflate(Permutation.parse("321"), (outer, Permutation.identity(m), outer)):
            return (k, m)
    return None


def insert_fixed_point(p: Permutation, slot: int) -> Permutation:
    """Involution whose path is p's path with a horizontal step inserted so
    that it becomes step number ``slot`` (1 <= slot <= n+1).
    """
    if not 1 <= slot <= len(p) + 1:
        raise PositionOutOfRange(f"slot {slot} outside 1..{len(p) + 1}")
    path = path_of_involution(p)
    steps = path.steps[: slot - 1] + "H" + path.steps[slot - 1 :]
    return involution_of_path(LabelledMotzkinPath(steps, path.labels))


def break_consecutiveness(path: LabelledMotzkinPath) -> LabelledMotzkinPath:
    """Insert the fewest horizontal steps into an irreducible unitary Dyck
    path so that the decoded involution is simple.  Candidate insertion sets
    are searched smallest-first, then in slot order, and validated against the
    brute-force simplicity oracle.
    """
    if "H" in path.steps:
        raise NotADyckPath(f"{path.steps} contains horizontal steps")
    if any(lam != 1 for lam in path.labels):
        raise NotADyckPath("labelling is not unitary")
    if not path.is_irreducible():
        raise NotIrreducible(path.steps)
    n = len(path)
    for k in range(n + 2):
        for slots in combinations(range(1, n + 2), k):
            steps = path.steps
            for offset, slot in enumerate(slots):
                pos = slot + offset - 1
                steps = steps[:pos] + "H" + steps[pos:]
            candidate = LabelledMotzkinPath.unitary(steps)
            if is_simple(involution_of_path(candidate), include_short=True):
                return candidate
    raise AssertionError(f"no insertion set found for {path.steps}")


def has_adjacent_fixed_points(p: Permutation) -> bool:
    return any(p(i) == i and p(i + 1) == i + 1 for i in range(1, len(p)))


def symmetric_connection_positions(p: Permutation) -> list[int]:
    """Positions q where excedances at q, q+1 carry consecutive values, i.e.
    an upper connection whose mirror is a lower connection.
    """
    return [
        q
        for q in range(1, len(p))
        if p(q) > q and p(q + 1) > q + 1 and abs(p(q) - p(q + 1)) == 1
    ]
