"""Labelled Motzkin paths and the bijection with involutions.

A path is a word over U/H/D that stays at height >= 0 and ends at height 0.
Every down step D starting at height h carries a label 1 <= lambda <= h.
The unitary labelling has every label 1 and corresponds to involutions
avoiding 4321; the maximal labelling has lambda = h and corresponds to
involutions avoiding 3412.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .perms import Permutation


class InvalidPath(ValueError):
    """The step/label data does not describe a labelled Motzkin path."""


class NegativeHeight(InvalidPath):
    pass


class NonzeroFinalHeight(InvalidPath):
    pass


class LabelOutOfRange(InvalidPath):
    pass


class LabellingKind(enum.Enum):
    UNITARY = "unitary"
    MAXIMAL = "maximal"
    OTHER = "other"


_STEP_TOKEN = re.compile(r"([UHD])(?:\[(\d+)\])?")


@dataclass(frozen=True, slots=True)
class LabelledMotzkinPath:
    """Steps as a U/H/D string; labels in down-step order (sparse storage)."""

    steps: str
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.steps:
            raise InvalidPath("empty path")
        if any(c not in "UHD" for c in self.steps):
            raise InvalidPath(f"bad step characters in {self.steps!r}")
        down_heights = []
        h = 0
        for c in self.steps:
            if c == "U":
                h += 1
            elif c == "D":
                down_heights.append(h)
                h -= 1
                if h < 0:
                    raise NegativeHeight(f"path {self.steps} dips below the axis")
        if h != 0:
            raise NonzeroFinalHeight(f"path {self.steps} ends at height {h}")
        if len(self.labels) != len(down_heights):
            raise InvalidPath(
                f"{len(down_heights)} down steps but {len(self.labels)} labels"
            )
        for lam, height in zip(self.labels, down_heights):
            if not 1 <= lam <= height:
                raise LabelOutOfRange(f"label {lam} at height {height}")

    @classmethod
    def unitary(cls, steps: str) -> "LabelledMotzkinPath":
        return cls(steps, tuple(1 for c in steps if c == "D"))

    @classmethod
    def maximal(cls, steps: str) -> "LabelledMotzkinPath":
        labels = []
        h = 0
        for c in steps:
            if c == "U":
                h += 1
            elif c == "D":
                labels.append(h)
                h -= 1
        return cls(steps, tuple(labels))

    @classmethod
    def parse(cls, text: str) -> "LabelledMotzkinPath":
        """Parse ``UUD[2]UHUD[3]D[2]D[1]``; an unbracketed D means label 1."""
        text = text.strip()
        steps = []
        labels = []
        pos = 0
        while pos < len(text):
            m = _STEP_TOKEN.match(text, pos)
            if not m:
                raise InvalidPath(f"cannot parse path text {text!r}")
            step, label = m.group(1), m.group(2)
            if label is not None and step != "D":
                raise InvalidPath("only down steps carry labels")
            steps.append(step)
            if step == "D":
                labels.append(int(label) if label is not None else 1)
            pos = m.end()
        return cls("".join(steps), tuple(labels))

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.text()

    def text(self) -> str:
        """U/H/D word; labels shown in brackets unless the path is unitary."""
        if self.kind() is LabellingKind.UNITARY:
            return self.steps
        out = []
        d = 0
        for c in self.steps:
            if c == "D":
                out.append(f"D[{self.labels[d]}]")
                d += 1
            else:
                out.append(c)
        return "".join(out)

    def heights(self) -> tuple[int, ...]:
        """Height at the start of each step."""
        out = []
        h = 0
        for c in self.steps:
            out.append(h)
            if c == "U":
                h += 1
            elif c == "D":
                h -= 1
        return tuple(out)

    def down_heights(self) -> tuple[int, ...]:
        return tuple(h for h, c in zip(self.heights(), self.steps) if c == "D")

    def label_map(self) -> dict[int, int]:
        """Label per down-step position (1-indexed path positions)."""
        out = {}
        d = 0
        for i, c in enumerate(self.steps, start=1):
            if c == "D":
                out[i] = self.labels[d]
                d += 1
        return out

    def has_unitary_labels(self) -> bool:
        return all(lam == 1 for lam in self.labels)

    def has_maximal_labels(self) -> bool:
        return self.labels == self.down_heights()

    def kind(self) -> LabellingKind:
        """Classification token; all-ones labellings read as unitary even
        where the two notions coincide (use the predicates to distinguish).
        """
        if self.has_unitary_labels():
            return LabellingKind.UNITARY
        if self.has_maximal_labels():
            return LabellingKind.MAXIMAL
        return LabellingKind.OTHER

    def is_irreducible(self) -> bool:
        """True iff the path touches the axis only at its endpoints."""
        h = 0
        for c in self.steps[:-1]:
            h += {"U": 1, "H": 0, "D": -1}[c]
            if h == 0:
                return False
        return True


def labelling_kind(path: LabelledMotzkinPath) -> LabellingKind:
    return path.kind()


def is_irreducible(path: LabelledMotzkinPath) -> bool:
    return path.is_irreducible()


def path_of_involution(p: Permutation) -> LabelledMotzkinPath:
    """Encode an involution: H at fixed points, U at transposition minima,
    D at maxima, the D at position M labelled by the rank of its partner m
    among the still-open minima.
    """
    p.cycle_decomposition()  # raises NotAnInvolution for non-involutions
    steps = []
    labels = []
    open_minima: list[int] = []  # ascending, since positions open left to right
    for i, v in enumerate(p.values, start=1):
        if v == i:
            steps.append("H")
        elif v > i:
            steps.append("U")
            open_minima.append(i)
        else:
            steps.append("D")
            rank = open_minima.index(v) + 1
            labels.append(rank)
            open_minima.pop(rank - 1)
    return LabelledMotzkinPath("".join(steps), tuple(labels))


def involution_of_path(path: LabelledMotzkinPath) -> Permutation:
    """Decode: a down step with label lambda closes the lambda-th smallest
    open up-step position.  Label 1 everywhere is the first-in-first-out rule;
    maximal labels give the matched-parentheses (same height) rule.
    """
    values = [0] * len(path)
    open_minima: list[int] = []
    d = 0
    for i, c in enumerate(path.steps, start=1):
        if c == "H":
            values[i - 1] = i
        elif c == "U":
            open_minima.append(i)
        else:
            m = open_minima.pop(path.labels[d] - 1)
            d += 1
            values[m - 1] = i
            values[i - 1] = m
    return Permutation(tuple(values))


def reflect_path(path: LabelledMotzkinPath) -> LabelledMotzkinPath:
    """Path of the reverse-complement: steps reverse with U and D swapped,
    labels recomputed from the reflected involution.
    """
    return path_of_involution(involution_of_path(path).reverse_complement())


def _step_words(n: int) -> Iterator[str]:
    """All Motzkin words of length n in ascending ASCII order (D < H < U)."""
    buf: list[str] = []

    def rec(h: int, remaining: int) -> Iterator[str]:
        if remaining == 0:
            if h == 0:
                yield "".join(buf)
            return
        if h > 0:
            buf.append("D")
            yield from rec(h - 1, remaining - 1)
            buf.pop()
        if h <= remaining - 1:
            buf.append("H")
            yield from rec(h, remaining - 1)
            buf.pop()
        if h + 1 <= remaining - 1:
            buf.append("U")
            yield from rec(h + 1, remaining - 1)
            buf.pop()

    yield from rec(0, n)


def enumerate_paths(
    n: int, kind: LabellingKind | None = None
) -> Iterator[LabelledMotzkinPath]:
    """All labelled Motzkin paths of length n with the requested labelling
    (None means every labelling), ordered by step word (ASCII) then labels.
    """
    if n < 1:
        raise ValueError("path length must be >= 1")
    for word in _step_words(n):
        if kind is LabellingKind.UNITARY:
            yield LabelledMotzkinPath.unitary(word)
        elif kind is LabellingKind.MAXIMAL:
            yield LabelledMotzkinPath.maximal(word)
        elif kind is None:
            down_heights = []
            h = 0
            for c in word:
                if c == "U":
                    h += 1
                elif c == "D":
                    down_heights.append(h)
                    h -= 1
            for labels in product(*(range(1, dh + 1) for dh in down_heights)):
                yield LabelledMotzkinPath(word, labels)
        else:
            raise ValueError(f"cannot enumerate labelling kind {kind}")


def ascii_drawing(path: LabelledMotzkinPath) -> str:
    """Plain-text rendering; a label line is added unless the path is unitary."""
    heights = path.heights()
    cells: dict[tuple[int, int], str] = {}
    top = 0
    for i, (c, h) in enumerate(zip(path.steps, heights)):
        if c == "U":
            row = h
            cells[(row, i)] = "/"
        elif c == "D":
            row = h - 1
            cells[(row, i)] = "\\"
        else:
            row = h
            cells[(row, i)] = "_"
        top = max(top, row)
    lines = []
    for row in range(top, -1, -1):
        lines.append("".join(cells.get((row, i), " ") for i in range(len(path))).rstrip())
    if path.kind() is not LabellingKind.UNITARY:
        label_map = path.label_map()
        lines.append(
            "".join(str(label_map[i]) if i in label_map else " " for i in range(1, len(path) + 1)).rstrip()
        )
    return "\n".join(lines)
