"""Permutations of {1..d}.

Points are 1-based in every public interface. Products act left to right:
``(p * q)(x) == q(p(x))``, i.e. ``x^(pq) = (x^p)^q``.

Internally the image table is a read-only 0-based numpy array so the group
algorithms can compose with fancy indexing.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

import numpy as np

INDEX_DTYPE = np.int32


class PermParseError(ValueError):
    pass


class Permutation:
    """An immutable bijection of {1..degree}."""

    __slots__ = ("_a", "_key")

    def __init__(self, images: Sequence[int]):
        a = np.asarray(images, dtype=INDEX_DTYPE) - 1
        if a.ndim != 1 or a.size == 0:
            raise ValueError("a permutation needs a non-empty image list")
        _check_bijection(a)
        a.setflags(write=False)
        self._a = a
        self._key = None

    @classmethod
    def _wrap(cls, a: np.ndarray) -> "Permutation":
        # trusted constructor: ``a`` is already a 0-based bijection
        p = object.__new__(cls)
        a = np.ascontiguousarray(a, dtype=INDEX_DTYPE)
        a.setflags(write=False)
        p._a = a
        p._key = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls._wrap(np.arange(degree, dtype=INDEX_DTYPE))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        a = np.arange(degree, dtype=INDEX_DTYPE)
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= degree:
                    raise PermParseError(f"point {x} out of range 1..{degree}")
                if x in seen:
                    raise PermParseError(f"point {x} repeated in cycle notation")
                seen.add(x)
            for i, x in enumerate(cyc):
                a[x - 1] = cyc[(i + 1) % len(cyc)] - 1
        return cls._wrap(a)

    @property
    def degree(self) -> int:
        return int(self._a.size)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(int(x) + 1 for x in self._a)

    @property
    def array(self) -> np.ndarray:
        """The 0-based image table (read-only)."""
        return self._a

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.degree:
            raise ValueError(f"point {x} out of range 1..{self.degree}")
        return int(self._a[x - 1]) + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return inverse(self) ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def key(self) -> bytes:
        if self._key is None:
            self._key = self._a.tobytes()
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.degree == other.degree and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def is_identity(self) -> bool:
        return bool(np.all(self._a == np.arange(self.degree)))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for i in range(self.degree):
            if seen[i] or self._a[i] == i:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = int(self._a[j])
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def support(self) -> list[int]:
        return [i + 1 for i in np.flatnonzero(self._a != np.arange(self.degree))]

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)}, degree={self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)


def _check_bijection(a: np.ndarray) -> None:
    n = a.size
    if a.min() < 0 or a.max() >= n:
        raise PermParseError(f"image out of range 1..{n}")
    if np.unique(a).size != n:
        raise PermParseError("image list is not a bijection")


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation._wrap(q._a[p._a])


def inverse(p: Permutation) -> Permutation:
    inv = np.empty_like(p._a)
    inv[p._a] = np.arange(p.degree, dtype=INDEX_DTYPE)
    return Permutation._wrap(inv)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int) -> Permutation:
    """Parse ``(1,2,3)(4,5)`` cycle notation or a ``[2,3,1,5,4]`` image list."""
    if degree < 1:
        raise PermParseError("degree must be positive")
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise PermParseError(f"unterminated image list: {text!r}")
        body = s[1:-1].strip()
        try:
            images = [int(t) for t in body.split(",")] if body else []
        except ValueError:
            raise PermParseError(f"non-integer entry in image list: {text!r}") from None
        if len(images) != degree:
            raise PermParseError(f"image list has {len(images)} entries, expected {degree}")
        return Permutation(images)
    if not s.startswith("("):
        raise PermParseError(f"unrecognised permutation syntax: {text!r}")
    pos = 0
    cycles = []
    compact = re.sub(r"\s+", "", s)
    while pos < len(compact):
        m = _CYCLE_RE.match(compact, pos)
        if m is None:
            raise PermParseError(f"malformed cycle notation at offset {pos}: {text!r}")
        body = m.group(1)
        if body:
            try:
                cycles.append([int(t) for t in body.split(",")])
            except ValueError:
                raise PermParseError(f"non-integer point in {text!r}") from None
        pos = m.end()
    return Permutation.from_cycles(cycles, degree)


def format_cycles(p: Permutation) -> str:
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)


def format_images(p: Permutation) -> str:
    return "[" + ",".join(map(str, p.images)) + "]"
