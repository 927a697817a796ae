"""Permutations of ``{0, ..., n-1}`` stored as image arrays.

Composition reads left to right: ``compose(f, g)`` applies ``f`` first, then ``g``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from linpique.modarith import check_unit


class PermutationError(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise PermutationError(f"{images} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __len__(self) -> int:
        return len(self.images)

    def __str__(self) -> str:
        return format_cycles(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))


def _same_degree(f: Permutation, g: Permutation) -> None:
    if f.degree != g.degree:
        raise PermutationError(f"degree mismatch: {f.degree} != {g.degree}")


def compose(f: Permutation, g: Permutation) -> Permutation:
    """Return ``h`` with ``h(x) = g(f(x))``."""
    _same_degree(f, g)
    gi = g.images
    return Permutation(tuple(gi[y] for y in f.images))


def inverse(f: Permutation) -> Permutation:
    inv = [0] * f.degree
    for x, y in enumerate(f.images):
        inv[y] = x
    return Permutation(tuple(inv))


def conjugate(s: Permutation, p: Permutation) -> Permutation:
    """Relabel ``s`` along ``p``: the result maps ``p(x)`` to ``p(s(x))``."""
    _same_degree(s, p)
    out = [0] * s.degree
    pi, si = p.images, s.images
    for x in range(s.degree):
        out[pi[x]] = pi[si[x]]
    return Permutation(tuple(out))


def cycles(s: Permutation, include_fixed: bool = False) -> list[tuple[int, ...]]:
    seen = [False] * s.degree
    result = []
    for start in range(s.degree):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = s.images[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = s.images[x]
        if len(cyc) > 1 or include_fixed:
            result.append(tuple(cyc))
    return result


def cycle_decomposition(s: Permutation) -> list[tuple[int, ...]]:
    """Non-trivial cycles, each led by its smallest point, sorted by leader.

    Scanning starts in ascending order, so every cycle is discovered from its
    smallest element and the list comes out already sorted.
    """
    return cycles(s)


def fixed_point_count(s: Permutation) -> int:
    return sum(1 for x, y in enumerate(s.images) if x == y)


def cycle_type(s: Permutation) -> tuple[int, ...]:
    """Cycle lengths including 1-cycles, in descending order."""
    return tuple(sorted((len(c) for c in cycles(s, include_fixed=True)), reverse=True))


def cycle_length_of(s: Permutation) -> list[int]:
    """For each point, the length of the cycle containing it."""
    out = [0] * s.degree
    for c in cycles(s, include_fixed=True):
        for x in c:
            out[x] = len(c)
    return out


@lru_cache(maxsize=1 << 14)
def automorphism_permutation(u: int, n: int) -> Permutation:
    """The permutation ``x -> u*x mod n`` of Z/n."""
    u = check_unit(u, n)
    return Permutation(tuple(u * x % n for x in range(n)))


def format_cycles(s: Permutation) -> str:
    cyc = cycle_decomposition(s)
    if not cyc:
        return "(1)"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


_CYCLE_TEXT = re.compile(r"\s*\(([^()]*)\)\s*")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint cycle notation such as ``"(1 3)(2 6)(5 7)"``.

    ``"(1)"`` and ``""`` both denote the identity. Entries may be separated by
    spaces or commas.
    """
    if degree < 1:
        raise PermutationError("degree must be positive")
    images = list(range(degree))
    seen: set[int] = set()
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _CYCLE_TEXT.match(text, pos)
        if not m:
            raise PermutationError(f"malformed cycle text at position {pos}: {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            points = [int(t) for t in body]
        except ValueError:
            raise PermutationError(f"non-integer entry in cycle ({m.group(1)})") from None
        if not points:
            raise PermutationError("empty cycle")
        if len(points) == 1:
            # "(1)" is the conventional identity; a 1-cycle moves nothing.
            if not 0 <= points[0] < max(degree, 2):
                raise PermutationError(f"entry {points[0]} out of range for degree {degree}")
            continue
        for x in points:
            if not 0 <= x < degree:
                raise PermutationError(f"entry {x} out of range for degree {degree}")
            if x in seen:
                raise PermutationError(f"entry {x} repeated")
            seen.add(x)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
    return Permutation(tuple(images))

