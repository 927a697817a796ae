"""Z-linear piques ``x*y = rho*x + lambda*y`` on Z/n and words in the free group <R, L>.

The representation ``R -> rho, L -> lambda`` lands in the abelian group (Z/n)*, so a
word acts through its exponent sums alone; words are reduced to the pair ``(a, b)``
on parsing and the free group is never built.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field

from linpique.modarith import check_modulus, check_unit, unit_order
from linpique.permutation import Permutation, automorphism_permutation


@dataclass(frozen=True, order=True)
class LinearPique:
    n: int
    rho: int
    lam: int

    def __post_init__(self):
        check_modulus(self.n)
        object.__setattr__(self, "rho", check_unit(self.rho, self.n))
        object.__setattr__(self, "lam", check_unit(self.lam, self.n))

    def __str__(self) -> str:
        return f"{self.n}:{self.rho}:{self.lam}"

    @property
    def formula(self) -> str:
        """The multiplication written like ``5x+3y``."""
        r = "" if self.rho == 1 else str(self.rho)
        l = "" if self.lam == 1 else str(self.lam)
        return f"{r}x+{l}y"

    def to_record(self) -> dict:
        return {"modulus": self.n, "rho": self.rho, "lambda": self.lam}

    @classmethod
    def from_record(cls, record: dict) -> LinearPique:
        try:
            return cls(int(record["modulus"]), int(record["rho"]), int(record["lambda"]))
        except KeyError as exc:
            raise ValueError(f"pique record missing field {exc}") from None


_LITERAL = re.compile(r"^\s*(-?\d+)\s*:\s*(-?\d+)\s*:\s*(-?\d+)\s*$")


def parse_pique(text: str) -> LinearPique:
    """Parse ``"n:rho:lambda"`` or a JSON record ``{"modulus":..,"rho":..,"lambda":..}``."""
    m = _LITERAL.match(text)
    if m:
        return LinearPique(*(int(g) for g in m.groups()))
    if text.lstrip().startswith("{"):
        try:
            record = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"bad pique record: {exc}") from None
        return LinearPique.from_record(record)
    raise ValueError(f"bad pique literal {text!r}; expected n:rho:lambda")


def mul(P: LinearPique, x: int, y: int) -> int:
    return (P.rho * x + P.lam * y) % P.n


def rdiv(P: LinearPique, x: int, y: int) -> int:
    """``x / y = (x - lambda*y) * rho^-1``."""
    return (x - P.lam * y) * pow(P.rho, -1, P.n) % P.n


def ldiv(P: LinearPique, x: int, y: int) -> int:
    """``x \\ y = (y - rho*x) * lambda^-1``."""
    return (y - P.rho * x) * pow(P.lam, -1, P.n) % P.n


def verify_quasigroup(P: LinearPique) -> bool:
    """Check both cancellation laws and both division laws on every pair, plus ``0*0 = 0``."""
    n = P.n
    if mul(P, 0, 0) != 0:
        return False
    for x in range(n):
        for y in range(n):
            if ldiv(P, y, mul(P, y, x)) != x or rdiv(P, mul(P, x, y), y) != x:
                return False
            if mul(P, y, ldiv(P, y, x)) != x or mul(P, rdiv(P, x, y), y) != x:
                return False
    return True


def opposite(P: LinearPique) -> LinearPique:
    return LinearPique(P.n, P.lam, P.rho)


_SUPERSCRIPT = str.maketrans("-0123456789", "⁻⁰¹²³⁴⁵⁶⁷⁸⁹")


@dataclass(frozen=True, order=True)
class Word:
    """Element of <R, L> reduced to exponent sums ``R^a L^b``."""

    a: int = 0
    b: int = 0
    text: str | None = field(default=None, compare=False)

    def __mul__(self, other: Word) -> Word:
        return Word(self.a + other.a, self.b + other.b)

    @property
    def exponents(self) -> tuple[int, int]:
        return (self.a, self.b)

    def label(self, unicode: bool = True) -> str:
        """Canonical name: ``RL²`` (unicode) or ``RL2`` (ASCII, reparsable)."""
        if self.a == 0 and self.b == 0:
            return "1"
        out = []
        for letter, e in (("R", self.a), ("L", self.b)):
            if e == 0:
                continue
            out.append(letter)
            if e != 1:
                out.append(str(e).translate(_SUPERSCRIPT) if unicode else str(e))
        return "".join(out)

    def __str__(self) -> str:
        return self.label()


_TOKEN = re.compile(r"([RL])(?:\^?(-?\d+))?")


def parse_word(text: str) -> Word:
    """Parse ``RL2``, ``R^2L^-1``, ``R-1L2``, ``1`` (empty word); case-insensitive."""
    src = text.strip()
    body = src.upper().replace(" ", "").replace("⁻¹", "-1")
    if body in ("", "1", "E"):
        return Word(0, 0, src)
    a = b = 0
    pos = 0
    while pos < len(body):
        m = _TOKEN.match(body, pos)
        if not m:
            raise ValueError(f"bad word syntax {text!r} at position {pos}")
        e = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(1) == "R":
            a += e
        else:
            b += e
        pos = m.end()
    return Word(a, b, src)


def word_eval(P: LinearPique, w: Word) -> int:
    """Image ``rho^a * lambda^b mod n`` of the word under R -> rho, L -> lambda."""
    return pow(P.rho, w.a, P.n) * pow(P.lam, w.b, P.n) % P.n


def word_permutation(P: LinearPique, w: Word) -> Permutation:
    return automorphism_permutation(word_eval(P, w), P.n)


def inner_group(P: LinearPique) -> frozenset[int]:
    """Subgroup of (Z/n)* generated by rho and lambda, by breadth-first closure."""
    n = P.n
    seen = {1 % n}
    queue = deque(seen)
    while queue:
        g = queue.popleft()
        for h in (P.rho, P.lam):
            k = g * h % n
            if k not in seen:
                seen.add(k)
                queue.append(k)
    return frozenset(seen)


def inner_group_is_cyclic(P: LinearPique) -> bool:
    G = inner_group(P)
    return any(unit_order(g, P.n) == len(G) for g in G)
