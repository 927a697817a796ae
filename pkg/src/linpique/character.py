"""Permutation characters of linear piques.

The character of a pique assigns to each word ``g`` of <R, L> the number of
points of Z/n fixed by the automorphism ``g`` acts as.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from linpique.modarith import unit_order
from linpique.permutation import automorphism_permutation, fixed_point_count
from linpique.pique import LinearPique, Word, word_eval


@dataclass(frozen=True)
class CharacterTable:
    pique: LinearPique
    entries: tuple[tuple[Word, int], ...]

    @property
    def words(self) -> list[Word]:
        return [w for w, _ in self.entries]

    @property
    def values(self) -> list[int]:
        return [v for _, v in self.entries]


@dataclass(frozen=True)
class ExponentGrid:
    """Fixed-point counts of ``rho^a lambda^b`` for ``0 <= a < La``, ``0 <= b < Lb``."""

    pique: LinearPique
    bounds: tuple[int, int]
    values: tuple[tuple[int, ...], ...]

    def __getitem__(self, ab: tuple[int, int]) -> int:
        a, b = ab
        return self.values[a % self.bounds[0]][b % self.bounds[1]]


@lru_cache(maxsize=1 << 16)
def _unit_fixed_points(u: int, n: int) -> int:
    return fixed_point_count(automorphism_permutation(u, n))


def char_value(P: LinearPique, w: Word) -> int:
    """Fixed points of the permutation ``w`` induces; cached per unit."""
    return _unit_fixed_points(word_eval(P, w), P.n)


def default_words(P: LinearPique) -> list[Word]:
    """All ``R^a L^b`` with ``a < ord(rho)``, ``b < ord(lambda)``, lexicographic in ``(a, b)``."""
    ra, lb = unit_order(P.rho, P.n), unit_order(P.lam, P.n)
    return [Word(a, b) for a in range(ra) for b in range(lb)]


def character_table(P: LinearPique, words: list[Word] | None = None) -> CharacterTable:
    if words is None:
        words = default_words(P)
    return CharacterTable(P, tuple((w, char_value(P, w)) for w in words))


@lru_cache(maxsize=65536)
def exponent_grid(P: LinearPique, La: int, Lb: int) -> ExponentGrid:
    n = P.n
    rows = []
    ra = 1 % n
    for _ in range(La):
        row = []
        u = ra
        for _ in range(Lb):
            row.append(_unit_fixed_points(u, n))
            u = u * P.lam % n
        rows.append(tuple(row))
        ra = ra * P.rho % n
    return ExponentGrid(P, (La, Lb), tuple(rows))


def _check_same_modulus(P1: LinearPique, P2: LinearPique) -> None:
    if P1.n != P2.n:
        raise ValueError(f"modulus mismatch: {P1.n} != {P2.n}")


def _joint_bounds(P1: LinearPique, P2: LinearPique) -> tuple[int, int]:
    n = P1.n
    La = lcm(unit_order(P1.rho, n), unit_order(P2.rho, n))
    Lb = lcm(unit_order(P1.lam, n), unit_order(P2.lam, n))
    return La, Lb


def characters_equal(P1: LinearPique, P2: LinearPique) -> bool:
    """Decide ``chi_1(g) == chi_2(g)`` for every ``g`` in <R, L>.

    Each character is periodic in ``a`` with period ``ord(rho_i)`` and in ``b`` with
    period ``ord(lambda_i)``, so agreement on the grid of lcm bounds is complete.
    """
    _check_same_modulus(P1, P2)
    n = P1.n
    # chi(R^a) = n exactly when rho^a = 1, so unequal generator orders already
    # give a word where the characters differ.
    if unit_order(P1.rho, n) != unit_order(P2.rho, n):
        return False
    if unit_order(P1.lam, n) != unit_order(P2.lam, n):
        return False
    La, Lb = _joint_bounds(P1, P2)
    return exponent_grid(P1, La, Lb).values == exponent_grid(P2, La, Lb).values


@lru_cache(maxsize=4096)
def _order_grid(P: LinearPique, La: int, Lb: int) -> tuple[tuple[int, ...], ...]:
    n = P.n
    rows = []
    ra = 1 % n
    for _ in range(La):
        row = []
        u = ra
        for _ in range(Lb):
            row.append(unit_order(u, n))
            u = u * P.lam % n
        rows.append(tuple(row))
        ra = ra * P.rho % n
    return tuple(rows)


def order_profile_equal(P1: LinearPique, P2: LinearPique) -> bool:
    """Whether every word acts with the same order in both piques."""
    _check_same_modulus(P1, P2)
    La, Lb = _joint_bounds(P1, P2)
    return _order_grid(P1, La, Lb) == _order_grid(P2, La, Lb)


def character_key(P: LinearPique) -> tuple:
    """Complete character invariant, used for grouping.

    Only the identity unit fixes the point 1, so ``chi(R^a) = n`` exactly when
    ``rho^a = 1``; equal characters therefore force equal generator orders. The
    key is those orders plus the grid they bound, and two piques of one modulus
    have equal keys exactly when ``characters_equal`` holds.
    """
    ra, lb = unit_order(P.rho, P.n), unit_order(P.lam, P.n)
    return (ra, lb, exponent_grid(P, ra, lb).values)
