"""Isomorphism of linear piques: linear (intertwining units) and general (backtracking)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Literal

from linpique.modarith import unit_group
from linpique.permutation import Permutation, automorphism_permutation
from linpique.pique import LinearPique, ldiv, mul, rdiv

DEFAULT_SEARCH_BOUND = 64


class SearchBoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class IsomorphismWitness:
    map: Permutation
    kind: Literal["linear", "general"]

    def __str__(self) -> str:
        return f"{self.kind} {self.map}"


@dataclass(frozen=True)
class IdentityFingerprint:
    """Isomorphism invariants read off the multiplication table.

    ``cube_constant`` records whether ``(x*x)*x`` takes one value for all ``x``.
    The other fields are multisets (sorted tuples) and a count, so none of them
    refers to a particular element and all survive relabelling.
    """

    cube_constant: bool
    cube_values: tuple[int, ...]
    square_values: tuple[int, ...]
    commuting_pairs: int

    def differences(self, other: IdentityFingerprint) -> list[str]:
        return [
            name
            for name in ("cube_constant", "cube_values", "square_values", "commuting_pairs")
            if getattr(self, name) != getattr(other, name)
        ]


def _multiset_shape(values: list[int]) -> tuple[int, ...]:
    # Multiplicities only: the values themselves are labels and not invariant.
    return tuple(sorted(Counter(values).values(), reverse=True))


def identity_fingerprint(P: LinearPique) -> IdentityFingerprint:
    n = P.n
    squares = [mul(P, x, x) for x in range(n)]
    cubes = [mul(P, squares[x], x) for x in range(n)]
    commuting = sum(1 for x in range(n) for y in range(n) if mul(P, x, y) == mul(P, y, x))
    return IdentityFingerprint(
        cube_constant=len(set(cubes)) == 1,
        cube_values=_multiset_shape(cubes),
        square_values=_multiset_shape(squares),
        commuting_pairs=commuting,
    )


def verify_isomorphism(
    f: Permutation, P1: LinearPique, P2: LinearPique, pointed: bool = True
) -> bool:
    """Pointwise check that ``f(x*y) = f(x)*f(y)`` for all pairs (and ``f(0) = 0`` if pointed)."""
    n = P1.n
    if P2.n != n or f.degree != n:
        return False
    if pointed and f(0) != 0:
        return False
    m = f.images
    return all(m[mul(P1, x, y)] == mul(P2, m[x], m[y]) for x in range(n) for y in range(n))


def linear_isomorphic(P1: LinearPique, P2: LinearPique) -> IsomorphismWitness | None:
    """Search units ``u`` intertwining both generators: ``u*rho_1 = rho_2*u`` and likewise for lambda.

    Units commute, so this succeeds only for identical piques; the search is kept
    literal so that the witness is an actual intertwining map.
    """
    if P1.n != P2.n:
        raise ValueError(f"modulus mismatch: {P1.n} != {P2.n}")
    n = P1.n
    for u in unit_group(n):
        if u * P1.rho % n == P2.rho * u % n and u * P1.lam % n == P2.lam * u % n:
            return IsomorphismWitness(automorphism_permutation(u, n), "linear")
    return None


class _Backtracker:
    def __init__(self, P1: LinearPique, P2: LinearPique):
        self.P1, self.P2 = P1, P2
        self.n = P1.n
        self.f = [-1] * self.n
        self.used = [False] * self.n
        self.assigned: list[int] = []

    def _set(self, x: int, y: int, queue: list[int]) -> bool:
        cur = self.f[x]
        if cur != -1:
            return cur == y
        if self.used[y]:
            return False
        self.f[x] = y
        self.used[y] = True
        self.assigned.append(x)
        queue.append(x)
        return True

    def assign(self, x: int, y: int) -> bool:
        """Assign ``x -> y`` and everything it forces through products and quotients."""
        P1, P2, f = self.P1, self.P2, self.f
        queue: list[int] = []
        if not self._set(x, y, queue):
            return False
        while queue:
            x = queue.pop()
            fx = f[x]
            for z in list(self.assigned):
                fz = f[z]
                for op1, op2 in ((mul, mul), (rdiv, rdiv), (ldiv, ldiv)):
                    if not self._set(op1(P1, x, z), op2(P2, fx, fz), queue):
                        return False
                    if z != x and not self._set(op1(P1, z, x), op2(P2, fz, fx), queue):
                        return False
        return True

    def undo(self, mark: int) -> None:
        while len(self.assigned) > mark:
            x = self.assigned.pop()
            self.used[self.f[x]] = False
            self.f[x] = -1

    def search(self) -> list[int] | None:
        try:
            x = self.f.index(-1)
        except ValueError:
            return list(self.f)
        for y in range(self.n):
            if self.used[y]:
                continue
            mark = len(self.assigned)
            if self.assign(x, y):
                found = self.search()
                if found is not None:
                    return found
            self.undo(mark)
        return None


def pique_isomorphic(
    P1: LinearPique,
    P2: LinearPique,
    pointed: bool = True,
    bound: int = DEFAULT_SEARCH_BOUND,
    prefilter: bool = True,
) -> IsomorphismWitness | None:
    """Lexicographically least multiplication-preserving bijection, or None.

    With ``pointed`` the map must send 0 to 0; otherwise any bijection is allowed
    (isomorphism of the bare magmas).
    """
    if P1.n != P2.n:
        raise ValueError(f"modulus mismatch: {P1.n} != {P2.n}")
    if P1.n > bound:
        raise SearchBoundExceeded(f"modulus {P1.n} exceeds isomorphism search bound {bound}")
    if prefilter and identity_fingerprint(P1) != identity_fingerprint(P2):
        return None
    bt = _Backtracker(P1, P2)
    if pointed and not bt.assign(0, 0):
        return None
    found = bt.search()
    if found is None:
        return None
    return IsomorphismWitness(Permutation(tuple(found)), "general")
