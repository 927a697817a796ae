"""Permutational similarity: simultaneous conjugacy of the generator pairs.

Two piques on Z/n are similar via ``pi`` when ``pi(sigma_1(x)) = sigma_2(pi(x))`` and
``pi(tau_1(x)) = tau_2(pi(x))`` for every ``x``, where ``sigma_i`` and ``tau_i`` are
multiplication by ``rho_i`` and ``lambda_i``. Constraining the two generators is
enough: conjugation by a fixed ``pi`` is a group homomorphism, so it carries every
word in the generators of one pique to the same word in the other's.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from linpique.modarith import CrtDecomposition, crt_combine, crt_split, factorize
from linpique.permutation import (
    Permutation,
    automorphism_permutation,
    compose,
    cycle_length_of,
    cycle_type,
)
from linpique.pique import LinearPique

BRUTE_FORCE_MAX_DEGREE = 8


@dataclass(frozen=True)
class PermPair:
    sigma: Permutation
    tau: Permutation

    def __post_init__(self):
        if self.sigma.degree != self.tau.degree:
            raise ValueError("sigma and tau must have equal degree")

    @property
    def degree(self) -> int:
        return self.sigma.degree

    @classmethod
    def of(cls, P: LinearPique) -> PermPair:
        return cls(automorphism_permutation(P.rho, P.n), automorphism_permutation(P.lam, P.n))


@dataclass(frozen=True)
class SimilarityWitness:
    pi: Permutation

    def __str__(self) -> str:
        return str(self.pi)


def verify_pair_witness(pi: Permutation, p1: PermPair, p2: PermPair) -> bool:
    """Pointwise check of both conjugation squares; independent of any solver."""
    n = p1.degree
    if pi.degree != n or p2.degree != n:
        return False
    f = pi.images
    for a1, a2 in ((p1.sigma.images, p2.sigma.images), (p1.tau.images, p2.tau.images)):
        for x in range(n):
            if f[a1[x]] != a2[f[x]]:
                return False
    return True


def verify_witness(pi: Permutation, P1: LinearPique, P2: LinearPique) -> bool:
    if pi.degree != P1.n or P1.n != P2.n:
        return False
    return verify_pair_witness(pi, PermPair.of(P1), PermPair.of(P2))


def _orbits(p: PermPair) -> list[list[int]]:
    """Orbits of <sigma, tau>, each sorted, ordered by smallest point."""
    n = p.degree
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in (p.sigma.images[x], p.tau.images[x]):
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
                    queue.append(y)
        out.append(sorted(orbit))
    return out


@lru_cache(maxsize=4096)
def _analyse(p: PermPair):
    """Cycle types of sigma, tau, sigma*tau; orbits; per-point invariants; per-orbit profiles."""
    st = compose(p.sigma, p.tau)
    types = (cycle_type(p.sigma), cycle_type(p.tau), cycle_type(st))
    orbits = _orbits(p)
    inv = list(zip(cycle_length_of(p.sigma), cycle_length_of(p.tau), cycle_length_of(st)))
    profiles = [sorted(inv[x] for x in O) for O in orbits]
    return types, orbits, inv, profiles


def _propagate(x0: int, y0: int, p1: PermPair, p2: PermPair) -> dict[int, int] | None:
    """Extend ``x0 -> y0`` along both letters; None on any clash."""
    letters = (
        (p1.sigma.images, p2.sigma.images),
        (p1.tau.images, p2.tau.images),
    )
    fwd = {x0: y0}
    used = {y0}
    queue = deque([x0])
    while queue:
        x = queue.popleft()
        y = fwd[x]
        for a1, a2 in letters:
            x2, y2 = a1[x], a2[y]
            if x2 in fwd:
                if fwd[x2] != y2:
                    return None
            elif y2 in used:
                return None
            else:
                fwd[x2] = y2
                used.add(y2)
                queue.append(x2)
    return fwd


def _match(edges: list[list[int]], n_right: int) -> list[int] | None:
    """Perfect matching of left vertices by augmenting paths; ``result[i]`` is the right partner."""
    match_right = [-1] * n_right

    def augment(u: int, visited: list[bool]) -> bool:
        # Free partners first keeps earlier orbits on their first choice.
        for v in edges[u]:
            if match_right[v] == -1 and not visited[v]:
                visited[v] = True
                match_right[v] = u
                return True
        for v in edges[u]:
            if visited[v]:
                continue
            visited[v] = True
            if match_right[v] == -1 or augment(match_right[v], visited):
                match_right[v] = u
                return True
        return False

    for u in range(len(edges)):
        if not augment(u, [False] * n_right):
            return None
    result = [-1] * len(edges)
    for v, u in enumerate(match_right):
        if u != -1:
            result[u] = v
    return result


def simultaneous_conjugacy(p1: PermPair, p2: PermPair) -> SimilarityWitness | None:
    """Find ``pi`` conjugating ``(sigma_1, tau_1)`` to ``(sigma_2, tau_2)``, or None.

    A choice of image for one point of an orbit of <sigma_1, tau_1> forces the whole
    orbit, so each orbit pair is tested by trying every admissible image of the
    orbit's smallest point. Orbits are then paired off by bipartite matching.
    """
    if p1.degree != p2.degree:
        raise ValueError(f"degree mismatch: {p1.degree} != {p2.degree}")
    types1, orbits1, inv1, profile1 = _analyse(p1)
    types2, orbits2, inv2, profile2 = _analyse(p2)
    if types1 != types2 or sorted(map(len, orbits1)) != sorted(map(len, orbits2)):
        return None

    edges: list[list[int]] = []
    maps: dict[tuple[int, int], dict[int, int]] = {}
    for i, O1 in enumerate(orbits1):
        x0 = O1[0]
        prof = profile1[i]
        row = []
        for j, O2 in enumerate(orbits2):
            if len(O2) != len(O1) or profile2[j] != prof:
                continue
            for y0 in O2:
                if inv2[y0] != inv1[x0]:
                    continue
                fwd = _propagate(x0, y0, p1, p2)
                if fwd is not None:
                    maps[i, j] = fwd
                    row.append(j)
                    break
        if not row:
            return None
        edges.append(row)

    matching = _match(edges, len(orbits2))
    if matching is None:
        return None
    images = [0] * p1.degree
    for i, j in enumerate(matching):
        for x, y in maps[i, j].items():
            images[x] = y
    return SimilarityWitness(Permutation(tuple(images)))


def permutationally_similar(P1: LinearPique, P2: LinearPique) -> SimilarityWitness | None:
    if P1.n != P2.n:
        raise ValueError(f"modulus mismatch: {P1.n} != {P2.n}")
    return simultaneous_conjugacy(PermPair.of(P1), PermPair.of(P2))


def brute_force_conjugacy(p1: PermPair, p2: PermPair) -> SimilarityWitness | None:
    """Exhaustive search over all permutations; lexicographically first witness."""
    n = p1.degree
    if p2.degree != n:
        raise ValueError(f"degree mismatch: {n} != {p2.degree}")
    if n > BRUTE_FORCE_MAX_DEGREE:
        raise ValueError(f"brute force limited to degree {BRUTE_FORCE_MAX_DEGREE}, got {n}")
    s1, t1 = p1.sigma.images, p1.tau.images
    s2, t2 = p2.sigma.images, p2.tau.images
    for f in permutations(range(n)):
        if all(f[s1[x]] == s2[f[x]] and f[t1[x]] == t2[f[x]] for x in range(n)):
            return SimilarityWitness(Permutation(f))
    return None


def component_pique(P: LinearPique, d: CrtDecomposition, i: int) -> LinearPique:
    """The pique induced on the ``i``-th prime-power summand ``Z/q_i``."""
    q = d.qs[i]
    return LinearPique(q, P.rho % q, P.lam % q)


def crt_compose_similarity(
    witnesses: list[Permutation], d: CrtDecomposition
) -> SimilarityWitness:
    """Glue per-summand permutations ``b_i`` into ``x -> combine(b_1(x_1), ..., b_s(x_s))``."""
    if len(witnesses) != len(d.qs):
        raise ValueError(f"expected {len(d.qs)} component witnesses, got {len(witnesses)}")
    for b, q in zip(witnesses, d.qs):
        if b.degree != q:
            raise ValueError(f"component witness has degree {b.degree}, expected {q}")
    images = []
    for x in range(d.modulus):
        parts = crt_split(x, d)
        images.append(crt_combine(tuple(b(xi) for b, xi in zip(witnesses, parts)), d))
    return SimilarityWitness(Permutation(tuple(images)))


def crt_similarity(P1: LinearPique, P2: LinearPique) -> SimilarityWitness | None:
    """Solve each prime-power summand separately and glue the witnesses.

    Returns None when some summand has no witness. A None here does not by
    itself rule out similarity of the full piques.
    """
    if P1.n != P2.n:
        raise ValueError(f"modulus mismatch: {P1.n} != {P2.n}")
    d = factorize(P1.n)
    parts = []
    for i in range(len(d)):
        w = permutationally_similar(component_pique(P1, d, i), component_pique(P2, d, i))
        if w is None:
            return None
        parts.append(w.pi)
    return crt_compose_similarity(parts, d)
