"""Arithmetic on Z/n: unit groups, element orders, factorization and CRT splitting."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, prod


def check_modulus(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {n!r}")
    return n


def check_unit(u: int, n: int) -> int:
    """Return ``u mod n`` after checking that it is a unit of Z/n."""
    check_modulus(n)
    r = u % n
    if gcd(r, n) != 1:
        raise ValueError(f"{u} is not a unit modulo {n}")
    return r


def unit_group(n: int) -> list[int]:
    """Residues in ``1..n-1`` coprime to ``n``, ascending."""
    check_modulus(n)
    return [r for r in range(1, n) if gcd(r, n) == 1]


def euler_phi(n: int) -> int:
    check_modulus(n)
    result = n
    for p, _ in factorize(n).parts:
        result -= result // p
    return result


@lru_cache(maxsize=1 << 16)
def unit_order(u: int, n: int) -> int:
    """Least ``t >= 1`` with ``u**t == 1 (mod n)``."""
    u = check_unit(u, n)
    t, x = 1, u
    while x != 1 % n:
        x = x * u % n
        t += 1
    return t


def p_part(m: int, p: int) -> int:
    """Largest power of the prime ``p`` dividing ``m``."""
    if m < 1:
        raise ValueError("m must be positive")
    q = 1
    while m % p == 0:
        m //= p
        q *= p
    return q


@dataclass(frozen=True)
class CrtDecomposition:
    """Prime-power splitting ``Z/n = Z/q_1 + ... + Z/q_s`` with ``p_1 < ... < p_s``.

    ``coefficients[i]`` is the idempotent ``e_i`` with ``e_i = 1 mod q_i`` and
    ``e_i = 0 mod q_j`` for ``j != i``; recombination is ``sum(x_i * e_i) mod n``.
    """

    modulus: int
    parts: tuple[tuple[int, int], ...]
    qs: tuple[int, ...] = field(init=False)
    coefficients: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        qs = tuple(p**k for p, k in self.parts)
        if prod(qs) != self.modulus:
            raise ValueError("prime-power parts do not multiply to the modulus")
        coeffs = []
        for q in qs:
            m = self.modulus // q
            coeffs.append(m * pow(m, -1, q) % self.modulus)
        object.__setattr__(self, "qs", qs)
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def factorize(n: int) -> CrtDecomposition:
    """Factor ``n`` by trial division into sorted prime-power parts."""
    check_modulus(n)
    parts = []
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            parts.append((p, k))
        p += 1 if p == 2 else 2
    if m > 1:
        parts.append((m, 1))
    return CrtDecomposition(n, tuple(parts))


def crt_split(x: int, d: CrtDecomposition) -> tuple[int, ...]:
    if not 0 <= x < d.modulus:
        raise ValueError(f"{x} is not a residue modulo {d.modulus}")
    return tuple(x % q for q in d.qs)


def crt_combine(parts: tuple[int, ...] | list[int], d: CrtDecomposition) -> int:
    if len(parts) != len(d.qs):
        raise ValueError(f"expected {len(d.qs)} components, got {len(parts)}")
    for x, q in zip(parts, d.qs):
        if not 0 <= x < q:
            raise ValueError(f"component {x} out of range for Z/{q}")
    return sum(x * e for x, e in zip(parts, d.coefficients)) % d.modulus


def unit_group_is_cyclic(n: int) -> bool:
    """Decide cyclicity of (Z/n)* by searching for an element of order phi(n)."""
    phi = euler_phi(n)
    return any(unit_order(u, n) == phi for u in unit_group(n))
