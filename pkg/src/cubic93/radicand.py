"""Cube-free radicands and their residue-class bookkeeping mod 9.

A pure cubic field is Q(cbrt(d)) for a cube-free d >= 2.  Writing d = a*b^2
with a, b coprime and square-free, the radicands a*b^2 and a^2*b generate
the same field, so the smaller of the two serves as the canonical key for
field-level work.

The mod-9 decomposition sorts the prime divisors of d into four classes
(1; 4 or 7; 8; 2 or 5 mod 9) plus the power of 3, with the counts

    v = #(p = 1 mod 9)          w = #(p = 1 mod 3)
    I = #(q = 8 mod 9)          J = #(q = 2 mod 3)

that drive the ramification and rank analysis downstream.  This follows the
shape introduced by Gerth for 3-class groups of pure cubic fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ._intmath import factorize


class Mod9Residue(Enum):
    PLUS_MINUS_ONE = "plus_minus_one"
    OTHER = "other"


def residue_mod9(d: int) -> Mod9Residue:
    """PLUS_MINUS_ONE exactly when d = 1 or 8 (mod 9)."""
    if d % 9 in (1, 8):
        return Mod9Residue.PLUS_MINUS_ONE
    return Mod9Residue.OTHER


@dataclass(frozen=True)
class NormalizedRadicand:
    """Cube-free d = a*b^2 with a, b coprime square-free; conjugate a^2*b."""

    d: int
    a: int
    b: int
    conjugate_d: int
    cube_part_stripped: bool

    @property
    def canonical(self) -> int:
        """min(a*b^2, a^2*b): one key per pure cubic field."""
        return min(self.d, self.conjugate_d)


def normalize(n: int) -> NormalizedRadicand:
    """Strip cube factors from n >= 2 and split the rest as a*b^2.

    A perfect cube is rejected (the cube root is rational and there is no
    cubic field).  cube_part_stripped records whether anything was removed.
    """
    if n <= 1:
        raise ValueError(f"radicand must be an integer >= 2, got {n}")
    a = b = 1
    stripped = False
    for p, e in sorted(factorize(n).items()):
        if e >= 3:
            stripped = True
        r = e % 3
        if r == 1:
            a *= p
        elif r == 2:
            b *= p
    d = a * b * b
    if d == 1:
        raise ValueError(f"{n} is a perfect cube; its cube root is rational")
    return NormalizedRadicand(
        d=d, a=a, b=b, conjugate_d=a * a * b, cube_part_stripped=stripped
    )


@dataclass(frozen=True)
class GerthForm:
    """The factorization of a cube-free d sorted by residue class mod 9.

    Each list holds (prime, exponent) pairs with exponent 1 or 2; e is the
    exponent of 3.  Recomposing 3^e times all prime powers gives d back.
    """

    d: int
    e: int
    class1mod9: tuple[tuple[int, int], ...]
    class47mod9: tuple[tuple[int, int], ...]
    class8mod9: tuple[tuple[int, int], ...]
    class25mod9: tuple[tuple[int, int], ...]

    @property
    def v(self) -> int:
        return len(self.class1mod9)

    @property
    def w(self) -> int:
        """Number of primes = 1 (mod 3) dividing d."""
        return self.v + len(self.class47mod9)

    @property
    def I(self) -> int:  # noqa: E741 - standard letter for this count
        return len(self.class8mod9)

    @property
    def J(self) -> int:
        """Number of primes = 2 (mod 3) dividing d."""
        return self.I + len(self.class25mod9)

    @property
    def split_primes(self) -> tuple[tuple[int, int], ...]:
        """All (p, exponent) with p = 1 (mod 3)."""
        return self.class1mod9 + self.class47mod9

    @property
    def inert_primes(self) -> tuple[tuple[int, int], ...]:
        """All (q, exponent) with q = 2 (mod 3)."""
        return self.class8mod9 + self.class25mod9

    def recomposed(self) -> int:
        out = 3**self.e
        for p, e in self.split_primes + self.inert_primes:
            out *= p**e
        return out


def gerth_decompose(d: int) -> GerthForm:
    """Decompose a cube-free d >= 2 into the mod-9 residue classes."""
    if d < 2:
        raise ValueError(f"radicand must be >= 2, got {d}")
    fac = factorize(d)
    if any(e > 2 for e in fac.values()):
        raise ValueError(f"{d} is not cube-free")
    e3 = fac.pop(3, 0)
    c1: list[tuple[int, int]] = []
    c47: list[tuple[int, int]] = []
    c8: list[tuple[int, int]] = []
    c25: list[tuple[int, int]] = []
    for p, e in sorted(fac.items()):
        r = p % 9
        if r == 1:
            c1.append((p, e))
        elif r in (4, 7):
            c47.append((p, e))
        elif r == 8:
            c8.append((p, e))
        else:  # r in (2, 5); r = 0, 3, 6 impossible for a prime != 3
            c25.append((p, e))
    return GerthForm(
        d=d,
        e=e3,
        class1mod9=tuple(c1),
        class47mod9=tuple(c47),
        class8mod9=tuple(c8),
        class25mod9=tuple(c25),
    )


def cube_free_sieve(limit: int) -> bytearray:
    """flags[d] = 1 exactly for cube-free d, for 0 <= d <= limit."""
    flags = bytearray(b"\x01") * (limit + 1)
    c = 2
    while c * c * c <= limit:
        cube = c * c * c
        flags[cube :: cube] = b"\x00" * (limit // cube)
        c += 1
    return flags
