"""Exact arithmetic in Z[w], the ring of Eisenstein integers (w = zeta_3).

The ring Z[w] with w^2 + w + 1 = 0 is Euclidean for the norm
N(a + b*w) = a^2 - a*b + b^2, has exactly six units +-1, +-w, +-w^2, and a
single prime lam = 1 - w above 3 (with 3 = -w^2 * lam^2).  A rational prime
p != 3 splits as pi * conj(pi) when p = 1 (mod 3) and stays inert when
p = 2 (mod 3).

Cubic residue characters follow the classical "primary" normalisation
z = 2 (mod 3) of Ireland & Rosen (A Classical Introduction to Modern Number
Theory, chapter 9); under it the reciprocity law reads
chi_pi(theta) = chi_theta(pi) for primary primes of coprime norms.

All values are immutable and every function is pure, so the module is safe
to use from many threads at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import isqrt
from typing import Iterator, Union

from ._intmath import factorize, is_prime as _is_rational_prime

_Operand = Union["EisensteinInt", int]


def _round_div(n: int, d: int) -> int:
    """Nearest integer to n/d for d > 0; ties go away from zero."""
    if n >= 0:
        return (2 * n + d) // (2 * d)
    return -((-2 * n + d) // (2 * d))


@dataclass(frozen=True)
class EisensteinInt:
    """a + b*w with integer a, b, where all arithmetic reduces w^2 to -1 - w.

    The norm a^2 - a*b + b^2 is nonnegative and vanishes only at 0.  Python
    integers are unbounded, so no overflow is possible at any input size.
    """

    a: int = 0
    b: int = 0

    @classmethod
    def _coerce(cls, other: _Operand) -> "EisensteinInt | None":
        if isinstance(other, EisensteinInt):
            return other
        if isinstance(other, int):
            return cls(other, 0)
        return None

    def __add__(self, other: _Operand) -> "EisensteinInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisensteinInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: _Operand) -> "EisensteinInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisensteinInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: _Operand) -> "EisensteinInt":
        return (-self) + other

    def __neg__(self) -> "EisensteinInt":
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: _Operand) -> "EisensteinInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd(-1 - w)
        return EisensteinInt(
            self.a * o.a - self.b * o.b,
            self.a * o.b + self.b * o.a - self.b * o.b,
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other) if isinstance(other, (EisensteinInt, int)) else None
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def conjugate(self) -> "EisensteinInt":
        """Complex conjugation w -> w^2, i.e. (a, b) -> (a - b, -b)."""
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def is_unit(self) -> bool:
        return self.norm() == 1

    def __divmod__(self, other: _Operand) -> tuple["EisensteinInt", "EisensteinInt"]:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero in Z[w]")
        # Nearest-lattice-point division: N(r) <= (3/4) N(o) < N(o).
        n = self * o.conjugate()
        nn = o.norm()
        q = EisensteinInt(_round_div(n.a, nn), _round_div(n.b, nn))
        return q, self - q * o

    def __floordiv__(self, other: _Operand) -> "EisensteinInt":
        return divmod(self, other)[0]

    def __mod__(self, other: _Operand) -> "EisensteinInt":
        return divmod(self, other)[1]

    def divides(self, other: _Operand) -> bool:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot test divisibility against {other!r}")
        return (o % self).is_zero

    def __pow__(self, exponent: int) -> "EisensteinInt":
        if exponent < 0:
            if not self.is_unit:
                raise ValueError("negative powers exist only for units")
            inv = next(u for u in UNITS if (self * u) == ONE)
            return inv ** (-exponent)
        result = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def associates(self) -> Iterator["EisensteinInt"]:
        """The six unit multiples of this element."""
        for u in UNITS:
            yield u * self

    def is_prime(self) -> bool:
        """True for primes of Z[w]: norm a rational prime, or a unit multiple
        of an inert rational prime q = 2 (mod 3)."""
        n = self.norm()
        if n <= 1:
            return False
        if _is_rational_prime(n):
            return True
        q = isqrt(n)
        if q * q == n and q % 3 == 2 and _is_rational_prime(q):
            return any((u * self).b == 0 for u in UNITS)
        return False

    def congruent_to(self, other: _Operand, modulus: _Operand) -> bool:
        o = self._coerce(other)
        m = self._coerce(modulus)
        if o is None or m is None:
            raise TypeError("congruence needs Eisenstein or integer operands")
        return m.divides(self - o)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}w"
        return f"{self.a}{self.b:+}w"


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
OMEGA_SQUARED = EisensteinInt(-1, -1)
#: lam = 1 - w, the prime above 3; N(lam) = 3 and 3 = -w^2 * lam^2.
LAMBDA = EisensteinInt(1, -1)
LAMBDA_CUBED = LAMBDA * LAMBDA * LAMBDA
UNITS: tuple[EisensteinInt, ...] = (
    ONE,
    -ONE,
    OMEGA,
    -OMEGA,
    OMEGA_SQUARED,
    -OMEGA_SQUARED,
)


class CubicCharacterValue(Enum):
    """Value of a cubic residue character: 0 or a cube root of unity."""

    ZERO = "0"
    ONE = "1"
    OMEGA = "w"
    OMEGA_SQUARED = "w^2"

    @property
    def exponent(self) -> int:
        """k with value = w^k, for the three nonzero values."""
        if self is CubicCharacterValue.ZERO:
            raise ValueError("0 is not a root of unity")
        return {"1": 0, "w": 1, "w^2": 2}[self.value]

    @classmethod
    def from_exponent(cls, k: int) -> "CubicCharacterValue":
        return (cls.ONE, cls.OMEGA, cls.OMEGA_SQUARED)[k % 3]

    def __mul__(self, other: "CubicCharacterValue") -> "CubicCharacterValue":
        if CubicCharacterValue.ZERO in (self, other):
            return CubicCharacterValue.ZERO
        return CubicCharacterValue.from_exponent(self.exponent + other.exponent)

    def as_element(self) -> EisensteinInt:
        return {
            CubicCharacterValue.ZERO: ZERO,
            CubicCharacterValue.ONE: ONE,
            CubicCharacterValue.OMEGA: OMEGA,
            CubicCharacterValue.OMEGA_SQUARED: OMEGA_SQUARED,
        }[self]


class SplitKind(Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class PrimeSplitting:
    """How a rational prime factors in Z[w].

    For a split p the factors are (pi, conj(pi)) with pi the primary prime
    of norm p whose w-coefficient is positive; for an inert q the single
    factor is q itself; for 3 it is lam.
    """

    p: int
    kind: SplitKind
    factors: tuple[EisensteinInt, ...]

    @property
    def ideal_count(self) -> int:
        """Number of distinct primes of Z[w] above p."""
        return len(self.factors)


def gcd(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    """A greatest common divisor of x and y (unique up to units)."""
    while not y.is_zero:
        x, y = y, x % y
    return x


def primary_associate(z: EisensteinInt) -> EisensteinInt:
    """The unique associate of z congruent to 2 (mod 3), i.e. with
    a = 2 and b = 0 (mod 3).  Requires N(z) coprime to 3."""
    if z.norm() % 3 == 0:
        raise ValueError(f"{z} has norm divisible by 3; no primary associate")
    for cand in z.associates():
        if cand.a % 3 == 2 and cand.b % 3 == 0:
            return cand
    raise AssertionError(f"no primary associate found for {z}")


def one_mod_three_associate(z: EisensteinInt) -> EisensteinInt:
    """The unique associate congruent to 1 (mod 3); the negative of the
    primary one.  Converts between the two usual normalisations."""
    return -primary_associate(z)


def is_one_mod_three(z: EisensteinInt) -> bool:
    return z.congruent_to(ONE, EisensteinInt(3))


def is_one_mod_lambda_cubed(z: EisensteinInt) -> bool:
    """z = 1 (mod lam^3); decided by exact division.

    For the associate of a split prime that is 1 (mod 3) this holds exactly
    when the underlying rational prime is 1 (mod 9), and for a rational
    integer m exactly when m = 1 (mod 9).
    """
    return z.congruent_to(ONE, LAMBDA_CUBED)


@lru_cache(maxsize=None)
def factor_rational_prime(p: int) -> PrimeSplitting:
    """Factor a rational prime in Z[w].

    p = 1 (mod 3) -> SPLIT with factors (pi, conj(pi)), N(pi) = p;
    p = 2 (mod 3) -> INERT; p = 3 -> RAMIFIED with factor lam = 1 - w.
    """
    if not _is_rational_prime(p):
        raise ValueError(f"{p} is not a rational prime")
    if p == 3:
        # sanity of the stored identity 3 = -w^2 * lam^2
        assert -OMEGA_SQUARED * LAMBDA * LAMBDA == EisensteinInt(3)
        return PrimeSplitting(3, SplitKind.RAMIFIED, (LAMBDA,))
    if p % 3 == 2:
        return PrimeSplitting(p, SplitKind.INERT, (EisensteinInt(p),))
    pi = _split_prime(p)
    return PrimeSplitting(p, SplitKind.SPLIT, (pi, pi.conjugate()))


def _split_prime(p: int) -> EisensteinInt:
    """The canonical prime above a split p: primary with positive b."""
    # A square root of -3 mod p comes from a primitive cube root of unity z:
    # (2z + 1)^2 = -3 (mod p).  Then gcd picks out one prime above p.
    c = 2
    while True:
        z = pow(c, (p - 1) // 3, p)
        if z != 1:
            break
        c += 1
    u = (2 * z + 1) % p
    # u - (1 + 2w) is divisible by exactly one of the two primes above p
    pi = gcd(EisensteinInt(p), EisensteinInt(u - 1, -2))
    pi = primary_associate(pi)
    if pi.b < 0:
        pi = pi.conjugate()
    assert pi.norm() == p
    return pi


def _pow_mod(base: EisensteinInt, exponent: int, modulus: EisensteinInt) -> EisensteinInt:
    result = ONE
    base = base % modulus
    n = exponent
    while n:
        if n & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        n >>= 1
    return result


def cubic_character(alpha: EisensteinInt, pi: EisensteinInt) -> CubicCharacterValue:
    """chi_pi(alpha): the cube root of unity congruent to
    alpha^((N(pi) - 1)/3) mod pi, or 0 when pi divides alpha.

    pi must be a prime of Z[w] with norm different from 3.
    """
    if not pi.is_prime():
        raise ValueError(f"{pi} is not a prime of Z[w]")
    n = pi.norm()
    if n == 3:
        raise ValueError("the character is not defined at the prime above 3")
    if pi.divides(alpha):
        return CubicCharacterValue.ZERO
    r = _pow_mod(alpha, (n - 1) // 3, pi)
    for value in (
        CubicCharacterValue.ONE,
        CubicCharacterValue.OMEGA,
        CubicCharacterValue.OMEGA_SQUARED,
    ):
        if pi.divides(r - value.as_element()):
            return value
    raise ArithmeticError(f"chi_{pi}({alpha}) did not land on a cube root of unity")


def rational_cubic_symbol(a: int, p: int) -> CubicCharacterValue:
    """The cubic residue symbol (a/p)_3 for a rational prime p = 1 (mod 3).

    Returns ONE exactly when a is a cube mod p.  The nonzero value is
    normalised to agree with cubic_character(a, pi) at the canonical prime
    pi above p.  For p = 2 (mod 3) every residue is a cube and the symbol
    carries no information, so such p are rejected.
    """
    if not _is_rational_prime(p) or p % 3 != 1:
        raise ValueError(f"need a rational prime p = 1 (mod 3), got {p}")
    if a % p == 0:
        raise ValueError(f"{p} divides {a}; the symbol is 0 there")
    e = pow(a % p, (p - 1) // 3, p)
    if e == 1:
        return CubicCharacterValue.ONE
    pi = factor_rational_prime(p).factors[0]
    # w maps to m in Z[w]/(pi) = F_p, where pi = s + t*w forces m = -s/t.
    m = (-pi.a) * pow(pi.b, -1, p) % p
    if e == m:
        return CubicCharacterValue.OMEGA
    if e == m * m % p:
        return CubicCharacterValue.OMEGA_SQUARED
    raise ArithmeticError(f"({a}/{p})_3 landed outside the cube roots of unity")


@dataclass(frozen=True)
class EisensteinFactorization:
    """unit * prod(prime^exponent) = value, with primes primary whenever
    their norm is coprime to 3 and lam itself above 3."""

    unit: EisensteinInt
    factors: tuple[tuple[EisensteinInt, int], ...]

    def value(self) -> EisensteinInt:
        out = self.unit
        for prime, exp in self.factors:
            out = out * prime**exp
        return out


def factor(z: EisensteinInt) -> EisensteinFactorization:
    """Factor z != 0 into a unit and prime powers.

    Strategy: factor N(z) over Z by trial division, lift each rational prime
    through factor_rational_prime and divide out.  Deterministic, with the
    factors ordered by the underlying rational prime.
    """
    if z.is_zero:
        raise ValueError("cannot factor 0")
    remaining = z
    out: list[tuple[EisensteinInt, int]] = []
    for p, norm_exp in sorted(factorize(z.norm()).items()):
        splitting = factor_rational_prime(p)
        total = 0
        for prime in splitting.factors:
            e = 0
            while prime.divides(remaining):
                remaining = remaining // prime
                e += 1
            if e:
                out.append((prime, e))
            total += e
        # norm bookkeeping: split/ramified primes have norm p, inert norm p^2
        weight = 2 if splitting.kind is SplitKind.INERT else 1
        assert total * weight == norm_exp, f"norm exponent mismatch at {p}"
    assert remaining.is_unit, f"non-unit cofactor {remaining} left over"
    return EisensteinFactorization(unit=remaining, factors=tuple(out))
