"""Ramification in the Kummer extension k/k0 attached to a cube-free d.

Here k0 = Q(zeta_3) and k = k0(cbrt(d)).  Primes dividing d ramify in the
cubic field Q(cbrt(d)); 3 ramifies there exactly when 3 | d or d is not
congruent to +-1 mod 9 (Dedekind's criterion).  In k/k0 each ramified
rational prime contributes its primes of k0: a split p = 1 (mod 3) gives
two, an inert q = 2 (mod 3) gives one, and 3 gives lam = 1 - zeta_3.

The count t of ramified primes of k0 feeds the ambiguous-class rank

    rank = t - 2 + q*,

where q* = 1 when zeta_3 is a norm from k.  The only criterion applied for
q* = 1 is the sufficient one: every non-lam ramified prime of k0 must be
congruent to 1 mod lam^3, which at the rational level reads p = 1 (mod 9)
for every split divisor and q = 8 (mod 9) for every inert divisor.  When it
does not apply the indicator is reported as UNKNOWN rather than guessed, so
every emitted rank is sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .eisenstein import LAMBDA, EisensteinInt, SplitKind, factor_rational_prime
from .radicand import GerthForm, Mod9Residue, gerth_decompose, residue_mod9


class QStar(Enum):
    ZERO = 0
    ONE = 1
    UNKNOWN = "unknown"


class K0PrimeKind(Enum):
    SPLIT = "split"
    INERT = "inert"
    LAMBDA = "lambda"


@dataclass(frozen=True)
class K0Prime:
    """One prime of k0 = Q(zeta_3) that ramifies in k/k0."""

    kind: K0PrimeKind
    p: int
    element: EisensteinInt


@dataclass(frozen=True)
class RamificationReport:
    d: int
    gamma_ramified: frozenset[int]
    three_ramified: bool
    k0_ramified: tuple[K0Prime, ...]
    t: int
    q_star: QStar
    sigma_rank: int | None
    notes: tuple[str, ...]


def gamma_ramified(d: int) -> tuple[frozenset[int], bool]:
    """Rational primes ramified in Q(cbrt(d)), and whether 3 is among them."""
    form = gerth_decompose(d)
    return _gamma_ramified_from_form(form)


def _gamma_ramified_from_form(form: GerthForm) -> tuple[frozenset[int], bool]:
    primes = {p for p, _ in form.split_primes + form.inert_primes}
    three = form.e > 0 or residue_mod9(form.d) is Mod9Residue.OTHER
    if three:
        primes.add(3)
    return frozenset(primes), three


def ramify(d: int) -> RamificationReport:
    """Full ramification report for a cube-free d >= 2."""
    return _ramify_from_form(gerth_decompose(d))


def _ramify_from_form(form: GerthForm) -> RamificationReport:
    primes, three = _gamma_ramified_from_form(form)
    entries: list[K0Prime] = []
    for p in sorted(primes):
        splitting = factor_rational_prime(p)
        if splitting.kind is SplitKind.RAMIFIED:
            entries.append(K0Prime(K0PrimeKind.LAMBDA, 3, LAMBDA))
        elif splitting.kind is SplitKind.SPLIT:
            for prime in splitting.factors:
                entries.append(K0Prime(K0PrimeKind.SPLIT, p, prime))
        else:
            entries.append(K0Prime(K0PrimeKind.INERT, p, splitting.factors[0]))
    t = len(entries)

    # Sufficient norm criterion: all non-lam ramified primes 1 mod lam^3.
    if not form.class47mod9 and not form.class25mod9:
        qs = QStar.ONE
    else:
        qs = QStar.UNKNOWN

    notes = [
        "ambiguous classes are elementary: fixed by sigma, their cube is the"
        " norm to k0, which has class number 1",
    ]
    if qs is QStar.ONE:
        rank: int | None = t - 2 + 1
        notes.append(
            "every non-lam ramified prime of k0 is 1 mod lam^3, so zeta_3 is"
            " a norm from k and q* = 1"
        )
        assert rank >= 0
    else:
        rank = None
        notes.append(
            "the sufficient norm criterion for q* = 1 does not apply and no"
            " general criterion is implemented, so q* stays unknown"
        )
    return RamificationReport(
        d=form.d,
        gamma_ramified=primes,
        three_ramified=three,
        k0_ramified=tuple(entries),
        t=t,
        q_star=qs,
        sigma_rank=rank,
        notes=tuple(notes),
    )


def count_t(d: int) -> int:
    """Number of primes of k0 ramified in k/k0."""
    return ramify(d).t


def q_star(d: int) -> QStar:
    """Whether zeta_3 is a norm from k; ONE or UNKNOWN (never guessed ZERO)."""
    return ramify(d).q_star


def sigma_rank(d: int) -> int | None:
    """rank of the ambiguous 3-class group, t - 2 + q*; None when q* unknown."""
    return ramify(d).sigma_rank
