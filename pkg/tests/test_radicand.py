"""Normalization and mod-9 decomposition of radicands.

The exhaustive checks use their own smallest-prime-factor sieve as the
factorization oracle, independent of the library's trial division.
"""

from __future__ import annotations

import pytest

from cubic93.radicand import (
    Mod9Residue,
    cube_free_sieve,
    gerth_decompose,
    normalize,
    residue_mod9,
)

LIMIT = 100_000


def spf_table(limit: int) -> list[int]:
    """smallest prime factor for every n <= limit (0 marks 0 and 1)."""
    spf = list(range(limit + 1))
    for p in range(2, int(limit**0.5) + 1):
        if spf[p] == p:
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def oracle_factor(n: int, spf: list[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    while n > 1:
        p = spf[n]
        out[p] = out.get(p, 0) + 1
        n //= p
    return out


# ----------------------------------------------------------------- normalize


def test_normalize_twelve():
    nr = normalize(12)
    assert (nr.d, nr.a, nr.b, nr.conjugate_d) == (12, 3, 2, 18)
    assert nr.canonical == 12
    assert not nr.cube_part_stripped


def test_normalize_prime_and_its_square():
    nr = normalize(199)
    assert (nr.d, nr.a, nr.b, nr.conjugate_d) == (199, 199, 1, 39601)
    sq = normalize(39601)
    assert (sq.d, sq.a, sq.b, sq.conjugate_d) == (39601, 1, 199, 199)
    assert nr.canonical == sq.canonical == 199


def test_normalize_rejects_perfect_cubes_and_small_inputs():
    for bad in (27, 8, 1000, 1, 0, -5):
        with pytest.raises(ValueError):
            normalize(bad)


def test_normalize_strips_cube_factors():
    nr = normalize(24)  # 2^3 * 3
    assert nr.d == 3
    assert nr.cube_part_stripped
    nr = normalize(54)  # 2 * 3^3
    assert (nr.d, nr.cube_part_stripped) == (2, True)


def test_normalize_idempotent_and_conjugate_swaps():
    for n in (12, 50, 63, 199, 361, 2023):
        nr = normalize(n)
        again = normalize(nr.d)
        assert again == nr
        conj = normalize(nr.conjugate_d)
        assert (conj.a, conj.b) == (nr.b, nr.a)
        assert conj.conjugate_d == nr.d
        assert conj.canonical == nr.canonical


# ------------------------------------------------------------- decomposition


def test_decompose_199():
    g = gerth_decompose(199)
    assert g.e == 0
    assert g.class1mod9 == ((199, 1),)
    assert (g.v, g.w, g.I, g.J) == (1, 1, 0, 0)


def test_decompose_63():
    g = gerth_decompose(63)  # 3^2 * 7
    assert g.e == 2
    assert g.class47mod9 == ((7, 1),)
    assert (g.v, g.w, g.J) == (0, 1, 0)


def test_decompose_two():
    g = gerth_decompose(2)
    assert g.class25mod9 == ((2, 1),)
    assert (g.w, g.I, g.J) == (0, 0, 1)


def test_decompose_rejects_non_cube_free():
    for bad in (8, 24, 199**3):
        with pytest.raises(ValueError):
            gerth_decompose(bad)
    with pytest.raises(ValueError):
        gerth_decompose(1)


def test_decompose_exhaustive_against_sieve():
    spf = spf_table(LIMIT)
    flags = cube_free_sieve(LIMIT)
    for d in range(2, LIMIT + 1):
        fac = oracle_factor(d, spf)
        cube_free = all(e <= 2 for e in fac.values())
        assert bool(flags[d]) == cube_free
        if not cube_free:
            continue
        g = gerth_decompose(d)
        assert g.recomposed() == d
        listed = [p for p, _ in g.class1mod9 + g.class47mod9 + g.class8mod9 + g.class25mod9]
        assert sorted(listed) == sorted(p for p in fac if p != 3)
        assert len(set(listed)) == len(listed)  # classes are disjoint
        assert g.e == fac.get(3, 0)
        for p, _ in g.class1mod9:
            assert p % 9 == 1
        for p, _ in g.class47mod9:
            assert p % 9 in (4, 7)
        for q, _ in g.class8mod9:
            assert q % 9 == 8
        for q, _ in g.class25mod9:
            assert q % 9 in (2, 5)
        assert g.v == len(g.class1mod9)
        assert g.w == g.v + len(g.class47mod9)
        assert g.I == len(g.class8mod9)
        assert g.J == g.I + len(g.class25mod9)
        if d % 9 in (1, 8):
            assert g.e == 0  # d = +-1 (mod 9) forces 3 not to divide d


# ------------------------------------------------------------------ residues


def test_residue_mod9():
    assert residue_mod9(199) is Mod9Residue.PLUS_MINUS_ONE
    assert residue_mod9(21) is Mod9Residue.OTHER
    assert residue_mod9(17) is Mod9Residue.PLUS_MINUS_ONE
    assert residue_mod9(26) is Mod9Residue.PLUS_MINUS_ONE
    assert residue_mod9(9) is Mod9Residue.OTHER
