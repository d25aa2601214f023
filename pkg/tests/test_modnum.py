"""Residue arithmetic: cosets, defining sets, and set transforms."""

import pytest

from bchq.modnum import (
    CyclotomicCoset,
    DesignParams,
    cyclotomic_coset,
    defining_set,
    prime_power_parts,
    scale_set,
)


def orbit(n, base, x):
    # independent oracle: brute-force orbit by explicit powers
    return {(x * pow(base, j, n)) % n for j in range(n + 1)}


def test_prime_power_parts():
    assert prime_power_parts(2) == (2, 1)
    assert prime_power_parts(8) == (2, 3)
    assert prime_power_parts(9) == (3, 2)
    assert prime_power_parts(7) == (7, 1)
    for bad in (1, 6, 12, 100, 0, -3):
        with pytest.raises(ValueError):
            prime_power_parts(bad)


def test_coset_frozen_examples():
    assert cyclotomic_coset(15, 2, 1).elements == (1, 2, 4, 8)
    assert cyclotomic_coset(15, 4, 5).elements == (5,)
    assert cyclotomic_coset(63, 4, 0).elements == (0,)
    assert cyclotomic_coset(26, 3, 0).elements == (0,)


def test_coset_canonical_form():
    c = cyclotomic_coset(15, 2, 8)
    assert c.representative == 1
    assert c.elements == (1, 2, 4, 8)
    assert list(c.elements) == sorted(c.elements)
    assert c == cyclotomic_coset(15, 2, 4)  # structural equality


@pytest.mark.parametrize("n,base", [(15, 2), (15, 4), (26, 3), (63, 4), (80, 9)])
def test_coset_matches_brute_force_orbit(n, base):
    for x in range(n):
        assert set(cyclotomic_coset(n, base, x).elements) == orbit(n, base, x)


def test_coset_rejects_bad_inputs():
    with pytest.raises(ValueError):
        cyclotomic_coset(15, 2, 15)
    with pytest.raises(ValueError):
        cyclotomic_coset(15, 2, -1)
    with pytest.raises(ValueError):
        cyclotomic_coset(15, 3, 1)  # gcd(3, 15) != 1


def test_design_params_validation():
    p = DesignParams(2, 4, 5)
    assert p.n == 15 and p.coset_base == 2
    with pytest.raises(ValueError):
        DesignParams(6, 2, 3)  # not a prime power
    with pytest.raises(ValueError):
        DesignParams(2, 4, 1)  # delta < 2
    with pytest.raises(ValueError):
        DesignParams(2, 4, 16)  # delta > n
    with pytest.raises(ValueError):
        DesignParams(2, 0, 2)
    with pytest.raises(ValueError):
        DesignParams(2, 4, 3, coset_base=3)  # gcd(3, 15) != 1


def test_design_params_big_length_exact():
    p = DesignParams(2, 97, 5)
    assert p.n == 2 ** 97 - 1  # big-integer exact, no overflow


def test_hermitian_params():
    p = DesignParams.hermitian(2, 3, 7)
    assert (p.q, p.m, p.n, p.coset_base) == (4, 3, 63, 4)
    assert p.hermitian_base == 2
    assert DesignParams(9, 2, 4).hermitian_base == 3
    with pytest.raises(ValueError):
        _ = DesignParams(2, 4, 3).hermitian_base  # 2 is not a square


def test_defining_set_worked_example():
    ds = defining_set(DesignParams(4, 2, 6))
    assert ds.residues == (1, 2, 3, 4, 5, 8, 12)
    assert [c.representative for c in ds.cosets] == [1, 2, 3, 5]
    assert [c.elements for c in ds.cosets] == [(1, 4), (2, 8), (3, 12), (5,)]


def test_defining_set_single_coset():
    ds = defining_set(DesignParams(2, 4, 2))
    assert ds.residues == (1, 2, 4, 8)
    assert len(ds.cosets) == 1


def test_defining_set_union():
    ds = defining_set(DesignParams(2, 4, 5))
    assert ds.residues == (1, 2, 3, 4, 6, 8, 9, 12)


@pytest.mark.parametrize("q,m,delta", [(2, 4, 5), (3, 2, 4), (4, 2, 6), (2, 5, 7)])
def test_defining_set_closed_under_base(q, m, delta):
    params = DesignParams(q, m, delta)
    ds = defining_set(params)
    r = set(ds.residues)
    assert {(z * params.coset_base) % params.n for z in r} == r


def test_scale_set_frozen_examples():
    assert scale_set((1, 2, 4, 8), -1, n=15) == (7, 11, 13, 14)
    assert scale_set((0,), 7, n=9) == (0,)
    expected = tuple(sorted({(-2 * z) % 63 for z in (1, 4, 16, 21)}))
    assert scale_set((1, 4, 16, 21), -2, n=63) == expected


def test_scale_set_accepts_defining_set():
    ds = defining_set(DesignParams(2, 4, 2))
    assert scale_set(ds, -1) == (7, 11, 13, 14)


def test_scale_set_rejects_non_units():
    with pytest.raises(ValueError):
        scale_set((1, 2), 3, n=15)
    with pytest.raises(ValueError):
        scale_set((1, 2), -1)  # bare set without n


@pytest.mark.parametrize("n", [15, 26, 63])
def test_scale_roundtrip_all_units(n):
    s = tuple(range(1, n, 3))
    for f in range(1, n):
        if pow(f, 1, n) and __import__("math").gcd(f, n) == 1:
            finv = pow(f, -1, n)
            assert scale_set(scale_set(s, f, n=n), finv, n=n) == tuple(sorted(s))


def test_coset_sizes_divide_multiplicative_order():
    # |C_x| always divides the order of base mod n
    n, base = 63, 4
    order = 1
    while pow(base, order, n) != 1:
        order += 1
    for x in range(n):
        assert order % len(cyclotomic_coset(n, base, x)) == 0


def test_containers_are_hashable():
    c = cyclotomic_coset(15, 2, 1)
    assert isinstance(c, CyclotomicCoset)
    assert hash(c) == hash(cyclotomic_coset(15, 2, 2))
    assert 4 in c and 5 not in c
    ds = defining_set(DesignParams(2, 4, 3))
    assert 8 in ds and 3 not in ds
    assert len(ds) == 4
