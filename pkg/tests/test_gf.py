"""Field towers, minimal polynomials, generators and dual generators."""

import pytest

from bchq.gf import (
    Field,
    FieldPoly,
    FieldTooLarge,
    build_field,
    euclidean_dual_generator,
    generator_polynomial,
    hermitian_dual_generator,
    minimal_polynomial,
)
from bchq.modnum import DesignParams, defining_set


def test_build_field_binary_quartic():
    spec = build_field(2, 4)
    assert spec.modulus == (1, 1, 0, 0, 1)  # x^4 + x + 1, lexicographically first
    assert spec.order == 16 and spec.n == 15
    assert spec.alpha == 2


def test_build_field_prime_field():
    spec = build_field(2, 1)
    assert spec.order == 2
    f = spec.ext
    assert f.add(1, 1) == 0 and f.mul(1, 1) == 1
    spec3 = build_field(3, 1)
    assert spec3.ext.mul(2, 2) == 1
    assert spec3.embed_table == (0, 1, 2)


def test_build_field_f16_over_f4():
    spec = build_field(4, 2)
    assert spec.order == 16
    assert spec.base.order == 4
    assert spec.base.modulus == (1, 1, 1)  # y^2 + y + 1
    assert spec.embed_table == (0, 1, 6, 7)
    # embedding is a field homomorphism
    for a in range(4):
        for b in range(4):
            assert spec.embed(spec.base.mul(a, b)) == \
                spec.ext.mul(spec.embed(a), spec.embed(b))
            assert spec.embed(spec.base.add(a, b)) == \
                spec.ext.add(spec.embed(a), spec.embed(b))


def test_field_rejects_bad_construction():
    with pytest.raises(ValueError):
        Field(4, 2)  # characteristic must be prime
    with pytest.raises(ValueError):
        # irreducible but not primitive over F_2 (its root has order 5)
        Field(2, 4, modulus=(1, 1, 1, 1, 1))
    with pytest.raises(ZeroDivisionError):
        build_field(2, 4).ext.inv(0)


def test_field_too_large():
    with pytest.raises(FieldTooLarge):
        build_field(2, 25)
    with pytest.raises(FieldTooLarge):
        build_field(2, 8, table_cap=255)


def test_minimal_polynomial_examples():
    spec = build_field(2, 4)
    assert minimal_polynomial(spec, 1).coeffs == (1, 1, 0, 0, 1)
    assert minimal_polynomial(spec, 5).coeffs == (1, 1, 1)
    assert minimal_polynomial(spec, 0).coeffs == (1, 1)  # X - 1 over F_2
    spec3 = build_field(3, 2)
    assert minimal_polynomial(spec3, 0).coeffs == (2, 1)  # X - 1 over F_3


@pytest.mark.parametrize("q,m", [(2, 4), (3, 2), (4, 2), (5, 2), (8, 2), (9, 2)])
def test_minimal_polynomial_coeffs_in_base(q, m):
    spec = build_field(q, m)
    for x in range(spec.n):
        mp = minimal_polynomial(spec, x)
        assert mp.field == spec.base
        assert mp.degree == len(set((x * q ** j) % spec.n for j in range(m)))
        # Frobenius membership of every coefficient, checked upstairs
        for c in mp.coeffs:
            assert spec.in_base(spec.embed(c))


def test_generator_polynomial_frozen():
    g = generator_polynomial(DesignParams(2, 4, 5))
    assert g.coeffs == (1, 0, 0, 0, 1, 0, 1, 1, 1)  # x^8+x^7+x^6+x^4+1
    assert str(g) == "x^8 + x^7 + x^6 + x^4 + 1"
    g2 = generator_polynomial(DesignParams(2, 4, 2))
    assert g2.coeffs == (1, 1, 0, 0, 1)  # the field modulus itself
    g4 = generator_polynomial(DesignParams(4, 2, 6))
    assert g4.degree == 7
    assert g4.coeffs == (2, 2, 1, 0, 3, 0, 1, 1)


@pytest.mark.parametrize("q,m,delta", [
    (2, 4, 3), (2, 4, 5), (2, 4, 7), (3, 2, 4), (4, 2, 6), (5, 2, 4), (2, 6, 9),
])
def test_generator_divides_xn_minus_1(q, m, delta):
    params = DesignParams(q, m, delta)
    spec = build_field(q, m)
    g = generator_polynomial(params, spec)
    assert g.degree == len(defining_set(params).residues)
    base = spec.base
    xn1 = FieldPoly(base, (base.neg(1),) + (0,) * (params.n - 1) + (1,))
    assert g.divides(xn1)
    assert g.coeffs[0] != 0  # roots are nonzero powers of alpha


def test_generator_roots_are_exactly_the_defining_set():
    params = DesignParams(4, 2, 6)
    spec = build_field(4, 2)
    g = generator_polynomial(params, spec)
    lifted = tuple(spec.embed(c) for c in g.coeffs)
    z = set(defining_set(params).residues)
    for e in range(params.n):
        val = spec.ext.poly_eval(lifted, spec.alpha_pow(e))
        assert (val == 0) == (e in z)


def test_dual_generator_degrees():
    params = DesignParams.hermitian(2, 2, 2)  # n=15 over F_4
    h = hermitian_dual_generator(params)
    assert h.degree == 13  # n - |Z| = 15 - 2
    e = euclidean_dual_generator(DesignParams(2, 4, 5))
    assert e.degree == 7  # n - |Z| = 15 - 8


def test_hermitian_dual_root_set():
    params = DesignParams.hermitian(2, 2, 4)
    spec = build_field(4, 2)
    h = hermitian_dual_generator(params, spec)
    lifted = tuple(spec.embed(c) for c in h.coeffs)
    z = set(defining_set(params).residues)
    outside = [x for x in range(15) if x not in z]
    for x in outside:
        assert spec.ext.poly_eval(lifted, spec.alpha_pow(-2 * x % 15)) == 0
    assert h.degree == len(outside)


def test_code_invariant_under_modulus_choice():
    # same code parameters from a different primitive modulus: equal degree
    # and identical weight distribution
    params = DesignParams(2, 4, 5)
    spec_a = build_field(2, 4)
    spec_b = build_field(2, 4, modulus=(1, 0, 0, 1, 1))  # x^4 + x^3 + 1
    assert spec_a.modulus != spec_b.modulus
    ga = generator_polynomial(params, spec_a)
    gb = generator_polynomial(params, spec_b)
    assert ga.degree == gb.degree
    assert ga.coeffs != gb.coeffs  # genuinely different representation

    def weight_distribution(g):
        n, k = params.n, params.n - g.degree
        rows = []
        for i in range(k):
            row = [0] * n
            for j, c in enumerate(g.coeffs):
                row[i + j] = c
            rows.append(row)
        dist = [0] * (n + 1)
        for msg in range(2 ** k):
            cw = [0] * n
            for i in range(k):
                if (msg >> i) & 1:
                    cw = [a ^ b for a, b in zip(cw, rows[i])]
            dist[sum(map(bool, cw))] += 1
        return dist

    assert weight_distribution(ga) == weight_distribution(gb)


def test_poly_divmod_roundtrip():
    f = build_field(3, 2).ext
    a = (1, 0, 2, 5, 1)
    b = (2, 1, 1)
    q, r = f.poly_divmod(a, b)
    recombined = f.poly_mul(q, b)
    out = list(recombined) + [0] * (len(a) - len(recombined))
    for i, c in enumerate(r):
        out[i] = f.add(out[i], c)
    assert tuple(out[:len(a)]) == a


def test_field_spec_projection_errors():
    spec = build_field(4, 2)
    with pytest.raises(ValueError):
        spec.project(spec.alpha)  # alpha generates F_16, not in F_4
