"""Code construction, exact dimension, and the closed-form window."""

import pytest

from bchq.bchcore import (
    OutOfTheoremRange,
    construct,
    dimension_formula,
    effective_designed_distance,
    formula_delta_limit,
    formula_dimension_value,
)
from bchq.gf import FieldTooLarge
from bchq.modnum import DesignParams, defining_set


def ceil_cosets(delta, q):
    return -((delta - 1) * (q - 1) // -q)


def test_construct_examples():
    assert construct(DesignParams(4, 2, 6)).dimension == 8
    assert construct(DesignParams(2, 4, 2)).dimension == 11
    # delta = n: all nonzero residues in Z, the repetition-like code
    assert construct(DesignParams(2, 2, 3)).dimension == 1


def test_construct_invariants():
    code = construct(DesignParams(2, 4, 5))
    assert code.dimension == code.n - len(code.defining.residues)
    assert code.generator is not None
    assert code.generator.degree == len(code.defining.residues)
    assert code.designed_distance == 5


def test_construct_generator_modes():
    p = DesignParams(2, 4, 3)
    assert construct(p, with_generator=False).generator is None
    assert construct(p, with_generator=True).generator is not None
    with pytest.raises(ValueError):
        construct(p, with_generator="maybe")


def test_construct_beyond_tabulation_keeps_exact_dimension():
    p = DesignParams(2, 29, 2)
    code = construct(p)  # field has 2^29 elements: generator skipped
    assert code.generator is None
    assert code.dimension == 2 ** 29 - 1 - 29
    with pytest.raises(FieldTooLarge):
        construct(p, with_generator=True)


def test_dimension_formula_examples():
    assert dimension_formula(DesignParams(2, 4, 5)) == 7
    assert dimension_formula(DesignParams(3, 2, 2)) == 6
    with pytest.raises(OutOfTheoremRange):
        dimension_formula(DesignParams(4, 2, 6))
    # the raw value is available for diagnostics and is wrong here
    assert formula_dimension_value(4, 2, 6) == 7
    assert construct(DesignParams(4, 2, 6)).dimension == 8


def test_formula_delta_limit():
    assert formula_delta_limit(2, 4) == 5
    assert formula_delta_limit(4, 2) == 5
    assert formula_delta_limit(3, 3) == 10
    assert formula_delta_limit(2, 5) == 9


@pytest.mark.parametrize("q,m", [(2, 4), (2, 5), (3, 2), (3, 3), (4, 2), (5, 2)])
def test_formula_equals_exact_inside_window(q, m):
    n = q ** m - 1
    for delta in range(2, min(formula_delta_limit(q, m), n) + 1):
        params = DesignParams(q, m, delta)
        z = defining_set(params)
        assert dimension_formula(params) == n - len(z.residues)
        # coset-count identity underlying the formula
        assert len(z.residues) == m * ceil_cosets(delta, q)


@pytest.mark.parametrize("q,m", [(2, 4), (3, 2), (4, 2)])
def test_dimension_monotone_in_delta(q, m):
    n = q ** m - 1
    dims = [construct(DesignParams(q, m, d)).dimension for d in range(2, n + 1)]
    assert all(a >= b for a, b in zip(dims, dims[1:]))


def test_effective_designed_distance_examples():
    assert effective_designed_distance(defining_set(DesignParams(2, 4, 4))) == 5
    assert effective_designed_distance(defining_set(DesignParams(5, 1, 2))) == 2
    assert effective_designed_distance(defining_set(DesignParams(4, 2, 6))) == 6


@pytest.mark.parametrize("q,m", [(2, 4), (3, 2), (4, 2), (2, 5)])
def test_effective_distance_dominates_delta(q, m):
    n = q ** m - 1
    for delta in range(2, n + 1):
        eff = effective_designed_distance(defining_set(DesignParams(q, m, delta)))
        assert eff >= delta
        if delta % q == 0:
            assert eff > delta  # the coset of delta collapses onto delta/q
