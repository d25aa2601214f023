"""BCH code objects and the closed-form dimension theory.

The exact dimension is always n - |Z|.  The closed form
n - m*ceil((delta-1)(1-1/q)) agrees with it only while delta stays within
[2, q^ceil(m/2) + 1]; outside that window the formula can be wrong (the
n = 15 code over F_4 with delta = 6 has dimension 8, the formula says 7),
so dimension_formula refuses rather than extrapolate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldPoly, FieldTooLarge, build_field, generator_polynomial
from .modnum import DefiningSet, DesignParams, defining_set


class OutOfTheoremRange(ValueError):
    """A closed form was requested outside its proven validity window."""


@dataclass(frozen=True)
class BchCode:
    """A constructed primitive narrow-sense BCH code.

    The generator polynomial is attached when the field fits the tabulation
    cap; the defining set and exact dimension are available regardless of
    field size.
    """

    params: DesignParams
    defining: DefiningSet
    dimension: int
    designed_distance: int
    generator: FieldPoly | None = None

    @property
    def n(self) -> int:
        return self.params.n


def construct(params: DesignParams, with_generator: bool | str = "auto") -> BchCode:
    """Build the code with exact dimension n - |Z|.

    with_generator: "auto" attaches the generator polynomial when the field
    is tabulatable, True insists (and may raise FieldTooLarge), False skips.
    """
    ds = defining_set(params)
    dim = params.n - len(ds.residues)
    gen = None
    if with_generator is True:
        gen = generator_polynomial(params)
    elif with_generator == "auto":
        try:
            gen = generator_polynomial(params)
        except FieldTooLarge:
            gen = None
    elif with_generator is not False:
        raise ValueError(f"with_generator must be 'auto', True or False, "
                         f"got {with_generator!r}")
    return BchCode(params, ds, dim, params.delta, gen)


def formula_delta_limit(q: int, m: int) -> int:
    """Largest designed distance the closed-form dimension covers."""
    return q ** ((m + 1) // 2) + 1


def formula_dimension_value(q: int, m: int, delta: int) -> int:
    """The raw closed-form value n - m*ceil((delta-1)(1-1/q)).

    No range check: outside [2, formula_delta_limit(q, m)] this number can
    differ from the exact dimension and must only be used for diagnostics.
    """
    n = q ** m - 1
    cosets = -((delta - 1) * (q - 1) // -q)  # ceil((delta-1)(1-1/q)), exact
    return n - m * cosets


def dimension_formula(params: DesignParams) -> int:
    """Closed-form dimension, refusing outside its validity window.

    Inside [2, q^ceil(m/2) + 1] the value provably equals
    construct(params).dimension; beyond it OutOfTheoremRange is raised and
    callers wanting the exact dimension must use construct().
    """
    q, m, delta = params.q, params.m, params.delta
    limit = formula_delta_limit(q, m)
    if delta > limit:
        raise OutOfTheoremRange(
            f"delta = {delta} exceeds the closed-form window "
            f"[2, {limit}] for q = {q}, m = {m}; the formula value "
            f"{formula_dimension_value(q, m, delta)} may be wrong, "
            "use construct() for the exact dimension")
    return formula_dimension_value(q, m, delta)


def effective_designed_distance(defining: DefiningSet) -> int:
    """1 + the longest run 1, 2, ..., L of residues inside Z.

    This is the best designed distance the defining set supports: whenever
    delta is a multiple of q the run extends past delta - 1 (the coset of
    delta coincides with that of delta/q), so the value can exceed the
    requested delta.
    """
    if not defining.residues:
        raise ValueError("defining set is empty")
    members = set(defining.residues)
    r = 1
    while r in members:
        r += 1
    return r
