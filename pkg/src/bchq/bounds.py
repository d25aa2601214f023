"""Minimum-distance refinement via the Farr (sphere-packing) condition.

When the exact dimension is known from the closed form, packing spheres of
radius floor((delta+1)/2) can rule out d >= delta + 2, pinning the true
distance into {delta, delta+1}.  The test is a strict integer inequality

    sum_{i=0}^{floor((delta+1)/2)} C(n, i) (q-1)^i  >  q^(m*ceil((delta-1)(1-1/q)))

and is evaluated with exact integers only; no floating point is allowed
anywhere in this module because rounding could flip the verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bchcore import OutOfTheoremRange, formula_delta_limit
from .modnum import DesignParams

BCH_BOUND = "bch_bound"
FARR_REFINEMENT = "farr_refinement"
EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class DistanceEstimate:
    """Bracket (and possibly exact value) for a code's minimum distance."""

    lower: int
    upper: int | None = None
    exact: int | None = None
    source: str = BCH_BOUND

    def __post_init__(self) -> None:
        if self.exact is not None:
            if self.exact < self.lower:
                raise ValueError("exact distance below the lower bound")
            if self.upper is not None and self.exact > self.upper:
                raise ValueError("exact distance above the upper bound")


def _sphere_sum(n: int, radius: int, weight: int) -> int:
    # sum of C(n, i) * weight^i for i = 0..radius by the exact
    # multiplicative recurrence C(n, i) = C(n, i-1) * (n-i+1) / i
    total = 1
    term = 1
    for i in range(1, radius + 1):
        term = term * (n - i + 1) // i * weight
        total += term
    return total


def farr_condition(params: DesignParams) -> bool:
    """True iff the strict sphere-packing inequality holds.

    Only defined while the closed-form dimension applies
    (2 <= delta <= q^ceil(m/2) + 1); outside that window the right-hand
    side would not be the code's size and the call is refused.
    """
    q, m, delta = params.q, params.m, params.delta
    limit = formula_delta_limit(q, m)
    if delta > limit:
        raise OutOfTheoremRange(
            f"the sphere-packing refinement needs delta <= {limit} "
            f"for q = {q}, m = {m}; got delta = {delta}")
    n = params.n
    lhs = _sphere_sum(n, (delta + 1) // 2, q - 1)
    cosets = -((delta - 1) * (q - 1) // -q)
    rhs = q ** (m * cosets)
    return lhs > rhs


def refined_min_distance(params: DesignParams) -> DistanceEstimate:
    """Distance bracket for the code.

    If the packing condition holds the distance is delta or delta + 1, and
    exactly delta + 1 when q divides delta (the defining set then absorbs
    the coset of delta, extending the consecutive root run).  Otherwise only
    the generic bracket delta <= d <= q*delta - 1 is returned.
    """
    delta, q = params.delta, params.q
    if farr_condition(params):
        exact = delta + 1 if delta % q == 0 else None
        return DistanceEstimate(lower=delta, upper=delta + 1, exact=exact,
                                source=FARR_REFINEMENT)
    return DistanceEstimate(lower=delta, upper=q * delta - 1, source=BCH_BOUND)
