"""Dual containment decided from design parameters alone.

A cyclic code with defining set Z contains its Euclidean dual iff
Z and Z^{-1} = {-z mod n} are disjoint, and (over F_{q0^2}) contains its
Hermitian dual iff Z and Z^{-q0} = {-q0 z mod n} are disjoint.  For
primitive narrow-sense BCH codes both conditions collapse to a threshold on
the designed distance:

    Euclidean, m >= 2:   delta <= q^ceil(m/2) - 1 - (q-2)*[m odd]
    Hermitian, m != 2:   delta <= q0^(m + [m even]) - 1 - (q0^2-2)*[m even]

Each predicate is available both as the closed form and as the literal
coset-set intersection (method="coset_oracle"), which additionally produces
a witness residue when containment fails.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bchcore import OutOfTheoremRange
from .modnum import DesignParams, cyclotomic_coset, defining_set, scale_set

CLOSED_FORM = "closed_form"
COSET_ORACLE = "coset_oracle"


class NotCoveredByTheorem(ValueError):
    """No closed form exists for these parameters (Hermitian m = 2)."""


@dataclass(frozen=True)
class ContainmentVerdict:
    """Outcome of a dual-containment decision.

    witness is a residue in the intersection of Z with its scaled image,
    present exactly when the oracle method refutes containment.
    """

    contains_dual: bool
    method: str
    delta_max: int | None = None
    witness: int | None = None


def delta_max_euclidean(q: int, m: int) -> int:
    """Largest designed distance with Euclidean dual containment (m >= 2).

    Values below 2 mean no admissible code exists for these (q, m); the
    formula value is returned as-is and interpreted at call sites.
    """
    if m < 2:
        raise ValueError(f"the Euclidean threshold requires m >= 2, got m = {m}")
    return q ** ((m + 1) // 2) - 1 - (q - 2) * (m % 2)


def delta_max_hermitian(q: int, m: int) -> int:
    """Largest designed distance with Hermitian dual containment.

    q is the subfield size (the code lives over F_{q^2} with length
    q^(2m) - 1).  m = 2 is not covered by any closed form and raises
    NotCoveredByTheorem; use the coset oracle there.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m == 2:
        raise NotCoveredByTheorem(
            "no closed-form Hermitian threshold exists for m = 2; "
            "use the coset oracle")
    even = 1 - (m % 2)
    return q ** (m + even) - 1 - (q * q - 2) * even


def _oracle_verdict(params: DesignParams, factor: int) -> ContainmentVerdict:
    z = defining_set(params)
    scaled = scale_set(z, factor)
    inter = sorted(set(z.residues) & set(scaled))
    if inter:
        return ContainmentVerdict(False, COSET_ORACLE, witness=inter[0])
    return ContainmentVerdict(True, COSET_ORACLE)


def contains_euclidean_dual(params: DesignParams,
                            method: str = CLOSED_FORM) -> ContainmentVerdict:
    """Does the code contain its Euclidean dual?

    method="closed_form" compares delta against the threshold (m >= 2);
    method="coset_oracle" intersects Z with Z^{-1} and works for any m.
    """
    if params.coset_base != params.q:
        raise ValueError("Euclidean containment expects alphabet-base cosets")
    if method == CLOSED_FORM:
        dm = delta_max_euclidean(params.q, params.m)
        return ContainmentVerdict(params.delta <= dm, CLOSED_FORM, delta_max=dm)
    if method == COSET_ORACLE:
        return _oracle_verdict(params, -1)
    raise ValueError(f"unknown method {method!r}")


def contains_hermitian_dual(params: DesignParams,
                            method: str = CLOSED_FORM) -> ContainmentVerdict:
    """Does the code (over F_{q0^2}) contain its Hermitian dual?

    Closed-form requests with m = 2 are silently routed to the coset oracle
    and the verdict's method says so; the formula does not cover that case.
    """
    q0 = params.hermitian_base
    if params.coset_base != params.q:
        raise ValueError("Hermitian containment expects alphabet-base cosets")
    if method == CLOSED_FORM and params.m != 2:
        dm = delta_max_hermitian(q0, params.m)
        return ContainmentVerdict(params.delta <= dm, CLOSED_FORM, delta_max=dm)
    if method not in (CLOSED_FORM, COSET_ORACLE):
        raise ValueError(f"unknown method {method!r}")
    return _oracle_verdict(params, -q0)


def coset_oracle_delta_max(n: int, base: int, factor: int) -> int:
    """Largest delta for which Z_delta and factor*Z_delta stay disjoint.

    Incremental walk: Z grows one coset at a time and only the freshly added
    residues can create an intersection, so the walk stops at the first
    failing delta.  Because defining sets are nested, every larger delta
    fails as well; the sweep drivers rely on exactly that monotonicity.
    """
    finv = pow(factor % n, -1, n)
    z: set[int] = set()
    for delta in range(2, n + 1):
        x = delta - 1
        if x not in z:
            new = cyclotomic_coset(n, base, x).elements
            z.update(new)
            for e in new:
                if (factor * e) % n in z or (finv * e) % n in z:
                    return delta - 1
    return n


def dual_distance_bound_euclidean(params: DesignParams) -> int:
    """Certified lower bound delta_max + 1 on the Euclidean dual distance.

    Valid for 2 <= delta <= delta_max (the dual's defining set then contains
    the full consecutive run 0 .. delta_max - 1).
    """
    dm = delta_max_euclidean(params.q, params.m)
    if params.delta > dm:
        raise OutOfTheoremRange(
            f"dual-distance bound needs delta <= delta_max = {dm}, "
            f"got delta = {params.delta}")
    return dm + 1


def dual_distance_bound_hermitian(params: DesignParams) -> int:
    """Certified lower bound delta_max + 1 on the Hermitian dual distance."""
    q0 = params.hermitian_base
    dm = delta_max_hermitian(q0, params.m)
    if params.delta > dm:
        raise OutOfTheoremRange(
            f"dual-distance bound needs delta <= delta_max = {dm}, "
            f"got delta = {params.delta}")
    return dm + 1
