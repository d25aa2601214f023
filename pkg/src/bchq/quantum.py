"""Quantum stabilizer code parameters derived from dual-containing BCH codes.

Two families are emitted, both via the standard constructions that turn a
classical [n, k]_q code containing its (Euclidean or Hermitian) dual into an
[[n, 2k - n, >= delta]] stabilizer code:

    css_from_bch(q, m, delta)        [[q^m-1,  q^m-1  - 2m*ceil((delta-1)(1-1/q)),   >= delta]]_q
    hermitian_from_bch(q, m, delta)  [[q^(2m)-1, q^(2m)-1 - 2m*ceil((delta-1)(1-1/q^2)), >= delta]]_q

Only parameter records are produced; no stabilizer matrices are built.
Every emitted record has passed the corresponding containment verdict, and
the logical dimension is always computed from the exact defining-set size
(which provably matches the closed forms above within their ranges).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .bchcore import OutOfTheoremRange, formula_delta_limit, formula_dimension_value
from .duality import (
    CLOSED_FORM,
    COSET_ORACLE,
    coset_oracle_delta_max,
    delta_max_euclidean,
    delta_max_hermitian,
)
from .modnum import DesignParams, defining_set

CSS_EUCLIDEAN = "css_euclidean"
HERMITIAN = "hermitian"


class DualContainmentError(ValueError):
    """The classical code does not contain its dual; nothing can be emitted."""


@dataclass(frozen=True)
class QuantumParams:
    """An [[n, k, d >= d_lower]]_q parameter record with purity annotation.

    purity_up_to is delta_max + 1 (no stabilizer errors of weight below it
    that act trivially); d_exact and pure are filled in by
    purity_refinement when an exhaustively computed classical distance is
    available.
    """

    n: int
    k: int
    d_lower: int
    purity_up_to: int | None
    construction: str
    base_field: int
    containment_method: str
    d_exact: int | None = None
    pure: bool = False

    def __str__(self) -> str:
        d = f"{self.d_exact}" if self.d_exact is not None else f">={self.d_lower}"
        return f"[[{self.n}, {self.k}, {d}]]_{self.base_field}"


def css_from_bch(q: int, m: int, delta: int) -> QuantumParams:
    """Quantum code from a Euclidean dual-containing BCH code (m >= 2).

    Refuses delta beyond the Euclidean threshold: past it the classical
    code no longer contains its dual and the construction does not apply.
    """
    dm = delta_max_euclidean(q, m)
    if not 2 <= delta <= dm:
        raise DualContainmentError(
            f"delta = {delta} is outside [2, delta_max = {dm}] for "
            f"q = {q}, m = {m}: the classical code would not contain "
            "its Euclidean dual")
    params = DesignParams(q, m, delta)
    k_classical = params.n - len(defining_set(params).residues)
    # the admissible range always sits inside the dimension-formula window
    assert delta <= formula_delta_limit(q, m)
    assert k_classical == formula_dimension_value(q, m, delta)
    return QuantumParams(
        n=params.n,
        k=2 * k_classical - params.n,
        d_lower=delta,
        purity_up_to=dm + 1,
        construction=CSS_EUCLIDEAN,
        base_field=q,
        containment_method=CLOSED_FORM,
    )


def hermitian_from_bch(q: int, m: int, delta: int,
                       allow_beyond_theorem_range: bool = False) -> QuantumParams:
    """Quantum code from a Hermitian dual-containing BCH code over F_{q^2}.

    The stated family covers 2 <= delta <= q^m - 1.  For even m the
    containment threshold reaches further (up to q^(m+1) - q^2 + 1); those
    extra codes are valid but only emitted under
    allow_beyond_theorem_range=True, with the dimension taken from the
    exact defining-set size.  For m = 2 there is no closed-form threshold
    and containment is decided by the coset oracle (method recorded).
    """
    stated_limit = q ** m - 1
    params = DesignParams.hermitian(q, m, delta)
    if delta > stated_limit and not allow_beyond_theorem_range:
        raise OutOfTheoremRange(
            f"delta = {delta} exceeds the stated family range "
            f"[2, q^m - 1 = {stated_limit}]; pass "
            "allow_beyond_theorem_range=True to emit codes up to the "
            "containment threshold")
    if m != 2:
        dm = delta_max_hermitian(q, m)
        method = CLOSED_FORM
    else:
        dm = coset_oracle_delta_max(params.n, params.coset_base, -q)
        method = COSET_ORACLE
    if not 2 <= delta <= dm:
        raise DualContainmentError(
            f"delta = {delta} is outside [2, delta_max = {dm}] for the "
            f"length {params.n} code over F_{q * q}: the classical code "
            "would not contain its Hermitian dual")
    k_classical = params.n - len(defining_set(params).residues)
    if delta <= stated_limit:
        assert k_classical == formula_dimension_value(q * q, m, delta)
    return QuantumParams(
        n=params.n,
        k=2 * k_classical - params.n,
        d_lower=delta,
        purity_up_to=dm + 1,
        construction=HERMITIAN,
        base_field=q,
        containment_method=method,
    )


def purity_refinement(qp: QuantumParams,
                      true_d: int | None = None) -> QuantumParams:
    """Upgrade a record with an exhaustively computed classical distance.

    When the classical code's true distance does not exceed delta_max the
    quantum code is pure with exactly that distance; otherwise the record
    is returned unchanged.
    """
    if true_d is None or qp.purity_up_to is None:
        return qp
    if true_d <= qp.purity_up_to - 1:
        return replace(qp, d_exact=true_d, pure=True)
    return qp
