"""Residue arithmetic modulo n = q^m - 1: cyclotomic cosets and defining sets.

Everything in this module is plain integer arithmetic, so it works for code
lengths far beyond what any field table could hold.  All sets are
canonicalized (sorted, deduplicated) and all containers are immutable, so
equality is structural and values are safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd


def prime_power_parts(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p^e and p prime, or raise ValueError."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q!r}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        p = q
    e = 0
    t = q
    while t % p == 0:
        t //= p
        e += 1
    if t != 1:
        raise ValueError(f"q = {q} is not a prime power")
    return p, e


@dataclass(frozen=True)
class DesignParams:
    """The design triple (q, m, delta) of a primitive narrow-sense BCH code.

    q is the alphabet of the classical code and the length is n = q^m - 1.
    coset_base is the multiplier generating the cyclotomic cosets; it equals
    q and is stored explicitly so that Hermitian-regime parameters (alphabet
    q0^2, built via :meth:`hermitian`) can never be confused with base-q0
    cosets over the same length.
    """

    q: int
    m: int
    delta: int
    coset_base: int = 0  # 0 means "default to q"

    def __post_init__(self) -> None:
        prime_power_parts(self.q)
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.coset_base == 0:
            object.__setattr__(self, "coset_base", self.q)
        n = self.n
        if gcd(self.coset_base, n) != 1:
            raise ValueError(
                f"coset base {self.coset_base} is not coprime to n = {n}")
        if not 2 <= self.delta <= n:
            raise ValueError(
                f"delta must satisfy 2 <= delta <= n = {n}, got {self.delta}")

    @property
    def n(self) -> int:
        """Code length q^m - 1 (exact, big-integer safe)."""
        return self.q ** self.m - 1

    @classmethod
    def hermitian(cls, q: int, m: int, delta: int) -> "DesignParams":
        """Parameters of a length q^(2m)-1 code over F_{q^2}.

        The cosets of such a code use the multiplier q^2, so the alphabet
        exponent m here matches the coset sizes (|C_x| <= m).
        """
        prime_power_parts(q)
        return cls(q * q, m, delta, coset_base=q * q)

    @property
    def hermitian_base(self) -> int:
        """q0 with alphabet q = q0^2; raises if q is not a perfect square."""
        r = int(self.q ** 0.5)
        while r * r < self.q:
            r += 1
        if r * r != self.q:
            raise ValueError(
                f"alphabet {self.q} is not a perfect square; "
                "no Hermitian dual is defined")
        return r


@dataclass(frozen=True)
class CyclotomicCoset:
    """Orbit of a residue under multiplication by a fixed base modulo n."""

    n: int
    base: int
    representative: int
    elements: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class DefiningSet:
    """Union of the cosets of 1 .. delta-1; the root exponents of the code."""

    params: DesignParams
    residues: tuple[int, ...]
    cosets: tuple[CyclotomicCoset, ...] = field(repr=False)

    def __contains__(self, x: int) -> bool:
        return x in set(self.residues)

    def __len__(self) -> int:
        return len(self.residues)


def cyclotomic_coset(n: int, base: int, x: int) -> CyclotomicCoset:
    """The coset C_x = {x * base^j mod n}, sorted ascending.

    Requires 0 <= x < n and gcd(base, n) = 1.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= x < n:
        raise ValueError(f"x must lie in [0, {n}), got {x}")
    if gcd(base, n) != 1:
        raise ValueError(f"base {base} is not coprime to n = {n}")
    seen = set()
    e = x
    while e not in seen:
        seen.add(e)
        e = (e * base) % n
    elements = tuple(sorted(seen))
    return CyclotomicCoset(n, base, elements[0], elements)


def defining_set(params: DesignParams) -> DefiningSet:
    """Z = C_1 | C_2 | ... | C_{delta-1} with the parameters' coset base."""
    n, base = params.n, params.coset_base
    residues: set[int] = set()
    cosets: list[CyclotomicCoset] = []
    for x in range(1, params.delta):
        if x in residues:
            continue
        c = cyclotomic_coset(n, base, x)
        cosets.append(c)
        residues.update(c.elements)
    cosets.sort(key=lambda c: c.representative)
    return DefiningSet(params, tuple(sorted(residues)), tuple(cosets))


def scale_set(s, factor: int, n: int | None = None) -> tuple[int, ...]:
    """{factor * z mod n : z in s}, sorted.

    s may be a DefiningSet (n taken from its parameters) or any iterable of
    residues together with an explicit n.  factor must be a unit mod n;
    factor = -1 gives Z^{-1} and factor = -q gives Z^{-q}.
    """
    if isinstance(s, DefiningSet):
        residues = s.residues
        n = s.params.n
    else:
        if n is None:
            raise ValueError("n is required when scaling a bare residue set")
        residues = tuple(s)
    if gcd(factor % n, n) != 1:
        raise ValueError(f"factor {factor} is not coprime to n = {n}")
    return tuple(sorted({(factor * z) % n for z in residues}))
