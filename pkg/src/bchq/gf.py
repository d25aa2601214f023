"""Finite field towers F_q <= F_{q^m} with log/antilog tables.

Elements of F_{p^d} are encoded as integers in [0, p^d): the base-p digits
of the encoding are the coefficients of the element's polynomial
representation over F_p, lowest degree first.  Multiplication goes through
discrete-log tables; addition is digit-wise mod p (XOR when p = 2).

Field construction is deterministic: the modulus is the primitive
polynomial of the requested degree whose low-to-high coefficient vector
encodes to the smallest integer, so every generator polynomial and table in
this package is reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .modnum import DesignParams, cyclotomic_coset, defining_set, prime_power_parts

DEFAULT_TABLE_CAP = 1 << 20


class FieldTooLarge(ValueError):
    """Raised when a field exceeds the log/antilog tabulation cap."""


class Field:
    """Arithmetic in F_{p^d}; immutable once built, safe for concurrent reads."""

    def __init__(self, p: int, degree: int, modulus: tuple[int, ...] | None = None):
        pp, pe = prime_power_parts(p)
        if pe != 1:
            raise ValueError(f"characteristic must be prime, got {p}")
        if degree < 1:
            raise ValueError(f"degree must be >= 1, got {degree}")
        self.p = p
        self.degree = degree
        self.order = p ** degree
        if modulus is not None:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != degree + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of the requested degree")
            tables = self._try_modulus(modulus)
            if tables is None:
                raise ValueError(f"modulus {modulus} is not primitive over F_{p}")
            self.modulus = modulus
            self.exp, self.log = tables
        else:
            self.modulus, (self.exp, self.log) = self._search_modulus()

    # -- construction ------------------------------------------------------

    def _search_modulus(self):
        p, d = self.p, self.degree
        if d == 1:
            g = _smallest_primitive_root(p)
            modulus = ((p - g) % p, 1)
            return modulus, self._try_modulus(modulus)
        for code in range(p ** d, 2 * p ** d):
            c, coeffs = code, []
            for _ in range(d + 1):
                coeffs.append(c % p)
                c //= p
            if coeffs[0] == 0:
                continue
            modulus = tuple(coeffs)
            tables = self._try_modulus(modulus)
            if tables is not None:
                return modulus, tables
        raise AssertionError("no primitive polynomial found")  # unreachable

    def _try_modulus(self, modulus):
        """Build exp/log off the root of `modulus`; None if it is not primitive.

        The root generates all p^d - 1 units iff the modulus is primitive
        (a single walk decides irreducibility and primitivity together).
        """
        p, d, o = self.p, self.degree, self.order
        exp = [0] * (o - 1)
        log = [-1] * o
        if d == 1:
            g = (-modulus[0]) % p
            x = 1
            for i in range(o - 1):
                if log[x] >= 0:
                    return None
                exp[i] = x
                log[x] = i
                x = (x * g) % p
            return (exp, log) if x == 1 else None
        cur = [0] * d
        cur[0] = 1
        for i in range(o - 1):
            enc = 0
            for j in range(d - 1, -1, -1):
                enc = enc * p + cur[j]
            if log[enc] >= 0:
                return None
            exp[i] = enc
            log[enc] = i
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for j in range(d):
                    cur[j] = (cur[j] - carry * modulus[j]) % p
        enc = 0
        for j in range(d - 1, -1, -1):
            enc = enc * p + cur[j]
        return (exp, log) if enc == 1 else None

    # -- scalar ops --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, out, mult = self.p, 0, 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, out, mult = self.p, 0, 1
        while a:
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[(-self.log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        return self.exp[(self.log[a] * k) % (self.order - 1)]

    # -- dense polynomial ops (tuples, lowest degree first) ----------------

    def poly_mul(self, a, b) -> tuple[int, ...]:
        if not a or not b:
            return ()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = self.add(out[i + j], self.mul(ai, bj))
        return _strip(out)

    def poly_divmod(self, a, b) -> tuple[tuple[int, ...], tuple[int, ...]]:
        b = _strip(b)
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(_strip(a))
        db = len(b) - 1
        lead_inv = self.inv(b[-1])
        quot = [0] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            coef = self.mul(rem[-1], lead_inv)
            shift = len(rem) - 1 - db
            quot[shift] = coef
            for i, bi in enumerate(b):
                if bi:
                    rem[shift + i] = self.sub(rem[shift + i], self.mul(coef, bi))
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return _strip(quot), tuple(rem)

    def poly_eval(self, a, x: int) -> int:
        acc = 0
        for c in reversed(a):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def poly_from_roots(self, roots) -> tuple[int, ...]:
        out: tuple[int, ...] = (1,)
        for r in roots:
            out = self.poly_mul(out, (self.neg(r), 1))
        return out

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Field)
                and (self.p, self.degree, self.modulus)
                == (other.p, other.degree, other.modulus))

    def __hash__(self) -> int:
        return hash((self.p, self.degree, self.modulus))

    def __repr__(self) -> str:
        return f"Field(p={self.p}, degree={self.degree}, modulus={self.modulus})"


def _strip(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    n = p - 1
    fac = []
    t, d = n, 2
    while d * d <= t:
        if t % d == 0:
            fac.append(d)
            while t % d == 0:
                t //= d
        d += 1
    if t > 1:
        fac.append(t)
    for g in range(2, p):
        if all(pow(g, n // f, p) != 1 for f in fac):
            return g
    raise AssertionError("no primitive root found")  # unreachable


@dataclass(frozen=True)
class FieldPoly:
    """Dense polynomial over a fixed field, coefficients lowest degree first."""

    field: Field
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "FieldPoly") -> "FieldPoly":
        return FieldPoly(self.field, self.field.poly_mul(self.coeffs, other.coeffs))

    def divmod_by(self, other: "FieldPoly") -> tuple["FieldPoly", "FieldPoly"]:
        q, r = self.field.poly_divmod(self.coeffs, other.coeffs)
        return FieldPoly(self.field, q), FieldPoly(self.field, r)

    def divides(self, other: "FieldPoly") -> bool:
        return other.divmod_by(self)[1].coeffs == ()

    def evaluate(self, x: int) -> int:
        return self.field.poly_eval(self.coeffs, x)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(terms)


class FieldSpec:
    """F_{q^m} together with its designated subfield F_q and generator alpha.

    Both fields are represented over the common prime field; the subfield
    sits inside the extension via the embedding table (index = F_q encoding,
    value = F_{q^m} encoding).  alpha is the extension element with discrete
    log 1, a root of the extension modulus.
    """

    def __init__(self, q: int, m: int, ext: Field, base: Field,
                 embed: tuple[int, ...]):
        self.q = q
        self.m = m
        self.n = ext.order - 1
        self.ext = ext
        self.base = base
        self.p = ext.p
        self.degree = ext.degree
        self.order = ext.order
        self.modulus = ext.modulus
        self.alpha = ext.exp[1 % (ext.order - 1)]
        self.embed_table = embed
        self._project = {e: i for i, e in enumerate(embed)}

    def alpha_pow(self, z: int) -> int:
        """alpha^z as an extension-field encoding."""
        return self.ext.exp[z % (self.order - 1)]

    def embed(self, c: int) -> int:
        """Encoding of the base-field element c inside the extension."""
        return self.embed_table[c]

    def project(self, c: int) -> int:
        """Base-field encoding of an extension element lying in F_q."""
        try:
            return self._project[c]
        except KeyError:
            raise ValueError(f"element {c} is not in the F_{self.q} subfield") from None

    def in_base(self, c: int) -> bool:
        """Frobenius membership test: c is in F_q iff c^q = c."""
        return self.ext.pow_(c, self.q) == c

    def project_poly(self, coeffs) -> FieldPoly:
        return FieldPoly(self.base, tuple(self.project(c) for c in coeffs))

    def __repr__(self) -> str:
        return f"FieldSpec(q={self.q}, m={self.m}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def build_field(q: int, m: int, modulus: tuple[int, ...] | None = None,
                table_cap: int = DEFAULT_TABLE_CAP) -> FieldSpec:
    """Construct F_{q^m} with F_q located inside it.

    The modulus (over the prime field, degree matching [F_{q^m} : F_p]) may
    be overridden to check that code parameters do not depend on the choice
    of primitive polynomial.  Results are cached; FieldSpec is immutable.
    """
    p, e = prime_power_parts(q)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    order = q ** m
    if order > table_cap:
        raise FieldTooLarge(
            f"field order {order} exceeds the tabulation cap {table_cap}")
    ext = Field(p, e * m, modulus)
    if e * m == ext.degree and m == 1 and modulus is None:
        base = ext
    elif m == 1:
        base = ext
    else:
        base = Field(p, e)
    if m == 1:
        embed = tuple(range(q))
    else:
        embed = _embed_subfield(ext, base)
    return FieldSpec(q, m, ext, base, embed)


def _embed_subfield(ext: Field, base: Field) -> tuple[int, ...]:
    """Embedding table F_q -> F_{q^m}.

    The image of the base primitive element must be a root of the base
    modulus inside the extension; candidates live in the unique subgroup of
    order q - 1.  The root with the smallest encoding is chosen so the
    embedding is deterministic.
    """
    q = base.order
    s = (ext.order - 1) // (q - 1)
    roots = []
    for t in range(1, q):
        cand = ext.exp[(t * s) % (ext.order - 1)]
        acc = 0
        for c in reversed(base.modulus):
            acc = ext.add(ext.mul(acc, cand), c)  # prime coeffs encode as themselves
        if acc == 0:
            roots.append(cand)
    gamma = min(roots)
    embed = [0] * q
    for v in range(q):
        acc, t, i = 0, v, 0
        while t:
            digit = t % base.p
            if digit:
                acc = ext.add(acc, ext.mul(digit, ext.pow_(gamma, i)))
            t //= base.p
            i += 1
        embed[v] = acc
    if len(set(embed)) != q:
        raise AssertionError("subfield embedding is not injective")  # unreachable
    return tuple(embed)


def minimal_polynomial(spec: FieldSpec, x: int) -> FieldPoly:
    """Product of (X - alpha^z) over the coset of x; coefficients in F_q."""
    if not 0 <= x < spec.n:
        raise ValueError(f"exponent must lie in [0, {spec.n}), got {x}")
    coset = cyclotomic_coset(spec.n, spec.q, x)
    coeffs = spec.ext.poly_from_roots([spec.alpha_pow(z) for z in coset.elements])
    return spec.project_poly(coeffs)


def generator_polynomial(params: DesignParams,
                         field: FieldSpec | None = None) -> FieldPoly:
    """Generator of the BCH code: the product of the minimal polynomials of
    alpha^x over the distinct cosets in the defining set.

    Divides X^n - 1 exactly and has degree |Z|.
    """
    if params.coset_base != params.q:
        raise ValueError("generator polynomials require alphabet-base cosets")
    spec = field if field is not None else build_field(params.q, params.m)
    ds = defining_set(params)
    g = FieldPoly(spec.base, (1,))
    for coset in ds.cosets:
        g = g * minimal_polynomial(spec, coset.representative)
    if g.degree != len(ds.residues):
        raise AssertionError("generator degree differs from |Z|")  # unreachable
    return g


def euclidean_dual_generator(params: DesignParams,
                             field: FieldSpec | None = None) -> FieldPoly:
    """Generator of the Euclidean dual code: product of (X - alpha^{-x})
    over x outside the defining set.  Degree n - |Z|."""
    spec = field if field is not None else build_field(params.q, params.m)
    return _dual_generator(params, spec, scale=1)


def hermitian_dual_generator(params: DesignParams,
                             field: FieldSpec | None = None) -> FieldPoly:
    """Generator of the Hermitian dual code: product of (X - alpha^{-q0 x})
    over x outside the defining set, q0 = sqrt(alphabet).  Degree n - |Z|."""
    q0 = params.hermitian_base
    spec = field if field is not None else build_field(params.q, params.m)
    return _dual_generator(params, spec, scale=q0)


def _dual_generator(params: DesignParams, spec: FieldSpec, scale: int) -> FieldPoly:
    n = params.n
    z = set(defining_set(params).residues)
    roots = [spec.alpha_pow((-scale * x) % n) for x in range(n) if x not in z]
    coeffs = spec.ext.poly_from_roots(roots)
    return spec.project_poly(coeffs)
