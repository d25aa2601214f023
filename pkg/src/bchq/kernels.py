"""Hot numeric kernels for the brute-force oracles.

Every kernel exists twice: a scalar-loop version compiled with numba
@njit, and a vectorized pure-numpy fallback.  The active backend is chosen
at import time; set BCHQ_DISABLE_NUMBA=1 (or uninstall numba) to force the
numpy path.  Both paths are exercised against each other in the tests and
timed against each other in benchmarks/bench_kernels.py.

Field elements are table-encoded: a kernel receives 2D add/sub/mul tables
and a 1D inverse table for one field and never interprets encodings itself,
so the same code serves F_2 .. F_q for any tabulated q.
"""

from __future__ import annotations

import os

import numpy as np

_ENV_FLAG = "BCHQ_DISABLE_NUMBA"
_disabled = os.environ.get(_ENV_FLAG, "").strip() not in ("", "0")

try:
    from numba import njit

    _have_numba = True
except ImportError:  # pragma: no cover - exercised only without numba
    njit = None
    _have_numba = False

_use_numba = _have_numba and not _disabled


def backend() -> str:
    """Name of the active kernel backend: "numba" or "numpy"."""
    return "numba" if _use_numba else "numpy"


# ---------------------------------------------------------------------------
# field op tables

_TABLE_CACHE: dict = {}


class OpTables:
    """Numpy operation tables for one finite field (order <= table width)."""

    def __init__(self, field):
        o = field.order
        idx = np.arange(o, dtype=np.int64)
        if field.p == 2:
            add = (idx[:, None] ^ idx[None, :]).astype(np.uint16)
            neg = idx.astype(np.uint16)
        else:
            # digit-wise mod-p addition, vectorized over base-p digit planes
            add = np.zeros((o, o), dtype=np.int64)
            neg = np.zeros(o, dtype=np.int64)
            a = idx[:, None]
            b = idx[None, :]
            mult = 1
            for _ in range(field.degree):
                da = (a // mult) % field.p
                db = (b // mult) % field.p
                add += ((da + db) % field.p) * mult
                neg += ((-((idx // mult) % field.p)) % field.p) * mult
                mult *= field.p
            add = add.astype(np.uint16)
            neg = neg.astype(np.uint16)
        log = np.array([0] + [field.log[i] for i in range(1, o)], dtype=np.int64)
        exp = np.array(field.exp, dtype=np.uint16)
        prod = (log[:, None] + log[None, :]) % (o - 1)
        mul = exp[prod]
        mul[0, :] = 0
        mul[:, 0] = 0
        inv = np.zeros(o, dtype=np.uint16)
        inv[1:] = exp[(-log[1:]) % (o - 1)]
        self.q = o
        self.add = add
        self.sub = add[:, neg]  # sub[a, b] = add[a, neg[b]]
        self.mul = mul
        self.inv = inv
        self.neg = neg
        self.exp = exp
        self.log = log


def op_tables(field) -> OpTables:
    """Cached OpTables for a Field (keyed by its defining data)."""
    key = (field.p, field.degree, field.modulus)
    tab = _TABLE_CACHE.get(key)
    if tab is None:
        tab = OpTables(field)
        _TABLE_CACHE[key] = tab
    return tab


# ---------------------------------------------------------------------------
# minimum nonzero codeword weight by message enumeration

def _min_weight_messages_loop(rows, q, add, sub, mul, budget):
    k, n = rows.shape
    digits = np.zeros(k, np.int64)
    cw = np.zeros(n, np.uint16)
    best = n + 1
    weight = 0
    count = 0
    while count < budget:
        i = 0
        while i < k:
            old = digits[i]
            new = old + 1
            if new == q:
                new = 0
            digits[i] = new
            delta = sub[new, old]
            for j in range(n):
                v = cw[j]
                w = add[v, mul[delta, rows[i, j]]]
                cw[j] = w
                if v == 0 and w != 0:
                    weight += 1
                elif v != 0 and w == 0:
                    weight -= 1
            if new != 0:
                break
            i += 1
        if i == k:  # odometer wrapped: all q^k - 1 nonzero messages seen
            return best, count, True
        count += 1
        if weight < best:
            best = weight
    return best, count, False


def _min_weight_messages_np(rows, q, add, sub, mul, budget):
    k, n = rows.shape
    # suffix table: codewords of every combination of the last b digits
    b = 1
    while b < k and q ** (b + 1) <= 65536:
        b += 1
    suffix = np.zeros((1, n), dtype=np.uint16)
    for i in range(b):
        row = rows[k - 1 - i]
        blocks = [add[suffix, mul[v, row][None, :]] for v in range(q)]
        suffix = np.concatenate(blocks, axis=0)
    block = suffix.shape[0]
    best = n + 1
    count = 0
    w = np.count_nonzero(suffix, axis=1)
    if block > 1:
        best = int(w[1:].min())
    count += block - 1
    kp = k - b
    if kp == 0:
        return best, count, True
    digits = np.zeros(kp, np.int64)
    prefix = np.zeros(n, dtype=np.uint16)
    total_prefixes = q ** kp
    for _ in range(total_prefixes - 1):
        if count + block > budget:
            return best, count, False
        i = 0
        while True:
            old = digits[i]
            new = old + 1
            if new == q:
                new = 0
            digits[i] = new
            delta = sub[new, old]
            prefix = add[prefix, mul[delta, rows[i]]]
            if new != 0:
                break
            i += 1
        w = np.count_nonzero(add[prefix[None, :], suffix], axis=1)
        best = min(best, int(w.min()))
        count += block
    return best, count, True


if _use_numba:
    _min_weight_messages_jit = njit(cache=True)(_min_weight_messages_loop)
else:  # pragma: no cover
    _min_weight_messages_jit = None


def min_weight_messages(rows: np.ndarray, tables: OpTables,
                        budget: int) -> tuple[int, int, bool]:
    """Minimum weight over nonzero messages of the row space of `rows`.

    Returns (min_weight, messages_enumerated, exact).  exact is True only
    when every one of the q^k - 1 nonzero messages was evaluated.
    """
    rows = np.ascontiguousarray(rows, dtype=np.uint16)
    if _use_numba:
        best, count, exact = _min_weight_messages_jit(
            rows, tables.q, tables.add, tables.sub, tables.mul, budget)
    else:
        best, count, exact = _min_weight_messages_np(
            rows, tables.q, tables.add, tables.sub, tables.mul, budget)
    return int(best), int(count), bool(exact)


# ---------------------------------------------------------------------------
# membership of rows in the span of an echelon row set

def _rows_in_span_loop(span, pivots, pivot_inv, test, add, sub, mul):
    k, n = span.shape
    r = test.shape[0]
    work = np.zeros(n, np.uint16)
    for t in range(r):
        for j in range(n):
            work[j] = test[t, j]
        for i in range(k):
            c = work[pivots[i]]
            if c != 0:
                f = mul[c, pivot_inv[i]]
                for j in range(n):
                    work[j] = sub[work[j], mul[f, span[i, j]]]
        for j in range(n):
            if work[j] != 0:
                return t
    return -1


def _rows_in_span_np(span, pivots, pivot_inv, test, add, sub, mul):
    k, _ = span.shape
    work = test.copy()
    for i in range(k):
        f = mul[work[:, pivots[i]], pivot_inv[i]]
        work = sub[work, mul[f[:, None], span[i][None, :]]]
    bad = np.nonzero(work.any(axis=1))[0]
    return int(bad[0]) if bad.size else -1


if _use_numba:
    _rows_in_span_jit = njit(cache=True)(_rows_in_span_loop)
else:  # pragma: no cover
    _rows_in_span_jit = None


def rows_in_span(span: np.ndarray, test: np.ndarray,
                 tables: OpTables) -> int:
    """Index of the first row of `test` outside the row space of `span`,
    or -1 when every row is inside.

    `span` rows must be in echelon form (strictly increasing pivot columns);
    rows built as shifts of a polynomial with nonzero constant term are.
    """
    span = np.ascontiguousarray(span, dtype=np.uint16)
    test = np.ascontiguousarray(test, dtype=np.uint16)
    pivots = np.empty(span.shape[0], dtype=np.int64)
    pivot_inv = np.empty(span.shape[0], dtype=np.uint16)
    prev = -1
    for i in range(span.shape[0]):
        nz = np.nonzero(span[i])[0]
        if nz.size == 0 or nz[0] <= prev:
            raise ValueError("span rows are not in echelon form")
        pivots[i] = nz[0]
        prev = int(nz[0])
        pivot_inv[i] = tables.inv[span[i, nz[0]]]
    if _use_numba:
        return int(_rows_in_span_jit(span, pivots, pivot_inv, test,
                                     tables.add, tables.sub, tables.mul))
    return _rows_in_span_np(span, pivots, pivot_inv, test,
                            tables.add, tables.sub, tables.mul)


# ---------------------------------------------------------------------------
# orthogonality of two row sets under a (possibly conjugated) inner product

def _rows_orthogonal_loop(a, b, conj, add, mul):
    ra, n = a.shape
    rb = b.shape[0]
    for i in range(ra):
        for j in range(rb):
            acc = np.uint16(0)
            for t in range(n):
                acc = add[acc, mul[conj[a[i, t]], b[j, t]]]
            if acc != 0:
                return False
    return True


def _rows_orthogonal_np(a, b, conj, add, mul):
    ca = conj[a]
    acc = np.zeros((a.shape[0], b.shape[0]), dtype=np.uint16)
    for t in range(a.shape[1]):
        acc = add[acc, mul[ca[:, t][:, None], b[:, t][None, :]]]
    return not acc.any()


if _use_numba:
    _rows_orthogonal_jit = njit(cache=True)(_rows_orthogonal_loop)
else:  # pragma: no cover
    _rows_orthogonal_jit = None


def rows_orthogonal(a: np.ndarray, b: np.ndarray, conj: np.ndarray,
                    tables: OpTables) -> bool:
    """True iff conj(a_i) . b_j = 0 for every row pair.

    `conj` maps each field encoding to its conjugate (identity for the
    plain inner product, x -> x^q0 for the Hermitian one).
    """
    a = np.ascontiguousarray(a, dtype=np.uint16)
    b = np.ascontiguousarray(b, dtype=np.uint16)
    conj = np.ascontiguousarray(conj, dtype=np.uint16)
    if _use_numba:
        return bool(_rows_orthogonal_jit(a, b, conj, tables.add, tables.mul))
    return _rows_orthogonal_np(a, b, conj, tables.add, tables.mul)


# ---------------------------------------------------------------------------
# polynomial helpers over table-encoded coefficients

def _poly_from_roots_loop(roots, neg, add, mul):
    r = roots.shape[0]
    c = np.zeros(r + 1, np.uint16)
    c[0] = 1
    for t in range(r):
        nr = neg[roots[t]]
        for i in range(t + 1, 0, -1):
            c[i] = add[c[i - 1], mul[nr, c[i]]]
        c[0] = mul[nr, c[0]]
    return c


def _poly_from_roots_np(roots, neg, add, mul):
    c = np.zeros(roots.shape[0] + 1, np.uint16)
    c[0] = 1
    for t in range(roots.shape[0]):
        nr = neg[roots[t]]
        shifted = c[:t + 1].copy()
        c[1:t + 2] = add[shifted, mul[nr, c[1:t + 2]]]
        c[0] = mul[nr, c[0]]
    return c


def _poly_mod_loop(num, den, sub, mul, lead_inv):
    dn = den.shape[0] - 1
    r = num.copy()
    for top in range(num.shape[0] - 1, dn - 1, -1):
        c = r[top]
        if c != 0:
            f = mul[c, lead_inv]
            base = top - dn
            for j in range(dn + 1):
                r[base + j] = sub[r[base + j], mul[f, den[j]]]
    return r[:dn]


def _poly_mod_np(num, den, sub, mul, lead_inv):
    dn = den.shape[0] - 1
    r = num.copy()
    for top in range(num.shape[0] - 1, dn - 1, -1):
        c = r[top]
        if c != 0:
            f = mul[c, lead_inv]
            r[top - dn: top + 1] = sub[r[top - dn: top + 1], mul[f, den]]
    return r[:dn]


if _use_numba:
    _poly_from_roots_jit = njit(cache=True)(_poly_from_roots_loop)
    _poly_mod_jit = njit(cache=True)(_poly_mod_loop)
else:  # pragma: no cover
    _poly_from_roots_jit = None
    _poly_mod_jit = None


def poly_from_roots(roots: np.ndarray, tables: OpTables) -> np.ndarray:
    """Monic polynomial with the given roots, coefficients lowest first."""
    roots = np.ascontiguousarray(roots, dtype=np.uint16)
    if _use_numba:
        return _poly_from_roots_jit(roots, tables.neg, tables.add, tables.mul)
    return _poly_from_roots_np(roots, tables.neg, tables.add, tables.mul)


def poly_mod(num: np.ndarray, den: np.ndarray, tables: OpTables) -> np.ndarray:
    """Remainder of num modulo den (den's leading coefficient nonzero)."""
    num = np.ascontiguousarray(num, dtype=np.uint16)
    den = np.ascontiguousarray(den, dtype=np.uint16)
    if den.shape[0] == 0 or den[-1] == 0:
        raise ValueError("divisor must have a nonzero leading coefficient")
    lead_inv = tables.inv[den[-1]]
    if _use_numba:
        return _poly_mod_jit(num, den, tables.sub, tables.mul, lead_inv)
    return _poly_mod_np(num, den, tables.sub, tables.mul, lead_inv)
