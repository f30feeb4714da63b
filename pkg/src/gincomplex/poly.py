"""Monomials, graded orders, sparse polynomials and ideals over F_p.

Variables are x0 > x1 > ... > x(n-1); the ambient count is a runtime
parameter so the same kernel serves P^4 surfaces, their P^3 quotients and
curve examples.

Exponent vectors are dense int64 rows (ambient dimension stays tiny, degrees
reach the few dozens).  A polynomial stores its terms strictly descending in
the order it is tagged with; switching orders is an explicit resort, never an
implicit conversion, so graded-lex and graded-revlex pipelines cannot share
sorted state by accident.
"""

from math import comb

import numpy as np

from . import _kernels
from .errors import (
    GincomplexError,
    RingMismatchError,
    ZeroPolynomialError,
)

LT, EQ, GT = -1, 0, 1

# base for packed per-degree keys; caps every exponent a table can hold
_KEY_BASE = 256
DEGREE_CAP = _KEY_BASE - 1


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples)
# ---------------------------------------------------------------------------

def monomial_degree(e):
    return sum(e)

def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))

def monomial_divides(a, b):
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))

def monomial_div(a, b):
    """Exponent vector of x^a / x^b; requires divisibility."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(v < 0 for v in out):
        raise GincomplexError(f"{b} does not divide {a}")
    return out

def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))

def unit_exponent(nvars, i):
    return tuple(1 if j == i else 0 for j in range(nvars))


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

class MonomialOrder:
    """Total multiplicative order on monomials, exposed as a sort key.

    ``key`` grows with the monomial.  ``index_weights`` gives int64 weights w
    such that, within one total degree, e @ w is injective and *ascending*
    while the monomial descends; the linearity key(m*u) = key(m) + key(u) is
    what the dense kernels rely on.
    """

    name = "?"
    graded = True

    def key(self, e):
        raise NotImplementedError

    def index_weights(self, nvars):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class _GradedLex(MonomialOrder):
    name = "glex"

    def key(self, e):
        return (sum(e),) + tuple(e)

    def index_weights(self, nvars):
        return np.array(
            [-(_KEY_BASE ** (nvars - 1 - j)) for j in range(nvars)],
            dtype=np.int64,
        )


class _GradedRevLex(MonomialOrder):
    name = "grevlex"

    def key(self, e):
        return (sum(e),) + tuple(-v for v in reversed(e))

    def index_weights(self, nvars):
        return np.array([_KEY_BASE ** j for j in range(nvars)], dtype=np.int64)


class _EliminateFirst(MonomialOrder):
    """Block order: variable 0 dominates, graded-revlex inside the rest.

    Used only for the auxiliary-variable quotient/intersection trick; it is
    not graded, so the dense per-degree machinery never sees it.
    """

    name = "elim0"
    graded = False

    def key(self, e):
        rest = e[1:]
        return (e[0], sum(rest)) + tuple(-v for v in reversed(rest))

    def index_weights(self, nvars):
        raise GincomplexError("elimination order has no dense index weights")


GLEX = _GradedLex()
GREVLEX = _GradedRevLex()
ELIM_FIRST = _EliminateFirst()

ORDERS = {"glex": GLEX, "grevlex": GREVLEX}


def compare(order, a, b):
    """LT/EQ/GT for monomials a, b under the given order."""
    if len(a) != len(b):
        raise RingMismatchError(f"exponent lengths differ: {len(a)} vs {len(b)}")
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    if ka < kb:
        return LT
    if ka > kb:
        return GT
    return EQ


# ---------------------------------------------------------------------------
# per-degree monomial tables
# ---------------------------------------------------------------------------

def _enumerate_degree(nvars, degree):
    if nvars == 1:
        return np.array([[degree]], dtype=np.int64)
    blocks = []
    for e0 in range(degree, -1, -1):
        sub = _enumerate_degree(nvars - 1, degree - e0)
        col = np.full((sub.shape[0], 1), e0, dtype=np.int64)
        blocks.append(np.hstack([col, sub]))
    return np.vstack(blocks)


class MonomialTable:
    """All monomials of one degree, descending in the order, with packed keys."""

    __slots__ = ("nvars", "degree", "order", "exps", "keys", "weights")

    def __init__(self, nvars, degree, order):
        self.nvars = nvars
        self.degree = degree
        self.order = order
        self.weights = order.index_weights(nvars)
        exps = _enumerate_degree(nvars, degree)
        keys = exps @ self.weights
        idx = np.argsort(keys, kind="stable")
        self.exps = np.ascontiguousarray(exps[idx])
        self.keys = np.ascontiguousarray(keys[idx])

    def __len__(self):
        return self.exps.shape[0]

    def positions(self, keys):
        """Row indices for packed keys that are known to be in the table."""
        pos = np.searchsorted(self.keys, keys)
        return pos


_TABLE_CACHE = {}
_TABLE_LRU = []
_TABLE_ROW_BUDGET = 4_000_000


def table_size(nvars, degree):
    return comb(degree + nvars - 1, nvars - 1)


def table_for(nvars, degree, order):
    if degree > DEGREE_CAP:
        raise GincomplexError(
            f"degree {degree} exceeds the packed-key cap {DEGREE_CAP}"
        )
    key = (nvars, degree, order.name)
    tab = _TABLE_CACHE.get(key)
    if tab is None:
        tab = MonomialTable(nvars, degree, order)
        _TABLE_CACHE[key] = tab
        _TABLE_LRU.append(key)
        total = sum(len(_TABLE_CACHE[k]) for k in _TABLE_LRU)
        while total > _TABLE_ROW_BUDGET and len(_TABLE_LRU) > 1:
            old = _TABLE_LRU.pop(0)
            if old == key:
                _TABLE_LRU.append(old)
                continue
            total -= len(_TABLE_CACHE.pop(old))
    else:
        if _TABLE_LRU and _TABLE_LRU[-1] != key:
            _TABLE_LRU.remove(key)
            _TABLE_LRU.append(key)
    return tab


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Sparse homogeneous-friendly polynomial, terms descending in ``order``."""

    __slots__ = ("exps", "coeffs", "nvars", "p", "order")

    def __init__(self, exps, coeffs, nvars, p, order, _presorted=False):
        exps = np.asarray(exps, dtype=np.int64).reshape(-1, nvars)
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if not _presorted:
            raise GincomplexError("use Polynomial.from_terms or zero()")
        self.exps = exps
        self.coeffs = coeffs
        self.nvars = nvars
        self.p = p
        self.order = order

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls, nvars, p, order=GLEX):
        return cls(np.zeros((0, nvars), dtype=np.int64),
                   np.zeros(0, dtype=np.int64), nvars, p, order,
                   _presorted=True)

    @classmethod
    def from_terms(cls, terms, nvars, p, order=GLEX):
        """Build from (exponent sequence, coefficient) pairs.

        Coefficients reduce mod p, duplicate monomials merge, zeros drop.
        """
        acc = {}
        for e, c in terms:
            e = tuple(int(v) for v in e)
            if len(e) != nvars:
                raise RingMismatchError(
                    f"exponent length {len(e)} != nvars {nvars}")
            if any(v < 0 for v in e):
                raise GincomplexError(f"negative exponent in {e}")
            acc[e] = (acc.get(e, 0) + int(c)) % p
        items = [(e, c) for e, c in acc.items() if c]
        items.sort(key=lambda t: order.key(t[0]), reverse=True)
        if not items:
            return cls.zero(nvars, p, order)
        exps = np.array([e for e, _ in items], dtype=np.int64)
        coeffs = np.array([c for _, c in items], dtype=np.int64)
        return cls(exps, coeffs, nvars, p, order, _presorted=True)

    @classmethod
    def monomial(cls, exponent, nvars, p, order=GLEX, coeff=1):
        return cls.from_terms([(exponent, coeff)], nvars, p, order)

    @classmethod
    def constant(cls, c, nvars, p, order=GLEX):
        return cls.from_terms([((0,) * nvars, c)], nvars, p, order)

    def _sorted_trusted(self, exps, coeffs):
        return Polynomial(exps, coeffs, self.nvars, self.p, self.order,
                          _presorted=True)

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self):
        return self.coeffs.shape[0] == 0

    @property
    def num_terms(self):
        return self.coeffs.shape[0]

    @property
    def degree(self):
        """Maximal total degree over the terms (-1 for the zero polynomial)."""
        if self.is_zero:
            return -1
        return int(self.exps.sum(axis=1).max())

    @property
    def is_homogeneous(self):
        if self.is_zero:
            return True
        degs = self.exps.sum(axis=1)
        return bool((degs == degs[0]).all())

    def terms(self):
        return [(tuple(int(v) for v in self.exps[i]), int(self.coeffs[i]))
                for i in range(self.num_terms)]

    def leading_term(self):
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        return int(self.coeffs[0]), tuple(int(v) for v in self.exps[0])

    def leading_monomial(self):
        return self.leading_term()[1]

    def leading_coeff(self):
        return self.leading_term()[0]

    def d0(self):
        """Power of x0 in the graded-lex greatest term."""
        if self.is_zero:
            raise ZeroPolynomialError("d0 of the zero polynomial")
        if self.order is GLEX:
            return int(self.exps[0, 0])
        best = max(range(self.num_terms),
                   key=lambda i: GLEX.key(tuple(self.exps[i])))
        return int(self.exps[best, 0])

    def weighted_keys(self, weights):
        return self.exps @ weights

    # -- ring checks -------------------------------------------------------

    def _same_ring(self, other):
        if self.nvars != other.nvars or self.p != other.p:
            raise RingMismatchError(
                f"rings differ: ({self.nvars} vars mod {self.p}) vs "
                f"({other.nvars} vars mod {other.p})")
        if self.order is not other.order:
            raise RingMismatchError(
                f"orders differ: {self.order!r} vs {other.order!r}; "
                "resort with with_order() first")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._same_ring(other)
        merged = dict(zip(map(tuple, self.exps.tolist()), self.coeffs.tolist()))
        for e, c in zip(map(tuple, other.exps.tolist()), other.coeffs.tolist()):
            merged[e] = (merged.get(e, 0) + c) % self.p
        return Polynomial.from_terms(merged.items(), self.nvars, self.p,
                                     self.order)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._sorted_trusted(self.exps, (-self.coeffs) % self.p)

    def scale(self, c):
        c = int(c) % self.p
        if c == 0:
            return Polynomial.zero(self.nvars, self.p, self.order)
        return self._sorted_trusted(self.exps, (self.coeffs * c) % self.p)

    def mul_term(self, coeff, exponent):
        """Multiply by coeff * x^exponent; term order is preserved."""
        coeff = int(coeff) % self.p
        if coeff == 0 or self.is_zero:
            return Polynomial.zero(self.nvars, self.p, self.order)
        shift = np.asarray(exponent, dtype=np.int64)
        return self._sorted_trusted(self.exps + shift,
                                    (self.coeffs * coeff) % self.p)

    def __mul__(self, other):
        self._same_ring(other)
        if self.is_zero or other.is_zero:
            return Polynomial.zero(self.nvars, self.p, self.order)
        acc = {}
        oexps = other.exps.tolist()
        ocoef = other.coeffs.tolist()
        for i in range(self.num_terms):
            e1 = self.exps[i]
            c1 = int(self.coeffs[i])
            for e2, c2 in zip(oexps, ocoef):
                key = tuple(int(a + b) for a, b in zip(e1, e2))
                acc[key] = (acc.get(key, 0) + c1 * c2) % self.p
        return Polynomial.from_terms(acc.items(), self.nvars, self.p,
                                     self.order)

    def monic(self):
        if self.is_zero:
            raise ZeroPolynomialError("cannot normalize the zero polynomial")
        lc = int(self.coeffs[0])
        if lc == 1:
            return self
        inv = pow(lc, self.p - 2, self.p)
        return self._sorted_trusted(self.exps, (self.coeffs * inv) % self.p)

    def with_order(self, order):
        """Explicit resort under a different order."""
        if order is self.order:
            return self
        return Polynomial.from_terms(self.terms(), self.nvars, self.p, order)

    def drop_variable(self, index=0):
        """Image in the ring without variable ``index`` (its exponents must be 0)."""
        if self.num_terms and self.exps[:, index].any():
            raise GincomplexError(f"variable x{index} still occurs")
        exps = np.delete(self.exps, index, axis=1)
        return Polynomial.from_terms(
            zip(map(tuple, exps.tolist()), self.coeffs.tolist()),
            self.nvars - 1, self.p, self.order)

    def homogeneous_components(self):
        """Split into homogeneous parts, highest degree first."""
        if self.is_zero:
            return []
        degs = self.exps.sum(axis=1)
        out = []
        for d in sorted(set(degs.tolist()), reverse=True):
            sel = degs == d
            out.append(self._sorted_trusted(self.exps[sel], self.coeffs[sel]))
        return out

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.nvars != other.nvars or self.p != other.p:
            return False
        return (dict(zip(map(tuple, self.exps.tolist()), self.coeffs.tolist()))
                == dict(zip(map(tuple, other.exps.tolist()),
                            other.coeffs.tolist())))

    __hash__ = None

    def __repr__(self):
        return (f"Polynomial<{self.nvars} vars mod {self.p}, "
                f"{self.num_terms} terms, deg {self.degree}>")


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

class Ideal:
    """A finite generating set with its ring data.

    Generators must be nonzero and, unless flagged otherwise, homogeneous;
    the inhomogeneous escape hatch exists only for the internal
    auxiliary-variable elimination path.
    """

    __slots__ = ("generators", "nvars", "p")

    def __init__(self, generators, nvars=None, p=None, allow_inhomogeneous=False):
        gens = tuple(generators)
        if gens:
            nvars = gens[0].nvars if nvars is None else nvars
            p = gens[0].p if p is None else p
        if nvars is None or p is None:
            raise GincomplexError("empty ideal needs explicit nvars and p")
        for g in gens:
            if g.nvars != nvars or g.p != p:
                raise RingMismatchError("generators live in different rings")
            if g.is_zero:
                raise ZeroPolynomialError("zero generator")
            if not allow_inhomogeneous and not g.is_homogeneous:
                raise GincomplexError(
                    "inhomogeneous generator in a homogeneous ideal")
        self.generators = gens
        self.nvars = nvars
        self.p = p

    @property
    def is_zero(self):
        return not self.generators

    def min_degree(self):
        if self.is_zero:
            raise ZeroPolynomialError("zero ideal has no minimal degree")
        return min(g.degree for g in self.generators)

    def with_order(self, order):
        return Ideal([g.with_order(order) for g in self.generators],
                     self.nvars, self.p)

    def __repr__(self):
        return f"Ideal<{len(self.generators)} gens, {self.nvars} vars mod {self.p}>"


# ---------------------------------------------------------------------------
# linear coordinate changes
# ---------------------------------------------------------------------------

def _binomial_table(maxdeg, p):
    tab = np.zeros((maxdeg + 1, maxdeg + 1), dtype=np.int64)
    tab[:, 0] = 1
    for n in range(1, maxdeg + 1):
        for k in range(1, n + 1):
            tab[n, k] = (tab[n - 1, k - 1] + tab[n - 1, k]) % p
    return tab


def plu_mod(matrix, p):
    """PLU factorization mod p; returns (perm, lower, upper) or None if singular.

    ``perm`` satisfies A[perm[i]] = (L @ U)[i] mod p.
    """
    n = len(matrix)
    m = [[int(x) % p for x in row] for row in matrix]
    perm = list(range(n))
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] % p != 0:
                piv = r
                break
        if piv is None:
            return None
        if piv != col:
            m[piv], m[col] = m[col], m[piv]
            perm[piv], perm[col] = perm[col], perm[piv]
        inv = pow(m[col][col], p - 2, p)
        for r in range(col + 1, n):
            f = (m[r][col] * inv) % p
            m[r][col] = f
            for cc in range(col + 1, n):
                m[r][cc] = (m[r][cc] - f * m[col][cc]) % p
    lower = [[m[i][j] if j < i else (1 if i == j else 0) for j in range(n)]
             for i in range(n)]
    upper = [[m[i][j] if j >= i else 0 for j in range(n)] for i in range(n)]
    return perm, lower, upper


def _substitution_ops(matrix, p):
    """Factor an invertible matrix into permutation/transvection/scaling steps.

    The returned op matrices multiply (in list order) back to the input; the
    product identity is asserted because substitution correctness hinges on it.
    """
    n = len(matrix)
    fact = plu_mod(matrix, p)
    if fact is None:
        raise GincomplexError("singular coordinate change")
    perm, lower, upper = fact
    ops = []
    # A = P^T L D U1: P^T sends row i to basis vector at perm^{-1}(i)
    inv_perm = [0] * n
    for i, pi in enumerate(perm):
        inv_perm[pi] = i
    if inv_perm != list(range(n)):
        ops.append(("perm", tuple(inv_perm)))
    for j in range(n):
        for i in range(j + 1, n):
            c = lower[i][j]
            if c:
                ops.append(("trans", i, j, c))
    diag = [upper[i][i] for i in range(n)]
    for i in range(n):
        if diag[i] != 1:
            ops.append(("scale", i, diag[i]))
    dinv = [pow(diag[i], p - 2, p) for i in range(n)]
    # unit upper part factors column by column, right to left
    for j in range(n - 1, -1, -1):
        for i in range(j):
            c = (upper[i][j] * dinv[i]) % p
            if c:
                ops.append(("trans", i, j, c))
    _assert_ops_product(ops, matrix, n, p)
    return ops


def _op_matrix(op, n):
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if op[0] == "perm":
        tau = op[1]
        m = [[1 if j == tau[i] else 0 for j in range(n)] for i in range(n)]
    elif op[0] == "trans":
        _, i, j, c = op
        m[i][j] = c
    elif op[0] == "scale":
        _, i, c = op
        m[i][i] = c
    return m


def _assert_ops_product(ops, matrix, n, p):
    prod = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for op in ops:
        om = _op_matrix(op, n)
        prod = [[sum(prod[i][k] * om[k][j] for k in range(n)) % p
                 for j in range(n)] for i in range(n)]
    target = [[int(matrix[i][j]) % p for j in range(n)] for i in range(n)]
    if prod != target:
        raise GincomplexError("internal: substitution factorization mismatch")


def _apply_ops_dense(component, ops, p):
    order = component.order
    nvars = component.nvars
    degree = component.degree
    tab = table_for(nvars, degree, order)
    w = tab.weights
    vec = np.zeros(len(tab), dtype=np.int64)
    pos = tab.positions(component.weighted_keys(w))
    vec[pos] = component.coeffs
    binom = _binomial_table(degree, p)
    for op in ops:
        if op[0] == "perm":
            tau = op[1]
            new_exps = np.empty_like(tab.exps)
            for i in range(nvars):
                new_exps[:, tau[i]] = tab.exps[:, i]
            npos = tab.positions(new_exps @ w)
            nvec = np.zeros_like(vec)
            nvec[npos] = vec
            vec = nvec
        elif op[0] == "scale":
            _, i, c = op
            cpow = np.ones(degree + 1, dtype=np.int64)
            for k in range(1, degree + 1):
                cpow[k] = (cpow[k - 1] * c) % p
            vec = (vec * cpow[tab.exps[:, i]]) % p
        else:
            _, i, j, c = op
            cpow = np.ones(degree + 1, dtype=np.int64)
            for k in range(1, degree + 1):
                cpow[k] = (cpow[k - 1] * c) % p
            binom_c = (binom * cpow[np.newaxis, :]) % p
            out = np.zeros_like(vec)
            _kernels.transvect(vec, out,
                               np.ascontiguousarray(tab.exps[:, i]),
                               tab.keys, int(w[j] - w[i]), binom_c, p)
            vec = out
    nz = np.nonzero(vec)[0]
    return Polynomial(tab.exps[nz].copy(), vec[nz].copy(),
                      nvars, p, order, _presorted=True)


def _apply_change_terms(f, matrix):
    """Reference substitution by per-term expansion with power memoization."""
    n, p = f.nvars, f.p
    rows = [[int(matrix[i][j]) % p for j in range(n)] for i in range(n)]
    lin = []
    for i in range(n):
        lin.append({unit_exponent(n, j): rows[i][j]
                    for j in range(n) if rows[i][j]})
    powers = [{0: {(0,) * n: 1}} for _ in range(n)]

    def power(i, e):
        store = powers[i]
        if e not in store:
            prev = power(i, e - 1)
            cur = {}
            for m1, c1 in prev.items():
                for m2, c2 in lin[i].items():
                    key = monomial_mul(m1, m2)
                    cur[key] = (cur.get(key, 0) + c1 * c2) % p
            store[e] = cur
        return store[e]

    acc = {}
    for e, c in f.terms():
        cur = {(0,) * n: c}
        for i, ei in enumerate(e):
            if not ei:
                continue
            pw = power(i, ei)
            nxt = {}
            for m1, c1 in cur.items():
                for m2, c2 in pw.items():
                    key = monomial_mul(m1, m2)
                    nxt[key] = (nxt.get(key, 0) + c1 * c2) % p
            cur = nxt
        for m, cv in cur.items():
            acc[m] = (acc.get(m, 0) + cv) % p
    return Polynomial.from_terms(acc.items(), n, p, f.order)


_DENSE_SUBST_LIMIT = 2_000_000


def apply_linear_change(f, change):
    """Substitute x_i <- sum_j m[i][j] * x_j and expand.

    ``change`` is an invertible matrix (anything with rows of ints, or an
    object carrying a ``matrix`` attribute).  Degree and homogeneity are
    preserved; a singular matrix is rejected.
    """
    matrix = getattr(change, "matrix", change)
    matrix = [list(row) for row in matrix]
    n = f.nvars
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise RingMismatchError(
            f"change of coordinates must be {n}x{n} for {n} variables")
    if plu_mod(matrix, f.p) is None:
        raise GincomplexError("singular coordinate change")
    if f.is_zero:
        return f
    if not f.order.graded:
        return _apply_change_terms(f, matrix)
    ops = _substitution_ops(matrix, f.p)
    if not ops:
        return f
    parts = []
    for component in f.homogeneous_components():
        if table_size(n, component.degree) <= _DENSE_SUBST_LIMIT:
            parts.append(_apply_ops_dense(component, ops, f.p))
        else:
            parts.append(_apply_change_terms(component, matrix))
    result = parts[0]
    for extra in parts[1:]:
        result = result + extra
    return result
