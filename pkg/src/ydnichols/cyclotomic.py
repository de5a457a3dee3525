"""Exact arithmetic in cyclotomic fields Q(zeta_N) and exact linear algebra.

Elements are stored as coefficient vectors of length phi(N) in the power
basis 1, z, ..., z^(phi(N)-1), reduced modulo the N-th cyclotomic
polynomial.  Rational values are always normalized to conductor 1, so the
common case (all data over Q) runs on single Fractions.

Matrices are row-sparse: each row is a dict ``{column: CycScalar}`` with no
explicit zeros.  All elimination is deterministic: the pivot of a row is its
first nonzero column and rows are processed in input order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from .errors import DivisionByZero, NoSolution, SingularMatrix


def lcm(a, b):
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients (constant term first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("conductor must be positive")
    # x^n - 1 divided by Phi_d for all proper divisors d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _poly_exact_div(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]  # den is monic
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num[: len(den) - 1])
    return out


@lru_cache(maxsize=None)
def totient(n):
    return len(cyclotomic_poly(n)) - 1


def _reduce(poly, n):
    """Reduce a coefficient list modulo Phi_n in place; returns the first phi(n) entries."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    for i in range(len(poly) - 1, deg - 1, -1):
        c = poly[i]
        if c:
            base = i - deg
            for k in range(deg):
                if phi[k]:
                    poly[base + k] -= c * phi[k]
    out = poly[:deg]
    if len(out) < deg:
        out.extend([Fraction(0)] * (deg - len(out)))
    return out


class CycScalar:
    """An element of Q(zeta_N), immutable."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor, coeffs):
        # internal constructor: coeffs already reduced, length phi(conductor)
        if conductor > 1 and not any(coeffs[1:]):
            conductor, coeffs = 1, (coeffs[0],)
        self.conductor = conductor
        self.coeffs = tuple(coeffs)
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def rational(cls, value):
        return cls(1, (Fraction(value),))

    @classmethod
    def zeta(cls, n, k=1):
        """zeta_n ** k, with zeta_n = exp(2 pi i / n)."""
        if n < 1:
            raise ValueError("root of unity order must be positive")
        k %= n
        poly = [Fraction(0)] * (k + 1)
        poly[k] = Fraction(1)
        return cls(n, _reduce(poly, n))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, CycScalar):
            return x
        if isinstance(x, (int, Rational)):
            return cls(1, (Fraction(x),))
        raise TypeError(f"cannot coerce {type(x).__name__} to CycScalar")

    # -- embedding between conductors ---------------------------------
    def embed(self, m):
        """Represent self in Q(zeta_m); m must be a multiple of the conductor."""
        n = self.conductor
        if m == n:
            return self.coeffs
        if m % n:
            raise ValueError(f"Q(zeta_{n}) does not embed in Q(zeta_{m})")
        if n == 1:
            return (self.coeffs[0],) + (Fraction(0),) * (totient(m) - 1)
        step = m // n
        poly = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for j, c in enumerate(self.coeffs):
            poly[j * step] = c
        return tuple(_reduce(poly, m))

    def _common(self, other):
        other = CycScalar.coerce(other)
        if self.conductor == other.conductor:
            return self.conductor, self.coeffs, other.coeffs
        m = lcm(self.conductor, other.conductor)
        return m, self.embed(m), other.embed(m)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, CycScalar):
            try:
                other = CycScalar.coerce(other)
            except TypeError:
                return NotImplemented
        if self.conductor == 1 and other.conductor == 1:
            return CycScalar(1, (self.coeffs[0] + other.coeffs[0],))
        m, a, b = self._common(other)
        return CycScalar(m, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, CycScalar):
            try:
                other = CycScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return CycScalar.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, CycScalar):
            try:
                other = CycScalar.coerce(other)
            except TypeError:
                return NotImplemented
        if self.conductor == 1 and other.conductor == 1:
            return CycScalar(1, (self.coeffs[0] * other.coeffs[0],))
        if other.conductor == 1:
            c = other.coeffs[0]
            return CycScalar(self.conductor, tuple(x * c for x in self.coeffs))
        if self.conductor == 1:
            c = self.coeffs[0]
            return CycScalar(other.conductor, tuple(x * c for x in other.coeffs))
        m, a, b = self._common(other)
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycScalar(m, _reduce(prod, m))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        if self.conductor == 1:
            return CycScalar(1, (1 / self.coeffs[0],))
        n = self.conductor
        d = len(self.coeffs)
        # columns: coefficients of self * z^j; solve for the preimage of 1
        cols = []
        for j in range(d):
            poly = [Fraction(0)] * j + list(self.coeffs)
            cols.append(_reduce(poly, n))
        mat = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        sol = _solve_rational(mat, d)
        return CycScalar(n, tuple(sol))

    def __truediv__(self, other):
        if not isinstance(other, CycScalar):
            try:
                other = CycScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycScalar.coerce(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        """Complex conjugation z -> z^-1."""
        n = self.conductor
        if n == 1:
            return self
        poly = [Fraction(0)] * n
        for j, c in enumerate(self.coeffs):
            poly[(-j) % n] += c
        return CycScalar(n, _reduce(poly, n))

    def galois(self, k):
        """The automorphism z -> z^k (k coprime to the conductor)."""
        n = self.conductor
        if n == 1:
            return self
        if gcd(k, n) != 1:
            raise ValueError("Galois exponent must be a unit")
        poly = [Fraction(0)] * n
        for j, c in enumerate(self.coeffs):
            poly[(j * k) % n] += c
        return CycScalar(n, _reduce(poly, n))

    # -- predicates ----------------------------------------------------
    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        return self.conductor == 1

    def __eq__(self, other):
        if not isinstance(other, CycScalar):
            try:
                other = CycScalar.coerce(other)
            except TypeError:
                return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        _, a, b = self._common(other)
        return a == b

    def __hash__(self):
        if self._hash is None:
            n, coeffs = self.minimal_form()
            self._hash = hash((n, coeffs)) if n > 1 else hash(coeffs[0])
        return self._hash

    def minimal_form(self):
        """(conductor, coeffs) in the smallest Q(zeta_d) containing self."""
        n = self.conductor
        if n == 1:
            return 1, self.coeffs
        for d in _divisors(n):
            if d == n:
                break
            if d == 1:
                continue
            fixed = all(self.galois(k) == self for k in range(1, n) if gcd(k, n) == 1 and k % d == 1)
            if fixed:
                coeffs = _descend(self, d)
                if coeffs is not None:
                    return d, coeffs
        return n, self.coeffs

    def multiplicative_order(self):
        """Order of self as a root of unity, or None if it is not one."""
        if self.is_zero():
            return None
        n = self.conductor
        bound = 2 * n if n % 2 else n
        x = self
        for k in range(1, bound + 1):
            if x == ONE:
                return k
            x = x * self
        return None

    # -- display -------------------------------------------------------
    def __repr__(self):
        return f"CycScalar({self})"

    def __str__(self):
        if self.conductor == 1:
            return str(self.coeffs[0])
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if j == 0 else (f"z{self.conductor}" if j == 1 else f"z{self.conductor}^{j}")
            if not mon:
                terms.append(str(c))
            elif c == 1:
                terms.append(mon)
            elif c == -1:
                terms.append("-" + mon)
            else:
                terms.append(f"{c}*{mon}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self):
        """Canonical JSON-ready form: [conductor, [num/den strings]]."""
        n, coeffs = self.minimal_form()
        return [n, [str(c) for c in coeffs]]

    @classmethod
    def from_json(cls, data):
        n, coeffs = data
        return cls(n, tuple(Fraction(c) for c in coeffs))


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _descend(x, d):
    """Coefficients of x in Q(zeta_d) if it lies there, else None."""
    n = x.conductor
    phi_d = totient(d)
    basis = [CycScalar.zeta(d, j).embed(n) for j in range(phi_d)]
    rows = len(x.coeffs)
    mat = [[basis[j][i] for j in range(phi_d)] + [x.coeffs[i]] for i in range(rows)]
    try:
        return tuple(_solve_rational(mat, phi_d))
    except NoSolution:
        return None


def _solve_rational(aug, nvars):
    """Solve an augmented Fraction system with a unique solution."""
    rows = [list(r) for r in aug]
    piv_cols = []
    r = 0
    for c in range(nvars):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][nvars]:
            raise NoSolution("inconsistent rational system")
    if len(piv_cols) < nvars:
        raise NoSolution("underdetermined rational system")
    return [rows[i][nvars] for i in range(nvars)]


ZERO = CycScalar(1, (Fraction(0),))
ONE = CycScalar(1, (Fraction(1),))


def S(x):
    """Shorthand coercion to CycScalar."""
    return CycScalar.coerce(x)


def zeta(n, k=1):
    return CycScalar.zeta(n, k)


# ---------------------------------------------------------------------------
# sparse vectors: dict {index: CycScalar}, never storing zeros


def vec_add(u, v, coeff=ONE):
    """u + coeff * v as a new dict."""
    out = dict(u)
    vec_iadd(out, v, coeff)
    return out


def vec_iadd(u, v, coeff=ONE):
    one = coeff == ONE
    for k, x in v.items():
        y = x if one else coeff * x
        cur = u.get(k)
        if cur is None:
            if y:
                u[k] = y
        else:
            s = cur + y
            if s:
                u[k] = s
            else:
                del u[k]
    return u


def vec_scale(v, c):
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


class CycMatrix:
    """A row-sparse matrix over cyclotomic fields."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows, ncols, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [dict() for _ in range(nrows)]
        self.rows = rows

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [{i: ONE} for i in range(n)])

    @classmethod
    def diag(cls, entries):
        entries = [S(e) for e in entries]
        n = len(entries)
        return cls(n, n, [({i: e} if e else {}) for i, e in enumerate(entries)])

    @classmethod
    def from_dense(cls, data, ncols=None):
        data = [list(r) for r in data]
        nrows = len(data)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        rows = []
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
            row = {}
            for j, x in enumerate(r):
                x = S(x)
                if x:
                    row[j] = x
            rows.append(row)
        return cls(nrows, ncols, rows)

    @classmethod
    def from_columns(cls, columns, nrows):
        """Build from sparse column vectors (dicts)."""
        m = cls(nrows, len(columns))
        for j, col in enumerate(columns):
            for i, x in col.items():
                if x:
                    m.rows[i][j] = x
        return m

    @classmethod
    def from_rows(cls, rows, ncols):
        return cls(len(rows), ncols, [dict((k, v) for k, v in r.items() if v) for r in rows])

    # -- access ------------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, ZERO)

    def to_dense(self):
        return [[self.rows[i].get(j, ZERO) for j in range(self.ncols)] for i in range(self.nrows)]

    def column(self, j):
        return {i: r[j] for i, r in enumerate(self.rows) if j in r}

    def columns(self):
        cols = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                cols[j][i] = x
        return cols

    def copy(self):
        return CycMatrix(self.nrows, self.ncols, [dict(r) for r in self.rows])

    def nnz(self):
        return sum(len(r) for r in self.rows)

    # -- algebra -----------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.rows, other.rows))

    def __hash__(self):
        raise TypeError("CycMatrix is not hashable")

    def is_zero(self):
        return not any(self.rows)

    def is_identity(self):
        return self.nrows == self.ncols and all(r == {i: ONE} for i, r in enumerate(self.rows))

    def __add__(self, other):
        self._check_same(other)
        return CycMatrix(self.nrows, self.ncols, [vec_add(a, b) for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check_same(other)
        return CycMatrix(
            self.nrows, self.ncols, [vec_add(a, b, -ONE) for a, b in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return self.scale(-ONE)

    def scale(self, c):
        c = S(c)
        return CycMatrix(self.nrows, self.ncols, [vec_scale(r, c) for r in self.rows])

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __matmul__(self, other):
        if isinstance(other, CycMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            out = []
            orows = other.rows
            for r in self.rows:
                acc = {}
                for k, x in r.items():
                    vec_iadd(acc, orows[k], x)
                out.append(acc)
            return CycMatrix(self.nrows, other.ncols, out)
        if isinstance(other, dict):
            return self.apply(other)
        if isinstance(other, (list, tuple)):
            v = {i: S(x) for i, x in enumerate(other) if S(x)}
            res = self.apply(v)
            return [res.get(i, ZERO) for i in range(self.nrows)]
        return NotImplemented

    def apply(self, v):
        """Matrix times sparse column vector."""
        out = {}
        for i, r in enumerate(self.rows):
            if len(r) < len(v):
                acc = ZERO
                for k, x in r.items():
                    y = v.get(k)
                    if y is not None:
                        acc = acc + x * y
            else:
                acc = ZERO
                for k, y in v.items():
                    x = r.get(k)
                    if x is not None:
                        acc = acc + x * y
            if acc:
                out[i] = acc
        return out

    def transpose(self):
        return CycMatrix(self.ncols, self.nrows, self.columns())

    @property
    def T(self):
        return self.transpose()

    def kron(self, other):
        """Kronecker product; row (i, k) -> i * other.nrows + k."""
        out = []
        for r in self.rows:
            for s in other.rows:
                row = {}
                for j, x in r.items():
                    base = j * other.ncols
                    for l, y in s.items():
                        row[base + l] = x * y
                out.append(row)
        return CycMatrix(self.nrows * other.nrows, self.ncols * other.ncols, out)

    def select_rows(self, idx):
        return CycMatrix(len(idx), self.ncols, [dict(self.rows[i]) for i in idx])

    def select_columns(self, idx):
        pos = {j: n for n, j in enumerate(idx)}
        rows = [{pos[j]: x for j, x in r.items() if j in pos} for r in self.rows]
        return CycMatrix(self.nrows, len(idx), rows)

    @staticmethod
    def vstack(mats, ncols=None):
        if ncols is None:
            ncols = mats[0].ncols
        rows = []
        for m in mats:
            if m.ncols != ncols:
                raise ValueError("vstack column mismatch")
            rows.extend(dict(r) for r in m.rows)
        return CycMatrix(len(rows), ncols, rows)

    @staticmethod
    def hstack(mats, nrows=None):
        if nrows is None:
            nrows = mats[0].nrows
        rows = [dict() for _ in range(nrows)]
        off = 0
        for m in mats:
            if m.nrows != nrows:
                raise ValueError("hstack row mismatch")
            for i, r in enumerate(m.rows):
                for j, x in r.items():
                    rows[i][off + j] = x
            off += m.ncols
        return CycMatrix(nrows, off, rows)

    @staticmethod
    def block_diag(mats):
        nr = sum(m.nrows for m in mats)
        nc = sum(m.ncols for m in mats)
        rows = []
        off = 0
        for m in mats:
            for r in m.rows:
                rows.append({off + j: x for j, x in r.items()})
            off += m.ncols
        return CycMatrix(nr, nc, rows)

    def conductor(self):
        n = 1
        for r in self.rows:
            for x in r.values():
                n = lcm(n, x.conductor)
        return n

    # -- elimination -------------------------------------------------------
    def echelon(self):
        """Reduced row echelon form.

        Returns ``(rref_rows, pivots)`` where ``rref_rows[k]`` has leading
        entry 1 in column ``pivots[k]``.  Rows are consumed in input order,
        each reduced against the pivots found so far.
        """
        elim = Eliminator()
        for r in self.rows:
            elim.add(r)
        return elim.sorted_rows()

    def rank(self):
        return len(self.echelon()[1])

    def kernel(self):
        """Basis of {v : A v = 0} as sparse dicts, one per free column."""
        rref, pivots = self.echelon()
        pivset = set(pivots)
        out = []
        for f in range(self.ncols):
            if f in pivset:
                continue
            v = {f: ONE}
            for row, p in zip(rref, pivots):
                c = row.get(f)
                if c is not None:
                    v[p] = -c
            out.append(v)
        return out

    def kernel_matrix(self):
        """Kernel basis as the columns of a matrix."""
        return CycMatrix.from_columns(self.kernel(), self.ncols)

    def rank_kernel(self):
        ker = self.kernel()
        return self.ncols - len(ker), ker

    def pivot_columns(self):
        """Indices of the lexicographically first linearly independent columns."""
        return self.transpose().echelon_row_independent()

    def echelon_row_independent(self):
        """Indices of rows (in order) that are independent of the earlier rows."""
        elim = Eliminator()
        return [i for i, r in enumerate(self.rows) if elim.add(r)]

    def image_basis(self):
        """Columns of self forming a basis of the column space (pivot columns)."""
        piv = self.pivot_columns()
        return self.select_columns(piv), piv

    def solve(self, b):
        """One solution x of A x = b (b, x sparse dicts or dense lists)."""
        dense = isinstance(b, (list, tuple))
        if dense:
            b = {i: S(x) for i, x in enumerate(b) if S(x)}
        aug = CycMatrix.hstack([self, CycMatrix.from_columns([b], self.nrows)])
        rref, pivots = aug.echelon()
        if self.ncols in pivots:
            raise NoSolution("inconsistent linear system")
        x = {}
        for row, p in zip(rref, pivots):
            c = row.get(self.ncols)
            if c is not None:
                x[p] = c
        if dense:
            return [x.get(i, ZERO) for i in range(self.ncols)]
        return x

    def solve_matrix(self, B):
        """X with self @ X == B; raises NoSolution if impossible."""
        aug = CycMatrix.hstack([self, B])
        rref, pivots = aug.echelon()
        n = self.ncols
        if pivots and pivots[-1] >= n:
            raise NoSolution("inconsistent linear system")
        X = CycMatrix(n, B.ncols)
        for row, p in zip(rref, pivots):
            X.rows[p] = {k - n: x for k, x in row.items() if k >= n}
        return X

    def inverse(self):
        if self.nrows != self.ncols:
            raise SingularMatrix("only square matrices can be inverted")
        n = self.nrows
        if n == 0:
            return CycMatrix(0, 0)
        aug = CycMatrix.hstack([self, CycMatrix.identity(n)])
        rref, pivots = aug.echelon()
        if len(pivots) < n or pivots[n - 1] != n - 1:
            raise SingularMatrix("matrix is singular")
        return CycMatrix(n, n, [{k - n: x for k, x in row.items() if k >= n} for row in rref[:n]])

    def left_inverse_rows(self):
        """For full-column-rank A: (row indices I, inverse of A[I, :]) so that
        inv @ A.select_rows(I) is the identity."""
        rows_idx = self.echelon_row_independent()
        if len(rows_idx) != self.ncols:
            raise SingularMatrix("matrix does not have full column rank")
        sub = self.select_rows(rows_idx)
        return rows_idx, sub.inverse()

    def __repr__(self):
        return f"CycMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    def to_json(self):
        """Dense rows of scalar strings."""
        return [[str(x) for x in r] for r in self.to_dense()]

    def pretty(self):
        dense = self.to_dense()
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in dense)


class Eliminator:
    """Incremental reduced row echelon basis."""

    __slots__ = ("basis", "pivot_of")

    def __init__(self):
        self.basis = []  # [pivot, row] with row[pivot] == 1, reduced against other pivots
        self.pivot_of = {}

    def reduce(self, row):
        row = dict(row)
        pivot_of = self.pivot_of
        for k in [k for k in row if k in pivot_of]:
            c = row.get(k)
            if c is not None:
                vec_iadd(row, self.basis[pivot_of[k]][1], -c)
        return row

    def add(self, row):
        """Insert a row; returns True iff it was independent of the basis."""
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = row[p].inverse()
        if inv != ONE:
            row = {k: x * inv for k, x in row.items()}
        for entry in self.basis:
            c = entry[1].get(p)
            if c is not None:
                entry[1] = vec_add(entry[1], row, -c)
        self.pivot_of[p] = len(self.basis)
        self.basis.append([p, row])
        return True

    def __len__(self):
        return len(self.basis)

    def sorted_rows(self):
        order = sorted(self.basis, key=lambda e: e[0])
        return [e[1] for e in order], [e[0] for e in order]


def span_contains(basis_vectors, v, ambient_dim):
    """Whether sparse vector v lies in the span of the given vectors."""
    if not v:
        return True
    m = CycMatrix.from_columns(list(basis_vectors), ambient_dim)
    try:
        m.solve(v)
        return True
    except NoSolution:
        return False


def subspace_basis(vectors, ambient_dim):
    """A basis (subset of the inputs, in order) of the span of sparse vectors."""
    if not vectors:
        return []
    m = CycMatrix.from_rows(list(vectors), ambient_dim)
    return [vectors[i] for i in m.echelon_row_independent()]


def intersect_subspaces(a, b, ambient_dim):
    """Basis of span(a) intersected with span(b)."""
    if not a or not b:
        return []
    m = CycMatrix.from_columns(list(a) + [vec_scale(v, -ONE) for v in b], ambient_dim)
    out = []
    for k in m.kernel():
        v = {}
        for j, c in k.items():
            if j < len(a):
                vec_iadd(v, a[j], c)
        if v:
            out.append(v)
    return subspace_basis(out, ambient_dim)
