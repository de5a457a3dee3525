"""The bosonization A = R # kG of a graded braided Hopf algebra R.

Elements of A are sparse dicts keyed by ``(n, k, g)`` standing for
r_{n,k} # g with r_{n,k} the k-th basis element of R(n).  Tensors in A (x) A
are dicts keyed by pairs of such keys.  Structure maps are evaluated from the
R-part and the group part without materializing full tables.
"""

from __future__ import annotations

from .cyclotomic import ONE, ZERO, CycMatrix
from .errors import CutoffExceeded, InvalidProjection
from .nichols import NicholsTruncation
from .report import Report


def _add(out, key, c):
    y = out.get(key)
    y = c if y is None else y + c
    if y:
        out[key] = y
    else:
        out.pop(key, None)


def add(x, y, coeff=ONE):
    out = dict(x)
    for k, c in y.items():
        _add(out, k, coeff * c)
    return out


def scale(x, c):
    return {k: c * v for k, v in x.items()} if c else {}


class Bosonization:
    def __init__(self, R: NicholsTruncation, group=None):
        if R.yd is None:
            raise ValueError("bosonization needs a Yetter-Drinfeld module over a group algebra")
        if group is not None:
            R.group.check_same(group)
        self.R = R
        self.G = R.group
        self.cutoff = R.cutoff
        self._mul = {}
        self._cop = {}

    # -- elements -------------------------------------------------------------
    def basis(self, max_degree=None):
        D = self.cutoff if max_degree is None else max_degree
        return [(n, k, g) for n in range(D + 1) for k in range(self.R.dim(n)) for g in range(self.G.order)]

    def one(self):
        return {(0, 0, self.G.identity): ONE}

    def group_element(self, g):
        return {(0, 0, g): ONE}

    def from_R(self, n, x, g=None):
        g = self.G.identity if g is None else g
        return {(n, k, g): c for k, c in x.items()}

    def r_degree(self, key):
        """G-degree of the R-part of a basis key."""
        return self.R.degree(key[0], key[1])

    # -- algebra --------------------------------------------------------------
    def mul_basis(self, a, b):
        got = self._mul.get((a, b))
        if got is not None:
            return got
        n1, k1, h1 = a
        n2, k2, h2 = b
        if n1 + n2 > self.cutoff:
            raise CutoffExceeded(f"product of degree {n1 + n2} exceeds cutoff {self.cutoff}")
        moved = self.R.act(h1, n2, {k2: ONE})
        prod_ = self.R.mult(n1, {k1: ONE}, n2, moved)
        h = self.G.mul(h1, h2)
        res = {(n1 + n2, k, h): c for k, c in prod_.items()}
        self._mul[(a, b)] = res
        return res

    def mul(self, x, y):
        out = {}
        for a, c in x.items():
            for b, d in y.items():
                for k, e in self.mul_basis(a, b).items():
                    _add(out, k, c * d * e)
        return out

    def prod(self, *xs):
        out = xs[0]
        for y in xs[1:]:
            out = self.mul(out, y)
        return out

    def counit(self, x):
        e = ZERO
        for (n, k, g), c in x.items():
            if n == 0:
                e = e + c
        return e

    def coproduct_basis(self, a):
        got = self._cop.get(a)
        if got is not None:
            return got
        n, k, h = a
        res = {}
        for m in range(n + 1):
            for (i, j), c in self.R.coproduct_basis(n, k, m).items():
                g2 = self.R.degree(n - m, j)
                _add(res, ((m, i, self.G.mul(g2, h)), (n - m, j, h)), c)
        self._cop[a] = res
        return res

    def coproduct(self, x):
        out = {}
        for a, c in x.items():
            for k, e in self.coproduct_basis(a).items():
                _add(out, k, c * e)
        return out

    def coproduct2(self, x):
        """(id (x) Delta) Delta(x) as dict (k1, k2, k3) -> c."""
        out = {}
        for (a, b), c in self.coproduct(x).items():
            for (b1, b2), d in self.coproduct_basis(b).items():
                _add(out, (a, b1, b2), c * d)
        return out

    def antipode(self, x):
        """S(r # h) = S(h) S(r_{-1}) S_R(r_0)."""
        out = {}
        for (n, k, h), c in x.items():
            sr = self.R.antipode(n, {k: ONE})
            t = self.G.mul(self.G.inv(h), self.G.inv(self.R.degree(n, k)))
            for i, y in self.R.act(t, n, sr).items():
                _add(out, (n, i, t), c * y)
        return out

    def antipode_inverse(self, x):
        """S^-1(r h) = S^-1(h) S_R^-1(r_0) S^-1(r_{-1})."""
        out = {}
        for (n, k, h), c in x.items():
            sr = self.R.antipode_inverse_matrix(n).column(k)
            hi = self.G.inv(h)
            t = self.G.mul(hi, self.G.inv(self.R.degree(n, k)))
            for i, y in self.R.act(hi, n, sr).items():
                _add(out, (n, i, t), c * y)
        return out

    def pi(self, x):
        """Projection onto kG (as an element of A)."""
        out = {}
        for (n, k, g), c in x.items():
            if n == 0:
                _add(out, (0, 0, g), c)
        return out

    def vartheta(self, x):
        """Projection onto R: r # h -> eps(h) r (as an element of A)."""
        e = self.G.identity
        out = {}
        for (n, k, g), c in x.items():
            _add(out, (n, k, e), c)
        return out

    def h_act(self, hx, r):
        """Action of an element of kG (given as an A-element) on an R-element of A."""
        out = {}
        for (n0, k0, g), c in hx.items():
            for (n, k, e), d in r.items():
                for i, y in self.R.act(g, n, {k: ONE}).items():
                    _add(out, (n, i, e), c * d * y)
        return out

    # -- tensors -----------------------------------------------------------------
    def tensor_map(self, t, f1=None, f2=None):
        out = {}
        for (a, b), c in t.items():
            xa = f1({a: ONE}) if f1 else {a: ONE}
            xb = f2({b: ONE}) if f2 else {b: ONE}
            for p, y in xa.items():
                for q, z in xb.items():
                    _add(out, (p, q), c * y * z)
        return out

    def tensor_mul(self, s, t):
        """Product in A (x) A (ordinary tensor product algebra)."""
        out = {}
        for (a, b), c in s.items():
            for (p, q), d in t.items():
                for u, y in self.mul_basis(a, p).items():
                    for v, z in self.mul_basis(b, q).items():
                        _add(out, (u, v), c * d * y * z)
        return out

    def degree_of(self, x):
        return max((k[0] for k in x), default=0)


def bosonize(R, group=None):
    return Bosonization(R, group)


def _fmt(key):
    return f"r({key[0]},{key[1]})#g{key[2]}"


def verify_hopf(A: Bosonization, max_degree=None, group_sample=None):
    """Hopf algebra axioms of A and the identities relating A, R, pi and vartheta."""
    D = A.cutoff if max_degree is None else max_degree
    G, R = A.G, A.R
    rep = Report("bosonization_hopf")
    basis = A.basis(D)
    gens = range(G.order) if group_sample is None else group_sample
    e = G.identity
    one = A.one()

    chk = rep.check("associativity")
    for a in basis:
        for b in basis:
            if a[0] + b[0] > D:
                continue
            ab = A.mul_basis(a, b)
            for c in basis:
                if a[0] + b[0] + c[0] > D or c[2] not in gens:
                    continue
                lhs = A.mul(ab, {c: ONE})
                rhs = A.mul({a: ONE}, A.mul_basis(b, c))
                chk.record(lhs == rhs, lambda: f"{_fmt(a)}, {_fmt(b)}, {_fmt(c)}")

    chk = rep.check("unit")
    for a in basis:
        chk.record(A.mul(one, {a: ONE}) == {a: ONE} == A.mul({a: ONE}, one), lambda: _fmt(a))

    chk = rep.check("coassociativity")
    for a in basis:
        lhs = {}
        for (x, y), c in A.coproduct_basis(a).items():
            for (x1, x2), d in A.coproduct_basis(x).items():
                _add(lhs, (x1, x2, y), c * d)
        chk.record(lhs == A.coproduct2({a: ONE}), lambda: _fmt(a))

    chk = rep.check("counit")
    for a in basis:
        t = A.coproduct_basis(a)
        left, right = {}, {}
        for (x, y), c in t.items():
            ex, ey = A.counit({x: ONE}), A.counit({y: ONE})
            if ex:
                _add(left, y, c * ex)
            if ey:
                _add(right, x, c * ey)
        chk.record(left == {a: ONE} == right, lambda: _fmt(a))

    chk = rep.check("coproduct is multiplicative")
    for a in basis:
        for b in basis:
            if a[0] + b[0] > D:
                continue
            lhs = A.coproduct(A.mul_basis(a, b))
            rhs = A.tensor_mul(A.coproduct_basis(a), A.coproduct_basis(b))
            chk.record(lhs == rhs, lambda: f"{_fmt(a)}, {_fmt(b)}")

    chk = rep.check("counit is multiplicative")
    for a in basis:
        for b in basis:
            if a[0] + b[0] <= D:
                ok = A.counit(A.mul_basis(a, b)) == A.counit({a: ONE}) * A.counit({b: ONE})
                chk.record(ok, lambda: f"{_fmt(a)}, {_fmt(b)}")

    chk = rep.check("antipode")
    for a in basis:
        t = A.coproduct_basis(a)
        left, right = {}, {}
        for (x, y), c in t.items():
            for k, d in A.mul(A.antipode({x: ONE}), {y: ONE}).items():
                _add(left, k, c * d)
            for k, d in A.mul({x: ONE}, A.antipode({y: ONE})).items():
                _add(right, k, c * d)
        want = scale(one, A.counit({a: ONE}))
        chk.record(left == want == right, lambda: _fmt(a))

    chk = rep.check("antipode inverse")
    for a in basis:
        x = {a: ONE}
        ok = A.antipode(A.antipode_inverse(x)) == x == A.antipode_inverse(A.antipode(x))
        chk.record(ok, lambda: _fmt(a))

    chk = rep.check("h r = (h.r) h")
    chk2 = rep.check("r h = h (h^-1 . r)")
    for n in range(D + 1):
        for k in range(R.dim(n)):
            r = {(n, k, e): ONE}
            for h in range(G.order):
                hx = A.group_element(h)
                lhs = A.mul(hx, r)
                rhs = A.mul(A.h_act(hx, r), hx)
                chk.record(lhs == rhs, lambda: f"h=g{h}, r=({n},{k})")
                lhs = A.mul(r, hx)
                rhs = A.mul(hx, A.h_act(A.group_element(G.inv(h)), r))
                chk2.record(lhs == rhs, lambda: f"h=g{h}, r=({n},{k})")

    chk = rep.check("a = vartheta(a1) pi(a2)")
    for a in basis:
        out = {}
        for (x, y), c in A.coproduct_basis(a).items():
            for k, d in A.mul(A.vartheta({x: ONE}), A.pi({y: ONE})).items():
                _add(out, k, c * d)
        chk.record(out == {a: ONE}, lambda: _fmt(a))

    chk = rep.check("R is the algebra of H-coinvariants")
    for n in range(D + 1):
        for k in range(R.dim(n)):
            r = (n, k, e)
            t = A.tensor_map(A.coproduct_basis(r), None, A.pi)
            chk.record(t == {(r, (0, 0, e)): ONE}, lambda: f"r=({n},{k})")

    chk_a = rep.check("adjoint action of H recovers the action on R")
    chk_c = rep.check("pi(r1) (x) r2 recovers the coaction on R")
    chk_d = rep.check("r1 pi S(r2) (x) r3 recovers the braided coproduct")
    chk_s = rep.check("pi(r1) S(r2) recovers the braided antipode")
    chk_b = rep.check("S^2(r) = S_R^2(theta_R(r))")
    chk_5 = rep.check("S_R^-1(r) = S^-1(r_0) r_{-1} = vartheta S^-1(r)")
    for n in range(D + 1):
        for k in range(R.dim(n)):
            r = {(n, k, e): ONE}
            g_r = R.degree(n, k)
            for h in range(G.order):
                hx = A.group_element(h)
                adj = A.mul(A.mul(hx, r), A.antipode(hx))
                chk_a.record(adj == A.h_act(hx, r), lambda: f"h=g{h}, r=({n},{k})")
            coact = A.tensor_map(A.coproduct(r), A.pi, None)
            chk_c.record(coact == {((0, 0, g_r), (n, k, e)): ONE}, lambda: f"r=({n},{k})")
            got = {}
            for (x, y, z), c in A.coproduct2(r).items():
                left = A.mul({x: ONE}, A.pi(A.antipode({y: ONE})))
                for p, d in left.items():
                    _add(got, (p, z), c * d)
            want = {}
            for m in range(n + 1):
                for (i, j), c in R.coproduct_basis(n, k, m).items():
                    _add(want, ((m, i, e), (n - m, j, e)), c)
            chk_d.record(got == want, lambda: f"r=({n},{k})")
            s = {}
            for (x, y), c in A.coproduct(r).items():
                for p, d in A.mul(A.pi({x: ONE}), A.antipode({y: ONE})).items():
                    _add(s, p, c * d)
            chk_s.record(s == A.from_R(n, R.antipode(n, {k: ONE})), lambda: f"r=({n},{k})")
            s2 = A.antipode(A.antipode(r))
            sr = R.antipode_matrix(n)
            want = A.from_R(n, (sr @ sr @ R.theta_matrix(n)).column(k))
            chk_b.record(s2 == want, lambda: f"r=({n},{k})")
            sinv = R.antipode_inverse_matrix(n).column(k)
            via_a = A.mul(A.antipode_inverse(r), A.group_element(g_r))
            chk_5.record(
                A.from_R(n, sinv) == via_a == A.vartheta(A.antipode_inverse(r)), lambda: f"r=({n},{k})"
            )

    chk = rep.check("vartheta S identity for pairs (a, b)")
    for a in basis:
        for b in basis:
            if a[0] + b[0] > D or a[2] not in gens or b[2] not in gens:
                continue
            ok = _vartheta_identity(A, {a: ONE}, {b: ONE})
            chk.record(ok, lambda: f"a={_fmt(a)}, b={_fmt(b)}")
    return rep


def _vartheta_identity(A, a, b):
    """theta S(a pi S^-1(b2) b1) = theta S(b2) (pi(S(b1) b3) . theta S(a))."""
    lhs, rhs = {}, {}
    for (b1, b2), c in A.coproduct(b).items():
        inner = A.mul(A.mul(a, A.pi(A.antipode_inverse({b2: ONE}))), {b1: ONE})
        for k, d in A.vartheta(A.antipode(inner)).items():
            _add(lhs, k, c * d)
    tsa = A.vartheta(A.antipode(a))
    for (b1, b2, b3), c in A.coproduct2(b).items():
        h = A.pi(A.mul(A.antipode({b1: ONE}), {b3: ONE}))
        right = A.mul(A.vartheta(A.antipode({b2: ONE})), A.h_act(h, tsa))
        for k, d in right.items():
            _add(rhs, k, c * d)
    return lhs == rhs


# -- coinvariants of a projection B(M (+) N) -> B(N) ------------------------------------


class CoinvariantAlgebra:
    """K = A^{co A_N} for A = B(V) # kG and the projection onto the sub-bosonization
    generated by the letters with tag ``keep``.

    K is found by solving (id (x) p) Delta(x) = x (x) 1 per multidegree.  Its
    braided Hopf structure in the Yetter-Drinfeld category over A_N is:
    product of A, Delta_K(x) = x1 p S(x2) (x) x3, adjoint action
    a.x = a1 x S(a2) and coaction p(x1) (x) x2.
    """

    def __init__(self, A: Bosonization, keep, small=None):
        R = A.R
        if R.tags is None:
            raise InvalidProjection("coinvariants need a tagged direct sum")
        self.A = A
        self.keep = keep
        self.letters = [x for x in range(R.space.dim) if R.tags[x] == keep]
        self._pure = {}
        self.small = small
        self.to_small = {}
        if small is not None:
            self._match_small()
        self._solve()

    def is_pure(self, n, k):
        key = (n, k)
        got = self._pure.get(key)
        if got is None:
            tags = self.A.R.tags
            got = self._pure[key] = all(tags[x] == self.keep for x in self.A.R.basis[n][k])
        return got

    def p(self, x):
        """The Hopf projection A -> A_N (A_N realized inside A)."""
        return {key: c for key, c in x.items() if self.is_pure(key[0], key[1])}

    def _match_small(self):
        """Identify the pure block of the big algebra with a separately built B(N)."""
        R, small = self.A.R, self.small
        relabel = {x: i for i, x in enumerate(self.letters)}
        for n in range(min(R.cutoff, small.cutoff) + 1):
            pure = [k for k in range(R.dim(n)) if self.is_pure(n, k)]
            if len(pure) != small.dim(n):
                raise InvalidProjection(
                    f"degree {n}: the projection target has dimension {small.dim(n)} "
                    f"but the generated subalgebra has dimension {len(pure)}"
                )
            for k in pure:
                w = tuple(relabel[x] for x in R.basis[n][k])
                img = small.project_word(w)
                if len(img) != 1 or next(iter(img.values())) != ONE:
                    raise InvalidProjection(f"basis word {w} is not a basis word of the target")
                self.to_small[(n, k)] = next(iter(img))
        self.from_small = {(n, j): k for (n, k), j in self.to_small.items()}

    def _solve(self):
        A, R, G = self.A, self.A.R, self.A.G
        e = G.identity
        by_md = {}
        for key in A.basis():
            md = R.multidegree(key[0], key[1])
            by_md.setdefault(md, []).append(key)
        self.basis = []  # list of (total degree, multidegree, vector in A)
        for md in sorted(by_md, key=lambda m: (sum(m), m)):
            keys = by_md[md]
            rows = {}
            cols = []
            for key in keys:
                t = A.tensor_map(A.coproduct_basis(key), None, self.p)
                _add(t, (key, (0, 0, e)), -ONE)
                cols.append({rows.setdefault(pair, len(rows)): c for pair, c in t.items()})
            m = CycMatrix.from_columns(cols, len(rows))
            for v in m.kernel():
                vec = {keys[j]: c for j, c in v.items()}
                if any(key[2] != e for key in vec):
                    raise InvalidProjection("coinvariant with a nontrivial group part")
                self.basis.append((sum(md), md, vec))
        self.dims = [0] * (A.cutoff + 1)
        for d, md, v in self.basis:
            self.dims[d] += 1
        self._coords_cache = None

    def coords(self, x):
        """Coordinates of an element of K (given in A) in the computed basis."""
        if self._coords_cache is None:
            self._coords_cache = _Coordinates([v for _, _, v in self.basis])
        return self._coords_cache(x)

    def element(self, c):
        out = {}
        for i, y in c.items():
            for k, z in self.basis[i][2].items():
                _add(out, k, y * z)
        return out

    def degree(self, i):
        return self.basis[i][0]

    def group_degree(self, i):
        """G-degree of a basis element (all its monomials share it)."""
        key = next(iter(self.basis[i][2]))
        return self.A.R.degree(key[0], key[1])

    def mult(self, x, y):
        return self.A.mul(x, y)

    def coproduct(self, x):
        """Delta_K(x) = x1 p S(x2) (x) x3 as a tensor in A (x) A."""
        A = self.A
        out = {}
        for (x1, x2, x3), c in A.coproduct2(x).items():
            left = A.mul({x1: ONE}, self.p(A.antipode({x2: ONE})))
            for k, d in left.items():
                _add(out, (k, x3), c * d)
        return out

    def adjoint(self, a, x):
        """a1 x S(a2) for a in A_N."""
        A = self.A
        out = {}
        for (a1, a2), c in A.coproduct(a).items():
            for k, d in A.mul(A.mul({a1: ONE}, x), A.antipode({a2: ONE})).items():
                _add(out, k, c * d)
        return out

    def coaction(self, x):
        """p(x1) (x) x2 in A_N (x) K."""
        return self.A.tensor_map(self.A.coproduct(x), self.p, None)

    def hilbert_check(self):
        """dim K(a) * dim B(N)(b) summed over a+b = d against dim B(V)(d)."""
        R = self.A.R
        nd = [sum(1 for k in range(R.dim(n)) if self.is_pure(n, k)) for n in range(R.cutoff + 1)]
        out = []
        for d in range(R.cutoff + 1):
            conv = sum(self.dims[a] * nd[d - a] for a in range(d + 1))
            out.append((d, conv, R.dim(d)))
        return out


class _Coordinates:
    """Coordinates with respect to a fixed list of independent vectors."""

    def __init__(self, vectors):
        self.keys = {}
        cols = []
        for v in vectors:
            cols.append({self.keys.setdefault(k, len(self.keys)): c for k, c in v.items()})
        m = CycMatrix.from_columns(cols, len(self.keys))
        self.rows, self.inv = m.left_inverse_rows()
        self.row_of = {r: i for i, r in enumerate(self.rows)}
        self.mat = m

    def __call__(self, x):
        sub = {}
        for k, c in x.items():
            r = self.keys.get(k)
            if r is None:
                raise ValueError("vector outside the span")
            i = self.row_of.get(r)
            if i is not None:
                sub[i] = c
        coords = self.inv.apply(sub)
        # membership check
        back = self.mat.apply(coords)
        want = {self.keys[k]: c for k, c in x.items() if c}
        if back != want:
            raise ValueError("vector outside the span")
        return coords
