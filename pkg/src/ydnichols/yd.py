"""Finite-dimensional Yetter-Drinfeld modules over a group algebra kG.

Over kG a Yetter-Drinfeld module is a G-graded G-module whose action maps
the degree-x component onto the degree g x g^-1 component.  Every basis
vector is homogeneous, so the coaction is the map ``degrees`` from basis
indices to group elements.  Action matrices act on column vectors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cyclotomic import ONE, ZERO, CycMatrix, CycScalar, Eliminator, lcm, vec_iadd
from .errors import EmptyModule, NotAYDModule
from .groups import FiniteGroup, character_is_hom
from .report import Report


class YDModule:
    def __init__(self, group: FiniteGroup, degrees, action, validate=True):
        self.group = group
        self.degrees = list(degrees)
        self.dim = len(self.degrees)
        if isinstance(action, dict):
            action = _expand_generators(group, action, self.dim)
        if len(action) != group.order:
            raise NotAYDModule("need one action matrix per group element (or per generator)")
        self.action = list(action)
        for m in self.action:
            if m.shape != (self.dim, self.dim):
                raise NotAYDModule(f"action matrix has shape {m.shape}, expected {(self.dim, self.dim)}")
        if validate:
            rep = self.validate()
            if not rep.passed:
                raise NotAYDModule(rep.failures()[0].counterexample)

    # -- constructors ----------------------------------------------------------
    @classmethod
    def one_dim(cls, group, degree, character):
        """k v with v of degree ``degree`` and g.v = character[g] v."""
        chi = [CycScalar.coerce(c) for c in character]
        return cls(group, [degree], [CycMatrix.diag([c]) for c in chi])

    @classmethod
    def zero(cls, group):
        return cls(group, [], [CycMatrix(0, 0) for _ in range(group.order)], validate=False)

    @classmethod
    def trivial(cls, group):
        return cls.one_dim(group, group.identity, [ONE] * group.order)

    @classmethod
    def direct_sum(cls, modules):
        """Direct sum; returns the module and the list of summand tags per basis index."""
        if not modules:
            raise EmptyModule("direct sum of no modules")
        g = modules[0].group
        for m in modules:
            g.check_same(m.group)
        degrees, tags = [], []
        for t, m in enumerate(modules):
            degrees.extend(m.degrees)
            tags.extend([t] * m.dim)
        action = [CycMatrix.block_diag([m.action[x] for m in modules]) for x in range(g.order)]
        return cls(g, degrees, action, validate=False), tags

    # -- structure -------------------------------------------------------------
    def validate(self):
        """Check the homomorphism property and the YD compatibility."""
        g = self.group
        rep = Report("yd_validate")
        hom = rep.check("action is a group homomorphism")
        ident = self.action[g.identity]
        hom.record(ident.is_identity(), "identity does not act as the identity")
        for x in g.generators:
            for y in range(g.order):
                ok = self.action[g.mul(x, y)] == self.action[x] @ self.action[y]
                if not hom.record(ok, lambda: f"action(g{x} g{y}) != action(g{x}) action(g{y})"):
                    break
        yd = rep.check("YD compatibility")
        for h in range(g.order):
            mat = self.action[h]
            for i, row in enumerate(mat.rows):
                for j in row:
                    want = g.conjugate(h, self.degrees[j])
                    if not yd.record(
                        self.degrees[i] == want,
                        lambda: f"g={g.labels[h]!r} maps basis {j} (degree {g.labels[self.degrees[j]]!r}) "
                        f"outside degree {g.labels[want]!r}",
                    ):
                        break
        return rep

    def degree_components(self):
        comps = {}
        for i, d in enumerate(self.degrees):
            comps.setdefault(d, []).append(i)
        return comps

    def act(self, g, v):
        """Action on a sparse vector."""
        return self.action[g].apply(v)

    def character(self):
        """For 1-dim modules: the list of scalars g -> action(g)."""
        if self.dim != 1:
            raise ValueError("character is defined for one-dimensional modules only")
        return [m[0, 0] for m in self.action]

    # -- monoidal structure -------------------------------------------------------
    def tensor(self, other):
        self.group.check_same(other.group)
        g = self.group
        degs = [g.mul(a, b) for a in self.degrees for b in other.degrees]
        act = [self.action[x].kron(other.action[x]) for x in range(g.order)]
        return YDModule(g, degs, act, validate=False)

    def dual(self):
        g = self.group
        degs = [g.inv(d) for d in self.degrees]
        act = [self.action[g.inv(x)].transpose() for x in range(g.order)]
        return YDModule(g, degs, act, validate=False)

    def braiding(self, other):
        """c_{V,W}(v (x) w) = v_{-1}.w (x) v_0."""
        self.group.check_same(other.group)
        dv, dw = self.dim, other.dim
        cols = []
        for k in range(dv):
            a = other.action[self.degrees[k]]
            for l in range(dw):
                cols.append({lp * dv + k: x for lp, x in a.column(l).items()})
        fwd = CycMatrix.from_columns(cols, dv * dw)
        inv_cols = [None] * (dv * dw)
        for l in range(dw):
            for k in range(dv):
                a = other.action[self.group.inv(self.degrees[k])]
                inv_cols[l * dv + k] = {k * dw + lp: x for lp, x in a.column(l).items()}
        inv = CycMatrix.from_columns(inv_cols, dv * dw)
        return BraidOperator(self, other, fwd, inv)

    def theta(self):
        """v -> S(v_{-1}).v_0 and its inverse v -> S^-2(v_{-1}).v_0."""
        g = self.group
        fwd_cols, inv_cols = [], []
        for k, d in enumerate(self.degrees):
            fwd_cols.append(self.action[g.inv(d)].column(k))
            inv_cols.append(self.action[d].column(k))
        return CycMatrix.from_columns(fwd_cols, self.dim), CycMatrix.from_columns(inv_cols, self.dim)

    # -- morphisms ---------------------------------------------------------------
    def is_morphism_to(self, other, f):
        """Whether f: self -> other is G-linear and degree preserving."""
        if f.shape != (other.dim, self.dim):
            return False
        for i, row in enumerate(f.rows):
            for j in row:
                if other.degrees[i] != self.degrees[j]:
                    return False
        return all(f @ self.action[x] == other.action[x] @ f for x in self.group.generators)

    def intertwiner_space(self, other):
        """Basis of degree-preserving G-linear maps self -> other (as matrices)."""
        self.group.check_same(other.group)
        dm, dn = self.dim, other.dim
        var = {}
        for i in range(dn):
            for j in range(dm):
                if other.degrees[i] == self.degrees[j]:
                    var[(i, j)] = len(var)
        if not var:
            return []
        pairs = [(self.action[x], other.action[x]) for x in self.group.generators]
        return solve_intertwiners(var, pairs, dm, dn)

    def find_isomorphism(self, other, tries=24, seed=0):
        """An invertible intertwiner self -> other, or None."""
        if self.dim != other.dim:
            return None
        if self.dim == 0:
            return CycMatrix(0, 0)
        if sorted(self.degrees) != sorted(other.degrees):
            return None
        return invertible_member(self.intertwiner_space(other), self.dim, tries, seed)

    def is_isomorphic(self, other):
        return self.find_isomorphism(other) is not None

    def conjugated(self, p):
        """The same module in the basis given by a degree-preserving base change p."""
        for i, row in enumerate(p.rows):
            if any(self.degrees[j] != self.degrees[i] for j in row):
                raise NotAYDModule("base change does not keep basis vectors homogeneous")
        pinv = p.inverse()
        return YDModule(self.group, self.degrees, [p @ a @ pinv for a in self.action])

    def submodule(self, vectors):
        """YD module structure on a G-stable graded subspace spanned by homogeneous sparse vectors."""
        g = self.group
        degs = []
        for v in vectors:
            ds = {self.degrees[i] for i in v}
            if len(ds) != 1:
                raise NotAYDModule("submodule basis vectors must be homogeneous")
            degs.append(ds.pop())
        basis = CycMatrix.from_columns(list(vectors), self.dim)
        rows_idx, inv = basis.left_inverse_rows()
        act = []
        for x in range(g.order):
            img = (self.action[x] @ basis).select_rows(rows_idx)
            act.append(inv @ img)
        return YDModule(g, degs, act, validate=False)

    # -- irreducibility -----------------------------------------------------------
    def is_irreducible(self):
        if self.dim == 0:
            raise EmptyModule("irreducibility of the zero module")
        g = self.group
        comps = self.degree_components()
        x0 = self.degrees[0]
        if set(comps) != set(g.conjugacy_class(x0)):
            return False
        idx = comps[x0]
        cent = g.centralizer(x0)
        local = [self.action[c].select_rows(idx).select_columns(idx) for c in cent]
        n = len(idx)
        # spinning: the C(x)-orbit span of each basis vector must be everything
        for k in range(n):
            if len(_spin([{k: ONE}], local, n)) < n:
                return False
        commutant = _commutant(local, n)
        if len(commutant) <= 1:
            return True
        # a non-division endomorphism ring exposes a proper submodule as a kernel
        for e in commutant:
            if _has_reducible_minpoly(e):
                return False
        rng = random.Random(1)
        for _ in range(8):
            acc = CycMatrix(n, n)
            for e in commutant:
                acc = acc + e.scale(rng.randint(-5, 5))
            if _has_reducible_minpoly(acc):
                return False
        return True

    # -- misc ---------------------------------------------------------------------
    def conductor(self):
        n = 1
        for a in self.action:
            n = lcm(n, a.conductor())
        return n

    def __eq__(self, other):
        return (
            isinstance(other, YDModule)
            and self.group == other.group
            and self.degrees == other.degrees
            and all(a == b for a, b in zip(self.action, other.action))
        )

    __hash__ = None

    def __repr__(self):
        return f"YDModule(dim={self.dim}, degrees={[self.group.labels[d] for d in self.degrees]})"

    def canonical_key(self):
        """Hashable key identifying 1-dim modules up to isomorphism (degree, character)."""
        if self.dim == 1:
            return (self.degrees[0], tuple(self.character()))
        return None

    def to_json(self):
        return {
            "dim": self.dim,
            "degrees": [_label_json(self.group.labels[d]) for d in self.degrees],
            "action": {
                str(k): [[x.to_json() for x in row] for row in self.action[gen].to_dense()]
                for k, gen in enumerate(self.group.generators)
            },
        }


@dataclass
class BraidOperator:
    source: YDModule
    target: YDModule
    matrix: CycMatrix
    inverse: CycMatrix


def _label_json(lab):
    return list(lab) if isinstance(lab, tuple) else lab


def _expand_generators(group, gen_action, dim):
    """Extend matrices given on group.generators (keyed by element index) to all elements."""
    mats = {group.identity: CycMatrix.identity(dim)}
    for x in range(group.order):
        m = CycMatrix.identity(dim)
        for k in group.word(x):
            gen = group.generators[k]
            if gen not in gen_action:
                raise NotAYDModule(f"missing action of generator {group.labels[gen]!r}")
            m = m @ gen_action[gen]
        mats[x] = m
    return [mats[x] for x in range(group.order)]


def _spin(seeds, mats, n):
    elim = Eliminator()
    basis = []
    queue = list(seeds)
    while queue:
        v = queue.pop()
        if elim.add(v):
            basis.append(v)
            for m in mats:
                queue.append(m.apply(v))
    return basis


def _commutant(mats, n):
    """Basis of {X : X m = m X for all m}."""
    idx = {(i, j): i * n + j for i in range(n) for j in range(n)}
    eqs = []
    for m in mats:
        cols = m.columns()
        for i in range(n):
            for j in range(n):
                row = {}
                for k, c in cols[j].items():
                    vec_iadd(row, {idx[(i, k)]: c})
                for k, c in m.rows[i].items():
                    vec_iadd(row, {idx[(k, j)]: -c})
                if row:
                    eqs.append(row)
    system = CycMatrix.from_rows(eqs, n * n) if eqs else CycMatrix(0, n * n)
    out = []
    for sol in system.kernel():
        x = CycMatrix(n, n)
        for v, c in sol.items():
            x.rows[v // n][v % n] = c
        out.append(x)
    return out


def minimal_polynomial(m):
    """Coefficients (constant first, monic) of the minimal polynomial of a square matrix."""
    n = m.nrows
    powers = [CycMatrix.identity(n)]
    flat = lambda a: {i * n + j: x for i, r in enumerate(a.rows) for j, x in r.items()}
    elim = Eliminator()
    elim.add(flat(powers[0]))
    while True:
        nxt = powers[-1] @ m
        v = flat(nxt)
        if not elim.add(v):
            basis = CycMatrix.from_columns([flat(p) for p in powers], n * n)
            sol = basis.solve(v)
            coeffs = [-sol.get(k, ZERO) for k in range(len(powers))] + [ONE]
            return coeffs
        powers.append(nxt)


def _has_reducible_minpoly(m):
    coeffs = minimal_polynomial(m)
    if len(coeffs) <= 2:
        return False
    return not polynomial_is_irreducible(coeffs)


def polynomial_is_irreducible(coeffs):
    """Irreducibility over the cyclotomic field generated by the coefficients."""
    import sympy as sp

    cond = 1
    for c in coeffs:
        cond = lcm(cond, c.conductor)
    x = sp.Symbol("x")
    if cond == 1:
        dom = sp.QQ
        gen = None
    else:
        gen = sp.exp(2 * sp.pi * sp.I / cond)
        dom = sp.QQ.algebraic_field(gen)

    def conv(c):
        if gen is None:
            return sp.Rational(c.coeffs[0].numerator, c.coeffs[0].denominator)
        return sum(sp.Rational(a.numerator, a.denominator) * gen**j for j, a in enumerate(c.embed(cond)))

    expr = sum(conv(c) * x**k for k, c in enumerate(coeffs))
    poly = sp.Poly(expr, x, domain=dom)
    _, factors = poly.factor_list()
    return len(factors) == 1 and factors[0][1] == 1


def check_character(group, values):
    return character_is_hom(group, [CycScalar.coerce(v) for v in values])


def solve_intertwiners(var, pairs, dm, dn):
    """Basis of maps X (entries restricted to ``var``) with X A = B X for all (A, B) in pairs."""
    eqs = []
    for am, an in pairs:
        am_cols = am.columns()
        an_rows = an.rows
        for i in range(dn):
            for j in range(dm):
                # (X A)[i,j] - (B X)[i,j]
                row = {}
                for k, c in am_cols[j].items():
                    v = var.get((i, k))
                    if v is not None:
                        vec_iadd(row, {v: c})
                for k, c in an_rows[i].items():
                    v = var.get((k, j))
                    if v is not None:
                        vec_iadd(row, {v: -c})
                if row:
                    eqs.append(row)
    system = CycMatrix.from_rows(eqs, len(var)) if eqs else CycMatrix(0, len(var))
    inv_var = {v: ij for ij, v in var.items()}
    out = []
    for sol in system.kernel():
        m = CycMatrix(dn, dm)
        for v, c in sol.items():
            i, j = inv_var[v]
            m.rows[i][j] = c
        out.append(m)
    return out


def invertible_member(space, dim, tries=24, seed=0):
    """An invertible matrix in the span of ``space`` (random search), or None."""
    if not space:
        return None
    for m in space:
        if m.rank() == dim:
            return m
    rng = random.Random(seed)
    for _ in range(tries):
        acc = CycMatrix(dim, dim)
        for m in space:
            acc = acc + m.scale(rng.randint(-7, 7))
        if acc.rank() == dim:
            return acc
    return None
