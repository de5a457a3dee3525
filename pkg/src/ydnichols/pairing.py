"""Graded dual pairings between truncated braided Hopf algebras.

``gram[n][a, b] = <xi_a, r_b>`` for xi_a the basis of left(n) and r_b the
basis of right(n).  The canonical pairing of B(V*) and B(V) extends the
evaluation map by

    <xi, x y> = <xi^(1), y> <xi^(2), x>,

applied with y the last letter of a basis word of the right side.
"""

from __future__ import annotations

from .cyclotomic import ONE, ZERO, CycMatrix
from .errors import PairingDegenerate, SingularMatrix
from .report import Report


class GradedPairing:
    def __init__(self, left, right, grams, check_nondegenerate=True):
        self.left = left
        self.right = right
        self.grams = grams
        self.cutoff = len(grams) - 1
        self._inv = {}
        if check_nondegenerate:
            for n, g in enumerate(grams):
                if g.nrows != g.ncols or g.rank() != g.nrows:
                    raise PairingDegenerate(f"gram matrix in degree {n} is singular")

    def gram(self, n):
        return self.grams[n]

    def gram_inverse(self, n):
        got = self._inv.get(n)
        if got is None:
            try:
                got = self._inv[n] = self.grams[n].inverse()
            except SingularMatrix as exc:
                raise PairingDegenerate(f"gram matrix in degree {n} is singular") from exc
        return got

    def pair(self, n, xi, x):
        """<xi, x> for xi in left(n), x in right(n) as sparse coordinate dicts."""
        g = self.grams[n]
        total = ZERO
        for a, c in xi.items():
            row = g.rows[a]
            for b, d in x.items():
                y = row.get(b)
                if y is not None:
                    total = total + c * d * y
        return total

    def dual_basis(self, n):
        """Vectors xi^b in left(n) with <xi^b, r_c> = delta_bc (columns of G^-T)."""
        inv = self.gram_inverse(n)
        # xi^b = sum_a inv[b, a] xi_a
        return [dict(inv.rows[b]) for b in range(inv.nrows)]

    def radical_codim(self, n):
        return self.grams[n].rank()

    def swapped_data(self):
        return self.right, self.left


def canonical_pairing(left, right, cutoff=None, check_nondegenerate=None):
    """Extend the evaluation pairing of left(1) = right(1)* to all degrees.

    ``left`` and ``right`` are truncations over dual braided spaces with dual
    letter bases.  In tensor mode the result is usually degenerate, and the
    nondegeneracy check is skipped.
    """
    D = min(left.cutoff, right.cutoff) if cutoff is None else cutoff
    if check_nondegenerate is None:
        check_nondegenerate = left.mode == "nichols" and right.mode == "nichols"
    if left.dim(1) != right.dim(1):
        raise PairingDegenerate("degree-one parts have different dimensions")
    grams = [CycMatrix.identity(1)]
    if D >= 1:
        grams.append(_letter_gram(left, right))
    for n in range(2, D + 1):
        g1, gp = grams[1], grams[n - 1]
        rows = []
        for a in range(left.dim(n)):
            cop = left.coproduct_basis(n, a, 1)
            row = {}
            for b, w in enumerate(right.basis[n]):
                prefix = right.project_word(w[:-1])
                y = right.project_word(w[-1:])
                total = ZERO
                for (i, j), c in cop.items():
                    p1 = _pair_rows(g1, i, y)
                    if not p1:
                        continue
                    p2 = _pair_rows(gp, j, prefix)
                    if p2:
                        total = total + c * p1 * p2
                if total:
                    row[b] = total
            rows.append(row)
        grams.append(CycMatrix(left.dim(n), right.dim(n), rows))
    return GradedPairing(left, right, grams, check_nondegenerate)


def _letter_gram(left, right):
    """Evaluation on letters: left letter k pairs with right letter k."""
    g = CycMatrix(left.dim(1), right.dim(1))
    for a, w in enumerate(left.basis[1]):
        for b, v in enumerate(right.basis[1]):
            if w == v:
                g.rows[a][b] = ONE
    return g


def _pair_rows(g, i, x):
    row = g.rows[i]
    total = ZERO
    for b, c in x.items():
        y = row.get(b)
        if y is not None:
            total = total + c * y
    return total


def inverse_pairing(P: GradedPairing):
    """<x, xi>' = <xi, S^2(x)> with S^2 = S_R^2 theta_R on R = P.right."""
    R = P.right
    grams = []
    for n in range(P.cutoff + 1):
        s = R.antipode_matrix(n)
        s2t = s @ s @ R.theta_matrix(n)
        grams.append((P.grams[n] @ s2t).transpose())
    return GradedPairing(P.right, P.left, grams, check_nondegenerate=False)


def pairing_radical(P: GradedPairing, n):
    """Right radical {x in right(n) : <left(n), x> = 0} as a list of vectors."""
    return P.grams[n].kernel()


def verify_pairing(P: GradedPairing, max_degree=None):
    """Dual-pair axioms on all basis pairs up to max_degree."""
    D = P.cutoff if max_degree is None else max_degree
    L, R = P.left, P.right
    G = R.group
    rep = Report("dual_pair")

    chk = rep.check("nondegenerate in every degree")
    for n in range(D + 1):
        g = P.grams[n]
        chk.record(g.nrows == g.ncols and g.rank() == g.nrows, f"degree {n}")

    chk = rep.check("<1, x> = eps(x) and <xi, 1> = eps(xi)")
    chk.record(P.grams[0] == CycMatrix.identity(1), "degree 0 gram is not [1]")

    chk = rep.check("<h.xi, x> = <xi, S(h).x>")
    for n in range(D + 1):
        for h in range(G.order):
            lhs = L.action_matrix(h, n).transpose() @ P.grams[n]
            rhs = P.grams[n] @ R.action_matrix(G.inv(h), n)
            chk.record(lhs == rhs, f"degree {n}, h=g{h}")

    chk = rep.check("xi_{-1}<xi_0, x> = S^-1(x_{-1})<xi, x_0>")
    for n in range(D + 1):
        g = P.grams[n]
        for a, row in enumerate(g.rows):
            for b in row:
                ok = L.degree(n, a) == G.inv(R.degree(n, b))
                chk.record(ok, f"degree {n}: <xi_{a}, r_{b}> != 0 with non-inverse degrees")

    chk = rep.check("<xi, x y> = <xi^(1), y><xi^(2), x>")
    for n1 in range(D + 1):
        for n2 in range(D + 1 - n1):
            n = n1 + n2
            for a in range(L.dim(n)):
                cop = L.coproduct_basis(n, a, n2)
                for i in range(R.dim(n1)):
                    for j in range(R.dim(n2)):
                        lhs = P.pair(n, {a: ONE}, R.mult_basis(n1, i, n2, j))
                        rhs = ZERO
                        for (p, q), c in cop.items():
                            rhs = rhs + c * P.grams[n2][p, j] * P.grams[n1][q, i]
                        chk.record(lhs == rhs, f"xi=({n},{a}), x=({n1},{i}), y=({n2},{j})")

    chk = rep.check("<xi eta, x> = <xi, x^(2)><eta, x^(1)>")
    for n1 in range(D + 1):
        for n2 in range(D + 1 - n1):
            n = n1 + n2
            for b in range(R.dim(n)):
                cop = R.coproduct_basis(n, b, n2)
                for i in range(L.dim(n1)):
                    for j in range(L.dim(n2)):
                        lhs = P.pair(n, L.mult_basis(n1, i, n2, j), {b: ONE})
                        rhs = ZERO
                        for (p, q), c in cop.items():
                            rhs = rhs + c * P.grams[n1][i, q] * P.grams[n2][j, p]
                        chk.record(lhs == rhs, f"xi=({n1},{i}), eta=({n2},{j}), x=({n},{b})")

    chk = rep.check("<S(xi), x> = <xi, S(x)>")
    for n in range(D + 1):
        lhs = L.antipode_matrix(n).transpose() @ P.grams[n]
        rhs = P.grams[n] @ R.antipode_matrix(n)
        chk.record(lhs == rhs, f"degree {n}")
    return rep
