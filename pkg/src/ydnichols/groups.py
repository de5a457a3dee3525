"""Finite groups by multiplication table, and the group algebra kG.

Elements are indices ``0..order-1``.  The Hopf structure of kG is implicit
everywhere else in the package: every element is group-like, so
``Delta(g) = g (x) g``, ``eps(g) = 1`` and ``S(g) = g^-1``.
"""

from __future__ import annotations

from collections import deque
from itertools import product
from math import gcd

from .cyclotomic import ONE, CycScalar, lcm
from .errors import GroupMismatch, NotAGroup


class FiniteGroup:
    """A finite group given by its Cayley table.

    ``labels`` are hashable names for the elements (tuples for abelian
    groups, permutation tuples for permutation groups); ``generators`` is
    a list of element indices used to expand action data given on
    generators only.
    """

    def __init__(self, table, labels=None, generators=None, name=None):
        n = len(table)
        if n == 0:
            raise NotAGroup("a group has at least one element")
        self.order = n
        self.table = [tuple(row) for row in table]
        self.labels = list(labels) if labels is not None else list(range(n))
        self.name = name
        self._validate()
        self.identity = next(e for e in range(n) if all(self.table[e][x] == x for x in range(n)))
        self.inverse_table = [
            next(y for y in range(n) if self.table[x][y] == self.identity) for x in range(n)
        ]
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if generators is None:
            generators = self._greedy_generators()
        self.generators = list(generators)
        self._words = self._generator_words()

    # -- validation --------------------------------------------------------
    def _validate(self):
        n = self.order
        t = self.table
        for row in t:
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise NotAGroup("table entries must be indices into the element list")
        ids = [e for e in range(n) if all(t[e][x] == x and t[x][e] == x for x in range(n))]
        if not ids:
            raise NotAGroup("no identity element")
        e = ids[0]
        for x in range(n):
            if not any(t[x][y] == e for y in range(n)):
                raise NotAGroup(f"element {self.labels[x]!r} has no inverse")
        # Light's test: elements y with (xy)z = x(yz) for all x, z are closed
        # under products, so checking y over a generating set suffices
        gens, reached = [], {e}
        for g in range(n):
            if g in reached:
                continue
            gens.append(g)
            queue = deque(reached)
            while queue:
                a = queue.popleft()
                for h in gens:
                    b = t[a][h]
                    if b not in reached:
                        reached.add(b)
                        queue.append(b)
        for x in range(n):
            tx = t[x]
            for y in gens:
                txy = tx[y]
                ty = t[y]
                for z in range(n):
                    if t[txy][z] != tx[ty[z]]:
                        raise NotAGroup(
                            f"associativity fails at ({self.labels[x]!r}, {self.labels[y]!r}, {self.labels[z]!r})"
                        )

    def _greedy_generators(self):
        gens, reached = [], {self.identity}
        for g in range(self.order):
            if g not in reached:
                gens.append(g)
                reached = self._closure(gens)
        return gens

    def _closure(self, gens):
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def _generator_words(self):
        """Shortest word (tuple of generator positions) for every element."""
        words = {self.identity: ()}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for k, g in enumerate(self.generators):
                y = self.table[x][g]
                if y not in words:
                    words[y] = words[x] + (k,)
                    queue.append(y)
        if len(words) != self.order:
            raise NotAGroup("the given generators do not generate the group")
        return words

    # -- constructors --------------------------------------------------------
    @classmethod
    def abelian(cls, invariant_factors):
        """Z/n1 x ... x Z/nk, elements as tuples in lexicographic order."""
        factors = [int(n) for n in invariant_factors]
        if any(n < 1 for n in factors):
            raise NotAGroup("invariant factors must be positive")
        labels = list(product(*[range(n) for n in factors])) if factors else [()]
        index = {lab: i for i, lab in enumerate(labels)}
        table = [
            [index[tuple((a + b) % n for a, b, n in zip(x, y, factors))] for y in labels]
            for x in labels
        ]
        gens = []
        for k in range(len(factors)):
            unit = tuple(int(j == k) % factors[k] if j == k else 0 for j in range(len(factors)))
            gens.append(index[unit])
        g = cls(table, labels, generators=gens or None, name=f"Z{factors}")
        g.invariant_factors = factors
        return g

    @classmethod
    def from_permutations(cls, generators):
        """Permutation group generated by the given tuples (images of 0..n-1)."""
        gens = [tuple(p) for p in generators]
        if not gens:
            raise NotAGroup("need at least one generator")
        deg = len(gens[0])
        ident = tuple(range(deg))
        elems = [ident]
        seen = {ident}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = compose_perm(x, g)
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
                    queue.append(y)
        elems.sort()
        index = {p: i for i, p in enumerate(elems)}
        table = [[index[compose_perm(x, y)] for y in elems] for x in elems]
        return cls(table, elems, generators=[index[g] for g in gens], name=f"Perm{deg}")

    @classmethod
    def symmetric(cls, n):
        if n == 1:
            return cls.from_permutations([(0,)])
        gens = [tuple([1, 0] + list(range(2, n)))]
        if n > 2:
            gens.append(tuple(list(range(1, n)) + [0]))
        return cls.from_permutations(gens)

    # -- queries -------------------------------------------------------------
    def mul(self, x, y):
        return self.table[x][y]

    def inv(self, x):
        return self.inverse_table[x]

    def prod(self, elems):
        r = self.identity
        for x in elems:
            r = self.table[r][x]
        return r

    def power(self, x, k):
        if k < 0:
            x, k = self.inv(x), -k
        r = self.identity
        for _ in range(k):
            r = self.table[r][x]
        return r

    def conjugate(self, g, x):
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inverse_table[g]]

    def index(self, label):
        return self._index[label]

    def element_order(self, x):
        k, y = 1, x
        while y != self.identity:
            y = self.table[y][x]
            k += 1
        return k

    def exponent(self):
        e = 1
        for x in range(self.order):
            e = lcm(e, self.element_order(x))
        return e

    def is_abelian(self):
        return all(self.table[x][y] == self.table[y][x] for x in range(self.order) for y in range(x))

    def conjugacy_class(self, x):
        return sorted({self.conjugate(g, x) for g in range(self.order)})

    def centralizer(self, x):
        return [g for g in range(self.order) if self.table[g][x] == self.table[x][g]]

    def word(self, x):
        """Generator word for x (positions into ``self.generators``)."""
        return self._words[x]

    def elements(self):
        return range(self.order)

    def check_same(self, other):
        if other is not self and (other.table != self.table):
            raise GroupMismatch("objects live over different groups")

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(tuple(self.table))

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, name={self.name!r})"

    def to_json(self):
        return {"labels": [list(l) if isinstance(l, tuple) else l for l in self.labels],
                "table": [list(r) for r in self.table], "generators": self.generators}


def compose_perm(p, q):
    """(p*q)(i) = p(q(i)): apply q first."""
    return tuple(p[i] for i in q)


class DiagonalDatum:
    """Diagonal-type data: G = (Z/N)^theta and characters chi_j(g_i) = q_ij.

    ``qmatrix`` holds roots of unity as CycScalars.  ``generator(i)`` is the
    i-th unit vector of G and ``character(j)`` the list of chi_j values on
    all group elements.
    """

    def __init__(self, qmatrix):
        self.q = [[CycScalar.coerce(x) for x in row] for row in qmatrix]
        theta = len(self.q)
        if any(len(r) != theta for r in self.q):
            raise ValueError("braiding matrix must be square")
        orders = []
        for row in self.q:
            for x in row:
                o = x.multiplicative_order()
                if o is None:
                    raise ValueError(f"{x} is not a root of unity")
                orders.append(o)
        n = 1
        for o in orders:
            n = lcm(n, o)
        self.theta = theta
        self.N = n
        self.group = FiniteGroup.abelian([n] * theta) if theta else FiniteGroup.abelian([1])

    def generator(self, i):
        lab = tuple(int(j == i) % self.N for j in range(self.theta))
        return self.group.index(lab)

    def character(self, j):
        vals = []
        for lab in self.group.labels:
            v = ONE
            for i, e in enumerate(lab):
                if e:
                    v = v * self.q[i][j] ** e
            vals.append(v)
        return vals


def character_is_hom(group, values):
    """Whether a list of scalars indexed by elements is a group homomorphism to k*."""
    return all(values[group.mul(x, y)] == values[x] * values[y]
               for x in range(group.order) for y in range(group.order))


def coprime(a, b):
    return gcd(a, b) == 1
