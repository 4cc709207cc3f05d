"""Independent reference implementations used only by the tests.

NaiveField does GF(p^(2e)) arithmetic directly on coefficient lists (no log
tables, no Zech logs) and chooses its modulus by trial division.  Elements
are the same base-p polynomial encodings that ``FieldCtx.to_poly`` returns,
so results can be compared element by element.
"""

from __future__ import annotations

import itertools

import numpy as np


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod_poly(a, b, p):
    a = _trim(a)
    b = _trim(b)
    inv = pow(b[-1], p - 2, p)
    quo = [0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        sh = len(a) - len(b)
        quo[sh] = c
        for i, x in enumerate(b):
            a[sh + i] = (a[sh + i] - c * x) % p
        a = _trim(a)
    return quo, a


def _monic_polys(p, d):
    for coeffs in itertools.product(range(p), repeat=d):
        yield list(coeffs) + [1]


def naive_irreducible(p, d):
    """Smallest monic irreducible of degree d by trial division."""
    for code in range(p**d):
        f = [(code // p**i) % p for i in range(d)] + [1]
        if all(_divmod_poly(f, g, p)[1] for dg in range(1, d // 2 + 1) for g in _monic_polys(p, dg)):
            return f
    raise AssertionError("unreachable")


class NaiveField:
    def __init__(self, p, e):
        self.p, self.e = p, e
        self.q = p**e
        self.degree = 2 * e
        self.order = p**self.degree
        self.modulus = naive_irreducible(p, self.degree)

    def dec(self, x):
        return [(x // self.p**i) % self.p for i in range(self.degree)]

    def enc(self, c):
        return sum(v * self.p**i for i, v in enumerate(c))

    def add(self, x, y):
        return self.enc([(a + b) % self.p for a, b in zip(self.dec(x), self.dec(y))])

    def neg(self, x):
        return self.enc([(-a) % self.p for a in self.dec(x)])

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        a, b = self.dec(x), self.dec(y)
        out = [0] * (2 * self.degree)
        for i, u in enumerate(a):
            for j, w in enumerate(b):
                out[i + j] = (out[i + j] + u * w) % self.p
        return self.enc(_divmod_poly(out, self.modulus, self.p)[1] + [0] * self.degree)

    def pow(self, x, n):
        r = 1
        for _ in range(n):
            r = self.mul(r, x)
        return r

    def order_of(self, x):
        if x == 0:
            return None
        y, k = x, 1
        while y != 1:
            y = self.mul(y, x)
            k += 1
        return k

    def tables(self):
        """Full addition and multiplication tables as numpy arrays."""
        Q = self.order
        add = np.array([[self.add(x, y) for y in range(Q)] for x in range(Q)], dtype=np.int64)
        mul = np.array([[self.mul(x, y) for y in range(Q)] for x in range(Q)], dtype=np.int64)
        return add, mul


def subfield_polys(nf):
    """GF(q)* as polynomial encodings: nonzero x with x^q = x."""
    return [x for x in range(1, nf.order) if nf.pow(x, nf.q) == x]


def exhaustive_solutions(nf, rows):
    """All u in (GF(q)*)^n with sum_j rows[i][j] u_j = 0 for every row.

    ``rows`` holds polynomial encodings.  Returns an array of solutions
    (each row one solution, as polynomial encodings).
    """
    add, mul = nf.tables()
    sub = np.array(subfield_polys(nf), dtype=np.int64)
    n = len(rows[0])
    grids = np.array(list(itertools.product(sub, repeat=n)), dtype=np.int64)
    ok = np.ones(len(grids), dtype=bool)
    for row in rows:
        acc = np.zeros(len(grids), dtype=np.int64)
        for j, c in enumerate(row):
            acc = add[acc, mul[c, grids[:, j]]]
        ok &= acc == 0
    return grids[ok]


def brute_min_distance(nf, G):
    """Minimum weight over all nonzero messages (G rows given as poly encodings)."""
    add, mul = nf.tables()
    k, n = len(G), len(G[0])
    best = n + 1
    for msg in itertools.product(range(nf.order), repeat=k):
        if not any(msg):
            continue
        word = [0] * n
        for c, row in zip(msg, G):
            word = [add[w, mul[c, g]] for w, g in zip(word, row)]
        best = min(best, sum(1 for w in word if w))
    return best
