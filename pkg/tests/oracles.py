"""Independent oracles used to derive frozen expected values and to cross-check
the main package.

Everything in this file is deliberately naive and self-contained: polynomial
arithmetic as coefficient lists, field elements as coefficient tuples, matrices
as plain numpy integer arrays reduced mod p, Gaussian elimination written out
longhand.  Nothing here imports from ``skwlab``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

# ----------------------------------------------------------------------------
# Polynomials over F_p as little-endian coefficient lists
# ----------------------------------------------------------------------------


def poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_add(a, b, p):
    n = max(len(a), len(b))
    return poly_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return poly_trim(out)


def poly_mod(a, m, p):
    """a mod m with m monic."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and poly_trim(a):
        a = poly_trim(a)
        if len(a) - 1 < dm:
            break
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = poly_trim(a)
    return poly_trim(a)


def poly_divides(d, a, p):
    """Whether monic d divides a over F_p."""
    return poly_mod(a, d, p) == []


def monic_polys(p, deg):
    """All monic polynomials of the given degree over F_p (little-endian)."""
    for tail in itertools.product(range(p), repeat=deg):
        yield list(tail) + [1]


def poly_is_irreducible(m, p):
    """Naive irreducibility by trial division over all monic divisors."""
    d = len(m) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    for deg in range(1, d // 2 + 1):
        for cand in monic_polys(p, deg):
            if poly_divides(cand, m, p):
                return False
    return True


def lex_smallest_irreducible(p, k):
    """First irreducible monic degree-k polynomial in lexicographic order of
    the coefficient tuple (c_0, ..., c_{k-1}), constant term first."""
    for tail in itertools.product(range(p), repeat=k):
        m = list(tail) + [1]
        if poly_is_irreducible(m, p):
            return m
    raise RuntimeError("no irreducible polynomial found")


# ----------------------------------------------------------------------------
# Slow finite field F_{p^k}: elements are little-endian coefficient tuples
# ----------------------------------------------------------------------------


class SlowGF:
    def __init__(self, p, k, modulus=None):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus if modulus is not None else lex_smallest_irreducible(p, k)
        assert len(self.modulus) == k + 1 and self.modulus[-1] == 1

    def norm(self, a):
        a = poly_mod(list(a), self.modulus, self.p)
        return tuple(a + [0] * (self.k - len(a)))

    def elements(self):
        for tup in itertools.product(range(self.p), repeat=self.k):
            yield tup  # little-endian coefficients

    def code(self, a):
        """Integer code: little-endian base-p packing of the coefficients."""
        return sum(c * self.p**i for i, c in enumerate(self.norm(a)))

    def from_code(self, code):
        out = []
        for _ in range(self.k):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def add(self, a, b):
        return self.norm(poly_add(list(a), list(b), self.p))

    def neg(self, a):
        return tuple((-c) % self.p for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        return self.norm(poly_mul(poly_trim(list(a)), poly_trim(list(b)), self.p))

    def pow(self, a, e):
        out = self.one
        base = self.norm(a)
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    @property
    def zero(self):
        return tuple([0] * self.k)

    @property
    def one(self):
        return tuple([1] + [0] * (self.k - 1))

    def scalar(self, c):
        return tuple([c % self.p] + [0] * (self.k - 1))

    def mult_order(self, a):
        """Multiplicative order by repeated multiplication."""
        assert a != self.zero
        x = self.norm(a)
        n = 1
        while x != self.one:
            x = self.mul(x, a)
            n += 1
            assert n <= self.q
        return n

    def artin_schreier_roots(self, c):
        """All x with x^p - x = c, by exhaustive search."""
        c = self.norm(c)
        roots = []
        for x in self.elements():
            if self.sub(self.pow(x, self.p), x) == c:
                roots.append(x)
        return sorted(self.code(r) for r in roots)


# ----------------------------------------------------------------------------
# Exact linear algebra mod p (prime field), written longhand
# ----------------------------------------------------------------------------


def rank_modp(mat, p):
    m = [[int(x) % p for x in row] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
        rank += 1
        if r == rows:
            break
    return rank


def solve_in_span(basis_rows, v, p):
    """Coefficients x with sum x_i basis_rows[i] = v mod p, or None."""
    basis_rows = [[int(x) % p for x in b] for b in basis_rows]
    v = [int(x) % p for x in v]
    rows = [list(b) + [0] * len(basis_rows) for b in basis_rows]
    for i in range(len(basis_rows)):
        rows[i][len(v) + i] = 1
    # eliminate
    width = len(v)
    r = 0
    pivots = []
    for c in range(width):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    # reduce v
    vv = [x % p for x in v] + [0] * len(basis_rows)
    for row, c in zip(rows, pivots):
        f = vv[c]
        if f:
            vv = [(a - f * b) % p for a, b in zip(vv, row)]
    if any(vv[:width]):
        return None
    return [(-x) % p for x in vv[width:]]  # combination coefficients


# ----------------------------------------------------------------------------
# Elementary-matrix models of the four families (independent of skwlab)
# ----------------------------------------------------------------------------


def E(i, j, size):
    m = np.zeros((size, size), dtype=np.int64)
    m[i, j] = 1
    return m


def family_basis(family, n):
    """Return (labels, matrices, parities) for the family over Z (reduce later).

    Order: even Cartan, even positive (lex), even negative (lex), then odd
    (Cartan first for the queer families, then positive, then negative; the
    periplectic odd part is ordered symmetric block lex (i<=j), then skew lex).
    """
    N = 2 * n
    labels, mats, pars = [], [], []

    def add(lbl, m, par):
        labels.append(lbl)
        mats.append(m)
        pars.append(par)

    if family in ("ptilde", "pder"):
        H = [E(i, i, N) - E(n + i, n + i, N) for i in range(n)]
        if family == "ptilde":
            for i in range(n):
                add(f"H{i + 1}", H[i], 0)
        else:
            for i in range(n - 1):
                add(f"D{i + 1}", H[i] - H[i + 1], 0)
        for i in range(n):
            for j in range(n):
                if i < j:
                    add(f"A{i + 1}{j + 1}", E(i, j, N) - E(n + j, n + i, N), 0)
        for i in range(n):
            for j in range(n):
                if i > j:
                    add(f"A{i + 1}{j + 1}", E(i, j, N) - E(n + j, n + i, N), 0)
        for i in range(n):
            for j in range(i, n):
                if i == j:
                    add(f"S{i + 1}{i + 1}", E(i, i + n, N), 1)
                else:
                    add(f"S{i + 1}{j + 1}", E(i, j + n, N) + E(j, i + n, N), 1)
        for i in range(n):
            for j in range(i + 1, n):
                add(f"C{i + 1}{j + 1}", E(i + n, j, N) - E(j + n, i, N), 1)
    elif family in ("q", "sq"):
        for i in range(n):
            add(f"J{i + 1}", E(i, i, N) + E(n + i, n + i, N), 0)
        for i in range(n):
            for j in range(n):
                if i < j:
                    add(f"X{i + 1}{j + 1}", E(i, j, N) + E(n + i, n + j, N), 0)
        for i in range(n):
            for j in range(n):
                if i > j:
                    add(f"X{i + 1}{j + 1}", E(i, j, N) + E(n + i, n + j, N), 0)
        if family == "q":
            for i in range(n):
                add(f"J'{i + 1}", E(i, n + i, N) + E(n + i, i, N), 1)
        else:
            for i in range(n - 1):
                add(
                    f"K'{i + 1}",
                    E(i, n + i, N) + E(n + i, i, N) - E(i + 1, n + i + 1, N) - E(n + i + 1, i + 1, N),
                    1,
                )
        for i in range(n):
            for j in range(n):
                if i < j:
                    add(f"X'{i + 1}{j + 1}", E(i, n + j, N) + E(n + i, j, N), 1)
        for i in range(n):
            for j in range(n):
                if i > j:
                    add(f"X'{i + 1}{j + 1}", E(i, n + j, N) + E(n + i, j, N), 1)
    else:
        raise ValueError(family)
    return labels, mats, pars


def superbracket(x, y, px, py):
    """[x,y] = xy - (-1)^{|x||y|} yx on integer matrices."""
    s = -1 if (px and py) else 1
    return x @ y - s * (y @ x)


def structure_constants(family, n, p):
    """bracket_table[i][j] = coefficient list of [b_i, b_j] mod p."""
    labels, mats, pars = family_basis(family, n)
    d = len(labels)
    flat = [m.reshape(-1) % p for m in mats]
    table = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            br = superbracket(mats[i], mats[j], pars[i], pars[j]).reshape(-1) % p
            coeffs = solve_in_span(flat, br, p)
            assert coeffs is not None, (family, n, labels[i], labels[j])
            table[i, j] = coeffs
    return labels, pars, table


# ----------------------------------------------------------------------------
# Brute-force MeatAxe oracle (dims <= 12, |F| <= 27), generic over a SlowGF
# ----------------------------------------------------------------------------


def _vec_reduce(v, rows, pivots, gf):
    v = list(v)
    for row, c in zip(rows, pivots):
        f = v[c]
        if f != gf.zero:
            v = [gf.sub(a, gf.mul(f, b)) for a, b in zip(v, row)]
    return v


def _echelon_insert(v, rows, pivots, gf):
    v = _vec_reduce(v, rows, pivots, gf)
    for c, x in enumerate(v):
        if x != gf.zero:
            inv = gf.pow(x, gf.q - 2)
            v = [gf.mul(inv, a) for a in v]
            rows.append(v)
            pivots.append(c)
            order = sorted(range(len(pivots)), key=lambda t: pivots[t])
            rows[:] = [rows[t] for t in order]
            pivots[:] = [pivots[t] for t in order]
            return True
    return False


def slow_spin(gens, seed_vec, gf):
    """Naive closure of one seed vector under generator matrices.

    gens: list of DxD matrices with SlowGF tuple entries; seed likewise.
    Returns (rows, pivots) of the echelonized invariant subspace.
    """
    rows, pivots = [], []
    _echelon_insert(list(seed_vec), rows, pivots, gf)
    frontier = [list(seed_vec)]
    while frontier:
        new_frontier = []
        for v in frontier:
            for g in gens:
                img = []
                for r in range(len(v)):
                    acc = gf.zero
                    for c in range(len(v)):
                        if g[r][c] != gf.zero and v[c] != gf.zero:
                            acc = gf.add(acc, gf.mul(g[r][c], v[c]))
                    img.append(acc)
                if _echelon_insert(img, rows, pivots, gf):
                    new_frontier.append(img)
        frontier = new_frontier
    return rows, pivots


def brute_force_irreducible(gens, gf, enumeration_entries=(0, 1)):
    """Exhaustive reducibility oracle for small modules.

    Spins every 1-dimensional subspace spanned by vectors with entries drawn
    from ``enumeration_entries`` plus nullspace vectors of all generator words
    of length <= 3.  Returns (verdict, witness_dim) with verdict True meaning
    irreducible with respect to this (exhaustive at small scale) seed family.
    """
    D = len(gens[0])
    seeds = []
    entries = [gf.scalar(e) if isinstance(e, int) else e for e in enumeration_entries]
    for tup in itertools.product(entries, repeat=D):
        if any(x != gf.zero for x in tup):
            seeds.append(list(tup))
    # words of length <= 3
    def matmul(a, b):
        out = [[gf.zero] * D for _ in range(D)]
        for i in range(D):
            for k in range(D):
                if a[i][k] == gf.zero:
                    continue
                for j in range(D):
                    if b[k][j] != gf.zero:
                        out[i][j] = gf.add(out[i][j], gf.mul(a[i][k], b[k][j]))
        return out

    words = list(gens)
    for g1 in gens:
        for g2 in gens:
            words.append(matmul(g1, g2))
    for g1 in gens:
        for g2 in gens:
            for g3 in gens:
                words.append(matmul(matmul(g1, g2), g3))
    for w in words:
        rows, pivots = [], []
        # nullspace of w by elimination on columns: solve w x = 0
        # build augmented reduction of w
        m = [list(r) for r in w]
        piv_cols = []
        r = 0
        for c in range(D):
            piv = None
            for i in range(r, D):
                if m[i][c] != gf.zero:
                    piv = i
                    break
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = gf.pow(m[r][c], gf.q - 2)
            m[r] = [gf.mul(inv, x) for x in m[r]]
            for i in range(D):
                if i != r and m[i][c] != gf.zero:
                    f = m[i][c]
                    m[i] = [gf.sub(a, gf.mul(f, b)) for a, b in zip(m[i], m[r])]
            piv_cols.append(c)
            r += 1
        free_cols = [c for c in range(D) if c not in piv_cols]
        for fc in free_cols:
            v = [gf.zero] * D
            v[fc] = gf.one
            for row_i, pc in enumerate(piv_cols):
                v[pc] = gf.neg(m[row_i][fc])
            seeds.append(v)
    for v in seeds:
        rows, _ = slow_spin(gens, v, gf)
        if 0 < len(rows) < D:
            return False, len(rows)
    return True, None


# ----------------------------------------------------------------------------
# Closed-form scalars (rational versions, reduced mod p at use sites)
# ----------------------------------------------------------------------------


def omega_rational(lam):
    """prod_{i<j} (lam_i - lam_j + j - i - 1) over Fractions/ints."""
    n = len(lam)
    out = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            out *= Fraction(lam[i]) - Fraction(lam[j]) + (j - i - 1)
    return out


def sl2_verma_scalars(lam_h, p):
    """Action scalars in the rank-1 highest-weight module of dimension p.

    h . f^i v = (lam - 2i) f^i v;  e . f^i v = i (lam - i + 1) f^{i-1} v.
    """
    hs = [(lam_h - 2 * i) % p for i in range(p)]
    es = [(i * (lam_h - i + 1)) % p for i in range(p)]
    return hs, es
