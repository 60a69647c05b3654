"""Exact dense linear algebra over F_{p^k} on integer-code arrays.

Matrices and vectors hold field-element codes (np.uint8).  Two kernels do all
the work:

* multiplication decomposes codes into k coefficient layers and runs k^2
  float64 BLAS products followed by an exact power-basis reduction — entry
  magnitudes stay far below 2^53, so float64 arithmetic is exact;
* row reduction uses fancy-indexed gathers into the field's ADD/SUB/MUL
  tables, eliminating whole row blocks at once.

Row vectors span subspaces; action matrices multiply column vectors.
"""

from __future__ import annotations

import numpy as np

from .field import Field

__all__ = [
    "zeros",
    "identity",
    "matmul",
    "matvec",
    "mat_pow",
    "add_mats",
    "sub_mats",
    "scale_mat",
    "rref",
    "rank",
    "nullspace",
    "inverse",
    "RightMul",
    "ExpressSolver",
    "EchelonBasis",
    "random_matrix",
    "random_invertible",
    "batch_rank_prime",
]


def zeros(shape) -> np.ndarray:
    return np.zeros(shape, dtype=np.uint8)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def _layers(field: Field, codes: np.ndarray) -> np.ndarray:
    """(..., ) codes -> (k, ...) float64 coefficient layers (C-contiguous, so
    each layer slice stays on the BLAS fast path)."""
    c = field.COEFFS[codes]  # (..., k)
    return np.moveaxis(c, -1, 0).astype(np.float64, order="C")


def _encode(field: Field, layers: np.ndarray) -> np.ndarray:
    """(k, ...) int layers mod p -> codes."""
    pows = np.array(field._pows, dtype=np.int64).reshape((field.k,) + (1,) * (layers.ndim - 1))
    return np.sum(layers * pows, axis=0).astype(np.uint8)


def _matmul_layers(field: Field, LA: np.ndarray, LB: np.ndarray) -> np.ndarray:
    p, k = field.p, field.k
    raw = [None] * (2 * k - 1)
    for i in range(k):
        for j in range(k):
            prod = LA[i] @ LB[j]
            m = i + j
            raw[m] = prod if raw[m] is None else raw[m] + prod
    raw = np.stack([np.zeros_like(raw[0]) if r is None else r for r in raw])  # (2k-1, m, r)
    raw = np.mod(raw, p)
    red = np.tensordot(field.RED.astype(np.float64), raw, axes=(0, 0))  # (k, m, r)
    red = np.mod(red, p).astype(np.int64)
    return _encode(field, red)


def matmul(field: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Exact product of two code matrices."""
    p, k = field.p, field.k
    if k == 1:
        C = (A.astype(np.float64) @ B.astype(np.float64)) % p
        return C.astype(np.uint8)
    return _matmul_layers(field, _layers(field, A), _layers(field, B))


class RightMul:
    """Precomputed right-multiplication ``rows @ B`` for repeated use (the
    coefficient layers of B are cached)."""

    def __init__(self, field: Field, B: np.ndarray):
        self.field = field
        if field.k == 1:
            self.FB = B.astype(np.float64)
        else:
            self.LB = _layers(field, B)

    def __call__(self, rows: np.ndarray) -> np.ndarray:
        f = self.field
        if rows.ndim == 1:
            return self(rows.reshape(1, -1))[0]
        if f.k == 1:
            return ((rows.astype(np.float64) @ self.FB) % f.p).astype(np.uint8)
        return _matmul_layers(f, _layers(f, rows), self.LB)


def matvec(field: Field, A: np.ndarray, v: np.ndarray) -> np.ndarray:
    return matmul(field, A, v.reshape(-1, 1)).reshape(-1)


def mat_pow(field: Field, A: np.ndarray, e: int) -> np.ndarray:
    out = identity(A.shape[0])
    base = A
    while e:
        if e & 1:
            out = matmul(field, out, base)
        base = matmul(field, base, base)
        e >>= 1
    return out


def add_mats(field: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return field.ADD[A, B]


def sub_mats(field: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return field.SUB[A, B]


def scale_mat(field: Field, c: int, A: np.ndarray) -> np.ndarray:
    return field.MUL[c][A]


def rref(field: Field, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (copy) and the pivot column list."""
    R = np.array(M, dtype=np.uint8, copy=True)
    if R.ndim != 2:
        raise ValueError("rref expects a 2-D array")
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    SUB, MUL, INV = field.SUB, field.MUL, field.INV
    for c in range(cols):
        if r == rows:
            break
        col = R[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        inv = INV[R[r, c]]
        R[r] = MUL[inv][R[r]]
        other = np.nonzero(R[:, c])[0]
        other = other[other != r]
        if other.size:
            factors = R[other, c]
            R[other] = SUB[R[other], MUL[factors[:, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(field: Field, M: np.ndarray) -> int:
    return len(rref(field, M)[1])


def nullspace(field: Field, M: np.ndarray) -> np.ndarray:
    """Rows spanning {x : M x = 0}."""
    R, pivots = rref(field, M)
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    if not free:
        return zeros((0, cols))
    out = zeros((len(free), cols))
    for idx, fc in enumerate(free):
        out[idx, fc] = 1
        for ri, pc in enumerate(pivots):
            out[idx, pc] = field.NEG[R[ri, fc]]
    return out


def inverse(field: Field, M: np.ndarray) -> np.ndarray:
    n = M.shape[0]
    aug = np.concatenate([M, identity(n)], axis=1)
    R, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return R[:, n:]


class ExpressSolver:
    """Expresses vectors in the span of a fixed independent row family.

    Given basis rows B (d x m, full row rank), ``express(v)`` returns the
    coefficient vector x with x . B = v, raising if v is outside the span.
    """

    def __init__(self, field: Field, basis_rows: np.ndarray):
        self.field = field
        B = np.asarray(basis_rows, dtype=np.uint8)
        d, m = B.shape
        aug = np.concatenate([B, identity(d)], axis=1)
        R, pivots = rref(field, aug)
        if len([c for c in pivots if c < m]) != d:
            raise ValueError("basis rows are linearly dependent")
        self.d, self.m = d, m
        self.R = R[:, :m]
        self.T = R[:, m:]
        self.pivots = [c for c in pivots if c < m]

    def express_many(self, V: np.ndarray) -> np.ndarray:
        """V: (t x m) -> coefficients (t x d); raises if any row is outside."""
        f = self.field
        V = np.array(V, dtype=np.uint8, copy=True)
        t = V.shape[0]
        C = zeros((t, self.d))
        for ri, pc in enumerate(self.pivots):
            fac = V[:, pc].copy()
            nz = np.nonzero(fac)[0]
            if nz.size == 0:
                continue
            C[nz] = f.ADD[C[nz], f.MUL[fac[nz][:, None], self.T[ri][None, :]]]
            V[nz] = f.SUB[V[nz], f.MUL[fac[nz][:, None], self.R[ri][None, :]]]
        if np.any(V):
            bad = int(np.nonzero(np.any(V, axis=1))[0][0])
            raise ValueError(f"vector {bad} is not in the span")
        return C

    def express(self, v: np.ndarray) -> np.ndarray:
        return self.express_many(v.reshape(1, -1))[0]


class EchelonBasis:
    """Incremental echelonized row basis (the workhorse of spinning).

    The basis is kept fully reduced, so reducing candidates against it is a
    single coefficient-layer product; the float64 layers of the basis are
    cached between mutations, and batch insertion works against a local
    layer stack so that no call re-layers the whole basis more than once.
    """

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows = zeros((0, ncols))
        self.pivots: list[int] = []
        self._LB: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def _basis_layers(self) -> np.ndarray:
        if self._LB is None:
            self._LB = _layers(self.field, self.rows)
        return self._LB

    def reduce(self, M: np.ndarray) -> np.ndarray:
        """Reduce candidate rows against the current basis (returns a copy)."""
        f = self.field
        M = np.array(M, dtype=np.uint8, copy=True)
        if M.ndim == 1:
            M = M.reshape(1, -1)
        if self.pivots:
            C = M[:, np.array(self.pivots, dtype=np.int64)]
            if C.any():
                M = f.SUB[M, _matmul_layers(f, _layers(f, C), self._basis_layers())]
        return M

    def insert_many(self, M: np.ndarray) -> int:
        """Insert rows; returns how many were new. Deterministic in row order."""
        f = self.field
        k, n = f.k, self.ncols
        M = self.reduce(M)
        if not M.any():
            return 0
        cap = 8
        new_rows = zeros((cap, n))
        LNEW = np.zeros((k, cap, n))
        new_pivs: list[int] = []
        t = 0
        for row in M:
            if not row.any():
                continue
            if t:
                fac = row[np.array(new_pivs, dtype=np.int64)]
                if fac.any():
                    red = _matmul_layers(f, _layers(f, fac.reshape(1, -1)), LNEW[:, :t, :])
                    row = f.SUB[row, red[0]]
                    if not row.any():
                        continue
            pc = int(np.nonzero(row)[0][0])
            row = f.MUL[f.INV[row[pc]]][row]
            if t:
                # keep the batch rows mutually reduced
                facs = new_rows[:t, pc]
                nz = np.nonzero(facs)[0]
                if nz.size:
                    new_rows[nz] = f.SUB[new_rows[nz], f.MUL[facs[nz][:, None], row[None, :]]]
                    LNEW[:, nz, :] = _layers(f, new_rows[nz])
            if t == cap:
                cap *= 2
                grown = zeros((cap, n))
                grown[:t] = new_rows[:t]
                new_rows = grown
                grown_l = np.zeros((k, cap, n))
                grown_l[:, :t, :] = LNEW[:, :t, :]
                LNEW = grown_l
            new_rows[t] = row
            LNEW[:, t, :] = _layers(f, row.reshape(1, -1))[:, 0, :]
            new_pivs.append(pc)
            t += 1
        if not t:
            return 0
        # clean the old rows at the new pivot columns, then splice by pivot
        if self.pivots:
            C = self.rows[:, np.array(new_pivs, dtype=np.int64)]
            if C.any():
                self.rows = f.SUB[
                    self.rows, _matmul_layers(f, _layers(f, C), LNEW[:, :t, :])
                ]
        all_rows = np.concatenate([self.rows, new_rows[:t]], axis=0)
        all_pivs = self.pivots + new_pivs
        order = np.argsort(np.array(all_pivs, dtype=np.int64), kind="stable")
        self.rows = np.ascontiguousarray(all_rows[order])
        self.pivots = [all_pivs[i] for i in order]
        self._LB = None
        return t

    def insert(self, v: np.ndarray) -> bool:
        return self.insert_many(v.reshape(1, -1)) == 1

    def contains(self, v: np.ndarray) -> bool:
        return not np.any(self.reduce(v))

    def basis(self) -> np.ndarray:
        return self.rows.copy()


def random_matrix(field: Field, rng, shape) -> np.ndarray:
    return np.array(rng.integers(0, field.q, size=shape), dtype=np.uint8)


def random_invertible(field: Field, rng, n: int) -> np.ndarray:
    while True:
        M = random_matrix(field, rng, (n, n))
        if rank(field, M) == n:
            return M


def batch_rank_prime(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack of small integer matrices over the prime field F_p."""
    mats = np.asarray(mats, dtype=np.int64) % p
    out = np.zeros(mats.shape[0], dtype=np.int64)
    for t in range(mats.shape[0]):
        m = mats[t].copy()
        rows, cols = m.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(m[r:, c])[0]
            if nz.size == 0:
                continue
            piv = r + int(nz[0])
            if piv != r:
                m[[r, piv]] = m[[piv, r]]
            inv = pow(int(m[r, c]), p - 2, p)
            m[r] = (m[r] * inv) % p
            others = np.nonzero(m[:, c])[0]
            others = others[others != r]
            if others.size:
                m[others] = (m[others] - np.outer(m[others, c], m[r])) % p
            r += 1
        out[t] = r
    return out
