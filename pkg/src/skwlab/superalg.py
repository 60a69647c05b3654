"""Restricted Lie superalgebras of 2n x 2n supermatrices over F_{p^k}.

Four families, named by their defining matrix shape:

* ``ptilde`` — block matrices [[A, B], [C, -A^T]] with B symmetric and C
  skew-symmetric (the full "strange" periplectic-type algebra);
* ``pder``   — the trace-zero subalgebra of ``ptilde`` (kernel of A -> tr A);
* ``q``      — block matrices [[A, B], [B, A]] (even copy A, odd copy B);
* ``sq``     — the subalgebra of ``q`` with tr B = 0 (kernel of the odd
  trace); its even part is all of ``q``'s even part.

Basis order is fixed and load-bearing for every downstream module: even
Cartan, even positive root vectors (lex), even negative root vectors (lex by
their positive partner), then the odd part — for the first two families the
symmetric block (lex, i <= j) followed by the skew block (lex, i < j); for the
queer families the odd Cartan, odd positive, odd negative.

The bracket is the supercommutator [x,y] = xy - (-1)^{|x||y|} yx; the p-th
power map on the even part is the matrix p-th power, re-expressed in the
basis.  All structure constants lie in the prime subfield.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .field import Field

__all__ = [
    "FAMILIES",
    "BasisVector",
    "LieSuperalgebra",
    "build_algebra",
    "verify_algebra",
    "adjoint_conjugate",
]

FAMILIES = ("ptilde", "pder", "q", "sq")

FAMILY_LABELS = {
    "ptilde": "p~({n})",
    "pder": "p({n})",
    "q": "q({n})",
    "sq": "q~({n})",
}


@dataclass(frozen=True)
class BasisVector:
    index: int
    parity: int  # 0 even, 1 odd
    z_degree: int | None  # -1/0/+1 for ptilde/pder; None for the queer families
    label: str
    matrix: np.ndarray  # (2n, 2n) field codes

    def __repr__(self) -> str:
        return f"BasisVector({self.index}, {self.label!r}, parity={self.parity})"


def _unit(field: Field, size: int, entries) -> np.ndarray:
    m = la.zeros((size, size))
    for (i, j, c) in entries:
        m[i, j] = field.from_int(c)
    return m


def _family_spec(family: str, n: int, field: Field):
    """Yield (label, parity, z_degree, root, entries) in the canonical order.

    ``root`` is an integer vector of length n in the epsilon-coordinates, or
    None for Cartan elements.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    out = []

    def root(*pairs):
        r = [0] * n
        for idx, c in pairs:
            r[idx] += c
        return tuple(r)

    if family in ("ptilde", "pder"):
        # even Cartan
        if family == "ptilde":
            for i in range(n):
                out.append((f"H{i + 1}", 0, 0, None, [(i, i, 1), (n + i, n + i, -1)]))
        else:
            for i in range(n - 1):
                out.append(
                    (
                        f"D{i + 1}",
                        0,
                        0,
                        None,
                        [(i, i, 1), (n + i, n + i, -1), (i + 1, i + 1, -1), (n + i + 1, n + i + 1, 1)],
                    )
                )
        # even root vectors: A_ij = E_ij - E_{n+j, n+i}, root eps_i - eps_j
        for i in range(n):
            for j in range(n):
                if i < j:
                    out.append((f"A{i + 1}{j + 1}", 0, 0, root((i, 1), (j, -1)), [(i, j, 1), (n + j, n + i, -1)]))
        for i in range(n):
            for j in range(n):
                if i > j:
                    out.append((f"A{i + 1}{j + 1}", 0, 0, root((i, 1), (j, -1)), [(i, j, 1), (n + j, n + i, -1)]))
        # odd symmetric block (z-degree +1): root eps_i + eps_j, i <= j
        for i in range(n):
            for j in range(i, n):
                if i == j:
                    out.append((f"S{i + 1}{i + 1}", 1, 1, root((i, 2)), [(i, i + n, 1)]))
                else:
                    out.append((f"S{i + 1}{j + 1}", 1, 1, root((i, 1), (j, 1)), [(i, j + n, 1), (j, i + n, 1)]))
        # odd skew block (z-degree -1): root -(eps_i + eps_j), i < j
        for i in range(n):
            for j in range(i + 1, n):
                out.append((f"C{i + 1}{j + 1}", 1, -1, root((i, -1), (j, -1)), [(i + n, j, 1), (j + n, i, -1)]))
    else:
        # even part: a full copy of gl(n) (both families)
        for i in range(n):
            out.append((f"J{i + 1}", 0, None, None, [(i, i, 1), (n + i, n + i, 1)]))
        for i in range(n):
            for j in range(n):
                if i < j:
                    out.append((f"X{i + 1}{j + 1}", 0, None, root((i, 1), (j, -1)), [(i, j, 1), (n + i, n + j, 1)]))
        for i in range(n):
            for j in range(n):
                if i > j:
                    out.append((f"X{i + 1}{j + 1}", 0, None, root((i, 1), (j, -1)), [(i, j, 1), (n + i, n + j, 1)]))
        # odd Cartan
        if family == "q":
            for i in range(n):
                out.append((f"J'{i + 1}", 1, None, None, [(i, n + i, 1), (n + i, i, 1)]))
        else:
            for i in range(n - 1):
                out.append(
                    (
                        f"K'{i + 1}",
                        1,
                        None,
                        None,
                        [(i, n + i, 1), (n + i, i, 1), (i + 1, n + i + 1, -1), (n + i + 1, i + 1, -1)],
                    )
                )
        for i in range(n):
            for j in range(n):
                if i < j:
                    out.append((f"X'{i + 1}{j + 1}", 1, None, root((i, 1), (j, -1)), [(i, n + j, 1), (n + i, j, 1)]))
        for i in range(n):
            for j in range(n):
                if i > j:
                    out.append((f"X'{i + 1}{j + 1}", 1, None, root((i, 1), (j, -1)), [(i, n + j, 1), (n + i, j, 1)]))
    return out


class LieSuperalgebra:
    """A concrete basis realization with structure constants and p-map.

    ``bracket_table[i, j]`` holds the coefficient vector (codes, prime
    subfield) of [b_i, b_j]; ``p_map[i]`` the coefficients of b_i^{[p]} for
    even i (zero rows for odd i, which have no p-power).
    """

    def __init__(self, family: str, n: int, field: Field):
        self.family = family
        self.n = n
        self.field = field
        spec = _family_spec(family, n, field)
        size = 2 * n
        basis = []
        for idx, (label, parity, z_deg, rt, entries) in enumerate(spec):
            basis.append(BasisVector(idx, parity, z_deg, label, _unit(field, size, entries)))
        self.basis = tuple(basis)
        d = len(basis)
        self.dim = d
        self.parities = np.array([b.parity for b in basis], dtype=np.uint8)
        self.even_indices = tuple(i for i in range(d) if basis[i].parity == 0)
        self.odd_indices = tuple(i for i in range(d) if basis[i].parity == 1)
        self.dim_even = len(self.even_indices)
        self.dim_odd = len(self.odd_indices)
        self.roots = {i: spec[i][3] for i in range(d) if spec[i][3] is not None}
        self.index_of_label = {b.label: b.index for b in basis}

        # structural partitions
        def _sel(pred):
            return tuple(i for i in range(d) if pred(basis[i]))

        if family in ("ptilde", "pder"):
            ncart = n if family == "ptilde" else n - 1
            self.cartan_even = tuple(range(ncart))
            self.pos_even = _sel(lambda b: b.parity == 0 and b.label.startswith("A") and self._lab_lt(b.label))
            self.neg_even = _sel(lambda b: b.parity == 0 and b.label.startswith("A") and not self._lab_lt(b.label))
            self.cartan_odd = ()
            self.pos_odd = _sel(lambda b: b.z_degree == 1)
            self.neg_odd = _sel(lambda b: b.z_degree == -1)
        else:
            self.cartan_even = tuple(range(n))
            self.pos_even = _sel(lambda b: b.parity == 0 and b.label.startswith("X") and self._lab_lt(b.label))
            self.neg_even = _sel(lambda b: b.parity == 0 and b.label.startswith("X") and not self._lab_lt(b.label))
            self.cartan_odd = _sel(lambda b: b.label.startswith(("J'", "K'")))
            self.pos_odd = _sel(lambda b: b.label.startswith("X'") and self._lab_lt(b.label))
            self.neg_odd = _sel(lambda b: b.label.startswith("X'") and not self._lab_lt(b.label))

        # diagonal data of the even Cartan (for root evaluation): entry vector
        # a with H = diag(a_1..a_n) on the upper-left block
        diag = {}
        for h in self.cartan_even:
            m = basis[h].matrix
            diag[h] = tuple(int(m[i, i]) for i in range(n))
        self.cartan_diag = diag

        # structure constants and p-map via one flattened solve
        flat = np.stack([b.matrix.reshape(-1) for b in basis])  # (d, 4n^2)
        self._matrix_solver = la.ExpressSolver(field, flat)
        mats = [b.matrix for b in basis]
        prods = {}
        for i in range(d):
            for j in range(d):
                prods[(i, j)] = la.matmul(field, mats[i], mats[j])
        brackets = np.zeros((d * d, 4 * n * n), dtype=np.uint8)
        for i in range(d):
            for j in range(d):
                xy = prods[(i, j)]
                yx = prods[(j, i)]
                if basis[i].parity and basis[j].parity:
                    br = la.add_mats(field, xy, yx)
                else:
                    br = la.sub_mats(field, xy, yx)
                brackets[i * d + j] = br.reshape(-1)
        table = self._matrix_solver.express_many(brackets).reshape(d, d, d)
        self.bracket_table = table.astype(np.uint8)

        p_map = np.zeros((d, d), dtype=np.uint8)
        for i in self.even_indices:
            powm = la.mat_pow(field, mats[i], field.p)
            p_map[i] = self._matrix_solver.express(powm.reshape(-1))
        self.p_map = p_map

    @staticmethod
    def _lab_lt(label: str) -> bool:
        """Whether a root-vector label Xij / Aij / X'ij has i < j."""
        digits = [c for c in label if c.isdigit()]
        return int(digits[0]) < int(digits[1])

    # -- basic queries -------------------------------------------------------

    @property
    def key(self):
        return (self.family, self.n, self.field.p, self.field.k)

    @property
    def display_name(self) -> str:
        return FAMILY_LABELS[self.family].format(n=self.n)

    def root_value(self, h_index: int, basis_index: int) -> int:
        """alpha(H) as a field code, for a Cartan index and a root vector."""
        rt = self.roots[basis_index]
        a = self.cartan_diag[h_index]
        p = self.field.p
        total = 0
        for ri, ai in zip(rt, a):
            # diagonal codes are field codes of +-1; map back to integers
            av = ai if ai < p - ai else ai - p
            total += ri * av
        return self.field.from_int(total)

    def bracket(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Supercommutator of two coefficient vectors (general field codes)."""
        f = self.field
        out = np.zeros(self.dim, dtype=np.uint8)
        xs = np.nonzero(x)[0]
        ys = np.nonzero(y)[0]
        for i in xs:
            for j in ys:
                c = f.mul(int(x[i]), int(y[j]))
                if c:
                    row = self.bracket_table[i, j]
                    out = f.ADD[out, f.MUL[c][row]]
        return out

    def matrix_of(self, coeffs: np.ndarray) -> np.ndarray:
        f = self.field
        m = la.zeros((2 * self.n, 2 * self.n))
        for i in np.nonzero(coeffs)[0]:
            m = f.ADD[m, f.MUL[int(coeffs[i])][self.basis[i].matrix]]
        return m

    def coords_of_matrix(self, mat: np.ndarray) -> np.ndarray:
        return self._matrix_solver.express(np.asarray(mat, dtype=np.uint8).reshape(-1))

    def p_power_of(self, coeffs: np.ndarray) -> np.ndarray:
        """[p]-power of an even element, via the p-th matrix power."""
        f = self.field
        nz = np.nonzero(coeffs)[0]
        if any(self.parities[int(i)] for i in nz):
            raise ValueError("p-power is defined on even elements only")
        return self.coords_of_matrix(la.mat_pow(f, self.matrix_of(coeffs), f.p))

    def simple_negative_even(self) -> tuple[int, ...]:
        """Indices of the negative simple-root vectors (root eps_{i+1}-eps_i)."""
        prefix = "A" if self.family in ("ptilde", "pder") else "X"
        return tuple(self.index_of_label[f"{prefix}{i + 2}{i + 1}"] for i in range(self.n - 1))

    def unit_coeffs(self, index: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.uint8)
        v[index] = 1
        return v

    def __repr__(self) -> str:
        return f"LieSuperalgebra({self.display_name} over F_{self.field.q}, dim {self.dim_even}|{self.dim_odd})"


def build_algebra(family: str, n: int, field: Field) -> LieSuperalgebra:
    """Construct one of the four families over the given field."""
    return LieSuperalgebra(family, n, field)


def _expected_dims(family: str, n: int) -> tuple[int, int]:
    return {
        "ptilde": (n * n, n * n),
        "pder": (n * n - 1, n * n),
        "q": (n * n, n * n),
        "sq": (n * n, n * n - 1),
    }[family]


def verify_algebra(g: LieSuperalgebra) -> dict:
    """Check the defining axioms; returns a report dict with witnesses.

    Checks: dimensions, skew-supersymmetry, the graded Jacobi identity,
    parity/z-grading compatibility of all structure constants, Cartan root
    spaces, restrictedness (ad of the p-th power equals the p-th power of ad),
    and closure of the p-map inside the even part.
    """
    f = g.field
    p = f.p
    d = g.dim
    T = g.bracket_table.astype(np.int64)
    # structure constants are prime-subfield codes: treat as integers mod p
    assert int(T.max(initial=0)) < p, "structure constants must lie in the prime subfield"
    par = g.parities.astype(np.int64)
    report: dict = {"algebra": g.display_name, "field": str(f.descriptor), "checks": {}, "notes": []}

    def record(name, ok, detail=None):
        report["checks"][name] = {"pass": bool(ok), "detail": detail}

    record("dimension", (g.dim_even, g.dim_odd) == _expected_dims(g.family, g.n), (g.dim_even, g.dim_odd))

    sign = np.where((par[:, None] * par[None, :]) % 2 == 1, -1, 1)  # (d, d)
    skew_ok = np.array_equal(T % p, (-sign[:, :, None] * np.swapaxes(T, 0, 1)) % p)
    record("skew_supersymmetry", skew_ok)

    # graded Jacobi:
    #   (-1)^{|i||k|}[x_i,[x_j,x_k]] + (-1)^{|j||i|}[x_j,[x_k,x_i]]
    #                                + (-1)^{|k||j|}[x_k,[x_i,x_j]] = 0,
    # evaluated one i-slice at a time to keep memory flat
    Tf = (T % p).astype(np.float64)
    jac_ok = True
    jac_witness = None
    s = sign.astype(np.float64)
    for i in range(d):
        A1 = np.einsum("jkm,mr->jkr", Tf, Tf[i]) % p  # [x_i,[x_j,x_k]]
        A2 = np.einsum("km,jmr->jkr", Tf[:, i, :], Tf) % p  # [x_j,[x_k,x_i]]
        A3 = np.einsum("jm,kmr->jkr", Tf[i], Tf) % p  # [x_k,[x_i,x_j]]
        total = (s[i][None, :, None] * A1 + s[:, i][:, None, None] * A2 + s.T[:, :, None] * A3) % p
        if np.any(total):
            jac_ok = False
            j, k0, r = np.argwhere(total)[0]
            jac_witness = (i, int(j), int(k0), int(r))
            break
    record("jacobi", jac_ok, jac_witness)

    # parity grading of structure constants
    par_ok = True
    mism = np.nonzero(T)
    for i, j, m in zip(*mism):
        if (par[i] + par[j]) % 2 != par[m]:
            par_ok = False
            break
    record("parity_grading", par_ok)

    # z-grading for the periplectic-type families
    if g.family in ("ptilde", "pder"):
        zdeg = np.array([b.z_degree for b in g.basis], dtype=np.int64)
        z_ok = True
        for i, j, m in zip(*mism):
            if zdeg[i] + zdeg[j] != zdeg[m]:
                z_ok = False
                break
        record("z_grading", z_ok)

    # root spaces: [h, x_alpha] = alpha(h) x_alpha
    root_ok = True
    root_witness = None
    for h in g.cartan_even:
        for a_idx in g.roots:
            expected = np.zeros(d, dtype=np.uint8)
            expected[a_idx] = g.root_value(h, a_idx)
            if not np.array_equal(g.bracket_table[h, a_idx], expected):
                root_ok = False
                root_witness = (g.basis[h].label, g.basis[a_idx].label)
                break
        if not root_ok:
            break
    record("root_spaces", root_ok, root_witness)

    # restrictedness: ad(x^{[p]}) = (ad x)^p for even x, on the whole algebra
    restr_ok = True
    restr_witness = None
    for i in g.even_indices:
        ad_i = np.transpose(T[i] % p)  # ad_i[r, m] = T[i, m, r]
        ad_pow = np.eye(d)
        for _ in range(p):
            ad_pow = (ad_pow @ ad_i) % p
        ad_pmap = np.zeros((d, d))
        for s_idx in np.nonzero(g.p_map[i])[0]:
            ad_pmap += int(g.p_map[i][s_idx]) * np.transpose(T[s_idx] % p)
        if np.any((ad_pow - ad_pmap) % p):
            restr_ok = False
            restr_witness = g.basis[i].label
            break
    record("restrictedness", restr_ok, restr_witness)

    # p-map closure: lands in the even part (and vanishes on odd rows)
    pm = g.p_map.astype(np.int64)
    closure_ok = not np.any(pm[:, list(g.odd_indices)]) and not np.any(pm[list(g.odd_indices), :])
    record("pmap_closure", closure_ok)

    if g.family == "pder" and g.n % p == 0:
        report["notes"].append(
            "characteristic divides n: the trace-kernel realization is used; its "
            "identification with the derived algebra is not checked"
        )
    report["all_pass"] = all(c["pass"] for c in report["checks"].values())
    return report


def adjoint_conjugate(g: LieSuperalgebra, g_mat: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    """Coefficients of Ad(G)(x) = G X G^{-1}.

    For the periplectic-type families G = diag(g, g^{-T}); for the queer
    families G = diag(g, g); both preserve the defining shape.
    """
    f = g.field
    n = g.n
    g_mat = np.asarray(g_mat, dtype=np.uint8)
    if g_mat.shape != (n, n):
        raise ValueError(f"expected an {n}x{n} invertible block, got {g_mat.shape}")
    g_inv = la.inverse(f, g_mat)
    G = la.zeros((2 * n, 2 * n))
    Ginv = la.zeros((2 * n, 2 * n))
    if g.family in ("ptilde", "pder"):
        G[:n, :n] = g_mat
        G[n:, n:] = g_inv.T
        Ginv[:n, :n] = g_inv
        Ginv[n:, n:] = g_mat.T
    else:
        G[:n, :n] = g_mat
        G[n:, n:] = g_mat
        Ginv[:n, :n] = g_inv
        Ginv[n:, n:] = g_inv
    X = g.matrix_of(coeffs)
    Y = la.matmul(f, la.matmul(f, G, X), Ginv)
    return g.coords_of_matrix(Y)
