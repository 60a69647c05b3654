"""p-characters, isotropy data, and the first maximal-dimension bound.

A p-character is an even linear functional chi on the algebra; it enters
representation theory through the scalars chi(x)^p by which x^p - x^{[p]}
acts.  This module computes the associated Gram matrices
theta([x, y]) on the even and odd parts, their b-values (ranks), the exact
bound term p^{b0/2} * 2^{ceil(b1/2)}, and generates the standard regular
semisimple / regular nilpotent characters weights-first: weights lambda are
chosen first and chi is derived coordinate-wise through the inverse Frobenius,
so that lambda lies in the Artin-Schreier solution set of chi by construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .field import Field
from .superalg import LieSuperalgebra

__all__ = [
    "PChar",
    "WeightVector",
    "IsotropyReport",
    "gram_matrix",
    "b_values",
    "skw_bound",
    "gen_regular_semisimple",
    "gen_regular_nilpotent",
    "lambda_set",
    "coadjoint",
    "enumerate_prime_rational_duals",
    "sample_duals",
    "find_regular_weights",
    "max_isotropic_dim_of_diag",
]

_EXHAUSTIVE_CAP = 10**6
_SAMPLE_COUNT = 10**4


@dataclass(frozen=True)
class PChar:
    """Even linear functional: one field code per even basis vector."""

    algebra: LieSuperalgebra
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.algebra.dim_even:
            raise ValueError(
                f"expected {self.algebra.dim_even} even values, got {len(self.values)}"
            )

    def on_basis(self, index: int) -> int:
        """Value on a basis vector by its basis index (0 on odd vectors)."""
        g = self.algebra
        if g.parities[index]:
            return 0
        return self.values[g.even_indices.index(index)]

    def on_coeffs(self, coeffs: np.ndarray) -> int:
        f = self.algebra.field
        total = 0
        for i in np.nonzero(coeffs)[0]:
            total = f.add(total, f.mul(int(coeffs[i]), self.on_basis(int(i))))
        return total

    def is_zero_on(self, indices) -> bool:
        return all(self.on_basis(i) == 0 for i in indices)

    def described(self) -> dict:
        g = self.algebra
        return {
            g.basis[i].label: self.on_basis(i)
            for i in g.even_indices
            if self.on_basis(i) != 0
        }

    def full_vector(self) -> np.ndarray:
        v = np.zeros(self.algebra.dim, dtype=np.uint8)
        for pos, i in enumerate(self.algebra.even_indices):
            v[i] = self.values[pos]
        return v


@dataclass(frozen=True)
class WeightVector:
    """Values of a weight on the even Cartan basis, in basis order."""

    algebra: LieSuperalgebra
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.algebra.cartan_even):
            raise ValueError(
                f"expected {len(self.algebra.cartan_even)} Cartan values, got {len(self.values)}"
            )

    @property
    def labels(self) -> tuple[str, ...]:
        g = self.algebra
        return tuple(g.basis[i].label for i in g.cartan_even)

    def in_lambda_set(self, chi: PChar) -> bool:
        f = self.algebra.field
        for pos, h in enumerate(self.algebra.cartan_even):
            lhs = f.sub(f.frob(self.values[pos]), self.values[pos])
            if lhs != f.frob(chi.on_basis(h)):
                return False
        return True

    def described(self) -> dict:
        return dict(zip(self.labels, self.values))


@dataclass(frozen=True)
class IsotropyReport:
    b0: int
    b1: int
    centralizer_even: int
    centralizer_odd: int
    iso_even: int
    iso_odd: int
    skw_term: int


def gram_matrix(g: LieSuperalgebra, theta: PChar, part: str) -> np.ndarray:
    """Gram matrix theta([x_i, x_j]) on the chosen homogeneous part."""
    if part == "even":
        idx = list(g.even_indices)
    elif part == "odd":
        idx = list(g.odd_indices)
    else:
        raise ValueError("part must be 'even' or 'odd'")
    f = g.field
    T = g.bracket_table[np.ix_(idx, idx)][:, :, list(g.even_indices)].astype(np.int64)
    theta_layers = f.COEFFS[np.array(theta.values, dtype=np.uint8)].astype(np.int64)  # (d0, k)
    vals = np.tensordot(T, theta_layers, axes=(2, 0)) % f.p  # (m, m, k)
    pows = np.array(f._pows, dtype=np.int64)
    return np.tensordot(vals, pows, axes=(2, 0)).astype(np.uint8)


def b_values(g: LieSuperalgebra, theta: PChar) -> IsotropyReport:
    f = g.field
    ge = gram_matrix(g, theta, "even")
    go = gram_matrix(g, theta, "odd")
    b0 = la.rank(f, ge)
    b1 = la.rank(f, go)
    c0 = g.dim_even - b0
    c1 = g.dim_odd - b1
    return IsotropyReport(
        b0=b0,
        b1=b1,
        centralizer_even=c0,
        centralizer_odd=c1,
        iso_even=(g.dim_even + c0) // 2,
        iso_odd=(g.dim_odd + c1) // 2,
        skw_term=int(f.p) ** (b0 // 2) * 2 ** ((b1 + 1) // 2),
    )


def skw_bound(g: LieSuperalgebra, thetas) -> dict:
    """Summary of the bound term over an iterable of p-characters."""
    best = None
    best_theta = None
    min_c1 = None
    count = 0
    for theta in thetas:
        rep = b_values(g, theta)
        count += 1
        if best is None or rep.skw_term > best:
            best = rep.skw_term
            best_theta = theta
        min_c1 = rep.centralizer_odd if min_c1 is None else min(min_c1, rep.centralizer_odd)
    return {
        "algebra": g.display_name,
        "count": count,
        "max_term": best,
        "argmax": best_theta.described() if best_theta is not None else None,
        "min_dim_g1_theta": min_c1,
    }


def enumerate_prime_rational_duals(g: LieSuperalgebra):
    """All p-characters with values in the prime subfield (exhaustive mode)."""
    p = g.field.p
    total = p**g.dim_even
    if total > _EXHAUSTIVE_CAP:
        raise ValueError(
            f"exhaustive dual enumeration needs {total} points (> {_EXHAUSTIVE_CAP}); use sampling"
        )
    for vals in itertools.product(range(p), repeat=g.dim_even):
        yield PChar(g, vals)


def sample_duals(g: LieSuperalgebra, count: int = _SAMPLE_COUNT, seed: int = 1, full_field: bool = True):
    """Seeded random p-characters (whole field by default)."""
    rng = np.random.default_rng(seed)
    hi = g.field.q if full_field else g.field.p
    for _ in range(count):
        yield PChar(g, tuple(int(x) for x in rng.integers(0, hi, size=g.dim_even)))


def _as_codes(field: Field, weights) -> tuple[int, ...]:
    out = []
    for w in weights:
        code = getattr(w, "code", w)
        if not isinstance(code, (int, np.integer)) or not 0 <= int(code) < field.q:
            raise ValueError(f"weight {w!r} is not a valid element of {field.descriptor}")
        out.append(int(code))
    return tuple(out)


def gen_regular_semisimple(g: LieSuperalgebra, weights, strong: bool = False):
    """Build (chi, lambda) from diagonal weights, weights-first.

    Constraints on the weights (as elements of the big field):
      * all families: lambda_i - lambda_j outside the prime field, pairwise;
      * queer families additionally: each lambda_i outside the prime field;
      * ``strong`` (queer only): lambda_i + lambda_j outside the prime field.
    Raises ValueError naming the offending pair.
    """
    f = g.field
    n = g.n
    lam = _as_codes(f, weights)
    if len(lam) != n:
        raise ValueError(f"expected {n} weights, got {len(lam)}")
    queer = g.family in ("q", "sq")
    if strong and not queer:
        raise ValueError("strong regularity applies to the queer families only")
    for i in range(n):
        for j in range(i + 1, n):
            if f.in_prime_subfield(f.sub(lam[i], lam[j])):
                raise ValueError(f"weights {i + 1} and {j + 1}: difference lies in the prime field")
    if queer:
        for i in range(n):
            if f.in_prime_subfield(lam[i]):
                raise ValueError(f"weight {i + 1} lies in the prime field")
        if strong:
            for i in range(n):
                for j in range(i + 1, n):
                    if f.in_prime_subfield(f.add(lam[i], lam[j])):
                        raise ValueError(f"weights {i + 1} and {j + 1}: sum lies in the prime field")

    def chi_of(value: int) -> int:
        return f.frobinv(f.sub(f.frob(value), value))

    if g.family == "pder":
        lam_cartan = tuple(f.sub(lam[i], lam[i + 1]) for i in range(n - 1))
    else:
        lam_cartan = lam
    chi_vals = [0] * g.dim_even
    for pos, h in enumerate(g.cartan_even):
        chi_vals[g.even_indices.index(h)] = chi_of(lam_cartan[pos])
    chi = PChar(g, tuple(chi_vals))
    return chi, WeightVector(g, lam_cartan)


def gen_regular_nilpotent(g: LieSuperalgebra) -> PChar:
    """chi = 1 on the negative simple root vectors, 0 elsewhere."""
    if g.family not in ("ptilde", "pder"):
        raise ValueError("regular nilpotent generation is defined for the periplectic-type families")
    vals = [0] * g.dim_even
    for idx in g.simple_negative_even():
        vals[g.even_indices.index(idx)] = 1
    return PChar(g, tuple(vals))


def lambda_set(g: LieSuperalgebra, chi: PChar) -> list[WeightVector]:
    """All weights on the even Cartan solving the coordinate-wise
    Artin-Schreier identity lambda(H)^p - lambda(H) = chi(H)^p.

    Empty means the field is too small for this chi."""
    f = g.field
    per_coord = []
    for h in g.cartan_even:
        roots = f.artin_schreier_roots_code(f.frob(chi.on_basis(h)))
        if not roots:
            return []
        per_coord.append(roots)
    return [WeightVector(g, tup) for tup in itertools.product(*per_coord)]


def coadjoint(g: LieSuperalgebra, theta: PChar, g_mat: np.ndarray) -> PChar:
    """theta composed with Ad(g)^{-1}: the coadjoint action on duals."""
    from .superalg import adjoint_conjugate

    f = g.field
    g_inv = la.inverse(f, np.asarray(g_mat, dtype=np.uint8))
    vals = []
    for i in g.even_indices:
        coeffs = adjoint_conjugate(g, g_inv, g.unit_coeffs(i))
        vals.append(theta.on_coeffs(coeffs))
    return PChar(g, tuple(vals))


def max_isotropic_dim_of_diag(field: Field, diag_codes) -> int:
    """Dimension of a maximal totally isotropic subspace for a diagonal
    symmetric form over F_q (odd q), supported for rank <= 3 after removing
    the radical (all acceptance grids stay within n <= 3)."""
    nz = [c for c in diag_codes if c != 0]
    radical = len(diag_codes) - len(nz)
    r = len(nz)
    if r == 0:
        witt = 0
    elif r == 1:
        witt = 0
    elif r == 2:
        # isotropic iff -d1*d2 is a nonzero square
        val = field.neg(field.mul(nz[0], nz[1]))
        witt = 1 if _is_square(field, val) else 0
    elif r == 3:
        witt = 1  # every nondegenerate ternary form over a finite field is isotropic
    else:
        raise ValueError("diagonal isotropy rule implemented for rank <= 3 only")
    return radical + witt


def _is_square(field: Field, code: int) -> bool:
    if code == 0:
        return True
    return field.pow(code, (field.q - 1) // 2) == 1


def find_regular_weights(
    g: LieSuperalgebra,
    strong: bool = False,
    require_max_isotropy: bool = False,
    skip: int = 0,
) -> tuple[int, ...]:
    """Deterministic weight search: scan diagonal tuples in lexicographic code
    order and return the first (after ``skip``) admissible one.

    ``require_max_isotropy`` (queer families) additionally demands that the
    diagonal form 2*lambda_i reach the generic maximal-isotropic dimension
    floor(n/2), which over a finite field is a genuine extra condition for
    even n."""
    f = g.field
    n = g.n
    found = 0
    for tup in itertools.product(range(f.q), repeat=n):
        try:
            gen_regular_semisimple(g, tup, strong=strong)
        except ValueError:
            continue
        if require_max_isotropy:
            diag = [f.mul(2 % f.p, c) for c in tup]
            if max_isotropic_dim_of_diag(f, diag) != n // 2:
                continue
        if found == skip:
            return tup
        found += 1
    raise ValueError(
        f"no admissible weight tuple over {f.descriptor} (strong={strong}); raise the field degree"
    )
