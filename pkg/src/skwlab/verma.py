"""Family-specific induced modules and the closed-form irreducibility data.

Constructors:
  * gl_baby_verma      - Borel induction on the gl(n) even part;
  * ptilde_baby_verma  - periplectic Borel induction (even Borel plus the
                         whole z-degree +1 odd part);
  * kac_module_p2      - n = 2 periplectic induction from an even-part module
                         with the z-degree +1 part acting by zero;
  * queer_cartan_module- the Clifford-type module over the queer Cartan
                         subalgebra, built from a maximal isotropic subspace
                         of the weight form f_lambda(y, y') = lambda([y, y']);
  * queer_baby_verma   - queer Borel induction from the Cartan module.

Scalar criteria:
  * omega(lam):  prod_{i<j} (lam_i - lam_j + j - i - 1);
  * phi(lam):    prod_{i<j} (lam_i + lam_j) * prod_{t=1}^{p-1} (lam_i - lam_j - t);
  * xy_scalar:   the scalar by which (product of raising odd root vectors)
                 times (product of lowering odd root vectors) acts on the
                 generator of a periplectic baby Verma.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import envmod as em
from . import linalg as la
from .field import Field
from .pchar import PChar, WeightVector, lambda_set
from .superalg import LieSuperalgebra, build_algebra

__all__ = [
    "WeightVector",
    "CartanModule",
    "gl_baby_verma",
    "ptilde_baby_verma",
    "kac_module_p2",
    "omega",
    "phi",
    "xy_scalar",
    "queer_cartan_module",
    "queer_baby_verma",
    "classify_p2",
]


# ---------------------------------------------------------------------------
# helpers


def _require_vanishing_on_positive(g: LieSuperalgebra, chi: PChar):
    bad = [i for i in g.pos_even if chi.on_basis(i) != 0]
    if bad:
        raise ValueError(
            f"chi must vanish on the positive even part; nonzero at {g.basis[bad[0]].label}"
        )


def _require_weight(g: LieSuperalgebra, chi: PChar, lam: WeightVector):
    if lam.algebra is not g:
        raise ValueError("weight belongs to a different algebra instance")
    if not lam.in_lambda_set(chi):
        raise ValueError("weight does not solve the Artin-Schreier identity for chi")


def _borel_scalars(g: LieSuperalgebra, sub, lam: WeightVector):
    cart = list(g.cartan_even)
    out = []
    for s in sub:
        out.append(lam.values[cart.index(s)] if s in cart else 0)
    return out


def _weight_values(lam) -> tuple:
    if isinstance(lam, WeightVector):
        return tuple(lam.values)
    return tuple(int(v) for v in lam)


# ---------------------------------------------------------------------------
# constructors: gl and periplectic


def gl_baby_verma(n: int, field: Field, chi: PChar | None, lam, host: LieSuperalgebra | None = None) -> em.InducedModule:
    """Borel-to-gl(n) induction inside the even part of a host algebra.

    The host must have even part gl(n) (periplectic or queer family); defaults
    to chi's algebra, or a fresh periplectic host with chi = 0."""
    if host is None:
        host = chi.algebra if chi is not None else build_algebra("ptilde", n, field)
    if host.family not in ("ptilde", "q"):
        raise ValueError("host algebra must have a full gl(n) even part")
    if host.n != n or host.field is not field:
        raise ValueError("host does not match n / field")
    if chi is None:
        chi = PChar(host, (0,) * host.dim_even)
    if not isinstance(lam, WeightVector):
        lam = WeightVector(host, _weight_values(lam))
    _require_vanishing_on_positive(host, chi)
    _require_weight(host, chi, lam)
    ambient = tuple(host.even_indices)
    sub = list(host.cartan_even) + list(host.pos_even)
    V = em.trivial_inducing_data(field, _borel_scalars(host, sub, lam))
    return em.induce(
        host,
        sub,
        V,
        chi,
        ambient=ambient,
        provenance={
            "kind": "gl_baby_verma",
            "n": n,
            "lambda": list(lam.values),
            "chi": chi.described(),
        },
    )


def _odd_part_of_z_degree(g: LieSuperalgebra, z: int) -> list:
    return [i for i in g.odd_indices if g.basis[i].z_degree == z]


def ptilde_baby_verma(g: LieSuperalgebra, chi: PChar, lam: WeightVector) -> em.InducedModule:
    """Periplectic baby Verma: induce the one-dimensional weight module from
    the even Borel extended by the whole z-degree +1 odd part."""
    if g.family not in ("ptilde", "pder"):
        raise ValueError("periplectic baby Verma needs a periplectic-type family")
    if not isinstance(lam, WeightVector):
        lam = WeightVector(g, _weight_values(lam))
    _require_vanishing_on_positive(g, chi)
    _require_weight(g, chi, lam)
    sub = list(g.cartan_even) + list(g.pos_even) + _odd_part_of_z_degree(g, 1)
    V = em.trivial_inducing_data(g.field, _borel_scalars(g, sub, lam))
    return em.induce(
        g,
        sub,
        V,
        chi,
        provenance={
            "kind": "baby_verma",
            "family": g.family,
            "n": g.n,
            "lambda": list(lam.values),
            "chi": chi.described(),
        },
    )


def kac_module_p2(chi: PChar, lam: WeightVector) -> em.InducedModule:
    """n = 2 periplectic induction from an even-part module, the z-degree +1
    odd part acting by zero.

    The even-part module is the p-dimensional Borel-induced one, except in
    the degenerate stratum chi(derived even part) = 0 and lam(H) = 0, where
    it is the one-dimensional module with H, E, F acting by zero (the center
    acts by c = lam(z))."""
    g = chi.algebra
    if g.family != "ptilde" or g.n != 2:
        raise ValueError("this construction is specific to the n = 2 periplectic family")
    f = g.field
    lab = g.index_of_label
    E, F = lab["A12"], lab["A21"]
    if chi.on_basis(E) != 0:
        raise ValueError("chi must vanish on the raising even root vector")
    if not isinstance(lam, WeightVector):
        lam = WeightVector(g, _weight_values(lam))
    _require_weight(g, chi, lam)

    lam_h = f.sub(lam.values[0], lam.values[1])
    lam_z = f.add(lam.values[0], lam.values[1])
    chi_p0_zero = chi.on_basis(F) == 0 and chi.on_basis(lab["H1"]) == chi.on_basis(lab["H2"])

    sub = list(g.even_indices) + _odd_part_of_z_degree(g, 1)
    if chi_p0_zero and lam_h == 0:
        scalars = []
        for s in sub:
            if s == lab["H1"]:
                scalars.append(lam.values[0])
            elif s == lab["H2"]:
                scalars.append(lam.values[1])
            else:
                scalars.append(0)
        V = em.trivial_inducing_data(f, scalars)
        case = "degenerate"
    else:
        L0 = gl_baby_verma(2, f, chi, lam, host=g)
        mats = []
        for s in sub:
            if g.parities[s]:
                mats.append(la.zeros((L0.dim, L0.dim)))
            else:
                mats.append(L0.operator_for(s))
        V = em.InducingData(dim=L0.dim, matrices=mats, parities=tuple([0] * L0.dim))
        case = "generic"
    return em.induce(
        g,
        sub,
        V,
        chi,
        provenance={
            "kind": "kac_module",
            "n": 2,
            "case": case,
            "lambda": list(lam.values),
            "lambda_H": int(lam_h),
            "lambda_z": int(lam_z),
            "chi": chi.described(),
            "chi_derived_even_zero": bool(chi_p0_zero),
        },
    )


# ---------------------------------------------------------------------------
# scalar criteria


def omega(lam, n: int, field: Field) -> int:
    """prod_{1<=i<j<=n} (lam_i - lam_j + j - i - 1), exactly in the field."""
    vals = _weight_values(lam)
    if len(vals) != n:
        raise ValueError(f"expected {n} weight values")
    out = 1
    for i in range(n):
        for j in range(i + 1, n):
            term = field.add(field.sub(vals[i], vals[j]), field.from_int(j - i - 1))
            out = field.mul(out, term)
    return out


def phi(lam, n: int, field: Field) -> int:
    """prod_{i<j} (lam_i + lam_j) * prod_{t=1}^{p-1} (lam_i - lam_j - t)."""
    vals = _weight_values(lam)
    if len(vals) != n:
        raise ValueError(f"expected {n} weight values")
    out = 1
    for i in range(n):
        for j in range(i + 1, n):
            out = field.mul(out, field.add(vals[i], vals[j]))
            diff = field.sub(vals[i], vals[j])
            for t in range(1, field.p):
                out = field.mul(out, field.sub(diff, field.from_int(t)))
    return out


def xy_scalar(Z: em.InducedModule) -> int:
    """Scalar by which x-product * y-product acts on the generator of a
    periplectic baby Verma; raises if the image is not a scalar multiple.

    x-product: odd root vectors for eps_i + eps_j (i < j), ascending lex;
    y-product: odd root vectors for -(eps_i + eps_j), ascending lex."""
    g = Z.algebra
    if Z.provenance.get("kind") != "baby_verma":
        raise ValueError("xy_scalar expects a periplectic baby Verma module")
    n = g.n
    lab = g.index_of_label
    word = [lab[f"S{i + 1}{j + 1}"] for i in range(n) for j in range(i + 1, n)]
    word += [lab[f"C{i + 1}{j + 1}"] for i in range(n) for j in range(i + 1, n)]
    result = Z.straighten_word(word)
    gen = (tuple([0] * len(Z.neg_letters)), 0)
    scal = 0
    for term, c in result.items():
        if term == gen:
            scal = c
        elif c != 0:
            raise ValueError(f"x*y on the generator is not scalar: stray term {term}")
    return scal


# ---------------------------------------------------------------------------
# queer constructions


@dataclass
class CartanModule:
    """The induced module over the queer Cartan subalgebra together with the
    isotropy data of the weight form on the odd Cartan part."""

    algebra: LieSuperalgebra
    chi: PChar
    lam: WeightVector
    gram: np.ndarray
    isotropic_basis: np.ndarray  # rows: coefficients over the odd Cartan basis
    complement_basis: np.ndarray
    module: em.InducedModule

    @property
    def dim_h1_lambda(self) -> int:
        return self.isotropic_basis.shape[0]

    @property
    def dim(self) -> int:
        return self.module.dim


def _cartan_gram(g: LieSuperalgebra, lam: WeightVector) -> np.ndarray:
    f = g.field
    h1 = list(g.cartan_odd)
    cart = list(g.cartan_even)
    m = len(h1)
    G = np.zeros((m, m), dtype=np.uint8)
    for a in range(m):
        for b in range(m):
            br = g.bracket(g.unit_coeffs(h1[a]), g.unit_coeffs(h1[b]))
            val = 0
            for i in np.nonzero(br)[0]:
                if int(i) not in cart:
                    raise ValueError("odd Cartan brackets leave the even Cartan")
                val = f.add(val, f.mul(int(br[i]), lam.values[cart.index(int(i))]))
            G[a, b] = val
    return G


def _max_isotropic(field: Field, G: np.ndarray, seed: int = 5) -> np.ndarray:
    """Rows spanning a maximal totally isotropic subspace of the symmetric
    form G: radical first, then greedy extension; maximality is certified by
    exhaustive search when q^m is small, else by seeded probes."""
    m = G.shape[0]
    basis = la.EchelonBasis(field, m)
    for row in la.nullspace(field, G):
        basis.insert(row)

    def is_isotropic_ext(v):
        if basis.contains(v):
            return False
        vecs = np.concatenate([basis.basis(), v.reshape(1, -1)], axis=0)
        prod = la.matmul(field, la.matmul(field, vecs, G), vecs.T)
        return not prod.any()

    def candidates():
        if field.q**m <= 10**5:
            for tup in itertools.product(range(field.q), repeat=m):
                v = np.array(tup, dtype=np.uint8)
                if v.any():
                    yield v
        else:
            for i in range(m):
                yield la.identity(m)[i]
            rng = np.random.default_rng(seed)
            for _ in range(5000):
                v = rng.integers(0, field.q, size=m).astype(np.uint8)
                if v.any():
                    yield v

    grew = True
    while grew:
        grew = False
        for v in candidates():
            if is_isotropic_ext(v):
                basis.insert(v)
                grew = True
                break
    return np.array(basis.basis(), dtype=np.uint8)


def queer_cartan_module(g: LieSuperalgebra, chi: PChar, lam: WeightVector) -> CartanModule:
    """Clifford-type module over the Cartan subalgebra of a queer family."""
    if g.family not in ("q", "sq"):
        raise ValueError("queer Cartan module needs a queer-type family")
    f = g.field
    if not isinstance(lam, WeightVector):
        lam = WeightVector(g, _weight_values(lam))
    _require_weight(g, chi, lam)
    h0 = list(g.cartan_even)
    h1 = list(g.cartan_odd)
    ambient = tuple(sorted(h0 + h1))
    G = _cartan_gram(g, lam)
    iso = _max_isotropic(f, G)

    # complete to a basis of the odd Cartan by unit vectors
    comp_rows = []
    basis = la.EchelonBasis(f, len(h1))
    for row in iso:
        basis.insert(row)
    for i in range(len(h1)):
        v = la.identity(len(h1))[i]
        if not basis.contains(v):
            basis.insert(v)
            comp_rows.append(v)
    comp = np.array(comp_rows, dtype=np.uint8) if comp_rows else np.zeros((0, len(h1)), np.uint8)

    def odd_combo(row, label):
        coeffs = np.zeros(g.dim, dtype=np.uint8)
        for pos, c in enumerate(row):
            if c:
                coeffs[h1[pos]] = c
        return (label, coeffs)

    sub = list(h0) + [odd_combo(r, f"iso{t}") for t, r in enumerate(iso)]
    negs = [odd_combo(r, f"hat{t}") for t, r in enumerate(comp)]
    cart = list(g.cartan_even)
    scalars = [lam.values[cart.index(s)] for s in h0] + [0] * iso.shape[0]
    V = em.trivial_inducing_data(f, scalars)
    M = em.induce(
        g,
        sub,
        V,
        chi,
        ambient=ambient,
        negatives=negs,
        provenance={
            "kind": "queer_cartan_module",
            "family": g.family,
            "n": g.n,
            "lambda": list(lam.values),
            "chi": chi.described(),
            "dim_h1_lambda": int(iso.shape[0]),
        },
    )
    return CartanModule(
        algebra=g, chi=chi, lam=lam, gram=G, isotropic_basis=iso, complement_basis=comp, module=M
    )


def queer_baby_verma(g: LieSuperalgebra, chi: PChar, lam: WeightVector) -> em.InducedModule:
    """Queer baby Verma: induce the Cartan module from the Borel (even Borel
    plus odd Cartan plus odd positive part, the positive parts acting by 0)."""
    if g.family not in ("q", "sq"):
        raise ValueError("queer baby Verma needs a queer-type family")
    if not isinstance(lam, WeightVector):
        lam = WeightVector(g, _weight_values(lam))
    _require_vanishing_on_positive(g, chi)
    _require_weight(g, chi, lam)
    CM = queer_cartan_module(g, chi, lam)
    W = CM.module

    sub = list(g.cartan_even) + list(g.pos_even) + list(g.cartan_odd) + list(g.pos_odd)
    mats = []
    for s in sub:
        if s in g.cartan_even or s in g.cartan_odd:
            mats.append(W.operator_for(s))
        else:
            mats.append(la.zeros((W.dim, W.dim)))
    V = em.InducingData(dim=W.dim, matrices=mats, parities=tuple(int(x) for x in W.parity))
    return em.induce(
        g,
        sub,
        V,
        chi,
        provenance={
            "kind": "queer_baby_verma",
            "family": g.family,
            "n": g.n,
            "lambda": list(lam.values),
            "chi": chi.described(),
            "dim_h1_lambda": CM.dim_h1_lambda,
            "cartan_module_dim": W.dim,
        },
    )


# ---------------------------------------------------------------------------
# the n = 2 periplectic classification sweep


def classify_p2(chi: PChar, seed: int = 11) -> dict:
    """For every weight solving the Artin-Schreier identity for chi, build the
    n = 2 periplectic induced module and test it against the two-stratum
    classification rule:

      * chi nonzero on {H, F} (derived even part) or lam(H) != 0
            -> expected irreducible of dimension 2p;
      * chi zero there and lam(H) = 0
            -> expected reducible of dimension 2 with the one-dimensional
               invariant line spanned by (lowering odd letter) x generator.

    Verdicts come from the MeatAxe; each case records the expectation, the
    observed verdict, and whether they match."""
    from . import meataxe as mx

    g = chi.algebra
    f = g.field
    weights = lambda_set(g, chi)
    if not weights:
        raise ValueError("no weights solve the Artin-Schreier identity at this field degree")
    cases = []
    irr_dims = set()
    for lam in weights:
        K = kac_module_p2(chi, lam)
        lam_h = f.sub(lam.values[0], lam.values[1])
        expected_irr = not (K.provenance["chi_derived_even_zero"] and lam_h == 0)
        rep = mx.rep_of_module(K)
        cert = mx.is_irreducible(rep, seed=seed)
        observed_irr = cert.verdict == "irreducible"
        ok = observed_irr == expected_irr and K.dim == (2 * f.p if expected_irr else 2)
        sub_dim = None
        if not expected_irr:
            # the lowering odd letter times the generator spans an invariant line
            y_pos = len(K.neg_letters) - 1
            exps = [0] * len(K.neg_letters)
            exps[y_pos] = 1
            line = np.zeros(K.dim, dtype=np.uint8)
            line[K.index_of(tuple(exps), 0)] = 1
            spun = mx.spin(rep, [line])
            sub_dim = spun.shape[0]
            ok = ok and sub_dim == 1 and (not observed_irr)
        if observed_irr:
            irr_dims.add(K.dim)
        elif cert.verdict == "reducible" and not expected_irr and sub_dim == 1:
            irr_dims.add(1)
        cases.append(
            {
                "lambda": list(lam.values),
                "lambda_H": int(lam_h),
                "lambda_z": int(f.add(lam.values[0], lam.values[1])),
                "dim": K.dim,
                "case": K.provenance["case"],
                "expected_irreducible": expected_irr,
                "observed_verdict": cert.verdict,
                "invariant_line_dim": sub_dim,
                "match": bool(ok),
            }
        )
    return {
        "chi": chi.described(),
        "field": str(f.descriptor),
        "num_cases": len(cases),
        "cases": cases,
        "irreducible_dims": sorted(irr_dims),
        "all_match": all(c["match"] for c in cases),
        "mismatches": [c for c in cases if not c["match"]],
    }
