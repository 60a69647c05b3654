"""Induction engine: explicit modules over reduced enveloping algebras.

Given a restricted Lie superalgebra g (or a bracket-closed ambient subspace of
it), a subalgebra spanned by chosen "letters", and a module V over that
subalgebra compatible with a p-character chi, this module materializes the
induced module

    M  =  (reduced enveloping algebra of the ambient) (x)_(subalgebra) V

with its monomial basis: products of the complementary "negative" letters with
even exponents in [0, p) and odd exponents in {0, 1}, tensored against a basis
of V.  Action matrices are produced by a recursive normal-ordering rewriter
(straightening) with four rules:

  (a) transposition   x*y = (-1)^{|x||y|} y*x + [x, y];
  (b) even p-th power x^p = x^{[p]} + chi(x)^p;
  (c) odd square      y^2 = (1/2)[y, y]          (valid since p is odd);
  (d) subalgebra letters reaching the tensor slot act on V directly.

The rewriter terminates: recursive calls strictly decrease either the monomial
degree or, at fixed degree, the index of the letter being inserted.  Results
are memoized per (letter, basis vector); a no-memo mode exists so tests can
confirm the memo is semantically transparent.  The engine is sequential and
deterministic: identical inputs produce identical matrices.
"""

from __future__ import annotations

import hashlib
import json
import os
import struct
from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .field import Field, FieldDescriptor
from .pchar import PChar
from .superalg import LieSuperalgebra

__all__ = [
    "Letter",
    "InducingData",
    "InducedModule",
    "induce",
    "straighten",
    "verify_representation",
    "CACHE_MAGIC",
    "CACHE_VERSION",
    "cache_dir",
    "cache_key",
    "save_action_cache",
    "load_action_cache",
    "list_cache",
    "verify_cache_file",
]

CACHE_MAGIC = b"SKWL"
CACHE_VERSION = 2


# ---------------------------------------------------------------------------
# letters


class Letter:
    """A basis letter of the induction data: a homogeneous element of the
    ambient algebra, given by its coefficient vector in the algebra basis."""

    __slots__ = ("label", "coeffs", "parity")

    def __init__(self, g: LieSuperalgebra, spec):
        if isinstance(spec, (int, np.integer)):
            idx = int(spec)
            self.label = g.basis[idx].label
            self.coeffs = g.unit_coeffs(idx)
            self.parity = g.parities[idx]
        else:
            label, coeffs = spec
            coeffs = np.asarray(coeffs, dtype=np.uint8)
            if coeffs.shape != (g.dim,) or not coeffs.any():
                raise ValueError(f"letter {label!r}: need a nonzero length-{g.dim} coefficient vector")
            pars = {g.parities[i] for i in np.nonzero(coeffs)[0]}
            if len(pars) != 1:
                raise ValueError(f"letter {label!r} is not parity-homogeneous")
            self.label = str(label)
            self.coeffs = coeffs
            self.parity = pars.pop()


@dataclass
class InducingData:
    """A module over the subalgebra spanned by the sub letters.

    ``matrices`` holds one dim x dim action matrix per sub letter, in letter
    order; ``parities`` gives the parity of each V-basis vector."""

    dim: int
    matrices: list
    parities: tuple = ()

    def __post_init__(self):
        if not self.parities:
            self.parities = tuple([0] * self.dim)
        if len(self.parities) != self.dim:
            raise ValueError("V parity vector length mismatch")
        for m in self.matrices:
            if np.asarray(m).shape != (self.dim, self.dim):
                raise ValueError("V action matrix shape mismatch")


def trivial_inducing_data(field: Field, scalars) -> InducingData:
    """One-dimensional V on which letter i acts by the given scalar."""
    return InducingData(
        dim=1,
        matrices=[np.array([[s]], dtype=np.uint8) for s in scalars],
        parities=(0,),
    )


# ---------------------------------------------------------------------------
# the straightening engine


class _Engine:
    def __init__(self, module: "InducedModule", use_memo: bool):
        self.M = module
        self.f = module.field
        self.use_memo = use_memo
        self.memo: dict = {}

    # -- small field-sparse-vector helpers ---------------------------------
    def _scaled_into(self, acc: dict, terms: dict, scalar: int):
        f = self.f
        if scalar == 0:
            return
        for m, c in terms.items():
            v = f.add(acc.get(m, 0), f.mul(c, scalar))
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)

    # -- the rewriter -------------------------------------------------------
    def act_letter(self, pos: int, idx: int) -> dict:
        """Apply letter ``pos`` to packed basis vector ``idx``; returns a
        sparse {packed index: coefficient} vector."""
        key = (pos, idx)
        if self.use_memo:
            hit = self.memo.get(key)
            if hit is not None:
                return hit
        out = self._act_letter_raw(pos, idx)
        if self.use_memo:
            self.memo[key] = out
        return out

    def _act_letter_raw(self, pos: int, idx: int) -> dict:
        M, f = self.M, self.f
        r = len(M.neg_letters)
        mono, v = divmod(idx, M.v_dim)
        first = M._first_letter[mono]

        if first < 0:  # bare tensor 1 (x) v
            if pos < r:
                return {(mono + M._strides[pos]) * M.v_dim + v: 1}
            col = M.v_data.matrices[pos - r][:, v]
            return {mono * M.v_dim + w: int(col[w]) for w in np.nonzero(col)[0]}

        if pos < r and pos < first:
            return {(mono + M._strides[pos]) * M.v_dim + v: 1}

        if pos == first:
            e = M._exps[mono, pos]
            cap = f.p - 1 if M.neg_letters[pos].parity == 0 else 1
            if e < cap:
                return {(mono + M._strides[pos]) * M.v_dim + v: 1}
            # overflow: strip the whole power of this letter? no - strip one
            # factor is never needed: y * y^cap = y^{cap+1} reduces by rule
            # (b) or (c) against the full block.
            rest = (mono - e * M._strides[pos]) * M.v_dim + v
            acc: dict = {}
            if M.neg_letters[pos].parity == 0:
                # rule (b): y^p = y^{[p]} + chi(y)^p
                self._scaled_into(acc, {rest: 1}, M._chi_pow[pos])
                self._scaled_into(acc, self.act_decomp(M._pmap_decomp[pos], rest), 1)
            else:
                # rule (c): y^2 = (1/2)[y, y]
                self._scaled_into(acc, self.act_decomp(M._sq_decomp[pos], rest), 1)
            return acc

        # pos > first: rule (a) against one factor of the first letter
        peeled = (mono - M._strides[first]) * M.v_dim + v
        sign_neg = M._letters[pos].parity and M.neg_letters[first].parity
        inner = self.act_letter(pos, peeled)
        acc = {}
        for m, c in inner.items():
            self._scaled_into(acc, self.act_letter(first, m), c)
        if sign_neg:
            acc = {m: self.f.neg(c) for m, c in acc.items()}
        self._scaled_into(acc, self.act_decomp(M._pair_decomp[(pos, first)], peeled), 1)
        return acc

    def act_decomp(self, decomp, idx: int) -> dict:
        """Apply a linear combination of letters, given as decomposition
        [(letter position, coefficient), ...]."""
        acc: dict = {}
        for pos, coef in decomp:
            self._scaled_into(acc, self.act_letter(pos, idx), coef)
        return acc


# ---------------------------------------------------------------------------
# the induced module


class InducedModule:
    """Explicit induced module with PBW monomial basis and dense action
    matrices per ambient basis element (built on demand, cached)."""

    def __init__(
        self,
        g: LieSuperalgebra,
        sub_letters: list,
        neg_letters: list,
        v_data: InducingData,
        chi: PChar,
        ambient: tuple,
        use_memo: bool = True,
        provenance: dict | None = None,
    ):
        self.algebra = g
        self.field: Field = g.field
        self.chi = chi
        self.sub_letters = sub_letters
        self.neg_letters = neg_letters
        self.v_data = v_data
        self.v_dim = v_data.dim
        self.ambient = tuple(ambient)
        self.provenance = dict(provenance or {})
        f = self.field

        self._letters = list(neg_letters) + list(sub_letters)
        r = len(neg_letters)

        # ---- letter span solver and pair data
        mat = np.stack([ltr.coeffs for ltr in self._letters], axis=0) if self._letters else np.zeros((0, g.dim), np.uint8)
        if la.rank(f, mat) != len(self._letters):
            raise ValueError("letters are linearly dependent")
        amb_dim = len(self.ambient)
        if len(self._letters) != amb_dim:
            raise ValueError(
                f"letters span a {len(self._letters)}-dimensional space but the ambient has dimension {amb_dim}"
            )
        self._solver = la.ExpressSolver(f, mat)

        self._pair_decomp = {}
        for i_pos in range(len(self._letters)):
            for j_pos in range(r):
                if i_pos <= j_pos:
                    continue
                b = g.bracket(self._letters[i_pos].coeffs, self._letters[j_pos].coeffs)
                self._pair_decomp[(i_pos, j_pos)] = self._decompose(b, "bracket of letters")

        inv2 = f.inv(2 % f.p)
        self._pmap_decomp = {}
        self._sq_decomp = {}
        self._chi_pow = {}
        for pos in range(r):
            ltr = neg_letters[pos]
            if ltr.parity == 0:
                pm = g.p_power_of(ltr.coeffs)
                self._pmap_decomp[pos] = self._decompose(pm, "p-power of letter")
                self._chi_pow[pos] = f.frob(chi.on_coeffs(ltr.coeffs))
            else:
                sq = g.bracket(ltr.coeffs, ltr.coeffs)
                half = la.scale_mat(f, inv2, sq.reshape(1, -1)).reshape(-1)
                self._sq_decomp[pos] = self._decompose(half, "odd square of letter")

        # ---- monomial bookkeeping (packed order: last letter fastest)
        radices = [f.p if ltr.parity == 0 else 2 for ltr in neg_letters]
        self._radices = radices
        strides = [0] * r
        acc = 1
        for i in reversed(range(r)):
            strides[i] = acc
            acc *= radices[i]
        self._strides = strides
        self.mono_count = acc
        self.dim = acc * self.v_dim

        exps = np.zeros((acc, r), dtype=np.int16)
        if r:
            rem = np.arange(acc)
            for i in range(r):
                exps[:, i] = rem // strides[i]
                rem = rem % strides[i]
        self._exps = exps
        first = np.full(acc, -1, dtype=np.int32)
        for i in reversed(range(r)):
            first[exps[:, i] > 0] = i
        self._first_letter = first

        neg_par = np.array([ltr.parity for ltr in neg_letters], dtype=np.int64)
        odd_deg = exps @ neg_par if r else np.zeros(acc, dtype=np.int64)
        deg = exps.sum(axis=1)

        # ---- graded-lex basis order: total degree, then exponent tuple,
        #      then V index; the pure tensors come first.
        keys = []
        for mono in range(acc):
            for v in range(self.v_dim):
                keys.append((int(deg[mono]), tuple(int(x) for x in exps[mono]), v))
        order = sorted(range(self.dim), key=lambda t: keys[t])
        self._packed_of_sorted = np.array(order, dtype=np.int64)
        self._sorted_of_packed = np.argsort(self._packed_of_sorted)

        v_par = np.array(v_data.parities, dtype=np.int64)
        packed_parity = (np.repeat(odd_deg, self.v_dim) + np.tile(v_par, acc)) % 2
        self.parity = packed_parity[self._packed_of_sorted].astype(np.uint8)
        self.odd_degree = np.repeat(odd_deg, self.v_dim)[self._packed_of_sorted]
        self.degree = np.repeat(deg, self.v_dim)[self._packed_of_sorted]
        self.generator_index = int(self._sorted_of_packed[0])

        self._engine = _Engine(self, use_memo)
        self._op_cache: dict = {}

    # -- structural helpers -------------------------------------------------
    def _decompose(self, coeffs: np.ndarray, what: str):
        if not coeffs.any():
            return []
        try:
            sol = self._solver.express(coeffs)
        except ValueError as exc:
            raise ValueError(f"{what} falls outside the span of the letters") from exc
        return [(int(i), int(sol[i])) for i in np.nonzero(sol)[0]]

    def basis_description(self, sorted_index: int):
        packed = int(self._packed_of_sorted[sorted_index])
        mono, v = divmod(packed, self.v_dim)
        return tuple(int(x) for x in self._exps[mono]), v

    def index_of(self, exponents, v: int) -> int:
        mono = sum(int(e) * s for e, s in zip(exponents, self._strides))
        return int(self._sorted_of_packed[mono * self.v_dim + v])

    def gradation_indices(self) -> dict:
        """Sorted basis indices of each homogeneous piece, by odd degree."""
        out: dict = {}
        for i, d in enumerate(self.odd_degree):
            out.setdefault(int(d), []).append(i)
        return out

    # -- action matrices ----------------------------------------------------
    def _columns_from_sparse(self, sparse_cols) -> np.ndarray:
        mat = np.zeros((self.dim, self.dim), dtype=np.uint8)
        inv = self._sorted_of_packed
        for col_sorted, terms in sparse_cols:
            for packed, c in terms.items():
                mat[inv[packed], col_sorted] = c
        return mat

    def _materialize(self, coeffs: np.ndarray) -> np.ndarray:
        """Column-by-column straightening of a single ambient element."""
        decomp = self._decompose(np.asarray(coeffs, dtype=np.uint8), "ambient element")
        eng = self._engine
        cols = []
        for col_sorted in range(self.dim):
            packed = int(self._packed_of_sorted[col_sorted])
            cols.append((col_sorted, eng.act_decomp(decomp, packed)))
        return self._columns_from_sparse(cols)

    def operator_of(self, coeffs: np.ndarray) -> np.ndarray:
        """Dense action matrix (sorted coordinates) of an ambient element:
        the action is linear, so combine the cached basis operators."""
        coeffs = np.asarray(coeffs, dtype=np.uint8)
        f = self.field
        out = la.zeros((self.dim, self.dim))
        for i in np.nonzero(coeffs)[0]:
            i = int(i)
            if i not in self.ambient:
                raise ValueError(
                    f"coefficient on basis index {i} lies outside the ambient"
                )
            out = la.add_mats(
                f, out, la.scale_mat(f, int(coeffs[i]), self.operator_for(i))
            )
        return out

    def operator_for(self, basis_index: int) -> np.ndarray:
        if basis_index not in self._op_cache:
            if basis_index not in self.ambient:
                raise ValueError(f"basis index {basis_index} is outside the ambient")
            self._op_cache[basis_index] = self._materialize(
                self.algebra.unit_coeffs(basis_index)
            )
        return self._op_cache[basis_index]

    def operators(self, indices=None) -> list:
        return [self.operator_for(i) for i in (self.ambient if indices is None else indices)]

    def apply(self, basis_index: int, vec: np.ndarray) -> np.ndarray:
        return la.matvec(self.field, self.operator_for(basis_index), vec)

    def straighten_word(self, word, term=None) -> dict:
        """Apply a product of ambient elements (leftmost acts last) to a
        single basis term and return the sparse result.

        ``word``: sequence of basis indices or coefficient vectors.
        ``term``: (exponent tuple, V index); defaults to the generator."""
        if term is None:
            exps = tuple([0] * len(self.neg_letters))
            term = (exps, 0)
        exps, v = term
        packed = sum(int(e) * s for e, s in zip(exps, self._strides)) * self.v_dim + v
        current = {packed: 1}
        eng = self._engine
        for x in reversed(list(word)):
            coeffs = self.algebra.unit_coeffs(int(x)) if isinstance(x, (int, np.integer)) else np.asarray(x, np.uint8)
            decomp = self._decompose(coeffs, "word element")
            nxt: dict = {}
            for m, c in current.items():
                eng._scaled_into(nxt, eng.act_decomp(decomp, m), c)
            current = nxt
        out = {}
        for packed, c in current.items():
            mono, v = divmod(packed, self.v_dim)
            out[(tuple(int(x) for x in self._exps[mono]), v)] = c
        return out

    # -- identification -----------------------------------------------------
    def cache_signature(self) -> dict:
        g = self.algebra
        return {
            "family": g.family,
            "n": g.n,
            "p": self.field.p,
            "k": self.field.k,
            "modulus": list(self.field.descriptor.modulus),
            "chi": list(self.chi.values),
            "ambient": list(self.ambient),
            "neg": [ltr.label for ltr in self.neg_letters],
            "sub": [ltr.label for ltr in self.sub_letters],
            "v_dim": self.v_dim,
            "provenance": self.provenance,
        }


def induce(
    g: LieSuperalgebra,
    subalg,
    V: InducingData,
    chi: PChar,
    ambient=None,
    negatives=None,
    use_memo: bool = True,
    check: bool = True,
    provenance: dict | None = None,
) -> InducedModule:
    """Build the induced module from subalgebra letters and V.

    ``subalg``: list of letters (basis indices, or (label, coeffs) pairs).
    ``negatives``: complement letters; defaults to the ambient basis indices
    not mentioned in ``subalg`` (even ones first, then odd, in basis order).
    ``ambient``: basis index list of a bracket-closed subspace; defaults to
    the whole algebra.
    """
    f = g.field
    if ambient is None:
        ambient = tuple(range(g.dim))
    ambient = tuple(int(i) for i in ambient)
    # ambient must be bracket-closed
    amb_set = set(ambient)
    outside = [i for i in range(g.dim) if i not in amb_set]
    if outside:
        tab = g.bracket_table[np.ix_(ambient, ambient)][:, :, outside]
        if tab.any():
            raise ValueError("ambient index set is not closed under the bracket")

    sub_letters = [Letter(g, s) for s in subalg]
    if negatives is None:
        named = {int(s) for s in subalg if isinstance(s, (int, np.integer))}
        rest = [i for i in ambient if i not in named]
        negatives = [i for i in rest if g.parities[i] == 0] + [i for i in rest if g.parities[i] == 1]
    neg_letters = [Letter(g, s) for s in negatives]

    M = InducedModule(
        g, sub_letters, neg_letters, V, chi, ambient, use_memo=use_memo, provenance=provenance
    )

    if check:
        _check_inducing_data(M)
    return M


def _check_inducing_data(M: InducedModule):
    """Validate that the sub letters close under bracket and that V is a
    chi-compatible module over them."""
    g, f = M.algebra, M.field
    r = len(M.neg_letters)
    sub_mat = (
        np.stack([ltr.coeffs for ltr in M.sub_letters], axis=0)
        if M.sub_letters
        else np.zeros((0, g.dim), np.uint8)
    )
    sub_solver = la.ExpressSolver(f, sub_mat)
    inv2 = f.inv(2 % f.p)

    def sub_decompose(coeffs, what):
        if not coeffs.any():
            return []
        try:
            sol = sub_solver.express(coeffs)
        except ValueError as exc:
            raise ValueError(f"subalgebra not closed: {what}") from exc
        return [(int(i), int(sol[i])) for i in np.nonzero(sol)[0]]

    def v_op(decomp):
        out = la.zeros((M.v_dim, M.v_dim))
        for pos, c in decomp:
            out = la.add_mats(f, out, la.scale_mat(f, c, np.asarray(M.v_data.matrices[pos], np.uint8)))
        return out

    S = M.sub_letters
    for i in range(len(S)):
        for j in range(i, len(S)):
            b = g.bracket(S[i].coeffs, S[j].coeffs)
            dec = sub_decompose(b, f"[{S[i].label}, {S[j].label}]")
            Ai = np.asarray(M.v_data.matrices[i], np.uint8)
            Aj = np.asarray(M.v_data.matrices[j], np.uint8)
            prod1 = la.matmul(f, Ai, Aj)
            prod2 = la.matmul(f, Aj, Ai)
            if S[i].parity and S[j].parity:
                lhs = la.add_mats(f, prod1, prod2)
            else:
                lhs = la.sub_mats(f, prod1, prod2)
            if not np.array_equal(lhs, v_op(dec)):
                raise ValueError(
                    f"V is not a representation of the subalgebra: bracket [{S[i].label}, {S[j].label}]"
                )
    for i, ltr in enumerate(S):
        Ai = np.asarray(M.v_data.matrices[i], np.uint8)
        if ltr.parity == 0:
            pm = g.p_power_of(ltr.coeffs)
            dec = sub_decompose(pm, f"p-power of {ltr.label}")
            want = v_op(dec)
            scal = f.frob(M.chi.on_coeffs(ltr.coeffs))
            want = la.add_mats(f, want, la.scale_mat(f, scal, la.identity(M.v_dim)))
            if not np.array_equal(la.mat_pow(f, Ai, f.p), want):
                raise ValueError(f"V is not chi-compatible: p-rule fails at sub letter {ltr.label}")
        else:
            sq = g.bracket(ltr.coeffs, ltr.coeffs)
            half = la.scale_mat(f, inv2, sq.reshape(1, -1)).reshape(-1)
            dec = sub_decompose(half, f"odd square of {ltr.label}")
            if not np.array_equal(la.matmul(f, Ai, Ai), v_op(dec)):
                raise ValueError(f"V odd-square rule fails at sub letter {ltr.label}")
        # parity compatibility of the V matrices
        pv = np.array(M.v_data.parities, dtype=np.int64)
        rr, cc = np.nonzero(Ai)
        if np.any((pv[rr] + pv[cc]) % 2 != ltr.parity):
            raise ValueError(f"V action of {ltr.label} is not parity-homogeneous")


def straighten(M: InducedModule, word, term=None) -> dict:
    """Normal form of (product of ambient elements) applied to one basis
    term; see InducedModule.straighten_word."""
    return M.straighten_word(word, term)


def verify_representation(M: InducedModule, mode: str = "full", seed: int = 1, samples: int = 40) -> dict:
    """Check the representation axioms on the materialized matrices.

    mode 'full': all ambient pairs and every p-power/odd-square rule;
    'sampled': a seeded random subset of the bracket pairs and of the
    power-rule elements (a quarter of the sample budget each).
    """
    g, f = M.algebra, M.field
    amb = list(M.ambient)
    checks = {}
    failures = []

    pairs = [(x, y) for x in amb for y in amb]
    evens = [x for x in amb if not g.parities[x]]
    odds = [x for x in amb if g.parities[x]]
    if mode == "sampled":
        rng = np.random.default_rng(seed)
        take = min(samples, len(pairs))
        pairs = [pairs[i] for i in rng.choice(len(pairs), size=take, replace=False)]
        ptake = max(2, samples // 4)
        if ptake < len(evens):
            evens = [evens[i] for i in rng.choice(len(evens), size=ptake, replace=False)]
        if ptake < len(odds):
            odds = [odds[i] for i in rng.choice(len(odds), size=ptake, replace=False)]
    elif mode != "full":
        raise ValueError("mode must be 'full' or 'sampled'")

    ok = True
    for x, y in pairs:
        Rx, Ry = M.operator_for(x), M.operator_for(y)
        lhs = la.matmul(f, Rx, Ry)
        rhs2 = la.matmul(f, Ry, Rx)
        if g.parities[x] and g.parities[y]:
            lhs = la.add_mats(f, lhs, rhs2)
        else:
            lhs = la.sub_mats(f, lhs, rhs2)
        br = g.bracket(g.unit_coeffs(x), g.unit_coeffs(y))
        if not np.array_equal(lhs, M.operator_of(br)):
            ok = False
            failures.append(("bracket", g.basis[x].label, g.basis[y].label))
    checks["bracket_compatibility"] = {"pass": ok, "pairs_checked": len(pairs)}

    ok = True
    for x in evens:
        Rx = M.operator_for(x)
        want = M.operator_of(g.p_power_of(g.unit_coeffs(x)))
        scal = f.frob(M.chi.on_basis(x))
        want = la.add_mats(f, want, la.scale_mat(f, scal, la.identity(M.dim)))
        if not np.array_equal(la.mat_pow(f, Rx, f.p), want):
            ok = False
            failures.append(("p_rule", g.basis[x].label))
    checks["p_power_rule"] = {"pass": ok, "elements_checked": len(evens)}

    ok = True
    inv2 = f.inv(2 % f.p)
    for y in odds:
        Ry = M.operator_for(y)
        sq = g.bracket(g.unit_coeffs(y), g.unit_coeffs(y))
        want = la.scale_mat(f, inv2, M.operator_of(sq))
        if not np.array_equal(la.matmul(f, Ry, Ry), want):
            ok = False
            failures.append(("odd_square", g.basis[y].label))
    checks["odd_square_rule"] = {"pass": ok, "elements_checked": len(odds)}

    ok = True
    par = M.parity.astype(np.int64)
    for x in amb:
        Rx = M.operator_for(x)
        rr, cc = np.nonzero(Rx)
        if np.any((par[rr] + par[cc]) % 2 != g.parities[x]):
            ok = False
            failures.append(("parity", g.basis[x].label))
    checks["parity_compatibility"] = {"pass": ok}

    return {
        "mode": mode,
        "dimension": M.dim,
        "checks": checks,
        "failures": failures,
        "all_pass": all(c["pass"] for c in checks.values()),
    }


# ---------------------------------------------------------------------------
# action-matrix cache files


def cache_dir(explicit: str | None = None) -> str:
    if explicit:
        return explicit
    env = os.environ.get("SKWLAB_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "skwlab")


def cache_key(signature: dict) -> str:
    blob = json.dumps(signature, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def save_action_cache(path: str, field: Field, matrices, meta: dict | None = None) -> str:
    """Write matrices in the binary cache format; atomic via temp + rename.

    Layout: magic 'SKWL', u32 version, u32 p, u32 k, (k+1) modulus coefficient
    bytes (constant term first), u32 D, u32 G, 32-byte SHA-256 of the matrix
    region, then G dense D x D matrices row-major, each element as k
    little-endian coefficient bytes."""
    mats = [np.asarray(m, dtype=np.uint8) for m in matrices]
    D = mats[0].shape[0] if mats else 0
    for m in mats:
        if m.shape != (D, D):
            raise ValueError("all cached matrices must be square of equal size")
    body = bytearray()
    for m in mats:
        body += field.COEFFS[m.reshape(-1)].astype(np.uint8).tobytes()
    payload = bytearray()
    payload += CACHE_MAGIC
    payload += struct.pack("<I", CACHE_VERSION)
    payload += struct.pack("<II", field.p, field.k)
    payload += bytes(field.descriptor.modulus)
    payload += struct.pack("<II", D, len(mats))
    payload += hashlib.sha256(bytes(body)).digest()
    payload += body
    os.makedirs(os.path.dirname(os.path.abspath(path)) or ".", exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(bytes(payload))
    os.replace(tmp, path)
    if meta is not None:
        mtmp = path + ".meta.json.tmp"
        with open(mtmp, "w") as fh:
            json.dump(meta, fh, indent=1, sort_keys=True)
        os.replace(mtmp, path + ".meta.json")
    return path


def load_action_cache(path: str):
    """Read a cache file; returns (FieldDescriptor, list of matrices, meta)."""
    with open(path, "rb") as fh:
        blob = fh.read()
    if blob[:4] != CACHE_MAGIC:
        raise ValueError(f"{path}: bad magic bytes (not an action-matrix cache)")
    (version,) = struct.unpack_from("<I", blob, 4)
    if version != CACHE_VERSION:
        raise ValueError(f"{path}: unsupported cache version {version}")
    p, k = struct.unpack_from("<II", blob, 8)
    off = 16
    modulus = tuple(int(b) for b in blob[off : off + k + 1])
    off += k + 1
    D, G = struct.unpack_from("<II", blob, off)
    off += 8
    digest = blob[off : off + 32]
    off += 32
    desc = FieldDescriptor(p=p, k=k, modulus=modulus)
    from .field import field_for

    f = field_for(desc)
    need = G * D * D * k
    if len(blob) - off != need:
        raise ValueError(f"{path}: truncated cache (expected {need} matrix bytes, found {len(blob) - off})")
    if hashlib.sha256(blob[off:]).digest() != digest:
        raise ValueError(f"{path}: corrupt cache (checksum mismatch)")
    mats = []
    arr = np.frombuffer(blob, dtype=np.uint8, offset=off)
    if np.any(arr >= p):
        raise ValueError(f"{path}: corrupt cache (coefficient byte out of range)")
    pows = np.array(f._pows, dtype=np.int64)
    for i in range(G):
        coeff = arr[i * D * D * k : (i + 1) * D * D * k].reshape(D * D, k).astype(np.int64)
        mats.append((coeff @ pows).astype(np.uint8).reshape(D, D))
    meta = None
    mpath = path + ".meta.json"
    if os.path.exists(mpath):
        with open(mpath) as fh:
            meta = json.load(fh)
    return desc, mats, meta


def list_cache(directory: str | None = None) -> list:
    d = cache_dir(directory)
    if not os.path.isdir(d):
        return []
    out = []
    for name in sorted(os.listdir(d)):
        if name.endswith(".skwl"):
            out.append(os.path.join(d, name))
    return out


def verify_cache_file(path: str) -> dict:
    try:
        desc, mats, meta = load_action_cache(path)
    except (ValueError, OSError) as exc:
        return {"path": path, "ok": False, "error": str(exc)}
    return {
        "path": path,
        "ok": True,
        "field": str(desc),
        "dimension": int(mats[0].shape[0]) if mats else 0,
        "generators": len(mats),
        "has_meta": meta is not None,
    }
