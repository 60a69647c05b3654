"""Exact arithmetic in small finite fields F_{p^k}, p odd, built for speed.

Elements are represented internally by integer *codes* in ``range(p**k)``: the
little-endian base-p packing of the coefficient vector with respect to the
power basis 1, X, ..., X^{k-1} of F_p[X]/(modulus).  The prime subfield is
exactly the codes ``0 .. p-1``.  A :class:`Field` precomputes full addition,
multiplication, negation, inversion and Frobenius tables (q <= 5**8 is far
beyond anything used here; the defaults keep q <= 125), so all downstream
linear algebra reduces to table gathers and exact float64 BLAS kernels.

The modulus is chosen deterministically: the lexicographically smallest monic
irreducible polynomial of degree k, comparing coefficient tuples
(c_0, ..., c_{k-1}) constant term first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "FieldDescriptor",
    "Field",
    "FieldElement",
    "make_field",
    "get_field",
    "field_for",
    "arithmetic",
    "frobenius",
    "frobenius_inverse",
    "artin_schreier_roots",
]

_MAX_K = 8


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# -- polynomial helpers over F_p (little-endian coefficient lists) -----------


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    for shift in range(len(a) - 1 - dm, -1, -1):
        c = a[shift + dm] % p
        if c:
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mi) % p
    out = [x % p for x in a[:dm]]
    return out


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_is_irreducible(m: list[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg(m)/2."""
    d = len(m) - 1
    if d == 1:
        return True
    for deg in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            cand = list(tail) + [1]
            r = _poly_mod(list(m), cand, p)
            if all(x == 0 for x in r):
                return False
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    """Immutable description of F_{p^k}: characteristic, degree, and the monic
    modulus polynomial (little-endian, length k+1, leading coefficient 1)."""

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.k

    def __str__(self) -> str:  # e.g. "F_27 = F_3[X]/(1+2X^2+X^3)"
        terms = []
        for i, c in enumerate(self.modulus):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{'' if c == 1 else c}X")
            else:
                terms.append(f"{'' if c == 1 else c}X^{i}")
        return f"F_{self.q} = F_{self.p}[X]/({'+'.join(terms)})"


def make_field(p: int, k: int = 1) -> FieldDescriptor:
    """Deterministically construct F_{p^k} (odd p), choosing the lex-smallest
    monic irreducible modulus of degree k."""
    if not _is_prime(p) or p == 2:
        raise ValueError(f"characteristic must be an odd prime, got {p}")
    if not 1 <= k <= _MAX_K:
        raise ValueError(f"extension degree must be in 1..{_MAX_K}, got {k}")
    if k == 1:
        return FieldDescriptor(p, 1, (0, 1))
    for tail in itertools.product(range(p), repeat=k):
        m = list(tail) + [1]
        if _poly_is_irreducible(m, p):
            return FieldDescriptor(p, k, tuple(m))
    raise RuntimeError("unreachable: irreducible polynomials exist in every degree")


class Field:
    """Runtime arithmetic context for a :class:`FieldDescriptor`.

    Scalar operations work on integer codes; the numpy tables support
    vectorized gathers for the linear algebra layer.  Instances are cached
    singletons per descriptor, so identity comparison is safe.
    """

    def __init__(self, desc: FieldDescriptor):
        self.descriptor = desc
        self.p = desc.p
        self.k = desc.k
        self.q = desc.q
        p, k, q = self.p, self.k, self.q
        mod = list(desc.modulus)

        pows = [p**i for i in range(k)]
        self._pows = pows

        def code_of(coeffs: list[int]) -> int:
            return sum((c % p) * pows[i] for i, c in enumerate(coeffs))

        coeffs_of = []
        for code in range(q):
            c, out = code, []
            for _ in range(k):
                out.append(c % p)
                c //= p
            coeffs_of.append(out)

        ADD = np.zeros((q, q), dtype=np.uint8)
        MUL = np.zeros((q, q), dtype=np.uint8)
        for a in range(q):
            ca = coeffs_of[a]
            for b in range(a, q):
                cb = coeffs_of[b]
                s = code_of([x + y for x, y in zip(ca, cb)])
                ADD[a, b] = s
                ADD[b, a] = s
                m = code_of(_poly_mod(_poly_mul(ca, cb, p), mod, p))
                MUL[a, b] = m
                MUL[b, a] = m
        NEG = np.array([code_of([-x for x in coeffs_of[a]]) for a in range(q)], dtype=np.uint8)
        INV = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            if INV[a]:
                continue
            # brute inverse search is fine at these sizes
            for b in range(1, q):
                if MUL[a, b] == 1:
                    INV[a] = b
                    INV[b] = a
                    break
        FROB = np.zeros(q, dtype=np.uint8)
        for a in range(q):
            x, acc = a, 1
            e = p
            base = a
            while e:
                if e & 1:
                    acc = int(MUL[acc, base])
                base = int(MUL[base, base])
                e >>= 1
            FROB[a] = acc
        FROBINV = np.arange(q, dtype=np.uint8)
        for _ in range(k - 1):
            FROBINV = FROB[FROBINV]

        self.ADD, self.MUL, self.NEG, self.INV = ADD, MUL, NEG, INV
        self.FROB, self.FROBINV = FROB, FROBINV
        self.SUB = ADD[:, NEG]  # SUB[a, b] = a - b
        self.COEFFS = np.array(coeffs_of, dtype=np.uint8)  # (q, k)

        # flat bytes for fast scalar lookups in pure-python hot loops
        self._addf = ADD.tobytes()
        self._mulf = MUL.tobytes()
        self._subf = self.SUB.tobytes()
        self._negf = NEG.tobytes()
        self._invf = INV.tobytes()

        # layered-multiply reduction: X^m mod modulus for m = 0 .. 2k-2
        RED = np.zeros((2 * k - 1, k), dtype=np.int64)
        for m in range(2 * k - 1):
            xm = [0] * m + [1]
            r = _poly_mod(xm, mod, p) if m >= k else (xm + [0] * (k - m - 1))
            for i, c in enumerate(r):
                RED[m, i] = c
        self.RED = RED

    # -- scalar ops on codes -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._addf[a * self.q + b]

    def sub(self, a: int, b: int) -> int:
        return self._subf[a * self.q + b]

    def mul(self, a: int, b: int) -> int:
        return self._mulf[a * self.q + b]

    def neg(self, a: int) -> int:
        return self._negf[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + str(self.descriptor))
        return self._invf[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frob(self, a: int) -> int:
        return int(self.FROB[a])

    def frobinv(self, a: int) -> int:
        return int(self.FROBINV[a])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        acc, base = 1, a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def from_int(self, c: int) -> int:
        """Embed an integer via the prime subfield."""
        return c % self.p

    def from_coeffs(self, coeffs) -> int:
        return sum((int(c) % self.p) * self._pows[i] for i, c in enumerate(coeffs))

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.COEFFS[a])

    def in_prime_subfield(self, a: int) -> bool:
        return a < self.p

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        x, n = a, 1
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    def artin_schreier_roots_code(self, c: int) -> list[int]:
        """All codes x with x^p - x = c (0 or p of them, a coset of F_p)."""
        out = [x for x in range(self.q) if self.sub(self.frob(x), x) == c]
        return sorted(out)

    # -- element / serialization ---------------------------------------------

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, int(code))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self):
        return (FieldElement(self, c) for c in range(self.q))

    def el_to_bytes(self, code: int) -> bytes:
        return bytes(self.COEFFS[code])

    def el_from_bytes(self, data: bytes) -> int:
        if len(data) != self.k:
            raise ValueError(f"expected {self.k} bytes, got {len(data)}")
        if any(b >= self.p for b in data):
            raise ValueError("coefficient byte out of range")
        return self.from_coeffs(data)

    def __repr__(self) -> str:
        return f"Field({self.descriptor})"


@lru_cache(maxsize=None)
def field_for(desc: FieldDescriptor) -> Field:
    return Field(desc)


@lru_cache(maxsize=None)
def get_field(p: int, k: int = 1) -> Field:
    return field_for(make_field(p, k))


class FieldElement:
    """A field element: a code in a specific :class:`Field`.

    Serialization: ``to_bytes`` emits exactly k bytes, one residue per byte,
    little-endian coefficient order (constant term first).
    """

    __slots__ = ("field", "code")

    def __init__(self, field: Field, code: int):
        if not 0 <= code < field.q:
            raise ValueError(f"code {code} out of range for {field.descriptor}")
        self.field = field
        self.code = code

    def _check(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            if isinstance(other, int):
                return FieldElement(self.field, self.field.from_int(other))
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field is not self.field:
            raise ValueError("elements belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.add(self.code, other.code))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.sub(self.code, other.code))

    def __rsub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.sub(other.code, self.code))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul(self.code, other.code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.div(self.code, other.code))

    def __rtruediv__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.div(other.code, self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.code == self.field.from_int(other)
        return isinstance(other, FieldElement) and other.field is self.field and other.code == self.code

    def __hash__(self):
        return hash((id(self.field), self.code))

    def __bool__(self):
        return self.code != 0

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.code)

    def order(self) -> int:
        return self.field.element_order(self.code)

    def to_bytes(self) -> bytes:
        return self.field.el_to_bytes(self.code)

    @classmethod
    def from_bytes(cls, field: Field, data: bytes) -> "FieldElement":
        return cls(field, field.el_from_bytes(data))

    def __repr__(self) -> str:
        return f"<{self.code} in F_{self.field.q}>"


# -- spec-level operation wrappers -------------------------------------------

_OPS = {"add", "sub", "mul", "div"}


def arithmetic(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Dispatch one of add/sub/mul/div on two elements of the same field."""
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}; expected one of {sorted(_OPS)}")
    return {
        "add": a.__add__,
        "sub": a.__sub__,
        "mul": a.__mul__,
        "div": a.__truediv__,
    }[op](b)


def frobenius(a: FieldElement) -> FieldElement:
    """x -> x^p, the field's Frobenius automorphism."""
    return FieldElement(a.field, a.field.frob(a.code))


def frobenius_inverse(a: FieldElement) -> FieldElement:
    """The inverse automorphism x -> x^{p^{k-1}} (identity when k = 1)."""
    return FieldElement(a.field, a.field.frobinv(a.code))


def artin_schreier_roots(c: FieldElement) -> list[FieldElement]:
    """All solutions of x^p - x = c in c's field, ascending by code.

    The solution set is empty or a coset of the prime subfield (p roots).
    """
    f = c.field
    return [FieldElement(f, x) for x in f.artin_schreier_roots_code(c.code)]
