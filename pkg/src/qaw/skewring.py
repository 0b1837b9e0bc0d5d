"""Skew Laurent ring in ``z**±1`` and the q-shift ``T**±1``.

An element is a finite sum ``sum c[j, k] z**j T**k`` kept in normal form
(z-powers left of shift-powers).  The shift acts by ``T f(z) = f(q z)`` so the
defining relation is ``T**k z**j = q**(j*k) z**j T**k``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

from .qcore import fmt, to_scalar


class RingMismatch(ValueError):
    """Operands live in rings with different values of q."""


def _clean(table):
    return {key: c for key, c in table.items() if c != 0}


class _QPowers:
    """Cache of integer powers of a fixed q."""

    __slots__ = ("q", "cache")

    def __init__(self, q: Fraction):
        self.q = q
        self.cache = {0: Fraction(1)}

    def __call__(self, e: int) -> Fraction:
        try:
            return self.cache[e]
        except KeyError:
            v = self.q**e
            self.cache[e] = v
            return v


_POWERS: dict[Fraction, _QPowers] = {}


def _qpow(q: Fraction) -> _QPowers:
    cache = _POWERS.get(q)
    if cache is None:
        if len(_POWERS) > 64:
            _POWERS.clear()
        cache = _POWERS[q] = _QPowers(q)
    return cache


class LaurentPoly:
    """Finite Laurent polynomial ``sum c[j] z**j`` with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction] | None = None):
        self.coeffs = _clean({int(j): to_scalar(c) for j, c in (coeffs or {}).items()})

    @classmethod
    def _raw(cls, table) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.coeffs = _clean(table)
        return obj

    @classmethod
    def const(cls, c=1) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, j: int, c=1) -> "LaurentPoly":
        return cls({j: c})

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs.get(j, Fraction(0))

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self.coeffs.items()))

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int | None:
        return max(self.coeffs) if self.coeffs else None

    def valuation(self) -> int | None:
        return min(self.coeffs) if self.coeffs else None

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        out = dict(self.coeffs)
        for j, c in other.coeffs.items():
            out[j] = out.get(j, 0) + c
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({j: -c for j, c in self.coeffs.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return LaurentPoly._raw({j: c * other for j, c in self.coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for j1, c1 in self.coeffs.items():
            for j2, c2 in other.coeffs.items():
                out[j1 + j2] = out.get(j1 + j2, 0) + c1 * c2
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def scaled_argument(self, s) -> "LaurentPoly":
        """Return ``f(s*z)``."""
        s = to_scalar(s)
        return LaurentPoly._raw({j: c * s**j for j, c in self.coeffs.items()})

    def __call__(self, x) -> Fraction:
        x = to_scalar(x)
        return sum((c * x**j for j, c in self.coeffs.items()), Fraction(0))

    def to_records(self) -> list[dict]:
        return [{"power": j, "coeff": fmt(c)} for j, c in self]

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        terms = " + ".join(f"({fmt(c)})*z^{j}" for j, c in self)
        return f"LaurentPoly({terms})"


class SkewOp:
    """Element ``sum c[j, k] z**j T**k`` of the skew Laurent ring over Q."""

    __slots__ = ("q", "terms")

    def __init__(self, q, terms: Mapping[tuple[int, int], Fraction] | None = None):
        self.q = to_scalar(q)
        self.terms = _clean({(int(j), int(k)): to_scalar(c) for (j, k), c in (terms or {}).items()})

    @classmethod
    def _raw(cls, q, table) -> "SkewOp":
        obj = cls.__new__(cls)
        obj.q = q
        obj.terms = _clean(table)
        return obj

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, q) -> "SkewOp":
        return cls(q)

    @classmethod
    def identity(cls, q, c=1) -> "SkewOp":
        return cls(q, {(0, 0): c})

    @classmethod
    def z(cls, q, j: int = 1, c=1) -> "SkewOp":
        return cls(q, {(j, 0): c})

    @classmethod
    def shift(cls, q, k: int = 1, c=1) -> "SkewOp":
        return cls(q, {(0, k): c})

    @classmethod
    def term(cls, q, j: int, k: int, c=1) -> "SkewOp":
        return cls(q, {(j, k): c})

    # -- ring structure -----------------------------------------------------
    def _coerce(self, other) -> "SkewOp":
        if isinstance(other, SkewOp):
            if other.q != self.q:
                raise RingMismatch(f"q={self.q} vs q={other.q}")
            return other
        if isinstance(other, (int, Fraction)):
            return SkewOp._raw(self.q, {(0, 0): Fraction(other)})
        raise TypeError(f"cannot combine SkewOp with {type(other).__name__}")

    def __add__(self, other) -> "SkewOp":
        other = self._coerce(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return SkewOp._raw(self.q, out)

    __radd__ = __add__

    def __neg__(self) -> "SkewOp":
        return SkewOp._raw(self.q, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other) -> "SkewOp":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "SkewOp":
        return self._coerce(other) - self

    def scale(self, c) -> "SkewOp":
        c = to_scalar(c)
        if c == 0:
            return SkewOp._raw(self.q, {})
        return SkewOp._raw(self.q, {key: v * c for key, v in self.terms.items()})

    def __mul__(self, other) -> "SkewOp":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        qp = _qpow(self.q)
        out: dict[tuple[int, int], Fraction] = {}
        for (j1, k1), c1 in self.terms.items():
            for (j2, k2), c2 in other.terms.items():
                key = (j1 + j2, k1 + k2)
                out[key] = out.get(key, 0) + c1 * c2 * qp(k1 * j2)
        return SkewOp._raw(self.q, out)

    def __rmul__(self, other) -> "SkewOp":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other) -> "SkewOp":
        return self.scale(1 / to_scalar(other))

    def __pow__(self, n: int) -> "SkewOp":
        if n < 0:
            return self.inverse() ** (-n)
        out = SkewOp.identity(self.q)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "SkewOp":
        """Inverse of a monomial ``c z**j T**k``; other elements are not units here."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible in the skew Laurent ring")
        ((j, k), c), = self.terms.items()
        # (c z^j T^k)^-1 = c^-1 T^-k z^-j = c^-1 q^(jk) z^-j T^-k
        return SkewOp._raw(self.q, {(-j, -k): self.q ** (j * k) / c})

    # -- queries ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SkewOp._raw(self.q, {(0, 0): Fraction(other)})
        if not isinstance(other, SkewOp):
            return NotImplemented
        return self.q == other.q and self.terms == other.terms

    def __hash__(self):
        return hash((self.q, frozenset(self.terms.items())))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __len__(self):
        return len(self.terms)

    def coefficient_of_shift(self, k: int) -> LaurentPoly:
        """Left coefficient of ``T**k`` as a Laurent polynomial in z."""
        return LaurentPoly._raw({j: c for (j, kk), c in self.terms.items() if kk == k})

    def apply(self, f: LaurentPoly) -> LaurentPoly:
        """Act on ``f``: z multiplies, ``T**k`` sends ``z**j`` to ``q**(jk) z**j``."""
        qp = _qpow(self.q)
        out: dict[int, Fraction] = {}
        for (j, k), c in self.terms.items():
            for m, fc in f.coeffs.items():
                out[j + m] = out.get(j + m, 0) + c * fc * qp(k * m)
        return LaurentPoly._raw(out)

    __call__ = apply

    def to_records(self) -> list[dict]:
        return [{"j": j, "k": k, "coeff": fmt(c)} for (j, k), c in sorted(self.terms.items())]

    def head(self, limit: int = 4) -> str:
        """Short text rendering of the first few terms (used in failure reports)."""
        items = sorted(self.terms.items())
        parts = [f"({fmt(c)})*z^{j}*T^{k}" for (j, k), c in items[:limit]]
        if len(items) > limit:
            parts.append(f"... [{len(items)} terms]")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"SkewOp(q={fmt(self.q)}, {self.head(8)})"


def op_add(lhs: SkewOp, rhs: SkewOp) -> SkewOp:
    return lhs + rhs


def op_scale(op: SkewOp, c) -> SkewOp:
    return op.scale(c)


def op_mul(lhs: SkewOp, rhs: SkewOp) -> SkewOp:
    return lhs * rhs


def q_commutator(A: SkewOp, B: SkewOp, qq) -> SkewOp:
    """``qq*A*B - qq**-1 * B*A``."""
    qq = to_scalar(qq)
    if qq == 0:
        raise ZeroDivisionError("q-commutator needs a nonzero deformation parameter")
    return (A * B).scale(qq) - (B * A).scale(1 / qq)


def apply(A: SkewOp, f: LaurentPoly) -> LaurentPoly:
    return A.apply(f)


def is_zero(A) -> bool:
    return A.is_zero()
