"""Exact arithmetic in the CM orders Z[i], Z[zeta_6] and Z[zeta_5].

Elements are stored in the power basis of a fixed generator and reduced
modulo its monic minimal polynomial after every product, so all
arithmetic stays in plain Python integers.

The SixthRoot ring is generated by ``a`` with ``a^2 = a - 1`` (a primitive
sixth root of unity). The primitive cube root ``j`` is ``a - 1``; it is
exposed as a named constant and checked against ``j^2 + j + 1 = 0`` at
import time.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property


class RingKind(str, enum.Enum):
    GAUSSIAN = "gaussian"
    SIXTH_ROOT = "sixthroot"
    FIFTH_ROOT = "fifthroot"


class RingMismatchError(ValueError):
    """Raised when elements of different rings are combined."""


@dataclass(frozen=True)
class RingSpec:
    kind: RingKind
    degree: int
    minpoly: tuple[int, ...]  # low -> high, monic
    roots_of_unity: int
    symbol: str

    def element(self, coeffs) -> RingElement:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) > self.degree:
            return _reduce_poly(self, list(coeffs))
        return RingElement(self, coeffs + (0,) * (self.degree - len(coeffs)))

    def integer(self, n: int) -> RingElement:
        return self.element([n])

    @property
    def one(self) -> RingElement:
        return self.integer(1)

    @property
    def zero(self) -> RingElement:
        return self.integer(0)

    @property
    def gen(self) -> RingElement:
        return self.element([0, 1])

    @property
    def basis(self) -> list[RingElement]:
        return [self.element([0] * k + [1]) for k in range(self.degree)]

    @cached_property
    def torsion_generator(self) -> RingElement:
        """A primitive ``w``-th root of unity, ``w`` the root-of-unity count."""
        if self.kind is RingKind.FIFTH_ROOT:
            return -self.gen
        return self.gen

    def units(self) -> list[RingElement]:
        """All roots of unity of the ring, starting from 1."""
        g = self.torsion_generator
        out = [self.one]
        for _ in range(self.roots_of_unity - 1):
            out.append(out[-1] * g)
        return out


_TABLE = {
    RingKind.GAUSSIAN: RingSpec(RingKind.GAUSSIAN, 2, (1, 0, 1), 4, "i"),
    RingKind.SIXTH_ROOT: RingSpec(RingKind.SIXTH_ROOT, 2, (1, -1, 1), 6, "a"),
    RingKind.FIFTH_ROOT: RingSpec(RingKind.FIFTH_ROOT, 4, (1, 1, 1, 1, 1), 10, "z"),
}


def ring_make(kind: RingKind | str) -> RingSpec:
    return _TABLE[RingKind(kind)]


def _reduce_poly(spec: RingSpec, coeffs: list[int]) -> RingElement:
    d = spec.degree
    m = spec.minpoly
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[k]
        if c:
            # x^k = x^(k-d) * x^d and x^d = -(m_0 + ... + m_{d-1} x^{d-1})
            for t in range(d):
                coeffs[k - d + t] -= c * m[t]
        coeffs[k] = 0
    coeffs = coeffs[:d] + [0] * (d - len(coeffs))
    return RingElement(spec, tuple(coeffs))


@dataclass(frozen=True)
class RingElement:
    spec: RingSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.spec.degree:
            raise ValueError(
                f"expected {self.spec.degree} coordinates, got {len(self.coeffs)}"
            )

    def _coerce(self, other) -> RingElement:
        if isinstance(other, int):
            return self.spec.integer(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.spec != self.spec:
            raise RingMismatchError(
                f"cannot combine {self.spec.kind.value} and {other.spec.kind.value}"
            )
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.spec, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.spec, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [0] * (2 * self.spec.degree - 1)
        for s, a in enumerate(self.coeffs):
            if a:
                for t, b in enumerate(other.coeffs):
                    prod[s + t] += a * b
        return _reduce_poly(self.spec, prod)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> RingElement:
        if n < 0:
            raise ValueError("negative exponent")
        result = self.spec.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"RingElement({self.spec.kind.value}, {format_element(self)!r})"


def mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def neg(a: RingElement) -> RingElement:
    return -a


def power(a: RingElement, n: int) -> RingElement:
    return a**n


def multiplication_matrix(a: RingElement) -> list[list[int]]:
    """Rows are the coordinates of ``a * e_k`` for the power basis ``e_k``."""
    return [list((a * e).coeffs) for e in a.spec.basis]


def _det(matrix: list[list[int]]) -> int:
    # Bareiss fraction-free elimination
    m = [row[:] for row in matrix]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def norm(a: RingElement) -> int:
    """Field norm to Q, i.e. the resultant of the minimal polynomial and ``a``."""
    return _det(multiplication_matrix(a))


def is_root_of_unity(a: RingElement) -> bool:
    if a.is_zero():
        raise ValueError("zero is not a root of unity candidate")
    return a ** a.spec.roots_of_unity == a.spec.one


def ratio_is_root_of_unity(a: RingElement, b: RingElement) -> bool:
    if a.is_zero() or b.is_zero():
        raise ValueError("ratio test needs nonzero arguments")
    if a.spec != b.spec:
        raise RingMismatchError("ratio test needs elements of the same ring")
    w = a.spec.roots_of_unity
    return a**w == b**w


def format_element(a: RingElement) -> str:
    """Render in the literal syntax accepted by :mod:`cmworkbench.language`."""
    sym = a.spec.symbol
    parts: list[str] = []
    for k, c in enumerate(a.coeffs):
        if c == 0:
            continue
        if k == 0:
            mono = str(abs(c))
        else:
            g = sym if k == 1 else f"{sym}^{k}"
            mono = g if abs(c) == 1 else f"{abs(c)}*{g}"
        if not parts:
            parts.append(mono if c > 0 else f"-{mono}")
        else:
            parts.append(f"+{mono}" if c > 0 else f"-{mono}")
    return "".join(parts) or "0"


GAUSSIAN = ring_make(RingKind.GAUSSIAN)
SIXTH_ROOT = ring_make(RingKind.SIXTH_ROOT)
FIFTH_ROOT = ring_make(RingKind.FIFTH_ROOT)

I = GAUSSIAN.gen
ALPHA = SIXTH_ROOT.gen
J = ALPHA - 1
ZETA5 = FIFTH_ROOT.gen

assert J * J + J + 1 == SIXTH_ROOT.zero, "cube root of unity self-check failed"
