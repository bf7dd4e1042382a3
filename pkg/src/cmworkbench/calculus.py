"""Pullback divisor classes ``[alpha]^* D`` for a symmetric base divisor ``D``.

For symmetric ``D`` the theorem of the cube makes ``alpha -> [alpha]^* D`` a
quadratic map on the endomorphism ring, so a class is recorded by its
coordinates over the generators

    q(e_0), ..., q(e_{d-1}), b(e_i, e_j) for i < j

where ``e_k`` is the power basis of the ring, ``q(e_0) = q(1)`` is the base
divisor itself, and ``b`` is the associated bilinear form. Invariance
``[u]^* D ~ D`` under declared units generates a relation lattice ``L``;
linear equivalence is decided by membership in ``L`` (strict) or in its
saturation (up to torsion, which is what the Neron-Severi group sees).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from math import isqrt
from typing import Iterable, Sequence

from .lattice import SmithForm, hermite_rows, reduce_mod_hermite, smith_form
from .rings import (
    RingElement,
    RingMismatchError,
    RingSpec,
    format_element,
    norm,
    ratio_is_root_of_unity,
)


class ContextError(ValueError):
    """The declared unit set cannot support the quadratic model."""


class NotDerivableError(ValueError):
    """A class is not an integer multiple of the base divisor."""


class Verdict(str, enum.Enum):
    HOLDS = "holds"
    HOLDS_UP_TO_TORSION = "holds_up_to_torsion"
    NOT_DERIVABLE = "not_derivable"


@dataclass(frozen=True)
class IdentityVerdict:
    verdict: Verdict
    torsion_order: int | None = None  # order of lhs - rhs modulo L, when saturated

    @property
    def strict(self) -> bool:
        return self.verdict is Verdict.HOLDS

    @property
    def saturated(self) -> bool:
        return self.verdict is not Verdict.NOT_DERIVABLE


@dataclass(frozen=True, eq=False)
class CalculusContext:
    ring: RingSpec
    units: tuple[RingElement, ...]
    pairs: tuple[tuple[int, int], ...]
    relations: tuple[tuple[int, ...], ...]
    smith: SmithForm = field(repr=False)
    canonical: tuple[tuple[int, ...], ...] = field(repr=False)  # HNF of L_sat, columns reversed

    @property
    def rank(self) -> int:
        return self.ring.degree + len(self.pairs)

    @property
    def generator_names(self) -> list[str]:
        names = [f"q({format_element(e)})" for e in self.ring.basis]
        basis = [format_element(e) for e in self.ring.basis]
        names += [f"b({basis[i]},{basis[j]})" for i, j in self.pairs]
        return names

    @property
    def torsion_index(self) -> int:
        """Index of ``L`` in ``L_sat``."""
        return self.smith.index

    def vector(self, coords: Sequence[int]) -> ClassVector:
        return ClassVector(self, tuple(coords))

    @property
    def base(self) -> ClassVector:
        """The base divisor ``D = q(1)``."""
        return self.vector([1] + [0] * (self.rank - 1))

    @property
    def zero(self) -> ClassVector:
        return self.vector([0] * self.rank)


@dataclass(frozen=True)
class ClassVector:
    ctx: CalculusContext = field(compare=False, repr=False)
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.ctx.rank:
            raise ValueError("coordinate length does not match the generator count")

    def __add__(self, other: ClassVector) -> ClassVector:
        return ClassVector(self.ctx, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: ClassVector) -> ClassVector:
        return ClassVector(self.ctx, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> ClassVector:
        return ClassVector(self.ctx, tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> ClassVector:
        return ClassVector(self.ctx, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __str__(self):
        terms = []
        for c, name in zip(self.coords, self.ctx.generator_names):
            if c:
                terms.append(f"{c}*{name}" if c != 1 else name)
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _expand_q(x: Sequence[int], pairs) -> list[int]:
    return [a * a for a in x] + [x[i] * x[j] for i, j in pairs]


def _expand_b(x: Sequence[int], y: Sequence[int], pairs) -> list[int]:
    return [2 * a * b for a, b in zip(x, y)] + [x[i] * y[j] + x[j] * y[i] for i, j in pairs]


def context_build(ring: RingSpec, units: Iterable[RingElement]) -> CalculusContext:
    units = tuple(dict.fromkeys(units))
    for u in units:
        if u.spec != ring:
            raise RingMismatchError("unit from a different ring")
        if abs(norm(u)) != 1:
            raise ContextError(f"{format_element(u)} is not a unit")
    unit_set = set(units)
    if -ring.one not in unit_set:
        raise ContextError("-1 must be among the declared units (base divisor must be symmetric)")
    for u in units:
        if -u not in unit_set:
            raise ContextError(f"unit set not closed under negation at {format_element(u)}")
        for v in units:
            if u * v not in unit_set:
                raise ContextError(
                    f"unit set not closed under multiplication: {format_element(u)} * {format_element(v)}"
                )

    d = ring.degree
    pairs = tuple(combinations(range(d), 2))
    basis = ring.basis
    rows = []
    for u in units:
        images = [(u * e).coeffs for e in basis]
        for i in range(d):
            lhs = _expand_q(images[i], pairs)
            rhs = _expand_q(basis[i].coeffs, pairs)
            rows.append([a - b for a, b in zip(lhs, rhs)])
        for i, j in pairs:
            lhs = _expand_b(images[i], images[j], pairs)
            rhs = _expand_b(basis[i].coeffs, basis[j].coeffs, pairs)
            rows.append([a - b for a, b in zip(lhs, rhs)])
    rows = [r for r in rows if any(r)]
    n = d + len(pairs)
    smith = smith_form(rows, n)
    # reversed columns so that q(1) is the last generator to be eliminated
    sat = [row[::-1] for row in smith.saturation_basis()]
    canonical = hermite_rows(sat, n)
    return CalculusContext(
        ring=ring,
        units=units,
        pairs=pairs,
        relations=tuple(tuple(r) for r in rows),
        smith=smith,
        canonical=tuple(tuple(r) for r in canonical),
    )


def _check_ring(alpha: RingElement, ctx: CalculusContext):
    if alpha.spec != ctx.ring:
        raise RingMismatchError(
            f"element of {alpha.spec.kind.value} used in a {ctx.ring.kind.value} context"
        )


def quadratic_normal_form(alpha: RingElement, ctx: CalculusContext) -> ClassVector:
    """Coordinates of ``[alpha]^* D`` before reduction modulo relations."""
    _check_ring(alpha, ctx)
    return ctx.vector(_expand_q(alpha.coeffs, ctx.pairs))


def reduce(v: ClassVector) -> ClassVector:
    """Canonical representative of ``v`` modulo the saturated relation lattice."""
    rev = reduce_mod_hermite(list(v.coords[::-1]), [list(r) for r in v.ctx.canonical])
    return v.ctx.vector(rev[::-1])


def membership(v: ClassVector) -> IdentityVerdict:
    smith = v.ctx.smith
    order = smith.torsion_order(v.coords)
    if order is None:
        return IdentityVerdict(Verdict.NOT_DERIVABLE)
    if order == 1:
        return IdentityVerdict(Verdict.HOLDS, 1)
    return IdentityVerdict(Verdict.HOLDS_UP_TO_TORSION, order)


Side = Sequence[tuple[int, RingElement]]


def combine(terms: Side, ctx: CalculusContext) -> ClassVector:
    total = ctx.zero
    for c, alpha in terms:
        total = total + c * quadratic_normal_form(alpha, ctx)
    return total


def verify(lhs: Side, rhs: Side, ctx: CalculusContext) -> IdentityVerdict:
    """Decide ``sum c [alpha]^* D ~ sum c' [beta]^* D``."""
    return membership(combine(lhs, ctx) - combine(rhs, ctx))


def n_plus_alpha(n: int, alpha: RingElement, ctx: CalculusContext) -> ClassVector:
    """``[n + alpha]^* D`` through the recurrence in ``n`` instead of direct expansion."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    one = ctx.ring.one
    return (
        n * quadratic_normal_form(one + alpha, ctx)
        - (n - 1) * quadratic_normal_form(alpha, ctx)
        + n * (n - 1) * ctx.base
    )


def base_multiple(v: ClassVector) -> int | None:
    """The integer ``c`` with ``v ~ c D`` up to torsion, or None."""
    ctx = v.ctx
    target = ctx.smith.quotient(v.coords)
    unit = ctx.smith.quotient(ctx.base.coords)
    k = next((k for k, x in enumerate(unit) if x), None)
    if k is None:
        raise ContextError("base divisor is torsion in this context")
    if target[k] % unit[k]:
        return None
    c = target[k] // unit[k]
    if any(t != c * x for t, x in zip(target, unit)):
        return None
    return c


def polarization_scalar(alpha: RingElement, ctx: CalculusContext) -> int | None:
    if alpha.is_zero():
        raise ValueError("polarization scalar of zero is undefined")
    c = base_multiple(quadratic_normal_form(alpha, ctx))
    if c is None or c < 1:
        return None
    return c


@dataclass(frozen=True)
class RefutationCertificate:
    alpha: str
    beta: str
    s: int
    t: int
    solutions: tuple[int, ...]

    @property
    def equation(self) -> str:
        return f"a({self.s}-a)={self.t}"

    @property
    def refuted(self) -> bool:
        return not self.solutions


def refute_scalar_hypothesis(
    alpha: RingElement, beta: RingElement, ctx: CalculusContext
) -> RefutationCertificate:
    """Test ``[alpha]^* D ~ a D`` against the sum and product of ``alpha`` and ``beta``.

    With ``[alpha]^* D + [beta]^* D ~ s D`` and ``[alpha beta]^* D ~ t D``,
    composing pullbacks turns the hypothesis into ``a (s - a) = t``.
    """
    s = base_multiple(quadratic_normal_form(alpha, ctx) + quadratic_normal_form(beta, ctx))
    if s is None:
        raise NotDerivableError("[alpha]^*D + [beta]^*D is not a multiple of D")
    t = base_multiple(quadratic_normal_form(alpha * beta, ctx))
    if t is None:
        raise NotDerivableError("[alpha beta]^*D is not a multiple of D")
    sols = set()
    disc = s * s - 4 * t
    if disc >= 0:
        r = isqrt(disc)
        if r * r == disc:
            for num in (s - r, s + r):
                if num % 2 == 0 and num // 2 >= 1:
                    sols.add(num // 2)
    return RefutationCertificate(format_element(alpha), format_element(beta), s, t, tuple(sorted(sols)))


def diagonal_preperiodic(phi1: RingElement, phi2: RingElement) -> bool:
    """Whether the diagonal is preperiodic under ``(phi1, phi2)``.

    For nonzero isogenies of a simple abelian variety this happens exactly
    when some power of ``phi1`` equals the same power of ``phi2``.
    """
    return ratio_is_root_of_unity(phi1, phi2)


def full_context(ring: RingSpec) -> CalculusContext:
    """Context whose invariance group is every root of unity in the ring."""
    return context_build(ring, ring.units())
