"""Jacobians of genus-2 curves ``y^2 = f(x)``, ``deg f = 5``, over prime fields.

Points are reduced Mumford pairs ``(u, v)``: ``u`` monic of degree at most 2,
``deg v < deg u`` and ``u | v^2 - f``. The group law is Cantor's
composition followed by reduction. A curve automorphism
``(x, y) -> (c x, d y)`` acts on pairs by substitution, which gives the CM
action of ``i`` (on ``y^2 = x^5 - x``) or ``zeta_5`` (on ``y^2 = x^5 - 1``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property

from . import gf
from .gf import Poly, deg, monic, padd, pdivmod, pmod, pmul, pneg, psub, xgcd
from .rings import RingElement, RingKind

DEFAULT_ENUMERATION_BOUND = 50
COUNTING_BOUND = 1000


class CurveError(ValueError):
    """Curve parameters fail validation."""


class InvalidDivisorError(ValueError):
    pass


@dataclass(frozen=True)
class MumfordDivisor:
    u: Poly
    v: Poly

    def __str__(self):
        return f"({_fmt(self.u)}, {_fmt(self.v)})"


def _fmt(a: Poly) -> str:
    if not a:
        return "0"
    terms = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if not c:
            continue
        mono = {0: "", 1: "x"}.get(k, f"x^{k}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return "+".join(terms)


IDENTITY = MumfordDivisor((1,), ())


@dataclass(frozen=True)
class CurveParams:
    p: int
    f: Poly
    c: int
    d: int
    cm: RingKind

    @classmethod
    def gaussian(cls, p: int = 13) -> CurveParams:
        """``y^2 = x^5 - x`` with ``[i]: (x, y) -> (-x, sqrt(-1) y)``."""
        if not gf.is_prime(p) or p % 4 != 1:
            raise CurveError(f"need a prime p = 1 mod 4 for sqrt(-1), got {p}")
        d = gf.sqrt_table(p)[p - 1]
        return cls(p, gf.norm_poly((0, -1, 0, 0, 0, 1), p), p - 1, d, RingKind.GAUSSIAN)

    @classmethod
    def fifth_root(cls, p: int = 11) -> CurveParams:
        """``y^2 = x^5 - 1`` with ``[zeta_5]: (x, y) -> (c x, y)``, ``c`` of order 5."""
        if not gf.is_prime(p) or p % 5 != 1:
            raise CurveError(f"need a prime p = 1 mod 5 for fifth roots of unity, got {p}")
        c = next(x for x in range(2, p) if pow(x, 5, p) == 1)
        return cls(p, gf.norm_poly((-1, 0, 0, 0, 0, 1), p), c, 1, RingKind.FIFTH_ROOT)

    @classmethod
    def detect(cls, f, p: int) -> CurveParams:
        """Pick the CM automorphism supported by ``f`` over F_p."""
        if not gf.is_prime(p) or p == 2:
            raise CurveError(f"{p} is not an odd prime")
        f = gf.norm_poly(f, p)
        if deg(f) != 5 or f[-1] != 1:
            raise CurveError("f must be monic of degree 5")
        if all(f[k] == 0 for k in range(0, 6, 2)) and p % 4 == 1:
            d = gf.sqrt_table(p)[p - 1]
            return cls(p, f, p - 1, d, RingKind.GAUSSIAN)
        if all(f[k] == 0 for k in range(1, 5)) and p % 5 == 1:
            c = next(x for x in range(2, p) if pow(x, 5, p) == 1)
            return cls(p, f, c, 1, RingKind.FIFTH_ROOT)
        raise CurveError(
            "no supported CM automorphism: need odd f with p = 1 mod 4, "
            "or f = x^5 + const with p = 1 mod 5"
        )


def curve_validate(params: CurveParams) -> Jacobian:
    p, f, c, d = params.p, params.f, params.c, params.d
    if not gf.is_prime(p) or p == 2:
        raise CurveError(f"{p} is not an odd prime")
    if f != gf.norm_poly(f, p) or deg(f) != 5 or f[-1] != 1:
        raise CurveError("f must be monic of degree 5 with coefficients reduced mod p")
    g, _, _ = xgcd(f, gf.derivative(f, p), p)
    if g != (1,):
        raise CurveError("f is not squarefree mod p (bad reduction)")
    if gf.substitute_scaled(f, c, p) != gf.pscale(f, d * d, p):
        raise CurveError("f(c x) != d^2 f(x): (c, d) is not a curve automorphism")
    if params.cm is RingKind.GAUSSIAN:
        if p % 4 != 1 or c != p - 1 or d * d % p != p - 1:
            raise CurveError("Gaussian CM needs p = 1 mod 4, c = -1, d^2 = -1")
    elif params.cm is RingKind.FIFTH_ROOT:
        if p % 5 != 1 or c == 1 or pow(c, 5, p) != 1 or d != 1:
            raise CurveError("fifth-root CM needs p = 1 mod 5, c of order 5, d = 1")
    else:
        raise CurveError(f"no point-level model for {params.cm.value}")
    return Jacobian(params)


@dataclass
class Jacobian:
    params: CurveParams
    enumeration_bound: int = DEFAULT_ENUMERATION_BOUND
    _order: int | None = field(default=None, repr=False)

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def f(self) -> Poly:
        return self.params.f

    identity = IDENTITY

    def is_valid(self, D: MumfordDivisor) -> bool:
        u, v, p = D.u, D.v, self.p
        if not u or u[-1] != 1 or deg(u) > 2 or deg(v) >= deg(u):
            return False
        if any(not 0 <= c < p for c in u + v):
            return False
        return not pmod(psub(pmul(v, v, p), self.f, p), u, p)

    def _check(self, D: MumfordDivisor):
        if not self.is_valid(D):
            raise InvalidDivisorError(f"{D} is not a reduced divisor on this curve")

    def make(self, u, v) -> MumfordDivisor:
        D = MumfordDivisor(gf.norm_poly(u, self.p), gf.norm_poly(v, self.p))
        self._check(D)
        return D

    def negate(self, D: MumfordDivisor) -> MumfordDivisor:
        return MumfordDivisor(D.u, pneg(D.v, self.p))

    def add(self, D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
        self._check(D1)
        self._check(D2)
        return self._add(D1, D2)

    def _add(self, D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
        p, f = self.p, self.f
        u1, v1, u2, v2 = D1.u, D1.v, D2.u, D2.v
        # composition
        d1, e1, e2 = xgcd(u1, u2, p)
        d, c1, c2 = xgcd(d1, padd(v1, v2, p), p)
        s1, s2, s3 = pmul(c1, e1, p), pmul(c1, e2, p), c2
        u, rem = pdivmod(pmul(u1, u2, p), pmul(d, d, p), p)
        assert not rem
        num = padd(
            padd(pmul(pmul(s1, u1, p), v2, p), pmul(pmul(s2, u2, p), v1, p), p),
            pmul(s3, padd(pmul(v1, v2, p), f, p), p),
            p,
        )
        v, rem = pdivmod(num, d, p)
        assert not rem
        v = pmod(v, u, p)
        # reduction
        while deg(u) > 2:
            u, rem = pdivmod(psub(f, pmul(v, v, p), p), u, p)
            assert not rem
            u = monic(u, p)
            v = pmod(pneg(v, p), u, p)
        return MumfordDivisor(u, v)

    def scalar_mul(self, n: int, D: MumfordDivisor) -> MumfordDivisor:
        self._check(D)
        if n < 0:
            n, D = -n, self.negate(D)
        acc = IDENTITY
        while n:
            if n & 1:
                acc = self._add(acc, D)
            D = self._add(D, D)
            n >>= 1
        return acc

    def automorphism_apply(self, D: MumfordDivisor, power: int = 1) -> MumfordDivisor:
        """Image of ``D`` under ``(x, y) -> (c^k x, d^k y)``, ``k = power``."""
        self._check(D)
        p = self.p
        c = pow(self.params.c, power, p)
        dd = pow(self.params.d, power, p)
        ci = pow(c, -1, p)
        n = deg(D.u)
        u = gf.norm_poly([coef * pow(c, n - k, p) for k, coef in enumerate(D.u)], p)
        v = gf.norm_poly([dd * coef * pow(ci, k, p) for k, coef in enumerate(D.v)], p)
        return MumfordDivisor(u, v)

    def endomorphism_apply(self, alpha: RingElement, D: MumfordDivisor) -> MumfordDivisor:
        """``[alpha] D`` with the ring generator acting as the curve automorphism."""
        if alpha.spec.kind is not self.params.cm:
            raise CurveError(
                f"{alpha.spec.kind.value} element cannot act on a {self.params.cm.value} curve"
            )
        acc = IDENTITY
        for k, n in enumerate(alpha.coeffs):
            if n:
                acc = self._add(acc, self.scalar_mul(n, self.automorphism_apply(D, k)))
        return acc

    @cached_property
    def points(self) -> tuple[MumfordDivisor, ...]:
        return tuple(self.enumerate_points())

    def enumerate_points(self) -> list[MumfordDivisor]:
        p, f = self.p, self.f
        if p > self.enumeration_bound:
            raise CurveError(f"p = {p} exceeds the enumeration bound {self.enumeration_bound}")
        roots = {}
        for y in range(p):
            roots.setdefault(y * y % p, []).append(y)
        out = [IDENTITY]
        for a in range(p):
            for b in roots.get(gf.peval(f, a, p), ()):
                out.append(MumfordDivisor(((-a) % p, 1), gf.norm_poly((b,), p)))
        inv2 = pow(2, -1, p)
        for a1 in range(p):
            for a0 in range(p):
                u = (a0, a1, 1)
                r = pmod(f, u, p)
                r0 = r[0] if len(r) > 0 else 0
                r1 = r[1] if len(r) > 1 else 0
                # v = v1 x + v0; v^2 = (2 v1 v0 - v1^2 a1) x + (v0^2 - v1^2 a0) mod u
                for v0 in roots.get(r0, ()) if r1 == 0 else ():
                    out.append(MumfordDivisor(u, gf.norm_poly((v0,), p)))
                for v1 in range(1, p):
                    v0 = (r1 + v1 * v1 * a1) * inv2 * pow(v1, -1, p) % p
                    if (v0 * v0 - v1 * v1 * a0 - r0) % p == 0:
                        out.append(MumfordDivisor(u, (v0, v1)))
        return out

    def order_via_counts(self) -> int:
        """``#J(F_p) = (N_1^2 + N_2) / 2 - p`` from point counts over F_p and F_{p^2}."""
        p, f = self.p, self.f
        if p > COUNTING_BOUND:
            raise CurveError(f"p = {p} exceeds the point-counting bound {COUNTING_BOUND}")
        n1 = 1 + sum(1 + gf.legendre(gf.peval(f, x, p), p) for x in range(p))
        field2 = gf.Fp2.make(p)
        n2 = 1
        for x in field2.elements():
            fx = field2.evaluate(f, x)
            n2 += 1 + gf.legendre(field2.norm(fx), p)
        total = n1 * n1 + n2
        assert total % 2 == 0
        return total // 2 - p

    @property
    def order(self) -> int:
        if self._order is None:
            self._order = self.order_via_counts()
        return self._order

    def kernel_count(self, alpha: RingElement) -> int:
        return sum(1 for P in self.points if self.endomorphism_apply(alpha, P) == IDENTITY)

    def find_orbit_cycle(
        self, phi1: RingElement, phi2: RingElement, P: MumfordDivisor, Q: MumfordDivisor
    ) -> tuple[int, int]:
        """Tail length and period of ``(P, Q)`` under ``(phi1, phi2)``."""
        seen = {}
        state = (P, Q)
        step = 0
        while state not in seen:
            seen[state] = step
            state = (self.endomorphism_apply(phi1, state[0]), self.endomorphism_apply(phi2, state[1]))
            step += 1
        m = seen[state]
        return m, step - m

    def point_order(self, D: MumfordDivisor) -> int:
        n = self.order
        out = n
        for q in _prime_factors(n):
            while out % q == 0 and self.scalar_mul(out // q, D) == IDENTITY:
                out //= q
        return out

    def sample(self, rng: random.Random, k: int) -> list[MumfordDivisor]:
        pts = self.points
        return [pts[rng.randrange(len(pts))] for _ in range(k)]


def _prime_factors(n: int) -> list[int]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def cantor_add(P: MumfordDivisor, Q: MumfordDivisor, jac: Jacobian) -> MumfordDivisor:
    return jac.add(P, Q)


def scalar_mul(n: int, P: MumfordDivisor, jac: Jacobian) -> MumfordDivisor:
    return jac.scalar_mul(n, P)


def endomorphism_apply(alpha: RingElement, P: MumfordDivisor, jac: Jacobian) -> MumfordDivisor:
    return jac.endomorphism_apply(alpha, P)
