"""Dense polynomials over F_p and the quadratic extension F_{p^2}.

Polynomials are tuples of ints, lowest degree first, with no trailing
zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

from dataclasses import dataclass

Poly = tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def norm_poly(a, p: int) -> Poly:
    out = [c % p for c in a]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def deg(a: Poly) -> int:
    return len(a) - 1


def padd(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return norm_poly([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)], p)


def pneg(a: Poly, p: int) -> Poly:
    return norm_poly([-c for c in a], p)


def psub(a: Poly, b: Poly, p: int) -> Poly:
    return padd(a, pneg(b, p), p)


def pscale(a: Poly, c: int, p: int) -> Poly:
    return norm_poly([c * x for x in a], p)


def pmul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return norm_poly(out, p)


def pdivmod(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * inv % p
        if c:
            q[k - db] = c
            for t in range(db + 1):
                r[k - db + t] -= c * b[t]
    return norm_poly(q, p), norm_poly(r[:db], p)


def pmod(a: Poly, b: Poly, p: int) -> Poly:
    return pdivmod(a, b, p)[1]


def monic(a: Poly, p: int) -> Poly:
    if not a:
        return a
    return pscale(a, pow(a[-1], -1, p), p)


def xgcd(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly, Poly]:
    """Monic ``g = gcd(a, b)`` with ``s a + t b = g``."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1, p), p)
        t0, t1 = t1, psub(t0, pmul(q, t1, p), p)
    if not r0:
        return (), (), ()
    inv = pow(r0[-1], -1, p)
    return pscale(r0, inv, p), pscale(s0, inv, p), pscale(t0, inv, p)


def derivative(a: Poly, p: int) -> Poly:
    return norm_poly([k * a[k] for k in range(1, len(a))], p)


def peval(a: Poly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def substitute_scaled(a: Poly, c: int, p: int) -> Poly:
    """``a(c x)``."""
    out = []
    ck = 1
    for coef in a:
        out.append(coef * ck)
        ck = ck * c % p
    return norm_poly(out, p)


def sqrt_table(p: int) -> dict[int, int]:
    table: dict[int, int] = {}
    for x in range(p):
        table.setdefault(x * x % p, x)
    return table


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def nonresidue(p: int) -> int:
    return next(r for r in range(2, p) if legendre(r, p) == -1)


@dataclass(frozen=True)
class Fp2:
    """F_p[t] / (t^2 - r) with ``r`` a fixed quadratic nonresidue."""

    p: int
    r: int

    @classmethod
    def make(cls, p: int) -> Fp2:
        return cls(p, nonresidue(p))

    def elements(self):
        p = self.p
        for a in range(p):
            for b in range(p):
                yield (a, b)

    def add(self, x, y):
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def sub(self, x, y):
        return ((x[0] - y[0]) % self.p, (x[1] - y[1]) % self.p)

    def mul(self, x, y):
        p = self.p
        return ((x[0] * y[0] + self.r * x[1] * y[1]) % p, (x[0] * y[1] + x[1] * y[0]) % p)

    def norm(self, x) -> int:
        return (x[0] * x[0] - self.r * x[1] * x[1]) % self.p

    def inv(self, x):
        n = self.norm(x)
        if n == 0:
            raise ZeroDivisionError("inverse of zero in F_p^2")
        ni = pow(n, -1, self.p)
        return (x[0] * ni % self.p, -x[1] * ni % self.p)

    def evaluate(self, a: Poly, x):
        acc = (0, 0)
        for c in reversed(a):
            acc = self.add(self.mul(acc, x), (c % self.p, 0))
        return acc

    def is_square(self, x) -> bool:
        # x is a square in F_{p^2} iff its norm is a square in F_p
        return legendre(self.norm(x), self.p) >= 0

    def sqrt_of_base(self, a: int):
        """A square root in F_{p^2} of ``a`` in F_p."""
        p = self.p
        a %= p
        table = sqrt_table(p)
        if a in table:
            return (table[a], 0)
        b = a * pow(self.r, -1, p) % p
        return (0, table[b])
