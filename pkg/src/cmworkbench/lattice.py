"""Integer row lattices: Hermite and Smith normal forms, saturation, membership.

All routines work on lists of Python ``int`` rows and never leave Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def hermite_rows(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    The result has no zero rows, strictly increasing pivot columns, positive
    pivots, and every entry above a pivot reduced into ``[0, pivot)``.
    """
    m = [list(r) for r in rows if any(r)]
    out: list[list[int]] = []
    col = 0
    while m and col < ncols:
        nz = [r for r in m if r[col]]
        if not nz:
            col += 1
            continue
        zero = [r for r in m if not r[col]]
        # Euclid on the column until a single row holds a nonzero entry
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            rest = []
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                (rest if r[col] else zero).append(r)
            nz = [piv] + rest
        piv = nz[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        for k, r in enumerate(out):
            q = r[col] // piv[col]
            if q:
                out[k] = [a - q * b for a, b in zip(r, piv)]
        out.append(piv)
        m = [r for r in zero if any(r)]
        col += 1
    return out


def reduce_mod_hermite(vec: list[int], hnf: list[list[int]]) -> list[int]:
    v = list(vec)
    for row in hnf:
        c = next(k for k, a in enumerate(row) if a)
        q = v[c] // row[c]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return v


@dataclass(frozen=True)
class SmithForm:
    """``U * A * col_transform = diag(invariants)`` with unimodular ``U``.

    Only the column side is kept: ``col_transform`` and its inverse
    ``col_inverse``. The first ``rank`` rows of ``col_inverse`` are a basis of
    the saturation of the row lattice of ``A``.
    """

    invariants: tuple[int, ...]
    col_transform: tuple[tuple[int, ...], ...]
    col_inverse: tuple[tuple[int, ...], ...]
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.invariants)

    def coordinates(self, vec) -> list[int]:
        """``vec * col_transform``."""
        n = self.ncols
        return [sum(vec[i] * self.col_transform[i][j] for i in range(n) if vec[i]) for j in range(n)]

    def in_saturation(self, vec) -> bool:
        y = self.coordinates(vec)
        return not any(y[self.rank:])

    def in_lattice(self, vec) -> bool:
        y = self.coordinates(vec)
        if any(y[self.rank:]):
            return False
        return all(yi % s == 0 for yi, s in zip(y, self.invariants))

    def torsion_order(self, vec) -> int | None:
        """Least ``k >= 1`` with ``k * vec`` in the lattice, None if no such k."""
        y = self.coordinates(vec)
        if any(y[self.rank:]):
            return None
        order = 1
        for yi, s in zip(y, self.invariants):
            k = s // gcd(s, yi)
            order = order * k // gcd(order, k)
        return order

    def quotient(self, vec) -> tuple[int, ...]:
        """Coordinates of ``vec`` in the free module Z^n / saturation."""
        return tuple(self.coordinates(vec)[self.rank:])

    @property
    def index(self) -> int:
        """Index of the lattice in its saturation."""
        out = 1
        for s in self.invariants:
            out *= s
        return out

    def saturation_basis(self) -> list[list[int]]:
        return [list(r) for r in self.col_inverse[: self.rank]]


def smith_form(rows: list[list[int]], ncols: int) -> SmithForm:
    a = [list(r) for r in rows]
    m = len(a)
    n = ncols
    v = [[int(i == j) for j in range(n)] for i in range(n)]
    w = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        w[i], w[j] = w[j], w[i]

    def col_sub(j, t, q):
        # col_j -= q * col_t ; inverse: row_t += q * row_j
        for r in a:
            r[j] -= q * r[t]
        for r in v:
            r[j] -= q * r[t]
        wt, wj = w[t], w[j]
        for k in range(n):
            wt[k] += q * wj[k]

    invariants = []
    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        a[t], a[best[0]] = a[best[0]], a[t]
        if best[1] != t:
            col_swap(t, best[1])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    col_sub(j, t, a[t][j] // a[t][t])
                    if a[t][j]:
                        dirty = True
            if dirty:
                best = None
                for i in range(t, m):
                    if a[i][t] and (best is None or abs(a[i][t]) < abs(a[best][t])):
                        best = i
                bi, bj, bval = best, t, abs(a[best][t])
                for j in range(t, n):
                    if a[t][j] and abs(a[t][j]) < bval:
                        bi, bj, bval = t, j, abs(a[t][j])
                if bj != t:
                    col_swap(t, bj)
                else:
                    a[t], a[bi] = a[bi], a[t]
                continue
            p = a[t][t]
            bad = next(
                (i for i in range(t + 1, m) if any(a[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
        invariants.append(a[t][t])
    return SmithForm(
        tuple(invariants),
        tuple(tuple(r) for r in v),
        tuple(tuple(r) for r in w),
        n,
    )
