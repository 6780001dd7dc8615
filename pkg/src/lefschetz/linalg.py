"""Exact dense/sparse linear algebra over Q, prime fields, and Q[x1..xr].

Scalar matrices are plain lists of row lists (Fraction or int entries).
Rank computations run on sparse integer rows after clearing denominators,
with a gcd squeeze after each fraction-free update to keep entries small.
Polynomial matrices (lists of row lists of Poly) get exact determinants:
cofactor expansion below size 5, fraction-free Bareiss elimination above.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import ValidationError
from .poly import Poly, grlex_key, mono_div, mono_divides

# Primes above 2**30 used for the modular cross-check mode.
CROSSCHECK_PRIMES = (2147483647, 2147483629, 2147483587)


def _sparse_int_rows(rows):
    """Convert vectors (dense lists or dicts) to integer dicts, clearing denominators."""
    out = []
    for row in rows:
        items = row.items() if isinstance(row, dict) else enumerate(row)
        entries = {}
        denlcm = 1
        for j, v in items:
            if v == 0:
                continue
            f = Fraction(v)
            entries[j] = f
            denlcm = denlcm * f.denominator // gcd(denlcm, f.denominator)
        introw = {j: int(v * denlcm) for j, v in entries.items()}
        if introw:
            g = 0
            for v in introw.values():
                g = gcd(g, v)
            if g > 1:
                introw = {j: v // g for j, v in introw.items()}
            out.append(introw)
    return out


def rank(rows) -> int:
    """Rank of the span of the given vectors, by exact fraction-free elimination.

    Accepts dense rows (lists) or sparse rows (dicts col -> value); values may
    be ints or Fractions.  Works equally as a matrix rank (rows of a matrix)
    or a column-span rank, since rank is transpose invariant.
    """
    work = _sparse_int_rows(rows)
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for row in work:
        while row:
            j = min(row)
            piv = pivots.get(j)
            if piv is None:
                pivots[j] = row
                r += 1
                break
            a = piv[j]
            b = row[j]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            new = {}
            for k, v in row.items():
                w = ma * v - mb * piv.get(k, 0)
                if w:
                    new[k] = w
            for k, v in piv.items():
                if k not in row:
                    w = -mb * v
                    if w:
                        new[k] = w
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                if g > 1:
                    new = {k: v // g for k, v in new.items()}
            row = new
    return r


def rank_mod_p(rows, p: int) -> int:
    """Rank over the prime field F_p; denominators must be invertible mod p."""
    work = []
    for row in rows:
        items = row.items() if isinstance(row, dict) else enumerate(row)
        entries = {}
        for j, v in items:
            f = Fraction(v)
            if f.denominator % p == 0:
                raise ValidationError(f"denominator divisible by p={p}")
            x = f.numerator * pow(f.denominator, p - 2, p) % p
            if x:
                entries[j] = x
        if entries:
            work.append(entries)
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for row in work:
        while row:
            j = min(row)
            piv = pivots.get(j)
            if piv is None:
                inv = pow(row[j], p - 2, p)
                pivots[j] = {k: v * inv % p for k, v in row.items()}
                r += 1
                break
            b = row[j]
            new = {}
            for k, v in row.items():
                w = (v - b * piv.get(k, 0)) % p
                if w:
                    new[k] = w
            for k, v in piv.items():
                if k not in row:
                    w = -b * v % p
                    if w:
                        new[k] = w
            row = new
    return r


class Reducer:
    """Reduced row echelon form of a span, used to reduce vectors modulo it.

    Pivoting is left to right on the column indexing supplied by the caller,
    so the caller controls which coordinates get eliminated.  After feeding
    all spanning vectors, `reduce` maps any vector to its canonical residue
    supported on the non-pivot coordinates.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, Fraction]] = {}

    def insert(self, vec) -> None:
        row = self._reduce_dict(vec)
        if not row:
            return
        j = min(row)
        inv = Fraction(1) / row[j]
        row = {k: v * inv for k, v in row.items()}
        # keep existing rows fully reduced against the new pivot
        for piv in self.pivots.values():
            c = piv.get(j)
            if c:
                for k, v in row.items():
                    w = piv.get(k, 0) - c * v
                    if w:
                        piv[k] = w
                    else:
                        piv.pop(k, None)
        self.pivots[j] = row

    def _reduce_dict(self, vec) -> dict[int, Fraction]:
        items = vec.items() if isinstance(vec, dict) else enumerate(vec)
        row = {j: Fraction(v) for j, v in items if v != 0}
        for j in sorted(row):
            c = row.get(j)
            if not c:
                continue
            piv = self.pivots.get(j)
            if piv is None:
                continue
            for k, v in piv.items():
                w = row.get(k, 0) - c * v
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
        return row

    def reduce(self, vec) -> dict[int, Fraction]:
        return self._reduce_dict(vec)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def nonpivot_columns(self) -> list[int]:
        return [j for j in range(self.ncols) if j not in self.pivots]


# ----- dense Fraction matrices (small, for module structure data) -----


def mat_mul(A, B):
    if A and B and len(A[0]) != len(B):
        raise ValidationError(f"matrix shape mismatch: {len(A[0])} vs {len(B)}")
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [Fraction(0)] * cols
        for k, a in enumerate(row):
            if a:
                br = B[k]
                for j in range(cols):
                    if br[j]:
                        acc[j] += a * br[j]
        out.append(acc)
    return out


def mat_transpose(A):
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def mat_equal(A, B) -> bool:
    if len(A) != len(B):
        return False
    return all(all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def hstack(mats):
    rows = len(mats[0])
    out = [[] for _ in range(rows)]
    for m in mats:
        for i in range(rows):
            out[i].extend(m[i])
    return out


def vstack(mats):
    out = []
    for m in mats:
        out.extend(m)
    return out


# ----- polynomial matrices -----


def poly_mat_mul(A, B):
    n = len(A)
    inner = len(B)
    cols = len(B[0]) if B else 0
    nvars = None
    for row in A:
        for e in row:
            nvars = e.nvars
            break
        if nvars is not None:
            break
    out = []
    for i in range(n):
        row = []
        for j in range(cols):
            acc = Poly.zero(nvars)
            for k in range(inner):
                a = A[i][k]
                b = B[k][j]
                if a and b:
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def poly_mat_is_zero(A) -> bool:
    return all(e.is_zero() for row in A for e in row)


def _poly_exact_div(f: Poly, g: Poly) -> Poly:
    """Exact quotient f/g in the polynomial ring; f must be divisible by g."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    nvars = f.nvars
    quot: dict = {}
    rest = f
    gm, gc = g.leading(grlex_key)
    while rest.terms:
        m, c = rest.leading(grlex_key)
        if not mono_divides(gm, m):
            raise ArithmeticError("inexact polynomial division")
        qm = mono_div(m, gm)
        qc = c / gc
        quot[qm] = qc
        rest = rest - g.mul_monomial(qm, qc)
    return Poly(nvars, quot)


def _cofactor_det(grid, nvars: int) -> Poly:
    n = len(grid)
    if n == 0:
        return Poly.constant(1, nvars)
    if n == 1:
        return grid[0][0]
    if n == 2:
        return grid[0][0] * grid[1][1] - grid[0][1] * grid[1][0]
    # expand along the row with the most zeros
    best = max(range(n), key=lambda i: sum(1 for e in grid[i] if e.is_zero()))
    det = Poly.zero(nvars)
    for j, e in enumerate(grid[best]):
        if e.is_zero():
            continue
        sub = [
            [grid[i][k] for k in range(n) if k != j]
            for i in range(n)
            if i != best
        ]
        minor = _cofactor_det(sub, nvars)
        if minor.is_zero():
            continue
        term = e * minor
        det = det + term if (best + j) % 2 == 0 else det - term
    return det


def _bareiss(grid, nvars: int, want_rank: bool):
    """Fraction-free elimination with full pivoting.

    Returns (det, rank).  det is only meaningful for square input with full
    elimination; rank is always the count of pivots found.
    """
    a = [row[:] for row in grid]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    sign = 1
    prev = Poly.constant(1, nvars)
    steps = min(nrows, ncols)
    k = 0
    while k < steps:
        # pick the sparsest nonzero pivot in the remaining block
        pick = None
        best_size = None
        for i in range(k, nrows):
            for j in range(k, ncols):
                if a[i][j]:
                    size = len(a[i][j].terms)
                    if best_size is None or size < best_size:
                        pick = (i, j)
                        best_size = size
                        if size == 1:
                            break
            if best_size == 1:
                break
        if pick is None:
            break
        pi, pj = pick
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            sign = -sign
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, nrows):
            aik = a[i][k]
            for j in range(k + 1, ncols):
                num = pivot * a[i][j] - aik * a[k][j]
                a[i][j] = _poly_exact_div(num, prev) if num else num
            a[i][k] = Poly.zero(nvars)
        prev = pivot
        k += 1
    rank_found = k
    if want_rank:
        return Poly.zero(nvars), rank_found
    if rank_found < steps or nrows != ncols:
        return Poly.zero(nvars), rank_found
    det = a[nrows - 1][nrows - 1]
    return (det if sign > 0 else -det), rank_found


def poly_det(grid) -> Poly:
    """Exact determinant of a square grid of Poly entries."""
    n = len(grid)
    if any(len(row) != n for row in grid):
        raise ValidationError("determinant of a non-square matrix")
    if n == 0:
        raise ValidationError("determinant of an empty matrix")
    nvars = grid[0][0].nvars
    if n < 5:
        return _cofactor_det(grid, nvars)
    det, _ = _bareiss(grid, nvars, want_rank=False)
    return det


def poly_generic_rank(grid) -> int:
    """Rank of a polynomial matrix over the fraction field K(x1..xr)."""
    if not grid or not grid[0]:
        return 0
    nvars = grid[0][0].nvars
    _, r = _bareiss(grid, nvars, want_rank=True)
    return r
