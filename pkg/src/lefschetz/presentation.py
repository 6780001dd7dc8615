"""Graded presentations phi: (+)R(-b_j) -> (+)R(-a_i) over R = K[x,y,z].

The shape is n rows by n+2 columns with homogeneous entries of degree
b_j - a_i.  Degreewise scalar matrices of phi under canonical monomial
bases drive the rank route to Hilbert functions and the finite-length
decision; maximal minors (two columns deleted) feed the resolution maps.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import ValidationError
from .linalg import Reducer, rank
from .poly import Mono, Poly, grlex_key, mono_mul, parse_poly

VARNAMES = ("x", "y", "z")


@lru_cache(maxsize=None)
def monomials_of_degree(t: int, nvars: int) -> tuple[Mono, ...]:
    """All degree-t monomials in nvars variables, in descending grlex order."""
    if t < 0:
        return ()
    if nvars == 1:
        return ((t,),)
    out = []
    for e in range(t, -1, -1):
        for rest in monomials_of_degree(t - e, nvars - 1):
            out.append((e,) + rest)
    return tuple(out)


def free_basis(twists, t: int, nvars: int = 3) -> list[tuple[int, Mono]]:
    """Basis of the degree-t slice of (+)_i R(-twists[i]).

    Elements are (generator index, monomial) pairs, ordered by generator
    index and then by descending grlex on the monomial, so that reduction
    pivots land on the grlex-latest coordinates first.
    """
    basis = []
    for i, w in enumerate(twists):
        for m in monomials_of_degree(t - w, nvars):
            basis.append((i, m))
    return basis


class GradedPresentation:
    """Validated presentation matrix with twist bookkeeping.

    Immutable after construction; per-degree scalar matrices are cached
    internally.  Build through `build_presentation` (or the JSON loader),
    which enforces all invariants.
    """

    def __init__(self, a, b, entries, varnames=VARNAMES):
        self.varnames = tuple(varnames)
        self.a = tuple(a)
        self.b = tuple(b)
        self.entries = tuple(tuple(row) for row in entries)
        self.n = len(self.a)
        self.d = sum(self.b) - sum(self.a)
        self.dprime = sum(self.b[i] - self.a[i] for i in range(self.n))
        self._phi_cache: dict[int, tuple[list[dict[int, Fraction]], int]] = {}
        self._dim_cache: dict[int, int] = {}

    # ----- degree bookkeeping -----

    def entry_degree(self, i: int, j: int) -> int:
        return self.b[j] - self.a[i]

    @property
    def socle_bound(self) -> int:
        """Largest degree where the cokernel can be nonzero, if Artinian."""
        return self.d - self.a[0] - 3

    # ----- degreewise linear algebra -----

    def basis_f0(self, t: int) -> list[tuple[int, Mono]]:
        return free_basis(self.a, t)

    def basis_f1(self, t: int) -> list[tuple[int, Mono]]:
        return free_basis(self.b, t)

    def phi_columns(self, t: int) -> tuple[list[dict[int, Fraction]], int]:
        """Columns of phi in degree t as sparse vectors over the F0 basis."""
        if t in self._phi_cache:
            return self._phi_cache[t]
        row_basis = self.basis_f0(t)
        index = {lab: k for k, lab in enumerate(row_basis)}
        cols = []
        for j in range(self.n + 2):
            for m in monomials_of_degree(t - self.b[j], 3):
                vec: dict[int, Fraction] = {}
                for i in range(self.n):
                    e = self.entries[i][j]
                    for me, ce in e.terms.items():
                        k = index[(i, mono_mul(me, m))]
                        s = vec.get(k, 0) + ce
                        if s:
                            vec[k] = s
                        else:
                            del vec[k]
                cols.append(vec)
        result = (cols, len(row_basis))
        self._phi_cache[t] = result
        return result

    def module_dim(self, t: int) -> int:
        """dim of the degree-t slice of coker(phi), by exact rank computation."""
        if t in self._dim_cache:
            return self._dim_cache[t]
        cols, nrows = self.phi_columns(t)
        value = nrows - rank(cols)
        self._dim_cache[t] = value
        return value

    def image_reducer(self, t: int) -> Reducer:
        """Reducer for the degree-t image of phi inside the F0 slice."""
        cols, nrows = self.phi_columns(t)
        red = Reducer(nrows)
        for vec in cols:
            red.insert(vec)
        return red

    # ----- minors -----

    def maximal_minor(self, r: int, s: int) -> Poly:
        """Determinant of phi with columns r and s deleted (0-based indices).

        Nonzero results are homogeneous of degree d - b_r - b_s.
        """
        if r == s:
            raise ValidationError("the two deleted columns must differ")
        for idx in (r, s):
            if not 0 <= idx < self.n + 2:
                raise ValidationError(f"column index {idx} out of range")
        from .linalg import poly_det

        keep = [j for j in range(self.n + 2) if j not in (r, s)]
        grid = [[self.entries[i][j] for j in keep] for i in range(self.n)]
        return poly_det(grid)

    # ----- finite length -----

    def is_artinian(self) -> tuple[bool, dict]:
        """Decide whether coker(phi) has finite length, with a witness.

        Scans dim M_t from the top generator degree; a zero slice at any
        t >= a_n is absorbing because the module is generated in degrees
        <= a_n.  If the module is Artinian its top socle degree forces a
        zero slice by d - a_1 - 2, so the scan is complete at
        T = max(a_n, d - a_1 - 2).
        """
        top = max(self.a[-1], self.d - self.a[0] - 2)
        for t in range(self.a[-1], top + 1):
            if self.module_dim(t) == 0:
                return True, {"first_zero_degree": t, "scan_bound": top}
        return False, {"dim_at_bound": self.module_dim(top), "scan_bound": top}


def build_presentation(a, b, entries, varnames=VARNAMES) -> GradedPresentation:
    """Validate raw data and construct a presentation.

    entries may be Poly values or strings in the shared polynomial grammar.
    Raises ValidationError on dimension mismatches, unsorted twists,
    inhomogeneous entries, or twists that force the minor ideal below
    codimension three (some b_i <= a_i).
    """
    if len(varnames) != 3:
        raise ValidationError("presentations are specific to three variables")
    a = list(a)
    b = list(b)
    n = len(a)
    if n < 1:
        raise ValidationError("need at least one row twist")
    if len(b) != n + 2:
        raise ValidationError(
            f"need exactly n+2 = {n + 2} column twists, got {len(b)}"
        )
    if sorted(a) != a:
        raise ValidationError("row twists a must be sorted ascending")
    if sorted(b) != b:
        raise ValidationError("column twists b must be sorted ascending")
    if len(entries) != n or any(len(row) != n + 2 for row in entries):
        raise ValidationError(f"entry grid must be {n} x {n + 2}")

    for i in range(n):
        if b[i] <= a[i]:
            raise ValidationError(
                f"b[{i}] = {b[i]} <= a[{i}] = {a[i]}: the twists force a zero "
                "submatrix large enough to cap the minor ideal at codimension 2, "
                "so the cokernel cannot have finite length"
            )

    grid = []
    for i in range(n):
        row = []
        for j in range(n + 2):
            e = entries[i][j]
            if isinstance(e, str):
                e = parse_poly(e, varnames)
            deg = b[j] - a[i]
            if e.is_zero():
                row.append(Poly.zero(3))
                continue
            if deg <= 0:
                raise ValidationError(
                    f"entry ({i},{j}) must be zero: its degree slot "
                    f"b[{j}] - a[{i}] = {deg} is not positive"
                )
            if not e.is_homogeneous() or e.degree() != deg:
                raise ValidationError(
                    f"entry ({i},{j}) must be homogeneous of degree {deg}, "
                    f"got {e.format(varnames)}"
                )
            row.append(e)
        grid.append(row)
    return GradedPresentation(a, b, grid, varnames)
