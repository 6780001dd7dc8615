"""Generators for the two built-in presentation families.

Complete intersections take the 1 x 3 shape with power-of-variable entries;
the circulant family places a fixed triple of degree-q forms on a banded
n x (n+2) matrix, giving non-cyclic finite-length modules for n > 1.
"""

from __future__ import annotations

from .errors import ValidationError
from .poly import Poly, parse_poly
from .presentation import VARNAMES, GradedPresentation, build_presentation


def _power(var_index: int, exp: int) -> Poly:
    mono = tuple(exp if k == var_index else 0 for k in range(3))
    return Poly.monomial(mono)


def make_complete_intersection(q1: int, q2: int, q3: int) -> GradedPresentation:
    """Presentation of R/(x^q1, y^q2, z^q3) for 2 <= q1 <= q2 <= q3."""
    if not (2 <= q1 <= q2 <= q3):
        raise ValidationError("complete intersection needs 2 <= q1 <= q2 <= q3")
    entries = [[_power(0, q1), _power(1, q2), _power(2, q3)]]
    return build_presentation([0], [q1, q2, q3], entries)


def make_circulant(q: int, n: int, forms=None) -> GradedPresentation:
    """Banded presentation with rows cycling a triple of degree-q forms.

    Row i carries (f1, f2, f3) in columns i, i+1, i+2 (0-based), with all
    row twists zero and all column twists q.  Defaults to the monomial
    regular sequence x^q, y^q, z^q; user-supplied forms must be homogeneous
    of degree q, and finite length is then certified separately.
    """
    if q < 3:
        raise ValidationError("circulant family needs q >= 3")
    if n <= 1:
        raise ValidationError("circulant family needs n > 1")
    if forms is None:
        forms = [_power(0, q), _power(1, q), _power(2, q)]
    else:
        parsed = []
        for f in forms:
            if isinstance(f, str):
                f = parse_poly(f, VARNAMES)
            parsed.append(f)
        forms = parsed
        if len(forms) != 3:
            raise ValidationError("circulant family needs exactly three forms")
        for f in forms:
            if f.is_zero() or not f.is_homogeneous() or f.degree() != q:
                raise ValidationError(f"forms must be homogeneous of degree {q}")
    entries = []
    for i in range(n):
        row = [Poly.zero(3)] * (n + 2)
        row[i] = forms[0]
        row[i + 1] = forms[1]
        row[i + 2] = forms[2]
        entries.append(row)
    return build_presentation([0] * n, [q] * (n + 2), entries)
