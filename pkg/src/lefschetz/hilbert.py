"""Hilbert functions of the cokernel: closed formula, rank route, shape tests.

The closed form reads the alternating sum of twisted free-module dimensions
off the four-term resolution; the rank route recomputes each value from the
presentation matrix alone.  Agreement of the two is the load-bearing
cross-check used throughout the test suite.
"""

from __future__ import annotations

from .presentation import GradedPresentation


def binom2(m: int) -> int:
    """Dimension count C(m, 2) clamped to zero below m = 2.

    The clamp matters: these terms count monomials in twisted free modules
    and must vanish below the twist, which the signed extension of the
    binomial would get wrong at m <= -1.
    """
    return m * (m - 1) // 2 if m >= 2 else 0


def hilbert_closed(p: GradedPresentation, t: int) -> int:
    """Value of the Hilbert function of coker(phi) at t, by closed formula."""
    d = p.d
    total = 0
    for ai in p.a:
        total += binom2(t + 2 - ai) - binom2(t + 2 + ai - d)
    for bj in p.b:
        total += binom2(t + 2 + bj - d) - binom2(t + 2 - bj)
    return total


def hilbert_rank(p: GradedPresentation, t: int) -> int:
    """Same value computed as dim (F0)_t minus the exact rank of phi_t."""
    if t < p.a[0]:
        return 0
    return p.module_dim(t)


def hilbert_table(p: GradedPresentation) -> list[int]:
    """Hilbert values over 0..c with c = d - a_1 - 3 (Artinian input).

    Indexing always starts at degree 0; presentations with a_1 > 0 simply
    report zeros below their initial degree.
    """
    c = p.socle_bound
    return [hilbert_closed(p, t) for t in range(c + 1)]


def is_symmetric(values: list[int]) -> bool:
    return values == values[::-1]


def is_strictly_unimodal(values: list[int]) -> bool:
    """Strict climb to the maximum, strict descent after.

    A flat step is tolerated only at the maximum, and only when the plateau
    is centered (the forced middle pair of a symmetric table with an odd
    top degree) or the whole support is constant.
    """
    lo = 0
    hi = len(values) - 1
    while lo <= hi and values[lo] == 0:
        lo += 1
    while hi >= lo and values[hi] == 0:
        hi -= 1
    vals = values[lo : hi + 1]
    if not vals:
        return True
    peak = max(vals)
    m1 = vals.index(peak)
    m2 = len(vals) - 1 - vals[::-1].index(peak)
    if any(vals[k] != peak for k in range(m1, m2 + 1)):
        return False
    for k in range(m1):
        if vals[k] >= vals[k + 1]:
            return False
    for k in range(m2, len(vals) - 1):
        if vals[k] <= vals[k + 1]:
            return False
    if m1 == m2:
        return True
    if m2 - m1 == len(vals) - 1:
        return True
    return m2 - m1 == 1 and m1 + m2 == len(vals) - 1


def check_parity_conditions(p: GradedPresentation) -> dict:
    """Numeric hypotheses under which the shape theorems apply.

    Condition (a): d even and d' + b_{n+1} + 2 > b_{n+2}.
    Condition (b): d odd  and d' + b_{n+1} + 1 > b_{n+2}.
    (b_{n+1}, b_{n+2} are the two largest column twists, 1-based.)
    """
    d = p.d
    dprime = p.dprime
    b_second = p.b[-2]
    b_top = p.b[-1]
    cond_a = d % 2 == 0 and dprime + b_second + 2 > b_top
    cond_b = d % 2 == 1 and dprime + b_second + 1 > b_top
    a1_zero = p.a[0] == 0
    return {
        "a1_is_zero": a1_zero,
        "d": d,
        "d_parity": "even" if d % 2 == 0 else "odd",
        "condition_a": cond_a,
        "condition_b": cond_b,
        "applicable": a1_zero and (cond_a or cond_b),
    }
