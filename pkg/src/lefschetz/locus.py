"""The non-Lefschetz locus as determinantal schemes in dual projective space.

For each degree j, the multiplication matrix with symbolic form
coefficients a_1..a_r is a matrix of linear forms in the dual ring; the
vanishing of its maximal minors cuts out the forms failing maximal rank
at j.  The whole locus is the intersection of these ideals over all j.
Reduction theorems collapse the intersection to one or two degrees for
level and shape-symmetric modules; this module verifies those collapses
rather than assuming them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import SizeCapExceeded
from .groebner import Ideal, ideal_intersect, primitive, sample_locus_comparison
from .linalg import poly_det
from .modules import ArtinianGradedModule, dual_varnames
from .poly import Poly, grlex_key

MINOR_CAP = 20000


@dataclass
class LocusMatrix:
    degree: int
    grid: list
    rows: int
    cols: int
    minor_size: int


def locus_matrix(module: ArtinianGradedModule, j: int) -> LocusMatrix:
    """Symbolic multiplication matrix at degree j over the dual variables."""
    grid = module.symbolic_matrix(j)
    rows = module.dim(j + 1)
    cols = module.dim(j)
    if j not in module.map_degrees():
        grid, rows, cols = [], 0, 0
    return LocusMatrix(j, grid, rows, cols, min(rows, cols))


def locus_ideal(
    module: ArtinianGradedModule, j: int, cap: int = MINOR_CAP
) -> Ideal:
    """Ideal of maximal minors of the symbolic matrix at degree j.

    Vacuous degrees give the unit ideal (no form fails there); an
    identically rank-deficient matrix gives the zero ideal (every form
    fails).  Enumeration is refused beyond `cap` candidate minors.
    """
    names = dual_varnames(module.r)
    rows = module.dim(j + 1) if j in module.map_degrees() else 0
    cols = module.dim(j) if j in module.map_degrees() else 0
    s = min(rows, cols)
    if s == 0:
        return Ideal.unit(names)
    count = comb(rows, s) * comb(cols, s)
    if count > cap:
        raise SizeCapExceeded(
            f"degree {j}: {count} maximal minors of size {s} exceed the cap {cap}"
        )
    cached = module._locus_ideals.get(j)
    if cached is not None:
        return cached
    lm = locus_matrix(module, j)
    gens = []
    seen = set()
    for rsel in combinations(range(lm.rows), s):
        picked = [lm.grid[i] for i in rsel]
        for csel in combinations(range(lm.cols), s):
            sub = [[row[k] for k in csel] for row in picked]
            det = poly_det(sub)
            if det.is_zero():
                continue
            det = primitive(det)
            if det not in seen:
                seen.add(det)
                gens.append(det)
    if not gens:
        result = Ideal.zero(names)
    else:
        gens.sort(key=lambda p: (p.degree(), grlex_key(p.leading(grlex_key)[0])))
        result = Ideal(names, gens)
    module._locus_ideals[j] = result
    return result


def nll_ideal(module: ArtinianGradedModule, cap: int = MINOR_CAP) -> Ideal:
    """Defining ideal of the whole non-Lefschetz locus: the intersection over j."""
    names = dual_varnames(module.r)
    acc = Ideal.unit(names)
    for j in module.map_degrees():
        acc = ideal_intersect(acc, locus_ideal(module, j, cap))
        if acc.is_zero():
            break
    return acc


def check_crux(module: ArtinianGradedModule, i: int, cap: int = MINOR_CAP) -> dict:
    """Containment of consecutive locus ideals on the climbing side.

    Hypotheses: h(i) <= h(i+1) <= h(i+2) and no socle in degree i.  When
    they hold, the degree-(i+1) ideal must sit inside the degree-i ideal.
    """
    h_i = module.dim(i)
    h_i1 = module.dim(i + 1)
    h_i2 = module.dim(i + 2)
    if not (h_i <= h_i1 <= h_i2):
        return {
            "applicable": False,
            "reason": f"Hilbert values not non-decreasing: {h_i}, {h_i1}, {h_i2}",
        }
    soc = module.socle_dims()
    k = i - module.t0
    soc_i = soc[k] if 0 <= k < len(soc) else 0
    if soc_i != 0:
        return {"applicable": False, "reason": f"socle is nonzero in degree {i}"}
    big = locus_ideal(module, i, cap)
    small = locus_ideal(module, i + 1, cap)
    return {"applicable": True, "holds": big.contains(small)}


def dual_transpose_identity(
    module: ArtinianGradedModule, i: int, cap: int = MINOR_CAP
) -> dict:
    """Locus ideal of the regraded dual at i versus the original at c - i - 1.

    Transposing a matrix permutes its maximal minors up to sign, so the two
    ideals agree exactly, not just up to radical; this checks both sides.
    """
    c = module.top_degree
    dual = module.dual()
    left = locus_ideal(dual, i, cap)
    right = locus_ideal(module, c - i - 1, cap)
    return {
        "dual_degree": i,
        "source_degree": c - i - 1,
        "equal": left.equals(right),
    }


def _unimodal_peak(module: ArtinianGradedModule) -> int | None:
    """First degree where the dimension stops climbing, if dims are unimodal."""
    dims = module.dims
    k = 0
    while k + 1 < len(dims) and dims[k] < dims[k + 1]:
        k += 1
    if any(dims[j] < dims[j + 1] for j in range(k, len(dims) - 1)):
        return None
    return module.t0 + k


def reduced_locus(
    module: ArtinianGradedModule,
    cap: int = MINOR_CAP,
    symgor: bool | None = None,
    sample_points: int = 200,
    seed: int = 0,
) -> dict:
    """Verify the locus-reduction theorems on a concrete module.

    For a level module the locus must equal the union of the two pieces
    adjacent to the dimension peak; if the module comes from a presentation
    with all row twists zero (the shape-symmetric case) it must collapse to
    the single degree floor((c-1)/2).  Scheme-level ideal comparisons and
    the set-level sampling check are reported separately and never merged.
    """
    report: dict = {"level": module.is_level()}
    full = nll_ideal(module, cap)
    report["ideal_generators"] = [
        g.format(dual_varnames(module.r)) for g in full.canonical_generators()
    ]
    if not report["level"]:
        report["reduction"] = None
        report["note"] = "module is not level; no reduction is claimed"
        return report

    peak = _unimodal_peak(module)
    report["peak"] = peak
    if peak is None:
        report["reduction"] = None
        report["note"] = "dimension vector is not unimodal"
        return report

    two = ideal_intersect(
        locus_ideal(module, peak - 1, cap), locus_ideal(module, peak, cap)
    )
    report["two_degree"] = {
        "degrees": [peak - 1, peak],
        "scheme_equal": full.equals(two),
        "sampling": sample_locus_comparison(full, two, sample_points, seed),
    }

    if symgor is None:
        p = getattr(module, "provenance", None)
        if p is not None:
            from .resolution import build_resolution, check_symgor_shape

            symgor = check_symgor_shape(build_resolution(p))["symmetrically_gorenstein"]
        else:
            symgor = False

    if symgor:
        c = module.top_degree
        jstar = (c - 1) // 2
        single = locus_ideal(module, jstar, cap)
        report["single_degree"] = {
            "degree": jstar,
            "scheme_equal": full.equals(single),
            "sampling": sample_locus_comparison(full, single, sample_points, seed),
        }
    else:
        report["single_degree"] = None
    return report
