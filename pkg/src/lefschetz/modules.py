"""Degreewise model of a graded Artinian module over K[x_1..x_r].

A module is a vector of slice dimensions over a contiguous degree range
plus, for every variable and degree, the multiplication matrix between
consecutive slices.  Those matrices must commute pairwise, which the
constructor enforces.  On top of this model sit the Lefschetz-element
tests, the degree-reversing dual, socle and level computations, and the
surjectivity/injectivity propagation checks.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import ValidationError
from .linalg import hstack, mat_equal, mat_mul, mat_transpose, rank, vstack
from .poly import Poly
from .presentation import GradedPresentation

SAMPLING_BOX = 101  # coordinate bound for random linear forms


def dual_varnames(r: int) -> tuple[str, ...]:
    return tuple(f"a{i + 1}" for i in range(r))


class LinearForm:
    """Nonzero coefficient vector for a linear form, treated projectively."""

    def __init__(self, coeffs):
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if not any(self.coeffs):
            raise ValidationError("linear form must be nonzero")

    def __repr__(self):
        return f"LinearForm({[str(c) for c in self.coeffs]})"


class ArtinianGradedModule:
    """Slice dimensions plus commuting structure matrices.

    mats[v][k] is the matrix of multiplication by variable v from the
    degree (t0 + k) slice to the next, shape dims[k+1] x dims[k].
    """

    def __init__(self, r, t0, dims, mats, provenance=None, check=True):
        self.r = r
        self.t0 = t0
        self.dims = tuple(dims)
        self.mats = mats
        self.provenance = provenance
        self._dual: ArtinianGradedModule | None = None
        self._locus_ideals: dict[int, object] = {}
        if not self.dims or self.dims[-1] <= 0 or self.dims[0] <= 0:
            raise ValidationError("dims must start and end with positive values")
        if any(d < 0 for d in self.dims):
            raise ValidationError("dims must be non-negative")
        if check:
            self._check_shapes()
            self._check_commutativity()

    # ----- validation -----

    def _check_shapes(self):
        if len(self.mats) != self.r:
            raise ValidationError(f"expected matrices for {self.r} variables")
        steps = len(self.dims) - 1
        for v in range(self.r):
            if len(self.mats[v]) != steps:
                raise ValidationError(
                    f"variable {v}: expected {steps} matrices, got {len(self.mats[v])}"
                )
            for k in range(steps):
                m = self.mats[v][k]
                if len(m) != self.dims[k + 1] or any(
                    len(row) != self.dims[k] for row in m
                ):
                    raise ValidationError(
                        f"matrix for variable {v} at degree {self.t0 + k} must be "
                        f"{self.dims[k + 1]} x {self.dims[k]}"
                    )

    def _check_commutativity(self):
        for k in range(len(self.dims) - 2):
            for v in range(self.r):
                for w in range(v + 1, self.r):
                    left = mat_mul(self.mats[v][k + 1], self.mats[w][k])
                    right = mat_mul(self.mats[w][k + 1], self.mats[v][k])
                    if not mat_equal(left, right):
                        bad = next(
                            (i, j)
                            for i in range(len(left))
                            for j in range(len(left[0]))
                            if left[i][j] != right[i][j]
                        )
                        raise ValidationError(
                            f"structure matrices do not commute: variables "
                            f"({v},{w}) at degree {self.t0 + k}, entry {bad}: "
                            f"{left[bad[0]][bad[1]]} != {right[bad[0]][bad[1]]}"
                        )

    # ----- basic queries -----

    @property
    def top_degree(self) -> int:
        return self.t0 + len(self.dims) - 1

    def dim(self, t: int) -> int:
        k = t - self.t0
        if 0 <= k < len(self.dims):
            return self.dims[k]
        return 0

    def map_degrees(self) -> range:
        """Degrees t carrying a multiplication map t -> t+1."""
        return range(self.t0, self.top_degree)

    def structure_matrix(self, v: int, t: int):
        return self.mats[v][t - self.t0]

    # ----- multiplication by a linear form -----

    def multiplication_matrix(self, form: LinearForm, t: int):
        """Matrix of multiplication by the form on the degree-t slice."""
        if t not in self.map_degrees():
            return []
        k = t - self.t0
        rows = self.dims[k + 1]
        cols = self.dims[k]
        out = [[Fraction(0)] * cols for _ in range(rows)]
        for v, lam in enumerate(form.coeffs):
            if not lam:
                continue
            m = self.mats[v][k]
            for i in range(rows):
                mi = m[i]
                oi = out[i]
                for j in range(cols):
                    if mi[j]:
                        oi[j] += lam * mi[j]
        return out

    def symbolic_matrix(self, t: int, nvars: int | None = None):
        """Multiplication matrix with the form coefficients left symbolic.

        Entries are degree-one polynomials in the dual variables a_1..a_r.
        """
        nvars = nvars or self.r
        if t not in self.map_degrees():
            return []
        k = t - self.t0
        rows = self.dims[k + 1]
        cols = self.dims[k]
        out = []
        for i in range(rows):
            row = []
            for j in range(cols):
                terms = {}
                for v in range(self.r):
                    c = self.mats[v][k][i][j]
                    if c:
                        mono = tuple(1 if u == v else 0 for u in range(nvars))
                        terms[mono] = Fraction(c)
                row.append(Poly(nvars, terms))
            out.append(row)
        return out

    # ----- Lefschetz tests -----

    def is_lefschetz_element(self, form: LinearForm) -> tuple[bool, list[int]]:
        """Full-rank test for every consecutive multiplication map."""
        failing = []
        for t in self.map_degrees():
            k = t - self.t0
            target = min(self.dims[k], self.dims[k + 1])
            if target == 0:
                continue
            m = self.multiplication_matrix(form, t)
            if rank(m) < target:
                failing.append(t)
        return (not failing, failing)

    # ----- duality, socle, level -----

    def dual(self) -> ArtinianGradedModule:
        """Degree-reversed dual, regraded to start at 0.

        Slice dimensions reverse and the structure matrices transpose in
        reversed order; commutativity survives transposition.  The result
        is memoized and its own dual is this module again.
        """
        if self._dual is not None:
            return self._dual
        steps = len(self.dims) - 1
        mats = [
            [mat_transpose(self.mats[v][steps - 1 - k]) for k in range(steps)]
            for v in range(self.r)
        ]
        out = ArtinianGradedModule(
            self.r, 0, tuple(reversed(self.dims)), mats, provenance=None, check=False
        )
        self._dual = out
        if self.t0 == 0:
            out._dual = self
        return out

    def socle_dims(self) -> list[int]:
        """Per-degree dimension of the common kernel of all variable maps."""
        out = []
        for k in range(len(self.dims) - 1):
            stacked = vstack([self.mats[v][k] for v in range(self.r)])
            out.append(self.dims[k] - rank(stacked))
        out.append(self.dims[-1])
        return out

    def generated_in_initial_degree(self) -> bool:
        for k in range(len(self.dims) - 1):
            if self.dims[k + 1] == 0:
                continue
            stacked = hstack([self.mats[v][k] for v in range(self.r)])
            if rank(stacked) < self.dims[k + 1]:
                return False
        return True

    def is_level(self) -> bool:
        """Generated in the initial degree with socle concentrated on top."""
        soc = self.socle_dims()
        return self.generated_in_initial_degree() and all(s == 0 for s in soc[:-1])


def wlp_decide(module: ArtinianGradedModule, trials: int = 5, seed: int = 0) -> dict:
    """Sample linear forms for the Weak Lefschetz Property.

    One full-rank witness settles the question (maximal rank is an open
    condition), so any success returns HasWLP.  If every trial fails, the
    failing degrees are retested symbolically: a degree whose symbolic
    matrix is rank-deficient over the dual function field fails for every
    form, which is a proof of NoWLP.  Otherwise the result is Inconclusive.
    """
    if trials < 1:
        raise ValidationError("need at least one trial")
    rng = random.Random(seed)
    failures = []
    failing_union: set[int] = set()
    for _ in range(trials):
        while True:
            coeffs = [rng.randint(-SAMPLING_BOX, SAMPLING_BOX) for _ in range(module.r)]
            if any(coeffs):
                break
        form = LinearForm(coeffs)
        ok, failing = module.is_lefschetz_element(form)
        if ok:
            return {
                "status": "HasWLP",
                "witness": [int(c) for c in coeffs],
                "trials_used": len(failures) + 1,
                "seed": seed,
            }
        failures.append({"form": [int(c) for c in coeffs], "failing_degrees": failing})
        failing_union.update(failing)

    from .linalg import poly_generic_rank

    for t in sorted(failing_union):
        grid = module.symbolic_matrix(t)
        k = t - module.t0
        target = min(module.dims[k], module.dims[k + 1])
        if poly_generic_rank(grid) < target:
            return {
                "status": "NoWLP",
                "certificate_degree": t,
                "trials_used": trials,
                "seed": seed,
            }
    return {
        "status": "Inconclusive",
        "failures": failures,
        "trials_used": trials,
        "seed": seed,
    }


def check_propagation(module: ArtinianGradedModule, form: LinearForm) -> dict:
    """Closure checks for where multiplication by the form is onto / one-to-one.

    Surjectivity must be upward closed once the module is generated in its
    initial degree; injectivity must be downward closed once the module is
    level.  A check whose hypothesis fails is reported as skipped.
    """
    degrees = list(module.map_degrees())
    surj = []
    inj = []
    for t in degrees:
        m = module.multiplication_matrix(form, t)
        r = rank(m) if m else 0
        k = t - module.t0
        surj.append(r == module.dims[k + 1])
        inj.append(r == module.dims[k])

    report: dict = {"degrees": degrees, "surjective": surj, "injective": inj}

    if module.generated_in_initial_degree():
        bad = [
            degrees[k]
            for k in range(len(degrees) - 1)
            if surj[k] and not surj[k + 1]
        ]
        report["surjectivity_upward"] = {"checked": True, "violations": bad}
    else:
        report["surjectivity_upward"] = {"checked": False, "reason": "not generated in initial degree"}

    if module.is_level():
        bad = [
            degrees[k + 1]
            for k in range(len(degrees) - 1)
            if inj[k + 1] and not inj[k]
        ]
        report["injectivity_downward"] = {"checked": True, "violations": bad}
    else:
        report["injectivity_downward"] = {"checked": False, "reason": "module is not level"}
    return report


def module_from_presentation(p: GradedPresentation) -> ArtinianGradedModule:
    """Cokernel of phi as a degreewise module with canonical quotient bases.

    In each degree the image of phi is row reduced with pivots on the
    grlex-latest coordinates; the surviving standard coordinates form the
    quotient basis, and multiplication by each variable is the reduction
    of the shifted representative.
    """
    ok, witness = p.is_artinian()
    if not ok:
        raise ValidationError(
            f"cokernel is not Artinian (dim {witness['dim_at_bound']} at degree "
            f"{witness['scan_bound']})"
        )
    t0 = p.a[0]
    c = p.socle_bound

    reducers = {}
    labels = {}
    for t in range(t0, c + 1):
        red = p.image_reducer(t)
        basis = p.basis_f0(t)
        nonpivot = red.nonpivot_columns()
        reducers[t] = red
        labels[t] = [basis[k] for k in nonpivot]

    dims = tuple(len(labels[t]) for t in range(t0, c + 1))

    mats = [[] for _ in range(3)]
    for t in range(t0, c):
        target_basis = p.basis_f0(t + 1)
        target_index = {lab: k for k, lab in enumerate(target_basis)}
        red = reducers[t + 1]
        nonpivot = red.nonpivot_columns()
        position = {col: row for row, col in enumerate(nonpivot)}
        for v in range(3):
            rows = len(labels[t + 1])
            cols = len(labels[t])
            matrix = [[Fraction(0)] * cols for _ in range(rows)]
            for q, (i, mono) in enumerate(labels[t]):
                shifted = tuple(
                    e + (1 if u == v else 0) for u, e in enumerate(mono)
                )
                vec = {target_index[(i, shifted)]: Fraction(1)}
                for col, value in red.reduce(vec).items():
                    matrix[position[col]][q] = value
            mats[v].append(matrix)

    return ArtinianGradedModule(3, t0, dims, mats, provenance=p)


def _parse_scalar(v) -> Fraction:
    if isinstance(v, bool):
        raise ValidationError(f"invalid matrix entry {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"invalid matrix entry {v!r}") from exc
    raise ValidationError(f"invalid matrix entry {v!r}")


def module_from_structure(data: dict) -> ArtinianGradedModule:
    """Ingest a module from raw structure data (see the JSON schema).

    Keys of `matrices` are "var_index, degree" with 1-based variable
    indices and absolute degrees.  Missing matrices are rejected unless
    the corresponding slice is empty; commutativity failures are errors.
    """
    try:
        r = int(data["r"])
        dims = [int(x) for x in data["dims"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad structure input: {exc}") from exc
    if r < 1:
        raise ValidationError("need at least one variable")
    t0 = int(data.get("t0", 0))

    raw = data.get("matrices", {})
    parsed: dict[tuple[int, int], list[list[Fraction]]] = {}
    for key, grid in raw.items():
        try:
            vtxt, ttxt = key.split(",")
            v = int(vtxt.strip())
            t = int(ttxt.strip())
        except ValueError as exc:
            raise ValidationError(
                f"matrix key {key!r} is not 'var_index, degree'"
            ) from exc
        if not 1 <= v <= r:
            raise ValidationError(f"variable index {v} out of range 1..{r}")
        parsed[(v - 1, t)] = [[_parse_scalar(x) for x in row] for row in grid]

    steps = len(dims) - 1
    mats = []
    for v in range(r):
        per_var = []
        for k in range(steps):
            t = t0 + k
            m = parsed.get((v, t))
            if m is None:
                if dims[k] == 0 or dims[k + 1] == 0:
                    m = [[Fraction(0)] * dims[k] for _ in range(dims[k + 1])]
                else:
                    raise ValidationError(
                        f"missing matrix for variable {v + 1} at degree {t}"
                    )
            per_var.append(m)
        mats.append(per_var)
    return ArtinianGradedModule(r, t0, dims, mats)


def module_to_data(module: ArtinianGradedModule) -> dict:
    """Export in the structure schema; round-trips through module_from_structure."""

    def scalar(x: Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    matrices = {}
    for v in range(module.r):
        for k in range(len(module.dims) - 1):
            m = module.mats[v][k]
            if any(any(row) for row in m):
                matrices[f"{v + 1},{module.t0 + k}"] = [
                    [scalar(x) for x in row] for row in m
                ]
    return {
        "kind": "structure",
        "r": module.r,
        "t0": module.t0,
        "dims": list(module.dims),
        "matrices": matrices,
    }
