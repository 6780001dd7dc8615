"""Deterministic test corpus: golden families plus seeded random presentations.

Random presentations are rejection-sampled for finite length with a fixed
seed, so every run sees the same corpus.  Modules are built lazily and
memoized because several suites share them.
"""

from __future__ import annotations

import random
from math import comb

from lefschetz import (
    GradedPresentation,
    build_presentation,
    make_circulant,
    make_complete_intersection,
    module_from_presentation,
)
from lefschetz.poly import Poly
from lefschetz.presentation import monomials_of_degree

CORPUS_SEED = 20250809

_PRESENTATIONS: list[tuple[str, GradedPresentation]] | None = None
_MODULES: dict[str, object] = {}


def _random_form(rng: random.Random, degree: int, nterms: int) -> Poly:
    monos = monomials_of_degree(degree, 3)
    terms = {}
    for m in rng.sample(monos, min(nterms, len(monos))):
        terms[m] = rng.choice([-3, -2, -1, 1, 2, 3])
    return Poly.from_terms(3, {m: c for m, c in terms.items()})


def _try_random(rng: random.Random) -> GradedPresentation | None:
    n = rng.choice([1, 1, 1, 2, 2, 3])
    if n == 1:
        a = [rng.choice([0, 0, 0, 1])]
    elif n == 2:
        a = sorted(rng.choice([(0, 0), (0, 0), (0, 1)]))
    else:
        a = [0, 0, 0]
    b = sorted(rng.randint(max(a) + 1, 4) for _ in range(n + 2))
    d = sum(b) - sum(a)
    if d > 14 or d < 4:
        return None
    entries = []
    for i in range(n):
        row = []
        for j in range(n + 2):
            e = b[j] - a[i]
            if e <= 0 or (n > 1 and abs(i - j) > 2 and rng.random() < 0.8):
                row.append(Poly.zero(3))
            else:
                row.append(_random_form(rng, e, rng.choice([1, 1, 2])))
        entries.append(row)
    try:
        p = build_presentation(a, b, entries)
    except Exception:
        return None
    ok, _ = p.is_artinian()
    return p if ok else None


def corpus_presentations() -> list[tuple[str, GradedPresentation]]:
    """At least 30 Artinian presentations: the golden families and randoms."""
    global _PRESENTATIONS
    if _PRESENTATIONS is not None:
        return _PRESENTATIONS
    items: list[tuple[str, GradedPresentation]] = [
        ("ci_2_2_2", make_complete_intersection(2, 2, 2)),
        ("ci_2_3_4", make_complete_intersection(2, 3, 4)),
        ("ci_3_3_3", make_complete_intersection(3, 3, 3)),
        ("circulant_3_2", make_circulant(3, 2)),
        ("circulant_3_3", make_circulant(3, 3)),
        ("circulant_4_2", make_circulant(4, 2)),
        (
            "mixed_twists",
            build_presentation(
                [0, 1],
                [1, 2, 2, 3],
                [["x", "y^2", "z^2", "0"], ["0", "x", "y", "z^2"]],
            ),
        ),
        (
            "binomial_entries",
            build_presentation([0], [2, 2, 3], [["x^2", "y^2+x*z", "z^3-x*y*z"]]),
        ),
    ]
    rng = random.Random(CORPUS_SEED)
    count = 0
    attempts = 0
    while count < 25 and attempts < 4000:
        attempts += 1
        p = _try_random(rng)
        if p is None:
            continue
        count += 1
        items.append((f"random_{count:02d}", p))
    _PRESENTATIONS = items
    return items


def corpus_module(name: str):
    """Memoized module for a corpus presentation (they are shared across tests)."""
    if name not in _MODULES:
        table = dict(corpus_presentations())
        _MODULES[name] = module_from_presentation(table[name])
    return _MODULES[name]


def minor_work(p: GradedPresentation) -> int:
    """Total count of maximal minors over all locus degrees, from the table alone."""
    from lefschetz import hilbert_table

    dims = [v for v in hilbert_table(p)]
    total = 0
    for k in range(len(dims) - 1):
        rows, cols = dims[k + 1], dims[k]
        s = min(rows, cols)
        if s:
            total += comb(rows, s) * comb(cols, s)
    return total


def nll_corpus() -> list[tuple[str, GradedPresentation]]:
    """Presentations whose full locus computation is desk-scale.

    Every per-degree enumeration must clear the size cap; the total is
    bounded so the whole acceptance pass stays inside its budget.
    """
    out = []
    for name, p in corpus_presentations():
        if minor_work(p) <= 6000:
            out.append((name, p))
    return out


def level_corpus() -> list[tuple[str, GradedPresentation]]:
    """Corpus members with all row twists equal (their modules are level)."""
    return [
        (name, p)
        for name, p in corpus_presentations()
        if len(set(p.a)) == 1
    ]
