"""Buchberger engine for homogeneous ideals in a dual-variable ring.

Small classical implementation: normal selection strategy, the product
(coprime lead monomials) and chain criteria via the Gebauer-Moeller pair
update, full tail reduction, and reduced bases.  Ideal intersection goes
through the auxiliary-variable construction t*I + (1-t)*J with a block
elimination order.  Everything is deterministic for a fixed order and
input ordering, and reduced bases are canonical per ideal.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from .errors import ValidationError
from .poly import (
    Mono,
    Poly,
    elimination_key,
    grevlex_key,
    grlex_key,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

ORDER_KEYS = {"grevlex": grevlex_key, "grlex": grlex_key}


def normal_form(f: Poly, basis: list[Poly], key=grevlex_key) -> Poly:
    """Remainder of multivariate division of f by the list `basis`."""
    lms = [g.leading(key) for g in basis]
    rem: dict[Mono, Fraction] = {}
    work = f
    while work.terms:
        m, c = work.leading(key)
        for g, (gm, gc) in zip(basis, lms):
            if mono_divides(gm, m):
                work = work - g.mul_monomial(mono_div(m, gm), c / gc)
                break
        else:
            rem[m] = c
            work = work - Poly.monomial(m, c)
    return Poly(f.nvars, rem)


def _spoly(f: Poly, g: Poly, key) -> Poly:
    fm, fc = f.leading(key)
    gm, gc = g.leading(key)
    lcm = mono_lcm(fm, gm)
    return f.mul_monomial(mono_div(lcm, fm), 1 / fc) - g.mul_monomial(
        mono_div(lcm, gm), 1 / gc
    )


def interreduce(polys: list[Poly], key=grevlex_key) -> list[Poly]:
    """Mutually reduce a list of polynomials, returning monic survivors."""
    current = [p for p in polys if not p.is_zero()]
    changed = True
    while changed:
        changed = False
        nxt: list[Poly] = []
        for i, p in enumerate(current):
            others = nxt + current[i + 1 :]
            r = normal_form(p, others, key) if others else p
            if r.is_zero():
                changed = True
                continue
            _, lc = r.leading(key)
            r = r.scale(1 / lc)
            if r != p:
                changed = True
            nxt.append(r)
        current = nxt
    return current


def buchberger(gens: list[Poly], key=grevlex_key) -> list[Poly]:
    """Reduced Groebner basis of the ideal generated by `gens`."""
    f = interreduce(gens, key)
    if not f:
        return []
    if any(p.is_constant() for p in f):
        return [Poly.constant(1, f[0].nvars)]

    lm = [p.leading(key)[0] for p in f]
    basis: set[int] = set()
    pairs: set[tuple[int, int]] = set()

    def update(ih: int) -> None:
        # Gebauer-Moeller pair pruning: product and chain criteria.
        mh = lm[ih]
        candidates = set(basis)
        kept: set[tuple[int, int]] = set()
        while candidates:
            ig = candidates.pop()
            mg = lm[ig]
            lcm_hg = mono_lcm(mh, mg)

            def lcm_div(ip: int) -> bool:
                return mono_divides(mono_lcm(mh, lm[ip]), lcm_hg)

            if mono_mul(mh, mg) == lcm_hg or (
                not any(lcm_div(ip) for ip in candidates)
                and not any(lcm_div(pr[1]) for pr in kept)
            ):
                kept.add((ih, ig))
        new_pairs = {
            (ih, ig) for (ih, ig) in kept if mono_mul(mh, lm[ig]) != mono_lcm(mh, lm[ig])
        }
        for i1, i2 in list(pairs):
            lcm12 = mono_lcm(lm[i1], lm[i2])
            if (
                mono_divides(mh, lcm12)
                and mono_lcm(lm[i1], mh) != lcm12
                and mono_lcm(lm[i2], mh) != lcm12
            ):
                pairs.discard((i1, i2))
        pairs.update(new_pairs)
        for ig in list(basis):
            if mono_divides(mh, lm[ig]):
                basis.discard(ig)
        basis.add(ih)

    for i in range(len(f)):
        update(i)

    while pairs:
        i1, i2 = min(pairs, key=lambda pr: key(mono_lcm(lm[pr[0]], lm[pr[1]])))
        pairs.discard((i1, i2))
        s = _spoly(f[i1], f[i2], key)
        active = sorted(basis, key=lambda i: key(lm[i]))
        r = normal_form(s, [f[i] for i in active], key)
        if r.is_zero():
            continue
        if r.is_constant():
            return [Poly.constant(1, r.nvars)]
        _, lc = r.leading(key)
        r = r.scale(1 / lc)
        f.append(r)
        lm.append(r.leading(key)[0])
        update(len(f) - 1)

    final = interreduce([f[i] for i in basis], key)
    final.sort(key=lambda p: key(p.leading(key)[0]))
    return final


def primitive(p: Poly) -> Poly:
    """Scale to integer coefficients with content 1 and positive grlex-leading coefficient."""
    if p.is_zero():
        return p
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for c in p.terms.values():
        num = gcd(num, c.numerator * den // c.denominator)
    scale = Fraction(den, num)
    if p.terms[max(p.terms, key=grlex_key)] < 0:
        scale = -scale
    return p.scale(scale)


class Ideal:
    """Homogeneous ideal in a named polynomial ring, with cached reduced bases.

    The handle must not be mutated concurrently while a basis is being
    computed; share read-only afterwards.
    """

    def __init__(self, varnames, gens, check_homogeneous: bool = True):
        self.varnames = tuple(varnames)
        cleaned = []
        for g in gens:
            if g.is_zero():
                continue
            if g.nvars != len(self.varnames):
                raise ValidationError("generator has wrong number of variables")
            if check_homogeneous and not g.is_homogeneous():
                raise ValidationError("ideal generators must be homogeneous")
            cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb: dict[str, list[Poly]] = {}

    @staticmethod
    def unit(varnames) -> Ideal:
        return Ideal(varnames, [Poly.constant(1, len(varnames))])

    @staticmethod
    def zero(varnames) -> Ideal:
        return Ideal(varnames, [])

    def groebner(self, order: str = "grevlex") -> list[Poly]:
        if order not in self._gb:
            self._gb[order] = buchberger(list(self.gens), ORDER_KEYS[order])
        return self._gb[order]

    def normal_form(self, f: Poly, order: str = "grevlex") -> Poly:
        return normal_form(f, self.groebner(order), ORDER_KEYS[order])

    def contains_poly(self, f: Poly) -> bool:
        return self.normal_form(f).is_zero()

    def contains(self, other: Ideal) -> bool:
        """True iff self contains `other` as an ideal."""
        return all(self.contains_poly(g) for g in other.gens)

    def equals(self, other: Ideal) -> bool:
        if set(self.gens) == set(other.gens):
            return True
        return self.groebner() == other.groebner()

    def is_zero(self) -> bool:
        return not self.groebner()

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def canonical_generators(self) -> list[Poly]:
        """Reduced basis, content-normalized, sorted for stable output."""
        gens = [primitive(g) for g in self.groebner()]
        gens.sort(key=lambda p: (p.degree(), grlex_key(p.leading(grlex_key)[0])))
        return gens

    def vanishes_at(self, point) -> bool:
        return all(g.evaluate(point) == 0 for g in self.gens)

    def intersect(self, other: Ideal) -> Ideal:
        return ideal_intersect(self, other)


def ideal_contains(big: Ideal, small: Ideal) -> bool:
    if big.varnames != small.varnames:
        raise ValidationError("ideals live in different rings")
    return big.contains(small)


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """Generators of the intersection, via elimination of an auxiliary variable."""
    if I.varnames != J.varnames:
        raise ValidationError("ideals live in different rings")
    # cheap shortcuts keep the elimination runs rare
    if I.is_unit():
        return Ideal(J.varnames, J.gens)
    if J.is_unit():
        return Ideal(I.varnames, I.gens)
    if I.is_zero() or J.is_zero():
        return Ideal.zero(I.varnames)
    if ideal_contains(J, I):
        return Ideal(I.varnames, I.gens)
    if ideal_contains(I, J):
        return Ideal(J.varnames, J.gens)

    n = len(I.varnames)

    def lift(p: Poly, t_exp: int) -> Poly:
        return Poly(n + 1, {(t_exp,) + m: c for m, c in p.terms.items()})

    mixed: list[Poly] = []
    for g in I.gens:
        mixed.append(lift(g, 1))
    for g in J.gens:
        mixed.append(lift(g, 0) - lift(g, 1))
    gb = buchberger(mixed, elimination_key(1))
    kept = [
        Poly(n, {m[1:]: c for m, c in p.terms.items()})
        for p in gb
        if all(m[0] == 0 for m in p.terms)
    ]
    kept = interreduce(kept, grevlex_key)
    kept.sort(key=lambda p: grevlex_key(p.leading(grevlex_key)[0]))
    return Ideal(I.varnames, kept)


def sample_locus_comparison(
    I: Ideal, J: Ideal, points: int = 200, seed: int = 0, box: int = 25
) -> dict:
    """Set-theoretic spot check of two vanishing loci on random projective points.

    Samples points with integer coordinates and compares the membership
    indicators of the two ideals.  Agreement on a sample never proves
    set equality; disagreements are honest witnesses of set difference.
    """
    if I.varnames != J.varnames:
        raise ValidationError("ideals live in different rings")
    rng = random.Random(seed)
    r = len(I.varnames)
    disagreements = []
    agree = 0
    for _ in range(points):
        while True:
            pt = tuple(rng.randint(-box, box) for _ in range(r))
            if any(pt):
                break
        in_i = I.vanishes_at(pt)
        in_j = J.vanishes_at(pt)
        if in_i == in_j:
            agree += 1
        elif len(disagreements) < 5:
            disagreements.append({"point": list(pt), "in_first": in_i, "in_second": in_j})
    return {
        "points": points,
        "agreements": agree,
        "disagreements": points - agree,
        "examples": disagreements,
    }
