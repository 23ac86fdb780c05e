"""Integral closure of monomial ideals via Newton-polyhedron membership.

A monomial x^a lies in the integral closure of I exactly when a lies in
NP(I) = conv(generator exponent vectors) + nonnegative orthant.  For an
ideal generated by pure powers x_{i_l}^{b_{i_l}} this collapses to the
rational inequality  sum_l a_{i_l} / b_{i_l} >= 1;  in general it is an
exact LP feasibility question, decided by the rational phase-1 simplex in
the kernel backend.  No floating point appears anywhere in this module.

Generator enumeration walks the box prod_i [0, M_i], M_i = max exponent of
x_i over the generators.  The box bound is sound: if a is in NP(I) and
a_i > M_i, then a - e_i is also in NP(I), because the convex-combination
part of a contributes at most M_i in coordinate i and the surplus sits in
the free orthant part; hence no minimal generator of the closure exceeds
M in any coordinate.  Within the box, membership is monotone in each
coordinate, so each fiber over a prefix of coordinates is scanned by
binary search and minimality is read off the fiber table.

The n-th power shortcut: NP(I^n) equals NP of the ideal generated by the
n-th powers of the generators, so closure_power(I, n) never expands I^n.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from . import _kernels
from .decompose import IrredComponent, irreducible_decomposition, is_complete_intersection
from .ring import DomainError, Monomial, MonomialIdeal, _check_same_ring


def pure_power_membership(component: IrredComponent, mono: Monomial) -> bool:
    """Closure membership for a pure-power ideal: sum of exps[i]/power[i] >= 1."""
    _check_same_ring(component.as_ideal(), mono)
    total = Fraction(0)
    for i, b in component.powers:
        total += Fraction(mono.exps[i], b)
        if total >= 1:
            return True
    return False


def np_membership(ideal: MonomialIdeal, mono: Monomial) -> bool:
    """Membership of the exponent vector in NP(ideal), by exact feasibility."""
    _check_same_ring(ideal, mono)
    ideal._require_nonzero()
    rows = [g.exps for g in ideal.gens]
    return _kernels.npmember(rows, mono.exps)


def _fiber_minimum_lp(rows, template, last, cap):
    """Smallest t with (template, t at coordinate `last`) in NP, or None."""
    point = list(template)
    point[last] = cap
    if not _kernels.npmember(rows, tuple(point)):
        return None
    lo, hi = 0, cap
    while lo < hi:
        mid = (lo + hi) // 2
        point[last] = mid
        if _kernels.npmember(rows, tuple(point)):
            hi = mid
        else:
            lo = mid + 1
    return lo


def _minimal_newton_points(ideal: MonomialIdeal) -> list[tuple[int, ...]]:
    """Minimal lattice points of NP(ideal) (all lie inside the generator box)."""
    nvars = ideal.ring.nvars
    bounds = ideal.max_exponents()
    support = [i for i in range(nvars) if bounds[i] > 0]
    rows = [g.exps for g in ideal.gens]

    pure_power = all(len(g.support) == 1 for g in ideal.gens)
    if pure_power:
        power_of = {g.support[0]: g.exps[g.support[0]] for g in ideal.gens}

    prefix, last = support[:-1], support[-1]
    cap = bounds[last]

    table: dict[tuple[int, ...], int | None] = {}
    for combo in itertools.product(*(range(bounds[i] + 1) for i in prefix)):
        template = [0] * nvars
        for i, e in zip(prefix, combo):
            template[i] = e
        if pure_power:
            partial = sum(Fraction(template[i], power_of[i]) for i in prefix)
            t = 0 if partial >= 1 else math.ceil((1 - partial) * power_of[last])
        else:
            t = _fiber_minimum_lp(rows, template, last, cap)
        table[combo] = t

    points = []
    for combo, t in table.items():
        if t is None:
            continue
        minimal = True
        for k in range(len(prefix)):
            if combo[k] > 0:
                below = combo[:k] + (combo[k] - 1,) + combo[k + 1 :]
                t_below = table[below]
                if t_below is not None and t_below <= t:
                    minimal = False
                    break
        if minimal:
            exps = [0] * nvars
            for i, e in zip(prefix, combo):
                exps[i] = e
            exps[last] = t
            points.append(tuple(exps))
    return points


def closure_generators(ideal: MonomialIdeal) -> MonomialIdeal:
    """Minimal monomial generators of the integral closure of ``ideal``."""
    ideal._require_nonzero()
    if ideal.is_unit:
        return ideal
    points = _minimal_newton_points(ideal)
    gens = [Monomial(ideal.ring, p) for p in points]
    closed = MonomialIdeal(ideal.ring, gens)
    assert closed.contains_ideal(ideal), "closure must contain the ideal"
    return closed


def closure_power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """Integral closure of I^n, computed from the n-th powers of the
    generators without ever expanding I^n."""
    if n < 1:
        raise ValueError("closure_power needs n >= 1")
    ideal._require_nonzero()
    if ideal.is_unit:
        return ideal
    return closure_generators(ideal.generator_power(n))


def closure_power_ci(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """Closure of I^n for a complete intersection, as the intersection of the
    closures of the component powers.  Valid because ordinary and symbolic
    powers agree for complete intersections, making the closure distribute
    over the irredundant components."""
    if n < 1:
        raise ValueError("closure_power_ci needs n >= 1")
    if not is_complete_intersection(ideal):
        raise DomainError(f"{ideal} is not a complete intersection")
    result = None
    for comp in irreducible_decomposition(ideal):
        closed = closure_power(comp.as_ideal(), n)
        result = closed if result is None else result.intersect(closed)
    return result
