"""Closed-form v-number and regularity formulas with applicability verdicts.

Every formula here has sharp hypotheses (sorted exponents, coprime
generators, block patterns, ...).  Misuse must be loud, so each operation
returns a :class:`FormulaResult` carrying an applicability verdict instead
of silently computing on out-of-hypothesis input.  Results tagged
``exact`` are cross-checked against the brute-force oracle in the test
suite; ``upper-bound``/``lower-bound`` results bound the oracle value;
``not-applicable`` results carry no value.

Regularity is never computed from free resolutions.  It enters only
through cited closed forms (equigenerated irreducible ideals and the
two-block product family) and through interval bounds; the gap-family
constructor emits its regularity side as a labelled prediction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .closure import closure_power
from .decompose import (
    IrredComponent,
    MonomialPrime,
    irreducible_decomposition,
    is_complete_intersection,
)
from .ring import DomainError, Monomial, MonomialIdeal, Ring
from .vnum import Witness, v_number

EXACT = "exact"
UPPER_BOUND = "upper-bound"
LOWER_BOUND = "lower-bound"
NOT_APPLICABLE = "not-applicable"


class NotApplicableError(DomainError):
    """The input does not satisfy a formula's hypotheses."""


@dataclass(frozen=True)
class FormulaResult:
    value: int | None
    applicability: str
    citation: str
    witness: Monomial | None = None
    prime: MonomialPrime | None = None
    tags: tuple[str, ...] = ()
    note: str = ""

    @property
    def is_exact(self) -> bool:
        return self.applicability == EXACT


def _na(citation: str, note: str) -> FormulaResult:
    return FormulaResult(None, NOT_APPLICABLE, citation, note=note)


def _ceil(x) -> int:
    return math.ceil(Fraction(x))


# ---------------------------------------------------------------------------
# Technical lemmas, exposed for the randomized verification suites.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CeilStepCheck:
    """Both sides of the two ceiling inequalities used by the closure proofs:
    with A >= 1, -1 < c <= 0, 0 <= s <= 1, 1 <= t <= L,
    (1) ceil((L+c)A - s) > ceil((L-1+c)A - s) and
    (2) ceil((L+c)A - s) >= (L - t) + ceil((c+t)A - s)."""

    lhs: int
    rhs_strict: int
    rhs_shift: int

    @property
    def holds(self) -> bool:
        return self.lhs > self.rhs_strict and self.lhs >= self.rhs_shift


def ceil_step(L: int, t: int, A, c, s) -> CeilStepCheck:
    A, c, s = Fraction(A), Fraction(c), Fraction(s)
    if L < 1 or not 1 <= t <= L:
        raise DomainError(f"need 1 <= t <= L with L >= 1, got L={L}, t={t}")
    if A < 1 or not (-1 < c <= 0) or not (0 <= s <= 1):
        raise DomainError(f"need A >= 1, -1 < c <= 0, 0 <= s <= 1; got {A}, {c}, {s}")
    lhs = _ceil((L + c) * A - s)
    rhs_strict = _ceil((L - 1 + c) * A - s)
    rhs_shift = (L - t) + _ceil((c + t) * A - s)
    return CeilStepCheck(lhs, rhs_strict, rhs_shift)


def b_mod_helper(a: int, b: int) -> bool:
    """b >= ceil(b/a) + 1, which holds exactly when a >= 2 and b >= 2."""
    if a < 1 or b < 1:
        raise DomainError("need positive integers")
    result = b >= _ceil(Fraction(b, a)) + 1
    assert result == (a >= 2 and b >= 2)
    return result


# ---------------------------------------------------------------------------
# Complete-intersection specs and the ordinary-power formulas.
# ---------------------------------------------------------------------------


def complete_intersection_primes(ideal: MonomialIdeal) -> list[MonomialPrime]:
    """Associated primes of a complete intersection: one variable chosen from
    the support of each generator, in all combinations."""
    if not is_complete_intersection(ideal):
        raise NotApplicableError(f"{ideal} is not a complete intersection")
    import itertools

    primes = []
    for combo in itertools.product(*(g.support for g in ideal.gens)):
        primes.append(MonomialPrime(ideal.ring, frozenset(combo)))
    primes.sort(key=MonomialPrime.sort_key)
    return primes


@dataclass(frozen=True)
class CIIdealSpec:
    """A complete intersection with a chosen associated prime: one variable
    y_i from the support of each generator u_i, with deg u_1 = alpha."""

    ideal: MonomialIdeal
    prime: MonomialPrime
    ys: tuple[int, ...]

    @property
    def gens(self) -> tuple[Monomial, ...]:
        return self.ideal.gens

    @property
    def r(self) -> int:
        return self.ideal.mu

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal, prime: MonomialPrime | None = None) -> "CIIdealSpec":
        if not ideal.is_proper or not is_complete_intersection(ideal):
            raise NotApplicableError(f"{ideal} is not a proper complete intersection")
        gens = ideal.gens  # canonical order puts a minimum-degree generator first
        if prime is None:
            ys = tuple(g.support[0] for g in gens)
            prime = MonomialPrime(ideal.ring, frozenset(ys))
        else:
            ys_list = []
            for g in gens:
                hits = [i for i in g.support if i in prime.vars]
                if len(hits) != 1:
                    raise DomainError(
                        f"{prime} does not pick exactly one variable from {g}"
                    )
                ys_list.append(hits[0])
            if len(prime.vars) != len(gens):
                raise DomainError(f"{prime} has the wrong height for {ideal}")
            ys = tuple(ys_list)
        return cls(ideal, prime, ys)

    def g_monomial(self) -> Monomial:
        """prod u_i / prod y_i, the fixed divisor of every witness."""
        exps = [0] * self.ideal.ring.nvars
        for g in self.gens:
            for i, e in enumerate(g.exps):
                exps[i] += e
        for y in self.ys:
            exps[y] -= 1
        return Monomial(self.ideal.ring, tuple(exps))


def _coerce_ci(spec_or_ideal, prime=None) -> CIIdealSpec:
    if isinstance(spec_or_ideal, CIIdealSpec):
        return spec_or_ideal
    return CIIdealSpec.from_ideal(spec_or_ideal, prime)


def v_ci(spec_or_ideal, prime: MonomialPrime | None = None) -> FormulaResult:
    """v(I) = sum deg u_i - r for a complete intersection, with witness
    prod u_i / prod y_i; exact at every associated prime."""
    try:
        spec = _coerce_ci(spec_or_ideal, prime)
    except NotApplicableError as exc:
        return _na("ci", str(exc))
    value = sum(g.degree for g in spec.gens) - spec.r
    return FormulaResult(value, EXACT, "ci", witness=spec.g_monomial(), prime=spec.prime)


def v_ci_power(spec_or_ideal, n: int, prime: MonomialPrime | None = None) -> FormulaResult:
    """v(I^n) = n*alpha(I) + v(I) - alpha(I) for a complete intersection.

    Witness from the constructive proof: (u_1^n / y_1) * prod_{i>=2} u_i / y_i.
    """
    if n < 1:
        raise DomainError("power formulas need n >= 1")
    try:
        spec = _coerce_ci(spec_or_ideal, prime)
    except NotApplicableError as exc:
        return _na("ci-power", str(exc))
    alpha = spec.ideal.alpha()
    base = sum(g.degree for g in spec.gens) - spec.r
    value = n * alpha + base - alpha
    exps = [0] * spec.ideal.ring.nvars
    for i, e in enumerate(spec.gens[0].exps):
        exps[i] += n * e
    for g in spec.gens[1:]:
        for i, e in enumerate(g.exps):
            exps[i] += e
    for y in spec.ys:
        exps[y] -= 1
    witness = Monomial(spec.ideal.ring, tuple(exps))
    return FormulaResult(value, EXACT, "ci-power", witness=witness, prime=spec.prime)


def v_primary_min(ideal: MonomialIdeal) -> FormulaResult:
    """v of a primary monomial ideal: the minimum of v over its irreducible
    components (each component being a pure-power complete intersection)."""
    ideal._require_proper()
    decomp = irreducible_decomposition(ideal)
    radicals = {c.radical() for c in decomp}
    if len(radicals) != 1:
        return _na("primary-min", f"{ideal} has {len(radicals)} associated primes")
    best_value = None
    best_comp = None
    for comp in decomp:
        value = sum(e for _, e in comp.powers) - len(comp.powers)
        if best_value is None or value < best_value:
            best_value = value
            best_comp = comp
    exps = [0] * ideal.ring.nvars
    for i, e in best_comp.powers:
        exps[i] = e - 1
    witness = Monomial(ideal.ring, tuple(exps))
    prime = next(iter(radicals))
    return FormulaResult(best_value, EXACT, "primary-min", witness=witness, prime=prime)


# ---------------------------------------------------------------------------
# Irreducible (pure-power) ideals: closures of powers.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IrreducibleSpec:
    """A pure-power ideal presented as its sorted exponent list a_1 <= ... <= a_k,
    with the variable indices carrying them."""

    exponents: tuple[int, ...]
    ring: Ring = None
    indices: tuple[int, ...] = None

    def __post_init__(self):
        exps = tuple(self.exponents)
        if not exps or any(e < 1 for e in exps):
            raise DomainError("exponents must be positive")
        if list(exps) != sorted(exps):
            raise DomainError(f"exponents must be sorted ascending: {exps}")
        object.__setattr__(self, "exponents", exps)
        if self.ring is None:
            k = len(exps)
            object.__setattr__(self, "ring", Ring([f"x{i+1}" for i in range(k)]))
            object.__setattr__(self, "indices", tuple(range(k)))
        elif self.indices is None or len(self.indices) != len(exps):
            raise DomainError("need one variable index per exponent")

    @property
    def k(self) -> int:
        return len(self.exponents)

    @property
    def alpha(self) -> int:
        return self.exponents[0]

    @property
    def delta(self) -> int:
        return self.exponents[-1]

    def ideal(self) -> MonomialIdeal:
        gens = []
        for i, a in zip(self.indices, self.exponents):
            exps = [0] * self.ring.nvars
            exps[i] = a
            gens.append(Monomial(self.ring, tuple(exps)))
        return MonomialIdeal(self.ring, gens)

    def component(self) -> IrredComponent:
        return IrredComponent.from_ideal(self.ideal())

    def radical(self) -> MonomialPrime:
        return MonomialPrime(self.ring, frozenset(self.indices))

    def monomial(self, exps_by_position: Sequence[int]) -> Monomial:
        vec = [0] * self.ring.nvars
        for i, e in zip(self.indices, exps_by_position):
            vec[i] = e
        return Monomial(self.ring, tuple(vec))

    @classmethod
    def detect(cls, ideal: MonomialIdeal) -> "IrreducibleSpec | None":
        pairs = []
        for g in ideal.gens:
            if len(g.support) != 1:
                return None
            i = g.support[0]
            pairs.append((g.exps[i], i))
        pairs.sort()
        return cls(
            tuple(e for e, _ in pairs), ideal.ring, tuple(i for _, i in pairs)
        )


def v_closure_principal(a1: int, n: int) -> FormulaResult:
    """Principal ideal <x^a1>: powers are integrally closed and
    v(closure(I^n)) = n*a1 - 1."""
    if a1 < 1 or n < 1:
        raise DomainError("need a1, n >= 1")
    return FormulaResult(n * a1 - 1, EXACT, "principal")


def v_closure_irred_bounds(spec: IrreducibleSpec, n: int) -> tuple[int, int]:
    """[lower, upper] for v(closure(I^n)) of a pure-power ideal with k >= 2:
    n*alpha + ceil(a2/alpha - a2/delta) - 1  <=  v  <=  n*alpha + ceil(delta/alpha) - 2.
    """
    if n < 1:
        raise DomainError("need n >= 1")
    if spec.k < 2:
        raise NotApplicableError(
            "bounds need k >= 2; principal ideals have v = n*a1 - 1"
        )
    alpha, delta = spec.alpha, spec.delta
    a2 = spec.exponents[1]
    lower = n * alpha + _ceil(Fraction(a2, alpha) - Fraction(a2, delta)) - 1
    upper = n * alpha + _ceil(Fraction(delta, alpha)) - 2
    assert lower <= upper
    if spec.k == 2:
        assert lower == upper, "for k = 2 the two bounds coincide"
    return lower, upper


def _two_block_upper_witness(spec: IrreducibleSpec, n: int) -> Monomial:
    # x_1^(n*alpha - 1) * x_k^(ceil(delta/alpha) - 1) realizes the upper bound.
    exps = [0] * spec.k
    exps[0] = n * spec.alpha - 1
    exps[-1] += _ceil(Fraction(spec.delta, spec.alpha)) - 1
    return spec.monomial(exps)


def v_closure_irred_two_block(spec: IrreducibleSpec, n: int) -> FormulaResult:
    """Exact v(closure(I^n)) = n*alpha + ceil(delta/alpha) - 2 when the sorted
    exponents take at most two distinct values (includes every k = 2 ideal
    and every equigenerated ideal)."""
    if n < 1:
        raise DomainError("need n >= 1")
    if spec.k < 2:
        return _na("irreducible-two-block", "k = 1 is the principal case")
    if len(set(spec.exponents)) > 2:
        return _na(
            "irreducible-two-block",
            f"exponents {spec.exponents} take more than two distinct values",
        )
    value = n * spec.alpha + _ceil(Fraction(spec.delta, spec.alpha)) - 2
    tags = ("equigenerated",) if spec.alpha == spec.delta else ()
    return FormulaResult(
        value,
        EXACT,
        "irreducible-two-block",
        witness=_two_block_upper_witness(spec, n),
        prime=spec.radical(),
        tags=tags,
    )


# ---------------------------------------------------------------------------
# Height-three pure-power ideals: the f_m witness family.
# ---------------------------------------------------------------------------


def _fm_exponents(a1: int, a2: int, a3: int, m: int) -> tuple[int, int, int]:
    e2 = _ceil(Fraction(m * a2, a1))
    frac = Fraction(m * a2, a1) - e2 + 1
    e3 = _ceil(Fraction(a3, a2) * frac)
    return (a1 - m, e2 - 1, e3 - 1)


def f_m_witness(
    a1: int, a2: int, a3: int, m: int, spec: IrreducibleSpec | None = None
) -> Monomial:
    """The m-th standard witness for the closure of <x1^a1, x2^a2, x3^a3>:
    f_m = x1^(a1-m) * x2^(ceil(m*a2/a1)-1)
        * x3^(ceil((a3/a2)*(m*a2/a1 - ceil(m*a2/a1) + 1))-1),  1 <= m <= a1.
    Its colon against the closure is the full radical."""
    if not 1 <= a1 <= a2 <= a3:
        raise DomainError(f"need 1 <= a1 <= a2 <= a3, got {(a1, a2, a3)}")
    if not 1 <= m <= a1:
        raise DomainError(f"need 1 <= m <= a1, got m={m}")
    if spec is None:
        spec = IrreducibleSpec((a1, a2, a3))
    return spec.monomial(_fm_exponents(a1, a2, a3, m))


def v_closure_3gen(
    a1: int, a2: int, a3: int, n: int, spec: IrreducibleSpec | None = None
) -> FormulaResult:
    """Exact v(closure(I^n)) for I = <x1^a1, x2^a2, x3^a3>, a1 <= a2 <= a3.

    a1 = 1:  v = n + a2 + ceil(a3/a2) - 3.
    a1 >= 2: v = (n-1)*a1 + deg f_l where l minimizes deg f_m over
             1 <= m <= a1 - 1 (smallest l on ties).  Tags record which
             shortcut cases fired.
    """
    if not 1 <= a1 <= a2 <= a3:
        raise DomainError(f"need 1 <= a1 <= a2 <= a3, got {(a1, a2, a3)}")
    if n < 1:
        raise DomainError("need n >= 1")
    if spec is None:
        spec = IrreducibleSpec((a1, a2, a3))
    prime = spec.radical()
    if a1 == 1:
        value = n + a2 + _ceil(Fraction(a3, a2)) - 3
        witness = spec.monomial((n - 1, a2 - 1, _ceil(Fraction(a3, a2)) - 1))
        return FormulaResult(
            value, EXACT, "threegen", witness=witness, prime=prime, tags=("a1=1",)
        )
    degs = {m: sum(_fm_exponents(a1, a2, a3, m)) for m in range(1, a1)}
    l = min(degs, key=lambda m: (degs[m], m))
    value = (n - 1) * a1 + degs[l]
    tags = []
    if a2 % a1 in (0, 1):
        tags.append("a2-mod-a1-in-{0,1}")
        assert degs[1] == degs[l], "shortcut case must agree with the argmin"
    if _ceil(Fraction(a2, a1)) - 1 == _ceil(Fraction(a2, a1) - Fraction(a2, a3)):
        tags.append("lower-bound-tight")
        assert value == n * a1 + _ceil(Fraction(a2, a1)) - 2
    if _ceil(Fraction((a1 - 1) * a3, a1 * a2)) == 1:
        tags.append("small-a3-ratio")
        assert degs[1] == degs[l]
    fl = _fm_exponents(a1, a2, a3, l)
    witness = spec.monomial(((n - 1) * a1 + fl[0], fl[1], fl[2]))
    return FormulaResult(
        value, EXACT, "threegen", witness=witness, prime=prime,
        tags=(f"l={l}",) + tuple(tags),
    )


# ---------------------------------------------------------------------------
# Complete intersections: closures of powers.
# ---------------------------------------------------------------------------


def icci_upper_witness(
    ideal: MonomialIdeal,
    component: IrredComponent,
    n: int,
    closure: MonomialIdeal | None = None,
) -> Witness:
    """Constructive witness bounding v_P(closure(I^n)) for a complete
    intersection I and an irredundant component with radical P.

    With the component picking x_{i,1}^(alpha_{i,1}) out of each generator
    u_i (generators ordered so deg u_1 = alpha(I)), the witness is

        x_{1,1}^(n*alpha_{1,1} - 1) * x_{l,1}^(ceil(alpha_{l,1}/alpha_{1,1}) - 1)
        * prod_{j>=2} x_{1,j}^(n*alpha_{1,j})
        * prod_{i>=2, |supp u_i|>=2} prod_{j>=2} x_{i,j}^(ceil(alpha_{i,j}/alpha_{1,1})),

    where alpha_{l,1} is the largest component exponent.  The witness is
    verified against the closure at construction.
    """
    if n < 1:
        raise DomainError("need n >= 1")
    if not is_complete_intersection(ideal):
        raise DomainError(f"{ideal} is not a complete intersection")
    comp_map = component.exponent_map
    ring = ideal.ring
    picks = []  # (variable in component, its exponent, generator)
    for g in ideal.gens:
        hits = [i for i in g.support if i in comp_map]
        if len(hits) != 1 or comp_map[hits[0]] != g.exps[hits[0]]:
            raise DomainError(f"{component} is not an irredundant component pick of {ideal}")
        picks.append((hits[0], g.exps[hits[0]], g))
    exps = [0] * ring.nvars
    x11, a11, u1 = picks[0]
    exps[x11] += n * a11 - 1
    l = max(range(len(picks)), key=lambda i: (picks[i][1], -i))
    xl1, al1, _ = picks[l]
    exps[xl1] += _ceil(Fraction(al1, a11)) - 1
    for j in u1.support:
        if j != x11:
            exps[j] += n * u1.exps[j]
    for xi1, _, g in picks[1:]:
        for j in g.support:
            if j != xi1:
                exps[j] += _ceil(Fraction(g.exps[j], a11))
    f = Monomial(ring, tuple(exps))
    if closure is None:
        closure = closure_power(ideal, n)
    return Witness.checked(closure, f, component.radical())


@dataclass(frozen=True)
class Height2Spec:
    """Height-two complete intersection u1 = (x_1 ... x_q)^alpha,
    u2 = y_1^beta_1 ... y_l^beta_l with 1 <= alpha <= beta_1 <= ... <= beta_l
    and q <= l, all variables distinct."""

    q: int
    alpha: int
    betas: tuple[int, ...]
    ring: Ring = None
    x_indices: tuple[int, ...] = None
    y_indices: tuple[int, ...] = None

    def __post_init__(self):
        betas = tuple(self.betas)
        object.__setattr__(self, "betas", betas)
        if self.q < 1 or self.alpha < 1 or not betas:
            raise DomainError("need q >= 1, alpha >= 1 and a nonempty beta list")
        if list(betas) != sorted(betas) or betas[0] < self.alpha:
            raise NotApplicableError(
                f"need alpha <= beta_1 <= ... <= beta_l, got alpha={self.alpha}, betas={betas}"
            )
        if self.q > len(betas):
            raise NotApplicableError(f"need q <= l, got q={self.q}, l={len(betas)}")
        if self.ring is None:
            names = [f"x{i+1}" for i in range(self.q)] + [
                f"y{j+1}" for j in range(len(betas))
            ]
            object.__setattr__(self, "ring", Ring(names))
            object.__setattr__(self, "x_indices", tuple(range(self.q)))
            object.__setattr__(
                self, "y_indices", tuple(range(self.q, self.q + len(betas)))
            )
        indices = set(self.x_indices) | set(self.y_indices)
        if len(indices) != self.q + len(betas):
            raise DomainError("variable blocks must be disjoint")

    @property
    def l(self) -> int:
        return len(self.betas)

    def ideal(self) -> MonomialIdeal:
        exps1 = [0] * self.ring.nvars
        for i in self.x_indices:
            exps1[i] = self.alpha
        exps2 = [0] * self.ring.nvars
        for j, b in zip(self.y_indices, self.betas):
            exps2[j] = b
        return MonomialIdeal(
            self.ring,
            [Monomial(self.ring, tuple(exps1)), Monomial(self.ring, tuple(exps2))],
        )

    @classmethod
    def detect(cls, ideal: MonomialIdeal) -> "Height2Spec | None":
        if ideal.mu != 2:
            return None
        for u1, u2 in (ideal.gens, ideal.gens[::-1]):
            exps = {u1.exps[i] for i in u1.support}
            if len(exps) != 1:
                continue
            alpha = exps.pop()
            q = len(u1.support)
            pairs = sorted((u2.exps[j], j) for j in u2.support)
            betas = tuple(b for b, _ in pairs)
            if betas[0] < alpha or q > len(betas):
                continue
            return cls(
                q,
                alpha,
                betas,
                ideal.ring,
                u1.support,
                tuple(j for _, j in pairs),
            )
        return None


def v_closure_h2_product(spec: Height2Spec, n: int) -> FormulaResult:
    """Exact, at every associated prime:
    v(closure(I^n)) = n*q*alpha + sum_j ceil(beta_j/alpha) - 2.
    When alpha = 1 the closure filtration and the ordinary powers share
    their v-numbers, recorded as a tag."""
    if n < 1:
        raise DomainError("need n >= 1")
    value = n * spec.q * spec.alpha + sum(
        _ceil(Fraction(b, spec.alpha)) for b in spec.betas
    ) - 2
    # Witness at the canonical prime <x_1, y_1>: the component-pick witness.
    exps = [0] * spec.ring.nvars
    exps[spec.x_indices[0]] = n * spec.alpha - 1
    for i in spec.x_indices[1:]:
        exps[i] = n * spec.alpha
    exps[spec.y_indices[0]] = _ceil(Fraction(spec.betas[0], spec.alpha)) - 1
    for j, b in zip(spec.y_indices[1:], spec.betas[1:]):
        exps[j] = _ceil(Fraction(b, spec.alpha))
    witness = Monomial(spec.ring, tuple(exps))
    prime = MonomialPrime(
        spec.ring, frozenset({spec.x_indices[0], spec.y_indices[0]})
    )
    tags = ("matches-ordinary-power",) if spec.alpha == 1 else ()
    return FormulaResult(value, EXACT, "h2-product", witness=witness, prime=prime, tags=tags)


def v_closure_h2_square_block(spec: Height2Spec, n: int) -> FormulaResult:
    """u1 = (x_1...x_q)^alpha, u2 = (y_1...y_q)^alpha: here regularity is
    known too: reg(S/closure(I^n)) = v(closure(I^n)) = n*q*alpha + q - 2."""
    if len(set(spec.betas)) != 1 or spec.betas[0] != spec.alpha or spec.l != spec.q:
        return _na("h2-square-block", "needs u2 = (y_1...y_q)^alpha")
    result = v_closure_h2_product(spec, n)
    assert result.value == n * spec.q * spec.alpha + spec.q - 2
    return FormulaResult(
        result.value,
        EXACT,
        "h2-square-block",
        witness=result.witness,
        prime=result.prime,
        tags=result.tags + ("reg-equals-v",),
    )


def v_closure_h2_split(
    alpha: int, betas: Sequence[int], n: int, ring: Ring | None = None
) -> FormulaResult:
    """u1 = x^alpha, u2 = y_1^beta_1 ... y_l^beta_l with l >= 2 and
    sum beta_j = alpha (equigenerated, u1 a pure power).

    Always: v(closure(I^n)) >= n*alpha.  If some 2*beta_j >= alpha the bound
    is attained, with witness x * y_j^(n*beta_j - 1) * prod_{i != j} y_i^(n*beta_i).
    """
    if n < 1:
        raise DomainError("need n >= 1")
    betas = tuple(betas)
    if len(betas) < 2:
        return _na("h2-split", "needs l >= 2")
    if any(b < 1 for b in betas):
        raise DomainError("weights must be positive")
    if sum(betas) != alpha:
        return _na("h2-split", f"needs sum(betas) == alpha, got {sum(betas)} != {alpha}")
    if ring is None:
        ring = Ring(["x"] + [f"y{j+1}" for j in range(len(betas))])
    value = n * alpha
    winners = [j for j, b in enumerate(betas) if 2 * b >= alpha]
    if not winners:
        return FormulaResult(value, LOWER_BOUND, "h2-split")
    j = winners[0]
    exps = [0] * ring.nvars
    exps[0] = 1
    for i, b in enumerate(betas):
        exps[1 + i] = n * b - 1 if i == j else n * b
    witness = Monomial(ring, tuple(exps))
    prime = MonomialPrime(ring, frozenset({0, 1 + j}))
    return FormulaResult(value, EXACT, "h2-split", witness=witness, prime=prime)


def split_ideal(alpha: int, betas: Sequence[int]) -> MonomialIdeal:
    """The ideal <x^alpha, y_1^beta_1 ... y_l^beta_l> on a fresh ring."""
    betas = tuple(betas)
    ring = Ring(["x"] + [f"y{j+1}" for j in range(len(betas))])
    exps1 = [0] * ring.nvars
    exps1[0] = alpha
    exps2 = [0] * ring.nvars
    for j, b in enumerate(betas):
        exps2[1 + j] = b
    return MonomialIdeal(
        ring, [Monomial(ring, tuple(exps1)), Monomial(ring, tuple(exps2))]
    )


# ---------------------------------------------------------------------------
# Named instance families.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GapInstance:
    """Height-two equigenerated complete intersection whose regularity/v gap
    is pinned to a - 1 for every power: I = <x1^alpha, x_{a+2}^(alpha-a) x2 ... x_{a+1}>
    with alpha = 2a + 1.  v(closure(I^n)) = n*alpha is computed here; the
    regularity side reg(S/closure(I^n)) = n*alpha + a - 1 is a cited
    prediction, not computed."""

    a: int
    ideal: MonomialIdeal
    alpha: int

    def v_closure_value(self, n: int) -> int:
        return n * self.alpha

    def reg_prediction(self, n: int) -> int:
        return n * self.alpha + self.a - 1

    @property
    def predicted_gap(self) -> int:
        return self.a - 1


def gap_instance(a: int) -> GapInstance:
    if a < 1:
        raise DomainError("need a >= 1")
    alpha = 2 * a + 1
    ring = Ring([f"x{i+1}" for i in range(a + 2)])
    exps1 = [0] * ring.nvars
    exps1[0] = alpha
    exps2 = [0] * ring.nvars
    exps2[a + 1] = alpha - a
    for i in range(1, a + 1):
        exps2[i] = 1
    ideal = MonomialIdeal(
        ring, [Monomial(ring, tuple(exps1)), Monomial(ring, tuple(exps2))]
    )
    return GapInstance(a, ideal, alpha)


def wog_ideal(p1: int, p2: int, weights: Sequence[int]) -> MonomialIdeal:
    """Edge ideal of a weighted oriented complete bipartite graph with all
    edges x_i -> y_j: generated by x_i * y_j^w_j, which equals
    <x_1,...,x_p1> intersect <y_j^w_j>."""
    weights = tuple(weights)
    if p1 < 1 or p2 < 1 or len(weights) != p2 or any(w < 1 for w in weights):
        raise DomainError("need p1, p2 >= 1 and one positive weight per y vertex")
    ring = Ring([f"x{i+1}" for i in range(p1)] + [f"y{j+1}" for j in range(p2)])
    gens = []
    for i in range(p1):
        for j in range(p2):
            exps = [0] * ring.nvars
            exps[i] = 1
            exps[p1 + j] = weights[j]
            gens.append(Monomial(ring, tuple(exps)))
    return MonomialIdeal(ring, gens)


def wog_v_closure(p1: int, p2: int, weights: Sequence[int], n: int) -> FormulaResult:
    """v(closure(I(D)^n)) = n*alpha(I(D)) - 1 with alpha(I(D)) = 1 + min weight."""
    if n < 1:
        raise DomainError("need n >= 1")
    weights = tuple(weights)
    if p1 < 1 or p2 < 1 or len(weights) != p2 or any(w < 1 for w in weights):
        raise DomainError("need p1, p2 >= 1 and one positive weight per y vertex")
    alpha = 1 + min(weights)
    return FormulaResult(
        n * alpha - 1, EXACT, "complete-bipartite-weighted", tags=(f"alpha={alpha}",)
    )


# ---------------------------------------------------------------------------
# Tables.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GapRow:
    n: int
    v_power: int
    v_closure: int | None
    gap: int | None
    closure_formula: int | None = None
    closure_formula_name: str | None = None
    closure_oracle: int | None = None
    match: bool | None = None
    skipped: bool = False

    @property
    def closure_source(self) -> str:
        if self.closure_formula is not None:
            return self.closure_formula_name
        return "oracle"


def _closure_formula_dispatch(ideal: MonomialIdeal, n: int) -> FormulaResult | None:
    """An exact closed form for v(closure(I^n)) of a complete intersection,
    if one of the implemented families matches."""
    irr = IrreducibleSpec.detect(ideal)
    if irr is not None:
        if irr.k == 1:
            return v_closure_principal(irr.alpha, n)
        if irr.k == 3:
            a1, a2, a3 = irr.exponents
            return v_closure_3gen(a1, a2, a3, n, spec=irr)
        result = v_closure_irred_two_block(irr, n)
        return result if result.is_exact else None
    h2 = Height2Spec.detect(ideal)
    if h2 is not None:
        return v_closure_h2_product(h2, n)
    gens = ideal.gens
    if len(gens) == 2 and len(gens[0].support) == 1:
        alpha = gens[0].exps[gens[0].support[0]]
        pairs = sorted((gens[1].exps[j], j) for j in gens[1].support)
        betas = tuple(b for b, _ in pairs)
        if len(betas) >= 2 and sum(betas) == alpha:
            result = v_closure_h2_split(alpha, betas, n, ring=ideal.ring)
            if result.is_exact:
                return result
    return None


def _oracle_cost_estimate(ideal: MonomialIdeal, n: int) -> int:
    est = ideal.mu
    for b in ideal.max_exponents():
        est *= n * b + 2
        if est > 10**12:
            return 10**12
    return est


def vnum_gap_table(
    spec_or_ideal,
    n_max: int,
    budget_ops: int | None = None,
    oracle: bool = True,
) -> list[GapRow]:
    """Rows (n, v(I^n), v(closure(I^n)), gap) for a complete intersection.

    v(I^n) comes from the exact power formula.  For the closure side, an
    exact closed form is used when one of the implemented families matches,
    and the brute-force oracle value is computed alongside whenever
    ``oracle`` is set and the deterministic cost estimate fits
    ``budget_ops``; when both are present the row carries a match flag.
    Rows with neither value are marked skipped.  Each valued row checks
    v(closure(I^n)) <= v(I^n), strictly when the minimum-degree generator
    and some other generator are both non-squarefree.
    """
    spec = _coerce_ci(spec_or_ideal)  # raises NotApplicableError if not CI
    ideal = spec.ideal
    gens = ideal.gens
    strict = any(e >= 2 for e in gens[0].exps) and any(
        any(e >= 2 for e in g.exps) for g in gens[1:]
    )
    rows = []
    for n in range(1, n_max + 1):
        v_pow = v_ci_power(spec, n).value
        formula = _closure_formula_dispatch(ideal, n)
        formula_value = formula.value if formula is not None else None
        formula_name = formula.citation if formula is not None else None
        oracle_value = None
        if oracle and (
            budget_ops is None or _oracle_cost_estimate(ideal, n) <= budget_ops
        ):
            oracle_value = v_number(closure_power(ideal, n)).v
        v_clo = formula_value if formula_value is not None else oracle_value
        match = None
        if formula_value is not None and oracle_value is not None:
            match = formula_value == oracle_value
        if v_clo is None:
            rows.append(
                GapRow(n, v_pow, None, None, None, None, None, None, skipped=True)
            )
            continue
        assert v_clo <= v_pow, "closure v-number exceeding the power v-number"
        if strict:
            assert v_clo <= v_pow - 1, "expected a strict closure gap"
        rows.append(
            GapRow(
                n,
                v_pow,
                v_clo,
                v_pow - v_clo,
                formula_value,
                formula_name,
                oracle_value,
                match,
            )
        )
    return rows


@dataclass(frozen=True)
class RegGapInterval:
    """Bounds for reg(S/closure(I^n)) - v(closure(I^n)) of a pure-power ideal;
    for equigenerated input the gap is exactly zero with
    reg = v = n*alpha - 1."""

    lower: int
    upper: int
    reg_equals_v: bool = False
    value: int | None = None

    def __post_init__(self):
        if self.lower > self.upper:
            raise DomainError("empty interval")


def reg_gap_bounds(spec: IrreducibleSpec, n: int, ambient_nvars: int | None = None) -> RegGapInterval:
    """Interval for reg(S/closure(I^n)) - v(closure(I^n)), k >= 2:
    [0, (delta-alpha)*n + dim S/I] when a2 = delta, one less when a2 < delta,
    where dim S/I = (#ambient variables) - k."""
    if n < 1:
        raise DomainError("need n >= 1")
    if spec.k < 2:
        raise NotApplicableError("regularity gap bounds need k >= 2")
    if ambient_nvars is None:
        ambient_nvars = spec.ring.nvars
    dim = ambient_nvars - spec.k
    if dim < 0:
        raise DomainError("ambient ring smaller than the variable set")
    alpha, delta = spec.alpha, spec.delta
    if alpha == delta:
        return RegGapInterval(0, 0, reg_equals_v=True, value=n * alpha - 1)
    a2 = spec.exponents[1]
    upper = (delta - alpha) * n + dim - (0 if a2 == delta else 1)
    return RegGapInterval(0, upper)


@dataclass(frozen=True)
class AlphaRow:
    n: int
    alpha_closure: int
    ratio: Fraction


def alpha_limit_table(ideal: MonomialIdeal, n_max: int) -> list[AlphaRow]:
    """(n, alpha(closure(I^n)), alpha/n) for n = 1..n_max.

    Checks alpha(closure(I^n)) <= n*alpha(I) and subadditivity across the
    table - the finite shadow of alpha(closure(I^n))/n converging to
    alpha(I)."""
    if n_max < 1:
        raise DomainError("need n_max >= 1")
    ideal._require_proper()
    alpha1 = ideal.alpha()
    values = []
    for n in range(1, n_max + 1):
        a = closure_power(ideal, n).alpha()
        assert a <= n * alpha1
        values.append(a)
    for total in range(2, n_max + 1):
        for i in range(1, total):
            assert values[total - 1] <= values[i - 1] + values[total - i - 1], (
                "alpha of closure powers must be subadditive"
            )
    return [
        AlphaRow(n, values[n - 1], Fraction(values[n - 1], n))
        for n in range(1, n_max + 1)
    ]
