"""Named verification suites: every closed-form formula against the
brute-force oracle on randomized and fixed instance families.

Each suite returns a :class:`SuiteReport` with a list of failure strings
(empty means the suite passed) so the CLI can map results to exit codes
and the acceptance tests can reuse the same drivers with their own
parameters.  All randomness flows through a seeded ``random.Random``.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import formulas
from .closure import closure_generators, closure_power, closure_power_ci
from .decompose import associated_primes
from .formulas import (
    CIIdealSpec,
    Height2Spec,
    IrreducibleSpec,
    b_mod_helper,
    ceil_step,
    f_m_witness,
    gap_instance,
    icci_upper_witness,
    split_ideal,
    v_ci,
    v_ci_power,
    v_closure_3gen,
    v_closure_h2_product,
    v_closure_h2_split,
    v_closure_irred_two_block,
    wog_ideal,
    wog_v_closure,
)
from .ring import Monomial, MonomialIdeal, Ring
from .vnum import check_witness, v_number


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(message)


# ---------------------------------------------------------------------------
# Random instance families.
# ---------------------------------------------------------------------------


def random_ci_ideal(
    rng: random.Random, max_gens: int = 3, max_vars: int = 5, max_exp: int = 3
) -> MonomialIdeal:
    """Random complete intersection: pairwise disjoint supports, so the
    height automatically equals the number of generators."""
    ring = Ring([f"x{i+1}" for i in range(max_vars)])
    r = rng.randint(1, max_gens)
    vars_pool = list(range(max_vars))
    rng.shuffle(vars_pool)
    sizes = [1] * r
    spare = rng.randint(0, max_vars - r)
    for _ in range(spare):
        sizes[rng.randrange(r)] += 1
    gens = []
    pos = 0
    for s in sizes:
        exps = [0] * max_vars
        for i in vars_pool[pos : pos + s]:
            exps[i] = rng.randint(1, max_exp)
        pos += s
        gens.append(Monomial(ring, tuple(exps)))
    return MonomialIdeal(ring, gens)


def random_monomial_ideal(
    rng: random.Random, max_gens: int = 4, nvars: int = 3, max_exp: int = 3
) -> MonomialIdeal:
    ring = Ring([f"x{i+1}" for i in range(nvars)])
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        if any(exps):
            gens.append(Monomial(ring, exps))
    if not gens:
        gens = [Monomial(ring, tuple([1] + [0] * (nvars - 1)))]
    return MonomialIdeal(ring, gens)


def _ci_prime_data(ideal: MonomialIdeal):
    """(prime, ys) pairs for every associated prime of a complete intersection."""
    out = []
    for prime in formulas.complete_intersection_primes(ideal):
        spec = CIIdealSpec.from_ideal(ideal, prime)
        out.append(spec)
    return out


# ---------------------------------------------------------------------------
# Suites.
# ---------------------------------------------------------------------------


def suite_theorem_ci(
    trials: int = 60,
    seed: int = 0,
    max_exp: int = 3,
    powers: tuple[int, ...] = (1, 2),
    max_gens: int = 3,
    max_vars: int = 5,
) -> SuiteReport:
    """Ordinary powers of complete intersections: v(I^n) = n*a + v(I) - a
    at every associated prime, plus the witness divisibility structure."""
    report = SuiteReport("theorem-ci")
    start = time.perf_counter()
    rng = random.Random(seed)
    for trial in range(trials):
        ideal = random_ci_ideal(rng, max_gens=max_gens, max_vars=max_vars, max_exp=max_exp)
        alpha = ideal.alpha()
        base = sum(g.degree for g in ideal.gens) - ideal.mu
        formula_v = v_ci(ideal)
        report.check(
            formula_v.is_exact and formula_v.value == base,
            f"[{trial}] {ideal}: v_ci gave {formula_v}",
        )
        specs = _ci_prime_data(ideal)
        for n in powers:
            expected = n * alpha + base - alpha
            power_ideal = ideal.power(n)
            oracle = v_number(power_ideal)
            report.check(
                oracle.v == expected,
                f"[{trial}] {ideal} n={n}: oracle v={oracle.v}, formula {expected}",
            )
            ass = associated_primes(power_ideal)
            report.check(
                ass == {s.prime for s in specs},
                f"[{trial}] {ideal} n={n}: Ass(I^n) != Ass(I)",
            )
            for spec in specs:
                local, witness = oracle.locals[spec.prime]
                report.check(
                    local == expected,
                    f"[{trial}] {ideal} n={n} {spec.prime}: local {local} != {expected}",
                )
                g = spec.g_monomial()
                report.check(
                    g.divides(witness.monomial)
                    and witness.monomial.div(g).degree >= (n - 1) * alpha,
                    f"[{trial}] {ideal} n={n} {spec.prime}: witness "
                    f"{witness.monomial} misses the divisor structure {g}",
                )
                fwd = v_ci_power(spec, n)
                report.check(
                    fwd.value == expected
                    and check_witness(power_ideal, fwd.witness, spec.prime),
                    f"[{trial}] {ideal} n={n} {spec.prime}: constructed witness fails",
                )
    report.elapsed = time.perf_counter() - start
    return report


def suite_gen_k2(
    trials: int | None = None,
    seed: int = 0,
    max_exp: int = 5,
    powers: tuple[int, ...] = (1, 2),
) -> SuiteReport:
    """Height-two pure-power ideals, exhaustively:
    v(closure(I^n)) = n*a1 + ceil(a2/a1) - 2."""
    report = SuiteReport("gen-k2")
    start = time.perf_counter()
    for a1 in range(1, max_exp + 1):
        for a2 in range(a1, max_exp + 1):
            spec = IrreducibleSpec((a1, a2))
            ideal = spec.ideal()
            for n in powers:
                formula = v_closure_irred_two_block(spec, n)
                oracle = v_number(closure_power(ideal, n))
                report.check(
                    formula.is_exact and formula.value == oracle.v,
                    f"(a1,a2)=({a1},{a2}) n={n}: formula {formula.value}, "
                    f"oracle {oracle.v}",
                )
    report.elapsed = time.perf_counter() - start
    return report


def suite_threegen(
    trials: int | None = None,
    seed: int = 0,
    max_exp: int = 6,
    powers: tuple[int, ...] = (1, 2),
) -> SuiteReport:
    """Height-three pure-power ideals: the f_m witness family and the closed
    forms, with the two fixed regression instances."""
    report = SuiteReport("threegen")
    start = time.perf_counter()

    for (a1, a2, a3), expected_l, expected_v in (((4, 7, 77), 3, 8), ((5, 8, 100), 2, 8)):
        spec = IrreducibleSpec((a1, a2, a3))
        closed = closure_generators(spec.ideal())
        result = v_closure_3gen(a1, a2, a3, 1, spec=spec)
        oracle = v_number(closed)
        report.check(
            result.value == expected_v == oracle.v,
            f"{(a1,a2,a3)}: formula {result.value}, oracle {oracle.v}, "
            f"expected {expected_v}",
        )
        report.check(
            f"l={expected_l}" in result.tags,
            f"{(a1,a2,a3)}: expected argmin l={expected_l}, tags {result.tags}",
        )
        for m in range(1, a1 + 1):
            fm = f_m_witness(a1, a2, a3, m, spec=spec)
            report.check(
                check_witness(closed, fm, spec.radical()),
                f"{(a1,a2,a3)}: f_{m} = {fm} is not a witness for the closure",
            )

    for a2 in range(1, max_exp + 1):
        for a3 in range(a2, max_exp + 1):
            spec = IrreducibleSpec((1, a2, a3))
            ideal = spec.ideal()
            for n in powers:
                formula = v_closure_3gen(1, a2, a3, n, spec=spec)
                oracle = v_number(closure_power(ideal, n))
                report.check(
                    formula.value == oracle.v,
                    f"(1,{a2},{a3}) n={n}: formula {formula.value}, oracle {oracle.v}",
                )
    report.elapsed = time.perf_counter() - start
    return report


def suite_uppbnd_h2(
    trials: int = 40,
    seed: int = 0,
    max_exp: int = 3,
    powers: tuple[int, ...] = (1, 2),
) -> SuiteReport:
    """Height-two complete intersections: the product-form exact value, the
    split-form exact value, and the closure-vs-power comparison."""
    report = SuiteReport("uppbnd-h2")
    start = time.perf_counter()

    # Product form u1 = (x_1...x_q)^alpha, u2 = prod y_j^beta_j.
    for q in (1, 2):
        for alpha in (1, 2):
            for l in range(q, 4):
                for betas in itertools.combinations_with_replacement(
                    range(alpha, max_exp + 1), l
                ):
                    spec = Height2Spec(q, alpha, betas)
                    ideal = spec.ideal()
                    for n in powers:
                        formula = v_closure_h2_product(spec, n)
                        closed = closure_power(ideal, n)
                        oracle = v_number(closed)
                        report.check(
                            formula.value == oracle.v,
                            f"q={q} alpha={alpha} betas={betas} n={n}: "
                            f"formula {formula.value}, oracle {oracle.v}",
                        )
                        locals_ = {p: val for p, (val, _) in oracle.locals.items()}
                        report.check(
                            all(v == oracle.v for v in locals_.values()),
                            f"q={q} alpha={alpha} betas={betas} n={n}: "
                            f"local values differ: {locals_}",
                        )
                        report.check(
                            check_witness(
                                closed, formula.witness, formula.prime
                            ),
                            f"q={q} alpha={alpha} betas={betas} n={n}: witness fails",
                        )
                        if alpha == 1:
                            v_pow = v_number(ideal.power(n)).v
                            report.check(
                                v_pow == formula.value,
                                f"q={q} betas={betas} n={n}: alpha=1 should give "
                                f"v(I^n)={v_pow} == v(closure)={formula.value}",
                            )

    # Split form u1 = x^alpha, u2 = prod y_j^beta_j with sum beta = alpha.
    for alpha, betas in ((3, (1, 2)), (5, (1, 1, 3)), (4, (2, 2)), (4, (1, 3))):
        ideal = split_ideal(alpha, betas)
        for n in powers:
            formula = v_closure_h2_split(alpha, betas, n, ring=ideal.ring)
            oracle = v_number(closure_power(ideal, n))
            if formula.is_exact:
                report.check(
                    formula.value == oracle.v,
                    f"split alpha={alpha} betas={betas} n={n}: "
                    f"formula {formula.value}, oracle {oracle.v}",
                )
                report.check(
                    check_witness(
                        closure_power(ideal, n), formula.witness, formula.prime
                    ),
                    f"split alpha={alpha} betas={betas} n={n}: witness fails",
                )
            else:
                report.check(
                    oracle.v >= formula.value,
                    f"split alpha={alpha} betas={betas} n={n}: lower bound "
                    f"{formula.value} above oracle {oracle.v}",
                )

    # Closure never beats the ordinary power; strict when two generators
    # are non-squarefree.
    rng = random.Random(seed)
    for trial in range(trials):
        ideal = random_ci_ideal(rng, max_exp=max_exp)
        spec = CIIdealSpec.from_ideal(ideal)
        for n in powers:
            v_pow = v_ci_power(spec, n).value
            v_clo = v_number(closure_power(ideal, n)).v
            report.check(
                v_clo <= v_pow,
                f"[{trial}] {ideal} n={n}: v(closure)={v_clo} > v(power)={v_pow}",
            )
            gens = ideal.gens
            if any(e >= 2 for e in gens[0].exps) and any(
                any(e >= 2 for e in g.exps) for g in gens[1:]
            ):
                report.check(
                    v_clo <= v_pow - 1,
                    f"[{trial}] {ideal} n={n}: expected strict gap, "
                    f"got {v_pow} vs {v_clo}",
                )
    report.elapsed = time.perf_counter() - start
    return report


def suite_wog(
    trials: int | None = None,
    seed: int = 0,
    max_exp: int = 3,
    powers: tuple[int, ...] = (1, 2),
) -> SuiteReport:
    """Weighted oriented complete bipartite edge ideals:
    v(closure(I(D)^n)) = n*(1 + min weight) - 1."""
    report = SuiteReport("wog")
    start = time.perf_counter()
    for p1 in (1, 2):
        for p2 in (1, 2):
            for weights in itertools.product(range(1, max_exp + 1), repeat=p2):
                ideal = wog_ideal(p1, p2, weights)
                for n in powers:
                    formula = wog_v_closure(p1, p2, weights, n)
                    oracle = v_number(closure_power(ideal, n))
                    report.check(
                        formula.value == oracle.v,
                        f"p1={p1} p2={p2} w={weights} n={n}: "
                        f"formula {formula.value}, oracle {oracle.v}",
                    )
    report.elapsed = time.perf_counter() - start
    return report


def suite_ceil(trials: int = 10_000, seed: int = 0, max_exp: int = 12) -> SuiteReport:
    """Randomized checks of the two ceiling lemmas on precondition-satisfying
    rational inputs."""
    report = SuiteReport("ceil")
    start = time.perf_counter()
    rng = random.Random(seed)
    for _ in range(trials):
        L = rng.randint(1, max_exp)
        t = rng.randint(1, L)
        A = Fraction(rng.randint(1, 4 * max_exp), rng.randint(1, max_exp))
        if A < 1:
            A = 1 / A
        c_den = rng.randint(1, max_exp)
        c = Fraction(-rng.randint(0, c_den - 1), c_den) if c_den > 1 else Fraction(0)
        s = Fraction(rng.randint(0, max_exp), max_exp)
        chk = ceil_step(L, t, A, c, s)
        report.check(
            chk.holds,
            f"ceil_step failed at L={L} t={t} A={A} c={c} s={s}: {chk}",
        )
    for _ in range(trials):
        a = rng.randint(1, 3 * max_exp)
        b = rng.randint(1, 3 * max_exp)
        got = b_mod_helper(a, b)
        report.check(
            got == (a >= 2 and b >= 2),
            f"b_mod_helper({a},{b}) = {got}",
        )
    report.elapsed = time.perf_counter() - start
    return report


def suite_final_corollary(
    trials: int | None = None,
    seed: int = 0,
    max_exp: int | None = None,
    powers: tuple[int, ...] = (1, 2, 3),
    qs: tuple[int, ...] = (0, 1, 2),
) -> SuiteReport:
    """The two gap families: v(I^n) - v(closure(I^n)) = q for all n, for the
    equigenerated family <x^(q+1), y^(q+1)> and the non-equigenerated family
    <(x_1...x_q)^2, (y_1...y_q)^3> (q = 0 degenerates to an alpha = 1
    product-form ideal, where the gap vanishes)."""
    report = SuiteReport("final-corollary")
    start = time.perf_counter()
    for q in qs:
        ring = Ring.of("x y")
        eq_ideal = ring.ideal(f"x^{q+1}", f"y^{q+1}")
        spec = CIIdealSpec.from_ideal(eq_ideal)
        irr = IrreducibleSpec.detect(eq_ideal)
        for n in powers:
            v_pow = v_ci_power(spec, n).value
            v_clo = v_closure_irred_two_block(irr, n).value
            report.check(
                v_pow - v_clo == q,
                f"equigenerated q={q} n={n}: gap {v_pow - v_clo}",
            )
            if n == 1:
                report.check(
                    v_number(eq_ideal).v == v_pow,
                    f"equigenerated q={q}: oracle disagrees with power formula",
                )
                report.check(
                    v_number(closure_generators(eq_ideal)).v == v_clo,
                    f"equigenerated q={q}: oracle disagrees with closure formula",
                )

        if q == 0:
            ideal = Height2Spec(1, 1, (1, 2)).ideal()
            h2 = Height2Spec.detect(ideal)
            cspec = CIIdealSpec.from_ideal(ideal)
            for n in powers:
                v_pow = v_ci_power(cspec, n).value
                v_clo = v_closure_h2_product(h2, n).value
                report.check(
                    v_pow == v_clo,
                    f"alpha=1 family n={n}: gap {v_pow - v_clo} != 0",
                )
                if n == 1:
                    report.check(
                        v_number(ideal).v == v_pow
                        and v_number(closure_generators(ideal)).v == v_clo,
                        "alpha=1 family: oracle disagrees at n=1",
                    )
            continue

        names = [f"x{i+1}" for i in range(q)] + [f"y{i+1}" for i in range(q)]
        ring = Ring(names)
        e1 = [2] * q + [0] * q
        e2 = [0] * q + [3] * q
        neq_ideal = MonomialIdeal(
            ring, [Monomial(ring, tuple(e1)), Monomial(ring, tuple(e2))]
        )
        cspec = CIIdealSpec.from_ideal(neq_ideal)
        h2 = Height2Spec.detect(neq_ideal)
        for n in powers:
            v_pow = v_ci_power(cspec, n).value
            v_clo = v_closure_h2_product(h2, n).value
            report.check(
                v_pow - v_clo == q,
                f"non-equigenerated q={q} n={n}: gap {v_pow - v_clo}",
            )
            if n == 1:
                report.check(
                    v_number(neq_ideal).v == v_pow,
                    f"non-equigenerated q={q}: oracle vs power formula",
                )
                report.check(
                    v_number(closure_generators(neq_ideal)).v == v_clo,
                    f"non-equigenerated q={q}: oracle vs closure formula",
                )
    report.elapsed = time.perf_counter() - start
    return report


SUITES = {
    "theorem-ci": suite_theorem_ci,
    "gen-k2": suite_gen_k2,
    "threegen": suite_threegen,
    "uppbnd-h2": suite_uppbnd_h2,
    "wog": suite_wog,
    "ceil": suite_ceil,
    "final-corollary": suite_final_corollary,
}

AVAILABLE = tuple(SUITES)


def run_suite(name: str, **kwargs) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; available: {', '.join(SUITES)}")
    fn = SUITES[name]
    import inspect

    accepted = inspect.signature(fn).parameters
    passed = {k: v for k, v in kwargs.items() if k in accepted and v is not None}
    return fn(**passed)
