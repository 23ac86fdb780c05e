import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import monomials, proper_ideals
from vnumic.decompose import (
    MonomialPrime,
    associated_primes,
    height,
    irreducible_decomposition,
    is_complete_intersection,
    minimal_primes,
    primary_component,
    saturate,
    symbolic_power,
)
from vnumic.ring import DomainError, Ring
from vnumic.verify import random_ci_ideal

RXY = Ring.of("x y")
RXYZ = Ring.of("x y z")
RXYZW = Ring.of("x y z w")


def comp_maps(decomp):
    return [dict(c.powers) for c in decomp.components]


class TestDecomposition:
    def test_split_generator_example(self):
        decomp = irreducible_decomposition(RXY.ideal("x^2", "x*y"))
        assert comp_maps(decomp) == [{0: 1}, {0: 2, 1: 1}]

    def test_already_irreducible(self):
        decomp = irreducible_decomposition(RXY.ideal("x^2", "y^3"))
        assert comp_maps(decomp) == [{0: 2, 1: 3}]

    def test_principal_squarefree(self):
        decomp = irreducible_decomposition(RXY.ideal("x*y"))
        assert comp_maps(decomp) == [{0: 1}, {1: 1}]

    def test_rejects_unit_and_zero(self):
        with pytest.raises(DomainError):
            irreducible_decomposition(RXY.ideal("1"))
        with pytest.raises(DomainError):
            irreducible_decomposition(RXY.zero_ideal())

    @given(st.data())
    @settings(max_examples=80, deadline=None)
    def test_intersection_recovers_ideal_and_is_irredundant(self, data):
        ideal = data.draw(proper_ideals(RXYZ))
        decomp = irreducible_decomposition(ideal)
        assert decomp.intersection() == ideal
        if len(decomp.components) > 1:
            for skip in range(len(decomp.components)):
                rest = [
                    c.as_ideal()
                    for i, c in enumerate(decomp.components)
                    if i != skip
                ]
                inter = rest[0]
                for other in rest[1:]:
                    inter = inter.intersect(other)
                assert inter != ideal

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_split_and_socle_agree(self, data):
        ideal = data.draw(proper_ideals(RXYZ, max_gens=5))
        by_split = irreducible_decomposition(ideal, method="split")
        by_socle = irreducible_decomposition(ideal, method="socle")
        assert by_split.components == by_socle.components


class TestAssociatedPrimes:
    def test_examples(self):
        assert {p.sorted_vars() for p in associated_primes(RXY.ideal("x^2", "x*y"))} == {
            (0,),
            (0, 1),
        }
        assert {p.sorted_vars() for p in associated_primes(RXY.ideal("x^2", "y^3"))} == {
            (0, 1)
        }
        assert {
            p.sorted_vars() for p in associated_primes(RXYZ.ideal("x*y", "z^2"))
        } == {(0, 2), (1, 2)}

    def test_pure_power_ideal_is_primary(self):
        for terms in (("x^2", "y^3"), ("x^4", "y", "z^2")):
            assert len(associated_primes(RXYZ.ideal(*terms))) == 1

    def test_minass_subset_ass(self):
        ideal = RXY.ideal("x^2", "x*y")
        assert minimal_primes(ideal) <= associated_primes(ideal)
        assert {p.sorted_vars() for p in minimal_primes(ideal)} == {(0,)}


class TestHeightAndCI:
    def test_examples(self):
        assert height(RXY.ideal("x^2", "y^3")) == 2
        assert is_complete_intersection(RXY.ideal("x^2", "y^3"))
        assert height(RXY.ideal("x^2", "x*y")) == 1
        assert not is_complete_intersection(RXY.ideal("x^2", "x*y"))
        assert height(RXYZW.ideal("x*y", "z*w")) == 2
        assert is_complete_intersection(RXYZW.ideal("x*y", "z*w"))


class TestPrimaryComponent:
    def test_examples(self):
        full = MonomialPrime(RXY, frozenset({0, 1}))
        assert primary_component(RXY.ideal("x^2", "x*y"), full) == RXY.ideal("x^2", "y")
        assert primary_component(RXY.ideal("x^2", "y^3"), full) == RXY.ideal("x^2", "y^3")
        xz = MonomialPrime(RXYZ, frozenset({0, 2}))
        assert primary_component(RXYZ.ideal("x*y", "z^2"), xz) == RXYZ.ideal("x", "z^2")

    def test_rejects_non_associated_prime(self):
        with pytest.raises(DomainError):
            primary_component(RXY.ideal("x^2", "y^3"), MonomialPrime(RXY, frozenset({0})))


class TestSaturate:
    def test_examples(self):
        assert str(saturate(RXY.ideal("x^2", "x*y"), RXY.parse_monomial("y"))) == "<x>"
        ideal = RXY.ideal("x^2", "y^3")
        assert saturate(ideal, RXY.one()) == ideal
        assert saturate(RXY.ideal("x^2"), RXY.parse_monomial("x")).is_unit


class TestSymbolicPower:
    def test_ci_symbolic_equals_ordinary(self):
        ideal = RXY.ideal("x^2", "y^3")
        assert symbolic_power(ideal, 2) == ideal.power(2)

    def test_strict_containment_for_squarefree_triangle(self):
        ideal = RXYZ.ideal("x*y", "x*z", "y*z")
        symbolic = symbolic_power(ideal, 2)
        square = ideal.power(2)
        assert symbolic.contains_ideal(square)
        assert symbolic != square
        assert symbolic.contains(RXYZ.parse_monomial("x*y*z"))

    def test_first_symbolic_power_no_embedded_primes(self):
        ideal = RXYZ.ideal("x*y", "x*z", "y*z")
        assert symbolic_power(ideal, 1) == ideal
        assert symbolic_power(ideal, 1, mode="all-ass") == ideal

    def test_modes_ordered(self):
        ideal = RXY.ideal("x^2", "x*y")
        allass = symbolic_power(ideal, 2, mode="all-ass")
        minonly = symbolic_power(ideal, 2, mode="min-primes")
        assert minonly.contains_ideal(allass)
        assert allass.contains_ideal(ideal.power(2))


class TestCompleteIntersectionFamilies:
    def test_powers_keep_associated_primes_and_symbolic_equality(self):
        rng = random.Random(11)
        for _ in range(25):
            ideal = random_ci_ideal(rng)
            primes = associated_primes(ideal)
            for n in (2, 3):
                power = ideal.power(n)
                assert associated_primes(power) == primes
                assert symbolic_power(ideal, n) == power

    def test_colon_out_generator_products(self):
        # (I^n : u_1^b_1 ... u_r^b_r) = I^(n - sum b) for complete intersections.
        rng = random.Random(13)
        for _ in range(20):
            ideal = random_ci_ideal(rng)
            gens = ideal.gens
            n = rng.randint(1, 3)
            bs = [0] * len(gens)
            budget = n
            for i in range(len(gens)):
                bs[i] = rng.randint(0, budget)
                budget -= bs[i]
            used = sum(bs)
            divisor = ideal.ring.one()
            for g, b in zip(gens, bs):
                divisor = divisor.mul(g.pow(b))
            assert ideal.power(n).colon(divisor) == ideal.power(n - used)
