import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import monomials, nonzero_ideals
from vnumic.ring import (
    DomainError,
    Monomial,
    MonomialIdeal,
    Ring,
    RingMismatchError,
    minimalize,
)

RXY = Ring.of("x y")
RXYZ = Ring.of("x y z")


class TestRing:
    def test_validation(self):
        with pytest.raises(ValueError):
            Ring([])
        with pytest.raises(ValueError):
            Ring(["x", "x"])
        with pytest.raises(ValueError):
            Ring(["x", "2y"])

    def test_parse_monomial(self):
        assert RXY.parse_monomial("x^2*y").exps == (2, 1)
        assert RXY.parse_monomial("1").is_one()
        assert RXY.parse_monomial("y").exps == (0, 1)
        assert RXY.parse_monomial("x*x").exps == (2, 0)
        with pytest.raises(KeyError):
            RXY.parse_monomial("z")
        with pytest.raises(ValueError):
            RXY.parse_monomial("x^-1")


class TestMonomial:
    def test_degree_and_support(self):
        m = RXYZ.parse_monomial("x^2*z")
        assert m.degree == 3
        assert m.support == (0, 2)

    def test_arithmetic(self):
        x2y = RXY.parse_monomial("x^2*y")
        xy2 = RXY.parse_monomial("x*y^2")
        assert (x2y * xy2).exps == (3, 3)
        assert x2y.gcd(xy2).exps == (1, 1)
        assert x2y.lcm(xy2).exps == (2, 2)
        assert (x2y ** 3).exps == (6, 3)
        assert x2y.colon_quotient(xy2).exps == (1, 0)
        with pytest.raises(ValueError):
            x2y.div(xy2)

    def test_canonical_order_is_degree_then_x_heavy_first(self):
        x2, xy, y2 = (RXY.parse_monomial(t) for t in ("x^2", "x*y", "y^2"))
        assert sorted([y2, x2, xy], key=Monomial.sort_key) == [x2, xy, y2]

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            RXY.parse_monomial("x").mul(RXYZ.parse_monomial("x"))


class TestMinimalize:
    def test_divisible_generator_dropped(self):
        ideal = RXY.ideal("x^2", "x^2*y", "y^3")
        assert [str(g) for g in ideal.gens] == ["x^2", "y^3"]

    def test_identity_on_antichain(self):
        assert [str(g) for g in RXY.ideal("x").gens] == ["x"]

    def test_mixed_divisibility(self):
        ideal = RXY.ideal("x*y", "x^2*y", "x*y^2", "x^3")
        assert [str(g) for g in ideal.gens] == ["x*y", "x^3"]

    def test_mixed_rings_rejected(self):
        with pytest.raises(RingMismatchError):
            minimalize(RXY, [RXYZ.parse_monomial("x")])

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_idempotent(self, data):
        gens = data.draw(st.lists(monomials(RXYZ), min_size=1, max_size=5))
        first = minimalize(RXYZ, gens)
        assert minimalize(RXYZ, first) == first


class TestColon:
    def test_generator_formula(self):
        assert str(RXYZ.ideal("x^2*y", "z^3").colon(RXYZ.parse_monomial("x*z"))) == "<x*y, z^2>"

    def test_colon_by_one_is_identity(self):
        ideal = RXY.ideal("x^2", "y^3")
        assert ideal.colon(RXY.one()) == ideal

    def test_member_gives_unit(self):
        assert RXY.ideal("x^2").colon(RXY.parse_monomial("x^2")).is_unit

    def test_colon_by_ideal(self):
        assert str(RXY.ideal("x^2", "x*y").colon_ideal(RXY.ideal("x"))) == "<x, y>"

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_colon_contains_and_composes(self, data):
        ideal = data.draw(nonzero_ideals(RXYZ))
        v = data.draw(monomials(RXYZ))
        w = data.draw(monomials(RXYZ))
        quotient = ideal.colon(v)
        assert quotient.contains_ideal(ideal)
        assert quotient.colon(w) == ideal.colon(v.mul(w))


class TestIntersect:
    def test_examples(self):
        assert str(RXY.ideal("x").intersect(RXY.ideal("y"))) == "<x*y>"
        two = RXY.ideal("x^2", "y")
        assert two.intersect(two) == two
        assert str(RXY.ideal("x").intersect(RXY.ideal("x^2", "y"))) == "<x^2, x*y>"

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_commutative_associative_idempotent(self, data):
        a = data.draw(nonzero_ideals(RXYZ))
        b = data.draw(nonzero_ideals(RXYZ))
        c = data.draw(nonzero_ideals(RXYZ))
        assert a.intersect(b) == b.intersect(a)
        assert a.intersect(b).intersect(c) == a.intersect(b.intersect(c))
        assert a.intersect(a) == a


class TestPower:
    def test_examples(self):
        assert str(RXY.ideal("x", "y").power(2)) == "<x^2, x*y, y^2>"
        assert str(RXY.ideal("x^2", "y^3").power(2)) == "<x^4, x^2*y^3, y^6>"
        ideal = RXY.ideal("x^2", "y^3")
        assert ideal.power(1) == ideal
        assert ideal.power(0).is_unit

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_power_additivity(self, data):
        ideal = data.draw(nonzero_ideals(RXY, max_gens=3))
        a = data.draw(st.integers(1, 3))
        b = data.draw(st.integers(1, 4 - a))
        assert ideal.power(a + b) == ideal.power(a).multiply(ideal.power(b))

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_alpha_delta_linear_in_power(self, data):
        ideal = data.draw(nonzero_ideals(RXY, max_gens=3))
        n = data.draw(st.integers(1, 4))
        power = ideal.power(n)
        assert power.alpha() == n * ideal.alpha()
        assert power.delta() == n * ideal.delta()


class TestInvariants:
    def test_alpha_delta(self):
        ideal = RXY.ideal("x^2", "y^3")
        assert (ideal.alpha(), ideal.delta()) == (2, 3)
        assert (RXY.ideal("x*y").alpha(), RXY.ideal("x*y").delta()) == (2, 2)
        big = RXY.ideal("x^4", "x^2*y^3", "y^6")
        assert (big.alpha(), big.delta()) == (4, 6)
        with pytest.raises(DomainError):
            MonomialIdeal(RXY, []).alpha()

    def test_contains(self):
        assert RXY.ideal("x^2", "y^3").contains(RXY.parse_monomial("x^2*y"))
        assert not RXY.ideal("x^2", "y^3").contains(RXY.parse_monomial("x*y"))

    def test_equigenerated_and_support(self):
        assert RXYZ.ideal("x*y", "z^2").is_equigenerated()
        assert not RXYZ.ideal("x", "z^2").is_equigenerated()
        assert RXYZ.ideal("x^2", "x*y").support_union() == (0, 1)

    def test_zero_and_unit_states(self):
        zero = MonomialIdeal(RXY, [])
        assert zero.is_zero and not zero.is_unit and not zero.is_proper
        unit = RXY.ideal("1")
        assert unit.is_unit and not unit.is_proper
        proper = RXY.ideal("x")
        assert proper.is_proper

    def test_huge_exponents_survive(self):
        ideal = RXY.ideal(f"x^{10**20}", f"y^{10**20}")
        assert ideal.power(3).alpha() == 3 * 10**20
