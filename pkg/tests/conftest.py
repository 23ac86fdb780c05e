import hypothesis.strategies as st
import pytest

from vnumic.ring import Monomial, MonomialIdeal, Ring


@pytest.fixture
def rxy():
    return Ring.of("x y")


@pytest.fixture
def rxyz():
    return Ring.of("x y z")


def monomials(ring, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * ring.nvars).map(
        lambda exps: Monomial(ring, exps)
    )


def nonzero_ideals(ring, max_gens=4, max_exp=3):
    return st.lists(
        monomials(ring, max_exp).filter(lambda m: not m.is_one()),
        min_size=1,
        max_size=max_gens,
    ).map(lambda gens: MonomialIdeal(ring, gens))


def proper_ideals(ring, max_gens=4, max_exp=3):
    return nonzero_ideals(ring, max_gens, max_exp).filter(
        lambda ideal: ideal.is_proper
    )
