"""Brute-force, provably bounded computation of v-numbers.

The local v-number of I at an associated prime P is the least degree of a
monomial f with (I : f) = P; the global v-number is the minimum over the
associated primes.  This module is the oracle the closed-form formulas are
judged against, so the search is deliberately blunt: enumerate candidate
monomials by increasing total degree and return the first one whose colon
is exactly P.

The search space is finite and provably sufficient:

* supp(f) can be restricted to the union of the generator supports -
  dividing out a variable that appears in no generator leaves the colon
  unchanged, so a minimal witness never uses one;
* f_i can be capped at M_i, the largest exponent of x_i over the
  generators - gcds against generators saturate at M_i, so lowering an
  exponent beyond the cap to the cap leaves the colon unchanged and only
  lowers the degree.

Ties within a degree go to the largest exponent vector in the canonical
order (x-heavy first), matching generator ordering everywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .decompose import MonomialPrime, associated_primes
from .ring import DomainError, Monomial, MonomialIdeal, _check_same_ring


def check_witness(ideal: MonomialIdeal, f: Monomial, prime: MonomialPrime) -> bool:
    """True iff (ideal : f) equals the prime, as canonical ideals."""
    _check_same_ring(ideal, f)
    return ideal.colon(f) == prime.as_ideal()


@dataclass(frozen=True)
class Witness:
    """A monomial f certifying v_P(I) <= deg f via (I : f) = P."""

    monomial: Monomial
    prime: MonomialPrime
    degree: int

    @classmethod
    def checked(cls, ideal: MonomialIdeal, f: Monomial, prime: MonomialPrime) -> "Witness":
        if not check_witness(ideal, f, prime):
            raise DomainError(f"({ideal} : {f}) != {prime}")
        return cls(f, prime, f.degree)


@dataclass(frozen=True)
class VNumberReport:
    """All local v-numbers of an ideal plus the global minimum."""

    ideal: MonomialIdeal
    locals: dict[MonomialPrime, tuple[int, Witness]]
    v: int
    prime: MonomialPrime
    witness: Witness

    def local_value(self, prime: MonomialPrime) -> int:
        return self.locals[prime][0]


def _scan(ideal: MonomialIdeal, prime: MonomialPrime) -> tuple[int, Witness] | None:
    gens = [g.exps for g in ideal.gens]
    bounds = ideal.max_exponents()
    found = _kernels.witness_scan(gens, bounds, prime.sorted_vars())
    if found is None:
        return None
    degree, exps = found
    witness = Witness.checked(ideal, Monomial(ideal.ring, exps), prime)
    assert witness.degree == degree
    return degree, witness


def local_v_number(ideal: MonomialIdeal, prime: MonomialPrime) -> tuple[int, Witness]:
    """Minimum degree of a witness for the prime, with one canonical witness."""
    ideal._require_proper()
    if prime not in associated_primes(ideal):
        raise DomainError(f"{prime} is not an associated prime of {ideal}")
    result = _scan(ideal, prime)
    assert result is not None, "associated prime without witness in its search box"
    return result


def v_number(ideal: MonomialIdeal) -> VNumberReport:
    """All local v-numbers and the global v-number of a proper nonzero ideal."""
    ideal._require_proper()
    primes = sorted(associated_primes(ideal), key=MonomialPrime.sort_key)
    locals_map: dict[MonomialPrime, tuple[int, Witness]] = {}
    for prime in primes:
        result = _scan(ideal, prime)
        assert result is not None, "associated prime without witness in its search box"
        locals_map[prime] = result
    best_prime = min(primes, key=lambda p: (locals_map[p][0], p.sort_key()))
    v, witness = locals_map[best_prime]
    return VNumberReport(ideal, locals_map, v, best_prime, witness)
