"""Exact monomial and monomial-ideal arithmetic.

A ring is purely symbolic: a fixed, ordered tuple of variable names.  A
monomial is an exponent vector over that tuple, an ideal is the canonical
antichain of its minimal monomial generators, and every operation reduces
to integer exponent combinatorics.  No coefficient field is materialized.

Exponents are plain Python ints, hence arbitrary precision; powering an
ideal can never overflow.

Canonical order: monomials compare by total degree, then by exponent
vector with the *largest* vector first within a degree (in k[x, y] the
degree-2 monomials list as x^2, x*y, y^2).  Generator lists, decomposition
output, witness enumeration and serialization all use this single order,
so ideal equality is a plain tuple comparison and all results are
reproducible.

Everything in this module is immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


class RingMismatchError(ValueError):
    """Operands live over different rings."""


class DomainError(ValueError):
    """Operation applied outside its mathematical domain."""


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Ring:
    """An ordered list of variable names fixing exponent-vector coordinates."""

    vars: tuple[str, ...]

    def __init__(self, vars: Iterable[str]):
        names = tuple(vars)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names: {names}")
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"bad variable name: {name!r}")
        object.__setattr__(self, "vars", names)

    @classmethod
    def of(cls, spec: str) -> "Ring":
        """Build a ring from a whitespace-separated variable list, e.g. ``"x y z"``."""
        return cls(spec.split())

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} in {self}") from None

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.nvars)

    def variable(self, i: int) -> "Monomial":
        exps = [0] * self.nvars
        exps[i] = 1
        return Monomial(self, tuple(exps))

    def monomial(self, exps: Iterable[int] | Mapping[str, int]) -> "Monomial":
        """Monomial from a full exponent vector or a {name: exponent} mapping."""
        if isinstance(exps, Mapping):
            vec = [0] * self.nvars
            for name, e in exps.items():
                vec[self.index(name)] = e
            return Monomial(self, tuple(vec))
        return Monomial(self, tuple(exps))

    def parse_monomial(self, text: str) -> "Monomial":
        """Parse a ``x^2*y`` style term; ``1`` is the unit monomial."""
        text = text.strip()
        if text == "1":
            return self.one()
        vec = [0] * self.nvars
        for factor in text.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in monomial {text!r}")
            name, _, exp = factor.partition("^")
            name = name.strip()
            i = self.index(name)
            if exp:
                try:
                    e = int(exp.strip())
                except ValueError:
                    raise ValueError(f"bad exponent {exp!r} in {text!r}") from None
            else:
                e = 1
            if e < 0:
                raise ValueError(f"negative exponent in {text!r}")
            vec[i] += e
        return Monomial(self, tuple(vec))

    def ideal(self, *terms: "str | Monomial") -> "MonomialIdeal":
        """Ideal generated by the given terms (strings or monomials)."""
        gens = [self.parse_monomial(t) if isinstance(t, str) else t for t in terms]
        return MonomialIdeal(self, gens)

    def zero_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal(self, [])

    def unit_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal(self, [self.one()])

    def __repr__(self) -> str:
        return f"Ring({' '.join(self.vars)})"


def _check_same_ring(a, b) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"mixed rings: {a.ring} vs {b.ring}")


@dataclass(frozen=True)
class Monomial:
    """An exponent vector over a fixed ring; the all-zero vector is 1."""

    ring: Ring
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.exps) != self.ring.nvars:
            raise ValueError(
                f"exponent vector of length {len(self.exps)} over {self.ring}"
            )
        if any(e < 0 for e in self.exps):
            raise ValueError(f"negative exponent in {self.exps}")

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exps) if e > 0)

    def is_one(self) -> bool:
        return not any(self.exps)

    def divides(self, other: "Monomial") -> bool:
        _check_same_ring(self, other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def mul(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self, other)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exps, other.exps)))

    __mul__ = mul

    def pow(self, n: int) -> "Monomial":
        if n < 0:
            raise ValueError("negative power of a monomial")
        return Monomial(self.ring, tuple(e * n for e in self.exps))

    __pow__ = pow

    def gcd(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self, other)
        return Monomial(self.ring, tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self, other)
        return Monomial(self.ring, tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def div(self, other: "Monomial") -> "Monomial":
        """Exact division; raises if ``other`` does not divide ``self``."""
        _check_same_ring(self, other)
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(self.ring, tuple(a - b for a, b in zip(self.exps, other.exps)))

    __truediv__ = div

    def colon_quotient(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other), the generator map of the colon ideal."""
        _check_same_ring(self, other)
        return Monomial(self.ring, tuple(max(a - b, 0) for a, b in zip(self.exps, other.exps)))

    def sort_key(self) -> tuple:
        return (self.degree, tuple(-e for e in self.exps))

    def __lt__(self, other: "Monomial") -> bool:
        _check_same_ring(self, other)
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.is_one():
            return "1"
        parts = []
        for name, e in zip(self.ring.vars, self.exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def minimalize(ring: Ring, monomials: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Canonical antichain of minimal elements under divisibility.

    Every input monomial is divisible by some output element, so the output
    generates the same ideal.  Output is sorted in the canonical order.
    """
    items = sorted(set(monomials), key=Monomial.sort_key)
    kept: list[Monomial] = []
    for m in items:
        if m.ring != ring:
            raise RingMismatchError(f"monomial {m} not over {ring}")
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return tuple(kept)


class MonomialIdeal:
    """A monomial ideal, held as its canonical minimal generating antichain.

    The zero ideal is the (only) ideal with an empty generator tuple; the
    unit ideal is generated by 1.  Equality is equality of (ring, gens).
    """

    __slots__ = ("ring", "gens", "_hash")

    def __init__(self, ring: Ring, gens: Iterable[Monomial], *, _canonical: bool = False):
        self.ring = ring
        if _canonical:
            self.gens = tuple(gens)
        else:
            self.gens = minimalize(ring, gens)
        self._hash = hash((self.ring, self.gens))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one()

    @property
    def is_proper(self) -> bool:
        return not self.is_zero and not self.is_unit

    @property
    def mu(self) -> int:
        """Number of minimal generators."""
        return len(self.gens)

    def _require_nonzero(self) -> None:
        if self.is_zero:
            raise DomainError("operation undefined for the zero ideal")

    def _require_proper(self) -> None:
        if not self.is_proper:
            raise DomainError("operation requires a proper nonzero ideal")

    # -- numeric invariants --------------------------------------------------

    def alpha(self) -> int:
        """Minimum degree of a minimal generator."""
        self._require_nonzero()
        return self.gens[0].degree

    def delta(self) -> int:
        """Maximum degree of a minimal generator."""
        self._require_nonzero()
        return self.gens[-1].degree

    def is_equigenerated(self) -> bool:
        self._require_nonzero()
        return self.gens[0].degree == self.gens[-1].degree

    def support_union(self) -> tuple[int, ...]:
        """Union of generator supports, as sorted variable indices."""
        seen: set[int] = set()
        for g in self.gens:
            seen.update(g.support)
        return tuple(sorted(seen))

    def max_exponents(self) -> tuple[int, ...]:
        """Componentwise max of the generator exponent vectors."""
        self._require_nonzero()
        vec = [0] * self.ring.nvars
        for g in self.gens:
            for i, e in enumerate(g.exps):
                if e > vec[i]:
                    vec[i] = e
        return tuple(vec)

    # -- membership and containment -------------------------------------------

    def contains(self, m: Monomial) -> bool:
        _check_same_ring(self, m)
        return any(g.divides(m) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        _check_same_ring(self, other)
        return all(self.contains(g) for g in other.gens)

    # -- arithmetic -----------------------------------------------------------

    def colon(self, v: Monomial) -> "MonomialIdeal":
        """(I : v), generated by u / gcd(u, v) over the generators u."""
        _check_same_ring(self, v)
        return MonomialIdeal(self.ring, [g.colon_quotient(v) for g in self.gens])

    def colon_ideal(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """(I : J) as the intersection of (I : g) over generators g of J."""
        _check_same_ring(self, other)
        if other.is_zero:
            return MonomialIdeal(self.ring, [self.ring.one()])
        result = self.colon(other.gens[0])
        for g in other.gens[1:]:
            result = result.intersect(self.colon(g))
        return result

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection, generated by pairwise lcms."""
        _check_same_ring(self, other)
        if self.is_zero or other.is_zero:
            return MonomialIdeal(self.ring, [])
        return MonomialIdeal(
            self.ring, [a.lcm(b) for a in self.gens for b in other.gens]
        )

    def multiply(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Product ideal, generated by pairwise products."""
        _check_same_ring(self, other)
        if self.is_zero or other.is_zero:
            return MonomialIdeal(self.ring, [])
        return MonomialIdeal(
            self.ring, [a.mul(b) for a in self.gens for b in other.gens]
        )

    def power(self, n: int) -> "MonomialIdeal":
        """I^n from n-fold generator products.  By convention I^0 is the unit ideal."""
        if n < 0:
            raise ValueError("negative ideal power")
        if n == 0:
            return MonomialIdeal(self.ring, [self.ring.one()])
        if self.is_zero:
            return MonomialIdeal(self.ring, [])
        prods = []
        for combo in itertools.combinations_with_replacement(self.gens, n):
            m = combo[0]
            for g in combo[1:]:
                m = m.mul(g)
            prods.append(m)
        return MonomialIdeal(self.ring, prods)

    def generator_power(self, n: int) -> "MonomialIdeal":
        """The ideal generated by the n-th powers of the generators (not I^n)."""
        if n < 1:
            raise ValueError("generator_power needs n >= 1")
        return MonomialIdeal(self.ring, [g.pow(n) for g in self.gens])

    # -- object protocol ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self) -> int:
        return self._hash

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __str__(self) -> str:
        if self.is_zero:
            return "<0>"
        return "<" + ", ".join(str(g) for g in self.gens) + ">"

    def __repr__(self) -> str:
        return f"MonomialIdeal{self}"
