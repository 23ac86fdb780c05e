"""vnumic: exact engine for monomial ideals.

Integral closures via Newton polyhedra, v-numbers by bounded brute-force
witness search, irredundant irreducible decomposition, and the closed-form
v-number/regularity formulas for the structured families (complete
intersections, pure-power ideals, weighted bipartite edge ideals), each
cross-checkable against the brute-force oracle.
"""

from ._kernels import BACKEND as kernel_backend
from .closure import (
    closure_generators,
    closure_power,
    closure_power_ci,
    np_membership,
    pure_power_membership,
)
from .decompose import (
    Decomposition,
    IrredComponent,
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
from .ring import (
    DomainError,
    Monomial,
    MonomialIdeal,
    Ring,
    RingMismatchError,
    minimalize,
)
from .vnum import VNumberReport, Witness, check_witness, local_v_number, v_number

__version__ = "0.1.0"

__all__ = [
    "Decomposition",
    "DomainError",
    "IrredComponent",
    "Monomial",
    "MonomialIdeal",
    "MonomialPrime",
    "Ring",
    "RingMismatchError",
    "VNumberReport",
    "Witness",
    "associated_primes",
    "check_witness",
    "closure_generators",
    "closure_power",
    "closure_power_ci",
    "height",
    "irreducible_decomposition",
    "is_complete_intersection",
    "kernel_backend",
    "local_v_number",
    "minimal_primes",
    "minimalize",
    "np_membership",
    "primary_component",
    "pure_power_membership",
    "saturate",
    "symbolic_power",
    "v_number",
]
