"""Exact Nichols algebra computations for Yetter-Drinfeld modules over finite groups.

The main entry points are re-exported here; see the submodules for details.
"""

from .bosonization import Bosonization, CoinvariantAlgebra, bosonize, verify_hopf
from .cyclotomic import CycMatrix, CycScalar, zeta
from .groups import DiagonalDatum, FiniteGroup
from .inputs import InputSpec, load_input, parse_input
from .nichols import BraidedSpace, NicholsTruncation
from .omega import (
    CoinvariantModule,
    RelativeYDModule,
    coinvariant_omega_suite,
    omega_inverse_object,
    omega_mu,
    omega_object,
)
from .pairing import GradedPairing, canonical_pairing, inverse_pairing, verify_pairing
from .reflection import (
    YDTuple,
    reflect,
    verify_component_filtrations,
    verify_reflection_theorems,
    weyl_groupoid,
)
from .report import Report
from .yd import YDModule

__version__ = "0.1.0"

__all__ = [
    "Bosonization",
    "BraidedSpace",
    "CoinvariantAlgebra",
    "CoinvariantModule",
    "CycMatrix",
    "CycScalar",
    "DiagonalDatum",
    "FiniteGroup",
    "GradedPairing",
    "InputSpec",
    "NicholsTruncation",
    "RelativeYDModule",
    "Report",
    "YDModule",
    "YDTuple",
    "bosonize",
    "canonical_pairing",
    "coinvariant_omega_suite",
    "inverse_pairing",
    "load_input",
    "omega_inverse_object",
    "omega_mu",
    "omega_object",
    "parse_input",
    "reflect",
    "verify_component_filtrations",
    "verify_hopf",
    "verify_pairing",
    "verify_reflection_theorems",
    "weyl_groupoid",
    "zeta",
]
