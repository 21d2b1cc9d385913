"""Exact computation of unipotent ABV-packets of p-adic G2 and of their endoscopic lifts."""

from .exactnum import Cyclo, QValue, RootOfUnity
from .infclass import classify
from .packets import abv_packet, coefficient, l_packet, lparam
from .distributions import VirtualChar, theta
from .endoscopy import ec_decompose, lift_distribution, lift_parameter

__version__ = "0.1.0"

__all__ = [
    "Cyclo", "QValue", "RootOfUnity", "classify", "abv_packet", "coefficient", "l_packet",
    "lparam", "VirtualChar", "theta", "ec_decompose", "lift_distribution", "lift_parameter",
]
