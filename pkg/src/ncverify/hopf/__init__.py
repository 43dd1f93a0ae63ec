"""Hopf-axiom checkers for quantum SL_2, truncated af_1, the Taft algebra and free algebras."""
from .af1trunc import Af1TruncElem, af1_hopf_check
from .core import FAMILIES, HopfReport
from .free import free_primitive_check
from .qsl2 import QSL2Elem, qsl2_hopf_check, qsl2_mul, qsl2_trunc_invert
from .taft import taft_check

__all__ = [
    "FAMILIES",
    "HopfReport",
    "QSL2Elem",
    "qsl2_mul",
    "qsl2_hopf_check",
    "qsl2_trunc_invert",
    "Af1TruncElem",
    "af1_hopf_check",
    "taft_check",
    "free_primitive_check",
]
