"""Hecke algebra representation of braids, HOMFLY-PT via trace reduction,
and a Garside-letter search for kernel elements modulo ``m``."""

from .braid import BraidWord, delta, delta_inverse, parse, positive_lift, torus, weaving
from .garside import GarsideWord, is_compatible, is_normal_form, sample_extension, to_braid
from .hecke import HeckeVector, identity_vector, projlength, represent
from .homfly import HomflyPoly, homfly, skein_oracle
from .laurent import ZZ, LaurentPoly, Ring
from .permutation import Permutation, from_index, to_index
from .search import KernelWitness, augmented_projlength, load_fixture, run_search, verify_kernel

__version__ = "0.1.0"

__all__ = [
    "BraidWord", "GarsideWord", "HeckeVector", "HomflyPoly", "KernelWitness",
    "LaurentPoly", "Permutation", "Ring", "ZZ", "augmented_projlength", "delta",
    "delta_inverse", "from_index", "homfly", "identity_vector", "is_compatible",
    "is_normal_form", "load_fixture", "parse", "positive_lift", "projlength",
    "represent", "run_search", "sample_extension", "skein_oracle", "to_braid",
    "to_index", "torus", "verify_kernel", "weaving",
]
