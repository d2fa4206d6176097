"""Kerov polynomials, free cumulants of Young diagrams, and character checks."""
from .characters import hook_dimension, mn_character, normalized_on_cycle
from .kerov import (
    KerovResult,
    build_F,
    build_H,
    build_L,
    kerov_polynomial,
    recover_R,
    sigma,
    sigma_formula1,
    sigma_formula2,
    sigma_formula3,
)
from .laurent import AscendingSeries, DescendingSeries
from .polyring import GradedPolynomial, R
from .young import Partition, free_cumulants, interlacing, partitions

__version__ = "0.1.0"
