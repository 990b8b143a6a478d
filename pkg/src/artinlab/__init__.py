"""Computational workbench for Artin's primitive-root conjecture on average.

Submodules: ``arith`` (factoring, multiplicative functions), ``sieve``
(prime/spf tables), ``characters`` (Dirichlet characters and character sums),
``densities`` (primitive roots, N_a(x), Hooley densities), ``census``
(level sets, T_k, large sieve, censuses, moments) and ``cli``.
"""

from ._kernels import BACKEND
from .arith import factor, mod_pow, mult_invariants, power_exponent, squarefree_decompose
from .characters import (
    build_unit_group,
    char_sum,
    char_sum_symmetric,
    char_value,
    conductor,
    enumerate_characters,
    enumerate_primitive,
    max_primitive_char_sum,
)
from .densities import (
    a_of_h,
    artin_constant,
    count_na,
    hooley_density,
    indicator_via_characters,
    is_primitive_root,
    predicted_count,
)
from .sieve import sieve_primes, sieve_spf, table_mult

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "a_of_h",
    "artin_constant",
    "build_unit_group",
    "char_sum",
    "char_sum_symmetric",
    "char_value",
    "conductor",
    "count_na",
    "enumerate_characters",
    "enumerate_primitive",
    "factor",
    "hooley_density",
    "indicator_via_characters",
    "is_primitive_root",
    "max_primitive_char_sum",
    "mod_pow",
    "mult_invariants",
    "power_exponent",
    "predicted_count",
    "sieve_primes",
    "sieve_spf",
    "squarefree_decompose",
    "table_mult",
]
