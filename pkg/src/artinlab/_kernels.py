"""Kernel backend selection.

The compiled ``_core`` extension is used when it imports; otherwise (or when
``ARTINLAB_PURE_PYTHON=1``) the numpy implementations in ``_fallback`` are used.
Both expose the same functions.
"""

import os
from types import ModuleType

from . import _fallback

KERNEL_NAMES = (
    "spf_sieve",
    "mult_tables",
    "power_table",
    "primitive_root_flags",
    "na_counts",
)


def _load_compiled():
    if os.environ.get("ARTINLAB_PURE_PYTHON", "") not in ("", "0"):
        return None
    try:
        from . import _core
    except ImportError:
        return None
    return _core


_compiled = _load_compiled()

BACKEND = "cython" if _compiled is not None else "python"
kernels: ModuleType = _compiled if _compiled is not None else _fallback


def available_backends():
    names = ["python"]
    try:
        from . import _core  # noqa: F401
    except ImportError:
        pass
    else:
        names.insert(0, "cython")
    return names


def get_backend(name):
    if name == "python":
        return _fallback
    if name == "cython":
        from . import _core

        return _core
    raise ValueError(f"unknown kernel backend {name!r}")


spf_sieve = kernels.spf_sieve
mult_tables = kernels.mult_tables
power_table = kernels.power_table
primitive_root_flags = kernels.primitive_root_flags
na_counts = kernels.na_counts
