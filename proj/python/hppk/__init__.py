"""HPPK key encapsulation and signatures.

Keys, ciphertexts and signatures are plain ``bytes`` in the fixed-width
little-endian encoding used by the C++ library and the ``hppk`` tool.
Every call takes the parameter set (level, m, ...) explicitly; pass the same
values to each step.
"""

from ._hppk import (
    HppkError,
    ds_keygen,
    ds_sign,
    ds_sizes,
    ds_verify,
    kem_decaps,
    kem_encaps,
    kem_keygen,
    kem_sizes,
)

__all__ = [
    "HppkError",
    "ds_keygen",
    "ds_sign",
    "ds_sizes",
    "ds_verify",
    "kem_decaps",
    "kem_encaps",
    "kem_keygen",
    "kem_sizes",
]
