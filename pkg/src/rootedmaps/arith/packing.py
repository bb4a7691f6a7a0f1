"""Kronecker substitution for nonnegative integer polynomials.

A polynomial with nonnegative integer coefficients below ``2**bits`` is
packed into a single Python integer with one ``bits``-wide slot per
coefficient. Products and sums of packed values then equal the packed
products and sums, provided no slot overflows, which moves the inner
convolution loops into the interpreter's big-integer multiply.
"""

from __future__ import annotations

from typing import Sequence


def pack(coeffs: Sequence[int], bits: int) -> int:
    value = 0
    for c in reversed(coeffs):
        if c < 0 or c >> bits:
            raise ValueError(f"coefficient {c} does not fit a {bits}-bit slot")
        value = (value << bits) | c
    return value


def unpack(value: int, bits: int, count: int) -> list[int]:
    mask = (1 << bits) - 1
    out = []
    for _ in range(count):
        out.append(value & mask)
        value >>= bits
    if value:
        raise OverflowError("packed value has more slots than requested")
    return out
