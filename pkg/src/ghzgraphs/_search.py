"""Chunked mixed-radix counters backing the exhaustive searches."""

from __future__ import annotations

import numpy as np

CHUNK = 1 << 18


def digit_chunks(num_digits: int, base: int, chunk: int = CHUNK):
    """Yield (start, digits) blocks covering every base**num_digits counter value.

    ``digits`` has shape (num_digits, block) with digit 0 most significant, so
    counter value start + j corresponds to digits[:, j] read as a base-``base``
    numeral.  Blocks come in ascending counter order.
    """
    total = base**num_digits
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = np.empty((num_digits, idx.size), dtype=np.int64)
        q = idx
        for j in range(num_digits - 1, -1, -1):
            digits[j] = q % base
            q = q // base
        yield start, digits


def basis_digits(base: int, num_digits: int) -> np.ndarray:
    """All base**num_digits digit columns at once (small dimensions only)."""
    idx = np.arange(base**num_digits, dtype=np.int64)
    digits = np.empty((num_digits, idx.size), dtype=np.int64)
    q = idx
    for j in range(num_digits - 1, -1, -1):
        digits[j] = q % base
        q = q // base
    return digits


def digits_to_index(digits: np.ndarray, base: int) -> np.ndarray:
    """Inverse of basis_digits, column-wise."""
    idx = np.zeros(digits.shape[1], dtype=np.int64)
    for j in range(digits.shape[0]):
        idx = idx * base + digits[j]
    return idx
