"""Exact coefficient fields and Gaussian elimination.

Matrices are numpy arrays of dtype=object holding Python ints (prime fields,
integer matrices) or Fractions (rationals); no floating point is involved.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field, model_validator

from ..config import DEFAULT_PRIME, is_prime

logger = logging.getLogger(__name__)


class FieldConfig(BaseModel, frozen=True):
    """Coefficient field of a representation: F_p or the rationals."""

    tag: Literal["prime", "rationals"] = Field(default="prime", description="Field kind")
    p: int = Field(default=DEFAULT_PRIME, description="Characteristic when tag is 'prime'")

    @model_validator(mode="after")
    def validate_prime(self) -> "FieldConfig":
        if self.tag == "prime" and not is_prime(self.p):
            raise ValueError(f"Field characteristic must be prime, got {self.p}")
        return self

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> "FieldConfig":
        return cls(tag="prime", p=p)

    @classmethod
    def rationals(cls) -> "FieldConfig":
        return cls(tag="rationals")

    @classmethod
    def parse(cls, text: str) -> "FieldConfig":
        """Parse the CLI spelling: a prime number, or 'Q' for the rationals."""
        if text.strip().upper() in {"Q", "QQ", "RATIONALS"}:
            return cls.rationals()
        try:
            return cls.prime(int(text))
        except ValueError as e:
            raise ValueError(f"Field must be a prime or 'Q', got {text!r}") from e

    @property
    def name(self) -> str:
        return "Q" if self.tag == "rationals" else f"F_{self.p}"

    def normalize(self, value) -> int | Fraction:
        """Canonical representative of a scalar in this field."""
        if self.tag == "prime":
            if isinstance(value, Fraction):
                return value.numerator * pow(value.denominator, -1, self.p) % self.p
            return int(value) % self.p
        return Fraction(value)


def as_object_matrix(entries, rows: int, cols: int) -> np.ndarray:
    """Copy a matrix into an object array of Python ints/Fractions of the given shape."""
    matrix = np.empty((rows, cols), dtype=object)
    flat = list(np.asarray(entries, dtype=object).flat) if rows * cols else []
    if len(flat) != rows * cols:
        raise ValueError(f"Expected {rows}x{cols} entries, got {len(flat)}")
    for k, x in enumerate(flat):
        matrix.flat[k] = x if isinstance(x, Fraction) else int(x)
    return matrix


def _rank_mod_p(matrix: np.ndarray, p: int) -> int:
    a = np.array([[int(x) % p for x in row] for row in matrix], dtype=object)
    if a.size == 0:
        return 0
    m, n = a.shape
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if a[i, c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            a[[r, pivot], :] = a[[pivot, r], :]
        inv = pow(int(a[r, c]), -1, p)
        a[r, :] = (a[r, :] * inv) % p
        for i in range(r + 1, m):
            if a[i, c] != 0:
                a[i, :] = (a[i, :] - a[i, c] * a[r, :]) % p
        r += 1
        if r == m:
            break
    return r


def _clear_denominators(row) -> list[int]:
    lcm = math.lcm(*(x.denominator for x in row if isinstance(x, Fraction)), 1)
    return [int(Fraction(x) * lcm) for x in row]


def _rank_bareiss(matrix: np.ndarray) -> int:
    """Fraction-free elimination over the integers; rank over Q."""
    a = [_clear_denominators(row) for row in matrix]
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(n):
        pivot = next((i for i in range(r, m) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, m):
            for k in range(c + 1, n):
                # exact division keeps entries bounded by minors
                a[i][k] = (a[r][c] * a[i][k] - a[i][c] * a[r][k]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == m:
            break
    return r


def matrix_rank(matrix, field: FieldConfig) -> int:
    """Exact rank of a matrix over the given field.

    Args:
        matrix: 2-D array-like of ints or Fractions (shape (0, k) and (k, 0) allowed)
        field: F_p (modular elimination) or Q (fraction-free elimination)
    """
    a = np.asarray(matrix, dtype=object)
    if a.ndim != 2 or a.size == 0:
        return 0
    if field.tag == "prime":
        return _rank_mod_p(a, field.p)
    return _rank_bareiss(a)


def exact_inverse(matrix) -> np.ndarray:
    """Inverse over Q by Gauss-Jordan elimination on Fractions.

    Raises:
        ValueError: If the matrix is singular or not square
    """
    a = np.asarray(matrix, dtype=object)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"Cannot invert a non-square matrix of shape {a.shape}")
    aug = [[Fraction(int(x)) if not isinstance(x, Fraction) else x for x in row] for row in a]
    for i, row in enumerate(aug):
        row.extend(Fraction(int(i == j)) for j in range(n))
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pivot is None:
            raise ValueError("Matrix is singular")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        lead = aug[c][c]
        aug[c] = [x / lead for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[c])]
    return np.array([row[n:] for row in aug], dtype=object)


def integer_inverse(matrix) -> np.ndarray:
    """Inverse of a unimodular integer matrix, as an int64 array.

    Raises:
        ValueError: If the inverse is not integral
    """
    inv = exact_inverse(matrix)
    if any(x.denominator != 1 for x in inv.flat):
        raise ValueError("Matrix is not unimodular; inverse has fractional entries")
    return np.array([[int(x) for x in row] for row in inv], dtype=np.int64)
