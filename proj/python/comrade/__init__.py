"""Determinant and inverse of comrade matrices in O(n^2) operations.

A matrix is a mapping with keys ``n``, ``beta``, ``alpha``, ``gamma`` and
``a`` (a_3, ..., a_n), the same layout as the JSON files read by the
``comrade`` command-line tool. Entries may be ints, Fractions or "p/q"
strings. Exact and symbolic results come back as Fractions, float results
as floats.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping, NamedTuple, Union

from . import _core
from ._core import (
    ComradeError,
    DomainError,
    OrderError,
    ParseError,
    PoleAtZeroError,
    ShapeError,
    SingularMatrixError,
    ZeroPivotError,
)

__all__ = [
    "ComradeError",
    "DomainError",
    "Inverse",
    "OrderError",
    "ParseError",
    "PoleAtZeroError",
    "ShapeError",
    "SingularMatrixError",
    "ZeroPivotError",
    "dense",
    "dense_det",
    "dense_invert",
    "determinant",
    "example33",
    "factorize",
    "invert",
    "random_comrade",
]

MatrixLike = Union[str, Mapping[str, Any]]
Scalar = Union[Fraction, float]

_FIELDS = ("beta", "alpha", "gamma", "a")


class Inverse(NamedTuple):
    inverse: list[list[Scalar]]
    determinant: Scalar
    substitutions: list[str]
    op_count: int
    mode: str


def _entry(v: Any) -> str:
    if isinstance(v, float):
        # exact binary value, never a rounded decimal
        return str(Fraction(v))
    return str(v)


def _to_json(matrix: MatrixLike) -> str:
    if isinstance(matrix, str):
        return matrix
    doc = {"n": int(matrix["n"])}
    for field in _FIELDS:
        doc[field] = [_entry(v) for v in matrix[field]]
    return json.dumps(doc)


def _from_json(text: str) -> dict[str, Any]:
    doc = json.loads(text)
    return {"n": doc["n"], **{f: [Fraction(v) for v in doc[f]] for f in _FIELDS}}


def _scalar(text: str, mode: str) -> Scalar:
    return float(text) if mode == "float" else Fraction(text)


def _with_retry(call, mode: str):
    # "auto": exact first, one symbolic retry on a zero divisor
    if mode != "auto":
        return call(mode), mode
    try:
        return call("exact"), "exact"
    except ZeroPivotError:
        return call("symbolic"), "symbolic"


def determinant(matrix: MatrixLike, mode: str = "auto") -> Scalar:
    """det(C). mode is "exact", "symbolic", "float" or "auto"."""
    text = _to_json(matrix)
    (value, _ops), used = _with_retry(lambda m: _core.determinant(text, m), mode)
    return _scalar(value, used)


def invert(matrix: MatrixLike, mode: str = "auto", parallel_columns: bool = False) -> Inverse:
    """C^-1 with the determinant, substitution log and operation count."""
    text = _to_json(matrix)
    (rows, det, subs, ops), used = _with_retry(lambda m: _core.invert(text, m, parallel_columns), mode)
    return Inverse([[_scalar(v, used) for v in row] for row in rows], _scalar(det, used), list(subs), ops, used)


def factorize(matrix: MatrixLike, mode: str = "symbolic") -> dict[str, Any]:
    """Pivots mu_i and last-row multipliers x_i as strings in the chosen field."""
    return _core.factorize(_to_json(matrix), mode)


def dense(matrix: MatrixLike) -> list[list[Fraction]]:
    return [[Fraction(v) for v in row] for row in _core.dense(_to_json(matrix))]


def dense_det(rows) -> Fraction:
    """Reference determinant of a dense square matrix by exact elimination."""
    return Fraction(_core.dense_det([[_entry(v) for v in row] for row in rows]))


def dense_invert(rows) -> list[list[Fraction]]:
    """Reference inverse of a dense square matrix by exact Gauss-Jordan."""
    out = _core.dense_invert([[_entry(v) for v in row] for row in rows])
    return [[Fraction(v) for v in row] for row in out]


def example33(n: int) -> dict[str, Any]:
    return _from_json(_core.example33(n))


def random_comrade(n: int, seed: int, zero_pivot_bias: float = 0.0) -> dict[str, Any]:
    return _from_json(_core.random_comrade(n, seed, zero_pivot_bias))
