"""Quadratic discrete Fourier transforms.

The two-parameter family F_{ra} extends the ordinary DFT matrix with a
phase quadratic in the row index,

    (F_ra)_{nm} = q^{n(d-n)a/2 + (d-1)^2 r/4 + n[m - (d-1)r/2]} / sqrt(d),

with q = exp(2*pi*i/d), a an integer mod d and r a real parameter.  For
rational r every entry is an exact root of unity and the matrix is built
in phase arithmetic; irrational r falls back to dense complex arrays.
The companion matrix H_ra carries the same columns with the rows in
reverse order, and D_ra is the diagonal Gaussian factor with
F_ra = D_ra F.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import pi, sqrt
from typing import Union

import cmath

import numpy as np

from .phases import PhaseMatrix, as_fraction, is_rational

Real = Union[int, Fraction, float]

__all__ = [
    "QdftParams",
    "GaussSumArgs",
    "HadamardReport",
    "fra_matrix",
    "hra_matrix",
    "dra_matrix",
    "forward",
    "inverse",
    "parseval_check",
    "gauss_sum",
    "trace_fra",
    "det_fra",
    "is_generalized_hadamard",
]


@dataclass(frozen=True)
class QdftParams:
    """Validated (d, r, a) parameter triple; a is reduced mod d."""

    d: int
    r: Real = 0
    a: int = 0

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("dimension must be at least 2")
        if not isinstance(self.a, int):
            raise TypeError("a must be an integer")
        object.__setattr__(self, "a", self.a % self.d)

    @property
    def exact(self) -> bool:
        return is_rational(self.r)


@dataclass(frozen=True)
class GaussSumArgs:
    """Arguments of the generalized quadratic Gauss sum S(u, v, w)."""

    u: int
    v: Real
    w: int

    def __post_init__(self):
        if self.w == 0:
            raise ValueError("w must be nonzero")


def _exact_matrix(p: QdftParams, exponent) -> PhaseMatrix:
    return PhaseMatrix.from_exponents(p.d, exponent, scaled=True)


def _float_matrix(p: QdftParams, exponent) -> np.ndarray:
    d = p.d
    out = np.empty((d, d), dtype=complex)
    for i in range(d):
        for j in range(d):
            out[i, j] = cmath.exp(2j * pi * exponent(i, j) / d)
    return out / sqrt(d)


def fra_matrix(d: int, r: Real = 0, a: int = 0) -> Union[PhaseMatrix, np.ndarray]:
    """Quadratic Fourier matrix F_ra; exact for rational r."""
    p = QdftParams(d, r, a)
    if p.exact:
        rr = as_fraction(p.r)
        half_dr = Fraction(p.d - 1, 2) * rr

        def expo(n, m):
            return (Fraction(n * (p.d - n) * p.a, 2)
                    + Fraction((p.d - 1) ** 2, 4) * rr
                    + n * (m - half_dr))

        return _exact_matrix(p, expo)
    rf = float(p.r)
    return _float_matrix(
        p, lambda n, m: n * (p.d - n) * p.a / 2 + (p.d - 1) ** 2 * rf / 4
        + n * (m - (p.d - 1) * rf / 2))


def hra_matrix(d: int, r: Real = 0, a: int = 0) -> Union[PhaseMatrix, np.ndarray]:
    """Row-reversed companion of F_ra; its columns are the transformed basis."""
    p = QdftParams(d, r, a)
    if p.exact:
        rr = as_fraction(p.r)
        half_dr = Fraction(p.d - 1, 2) * rr

        def expo(n, al):
            return (Fraction((p.d - 1 - n) * (n + 1) * p.a, 2)
                    + Fraction((p.d - 1) ** 2, 4) * rr
                    + (p.d - 1 - n) * (al - half_dr))

        return _exact_matrix(p, expo)
    rf = float(p.r)
    return _float_matrix(
        p, lambda n, al: (p.d - 1 - n) * (n + 1) * p.a / 2
        + (p.d - 1) ** 2 * rf / 4 + (p.d - 1 - n) * (al - (p.d - 1) * rf / 2))


def dra_matrix(d: int, r: Real = 0, a: int = 0) -> Union[PhaseMatrix, np.ndarray]:
    """Diagonal Gaussian factor with F_ra = D_ra @ F."""
    p = QdftParams(d, r, a)
    if p.exact:
        rr = as_fraction(p.r)

        def expo(m, n):
            if m != n:
                return None
            return (Fraction(m * (p.d - m) * p.a, 2)
                    + Fraction((p.d - 1) ** 2, 4) * rr
                    - m * Fraction(p.d - 1, 2) * rr)

        return PhaseMatrix.from_exponents(p.d, expo, scaled=False)
    rf = float(p.r)
    diag = [cmath.exp(2j * pi * (m * (p.d - m) * p.a / 2
                                 + (p.d - 1) ** 2 * rf / 4
                                 - m * (p.d - 1) * rf / 2) / p.d)
            for m in range(p.d)]
    return np.diag(diag)


def _as_array(m) -> np.ndarray:
    return m.to_complex() if isinstance(m, PhaseMatrix) else np.asarray(m, dtype=complex)


def forward(x, d: int, r: Real = 0, a: int = 0) -> np.ndarray:
    """y_n = sum_m (F_ra)_{mn} x_m."""
    x = np.asarray(x, dtype=complex)
    if x.shape != (d,):
        raise ValueError(f"signal must have length {d}")
    return _as_array(fra_matrix(d, r, a)).T @ x


def inverse(y, d: int, r: Real = 0, a: int = 0) -> np.ndarray:
    """x_m = sum_n conj((F_ra)_{mn}) y_n; inverts :func:`forward`."""
    y = np.asarray(y, dtype=complex)
    if y.shape != (d,):
        raise ValueError(f"signal must have length {d}")
    return _as_array(fra_matrix(d, r, a)).conj() @ y


def parseval_check(x, xp, d: int, r: Real = 0, a: int = 0) -> tuple[complex, complex]:
    """Return (sum conj(y_n) y'_n, sum conj(x_m) x'_m) for the same F_ra."""
    x = np.asarray(x, dtype=complex)
    xp = np.asarray(xp, dtype=complex)
    if x.shape != (d,) or xp.shape != (d,):
        raise ValueError(f"signals must have length {d}")
    y = forward(x, d, r, a)
    yp = forward(xp, d, r, a)
    return complex(np.vdot(y, yp)), complex(np.vdot(x, xp))


def gauss_sum(u: int, v: Real, w: int) -> complex:
    """S(u, v, w) = sum_{k=0}^{|w|-1} exp(i*pi*(u k^2 + v k)/w) by direct summation."""
    args = GaussSumArgs(u, v, w)
    vf = float(args.v)
    return sum(cmath.exp(1j * pi * (args.u * k * k + vf * k) / args.w)
               for k in range(abs(args.w)))


def trace_fra(d: int, r: Real = 0, a: int = 0) -> complex:
    """Closed-form trace of F_ra via a quadratic Gauss sum.

    tr F_ra = exp(i*pi*(d-1)^2 r/(2d)) S(2-a, d(a-r)+r, d) / sqrt(d).
    """
    p = QdftParams(d, r, a)
    rf = float(p.r)
    s = gauss_sum(2 - p.a, p.d * (p.a - rf) + rf, p.d)
    return cmath.exp(1j * pi * (p.d - 1) ** 2 * rf / (2 * p.d)) * s / sqrt(p.d)


def det_fra(d: int, a: int) -> complex:
    """det F_0a = exp(i*pi*(d^2-1)a/6) det F, with det F evaluated numerically."""
    p = QdftParams(d, 0, a)
    det_f = complex(np.linalg.det(_as_array(fra_matrix(p.d))))
    return cmath.exp(1j * pi * (p.d * p.d - 1) * p.a / 6) * det_f


@dataclass(frozen=True)
class HadamardReport:
    """Verdict of the generalized-Hadamard test with the measured residuals."""

    dim: int
    unitarity_residual: float
    modulus_residual: float
    tolerance: float

    @property
    def is_hadamard(self) -> bool:
        return (self.unitarity_residual <= self.tolerance
                and self.modulus_residual <= self.tolerance)

    def __bool__(self) -> bool:
        return self.is_hadamard


def is_generalized_hadamard(m, tol: float = 1e-10) -> HadamardReport:
    """True iff m is unitary and every entry has modulus 1/sqrt(d)."""
    arr = _as_array(m)
    n, nc = arr.shape
    if n != nc:
        raise ValueError("matrix must be square")
    unit = float(np.max(np.abs(arr.conj().T @ arr - np.eye(n))))
    mod = float(np.max(np.abs(np.abs(arr) - 1.0 / sqrt(n))))
    return HadamardReport(n, unit, mod, tol)
