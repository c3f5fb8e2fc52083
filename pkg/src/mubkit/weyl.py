"""Weyl pairs, generalized Pauli operators and the finite sine algebra.

Everything here is a generalized permutation matrix over roots of unity,
so all identities (q-commutation, trace orthogonality, the group
composition law, the sine-algebra product rule) are checked in exact
phase arithmetic.  The shift matrix X and clock matrix Z satisfy

    X Z = q Z X,    X^d = Z^d = I,    q = exp(2*pi*i/d),

and V_ra = P_r X Z^a is the one-parameter deformation whose eigenvector
matrix is the quadratic Fourier companion H_ra.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Union

import numpy as np

from .phases import (ExactPhase, PhaseMatrix, ONE, as_fraction, half_turn_power,
                     q_power, trace_pair)
from .qdft import fra_matrix, hra_matrix

Rational = Union[int, Fraction]

__all__ = [
    "PauliIndex",
    "PauliGroupElement",
    "SineIndex",
    "x_matrix",
    "z_matrix",
    "pr_matrix",
    "vra_matrix",
    "vra_band_matrix",
    "vra_power_phase",
    "expected_vra_eigenvalues",
    "diagonalize_vra",
    "u_ab",
    "vra_q_commutation_checks",
    "weyl_relation_check",
    "pauli_trace_orthogonality",
    "uab_commutators",
    "pauli_compose",
    "pauli_element_matrix",
    "t_matrix",
    "sine_product_check",
    "sine_commutator_check",
    "regular_representation_check",
]


class PauliIndex(NamedTuple):
    a: int
    b: int


class PauliGroupElement(NamedTuple):
    """q^a X^b Z^c with all three exponents reduced mod d."""

    a: int
    b: int
    c: int


class SineIndex(NamedTuple):
    """Unreduced integer pair labelling a sine-algebra generator."""

    n1: int
    n2: int


def x_matrix(d: int) -> PhaseMatrix:
    """Cyclic shift: X|n> = |n-1 mod d>, ones on the superdiagonal and corner."""
    return PhaseMatrix([[ONE if j == (i + 1) % d else None for j in range(d)]
                        for i in range(d)])


def z_matrix(d: int) -> PhaseMatrix:
    """Clock matrix diag(1, q, ..., q^(d-1))."""
    return PhaseMatrix.diagonal([q_power(d, n) for n in range(d)])


def pr_matrix(d: int, r: Rational) -> PhaseMatrix:
    """diag(1, ..., 1, exp(i*pi*(d-1)*r)); r must be rational for exactness."""
    corner = half_turn_power(as_fraction(r) * (d - 1))
    return PhaseMatrix.diagonal([ONE] * (d - 1) + [corner])


def vra_band_matrix(d: int, r: Rational = 0, a: int = 0) -> PhaseMatrix:
    """V_ra from its explicit band form: (V)_{n-1,n} = q^{na}, corner e^{i*pi*(d-1)r}."""
    a = a % d
    rows: list[list[ExactPhase | None]] = [[None] * d for _ in range(d)]
    for n in range(1, d):
        rows[n - 1][n] = q_power(d, n * a)
    rows[d - 1][0] = half_turn_power(as_fraction(r) * (d - 1))
    return PhaseMatrix(rows)


def vra_matrix(d: int, r: Rational = 0, a: int = 0) -> PhaseMatrix:
    """V_ra = P_r X Z^a, identical to the explicit band matrix."""
    m = pr_matrix(d, r) @ x_matrix(d) @ (z_matrix(d) ** (a % d))
    assert isinstance(m, PhaseMatrix)
    return m


def vra_power_phase(d: int, r: Rational, a: int) -> ExactPhase:
    """Global phase of (V_ra)^d, namely exp(i*pi*(d-1)(r+a))."""
    return half_turn_power((as_fraction(r) + a) * (d - 1))


def expected_vra_eigenvalues(d: int, r: Rational = 0, a: int = 0) -> np.ndarray:
    """Eigenvalue q^{(d-1)(r+a)/2 - alpha} attached to column alpha of H_ra."""
    lead = q_power(d, Fraction(d - 1, 2) * (as_fraction(r) + a)).to_complex()
    return np.array([lead * q_power(d, -al).to_complex() for al in range(d)])


def diagonalize_vra(d: int, r: Rational = 0, a: int = 0) -> np.ndarray:
    """Return H_ra^dag V_ra H_ra, diagonal with the expected spectrum."""
    h = hra_matrix(d, r, a).to_complex()
    v = vra_matrix(d, r, a).to_complex()
    return h.conj().T @ v @ h


def u_ab(d: int, idx: PauliIndex | tuple[int, int]) -> PhaseMatrix:
    """Generalized Pauli matrix X^a Z^b, exact."""
    a, b = idx
    a %= d
    b %= d
    # (X^a Z^b)_{n,m} = q^{mb} when m = n + a mod d
    rows: list[list[ExactPhase | None]] = [[None] * d for _ in range(d)]
    for n in range(d):
        m = (n + a) % d
        rows[n][m] = q_power(d, m * b)
    return PhaseMatrix(rows)


def vra_q_commutation_checks(d: int, r: Rational, a: int) -> tuple[bool, bool]:
    """Exact q-commutation relations of the V family.

    First:  V_ra Z = q Z V_ra, valid for every r.
    Second: V_ra V_r0 = q^{-a} V_r0 V_ra, valid for every r; at r = 0 (and
    more generally whenever (d-1)r is even, so the corner phase is +1) the
    second relation is the familiar V_ra X = q^{-a} X V_ra, since X = V_00.
    For other r the bare-X form fails on the wrap-around column, which is
    why the deformed shift V_r0 replaces X here.
    """
    z = z_matrix(d)
    v = vra_matrix(d, r, a)
    v0 = vra_matrix(d, r, 0)
    first = (v @ z) == (z @ v).scaled_by(q_power(d, 1))
    second = (v @ v0) == (v0 @ v).scaled_by(q_power(d, -a))
    return first, second


def weyl_relation_check(d: int, m: int, n: int) -> bool:
    """X^m Z^n = q^{mn} Z^n X^m exactly, X^d = Z^d = I exactly, and
    F^dag X F = Z within 1e-10."""
    x = x_matrix(d)
    z = z_matrix(d)
    xm, zn = x ** m, z ** n
    if xm @ zn != (zn @ xm).scaled_by(q_power(d, m * n)):
        return False
    ident = PhaseMatrix.identity(d)
    if x ** d != ident or z ** d != ident:
        return False
    f = fra_matrix(d).to_complex()
    return bool(np.max(np.abs(f.conj().T @ x.to_complex() @ f
                              - z.to_complex())) < 1e-10)


def pauli_trace_orthogonality(d: int) -> float:
    """Max deviation of tr(u_ab^dag u_a'b') from d*delta_{aa'}delta_{bb'}.

    Traces are taken on the exact product diagonals, so the return value
    is 0.0 whenever every pairing cancels or matches exactly.
    """
    mats = {(a, b): u_ab(d, (a, b)) for a in range(d) for b in range(d)}
    worst = 0.0
    for (a, b), left in mats.items():
        for (a2, b2), right in mats.items():
            tr = trace_pair(left, right)
            want = d if (a, b) == (a2, b2) else 0
            worst = max(worst, abs(tr - want))
    return worst


def uab_commutators(d: int, idx: tuple[int, int], idx2: tuple[int, int]) -> tuple[bool, bool]:
    """Exact checks of the closed forms

    [u, u'] = (q^{-ba'} - q^{-ab'}) u_{a+a', b+b'}
    {u, u'} = (q^{-ba'} + q^{-ab'}) u_{a+a', b+b'}

    Each side is evaluated as a complex matrix built from exact phases and
    compared within 1e-13 (the coefficients are sums of two phases, which
    leave pure phase arithmetic).
    """
    a, b = idx
    a2, b2 = idx2
    left = u_ab(d, idx).to_complex()
    right = u_ab(d, idx2).to_complex()
    both = u_ab(d, (a + a2, b + b2)).to_complex()
    qba = q_power(d, -b * a2).to_complex()
    qab = q_power(d, -a * b2).to_complex()
    comm_ok = bool(np.max(np.abs(left @ right - right @ left
                                 - (qba - qab) * both)) < 1e-13)
    anti_ok = bool(np.max(np.abs(left @ right + right @ left
                                 - (qba + qab) * both)) < 1e-13)
    return comm_ok, anti_ok


def pauli_compose(d: int, g: PauliGroupElement | tuple[int, int, int],
                  g2: PauliGroupElement | tuple[int, int, int]) -> PauliGroupElement:
    """Composition law of the order-d^3 Pauli group:
    (a, b, c)(a', b', c') = (a + a' - c b', b + b', c + c') mod d."""
    a, b, c = g
    a2, b2, c2 = g2
    return PauliGroupElement((a + a2 - c * b2) % d, (b + b2) % d, (c + c2) % d)


def pauli_element_matrix(d: int, g: PauliGroupElement | tuple[int, int, int]) -> PhaseMatrix:
    """Matrix q^a X^b Z^c of a Pauli group element."""
    a, b, c = g
    return u_ab(d, (b, c)).scaled_by(q_power(d, a))


def t_matrix(d: int, s: SineIndex | tuple[int, int]) -> PhaseMatrix:
    """Sine-algebra generator T_(n1,n2) = q^{n1 n2/2} Z^{n1} X^{n2}."""
    n1, n2 = s
    m = (z_matrix(d) ** (n1 % d)) @ (x_matrix(d) ** (n2 % d))
    assert isinstance(m, PhaseMatrix)
    return m.scaled_by(q_power(d, Fraction(n1 * n2, 2)))


def sine_product_check(d: int, m: tuple[int, int], n: tuple[int, int]) -> bool:
    """T_m T_n = q^{-(m x n)/2} T_{m+n} exactly, with m x n = m1 n2 - m2 n1."""
    m1, m2 = m
    n1, n2 = n
    lhs = t_matrix(d, m) @ t_matrix(d, n)
    cross = m1 * n2 - m2 * n1
    rhs = t_matrix(d, (m1 + n1, m2 + n2)).scaled_by(q_power(d, Fraction(-cross, 2)))
    return lhs == rhs


def sine_commutator_check(d: int, m: tuple[int, int], n: tuple[int, int]) -> float:
    """Residual of [T_m, T_n] = -2i sin(pi (m x n)/d) T_{m+n}."""
    m1, m2 = m
    n1, n2 = n
    tm = t_matrix(d, m).to_complex()
    tn = t_matrix(d, n).to_complex()
    cross = m1 * n2 - m2 * n1
    coeff = -2j * np.sin(np.pi * cross / d)
    rhs = coeff * t_matrix(d, (m1 + n1, m2 + n2)).to_complex()
    return float(np.max(np.abs(tm @ tn - tn @ tm - rhs)))


def regular_representation_check(d: int, tol: float = 1e-10) -> bool:
    """Spectrum of X is exactly the d-th roots of unity, each once."""
    eigs = np.linalg.eigvals(x_matrix(d).to_complex())
    roots = np.exp(2j * np.pi * np.arange(d) / d)
    counts = [int(np.sum(np.abs(eigs - root) < tol)) for root in roots]
    return counts == [1] * d
