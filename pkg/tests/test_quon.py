import cmath
from fractions import Fraction
from math import pi, sqrt

import numpy as np
import pytest

from mubkit.quon import (q_number, q_factorial, quon_rep, tensor_index,
                         build_h, build_vra_quonic, vra_tensor_power_phase,
                         restrict_to_j, su2_generators, eigenbasis,
                         eigenvalue_vra, overlap_same_a,
                         rotation_conjugation_residual)
from mubkit.weyl import vra_matrix
from mubkit.qdft import hra_matrix


def j_of(k):
    return Fraction(k - 1, 2)


def test_q_number_basics():
    for k in (2, 3, 7):
        assert q_number(1, k) == 1
        assert q_number(0, k) == 1  # defined convention, not the n>=1 formula
    got = q_number(2, 3)
    assert abs(got - (1 + cmath.exp(2j * pi / 3))) < 1e-15
    assert abs(got - cmath.exp(1j * pi / 3)) < 1e-15


def test_q_factorial_basics():
    assert q_factorial(0, 5) == 1
    assert q_factorial(1, 5) == 1
    assert abs(q_factorial(2, 3) - cmath.exp(1j * pi / 3)) < 1e-15


def test_quon_rep_k2_shift():
    rep = quon_rep(2)
    assert rep.x_plus.tolist() == [[0, 0], [1, 0]]
    assert np.all(rep.x_plus @ np.array([0, 1]) == 0)  # x_+ kills the top state


def test_number_operator_diagonal():
    for k in (2, 4, 6):
        rep = quon_rep(k)
        assert np.allclose(rep.n_x, np.diag(np.arange(k)))
        assert np.allclose(rep.n_y, np.diag(np.arange(k)))


def test_lowering_coefficient_k3():
    rep = quon_rep(3)
    e2 = np.zeros(3); e2[2] = 1
    got = rep.x_minus @ e2
    assert abs(got[1] - cmath.exp(1j * pi / 3)) < 1e-15


@pytest.mark.parametrize("k", range(2, 9))
def test_quon_algebra_relations(k):
    q = cmath.exp(2j * pi / k)
    rep = quon_rep(k)
    for plus, minus, num in ((rep.x_plus, rep.x_minus, rep.n_x),
                             (rep.y_plus, rep.y_minus, rep.n_y)):
        qcomm = minus @ plus - q * plus @ minus
        assert np.max(np.abs(qcomm - np.eye(k))) < 1e-13
        assert np.max(np.abs(num @ plus - plus @ num - plus)) < 1e-13
        assert np.max(np.abs(num @ minus - minus @ num + minus)) < 1e-13
        # nilpotency is structural: the k-th powers are exactly zero
        assert not np.any(np.linalg.matrix_power(plus, k))
        assert not np.any(np.linalg.matrix_power(minus, k))
        assert np.array_equal(num, num.conj().T)


def test_build_h_entries():
    k = 3
    h = build_h(k)
    assert h[tensor_index(k, 0, 2), tensor_index(k, 0, 2)] == 0
    assert h[tensor_index(k, 1, 0), tensor_index(k, 1, 0)] == 1
    assert h[tensor_index(k, 2, 1), tensor_index(k, 2, 1)] == pytest.approx(2.0)


def test_vra_action_table_k2_trivial_parameters():
    k = 2
    v = build_vra_quonic(k, 0, 0)
    f = lambda n1, n2: tensor_index(k, n1, n2)
    e = np.eye(4)
    # |1,1) -> |0,0);  |0,1) -> |1,0);  |0,0) -> |1,1);  |1,0) -> |0,1)
    assert np.allclose(v @ e[f(1, 1)], e[f(0, 0)], atol=1e-14)
    assert np.allclose(v @ e[f(0, 1)], e[f(1, 0)], atol=1e-14)
    assert np.allclose(v @ e[f(0, 0)], e[f(1, 1)], atol=1e-14)
    assert np.allclose(v @ e[f(1, 0)], e[f(0, 1)], atol=1e-14)


def test_vra_action_main_row_k3():
    k = 3
    q = cmath.exp(2j * pi / 3)
    v = build_vra_quonic(k, 0, 1)
    state = np.zeros(9); state[tensor_index(k, 0, 2)] = 1
    got = v @ state
    want = np.zeros(9, complex); want[tensor_index(k, 1, 1)] = q ** 2
    assert np.max(np.abs(got - want)) < 1e-14


def test_vra_double_corner_phase():
    k = 4
    r = Fraction(1, 3)
    v = build_vra_quonic(k, r, 2)
    state = np.zeros(16); state[tensor_index(k, k - 1, 0)] = 1
    got = v @ state
    want = np.zeros(16, complex)
    want[tensor_index(k, 0, k - 1)] = cmath.exp(1j * pi * (k - 1) * float(r))
    assert np.max(np.abs(got - want)) < 1e-13


@pytest.mark.parametrize("k,r,a", [(2, 0, 0), (3, 1, 2), (4, Fraction(1, 2), 3),
                                   (5, Fraction(1, 3), 2), (6, 1, 1)])
def test_vra_kth_power_is_global_phase(k, r, a):
    v = build_vra_quonic(k, r, a)
    got = np.linalg.matrix_power(v, k)
    want = vra_tensor_power_phase(k, r, a) * np.eye(k * k)
    assert np.max(np.abs(got - want)) < 1e-12


def test_vra_kth_power_matches_printed_case():
    # at k=3, r=1, a=2 the constant reduces to e^{i phi_r} = e^{2 i pi} = 1
    v = build_vra_quonic(3, 1, 2)
    assert np.max(np.abs(np.linalg.matrix_power(v, 3) - np.eye(9))) < 1e-13


def test_restrict_h_gives_ladder_weights():
    k = 4
    j = j_of(k)
    h = restrict_to_j(build_h(k), j)
    # diagonal sqrt((j+m)(j-m+1)) with m = j - n
    for n in range(k):
        m = float(j) - n
        assert h[n, n] == pytest.approx(sqrt((float(j) + m) * (float(j) - m + 1)))


def test_restrict_identity():
    k = 5
    assert np.allclose(restrict_to_j(np.eye(k * k), j_of(k)), np.eye(k))


def test_restrict_detects_leakage():
    k = 3
    rep = quon_rep(k)
    leaky = np.kron(rep.x_plus, np.eye(k))  # raises n1 only, leaves the subspace
    with pytest.raises(ValueError, match="not stable"):
        restrict_to_j(leaky, j_of(k))


def test_restricted_v_equals_direct_2x2():
    got = restrict_to_j(build_vra_quonic(2, 0, 0), Fraction(1, 2))
    assert np.max(np.abs(got - vra_matrix(2, 0, 0).to_complex())) < 1e-14


@pytest.mark.parametrize("k", range(2, 9))
def test_oracle_equivalence_sweep(k):
    for r in (0, 1, Fraction(1, 3)):
        for a in range(k):
            got = restrict_to_j(build_vra_quonic(k, r, a), j_of(k))
            want = vra_matrix(k, r, a).to_complex()
            assert np.max(np.abs(got - want)) < 1e-12


def test_su2_standard_spin_half():
    trip = su2_generators(Fraction(1, 2), 0, 0)
    assert np.allclose(trip.j_plus, [[0, 1], [0, 0]], atol=1e-14)
    assert np.allclose(trip.j_minus, [[0, 0], [1, 0]], atol=1e-14)
    assert np.allclose(trip.j_z, [[0.5, 0], [0, -0.5]], atol=1e-14)


def test_jz_eigenvalues_j1():
    trip = su2_generators(1, 0, 2)
    # component n corresponds to m = j - n
    assert np.allclose(trip.j_z, np.diag([1.0, 0.0, -1.0]), atol=1e-12)


def test_jplus_coefficient_j1_a1():
    trip = su2_generators(1, 0, 1)
    q = cmath.exp(2j * pi / 3)
    # j_+ |1,0> = q^{(j-m)a} sqrt((j-m)(j+m+1)) |1,1> = q sqrt(2) |1,1>
    col = trip.j_plus[:, 1]  # m = 0 is computational index 1
    want = np.zeros(3, complex); want[0] = q * sqrt(2)
    assert np.max(np.abs(col - want)) < 1e-12


@pytest.mark.parametrize("two_j", range(1, 12))
def test_su2_closure(two_j):
    j = Fraction(two_j, 2)
    for r in (0, Fraction(1, 2)):
        for a in range(two_j + 1):
            t = su2_generators(j, r, a)
            comm = lambda x, y: x @ y - y @ x
            assert np.max(np.abs(comm(t.j_z, t.j_plus) - t.j_plus)) < 1e-10
            assert np.max(np.abs(comm(t.j_z, t.j_minus) + t.j_minus)) < 1e-10
            assert np.max(np.abs(comm(t.j_plus, t.j_minus) - 2 * t.j_z)) < 1e-10


@pytest.mark.parametrize("two_j", range(1, 12))
def test_casimir(two_j):
    j = Fraction(two_j, 2)
    t = su2_generators(j, Fraction(1, 2), 1 % (two_j + 1))
    casimir = (t.j_plus @ t.j_minus + t.j_minus @ t.j_plus) / 2 + t.j_z @ t.j_z
    jj = float(j) * (float(j) + 1)
    assert np.max(np.abs(casimir - jj * np.eye(two_j + 1))) < 1e-10


def test_eigenbasis_example_spin_half():
    # alpha component phases e^{i pi (a/2 - r/4 + alpha)} and e^{i pi r/4}
    for a in (0, 1):
        for r in (0, 1, Fraction(1, 2)):
            vecs = eigenbasis(Fraction(1, 2), r, a)
            for alpha, v in enumerate(vecs):
                top = cmath.exp(1j * pi * (a / 2 - float(r) / 4 + alpha)) / sqrt(2)
                bot = cmath.exp(1j * pi * float(r) / 4) / sqrt(2)
                assert abs(v[0] - top) < 1e-14
                assert abs(v[1] - bot) < 1e-14


def test_eigenbasis_example_spin_one():
    # B_00 at j=1: columns (1,1,1), (q^2,q,1), (q,q^2,1) over sqrt(3)
    q = cmath.exp(2j * pi / 3)
    vecs = eigenbasis(1, 0, 0)
    want = [np.array([1, 1, 1]), np.array([q * q, q, 1]), np.array([q, q * q, 1])]
    for v, w in zip(vecs, want):
        assert np.max(np.abs(v - w / sqrt(3))) < 1e-14


def test_eigenbasis_matches_hra_columns():
    for k in (2, 3, 5):
        for a in range(k):
            h = hra_matrix(k, Fraction(1, 2), a).to_complex()
            vecs = eigenbasis(j_of(k), Fraction(1, 2), a)
            for alpha in range(k):
                assert np.max(np.abs(vecs[alpha] - h[:, alpha])) < 1e-14


def test_eigenbasis_orthonormal():
    vecs = eigenbasis(Fraction(3, 2), Fraction(1, 2), 2)
    for i, u in enumerate(vecs):
        for jj, w in enumerate(vecs):
            want = 1.0 if i == jj else 0.0
            assert abs(np.vdot(u, w) - want) < 1e-13


@pytest.mark.parametrize("k", range(2, 9))
def test_eigenvalue_equation(k):
    j = j_of(k)
    for r in (0, 1, Fraction(1, 3)):
        for a in range(k):
            v = restrict_to_j(build_vra_quonic(k, r, a), j)
            for alpha, vec in enumerate(eigenbasis(j, r, a)):
                lam = eigenvalue_vra(j, r, a, alpha)
                assert np.max(np.abs(v @ vec - lam * vec)) < 1e-12


@pytest.mark.parametrize("k", [2, 3, 4, 5, 7])
def test_pseudo_invariance_under_cyclic_rotations(k):
    for p in range(k):
        assert rotation_conjugation_residual(j_of(k), Fraction(1, 3), 1 % k, p) < 1e-12


def test_overlap_same_vector_is_one():
    assert overlap_same_a(1, Fraction(1, 2), Fraction(1, 2), 1, 2, 2) == pytest.approx(1)


def test_overlap_same_r_distinct_alpha_vanishes():
    assert abs(overlap_same_a(Fraction(3, 2), 1, 1, 2, 0, 3)) < 1e-14


def test_overlap_two_route_worked_case():
    j = 1
    direct = np.vdot(eigenbasis(j, 0, 0)[0], eigenbasis(j, Fraction(1, 2), 0)[0])
    closed = overlap_same_a(j, 0, Fraction(1, 2), 0, 0, 0)
    assert abs(direct - closed) < 1e-12


@pytest.mark.parametrize("two_j", range(1, 7))
def test_overlap_two_route_sweep(two_j):
    j = Fraction(two_j, 2)
    d = two_j + 1
    grid = (0, Fraction(1, 2), 1)
    for r in grid:
        for s in grid:
            basis_r = eigenbasis(j, r, 0)
            basis_s = eigenbasis(j, s, 0)
            for alpha in range(d):
                for beta in range(d):
                    direct = np.vdot(basis_r[alpha], basis_s[beta])
                    closed = overlap_same_a(j, r, s, 0, alpha, beta)
                    assert abs(direct - closed) < 1e-10


def test_invalid_spin_rejected():
    with pytest.raises(ValueError):
        eigenbasis(Fraction(1, 3), 0, 0)
    with pytest.raises(ValueError):
        q_number(1, 1)


def test_angular_state_relabeling_bijection():
    from mubkit.quon import AngularState
    j = Fraction(5, 2)
    seen = set()
    m = j
    while m >= -j:
        state = AngularState(j, m)
        seen.add(state.n)
        assert AngularState.from_index(j, state.n).m == m
        m -= 1
    assert seen == set(range(6))


def test_angular_state_rejects_bad_projection():
    from mubkit.quon import AngularState
    with pytest.raises(ValueError):
        AngularState(1, Fraction(1, 2))
    with pytest.raises(ValueError):
        AngularState(1, 2)
