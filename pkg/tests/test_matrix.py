"""Exact matrix models: Omega_0, J, the Phi map, membership predicates."""

import pytest

from symdirac.matrix import (
    ComplexMatrix,
    jmat,
    membership,
    omega0,
    phi_map,
    realify,
    un_matrix_basis,
)
from symdirac.rational import GaussianRational, ONE, I


def test_phi_identity():
    m = phi_map(ComplexMatrix.identity(2), ComplexMatrix.zeros(2))
    assert m == ComplexMatrix.identity(4)
    assert membership(m, "symplectic-group")
    assert membership(m, "unitary")


def test_phi_of_i_is_the_block_structure():
    # A=0, B=I realifies multiplication by i: [[0, I], [-I, 0]]
    m = phi_map(ComplexMatrix.zeros(2), ComplexMatrix.identity(2))
    om = omega0(2)
    assert m.transpose() * om * m == om
    assert membership(m, "commutes-with-J")


def test_omega_is_symplectic():
    assert membership(omega0(1), "symplectic-group")
    assert membership(omega0(3), "symplectic-group")


def test_phi_algebra_conditions():
    n = 2
    om = omega0(n)
    jj = jmat(n)
    skew = ComplexMatrix([[0, 1], [-1, 0]])
    sym = ComplexMatrix([[2, 1], [1, -3]])
    m = phi_map(skew, sym)
    assert (m.transpose() * om + om * m).is_zero()
    assert m * jj == jj * m
    assert membership(m, "symplectic-algebra")


def test_phi_preserves_brackets_on_u2():
    basis = un_matrix_basis(2)
    assert len(basis) == 4
    for x in basis:
        assert (x.dagger() + x).is_zero()  # skew-Hermitian
        for y in basis:
            assert realify(x.commutator(y)) == realify(x).commutator(realify(y))


def test_phi_multiplicative():
    a = ComplexMatrix([[1, 2], [0, 1]])
    b = ComplexMatrix([[0, 1], [1, 0]])
    u = ComplexMatrix([[GaussianRational(1, 1), 0], [0, GaussianRational(2, -1)]])
    v = ComplexMatrix([[0, GaussianRational(0, 1)], [1, 0]])
    assert realify(u * v) == realify(u) * realify(v)
    assert realify(u + v) == realify(u) + realify(v)


def test_phi_rejects_nonreal_blocks():
    bad = ComplexMatrix([[GaussianRational(0, 1), 0], [0, 0]])
    with pytest.raises(ValueError):
        phi_map(bad, ComplexMatrix.zeros(2))


def test_su12_membership():
    member = ComplexMatrix(
        [
            [GaussianRational(0, 1), 0, 0],
            [0, GaussianRational(0, -2), 0],
            [0, 0, GaussianRational(0, 1)],
        ]
    )
    assert membership(member, "su12")
    assert membership(ComplexMatrix.zeros(3), "su12")
    # quasi-split: a real diagonal element diag(1, 0, -1) belongs
    assert membership(ComplexMatrix([[1, 0, 0], [0, 0, 0], [0, 0, -1]]), "su12")
    assert not membership(ComplexMatrix([[1, 0, 0], [0, 1, 0], [0, 0, -2]]), "su12")
    # general parametrized shape: alpha, beta, gamma complex; c, d real
    a = GaussianRational(1, 2)
    b = GaussianRational(-1, 1)
    g = GaussianRational(3, -1)
    shaped = ComplexMatrix(
        [
            [a, b, GaussianRational(0, 5)],
            [g, a.conjugate() - a, -b.conjugate()],
            [GaussianRational(0, -2), -g.conjugate(), -a.conjugate()],
        ]
    )
    assert membership(shaped, "su12")


def test_membership_errors():
    with pytest.raises(ValueError):
        membership(ComplexMatrix.identity(3), "symplectic-group")
    with pytest.raises(ValueError):
        membership(ComplexMatrix.identity(2), "su12")
    with pytest.raises(ValueError):
        membership(ComplexMatrix.identity(2), "frobnicated")


def test_matrix_arithmetic():
    a = ComplexMatrix([[1, 2], [3, 4]])
    b = ComplexMatrix([[0, 1], [1, 0]])
    assert a * b == ComplexMatrix([[2, 1], [4, 3]])
    assert (a - a).is_zero()
    assert a.trace() == GaussianRational(5)
    assert a.scale(I)[0, 1] == GaussianRational(0, 2)
    with pytest.raises(ValueError):
        a * ComplexMatrix([[1, 2, 3]])
