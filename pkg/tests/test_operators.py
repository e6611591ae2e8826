"""The named-operator catalog: exact displays, indices, families."""

from fractions import Fraction

import pytest

from symdirac.operators import (
    catalog,
    dirac,
    euler_shifted,
    oscillator,
    sp_family_first,
    sp_family_second,
    sp_x_twist_verbatim,
    un_b,
    un_family,
)
from symdirac.rational import GaussianRational, ONE, I
from symdirac.weyl import WeylOperator, commutator, exp_key

I_HALF = GaussianRational(0, Fraction(1, 2))


def test_dirac_display():
    assert catalog("D_s", 1) == WeylOperator(
        1,
        {
            exp_key(1, q={1: 1}, dy={1: 1}): I,
            exp_key(1, dq={1: 1}, dx={1: 1}): -ONE,
        },
    )


def test_oscillator_display():
    assert catalog("O", 1) == WeylOperator(
        1,
        {
            exp_key(1, x={1: 1}, dy={1: 1}): I,
            exp_key(1, y={1: 1}, dx={1: 1}): -I,
            exp_key(1, dq={1: 2}): ONE,
            exp_key(1, q={1: 2}): -ONE,
        },
    )


def test_un_b_display():
    got = catalog("B", 1, (1, 1))
    assert got == WeylOperator(
        1,
        {
            exp_key(1, y={1: 1}, dx={1: 1}): ONE,
            exp_key(1, x={1: 1}, dy={1: 1}): -ONE,
            exp_key(1, q={1: 2}): I_HALF,
            exp_key(1, dq={1: 2}): -I_HALF,
        },
    )
    assert got == un_b(1, 1)


def test_euler_shifted_constant_term():
    en = euler_shifted(3)
    assert en.constant_part() == GaussianRational(3)


def test_aliases():
    assert catalog("~D_s", 2) == catalog("Dt_s", 2)
    assert catalog("En", 2) == catalog("E+n", 2)
    assert catalog("r^2", 1) == catalog("r2", 1)


def test_unknown_name_rejected():
    with pytest.raises(KeyError):
        catalog("Q_s", 1)


def test_index_constraints():
    with pytest.raises(ValueError):
        catalog("A", 2, (2, 1))  # requires j < k
    with pytest.raises(ValueError):
        catalog("A", 2, (1, 1))
    with pytest.raises(ValueError):
        catalog("D_s", 1, (1, 1))  # takes no indices
    with pytest.raises(ValueError):
        catalog("X", 2, (1,))  # needs two indices
    with pytest.raises(IndexError):
        catalog("X", 2, (1, 3))  # out of range
    with pytest.raises(ValueError):
        catalog("B", 2, (1, 2))  # diagonal family


def test_family_sizes():
    assert len(sp_family_first(2)) == 9
    assert len(sp_family_second(3)) == 18
    assert len(un_family(3)) == 9
    assert len(un_family(1)) == 1


def test_indexed_catalog_matches_families():
    fam = dict(sp_family_first(2))
    assert catalog("X", 2, (1, 2)) == fam["X[1,2]"]
    assert catalog("Y", 2, (1, 1)) == fam["Y[1,1]"]
    assert catalog("Z", 2, (1, 2)) == fam["Z[1,2]"]


def test_ladder_symbols():
    f = catalog("F", 2, (1,))
    fd = catalog("F_dag", 2, (1,))
    # [F_j, F_j^dag] = 2
    assert commutator(f, fd) == WeylOperator.constant(2, 2)


def test_verbatim_tilded_x_fails_invariance():
    # the printed q_k dq_j variant does not commute with ~D_s; the catalog
    # carries the corrected q_j dq_k form, which does
    from symdirac.operators import dirac_twist, sp_x_twist

    bad = commutator(sp_x_twist_verbatim(2, 1, 2), dirac_twist(2))
    assert not bad.is_zero()
    good = commutator(sp_x_twist(2, 1, 2), dirac_twist(2))
    assert good.is_zero()
