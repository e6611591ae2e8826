"""Span closure, structure constants, Jacobi, Killing form, real rescale."""

from fractions import Fraction

import pytest

from symdirac.lie import (
    ClosureError,
    StructureConstants,
    jacobi_check,
    killing_matrix,
    killing_rank,
    killing_signature,
    real_form_rescale,
    span_closure,
    structure_constants,
)
from symdirac.operators import (
    dirac,
    dirac_dual,
    dirac_dual_twist,
    dirac_twist,
    euler,
    euler_shifted,
    laplacian,
    octet,
    r_squared,
    sp_family_first,
    un_family,
)
from symdirac.rational import GaussianRational, ZERO, ONE, I
from symdirac.weyl import WeylOperator, commutator


def test_sl2_triple_closure():
    span, sc, closed = span_closure([dirac(1), dirac_dual(1), euler_shifted(1)])
    assert closed and span.dim == 3
    assert jacobi_check(sc) == []
    # [e0, e1] = -i e2 is the only bracket involving e2 on the rhs
    assert sc.c[0][1] == {2: -I}


def test_un_closure_dim4():
    gens = [g for _, g in un_family(2)]
    span, sc, closed = span_closure(gens)
    assert closed and span.dim == 4
    assert jacobi_check(sc) == []


def test_octet_closure_modulo_center():
    ops = [op for _, op in octet(1, shifted_euler=True)]
    span, sc, closed = span_closure(ops)
    assert closed and span.dim == 8
    assert span.central == set()
    assert jacobi_check(sc) == []


def test_closure_with_plain_euler_adjoins_center():
    ops = [op for _, op in octet(2, shifted_euler=False)]
    span, sc, closed = span_closure(ops, constants_allowed=True)
    assert closed and span.dim == 9
    assert len(span.central) == 1
    (z,) = span.central
    assert span.basis[z] == WeylOperator.constant(2, 1)
    quotient = sc.drop(span.central)
    assert quotient.dim == 8
    assert jacobi_check(quotient) == []


def test_constant_residual_raises_without_permission():
    ops = [op for _, op in octet(1, shifted_euler=False)]
    with pytest.raises(ClosureError):
        span_closure(ops, constants_allowed=False)


def test_iteration_cap_reports_partial_span():
    gens = [g for _, g in sp_family_first(2)]
    span, sc, closed = span_closure(gens, max_dim=9)
    assert not closed
    assert sc is None
    assert span.dim >= 9


def test_jacobi_fault_injection():
    _, sc, _ = span_closure([dirac(1), dirac_dual(1), euler_shifted(1)])
    broken = [[dict(cell) for cell in row] for row in sc.c]
    broken[0][1][0] = broken[0][1].get(0, ZERO) + ONE
    broken[1][0][0] = -broken[0][1][0]
    bad = StructureConstants(3, broken)
    violations = jacobi_check(bad)
    assert violations != []
    assert all(len(v) == 3 for v in violations)


def _sl2_real_constants():
    # e, f, h with [h,e]=2e, [h,f]=-2f, [e,f]=h
    two = GaussianRational(2)
    c = [[dict() for _ in range(3)] for _ in range(3)]
    c[2][0] = {0: two}
    c[0][2] = {0: -two}
    c[2][1] = {1: -two}
    c[1][2] = {1: two}
    c[0][1] = {2: ONE}
    c[1][0] = {2: -ONE}
    return StructureConstants(3, c)


def test_killing_sl2_real_oracle():
    sc = _sl2_real_constants()
    # independent oracle: build ad matrices by hand and trace products
    def ad(a):
        rows = [[Fraction(0)] * 3 for _ in range(3)]
        for b in range(3):
            for k, v in sc.c[a][b].items():
                rows[k][b] = v.re
        return rows

    def trace_prod(x, y):
        return sum(
            sum(x[i][j] * y[j][i] for j in range(3)) for i in range(3)
        )

    oracle = [[trace_prod(ad(a), ad(b)) for b in range(3)] for a in range(3)]
    got = killing_matrix(sc)
    assert [[v.re for v in row] for row in got] == oracle
    # sl(2,R) signature is (2,1); Killing form nondegenerate
    assert killing_signature(sc) == (2, 1, 0)
    assert killing_rank(sc) == 3


def test_killing_abelian():
    c = [[{}]]
    sc = StructureConstants(1, c)
    assert killing_signature(sc) == (0, 0, 1)
    assert killing_rank(sc) == 0


def test_killing_requires_real_constants():
    _, sc, _ = span_closure([dirac(1), dirac_dual(1), euler_shifted(1)])
    with pytest.raises(ValueError):
        killing_signature(sc)


def test_rescale_identity_when_already_real():
    sc = _sl2_real_constants()
    units, ok = real_form_rescale(sc)
    assert ok
    assert units == [ONE, ONE, ONE]


def test_rescale_sl2_triple():
    _, sc, _ = span_closure([dirac(1), dirac_dual(1), euler_shifted(1)])
    units, ok = real_form_rescale(sc)
    assert ok
    rescaled = sc.rescaled(units)
    assert rescaled.is_real()
    # a valid hand solution: {D_s, i X_s, E+n}
    hand = sc.rescaled([ONE, I, ONE])
    assert hand.is_real()


def test_su12_octet_signature():
    ops = [op for _, op in octet(2, shifted_euler=True)]
    sc = structure_constants(ops)
    assert killing_rank(sc) == 8
    units, ok = real_form_rescale(sc)
    assert ok
    rsc = sc.rescaled(units)
    assert rsc.is_real()
    assert killing_signature(rsc) == (4, 4, 0)


def test_structure_constants_n_independent():
    tensors = []
    for n in (1, 2, 3):
        ops = [op for _, op in octet(n, shifted_euler=True)]
        tensors.append(structure_constants(ops).c)
    assert tensors[0] == tensors[1] == tensors[2]


def test_structure_constants_reject_dependent_basis():
    with pytest.raises(ValueError):
        structure_constants([dirac(1), dirac(1)])


def test_structure_constants_reject_open_span():
    from symdirac.lie import ClosureError

    with pytest.raises(ClosureError):
        structure_constants([dirac(1), dirac_dual(1)])  # bracket leaves the span


def test_closure_labels_track_provenance():
    span, _, _ = span_closure(
        [dirac(1), dirac_dual(1)], labels=["D_s", "X_s"], constants_allowed=True
    )
    assert span.labels[0] == "D_s"
    assert any(lbl.startswith("[") for lbl in span.labels[2:])
