"""The verification suites behind `symdirac verify`.

Each suite certifies one family of algebraic claims as exact operator or
matrix identities; failures carry the nonzero witness.  Findings that are
factual records rather than pass/fail claims (the Fischer-duality scalars,
the convention notes) go into the report's notes section.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict

from . import operators as cat
from .matrix import (
    ComplexMatrix,
    membership,
    omega0,
    jmat,
    phi_map,
    realify,
    un_matrix_basis,
)
from .kernel import oscillator_split
from .lie import (
    jacobi_check,
    killing_rank,
    killing_signature,
    real_form_rescale,
    span_closure,
    structure_constants,
)
from .rational import GaussianRational, ONE, I
from .spinor import adjointness_probe
from .table import paper_table_diff, MISMATCH
from .weyl import WeylOperator, commutator

SCHEMA_VERSION = "1"

SUITE_NAMES = (
    "sl2-relations",
    "sp-closures",
    "un-invariance",
    "su12-closure-and-signature",
    "heisenberg-triples",
    "dolbeault-identity",
    "table-diff",
    "phi-lemma",
    "oscillator-split",
)


@dataclass
class Check:
    name: str
    ok: bool
    witness: str | None = None


@dataclass
class SuiteResult:
    name: str
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.ok for c in self.checks)

    def zero(self, name, op):
        """Assert an operator/matrix is exactly zero; witness otherwise."""
        ok = op.is_zero()
        self.checks.append(
            Check(name, ok, None if ok else _pretty(op))
        )
        return ok

    def true(self, name, cond, witness=None):
        self.checks.append(Check(name, bool(cond), None if cond else witness))
        return bool(cond)

    def equal(self, name, got, expect):
        ok = got == expect
        self.checks.append(
            Check(name, ok, None if ok else f"got {got}, expected {expect}")
        )
        return ok


def _pretty(obj):
    return obj.pretty() if isinstance(obj, WeylOperator) else repr(obj)


@dataclass
class VerificationReport:
    n: int
    suites: list
    notes: list
    schema_version: str = SCHEMA_VERSION

    @property
    def passed(self):
        return all(s.passed for s in self.suites)

    def to_dict(self):
        return {
            "schema_version": self.schema_version,
            "n": self.n,
            "passed": self.passed,
            "suites": [
                {
                    "name": s.name,
                    "passed": s.passed,
                    "checks": [asdict(c) for c in s.checks],
                }
                for s in self.suites
            ],
            "notes": self.notes,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self):
        lines = []
        for s in self.suites:
            mark = "pass" if s.passed else "FAIL"
            lines.append(f"[{mark}] {s.name} ({sum(c.ok for c in s.checks)}/{len(s.checks)} checks)")
            for c in s.checks:
                if not c.ok:
                    lines.append(f"    FAIL {c.name}: {c.witness}")
        for note in self.notes:
            lines.append(f"note: {note['name']}: {note['detail']}")
        lines.append("overall: " + ("pass" if self.passed else "FAIL"))
        return "\n".join(lines)

    def to_csv(self):
        rows = ["suite,check,status"]
        for s in self.suites:
            for c in s.checks:
                rows.append(f"{s.name},{c.name},{'pass' if c.ok else 'fail'}")
        return "\n".join(rows)


# -- individual suites -----------------------------------------------------------


def suite_sl2(nmax):
    s = SuiteResult("sl2-relations")
    for n in range(1, nmax + 1):
        D, X, En = cat.dirac(n), cat.dirac_dual(n), cat.euler_shifted(n)
        T, Y = cat.dirac_twist(n), cat.dirac_dual_twist(n)
        s.zero(f"n={n} [E+n,X_s]-X_s", commutator(En, X) - X)
        s.zero(f"n={n} [E+n,D_s]+D_s", commutator(En, D) + D)
        s.zero(f"n={n} [D_s,X_s]+i(E+n)", commutator(D, X) + En.scale(I))
        s.zero(f"n={n} [E+n,Xt_s]-Xt_s", commutator(En, Y) - Y)
        s.zero(f"n={n} [E+n,Dt_s]+Dt_s", commutator(En, T) + T)
        s.zero(f"n={n} [Dt_s,Xt_s]+i(E+n)", commutator(T, Y) + En.scale(I))
    return s


def suite_sp_closures(nmax):
    s = SuiteResult("sp-closures")
    for n in range(1, nmax + 1):
        want = 2 * n * n + n
        for which, fam, op in (
            ("first", cat.sp_family_first(n), cat.dirac(n)),
            ("second", cat.sp_family_second(n), cat.dirac_twist(n)),
        ):
            span, sc, closed = span_closure([g for _, g in fam])
            s.true(f"n={n} {which} family closes", closed)
            s.equal(f"n={n} {which} family dim", span.dim, want)
            s.equal(f"n={n} {which} family jacobi violations", len(jacobi_check(sc)) if sc else -1, 0)
            bad = next(
                (label for label, g in fam if not commutator(g, op).is_zero()), None
            )
            s.true(f"n={n} {which} family leaves its Dirac operator invariant", bad is None, bad)
        # cross-invariance must fail somewhere (the realisations differ)
        cross1 = next(
            (
                label
                for label, g in cat.sp_family_second(n)
                if not commutator(g, cat.dirac(n)).is_zero()
            ),
            None,
        )
        s.true(
            f"n={n} cross-invariance fails (witness [{cross1}, D_s] != 0)",
            cross1 is not None,
            "second realisation unexpectedly fixes D_s",
        )
    # the verbatim q_k dq_j variant of ~X_12 must break invariance (n=2)
    bad = commutator(cat.sp_x_twist_verbatim(2, 1, 2), cat.dirac_twist(2))
    s.true(
        "verbatim ~X_12 (q_k dq_j) breaks Dt_s-invariance; corrected q_j dq_k adopted",
        not bad.is_zero(),
        "verbatim variant unexpectedly invariant",
    )
    return s


def suite_un_invariance(nmax):
    s = SuiteResult("un-invariance")
    for n in range(1, nmax + 1):
        fam = cat.un_family(n)
        span, sc, closed = span_closure([g for _, g in fam])
        s.true(f"n={n} u(n) family closes", closed)
        s.equal(f"n={n} u(n) family dim", span.dim, n * n)
        s.equal(f"n={n} u(n) jacobi violations", len(jacobi_check(sc)) if sc else -1, 0)
        D, T = cat.dirac(n), cat.dirac_twist(n)
        for label, g in fam:
            s.zero(f"n={n} [{label},D_s]", commutator(g, D))
            s.zero(f"n={n} [{label},Dt_s]", commutator(g, T))
    return s


def suite_su12(nmax):
    s = SuiteResult("su12-closure-and-signature")
    fixed_sc = {}
    for n in range(1, nmax + 1):
        gens = [cat.dirac(n), cat.dirac_twist(n), cat.dirac_dual(n), cat.dirac_dual_twist(n)]
        span, sc, closed = span_closure(
            gens, constants_allowed=True, labels=["D_s", "Dt_s", "X_s", "Xt_s"]
        )
        s.true(f"n={n} span from 4 Dirac/dual generators closes", closed)
        s.equal(f"n={n} dim of generated span", span.dim, 8)
        s.equal(f"n={n} central elements generated", len(span.central), 0)

        table_ops = [op for _, op in cat.octet(n, shifted_euler=False)]
        span9, sc9, closed9 = span_closure(
            table_ops,
            constants_allowed=True,
            labels=list(cat.OCTET_LABELS),
        )
        s.true(f"n={n} table-operator span closes with constants", closed9)
        s.equal(f"n={n} table-operator span dim (with center)", span9.dim, 9)
        s.equal(f"n={n} center size", len(span9.central), 1)
        quotient = sc9.drop(span9.central)
        s.equal(f"n={n} quotient dim", quotient.dim, 8)
        s.equal(f"n={n} jacobi violations (quotient)", len(jacobi_check(quotient)), 0)
        s.equal(f"n={n} killing rank (nondegenerate)", killing_rank(quotient), 8)
        units, ok = real_form_rescale(quotient)
        s.true(f"n={n} unit rescale to a real basis exists", ok)
        if ok:
            rsc = quotient.rescaled(units)
            s.true(f"n={n} rescaled constants are real", rsc.is_real())
            s.equal(f"n={n} killing signature", killing_signature(rsc), (4, 4, 0))
        octet_shifted = [op for _, op in cat.octet(n, shifted_euler=True)]
        sc_fixed = structure_constants(octet_shifted)
        fixed_sc[n] = sc_fixed
        s.equal(f"n={n} fixed octet (E+n) closes without constants", sc_fixed.dim, 8)
    if nmax >= 2:
        base = fixed_sc[1]
        same = all(
            fixed_sc[n].c[a][b] == base.c[a][b]
            for n in range(2, nmax + 1)
            for a in range(8)
            for b in range(8)
        )
        s.true(
            f"structure constants n-independent (E replaced by E+n, n=1..{nmax})",
            same,
            "constants differ across n",
        )
    return s


def suite_heisenberg(nmax):
    s = SuiteResult("heisenberg-triples")
    for n in range(1, nmax + 1):
        for tag, (a, b, c) in (
            ("D_s,Dt_s,Delta", (cat.dirac(n), cat.dirac_twist(n), cat.laplacian(n))),
            ("X_s,Xt_s,r2", (cat.dirac_dual(n), cat.dirac_dual_twist(n), cat.r_squared(n))),
        ):
            span, sc, closed = span_closure([a, b, c])
            s.true(f"n={n} span{{{tag}}} closes", closed)
            s.equal(f"n={n} span{{{tag}}} dim", span.dim, 3)
            ab = commutator(a, b)
            s.true(
                f"n={n} [{tag.split(',')[0]},{tag.split(',')[1]}] lies in span of the third",
                ab.proportionality(c) is not None,
                ab.pretty(),
            )
            s.zero(f"n={n} third element central in span{{{tag}}} (vs first)", commutator(a, c))
            s.zero(f"n={n} third element central in span{{{tag}}} (vs second)", commutator(b, c))
            # two-step nilpotency: all double brackets vanish
            trip = (a, b, c)
            nil = all(
                commutator(x, commutator(y, z)).is_zero()
                for x in trip
                for y in trip
                for z in trip
            )
            s.true(f"n={n} span{{{tag}}} is two-step nilpotent", nil)
    return s


def _dz(n, j, conj=False):
    """dz_j = (dx_j - i dy_j)/2; dzbar with +i (the adopted convention)."""
    sign = I if conj else -I
    return (
        WeylOperator.single(n, ONE, dx={j: 1})
        + WeylOperator.single(n, sign, dy={j: 1})
    ).scale(cat.HALF)


def suite_dolbeault(nmax):
    s = SuiteResult("dolbeault-identity")
    for n in range(1, nmax + 1):
        D, T = cat.dirac(n), cat.dirac_twist(n)
        lhs_plus = (D + T.scale(I)).scale(cat.HALF)
        lhs_minus = (D - T.scale(I)).scale(cat.HALF)
        rhs_plus = WeylOperator.zero(n)
        rhs_minus = WeylOperator.zero(n)
        for j in range(1, n + 1):
            rhs_plus = rhs_plus - cat.ladder_down(n, j).compose(_dz(n, j))
            rhs_minus = rhs_minus + cat.ladder_up(n, j).compose(_dz(n, j, conj=True))
        s.zero(f"n={n} (D_s+i Dt_s)/2 + sum F_j dz_j", lhs_plus - rhs_plus)
        s.zero(f"n={n} (D_s-i Dt_s)/2 - sum F_j^dag dzbar_j", lhs_minus - rhs_minus)
        s.zero(f"n={n} catalog D_z matches the factored form", cat.dolbeault(n) - rhs_plus)
        s.zero(
            f"n={n} catalog D_z^dag matches the factored form",
            cat.dolbeault_dag(n) - rhs_minus,
        )
        # with the i-less dzbar variant the identity must fail (documented typo)
        if n == 1:
            dzbar_noi = (
                WeylOperator.single(1, ONE, dx={1: 1})
                + WeylOperator.single(1, ONE, dy={1: 1})
            ).scale(cat.HALF)
            wrong = cat.ladder_up(1, 1).compose(dzbar_noi)
            s.true(
                "i-less dzbar convention breaks the factorization (typo confirmed)",
                not (lhs_minus - wrong).is_zero(),
                "identity unexpectedly holds without i",
            )
    return s


def suite_table_diff(nmax):
    s = SuiteResult("table-diff")
    for n in range(1, nmax + 1):
        td = paper_table_diff(n)
        s.true(f"n={n} computed table exactly antisymmetric", td.computed_antisymmetric)
        s.true(f"n={n} computed table jacobi-consistent", td.computed_jacobi_ok)
        flagged = {tuple(v) for v in td.printed_antisymmetry_violations}
        s.true(
            f"n={n} printed antisymmetry violations flagged",
            ("E", "r2") in flagged,
            str(td.printed_antisymmetry_violations),
        )
        bad = [
            (c.row, c.col)
            for c in td.cells
            if c.status == MISMATCH
            and (c.row, c.col) not in flagged
            and (c.col, c.row) not in flagged
        ]
        s.true(
            f"n={n} every cell classifies (mismatches only at flagged cells)",
            not bad,
            str(bad),
        )
    return s


def _signed_permutations(n):
    """A deterministic sample of signed permutation matrices of size n."""
    import itertools

    mats = []
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            rows = [[0] * n for _ in range(n)]
            for r, (c, sg) in enumerate(zip(perm, signs)):
                rows[r][c] = sg
            mats.append(ComplexMatrix(rows))
    return mats


def suite_phi_lemma():
    s = SuiteResult("phi-lemma")
    n = 2
    om = omega0(n)
    jj = jmat(n)
    # algebra level: full basis of {A skew} x {B symmetric}
    skew = [ComplexMatrix([[0, 1], [-1, 0]])]
    sym = [
        ComplexMatrix([[1, 0], [0, 0]]),
        ComplexMatrix([[0, 0], [0, 1]]),
        ComplexMatrix([[0, 1], [1, 0]]),
    ]
    zero2 = ComplexMatrix.zeros(2)
    elements = [(a, zero2) for a in skew] + [(zero2, b) for b in sym]
    for idx, (a, b) in enumerate(elements):
        m = phi_map(a, b)
        s.true(
            f"algebra element {idx}: M^T Omega + Omega M = 0",
            (m.transpose() * om + om * m).is_zero(),
        )
        s.true(f"algebra element {idx}: M J = J M", m * jj == jj * m)
    basis = un_matrix_basis(n)
    ok_brackets = True
    for x in basis:
        for y in basis:
            lhs = realify(x.commutator(y))
            rhs = realify(x).commutator(realify(y))
            if lhs != rhs:
                ok_brackets = False
    s.true("phi preserves brackets on the full u(2) basis", ok_brackets)
    # group level spot checks
    ident = ComplexMatrix.identity(2 * n)
    jblock = ComplexMatrix.block2(
        ComplexMatrix.zeros(n), ComplexMatrix.identity(n), -ComplexMatrix.identity(n), ComplexMatrix.zeros(n)
    )
    group_samples = [("identity", ident), ("[[0,I],[-I,0]]", jblock)]
    for gi, p in enumerate(_signed_permutations(n)):
        group_samples.append((f"phi(signed permutation {gi})", phi_map(p, ComplexMatrix.zeros(n))))
    for label, m in group_samples:
        s.true(f"{label}: symplectic", membership(m, "symplectic-group"))
        s.true(f"{label}: commutes with J", membership(m, "commutes-with-J"))
    # su(1,2) matrix shape checks
    s.true(
        "diag(i,-2i,i) is in su(1,2)",
        membership(
            ComplexMatrix(
                [
                    [GaussianRational(0, 1), 0, 0],
                    [0, GaussianRational(0, -2), 0],
                    [0, 0, GaussianRational(0, 1)],
                ]
            ),
            "su12",
        ),
    )
    s.true("zero matrix is in su(1,2)", membership(ComplexMatrix.zeros(3), "su12"))
    s.true(
        "diag(1,0,-1) is in su(1,2) (alpha=1 in the parametrized shape)",
        membership(ComplexMatrix([[1, 0, 0], [0, 0, 0], [0, 0, -1]]), "su12"),
    )
    s.true(
        "diag(1,1,-2) is not in su(1,2)",
        not membership(ComplexMatrix([[1, 0, 0], [0, 1, 0], [0, 0, -2]]), "su12"),
    )
    return s


def suite_oscillator(nmax):
    s = SuiteResult("oscillator-split")
    for n in range(1, nmax + 1):
        s.zero(f"n={n} O - (sum i(x dy - y dx) + 2H)", oscillator_split(n))
    return s


def _fischer_notes():
    notes = []
    pr = adjointness_probe(cat.dirac(1), cat.dirac_dual(1), 3)
    adjD = cat.dirac(1).adjoint()
    conj_x = WeylOperator(
        1, {k: c.conjugate() for k, c in cat.dirac_dual(1).terms.items()}
    )
    rel = adjD.proportionality(conj_x)
    notes.append(
        {
            "name": "fischer-duality D_s vs X_s",
            "detail": (
                "under the positive factorial pairing on x, y, q the probe "
                f"<D_s f, g> = c <f, X_s g> is {'consistent' if pr.consistent else 'inconsistent'}"
                + (
                    f" (no unit scalar exists; computed adjoint(D_s) = ({rel}) * conj(X_s),"
                    " the coefficient-conjugated dual)"
                    if rel is not None
                    else ""
                )
            ),
        }
    )
    pr2 = adjointness_probe(cat.dolbeault(1), cat.dolbeault_dag(1), 3)
    notes.append(
        {
            "name": "fischer-duality D_z vs D_z^dag",
            "detail": (
                "the dagger in D_z^dag is "
                + (
                    "the Fischer adjoint under this pairing"
                    if pr2.consistent
                    else "NOT the Fischer adjoint under this pairing (probe inconsistent)"
                )
            ),
        }
    )
    notes.append(
        {
            "name": "dzbar convention",
            "detail": (
                "the displayed dzbar = (dx + dy)/2 lacks the imaginary unit; the "
                "factorization only holds with dzbar = (dx + i dy)/2, which is adopted"
            ),
        }
    )
    notes.append(
        {
            "name": "tilded X family correction",
            "detail": (
                "printed ~X_jk carries q_k dq_j, which breaks closure (dim 20 at n=2) "
                "and ~D_s-invariance; the engine uses q_j dq_k, restoring both"
            ),
        }
    )
    return notes


def run_verification(nmax=3) -> VerificationReport:
    suites = [
        suite_sl2(nmax),
        suite_sp_closures(nmax),
        suite_un_invariance(nmax),
        suite_su12(nmax),
        suite_heisenberg(nmax),
        suite_dolbeault(nmax),
        suite_table_diff(nmax),
        suite_phi_lemma(),
        suite_oscillator(nmax),
    ]
    return VerificationReport(n=nmax, suites=suites, notes=_fischer_notes())
