"""Exact graded matrices, nullspaces and kernel-dimension reports.

Operators act on the graded block P_k (x, y)  x  S_{<=m} (q).  The codomain
basis is always enlarged to absorb every degree shift of the operator, so a
computed kernel is the true kernel of the restriction, never a truncation
artifact.  All ranks and nullspaces are exact over Q(i).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, asdict
from fractions import Fraction
from math import comb, lcm

from . import _core
from .operators import dirac, dirac_twist, hermite, oscillator, euler, un_b
from .monomials import compositions, count_monomials
from .rational import GaussianRational, ZERO, ONE
from .spinor import PLAIN, WEIGHTED, MODELS
from .weyl import WeylOperator, commutator


class GradedBasis:
    """Ordered monomial basis of P_k tensor S_{<=m}: keys (x | y | q),
    base degree exactly k, spinor degree at most m, lexicographic within
    each degree block."""

    __slots__ = ("n", "base_degree", "spinor_cap", "monomials", "index")

    def __init__(self, n, base_degree, spinor_cap):
        if n < 1 or base_degree < 0 or spinor_cap < 0:
            raise ValueError("need n >= 1, k >= 0, m >= 0")
        monos = []
        for base in compositions(base_degree, 2 * n):
            for j in range(spinor_cap + 1):
                for qpow in compositions(j, n):
                    monos.append(base + qpow)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "base_degree", base_degree)
        object.__setattr__(self, "spinor_cap", spinor_cap)
        object.__setattr__(self, "monomials", tuple(monos))
        object.__setattr__(self, "index", {m: i for i, m in enumerate(monos)})

    def __setattr__(self, name, value):
        raise AttributeError("GradedBasis is immutable")

    @property
    def size(self):
        return len(self.monomials)

    @classmethod
    def empty(cls, n):
        basis = object.__new__(cls)
        object.__setattr__(basis, "n", n)
        object.__setattr__(basis, "base_degree", -1)
        object.__setattr__(basis, "spinor_cap", 0)
        object.__setattr__(basis, "monomials", ())
        object.__setattr__(basis, "index", {})
        return basis


@dataclass
class SparseRationalMatrix:
    """Sparse exact matrix: one entry per (row, col), no stored zeros."""

    rows: int
    cols: int
    entries: dict

    def column(self, c):
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def row_dicts(self):
        out = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def apply_to(self, vec):
        """Matrix times a sparse {col: coeff} vector."""
        out = {}
        for (r, c), v in self.entries.items():
            x = vec.get(c)
            if x is None:
                continue
            cur = out.get(r, ZERO)
            s = cur + v * x
            if s:
                out[r] = s
            elif r in out:
                del out[r]
        return out

    @classmethod
    def stack(cls, mats):
        """Vertical stack over a common column space."""
        cols = mats[0].cols
        if any(m.cols != cols for m in mats):
            raise ValueError("column mismatch in stack")
        entries = {}
        off = 0
        for m in mats:
            for (r, c), v in m.entries.items():
                entries[(r + off, c)] = v
            off += m.rows
        return cls(off, cols, entries)


def _monomial_apply(op_terms, nv, key):
    """Exact action of normal-ordered terms on one monomial key."""
    out = {}
    for okey, oc in op_terms.items():
        coeff = oc
        new = list(key)
        dead = False
        for v in range(nv):
            e = okey[nv + v]
            if e:
                a = new[v]
                if a < e:
                    dead = True
                    break
                fall = 1
                for t in range(e):
                    fall *= a - t
                coeff = coeff * fall
                new[v] = a - e
        if dead:
            continue
        for v in range(nv):
            if okey[v]:
                new[v] += okey[v]
        kk = tuple(new)
        cur = out.get(kk, ZERO)
        s = cur + coeff
        if s:
            out[kk] = s
        elif kk in out:
            del out[kk]
    return out


def operator_matrix(op: WeylOperator, src: GradedBasis, model=PLAIN):
    """Exact matrix of op on the graded block, codomain auto-enlarged.

    The operator must shift base degree uniformly (D_s, ~D_s drop it by 1;
    spectrum-type operators keep it); mixed base-degree shifts are rejected.
    Returns (matrix, codomain_basis).
    """
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    if op.n != src.n:
        raise ValueError("dimension mismatch")
    eff = op.gaussian_conjugate() if model == WEIGHTED else op
    if eff.is_zero():
        return SparseRationalMatrix(0, src.size, {}), GradedBasis.empty(src.n)
    shifts = eff.base_shifts()
    if len(shifts) != 1:
        raise ValueError("operator has mixed base-degree shifts; not graded")
    base_shift = next(iter(shifts))
    raise_q = max(0, max(eff.spinor_shifts()))
    dst_degree = src.base_degree + base_shift
    if dst_degree < 0:
        return SparseRationalMatrix(0, src.size, {}), GradedBasis.empty(src.n)
    dst = GradedBasis(src.n, dst_degree, src.spinor_cap + raise_q)
    nv = 3 * src.n
    entries = {}
    for c, mono in enumerate(src.monomials):
        image = _monomial_apply(eff.terms, nv, mono)
        for kk, v in image.items():
            r = dst.index[kk]
            entries[(r, c)] = v
    return SparseRationalMatrix(dst.size, src.size, entries), dst


# -- exact linear algebra -------------------------------------------------------

def _gaussian_int_rows(mat: SparseRationalMatrix):
    """Rows scaled to Gaussian-integer entries (kills denominators)."""
    rows = [dict() for _ in range(mat.rows)]
    for (r, c), v in mat.entries.items():
        rows[r][c] = v
    out = []
    for row in rows:
        if not row:
            out.append({})
            continue
        scale = lcm(*(v.den for v in row.values())) if len(row) > 1 else next(
            iter(row.values())
        ).den
        out.append(
            {
                c: ((v.an * scale) // v.den, (v.bn * scale) // v.den)
                for c, v in row.items()
            }
        )
    return out


def matrix_rank(mat: SparseRationalMatrix) -> int:
    return _core.sparse_rank(_gaussian_int_rows(mat), mat.cols)


def nullspace(mat: SparseRationalMatrix):
    """Canonical exact nullspace basis (reduced-echelon free-column form)."""
    rows = [dict() for _ in range(mat.rows)]
    for (r, c), v in mat.entries.items():
        rows[r][c] = v.triple()
    rank, _pivots, basis = _core.sparse_nullspace(rows, mat.cols)
    return [
        {c: GaussianRational.from_triple(t) for c, t in vec.items()} for vec in basis
    ]


def _component_split(rows, ncols):
    """Connected components of the column graph (rows connect their columns)."""
    parent = list(range(ncols))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for row in rows:
        cols = list(row)
        for c in cols[1:]:
            union(cols[0], c)
    groups = {}
    for c in range(ncols):
        groups.setdefault(find(c), []).append(c)
    comp_rows = {root: [] for root in groups}
    for row in rows:
        if row:
            comp_rows[find(next(iter(row)))].append(row)
    return groups, comp_rows


def kernel_dim(mats) -> int:
    """dim ker of the vertical stack of matrices over a common domain.

    Splits the column graph into connected components first; each component
    is eliminated independently (dimension = columns - rank is additive).
    """
    stack = SparseRationalMatrix.stack(mats)
    rows = [row for row in _gaussian_int_rows(stack) if row]
    groups, comp_rows = _component_split(rows, stack.cols)
    total = 0
    for root, cols in groups.items():
        rws = comp_rows[root]
        if not rws:
            total += len(cols)
            continue
        remap = {c: i for i, c in enumerate(cols)}
        local = [{remap[c]: v for c, v in row.items()} for row in rws]
        total += len(cols) - _core.sparse_rank(local, len(cols))
    return total


# -- reports --------------------------------------------------------------------

@dataclass
class KernelReport:
    """Kernel dimensions of D_s, ~D_s and their joint kernel on one block."""

    n: int
    k: int
    m: int
    model: str
    dim_ker_Ds: int
    dim_ker_DsTilde: int
    dim_joint: int
    holomorphic_lower_bound: int

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    CSV_HEADER = "n,k,m,model,dim_ker_Ds,dim_ker_DsTilde,dim_joint,holomorphic_lower_bound"

    def to_csv_row(self):
        return (
            f"{self.n},{self.k},{self.m},{self.model},{self.dim_ker_Ds},"
            f"{self.dim_ker_DsTilde},{self.dim_joint},{self.holomorphic_lower_bound}"
        )


def monogenic_dims(n, k, m, model=WEIGHTED) -> KernelReport:
    """Exact kernel dimensions on P_k x S_{<=m} in the requested model."""
    src = GradedBasis(n, k, m)
    mat_d, _ = operator_matrix(dirac(n), src, model)
    mat_t, _ = operator_matrix(dirac_twist(n), src, model)
    dim_d = src.size - matrix_rank(mat_d)
    dim_t = src.size - matrix_rank(mat_t)
    dim_joint = kernel_dim([mat_d, mat_t])
    return KernelReport(
        n=n,
        k=k,
        m=m,
        model=model,
        dim_ker_Ds=dim_d,
        dim_ker_DsTilde=dim_t,
        dim_joint=dim_joint,
        holomorphic_lower_bound=count_monomials(k, n),
    )


def hermite_eigenspaces(n, kmax):
    """Exact eigenvalue/dimension pairs of the Hermite operator.

    Works in the Gaussian-weighted model, where the conjugated operator is
    triangular in total q-degree with diagonal -(deg + n/2); each candidate
    eigenvalue -(k + n/2) is certified by an exact nullspace of H - lambda.
    """
    if n < 1 or kmax < 0:
        raise ValueError("need n >= 1, kmax >= 0")
    src = GradedBasis(n, 0, kmax)
    h = hermite(n)
    out = []
    for k in range(kmax + 1):
        lam = GaussianRational(Fraction(-(2 * k + n), 2))
        shifted = h - WeylOperator.constant(n, lam)
        mat, _ = operator_matrix(shifted, src, WEIGHTED)
        dim = src.size - matrix_rank(mat)
        out.append((Fraction(-(2 * k + n), 2), dim))
    return out


def oscillator_split(n):
    """Check O = sum_j i(x_j dy_j - y_j dx_j) + 2H exactly; returns the
    residual operator (zero on success)."""
    rotation = WeylOperator.zero(n)
    for j in range(1, n + 1):
        rotation = rotation + WeylOperator.single(
            n, GaussianRational(0, 1), x={j: 1}, dy={j: 1}
        )
        rotation = rotation + WeylOperator.single(
            n, GaussianRational(0, -1), y={j: 1}, dx={j: 1}
        )
    return oscillator(n) - rotation - hermite(n).scale(2)
