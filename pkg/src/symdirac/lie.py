"""Lie-span closure, structure constants, Jacobi and Killing-form analysis.

Everything here is exact: linear independence is decided by echelonization
over Q(i), the Killing signature by rational congruence diagonalization.
"""

from __future__ import annotations

import heapq

from dataclasses import dataclass, field
from fractions import Fraction

from .matrix import ComplexMatrix
from .rational import GaussianRational, ZERO, ONE, UNITS
from .weyl import WeylOperator, commutator


class ClosureError(Exception):
    """A bracket left the allowed operator space during closure."""


def _vec(obj):
    if isinstance(obj, WeylOperator):
        return dict(obj.terms)
    if isinstance(obj, ComplexMatrix):
        return {
            (r, c): v
            for r, row in enumerate(obj.entries)
            for c, v in enumerate(row)
            if v
        }
    raise TypeError(f"cannot vectorize {type(obj).__name__}")


def _bracket(a, b):
    if isinstance(a, WeylOperator):
        return commutator(a, b)
    return a.commutator(b)


class LinearSpan:
    """Incremental echelonized span over Q(i) with coordinate tracking.

    Each echelon row is normalized so its minimal coordinate key has
    coefficient 1, and carries its expression over the adopted basis, so
    membership tests double as coordinate computations.
    """

    def __init__(self):
        self.pivots = {}  # pivot key -> (vector, expression over basis indices)
        self.basis = []

    @property
    def dim(self):
        return len(self.basis)

    def _reduce(self, vec):
        # echelon rows have their pivot at their minimal key, so cancelling
        # keys in ascending order only ever introduces larger keys
        vec = {k: v for k, v in vec.items() if v}
        expr = {}
        heap = sorted(vec)
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            if k not in vec:
                continue
            hit = self.pivots.get(k)
            if hit is None:
                continue
            pvec, pexpr = hit
            c = vec[k]
            for kk, vv in pvec.items():
                cur = vec.get(kk)
                if cur is None:
                    s = -(c * vv)
                    if s:
                        vec[kk] = s
                        heapq.heappush(heap, kk)
                else:
                    s = cur - c * vv
                    if s:
                        vec[kk] = s
                    else:
                        del vec[kk]
            for bi, vv in pexpr.items():
                cur = expr.get(bi, ZERO)
                s = cur + c * vv
                if s:
                    expr[bi] = s
                elif bi in expr:
                    del expr[bi]
        return vec, expr

    def coordinates(self, obj):
        """Coordinates of obj over the basis, or None if obj is outside."""
        residual, expr = self._reduce(_vec(obj))
        return None if residual else expr

    def add(self, obj):
        """Adjoin obj if independent; returns True when the span grew."""
        residual, expr = self._reduce(_vec(obj))
        if not residual:
            return False
        idx = len(self.basis)
        self.basis.append(obj)
        pivot = min(residual)
        s = residual[pivot].inverse()
        row_vec = {k: v * s for k, v in residual.items()}
        row_expr = {i: -(v * s) for i, v in expr.items()}
        row_expr[idx] = s
        self.pivots[pivot] = (row_vec, row_expr)
        return True


@dataclass
class LieSpan:
    """A finite-dimensional Lie span: independent basis plus bookkeeping."""

    basis: list
    labels: list
    scalar_field: str = "complex-span"
    central: set = field(default_factory=set)

    @property
    def dim(self):
        return len(self.basis)


class StructureConstants:
    """Bracket tensor over a fixed basis: [e_a, e_b] = sum_k c[a][b][k] e_k."""

    __slots__ = ("dim", "c")

    def __init__(self, dim, c):
        self.dim = dim
        self.c = c

    def entry(self, a, b, k):
        return self.c[a][b].get(k, ZERO)

    def bracket_coords(self, a, b):
        return self.c[a][b]

    def is_real(self):
        return all(
            v.is_real() for row in self.c for cell in row for v in cell.values()
        )

    def rescaled(self, units):
        """Constants of the basis (u_0 e_0, ..., u_{d-1} e_{d-1})."""
        out = []
        for a in range(self.dim):
            row = []
            for b in range(self.dim):
                cell = {}
                for k, v in self.c[a][b].items():
                    w = v * units[a] * units[b] * units[k].inverse()
                    if w:
                        cell[k] = w
                row.append(cell)
            out.append(row)
        return StructureConstants(self.dim, out)

    def drop(self, indices):
        """Quotient by the span of the given (verified central) indices."""
        drop = set(indices)
        for z in drop:
            for b in range(self.dim):
                if any(self.c[z][b].values()) or any(self.c[b][z].values()):
                    raise ValueError(f"index {z} is not central; cannot quotient")
        keep = [i for i in range(self.dim) if i not in drop]
        remap = {old: new for new, old in enumerate(keep)}
        out = []
        for a in keep:
            row = []
            for b in keep:
                cell = {}
                for k, v in self.c[a][b].items():
                    if k in drop:
                        continue
                    cell[remap[k]] = v
                row.append(cell)
            out.append(row)
        return StructureConstants(len(keep), out)


def structure_constants(basis, bracket=None):
    """Expand all pairwise brackets of an independent family over itself.

    Raises ClosureError if some bracket leaves the span.
    """
    bracket = bracket or _bracket
    span = LinearSpan()
    for op in basis:
        if not span.add(op):
            raise ValueError("basis is linearly dependent")
    d = len(basis)
    c = [[None] * d for _ in range(d)]
    for a in range(d):
        c[a][a] = {}
    for a in range(d):
        for b in range(a + 1, d):
            coords = span.coordinates(bracket(basis[a], basis[b]))
            if coords is None:
                raise ClosureError(f"bracket of elements {a}, {b} leaves the span")
            c[a][b] = coords
            c[b][a] = {k: -v for k, v in coords.items()}
    return StructureConstants(d, c)


def span_closure(generators, constants_allowed=False, labels=None, max_dim=64):
    """Iteratively bracket-close the span of the generators over Q(i).

    A bracket producing a new pure-constant element adjoins the canonical
    constant operator 1 when ``constants_allowed`` (it is central there);
    otherwise closure fails with ClosureError.  Returns
    (LieSpan, StructureConstants, closed); the constants are None when the
    iteration cap was hit (the partial span is still reported).
    """
    if not generators:
        raise ValueError("need at least one generator")
    span = LinearSpan()
    adopted = []
    adopted_labels = []
    central = set()
    src_labels = labels or [f"g{i}" for i in range(len(generators))]

    def adopt(op, label):
        # store the part of op independent of the current span, so a bracket
        # whose only new content is a constant is recognized as central
        residual, _ = span._reduce(_vec(op))
        if not residual:
            return False
        if isinstance(op, WeylOperator):
            op = WeylOperator(op.n, residual)
            if op.is_constant():
                if not constants_allowed:
                    raise ClosureError(
                        "closure produced a constant with constants_allowed=False"
                    )
                op = WeylOperator.constant(op.n, 1)
                label = "1"
        if span.add(op):
            adopted.append(op)
            adopted_labels.append(label)
            if isinstance(op, WeylOperator) and op.is_constant():
                central.add(len(adopted) - 1)
            return True
        return False

    for op, label in zip(generators, src_labels):
        adopt(op, label)

    queue = [(a, b) for b in range(len(adopted)) for a in range(b)]
    closed = True
    while queue:
        a, b = queue.pop(0)
        new = _bracket(adopted[a], adopted[b])
        if isinstance(new, WeylOperator) and new.is_zero():
            continue
        if not isinstance(new, WeylOperator) and new.is_zero():
            continue
        before = len(adopted)
        if adopt(new, f"[{adopted_labels[a]},{adopted_labels[b]}]"):
            d = before
            queue.extend((i, d) for i in range(d))
            if len(adopted) > max_dim:
                closed = False
                break
    lie = LieSpan(adopted, adopted_labels, "complex-span", central)
    sc = structure_constants(adopted) if closed else None
    return lie, sc, closed


def jacobi_check(sc: StructureConstants):
    """All basis triples violating Jacobi; empty list means it holds exactly."""
    d = sc.dim
    violations = []
    for a in range(d):
        for b in range(a + 1, d):
            for cc in range(b + 1, d):
                acc = {}
                for x, y, z in ((a, b, cc), (b, cc, a), (cc, a, b)):
                    inner = sc.c[y][z]
                    for m, v in inner.items():
                        outer = sc.c[x][m]
                        for k, w in outer.items():
                            cur = acc.get(k, ZERO)
                            s = cur + v * w
                            if s:
                                acc[k] = s
                            elif k in acc:
                                del acc[k]
                if acc:
                    violations.append((a, b, cc))
    return violations


def killing_matrix(sc: StructureConstants):
    """K(e_a, e_b) = tr(ad e_a o ad e_b), exact."""
    d = sc.dim
    mat = [[ZERO] * d for _ in range(d)]
    for a in range(d):
        for b in range(a, d):
            total = ZERO
            for m in range(d):
                for k, v in sc.c[a][m].items():
                    w = sc.c[b][k].get(m)
                    if w is not None:
                        total = total + v * w
            mat[a][b] = total
            mat[b][a] = total
    return mat


def killing_rank(sc: StructureConstants):
    """Rank of the Killing form over Q(i); equal to dim means nondegenerate."""
    mat = killing_matrix(sc)
    pivots = {}
    rank = 0
    for row in mat:
        vec = {c: v for c, v in enumerate(row) if v}
        while vec:
            kmin = min(vec)
            hit = pivots.get(kmin)
            if hit is None:
                break
            c = vec[kmin]
            for kk, vv in hit.items():
                s = vec.get(kk, ZERO) - c * vv
                if s:
                    vec[kk] = s
                elif kk in vec:
                    del vec[kk]
        if vec:
            kmin = min(vec)
            s = vec[kmin].inverse()
            pivots[kmin] = {k: v * s for k, v in vec.items()}
            rank += 1
    return rank


def killing_signature(sc: StructureConstants):
    """Exact Killing signature (positives, negatives, zeros) by rational
    congruence diagonalization.

    Requires real structure constants (a real-span basis); use
    real_form_rescale first when the constants carry factors of i.
    """
    if not sc.is_real():
        raise ValueError("structure constants are not real; rescale first")
    d = sc.dim
    k = [[v.re for v in row] for row in killing_matrix(sc)]
    pos = neg = zero = 0
    for i in range(d):
        if k[i][i] == 0:
            swap = next((j for j in range(i + 1, d) if k[j][j] != 0), None)
            if swap is not None:
                k[i], k[swap] = k[swap], k[i]
                for row in k:
                    row[i], row[swap] = row[swap], row[i]
            else:
                mix = next((j for j in range(i + 1, d) if k[i][j] != 0), None)
                if mix is None:
                    zero += 1
                    continue
                # basis change e_i += e_mix gives diagonal 2*K[i][mix] != 0
                for t in range(i, d):
                    k[i][t] += k[mix][t]
                for t in range(i, d):
                    k[t][i] += k[t][mix]
        p = k[i][i]
        if p > 0:
            pos += 1
        else:
            neg += 1
        # Schur complement on the trailing block (stays symmetric)
        for j in range(i + 1, d):
            lam = k[i][j] / p
            if lam:
                rowi = k[i]
                rowj = k[j]
                for t in range(i + 1, d):
                    rowj[t] -= lam * rowi[t]
    return pos, neg, zero


def real_form_rescale(sc: StructureConstants):
    """Search unit scalings (1, i, -1, -i per element, deterministic order)
    making every structure constant real; returns (scalars, success)."""
    d = sc.dim
    units = [None] * d

    def partial_ok(t):
        # new constraints once u_t is chosen: triples entirely within 0..t
        # that involve t as a bracket side or as a target component
        for a in range(t + 1):
            for b in range(a + 1, t + 1):
                cell = sc.c[a][b]
                if a != t and b != t:
                    keys = [kk for kk in cell if kk == t]
                else:
                    keys = [kk for kk in cell if kk <= t]
                for kk in keys:
                    v = cell[kk] * units[a] * units[b] * units[kk].inverse()
                    if not v.is_real():
                        return False
        return True

    def dfs(t):
        if t == d:
            return True
        for u in UNITS:
            units[t] = u
            if partial_ok(t) and dfs(t + 1):
                return True
        units[t] = None
        return False

    if dfs(0):
        return list(units), True
    return [], False
