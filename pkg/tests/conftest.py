"""Shared independent oracles for the test suite.

Everything here deliberately avoids the engine's own composition and
elimination paths, so agreement between a test oracle and the engine is a
genuine cross-check.
"""

import random
from fractions import Fraction

import pytest

from symdirac.monomials import compositions
from symdirac.rational import GaussianRational, ZERO, ONE
from symdirac._core import pykernels


# -- one-variable normal ordering by iterated single-step rewriting ---------------

def rewrite_d_u(k, m):
    """Normal order d^k u^m by iterating the single step d u -> u d + 1.

    Words are maps (u_power, d_power) -> integer coefficient.  Returns the
    normal-ordered coefficient dict, computed without binomials/factorials.
    """
    words = {("d" * k + "u" * m): 1}
    done = {}
    while words:
        new = {}
        for word, coeff in words.items():
            pos = word.find("du")
            if pos < 0:
                key = (word.count("u"), word.count("d"))
                done[key] = done.get(key, 0) + coeff
                continue
            swapped = word[:pos] + "ud" + word[pos + 2 :]
            dropped = word[:pos] + word[pos + 2 :]
            new[swapped] = new.get(swapped, 0) + coeff
            new[dropped] = new.get(dropped, 0) + coeff
        words = new
    return {k: v for k, v in done.items() if v}


# -- dense reduced row echelon over Q(i) -------------------------------------------

def dense_rref(rows):
    """Textbook RREF on a dense list-of-lists of GaussianRational.

    Returns (rank, pivot_cols, rref_rows).
    """
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots, mat


def dense_nullspace_dim(rows, ncols):
    if not rows:
        return ncols
    rank, _, _ = dense_rref(rows)
    return ncols - rank


# -- joint-kernel dimensions in the complex/Hermite ladder basis --------------------
#
# Both Dirac operators are invertible combinations of D_z and D_z^dag, so the
# joint kernel equals that of the pair below.  In the basis
# z^alpha zbar^beta H_gamma(q) (physicists' Hermite, weighted model) resp.
# He_gamma(q) (probabilists', plain model):
#   weighted: D_z u = -sum_j 2 a_j g_j u(a-e_j, b, g-e_j)
#             D_z+ u =  sum_j b_j u(a, b-e_j, g+e_j)
#   plain:    D_z u = -sum_j a_j [u(a-e_j, b, g+e_j) + 2 g_j u(a-e_j, b, g-e_j)]
#             D_z+ u =  sum_j b_j u(a, b-e_j, g+e_j)

def ladder_joint_kernel_dim(n, k, m, model):
    basis = []
    for a_deg in range(k + 1):
        for alpha in compositions(a_deg, n):
            for beta in compositions(k - a_deg, n):
                for g in range(m + 1):
                    for gamma in compositions(g, n):
                        basis.append((alpha, beta, gamma))
    rows = {}

    def add(rkey, col, val):
        row = rows.setdefault(rkey, {})
        row[col] = row.get(col, 0) + val

    for col, (alpha, beta, gamma) in enumerate(basis):
        for j in range(n):
            if alpha[j]:
                a2 = alpha[:j] + (alpha[j] - 1,) + alpha[j + 1 :]
                if model == "weighted":
                    if gamma[j]:
                        g2 = gamma[:j] + (gamma[j] - 1,) + gamma[j + 1 :]
                        add(("z", a2, beta, g2), col, -2 * alpha[j] * gamma[j])
                else:
                    gup = gamma[:j] + (gamma[j] + 1,) + gamma[j + 1 :]
                    add(("z", a2, beta, gup), col, -alpha[j])
                    if gamma[j]:
                        g2 = gamma[:j] + (gamma[j] - 1,) + gamma[j + 1 :]
                        add(("z", a2, beta, g2), col, -2 * alpha[j] * gamma[j])
            if beta[j]:
                b2 = beta[:j] + (beta[j] - 1,) + beta[j + 1 :]
                gup = gamma[:j] + (gamma[j] + 1,) + gamma[j + 1 :]
                add(("w", alpha, b2, gup), col, beta[j])
    grows = [
        {c: (v, 0) for c, v in row.items() if v} for row in rows.values()
    ]
    grows = [r for r in grows if r]
    return len(basis) - pykernels.sparse_rank(grows, len(basis))


# -- generator-by-generator Gaussian-model action ------------------------------------

def gaussian_apply_oracle(op, element_coeffs, n):
    """Act on p * exp(-|q|^2/2) one generator at a time via the product rule.

    element_coeffs: {3n-exponent-tuple: GaussianRational} for the stored p.
    Independent of WeylOperator.gaussian_conjugate: each dq_j hit produces
    the two product-rule pieces directly.
    """

    def mul_var(coeffs, v):
        return {tuple(k[t] + (1 if t == v else 0) for t in range(3 * n)): c for k, c in coeffs.items()}

    def diff_var(coeffs, v):
        out = {}
        for k, c in coeffs.items():
            if k[v]:
                kk = tuple(k[t] - (1 if t == v else 0) for t in range(3 * n))
                cur = out.get(kk, ZERO)
                s = cur + c * k[v]
                if s:
                    out[kk] = s
                elif kk in out:
                    del out[kk]
        return out

    def sub(coeffs, other):
        out = dict(coeffs)
        for k, c in other.items():
            cur = out.get(k, ZERO)
            s = cur - c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return out

    total = {}
    for key, oc in op.terms.items():
        cur = dict(element_coeffs)
        # rightmost factors act first: dq, dy, dx blocks, then multiplications
        for j in range(n):
            for _ in range(key[5 * n + j]):
                cur = sub(diff_var(cur, 2 * n + j), mul_var(cur, 2 * n + j))
        for j in range(n):
            for _ in range(key[4 * n + j]):
                cur = diff_var(cur, n + j)
        for j in range(n):
            for _ in range(key[3 * n + j]):
                cur = diff_var(cur, j)
        for v in range(3 * n):
            for _ in range(key[v]):
                cur = mul_var(cur, v)
        for k, c in cur.items():
            add = c * oc
            got = total.get(k, ZERO)
            s = got + add
            if s:
                total[k] = s
            elif k in total:
                del total[k]
    return total


# -- randomized inputs ----------------------------------------------------------------

def random_gq(rng, span=6):
    return GaussianRational(
        Fraction(rng.randint(-span, span), rng.randint(1, 4)),
        Fraction(rng.randint(-span, span), rng.randint(1, 4)),
    )


@pytest.fixture
def rng():
    return random.Random(20240811)
