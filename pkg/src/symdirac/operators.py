"""Catalog of the named differential operators.

Each entry is built exactly as displayed in the source conventions, with
degree-zero terms (the +n in E+n, the 1/2 delta_jk in the X family)
represented as constant terms.  Indexed families take 1-based (j, k).
"""

from __future__ import annotations

from fractions import Fraction

from .rational import GaussianRational, I, ONE
from .weyl import WeylOperator

HALF = GaussianRational(Fraction(1, 2))
I_HALF = GaussianRational(0, Fraction(1, 2))


def _acc(n, pieces):
    out = WeylOperator.zero(n)
    for coeff, powers in pieces:
        out = out + WeylOperator.single(n, coeff, **powers)
    return out


# -- simple operators ---------------------------------------------------------

def dirac(n):
    """D_s = sum_j (i q_j dy_j - dq_j dx_j)."""
    return _acc(
        n,
        [
            p
            for j in range(1, n + 1)
            for p in (
                (I, {"q": {j: 1}, "dy": {j: 1}}),
                (-ONE, {"dq": {j: 1}, "dx": {j: 1}}),
            )
        ],
    )


def dirac_dual(n):
    """X_s = sum_j (i q_j x_j + y_j dq_j)."""
    return _acc(
        n,
        [
            p
            for j in range(1, n + 1)
            for p in (
                (I, {"q": {j: 1}, "x": {j: 1}}),
                (ONE, {"y": {j: 1}, "dq": {j: 1}}),
            )
        ],
    )


def dirac_twist(n):
    """~D_s = sum_j (i q_j dx_j + dy_j dq_j)."""
    return _acc(
        n,
        [
            p
            for j in range(1, n + 1)
            for p in (
                (I, {"q": {j: 1}, "dx": {j: 1}}),
                (ONE, {"dy": {j: 1}, "dq": {j: 1}}),
            )
        ],
    )


def dirac_dual_twist(n):
    """~X_s = sum_j (x_j dq_j - i y_j q_j)."""
    return _acc(
        n,
        [
            p
            for j in range(1, n + 1)
            for p in (
                (ONE, {"x": {j: 1}, "dq": {j: 1}}),
                (-I, {"y": {j: 1}, "q": {j: 1}}),
            )
        ],
    )


def euler(n):
    """E = sum_j (x_j dx_j + y_j dy_j)."""
    return _acc(
        n,
        [
            p
            for j in range(1, n + 1)
            for p in (
                (ONE, {"x": {j: 1}, "dx": {j: 1}}),
                (ONE, {"y": {j: 1}, "dy": {j: 1}}),
            )
        ],
    )


def euler_shifted(n):
    """E + n, the grading element that absorbs the central constant."""
    return euler(n) + WeylOperator.constant(n, n)


def laplacian(n):
    """Delta = sum_j (dx_j^2 + dy_j^2)."""
    return _acc(
        n,
        [
            p
            for j in range(1, n + 1)
            for p in ((ONE, {"dx": {j: 2}}), (ONE, {"dy": {j: 2}}))
        ],
    )


def r_squared(n):
    """r^2 = sum_j (x_j^2 + y_j^2)."""
    return _acc(
        n,
        [p for j in range(1, n + 1) for p in ((ONE, {"x": {j: 2}}), (ONE, {"y": {j: 2}}))],
    )


def oscillator(n):
    """O = sum_j (i(x_j dy_j - y_j dx_j) + dq_j^2 - q_j^2)."""
    return _acc(
        n,
        [
            p
            for j in range(1, n + 1)
            for p in (
                (I, {"x": {j: 1}, "dy": {j: 1}}),
                (-I, {"y": {j: 1}, "dx": {j: 1}}),
                (ONE, {"dq": {j: 2}}),
                (-ONE, {"q": {j: 2}}),
            )
        ],
    )


def hermite(n):
    """H = (1/2) sum_j (dq_j^2 - q_j^2), the spinor-side oscillator hamiltonian."""
    return _acc(
        n,
        [
            p
            for j in range(1, n + 1)
            for p in ((HALF, {"dq": {j: 2}}), (-HALF, {"q": {j: 2}}))
        ],
    )


def dolbeault(n):
    """D_z = (D_s + i ~D_s)/2."""
    return (dirac(n) + dirac_twist(n).scale(I)).scale(HALF)


def dolbeault_dag(n):
    """D_z^dag = (D_s - i ~D_s)/2."""
    return (dirac(n) - dirac_twist(n).scale(I)).scale(HALF)


def ladder_down(n, j):
    """F_j = q_j + dq_j."""
    return _acc(n, [(ONE, {"q": {j: 1}}), (ONE, {"dq": {j: 1}})])


def ladder_up(n, j):
    """F_j^dag = q_j - dq_j."""
    return _acc(n, [(ONE, {"q": {j: 1}}), (-ONE, {"dq": {j: 1}})])


# -- the two sp(2n,R) realisations --------------------------------------------

def sp_x(n, j, k):
    """X_jk = x_j dx_k - y_k dy_j - (q_k dq_j + 1/2 delta_jk), 1 <= j <= k <= n."""
    if not j <= k:
        raise ValueError("X family requires j <= k")
    pieces = [
        (ONE, {"x": {j: 1}, "dx": {k: 1}}),
        (-ONE, {"y": {k: 1}, "dy": {j: 1}}),
        (-ONE, {"q": {k: 1}, "dq": {j: 1}}),
    ]
    op = _acc(n, pieces)
    if j == k:
        op = op + WeylOperator.constant(n, -HALF)
    return op


def sp_y(n, j, k):
    """Y_jk = x_j dy_k + x_k dy_j + i dq_j dq_k (j < k); Y_jj = x_j dy_j + i/2 dq_j^2."""
    if j == k:
        return _acc(n, [(ONE, {"x": {j: 1}, "dy": {j: 1}}), (I_HALF, {"dq": {j: 2}})])
    if not j < k:
        raise ValueError("Y family requires j <= k")
    return _acc(
        n,
        [
            (ONE, {"x": {j: 1}, "dy": {k: 1}}),
            (ONE, {"x": {k: 1}, "dy": {j: 1}}),
            (I, {"dq": {j: 1, k: 1}}),
        ],
    )


def sp_z(n, j, k):
    """Z_jk = y_j dx_k + y_k dx_j + i q_j q_k (j < k); Z_jj = y_j dx_j + i/2 q_j^2."""
    if j == k:
        return _acc(n, [(ONE, {"y": {j: 1}, "dx": {j: 1}}), (I_HALF, {"q": {j: 2}})])
    if not j < k:
        raise ValueError("Z family requires j <= k")
    return _acc(
        n,
        [
            (ONE, {"y": {j: 1}, "dx": {k: 1}}),
            (ONE, {"y": {k: 1}, "dx": {j: 1}}),
            (I, {"q": {j: 1, k: 1}}),
        ],
    )


def sp_x_twist(n, j, k):
    """~X_jk = x_j dx_k - y_k dy_j + q_j dq_k + 1/2 delta_jk.

    The spinor part carries q_j dq_k, mirroring the q_k dq_j of the untilded
    X_jk: the twist swaps the roles of q and dq.  With q_k dq_j instead the
    family neither closes at dim 2n^2+n nor leaves ~D_s invariant (checked
    exactly), so that variant is rejected.
    """
    if not j <= k:
        raise ValueError("X~ family requires j <= k")
    op = _acc(
        n,
        [
            (ONE, {"x": {j: 1}, "dx": {k: 1}}),
            (-ONE, {"y": {k: 1}, "dy": {j: 1}}),
            (ONE, {"q": {j: 1}, "dq": {k: 1}}),
        ],
    )
    if j == k:
        op = op + WeylOperator.constant(n, HALF)
    return op


def sp_x_twist_verbatim(n, j, k):
    """The q_k dq_j variant of ~X_jk; kept so the failure is demonstrable."""
    if not j <= k:
        raise ValueError("X~ family requires j <= k")
    op = _acc(
        n,
        [
            (ONE, {"x": {j: 1}, "dx": {k: 1}}),
            (-ONE, {"y": {k: 1}, "dy": {j: 1}}),
            (ONE, {"q": {k: 1}, "dq": {j: 1}}),
        ],
    )
    if j == k:
        op = op + WeylOperator.constant(n, HALF)
    return op


def sp_y_twist(n, j, k):
    """~Y_jk = x_j dy_k + x_k dy_j - i q_j q_k (j < k); ~Y_jj = x_j dy_j - i/2 q_j^2."""
    if j == k:
        return _acc(n, [(ONE, {"x": {j: 1}, "dy": {j: 1}}), (-I_HALF, {"q": {j: 2}})])
    if not j < k:
        raise ValueError("Y~ family requires j <= k")
    return _acc(
        n,
        [
            (ONE, {"x": {j: 1}, "dy": {k: 1}}),
            (ONE, {"x": {k: 1}, "dy": {j: 1}}),
            (-I, {"q": {j: 1, k: 1}}),
        ],
    )


def sp_z_twist(n, j, k):
    """~Z_jk = y_j dx_k + y_k dx_j - i dq_j dq_k (j < k); ~Z_jj = y_j dx_j - i/2 dq_j^2."""
    if j == k:
        return _acc(n, [(ONE, {"y": {j: 1}, "dx": {j: 1}}), (-I_HALF, {"dq": {j: 2}})])
    if not j < k:
        raise ValueError("Z~ family requires j <= k")
    return _acc(
        n,
        [
            (ONE, {"y": {j: 1}, "dx": {k: 1}}),
            (ONE, {"y": {k: 1}, "dx": {j: 1}}),
            (-I, {"dq": {j: 1, k: 1}}),
        ],
    )


# -- the u(n) realisation ------------------------------------------------------

def un_a(n, j, k):
    """A_jk = y_j dx_k + y_k dx_j - x_j dy_k - x_k dy_j + i(q_j q_k - dq_j dq_k), j < k."""
    if not j < k:
        raise ValueError("A family requires j < k")
    return _acc(
        n,
        [
            (ONE, {"y": {j: 1}, "dx": {k: 1}}),
            (ONE, {"y": {k: 1}, "dx": {j: 1}}),
            (-ONE, {"x": {j: 1}, "dy": {k: 1}}),
            (-ONE, {"x": {k: 1}, "dy": {j: 1}}),
            (I, {"q": {j: 1, k: 1}}),
            (-I, {"dq": {j: 1, k: 1}}),
        ],
    )


def un_b(n, j):
    """B_jj = y_j dx_j - x_j dy_j + i/2 (q_j^2 - dq_j^2)."""
    return _acc(
        n,
        [
            (ONE, {"y": {j: 1}, "dx": {j: 1}}),
            (-ONE, {"x": {j: 1}, "dy": {j: 1}}),
            (I_HALF, {"q": {j: 2}}),
            (-I_HALF, {"dq": {j: 2}}),
        ],
    )


def un_c(n, j, k):
    """C_jk = x_j dx_k - x_k dx_j + y_j dy_k - y_k dy_j + q_j dq_k - q_k dq_j, j < k."""
    if not j < k:
        raise ValueError("C family requires j < k")
    return _acc(
        n,
        [
            (ONE, {"x": {j: 1}, "dx": {k: 1}}),
            (-ONE, {"x": {k: 1}, "dx": {j: 1}}),
            (ONE, {"y": {j: 1}, "dy": {k: 1}}),
            (-ONE, {"y": {k: 1}, "dy": {j: 1}}),
            (ONE, {"q": {j: 1}, "dq": {k: 1}}),
            (-ONE, {"q": {k: 1}, "dq": {j: 1}}),
        ],
    )


# -- generator lists -----------------------------------------------------------

def sp_family_first(n):
    """The first sp(2n,R) realisation as printed: labelled generators."""
    gens = []
    for j in range(1, n + 1):
        for k in range(j, n + 1):
            gens.append((f"X[{j},{k}]", sp_x(n, j, k)))
    for j in range(1, n + 1):
        for k in range(j, n + 1):
            gens.append((f"Y[{j},{k}]", sp_y(n, j, k)))
            gens.append((f"Z[{j},{k}]", sp_z(n, j, k)))
    return gens


def sp_family_second(n):
    gens = []
    for j in range(1, n + 1):
        for k in range(j, n + 1):
            gens.append((f"Xt[{j},{k}]", sp_x_twist(n, j, k)))
    for j in range(1, n + 1):
        for k in range(j, n + 1):
            gens.append((f"Yt[{j},{k}]", sp_y_twist(n, j, k)))
            gens.append((f"Zt[{j},{k}]", sp_z_twist(n, j, k)))
    return gens


def un_family(n):
    """All n^2 generators of the u(n) realisation."""
    gens = [(f"B[{j},{j}]", un_b(n, j)) for j in range(1, n + 1)]
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            gens.append((f"A[{j},{k}]", un_a(n, j, k)))
            gens.append((f"C[{j},{k}]", un_c(n, j, k)))
    return gens


OCTET_LABELS = ("D_s", "Dt_s", "Delta", "X_s", "E", "O", "Xt_s", "r2")


def octet(n, shifted_euler=False):
    """The eight table operators in row order; E is replaced by E+n on request."""
    ops = [
        dirac(n),
        dirac_twist(n),
        laplacian(n),
        dirac_dual(n),
        euler_shifted(n) if shifted_euler else euler(n),
        oscillator(n),
        dirac_dual_twist(n),
        r_squared(n),
    ]
    labels = list(OCTET_LABELS)
    if shifted_euler:
        labels[4] = "E+n"
    return list(zip(labels, ops))


# -- name lookup ----------------------------------------------------------------

_SIMPLE = {
    "D_s": dirac,
    "X_s": dirac_dual,
    "Dt_s": dirac_twist,
    "Xt_s": dirac_dual_twist,
    "E": euler,
    "E+n": euler_shifted,
    "Delta": laplacian,
    "r2": r_squared,
    "O": oscillator,
    "H": hermite,
    "D_z": dolbeault,
    "D_z_dag": dolbeault_dag,
}

_ALIASES = {
    "~D_s": "Dt_s",
    "~X_s": "Xt_s",
    "En": "E+n",
    "Dz": "D_z",
    "Dz_dag": "D_z_dag",
    "r^2": "r2",
}

_ONE_INDEX = {"F": ladder_down, "F_dag": ladder_up, "B": None}

_TWO_INDEX = {
    "X": sp_x,
    "Y": sp_y,
    "Z": sp_z,
    "Xt": sp_x_twist,
    "Yt": sp_y_twist,
    "Zt": sp_z_twist,
    "A": un_a,
    "C": un_c,
    "B": None,
}


def catalog(name, n, indices=None):
    """Look up an operator by name; indexed families need (j,) or (j, k).

    Raises KeyError for an unknown name, ValueError/IndexError for indices
    that are missing, out of range or violate the family's constraint.
    """
    name = _ALIASES.get(name, name)
    if name in _SIMPLE:
        if indices:
            raise ValueError(f"{name} takes no indices")
        return _SIMPLE[name](n)
    if name in ("F", "F_dag"):
        if not indices or len(indices) != 1:
            raise ValueError(f"{name} takes a single index (j,)")
        return _ONE_INDEX[name](n, indices[0])
    if name == "B":
        if not indices or len(set(indices)) != 1:
            raise ValueError("B takes indices (j, j)")
        return un_b(n, indices[0])
    if name in _TWO_INDEX:
        if not indices or len(indices) != 2:
            raise ValueError(f"{name} takes indices (j, k)")
        return _TWO_INDEX[name](n, indices[0], indices[1])
    raise KeyError(f"unknown operator name: {name}")


def catalog_names():
    simple = sorted(_SIMPLE)
    families = sorted(set(_TWO_INDEX) | {"F", "F_dag"})
    return simple, families
