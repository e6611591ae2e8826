"""Dense exact matrices over Q(i): the matrix-model side of the verification.

Houses the symplectic form Omega_0, the complex structure J, the block map
Phi from complex n x n matrices to real 2n x 2n ones, and the membership
predicates for the groups and algebras under test.
"""

from __future__ import annotations

from .rational import GaussianRational, ZERO, ONE, gq


class ComplexMatrix:
    """Immutable dense matrix with GaussianRational entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(gq(v) for v in row) for row in entries)
        if not entries or not entries[0]:
            raise ValueError("matrix must be non-empty")
        cols = len(entries[0])
        if any(len(r) != cols for r in entries):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexMatrix is immutable")

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, size):
        return cls([[ONE if r == c else ZERO for c in range(size)] for r in range(size)])

    @classmethod
    def block2(cls, tl, tr, bl, br):
        """The 2x2 block matrix [[tl, tr], [bl, br]]."""
        for m in (tr, bl, br):
            if m.rows != tl.rows or m.cols != tl.cols:
                raise ValueError("blocks must share a shape")
        top = [list(a) + list(b) for a, b in zip(tl.entries, tr.entries)]
        bot = [list(a) + list(b) for a, b in zip(bl.entries, br.entries)]
        return cls(top + bot)

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def __eq__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        self._same_shape(other)
        return ComplexMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __sub__(self, other):
        self._same_shape(other)
        return ComplexMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = gq(c)
        return ComplexMatrix([[v * c for v in row] for row in self.entries])

    def __mul__(self, other):
        if not isinstance(other, ComplexMatrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in product")
        cols = list(zip(*other.entries))
        return ComplexMatrix(
            [
                [sum((a * b for a, b in zip(row, col)), ZERO) for col in cols]
                for row in self.entries
            ]
        )

    def __rmul__(self, other):
        return self.scale(other)

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def transpose(self):
        return ComplexMatrix(list(zip(*self.entries)))

    def conjugate(self):
        return ComplexMatrix([[v.conjugate() for v in row] for row in self.entries])

    def dagger(self):
        return self.conjugate().transpose()

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace needs a square matrix")
        return sum((self.entries[j][j] for j in range(self.rows)), ZERO)

    def is_zero(self):
        return all(not v for row in self.entries for v in row)

    def is_real(self):
        return all(v.is_real() for row in self.entries for v in row)

    def commutator(self, other):
        return self * other - other * self

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.entries)
        return f"<ComplexMatrix {self.rows}x{self.cols}: {body}>"


def omega0(n):
    """The standard symplectic form [[0, I], [-I, 0]] on R^{2n}."""
    ident = ComplexMatrix.identity(n)
    zero = ComplexMatrix.zeros(n)
    return ComplexMatrix.block2(zero, ident, -ident, zero)


def jmat(n):
    """The compatible complex structure [[0, -I], [I, 0]] on R^{2n}."""
    ident = ComplexMatrix.identity(n)
    zero = ComplexMatrix.zeros(n)
    return ComplexMatrix.block2(zero, -ident, ident, zero)


def phi_map(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Realification M = [[A, B], [-B, A]] of the complex matrix A + iB.

    A and B must be real n x n; the image commutes with J by construction
    and carries matrix products to matrix products.
    """
    if a.rows != a.cols or a.rows != b.rows or b.rows != b.cols:
        raise ValueError("A and B must be square of equal size")
    if not (a.is_real() and b.is_real()):
        raise ValueError("A and B must have real entries")
    return ComplexMatrix.block2(a, b, -b, a)


def realify(u: ComplexMatrix) -> ComplexMatrix:
    """phi applied to an arbitrary complex square matrix (split re/im parts)."""
    re = ComplexMatrix([[GaussianRational(v.re) for v in row] for row in u.entries])
    im = ComplexMatrix([[GaussianRational(v.im) for v in row] for row in u.entries])
    return phi_map(re, im)


_ETA3 = ComplexMatrix(
    [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
)


def membership(m: ComplexMatrix, predicate: str) -> bool:
    """Exact membership tests.

    symplectic-group:   M^T Omega M = Omega          (2n x 2n)
    symplectic-algebra: M^T Omega + Omega M = 0
    commutes-with-J:    M J = J M
    unitary:            M^dag M = I
    su12:               M^dag eta + eta M = 0 and tr M = 0, eta antidiagonal 1s (3 x 3)
    """
    if m.rows != m.cols:
        raise ValueError("membership tests need a square matrix")
    if predicate in ("symplectic-group", "symplectic-algebra", "commutes-with-J"):
        if m.rows % 2:
            raise ValueError("need even size for symplectic predicates")
        n = m.rows // 2
        if predicate == "symplectic-group":
            om = omega0(n)
            return m.transpose() * om * m == om
        if predicate == "symplectic-algebra":
            om = omega0(n)
            return (m.transpose() * om + om * m).is_zero()
        jj = jmat(n)
        return m * jj == jj * m
    if predicate == "unitary":
        return m.dagger() * m == ComplexMatrix.identity(m.rows)
    if predicate == "su12":
        if m.rows != 3:
            raise ValueError("su12 test needs a 3x3 matrix")
        return (m.dagger() * _ETA3 + _ETA3 * m).is_zero() and not m.trace()
    raise ValueError(f"unknown predicate {predicate!r}")


def un_matrix_basis(n):
    """A real-coefficient basis of u(n) as complex skew-Hermitian matrices:
    i E_jj; E_jk - E_kj and i(E_jk + E_kj) for j < k."""
    basis = []
    i1 = GaussianRational(0, 1)
    for j in range(n):
        rows = [[ZERO] * n for _ in range(n)]
        rows[j][j] = i1
        basis.append(ComplexMatrix(rows))
    for j in range(n):
        for k in range(j + 1, n):
            rows = [[ZERO] * n for _ in range(n)]
            rows[j][k] = ONE
            rows[k][j] = -ONE
            basis.append(ComplexMatrix(rows))
            rows = [[ZERO] * n for _ in range(n)]
            rows[j][k] = i1
            rows[k][j] = i1
            basis.append(ComplexMatrix(rows))
    return basis
