"""Normal-ordered polynomial-coefficient differential operators.

A :class:`WeylOperator` over n base pairs acts on functions of
x_1..x_n, y_1..y_n (base variables) and q_1..q_n (spinor variables).
Terms are kept in normal order -- all multiplication operators to the left
of all derivatives -- keyed by a flat exponent tuple of length 6n:

    (x | y | q | dx | dy | dq)     each block of length n.

Normal order makes operator equality a structural comparison of term dicts.
"""

from __future__ import annotations

import json

from . import _core
from .rational import GaussianRational, ZERO, ONE, gq

KINDS = ("x", "y", "q")
DKINDS = ("dx", "dy", "dq")
_BLOCKS = KINDS + DKINDS


def exp_key(n, **powers):
    """Exponent tuple from sparse {kind: {index: exponent}} keyword blocks.

    Indices are 1-based, matching the operator subscripts in use everywhere.
    """
    key = [0] * (6 * n)
    for blk, entries in powers.items():
        off = _BLOCKS.index(blk) * n
        for j, e in entries.items():
            if not 1 <= j <= n:
                raise IndexError(f"index {j} out of range for n={n}")
            key[off + j - 1] += e
    return tuple(key)


class WeylOperator:
    """A finite sum of normal-ordered terms with Gaussian-rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        if n < 1:
            raise ValueError("n must be >= 1")
        clean = {}
        if terms:
            for key, coeff in terms.items():
                coeff = gq(coeff)
                if len(key) != 6 * n:
                    raise ValueError("exponent tuple has wrong length")
                if coeff:
                    clean[key] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("WeylOperator is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * (6 * n): gq(c)})

    @classmethod
    def single(cls, n, coeff, **powers):
        """One term, e.g. single(2, I, q={1: 1}, dy={1: 1}) = i q1 dy1."""
        return cls(n, {exp_key(n, **powers): gq(coeff)})

    # -- linear structure ----------------------------------------------------

    def _check_dim(self, other):
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other):
        if not isinstance(other, WeylOperator):
            return NotImplemented
        self._check_dim(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            cur = terms.get(key)
            s = coeff if cur is None else cur + coeff
            if s:
                terms[key] = s
            elif cur is not None:
                del terms[key]
        out = WeylOperator.__new__(WeylOperator)
        object.__setattr__(out, "n", self.n)
        object.__setattr__(out, "terms", terms)
        return out

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = gq(c)
        if not c:
            return WeylOperator.zero(self.n)
        out = WeylOperator.__new__(WeylOperator)
        object.__setattr__(out, "n", self.n)
        object.__setattr__(out, "terms", {k: v * c for k, v in self.terms.items()})
        return out

    def __mul__(self, other):
        if isinstance(other, WeylOperator):
            return self.compose(other)
        c = gq(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    def __rmul__(self, other):
        c = gq(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    # -- multiplicative structure ---------------------------------------------

    def compose(self, other):
        """The operator product self o other, renormal-ordered."""
        self._check_dim(other)
        nv = 3 * self.n
        ta = {k: c.triple() for k, c in self.terms.items()}
        tb = {k: c.triple() for k, c in other.terms.items()}
        raw = _core.compose_terms(ta, tb, nv)
        out = WeylOperator.__new__(WeylOperator)
        object.__setattr__(out, "n", self.n)
        object.__setattr__(
            out, "terms", {k: GaussianRational._raw(*t) for k, t in raw.items()}
        )
        return out

    def pow(self, e):
        if e < 0:
            raise ValueError("negative operator power")
        acc = WeylOperator.constant(self.n, 1)
        for _ in range(e):
            acc = acc.compose(self)
        return acc

    def adjoint(self):
        """Term-wise Fischer adjoint: swap each variable with its derivative,
        conjugate the coefficient (the reversed factor order is already normal
        order again).  Involutive."""
        nv = 3 * self.n
        terms = {}
        for key, coeff in self.terms.items():
            terms[key[nv:] + key[:nv]] = coeff.conjugate()
        return WeylOperator(self.n, terms)

    def gaussian_conjugate(self):
        """The operator e^{|q|^2/2} o self o e^{-|q|^2/2}, expanded exactly.

        Rewrites every dq_j generator as (dq_j - q_j); this is how operators
        act on the Gaussian-weighted spinor model.
        """
        n = self.n
        out = WeylOperator.zero(n)
        for key, coeff in self.terms.items():
            dq = key[5 * n : 6 * n]
            head = WeylOperator(n, {key[: 5 * n] + (0,) * n: coeff})
            piece = head
            for j in range(n):
                e = dq[j]
                if e:
                    gen = WeylOperator(
                        n,
                        {
                            exp_key(n, dq={j + 1: 1}): ONE,
                            exp_key(n, q={j + 1: 1}): -ONE,
                        },
                    )
                    piece = piece.compose(gen.pow(e))
            out = out + piece
        return out

    # -- structure queries ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        zero_key = (0,) * (6 * self.n)
        return all(k == zero_key for k in self.terms)

    def constant_part(self):
        return self.terms.get((0,) * (6 * self.n), ZERO)

    def base_shifts(self):
        """Set of (|x|+|y|)-degree shifts across terms."""
        n = self.n
        return {
            sum(k[: 2 * n]) - sum(k[3 * n : 5 * n]) for k in self.terms
        }

    def spinor_shifts(self):
        """Set of |q|-degree shifts across terms."""
        n = self.n
        return {
            sum(k[2 * n : 3 * n]) - sum(k[5 * n : 6 * n]) for k in self.terms
        }

    def __eq__(self, other):
        if not isinstance(other, WeylOperator):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def sorted_terms(self):
        """Terms in the canonical lexicographic key order."""
        return sorted(self.terms.items())

    def proportionality(self, other):
        """The scalar c with self == c * other, or None if no such c exists."""
        self._check_dim(other)
        if other.is_zero():
            return ZERO if self.is_zero() else None
        if set(self.terms) != set(other.terms):
            return None
        c = None
        for key, b in other.terms.items():
            ratio = self.terms[key] / b
            if c is None:
                c = ratio
            elif c != ratio:
                return None
        return c

    # -- rendering and serialization -------------------------------------------

    # display order puts the spinor derivative first within the derivative
    # half ("dq1 dx1"), matching the usual way the operators are written
    _DISPLAY_BLOCKS = ((0, "x"), (1, "y"), (2, "q"), (5, "dq"), (3, "dx"), (4, "dy"))

    def _monomial_text(self, key):
        n = self.n
        parts = []
        for blk, name in self._DISPLAY_BLOCKS:
            for j in range(n):
                e = key[blk * n + j]
                if e:
                    sym = name if n == 1 else f"{name}{j + 1}"
                    parts.append(sym if e == 1 else f"{sym}^{e}")
        return " ".join(parts)

    def pretty(self):
        """Deterministic text form, e.g. 'i q1 dy1 - dq1 dx1'.

        A common coefficient shared by every term is pulled out front.
        """
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), reverse=True)
        common = None
        if len(items) > 1:
            coeffs = {c for _, c in items}
            lead = items[0][1]
            if lead.is_unit() and all((c / lead).is_real() for c in coeffs) and not all(
                c.is_real() for c in coeffs
            ):
                common = lead
        body = []
        for key, coeff in items:
            if common is not None:
                coeff = coeff / common
            mono = self._monomial_text(key)
            ctext = str(coeff)
            if mono:
                if coeff == ONE:
                    text = mono
                elif coeff == -ONE:
                    text = f"-{mono}"
                elif coeff.is_real() or coeff.re == 0:
                    text = f"{ctext} {mono}"
                else:
                    text = f"({ctext}) {mono}"
            else:
                text = ctext if coeff.is_real() or coeff.re == 0 else f"({ctext})"
            body.append(text)
        joined = body[0]
        for piece in body[1:]:
            if piece.startswith("-"):
                joined += f" - {piece[1:]}"
            else:
                joined += f" + {piece}"
        if common is None:
            return joined
        return f"{common} ({joined})" if len(body) > 1 else joined

    def __repr__(self):
        return f"<WeylOperator n={self.n}: {self.pretty()}>"

    def to_dict(self):
        n = self.n
        return {
            "n": n,
            "terms": [
                {
                    "coeff": str(coeff),
                    **{
                        name: list(key[blk * n : (blk + 1) * n])
                        for blk, name in enumerate(_BLOCKS)
                    },
                }
                for key, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_dict(cls, data):
        n = data["n"]
        terms = {}
        for t in data["terms"]:
            key = tuple(e for name in _BLOCKS for e in t[name])
            terms[key] = GaussianRational.parse(t["coeff"])
        return cls(n, terms)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def commutator(a: WeylOperator, b: WeylOperator) -> WeylOperator:
    """[a, b] = a o b - b o a in canonical normal-ordered form."""
    return a.compose(b) - b.compose(a)
