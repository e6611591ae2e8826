"""Polynomial spinor-valued elements and the operator action on them.

A :class:`SpinorElement` is a polynomial in x, y, q over Q(i) carrying a
model tag.  In the ``weighted`` model the stored polynomial p denotes
p * exp(-|q|^2/2); operators then act through their Gaussian conjugation,
which keeps all arithmetic polynomial and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .monomials import monomials_upto
from .rational import GaussianRational, ZERO, ONE, I, gq
from .weyl import WeylOperator

PLAIN = "plain"
WEIGHTED = "weighted"
MODELS = (PLAIN, WEIGHTED)


class SpinorElement:
    """Finite sum of monomials x^a y^b q^g with Gaussian-rational coefficients.

    Keys are flat exponent tuples of length 3n (x | y | q blocks).
    """

    __slots__ = ("n", "model", "coeffs")

    def __init__(self, n, model, coeffs=None):
        if model not in MODELS:
            raise ValueError(f"unknown model {model!r}")
        clean = {}
        if coeffs:
            for key, c in coeffs.items():
                c = gq(c)
                if len(key) != 3 * n:
                    raise ValueError("exponent tuple has wrong length")
                if c:
                    clean[key] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "model", model)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SpinorElement is immutable")

    @classmethod
    def zero(cls, n, model=PLAIN):
        return cls(n, model, {})

    @classmethod
    def monomial(cls, n, key, coeff=ONE, model=PLAIN):
        return cls(n, model, {tuple(key): coeff})

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        if self.model != other.model:
            raise ValueError("model mismatch")

    def __add__(self, other):
        self._check(other)
        coeffs = dict(self.coeffs)
        for key, c in other.coeffs.items():
            cur = coeffs.get(key)
            s = c if cur is None else cur + c
            if s:
                coeffs[key] = s
            elif cur is not None:
                del coeffs[key]
        return SpinorElement(self.n, self.model, coeffs)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = gq(c)
        if not c:
            return SpinorElement(self.n, self.model, {})
        return SpinorElement(self.n, self.model, {k: v * c for k, v in self.coeffs.items()})

    def __rmul__(self, other):
        return self.scale(other)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, SpinorElement):
            return NotImplemented
        return self.n == other.n and self.model == other.model and self.coeffs == other.coeffs

    def base_degrees(self):
        n = self.n
        return {sum(k[: 2 * n]) for k in self.coeffs}

    def spinor_degrees(self):
        n = self.n
        return {sum(k[2 * n :]) for k in self.coeffs}

    def to_dict(self):
        n = self.n
        return {
            "n": n,
            "model": self.model,
            "coeffs": [
                {
                    "x": list(k[:n]),
                    "y": list(k[n : 2 * n]),
                    "q": list(k[2 * n :]),
                    "c": str(c),
                }
                for k, c in sorted(self.coeffs.items())
            ],
        }

    @classmethod
    def from_dict(cls, data):
        coeffs = {
            tuple(t["x"]) + tuple(t["y"]) + tuple(t["q"]): GaussianRational.parse(t["c"])
            for t in data["coeffs"]
        }
        return cls(data["n"], data["model"], coeffs)

    def pretty(self):
        if not self.coeffs:
            return "0"
        n = self.n
        names = ("x", "y", "q")
        parts = []
        for key, c in sorted(self.coeffs.items(), reverse=True):
            mono = []
            for blk in range(3):
                for j in range(n):
                    e = key[blk * n + j]
                    if e:
                        sym = names[blk] if n == 1 else f"{names[blk]}{j + 1}"
                        mono.append(sym if e == 1 else f"{sym}^{e}")
            mtxt = " ".join(mono)
            if not mtxt:
                parts.append(str(c))
            elif c == ONE:
                parts.append(mtxt)
            elif c == -ONE:
                parts.append(f"-{mtxt}")
            else:
                ctxt = str(c)
                parts.append(f"({ctxt}) {mtxt}" if " " in ctxt else f"{ctxt} {mtxt}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"<SpinorElement n={self.n} {self.model}: {self.pretty()}>"


def _apply_plain(op: WeylOperator, f: SpinorElement) -> SpinorElement:
    n = f.n
    nv = 3 * n
    out = {}
    for okey, oc in op.terms.items():
        dpart = okey[nv:]
        vpart = okey[:nv]
        for fkey, fc in f.coeffs.items():
            coeff = oc * fc
            new = list(fkey)
            dead = False
            for v in range(nv):
                e = dpart[v]
                if e:
                    a = new[v]
                    if a < e:
                        dead = True
                        break
                    # falling factorial a (a-1) ... (a-e+1)
                    fall = 1
                    for t in range(e):
                        fall *= a - t
                    coeff = coeff * fall
                    new[v] = a - e
            if dead:
                continue
            for v in range(nv):
                if vpart[v]:
                    new[v] += vpart[v]
            key = tuple(new)
            cur = out.get(key)
            s = coeff if cur is None else cur + coeff
            if s:
                out[key] = s
            elif cur is not None:
                del out[key]
    return SpinorElement(n, f.model, out)


def apply_operator(op: WeylOperator, f: SpinorElement) -> SpinorElement:
    """Exact action of op on f; in the weighted model the Gaussian-conjugated
    operator acts on the stored polynomial."""
    if op.n != f.n:
        raise ValueError("dimension mismatch")
    if f.model == WEIGHTED:
        op = op.gaussian_conjugate()
    return _apply_plain(op, f)


def fischer_pair(f: SpinorElement, g: SpinorElement) -> GaussianRational:
    """Factorial (Bombieri) pairing: <x^a y^b q^g, x^a y^b q^g> = a! b! g!,
    distinct monomials orthogonal, conjugate-linear in the first argument."""
    f._check(g)
    total = ZERO
    small, big = (f.coeffs, g.coeffs) if len(f.coeffs) <= len(g.coeffs) else (g.coeffs, f.coeffs)
    for key in small:
        cg = g.coeffs.get(key)
        cf = f.coeffs.get(key)
        if cg is None or cf is None:
            continue
        w = 1
        for e in key:
            if e > 1:
                w *= factorial(e)
        total = total + cf.conjugate() * cg * w
    return total


def holomorphic_element(alpha, n, model=WEIGHTED) -> SpinorElement:
    """The expansion of prod_j (x_j + i y_j)^alpha_j with trivial spinor part."""
    if len(alpha) != n:
        raise ValueError("alpha must have length n")
    out = SpinorElement.monomial(n, (0,) * (3 * n), ONE, model)
    for j in range(n):
        a = alpha[j]
        if a == 0:
            continue
        coeffs = {}
        for t in range(a + 1):
            key = [0] * (3 * n)
            key[j] = a - t
            key[n + j] = t
            coeffs[tuple(key)] = GaussianRational(comb(a, t)) * _ipow(t)
        factor = SpinorElement(n, model, coeffs)
        out = _poly_mul(out, factor)
    return out


def _ipow(t):
    return (ONE, I, -ONE, -I)[t % 4]


def _poly_mul(f: SpinorElement, g: SpinorElement) -> SpinorElement:
    f._check(g)
    out = {}
    for k1, c1 in f.coeffs.items():
        for k2, c2 in g.coeffs.items():
            key = tuple(a + b for a, b in zip(k1, k2))
            c = c1 * c2
            cur = out.get(key)
            s = c if cur is None else cur + c
            if s:
                out[key] = s
            elif cur is not None:
                del out[key]
    return SpinorElement(f.n, f.model, out)


@dataclass
class ProbeResult:
    """Outcome of an adjointness probe: the unique consistent scalar, or a
    witness pair of monomial keys where consistency first failed."""

    consistent: bool
    scalar: GaussianRational | None
    witness: tuple | None = None

    def __bool__(self):
        return self.consistent


def adjointness_probe(a: WeylOperator, b: WeylOperator, degree_cap: int) -> ProbeResult:
    """Search for the unique c with <a f, g> = c <f, b g> over all monomial
    pairs f, g of total degree <= degree_cap (plain model)."""
    if degree_cap < 1:
        raise ValueError("degree_cap must be >= 1")
    n = a.n
    keys = list(monomials_upto(degree_cap, 3 * n))
    monos = [SpinorElement.monomial(n, k) for k in keys]
    images_a = [apply_operator(a, f) for f in monos]
    images_b = [apply_operator(b, g) for g in monos]
    scalar = None
    for fi, f in enumerate(monos):
        af = images_a[fi]
        for gi, g in enumerate(monos):
            lhs = fischer_pair(af, g)
            rhs = fischer_pair(f, images_b[gi])
            if not rhs:
                if lhs:
                    return ProbeResult(False, None, (keys[fi], keys[gi]))
                continue
            c = lhs / rhs
            if scalar is None:
                scalar = c
            elif scalar != c:
                return ProbeResult(False, None, (keys[fi], keys[gi]))
    return ProbeResult(True, scalar if scalar is not None else ONE)
