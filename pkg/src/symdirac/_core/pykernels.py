"""Pure-Python hot kernels: normal-ordered composition and exact elimination.

Wire formats (shared with the compiled twin in ``_ckernels.pyx``):

* scalar  -- triple (an, bn, den) of ints meaning (an + bn*i)/den, den > 0,
  gcd(an, bn, den) == 1;
* term dict -- {exponent tuple: scalar}; an exponent tuple has length 2*nv,
  variable exponents first, derivative exponents last, variable v pairing
  with derivative slot nv + v;
* sparse row -- {column: (a, b)} with Gaussian-integer entries (rank path)
  or {column: scalar} (nullspace path).
"""

from math import comb, factorial, gcd

BACKEND = "python"


# ---------------------------------------------------------------------------
# scalar triples
# ---------------------------------------------------------------------------

def norm3(an, bn, den):
    if den < 0:
        an, bn, den = -an, -bn, -den
    g = gcd(gcd(an, bn), den)
    if g > 1:
        an //= g
        bn //= g
        den //= g
    return (an, bn, den)


def add3(p, q):
    return norm3(p[0] * q[2] + q[0] * p[2], p[1] * q[2] + q[1] * p[2], p[2] * q[2])


def mul3(p, q):
    return norm3(p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0], p[2] * q[2])


def neg3(p):
    return (-p[0], -p[1], p[2])


def inv3(p):
    an, bn, den = p
    nrm = an * an + bn * bn
    if nrm == 0:
        raise ZeroDivisionError("inverse of zero")
    return norm3(den * an, -den * bn, nrm)


# ---------------------------------------------------------------------------
# normal-ordered composition
# ---------------------------------------------------------------------------

_weights = {}


def _weight(k, m, j):
    # coefficient of u^(m-j) d^(k-j) in d^k o u^m
    key = (k, m, j)
    w = _weights.get(key)
    if w is None:
        w = comb(k, j) * comb(m, j) * factorial(j)
        _weights[key] = w
    return w


def compose_terms(terms_a, terms_b, nv):
    """Product of two normal-ordered term dicts, renormal-ordered.

    Applies d^k o u^m = sum_j C(k,j) C(m,j) j! u^(m-j) d^(k-j) independently
    in each of the nv variables.
    """
    out = {}
    for ka, ca in terms_a.items():
        da = ka[nv:]
        for kb, cb in terms_b.items():
            base = mul3(ca, cb)
            active = [v for v in range(nv) if da[v] and kb[v]]
            if not active:
                key = tuple(ka[t] + kb[t] for t in range(2 * nv))
                cur = out.get(key)
                out[key] = add3(cur, base) if cur is not None else base
                continue
            # branch over the contraction order j_v per active variable
            branches = [(base, [0] * len(active))]
            for pos, v in enumerate(active):
                k, m = da[v], kb[v]
                new = []
                for coeff, js in branches:
                    for j in range(min(k, m) + 1):
                        w = _weight(k, m, j)
                        js2 = list(js)
                        js2[pos] = j
                        new.append((norm3(coeff[0] * w, coeff[1] * w, coeff[2]), js2))
                branches = new
            merged = list(ka[:nv])
            dmerged = list(da)
            for t in range(nv):
                merged[t] += kb[t]
                dmerged[t] += kb[nv + t]
            for coeff, js in branches:
                xs = list(merged)
                ds = list(dmerged)
                for pos, v in enumerate(active):
                    xs[v] -= js[pos]
                    ds[v] -= js[pos]
                key = tuple(xs) + tuple(ds)
                cur = out.get(key)
                out[key] = add3(cur, coeff) if cur is not None else coeff
    return {k: c for k, c in out.items() if c[0] or c[1]}


# ---------------------------------------------------------------------------
# exact sparse elimination
# ---------------------------------------------------------------------------

def _strip_content(row):
    g = 0
    for a, b in row.values():
        g = gcd(g, a)
        g = gcd(g, b)
        if g == 1:
            return
    if g > 1:
        for c, (a, b) in row.items():
            row[c] = (a // g, b // g)


def sparse_rank(rows, ncols):
    """Rank over Q(i) of a sparse Gaussian-integer matrix.

    Fraction-free row updates (cross-multiplication, no division) with the
    row content stripped after each update to control growth; pivoting picks
    the sparsest active column, then the sparsest row, with deterministic
    index tie-breaks.
    """
    work = []
    for r in rows:
        if r:
            work.append(dict(r))
    col_rows = {}
    for idx, row in enumerate(work):
        for c in row:
            s = col_rows.get(c)
            if s is None:
                col_rows[c] = {idx}
            else:
                s.add(idx)
    rank = 0
    while col_rows:
        c = None
        clen = -1
        for cc, s in col_rows.items():
            l = len(s)
            if c is None or l < clen or (l == clen and cc < c):
                c, clen = cc, l
        rset = col_rows.pop(c)
        if not rset:
            continue
        r = None
        rlen = -1
        for rr in rset:
            l = len(work[rr])
            if r is None or l < rlen or (l == rlen and rr < r):
                r, rlen = rr, l
        prow = work[r]
        pa, pb = prow[c]
        rank += 1
        for rr in rset:
            if rr == r:
                continue
            row = work[rr]
            va, vb = row.pop(c)
            if (pa, pb) != (1, 0):
                for cc, (wa, wb) in row.items():
                    row[cc] = (pa * wa - pb * wb, pa * wb + pb * wa)
            for cc, (wa, wb) in prow.items():
                if cc == c:
                    continue
                sa = va * wa - vb * wb
                sb = va * wb + vb * wa
                cur = row.get(cc)
                if cur is None:
                    row[cc] = (-sa, -sb)
                    col_rows[cc].add(rr)
                else:
                    na = cur[0] - sa
                    nb = cur[1] - sb
                    if na or nb:
                        row[cc] = (na, nb)
                    else:
                        del row[cc]
                        col_rows[cc].discard(rr)
            _strip_content(row)
        for cc in prow:
            if cc != c:
                s = col_rows.get(cc)
                if s is not None:
                    s.discard(r)
        prow.clear()
        empty = [cc for cc, s in col_rows.items() if not s]
        for cc in empty:
            del col_rows[cc]
    return rank


def sparse_nullspace(rows, ncols):
    """Canonical nullspace basis via reduced row echelon form over Q(i).

    Rows hold scalar triples.  Pivots are the leftmost independent columns,
    so the returned (rank, pivot_cols, basis) is unique for a given matrix;
    each basis vector is {col: scalar} with a 1 in its free column.
    """
    work = []
    for r in rows:
        live = {c: v for c, v in r.items() if v[0] or v[1]}
        if live:
            work.append(live)
    col_rows = {}
    for idx, row in enumerate(work):
        for c in row:
            col_rows.setdefault(c, set()).add(idx)
    pivot_of = {}
    pivot_rows = set()
    for c in range(ncols):
        rset = col_rows.get(c)
        if not rset:
            continue
        cand = rset - pivot_rows
        if not cand:
            continue
        r = min(cand, key=lambda rr: (len(work[rr]), rr))
        prow = work[r]
        inv = inv3(prow[c])
        if inv != (1, 0, 1):
            for cc in prow:
                prow[cc] = mul3(prow[cc], inv)
        for rr in list(rset):
            if rr == r:
                continue
            row = work[rr]
            v = row.pop(c)
            col_rows[c].discard(rr)
            vneg = neg3(v)
            for cc, w in prow.items():
                if cc == c:
                    continue
                piece = mul3(vneg, w)
                cur = row.get(cc)
                if cur is None:
                    row[cc] = piece
                    col_rows[cc].add(rr)
                else:
                    s = add3(cur, piece)
                    if s[0] or s[1]:
                        row[cc] = s
                    else:
                        del row[cc]
                        col_rows[cc].discard(rr)
        pivot_of[c] = r
        pivot_rows.add(r)
    rank = len(pivot_of)
    basis = []
    one = (1, 0, 1)
    for f in range(ncols):
        if f in pivot_of:
            continue
        vec = {f: one}
        for c, r in pivot_of.items():
            val = work[r].get(f)
            if val is not None:
                vec[c] = neg3(val)
        basis.append(vec)
    return rank, sorted(pivot_of), basis
