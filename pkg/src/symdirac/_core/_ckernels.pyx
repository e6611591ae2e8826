# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of pykernels: identical wire formats and semantics.

The arithmetic stays on Python big ints (exactness first); the compiled
module removes the interpreter overhead of the inner loops.
"""

from math import comb, factorial, gcd

BACKEND = "c"

_weights = {}


cdef inline tuple norm3_c(object an, object bn, object den):
    if den < 0:
        an, bn, den = -an, -bn, -den
    g = gcd(gcd(an, bn), den)
    if g > 1:
        an //= g
        bn //= g
        den //= g
    return (an, bn, den)


def norm3(an, bn, den):
    return norm3_c(an, bn, den)


def add3(p, q):
    return norm3_c(p[0] * q[2] + q[0] * p[2], p[1] * q[2] + q[1] * p[2], p[2] * q[2])


def mul3(p, q):
    return norm3_c(p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0], p[2] * q[2])


def neg3(p):
    return (-p[0], -p[1], p[2])


def inv3(p):
    an, bn, den = p
    nrm = an * an + bn * bn
    if nrm == 0:
        raise ZeroDivisionError("inverse of zero")
    return norm3_c(den * an, -den * bn, nrm)


cdef inline object weight(int k, int m, int j):
    key = (k, m, j)
    w = _weights.get(key)
    if w is None:
        w = comb(k, j) * comb(m, j) * factorial(j)
        _weights[key] = w
    return w


def compose_terms(dict terms_a, dict terms_b, Py_ssize_t nv):
    """Normal-ordered product of two term dicts (see pykernels.compose_terms)."""
    cdef dict out = {}
    cdef Py_ssize_t v, t, pos
    cdef int k, m, j
    for ka, ca in terms_a.items():
        da = ka[nv:]
        for kb, cb in terms_b.items():
            base = mul3(ca, cb)
            active = []
            for v in range(nv):
                if da[v] and kb[v]:
                    active.append(v)
            if not active:
                key = tuple([ka[t] + kb[t] for t in range(2 * nv)])
                cur = out.get(key)
                out[key] = add3(cur, base) if cur is not None else base
                continue
            branches = [(base, [0] * len(active))]
            for pos in range(len(active)):
                v = active[pos]
                k = da[v]
                m = kb[v]
                new = []
                for coeff, js in branches:
                    for j in range(min(k, m) + 1):
                        w = weight(k, m, j)
                        js2 = list(js)
                        js2[pos] = j
                        new.append((norm3_c(coeff[0] * w, coeff[1] * w, coeff[2]), js2))
                branches = new
            merged = list(ka[:nv])
            dmerged = list(da)
            for t in range(nv):
                merged[t] += kb[t]
                dmerged[t] += kb[nv + t]
            for coeff, js in branches:
                xs = list(merged)
                ds = list(dmerged)
                for pos in range(len(active)):
                    v = active[pos]
                    xs[v] -= js[pos]
                    ds[v] -= js[pos]
                key = tuple(xs) + tuple(ds)
                cur = out.get(key)
                out[key] = add3(cur, coeff) if cur is not None else coeff
    return {kk: cc for kk, cc in out.items() if cc[0] or cc[1]}


cdef void strip_content(dict row):
    g = 0
    for val in row.values():
        g = gcd(g, val[0])
        g = gcd(g, val[1])
        if g == 1:
            return
    if g > 1:
        for c, val in row.items():
            row[c] = (val[0] // g, val[1] // g)


def sparse_rank(rows, Py_ssize_t ncols):
    """Rank over Q(i): fraction-free cross-multiplication updates with
    content stripping; sparsest-column/sparsest-row pivoting."""
    cdef list work = []
    cdef dict col_rows = {}
    cdef Py_ssize_t idx = 0
    cdef Py_ssize_t rank = 0
    for r in rows:
        if r:
            work.append(dict(r))
    for idx in range(len(work)):
        for c in (<dict>work[idx]):
            s = col_rows.get(c)
            if s is None:
                col_rows[c] = {idx}
            else:
                (<set>s).add(idx)
    cdef Py_ssize_t l, clen, rlen
    while col_rows:
        c = None
        clen = -1
        for cc, s in col_rows.items():
            l = len(<set>s)
            if c is None or l < clen or (l == clen and cc < c):
                c, clen = cc, l
        rset = col_rows.pop(c)
        if not rset:
            continue
        r = None
        rlen = -1
        for rr in rset:
            l = len(<dict>work[rr])
            if r is None or l < rlen or (l == rlen and rr < r):
                r, rlen = rr, l
        prow = <dict>work[r]
        pa, pb = prow[c]
        rank += 1
        for rr in rset:
            if rr == r:
                continue
            row = <dict>work[rr]
            va, vb = row.pop(c)
            if pa != 1 or pb != 0:
                for cc in row:
                    wa, wb = row[cc]
                    row[cc] = (pa * wa - pb * wb, pa * wb + pb * wa)
            for cc, val in prow.items():
                if cc == c:
                    continue
                wa = val[0]
                wb = val[1]
                sa = va * wa - vb * wb
                sb = va * wb + vb * wa
                cur = row.get(cc)
                if cur is None:
                    row[cc] = (-sa, -sb)
                    (<set>col_rows[cc]).add(rr)
                else:
                    na = cur[0] - sa
                    nb = cur[1] - sb
                    if na or nb:
                        row[cc] = (na, nb)
                    else:
                        del row[cc]
                        (<set>col_rows[cc]).discard(rr)
            strip_content(row)
        for cc in prow:
            if cc != c:
                s = col_rows.get(cc)
                if s is not None:
                    (<set>s).discard(r)
        prow.clear()
        empty = [cc for cc, s in col_rows.items() if not s]
        for cc in empty:
            del col_rows[cc]
    return rank


def sparse_nullspace(rows, Py_ssize_t ncols):
    """Canonical RREF nullspace over Q(i) (see pykernels.sparse_nullspace)."""
    cdef list work = []
    cdef dict col_rows = {}
    cdef Py_ssize_t idx, c
    for r in rows:
        live = {cc: v for cc, v in (<dict>r).items() if v[0] or v[1]}
        if live:
            work.append(live)
    for idx in range(len(work)):
        for cc in (<dict>work[idx]):
            col_rows.setdefault(cc, set()).add(idx)
    pivot_of = {}
    pivot_rows = set()
    one = (1, 0, 1)
    for c in range(ncols):
        rset = col_rows.get(c)
        if not rset:
            continue
        cand = rset - pivot_rows
        if not cand:
            continue
        r = min(cand, key=lambda rr: (len(work[rr]), rr))
        prow = <dict>work[r]
        inv = inv3(prow[c])
        if inv != one:
            for cc in prow:
                prow[cc] = mul3(prow[cc], inv)
        for rr in list(rset):
            if rr == r:
                continue
            row = <dict>work[rr]
            v = row.pop(c)
            (<set>col_rows[c]).discard(rr)
            vneg = (-v[0], -v[1], v[2])
            for cc, w in prow.items():
                if cc == c:
                    continue
                piece = mul3(vneg, w)
                cur = row.get(cc)
                if cur is None:
                    row[cc] = piece
                    (<set>col_rows[cc]).add(rr)
                else:
                    s = add3(cur, piece)
                    if s[0] or s[1]:
                        row[cc] = s
                    else:
                        del row[cc]
                        (<set>col_rows[cc]).discard(rr)
        pivot_of[c] = r
        pivot_rows.add(r)
    rank = len(pivot_of)
    basis = []
    for f in range(ncols):
        if f in pivot_of:
            continue
        vec = {f: one}
        for c, r in pivot_of.items():
            val = (<dict>work[r]).get(f)
            if val is not None:
                vec[c] = (-val[0], -val[1], val[2])
        basis.append(vec)
    return rank, sorted(pivot_of), basis
