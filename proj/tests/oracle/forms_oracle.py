"""Independent sympy oracle for the exact fiber algebra.

Forms are dicts: sorted tuple of real covector indices -> sympy scalar.
Index 2k is dx_{k+1}, 2k+1 is dy_{k+1}.
"""
import itertools
import sympy as sp

I, S2 = sp.I, sp.sqrt(2)


def clean(f):
    return {k: sp.nsimplify(sp.expand(v)) for k, v in f.items() if sp.expand(v) != 0}


def add(*fs):
    out = {}
    for f in fs:
        for k, v in f.items():
            out[k] = out.get(k, 0) + v
    return clean(out)


def scale(c, f):
    return clean({k: c * v for k, v in f.items()})


def perm_sign(seq):
    s, seq = 1, list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s


def wedge(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            if set(ka) & set(kb):
                continue
            seq = ka + kb
            key = tuple(sorted(seq))
            out[key] = out.get(key, 0) + perm_sign(seq) * va * vb
    return clean(out)


def one(c=1):
    return {(): c}


def e(i):
    return {(i,): 1}


def dz(k):
    return {(2 * k,): 1, (2 * k + 1,): I}


def dzb(k):
    return {(2 * k,): 1, (2 * k + 1,): -I}


def conj(f):
    return clean({k: sp.conjugate(v) for k, v in f.items()})


def star(f, n):
    full = tuple(range(2 * n))
    out = {}
    for k, v in f.items():
        comp = tuple(i for i in full if i not in k)
        out[comp] = out.get(comp, 0) + perm_sign(k + comp) * v
    return clean(out)


def omega(n):
    out = {}
    for k in range(n):
        out = add(out, {(2 * k, 2 * k + 1): 1})
    return out


def interior_real(i, f):
    out = {}
    for k, v in f.items():
        if i in k:
            p = k.index(i)
            key = k[:p] + k[p + 1:]
            out[key] = out.get(key, 0) + (-1) ** p * v
    return clean(out)


def contract(alpha, xi):
    # hermitian contraction: sum_i conj(alpha_i) iota_{e_i}
    out = {}
    for (i,), a in alpha.items():
        out = add(out, scale(sp.conjugate(a), interior_real(i, xi)))
    return out


def pq_parts_1form(alpha, n):
    # alpha = sum a_i e_i; dx = (dz+dzb)/2, dy = (dz-dzb)/(2i)
    p10, p01 = {}, {}
    for (i,), a in alpha.items():
        k = i // 2
        if i % 2 == 0:
            p10 = add(p10, scale(a / 2, dz(k)))
            p01 = add(p01, scale(a / 2, dzb(k)))
        else:
            p10 = add(p10, scale(a / (2 * I), dz(k)))
            p01 = add(p01, scale(-a / (2 * I), dzb(k)))
    return p10, p01


def cliff1(alpha, xi, n):
    p10, p01 = pq_parts_1form(alpha, n)
    return add(scale(S2, wedge(p01, xi)), scale(-S2, contract(conj(p10), xi)))


def cliff(F, xi, n):
    out = {}
    for k, v in F.items():
        cur = xi
        for i in reversed(k):
            cur = cliff1(e(i), cur, n)
        out = add(out, scale(v, cur))
    return out


def dzb_mono(ks):
    f = one()
    for k in ks:
        f = wedge(f, dzb(k))
    return f


def coord(form, basis):
    """coordinates of form in an orthogonal basis list of forms"""
    cs = []
    for b in basis:
        num = sum(v * sp.conjugate(b.get(k, 0)) for k, v in form.items())
        den = sum(v * sp.conjugate(v) for v in b.values())
        cs.append(sp.nsimplify(sp.expand(num / den)))
    return cs


def matrix_on(F, basis, n):
    cols = [coord(cliff(F, b, n), basis) for b in basis]
    return sp.Matrix(cols).T
