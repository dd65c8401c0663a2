# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython kernels for term-map arithmetic.

Mirrors `_pure.py` exactly; coefficients stay generic Python objects
(gmpy2.mpq or Fraction), the win is loop and dict/tuple overhead.
"""

BACKEND = "cython"


cdef inline tuple _tuple_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = a[i] + b[i]
    return tuple(out)


def terms_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple ea, eb, key
    cdef object ca, cb, cur
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = _tuple_add(ea, eb)
            cur = out.get(key)
            if cur is None:
                out[key] = ca * cb
            else:
                cur = cur + ca * cb
                if cur:
                    out[key] = cur
                else:
                    del out[key]
    return out


def addmul_terms(dict acc, object coeff, shift, dict src):
    cdef tuple e, key
    cdef object c, cur
    if shift is None:
        for e, c in src.items():
            cur = acc.get(e)
            if cur is None:
                acc[e] = coeff * c
            else:
                cur = cur + coeff * c
                if cur:
                    acc[e] = cur
                else:
                    del acc[e]
    else:
        for e, c in src.items():
            key = _tuple_add(e, <tuple> shift)
            cur = acc.get(key)
            if cur is None:
                acc[key] = coeff * c
            else:
                cur = cur + coeff * c
                if cur:
                    acc[key] = cur
                else:
                    del acc[key]


def addmul_sparse(dict acc, object coeff, dict src):
    cdef object k, c, cur
    for k, c in src.items():
        cur = acc.get(k)
        if cur is None:
            acc[k] = coeff * c
        else:
            cur = cur + coeff * c
            if cur:
                acc[k] = cur
            else:
                del acc[k]
