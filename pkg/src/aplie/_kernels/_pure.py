"""Pure-Python kernels for the inner loops of polynomial and sparse-vector
arithmetic.  `_speedups.pyx` implements the identical interface in Cython;
`aplie._kernels` picks one at import time.

All term maps are plain dicts.  Polynomial terms map exponent tuples to
scalars; sparse vectors map integer indices to scalars.  Zero
coefficients are never stored.
"""

BACKEND = "python"


def terms_mul(a, b):
    """Product of two term maps with exponent-tuple keys."""
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(key)
            if c is None:
                out[key] = ca * cb
            else:
                c = c + ca * cb
                if c:
                    out[key] = c
                else:
                    del out[key]
    return out


def addmul_terms(acc, coeff, shift, src):
    """In place: acc += coeff * x^shift * src.  shift=None skips the monomial
    multiplication.  Entries cancelling to zero are removed."""
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
            key = tuple(x + y for x, y in zip(e, shift))
            cur = acc.get(key)
            if cur is None:
                acc[key] = coeff * c
            else:
                cur = cur + coeff * c
                if cur:
                    acc[key] = cur
                else:
                    del acc[key]


def addmul_sparse(acc, coeff, src):
    """In place: acc += coeff * src for sparse vectors keyed by index."""
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
