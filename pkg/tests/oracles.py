"""Brute-force oracles used by the test suite.

Deliberately independent of the package internals: Schur polynomials are
expanded by enumerating semistandard tableaux, products are raw polynomial
multiplication, and Schur expansion works by peeling lex-leading monomials.
"""

from __future__ import annotations

from functools import lru_cache


def semistandard_fillings(shape, nvars):
    """Yield all semistandard fillings of a partition shape with entries in
    1..nvars, as row tuples (weakly increasing rows, strict columns)."""
    rows = len(shape)

    def fill(rowidx, above, acc):
        if rowidx == rows:
            yield tuple(acc)
            return
        width = shape[rowidx]

        def build_row(col, row):
            if col == width:
                yield tuple(row)
                return
            lo = row[col - 1] if col else 1
            if above is not None and col < len(above):
                lo = max(lo, above[col] + 1)
            for v in range(lo, nvars + 1):
                row.append(v)
                yield from build_row(col + 1, row)
                row.pop()

        for row in build_row(0, []):
            acc.append(row)
            yield from fill(rowidx + 1, row, acc)
            acc.pop()

    yield from fill(0, None, [])


@lru_cache(maxsize=None)
def schur_polynomial(shape, nvars):
    """Schur polynomial as a monomial dict {exponent tuple: coefficient}."""
    if len(shape) > nvars:
        return {}
    out = {}
    for filling in semistandard_fillings(shape, nvars):
        expo = [0] * nvars
        for row in filling:
            for v in row:
                expo[v - 1] += 1
        key = tuple(expo)
        out[key] = out.get(key, 0) + 1
    return out


def poly_mul(p, q):
    out = {}
    for ka, va in p.items():
        for kb, vb in q.items():
            key = tuple(a + b for a, b in zip(ka, kb))
            s = out.get(key, 0) + va * vb
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def schur_expand(poly, nvars):
    """Expand a symmetric polynomial in the Schur basis by repeatedly
    subtracting the Schur polynomial of the lex-leading monomial."""
    work = {k: v for k, v in poly.items() if v}
    out = {}
    while work:
        lead = max(work)
        lam = tuple(p for p in lead if p)
        assert all(lead[i] >= lead[i + 1] for i in range(nvars - 1)), "not symmetric"
        c = work[lead]
        out[lam] = c
        for mono, sc in schur_polynomial(lam, nvars).items():
            s = work.get(mono, 0) - c * sc
            if s:
                work[mono] = s
            else:
                work.pop(mono, None)
    return out


def schur_product_in_box(lam, mu, rows, cols):
    """Schur-basis expansion of s_lam * s_mu computed with explicit
    polynomials in `rows` variables, filtered to the rows x cols box."""
    prod = poly_mul(schur_polynomial(tuple(lam), rows), schur_polynomial(tuple(mu), rows))
    full = schur_expand(prod, rows)
    return {nu: c for nu, c in full.items() if not nu or nu[0] <= cols}
