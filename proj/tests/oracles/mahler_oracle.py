"""Independent oracle for Mahler-measure iteration.

Uses sympy exact factorization and mpmath high-precision roots; shares no
code with the C++ engine. Values printed here are frozen into the C++ tests.
"""
import itertools
import sys

import mpmath
import sympy

x = sympy.Symbol("x")
mpmath.mp.dps = 400


def roots_of(poly):
    coeffs = [int(c) for c in sympy.Poly(poly, x).all_coeffs()]
    return mpmath.polyroots(coeffs, maxsteps=2000, extraprec=2000)


def minpoly_of_value(value, candidates):
    for g in candidates:
        gv = mpmath.polyval([int(c) for c in sympy.Poly(g, x).all_coeffs()], value)
        if abs(gv) < mpmath.mpf(10) ** (-150) * max(1, abs(value)) ** sympy.degree(g, x):
            return g
    raise RuntimeError("no factor vanishes at value")


def mahler(poly):
    """Return (minpoly of M(alpha), numeric M, outside count) for irreducible poly."""
    p = sympy.Poly(poly, x)
    lc = int(p.LC())
    rts = roots_of(poly)
    outside = [r for r in rts if abs(r) > 1 + mpmath.mpf(10) ** -100]
    k = len(outside)
    if k == 0:
        return sympy.Poly(x - abs(lc), x).as_expr(), mpmath.mpf(abs(lc)), 0
    prods = [lc * mpmath.fprod(s) for s in itertools.combinations(rts, k)]
    expanded = [mpmath.mpc(1)]
    for r in prods:
        nxt = [mpmath.mpc(0)] * (len(expanded) + 1)
        for i, c in enumerate(expanded):
            nxt[i] += c
            nxt[i + 1] -= c * r
        expanded = nxt
    ints = [int(mpmath.nint(c.real)) for c in expanded]
    P = sum(c * x ** (len(ints) - 1 - i) for i, c in enumerate(ints))
    v = lc * mpmath.fprod(outside)
    value = abs(v)
    factors = [f for f, _ in sympy.factor_list(P)[1]]
    g = minpoly_of_value(v, factors)
    if mpmath.re(v) < 0:
        g = sympy.expand(g.subs(x, -x))
    g = sympy.Poly(g, x)
    if g.LC() < 0:
        g = -g
    return g.as_expr(), value, k


def orbit(poly, max_iter=8):
    steps = [sympy.Poly(poly, x).as_expr()]
    values = []
    cur = poly
    for _ in range(max_iter):
        g, val, k = mahler(cur)
        values.append(val)
        if sympy.expand(g - cur) == 0:
            return steps, values
        steps.append(g)
        cur = g
    return steps, values


if __name__ == "__main__":
    for s in sys.argv[1:]:
        f = sympy.sympify(s)
        steps, values = orbit(f)
        print(s, "orbit size", len(steps))
        for st, v in zip(steps, values):
            print("   ", sympy.Poly(st, x).all_coeffs(), mpmath.nstr(v, 20))
