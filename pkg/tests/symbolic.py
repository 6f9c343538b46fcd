"""Independent sympy oracles for the polynomial tier."""

from itertools import combinations

import sympy

from maninkit.poly import Poly


def symbols(n):
    return sympy.symbols(f"x0:{n}")


def to_sympy(p: Poly):
    xs = symbols(p.nvars)
    return sympy.Add(*[sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[x ** e for x, e in zip(xs, exps)])
                       for exps, c in p.terms])


def from_sympy(expr, n) -> Poly:
    xs = symbols(n)
    sp = sympy.Poly(sympy.expand(expr), *xs)
    return Poly.from_dict(n, {m: sympy.Rational(c) for m, c in sp.terms() if c})


def bivector_matrix(pi):
    n = pi.nvars
    return [[to_sympy(pi.coefficient((i, j))) if i != j else sympy.Integer(0) for j in range(n)] for i in range(n)]


def poisson_jacobi_zero(pi) -> bool:
    """Jacobi of the bracket on all coordinate triples, expanded by sympy."""
    n = pi.nvars
    xs = symbols(n)
    m = bivector_matrix(pi)

    def pb(f, g):
        return sum(m[a][b] * sympy.diff(f, xs[a]) * sympy.diff(g, xs[b]) for a in range(n) for b in range(n))

    for i, j, k in combinations(range(n), 3):
        a, b, c = xs[i], xs[j], xs[k]
        if sympy.expand(pb(a, pb(b, c)) + pb(b, pb(c, a)) + pb(c, pb(a, b))) != 0:
            return False
    return True


def dorfman(n, e1, e2):
    """``([X, Y], L_X b - i_Y d a)`` on sympy component lists of length ``2n``."""
    xs = symbols(n)
    x, a = e1[:n], e1[n:]
    y, b = e2[:n], e2[n:]
    top = [sum(x[i] * sympy.diff(y[j], xs[i]) - y[i] * sympy.diff(x[j], xs[i]) for i in range(n)) for j in range(n)]
    # (L_X b)_j = X(b_j) + sum_i b_i d_j X^i ;  (i_Y d a)_j = sum_i Y^i (d_i a_j - d_j a_i)
    lie = [sum(x[i] * sympy.diff(b[j], xs[i]) + b[i] * sympy.diff(x[i], xs[j]) for i in range(n)) for j in range(n)]
    con = [sum(y[i] * (sympy.diff(a[j], xs[i]) - sympy.diff(a[i], xs[j])) for i in range(n)) for j in range(n)]
    return [sympy.expand(t) for t in top] + [sympy.expand(p - q) for p, q in zip(lie, con)]
