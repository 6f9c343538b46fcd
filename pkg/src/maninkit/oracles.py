"""Naive reference implementations used to cross-check the checkers.

Each oracle works from raw structure constants with plain loops or an
equivalent formulation of the axiom, sharing as little code with the
checkers as possible.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from .exactlin import Matrix


def _c(g) -> dict:
    return g.c.as_dict()


def _br(c: dict, n: int, x, y) -> list:
    out = [Fraction(0)] * n
    for (i, j, k), v in c.items():
        if x[i] and y[j]:
            out[k] += x[i] * y[j] * v
    return out


def _e(n, i):
    return [Fraction(int(k == i)) for k in range(n)]


def naive_antisymmetry(g) -> set:
    c = _c(g)
    return {(i, j, k) for (i, j, k), v in c.items() if c.get((j, i, k), 0) != -v}


def naive_jacobi(g) -> set:
    """Triples ``i < j < k`` whose cyclic Jacobi sum is nonzero."""
    c, n = _c(g), g.dim
    bad = set()
    for i, j, k in combinations(range(n), 3):
        ei, ej, ek = _e(n, i), _e(n, j), _e(n, k)
        s = [a + b + d for a, b, d in zip(
            _br(c, n, _br(c, n, ei, ej), ek), _br(c, n, _br(c, n, ej, ek), ei), _br(c, n, _br(c, n, ek, ei), ej))]
        if any(s):
            bad.add((i, j, k))
    return bad


def naive_lie(g) -> bool:
    return not naive_antisymmetry(g) and not naive_jacobi(g)


def naive_invariance(algebra, form: Matrix) -> set:
    c, n = _c(algebra), algebra.dim
    bad = set()
    for i, j, k in product(range(n), repeat=3):
        xy = _br(c, n, _e(n, i), _e(n, j))
        xz = _br(c, n, _e(n, i), _e(n, k))
        v = sum(xy[a] * form[a, k] for a in range(n)) + sum(form[j, a] * xz[a] for a in range(n))
        if v:
            bad.add((i, j, k))
    return bad


def naive_quadratic(q) -> bool:
    m = q.form.matrix
    return naive_lie(q.algebra) and m.is_symmetric() and m.det() != 0 and not naive_invariance(q.algebra, m)


def _delta(gstar) -> list:
    """Cobracket as dense antisymmetric tensors: ``delta(e_k)[a][b] = c*_{ab}^k``."""
    n = gstar.dim
    t = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (a, b, k), v in _c(gstar).items():
        t[k][a][b] = v
    return t


def _ad_tensor(c: dict, n: int, x, t) -> list:
    """``ad_x`` on a 2-tensor: ``(ad_x T)^{ab} = (ad_x)^a_m T^{mb} + (ad_x)^b_m T^{am}``."""
    ad = [[Fraction(0)] * n for _ in range(n)]  # ad[a][m]
    for m in range(n):
        col = _br(c, n, x, _e(n, m))
        for a in range(n):
            ad[a][m] = col[a]
    return [[sum(ad[a][m] * t[m][b] + ad[b][m] * t[a][m] for m in range(n)) for b in range(n)] for a in range(n)]


def naive_cocycle(g, gstar) -> set:
    """Pairs ``(i, j)`` violating ``delta[x, y] = ad_x delta y - ad_y delta x``."""
    c, n = _c(g), g.dim
    d = _delta(gstar)
    bad = set()
    for i, j in combinations(range(n), 2):
        xy = _br(c, n, _e(n, i), _e(n, j))
        lhs = [[sum(xy[k] * d[k][a][b] for k in range(n)) for b in range(n)] for a in range(n)]
        r1 = _ad_tensor(c, n, _e(n, i), d[j])
        r2 = _ad_tensor(c, n, _e(n, j), d[i])
        if any(lhs[a][b] != r1[a][b] - r2[a][b] for a in range(n) for b in range(n)):
            bad.add((i, j))
    return bad


def naive_bialgebra(b) -> bool:
    return naive_lie(b.g) and naive_lie(b.gstar) and not naive_cocycle(b.g, b.gstar)


def naive_rmatrix(g, lam) -> bool:
    """The coboundary bracket of ``lam`` is a Lie bracket iff ``[lam, lam]`` is ad-invariant."""
    from .bialg import rmatrix_dual_algebra

    return naive_lie(rmatrix_dual_algebra(g, lam))


def naive_crossed_module(cm) -> bool:
    """Crossed module axioms via the total space: semidirect bracket is Lie and the
    multiplication graph is a subalgebra of its cube."""
    from .crossedmod import total_algebra
    from .twovect import graph_spanning_set

    if not naive_lie(cm.theta) or not naive_lie(cm.a):
        return False
    tot = total_algebra(cm)
    if not naive_lie(tot):
        return False
    n = tot.dim
    c = _c(tot)
    span = graph_spanning_set(cm.vb)
    m = Matrix.from_columns(span, 3 * n)
    for u, w in product(span, repeat=2):
        br = []
        for s in range(3):
            br.extend(_br(c, n, u[s * n:(s + 1) * n], w[s * n:(s + 1) * n]))
        if m.solve(br) is None:
            return False
    return True


def naive_coquadratic(cq) -> bool:
    """``del`` symmetric and ``ad_k del + del ad_k^T = 0`` for every basis ``k``."""
    d = cq.matrix
    if not d.is_symmetric():
        return False
    k = cq.k
    c, n = _c(k), k.dim
    for i in range(n):
        ad = Matrix.from_columns([_br(c, n, _e(n, i), _e(n, m)) for m in range(n)], n)
        if not (ad @ d + d @ ad.T).is_zero():
            return False
    return True


def naive_poisson(pi) -> bool:
    """Jacobi identity of ``{f, g} = pi(df, dg)`` on coordinate functions."""
    n = pi.nvars

    def pb(f, g):
        from .poly import Poly

        out = Poly.zero(n)
        for a in range(n):
            for b in range(n):
                coef = pi.coefficient((a, b))
                if coef:
                    out = out + coef * f.diff(a) * g.diff(b)
        return out

    from .poly import Poly

    xs = [Poly.var(n, i) for i in range(n)]
    for i, j, k in combinations(range(n), 3):
        s = pb(xs[i], pb(xs[j], xs[k])) + pb(xs[j], pb(xs[k], xs[i])) + pb(xs[k], pb(xs[i], xs[j]))
        if s:
            return False
    return True


def naive_poly_algebroid(a, samples=None) -> bool:
    """Antisymmetry, anchor morphism and Jacobi on sample sections with polynomial coefficients."""
    from .poly import monomials, vf_bracket

    r, n = a.rank, a.nvars
    for i in range(r):
        for j in range(r):
            if any(p + q for p, q in zip(a.bracket_generators(i, j), a.bracket_generators(j, i))):
                return False
    mons = monomials(n, 1)
    secs = samples or [a.generator(i, m) for i in range(r) for m in mons]
    for x, y in product(secs, repeat=2):
        if a.rho(a.bracket(x, y)) != vf_bracket(a.rho(x), a.rho(y)):
            return False
    for x, y, z in combinations(secs, 3):
        t = [p - q - s for p, q, s in zip(a.bracket(x, a.bracket(y, z)), a.bracket(a.bracket(x, y), z), a.bracket(y, a.bracket(x, z)))]
        if any(t):
            return False
    return True


def _in_span(vectors, w) -> bool:
    if not any(w):
        return True
    if not vectors:
        return False
    m = Matrix.from_columns(vectors, len(w))
    return m.solve(list(w)) is not None


def _closed(c: dict, n: int, vectors) -> bool:
    return all(_in_span(vectors, _br(c, n, u, w)) for u, w in combinations(vectors, 2))


def _bivector_matrix(lam, n: int) -> list:
    r = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), v in lam.components:
        r[i][j] += v
        r[j][i] -= v
    return r


def naive_rmatrix_dual(g, lam) -> dict:
    """Structure constants of ``[e^a, e^b]_k = -[X_a, e_k]_b + [X_b, e_k]_a`` with ``X_a = lam(e^a, .)``."""
    c, n = _c(g), g.dim
    r = _bivector_matrix(lam, n)
    out = {}
    for a, b, k in product(range(n), repeat=3):
        v = -_br(c, n, r[a], _e(n, k))[b] + _br(c, n, r[b], _e(n, k))[a]
        if v:
            out[(a, b, k)] = v
    return out


def naive_graph_closed(g, lam) -> bool:
    """Graph of ``lam#`` closed in ``g`` semidirect ``g*`` (coadjoint action), by explicit loops."""
    c, n = _c(g), g.dim
    r = _bivector_matrix(lam, n)

    def bracket(u, w):
        x, xi = u[:n], u[n:]
        y, eta = w[:n], w[n:]
        top = _br(c, n, x, y)
        # ad*_x eta - ad*_y xi, with (ad*_x eta)_k = -eta([x, e_k])
        bot = [-sum(e * v for e, v in zip(eta, _br(c, n, x, _e(n, k)))) + sum(e * v for e, v in zip(xi, _br(c, n, y, _e(n, k))))
               for k in range(n)]
        return top + bot

    vecs = [r[a] + _e(n, a) for a in range(n)]
    return all(_in_span(vecs, bracket(u, w)) for u, w in combinations(vecs, 2))


def _trivector(c: dict, n: int, r: list):
    """``T(xi, eta, zeta) = sum_cyc xi([r# eta, r# zeta])``, proportional to ``[r, r]``."""

    def sh(xi):
        return [sum(xi[a] * r[a][b] for a in range(n)) for b in range(n)]

    def t(x, y, z):
        s = Fraction(0)
        for p, q, w in ((x, y, z), (y, z, x), (z, x, y)):
            s += sum(a * b for a, b in zip(p, _br(c, n, sh(q), sh(w))))
        return s

    return t


def naive_cm_rmatrix(cm, r) -> bool:
    """``r`` is an r-matrix on theta and ``[r, r]`` is killed by every ``v`` in ``A``."""
    if not naive_rmatrix(cm.theta, r):
        return False
    c, n = _c(cm.theta), cm.theta.dim
    t = _trivector(c, n, _bivector_matrix(r, n))
    for m in cm.act.action:
        mt = m.T
        for i, j, k in combinations(range(n), 3):
            x, y, z = _e(n, i), _e(n, j), _e(n, k)
            v = t(mt.apply(x), y, z) + t(x, mt.apply(y), z) + t(x, y, mt.apply(z))
            if v:
                return False
    return True


def naive_lie2bialgebra(b) -> bool:
    from .crossedmod import dual_total_in_gamma_star, total_algebra

    cm1, cm2 = b.cm1, b.cm2
    if not (naive_crossed_module(cm1) and naive_crossed_module(cm2)):
        return False
    if cm2.phi.matrix != cm1.phi.matrix.T:
        return False
    return not naive_cocycle(total_algebra(cm1), dual_total_in_gamma_star(cm2, cm1.vb))


def naive_dirac(q, l) -> bool:
    """Lagrangian (isotropic, half dimension) and closed under the bracket."""
    m, n = q.form.matrix, q.dim
    vs = l.vectors
    if 2 * len(vs) != n:
        return False
    for u, w in product(vs, repeat=2):
        if sum(u[a] * m[a, b] * w[b] for a in range(n) for b in range(n)):
            return False
    return _closed(_c(q.algebra), n, vs)


def naive_manin_triple(q, l1, l2) -> bool:
    if not (naive_dirac(q, l1) and naive_dirac(q, l2)):
        return False
    both = list(l1.vectors) + list(l2.vectors)
    return len(both) == q.dim and Matrix.from_columns(both, q.dim).rank() == q.dim


def naive_coquad_dirac(cq, d) -> bool:
    """Subalgebra of ``K`` whose annihilator is isotropic for ``del``."""
    from .exactlin import annihilator

    c, n = _c(cq.k), cq.k.dim
    if not _closed(c, n, d.vectors):
        return False
    ann = annihilator(d).vectors
    dm = cq.matrix
    return all(sum(u[a] * dm[a, b] * w[b] for a in range(n) for b in range(n)) == 0 for u in ann for w in ann)


def _mult_graph(side: int, core: int, delta: Matrix) -> list:
    """Spanning triples ``(m, u, w)`` with ``u = (c, k + del c')``, ``w = (c', k)``, ``m = (c + c', k)``."""
    n = side + core
    out = []
    for which in range(2 * core + side):
        c1 = [Fraction(int(which == i)) for i in range(core)]
        c2 = [Fraction(int(which == core + i)) for i in range(core)]
        k = [Fraction(int(which == 2 * core + i)) for i in range(side)]
        dc2 = [sum(delta[a, b] * c2[b] for b in range(core)) for a in range(side)] if core else [Fraction(0)] * side
        m = [x + y for x, y in zip(c1, c2)] + k
        u = c1 + [x + y for x, y in zip(k, dc2)]
        w = c2 + k
        out.append(m + u + w)
    assert all(len(v) == 3 * n for v in out)
    return out


def naive_multiplicative(q) -> bool:
    """``gr(m)`` Lagrangian in ``G x bar G x bar G`` and a subalgebra of the cube."""
    n = q.total.dim
    m = q.total.form.matrix
    vb = q.vb
    graph = _mult_graph(vb.side_dim, vb.core_dim, vb.matrix)
    if 2 * Matrix.from_columns(graph, 3 * n).rank() != 3 * n:
        return False

    def pair(x, y):
        s = Fraction(0)
        for blk, sign in ((0, 1), (1, -1), (2, -1)):
            xs, ys = x[blk * n:(blk + 1) * n], y[blk * n:(blk + 1) * n]
            s += sign * sum(xs[a] * m[a, b] * ys[b] for a in range(n) for b in range(n))
        return s

    if any(pair(x, y) for x, y in product(graph, repeat=2)):
        return False
    c = _c(q.total.algebra)
    for x, y in combinations(graph, 2):
        br = []
        for blk in range(3):
            br.extend(_br(c, n, x[blk * n:(blk + 1) * n], y[blk * n:(blk + 1) * n]))
        if not _in_span(graph, br):
            return False
    return True


def naive_mult_dirac(q, l) -> bool:
    """Dirac, contains the units of its base and is closed under groupoid multiplication."""
    if not naive_dirac(q.total, l):
        return False
    from .exactlin import kernel

    vb = q.vb
    nc, ns = vb.core_dim, vb.side_dim
    vs = l.vectors

    def s_of(v):
        return list(v[nc:])

    def t_of(v):
        return [v[nc + a] + sum(vb.matrix[a, b] * v[b] for b in range(nc)) for a in range(ns)]

    zero_core = [Fraction(0)] * nc
    for v in vs:
        if not _in_span(vs, zero_core + s_of(v)) or not _in_span(vs, zero_core + t_of(v)):
            return False
    dim = len(vs)
    if dim == 0:
        return True
    # composable pairs: coefficient vectors (a, b) with s(sum a_i v_i) = t(sum b_j v_j)
    rows = [[s_of(v)[a] for v in vs] + [-t_of(v)[a] for v in vs] for a in range(ns)]
    sols = kernel(Matrix.from_rows(rows, 2 * dim)).vectors if rows else [tuple(_e(2 * dim, i)) for i in range(2 * dim)]
    for sol in sols:
        u = [sum(sol[i] * vs[i][p] for i in range(dim)) for p in range(nc + ns)]
        w = [sum(sol[dim + i] * vs[i][p] for i in range(dim)) for p in range(nc + ns)]
        prod = [x + y for x, y in zip(u[:nc], w[:nc])] + w[nc:]
        if not _in_span(vs, prod):
            return False
    return True


def naive_poly_invariance(k, delta) -> bool:
    """``rho(k)<del g, g'> = <L_k g, del g'> + <L_k g', del g>`` on generators, with the Lie
    derivative computed by Cartan's formula ``(L_k g)(e_m) = rho(k) g(e_m) - g([k, e_m])``."""
    from .poly import Poly, vf_apply

    r, n = k.rank, k.nvars
    for a in range(r):
        for b in range(r):
            for cc in range(r):
                def lie(bb):
                    return [vf_apply(k.anchor[a], Poly.const(n, int(m == bb))) - k.bracket_generators(a, m)[bb] for m in range(r)]

                lhs = vf_apply(k.anchor[a], delta[b][cc])
                lb, lc = lie(b), lie(cc)
                rhs = Poly.zero(n)
                for m in range(r):
                    rhs = rhs + lb[m] * delta[m][cc] + lc[m] * delta[m][b]
                if lhs != rhs:
                    return False
    return True


def oracle_verdicts(s) -> dict:
    """Naive verdicts for a decoded :class:`~maninkit.fileformat.Structure`, keyed like
    :func:`maninkit.catalog.checker_verdicts`; their conjunction is the suite verdict."""
    kind, obj, ex = s.kind, s.obj, s.extras
    out: dict = {}
    if kind == "lie_algebra":
        out["antisymmetry"] = not naive_antisymmetry(obj)
        out["jacobi"] = not naive_jacobi(obj)
    elif kind == "bialgebra":
        out["g_lie"] = naive_lie(obj.g)
        out["gstar_lie"] = naive_lie(obj.gstar)
        out["cocycle"] = not naive_cocycle(obj.g, obj.gstar)
        if "rmatrix" in ex:
            out["rmatrix"] = naive_lie(obj.g) and naive_rmatrix(obj.g, ex["rmatrix"])
            out["rmatrix_dual"] = out["rmatrix"] and naive_rmatrix_dual(obj.g, ex["rmatrix"]) == obj.gstar.c.as_dict()
    elif kind in ("quadratic", "quadratic_lie2"):
        q = obj if kind == "quadratic" else obj.total
        out["lie"] = naive_lie(q.algebra)
        out["form"] = q.form.matrix.det() != 0
        out["invariance"] = not naive_invariance(q.algebra, q.form.matrix)
        if kind == "quadratic":
            if "l1" in ex and "l2" in ex:
                out["manin_triple"] = naive_manin_triple(q, ex["l1"], ex["l2"])
        else:
            if all(out.values()):
                out["multiplicative"] = naive_multiplicative(obj)
            else:
                out["multiplicative"] = False
            for key in ("l1", "l2"):
                if key in ex:
                    out[f"{key}_mult_dirac"] = naive_mult_dirac(obj, ex[key])
            if "l1" in ex and "l2" in ex:
                both = list(ex["l1"].vectors) + list(ex["l2"].vectors)
                out["transverse"] = len(both) == q.dim and Matrix.from_columns(both, q.dim).rank() == q.dim
    elif kind == "crossed_module":
        out["crossed_module"] = naive_crossed_module(obj)
        if "rmatrix" in ex:
            out["cm_rmatrix"] = naive_lie(obj.theta) and naive_cm_rmatrix(obj, ex["rmatrix"])
    elif kind == "lie2_bialgebra":
        from .crossedmod import dual_total_in_gamma_star, total_algebra

        out["cm1"] = naive_crossed_module(obj.cm1)
        out["cm2"] = naive_crossed_module(obj.cm2)
        out["vb_duality"] = obj.cm2.phi.matrix == obj.cm1.phi.matrix.T
        out["cocycle"] = out["vb_duality"] and not naive_cocycle(
            total_algebra(obj.cm1), dual_total_in_gamma_star(obj.cm2, obj.cm1.vb))
        if "rmatrix" in ex:
            out["cm_rmatrix"] = naive_lie(obj.cm1.theta) and naive_cm_rmatrix(obj.cm1, ex["rmatrix"])
    elif kind == "coquadratic":
        out["coquadratic"] = naive_coquadratic(obj)
        if "l1" in ex and "l2" in ex:
            l1, l2 = ex["l1"], ex["l2"]
            both = list(l1.vectors) + list(l2.vectors)
            out["manin_triple"] = (naive_coquad_dirac(obj, l1) and naive_coquad_dirac(obj, l2)
                                   and len(both) == obj.k.dim and Matrix.from_columns(both, obj.k.dim).rank() == obj.k.dim)
    elif kind == "poly_algebroid":
        out["algebroid"] = naive_poly_algebroid(obj)
        if "del" in ex:
            d = ex["del"]
            out["del_symmetric"] = all(d[i][j] == d[j][i] for i in range(len(d)) for j in range(len(d)))
            out["coquad_invariance"] = out["del_symmetric"] and naive_poly_invariance(obj, d)
    elif kind == "poly_bivector":
        out["poisson"] = naive_poisson(obj)
    else:
        raise ValueError(f"no oracle for kind {kind!r}")
    return out


def oracle_extras(s) -> dict:
    """Verdicts recorded in the catalog that are not part of the suite."""
    out: dict = {}
    if s.kind == "bialgebra" and "rmatrix" in s.extras:
        out["manin_triple_graph"] = naive_graph_closed(s.obj.g, s.extras["rmatrix"])
    return out
