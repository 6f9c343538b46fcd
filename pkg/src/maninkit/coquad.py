"""Co-quadratic Lie algebras and quadratic Lie 2-algebras (CA-groupoids over a point).

A quadratic Lie 2-algebra is a quadratic Lie algebra on ``G = C + K`` (core
first) carrying the groupoid structure of a ``TwoVect`` ``C -> K``. For a
co-quadratic ``(K, del)`` the core is ``K*`` and coordinates are ``(gamma | k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bialg import LieBialgebra, drinfeld_double
from .crossedmod import (
    CrossedModule,
    Lie2Algebra,
    Lie2Bialgebra,
    check_lie2bialgebra,
    dual_total_in_gamma_star,
    from_lie2algebra,
    total_algebra,
)
from .exactlin import (
    DimensionError,
    Matrix,
    RationalTensor3,
    Subspace,
    annihilator,
    block_diag,
    direct_sum_subspace,
    hstack,
    intersect,
    is_transverse,
    kernel,
    unit_vec,
)
from .liealg import (
    distinct_names,
    LieAlgebra,
    LinearMap,
    change_basis,
    coad,
    direct_sum,
    is_subalgebra,
    restrict_to_basis,
    subalgebra_violations,
)
from .quadratic import (
    BilinearForm,
    QuadraticLieAlgebra,
    check_courant_point,
    direct_sum_form,
    is_dirac_point,
)
from .report import CheckFailed, Report, Witness
from .twovect import TwoVect, direct_sum_twovect, dual_embedding, dualize, graph_mult, groupoid_maps

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CoquadraticLieAlgebra:
    k: LieAlgebra
    delta: LinearMap  # K* -> K

    def __post_init__(self):
        if (self.delta.source_dim, self.delta.target_dim) != (self.k.dim, self.k.dim):
            raise DimensionError("del must be a square map K* -> K")

    @classmethod
    def of(cls, k: LieAlgebra, matrix) -> "CoquadraticLieAlgebra":
        m = matrix if isinstance(matrix, Matrix) else Matrix.from_rows(matrix, k.dim)
        return cls(k, LinearMap.of(m))

    @property
    def matrix(self) -> Matrix:
        return self.delta.matrix


@dataclass(frozen=True)
class QuadraticLie2Algebra:
    total: QuadraticLieAlgebra
    vb: TwoVect

    def __post_init__(self):
        if self.total.dim != self.vb.total_dim:
            raise DimensionError("groupoid and algebra dimensions differ")

    @property
    def core(self) -> Subspace:
        return Subspace.coordinate(self.total.dim, range(self.vb.core_dim))

    @property
    def side(self) -> Subspace:
        return Subspace.coordinate(self.total.dim, range(self.vb.core_dim, self.total.dim))

    def maps(self) -> tuple:
        return groupoid_maps(self.vb)


# ---------------------------------------------------------------------------
# co-quadratic side


def coquad_invariance_violations(cq: CoquadraticLieAlgebra) -> list:
    k, d = cq.k, cq.matrix
    n = k.dim
    out = []
    for i in range(n):
        ei = unit_vec(n, i)
        for a in range(n):
            la = coad(k, ei, unit_vec(n, a))
            for b in range(a, n):
                lb = coad(k, ei, unit_vec(n, b))
                # <L_k g, del g'> + <L_k g', del g>
                r = sum(x * y for x, y in zip(la, d.column(b))) + sum(x * y for x, y in zip(lb, d.column(a)))
                if r:
                    out.append(Witness((i, a, b), r))
    return out


def check_coquadratic(cq: CoquadraticLieAlgebra) -> Report:
    rep = Report("co-quadratic")
    d = cq.matrix
    n = cq.k.dim
    rep.add("(a) symmetric", [Witness((i, j), d[i, j] - d[j, i]) for i in range(n) for j in range(i + 1, n) if d[i, j] != d[j, i]])
    rep.add("(b) invariant", coquad_invariance_violations(cq))
    return rep


def coquad_form(cq: CoquadraticLieAlgebra) -> BilinearForm:
    """``(g + k, g' + k') = (g(k') + g'(k) + g(del g')) / 2`` on ``(gamma | k)``."""
    n = cq.k.dim
    d = cq.matrix
    rows = []
    for i in range(n):
        rows.append([HALF * d[i, j] for j in range(n)] + [HALF * int(i == j) for j in range(n)])
    for i in range(n):
        rows.append([HALF * int(i == j) for j in range(n)] + [Fraction(0)] * n)
    m = Matrix.from_rows(rows, 2 * n)
    if not m.is_symmetric():
        raise ValueError("del is not symmetric")
    return BilinearForm(2 * n, m)


def coquad_algebra(cq: CoquadraticLieAlgebra) -> LieAlgebra:
    """``[g + k, g' + k'] = (ad*_k g' - ad*_k' g + ad*_{del g} g') + [k, k']``."""
    k, d = cq.k, cq.matrix
    n = k.dim
    data = {}
    for p in range(2 * n):
        g1, k1 = unit_vec(2 * n, p)[:n], unit_vec(2 * n, p)[n:]
        for q in range(2 * n):
            g2, k2 = unit_vec(2 * n, q)[:n], unit_vec(2 * n, q)[n:]
            top = [a - b + c for a, b, c in zip(coad(k, k1, g2), coad(k, k2, g1), coad(k, d.apply(g1), g2))]
            bot = list(k.bracket(k1, k2))
            for idx, x in enumerate(top + bot):
                if x:
                    data[(p, q, idx)] = x
    names = distinct_names(k.dual_names() + k.basis_names)
    return LieAlgebra(2 * n, names, RationalTensor3.from_dict(2 * n, data))


def coquad_to_ca(cq: CoquadraticLieAlgebra, verify: bool = True) -> QuadraticLie2Algebra:
    if verify:
        pre = check_coquadratic(cq)
        if not pre:
            raise CheckFailed("not co-quadratic: " + ", ".join(pre.failed()), pre)
    q = QuadraticLie2Algebra(QuadraticLieAlgebra(coquad_algebra(cq), coquad_form(cq)), TwoVect(cq.k.dim, cq.k.dim, cq.delta))
    if verify:
        post = check_courant_point(q.total)
        post.extend(check_multiplicativity(q))
        post.add_bool("K dirac", is_dirac_point(q.side, q.total))
        if not post:
            raise CheckFailed("constructed CA-groupoid failed verification: " + ", ".join(post.failed()), post)
    return q


def ca_to_coquad(q: QuadraticLie2Algebra) -> CoquadraticLieAlgebra:
    if q.vb.core_dim != q.vb.side_dim:
        raise ValueError("core and side must have equal dimension")
    if not is_dirac_point(q.side, q.total):
        raise CheckFailed("side is not a Dirac structure")
    nc = q.vb.core_dim
    k = restrict_to_basis(q.total.algebra, q.side.vectors, q.total.algebra.basis_names[nc:])
    s, t, _ = q.maps()
    diff = t.matrix - s.matrix
    d = Matrix.from_columns([diff.column(i) for i in range(nc)], q.vb.side_dim)
    return CoquadraticLieAlgebra(k, LinearMap.of(d @ core_to_dual(q).inverse()))


def core_to_dual(q: QuadraticLie2Algebra) -> Matrix:
    """Identify the core with ``K*`` through twice the pairing: ``x -> 2 (x, .)|_K``."""
    nc = q.vb.core_dim
    cs, ks = q.core.vectors, q.side.vectors
    return Matrix.from_rows([[2 * q.total.form(c, k) for c in cs] for k in ks], nc)


def coquad_equal(a: CoquadraticLieAlgebra, b: CoquadraticLieAlgebra) -> bool:
    return a.k.c == b.k.c and a.matrix == b.matrix


def is_coquad_dirac(cq: CoquadraticLieAlgebra, d: Subspace) -> bool:
    if not is_subalgebra(d, cq.k):
        return False
    ann = annihilator(d).vectors
    return all(sum(x * y for x, y in zip(g2, cq.matrix.apply(g1))) == 0 for g1 in ann for g2 in ann)


def check_coquad_manin_triple(cq: CoquadraticLieAlgebra, p: Subspace, q: Subspace) -> Report:
    rep = Report("co-quadratic Manin triple")
    rep.add_bool("P dirac", is_coquad_dirac(cq, p))
    rep.add_bool("Q dirac", is_coquad_dirac(cq, q))
    rep.add_bool("transverse", is_transverse(p, q))
    return rep


def dirac_to_mult(cq: CoquadraticLieAlgebra, d: Subspace, verify: bool = True) -> Subspace:
    if verify and not is_coquad_dirac(cq, d):
        raise CheckFailed("not a co-quadratic Dirac structure")
    return direct_sum_subspace(annihilator(d), d)


def mult_to_dirac(q: QuadraticLie2Algebra, l: Subspace, verify: bool = True) -> Subspace:
    if verify and not is_mult_dirac(q, l):
        raise CheckFailed("not a multiplicative Dirac structure")
    nc = q.vb.core_dim
    return Subspace.span([v[nc:] for v in l.vectors], q.vb.side_dim)


# ---------------------------------------------------------------------------
# multiplicativity


def _pair(q: QuadraticLie2Algebra, u, v) -> Fraction:
    return q.total.form(u, v)


def multiplicativity_conditions(q: QuadraticLie2Algebra) -> Report:
    """Condition list on basis elements: core ``c``, side ``k``, ``del = t - s``."""
    vb = q.vb
    nc, nk = vb.core_dim, vb.side_dim
    n = nc + nk
    g = q.total.algebra
    cs = [unit_vec(n, i) for i in range(nc)]
    ks = [unit_vec(n, nc + i) for i in range(nk)]

    def d(x):  # core vector -> side vector in G
        return (Fraction(0),) * nc + tuple(vb.matrix.apply(x[:nc]))

    def in_core(x):
        return not any(x[nc:])

    def in_side(x):
        return not any(x[:nc])

    def diff(x, y):
        return tuple(a - b for a, b in zip(x, y))

    rep = Report("multiplicativity conditions")
    rep.add("(1.1) K isotropic", [Witness((i, j), _pair(q, ks[i], ks[j])) for i in range(nk) for j in range(nk) if _pair(q, ks[i], ks[j])])
    rep.add("(1.2) (c, c') = (c, del c')", [
        Witness((i, j), _pair(q, cs[i], cs[j]) - _pair(q, cs[i], d(cs[j])))
        for i in range(nc) for j in range(nc) if _pair(q, cs[i], cs[j]) != _pair(q, cs[i], d(cs[j]))
    ])
    rep.add_bool("lagrangian dimension", nc == nk, Witness((), f"core {nc}, side {nk}"))
    closure = []
    for i in range(n):
        for j in range(n):
            w = g.bracket_basis(i, j)
            if i >= nc and j >= nc:
                if not in_side(w):
                    closure.append(Witness((i, j), w))
            elif not in_core(w):
                closure.append(Witness((i, j), w))
    rep.add("closure", closure, note="[C,C], [C,K], [K,C] in C and [K,K] in K")
    c21 = []
    for i in range(nc):
        for j in range(nc):
            r1 = diff(g.bracket(d(cs[j]), cs[i]), g.bracket(cs[j], cs[i]))
            r2 = diff(g.bracket(cs[i], d(cs[j])), g.bracket(cs[i], cs[j]))
            if any(r1) or any(r2):
                c21.append(Witness((i, j), r1 if any(r1) else r2))
    rep.add("(2.1) [del c', c] = [c', c]", c21)
    c22, c23 = [], []
    for i in range(nk):
        for j in range(nc):
            r = diff(g.bracket(ks[i], d(cs[j])), d(g.bracket(ks[i], cs[j])))
            if any(r):
                c22.append(Witness((i, j), r))
            r = diff(g.bracket(d(cs[j]), ks[i]), d(g.bracket(cs[j], ks[i])))
            if any(r):
                c23.append(Witness((j, i), r))
    rep.add("(2.2) [k, del c] = del [k, c]", c22)
    rep.add("(2.3) [del c, k] = del [c, k]", c23)
    bb = []
    for i in range(nc):
        for j in range(nc):
            r = diff(g.bracket(d(cs[i]), d(cs[j])), d(g.bracket(cs[i], cs[j])))
            if any(r):
                bb.append(Witness((i, j), r))
    rep.add("del bracket", bb, note="[del c, del c'] = del [c, c']")
    rep.add("(3) im del in ker rho", (), note="vacuous over a point")
    return rep


def multiplicativity_direct(q: QuadraticLie2Algebra) -> Report:
    """``gr(m)`` is Dirac in ``G x bar G x bar G``."""
    n = q.total.dim
    gr = graph_mult(q.vb).graph
    form = direct_sum_form(q.total.form, -q.total.form, -q.total.form)
    cube = direct_sum(q.total.algebra, q.total.algebra, q.total.algebra)
    rep = Report("multiplicativity direct")
    vs = gr.vectors
    iso = [Witness((a, b), form(vs[a], vs[b])) for a in range(len(vs)) for b in range(a, len(vs)) if form(vs[a], vs[b])]
    rep.add("graph isotropic", iso)
    rep.add_bool("graph half dimension", 2 * gr.dim == 3 * n, Witness((), f"dim {gr.dim} in {3 * n}"))
    rep.add("graph involutive", subalgebra_violations(gr, cube))
    return rep


def check_multiplicativity(q: QuadraticLie2Algebra) -> Report:
    cond = multiplicativity_conditions(q)
    direct = multiplicativity_direct(q)
    if cond.passed != direct.passed:
        raise AssertionError(
            "multiplicativity verdicts disagree (implementation bug):\n" + cond.summary() + "\n" + direct.summary()
        )
    rep = Report("multiplicativity")
    rep.extend(cond, "conditions ")
    rep.extend(direct, "direct ")
    return rep


def _composable_pairs(vb: TwoVect, l: Subspace) -> Subspace:
    s, t, _ = groupoid_maps(vb)
    both = direct_sum_subspace(l, l)
    cond = hstack(s.matrix, -t.matrix)  # s(u) - t(w) = 0
    return intersect(both, kernel(cond))


def is_mult_dirac(q: QuadraticLie2Algebra, l: Subspace) -> bool:
    if not is_dirac_point(l, q.total):
        return False
    vb = q.vb
    nc, n = vb.core_dim, vb.total_dim
    s, t, unit = groupoid_maps(vb)
    for v in l.vectors:
        if not l.contains(unit(s(v))) or not l.contains(unit(t(v))):
            return False
    for pair in _composable_pairs(vb, l).vectors:
        u, w = pair[:n], pair[n:]
        prod = tuple(a + b for a, b in zip(u[:nc], w[:nc])) + tuple(w[nc:])
        if not l.contains(prod):
            return False
    return True


def check_pairing_morphism(q: QuadraticLie2Algebra) -> Report:
    """The flat map of the pairing is a groupoid morphism ``(G => K) -> (G* => C*)``."""
    vb = q.vb
    dual = dualize(vb)
    f = dual_embedding(vb).inverse() @ q.total.form.matrix
    s, t, unit = groupoid_maps(vb)
    s2, t2, _ = groupoid_maps(dual)
    base = s2.matrix @ f @ unit.matrix
    rep = Report("pairing morphism")
    rep.add_bool("source", s2.matrix @ f == base @ s.matrix)
    rep.add_bool("target", t2.matrix @ f == base @ t.matrix)
    g2 = graph_mult(dual).graph
    f3 = block_diag(f, f, f)
    bad = [Witness((i,), None) for i, v in enumerate(graph_mult(vb).graph.vectors) if not g2.contains(f3.apply(v))]
    rep.add("multiplication", bad)
    return rep


# ---------------------------------------------------------------------------
# doubles of Lie 2-bialgebras


def _double_chart(cm: CrossedModule) -> Matrix:
    """Drinfeld double coordinates ``(c, v, x, y)`` (``x`` in theta*, ``y`` in A*) to
    ``(c, a | v, zeta)`` with ``a = y`` and ``zeta = x - phi^T y``."""
    nt, na = cm.theta.dim, cm.a.dim
    n = nt + na
    m = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(nt):
        m[i][i] = Fraction(1)  # c
    for i in range(na):
        m[nt + i][n + nt + i] = Fraction(1)  # a = y
        m[nt + na + i][nt + i] = Fraction(1)  # v
    pt = cm.phi.matrix.T  # nt x na
    for i in range(nt):
        m[nt + 2 * na + i][n + i] = Fraction(1)  # zeta = x - phi^T y
        for j in range(na):
            m[nt + 2 * na + i][n + nt + j] = -pt[i, j]
    return Matrix(2 * n, 2 * n, tuple(tuple(r) for r in m))


def double_lie2bialgebra(b: Lie2Bialgebra, verify: bool = True):
    """Return ``(q, l1, l2)``; ``q`` has core ``theta + A*`` and side ``A + theta*``."""
    cm1, cm2 = b.cm1, b.cm2
    if verify:
        pre = check_lie2bialgebra(b)
        if not pre:
            raise CheckFailed("not a Lie 2-bialgebra: " + ", ".join(pre.failed()), pre)
    total1 = total_algebra(cm1)
    total2 = dual_total_in_gamma_star(cm2, cm1.vb)
    dq, _, _ = drinfeld_double(LieBialgebra(total1, total2), verify=False)
    p = _double_chart(cm1)
    pinv = p.inverse()
    names = distinct_names(cm1.theta.basis_names + cm2.theta.basis_names + cm1.a.basis_names + cm2.a.basis_names)
    alg = change_basis(dq.algebra, p, names)
    form = BilinearForm(dq.dim, pinv.T @ dq.form.matrix @ pinv)
    vb = direct_sum_twovect(cm1.vb, cm2.vb)
    q = QuadraticLie2Algebra(QuadraticLieAlgebra(alg, form), vb)
    nt, na = cm1.theta.dim, cm1.a.dim
    n = nt + na
    l1 = Subspace.coordinate(2 * n, list(range(nt)) + list(range(n, n + na)))
    l2 = Subspace.coordinate(2 * n, list(range(nt, n)) + list(range(n + na, 2 * n)))
    if verify:
        post = check_courant_point(q.total)
        post.extend(check_multiplicativity(q))
        post.extend(check_pairing_morphism(q))
        post.add_bool("l1 multiplicative dirac", is_mult_dirac(q, l1))
        post.add_bool("l2 multiplicative dirac", is_mult_dirac(q, l2))
        post.add_bool("transverse", is_transverse(l1, l2))
        if not post:
            raise CheckFailed("double failed verification: " + ", ".join(post.failed()), post)
    return q, l1, l2


def _vb_basis(q: QuadraticLie2Algebra, l: Subspace) -> tuple:
    """Bases of ``l`` intersected with core and side, and the induced structural map."""
    lc = intersect(l, q.core)
    lk = intersect(l, q.side)
    if lc.dim + lk.dim != l.dim:
        raise CheckFailed("subspace does not split into core and side parts")
    s, t, _ = q.maps()
    dmat = []
    _, _, unit = q.maps()
    for v in lc.vectors:
        w = unit(t(v))
        coords = lk.coordinates(w)
        if coords is None:
            raise CheckFailed("structural map leaves the subspace")
        dmat.append(coords)
    delta = Matrix.from_columns(dmat, lk.dim) if dmat else Matrix.zeros(lk.dim, 0)
    return lc.vectors, lk.vectors, delta


def extract_lie2bialgebra(q: QuadraticLie2Algebra, l1: Subspace, l2: Subspace, verify: bool = True) -> Lie2Bialgebra:
    if verify:
        ok = is_mult_dirac(q, l1) and is_mult_dirac(q, l2) and is_transverse(l1, l2)
        if not ok:
            raise CheckFailed("not a multiplicative Manin triple")
    g = q.total.algebra
    c1, k1, d1 = _vb_basis(q, l1)
    basis1 = list(c1) + list(k1)
    n = len(basis1)
    names1 = _names(g, basis1, "u")
    total1 = restrict_to_basis(g, basis1, names1)
    vb1 = TwoVect.of(d1)
    cm1 = from_lie2algebra(Lie2Algebra(total1, vb1))
    # dual basis of l2 under twice the pairing, giving Gamma* coordinates
    ws = l2.vectors
    pair2 = Matrix.from_rows([[2 * q.total.form(u, w) for w in ws] for u in basis1], n)
    inv = pair2.inverse()
    dual = []
    for a in range(n):
        v = [Fraction(0)] * q.total.dim
        for bb in range(n):
            if inv[bb, a]:
                v = [x + inv[bb, a] * y for x, y in zip(v, ws[bb])]
        dual.append(tuple(v))
    star = restrict_to_basis(g, dual, tuple(f"{x}*" for x in names1))
    jm = dual_embedding(vb1)
    nt = vb1.core_dim
    dnames = tuple(f"{x}*" for x in names1[nt:]) + tuple(f"{x}*" for x in names1[:nt])
    total2 = change_basis(star, jm.inverse(), dnames)
    cm2 = from_lie2algebra(Lie2Algebra(total2, dualize(vb1)))
    out = Lie2Bialgebra(cm1, cm2)
    if verify:
        rep = check_lie2bialgebra(out)
        if not rep:
            raise CheckFailed("extracted pair is not a Lie 2-bialgebra: " + ", ".join(rep.failed()), rep)
    return out


def _names(g: LieAlgebra, vectors, fallback: str) -> tuple:
    out = []
    for i, v in enumerate(vectors):
        nz = [k for k, a in enumerate(v) if a]
        out.append(g.basis_names[nz[0]] if len(nz) == 1 and v[nz[0]] == 1 else f"{fallback}{i}")
    return tuple(out)


def cm_equal(a: CrossedModule, b: CrossedModule) -> bool:
    return (
        a.theta.c == b.theta.c
        and a.a.c == b.a.c
        and a.phi.matrix == b.phi.matrix
        and all(x == y for x, y in zip(a.act.action, b.act.action))
    )


def lie2bialgebra_equal(x: Lie2Bialgebra, y: Lie2Bialgebra) -> bool:
    return cm_equal(x.cm1, y.cm1) and cm_equal(x.cm2, y.cm2)


def coquad_from_lie2bialgebra(b: Lie2Bialgebra):
    """Co-quadratic algebra on the side ``A + theta*`` of the double, with the side
    factors as a co-quadratic Manin triple."""
    q, _, _ = double_lie2bialgebra(b)
    cq = ca_to_coquad(q)
    na, nt = b.cm1.a.dim, b.cm1.theta.dim
    p = Subspace.coordinate(na + nt, range(na))
    r = Subspace.coordinate(na + nt, range(na, na + nt))
    return cq, p, r
