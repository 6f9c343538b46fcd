"""Lie bialgebras, Drinfeld doubles and r-matrices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exactlin import DimensionError, RationalTensor3, Subspace, unit_vec
from .liealg import (
    distinct_names,
    LieAlgebra,
    Multivector,
    ce_differential,
    check_jacobi,
    coad,
    evaluate,
    schouten,
    sharp,
)
from .quadratic import (
    ManinTriple,
    QuadraticLieAlgebra,
    check_courant_point,
    check_manin_triple,
    duality_form,
    extract_bialgebra,
)
from .report import CheckFailed, Report, Witness


@dataclass(frozen=True)
class LieBialgebra:
    """``g`` together with a Lie bracket ``gstar`` on its dual (dual basis)."""

    g: LieAlgebra
    gstar: LieAlgebra

    def __post_init__(self):
        if self.g.dim != self.gstar.dim:
            raise DimensionError("g and gstar must have the same dimension")

    @property
    def dim(self) -> int:
        return self.g.dim

    def swap(self) -> "LieBialgebra":
        return LieBialgebra(self.gstar, self.g)


def check_cocycle(b: LieBialgebra) -> Report:
    """``d[a, b]_* = [d a, b]_* + [a, d b]_*`` on all pairs of dual basis vectors.

    ``d`` is the Chevalley-Eilenberg differential of ``g`` and ``[,]_*`` the
    Schouten bracket of ``gstar`` on the exterior algebra of ``g*``.
    Witnesses are ``(i, j, k, l)``: the pair ``(e^i, e^j)`` and the
    component ``e^k ^ e^l`` of the residual.
    """
    g, gs = b.g, b.gstar
    n = g.dim
    rep = Report("cocycle")
    gens = [Multivector.vector(gs, unit_vec(n, i)) for i in range(n)]
    diffs = [ce_differential(g, x) for x in gens]
    viol = []
    for i, j in combinations(range(n), 2):
        lhs = ce_differential(g, schouten(gens[i], gens[j]))
        rhs = schouten(diffs[i], gens[j]) + schouten(gens[i], diffs[j])
        for (k, l), v in (lhs - rhs).components:
            viol.append(Witness((i, j, k, l), v))
    rep.add("cocycle", viol)
    return rep


def check_bialgebra(b: LieBialgebra) -> Report:
    rep = Report("bialgebra")
    rep.extend(check_jacobi(b.g), "g ")
    rep.extend(check_jacobi(b.gstar), "g* ")
    rep.extend(check_cocycle(b))
    return rep


def double_algebra(b: LieBialgebra) -> LieAlgebra:
    """Bracket on ``g + g*`` (coordinates ``(X, xi)``)::

        [X + xi, Y + eta] = [X, Y] + ad*_xi Y - ad*_eta X + [xi, eta]_* + ad*_X eta - ad*_Y xi
    """
    g, gs = b.g, b.gstar
    n = g.dim
    data = {}

    def split(v):
        return v[:n], v[n:]

    basis = [unit_vec(2 * n, i) for i in range(2 * n)]
    for p in range(2 * n):
        x, xi = split(basis[p])
        for q in range(2 * n):
            y, eta = split(basis[q])
            top = [a + b_ - c for a, b_, c in zip(g.bracket(x, y), coad(gs, xi, y), coad(gs, eta, x))]
            bot = [a + b_ - c for a, b_, c in zip(gs.bracket(xi, eta), coad(g, x, eta), coad(g, y, xi))]
            for k, v in enumerate(top + bot):
                if v:
                    data[(p, q, k)] = v
    names = g.basis_names + gs.basis_names
    if len(set(names)) != len(names):
        names = distinct_names(g.basis_names + tuple(f"{x}*" for x in g.basis_names))
    return LieAlgebra(2 * n, names, RationalTensor3.from_dict(2 * n, data))


def drinfeld_double(b: LieBialgebra, verify: bool = True):
    """Return ``(total, l1, l2)`` with ``l1 = g`` and ``l2 = g*``.

    With ``verify`` the input must be a bialgebra and the output must pass
    the Courant and Manin triple checks, else ``CheckFailed`` is raised.
    """
    n = b.dim
    if verify:
        pre = check_bialgebra(b)
        if not pre:
            raise CheckFailed("input is not a Lie bialgebra: " + ", ".join(pre.failed()), pre)
    q = QuadraticLieAlgebra(double_algebra(b), duality_form(n))
    l1 = Subspace.coordinate(2 * n, range(n))
    l2 = Subspace.coordinate(2 * n, range(n, 2 * n))
    if verify:
        post = check_courant_point(q).extend(check_manin_triple(ManinTriple(q, l1, l2)))
        if not post:
            raise CheckFailed("double failed verification: " + ", ".join(post.failed()), post)
    return q, l1, l2


def _require_bivector(g: LieAlgebra, lam: Multivector):
    if lam.degree != 2:
        raise ValueError("r-matrix must have degree 2")
    if lam.algebra.dim != g.dim:
        raise DimensionError("bivector and algebra dimensions differ")
    if lam.algebra.c != g.c:
        lam = Multivector(g, 2, lam.components)
    return lam


def check_rmatrix(g: LieAlgebra, lam: Multivector) -> Report:
    """``[[lam, lam], e_i] = 0`` for every basis vector."""
    lam = _require_bivector(g, lam)
    sq = schouten(lam, lam)
    rep = Report("r-matrix")
    viol = []
    for i in range(g.dim):
        r = schouten(sq, Multivector.vector(g, unit_vec(g.dim, i)))
        if not r.is_zero():
            viol.append(Witness((i,), str(r)))
    rep.add("ad-invariant square", viol)
    return rep


def is_triangular(g: LieAlgebra, lam: Multivector) -> bool:
    lam = _require_bivector(g, lam)
    return schouten(lam, lam).is_zero()


def rmatrix_dual_algebra(g: LieAlgebra, lam: Multivector) -> LieAlgebra:
    """``[a, b]_lam = ad*_{lam# a} b - ad*_{lam# b} a`` on ``g*``."""
    lam = _require_bivector(g, lam)
    n = g.dim
    sh = sharp(lam)
    data = {}
    for a in range(n):
        for b in range(n):
            ea, eb = unit_vec(n, a), unit_vec(n, b)
            v = [x - y for x, y in zip(coad(g, sh.column(a), eb), coad(g, sh.column(b), ea))]
            for k, c in enumerate(v):
                if c:
                    data[(a, b, k)] = c
    return LieAlgebra(n, g.dual_names(), RationalTensor3.from_dict(n, data))


def bialgebra_from_rmatrix(g: LieAlgebra, lam: Multivector, verify: bool = True) -> LieBialgebra:
    if verify:
        pre = check_rmatrix(g, lam)
        if not pre:
            raise CheckFailed("not an r-matrix", pre)
    b = LieBialgebra(g, rmatrix_dual_algebra(g, lam))
    if verify:
        post = check_bialgebra(b)
        if not post:
            raise CheckFailed("r-matrix bialgebra failed verification: " + ", ".join(post.failed()), post)
    return b


def trivial_dual(g: LieAlgebra) -> LieBialgebra:
    return LieBialgebra(g, LieAlgebra.abelian(g.dim, g.dual_names()))


def rmatrix_graph_triple(g: LieAlgebra, lam: Multivector) -> ManinTriple:
    """``(g + g*_tr, g, gr(lam#))`` without any verification."""
    lam = _require_bivector(g, lam)
    n = g.dim
    q, l1, _ = drinfeld_double(trivial_dual(g), verify=False)
    sh = sharp(lam)
    graph = Subspace.span([tuple(sh.column(a)) + unit_vec(n, a) for a in range(n)], 2 * n)
    return ManinTriple(q, l1, graph)


def rmatrix_manin_triple(g: LieAlgebra, lam: Multivector, verify: bool = True) -> ManinTriple:
    """Graph triple of an r-matrix; with ``verify`` it must be a Manin triple whose
    extracted bialgebra equals ``bialgebra_from_rmatrix``."""
    if verify:
        pre = check_rmatrix(g, lam)
        if not pre:
            raise CheckFailed("not an r-matrix", pre)
    t = rmatrix_graph_triple(g, lam)
    if verify:
        rep = check_manin_triple(t)
        if not rep:
            raise CheckFailed("graph of lam# is not a Manin triple partner: " + ", ".join(rep.failed()), rep)
        got = extract_bialgebra(t, verify=False)
        want = rmatrix_dual_algebra(g, lam)
        if got.gstar.c != want.c or got.g.c != g.c:
            raise CheckFailed("extracted bialgebra differs from the r-matrix bialgebra")
    return t


def graph_defect(g: LieAlgebra, lam: Multivector, a: int, b: int) -> tuple:
    """``[lam# e^a, lam# e^b] - lam# [e^a, e^b]_lam``; zero for all pairs iff the graph is closed."""
    lam = _require_bivector(g, lam)
    sh = sharp(lam)
    dual = rmatrix_dual_algebra(g, lam)
    left = g.bracket(sh.column(a), sh.column(b))
    right = sh.apply(dual.bracket_basis(a, b))
    return tuple(x - y for x, y in zip(left, right))


def square_contraction(g: LieAlgebra, lam: Multivector, a: int, b: int) -> tuple:
    """The vector ``[lam, lam](e^a, e^b, .)``."""
    lam = _require_bivector(g, lam)
    sq = schouten(lam, lam)
    n = g.dim
    return tuple(evaluate(sq, [unit_vec(n, a), unit_vec(n, b), unit_vec(n, k)]) for k in range(n))
