"""Crossed modules of Lie algebras, Lie 2-algebras and Lie 2-bialgebras.

A crossed module ``(theta, phi, A, act)`` has total Lie algebra on
``theta + A`` (coordinates ``(c | v)``, core first, matching ``TwoVect``)::

    [(c, v), (c', v')] = ([c, c'] + v.c' - v'.c, [v, v'])

The dual crossed module lives on ``A* -> theta*`` with coordinates
``(a | zeta)``; it is compared with ``Gamma*`` through ``dual_embedding``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .bialg import LieBialgebra, check_cocycle, check_rmatrix, rmatrix_dual_algebra
from .exactlin import (
    DimensionError,
    Matrix,
    RationalTensor3,
    Subspace,
    kernel,
    unit_vec,
)
from .liealg import (
    distinct_names,
    LieAlgebra,
    LinearMap,
    Multivector,
    Representation,
    act_on_multivector,
    change_basis,
    check_jacobi,
    check_morphism,
    check_representation,
    direct_sum,
    schouten,
    subalgebra_violations,
    wedge,
)
from .report import CheckFailed, Report, Witness
from .twovect import TwoVect, dual_embedding, dualize, graph_mult


@dataclass(frozen=True)
class CrossedModule:
    theta: LieAlgebra
    a: LieAlgebra
    phi: LinearMap  # theta -> A
    act: Representation  # of A on theta

    def __post_init__(self):
        if (self.phi.source_dim, self.phi.target_dim) != (self.theta.dim, self.a.dim):
            raise DimensionError("phi must map theta to A")
        if self.act.module_dim != self.theta.dim or len(self.act.action) != self.a.dim:
            raise DimensionError("action must be a representation of A on theta")

    @property
    def vb(self) -> TwoVect:
        return TwoVect(self.a.dim, self.theta.dim, self.phi)


@dataclass(frozen=True)
class Lie2Algebra:
    total: LieAlgebra
    vb: TwoVect


@dataclass(frozen=True)
class Lie2Bialgebra:
    cm1: CrossedModule  # theta -> A
    cm2: CrossedModule  # A* -> theta*


def adjoint_cm(g: LieAlgebra) -> CrossedModule:
    from .liealg import adjoint

    theta = g.with_names([f"{x}_" for x in g.basis_names])
    return CrossedModule(theta, g, LinearMap.of(Matrix.identity(g.dim)), adjoint(g))


def trivial_action(a: LieAlgebra, module_dim: int) -> Representation:
    return Representation(a, module_dim, tuple(Matrix.zeros(module_dim, module_dim) for _ in range(a.dim)))


def check_crossed_module(cm: CrossedModule) -> Report:
    th, a, phi, act = cm.theta, cm.a, cm.phi, cm.act
    rep = Report("crossed module")
    rep.extend(check_jacobi(th), "theta ")
    rep.extend(check_jacobi(a), "A ")
    rep.extend(check_morphism(phi, th, a), "phi ")
    rep.extend(check_representation(act), "action ")
    deriv = []
    for i in range(a.dim):
        d = act.action[i]
        for j in range(th.dim):
            for k in range(th.dim):
                lhs = d.apply(th.bracket_basis(j, k))
                rhs = [x + y for x, y in zip(th.bracket(d.column(j), unit_vec(th.dim, k)), th.bracket(unit_vec(th.dim, j), d.column(k)))]
                if list(lhs) != rhs:
                    deriv.append(Witness((i, j, k), tuple(x - y for x, y in zip(lhs, rhs))))
    rep.add("derivations", deriv)
    ax1 = []
    for i in range(th.dim):
        pc = phi.matrix.column(i)
        for j in range(th.dim):
            lhs = act.act(pc, unit_vec(th.dim, j))
            rhs = th.bracket_basis(i, j)
            if lhs != rhs:
                ax1.append(Witness((i, j), tuple(x - y for x, y in zip(lhs, rhs))))
    rep.add("axiom (1)", ax1, note="phi(c).c' = [c, c']")
    ax2 = []
    for v in range(a.dim):
        for i in range(th.dim):
            lhs = phi(act.action[v].column(i))
            rhs = a.bracket(unit_vec(a.dim, v), phi.matrix.column(i))
            if lhs != rhs:
                ax2.append(Witness((v, i), tuple(x - y for x, y in zip(lhs, rhs))))
    rep.add("axiom (2)", ax2, note="phi(v.c) = [v, phi(c)]")
    return rep


def total_algebra(cm: CrossedModule) -> LieAlgebra:
    th, a, act = cm.theta, cm.a, cm.act
    nt, na = th.dim, a.dim
    n = nt + na
    data = {}
    for p in range(n):
        for q in range(n):
            if p < nt and q < nt:
                out = list(th.bracket_basis(p, q)) + [Fraction(0)] * na
            elif p >= nt and q >= nt:
                out = [Fraction(0)] * nt + list(a.bracket_basis(p - nt, q - nt))
            elif p >= nt:  # [v, c] = v.c
                out = list(act.action[p - nt].column(q)) + [Fraction(0)] * na
            else:  # [c, v] = -v.c
                out = [-x for x in act.action[q - nt].column(p)] + [Fraction(0)] * na
            for k, x in enumerate(out):
                if x:
                    data[(p, q, k)] = x
    return LieAlgebra(n, distinct_names(th.basis_names + a.basis_names), RationalTensor3.from_dict(n, data))


def check_la_groupoid(l: Lie2Algebra) -> Report:
    """The multiplication graph must be a subalgebra of the cube of the total algebra."""
    rep = Report("LA-groupoid")
    cube = direct_sum(l.total, l.total, l.total)
    rep.add("graph subalgebra", subalgebra_violations(graph_mult(l.vb).graph, cube))
    return rep


def check_lie2algebra(l: Lie2Algebra) -> Report:
    rep = Report("Lie 2-algebra")
    rep.extend(check_jacobi(l.total), "total ")
    rep.extend(check_la_groupoid(l))
    return rep


def to_lie2algebra(cm: CrossedModule, verify: bool = True) -> Lie2Algebra:
    if verify:
        pre = check_crossed_module(cm)
        if not pre:
            raise CheckFailed("not a crossed module: " + ", ".join(pre.failed()), pre)
    l = Lie2Algebra(total_algebra(cm), cm.vb)
    if verify:
        post = check_lie2algebra(l)
        if not post:
            raise CheckFailed("total algebra failed verification", post)
    return l


def from_lie2algebra(l: Lie2Algebra, theta_names=None, a_names=None) -> CrossedModule:
    """Read ``(theta, phi, A, act)`` off a total bracket.

    Raises ``ValueError`` when the bracket is not of crossed-module form.
    """
    nt, na = l.vb.core_dim, l.vb.side_dim
    g = l.total
    tdata, adata = {}, {}
    acts = [[[Fraction(0)] * nt for _ in range(nt)] for _ in range(na)]
    for p in range(nt + na):
        for q in range(nt + na):
            out = g.bracket_basis(p, q)
            core, side = out[:nt], out[nt:]
            if p < nt and q < nt:
                if any(side):
                    raise ValueError("bracket of core elements leaves the core")
                for k, x in enumerate(core):
                    if x:
                        tdata[(p, q, k)] = x
            elif p >= nt and q >= nt:
                if any(core):
                    raise ValueError("bracket of side elements has a core component")
                for k, x in enumerate(side):
                    if x:
                        adata[(p - nt, q - nt, k)] = x
            elif p >= nt:
                if any(side):
                    raise ValueError("action of the side does not preserve the core")
                for k, x in enumerate(core):
                    acts[p - nt][k][q] = x
            else:
                mixed = g.bracket_basis(q, p)
                if any(side) or any(a + b for a, b in zip(out, mixed)):
                    raise ValueError("mixed bracket is not antisymmetric or leaves the core")
    names = g.basis_names
    theta = LieAlgebra(nt, tuple(theta_names or names[:nt]), RationalTensor3.from_dict(nt, tdata))
    a = LieAlgebra(na, tuple(a_names or names[nt:]), RationalTensor3.from_dict(na, adata))
    act = Representation(a, nt, tuple(Matrix(nt, nt, tuple(tuple(r) for r in m)) for m in acts))
    return CrossedModule(theta, a, l.vb.delta, act)


def dual_total_in_gamma_star(cm2: CrossedModule, vb1: TwoVect) -> LieAlgebra:
    """Total algebra of ``cm2`` transported into ``Gamma*`` coordinates ``(theta* | A*)``."""
    return change_basis(total_algebra(cm2), dual_embedding(vb1), vb1_dual_names(cm2))


def vb1_dual_names(cm2: CrossedModule) -> tuple:
    return cm2.a.basis_names + cm2.theta.basis_names


def check_lie2bialgebra(b: Lie2Bialgebra) -> Report:
    cm1, cm2 = b.cm1, b.cm2
    rep = Report("Lie 2-bialgebra")
    if cm2.theta.dim != cm1.a.dim or cm2.a.dim != cm1.theta.dim:
        raise DimensionError("the second crossed module must live on A* -> theta*")
    rep.extend(check_crossed_module(cm1), "cm1 ")
    rep.extend(check_crossed_module(cm2), "cm2 ")
    rep.add_bool("VB duality", dualize(cm1.vb).matrix == cm2.phi.matrix,
                 Witness((), "structural map of cm2 is not phi^T"))
    if rep["VB duality"].passed:
        total1 = total_algebra(cm1)
        total2 = dual_total_in_gamma_star(cm2, cm1.vb)
        rep.extend(check_cocycle(LieBialgebra(total1, total2)), "total ")
    return rep


def trivial_dual_cm(cm: CrossedModule) -> CrossedModule:
    """``A* -> theta*`` with map ``phi^T``, zero brackets and zero action."""
    dual_theta = LieAlgebra.abelian(cm.a.dim, cm.a.dual_names())
    dual_a = LieAlgebra.abelian(cm.theta.dim, cm.theta.dual_names())
    return CrossedModule(dual_theta, dual_a, cm.phi.T, trivial_action(dual_a, dual_theta.dim))


def check_cm_rmatrix(cm: CrossedModule, r: Multivector) -> Report:
    if r.degree != 2:
        raise ValueError("r must be a bivector")
    th = cm.theta
    r = Multivector(th, 2, r.components)
    sq = schouten(r, r)
    rep = Report("crossed module r-matrix")
    rep.extend(check_rmatrix(th, r), "theta ")
    viol = []
    for i in range(cm.a.dim):
        x = act_on_multivector(cm.act, unit_vec(cm.a.dim, i), sq, th)
        if not x.is_zero():
            viol.append(Witness((i,), str(x)))
    rep.add("A-invariant square", viol)
    return rep


# ---------------------------------------------------------------------------
# r-matrix induced dual crossed modules


def _bivector_dual_bracket(g: LieAlgebra, lam_components: dict) -> LieAlgebra:
    lam = Multivector.from_dict(g, 2, lam_components)
    return rmatrix_dual_algebra(g, lam)


def lift_core_bivector(cm: CrossedModule, r: Multivector) -> dict:
    """Components of ``r`` inside ``Lambda^2 (theta + A)`` via the core inclusion."""
    return dict(r.components)


def push_bivector(cm: CrossedModule, r: Multivector, emb: Matrix) -> dict:
    """``Lambda^2 emb (r)`` for a linear map ``emb: theta -> theta + A``."""
    total = total_algebra(cm)
    vs = [Multivector.vector(total, emb.column(i)) for i in range(cm.theta.dim)]
    out = Multivector.zero(total, 2)
    for (i, j), x in r.components:
        out = out + wedge(vs[i], vs[j]).scale(x)
    return dict(out.components)


def kernel_t_embedding(cm: CrossedModule) -> Matrix:
    """``c -> (c, -phi c)``, an isomorphism of ``theta`` onto ``ker t``."""
    nt = cm.theta.dim
    rows = [[Fraction(int(i == j)) for j in range(nt)] for i in range(nt)]
    rows += [[-x for x in cm.phi.matrix.row(i)] for i in range(cm.a.dim)]
    return Matrix.from_rows(rows, nt)


def canonical_rprime(cm: CrossedModule, r: Multivector) -> dict:
    """``r' = -Lambda^2 psi (r)`` with ``psi`` onto ``ker t``.

    Then ``R = r + r'`` is ``r`` on ``ker s`` minus ``r`` on ``ker t``, the
    linear form of a multiplicative bivector.
    """
    return {k: -x for k, x in push_bivector(cm, r, kernel_t_embedding(cm)).items()}


def dual_from_total_bivector(cm: CrossedModule, components: dict) -> Lie2Algebra:
    """Coboundary dual of a bivector ``R`` on ``theta + A``, pulled back to ``(a | zeta)``.

    The result is a ``Lie2Algebra`` candidate for ``A* -> theta*``; its form is
    not checked here.
    """
    total = total_algebra(cm)
    star = _bivector_dual_bracket(total, components)
    jm = dual_embedding(cm.vb)
    pulled = change_basis(star, jm.inverse(), cm.a.dual_names() + cm.theta.dual_names())
    return Lie2Algebra(pulled, dualize(cm.vb))


def rprime_basis(cm: CrossedModule) -> list:
    """Index pairs spanning ``(A ^ theta) + Lambda^2 A`` inside ``Lambda^2 (theta + A)``."""
    nt, na = cm.theta.dim, cm.a.dim
    return [(i, j) for i, j in combinations(range(nt + na), 2) if j >= nt]


def solve_rprime(cm: CrossedModule, r: Multivector):
    """Affine space of ``r'`` making the coboundary dual of ``r + r'`` an LA-groupoid.

    The graph-subalgebra condition is linear in the bivector. Returns
    ``(particular, directions)`` as component dicts, or ``None`` if inconsistent.
    """
    basis = rprime_basis(cm)
    base = lift_core_bivector(cm, r)
    vb2 = dualize(cm.vb)
    gr = graph_mult(vb2).graph

    def residual(components: dict) -> list:
        cand = dual_from_total_bivector(cm, components)
        cube = direct_sum(cand.total, cand.total, cand.total)
        vs = gr.vectors
        out = []
        for x in range(len(vs)):
            for y in range(x + 1, len(vs)):
                w = cube.bracket(vs[x], vs[y])
                out.extend(_residual_mod(gr, w))
        return out

    r0 = residual(base)
    zero = residual({})
    cols = []
    for idx in basis:
        comps = {idx: Fraction(1)}
        rv = residual(comps)
        cols.append([a - b for a, b in zip(rv, zero)])
    m = len(r0)
    # linear system: sum x_p cols[p] = -r0
    aug = Matrix.from_rows([[cols[p][row] for p in range(len(basis))] + [-r0[row]] for row in range(m)], len(basis) + 1)
    ker = kernel(aug)
    sols = [v for v in ker.vectors]
    particular = None
    directions = []
    for v in sols:
        if v[-1] and particular is None:
            particular = [x / v[-1] for x in v[:-1]]
    if particular is None:
        return None
    for v in sols:
        d = [x - v[-1] * p for x, p in zip(v[:-1], particular)]
        if any(d):
            directions.append({basis[p]: x for p, x in enumerate(d) if x})
    return {basis[p]: x for p, x in enumerate(particular) if x}, directions


def _residual_mod(s: Subspace, w) -> list:
    """Coordinates of ``w`` modulo ``s`` (zero list iff ``w`` lies in ``s``)."""
    w = list(w)
    for vec, piv in zip(s.vectors, s.pivots()):
        if w[piv]:
            c = w[piv]
            w = [a - c * b for a, b in zip(w, vec)]
    return w


def dual_cm_from_rmatrix(cm: CrossedModule, r: Multivector, r_prime: dict | None = None, verify: bool = True) -> CrossedModule:
    """Crossed module on ``A* -> theta*`` induced by a crossed-module r-matrix.

    The bivector ``R = r + r'`` on ``theta + A`` (``r'`` given by component pairs in
    total coordinates, ``canonical_rprime`` when omitted) defines a coboundary bracket on
    ``Gamma*``; pulled back along ``dual_embedding`` it must be of crossed-module form,
    restrict to the r-matrix bracket on ``theta*`` and pair with ``cm`` into a Lie
    2-bialgebra. Any failure raises ``CheckFailed``.
    """
    if verify:
        pre = check_cm_rmatrix(cm, r)
        if not pre:
            raise CheckFailed("not a crossed module r-matrix", pre)
    comps = lift_core_bivector(cm, r)
    if r_prime is None:
        r_prime = canonical_rprime(cm, r)
    for (i, j), x in r_prime.items():
        if not 0 <= i < j < cm.theta.dim + cm.a.dim:
            raise ValueError(f"r' index {(i, j)} must be increasing and in range")
        comps[(i, j)] = comps.get((i, j), 0) + Fraction(x)
    comps = {k: x for k, x in comps.items() if x}
    cand = dual_from_total_bivector(cm, comps)
    try:
        cm2 = from_lie2algebra(cand)
    except ValueError as exc:
        raise CheckFailed(f"induced dual is not of crossed-module form: {exc}") from exc
    if verify:
        rep = check_crossed_module(cm2)
        want = rmatrix_dual_algebra(cm.theta, Multivector(cm.theta, 2, r.components))
        rep.add_bool("theta* bracket", cm2.a.c == want.c, Witness((), "side bracket differs from the r-matrix bracket"))
        rep.extend(check_lie2bialgebra(Lie2Bialgebra(cm, cm2)), "pair ")
        if not rep:
            raise CheckFailed("induced dual crossed module failed verification: " + ", ".join(rep.failed()), rep)
    return cm2
