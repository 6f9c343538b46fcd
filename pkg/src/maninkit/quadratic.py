"""Quadratic Lie algebras, Lagrangian and Dirac subspaces, Manin triples."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    DimensionError,
    Matrix,
    Subspace,
    annihilator,
    bilinear,
    block_diag,
    direct_sum_subspace,
    is_transverse,
    orthogonal_complement,
)
from .liealg import LieAlgebra, check_jacobi, is_subalgebra, subalgebra_violations
from .report import CheckFailed, Report, Witness

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class BilinearForm:
    dim: int
    matrix: Matrix

    def __post_init__(self):
        if (self.matrix.rows, self.matrix.cols) != (self.dim, self.dim):
            raise DimensionError("form matrix must be dim x dim")
        if not self.matrix.is_symmetric():
            raise ValueError("bilinear form must be symmetric")

    def __call__(self, u, v) -> Fraction:
        return bilinear(self.matrix, u, v)

    def is_nondegenerate(self) -> bool:
        return self.matrix.rank() == self.dim

    def __neg__(self) -> "BilinearForm":
        return BilinearForm(self.dim, -self.matrix)


def duality_form(n: int) -> BilinearForm:
    """``<X + xi, Y + eta> = (eta(X) + xi(Y)) / 2`` on ``V + V*``."""
    z = Matrix.zeros(n, n)
    h = Matrix.identity(n).scale(HALF)
    top = [list(z.row(i)) + list(h.row(i)) for i in range(n)]
    bot = [list(h.row(i)) + list(z.row(i)) for i in range(n)]
    return BilinearForm(2 * n, Matrix.from_rows(top + bot, 2 * n))


def direct_sum_form(*forms: BilinearForm) -> BilinearForm:
    m = block_diag(*(f.matrix for f in forms))
    return BilinearForm(m.rows, m)


@dataclass(frozen=True)
class QuadraticLieAlgebra:
    algebra: LieAlgebra
    form: BilinearForm

    def __post_init__(self):
        if self.algebra.dim != self.form.dim:
            raise DimensionError("form and algebra dimensions differ")

    @property
    def dim(self) -> int:
        return self.algebra.dim


@dataclass(frozen=True)
class ManinTriple:
    total: QuadraticLieAlgebra
    l1: Subspace
    l2: Subspace


def invariance_violations(q: QuadraticLieAlgebra) -> list:
    g, form = q.algebra, q.form.matrix
    n = g.dim
    # <[e_i, e_j], e_k> = (B ad_i)[k, j]; invariance says B ad_i is antisymmetric
    out = []
    for i in range(n):
        m = form @ g.ad(i)
        for j in range(n):
            for k in range(n):
                r = m[k, j] + m[j, k]
                if r:
                    out.append(Witness((i, j, k), r))
    return out


def check_invariance(q: QuadraticLieAlgebra) -> Report:
    rep = Report("invariance")
    rep.add_bool("nondegenerate", q.form.is_nondegenerate(), note="" if q.form.is_nondegenerate() else "form is degenerate")
    rep.add("invariance", invariance_violations(q))
    return rep


def check_courant_point(q: QuadraticLieAlgebra) -> Report:
    """Courant axioms over a point: anchor and de Rham differential vanish."""
    rep = Report("courant")
    jac = check_jacobi(q.algebra)
    rep.add("C1", jac["jacobi"].witnesses if not jac["jacobi"].passed else (), note="Jacobi identity")
    rep["C1"].count = jac["jacobi"].count
    rep.add("C2", invariance_violations(q), note="invariance of the pairing")
    rep.add("C3", jac["antisymmetry"].witnesses if not jac["antisymmetry"].passed else (), note="antisymmetry")
    rep["C3"].count = jac["antisymmetry"].count
    rep.add("C4", (), note="vacuous over a point")
    rep.add_bool("nondegenerate", q.form.is_nondegenerate())
    return rep


def is_lagrangian(s: Subspace, q: QuadraticLieAlgebra) -> bool:
    if s.ambient_dim != q.dim:
        raise DimensionError("subspace and algebra dimensions differ")
    return orthogonal_complement(s, q.form.matrix) == s


def is_dirac_point(s: Subspace, q: QuadraticLieAlgebra) -> bool:
    return is_lagrangian(s, q) and is_subalgebra(s, q.algebra)


def dirac_report(s: Subspace, q: QuadraticLieAlgebra, name: str = "L") -> Report:
    rep = Report(f"dirac {name}")
    perp = orthogonal_complement(s, q.form.matrix)
    rep.add_bool(f"{name} lagrangian", perp == s, Witness((), f"dim {s.dim}, dim of orthogonal {perp.dim}"))
    rep.add(f"{name} involutive", subalgebra_violations(s, q.algebra))
    return rep


def check_manin_triple(t: ManinTriple) -> Report:
    rep = Report("manin triple")
    rep.extend(dirac_report(t.l1, t.total, "l1"))
    rep.extend(dirac_report(t.l2, t.total, "l2"))
    rep.add_bool("transverse", is_transverse(t.l1, t.l2))
    return rep


def conjugate_bar(q: QuadraticLieAlgebra) -> QuadraticLieAlgebra:
    return QuadraticLieAlgebra(q.algebra, -q.form)


def _coordinate_names(total: LieAlgebra, s: Subspace, fallback: str) -> tuple:
    names = []
    for i, v in enumerate(s.vectors):
        nz = [k for k, a in enumerate(v) if a]
        if len(nz) == 1 and v[nz[0]] == 1:
            names.append(total.basis_names[nz[0]])
        else:
            names.append(f"{fallback}{i}")
    return tuple(names)


def extract_bialgebra(t: ManinTriple, verify: bool = True):
    """Bialgebra on ``l1`` and ``l1*``, with ``l2`` identified to ``l1*`` via twice the pairing."""
    from .bialg import LieBialgebra
    from .liealg import restrict
    from .exactlin import RationalTensor3

    if verify:
        rep = check_manin_triple(t)
        if not rep:
            raise CheckFailed("not a Manin triple: " + ", ".join(rep.failed()), rep)
    q = t.total
    us = t.l1.vectors
    ws = t.l2.vectors
    n = len(us)
    g = restrict(q.algebra, t.l1, _coordinate_names(q.algebra, t.l1, "u"))
    pair2 = Matrix.from_rows([[2 * q.form(u, w) for w in ws] for u in us], n)
    inv = pair2.inverse()
    dual = []
    for a in range(n):
        v = [Fraction(0)] * q.dim
        for b in range(n):
            if inv[b, a]:
                v = [x + inv[b, a] * y for x, y in zip(v, ws[b])]
        dual.append(tuple(v))
    data = {}
    for a in range(n):
        for b in range(n):
            br = q.algebra.bracket(dual[a], dual[b])
            for k in range(n):
                val = 2 * q.form(us[k], br)
                if val:
                    data[(a, b, k)] = val
    star_names = [
        q.algebra.basis_names[v.index(1)] if sum(1 for a in v if a) == 1 and 1 in v else f"{x}*"
        for v, x in zip(dual, g.basis_names)
    ]
    if len(set(star_names) | set(g.basis_names)) != 2 * n:
        star_names = [f"{x}*" for x in g.basis_names]
    gstar = LieAlgebra(n, tuple(star_names), RationalTensor3.from_dict(n, data))
    return LieBialgebra(g, gstar)


def check_prop_2_4(bialg, b: Subspace) -> Report:
    """Compare the two sides of: ``B`` and ``ann(B)`` are subalgebras iff ``B + ann(B)`` is Dirac."""
    from .bialg import drinfeld_double

    n = bialg.g.dim
    if b.ambient_dim != n:
        raise DimensionError("subspace is not in the algebra")
    ann = annihilator(b)
    left = is_subalgebra(b, bialg.g) and is_subalgebra(ann, bialg.gstar)
    q, _, _ = drinfeld_double(bialg, verify=False)
    l = direct_sum_subspace(b, ann)
    right = is_dirac_point(l, q)
    rep = Report("subalgebra pair vs dirac sum")
    rep.add_bool("equivalence", left == right, Witness((), f"subalgebras={left}, dirac={right}"),
                 note=f"subalgebras={left}, dirac={right}")
    return rep
