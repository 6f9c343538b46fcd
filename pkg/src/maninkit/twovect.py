"""2-vector spaces ``C -> K`` viewed as VB-groupoids over a point.

The total space ``Gamma = C + K`` uses coordinates ``(c | k)``, core first.
The groupoid ``Gamma => K`` has ``s(c, k) = k``, ``t(c, k) = k + del c`` and
``m((c, k + del c'), (c', k)) = (c + c', k)``. Multiplication graphs are
ordered ``(product, first factor, second factor)``.

The dual VB-groupoid has side ``C*``, core ``K*`` and structural map
``del^T``. Its total space ``(a | zeta)`` sits in ``Gamma* = C* + K*`` via
``J(a, zeta) = (zeta + del^T a, a)``, which is the identification making
``<m*(x, y), m(u, v)> = <x, u> + <y, v>`` hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlin import (
    DimensionError,
    Matrix,
    Subspace,
    annihilator,
    block_diag,
    direct_sum_subspace,
    image,
)
from .liealg import LinearMap
from .report import Report, Witness


@dataclass(frozen=True)
class TwoVect:
    side_dim: int
    core_dim: int
    delta: LinearMap  # C -> K

    def __post_init__(self):
        if (self.delta.source_dim, self.delta.target_dim) != (self.core_dim, self.side_dim):
            raise DimensionError("structural map must go from the core to the side")

    @classmethod
    def of(cls, matrix: Matrix) -> "TwoVect":
        return cls(matrix.rows, matrix.cols, LinearMap.of(matrix))

    @classmethod
    def zero(cls, side: int, core: int) -> "TwoVect":
        return cls.of(Matrix.zeros(side, core))

    @property
    def total_dim(self) -> int:
        return self.core_dim + self.side_dim

    @property
    def matrix(self) -> Matrix:
        return self.delta.matrix

    def split(self, u: Sequence[Fraction]) -> tuple:
        return tuple(u[: self.core_dim]), tuple(u[self.core_dim:])

    def join(self, c: Sequence[Fraction], k: Sequence[Fraction]) -> tuple:
        return tuple(c) + tuple(k)


@dataclass(frozen=True)
class GroupoidGraph:
    factor_dim: int  # the graph lives in (factor)^3
    graph: Subspace

    @property
    def dim(self) -> int:
        return self.graph.dim


def groupoid_maps(v: TwoVect) -> tuple:
    nc, nk = v.core_dim, v.side_dim
    zero_c = Matrix.zeros(nk, nc)
    ident = Matrix.identity(nk)
    s = Matrix.from_rows([list(zero_c.row(i)) + list(ident.row(i)) for i in range(nk)], nc + nk)
    t = Matrix.from_rows([list(v.matrix.row(i)) + list(ident.row(i)) for i in range(nk)], nc + nk)
    unit = Matrix.from_rows([[Fraction(0)] * nk for _ in range(nc)] + [list(ident.row(i)) for i in range(nk)], nk)
    return LinearMap.of(s), LinearMap.of(t), LinearMap.of(unit)


def source(v: TwoVect, u) -> tuple:
    return v.split(u)[1]


def target(v: TwoVect, u) -> tuple:
    c, k = v.split(u)
    return tuple(a + b for a, b in zip(k, v.matrix.apply(c)))


def unit(v: TwoVect, k) -> tuple:
    return v.join([Fraction(0)] * v.core_dim, k)


def inverse(v: TwoVect, u) -> tuple:
    c, k = v.split(u)
    return v.join([-x for x in c], target(v, u))


def multiply(v: TwoVect, u, w) -> tuple:
    """``m(u, w)``, defined when ``s(u) = t(w)``."""
    if source(v, u) != target(v, w):
        raise ValueError("elements are not composable")
    c, _ = v.split(u)
    c2, k = v.split(w)
    return v.join([a + b for a, b in zip(c, c2)], k)


def graph_spanning_set(v: TwoVect) -> list:
    """Images of the parameters ``(c, c', k)`` under ``(c, c', k) -> (m, u, w)``."""
    nc, nk = v.core_dim, v.side_dim
    out = []
    for p in range(2 * nc + nk):
        c = [Fraction(0)] * nc
        c2 = [Fraction(0)] * nc
        k = [Fraction(0)] * nk
        if p < nc:
            c[p] = Fraction(1)
        elif p < 2 * nc:
            c2[p - nc] = Fraction(1)
        else:
            k[p - 2 * nc] = Fraction(1)
        w = v.join(c2, k)
        u = v.join(c, target(v, w))
        out.append(multiply(v, u, w) + u + w)
    return out


def graph_mult(v: TwoVect) -> GroupoidGraph:
    return GroupoidGraph(v.total_dim, Subspace.span(graph_spanning_set(v), 3 * v.total_dim))


def dualize(v: TwoVect) -> TwoVect:
    return TwoVect.of(v.matrix.T)


def dual_embedding(v: TwoVect) -> Matrix:
    """``J``: total space of ``dualize(v)`` in coordinates ``(a | zeta)`` into ``Gamma*``
    in coordinates ``(C* | K*)``."""
    nc, nk = v.core_dim, v.side_dim
    rows = []
    dt = v.matrix.T  # nc x nk
    for i in range(nc):  # C* component: zeta_i + (del^T a)_i
        rows.append(list(dt.row(i)) + [Fraction(int(i == j)) for j in range(nc)])
    for i in range(nk):  # K* component: a_i
        rows.append([Fraction(int(i == j)) for j in range(nk)] + [Fraction(0)] * nc)
    return Matrix.from_rows(rows, nk + nc)


def sign_blocks(dims: Sequence[int], signs: Sequence[int]) -> Matrix:
    return block_diag(*(Matrix.identity(n).scale(s) for n, s in zip(dims, signs)))


def phi_map(n: int) -> LinearMap:
    """``(x, y, z) -> (x, -y, -z)`` on a triple product of an ``n``-dimensional space."""
    return LinearMap.of(sign_blocks([n, n, n], [1, -1, -1]))


def Phi_map(n1: int, n2: int) -> LinearMap:
    """``(u + x, v + y, w + z) -> (u, v, w) + (x, -y, -z)`` with ``u, v, w`` of dim ``n1``
    and ``x, y, z`` of dim ``n2``."""
    n = n1 + n2
    rows = []
    for slot in range(3):  # u, v, w
        for i in range(n1):
            rows.append([Fraction(int(j == slot * n + i)) for j in range(3 * n)])
    for slot in range(3):  # x, y, z with signs
        sign = 1 if slot == 0 else -1
        for i in range(n2):
            rows.append([Fraction(sign * int(j == slot * n + n1 + i)) for j in range(3 * n)])
    return LinearMap.of(Matrix.from_rows(rows, 3 * n))


def direct_sum_twovect(v1: TwoVect, v2: TwoVect) -> TwoVect:
    """Cores ``(c1, c2)`` then sides ``(k1, k2)``."""
    return TwoVect.of(block_diag(v1.matrix, v2.matrix))


def check_phi_identity(v: TwoVect) -> Report:
    """``phi(gr(m_{Gamma*})) = ann(gr(m_Gamma))`` as subspaces of ``(Gamma*)^3``."""
    n = v.total_dim
    j3 = block_diag(*([dual_embedding(v)] * 3))
    lhs = image(phi_map(n).matrix @ j3, graph_mult(dualize(v)).graph)
    rhs = annihilator(graph_mult(v).graph)
    rep = Report("phi identity")
    rep.add_bool("equal", lhs == rhs, Witness((), f"dims {lhs.dim} vs {rhs.dim}"))
    return rep


def sum_with_dual_chart(v: TwoVect) -> Matrix:
    """Coordinates of ``direct_sum_twovect(v, dualize(v))``, namely ``(c, a | k, zeta)``,
    mapped to ``Gamma + Gamma*`` in coordinates ``(c, k | C*, K*)``."""
    nc, nk = v.core_dim, v.side_dim
    n = nc + nk
    jm = dual_embedding(v)
    m = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    # source index layout: c [0,nc), a [nc, nc+nk), k [n, n+nk), zeta [n+nk, 2n)
    for i in range(nc):
        m[i][i] = Fraction(1)
    for i in range(nk):
        m[nc + i][n + i] = Fraction(1)
    for r in range(n):
        for i in range(nk):
            m[n + r][nc + i] = jm[r, i]
        for i in range(nc):
            m[n + r][n + nk + i] = jm[r, nk + i]
    return Matrix(2 * n, 2 * n, tuple(tuple(r) for r in m))


def check_Phi_identity(v: TwoVect) -> Report:
    """``Phi(gr(m_{Gamma + Gamma*})) = gr(m_Gamma) + ann(gr(m_Gamma))``."""
    n = v.total_dim
    w = direct_sum_twovect(v, dualize(v))
    chart = block_diag(*([sum_with_dual_chart(v)] * 3))
    lhs = image(Phi_map(n, n).matrix @ chart, graph_mult(w).graph)
    g = graph_mult(v).graph
    rhs = direct_sum_subspace(g, annihilator(g))
    rep = Report("Phi identity")
    rep.add_bool("equal", lhs == rhs, Witness((), f"dims {lhs.dim} vs {rhs.dim}"))
    rep.add_bool("half dimension", 2 * lhs.dim == 3 * 2 * n)
    return rep
