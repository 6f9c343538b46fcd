"""Lie algebras over Q given by structure constants.

Conventions: ``c[i, j, k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]``;
linear maps are matrices acting on column vectors; the dual basis of ``g*``
is used for every dual space. Multivectors are stored on the basis
``e_I = e_{i1} ^ ... ^ e_{ip}`` with ``i1 < ... < ip`` and evaluate as
determinants on dual vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exactlin import (
    DimensionError,
    Matrix,
    RationalTensor3,
    Subspace,
    to_q,
    unit_vec,
    zero_vec,
)
from .report import Report, Witness


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    basis_names: tuple
    c: RationalTensor3

    def __post_init__(self):
        if len(self.basis_names) != self.dim or self.c.dim != self.dim:
            raise DimensionError("basis names and structure constants disagree on the dimension")

    @classmethod
    def from_brackets(cls, names: Sequence[str], brackets: dict, antisymmetrize: bool = True) -> "LieAlgebra":
        """Build from ``{(i, j): {k: value}}`` (or names instead of indices).

        With ``antisymmetrize`` the entry for ``(j, i)`` is filled in as the
        negative of ``(i, j)``; pass False to take the table literally.
        """
        names = tuple(names)
        idx = {n: i for i, n in enumerate(names)}

        def ix(a):
            return idx[a] if isinstance(a, str) else int(a)

        data: dict = {}
        for (a, b), out in brackets.items():
            i, j = ix(a), ix(b)
            for kk, v in out.items():
                k = ix(kk)
                q = to_q(v)
                data[(i, j, k)] = data.get((i, j, k), 0) + q
                if antisymmetrize:
                    data[(j, i, k)] = data.get((j, i, k), 0) - q
        return cls(len(names), names, RationalTensor3.from_dict(len(names), data))

    @classmethod
    def abelian(cls, n: int, names: Sequence[str] | None = None) -> "LieAlgebra":
        names = tuple(names) if names else tuple(f"x{i}" for i in range(n))
        return cls(n, names, RationalTensor3.zero(n))

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> tuple:
        out = [Fraction(0)] * self.dim
        table = self.c.table()
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                for k, v in table.get((i, j), ()):
                    out[k] += a * b * v
        return tuple(out)

    def bracket_basis(self, i: int, j: int) -> tuple:
        out = [Fraction(0)] * self.dim
        for k, v in self.c.table().get((i, j), ()):
            out[k] = v
        return tuple(out)

    def ad(self, i: int) -> Matrix:
        """Matrix of ``ad_{e_i}``."""
        return Matrix.from_columns([self.bracket_basis(i, j) for j in range(self.dim)], self.dim)

    def ad_of(self, x: Sequence[Fraction]) -> Matrix:
        return Matrix.from_columns([self.bracket(x, unit_vec(self.dim, j)) for j in range(self.dim)], self.dim)

    def is_abelian(self) -> bool:
        return not self.c.entries

    def with_names(self, names: Sequence[str]) -> "LieAlgebra":
        return LieAlgebra(self.dim, tuple(names), self.c)

    def dual_names(self) -> tuple:
        return tuple(f"{n}*" for n in self.basis_names)


@dataclass(frozen=True)
class LinearMap:
    source_dim: int
    target_dim: int
    matrix: Matrix

    def __post_init__(self):
        if (self.matrix.rows, self.matrix.cols) != (self.target_dim, self.source_dim):
            raise DimensionError("matrix shape does not match the declared source/target")

    @classmethod
    def of(cls, matrix: Matrix) -> "LinearMap":
        return cls(matrix.cols, matrix.rows, matrix)

    def __call__(self, v):
        return self.matrix.apply(v)

    @property
    def T(self) -> "LinearMap":
        return LinearMap.of(self.matrix.T)


@dataclass(frozen=True)
class Representation:
    algebra: LieAlgebra
    module_dim: int
    action: tuple  # one Matrix per basis element of the algebra

    def matrix_of(self, x: Sequence[Fraction]) -> Matrix:
        m = Matrix.zeros(self.module_dim, self.module_dim)
        for a, mat in zip(x, self.action):
            if a:
                m = m + mat.scale(a)
        return m

    def act(self, x: Sequence[Fraction], v: Sequence[Fraction]) -> tuple:
        out = zero_vec(self.module_dim)
        for a, mat in zip(x, self.action):
            if a:
                w = mat.apply(v)
                out = tuple(o + a * y for o, y in zip(out, w))
        return out


# ---------------------------------------------------------------------------
# axiom checks


def check_antisymmetry(g: LieAlgebra) -> Report:
    rep = Report("antisymmetry")
    viol = []
    for (i, j, k), v in g.c.entries:
        if v + g.c[j, i, k] != 0 and (i, j) <= (j, i):
            viol.append(Witness((i, j, k), v + g.c[j, i, k]))
    rep.add("antisymmetry", viol)
    return rep


def check_jacobi(g: LieAlgebra) -> Report:
    """Jacobi identity via ``ad([x, y]) = [ad x, ad y]`` on basis pairs.

    Antisymmetry is a precondition and is reported as its own check; the
    listed Jacobi witnesses are triples ``i < j < k`` with the residual of
    the cyclic sum.
    """
    rep = check_antisymmetry(g)
    rep.title = "jacobi"
    n = g.dim
    ads = [g.ad(i) for i in range(n)]
    viol = []
    for i in range(n):
        for j in range(i + 1, n):
            lhs = g.ad_of(g.bracket_basis(i, j))
            rhs = ads[i] @ ads[j] - ads[j] @ ads[i]
            diff = lhs - rhs
            for k in range(j + 1, n):
                col = diff.column(k)
                if any(col):
                    viol.append(Witness((i, j, k), col))
    rep.add("jacobi", viol)
    return rep


def check_lie_algebra(g: LieAlgebra) -> Report:
    return check_jacobi(g)


def check_morphism(f: LinearMap, g1: LieAlgebra, g2: LieAlgebra) -> Report:
    if f.source_dim != g1.dim or f.target_dim != g2.dim:
        raise DimensionError("map dimensions do not match the algebras")
    rep = Report("morphism")
    images = [f.matrix.column(i) for i in range(g1.dim)]
    viol = []
    for i in range(g1.dim):
        for j in range(g1.dim):
            lhs = f(g1.bracket_basis(i, j))
            rhs = g2.bracket(images[i], images[j])
            if lhs != rhs:
                viol.append(Witness((i, j), tuple(a - b for a, b in zip(lhs, rhs))))
    rep.add("bracket_preserved", viol)
    return rep


def is_subalgebra(s: Subspace, g: LieAlgebra) -> bool:
    if s.ambient_dim != g.dim:
        raise DimensionError("subspace is not in the algebra")
    vs = s.vectors
    return all(s.contains(g.bracket(vs[a], vs[b])) for a in range(len(vs)) for b in range(len(vs)))


def subalgebra_violations(s: Subspace, g: LieAlgebra) -> list:
    vs = s.vectors
    out = []
    for a in range(len(vs)):
        for b in range(len(vs)):
            w = g.bracket(vs[a], vs[b])
            if not s.contains(w):
                out.append(Witness((a, b), w))
    return out


def check_representation(rho: Representation) -> Report:
    g = rho.algebra
    rep = Report("representation")
    if len(rho.action) != g.dim or any(m.rows != rho.module_dim or m.cols != rho.module_dim for m in rho.action):
        raise DimensionError("action matrices have the wrong shape")
    viol = []
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = rho.matrix_of(g.bracket_basis(i, j))
            rhs = rho.action[i] @ rho.action[j] - rho.action[j] @ rho.action[i]
            if lhs != rhs:
                viol.append(Witness((i, j), str(lhs - rhs)))
    rep.add("representation", viol)
    return rep


def adjoint(g: LieAlgebra) -> Representation:
    return Representation(g, g.dim, tuple(g.ad(i) for i in range(g.dim)))


def coadjoint(g: LieAlgebra) -> Representation:
    """Coadjoint action on ``g*``: ``<ad*_X xi, Y> = -<xi, [X, Y]>``."""
    return Representation(g, g.dim, tuple(-g.ad(i).T for i in range(g.dim)))


def coad(g: LieAlgebra, x: Sequence[Fraction], xi: Sequence[Fraction]) -> tuple:
    """``ad*_x xi`` for ``x`` in ``g`` and ``xi`` in ``g*``."""
    return tuple(-a for a in g.ad_of(x).T.apply(xi))


def opposite(g: LieAlgebra) -> LieAlgebra:
    data = {ijk: -v for ijk, v in g.c.entries}
    return LieAlgebra(g.dim, g.basis_names, RationalTensor3.from_dict(g.dim, data))


def distinct_names(names: Sequence[str]) -> tuple:
    """Append primes to repeated names so every basis name is unique."""
    seen: set = set()
    out = []
    for n in names:
        while n in seen:
            n += "'"
        seen.add(n)
        out.append(n)
    return tuple(out)


def direct_sum(*gs: LieAlgebra) -> LieAlgebra:
    data = {}
    names = []
    off = 0
    for g in gs:
        for (i, j, k), v in g.c.entries:
            data[(i + off, j + off, k + off)] = v
        names.extend(g.basis_names)
        off += g.dim
    if len(set(names)) != len(names):
        names = [f"{n}_{b}" for b, g in enumerate(gs) for n in g.basis_names]
    return LieAlgebra(off, tuple(names), RationalTensor3.from_dict(off, data))


def change_basis(g: LieAlgebra, p: Matrix, names: Sequence[str] | None = None) -> LieAlgebra:
    """Transport ``g`` along the isomorphism ``x -> p x``."""
    pinv = p.inverse()
    n = g.dim
    cols = [pinv.column(i) for i in range(n)]
    data = {}
    for i in range(n):
        for j in range(n):
            w = p.apply(g.bracket(cols[i], cols[j]))
            for k, v in enumerate(w):
                if v:
                    data[(i, j, k)] = v
    return LieAlgebra(n, tuple(names) if names else g.basis_names, RationalTensor3.from_dict(n, data))


def restrict(g: LieAlgebra, s: Subspace, names: Sequence[str] | None = None) -> LieAlgebra:
    """Bracket induced on a subalgebra, written in the subspace's stored basis."""
    return restrict_to_basis(g, s.vectors, names)


def restrict_to_basis(g: LieAlgebra, vectors: Sequence[Sequence[Fraction]], names: Sequence[str] | None = None) -> LieAlgebra:
    """Bracket induced on the span of independent ``vectors``, in that basis."""
    vs = [tuple(v) for v in vectors]
    s = Subspace.span(vs, g.dim)
    if s.dim != len(vs):
        raise ValueError("vectors are not independent")
    coord = Matrix.from_columns(vs, g.dim)
    data = {}
    for a in range(len(vs)):
        for b in range(len(vs)):
            w = g.bracket(vs[a], vs[b])
            if not s.contains(w):
                raise ValueError("subspace is not closed under the bracket")
            coords = coord.solve(w)
            for k, v in enumerate(coords):
                if v:
                    data[(a, b, k)] = v
    names = tuple(names) if names else tuple(f"s{i}" for i in range(len(vs)))
    return LieAlgebra(len(vs), names, RationalTensor3.from_dict(len(vs), data))


# ---------------------------------------------------------------------------
# exterior algebra


def _sort_sign(idx: Sequence[int]) -> tuple[int, tuple]:
    """Sign of the permutation sorting ``idx`` (0 if an index repeats)."""
    if len(set(idx)) != len(idx):
        return 0, ()
    arr = list(idx)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


@dataclass(frozen=True)
class Multivector:
    """Homogeneous element of the exterior algebra of ``algebra``."""

    algebra: LieAlgebra
    degree: int
    components: tuple = field(default=())  # sorted ((I, coeff), ...) with I increasing

    @classmethod
    def from_dict(cls, algebra: LieAlgebra, degree: int, data: dict) -> "Multivector":
        acc: dict = {}
        for idx, v in data.items():
            idx = tuple(algebra.basis_names.index(i) if isinstance(i, str) else i for i in idx)
            if len(idx) != degree:
                raise ValueError(f"index {idx} does not have length {degree}")
            if any(not 0 <= i < algebra.dim for i in idx):
                raise IndexError(f"index {idx} out of range")
            sign, key = _sort_sign(idx)
            if sign:
                acc[key] = acc.get(key, 0) + sign * to_q(v)
        return cls(algebra, degree, tuple(sorted((k, v) for k, v in acc.items() if v)))

    @classmethod
    def vector(cls, algebra: LieAlgebra, x: Sequence[Fraction]) -> "Multivector":
        return cls.from_dict(algebra, 1, {(i,): a for i, a in enumerate(x) if a})

    @classmethod
    def zero(cls, algebra: LieAlgebra, degree: int) -> "Multivector":
        return cls(algebra, degree, ())

    def as_dict(self) -> dict:
        return dict(self.components)

    def is_zero(self) -> bool:
        return not self.components

    def __add__(self, other: "Multivector") -> "Multivector":
        _same_space(self, other)
        if self.degree != other.degree:
            raise ValueError("adding multivectors of different degree")
        acc = self.as_dict()
        for k, v in other.components:
            acc[k] = acc.get(k, 0) + v
        return Multivector(self.algebra, self.degree, tuple(sorted((k, v) for k, v in acc.items() if v)))

    def __neg__(self) -> "Multivector":
        return self.scale(-1)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def scale(self, c) -> "Multivector":
        c = to_q(c)
        if not c:
            return Multivector.zero(self.algebra, self.degree)
        return Multivector(self.algebra, self.degree, tuple((k, c * v) for k, v in self.components))

    def to_vector(self) -> tuple:
        if self.degree != 1:
            raise ValueError("only degree-1 multivectors are vectors")
        out = [Fraction(0)] * self.algebra.dim
        for (i,), v in self.components:
            out[i] = v
        return tuple(out)

    def __str__(self) -> str:
        if not self.components:
            return "0"
        names = self.algebra.basis_names
        return " + ".join(f"{v}*" + "^".join(names[i] for i in k) if k else str(v) for k, v in self.components)


def _same_space(a: Multivector, b: Multivector):
    if a.algebra.dim != b.algebra.dim or a.algebra.c != b.algebra.c:
        raise ValueError("multivectors belong to different algebras")


def wedge(a: Multivector, b: Multivector) -> Multivector:
    _same_space(a, b)
    acc: dict = {}
    for ka, va in a.components:
        for kb, vb in b.components:
            sign, key = _sort_sign(ka + kb)
            if sign:
                acc[key] = acc.get(key, 0) + sign * va * vb
    return Multivector(a.algebra, a.degree + b.degree, tuple(sorted((k, v) for k, v in acc.items() if v)))


def _mono(algebra: LieAlgebra, idx: tuple) -> Multivector:
    return Multivector(algebra, len(idx), ((idx, Fraction(1)),))


def schouten(a: Multivector, b: Multivector) -> Multivector:
    """Algebraic Schouten bracket on the exterior algebra of a Lie algebra.

    On decomposables, ``[a1^..^ap, b1^..^bq] = sum (-1)^(i+j) [ai, bj] ^ a^(i) ^ b^(j)``
    where ``^(i)`` drops the ``i``-th factor. Scalars bracket to zero.
    """
    _same_space(a, b)
    g = a.algebra
    p, q = a.degree, b.degree
    deg = p + q - 1
    if p == 0 or q == 0:
        return Multivector.zero(g, max(deg, 0))
    acc: dict = {}
    for ka, va in a.components:
        for kb, vb in b.components:
            coeff = va * vb
            for i, ai in enumerate(ka):
                rest_a = ka[:i] + ka[i + 1:]
                for j, bj in enumerate(kb):
                    br = g.bracket_basis(ai, bj)
                    if not any(br):
                        continue
                    sign = -1 if (i + j) % 2 else 1
                    rest = rest_a + kb[:j] + kb[j + 1:]
                    for k, ck in enumerate(br):
                        if not ck:
                            continue
                        s, key = _sort_sign((k,) + rest)
                        if s:
                            acc[key] = acc.get(key, 0) + s * sign * coeff * ck
    return Multivector(g, deg, tuple(sorted((k, v) for k, v in acc.items() if v)))


def act_on_multivector(rho: Representation, x: Sequence[Fraction], m: Multivector, module: LieAlgebra) -> Multivector:
    """Extend ``rho(x)`` to the exterior power as a derivation.

    ``module`` is the Lie algebra whose exterior algebra ``m`` lives in
    (its bracket is irrelevant here, only the carrier).
    """
    mat = rho.matrix_of(x)
    acc: dict = {}
    for idx, v in m.components:
        for pos, i in enumerate(idx):
            col = mat.column(i)
            for k, ck in enumerate(col):
                if not ck:
                    continue
                s, key = _sort_sign(idx[:pos] + (k,) + idx[pos + 1:])
                if s:
                    acc[key] = acc.get(key, 0) + s * v * ck
    return Multivector(module, m.degree, tuple(sorted((k, val) for k, val in acc.items() if val)))


def evaluate(m: Multivector, forms: Sequence[Sequence[Fraction]]) -> Fraction:
    """Pair a p-vector with p dual vectors (determinant convention)."""
    if len(forms) != m.degree:
        raise ValueError("number of arguments differs from the degree")
    total = Fraction(0)
    for idx, v in m.components:
        total += v * _det([[f[i] for i in idx] for f in forms])
    return total


def _det(rows) -> Fraction:
    if not rows:
        return Fraction(1)
    return Matrix.from_rows(rows).det()


def sharp(lam: Multivector) -> Matrix:
    """Matrix of ``xi -> lam(xi, .)``: ``<eta, sharp(xi)> = lam(xi, eta)``."""
    if lam.degree != 2:
        raise ValueError("sharp needs a bivector")
    n = lam.algebra.dim
    grid = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), v in lam.components:
        # lam(e^i, e^j) = v, lam(e^j, e^i) = -v; column = input covector
        grid[j][i] += v
        grid[i][j] -= v
    return Matrix(n, n, tuple(tuple(r) for r in grid))


def ce_differential(g: LieAlgebra, omega: Multivector) -> Multivector:
    """Chevalley-Eilenberg differential of ``g`` on ``omega`` in ``Lambda g*``.

    ``omega`` may be attached to any algebra of the same dimension (its
    bracket is ignored); the result is attached to the same one.
    ``(d w)(x0..xp) = sum_{a<b} (-1)^(a+b) w([xa, xb], x0..^a..^b..xp)``.
    """
    p = omega.degree
    n = g.dim
    comps = omega.as_dict()
    acc = {}
    for idx in combinations(range(n), p + 1):
        total = Fraction(0)
        for a in range(p + 1):
            for b in range(a + 1, p + 1):
                br = g.bracket_basis(idx[a], idx[b])
                if not any(br):
                    continue
                rest = idx[:a] + idx[a + 1:b] + idx[b + 1:]
                sign = -1 if (a + b) % 2 else 1
                for k, ck in enumerate(br):
                    if not ck:
                        continue
                    s, key = _sort_sign((k,) + rest)
                    if s and key in comps:
                        total += sign * s * ck * comps[key]
        if total:
            acc[idx] = total
    return Multivector(omega.algebra, p + 1, tuple(sorted(acc.items())))
