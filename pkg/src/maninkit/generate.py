"""Validity-preserving generative families of random instances.

All randomness goes through an explicit ``random.Random`` so runs are
reproducible from a seed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .bialg import LieBialgebra, bialgebra_from_rmatrix, check_rmatrix, double_algebra, trivial_dual
from .coquad import CoquadraticLieAlgebra
from .crossedmod import (
    CrossedModule,
    Lie2Bialgebra,
    adjoint_cm,
    dual_cm_from_rmatrix,
    trivial_action,
    trivial_dual_cm,
)
from .exactlin import Matrix, RationalTensor3, kernel
from .liealg import LieAlgebra, LinearMap, Multivector, Representation, adjoint, change_basis, direct_sum
from .poly import Poly, PolyMultivector
from .report import CheckFailed
from .twovect import TwoVect


def small_q(rng: random.Random, lo: int = -2, hi: int = 2, denoms=(1, 1, 1, 2)) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(denoms))


def random_matrix(rng: random.Random, rows: int, cols: int, density: float = 0.6) -> Matrix:
    return Matrix.from_rows([[small_q(rng) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)], cols)


def random_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        m = random_matrix(rng, n, n, 0.7)
        if m.det() != 0:
            return m


def random_twovect(rng: random.Random, side: int, core: int) -> TwoVect:
    return TwoVect.of(random_matrix(rng, side, core))


# ---------------------------------------------------------------------------
# Lie algebras


def sl2() -> LieAlgebra:
    return LieAlgebra.from_brackets(["h", "e", "f"], {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}})


def heisenberg3() -> LieAlgebra:
    return LieAlgebra.from_brackets(["x", "y", "z"], {("x", "y"): {"z": 1}})


def aff1() -> LieAlgebra:
    return LieAlgebra.from_brackets(["x", "y"], {("x", "y"): {"y": 1}})


def semidirect(m: Matrix, names=None) -> LieAlgebra:
    """``Q^k x| Q`` where the last basis vector ``t`` acts on ``Q^k`` by ``m``."""
    k = m.rows
    names = names or [f"x{i}" for i in range(k)] + ["t"]
    data = {}
    for i in range(k):
        for j in range(k):
            if m[j, i]:
                data[(k, i, j)] = m[j, i]
                data[(i, k, j)] = -m[j, i]
    return LieAlgebra(k + 1, tuple(names), RationalTensor3.from_dict(k + 1, data))


def random_semidirect(rng: random.Random, k: int) -> LieAlgebra:
    return semidirect(random_matrix(rng, k, k))


def random_lie_algebra(rng: random.Random, max_dim: int = 4) -> LieAlgebra:
    choice = rng.randrange(5)
    if choice == 0 or max_dim < 2:
        n = rng.randint(1, max(1, max_dim))
        return LieAlgebra.abelian(n)
    if choice == 1:
        return random_semidirect(rng, rng.randint(1, max_dim - 1))
    if choice == 2 and max_dim >= 3:
        g = sl2()
        return change_basis(g, random_invertible(rng, 3), ["a", "b", "c"])
    if choice == 3 and max_dim >= 3:
        return change_basis(heisenberg3(), random_invertible(rng, 3), ["a", "b", "c"])
    g = aff1()
    if max_dim >= 3 and rng.random() < 0.5:
        g = direct_sum(g, LieAlgebra.abelian(1, ["z"]))
    return g


# ---------------------------------------------------------------------------
# bialgebras


def _bivector(g: LieAlgebra, pairs: dict) -> Multivector:
    return Multivector.from_dict(g, 2, pairs)


def triangular_rmatrices(g: LieAlgebra) -> list:
    """Bivectors ``x ^ y`` with ``span{x, y}`` a subalgebra, searched over basis pairs."""
    out = []
    for i, j in combinations(range(g.dim), 2):
        lam = _bivector(g, {(i, j): 1})
        if check_rmatrix(g, lam).passed:
            out.append(lam)
    return out


def random_bialgebra(rng: random.Random, max_dim: int = 4) -> LieBialgebra:
    """Families: trivial duals, swaps, coboundary duals of r-matrices and direct sums."""
    choice = rng.randrange(5)
    g = random_lie_algebra(rng, max_dim)
    if choice == 0:
        return trivial_dual(g)
    if choice == 1:
        return trivial_dual(g).swap()
    if choice in (2, 3):
        cands = triangular_rmatrices(g)
        if g.dim >= 2:
            # random bivector kept only if it passes the r-matrix check
            pairs = {ij: small_q(rng) for ij in combinations(range(g.dim), 2) if rng.random() < 0.5}
            lam = _bivector(g, pairs)
            if check_rmatrix(g, lam).passed:
                cands.append(lam)
        if cands:
            lam = rng.choice(cands).scale(rng.choice([1, 2, Fraction(-1, 2)]))
            b = bialgebra_from_rmatrix(g, lam)
            return b if choice == 2 else b.swap()
        return trivial_dual(g)
    if max_dim >= 3:
        b1 = random_bialgebra(rng, max(1, max_dim // 2))
        b2 = random_bialgebra(rng, max(1, max_dim - b1.dim))
        return direct_sum_bialgebra(b1, b2)
    return trivial_dual(g)


def direct_sum_bialgebra(b1: LieBialgebra, b2: LieBialgebra) -> LieBialgebra:
    g = direct_sum(b1.g, b2.g)
    gs = direct_sum(b1.gstar, b2.gstar)
    return LieBialgebra(g.with_names([f"u{i}" for i in range(g.dim)]), gs.with_names([f"u{i}*" for i in range(g.dim)]))


# ---------------------------------------------------------------------------
# co-quadratic algebras


def invariant_symmetric_basis(k: LieAlgebra) -> list:
    """Basis of symmetric ``del`` with ``ad_x del + del ad_x^T = 0`` for all ``x``."""
    n = k.dim
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    rows = []
    for x in range(n):
        ad = k.ad(x)
        for a in range(n):
            for b in range(n):
                row = []
                for (i, j) in pairs:
                    # entry (a, b) of ad E + E ad^T with E the symmetric unit at (i, j)
                    e = [[Fraction(0)] * n for _ in range(n)]
                    e[i][j] = Fraction(1)
                    e[j][i] = Fraction(1)
                    v = sum(ad[a, m] * e[m][b] for m in range(n)) + sum(e[a][m] * ad[b, m] for m in range(n))
                    row.append(v)
                rows.append(row)
    if not rows:
        rows = [[Fraction(0)] * len(pairs)]
    ker = kernel(Matrix.from_rows(rows, len(pairs)))
    out = []
    for v in ker.vectors:
        m = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), c in zip(pairs, v):
            m[i][j] = c
            m[j][i] = c
        out.append(Matrix.from_rows(m, n))
    return out


def random_coquadratic(rng: random.Random, max_dim: int = 4) -> CoquadraticLieAlgebra:
    k = random_lie_algebra(rng, max_dim)
    basis = invariant_symmetric_basis(k)
    d = Matrix.zeros(k.dim, k.dim)
    for b in basis:
        d = d + b.scale(small_q(rng))
    return CoquadraticLieAlgebra(k, LinearMap.of(d))


def coquad_manin_from_bialgebra(b: LieBialgebra):
    """``(K, P, Q)`` with ``K`` the double, ``del`` the inverse form and the two factors."""
    from .exactlin import Subspace
    from .quadratic import duality_form

    n = b.dim
    k = double_algebra(b)
    d = duality_form(n).matrix.inverse()
    cq = CoquadraticLieAlgebra(k, LinearMap.of(d))
    return cq, Subspace.coordinate(2 * n, range(n)), Subspace.coordinate(2 * n, range(n, 2 * n))


# ---------------------------------------------------------------------------
# crossed modules and Lie 2-bialgebras


def ideal_cm(g: LieAlgebra, ideal_indices) -> CrossedModule:
    """Inclusion of a coordinate ideal with the adjoint action restricted to it."""
    idx = list(ideal_indices)
    th_names = [g.basis_names[i] + "_" for i in idx]
    pos = {i: a for a, i in enumerate(idx)}
    data = {}
    for a, i in enumerate(idx):
        for b, j in enumerate(idx):
            for k, v in enumerate(g.bracket_basis(i, j)):
                if v:
                    data[(a, b, pos[k])] = v
    theta = LieAlgebra(len(idx), tuple(th_names), RationalTensor3.from_dict(len(idx), data))
    phi = Matrix.from_columns([[Fraction(int(r == i)) for r in range(g.dim)] for i in idx], g.dim)
    acts = []
    for v in range(g.dim):
        cols = []
        for i in idx:
            br = g.bracket_basis(v, i)
            cols.append([br[j] for j in idx])
        acts.append(Matrix.from_columns(cols, len(idx)))
    return CrossedModule(theta, g, LinearMap.of(phi), Representation(g, len(idx), tuple(acts)))


def abelian_module_cm(g: LieAlgebra) -> CrossedModule:
    """``theta`` the underlying vector space of ``g`` (abelian), ``phi = 0``, adjoint action."""
    theta = LieAlgebra.abelian(g.dim, [f"{x}_" for x in g.basis_names])
    return CrossedModule(theta, g, LinearMap.of(Matrix.zeros(g.dim, g.dim)), Representation(g, g.dim, adjoint(g).action))


def random_crossed_module(rng: random.Random, max_dim: int = 3) -> CrossedModule:
    choice = rng.randrange(4)
    g = random_lie_algebra(rng, max_dim)
    if choice == 0:
        return adjoint_cm(g)
    if choice == 1:
        return abelian_module_cm(g)
    if choice == 2:
        k = rng.randint(1, max(1, max_dim - 1))
        s = random_semidirect(rng, k)
        sub = sorted(rng.sample(range(k), rng.randint(1, k)))
        # coordinate subspaces of the abelian part are ideals only if invariant; fall back to all of it
        try:
            cm = ideal_cm(s, sub)
        except ValueError:
            cm = ideal_cm(s, range(k))
        from .crossedmod import check_crossed_module

        return cm if check_crossed_module(cm).passed else ideal_cm(s, range(k))
    theta = LieAlgebra.abelian(rng.randint(1, 2))
    return CrossedModule(theta, g, LinearMap.of(Matrix.zeros(g.dim, theta.dim)), trivial_action(g, theta.dim))


def random_lie2bialgebra(rng: random.Random, max_dim: int = 3) -> Lie2Bialgebra:
    cm = random_crossed_module(rng, max_dim)
    choice = rng.randrange(3)
    if choice == 0:
        return Lie2Bialgebra(cm, trivial_dual_cm(cm))
    if choice == 1:
        dual = trivial_dual_cm(cm)
        return Lie2Bialgebra(dual, trivial_dual_cm(dual))
    cands = triangular_rmatrices(cm.theta)
    if cm.theta.dim >= 2 and rng.random() < 0.5:
        pairs = {ij: small_q(rng) for ij in combinations(range(cm.theta.dim), 2)}
        cands.append(Multivector.from_dict(cm.theta, 2, pairs))
    rng.shuffle(cands)
    for r in cands:
        try:
            return Lie2Bialgebra(cm, dual_cm_from_rmatrix(cm, r))
        except CheckFailed:
            continue
    return Lie2Bialgebra(cm, trivial_dual_cm(cm))


# ---------------------------------------------------------------------------
# polynomial bivectors


def random_bivector(rng: random.Random, nvars: int = 3, max_degree: int = 1) -> PolyMultivector:
    comps = {}
    for ij in combinations(range(nvars), 2):
        terms = {}
        for _ in range(rng.randint(0, 2)):
            exps = [0] * nvars
            for _ in range(rng.randint(0, max_degree)):
                exps[rng.randrange(nvars)] += 1
            terms[tuple(exps)] = small_q(rng)
        comps[ij] = Poly.from_dict(nvars, terms)
    return PolyMultivector.from_dict(nvars, 2, comps)
