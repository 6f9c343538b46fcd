import random
from fractions import Fraction

import pytest
from hypothesis import given

from helpers import seeds
from maninkit.bialg import (
    LieBialgebra,
    bialgebra_from_rmatrix,
    check_bialgebra,
    check_cocycle,
    check_rmatrix,
    drinfeld_double,
    graph_defect,
    is_triangular,
    rmatrix_dual_algebra,
    rmatrix_graph_triple,
    rmatrix_manin_triple,
    square_contraction,
    trivial_dual,
)
from maninkit.exactlin import Matrix
from maninkit.generate import aff1, heisenberg3, random_bialgebra, random_lie_algebra, sl2
from maninkit.liealg import LieAlgebra, Multivector, direct_sum
from maninkit.oracles import naive_cocycle, naive_graph_closed, naive_rmatrix, naive_rmatrix_dual
from maninkit.quadratic import check_courant_point, check_manin_triple, duality_form, extract_bialgebra, ManinTriple
from maninkit.report import CheckFailed


def ef():
    return Multivector.from_dict(sl2(), 2, {("e", "f"): 1})


def he():
    return Multivector.from_dict(sl2(), 2, {("h", "e"): 1})


def random_bivector(rng, g):
    n = g.dim
    return Multivector.from_dict(g, 2, {(i, j): rng.randint(-2, 2) for i in range(n) for j in range(i + 1, n)})


class TestCocycle:
    @pytest.mark.parametrize("g", [sl2(), aff1(), heisenberg3()], ids=["sl2", "aff1", "heis"])
    def test_abelian_dual(self, g):
        assert check_cocycle(trivial_dual(g)).passed

    def test_aff1_pair(self):
        a = aff1()
        b = LieBialgebra(a, a.with_names(["x*", "y*"]))
        assert not naive_cocycle(a, b.gstar)
        assert check_cocycle(b).passed

    def test_non_cocycle(self):
        g = sl2()
        gs = LieAlgebra.from_brackets(["h*", "e*", "f*"], {("h*", "e*"): {"e*": 1}})
        rep = check_cocycle(LieBialgebra(g, gs))
        assert not rep.passed
        assert naive_cocycle(g, gs)

    @given(seeds())
    def test_rmatrix_output_passes(self, seed):
        rng = random.Random(seed)
        g = random_lie_algebra(rng, 3)
        lam = random_bivector(rng, g)
        if not check_rmatrix(g, lam).passed:
            return
        b = bialgebra_from_rmatrix(g, lam)
        assert check_cocycle(b).passed
        assert not naive_cocycle(b.g, b.gstar)


class TestDouble:
    def test_abelian(self):
        q, l1, l2 = drinfeld_double(trivial_dual(LieAlgebra.abelian(2)))
        assert q.algebra.is_abelian()
        assert q.form == duality_form(2)
        assert q.form.matrix == Matrix.from_rows([[0, 0, Fraction(1, 2), 0], [0, 0, 0, Fraction(1, 2)],
                                                  [Fraction(1, 2), 0, 0, 0], [0, Fraction(1, 2), 0, 0]])

    def test_aff1(self):
        a = aff1()
        q, l1, l2 = drinfeld_double(LieBialgebra(a, a.with_names(["x*", "y*"])))
        assert q.dim == 4
        assert check_courant_point(q).passed
        assert check_manin_triple(ManinTriple(q, l1, l2)).passed

    def test_sl2_rmatrix_double(self):
        q, l1, l2 = drinfeld_double(bialgebra_from_rmatrix(sl2(), ef()))
        assert check_manin_triple(ManinTriple(q, l1, l2)).passed

    def test_rejects_non_bialgebra(self):
        gs = LieAlgebra.from_brackets(["h*", "e*", "f*"], {("h*", "e*"): {"e*": 1}})
        with pytest.raises(CheckFailed):
            drinfeld_double(LieBialgebra(sl2(), gs))

    @given(seeds())
    def test_swap_symmetry(self, seed):
        b = random_bialgebra(random.Random(seed), 3)
        assert check_bialgebra(b.swap()).passed


class TestRmatrix:
    def test_zero(self):
        assert check_rmatrix(sl2(), Multivector.zero(sl2(), 2)).passed

    def test_abelian(self):
        g = LieAlgebra.abelian(3)
        assert check_rmatrix(g, Multivector.from_dict(g, 2, {(0, 1): 1, (1, 2): 5})).passed

    def test_sl2_ef(self):
        assert check_rmatrix(sl2(), ef()).passed
        assert naive_rmatrix(sl2(), ef())
        assert not is_triangular(sl2(), ef())

    def test_sl2_he_triangular(self):
        assert check_rmatrix(sl2(), he()).passed
        assert is_triangular(sl2(), he())

    def test_sl2_any_bivector(self):
        # the top exterior power of a unimodular 3-dim algebra is invariant
        g = sl2()
        lam = Multivector.from_dict(g, 2, {("h", "e"): 3, ("h", "f"): -1, ("e", "f"): 2})
        assert check_rmatrix(g, lam).passed

    def test_aff1_square_fails(self):
        g = direct_sum(aff1(), aff1())
        lam = Multivector.from_dict(g, 2, {("x_0", "y_0"): 1, ("x_0", "x_1"): 1})
        rep = check_rmatrix(g, lam)
        assert not rep.passed and not naive_rmatrix(g, lam)

    @given(seeds())
    def test_agrees_with_oracle(self, seed):
        rng = random.Random(seed)
        g = random_lie_algebra(rng, 4)
        lam = random_bivector(rng, g)
        assert check_rmatrix(g, lam).passed == naive_rmatrix(g, lam)


class TestRmatrixBialgebra:
    def test_zero_gives_abelian_dual(self):
        assert bialgebra_from_rmatrix(sl2(), Multivector.zero(sl2(), 2)).gstar.is_abelian()

    def test_abelian_g(self):
        g = LieAlgebra.abelian(3)
        assert bialgebra_from_rmatrix(g, Multivector.from_dict(g, 2, {(0, 2): 1})).gstar.is_abelian()

    def test_sl2_ef(self):
        b = bialgebra_from_rmatrix(sl2(), ef())
        assert check_bialgebra(b).passed
        assert b.gstar.c.as_dict() == naive_rmatrix_dual(sl2(), ef())

    def test_rejects_non_rmatrix(self):
        # in dimension 3 every bivector qualifies, so use aff1 + aff1
        g = direct_sum(aff1(), aff1())
        bad = Multivector.from_dict(g, 2, {("x_0", "x_1"): 1, ("y_0", "y_1"): 1})
        assert not naive_rmatrix(g, bad)
        with pytest.raises(CheckFailed):
            bialgebra_from_rmatrix(g, bad)

    @given(seeds())
    def test_dual_matches_oracle(self, seed):
        rng = random.Random(seed)
        g = random_lie_algebra(rng, 4)
        lam = random_bivector(rng, g)
        assert rmatrix_dual_algebra(g, lam).c.as_dict() == naive_rmatrix_dual(g, lam)


class TestGraphTriple:
    def test_zero(self):
        g = sl2()
        t = rmatrix_manin_triple(g, Multivector.zero(g, 2))
        q, l1, l2 = drinfeld_double(trivial_dual(g))
        assert t.l1 == l1 and t.l2 == l2

    def test_abelian(self):
        g = LieAlgebra.abelian(3)
        assert check_manin_triple(rmatrix_manin_triple(g, Multivector.from_dict(g, 2, {(0, 1): 2}))).passed

    def test_triangular_he(self):
        t = rmatrix_manin_triple(sl2(), he())
        assert check_manin_triple(t).passed
        assert extract_bialgebra(t).gstar.c == bialgebra_from_rmatrix(sl2(), he()).gstar.c

    def test_ef_graph_not_closed(self):
        # e^f has a nonzero ad-invariant square, so the graph of its sharp is not a subalgebra
        g = sl2()
        assert not naive_graph_closed(g, ef())
        rep = check_manin_triple(rmatrix_graph_triple(g, ef()))
        assert rep.failed() == ["l2 involutive"]
        with pytest.raises(CheckFailed):
            rmatrix_manin_triple(g, ef())

    def test_ef_defect_values(self):
        g = sl2()
        assert graph_defect(g, ef(), 1, 2) == (1, 0, 0)
        assert graph_defect(g, ef(), 0, 1) == (0, 0, 1)

    @given(seeds())
    def test_defect_is_half_square(self, seed):
        rng = random.Random(seed)
        g = random_lie_algebra(rng, 4)
        lam = random_bivector(rng, g)
        n = g.dim
        for a in range(n):
            for b in range(n):
                half = tuple(Fraction(x, 2) for x in square_contraction(g, lam, a, b))
                assert graph_defect(g, lam, a, b) == half
        assert naive_graph_closed(g, lam) == is_triangular(g, lam)
