import random
from fractions import Fraction

import pytest
from hypothesis import given

from helpers import seeds
from maninkit.coquad import (
    CoquadraticLieAlgebra,
    QuadraticLie2Algebra,
    ca_to_coquad,
    check_coquad_manin_triple,
    check_coquadratic,
    check_multiplicativity,
    check_pairing_morphism,
    coquad_equal,
    coquad_from_lie2bialgebra,
    coquad_to_ca,
    dirac_to_mult,
    double_lie2bialgebra,
    extract_lie2bialgebra,
    is_coquad_dirac,
    is_mult_dirac,
    lie2bialgebra_equal,
    mult_to_dirac,
    multiplicativity_conditions,
    multiplicativity_direct,
)
from maninkit.crossedmod import (
    CrossedModule,
    Lie2Bialgebra,
    adjoint_cm,
    dual_cm_from_rmatrix,
    trivial_action,
    trivial_dual_cm,
)
from maninkit.exactlin import Matrix, Subspace
from maninkit.generate import random_coquadratic, random_lie2bialgebra, sl2
from maninkit.liealg import LieAlgebra, LinearMap, Multivector
from maninkit.oracles import naive_coquad_dirac, naive_coquadratic, naive_mult_dirac, naive_multiplicative
from maninkit.quadratic import BilinearForm, QuadraticLieAlgebra, check_courant_point
from maninkit.report import CheckFailed
from maninkit.twovect import TwoVect

H = Fraction(1, 2)
SL2_DEL = [[H, 0, 0], [0, 0, 1], [0, 1, 0]]
BOREL = Subspace.span([(1, 0, 0), (0, 1, 0)], 3)


def sl2_cq():
    return CoquadraticLieAlgebra.of(sl2(), SL2_DEL)


def abelian_cq(n, rows=None):
    return CoquadraticLieAlgebra.of(LieAlgebra.abelian(n), rows or Matrix.zeros(n, n))


def adjoint_lie2(rmatrix=True):
    cm = adjoint_cm(sl2())
    if not rmatrix:
        return Lie2Bialgebra(cm, trivial_dual_cm(cm))
    return Lie2Bialgebra(cm, dual_cm_from_rmatrix(cm, Multivector.from_dict(cm.theta, 2, {(1, 2): 1})))


def with_form(q, matrix):
    return QuadraticLie2Algebra(QuadraticLieAlgebra(q.total.algebra, BilinearForm(q.total.dim, matrix)), q.vb)


class TestCoquadratic:
    def test_zero(self):
        assert check_coquadratic(CoquadraticLieAlgebra.of(sl2(), Matrix.zeros(3, 3))).passed

    def test_sl2_inverse_form(self):
        assert check_coquadratic(sl2_cq()).passed
        assert naive_coquadratic(sl2_cq())

    def test_sl2_identity(self):
        cq = CoquadraticLieAlgebra.of(sl2(), Matrix.identity(3))
        rep = check_coquadratic(cq)
        assert rep["(a) symmetric"].passed and not rep["(b) invariant"].passed
        assert not naive_coquadratic(cq)

    @given(seeds())
    def test_generated(self, seed):
        cq = random_coquadratic(random.Random(seed), 4)
        assert check_coquadratic(cq).passed and naive_coquadratic(cq)


class TestToCA:
    def test_abelian_zero(self):
        q = coquad_to_ca(abelian_cq(2))
        assert q.total.algebra.is_abelian()
        assert q.total.form.matrix == Matrix.from_rows(
            [[0, 0, H, 0], [0, 0, 0, H], [H, 0, 0, 0], [0, H, 0, 0]])

    def test_pairing_example(self):
        q = coquad_to_ca(abelian_cq(2, Matrix.from_rows([[1, 0], [0, 0]])))
        # gamma = (1, 0), k = (0, 1) against gamma' = (0, 1), k' = (1, 0)
        assert q.total.form((1, 0, 0, 1), (0, 1, 1, 0)) == 1

    def test_sl2(self):
        q = coquad_to_ca(sl2_cq())
        assert q.total.dim == 6
        assert check_courant_point(q.total).passed
        assert check_multiplicativity(q).passed
        assert check_pairing_morphism(q).passed
        assert naive_multiplicative(q)

    def test_rejects_non_invariant(self):
        with pytest.raises(CheckFailed):
            coquad_to_ca(CoquadraticLieAlgebra.of(sl2(), Matrix.identity(3)))


class TestRoundTrip:
    def test_zero(self):
        cq = abelian_cq(2)
        assert coquad_equal(ca_to_coquad(coquad_to_ca(cq)), cq)

    def test_sl2(self):
        assert coquad_equal(ca_to_coquad(coquad_to_ca(sl2_cq())), sl2_cq())

    @given(seeds())
    def test_generated(self, seed):
        cq = random_coquadratic(random.Random(seed), 4)
        q = coquad_to_ca(cq)
        back = ca_to_coquad(q)
        assert coquad_equal(back, cq)
        again = coquad_to_ca(back)
        assert again.total.algebra.c == q.total.algebra.c and again.total.form == q.total.form


class TestMultiplicativity:
    def test_abelian(self):
        assert check_multiplicativity(coquad_to_ca(abelian_cq(3))).passed

    def test_perturbed_pairing_fails_both(self):
        q = coquad_to_ca(sl2_cq())
        rows = [list(r) for r in q.total.form.matrix.entries]
        # pair the side with itself
        rows[3][3] += 1
        bad = with_form(q, Matrix.from_rows(rows))
        assert not multiplicativity_conditions(bad).passed
        assert not multiplicativity_direct(bad).passed
        assert not naive_multiplicative(bad)

    def test_perturbed_structural_map(self):
        q = coquad_to_ca(sl2_cq())
        bad = QuadraticLie2Algebra(q.total, TwoVect.of(q.vb.matrix.scale(2)))
        assert not check_pairing_morphism(bad).passed

    @given(seeds())
    def test_verdicts_agree(self, seed):
        q = coquad_to_ca(random_coquadratic(random.Random(seed), 3))
        assert multiplicativity_conditions(q).passed == multiplicativity_direct(q).passed == naive_multiplicative(q)


class TestCoquadDirac:
    def test_full(self):
        assert is_coquad_dirac(sl2_cq(), Subspace.full(3))

    def test_zero_non_isotropic(self):
        assert not is_coquad_dirac(sl2_cq(), Subspace.zero(3))

    def test_borel(self):
        got = is_coquad_dirac(sl2_cq(), BOREL)
        assert got == naive_coquad_dirac(sl2_cq(), BOREL)
        assert got


class TestDiracMult:
    def test_full_gives_side(self):
        q = coquad_to_ca(sl2_cq())
        assert dirac_to_mult(sl2_cq(), Subspace.full(3)) == q.side

    def test_zero_gives_core(self):
        cq = abelian_cq(2)
        assert dirac_to_mult(cq, Subspace.zero(2)) == coquad_to_ca(cq).core

    def test_borel_round_trip(self):
        cq = sl2_cq()
        q = coquad_to_ca(cq)
        l = dirac_to_mult(cq, BOREL)
        assert is_mult_dirac(q, l) and naive_mult_dirac(q, l)
        assert mult_to_dirac(q, l) == BOREL

    def test_side_is_mult_dirac(self):
        q = coquad_to_ca(sl2_cq())
        assert is_mult_dirac(q, q.side)

    def test_lagrangian_not_source_closed(self):
        q = coquad_to_ca(abelian_cq(2))
        l = Subspace.span([(1, 0, 0, 1), (0, 1, -1, 0)], 4)
        assert not is_mult_dirac(q, l)
        assert not naive_mult_dirac(q, l)

    def test_refuses_non_dirac(self):
        with pytest.raises(CheckFailed):
            dirac_to_mult(sl2_cq(), Subspace.zero(3))


class TestCoquadManinTriple:
    def test_axes(self):
        cq = abelian_cq(2)
        assert check_coquad_manin_triple(cq, Subspace.coordinate(2, [0]), Subspace.coordinate(2, [1])).passed

    def test_not_transverse(self):
        rep = check_coquad_manin_triple(sl2_cq(), Subspace.full(3), Subspace.full(3))
        assert not rep["transverse"].passed

    def test_from_lie2bialgebra(self):
        cq, p, r = coquad_from_lie2bialgebra(adjoint_lie2())
        assert check_coquadratic(cq).passed
        assert check_coquad_manin_triple(cq, p, r).passed


class TestDouble2:
    def test_abelian(self):
        th, a = LieAlgebra.abelian(1, ["c"]), LieAlgebra.abelian(2, ["u", "v"])
        cm = CrossedModule(th, a, LinearMap.of(Matrix.zeros(2, 1)), trivial_action(a, 1))
        q, l1, l2 = double_lie2bialgebra(Lie2Bialgebra(cm, trivial_dual_cm(cm)))
        assert q.total.algebra.is_abelian()
        assert lie2bialgebra_equal(extract_lie2bialgebra(q, l1, l2), Lie2Bialgebra(cm, trivial_dual_cm(cm)))

    @pytest.mark.parametrize("rmatrix", [False, True], ids=["trivial", "rmatrix"])
    def test_adjoint(self, rmatrix):
        b = adjoint_lie2(rmatrix)
        q, l1, l2 = double_lie2bialgebra(b)
        assert check_multiplicativity(q).passed and check_pairing_morphism(q).passed
        assert lie2bialgebra_equal(extract_lie2bialgebra(q, l1, l2), b)

    def test_refuses_non_triple(self):
        q, l1, _ = double_lie2bialgebra(adjoint_lie2())
        with pytest.raises(CheckFailed):
            extract_lie2bialgebra(q, l1, l1)

    @given(seeds())
    def test_generated(self, seed):
        b = random_lie2bialgebra(random.Random(seed), 3)
        q, l1, l2 = double_lie2bialgebra(b)
        assert lie2bialgebra_equal(extract_lie2bialgebra(q, l1, l2), b)
