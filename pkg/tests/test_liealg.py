from fractions import Fraction
import random
from itertools import product

import pytest
from hypothesis import given

from helpers import seeds
from maninkit.exactlin import Matrix, RationalTensor3, Subspace, permutation_matrix
from maninkit.generate import aff1, heisenberg3, random_lie_algebra, sl2
from maninkit.liealg import (
    LieAlgebra,
    LinearMap,
    Multivector,
    check_antisymmetry,
    check_jacobi,
    check_morphism,
    check_representation,
    coad,
    coadjoint,
    direct_sum,
    distinct_names,
    is_subalgebra,
    opposite,
    schouten,
    wedge,
)
from maninkit.oracles import naive_jacobi

H, E, F = 0, 1, 2


def edited_sl2(edits):
    c = sl2().c.as_dict()
    c.update(edits)
    return LieAlgebra(3, ("h", "e", "f"), RationalTensor3.from_dict(3, {k: v for k, v in c.items() if v}))


def perturbed_sl2():
    return edited_sl2({(H, E, E): Fraction(3), (E, H, E): Fraction(-3)})


class TestStructureConstants:
    def test_sl2_brackets(self):
        g = sl2()
        assert g.bracket_basis(H, E) == (0, 2, 0)
        assert g.bracket_basis(H, F) == (0, 0, -2)
        assert g.bracket_basis(E, F) == (1, 0, 0)
        assert g.bracket_basis(F, E) == (-1, 0, 0)

    def test_from_brackets_by_name(self):
        g = LieAlgebra.from_brackets(["x", "y"], {("x", "y"): {"y": 1}})
        assert g.c == aff1().c

    def test_distinct_names(self):
        assert distinct_names(["h", "e", "h", "h"]) == ("h", "e", "h'", "h''")


class TestJacobi:
    @pytest.mark.parametrize("n", range(5))
    def test_abelian(self, n):
        assert check_jacobi(LieAlgebra.abelian(n)).passed

    @pytest.mark.parametrize("g", [sl2(), heisenberg3(), aff1()], ids=["sl2", "heis", "aff1"])
    def test_known_algebras(self, g):
        assert check_jacobi(g).passed
        assert not naive_jacobi(g)

    def test_perturbed_sl2_fails_at_hef(self):
        g = perturbed_sl2()
        rep = check_jacobi(g)
        assert check_antisymmetry(g).passed
        assert not rep.passed
        bad = [c for c in rep.checks if not c.passed]
        assert [w.indices for w in bad[0].witnesses] == [(H, E, F)]
        assert naive_jacobi(g) == {(H, E, F)}

    def test_non_antisymmetric_reported(self):
        g = edited_sl2({(E, H, E): 0})
        assert not check_antisymmetry(g).passed
        assert not check_jacobi(g).passed

    @given(seeds())
    def test_generated_agree_with_oracle(self, seed):
        g = random_lie_algebra(random.Random(seed), 4)
        assert check_jacobi(g).passed
        assert not naive_jacobi(g)


class TestMorphism:
    def test_identity(self):
        assert check_morphism(LinearMap.of(Matrix.identity(3)), sl2(), sl2()).passed

    def test_zero(self):
        assert check_morphism(LinearMap.of(Matrix.zeros(3, 3)), sl2(), sl2()).passed

    def test_swap_e_f_fails(self):
        swap = LinearMap.of(permutation_matrix([0, 2, 1]))
        assert not check_morphism(swap, sl2(), sl2()).passed

    def test_oracle_over_pairs(self):
        g = sl2()
        swap = permutation_matrix([0, 2, 1])
        bad = {(i, j) for i, j in product(range(3), repeat=2)
               if swap.apply(g.bracket_basis(i, j)) != g.bracket(swap.column(i), swap.column(j))}
        rep = check_morphism(LinearMap.of(swap), g, g)
        assert {w.indices for c in rep.checks for w in c.witnesses} == bad


class TestSubalgebra:
    def test_borel(self):
        assert is_subalgebra(Subspace.span([(1, 0, 0), (0, 1, 0)], 3), sl2())

    def test_e_f_not_closed(self):
        assert not is_subalgebra(Subspace.span([(0, 1, 0), (0, 0, 1)], 3), sl2())

    @pytest.mark.parametrize("i", range(3))
    def test_abelian_lines(self, i):
        assert is_subalgebra(Subspace.coordinate(3, [i]), LieAlgebra.abelian(3))


class TestCoadjoint:
    def test_abelian_zero(self):
        rho = coadjoint(LieAlgebra.abelian(2))
        assert all(m == Matrix.zeros(2, 2) for m in rho.action)

    def test_sl2_h_on_estar(self):
        assert coad(sl2(), (1, 0, 0), (0, 1, 0)) == (0, -2, 0)

    @pytest.mark.parametrize("g", [sl2(), heisenberg3(), aff1()], ids=["sl2", "heis", "aff1"])
    def test_pairing_identity(self, g):
        n = g.dim
        rho = coadjoint(g)
        assert check_representation(rho).passed
        for i, j, a in product(range(n), repeat=3):
            xi = tuple(int(b == a) for b in range(n))
            lhs = rho.act(tuple(int(b == i) for b in range(n)), xi)[j]
            assert lhs == -g.bracket_basis(i, j)[a]


class TestOpposite:
    def test_abelian(self):
        g = LieAlgebra.abelian(3)
        assert opposite(g) == g

    @pytest.mark.parametrize("g", [sl2(), heisenberg3(), aff1()], ids=["sl2", "heis", "aff1"])
    def test_involution(self, g):
        assert opposite(opposite(g)) == g

    def test_minus_identity_is_morphism(self):
        g = sl2()
        assert check_morphism(LinearMap.of(Matrix.identity(3).scale(-1)), g, opposite(g)).passed


class TestSchouten:
    def test_degree_one_is_bracket(self):
        g = sl2()
        for i, j in product(range(3), repeat=2):
            x = Multivector.vector(g, [int(k == i) for k in range(3)])
            y = Multivector.vector(g, [int(k == j) for k in range(3)])
            assert schouten(x, y).to_vector() == g.bracket_basis(i, j)

    def test_abelian_square(self):
        g = LieAlgebra.abelian(4)
        lam = Multivector.from_dict(g, 2, {(0, 1): 1, (2, 3): 3, (1, 2): -2})
        assert schouten(lam, lam).is_zero()

    def test_sl2_ef_square_invariant(self):
        g = sl2()
        lam = Multivector.from_dict(g, 2, {("e", "f"): 1})
        sq = schouten(lam, lam)
        assert sq.degree == 3
        for i in range(3):
            x = Multivector.vector(g, [int(k == i) for k in range(3)])
            assert schouten(sq, x).is_zero()

    def test_graded_antisymmetry(self):
        g = sl2()
        a = Multivector.from_dict(g, 2, {("h", "e"): 1})
        b = Multivector.from_dict(g, 2, {("e", "f"): 2, ("h", "f"): 1})
        # degrees (2,2): [a,b] = -(-1)^{(1)(1)} [b,a] = [b,a]
        assert schouten(a, b) == schouten(b, a)

    def test_leibniz_on_wedge(self):
        g = sl2()
        h, e, f = (Multivector.vector(g, [int(k == i) for k in range(3)]) for i in range(3))
        lhs = schouten(h, wedge(e, f))
        rhs = wedge(schouten(h, e), f) + wedge(e, schouten(h, f))
        assert lhs == rhs and lhs.is_zero()


class TestDirectSum:
    def test_abelian(self):
        s = direct_sum(LieAlgebra.abelian(2), LieAlgebra.abelian(3))
        assert s.dim == 5 and s.is_abelian()

    def test_sl2_sl2(self):
        s = direct_sum(sl2(), sl2())
        assert s.dim == 6
        assert check_jacobi(s).passed and not naive_jacobi(s)
        assert len(set(s.basis_names)) == 6
