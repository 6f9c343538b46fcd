"""Regenerate ``src/maninkit/catalog_data/v1`` from the definitions below.

Expected verdicts come from the naive oracles, never from the checkers.
Mutations are single-constant edits of the positive entries; each is
classified by the oracles and only invalid ones enter the committed
kill set (valid ones are kept separately as agreement checks).

    python3 tools/build_catalog.py
"""

from __future__ import annotations

import copy
import json
from fractions import Fraction
from pathlib import Path

from maninkit.bialg import LieBialgebra, bialgebra_from_rmatrix, drinfeld_double
from maninkit.catalog import apply_edit
from maninkit.coquad import CoquadraticLieAlgebra, coquad_to_ca, dirac_to_mult
from maninkit.crossedmod import CrossedModule, Lie2Bialgebra, adjoint_cm, dual_cm_from_rmatrix, trivial_action
from maninkit.exactlin import Matrix, RationalTensor3, Subspace
from maninkit.fileformat import Structure, from_dict, to_dict
from maninkit.generate import aff1, heisenberg3, sl2
from maninkit.mutate import mutation_edits
from maninkit.liealg import LieAlgebra, LinearMap, Multivector, Representation
from maninkit.oracles import oracle_extras, oracle_verdicts
from maninkit.poly import Poly, PolyLieAlgebroid, PolyMultivector
from maninkit.quadratic import BilinearForm, QuadraticLieAlgebra

OUT = Path(__file__).resolve().parents[1] / "src" / "maninkit" / "catalog_data" / "v1"
MAX_MUTANTS_PER_ENTRY = 60


def _mutated_lie(g: LieAlgebra, data: dict) -> LieAlgebra:
    c = g.c.as_dict()
    for key, v in data.items():
        c[key] = v
    return LieAlgebra(g.dim, g.basis_names, RationalTensor3.from_dict(g.dim, {k: v for k, v in c.items() if v}))


def entries() -> list:
    """``(name, structure, description, negative)`` tuples."""
    g = sl2()
    e_f = Multivector.from_dict(g, 2, {("e", "f"): 1})
    h_e = Multivector.from_dict(g, 2, {("h", "e"): 1})
    out = []
    for n in range(1, 5):
        out.append((f"abelian_{n}", Structure("lie_algebra", LieAlgebra.abelian(n)), f"abelian Lie algebra of dimension {n}", False))
    out.append(("sl2", Structure("lie_algebra", g), "sl2 with [h,e]=2e, [h,f]=-2f, [e,f]=h", False))
    out.append(("heisenberg3", Structure("lie_algebra", heisenberg3()), "Heisenberg algebra [x,y]=z", False))
    out.append(("aff1", Structure("lie_algebra", aff1()), "affine algebra [x,y]=y", False))
    a = aff1()
    out.append(("aff1_bialgebra", Structure("bialgebra", LieBialgebra(a, a.with_names(["x*", "y*"]))),
                "aff1 with the dual bracket [x*,y*]=y*", False))
    b = bialgebra_from_rmatrix(g, e_f)
    out.append(("sl2_rmatrix", Structure("bialgebra", b, {"rmatrix": e_f}),
                "coboundary bialgebra of sl2 with r = e^f (graph of r# is not closed)", False))
    bt = bialgebra_from_rmatrix(g, h_e)
    out.append(("sl2_rmatrix_triangular", Structure("bialgebra", bt, {"rmatrix": h_e}),
                "coboundary bialgebra of sl2 with the triangular r = h^e", False))
    q, l1, l2 = drinfeld_double(b)
    out.append(("sl2_double", Structure("quadratic", q, {"l1": l1, "l2": l2}),
                "Drinfeld double of sl2_rmatrix with its Manin triple", False))
    cm = adjoint_cm(g)
    out.append(("adjoint_cm_sl2", Structure("crossed_module", cm, {"rmatrix": e_f}),
                "adjoint crossed module id: sl2 -> sl2 with r = e^f", False))
    out.append(("adjoint_cm_sl2_lie2", Structure("lie2_bialgebra", Lie2Bialgebra(cm, dual_cm_from_rmatrix(cm, e_f)), {"rmatrix": e_f}),
                "Lie 2-bialgebra induced by r = e^f on the adjoint crossed module", False))
    th = LieAlgebra.abelian(2, ["c0", "c1"])
    tcm = CrossedModule(th, a, LinearMap.of(Matrix.zeros(2, 2)), trivial_action(a, 2))
    out.append(("trivial_cm", Structure("crossed_module", tcm), "abelian theta, phi = 0, trivial aff1 action", False))
    cq = CoquadraticLieAlgebra.of(g, [[Fraction(1, 2), 0, 0], [0, 0, 1], [0, 1, 0]])
    out.append(("coquad_sl2", Structure("coquadratic", cq), "sl2 with del the inverse of the trace form", False))
    ca = coquad_to_ca(cq)
    borel = Subspace.span([(1, 0, 0), (0, 1, 0)], 3)
    out.append(("ca_coquad_sl2", Structure("quadratic_lie2", ca, {"l1": dirac_to_mult(cq, borel)}),
                "quadratic Lie 2-algebra of coquad_sl2 with the multiplicative Dirac structure of the Borel", False))
    tangent = PolyLieAlgebroid.tangent(1)
    out.append(("poly_tangent_line", Structure("poly_algebroid", tangent, {"del": ((Poly.const(1, 1),),)}),
                "tangent algebroid of the line with constant del = (1)", False))
    x = Poly.var(1, 0)
    aff_action = PolyLieAlgebroid.build(1, [[-x], [Poly.const(1, 1)]], {(0, 1): [Poly.zero(1), Poly.const(1, 1)]})
    out.append(("poly_aff1_action", Structure("poly_algebroid", aff_action), "action algebroid of aff1 on the line", False))
    xs = [Poly.var(2, i) for i in range(2)]
    out.append(("poly_poisson_xy", Structure("poly_bivector", PolyMultivector.from_dict(2, 2, {(0, 1): xs[0]})),
                "pi = x dx^dy on the plane", False))
    v3 = [Poly.var(3, i) for i in range(3)]
    so3 = PolyMultivector.from_dict(3, 2, {(0, 1): v3[2], (1, 2): v3[0], (0, 2): -1 * v3[1]})
    out.append(("poly_poisson_so3", Structure("poly_bivector", so3), "linear Poisson structure of so3", False))

    # negatives, one per axiom
    out.append(("broken_jacobi_sl2", Structure("lie_algebra", _mutated_lie(g, {(0, 1, 1): Fraction(3), (1, 0, 1): Fraction(-3)}).with_names(["h", "e", "f"])),
                "sl2 with [h,e]=3e: antisymmetric, fails Jacobi", True))
    out.append(("broken_antisymmetry_sl2", Structure("lie_algebra", _mutated_lie(g, {(1, 0, 1): Fraction(0)})),
                "sl2 with the [e,h] entry removed", True))
    bad_b = LieBialgebra(g, LieAlgebra.from_brackets(["h*", "e*", "f*"], {("h*", "e*"): {"e*": 1}}))
    out.append(("bad_cocycle_sl2", Structure("bialgebra", bad_b), "sl2 with a dual bracket that is not a cocycle", True))
    out.append(("quadratic_sl2_identity_form", Structure("quadratic", QuadraticLieAlgebra(g, BilinearForm(3, Matrix.identity(3)))),
                "sl2 with the identity form, which is not invariant", True))
    neg = CrossedModule(g, g, LinearMap.of(Matrix.identity(3).scale(-1)), cm.act)
    out.append(("cm_sl2_phi_minus_id", Structure("crossed_module", neg), "adjoint crossed module with phi = -id, fails axiom (1)", True))
    th1 = LieAlgebra.abelian(1, ["c"])
    act2 = Representation(a, 1, (Matrix.from_rows([[2]], 1), Matrix.from_rows([[0]], 1)))
    bad2 = CrossedModule(th1, a, LinearMap.of(Matrix.from_rows([[0], [1]], 1)), act2)
    out.append(("cm_bad_axiom2", Structure("crossed_module", bad2), "theta = Q, A = aff1, phi(c) = y, x.c = 2c: fails axiom (2) only", True))
    out.append(("coquad_sl2_identity_del", Structure("coquadratic", CoquadraticLieAlgebra.of(g, Matrix.identity(3))),
                "sl2 with del = identity, which is not invariant", True))
    broken = PolyLieAlgebroid.build(1, [[-x], [x]], {(0, 1): [Poly.zero(1), Poly.const(1, 1)]})
    out.append(("poly_broken_anchor", Structure("poly_algebroid", broken), "aff1 action with rho(e_y) = x d/dx: anchor not a morphism", True))
    nonp = PolyMultivector.from_dict(3, 2, {(0, 1): v3[0], (1, 2): v3[1]})
    out.append(("poly_non_poisson", Structure("poly_bivector", nonp), "x dx^dy + y dy^dz, not Poisson", True))
    out.append(("poly_tangent_line_del_x", Structure("poly_algebroid", tangent, {"del": ((x,),)}),
                "tangent algebroid of the line with del = (x): invariance (b) fails", True))
    return out


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    killset, valid = [], []
    for name, s, desc, negative in entries():
        payload = to_dict(Structure(s.kind, s.obj, s.extras, name))
        decoded = from_dict(payload)
        expected = oracle_verdicts(decoded)
        extras = oracle_extras(decoded)
        assert all(expected.values()) != negative, (name, expected)
        doc = {"name": name, "kind": s.kind, "description": desc, "negative": negative,
               "expected": expected, "payload": payload}
        if extras:
            doc["extras_expected"] = extras
        (OUT / f"{name}.json").write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
        if negative:
            continue
        edits = mutation_edits(payload)
        if len(edits) > MAX_MUTANTS_PER_ENTRY:
            step = len(edits) / MAX_MUTANTS_PER_ENTRY
            edits = [edits[int(i * step)] for i in range(MAX_MUTANTS_PER_ENTRY)]
        for num, ed in enumerate(edits):
            p = copy.deepcopy(payload)
            for e in ed:
                apply_edit(p, e)
            m = {"id": f"{name}#{num}", "entry": name, "edits": ed}
            ok = all(oracle_verdicts(from_dict(p)).values())
            (valid if ok else killset).append(m)
        print(f"{name}: {len(edits)} mutants")
    doc = {"format_version": 1, "note": "single-constant mutations of positive catalog entries; "
           "'mutations' are invalid per the naive oracles, 'valid_mutations' stay valid",
           "mutations": killset, "valid_mutations": valid}
    (OUT / "mutations.json").write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
    print(f"{len(killset)} invalid mutants, {len(valid)} still valid")


if __name__ == "__main__":
    main()
