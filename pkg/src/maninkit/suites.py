"""Full axiom suite per structure kind, as run by ``maninkit check``."""

from __future__ import annotations

from .bialg import check_bialgebra, check_rmatrix, rmatrix_dual_algebra
from .coquad import (
    check_coquad_manin_triple,
    check_coquadratic,
    check_multiplicativity,
    check_pairing_morphism,
    is_coquad_dirac,
    is_mult_dirac,
)
from .crossedmod import check_cm_rmatrix, check_crossed_module, check_lie2bialgebra
from .exactlin import is_transverse
from .fileformat import Structure
from .liealg import check_lie_algebra
from .poly import check_algebroid_axioms, check_poisson_graph, coquad_invariance_poly
from .quadratic import ManinTriple, check_courant_point, check_manin_triple, dirac_report
from .report import Report, Witness
from .twovect import check_Phi_identity, check_phi_identity


def _lie_algebra(s: Structure) -> Report:
    return check_lie_algebra(s.obj)


def _bialgebra(s: Structure) -> Report:
    rep = Report("bialgebra suite")
    rep.extend(check_bialgebra(s.obj))
    lam = s.extras.get("rmatrix")
    if lam is not None:
        rr = check_rmatrix(s.obj.g, lam)
        rep.extend(rr, "rmatrix ")
        if rr.passed:
            same = rmatrix_dual_algebra(s.obj.g, lam).c == s.obj.gstar.c
            rep.add_bool("rmatrix dual bracket", same, Witness((), "gstar differs from the coboundary bracket"))
    return rep


def _quadratic(s: Structure) -> Report:
    q = s.obj
    rep = Report("quadratic suite")
    rep.extend(check_courant_point(q))
    l1, l2 = s.extras.get("l1"), s.extras.get("l2")
    if l1 is not None and l2 is not None:
        rep.extend(check_manin_triple(ManinTriple(q, l1, l2)))
    else:
        for key, l in (("l1", l1), ("l2", l2)):
            if l is not None:
                rep.extend(dirac_report(l, q, key))
    return rep


def _two_vect(s: Structure) -> Report:
    rep = Report("2-vector space suite")
    rep.extend(check_phi_identity(s.obj), "phi ")
    rep.extend(check_Phi_identity(s.obj), "Phi ")
    return rep


def _crossed_module(s: Structure) -> Report:
    rep = Report("crossed module suite")
    rep.extend(check_crossed_module(s.obj))
    r = s.extras.get("rmatrix")
    if r is not None:
        rep.extend(check_cm_rmatrix(s.obj, r), "rmatrix ")
    return rep


def _lie2_bialgebra(s: Structure) -> Report:
    rep = Report("Lie 2-bialgebra suite")
    rep.extend(check_lie2bialgebra(s.obj))
    r = s.extras.get("rmatrix")
    if r is not None:
        rep.extend(check_cm_rmatrix(s.obj.cm1, r), "rmatrix ")
    return rep


def _coquadratic(s: Structure) -> Report:
    cq = s.obj
    rep = Report("co-quadratic suite")
    rep.extend(check_coquadratic(cq))
    l1, l2 = s.extras.get("l1"), s.extras.get("l2")
    if l1 is not None and l2 is not None:
        rep.extend(check_coquad_manin_triple(cq, l1, l2))
    else:
        for key, l in (("l1", l1), ("l2", l2)):
            if l is not None:
                rep.add_bool(f"{key} dirac", is_coquad_dirac(cq, l))
    return rep


def _quadratic_lie2(s: Structure) -> Report:
    q = s.obj
    rep = Report("quadratic Lie 2-algebra suite")
    base = check_courant_point(q.total)
    rep.extend(base)
    if base.passed:
        rep.extend(check_multiplicativity(q))
        rep.extend(check_pairing_morphism(q))
    l1, l2 = s.extras.get("l1"), s.extras.get("l2")
    for key, l in (("l1", l1), ("l2", l2)):
        if l is not None:
            rep.add_bool(f"{key} multiplicative dirac", is_mult_dirac(q, l))
    if l1 is not None and l2 is not None:
        rep.add_bool("transverse", is_transverse(l1, l2))
    return rep


def _poly_algebroid(s: Structure) -> Report:
    rep = Report("polynomial algebroid suite")
    rep.extend(check_algebroid_axioms(s.obj))
    d = s.extras.get("del")
    if d is not None:
        n = len(d)
        asym = [Witness((i, j), str(d[i][j] - d[j][i])) for i in range(n) for j in range(i + 1, n) if d[i][j] != d[j][i]]
        rep.add("(a) symmetric", asym)
        if not asym:
            rep.extend(coquad_invariance_poly(s.obj, d))
    return rep


def _poly_bivector(s: Structure) -> Report:
    return check_poisson_graph(s.obj)


SUITES = {
    "lie_algebra": _lie_algebra,
    "bialgebra": _bialgebra,
    "quadratic": _quadratic,
    "two_vect": _two_vect,
    "crossed_module": _crossed_module,
    "lie2_bialgebra": _lie2_bialgebra,
    "coquadratic": _coquadratic,
    "quadratic_lie2": _quadratic_lie2,
    "poly_algebroid": _poly_algebroid,
    "poly_bivector": _poly_bivector,
}


def run_suite(s: Structure) -> Report:
    return SUITES[s.kind](s)
