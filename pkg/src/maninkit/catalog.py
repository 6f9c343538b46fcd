"""Built-in example structures with committed expected verdicts.

Entries live as JSON files under ``catalog_data/v1``.  Each carries an
``expected`` map produced by the naive oracles when the catalog was built;
:func:`verify_all` re-derives every verdict with the checkers and reports any
drift.  ``mutations.json`` in the same directory holds the committed set of
single-constant mutations used for falsifiability.
"""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .bialg import check_cocycle, check_rmatrix, rmatrix_dual_algebra, rmatrix_graph_triple
from .bialg import LieBialgebra
from .coquad import check_coquad_manin_triple, check_coquadratic, check_multiplicativity, is_mult_dirac
from .crossedmod import check_cm_rmatrix, check_crossed_module, dual_total_in_gamma_star, total_algebra
from .exactlin import fmt_q, is_transverse, to_q
from .fileformat import Structure, from_dict
from .liealg import check_antisymmetry, check_jacobi, check_lie_algebra
from .poly import check_algebroid_axioms, check_poisson_graph, coquad_invariance_poly
from .quadratic import ManinTriple, check_manin_triple, invariance_violations
from .report import Report, Witness
from .suites import run_suite

CATALOG_VERSION = "v1"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    payload: dict
    expected: dict
    description: str = ""
    negative: bool = False
    extras_expected: dict = field(default_factory=dict)

    def structure(self) -> Structure:
        return from_dict(self.payload)


def _dir():
    return resources.files("maninkit").joinpath("catalog_data", CATALOG_VERSION)


def names() -> list:
    """Sorted entry names."""
    return sorted(p.name[: -len(".json")] for p in _dir().iterdir()
                  if p.name.endswith(".json") and p.name != "mutations.json")


def entry(name: str) -> CatalogEntry:
    path = _dir().joinpath(f"{name}.json")
    if not path.is_file():
        raise KeyError(f"unknown catalog entry {name!r}")
    d = json.loads(path.read_text())
    return CatalogEntry(d["name"], d["kind"], d["payload"], d["expected"], d.get("description", ""),
                        d.get("negative", False), d.get("extras_expected", {}))


def load(name: str):
    """The mathematical object of an entry."""
    return entry(name).structure().obj


def load_structure(name: str) -> Structure:
    return entry(name).structure()


# ---------------------------------------------------------------------------
# checker verdicts, keyed like oracles.oracle_verdicts


def checker_verdicts(s: Structure) -> dict:
    kind, obj, ex = s.kind, s.obj, s.extras
    out: dict = {}
    if kind == "lie_algebra":
        out["antisymmetry"] = check_antisymmetry(obj).passed
        out["jacobi"] = check_jacobi(obj)["jacobi"].passed
    elif kind == "bialgebra":
        out["g_lie"] = check_lie_algebra(obj.g).passed
        out["gstar_lie"] = check_lie_algebra(obj.gstar).passed
        out["cocycle"] = check_cocycle(obj).passed
        if "rmatrix" in ex:
            out["rmatrix"] = out["g_lie"] and check_rmatrix(obj.g, ex["rmatrix"]).passed
            out["rmatrix_dual"] = out["rmatrix"] and rmatrix_dual_algebra(obj.g, ex["rmatrix"]).c == obj.gstar.c
    elif kind in ("quadratic", "quadratic_lie2"):
        q = obj if kind == "quadratic" else obj.total
        out["lie"] = check_lie_algebra(q.algebra).passed
        out["form"] = q.form.is_nondegenerate()
        out["invariance"] = not invariance_violations(q)
        if kind == "quadratic":
            if "l1" in ex and "l2" in ex:
                out["manin_triple"] = check_manin_triple(ManinTriple(q, ex["l1"], ex["l2"])).passed
        else:
            out["multiplicative"] = all(out.values()) and check_multiplicativity(obj).passed
            for key in ("l1", "l2"):
                if key in ex:
                    out[f"{key}_mult_dirac"] = is_mult_dirac(obj, ex[key])
            if "l1" in ex and "l2" in ex:
                out["transverse"] = is_transverse(ex["l1"], ex["l2"])
    elif kind == "crossed_module":
        out["crossed_module"] = check_crossed_module(obj).passed
        if "rmatrix" in ex:
            out["cm_rmatrix"] = check_lie_algebra(obj.theta).passed and check_cm_rmatrix(obj, ex["rmatrix"]).passed
    elif kind == "lie2_bialgebra":
        out["cm1"] = check_crossed_module(obj.cm1).passed
        out["cm2"] = check_crossed_module(obj.cm2).passed
        out["vb_duality"] = obj.cm2.phi.matrix == obj.cm1.phi.matrix.T
        out["cocycle"] = out["vb_duality"] and check_cocycle(
            LieBialgebra(total_algebra(obj.cm1), dual_total_in_gamma_star(obj.cm2, obj.cm1.vb))).passed
        if "rmatrix" in ex:
            out["cm_rmatrix"] = check_lie_algebra(obj.cm1.theta).passed and check_cm_rmatrix(obj.cm1, ex["rmatrix"]).passed
    elif kind == "coquadratic":
        out["coquadratic"] = check_coquadratic(obj).passed
        if "l1" in ex and "l2" in ex:
            out["manin_triple"] = check_coquad_manin_triple(obj, ex["l1"], ex["l2"]).passed
    elif kind == "poly_algebroid":
        out["algebroid"] = check_algebroid_axioms(obj).passed
        if "del" in ex:
            d = ex["del"]
            out["del_symmetric"] = all(d[i][j] == d[j][i] for i in range(len(d)) for j in range(len(d)))
            out["coquad_invariance"] = out["del_symmetric"] and coquad_invariance_poly(obj, d).passed
    elif kind == "poly_bivector":
        out["poisson"] = check_poisson_graph(obj).passed
    else:
        raise ValueError(f"no checker verdicts for kind {kind!r}")
    return out


def checker_extras(s: Structure) -> dict:
    out: dict = {}
    if s.kind == "bialgebra" and "rmatrix" in s.extras:
        out["manin_triple_graph"] = check_manin_triple(rmatrix_graph_triple(s.obj.g, s.extras["rmatrix"])).passed
    return out


def verify_entry(e: CatalogEntry) -> Report:
    s = e.structure()
    rep = Report(f"catalog entry {e.name}")
    got = checker_verdicts(s)
    got.update(checker_extras(s))
    want = dict(e.expected)
    want.update(e.extras_expected)
    for key in sorted(set(got) | set(want)):
        ok = key in got and key in want and got[key] == want[key]
        rep.add_bool(key, ok, Witness((), f"checker {got.get(key)} expected {want.get(key)}"))
    suite = run_suite(s).passed
    rep.add_bool("suite", suite == all(e.expected.values()),
                 Witness((), f"suite {suite} expected {all(e.expected.values())}"))
    return rep


def verify_all() -> Report:
    """All entries re-checked against their committed verdicts."""
    rep = Report("catalog")
    for name in names():
        rep.extend(verify_entry(entry(name)), f"{name}: ")
    return rep


# ---------------------------------------------------------------------------
# mutations


def mutations() -> list:
    return json.loads(_dir().joinpath("mutations.json").read_text())["mutations"]


def _walk(d, path):
    for p in path:
        d = d[p]
    return d


def apply_edit(payload: dict, edit: dict) -> None:
    """Add ``delta`` to one constant of ``payload`` in place.

    ``type`` selects the encoding at ``path``: ``tensor`` (sparse ``[i, j, k, v]``),
    ``bivector`` (sparse ``[i, j, v]``), ``dense`` (row-major matrix), ``poly``
    (sparse ``[exps, v]``) or ``polycomp`` (sparse ``[i, j, poly]``).
    """
    target = _walk(payload, edit["path"])
    key, delta, typ = list(edit["key"]), to_q(edit["delta"]), edit["type"]
    if typ == "dense":
        i, j = key
        target[i][j] = fmt_q(to_q(target[i][j]) + delta)
        return
    if typ == "polycomp":
        *ij, exps = key
        for item in target:
            if item[:2] == ij:
                _bump(item[2], [exps], delta, 1)
                return
        target.append(ij + [[[exps, fmt_q(delta)]]])
        target.sort()
        return
    width = {"tensor": 3, "bivector": 2, "poly": 1}[typ]
    if typ == "poly":
        key = [key]
    _bump(target, key, delta, width)


def _bump(items: list, key: list, delta: Fraction, width: int) -> None:
    for pos, item in enumerate(items):
        if list(item[:width]) == key:
            v = to_q(item[width]) + delta
            if v:
                item[width] = fmt_q(v)
            else:
                del items[pos]
            return
    items.append(key + [fmt_q(delta)])
    items.sort()


def mutant_payload(m: dict) -> dict:
    payload = copy.deepcopy(entry(m["entry"]).payload)
    for edit in m["edits"]:
        apply_edit(payload, edit)
    return payload


def mutation_summary() -> dict:
    """Kill rate over the committed invalid mutants and acceptance of the valid ones."""
    doc = json.loads(_dir().joinpath("mutations.json").read_text())
    missed, rejected = [], []
    for m in doc["mutations"]:
        if run_suite(from_dict(mutant_payload(m))).passed:
            missed.append(m["id"])
    for m in doc["valid_mutations"]:
        if not run_suite(from_dict(mutant_payload(m))).passed:
            rejected.append(m["id"])
    n_inv, n_val = len(doc["mutations"]), len(doc["valid_mutations"])
    return {
        "invalid": n_inv,
        "killed": n_inv - len(missed),
        "missed": missed,
        "valid": n_val,
        "valid_accepted": n_val - len(rejected),
        "valid_rejected": rejected,
        "passed": not missed and not rejected,
    }
