"""Seeded fuzzing: generated valid instances plus single-constant mutants.

Each instance is evaluated by the naive oracle and the checker suite, by
every dual-verdict pair the kind has, and (for valid instances) by the
construction round trips.  Any disagreement is a bug in this package.
"""

from __future__ import annotations

import copy
import hashlib
import json
import random
from concurrent.futures import ProcessPoolExecutor

from .bialg import drinfeld_double
from .catalog import apply_edit
from .coquad import (
    ca_to_coquad,
    coquad_equal,
    coquad_to_ca,
    double_lie2bialgebra,
    extract_lie2bialgebra,
    lie2bialgebra_equal,
    multiplicativity_conditions,
    multiplicativity_direct,
)
from .fileformat import Structure, from_dict, to_dict
from .generate import (
    random_bialgebra,
    random_bivector,
    random_coquadratic,
    random_crossed_module,
    random_lie2bialgebra,
    random_lie_algebra,
)
from .mutate import mutation_edits
from .oracles import oracle_verdicts
from .poly import graph_residuals, schouten_poly
from .quadratic import ManinTriple, check_courant_point, extract_bialgebra
from .suites import run_suite

FUZZ_KINDS = ("lie_algebra", "bialgebra", "crossed_module", "lie2_bialgebra", "coquadratic", "poly_bivector")
# random bivectors form a mixed corpus: Poisson and non-Poisson both expected
MIXED_KINDS = ("poly_bivector",)


def generate_payloads(kind: str, count: int, dims: int, seed: int) -> list:
    """``(id, payload, mutant)`` triples; one mutant follows every valid instance."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        if kind == "lie_algebra":
            s = Structure(kind, random_lie_algebra(rng, dims))
        elif kind == "bialgebra":
            s = Structure(kind, random_bialgebra(rng, dims))
        elif kind == "crossed_module":
            s = Structure(kind, random_crossed_module(rng, dims))
        elif kind == "lie2_bialgebra":
            s = Structure(kind, random_lie2bialgebra(rng, dims))
        elif kind == "coquadratic":
            s = Structure(kind, random_coquadratic(rng, dims))
        elif kind == "poly_bivector":
            s = Structure(kind, random_bivector(rng, min(max(dims, 2), 3)))
        else:
            raise ValueError(f"cannot fuzz kind {kind!r}")
        payload = to_dict(s)
        out.append((f"{kind}-{i}", payload, False))
        targets = [payload]
        if kind == "coquadratic":
            ca = to_dict(Structure("quadratic_lie2", coquad_to_ca(s.obj)))
            out.append((f"{kind}-{i}-ca", ca, False))
            targets.append(ca)
        for t, target in enumerate(targets):
            edits = mutation_edits(target)
            if not edits:
                continue
            m = copy.deepcopy(target)
            for e in rng.choice(edits):
                apply_edit(m, e)
            out.append((f"{kind}-{i}-mut{t}", m, True))
    return out


def _roundtrip(s: Structure):
    kind, obj = s.kind, s.obj
    if kind == "bialgebra":
        q, l1, l2 = drinfeld_double(obj)
        back = extract_bialgebra(ManinTriple(q, l1, l2))
        return back.g.c == obj.g.c and back.gstar.c == obj.gstar.c
    if kind == "coquadratic":
        ca = coquad_to_ca(obj)
        back = ca_to_coquad(ca)
        again = coquad_to_ca(back)
        return coquad_equal(back, obj) and again.total.algebra.c == ca.total.algebra.c and \
            again.total.form == ca.total.form and again.vb == ca.vb
    if kind == "lie2_bialgebra":
        q, l1, l2 = double_lie2bialgebra(obj)
        return lie2bialgebra_equal(extract_lie2bialgebra(q, l1, l2), obj)
    return None


def evaluate(item) -> dict:
    """Verdicts for one ``(id, payload, mutant)`` item."""
    ident, payload, mutant = item
    s = from_dict(payload)
    res = {"id": ident, "kind": s.kind, "mutant": mutant}
    notes = []
    res["oracle"] = all(oracle_verdicts(s).values())
    try:
        res["checker"] = run_suite(s).passed
    except AssertionError as exc:  # a checker's internal dual verdicts disagreed
        res["checker"] = None
        notes.append(str(exc).splitlines()[0])
    agree = res["checker"] == res["oracle"]
    if s.kind == "quadratic_lie2" and check_courant_point(s.obj.total).passed:
        a = multiplicativity_conditions(s.obj).passed
        b = multiplicativity_direct(s.obj).passed
        res["dual"] = [a, b]
        agree = agree and a == b
    if s.kind == "poly_bivector":
        a = schouten_poly(s.obj, s.obj).is_zero()
        b = not graph_residuals(s.obj)
        res["dual"] = [a, b]
        agree = agree and a == b
    if res["checker"] and not mutant:
        rt = _roundtrip(s)
        if rt is not None:
            res["roundtrip"] = rt
            agree = agree and rt
    if not mutant and not res["oracle"] and s.kind not in MIXED_KINDS:
        notes.append("generator produced an invalid instance")
        agree = False
    res["agree"] = agree
    if notes:
        res["notes"] = notes
    return res


def run_fuzz(kind: str, count: int, dims: int, seed: int, parallel: int = 1) -> dict:
    items = generate_payloads(kind, count, dims, seed)
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as ex:
            results = list(ex.map(evaluate, items))
    else:
        results = [evaluate(it) for it in items]
    body = json.dumps(results, sort_keys=True)
    mutants = [r for r in results if r["mutant"]]
    return {
        "kind": kind,
        "count": count,
        "dims": dims,
        "seed": seed,
        "instances": len(results),
        "valid_instances": sum(1 for r in results if not r["mutant"]),
        "mutants": len(mutants),
        "mutants_invalid": sum(1 for r in mutants if not r["oracle"]),
        "mutants_detected": sum(1 for r in mutants if not r["oracle"] and r["checker"] is False),
        "disagreements": [r for r in results if not r["agree"]],
        "digest": "sha256:" + hashlib.sha256(body.encode()).hexdigest(),
        "passed": all(r["agree"] for r in results),
    }
