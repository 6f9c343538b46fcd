"""Single-constant mutations of serialized structures.

A mutation is a list of edits understood by :func:`maninkit.catalog.apply_edit`.
Antisymmetric data (structure constants) and symmetric data (forms, ``del``)
are perturbed as pairs so the edit changes one independent parameter; one
unpaired structure-constant edit per algebra also exercises antisymmetry.
"""

from __future__ import annotations


def _lie_edits(path, d):
    n = d["dim"]
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                out.append([
                    {"path": path + ["brackets"], "type": "tensor", "key": [i, j, k], "delta": "1"},
                    {"path": path + ["brackets"], "type": "tensor", "key": [j, i, k], "delta": "-1"},
                ])
    if n >= 2:
        out.append([{"path": path + ["brackets"], "type": "tensor", "key": [0, 1, 0], "delta": "1"}])
    return out


def _dense_edits(path, rows, symmetric):
    out = []
    for i in range(len(rows)):
        for j in range(len(rows[i])):
            if symmetric and j < i:
                continue
            edit = [{"path": path, "type": "dense", "key": [i, j], "delta": "1"}]
            if symmetric and i != j:
                edit.append({"path": path, "type": "dense", "key": [j, i], "delta": "1"})
            out.append(edit)
    return out


def _poly_edits(path, nvars):
    monos = [[0] * nvars] + [[int(a == v) for a in range(nvars)] for v in range(nvars)]
    return [[{"path": path, "type": "poly", "key": m, "delta": "1"}] for m in monos]


def _cm_edits(path, d):
    out = _lie_edits(path + ["theta"], d["theta"]) + _lie_edits(path + ["a"], d["a"])
    out += _dense_edits(path + ["phi"], d["phi"], False)
    for v, m in enumerate(d["action"]):
        out += _dense_edits(path + ["action", v], m, False)
    return out


def mutation_edits(payload: dict) -> list:
    kind = payload["kind"]
    if kind == "lie_algebra":
        return _lie_edits([], payload)
    if kind == "bialgebra":
        out = _lie_edits(["g"], payload["g"]) + _lie_edits(["gstar"], payload["gstar"])
        if "rmatrix" in payload:
            n = payload["g"]["dim"]
            out += [[{"path": ["rmatrix"], "type": "bivector", "key": [i, j], "delta": "1"}] for i in range(n) for j in range(i + 1, n)]
        return out
    if kind in ("quadratic", "quadratic_lie2"):
        out = _lie_edits(["algebra"], payload["algebra"]) + _dense_edits(["form"], payload["form"], True)
        if kind == "quadratic_lie2":
            out += _dense_edits(["delta"], payload["delta"], False)
        return out
    if kind == "crossed_module":
        out = _cm_edits([], payload)
        if "rmatrix" in payload:
            n = payload["theta"]["dim"]
            out += [[{"path": ["rmatrix"], "type": "bivector", "key": [i, j], "delta": "1"}] for i in range(n) for j in range(i + 1, n)]
        return out
    if kind == "lie2_bialgebra":
        return _cm_edits(["cm1"], payload["cm1"]) + _cm_edits(["cm2"], payload["cm2"])
    if kind == "coquadratic":
        return _lie_edits(["algebra"], payload["algebra"]) + _dense_edits(["del"], payload["del"], True)
    if kind == "poly_algebroid":
        n, r = payload["nvars"], payload["rank"]
        out = []
        for i in range(r):
            for v in range(n):
                out += _poly_edits(["anchor", i, v], n)
        for idx, (i, j, coeffs) in enumerate(payload.get("brackets", [])):
            if i < j:
                partner = next(p for p, e in enumerate(payload["brackets"]) if e[0] == j and e[1] == i)
                for k in range(r):
                    for e1, e2 in zip(_poly_edits(["brackets", idx, 2, k], n), _poly_edits(["brackets", partner, 2, k], n)):
                        e2 = [dict(e2[0], delta="-1")]
                        out.append(e1 + e2)
        if "del" in payload:
            for i in range(r):
                for j in range(i, r):
                    for e1, e2 in zip(_poly_edits(["del", i, j], n), _poly_edits(["del", j, i], n)):
                        out.append(e1 if i == j else e1 + e2)
        return out
    if kind == "poly_bivector":
        n = payload["nvars"]
        monos = [[0] * n] + [[int(a == v) for a in range(n)] for v in range(n)]
        return [[{"path": ["components"], "type": "polycomp", "key": [i, j, m], "delta": "1"}]
                for i in range(n) for j in range(i + 1, n) for m in monos]
    return []
