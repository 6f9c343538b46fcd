"""Structure interchange format (JSON, format version 1).

Rationals are strings ``"p"`` or ``"p/q"``; structure constants are sparse
``[i, j, k, "p/q"]`` entries taken literally (no antisymmetrization), so
broken structures can be written down and checked.  Subspaces are lists of
spanning vectors and are written back in reduced-echelon form.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

import jsonschema

from .bialg import LieBialgebra
from .coquad import CoquadraticLieAlgebra, QuadraticLie2Algebra
from .crossedmod import CrossedModule, Lie2Bialgebra
from .exactlin import DimensionError, Matrix, RationalTensor3, Subspace, fmt_q, to_q
from .liealg import LieAlgebra, LinearMap, Multivector, Representation
from .poly import Poly, PolyLieAlgebroid, PolyMultivector
from .quadratic import BilinearForm, QuadraticLieAlgebra
from .twovect import TwoVect

FORMAT_VERSION = 1
KINDS = (
    "lie_algebra",
    "bialgebra",
    "quadratic",
    "two_vect",
    "crossed_module",
    "lie2_bialgebra",
    "coquadratic",
    "quadratic_lie2",
    "poly_algebroid",
    "poly_bivector",
)


class FormatError(ValueError):
    """Input is not a valid structure file (maps to exit code 2)."""


@dataclass(frozen=True)
class Structure:
    """A decoded file: the mathematical object plus optional attached data."""

    kind: str
    obj: object
    extras: dict = field(default_factory=dict)
    name: str = ""


_SCHEMA = None


def schema() -> dict:
    global _SCHEMA
    if _SCHEMA is None:
        text = resources.files("maninkit").joinpath("schemas/structure.v1.json").read_text()
        _SCHEMA = json.loads(text)
    return _SCHEMA


# ---------------------------------------------------------------------------
# primitives


def _q(s) -> Fraction:
    try:
        return to_q(s)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise FormatError(f"malformed rational {s!r}") from exc


def _matrix(rows, nrows: int, ncols: int, what: str) -> Matrix:
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise FormatError(f"{what} must be {nrows} x {ncols}")
    return Matrix.from_rows([[_q(x) for x in r] for r in rows], ncols)


def _enc_matrix(m: Matrix) -> list:
    return [[fmt_q(x) for x in m.row(i)] for i in range(m.rows)]


def _subspace(rows, n: int, what: str) -> Subspace:
    if any(len(r) != n for r in rows):
        raise FormatError(f"{what} vectors must have length {n}")
    return Subspace.span([[_q(x) for x in r] for r in rows], n)


def _enc_subspace(s: Subspace) -> list:
    return [[fmt_q(x) for x in v] for v in s.vectors]


def _index(i, n: int, what: str) -> int:
    if not 0 <= i < n:
        raise FormatError(f"{what} index {i} out of range 0..{n - 1}")
    return i


def _lie(d: dict) -> LieAlgebra:
    n = d["dim"]
    names = tuple(d.get("basis") or [f"e{i}" for i in range(n)])
    if len(names) != n or len(set(names)) != n:
        raise FormatError("basis names must be distinct and match dim")
    data: dict = {}
    for i, j, k, v in d["brackets"]:
        key = (_index(i, n, "bracket"), _index(j, n, "bracket"), _index(k, n, "bracket"))
        if key in data:
            raise FormatError(f"duplicate bracket entry {list(key)}")
        data[key] = _q(v)
    return LieAlgebra(n, names, RationalTensor3.from_dict(n, data))


def _enc_lie(g: LieAlgebra) -> dict:
    entries = sorted(g.c.as_dict().items())
    return {
        "dim": g.dim,
        "basis": list(g.basis_names),
        "brackets": [[i, j, k, fmt_q(v)] for (i, j, k), v in entries if v],
    }


def _bivector(entries, g: LieAlgebra) -> Multivector:
    data: dict = {}
    for i, j, v in entries:
        key = (_index(i, g.dim, "bivector"), _index(j, g.dim, "bivector"))
        data[key] = data.get(key, 0) + _q(v)
    return Multivector.from_dict(g, 2, data)


def _enc_bivector(m: Multivector) -> list:
    return [[i, j, fmt_q(v)] for (i, j), v in m.components]


def _poly(terms, nvars: int) -> Poly:
    data: dict = {}
    for exps, v in terms:
        if len(exps) != nvars:
            raise FormatError(f"exponent vector {exps} must have length {nvars}")
        key = tuple(exps)
        data[key] = data.get(key, 0) + _q(v)
    return Poly.from_dict(nvars, data)


def _enc_poly(p: Poly) -> list:
    return [[list(e), fmt_q(c)] for e, c in p.terms]


def _cm(d: dict) -> CrossedModule:
    theta, a = _lie(d["theta"]), _lie(d["a"])
    phi = _matrix(d["phi"], a.dim, theta.dim, "phi")
    if len(d["action"]) != a.dim:
        raise FormatError("action needs one matrix per basis element of A")
    acts = tuple(_matrix(m, theta.dim, theta.dim, "action matrix") for m in d["action"])
    return CrossedModule(theta, a, LinearMap.of(phi), Representation(a, theta.dim, acts))


def _enc_cm(cm: CrossedModule) -> dict:
    return {
        "theta": _enc_lie(cm.theta),
        "a": _enc_lie(cm.a),
        "phi": _enc_matrix(cm.phi.matrix),
        "action": [_enc_matrix(m) for m in cm.act.action],
    }


def _vb(d: dict) -> TwoVect:
    side, core = d["side_dim"], d["core_dim"]
    return TwoVect.of(_matrix(d["delta"], side, core, "delta")) if side and core else TwoVect.zero(side, core)


# ---------------------------------------------------------------------------
# decode / encode


def from_dict(d: dict) -> Structure:
    """Validate against the schema and decode; raises :class:`FormatError`."""
    if not isinstance(d, dict):
        raise FormatError("top level must be an object")
    try:
        jsonschema.validate(d, schema())
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path)
        raise FormatError(f"schema violation at '{path}': {exc.message}") from exc
    try:
        return _decode(d)
    except FormatError:
        raise
    except (DimensionError, ValueError, IndexError, KeyError) as exc:
        raise FormatError(str(exc)) from exc


def _decode(d: dict) -> Structure:
    kind = d["kind"]
    name = d.get("name", "")
    extras: dict = {}
    if kind == "lie_algebra":
        obj = _lie(d)
    elif kind == "bialgebra":
        obj = LieBialgebra(_lie(d["g"]), _lie(d["gstar"]))
        if "rmatrix" in d:
            extras["rmatrix"] = _bivector(d["rmatrix"], obj.g)
    elif kind == "quadratic":
        g = _lie(d["algebra"])
        form = _matrix(d["form"], g.dim, g.dim, "form")
        if not form.is_symmetric():
            raise FormatError("form must be symmetric")
        obj = QuadraticLieAlgebra(g, BilinearForm(g.dim, form))
        for key in ("l1", "l2"):
            if key in d:
                extras[key] = _subspace(d[key], g.dim, key)
    elif kind == "two_vect":
        obj = _vb(d)
    elif kind == "crossed_module":
        obj = _cm(d)
        if "rmatrix" in d:
            extras["rmatrix"] = _bivector(d["rmatrix"], obj.theta)
    elif kind == "lie2_bialgebra":
        obj = Lie2Bialgebra(_cm(d["cm1"]), _cm(d["cm2"]))
        if "rmatrix" in d["cm1"]:
            extras["rmatrix"] = _bivector(d["cm1"]["rmatrix"], obj.cm1.theta)
    elif kind == "coquadratic":
        k = _lie(d["algebra"])
        obj = CoquadraticLieAlgebra(k, LinearMap.of(_matrix(d["del"], k.dim, k.dim, "del")))
        for key in ("l1", "l2"):
            if key in d:
                extras[key] = _subspace(d[key], k.dim, key)
    elif kind == "quadratic_lie2":
        g = _lie(d["algebra"])
        form = _matrix(d["form"], g.dim, g.dim, "form")
        if not form.is_symmetric():
            raise FormatError("form must be symmetric")
        vb = _vb(d)
        if vb.total_dim != g.dim:
            raise FormatError("core_dim + side_dim must equal the algebra dimension")
        obj = QuadraticLie2Algebra(QuadraticLieAlgebra(g, BilinearForm(g.dim, form)), vb)
        for key in ("l1", "l2"):
            if key in d:
                extras[key] = _subspace(d[key], g.dim, key)
    elif kind == "poly_algebroid":
        n, r = d["nvars"], d["rank"]
        if len(d["anchor"]) != r or any(len(row) != n for row in d["anchor"]):
            raise FormatError(f"anchor must be {r} x {n}")
        anchor = [[_poly(p, n) for p in row] for row in d["anchor"]]
        brackets = {}
        for i, j, coeffs in d.get("brackets", []):
            key = (_index(i, r, "bracket"), _index(j, r, "bracket"))
            if len(coeffs) != r:
                raise FormatError(f"bracket coefficients must have length {r}")
            if key in brackets:
                raise FormatError(f"duplicate bracket entry {list(key)}")
            brackets[key] = [_poly(p, n) for p in coeffs]
        obj = PolyLieAlgebroid.build(n, anchor, brackets, antisymmetrize=False)
        if "del" in d:
            if len(d["del"]) != r or any(len(row) != r for row in d["del"]):
                raise FormatError(f"del must be {r} x {r}")
            extras["del"] = tuple(tuple(_poly(p, n) for p in row) for row in d["del"])
    elif kind == "poly_bivector":
        n = d["nvars"]
        data: dict = {}
        for i, j, p in d["components"]:
            key = (_index(i, n, "component"), _index(j, n, "component"))
            data[key] = data.get(key, Poly.zero(n)) + _poly(p, n)
        obj = PolyMultivector.from_dict(n, 2, data)
    else:  # pragma: no cover - the schema rejects unknown kinds
        raise FormatError(f"unknown kind {kind!r}")
    return Structure(kind, obj, extras, name)


def to_dict(s: Structure) -> dict:
    """Encode in canonical form (sorted sparse entries, echelon subspaces)."""
    kind, obj, ex = s.kind, s.obj, s.extras
    out: dict = {"format_version": FORMAT_VERSION, "kind": kind}
    if s.name:
        out["name"] = s.name
    if kind == "lie_algebra":
        out.update(_enc_lie(obj))
    elif kind == "bialgebra":
        out["g"] = _enc_lie(obj.g)
        out["gstar"] = _enc_lie(obj.gstar)
        if "rmatrix" in ex:
            out["rmatrix"] = _enc_bivector(ex["rmatrix"])
    elif kind in ("quadratic", "quadratic_lie2"):
        q = obj if kind == "quadratic" else obj.total
        out["algebra"] = _enc_lie(q.algebra)
        out["form"] = _enc_matrix(q.form.matrix)
        if kind == "quadratic_lie2":
            out.update(side_dim=obj.vb.side_dim, core_dim=obj.vb.core_dim, delta=_enc_matrix(obj.vb.matrix))
    elif kind == "two_vect":
        out.update(side_dim=obj.side_dim, core_dim=obj.core_dim, delta=_enc_matrix(obj.matrix))
    elif kind == "crossed_module":
        out.update(_enc_cm(obj))
        if "rmatrix" in ex:
            out["rmatrix"] = _enc_bivector(ex["rmatrix"])
    elif kind == "lie2_bialgebra":
        out["cm1"] = _enc_cm(obj.cm1)
        out["cm2"] = _enc_cm(obj.cm2)
        if "rmatrix" in ex:
            out["cm1"]["rmatrix"] = _enc_bivector(ex["rmatrix"])
    elif kind == "coquadratic":
        out["algebra"] = _enc_lie(obj.k)
        out["del"] = _enc_matrix(obj.matrix)
    elif kind == "poly_algebroid":
        out.update(nvars=obj.nvars, rank=obj.rank)
        out["anchor"] = [[_enc_poly(p) for p in row] for row in obj.anchor]
        out["brackets"] = [[i, j, [_enc_poly(p) for p in cs]] for (i, j), cs in obj.brackets]
        if "del" in ex:
            out["del"] = [[_enc_poly(p) for p in row] for row in ex["del"]]
    elif kind == "poly_bivector":
        out["nvars"] = obj.nvars
        out["components"] = [[i, j, _enc_poly(p)] for (i, j), p in obj.components]
    else:
        raise FormatError(f"unknown kind {kind!r}")
    for key in ("l1", "l2"):
        if key in ex:
            out[key] = _enc_subspace(ex[key])
    return out


def dumps(s: Structure) -> str:
    return json.dumps(to_dict(s), indent=1, sort_keys=True) + "\n"


def loads(text: str) -> Structure:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return from_dict(d)


def load(path) -> Structure:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def save(s: Structure, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(s))


def digest_text(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()
