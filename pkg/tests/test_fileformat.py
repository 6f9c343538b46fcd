import copy
import json
import random

import pytest
from hypothesis import given, settings

from helpers import seeds
from maninkit import catalog
from maninkit.coquad import coquad_to_ca
from maninkit.fileformat import (
    FORMAT_VERSION,
    FormatError,
    Structure,
    digest_text,
    dumps,
    from_dict,
    load,
    loads,
    save,
    schema,
    to_dict,
)
from maninkit.generate import (
    random_bialgebra,
    random_bivector,
    random_coquadratic,
    random_crossed_module,
    random_lie2bialgebra,
    random_lie_algebra,
    random_twovect,
)


def aff1_payload():
    return copy.deepcopy(catalog.entry("aff1").payload)


class TestRoundTrip:
    @pytest.mark.parametrize("name", catalog.names())
    def test_catalog_entries(self, name):
        payload = catalog.entry(name).payload
        s = from_dict(payload)
        assert s.kind == payload["kind"]
        assert to_dict(s) == payload
        assert to_dict(loads(dumps(s))) == payload

    @settings(max_examples=10)
    @given(seeds())
    def test_generated(self, seed):
        rng = random.Random(seed)
        structures = [
            Structure("lie_algebra", random_lie_algebra(rng, 4)),
            Structure("bialgebra", random_bialgebra(rng, 3)),
            Structure("crossed_module", random_crossed_module(rng, 3)),
            Structure("lie2_bialgebra", random_lie2bialgebra(rng, 2)),
            Structure("coquadratic", random_coquadratic(rng, 3)),
            Structure("two_vect", random_twovect(rng, rng.randint(0, 3), rng.randint(0, 3))),
            Structure("poly_bivector", random_bivector(rng, 3, 2)),
        ]
        cq = random_coquadratic(rng, 2)
        structures.append(Structure("quadratic_lie2", coquad_to_ca(cq)))
        for s in structures:
            text = dumps(s)
            again = loads(text)
            assert again.obj == s.obj
            assert dumps(again) == text

    def test_deterministic_text(self):
        s = catalog.load_structure("sl2_double")
        assert dumps(s) == dumps(catalog.load_structure("sl2_double"))
        assert digest_text(dumps(s)).startswith("sha256:")

    def test_file_io(self, tmp_path):
        s = catalog.load_structure("coquad_sl2")
        path = tmp_path / "x.json"
        save(s, path)
        assert load(path).obj == s.obj


class TestErrors:
    def test_zero_denominator(self):
        p = aff1_payload()
        p["brackets"][0][3] = "1/0"
        with pytest.raises(FormatError):
            from_dict(p)

    @pytest.mark.parametrize("bad", ["0.5", "1e2", "x", "", "1/-2"])
    def test_malformed_rational(self, bad):
        p = aff1_payload()
        p["brackets"][0][3] = bad
        with pytest.raises(FormatError):
            from_dict(p)

    def test_number_instead_of_string(self):
        p = aff1_payload()
        p["brackets"][0][3] = 1
        with pytest.raises(FormatError):
            from_dict(p)

    def test_version(self):
        p = aff1_payload()
        p["format_version"] = FORMAT_VERSION + 1
        with pytest.raises(FormatError):
            from_dict(p)

    def test_unknown_kind(self):
        p = aff1_payload()
        p["kind"] = "groupoid"
        with pytest.raises(FormatError):
            from_dict(p)

    def test_index_out_of_range(self):
        p = aff1_payload()
        p["brackets"][0][2] = 2
        with pytest.raises(FormatError):
            from_dict(p)

    def test_basis_length(self):
        p = aff1_payload()
        p["basis"] = ["x"]
        with pytest.raises(FormatError):
            from_dict(p)

    def test_duplicate_names(self):
        p = aff1_payload()
        p["basis"] = ["x", "x"]
        with pytest.raises(FormatError):
            from_dict(p)

    def test_missing_field(self):
        p = aff1_payload()
        del p["brackets"]
        with pytest.raises(FormatError):
            from_dict(p)

    def test_not_json(self):
        with pytest.raises(FormatError):
            loads("{not json")

    def test_matrix_shape(self):
        p = copy.deepcopy(catalog.entry("coquad_sl2").payload)
        p["del"] = p["del"][:2]
        with pytest.raises(FormatError):
            from_dict(p)


class TestLiteral:
    def test_brackets_not_antisymmetrized(self):
        p = aff1_payload()
        p["brackets"] = [b for b in p["brackets"] if b[0] == 0]
        s = from_dict(p)
        assert s.obj.c[1, 0, 1] == 0
        assert to_dict(s)["brackets"] == p["brackets"]

    def test_subspaces_canonical(self):
        p = copy.deepcopy(catalog.entry("sl2_double").payload)
        p["l1"] = [["2"] + ["0"] * 5, ["1", "1"] + ["0"] * 4, ["0", "0", "3"] + ["0"] * 3]
        s = from_dict(p)
        assert to_dict(s)["l1"] == catalog.entry("sl2_double").payload["l1"]


def test_schema_is_json_schema():
    s = schema()
    assert s["$schema"].startswith("https://json-schema.org/")
    json.dumps(s)
