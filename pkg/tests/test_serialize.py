"""
JSON dumps: structures reload to the same constants; malformed documents are FormatError.
"""
import json

import pytest

from qhopf import presets
from qhopf.constructions import verify_structure
from qhopf.errors import FormatError
from qhopf.serialize import (
    cochain_from_json,
    cochain_to_json,
    dumps,
    load_json,
    load_structure,
    quasihopf_to_json,
    save_json,
    structure_from_json,
    structure_to_json,
)
from qhopf.transmute import BraidedGroup, transmute


class TestQuasiHopfDumps:

    def test_reload_keeps_constants_and_axioms(self, dz2, tmp_path):
        path = tmp_path / "dz2.json"
        save_json(structure_to_json(dz2), str(path))
        H = load_structure(str(path))
        assert dumps(quasihopf_to_json(H)) == dumps(quasihopf_to_json(dz2))
        assert H.group.order == 2
        assert H.r_function is None
        assert verify_structure(H, "reloaded")["passed"]

    def test_kphi_keeps_r_function(self, kz2):
        H = structure_from_json(json.loads(dumps(structure_to_json(kz2))))
        assert H.r_function is not None
        assert H.r_function(1, 1) == kz2.r_function(1, 1)

    def test_dump_is_deterministic(self, dz2):
        assert dumps(structure_to_json(dz2)) == dumps(structure_to_json(dz2))

    def test_braided_group_reloads_with_its_host(self, dz2):
        Hbar = transmute(dz2, verify=False)
        B = structure_from_json(json.loads(dumps(structure_to_json(Hbar))))
        assert isinstance(B, BraidedGroup)
        assert B.dim == dz2.dim
        assert B.carrier.algebra.dim == dz2.dim


class TestMalformed:

    def test_missing_file(self, tmp_path):
        with pytest.raises(FormatError, match="no such file"):
            load_json(str(tmp_path / "absent.json"))

    def test_garbage(self, tmp_path):
        path = tmp_path / "garbage.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(FormatError, match="not valid JSON"):
            load_json(str(path))

    def test_unknown_kind(self):
        with pytest.raises(FormatError, match="unknown structure kind"):
            structure_from_json({"kind": "spreadsheet"})
        with pytest.raises(FormatError):
            structure_from_json([1, 2, 3])

    def test_index_out_of_range(self, dz2):
        data = quasihopf_to_json(dz2)
        data["unit"] = {"legs": data["unit"]["legs"], "entries": [[99, data["unit"]["entries"][0][-1]]]}
        with pytest.raises(FormatError, match="outside legs"):
            structure_from_json(data)

    def test_missing_map(self, dz2):
        data = quasihopf_to_json(dz2)
        del data["mult"]
        with pytest.raises(FormatError, match="missing structure map"):
            structure_from_json(data)

    def test_short_cochain(self):
        G, phi, _ = presets.materials("z2")
        data = cochain_to_json(phi)
        data["values"] = data["values"][:-1]
        with pytest.raises(FormatError, match="no value"):
            cochain_from_json(G, data)

    def test_map_row_outside_its_spaces(self, dz2):
        data = quasihopf_to_json(dz2)
        row = data["antipode"][0]
        data["antipode"][0] = [7, *row[1:]]
        with pytest.raises(FormatError, match="outside its spaces"):
            structure_from_json(data)

    def test_non_numeric_cochain_row(self):
        G, phi, _ = presets.materials("z2")
        data = cochain_to_json(phi)
        data["values"][0] = ["a", 0, 0, data["values"][0][-1]]
        with pytest.raises(FormatError, match="bad cochain row"):
            cochain_from_json(G, data)

    def test_group_dump_without_cocycle(self, dz2):
        data = quasihopf_to_json(dz2)
        del data["cocycle"]
        with pytest.raises(FormatError, match="cocycle"):
            structure_from_json(data)
