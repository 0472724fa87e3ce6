"""
Command-line front end: exit status 0 on pass, 1 on a failed check, 2 on bad input.
"""
import json

import pytest

from qhopf.cli import main


def _json_out(capsys):
    return json.loads(capsys.readouterr().out)


class TestExitCodes:

    def test_suite_passes(self, capsys):
        assert main(["suite", "--preset", "trivial-z2", "--suite", "axioms", "--json"]) == 0
        report = _json_out(capsys)
        assert report["passed"] is True
        assert report["preset"] == "trivial-z2"

    def test_build_then_verify(self, tmp_path, capsys):
        path = str(tmp_path / "dz2.json")
        assert main(["build", "dqd", "--preset", "z2", "--output", path]) == 0
        capsys.readouterr()
        assert main(["verify", "--input", path, "--json"]) == 0
        assert _json_out(capsys)["passed"] is True

    def test_failed_check_exits_1(self, tmp_path, capsys):
        path = str(tmp_path / "dz2.json")
        main(["build", "dqd", "--preset", "z2", "--output", path])
        data = json.loads(open(path, encoding="utf-8").read())
        # negate one coefficient of φ
        row = data["phi"]["entries"][0]
        data["phi"]["entries"][0] = [*row[:-1], [row[-1][0], [f"-{c}" if not c.startswith("-") else c[1:]
                                                          for c in row[-1][1]]]]
        with open(path, "w", encoding="utf-8") as f:
            json.dump(data, f)
        capsys.readouterr()
        assert main(["verify", "--input", path]) == 1

    def test_garbage_input_exits_2(self, tmp_path, capsys):
        path = tmp_path / "garbage.json"
        path.write_text("[[[", encoding="utf-8")
        assert main(["verify", "--input", str(path)]) == 2
        assert "error" in capsys.readouterr().err

    def test_missing_input_exits_2(self, tmp_path):
        assert main(["verify", "--input", str(tmp_path / "nothing.json")]) == 2

    def test_construction_error_exits_2(self, capsys):
        assert main(["build", "kphi", "--preset", "s3", "--json"]) == 2
        assert _json_out(capsys)["error"] == "FormatError"

    def test_unknown_preset_is_a_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["suite", "--preset", "z7"])
        assert exc.value.code == 2

    def test_missing_command(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2


class TestOutput:

    def test_json_is_reproducible(self, capsys):
        main(["suite", "--preset", "z2", "--suite", "chi", "--json", "--seed", "5"])
        first = capsys.readouterr().out
        main(["suite", "--preset", "z2", "--suite", "chi", "--json", "--seed", "5"])
        assert capsys.readouterr().out == first

    def test_text_report_lists_informational_tables(self, capsys):
        assert main(["suite", "--preset", "z2", "--suite", "transmute"]) == 0
        out = capsys.readouterr().out
        assert "(informational)" in out
        assert "agreement_pct" in out

    def test_iso_check_chi(self, capsys):
        assert main(["iso-check", "chi", "--preset", "trivial-z2", "--json"]) == 0
        assert _json_out(capsys)["passed"] is True

    def test_dump_prints_structure(self, capsys):
        assert main(["dump", "kg", "--preset", "cyclic-3"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["kind"] == "quasitriangular"


class TestBuild:

    def test_report_fields_with_output(self, tmp_path, capsys):
        path = tmp_path / "dz2.json"
        assert main(["build", "dqd", "--preset", "z2", "--output", str(path), "--json"]) == 0
        report = _json_out(capsys)
        assert report["name"] == "build"
        assert report["object"] == "dqd"
        assert report["dim"] == 4
        assert report["algebra"]
        assert "structure" not in report
        assert json.loads(path.read_text(encoding="utf-8"))["kind"] == "quasitriangular"

    def test_report_carries_structure_without_output(self, capsys):
        assert main(["build", "kphi", "--preset", "z2", "--json"]) == 0
        report = _json_out(capsys)
        assert report["dim"] == 2
        assert report["structure"]["kind"] == "quasitriangular"
        assert report["structure"]["r_function"]

    @pytest.mark.parametrize("obj", ["dqd", "kphi", "kg", "transmuted"])
    def test_every_object_builds(self, obj, capsys):
        assert main(["build", obj, "--preset", "z2", "--json"]) == 0
        assert _json_out(capsys)["object"] == obj

    def test_bad_cocycle_argument_exits_2(self, capsys):
        assert main(["build", "dqd", "--group", '{"cyclic": [2]}', "--cocycle", "sign:a,b", "--json"]) == 2
        assert _json_out(capsys)["error"] == "FormatError"


class TestErrorHandling:

    def test_programming_errors_are_not_reported_as_bad_input(self, monkeypatch):
        def broken(args):
            raise TypeError("broken command")

        monkeypatch.setattr("qhopf.cli.cmd_suite", broken)
        with pytest.raises(TypeError):
            main(["suite", "--preset", "trivial-z2"])

    def test_unwritable_output_exits_2(self, tmp_path, capsys):
        target = str(tmp_path / "missing" / "dz2.json")
        assert main(["build", "dqd", "--preset", "z2", "--output", target]) == 2
        assert "error" in capsys.readouterr().err
