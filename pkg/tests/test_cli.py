import io
import json

from threshold_spectra import cli


def run_cli(*argv):
    out = io.StringIO()
    err = io.StringIO()
    code = cli.run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run_cli(*argv, "--json")
    return code, json.loads(out), err


class TestInfo:
    def test_ten_vertex_example(self):
        code, record, _ = run_json("info", "(0^2 1^3 0^3 1^2)")
        assert code == 0
        results = record["results"]
        assert results["n"] == 10
        assert results["edges"] == 26
        assert results["m0"] == 3
        assert results["m_minus1"] == 3

    def test_human_output(self):
        code, out, _ = run_cli("info", "01")
        assert code == 0
        assert "energy" in out

    def test_disconnected_rejected(self):
        code, _, err = run_cli("info", "010")
        assert code == 2
        assert err.startswith("error:")


class TestCharpoly:
    def test_single_edge_with_oracle(self):
        code, record, _ = run_json("charpoly", "01", "--oracle")
        assert code == 0
        results = record["results"]
        assert results["char_poly"] == [-1, 0, 1]
        assert results["determinant_poly"] == [-1, 0, 1]
        assert results["verdict"] == "equal"

    def test_formula_only(self):
        code, record, _ = run_json("charpoly", "(0^2 1^3 0^3 1^2)")
        assert code == 0
        assert len(record["results"]["char_poly"]) == 11


class TestEnergy:
    def test_complete_fourteen(self):
        code, record, _ = run_json("energy", "(0^1 1^13)")
        assert code == 0
        band = record["results"]["energy"]
        assert band["lo"].startswith("25.9999") or band["lo"].startswith("26.0000")
        assert band["hi"].startswith("26.0000")

    def test_custom_precision(self):
        code, record, _ = run_json("energy", "001", "--precision", "1e-3")
        assert code == 0

    def test_bad_precision(self):
        code, _, err = run_cli("energy", "01", "--precision", "0")
        assert code == 2
        assert "error:" in err

    def test_bad_sequence(self):
        code, _, err = run_cli("energy", "10")
        assert code == 2
        assert "error:" in err


class TestFamily:
    def test_pair_emission(self):
        code, record, _ = run_json("family", "four", "--i", "1")
        assert code == 0
        results = record["results"]
        assert results["n"] == 14
        assert results["g"] == "(0^3 1^6 0^3 1^2)"
        assert results["g_prime"] == "(0^4 1^3 0^3 1^4)"

    def test_verified_pair_passes(self):
        code, record, _ = run_json("family", "four", "--i", "1", "--verify")
        assert code == 0
        assert record["results"]["verification"]["ok"] is True
        assert record["results"]["cubic_roots"]["ok"] is True

    def test_six_block_verify(self):
        code, record, _ = run_json("family", "six", "--i", "1", "--verify")
        assert code == 0
        assert "cubic_roots" not in record["results"]

    def test_bad_parameter(self):
        code, _, err = run_cli("family", "four", "--i", "0")
        assert code == 2
        assert "error:" in err


class TestHunt:
    def test_small_order(self):
        code, record, _ = run_json("hunt", "--n", "10")
        assert code == 0
        results = record["results"]
        assert results["stats"]["graphs"] == 256
        for cls in results["classes"]:
            assert len(cls["members"]) >= 2

    def test_borderenergetic_mode(self):
        code, record, _ = run_json("hunt", "--n", "9", "--borderenergetic")
        assert code == 0
        assert record["results"]["borderenergetic"] == [
            "(0^1 1^1 0^1 1^6)", "(0^1 1^4 0^1 1^3)"]

    def test_csv_export(self, tmp_path):
        path = tmp_path / "rows.csv"
        code, _, _ = run_json("hunt", "--n", "6", "--csv", str(path))
        assert code == 0
        lines = path.read_text().strip().splitlines()
        assert lines[0] == "sequence,energy_lo,energy_hi,char_poly,class_id"
        assert len(lines) == 1 + 16

    def test_guard(self):
        code, _, err = run_cli("hunt", "--n", "30")
        assert code == 2
        assert "allow_large" in err


class TestSelftest:
    def test_subset_passes(self):
        code, out, _ = run_cli("selftest", "--criteria", "4,11")
        assert code == 0
        assert out.count("PASS") == 2

    def test_unknown_criterion(self):
        code, _, err = run_cli("selftest", "--criteria", "99")
        assert code == 2
        assert "error:" in err


class TestContract:
    def test_json_round_trips_byte_identical(self):
        _, out, _ = run_cli("energy", "0011", "--json")
        record = json.loads(out)
        again = json.dumps(record, indent=2, sort_keys=True) + "\n"
        assert again == out

    def test_deterministic_modulo_timing(self):
        _, first, _ = run_cli("info", "(0^2 1^3 0^3 1^2)", "--json")
        _, second, _ = run_cli("info", "(0^2 1^3 0^3 1^2)", "--json")
        a = json.loads(first)
        b = json.loads(second)
        a.pop("timing_seconds")
        b.pop("timing_seconds")
        assert a == b

    def test_usage_error_exit_code(self):
        code, _, _ = run_cli("definitely-not-a-command")
        assert code == 2

    def test_version_flag(self):
        code, _, _ = run_cli("--version")
        assert code == 0
