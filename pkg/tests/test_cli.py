"""End-to-end command-line behaviour, exit codes, and the orbit cache."""

import json
import shutil
import subprocess

import pytest

from origami_h2 import cli

COUNTS_HEADER = "n,total,formula_total,a_count,a_formula,b_count,b_formula,match"


def run(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestCounts:
    def test_csv(self, capsys, tmp_path):
        rc, out, _ = run(capsys, "--cache-dir", str(tmp_path), "counts", "3", "5")
        assert rc == 0
        assert out.splitlines() == [
            COUNTS_HEADER,
            "3,3,3,,,,,true",
            "4,9,9,,,,,true",
            "5,27,27,18,18,9,9,true",
        ]

    def test_json(self, capsys, tmp_path):
        rc, out, _ = run(
            capsys, "--cache-dir", str(tmp_path), "--format", "json", "counts", "4", "6"
        )
        assert rc == 0
        doc = json.loads(out)
        assert doc["schema_version"] == 1
        by_n = {r["n"]: r for r in doc["reports"]}
        assert set(by_n) == {4, 5, 6}
        assert by_n[5]["a_count"] == 18 and by_n[5]["b_count"] == 9
        assert by_n[4]["a_count"] is None
        assert by_n[6]["one_cylinder"] + by_n[6]["two_cylinder"] == 36
        assert all(r["match"] is True for r in doc["reports"])

    @pytest.mark.parametrize("lo,hi", [("2", "5"), ("5", "4")])
    def test_bad_range(self, capsys, tmp_path, lo, hi):
        rc, out, err = run(capsys, "--cache-dir", str(tmp_path), "counts", lo, hi)
        assert rc == 2
        assert out == ""
        assert "invalid range" in err


class TestOrbit:
    def test_summary_n3(self, capsys, tmp_path):
        rc, out, _ = run(capsys, "--cache-dir", str(tmp_path), "orbit", "L(2,2)")
        assert rc == 0
        doc = json.loads(out)
        assert doc == {
            "schema_version": 1,
            "n": 3,
            "size": 3,
            "cusp_widths": [1, 2],
            "level": 2,
            "invariant": 1,
        }

    def test_even_n_has_no_invariant(self, capsys, tmp_path):
        rc, out, _ = run(capsys, "--cache-dir", str(tmp_path), "orbit", "L(2,3)")
        assert rc == 0
        doc = json.loads(out)
        assert doc["n"] == 4 and doc["size"] == 9 and doc["level"] == 12
        assert doc["invariant"] is None

    def test_three_weierstrass_orbit(self, capsys, tmp_path):
        rc, out, _ = run(capsys, "--cache-dir", str(tmp_path), "orbit", "L(3,3)")
        assert rc == 0
        doc = json.loads(out)
        assert doc["size"] == 9 and doc["level"] == 15 and doc["invariant"] == 3

    def test_rejects_other_stratum(self, capsys, tmp_path):
        rc, out, err = run(
            capsys, "--cache-dir", str(tmp_path), "orbit", "2cyl(1,1,2,2,0,0)"
        )
        assert rc == 3
        assert out == "" and "unsupported surface" in err

    def test_rejects_imprimitive(self, capsys, tmp_path):
        rc, _, err = run(capsys, "--cache-dir", str(tmp_path), "orbit", "1cyl(2,2,2;0;1)")
        assert rc == 3
        assert "not a primitive" in err

    def test_rejects_garbage(self, capsys, tmp_path):
        rc, _, err = run(capsys, "--cache-dir", str(tmp_path), "orbit", "wedge(1,2)")
        assert rc == 2
        assert "cannot parse" in err

    def test_respects_orbit_bound(self, capsys, tmp_path):
        rc, _, err = run(
            capsys, "--cache-dir", str(tmp_path), "--max-orbit-n", "3", "orbit", "L(2,4)"
        )
        assert rc == 2
        assert "exceeds" in err


class TestNoncong:
    def test_certificate_c4(self, capsys, tmp_path):
        rc, out, _ = run(capsys, "--cache-dir", str(tmp_path), "noncong", "C", "4")
        assert rc == 0
        doc = json.loads(out)
        assert doc["verdict"] == "noncongruence"
        assert (doc["k"], doc["k_prime"]) == (2, 4)
        assert doc["d"] == 9 and doc["delta"] == 48
        assert doc["m"] == 3 and doc["level"] == 12
        assert doc["orbit_label"] == "C" and doc["n"] == 4
        assert "|" in doc["surface_key"]

    def test_inconclusive_n3(self, capsys, tmp_path):
        rc, out, _ = run(capsys, "--cache-dir", str(tmp_path), "noncong", "A", "3")
        assert rc == 4
        assert out.strip() == "inconclusive"

    def test_bad_parity(self, capsys, tmp_path):
        rc, _, err = run(capsys, "--cache-dir", str(tmp_path), "noncong", "C", "3")
        assert rc == 2
        assert "C_n needs even n >= 4" in err

    def test_respects_orbit_bound(self, capsys, tmp_path):
        rc, _, err = run(
            capsys, "--cache-dir", str(tmp_path), "--max-orbit-n", "5", "noncong", "B", "7"
        )
        assert rc == 2
        assert "exceeds" in err

    def test_unknown_label_is_usage_error(self, capsys, tmp_path):
        with pytest.raises(SystemExit) as exc_info:
            cli.main(["--cache-dir", str(tmp_path), "noncong", "D", "5"])
        assert exc_info.value.code == 2


class TestBadcases:
    GOLDEN = [
        "n,d_factored,delta_factored",
        "9,3^4,2^3*3*5",
        "15,2^4*3^3,2^6*3^2*5^2*11",
        "21,2^4*3^4,2^8*3^3*5*17",
        "27,2^2*3^6,2^7*3^2*5^4*11*23",
        "51,2^8*3^4,2^8*3^2*5^4*23*47",
    ]

    def test_csv(self, capsys, tmp_path):
        rc, out, _ = run(capsys, "--cache-dir", str(tmp_path), "badcases")
        assert rc == 0
        assert out.splitlines() == self.GOLDEN

    def test_json(self, capsys, tmp_path):
        rc, out, _ = run(capsys, "--cache-dir", str(tmp_path), "--format", "json", "badcases")
        assert rc == 0
        rows = json.loads(out)["rows"]
        assert rows[0] == {"n": 9, "d_factored": "3^4", "delta_factored": "2^3*3*5"}
        assert [r["n"] for r in rows] == [9, 15, 21, 27, 51]


class TestVerify:
    @pytest.mark.parametrize("suite", ["orbits", "levels", "invariant"])
    def test_suites_pass(self, capsys, tmp_path, suite):
        rc, out, _ = run(capsys, "--cache-dir", str(tmp_path), "verify", suite, "7")
        assert rc == 0
        lines = out.splitlines()
        assert lines and all(line.startswith("ok n=") for line in lines)
        # the invariant sweep only reports odd n
        want_ns = [3, 5, 7] if suite == "invariant" else [3, 4, 5, 6, 7]
        assert [int(line.split("=")[1].split(":")[0]) for line in lines] == want_ns

    def test_rejects_tiny_n_max(self, capsys, tmp_path):
        rc, _, err = run(capsys, "--cache-dir", str(tmp_path), "verify", "levels", "2")
        assert rc == 2
        assert "need n_max >= 3" in err

    def test_respects_orbit_bound(self, capsys, tmp_path):
        rc, _, err = run(capsys, "--cache-dir", str(tmp_path), "verify", "orbits", "30")
        assert rc == 2
        assert "exceeds" in err


class TestCache:
    def orbit_files(self, cache_dir):
        manifest = json.loads((cache_dir / "manifest.json").read_text())
        return {e["orbit_file"] for e in manifest["entries"].values()}

    def test_second_run_hits(self, capsys, tmp_path):
        rc1, out1, _ = run(capsys, "--cache-dir", str(tmp_path), "orbit", "L(2,4)")
        files = self.orbit_files(tmp_path)
        assert rc1 == 0 and len(files) == 1
        payload = (tmp_path / files.pop()).read_bytes()

        rc2, out2, _ = run(capsys, "--cache-dir", str(tmp_path), "orbit", "L(2,4)")
        assert rc2 == 0 and out2 == out1
        assert (tmp_path / self.orbit_files(tmp_path).pop()).read_bytes() == payload

    def test_same_orbit_different_seed(self, capsys, tmp_path):
        # S maps L(2,4) to (a relabelling of) this two-cylinder surface, so
        # both seeds must report the identical orbit
        _, out1, _ = run(capsys, "--cache-dir", str(tmp_path), "orbit", "L(2,4)")
        _, out2, _ = run(
            capsys, "--cache-dir", str(tmp_path), "orbit", "2cyl(3,1,1,2,0,0)"
        )
        assert out1 == out2
        assert len(self.orbit_files(tmp_path)) == 1

    def test_corrupt_file_is_recomputed(self, capsys, tmp_path):
        _, out1, _ = run(capsys, "--cache-dir", str(tmp_path), "orbit", "L(2,4)")
        name = self.orbit_files(tmp_path).pop()
        (tmp_path / name).write_bytes(b'{"schema_version": 1}')
        rc, out2, _ = run(capsys, "--cache-dir", str(tmp_path), "orbit", "L(2,4)")
        assert rc == 0 and out2 == out1
        # the recompute healed the cache in place
        data = (tmp_path / name).read_bytes()
        assert b'"t_edges"' in data

    def test_env_var_fallback(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("ORIGAMI_H2_CACHE", str(tmp_path / "envcache"))
        rc, _, _ = run(capsys, "orbit", "L(2,2)")
        assert rc == 0
        assert (tmp_path / "envcache" / "manifest.json").exists()


class TestGlobalFlags:
    def test_threads_must_be_positive(self, tmp_path):
        with pytest.raises(SystemExit) as exc_info:
            cli.main(["--cache-dir", str(tmp_path), "--threads", "0", "counts", "3", "3"])
        assert exc_info.value.code == 2

    def test_threads_accepted(self, capsys, tmp_path):
        rc, out, _ = run(
            capsys, "--cache-dir", str(tmp_path), "--threads", "4", "counts", "3", "3"
        )
        assert rc == 0 and "3,3,3" in out

    def test_max_orbit_n_floor(self, tmp_path):
        with pytest.raises(SystemExit) as exc_info:
            cli.main(["--cache-dir", str(tmp_path), "--max-orbit-n", "2", "badcases"])
        assert exc_info.value.code == 2


def test_console_script_installed():
    exe = shutil.which("origami-h2")
    assert exe is not None
    proc = subprocess.run([exe, "--help"], capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert "counts" in proc.stdout and "noncong" in proc.stdout
