"""Cache integrity and the command-line surface."""

import io
import json

import pytest

from hookcensus import cache, cli, qseries
from hookcensus.partitions import PartitionClass, count_hooks


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("HOOK_CENSUS_CACHE", str(tmp_path / "cache"))
    return tmp_path / "cache"


def run_cli(*argv):
    out = io.StringIO()
    code = cli._DISPATCH[argv[0]](cli.build_parser().parse_args(list(argv)), out)
    return code, out.getvalue()


class TestCache:
    def test_round_trip(self, isolated_cache):
        entry = cache.CacheEntry.build("hook-counts", {"class": "odd"}, {"counts": [["1"]]})
        cache.store("probe", entry)
        loaded = cache.load("probe")
        assert loaded == entry
        assert (isolated_cache / "probe.json").exists()

    def test_digest_tampering_invalidates(self, isolated_cache):
        entry = cache.CacheEntry.build("hook-counts", {}, {"counts": [["1"]]})
        cache.store("probe", entry)
        path = isolated_cache / "probe.json"
        doc = json.loads(path.read_text())
        doc["payload"]["counts"][0][0] = "2"
        path.write_text(json.dumps(doc))
        assert cache.load("probe") is None

    def test_version_mismatch_invalidates(self, isolated_cache):
        entry = cache.CacheEntry.build("hook-counts", {}, {"counts": []})
        cache.store("probe", entry)
        path = isolated_cache / "probe.json"
        doc = json.loads(path.read_text())
        doc["version"] = cache.SCHEMA_VERSION + 1
        path.write_text(json.dumps(doc))
        assert cache.load("probe") is None

    def test_missing_entry(self):
        assert cache.load("never-stored") is None


class TestTable:
    def test_csv_matches_oracle(self):
        code, text = run_cli("table", "--class", "odd", "--h", "1..3",
                             "--n", "0..10", "--source", "oracle", "--format", "csv")
        assert code == 0
        lines = text.strip().splitlines()
        assert lines[0] == "class,h,n,count"
        assert len(lines) == 1 + 3 * 11
        for line in lines[1:]:
            tag, h, n, value = line.split(",")
            assert tag == "odd"
            assert int(value) == count_hooks(PartitionClass.ODD, int(h), int(n))

    def test_sources_agree(self):
        code, _ = run_cli("table", "--class", "distinct", "--h", "1..4",
                          "--n", "0..16", "--source", "both")
        assert code == 0

    def test_json_round_trips_through_cache_loader(self):
        code, text = run_cli("table", "--class", "odd", "--h", "1..2",
                             "--n", "0..6", "--source", "series", "--format", "json")
        assert code == 0
        entry = cache.CacheEntry.from_document(json.loads(text))
        assert entry is not None
        assert entry.payload["counts"][0][4] == "3"  # one-hooks of 4

    def test_cache_hit_produces_identical_bytes(self):
        first = run_cli("table", "--class", "odd", "--h", "1..2", "--n", "0..12")
        second = run_cli("table", "--class", "odd", "--h", "1..2", "--n", "0..12")
        fresh = run_cli("table", "--class", "odd", "--h", "1..2", "--n", "0..12",
                        "--no-cache")
        assert first == second == fresh

    def test_empty_range_is_usage_error(self):
        code, _ = run_cli("table", "--class", "odd", "--h", "3..1", "--n", "0..5")
        assert code == cli.EXIT_USAGE

    def test_series_source_needs_a_series_class(self):
        code, _ = run_cli("table", "--class", "selfconjugate", "--h", "1..2",
                          "--n", "0..5", "--source", "series")
        assert code == cli.EXIT_USAGE

    def test_order_cap(self):
        code, _ = run_cli("table", "--class", "odd", "--h", "1..1",
                          "--n", "0..5000", "--source", "series")
        assert code == cli.EXIT_USAGE

    def test_integrity_failure_is_distinguished(self, monkeypatch):
        # a lying series engine must surface as exit 3, not as a silent grid
        def corrupt(cls, h, order):
            return tuple([0] * (order + 1))

        monkeypatch.setattr(cli.asymptotics, "exact_hook_counts", corrupt)
        code, _ = run_cli("table", "--class", "odd", "--h", "1..1", "--n", "0..6",
                          "--source", "both", "--no-cache")
        assert code == cli.EXIT_INTEGRITY


class TestVerify:
    @pytest.mark.parametrize("argv", [
        ("verify", "gf", "--h-max", "3", "--n-max", "12"),
        ("verify", "identities", "--order", "20", "--limit", "3",
         "--euler-order", "60"),
        ("verify", "constants", "--h-max", "6"),
        ("verify", "balanced", "--n-max", "12"),
        ("verify", "andrews", "--n-max", "25"),
        ("verify", "nekrasov", "--n-max", "8", "--z", "0,1,2"),
    ])
    def test_suites_pass(self, argv):
        code, text = run_cli(*argv)
        assert code == 0
        assert "PASS" in text and "FAIL" not in text

    def test_failures_are_printed_with_values(self, monkeypatch):
        def lying_gf(h, order):
            return qseries.FormalSeries([7] * (order + 1), order)

        monkeypatch.setattr(cli.qseries, "hook_gf_odd", lying_gf)
        code, text = run_cli("verify", "gf", "--h-max", "1", "--n-max", "4")
        assert code == cli.EXIT_CHECK_FAILED
        assert "FAIL odd h=1 n=0: series=7 oracle=0" in text


class TestReportCommands:
    def test_constants_csv(self):
        code, text = run_cli("constants", "--h-max", "4", "--format", "csv")
        assert code == 0
        lines = text.strip().splitlines()
        assert lines[0] == "h,alpha,beta_r,beta_s,gamma"
        assert lines[2].startswith("2,3/4,1/2,0/1,1.5")
        assert len(lines) == 5

    def test_constants_json_deterministic(self):
        first = run_cli("constants", "--h-max", "6", "--format", "json")
        second = run_cli("constants", "--h-max", "6", "--format", "json")
        assert first == second
        docs = json.loads(first[1])
        assert [d["h"] for d in docs] == list(range(1, 7))
        assert docs[1]["gamma"] == "1.5"

    def test_asymptotics_csv(self):
        code, text = run_cli("asymptotics", "--h", "1,2", "--n", "50,100",
                             "--class", "odd", "--format", "csv")
        assert code == 0
        lines = text.strip().splitlines()
        assert lines[0] == "formula,h,n_or_z,predicted,observed,ratio"
        assert len(lines) == 5
        for line in lines[1:]:
            fields = line.split(",")
            assert fields[0] == "odd-main-term"
            assert 0.5 < float(fields[5]) < 1.5

    def test_asymptotics_json(self):
        code, text = run_cli("asymptotics", "--h", "1", "--n", "30,60",
                             "--class", "distinct", "--format", "json")
        assert code == 0
        doc = json.loads(text)
        assert len(doc["rows"]) == 2
        assert doc["non_monotone"] == []

    def test_asymptotics_validation(self):
        code, _ = run_cli("asymptotics", "--h", "1", "--n", "0,10", "--class", "odd")
        assert code == cli.EXIT_USAGE

    def test_conjectures_json(self):
        code, text = run_cli("conjectures", "--m-max", "3", "--n-max", "16",
                             "--ratio-h", "2")
        assert code == 0
        docs = json.loads(text)
        names = [d["conjecture"] for d in docs]
        assert names == ["selfconjugate-even-hook-divisibility",
                         "selfconjugate-distinctodd-bijection",
                         "starred-balanced-identity",
                         "starred-ratio-trend"]
        assert all(d["counterexamples"] == [] for d in docs)

    def test_plot_outputs(self, tmp_path):
        plot_dir = tmp_path / "figs"
        code, _ = run_cli("constants", "--h-max", "4", "--plot-dir", str(plot_dir))
        assert code == 0
        code, _ = run_cli("asymptotics", "--h", "1", "--n", "30,60",
                          "--class", "odd", "--plot-dir", str(plot_dir))
        assert code == 0
        code, _ = run_cli("conjectures", "--m-max", "2", "--n-max", "12",
                          "--ratio-h", "2", "--plot-dir", str(plot_dir))
        assert code == 0
        produced = {p.name for p in plot_dir.iterdir()}
        assert produced == {"constants.png", "convergence_odd.png", "star_ratio.png"}
        assert all((plot_dir / name).stat().st_size > 0 for name in produced)


class TestMainEntry:
    def test_unknown_command_is_usage_error(self, capsys):
        assert cli.main(["no-such-verb"]) == cli.EXIT_USAGE
        capsys.readouterr()

    def test_main_runs_table(self, capsys):
        assert cli.main(["table", "--class", "odd", "--h", "1..1", "--n", "0..4",
                         "--no-cache"]) == 0
        captured = capsys.readouterr()
        assert captured.out.splitlines()[0] == "class,h,n,count"

    def test_verbose_banner_goes_to_stderr(self, capsys):
        assert cli.main(["constants", "--h-max", "2", "--verbose"]) == 0
        captured = capsys.readouterr()
        assert "hookcensus constants" in captured.err
        assert "hookcensus" not in captured.out
