import os

import pytest

from qgraphlab.cli import main
from qgraphlab.datastore import read_dataset, read_qaoa_results


@pytest.fixture()
def n4_run(tmp_path):
    """A tiny but complete pipeline run at four vertices."""
    g6 = str(tmp_path / "n4.g6")
    props = str(tmp_path / "props.csv")
    qaoa = str(tmp_path / "qaoa.csv")
    assert main(["graphs", "gen", "--n", "4", "--out", g6]) == 0
    assert main(["props", "--in", g6, "--out", props]) == 0
    assert main(["qaoa", "--in", g6, "--p", "2", "--starts", "8", "--seed", "3",
                 "--out", qaoa, "--workers", "1"]) == 0
    return tmp_path, g6, props, qaoa


class TestGraphsCommands:
    def test_count(self, capsys):
        assert main(["graphs", "count", "--n", "5"]) == 0
        assert capsys.readouterr().out.strip() == "21"

    def test_count_seven(self, capsys):
        assert main(["graphs", "count", "--n", "7"]) == 0
        assert capsys.readouterr().out.strip() == "853"

    def test_gen_lines(self, tmp_path):
        out = tmp_path / "n5.g6"
        assert main(["graphs", "gen", "--n", "5", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 21
        assert all(lines[i] <= lines[i + 1] for i in range(20))

    def test_bad_n(self, capsys):
        assert main(["graphs", "count", "--n", "12"]) == 2
        assert "error" in capsys.readouterr().err


class TestPipeline:
    def test_props_contents(self, n4_run):
        _, _, props, _ = n4_run
        rows = read_dataset(props)
        assert len(rows) == 6
        assert {r.graph_id for r in rows} == set(range(1, 7))

    def test_qaoa_contents(self, n4_run):
        _, _, _, qaoa = n4_run
        rows = read_qaoa_results(qaoa)
        assert len(rows) == 18  # six graphs, depths 0..2
        best = max(rows, key=lambda r: (r.p, r.exp_c))
        assert best.starts == 8 and best.seed == 3

    def test_c4_depth2_row(self, n4_run):
        _, _, props, qaoa = n4_run
        eulerian_id = next(r.graph_id for r in read_dataset(props) if r.eulerian)
        row = next(r for r in read_qaoa_results(qaoa)
                   if r.graph_id == eulerian_id and r.p == 2)
        assert row.exp_c == pytest.approx(4.0, abs=1e-3)
        assert row.prob_cmax == pytest.approx(1.0, abs=1e-3)

    def test_rerun_is_byte_identical(self, n4_run, tmp_path):
        _, g6, _, qaoa = n4_run
        again = str(tmp_path / "qaoa2.csv")
        assert main(["qaoa", "--in", g6, "--p", "2", "--starts", "8", "--seed", "3",
                     "--out", again, "--workers", "2"]) == 0
        assert open(qaoa, "rb").read() == open(again, "rb").read()

    def test_analyze_corr(self, n4_run):
        tmp, _, props, qaoa = n4_run
        out = str(tmp / "corr.csv")
        assert main(["analyze", "corr", "--props", props, "--qaoa", qaoa, "--out", out]) == 0
        lines = open(out).read().splitlines()
        assert lines[0] == "n,p,property,metric,r,sample_size"
        assert len(lines) == 1 + 10 * 4 * 3  # properties x metrics x depths

    def test_analyze_avg(self, n4_run):
        tmp, _, props, qaoa = n4_run
        out = str(tmp / "avg.csv")
        assert main(["analyze", "avg", "--props", props, "--qaoa", qaoa,
                     "--flag", "bipartite", "--out", out]) == 0
        lines = open(out).read().splitlines()
        assert len(lines) == 1 + 2 * 3

    def test_analyze_avg_requires_flag(self, n4_run, capsys):
        tmp, _, props, qaoa = n4_run
        code = main(["analyze", "avg", "--props", props, "--qaoa", qaoa,
                     "--out", str(tmp / "avg.csv")])
        assert code == 2
        assert "--flag" in capsys.readouterr().err

    def test_analyze_hist(self, n4_run):
        tmp, _, props, qaoa = n4_run
        out = str(tmp / "hist.csv")
        assert main(["analyze", "hist", "--props", props, "--qaoa", qaoa,
                     "--flag", "eulerian", "--bins", "10", "--out", out]) == 0
        lines = open(out).read().splitlines()
        assert lines[0] == "bin_lo,bin_hi,subgroup,fraction"
        assert len(lines) == 1 + 2 * 10

    def test_analyze_rejects_results_for_missing_sizes(self, n4_run, capsys):
        # results containing a vertex count absent from the props file must
        # fail loudly instead of pairing graph ids across sizes
        from qgraphlab.datastore import write_qaoa_results

        tmp, _, props, qaoa = n4_run
        g6_3 = str(tmp / "n3.g6")
        qaoa3 = str(tmp / "qaoa3.csv")
        assert main(["graphs", "gen", "--n", "3", "--out", g6_3]) == 0
        assert main(["qaoa", "--in", g6_3, "--p", "1", "--starts", "2",
                     "--out", qaoa3, "--workers", "1"]) == 0
        merged = str(tmp / "merged.csv")
        write_qaoa_results(read_qaoa_results(qaoa) + read_qaoa_results(qaoa3), merged)
        code = main(["analyze", "corr", "--props", props, "--qaoa", merged,
                     "--out", str(tmp / "c.csv")])
        assert code == 2

    def test_analyze_signs_needs_depth3(self, n4_run, capsys):
        tmp, _, props, qaoa = n4_run
        code = main(["analyze", "signs", "--props", props, "--qaoa", qaoa,
                     "--out", str(tmp / "signs.csv")])
        assert code == 2
        assert "1..3" in capsys.readouterr().err


class TestExitCodes:
    def test_missing_input_is_3(self, tmp_path, capsys):
        code = main(["props", "--in", str(tmp_path / "nope.g6"),
                     "--out", str(tmp_path / "x.csv")])
        assert code == 3
        assert "missing input" in capsys.readouterr().err

    def test_bad_record_is_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.g6"
        bad.write_text("A_\nC\x1b~\n")
        code = main(["props", "--in", str(bad), "--out", str(tmp_path / "x.csv")])
        assert code == 2

    def test_mixed_sizes_is_2(self, tmp_path, capsys):
        mixed = tmp_path / "mixed.g6"
        mixed.write_text("A_\nC~\n")
        code = main(["props", "--in", mixed.as_posix(), "--out", str(tmp_path / "x.csv")])
        assert code == 2
        assert "one vertex count" in capsys.readouterr().err

    def test_bad_depth_is_2(self, tmp_path):
        g6 = tmp_path / "n4.g6"
        assert main(["graphs", "gen", "--n", "4", "--out", str(g6)]) == 0
        assert main(["qaoa", "--in", str(g6), "--p", "5", "--starts", "2",
                     "--out", str(tmp_path / "x.csv")]) == 2

    def test_config_defaults_applied(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("starts=4\nseed=11\nworkers=1\n")
        g6 = tmp_path / "n4.g6"
        out = tmp_path / "q.csv"
        assert main(["graphs", "gen", "--n", "4", "--out", str(g6)]) == 0
        assert main(["--config", str(cfg), "qaoa", "--in", str(g6), "--p", "1",
                     "--out", str(out)]) == 0
        rows = read_qaoa_results(str(out))
        assert rows[0].starts == 4 and rows[0].seed == 11
