import csv
import json
from pathlib import Path

import pytest

from ama import evaluate, parse_layout
from ama.cli import main
from reference_data import PUBLISHED_ROWS, avs_for_page

FIXTURES = Path(__file__).parent / "fixtures"
CENTERED = str(FIXTURES / "centered.json")
GOLDEN = str(FIXTURES / "golden_pair.json")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEvaluate:
    def test_json_output_centered(self, capsys):
        code, out, err = run(capsys, "evaluate", CENTERED, "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "balance": 1.0,
            "equilibrium": 1.0,
            "symmetry": 1.0,
            "sequence": 1.0,
            "rhythm": 1.0,
            "av": 1.0,
        }

    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "evaluate", CENTERED, "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "label,balance,equilibrium,symmetry,sequence,rhythm,av"
        assert lines[1] == "centered,1.0000,1.0000,1.0000,1.0000,1.0000,1.0000"

    def test_table_default(self, capsys):
        code, out, _ = run(capsys, "evaluate", CENTERED)
        assert code == 0
        assert "balance" in out and "av" in out

    def test_missing_file_exits_1(self, capsys):
        code, out, err = run(capsys, "evaluate", "does-not-exist.json")
        assert code == 1
        assert err != ""
        assert out == ""

    def test_invalid_layout_exits_1(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"schema_version":1,"frame":{"width":100,"height":100},'
                       '"objects":[{"id":"a","x":90,"y":0,"w":20,"h":5}]}')
        code, _, err = run(capsys, "evaluate", str(bad))
        assert code == 1
        assert "a" in err


class TestUsageErrors:
    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "transmogrify")[0] == 2

    def test_unknown_flag(self, capsys):
        assert run(capsys, "evaluate", CENTERED, "--frobnicate")[0] == 2

    def test_no_arguments(self, capsys):
        assert main([]) == 2


class TestBatchAndRank:
    @pytest.fixture()
    def corpus(self, tmp_path):
        for name, src in (("alpha", CENTERED), ("beta", GOLDEN)):
            (tmp_path / f"{name}.json").write_text(Path(src).read_text())
        return tmp_path

    def test_batch_csv(self, capsys, corpus):
        code, out, _ = run(capsys, "batch", str(corpus), "--format", "csv")
        assert code == 0
        rows = out.splitlines()
        assert rows[0].startswith("label,")
        assert rows[1].startswith("alpha,1.0000")
        assert rows[2].startswith("beta,0.6000")

    def test_batch_deterministic(self, capsys, corpus):
        first = run(capsys, "batch", str(corpus), "--format", "csv")
        second = run(capsys, "batch", str(corpus), "--format", "csv")
        assert first == second

    def test_batch_out_file_then_rank(self, capsys, corpus, tmp_path):
        results = tmp_path / "results.csv"
        code, out, _ = run(capsys, "batch", str(corpus), "--format", "csv", "--out", str(results))
        assert code == 0 and out == ""
        code, out, _ = run(capsys, "rank", str(results), "--column", "av", "--format", "csv")
        assert code == 0
        rows = out.splitlines()
        assert rows[0] == "label,av,rank"
        assert rows[1].split(",") == ["alpha", "1.0", "1"]
        assert rows[2].split(",")[0] == "beta"
        assert rows[2].split(",")[2] == "2"

    def test_rank_published_avs_per_page(self, capsys, tmp_path):
        for page in ("main", "learning", "exercise"):
            results = tmp_path / f"{page}.csv"
            lines = ["label,av"] + [f"{lbl},{av}" for lbl, av in avs_for_page(page)]
            results.write_text("\n".join(lines) + "\n")
            code, out, _ = run(capsys, "rank", str(results), "--column", "av", "--format", "csv")
            assert code == 0
            got = [row.split(",") for row in out.splitlines()[1:]]
            assert [g[0] for g in got] == [f"g{i}-{page}" for i in (1, 2, 3, 4)]
            assert [g[2] for g in got] == ["1", "2", "3", "4"]

    def test_rank_missing_column(self, capsys, tmp_path):
        results = tmp_path / "r.csv"
        results.write_text("label,av\na,1.0\n")
        assert run(capsys, "rank", str(results), "--column", "nope")[0] == 1


class TestIngestCli:
    def pgm(self, tmp_path):
        rows = [[255] * 50 for _ in range(40)]
        for y in range(5, 15):
            for x in range(10, 30):
                rows[y][x] = 0
        body = "\n".join(" ".join(str(v) for v in r) for r in rows)
        path = tmp_path / "model.pgm"
        path.write_bytes(f"P2\n50 40\n255\n{body}\n".encode())
        return path

    def test_ingest_stdout(self, capsys, tmp_path):
        code, out, _ = run(capsys, "ingest", str(self.pgm(tmp_path)))
        assert code == 0
        layout = parse_layout(out)
        assert [(o.id, o.x, o.y, o.w, o.h) for o in layout.objects] == [("obj1", 10, 5, 20, 10)]
        assert layout.frame.width == 50

    def test_ingest_out_file(self, capsys, tmp_path):
        target = tmp_path / "layout.json"
        code, out, _ = run(capsys, "ingest", str(self.pgm(tmp_path)), "--out", str(target))
        assert code == 0 and out == ""
        assert parse_layout(target.read_text()).objects[0].id == "obj1"

    def test_ingest_empty_exits_1(self, capsys, tmp_path):
        path = tmp_path / "blank.pgm"
        path.write_bytes(b"P2\n4 4\n255\n" + b"255 " * 16)
        assert run(capsys, "ingest", str(path))[0] == 1

    def test_ingest_threshold_flags(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "ingest", str(self.pgm(tmp_path)), "--threshold", "300", "--min-area", "1"
        )
        # everything below 300 is foreground: one frame-sized object
        assert code == 0
        layout = parse_layout(out)
        assert len(layout.objects) == 1
        assert layout.objects[0].w == 50


class TestOptimizeCli:
    def test_maximize_json_and_artifacts(self, capsys, tmp_path):
        best = tmp_path / "best.json"
        trace = tmp_path / "trace.csv"
        code, out, _ = run(
            capsys,
            "optimize",
            GOLDEN,
            "--maximize",
            "--seed",
            "3",
            "--iters",
            "300",
            "--format",
            "json",
            "--out",
            str(best),
            "--trace",
            str(trace),
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["rng"] == "mt19937"
        assert payload["evaluations"] >= 1
        optimized = parse_layout(best.read_text())
        assert evaluate(optimized).av == pytest.approx(payload["measures"]["av"])
        with open(trace) as f:
            rows = list(csv.DictReader(f))
        scores = [float(r["best_score"]) for r in rows]
        assert scores == sorted(scores)

    def test_byte_identical_output_for_same_seed(self, capsys):
        args = ("optimize", GOLDEN, "--maximize", "--seed", "9", "--iters", "200", "--format", "json")
        assert run(capsys, *args) == run(capsys, *args)

    def test_target_av(self, capsys):
        code, out, _ = run(
            capsys, "optimize", GOLDEN, "--target-av", "0.6", "--iters", "150", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["best_score"] <= 0.0

    def test_target_vector(self, capsys):
        code, out, _ = run(
            capsys,
            "optimize",
            GOLDEN,
            "--target",
            "0.6,0.9,0.4,0.6,0.4",
            "--iters",
            "100",
            "--format",
            "json",
        )
        assert code == 0

    def test_weights_wrong_arity_exits_1(self, capsys):
        code, _, err = run(capsys, "optimize", GOLDEN, "--maximize", "--weights", "1,2")
        assert code == 1
        assert "five" in err

    def test_objective_flags_mutually_exclusive(self, capsys):
        code, _, _ = run(capsys, "optimize", GOLDEN, "--maximize", "--target-av", "0.5")
        assert code == 2


class TestAnovaCli:
    def write_csv(self, tmp_path):
        path = tmp_path / "data.csv"
        rows = ["group,value"]
        rows += [f"g1,{v}" for v in (1, 2, 3)]
        rows += [f"g2,{v}" for v in (4, 5, 6)]
        path.write_text("\n".join(rows) + "\n")
        return path

    def test_json_output(self, capsys, tmp_path):
        code, out, _ = run(capsys, "anova", str(self.write_csv(tmp_path)), "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["df_between"] == 1
        assert payload["df_within"] == 4
        assert payload["f_value"] == pytest.approx(13.5)

    def test_table_output(self, capsys, tmp_path):
        code, out, _ = run(capsys, "anova", str(self.write_csv(tmp_path)))
        assert code == 0
        assert "13.5" in out

    def test_bad_schema_exits_1(self, capsys, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("cohort,score\na,1\n")
        assert run(capsys, "anova", str(path))[0] == 1


class TestCompareRanksCli:
    def test_published_rankings_rho(self, capsys, tmp_path):
        a = tmp_path / "application.csv"
        b = tmp_path / "perception.csv"
        a.write_text("label,rank\ng1,1\ng2,2\ng3,3\ng4,4\n")
        b.write_text("label,rank\ng1,1\ng2,3\ng3,2\ng4,4\n")
        code, out, _ = run(capsys, "compare-ranks", str(a), str(b), "--format", "json")
        assert code == 0
        assert json.loads(out)["spearman_rho"] == pytest.approx(0.8)

    def test_label_mismatch_exits_1(self, capsys, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        a.write_text("label,rank\nx,1\n")
        b.write_text("label,rank\ny,1\n")
        assert run(capsys, "compare-ranks", str(a), str(b))[0] == 1
