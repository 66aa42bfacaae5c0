import csv
import json
import math

import pytest

from foxopt.cli import main, make_config, parse_config_file
from foxopt.core import ConfigError
from foxopt.harness import ExperimentConfig, resolve_problem, resolve_suite, run_experiment


def small_config(tmp_path, **kw):
    base = dict(algorithms=["mfox", "fox"], problems=["F16", "spring"], runs=3, pop=6,
                max_iterations=15, base_seed=4, output_dir=tmp_path)
    base.update(kw)
    return ExperimentConfig(**base)


def read_csv(path):
    with open(path) as fh:
        return list(csv.reader(fh))


def test_resolve_suite():
    assert resolve_suite("classical")[0] == "F1" and len(resolve_suite("classical")) == 23
    assert resolve_suite("engineering") == ["spring", "vessel", "compressor", "bearing"]
    assert resolve_suite("F1, F2 ,vessel") == ["F1", "F2", "vessel"]


def test_resolve_problem_errors():
    with pytest.raises(ConfigError):
        resolve_problem("F0")


def test_config_validation():
    with pytest.raises(ConfigError):
        ExperimentConfig(algorithms=["pso"]).validate()
    with pytest.raises(ConfigError):
        ExperimentConfig(problems=["nope"]).validate()
    with pytest.raises(ConfigError):
        ExperimentConfig(runs=0).validate()


def test_outputs_written(tmp_path):
    bundle = run_experiment(small_config(tmp_path))
    rows = read_csv(tmp_path / "summary.csv")
    assert rows[0] == ["problem", "algorithm", "avg", "std", "best", "worst", "rank"]
    assert [r[:2] for r in rows[1:]] == [["F16", "mfox"], ["F16", "fox"], ["spring", "mfox"], ["spring", "fox"]]
    wil = read_csv(tmp_path / "wilcoxon.csv")
    assert wil[0] == ["problem", "algorithm", "vs_mfox", "vs_fox"]
    assert wil[1][2] == "-" and wil[2][3] == "-"
    trace = read_csv(tmp_path / "traces" / "mfox_F16.csv")
    assert trace[0] == ["iteration", "mean_best", "min_best", "max_best"]
    assert len(trace) == 16
    for row in trace[1:]:
        lo, mean, hi = float(row[2]), float(row[1]), float(row[3])
        assert lo <= mean <= hi
    data = json.loads((tmp_path / "bundle.json").read_text())
    assert len(data["results"]) == 4
    cell = bundle.cell("F16", "mfox")
    assert data["results"][0]["finals"] == cell.finals


def test_seed_of_run_k_is_base_plus_k(tmp_path):
    from foxopt.benchmarks import make_benchmark
    from foxopt.core import RunConfig
    from foxopt.mfox import mfox_run

    bundle = run_experiment(small_config(tmp_path, problems=["F16"]), write=False)
    expected = [mfox_run(make_benchmark("F16"), RunConfig(6, 15, None, 4 + k)).best_fitness for k in range(3)]
    assert bundle.cell("F16", "mfox").finals == expected


def test_reruns_are_byte_identical_and_parallel_matches(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run_experiment(small_config(a))
    run_experiment(small_config(b, parallel=2))
    for name in ["summary.csv", "wilcoxon.csv", "traces/fox_spring.csv", "traces/mfox_F16.csv"]:
        assert (a / name).read_bytes() == (b / name).read_bytes()
    ja, jb = (json.loads((d / "bundle.json").read_text()) for d in (a, b))
    assert ja["results"] == jb["results"]


def test_identical_samples_write_nan(tmp_path):
    # F1 collapses to exactly 0 for both algorithms given enough iterations
    cfg = small_config(tmp_path, problems=["F1"], pop=10, max_iterations=300)
    bundle = run_experiment(cfg)
    assert set(bundle.cell("F1", "mfox").finals) == {0.0}
    assert set(bundle.cell("F1", "fox").finals) == {0.0}
    wil = read_csv(tmp_path / "wilcoxon.csv")
    assert wil[1][3] == "NaN" and wil[2][2] == "NaN"
    assert math.isnan(bundle.cell("F1", "mfox").p_values["fox"])


def test_budget_truncated_traces(tmp_path):
    bundle = run_experiment(small_config(tmp_path, problems=["F16"], fe_budget=50), write=False)
    cell = bundle.cell("F16", "fox")
    # 6 initial evaluations, then 44 spread over 8 sweeps (the last partial)
    assert len(cell.trace_mean) == 8


def test_partial_results_written_on_failure(tmp_path, monkeypatch):
    import foxopt.harness as h

    real = h._make_cell

    def failing(algo, pid, records):
        if pid == "spring":
            raise RuntimeError("boom")
        return real(algo, pid, records)

    monkeypatch.setattr(h, "_make_cell", failing)
    with pytest.raises(RuntimeError):
        run_experiment(small_config(tmp_path))
    rows = read_csv(tmp_path / "summary.csv")
    assert {r[0] for r in rows[1:]} == {"F16"}


class TestCli:
    def test_config_file_and_flag_override(self, tmp_path):
        cfg_file = tmp_path / "exp.cfg"
        cfg_file.write_text("# demo\nalgo = mfox\nsuite = F16\nruns = 2\niters = 10\npop = 5\nseed = 9\n"
                            f"out = {tmp_path / 'out'}\n")
        assert main(["--config", str(cfg_file), "--runs", "1"]) == 0
        rows = read_csv(tmp_path / "out" / "summary.csv")
        assert rows[1][:2] == ["F16", "mfox"]
        data = json.loads((tmp_path / "out" / "bundle.json").read_text())
        assert data["config"]["runs"] == 1 and data["config"]["base_seed"] == 9

    def test_parse_errors(self, tmp_path):
        bad = tmp_path / "bad.cfg"
        bad.write_text("runs: 3\n")
        with pytest.raises(ConfigError):
            parse_config_file(bad)
        bad.write_text("colour = red\n")
        with pytest.raises(ConfigError):
            parse_config_file(bad)
        bad.write_text("runs = many\n")
        with pytest.raises(ConfigError):
            parse_config_file(bad)

    @pytest.mark.parametrize("argv", [
        ["--algo", "pso"],
        ["--suite", "F42"],
        ["--runs", "0"],
        ["--parallel", "0"],
        ["--config", "/nonexistent/file.cfg"],
        ["--pop", "1"],
    ])
    def test_nonzero_exit_on_bad_config(self, argv, tmp_path, capsys):
        assert main(argv + ["--out", str(tmp_path)]) == 2
        assert "error" in capsys.readouterr().err

    def test_make_config_defaults(self):
        cfg = make_config({})
        assert cfg.runs == 30 and cfg.pop == 30 and cfg.max_iterations == 1000
        assert cfg.fe_budget is None and len(cfg.problems) == 23
