"""Tests des campagnes de benchmark de bout en bout (petites tailles)."""

import pytest

pytest.importorskip("mip")

from app.application.pipelines.benchmark_pipeline import BenchmarkPipeline, companion_path
from app.domain.value_objects.benchmark import CSV_COLUMNS
from app.domain.value_objects.solve_config import Linearization, Method, SolveConfig
from app.infrastructure.generators.families import get_family
from app.infrastructure.generators.instance_generator import generate_family, with_size
from app.infrastructure.storage.results_writer import read_results

pytestmark = pytest.mark.solver


@pytest.fixture
def small_instances():
    spec = with_size(get_family("Sen_200_20"), m=8, n=3, capacities=(3,))
    return generate_family(spec, seed=11, instances_per_cell=1)


async def test_run_benchmark(tmp_path, small_instances):
    out = tmp_path / "results.csv"
    pipeline = BenchmarkPipeline(workers=2, backend_name="cbc")
    configs = [SolveConfig(method=Method.CP), SolveConfig(method=Method.BRUTE)]
    records, summary = await pipeline.run_benchmark(small_instances, configs, out, time_limit=60)

    assert len(records) == len(small_instances) * 2
    frame = read_results(out)
    assert list(frame.columns) == list(CSV_COLUMNS)
    assert len(frame) == len(records)
    assert set(frame["status"]) == {"optimal"}
    for instance, rows in frame.groupby("instance"):
        assert rows["objective"].max() - rows["objective"].min() < 1e-5
    assert companion_path(out, "summary").is_file()
    assert summary["instances"].sum() == len(records)


async def test_empty_campaign_writes_header(tmp_path, small_instances):
    out = tmp_path / "empty.csv"
    records, summary = await BenchmarkPipeline(workers=1).run_benchmark(small_instances, [], out)
    assert records == []
    assert summary.empty
    assert read_results(out).empty


async def test_failed_run_becomes_error_row(tmp_path, small_instances):
    out = tmp_path / "errors.csv"
    configs = [SolveConfig(method=Method.CP, segments=5), SolveConfig(method=Method.GREEDY)]
    records, _ = await BenchmarkPipeline(workers=2).run_benchmark(small_instances[:1], configs, out)
    statuses = {record.method: record.status for record in records}
    assert statuses == {"cp": "error", "greedy": "heuristic"}


async def test_configs_differing_only_in_linearization(tmp_path, small_instances):
    out = tmp_path / "linearizations.csv"
    configs = [
        SolveConfig(method=Method.MILP, linearization=Linearization.MCCORMICK),
        SolveConfig(method=Method.MILP, linearization=Linearization.BIGM),
    ]
    records, summary = await BenchmarkPipeline(workers=2).run_benchmark(small_instances[:1], configs, out)
    assert len(records) == 2 == len(read_results(out))
    assert summary["instances"].sum() == 2
    assert records[0].objective == pytest.approx(records[1].objective, abs=1e-6)


async def test_sweep_segments(tmp_path, small_instances):
    out = tmp_path / "sweep.csv"
    pipeline = BenchmarkPipeline(workers=2)
    records, pivot = await pipeline.sweep_segments(
        small_instances[:1], out, segments=[1, 3, 50], methods=(Method.CP,)
    )
    assert sorted(record.L for record in records) == [1, 3]
    assert list(pivot.columns) == [1, 3]
    assert companion_path(out, "pivot").is_file()
