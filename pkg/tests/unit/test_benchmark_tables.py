"""Tests des tableaux agrégés des campagnes."""

import math

import pandas as pd
import pytest

from app.application.pipelines.benchmark_pipeline import (
    companion_path,
    pivot_segments,
    ratio_experiment,
    records_frame,
    summarize,
)
from app.domain.value_objects.benchmark import BenchmarkRecord


def _record(instance, method, status, time_s, L=0):
    return BenchmarkRecord(
        instance=instance,
        family="F",
        v0=1.0,
        alpha=2.0,
        method=method,
        master="li",
        cuts="oa",
        L=L,
        status=status,
        time_s=time_s,
    )


def test_summary_counts_only_solved_times():
    frame = records_frame(
        [
            _record("a", "cp", "optimal", 2.0),
            _record("b", "cp", "optimal", 4.0),
            _record("c", "cp", "feasible-limit", 60.0),
            _record("a", "bc", "error", 0.5),
        ]
    )
    summary = summarize(frame).set_index("method")
    assert summary.loc["cp", "instances"] == 3
    assert summary.loc["cp", "solved"] == 2
    assert summary.loc["cp", "mean_time_s"] == pytest.approx(3.0)
    assert summary.loc["bc", "solved"] == 0
    assert math.isnan(summary.loc["bc", "mean_time_s"])


def test_empty_summary():
    summary = summarize(records_frame([]))
    assert summary.empty
    assert "mean_time_s" in summary.columns


def test_pivot_by_segments():
    frame = records_frame(
        [
            _record("a", "cp", "optimal", 1.0, L=1),
            _record("b", "cp", "optimal", 3.0, L=1),
            _record("a", "bc", "optimal", 5.0, L=1),
        ]
    )
    pivot = pivot_segments(frame)
    assert list(pivot.columns) == [1]
    assert pivot.loc["cp", 1] == pytest.approx(2.0)


def test_companion_path(tmp_path):
    assert companion_path(tmp_path / "results.csv", "summary") == tmp_path / "results_summary.csv"


def test_ratio_experiment(tmp_path):
    frame = ratio_experiment(12, seed=3, n=3, m=8, capacity=3, out_path=tmp_path / "ratio.csv")
    assert len(frame) == 12
    assert (frame["revenue_ratio"].between(0.25, 0.9)).all()
    assert (frame["ratio"] >= frame["bound"] - 1e-12).all()
    assert (frame["ratio"] <= 1.0 + 1e-12).all()
    assert pd.read_csv(tmp_path / "ratio.csv").shape == frame.shape
