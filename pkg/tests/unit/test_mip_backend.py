"""Tests du filtrage des lignes paresseuses du backend CBC."""

import pytest

pytest.importorskip("mip")

from app.infrastructure.solvers import mip_backend
from app.infrastructure.solvers.base import LinearRow, Sense
from app.infrastructure.solvers.mip_backend import translatable_rows


class _RecordingLogger:
    def __init__(self):
        self.records = []

    def debug(self, message, **kwargs):
        self.records.append((message, kwargs))


def test_rows_with_untranslated_variables_are_logged(monkeypatch):
    recorder = _RecordingLogger()
    monkeypatch.setattr(mip_backend, "logger", recorder)
    local = {"x0": object(), "t0": object()}
    complete = LinearRow(terms={"x0": 1.0, "t0": -1.0}, sense=Sense.LE, rhs=0.0, name="oa_0")
    partial = LinearRow(terms={"x0": 1.0, "x7": 2.0, "t9": 1.0}, sense=Sense.GE, rhs=1.0, name="oa_1")

    kept = translatable_rows([complete, partial], local, call=3)

    assert kept == [complete]
    assert len(recorder.records) == 1
    message, context = recorder.records[0]
    assert message == "Ligne paresseuse ignorée"
    assert context == {"call": 3, "row": "oa_1", "missing": ["t9", "x7"]}


def test_all_rows_kept_without_logging(monkeypatch):
    recorder = _RecordingLogger()
    monkeypatch.setattr(mip_backend, "logger", recorder)
    row = LinearRow(terms={"x0": 1.0}, sense=Sense.EQ, rhs=1.0)
    assert translatable_rows([row], {"x0": object()}) == [row]
    assert recorder.records == []
