"""Tests du stockage des instances et du CSV de résultats."""

import asyncio

import pytest

from app.core.exceptions import InstanceError, StorageError
from app.domain.value_objects.benchmark import CSV_COLUMNS, BenchmarkRecord
from app.infrastructure.storage.instance_store import InstanceStore, read_text, write_text
from app.infrastructure.storage.results_writer import HEADER_COMMENT, ResultsWriter, read_results


async def test_save_and_load(tmp_path, t1_c1):
    store = InstanceStore(tmp_path)
    path = await store.save(t1_c1, "T1", "t1_c1")
    assert path == tmp_path / "T1" / "t1_c1.json"
    loaded = await store.load(path)
    assert loaded.to_document() == t1_c1.to_document()
    assert await store.list_files("T1") == [path]
    assert await store.list_files("absent") == []


async def test_load_errors(tmp_path):
    store = InstanceStore(tmp_path)
    with pytest.raises(StorageError):
        await store.load(tmp_path / "missing.json")
    bad = await write_text(tmp_path / "bad.json", '{"n": 1}')
    with pytest.raises(InstanceError):
        await store.load(bad)
    assert await read_text(bad) == '{"n": 1}'


async def test_results_header_only(tmp_path):
    writer = ResultsWriter(tmp_path / "out.csv")
    await writer.open()
    text = (tmp_path / "out.csv").read_text(encoding="utf-8")
    assert text.splitlines() == [HEADER_COMMENT, ",".join(CSV_COLUMNS)]
    frame = read_results(tmp_path / "out.csv")
    assert list(frame.columns) == list(CSV_COLUMNS)
    assert frame.empty


async def test_concurrent_appends(tmp_path):
    writer = ResultsWriter(tmp_path / "out.csv")
    await writer.open()
    records = [
        BenchmarkRecord(instance=f"i{k}", family="F", method="cp", status="optimal", objective=1.0 + k, time_s=0.1)
        for k in range(20)
    ]
    await asyncio.gather(*(writer.append(record) for record in records))
    frame = read_results(tmp_path / "out.csv")
    assert writer.rows_written == 20
    assert sorted(frame["instance"]) == sorted(r.instance for r in records)
    assert frame["nodes"].isna().all()


def test_record_row_order():
    record = BenchmarkRecord(instance="a", family="F", method="bc", master="li", cuts="oa", status="optimal")
    row = record.as_row()
    assert len(row) == len(CSV_COLUMNS)
    assert row[CSV_COLUMNS.index("master")] == "li"
    assert row[CSV_COLUMNS.index("objective")] == ""
