"""
Tests for result export
"""
import json

import pandas as pd

from src.models.results import CheckResult, Summary, Verdict
from src.storage import ResultExporter

RESULTS = [
    CheckResult(suite="cocycle", item="cocycle case=g", verdict=Verdict.PASS, elapsed=0.5),
    CheckResult(suite="g-quantization", item="closed-form x=d", verdict=Verdict.PASS),
    CheckResult(suite="g-quantization", item="closed-form x=e[0,0]", verdict=Verdict.DISCREPANCY,
                source="paper", detail="t^2 at e[0,0]⊗1: 0 != q",
                oracle="e[0,0]⊗1 + 1⊗e[0,0] + O(t^3)"),
]


def test_summary_table_counts_per_suite():
    table = ResultExporter.summary_table(RESULTS)
    assert list(table.index) == ["cocycle", "g-quantization"]
    assert table.loc["g-quantization", "pass"] == 1
    assert table.loc["g-quantization", "paper-discrepancy"] == 1
    assert table.loc["cocycle", "fail"] == 0
    assert list(table["total"]) == [1, 2]


def test_empty_summary_table():
    table = ResultExporter.summary_table([])
    assert table.empty
    assert "total" in table.columns


def test_export_all(tmp_path):
    exporter = ResultExporter(tmp_path)
    paths = exporter.export_all(RESULTS, Summary.from_results(RESULTS))
    assert len(paths) == 3

    jsonl, csv, summary = paths
    lines = open(jsonl, encoding="utf-8").read().splitlines()
    assert [json.loads(line)["verdict"] for line in lines] == ["pass", "pass", "paper-discrepancy"]

    frame = pd.read_csv(csv)
    assert list(frame.columns) == ["suite", "item", "verdict", "source", "detail", "oracle", "elapsed"]
    assert len(frame) == 3
    assert frame["oracle"].iloc[2] == "e[0,0]⊗1 + 1⊗e[0,0] + O(t^3)"
    assert frame["oracle"].isna().iloc[:2].all()

    data = json.load(open(summary, encoding="utf-8"))
    assert data["total"] == 3
    assert data["table"]["g-quantization"]["paper-discrepancy"] == 1


def test_named_files(tmp_path):
    exporter = ResultExporter(tmp_path / "nested")
    path = exporter.to_jsonl(RESULTS[:1], "one.jsonl")
    assert path.endswith("one.jsonl")
    assert (tmp_path / "nested" / "one.jsonl").exists()
