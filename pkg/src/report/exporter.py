"""
报告导出：json / csv / markdown / text
"""

import csv
import io
import json
from typing import Any, List, Union

from src.enums.report_def import OutputFormat
from src.errors import ReportFormatError
from src.report.schemas import CheckRecord, PaperReport

CSV_HEAD = ["suite", "check_id", "anchor", "provenance", "status", "margin", "computed", "expected", "detail"]


def _compact(value: Any) -> str:
    return json.dumps(value, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def _margin(record: CheckRecord) -> str:
    return "" if record.margin is None else f"{record.margin:.3e}"


def _row(record: CheckRecord) -> List[str]:
    return [
        record.suite,
        record.check_id,
        record.anchor,
        record.provenance.value,
        record.status.value,
        _margin(record),
        _compact(record.computed),
        _compact(record.expected),
        record.detail,
    ]


def to_json(report: PaperReport) -> str:
    return json.dumps(report.model_dump(mode="json"), ensure_ascii=False, sort_keys=True, indent=2) + "\n"


def to_csv(report: PaperReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEAD)
    for record in report.records:
        writer.writerow(_row(record))
    return buffer.getvalue()


def _cell(text: str) -> str:
    return text.replace("|", "\\|").replace("\n", " ")


def to_markdown(report: PaperReport) -> str:
    """每个套件一张表"""
    lines = [f"# {report.tool} report (schema {report.schema_version})", ""]
    s = report.summary
    lines.append(f"总计 {s.total}，通过 {s.passed}，失败 {s.failed}，不适用 {s.not_applicable}")
    for suite in report.suites():
        lines += ["", f"## {suite}", ""]
        lines.append("| check | anchor | computed | expected | provenance | margin | status |")
        lines.append("|---|---|---|---|---|---|---|")
        for record in report.records:
            if record.suite != suite:
                continue
            cells = [
                record.check_id,
                record.anchor,
                _compact(record.computed),
                _compact(record.expected),
                record.provenance.value,
                _margin(record),
                record.status.value,
            ]
            lines.append("| " + " | ".join(_cell(c) for c in cells) + " |")
    if report.payload is not None:
        lines += ["", "## payload", "", "```json", json.dumps(report.payload, ensure_ascii=False, sort_keys=True, indent=2), "```"]
    return "\n".join(lines) + "\n"


def to_text(report: PaperReport) -> str:
    """对齐的列文本"""
    head = ["suite", "check_id", "status", "margin", "provenance"]
    rows = [[r.suite, r.check_id, r.status.value, _margin(r), r.provenance.value] for r in report.records]
    widths = [max(len(str(row[i])) for row in [head] + rows) for i in range(len(head))]
    lines = ["  ".join(str(cell).ljust(w) for cell, w in zip(row, widths)).rstrip() for row in [head] + rows]
    s = report.summary
    lines.append(f"total={s.total} passed={s.passed} failed={s.failed} not_applicable={s.not_applicable}")
    if report.payload is not None:
        lines.append(json.dumps(report.payload, ensure_ascii=False, sort_keys=True, indent=2))
    return "\n".join(lines) + "\n"


_WRITERS = {
    OutputFormat.Json: to_json,
    OutputFormat.Csv: to_csv,
    OutputFormat.Markdown: to_markdown,
    OutputFormat.Text: to_text,
}


def emit(report: PaperReport, fmt: Union[OutputFormat, str]) -> bytes:
    if not isinstance(fmt, OutputFormat):
        try:
            fmt = OutputFormat(str(fmt).lower())
        except ValueError:
            raise ReportFormatError(f"不支持的输出格式: {fmt}, 可选 {[f.value for f in OutputFormat]}")
    return _WRITERS[fmt](report).encode("utf-8")
