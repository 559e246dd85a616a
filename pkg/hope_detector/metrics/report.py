# -*- coding: utf-8 -*-
"""
评估报告格式化

- table:   加权 P/R/F1、宏平均 P/R/F1、准确率，保留两位小数，制表符分隔
- machine: 每行 "key<TAB>value"，实数保留 17 位有效数字，可由 parse_report 精确还原

作者: AI Assistant
"""

from hope_detector.corpus.models import LABELS
from hope_detector.errors import DataFormatError, UsageError
from hope_detector.metrics.evaluation import ConfusionMatrix, EvalReport

REPORT_STYLES = ("table", "machine")

# 表格列（顺序固定）
TABLE_COLUMNS = (
    ("Weighted Precision", "weighted_precision"),
    ("Weighted Recall", "weighted_recall"),
    ("Weighted F1", "weighted_f1"),
    ("Macro Precision", "macro_precision"),
    ("Macro Recall", "macro_recall"),
    ("Macro F1", "macro_f1"),
    ("Acc", "accuracy"),
)

# machine 格式中的聚合指标
_AGGREGATE_KEYS = tuple(attr for _, attr in TABLE_COLUMNS)
_CLASS_KEYS = ("precision", "recall", "f1", "support")


def format_real(value):
    """17 位有效数字，保证 64 位浮点数精确往返"""
    return format(float(value), ".17g")


def format_table_header(with_model=False):
    header = [title for title, _ in TABLE_COLUMNS]
    if with_model:
        header.insert(0, "Model")
    return "\t".join(header)


def format_table_row(report, model=None):
    cells = [format(getattr(report, attr), ".2f") for _, attr in TABLE_COLUMNS]
    if model is not None:
        cells.insert(0, model)
    return "\t".join(cells)


def _format_machine(report):
    lines = [f"{key}\t{format_real(getattr(report, key))}" for key in _AGGREGATE_KEYS]
    for key in _CLASS_KEYS:
        for label in LABELS:
            value = getattr(report, key)[label.value]
            text = str(int(value)) if key == "support" else format_real(value)
            lines.append(f"{key}.{label.name}\t{text}")
    if report.confusion is not None:
        for true_label in LABELS:
            for predicted_label in LABELS:
                count = report.confusion[true_label, predicted_label]
                lines.append(f"confusion.{true_label.name}.{predicted_label.name}\t{count}")
    lines.append(f"zero_division\t{'true' if report.zero_division else 'false'}")
    return "\n".join(lines) + "\n"


def format_report(report, style="table", model=None):
    """
    格式化评估报告

    Args:
        report: EvalReport
        style: table 或 machine
        model: table 样式下可选的模型名称列

    Returns:
        str: 以换行结尾的文本
    """
    if style == "table":
        header = format_table_header(with_model=model is not None)
        return f"{header}\n{format_table_row(report, model)}\n"
    if style == "machine":
        return _format_machine(report)
    raise UsageError(f"未知的报告样式: {style!r}（可选: {', '.join(REPORT_STYLES)}）")


def parse_report(text):
    """
    解析 machine 样式的报告

    Returns:
        EvalReport: 与格式化前相等的报告

    Raises:
        DataFormatError: 行格式错误、重复键或缺少必需的键
    """
    values = {}
    for row, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        key, sep, value = line.partition("\t")
        if not sep or key in values:
            raise DataFormatError(f"报告行格式错误: {line!r}", row=row)
        values[key] = value

    try:
        fields = {key: float(values.pop(key)) for key in _AGGREGATE_KEYS}
        for key in _CLASS_KEYS:
            convert = int if key == "support" else float
            fields[key] = tuple(convert(values.pop(f"{key}.{label.name}")) for label in LABELS)
        flag = values.pop("zero_division")
        if flag not in ("true", "false"):
            raise DataFormatError(f"zero_division 取值错误: {flag!r}")
        fields["zero_division"] = flag == "true"

        confusion_keys = [
            f"confusion.{t.name}.{p.name}" for t in LABELS for p in LABELS
        ]
        if any(key in values for key in confusion_keys):
            counts = [int(values.pop(key)) for key in confusion_keys]
            fields["confusion"] = ConfusionMatrix(((counts[0], counts[1]), (counts[2], counts[3])))
    except KeyError as e:
        raise DataFormatError(f"报告缺少字段: {e.args[0]}") from e
    except ValueError as e:
        raise DataFormatError(f"报告数值无法解析: {e}") from e

    if values:
        raise DataFormatError(f"报告包含未知字段: {', '.join(sorted(values))}")
    return EvalReport(**fields)
