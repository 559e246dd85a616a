# -*- coding: utf-8 -*-
"""
评估模块

子模块:
    evaluation: 混淆矩阵与评估报告 (ConfusionMatrix, EvalReport, evaluate)
    report: 表格 / 机器可读格式化与解析

作者: AI Assistant
"""

from hope_detector.metrics.evaluation import ConfusionMatrix, EvalReport, evaluate
from hope_detector.metrics.report import (
    REPORT_STYLES,
    format_real,
    format_report,
    format_table_header,
    format_table_row,
    parse_report,
)

__all__ = [
    "ConfusionMatrix",
    "EvalReport",
    "REPORT_STYLES",
    "evaluate",
    "format_real",
    "format_report",
    "format_table_header",
    "format_table_row",
    "parse_report",
]
