# -*- coding: utf-8 -*-
"""
排行榜输出与实验产物

排行榜文件不含耗时，相同配置和数据重复运行时逐字节相同；
训练耗时单独写入 timings.tsv

作者: AI Assistant
"""

import logging
from pathlib import Path

from hope_detector.errors import UsageError
from hope_detector.harness.pipeline import format_predictions
from hope_detector.metrics.report import REPORT_STYLES, format_report, format_table_header, format_table_row
from hope_detector.persist.bundle import save_bundle

logger = logging.getLogger(__name__)

LEADERBOARD_COLUMNS = ("Model", "Vectorizer", "Macro Precision", "Macro Recall", "Macro F1")
TIMINGS_HEADER = "model\tvectorizer\tseconds"

# 产物文件名
LEADERBOARD_TABLE_FILE = "leaderboard.txt"
LEADERBOARD_MACHINE_FILE = "leaderboard.tsv"
TIMINGS_FILE = "timings.tsv"
BEST_BUNDLE_FILE = "best.bundle"
TEST_REPORT_FILE = "test_report.txt"
PREDICTIONS_FILE = "predictions.tsv"


def _single_line(text):
    return " ".join(str(text).split())


def row_name(row):
    """表格里的模型名称，例如 svm-linear+tfidf"""
    return f"{row.model}+{row.vectorizer}"


def _format_table(rows):
    lines = ["\t".join(LEADERBOARD_COLUMNS)]
    for row in rows:
        if row.ok:
            report = row.dev_report
            scores = [format(v, ".2f") for v in (report.macro_precision, report.macro_recall, report.macro_f1)]
        else:
            scores = ["failed"] * 3
        lines.append("\t".join([row.model, row.vectorizer, *scores]))
    return "\n".join(lines) + "\n"


def _format_machine(rows, seed):
    lines = [f"seed\t{'none' if seed is None else seed}", f"rows\t{len(rows)}"]
    for rank, row in enumerate(rows, start=1):
        prefix = f"row.{rank}"
        lines.append(f"{prefix}.model\t{row.model}")
        lines.append(f"{prefix}.vectorizer\t{row.vectorizer}")
        if not row.ok:
            lines.append(f"{prefix}.error\t{_single_line(row.error)}")
            continue
        for split, report in (("dev", row.dev_report), ("test", row.test_report)):
            if report is None:
                continue
            for line in format_report(report, style="machine").splitlines():
                lines.append(f"{prefix}.{split}.{line}")
    return "\n".join(lines) + "\n"


def format_leaderboard(rows, style="table", seed=None):
    """
    格式化排行榜

    Args:
        rows: 排好序的 LeaderboardRow 序列
        style: table（模型、向量化方式、开发集宏平均 P/R/F1，两位小数）
               或 machine（"key<TAB>value" 记录，包含开发集和测试集的完整报告）
        seed: machine 样式记录的随机种子

    Returns:
        str: 以换行结尾的文本
    """
    rows = list(rows)
    if style == "table":
        return _format_table(rows)
    if style == "machine":
        return _format_machine(rows, seed)
    raise UsageError(f"未知的排行榜样式: {style!r}（可选: {', '.join(REPORT_STYLES)}）")


def format_timings(rows):
    lines = [TIMINGS_HEADER]
    lines.extend(f"{row.model}\t{row.vectorizer}\t{row.train_seconds:.6f}" for row in rows)
    return "\n".join(lines) + "\n"


def format_test_report(rows):
    """测试集报告: 表头一次，每个在测试集上评估过的模型一行"""
    evaluated = [row for row in rows if row.test_report is not None]
    lines = [format_table_header(with_model=True)]
    lines.extend(format_table_row(row.test_report, row_name(row)) for row in evaluated)
    return "\n".join(lines) + "\n"


def _write(path, text):
    path.write_bytes(text.encode("utf-8"))


def write_artifacts(result, output_dir):
    """
    写出实验产物

    - leaderboard.txt / leaderboard.tsv: 排行榜的表格和 machine 样式
    - timings.tsv: 每个组合的训练耗时
    - best.bundle: 开发集最佳模型
    - test_report.txt: 测试集带标签时的评估表
    - predictions.tsv: 测试集无标签时最佳模型的预测

    Args:
        result: ExperimentResult
        output_dir: 输出目录，不存在时创建

    Returns:
        Dict[str, Path]: 文件名到路径的映射

    Raises:
        TrainingError: 所有组合都训练失败，此时不写出任何文件
    """
    best = result.best
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    rows = list(result)
    written = {}

    contents = {
        LEADERBOARD_TABLE_FILE: format_leaderboard(rows, "table"),
        LEADERBOARD_MACHINE_FILE: format_leaderboard(rows, "machine", seed=result.config.seed),
        TIMINGS_FILE: format_timings(rows),
    }
    if result.test_evaluated:
        contents[TEST_REPORT_FILE] = format_test_report(rows)
    elif result.test_predictions is not None:
        contents[PREDICTIONS_FILE] = format_predictions(result.test_ids, result.test_predictions)

    for name, text in contents.items():
        path = output_dir / name
        _write(path, text)
        written[name] = path

    written[BEST_BUNDLE_FILE] = output_dir / BEST_BUNDLE_FILE
    save_bundle(best.bundle, written[BEST_BUNDLE_FILE])
    logger.info("实验产物已写入 %s: %s", output_dir, ", ".join(sorted(written)))
    return written
