# -*- coding: utf-8 -*-
"""
评估指标单元测试

测试 metrics/ 中的指标计算和报告格式
"""

import numpy as np
import pytest

from hope_detector.corpus.models import LABELS, Label
from hope_detector.errors import DataError, DataFormatError, UnlabeledError, UsageError
from hope_detector.metrics import EvalReport, evaluate, format_report, parse_report

H, N = Label.Hope, Label.NotHope

# Hope: TP=3, FP=1, FN=2; NotHope: TP=4, FP=2, FN=1
GOLD = [H] * 5 + [N] * 5
PREDICTED = [H, H, H, N, N, H, N, N, N, N]


class TestEvaluate:
    """指标计算测试类"""

    def test_hand_computed_confusion(self):
        """测试手算的混淆矩阵结果"""
        report = evaluate(GOLD, PREDICTED)

        assert report.class_metrics(H)[:3] == pytest.approx((0.75, 0.6, 2 / 3))
        assert report.f1[N.value] == pytest.approx(8 / 11)
        assert report.macro_f1 == pytest.approx(0.6970, abs=5e-5)
        assert report.accuracy == pytest.approx(0.7)
        assert report.confusion[H, N] == 2
        assert report.support == (5, 5)
        assert not report.zero_division

    def test_balanced_support_macro_equals_weighted(self):
        """测试两类支持数相同时宏平均等于加权平均"""
        report = evaluate(GOLD, PREDICTED)
        assert report.macro_f1 == pytest.approx(report.weighted_f1, abs=1e-12)
        assert report.macro_precision == pytest.approx(report.weighted_precision, abs=1e-12)

    def test_all_correct(self):
        """测试全部预测正确"""
        report = evaluate(GOLD, GOLD)

        for value in (report.macro_precision, report.macro_recall, report.macro_f1,
                      report.weighted_f1, report.accuracy):
            assert value == 1.0

    def test_zero_division(self):
        """测试只有 Hope 的语料上从不预测 NotHope"""
        report = evaluate([H, H, H], [H, H, H])

        assert report.class_metrics(N)[:3] == (0.0, 0.0, 0.0)
        assert report.zero_division
        assert report.macro_f1 == 0.5
        assert report.weighted_f1 == 1.0

    def test_length_mismatch(self):
        """测试长度不一致"""
        with pytest.raises(DataError):
            evaluate([H, N], [H])

    def test_empty(self):
        """测试空输入"""
        with pytest.raises(DataError):
            evaluate([], [])

    def test_unlabeled_gold(self):
        """测试真实标签缺失"""
        with pytest.raises(UnlabeledError):
            evaluate([H, None], [H, N])


class TestReport:
    """报告格式测试类"""

    def test_table_row_layout(self):
        """测试表格行布局"""
        report = EvalReport(0.82, 0.80, 0.79, 0.82, 0.80, 0.79, 0.80)

        lines = format_report(report).splitlines()

        assert lines[0] == (
            "Weighted Precision\tWeighted Recall\tWeighted F1\t"
            "Macro Precision\tMacro Recall\tMacro F1\tAcc"
        )
        assert lines[1] == "0.82\t0.80\t0.79\t0.82\t0.80\t0.79\t0.80"

    def test_perfect_row(self):
        """测试全部为 1 的表格行"""
        text = format_report(evaluate(GOLD, GOLD))
        assert text.splitlines()[1] == "\t".join(["1.00"] * 7)

    def test_model_column(self):
        """测试带模型名称的表格"""
        text = format_report(evaluate(GOLD, PREDICTED), model="nb+count")
        header, row = text.splitlines()
        assert header.startswith("Model\t")
        assert row.startswith("nb+count\t0.71\t0.70\t0.70\t")

    def test_machine_report_parses_back(self):
        """测试 machine 样式可以精确还原"""
        report = evaluate(GOLD, PREDICTED)

        text = format_report(report, "machine")

        assert parse_report(text) == report

    def test_machine_report_keeps_zero_division_flag(self):
        """测试 machine 样式保留除零标志"""
        text = format_report(evaluate([H, H], [H, H]), "machine")
        assert text.endswith("zero_division\ttrue\n")
        assert parse_report(text).zero_division

    def test_parse_rejects_missing_field(self):
        """测试缺少字段"""
        text = format_report(evaluate(GOLD, PREDICTED), "machine")
        broken = "\n".join(line for line in text.splitlines() if not line.startswith("accuracy"))
        with pytest.raises(DataFormatError):
            parse_report(broken)

    def test_unknown_style(self):
        """测试未知样式"""
        with pytest.raises(UsageError):
            format_report(evaluate(GOLD, GOLD), "html")


class TestProperties:
    """指标性质测试类"""

    def test_permutation_invariance(self):
        """测试对真实标签和预测标签做同一置换，报告不变"""
        rng = np.random.default_rng(3)
        expected = evaluate(GOLD, PREDICTED)
        for _ in range(20):
            order = rng.permutation(len(GOLD))
            report = evaluate([GOLD[i] for i in order], [PREDICTED[i] for i in order])
            assert report == expected

    def test_every_metric_in_unit_interval(self):
        """测试随机标签下所有指标都在 [0, 1] 内"""
        rng = np.random.default_rng(9)
        for _ in range(200):
            n = int(rng.integers(1, 30))
            gold = [LABELS[i] for i in rng.integers(0, 2, size=n)]
            predicted = [LABELS[i] for i in rng.integers(0, 2, size=n)]

            report = evaluate(gold, predicted)

            values = [
                report.weighted_precision, report.weighted_recall, report.weighted_f1,
                report.macro_precision, report.macro_recall, report.macro_f1, report.accuracy,
                *report.precision, *report.recall, *report.f1,
            ]
            assert all(0.0 <= value <= 1.0 for value in values)
