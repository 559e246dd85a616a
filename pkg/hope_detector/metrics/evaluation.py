# -*- coding: utf-8 -*-
"""
评估指标

按类别计算精确率 / 召回率 / F1，再求宏平均（类别等权）和加权平均（按支持数），
以及准确率和混淆矩阵；分母为 0 时指标记为 0 并在报告上设置 zero_division 标志

所有数值保留完整精度，只在格式化时舍入

作者: AI Assistant
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from hope_detector.corpus.models import LABELS, Label
from hope_detector.errors import DataError, UnlabeledError


@dataclass(frozen=True)
class ConfusionMatrix:
    """
    2x2 混淆矩阵，counts[真实标签][预测标签]，按规范标签顺序索引
    """
    counts: Tuple[Tuple[int, int], Tuple[int, int]] = ((0, 0), (0, 0))

    def __post_init__(self):
        counts = tuple(tuple(int(v) for v in row) for row in self.counts)
        if len(counts) != 2 or any(len(row) != 2 for row in counts):
            raise DataError("混淆矩阵必须是 2x2")
        if any(v < 0 for row in counts for v in row):
            raise DataError("混淆矩阵的计数不能为负")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_labels(cls, gold, predicted):
        counts = [[0, 0], [0, 0]]
        for g, p in zip(gold, predicted):
            counts[g.value][p.value] += 1
        return cls(tuple(tuple(row) for row in counts))

    def __getitem__(self, key):
        true_label, predicted_label = key
        return self.counts[true_label.value][predicted_label.value]

    @property
    def total(self):
        return sum(sum(row) for row in self.counts)

    @property
    def trace(self):
        return self.counts[0][0] + self.counts[1][1]

    def true_positives(self, label):
        return self[label, label]

    def false_positives(self, label):
        return sum(self[other, label] for other in LABELS if other is not label)

    def false_negatives(self, label):
        return sum(self[label, other] for other in LABELS if other is not label)

    def support(self, label):
        return sum(self[label, other] for other in LABELS)


@dataclass(frozen=True)
class EvalReport:
    """
    评估报告

    聚合指标必填；按类别的指标、支持数和混淆矩阵由 evaluate 填写，
    手工构造（例如只有一行汇总数字）时可以省略
    """
    weighted_precision: float
    weighted_recall: float
    weighted_f1: float
    macro_precision: float
    macro_recall: float
    macro_f1: float
    accuracy: float
    precision: Tuple[float, float] = (0.0, 0.0)
    recall: Tuple[float, float] = (0.0, 0.0)
    f1: Tuple[float, float] = (0.0, 0.0)
    support: Tuple[int, int] = (0, 0)
    confusion: Optional[ConfusionMatrix] = None
    zero_division: bool = False

    def class_metrics(self, label):
        """单个类别的 (precision, recall, f1, support)"""
        i = Label(label).value
        return self.precision[i], self.recall[i], self.f1[i], self.support[i]


def _ratio(numerator, denominator):
    """返回 (比值, 是否除零)"""
    if denominator == 0:
        return 0.0, True
    return numerator / denominator, False


def evaluate(gold, predicted):
    """
    计算评估报告

    Args:
        gold: 真实标签序列
        predicted: 预测标签序列，长度与 gold 相同

    Returns:
        EvalReport: 完整报告

    Raises:
        DataError: 长度不一致或为空
        UnlabeledError: gold 中有 None
    """
    gold = list(gold)
    predicted = list(predicted)
    if len(gold) != len(predicted):
        raise DataError(f"真实标签数 {len(gold)} 与预测标签数 {len(predicted)} 不一致")
    if not gold:
        raise DataError("没有可评估的文档")
    if any(label is None for label in gold):
        raise UnlabeledError("评估需要所有文档都有真实标签")

    confusion = ConfusionMatrix.from_labels(gold, predicted)
    total = confusion.total
    zero_division = False
    precision, recall, f1, support = [], [], [], []
    for label in LABELS:
        tp = confusion.true_positives(label)
        p, flag_p = _ratio(tp, tp + confusion.false_positives(label))
        r, flag_r = _ratio(tp, tp + confusion.false_negatives(label))
        f, flag_f = _ratio(2 * p * r, p + r)
        zero_division = zero_division or flag_p or flag_r or flag_f
        precision.append(p)
        recall.append(r)
        f1.append(f)
        support.append(confusion.support(label))

    def macro(values):
        return sum(values) / len(values)

    def weighted(values):
        return sum(v * s for v, s in zip(values, support)) / total

    return EvalReport(
        weighted_precision=weighted(precision),
        weighted_recall=weighted(recall),
        weighted_f1=weighted(f1),
        macro_precision=macro(precision),
        macro_recall=macro(recall),
        macro_f1=macro(f1),
        accuracy=confusion.trace / total,
        precision=tuple(precision),
        recall=tuple(recall),
        f1=tuple(f1),
        support=tuple(support),
        confusion=confusion,
        zero_division=zero_division,
    )
