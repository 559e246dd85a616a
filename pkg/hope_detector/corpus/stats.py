# -*- coding: utf-8 -*-
"""
数据集统计模块

- stats: 统计每个类别的文档数
- check_split_integrity: 检查训练 / 开发 / 测试集之间的重复文本（数据泄漏）

作者: AI Assistant
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from hope_detector.corpus.models import ClassCounts, Label
from hope_detector.errors import UnlabeledError


@dataclass(frozen=True)
class Collision:
    """两个划分之间共享的一条归一化文本"""
    text: str
    first: str
    second: str


def stats(dataset):
    """
    统计类别分布

    Args:
        dataset: 所有文档都带标签的数据集

    Returns:
        ClassCounts: 每个类别的文档数

    Raises:
        UnlabeledError: 存在无标签文档
    """
    counts = Counter()
    for doc in dataset:
        if doc.label is None:
            raise UnlabeledError(f"文档 {doc.id} 没有标签，无法统计类别分布")
        counts[doc.label] += 1
    return ClassCounts(hope=counts[Label.Hope], not_hope=counts[Label.NotHope])


def normalize_text(text):
    """重复检测用的归一化：小写并合并空白，不做其他清洗"""
    return " ".join(text.lower().split())


def check_split_integrity(train, dev, test):
    """
    检查划分之间的重复文本

    对每一对划分 (train, dev)、(train, test)、(dev, test)，
    每条同时出现在两边的归一化文本记一条冲突；同一划分内部的重复不计
    归一化后为空的文本不参与比较

    Args:
        train: 训练集
        dev: 开发集
        test: 测试集

    Returns:
        List[Collision]: 冲突列表，按划分对和文本排序；为空表示划分互不相交
    """
    names = ("train", "dev", "test")
    normalized = {
        name: {text for text in (normalize_text(doc.text) for doc in dataset) if text}
        for name, dataset in zip(names, (train, dev, test))
    }

    report = []
    for first, second in combinations(names, 2):
        shared = normalized[first] & normalized[second]
        report.extend(Collision(text=text, first=first, second=second) for text in sorted(shared))
    return report
