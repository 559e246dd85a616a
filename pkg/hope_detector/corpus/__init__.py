# -*- coding: utf-8 -*-
"""
语料模块

提供带标签文本数据集的加载、校验和统计功能

子模块:
    models: 领域类型 (Label, Document, Dataset, ClassCounts, DatasetSchema)
    loader: 数据集读写 (csv / tsv / jsonl)
    stats: 类别统计与划分重复检查

作者: AI Assistant
"""

from hope_detector.corpus.models import (
    ClassCounts,
    Dataset,
    DatasetSchema,
    Document,
    Label,
    Split,
)
from hope_detector.corpus.loader import load_dataset, write_dataset
from hope_detector.corpus.stats import Collision, check_split_integrity, stats

__all__ = [
    "ClassCounts",
    "Collision",
    "Dataset",
    "DatasetSchema",
    "Document",
    "Label",
    "Split",
    "check_split_integrity",
    "load_dataset",
    "stats",
    "write_dataset",
]
