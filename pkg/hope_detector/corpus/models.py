# -*- coding: utf-8 -*-
"""
语料领域类型

定义标签、文档、数据集和类别计数等不可变值类型
数据集加载后不再修改，可以在线程间只读共享

作者: AI Assistant
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from hope_detector.errors import LabelError


class Label(Enum):
    """
    二分类标签

    规范顺序 Hope=0, NotHope=1，所有按类别索引的数组都遵循该顺序
    """
    Hope = 0
    NotHope = 1

    @property
    def display(self):
        """数据文件中使用的文字形式"""
        return "Hope" if self is Label.Hope else "Not Hope"

    @property
    def sign(self):
        """二分类优化器使用的 ±1 编码（Hope → +1）"""
        return 1 if self is Label.Hope else -1

    @classmethod
    def parse(cls, value, row=None):
        """
        解析标签字符串

        接受 "Hope" / "Not Hope"（大小写不敏感），以及按规范顺序的 "0" / "1"

        Args:
            value: 标签字符串
            row: 出错时报告的行号

        Returns:
            Label: 解析后的标签

        Raises:
            LabelError: 无法识别的标签
        """
        key = " ".join(str(value).split()).lower()
        if key in ("hope", "0"):
            return cls.Hope
        if key in ("not hope", "1"):
            return cls.NotHope
        raise LabelError(value, row=row)


# 规范顺序的标签元组
LABELS = (Label.Hope, Label.NotHope)


class Split(Enum):
    """数据集划分"""
    Train = "train"
    Dev = "dev"
    Test = "test"


@dataclass(frozen=True)
class Document:
    """
    单条文本记录

    属性:
        id: 数据集内唯一的标识
        text: 原始 UTF-8 文本，只有源行为空时才允许为空串
        label: 标签，无标签预测输入为 None
    """
    id: str
    text: str
    label: Optional[Label] = None


@dataclass(frozen=True)
class DatasetSchema:
    """
    数据文件的列映射

    属性:
        text_column: 文本列名（必填）
        label_column: 标签列名，None 表示无标签数据
        id_column: id 列名，None 时自动生成 "<split>-<行号>"
    """
    text_column: str = "text"
    label_column: Optional[str] = "label"
    id_column: Optional[str] = None


@dataclass(frozen=True)
class Dataset:
    """
    按源文件顺序排列的文档集合

    属性:
        split: 所属划分
        documents: 文档元组，顺序即源文件顺序
    """
    split: Split
    documents: Tuple[Document, ...] = ()

    def __len__(self):
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)

    @property
    def texts(self):
        return [doc.text for doc in self.documents]

    @property
    def labels(self):
        return [doc.label for doc in self.documents]

    @property
    def ids(self):
        return [doc.id for doc in self.documents]

    def is_labeled(self):
        """所有文档都有标签时返回 True（空数据集视为有标签）"""
        return all(doc.label is not None for doc in self.documents)

    def empty_document_ids(self):
        """源行为空的文档 id 列表"""
        return [doc.id for doc in self.documents if not doc.text]

    def with_texts(self, texts):
        """返回替换了文本、其余字段不变的新数据集"""
        docs = tuple(
            Document(id=doc.id, text=text, label=doc.label)
            for doc, text in zip(self.documents, texts, strict=True)
        )
        return Dataset(split=self.split, documents=docs)


@dataclass(frozen=True)
class ClassCounts:
    """每个类别的文档数"""
    hope: int = 0
    not_hope: int = 0

    @property
    def total(self):
        return self.hope + self.not_hope

    def __getitem__(self, label):
        return self.hope if label is Label.Hope else self.not_hope
