# -*- coding: utf-8 -*-
"""
计数与 TF-IDF 变换

- count_transform: 统计文档中每个词表 n-gram 的出现次数
- fit_tfidf: 平滑 idf[t] = ln((1 + N) / (1 + df[t])) + 1
- tfidf_transform: tf * idf 后做 L2 归一化，零向量保持为零向量

作者: AI Assistant
"""

from collections import Counter
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from hope_detector.errors import DataError, DimensionError
from hope_detector.features.ngrams import ngrams, tokenize
from hope_detector.features.sparse import SparseVector, to_csr
from hope_detector.features.vocabulary import Vocabulary


@dataclass(frozen=True, eq=False)
class TfidfModel:
    """
    idf 向量及其对应的词表

    不变量: idf 长度等于词表大小，且每一项 >= 1
    """
    idf: np.ndarray
    vocabulary: Vocabulary
    norm: str = "l2"

    def __post_init__(self):
        idf = np.array(self.idf, dtype=np.float64).reshape(-1)
        if idf.size != len(self.vocabulary):
            raise DimensionError(f"idf 长度 {idf.size} 与词表大小 {len(self.vocabulary)} 不一致")
        if idf.size and not (np.all(np.isfinite(idf)) and idf.min() >= 1.0):
            raise DataError("idf 必须是 >= 1 的有限值")
        if self.norm != "l2":
            raise DataError(f"不支持的归一化方式: {self.norm}")
        idf.setflags(write=False)
        object.__setattr__(self, "idf", idf)

    def __eq__(self, other):
        if not isinstance(other, TfidfModel):
            return NotImplemented
        return (
            self.norm == other.norm
            and self.vocabulary == other.vocabulary
            and np.array_equal(self.idf, other.idf)
        )

    __hash__ = None


def count_transform(doc, vocabulary):
    """
    计数向量

    Args:
        doc: 词列表，或清洗后的文本（先分词）
        vocabulary: 已拟合的词表

    Returns:
        SparseVector: 第 t 列为词表第 t 个 n-gram 在文档中的出现次数，词表外的 n-gram 忽略
    """
    tokens = tokenize(doc) if isinstance(doc, str) else list(doc)
    counts = Counter()
    for gram in ngrams(tokens, vocabulary.config):
        column = vocabulary.index.get(gram)
        if column is not None:
            counts[column] += 1
    return SparseVector.from_mapping(counts, len(vocabulary))


def count_matrix(docs, vocabulary):
    """对一组文档做计数变换，按行堆叠成 CSR 矩阵"""
    return to_csr([count_transform(doc, vocabulary) for doc in docs], dim=len(vocabulary))


def fit_tfidf(counts, vocabulary):
    """
    在训练语料的计数矩阵上拟合 idf

    Args:
        counts: 计数矩阵（CSR 或 SparseVector 序列），每行一个训练文档
        vocabulary: 计数矩阵对应的词表

    Returns:
        TfidfModel: 平滑 idf

    Raises:
        DataError: 没有训练文档
        DimensionError: 列数与词表大小不一致
    """
    matrix = to_csr(counts, dim=len(vocabulary))
    n_docs = matrix.shape[0]
    if n_docs < 1:
        raise DataError("拟合 idf 至少需要一个训练文档")
    if matrix.shape[1] != len(vocabulary):
        raise DimensionError(f"计数矩阵列数 {matrix.shape[1]} 与词表大小 {len(vocabulary)} 不一致")
    doc_freq = np.asarray((matrix > 0).sum(axis=0)).reshape(-1)
    idf = np.log((1.0 + n_docs) / (1.0 + doc_freq)) + 1.0
    return TfidfModel(idf=idf, vocabulary=vocabulary)


def tfidf_transform(counts, model):
    """
    单个文档的 TF-IDF 向量

    Args:
        counts: 计数向量
        model: TfidfModel，必须与计数向量基于同一词表

    Returns:
        SparseVector: 单位 L2 范数的向量；空文档返回零向量

    Raises:
        DimensionError: 维度与词表大小不一致
    """
    if counts.dim != model.idf.size:
        raise DimensionError(f"计数向量维度 {counts.dim} 与 idf 长度 {model.idf.size} 不一致")
    values = counts.values * model.idf[counts.indices]
    norm = np.sqrt(np.dot(values, values))
    if norm == 0.0:
        return SparseVector.zeros(counts.dim)
    return SparseVector(counts.indices, values / norm, counts.dim)


def tfidf_matrix(counts, model):
    """
    按行对计数矩阵做 TF-IDF 变换（与 tfidf_transform 逐行结果一致）
    """
    matrix = to_csr(counts, dim=model.idf.size)
    if matrix.shape[1] != model.idf.size:
        raise DimensionError(f"计数矩阵列数 {matrix.shape[1]} 与 idf 长度 {model.idf.size} 不一致")
    if matrix.shape[0] == 0:
        return matrix
    weighted = sparse.csr_matrix(matrix.multiply(model.idf.reshape(1, -1)))
    norms = np.sqrt(np.asarray(weighted.multiply(weighted).sum(axis=1)).reshape(-1))
    norms[norms == 0.0] = 1.0
    return sparse.csr_matrix(sparse.diags(1.0 / norms) @ weighted)
