# -*- coding: utf-8 -*-
"""
特征模块

词 n-gram 提取、词表拟合以及计数 / TF-IDF 稀疏向量化

子模块:
    ngrams: 分词与 n-gram 生成 (NGramConfig)
    vocabulary: 词表拟合与导出 (Vocabulary)
    sparse: 稀疏向量与 CSR 转换 (SparseVector)
    tfidf: 计数与 TF-IDF 变换 (TfidfModel)
    vectorizer: 训练集拟合、任意划分变换 (Vectorizer)

作者: AI Assistant
"""

from hope_detector.features.ngrams import NGramConfig, ngrams, tokenize
from hope_detector.features.sparse import SparseVector, as_vector, row_vector, to_csr
from hope_detector.features.tfidf import (
    TfidfModel,
    count_matrix,
    count_transform,
    fit_tfidf,
    tfidf_matrix,
    tfidf_transform,
)
from hope_detector.features.vectorizer import VECTORIZER_KINDS, Vectorizer
from hope_detector.features.vocabulary import (
    Vocabulary,
    export_vocabulary,
    fit_vocabulary,
    parse_vocabulary,
)

__all__ = [
    "NGramConfig",
    "SparseVector",
    "TfidfModel",
    "VECTORIZER_KINDS",
    "Vectorizer",
    "Vocabulary",
    "as_vector",
    "count_matrix",
    "count_transform",
    "export_vocabulary",
    "fit_tfidf",
    "fit_vocabulary",
    "ngrams",
    "parse_vocabulary",
    "row_vector",
    "tfidf_matrix",
    "tfidf_transform",
    "to_csr",
    "tokenize",
]
