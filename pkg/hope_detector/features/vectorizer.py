# -*- coding: utf-8 -*-
"""
向量化器

把词表拟合、idf 拟合和变换组合成一个对象:
只在训练语料上 fit，之后对任意划分 transform，输出 CSR 矩阵

作者: AI Assistant
"""

import logging

from hope_detector.corpus.models import Dataset
from hope_detector.errors import ConfigError, DataError
from hope_detector.features.ngrams import NGramConfig
from hope_detector.features.tfidf import count_matrix, fit_tfidf, tfidf_matrix
from hope_detector.features.vocabulary import fit_vocabulary

logger = logging.getLogger(__name__)

# 支持的向量化方式
VECTORIZER_KINDS = ("count", "tfidf")


class Vectorizer:
    """
    计数 / TF-IDF 向量化器

    使用示例:
        vectorizer = Vectorizer("tfidf")
        X_train = vectorizer.fit_transform(train)
        X_dev = vectorizer.transform(dev)
    """

    def __init__(self, kind="tfidf", ngram_config=None):
        if kind not in VECTORIZER_KINDS:
            raise ConfigError(f"未知的向量化方式: {kind!r}（可选: {', '.join(VECTORIZER_KINDS)}）")
        self.kind = kind
        self.ngram_config = ngram_config or NGramConfig()
        self.vocabulary = None
        self.tfidf = None

    @classmethod
    def from_parts(cls, vocabulary, tfidf=None):
        """由已拟合的词表和可选的 TfidfModel 还原向量化器（加载模型包时使用）"""
        vectorizer = cls("tfidf" if tfidf is not None else "count", vocabulary.config)
        vectorizer.vocabulary = vocabulary
        vectorizer.tfidf = tfidf
        return vectorizer

    @property
    def is_fitted(self):
        return self.vocabulary is not None

    @property
    def dim(self):
        return len(self.vocabulary) if self.vocabulary is not None else 0

    def fit(self, corpus):
        """
        在训练语料上拟合词表（tfidf 方式还拟合 idf）

        Args:
            corpus: 清洗后的 Dataset 或文本序列

        Returns:
            Vectorizer: self
        """
        texts = corpus.texts if isinstance(corpus, Dataset) else list(corpus)
        self.vocabulary = fit_vocabulary(texts, self.ngram_config)
        self.tfidf = None
        if self.kind == "tfidf":
            self.tfidf = fit_tfidf(count_matrix(texts, self.vocabulary), self.vocabulary)
        return self

    def transform(self, corpus):
        """
        变换任意语料

        Returns:
            scipy.sparse.csr_matrix: 形状 (文档数, 词表大小)
        """
        if not self.is_fitted:
            raise DataError("向量化器尚未拟合")
        texts = corpus.texts if isinstance(corpus, Dataset) else list(corpus)
        counts = count_matrix(texts, self.vocabulary)
        if self.tfidf is not None:
            return tfidf_matrix(counts, self.tfidf)
        return counts

    def fit_transform(self, corpus):
        texts = corpus.texts if isinstance(corpus, Dataset) else list(corpus)
        return self.fit(texts).transform(texts)
