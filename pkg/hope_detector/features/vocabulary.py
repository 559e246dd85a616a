# -*- coding: utf-8 -*-
"""
词表模块

在训练语料上统计 n-gram 的文档频率，按 min_df / max_features 过滤，
并按字典序（UTF-8 字节序）分配列下标

作者: AI Assistant
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Tuple

from hope_detector.corpus.models import Dataset
from hope_detector.errors import DataFormatError, VocabularyError
from hope_detector.features.ngrams import NGramConfig, ngrams, tokenize

logger = logging.getLogger(__name__)

VOCABULARY_HEADER = "#vocabulary\t1"


@dataclass(frozen=True)
class Vocabulary:
    """
    词表

    属性:
        terms: 按字典序排列的 n-gram，下标即列号
        config: 拟合时使用的 NGramConfig
    """
    terms: Tuple[str, ...]
    config: NGramConfig = NGramConfig()
    index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        terms = tuple(self.terms)
        if any(a >= b for a, b in zip(terms, terms[1:])):
            raise VocabularyError("词表必须严格按字典序排列")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "index", {term: i for i, term in enumerate(terms)})

    def __len__(self):
        return len(self.terms)

    def __contains__(self, term):
        return term in self.index

    def get(self, term):
        return self.index.get(term)


def _texts(corpus):
    if isinstance(corpus, Dataset):
        return corpus.texts
    return list(corpus)


def fit_vocabulary(corpus, config=None):
    """
    拟合词表

    逐文档统计 n-gram 的文档频率，最后统一做 min_df 剪枝；
    设置 max_features 时保留语料总词频最高的项，词频相同按字典序

    Args:
        corpus: 清洗后的 Dataset 或文本序列
        config: NGramConfig

    Returns:
        Vocabulary: 字典序编号的词表

    Raises:
        VocabularyError: 语料为空或有效词表为空
    """
    config = config or NGramConfig()
    texts = _texts(corpus)
    if not texts:
        raise VocabularyError("语料为空，无法拟合词表")

    doc_freq = Counter()
    term_freq = Counter()
    for text in texts:
        grams = ngrams(tokenize(text), config)
        term_freq.update(grams)
        doc_freq.update(set(grams))

    kept = [term for term, df in doc_freq.items() if df >= config.min_df]
    if config.max_features is not None and len(kept) > config.max_features:
        kept.sort(key=lambda term: (-term_freq[term], term))
        kept = kept[: config.max_features]

    if not kept:
        raise VocabularyError("有效词表为空（所有文档清洗后都没有可用的 n-gram）")

    vocabulary = Vocabulary(terms=tuple(sorted(kept)), config=config)
    logger.info("词表拟合完成: %d 个 n-gram (候选 %d, 文档 %d)", len(vocabulary), len(doc_freq), len(texts))
    return vocabulary


def export_vocabulary(vocabulary):
    """
    导出词表为文本: 版本头 + 每行 "term<TAB>index"，字典序

    Returns:
        str: 以换行结尾的文本
    """
    lines = [VOCABULARY_HEADER]
    lines.extend(f"{term}\t{i}" for i, term in enumerate(vocabulary.terms))
    return "\n".join(lines) + "\n"


def parse_vocabulary(text, config=None):
    """
    解析 export_vocabulary 的输出

    Raises:
        DataFormatError: 版本头缺失、行格式错误或下标不连续
    """
    lines = text.splitlines()
    if not lines or lines[0] != VOCABULARY_HEADER:
        raise DataFormatError("词表文件缺少版本头")
    terms = []
    for row, line in enumerate(lines[1:], start=2):
        term, sep, index = line.rpartition("\t")
        if not sep or not index.isdigit() or int(index) != len(terms):
            raise DataFormatError("词表行格式错误", row=row)
        terms.append(term)
    return Vocabulary(terms=tuple(terms), config=config or NGramConfig())
